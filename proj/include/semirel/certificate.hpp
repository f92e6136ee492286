#ifndef SEMIREL_CERTIFICATE_HPP
#define SEMIREL_CERTIFICATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semirel/completion.hpp"
#include "semirel/types.hpp"

namespace semirel {

enum class LabelKind : std::uint8_t { Plain, Lambda, PreInv, PostInv };

struct CertEdge {
    NodeId from = 0;
    LabelKind kind = LabelKind::Lambda;
    std::string symbol; // empty for lambda edges
    NodeId to = 0;
    std::optional<std::int64_t> height; // absent for lambda edges

    friend bool operator==(const CertEdge&, const CertEdge&) = default;
};

struct CertRule {
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;

    friend bool operator==(const CertRule&, const CertRule&) = default;
};

struct Certificate {
    std::vector<std::string> alphabet;
    std::vector<CertRule> rules;
    std::vector<NodeId> states;
    std::vector<CertEdge> edges;
    std::int64_t bound = 0;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertFailure {
    enum class Kind {
        Malformed,
        FlowerMissing,
        EpsilonNotReflexive,
        EpsilonNotTransitive,
        Incompatible,
        BoundMismatch,
    };

    Kind kind;
    std::size_t rule = 0; // for Incompatible
    NodeId p = 0;
    NodeId q = 0;
    std::string detail;
};

struct Verdict {
    std::vector<CertFailure> failures;
    bool ok() const { return failures.empty(); }
};

Certificate make_certificate(const Completion& completion);

// Recomputes the certificate conditions from scratch over plain fuzzy
// heights, with no tracking and none of the incremental machinery: a state
// with height-0 loops for every alphabet letter exists; the epsilon relation
// is reflexive and transitive; and for every rule (l, r) and every state
// pair, A_eps(l)(p,q) <_0 A_eps(r)(p,q), where A_eps interleaves the epsilon
// relation between the letter matrices and products are naive left-to-right
// matrix multiplications.
Verdict verify(const Certificate& cert);

std::string export_dot(const Certificate& cert);
std::string export_json(const Certificate& cert);
Certificate import_json(const std::string& text);

std::string describe(const CertFailure& f);

} // namespace semirel

#endif
