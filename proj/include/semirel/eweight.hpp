#ifndef SEMIREL_EWEIGHT_HPP
#define SEMIREL_EWEIGHT_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "semirel/semiring.hpp"
#include "semirel/types.hpp"

namespace semirel {

// Position payload carried by a finite weight: the edge attaining the
// minimal height on the multiplied path, the number of plain letters
// strictly before it, and the total number of plain letters in the word.
struct TrackInfo {
    NodeId from = 0;
    NodeId to = 0;
    std::uint32_t offset = 0;
    std::uint32_t total = 0;

    friend bool operator==(const TrackInfo&, const TrackInfo&) = default;
};

enum class InvSide : std::uint8_t { Pre, Post };

// Enriched fuzzy weight: Zero and One are the semiring constants, Val is a
// finite height with edge tracking, Inv is a formal inverse height that only
// ever meets Val through the collapse rules in etimes. Comparisons project
// Zero to -inf, One to +inf and Val(h) to h.
class EWeight {
public:
    enum class Kind : std::uint8_t { Zero, One, Val, Inv };

    EWeight() = default;

    static EWeight zero() { return EWeight(); }
    static EWeight one() {
        EWeight w;
        w.kind_ = Kind::One;
        return w;
    }
    static EWeight val(std::uint32_t height, TrackInfo track) {
        EWeight w;
        w.kind_ = Kind::Val;
        w.height_ = height;
        w.track_ = track;
        return w;
    }
    // Single-letter edge: one plain letter, the tracked edge is itself.
    static EWeight edge_val(std::uint32_t height, NodeId from, NodeId to) {
        return val(height, {from, to, 0, 1});
    }
    static EWeight inv(InvSide side, std::uint32_t height) {
        EWeight w;
        w.kind_ = Kind::Inv;
        w.side_ = side;
        w.height_ = height;
        return w;
    }

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::Zero; }
    bool is_one() const { return kind_ == Kind::One; }
    bool is_val() const { return kind_ == Kind::Val; }
    bool is_inv() const { return kind_ == Kind::Inv; }

    InvSide side() const { return side_; }
    std::uint32_t height() const { return height_; }
    const TrackInfo& track() const { return track_; }

    // Projection onto the plain fuzzy semiring; rejects Inv, whose values
    // fall outside the order.
    Fuzzy rank() const;

    std::string render() const; // "0", "inf", "h", "->h", "<-h"

    friend bool operator==(const EWeight&, const EWeight&) = default;

private:
    Kind kind_ = Kind::Zero;
    InvSide side_ = InvSide::Pre;
    std::uint32_t height_ = 0;
    TrackInfo track_{};
};

// Path aggregation: keeps the argument of strictly greater rank, the left
// one on ties; same-side inverses combine to the smaller height. Mixed
// inverse sides, or an inverse against Val/One, violate the query-shape
// invariant and raise engine_error.
EWeight eplus(const EWeight& a, const EWeight& b);

// Path extension: keeps the minimal-height edge and updates the plain-letter
// offsets; One is the identity and contributes no positions; the collapse
// rules PreInv(f)*Val(g) and Val(g)*PostInv(f) yield One iff f <= g, else
// Zero. Any other inverse combination raises engine_error.
EWeight etimes(const EWeight& a, const EWeight& b);

// x <_0 y iff x < y in rank or both are Zero. Only Zero/One/Val compare.
bool lt_zero(const EWeight& a, const EWeight& b);

// Weight equivalence: equal kind and rank, tracking ignored. The semiring
// laws hold for Zero/One/Val up to this relation.
bool rank_equal(const EWeight& a, const EWeight& b);

struct EWeightSemiring {
    using Value = EWeight;
    static Value zero() { return EWeight::zero(); }
    static Value one() { return EWeight::one(); }
    static Value plus(const Value& a, const Value& b) { return eplus(a, b); }
    static Value times(const Value& a, const Value& b) { return etimes(a, b); }
    static bool eq(const Value& a, const Value& b) { return a == b; }
    // Observational equivalence used when cross-checking against full
    // recomputation: tracked witnesses may legitimately differ.
    static bool equiv(const Value& a, const Value& b) { return rank_equal(a, b); }
    static std::string show(const Value& a) { return a.render(); }
};

} // namespace semirel

#endif
