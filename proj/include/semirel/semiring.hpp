#ifndef SEMIREL_SEMIRING_HPP
#define SEMIREL_SEMIRING_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "semirel/types.hpp"

namespace semirel {

// Static-dispatch semiring signature. An instance supplies the carrier type
// and the operations; the engine is templated over it.
template <typename S>
concept Semiring = requires(const typename S::Value& a, const typename S::Value& b) {
    typename S::Value;
    { S::zero() } -> std::convertible_to<typename S::Value>;
    { S::one() } -> std::convertible_to<typename S::Value>;
    { S::plus(a, b) } -> std::convertible_to<typename S::Value>;
    { S::times(a, b) } -> std::convertible_to<typename S::Value>;
    { S::eq(a, b) } -> std::convertible_to<bool>;
};

template <Semiring S>
bool is_zero(const typename S::Value& v) {
    return S::eq(v, S::zero());
}

// Totally ordered fuzzy value: -inf < ... < -1 < 0 < 1 < ... < +inf.
// Stored as int64 with the extreme representable values reserved for the
// infinities; of() rejects them so arithmetic near the rails is impossible
// to construct silently.
class Fuzzy {
public:
    constexpr Fuzzy() : v_(kNegInf) {}

    static constexpr Fuzzy neg_inf() { return Fuzzy(kNegInf); }
    static constexpr Fuzzy pos_inf() { return Fuzzy(kPosInf); }

    static Fuzzy of(std::int64_t n) {
        if (n == kNegInf || n == kPosInf)
            throw engine_error("Fuzzy::of: integer magnitude exceeds representable range");
        return Fuzzy(n);
    }

    bool is_neg_inf() const { return v_ == kNegInf; }
    bool is_pos_inf() const { return v_ == kPosInf; }
    bool is_int() const { return !is_neg_inf() && !is_pos_inf(); }

    std::int64_t value() const {
        if (!is_int()) throw engine_error("Fuzzy::value: not a finite value");
        return v_;
    }

    friend constexpr bool operator==(Fuzzy a, Fuzzy b) = default;
    friend constexpr auto operator<=>(Fuzzy a, Fuzzy b) = default;

    std::string show() const {
        if (is_neg_inf()) return "-inf";
        if (is_pos_inf()) return "+inf";
        return std::to_string(v_);
    }

private:
    explicit constexpr Fuzzy(std::int64_t v) : v_(v) {}

    static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
    static constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max();

    std::int64_t v_;
};

inline Fuzzy fuzzy_plus(Fuzzy a, Fuzzy b) { return std::max(a, b); }
inline Fuzzy fuzzy_times(Fuzzy a, Fuzzy b) { return std::min(a, b); }

struct BoolSemiring {
    using Value = bool;
    static Value zero() { return false; }
    static Value one() { return true; }
    static Value plus(Value a, Value b) { return a || b; }
    static Value times(Value a, Value b) { return a && b; }
    static bool eq(Value a, Value b) { return a == b; }
    static std::string show(Value a) { return a ? "1" : "0"; }
};

struct NatSemiring {
    using Value = std::uint64_t;
    static Value zero() { return 0; }
    static Value one() { return 1; }
    static Value plus(Value a, Value b) { return a + b; }
    static Value times(Value a, Value b) { return a * b; }
    static bool eq(Value a, Value b) { return a == b; }
    static std::string show(Value a) { return std::to_string(a); }
};

// (max, min) over the fuzzy values; idempotent.
struct FuzzySemiring {
    using Value = Fuzzy;
    static Value zero() { return Fuzzy::neg_inf(); }
    static Value one() { return Fuzzy::pos_inf(); }
    static Value plus(Value a, Value b) { return fuzzy_plus(a, b); }
    static Value times(Value a, Value b) { return fuzzy_times(a, b); }
    static bool eq(Value a, Value b) { return a == b; }
    static std::string show(Value a) { return a.show(); }
};

struct LawViolation {
    std::string law;
    std::string detail;
};

// Evaluates the semiring axioms over every triple drawn from the samples:
// associativity and commutativity of plus, both identities, annihilation by
// zero, and distributivity from both sides. Equality is S::eq. Empty result
// means no violated instance.
template <Semiring S>
    requires requires(const typename S::Value& v) {
        { S::show(v) } -> std::convertible_to<std::string>;
    }
std::vector<LawViolation> check_semiring_laws(std::span<const typename S::Value> samples) {
    std::vector<LawViolation> out;
    auto record = [&out](const char* law, std::string detail) {
        out.push_back({law, std::move(detail)});
    };

    const auto zero = S::zero();
    const auto one = S::one();

    for (const auto& a : samples) {
        if (!S::eq(S::plus(zero, a), a))
            record("plus-zero-identity", "0 + " + S::show(a));
        if (!S::eq(S::plus(a, zero), a))
            record("plus-zero-identity", S::show(a) + " + 0");
        if (!S::eq(S::times(one, a), a))
            record("times-one-identity", "1 * " + S::show(a));
        if (!S::eq(S::times(a, one), a))
            record("times-one-identity", S::show(a) + " * 1");
        if (!S::eq(S::times(zero, a), zero))
            record("zero-annihilates", "0 * " + S::show(a));
        if (!S::eq(S::times(a, zero), zero))
            record("zero-annihilates", S::show(a) + " * 0");
    }

    for (const auto& a : samples) {
        for (const auto& b : samples) {
            if (!S::eq(S::plus(a, b), S::plus(b, a)))
                record("plus-commutative", S::show(a) + " + " + S::show(b));
        }
    }

    for (const auto& a : samples) {
        for (const auto& b : samples) {
            for (const auto& c : samples) {
                const std::string abc =
                    "(" + S::show(a) + ", " + S::show(b) + ", " + S::show(c) + ")";
                if (!S::eq(S::plus(a, S::plus(b, c)), S::plus(S::plus(a, b), c)))
                    record("plus-associative", abc);
                if (!S::eq(S::times(a, S::times(b, c)), S::times(S::times(a, b), c)))
                    record("times-associative", abc);
                if (!S::eq(S::times(a, S::plus(b, c)), S::plus(S::times(a, b), S::times(a, c))))
                    record("left-distributive", abc);
                if (!S::eq(S::times(S::plus(a, b), c), S::plus(S::times(a, c), S::times(b, c))))
                    record("right-distributive", abc);
            }
        }
    }

    return out;
}

} // namespace semirel

#endif
