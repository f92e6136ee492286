#include "semirel/eweight.hpp"

#include <algorithm>

namespace semirel {

Fuzzy EWeight::rank() const {
    switch (kind_) {
        case Kind::Zero: return Fuzzy::neg_inf();
        case Kind::One: return Fuzzy::pos_inf();
        case Kind::Val: return Fuzzy::of(static_cast<std::int64_t>(height_));
        case Kind::Inv: break;
    }
    throw engine_error("EWeight::rank: inverse weight has no rank");
}

std::string EWeight::render() const {
    switch (kind_) {
        case Kind::Zero: return "0";
        case Kind::One: return "inf";
        case Kind::Val: return std::to_string(height_);
        case Kind::Inv:
            return (side_ == InvSide::Pre ? "->" : "<-") + std::to_string(height_);
    }
    return "?";
}

EWeight eplus(const EWeight& a, const EWeight& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_inv() || b.is_inv()) {
        if (a.is_inv() && b.is_inv() && a.side() == b.side())
            return EWeight::inv(a.side(), std::min(a.height(), b.height()));
        throw engine_error("eplus: incompatible weight kinds: " + a.render() + " + " +
                           b.render());
    }
    // Zero/One/Val: keep the side of strictly greater rank, left on ties.
    return a.rank() >= b.rank() ? a : b;
}

EWeight etimes(const EWeight& a, const EWeight& b) {
    if (a.is_zero() || b.is_zero()) return EWeight::zero();
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    if (a.is_val() && b.is_val()) {
        const TrackInfo& ta = a.track();
        const TrackInfo& tb = b.track();
        if (a.height() <= b.height()) {
            return EWeight::val(a.height(),
                                {ta.from, ta.to, ta.offset, ta.total + tb.total});
        }
        return EWeight::val(b.height(),
                            {tb.from, tb.to, ta.total + tb.offset, ta.total + tb.total});
    }
    if (a.is_inv() && a.side() == InvSide::Pre && b.is_val()) {
        return a.height() <= b.height() ? EWeight::one() : EWeight::zero();
    }
    if (a.is_val() && b.is_inv() && b.side() == InvSide::Post) {
        return b.height() <= a.height() ? EWeight::one() : EWeight::zero();
    }
    throw engine_error("etimes: incompatible weight kinds: " + a.render() + " * " +
                       b.render());
}

bool lt_zero(const EWeight& a, const EWeight& b) {
    if (a.is_inv() || b.is_inv())
        throw engine_error("lt_zero: inverse weights do not compare");
    if (a.is_zero() && b.is_zero()) return true;
    return a.rank() < b.rank();
}

bool rank_equal(const EWeight& a, const EWeight& b) {
    if (a.kind() != b.kind()) return false;
    if (a.is_inv()) return a.side() == b.side() && a.height() == b.height();
    if (a.is_val()) return a.height() == b.height();
    return true;
}

} // namespace semirel
