#ifndef SEMIREL_RELATION_HPP
#define SEMIREL_RELATION_HPP

#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "semirel/semiring.hpp"
#include "semirel/types.hpp"

namespace semirel {

// Sparse weighted relation kept as a mirrored pair of nested ordered maps:
// fore[p][q] == w iff back[q][p] == w. Weights equal to the semiring zero are
// never stored; a missing entry reads as zero. Ordered maps make every
// iteration ascend in NodeId, so all derived computations are deterministic.
template <Semiring S>
class Relation {
public:
    using Value = typename S::Value;
    using Row = std::map<NodeId, Value>;
    using Index = std::map<NodeId, Row>;
    using Entry = std::tuple<NodeId, NodeId, Value>;

    Relation() = default;

    static Relation identity(const std::set<NodeId>& states, const Value& unit) {
        Relation r;
        if (is_zero<S>(unit)) return r;
        for (NodeId q : states) {
            r.fore_[q][q] = unit;
            r.back_[q][q] = unit;
        }
        return r;
    }

    bool empty() const { return fore_.empty(); }

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& [p, row] : fore_) n += row.size();
        return n;
    }

    Value lookup(NodeId p, NodeId q) const {
        auto it = fore_.find(p);
        if (it == fore_.end()) return S::zero();
        auto jt = it->second.find(q);
        if (jt == it->second.end()) return S::zero();
        return jt->second;
    }

    const Row& successors(NodeId p) const {
        auto it = fore_.find(p);
        return it == fore_.end() ? empty_row() : it->second;
    }

    const Row& predecessors(NodeId q) const {
        auto it = back_.find(q);
        return it == back_.end() ? empty_row() : it->second;
    }

    const Index& fore() const { return fore_; }
    const Index& back() const { return back_; }

    // Installs (p,q) -> w, combining with the existing weight through f.
    // A combined weight equal to zero removes the entry from both indexes.
    template <typename F>
    void add_with(F&& f, NodeId p, NodeId q, const Value& w) {
        if (is_zero<S>(w)) return;
        auto& row = fore_[p];
        auto it = row.find(q);
        if (it == row.end()) {
            row.emplace(q, w);
            back_[q].emplace(p, w);
            return;
        }
        Value combined = f(it->second, w);
        if (is_zero<S>(combined)) {
            erase(p, q);
        } else {
            it->second = combined;
            back_[q][p] = combined;
        }
    }

    // Single edge per pair: parallel insertions merge with semiring plus.
    void add(NodeId p, NodeId q, const Value& w) {
        add_with([](const Value& a, const Value& b) { return S::plus(a, b); }, p, q, w);
    }

    std::vector<Entry> to_edges() const {
        std::vector<Entry> out;
        for (const auto& [p, row] : fore_)
            for (const auto& [q, w] : row) out.emplace_back(p, q, w);
        return out;
    }

    // Enumeration through the backward index; used to cross-check the mirror
    // invariant.
    std::vector<Entry> to_edges_via_back() const {
        std::vector<Entry> out;
        for (const auto& [q, col] : back_)
            for (const auto& [p, w] : col) out.emplace_back(p, q, w);
        return out;
    }

    // Every node that carries at least one entry, as source or target.
    std::set<NodeId> support_nodes() const {
        std::set<NodeId> nodes;
        for (const auto& [p, row] : fore_) {
            nodes.insert(p);
            for (const auto& [q, w] : row) {
                (void)w;
                nodes.insert(q);
            }
        }
        return nodes;
    }

private:
    void erase(NodeId p, NodeId q) {
        auto it = fore_.find(p);
        if (it != fore_.end()) {
            it->second.erase(q);
            if (it->second.empty()) fore_.erase(it);
        }
        auto jt = back_.find(q);
        if (jt != back_.end()) {
            jt->second.erase(p);
            if (jt->second.empty()) back_.erase(jt);
        }
    }

    static const Row& empty_row() {
        static const Row row;
        return row;
    }

    Index fore_;
    Index back_;
};

template <Semiring S>
bool equal(const Relation<S>& a, const Relation<S>& b) {
    if (a.fore().size() != b.fore().size()) return false;
    auto it = a.fore().begin();
    auto jt = b.fore().begin();
    for (; it != a.fore().end(); ++it, ++jt) {
        if (it->first != jt->first || it->second.size() != jt->second.size()) return false;
        auto rt = it->second.begin();
        auto st = jt->second.begin();
        for (; rt != it->second.end(); ++rt, ++st) {
            if (rt->first != st->first || !S::eq(rt->second, st->second)) return false;
        }
    }
    return true;
}

// Entrywise union of two relations; where both define a weight the results
// are combined with f (left argument from r, right from s). Combined weights
// equal to zero are dropped from both indexes.
template <Semiring S, typename F>
Relation<S> plus_with(F&& f, const Relation<S>& r, const Relation<S>& s) {
    // Merge the smaller operand into a copy of the larger one; the argument
    // order of f is preserved either way.
    const bool r_larger = r.size() >= s.size();
    Relation<S> out = r_larger ? r : s;
    const Relation<S>& small = r_larger ? s : r;
    for (const auto& [p, row] : small.fore()) {
        for (const auto& [q, w] : row) {
            if (r_larger) {
                out.add_with([&f](const auto& a, const auto& b) { return f(a, b); }, p, q, w);
            } else {
                out.add_with([&f](const auto& a, const auto& b) { return f(b, a); }, p, q, w);
            }
        }
    }
    return out;
}

// Outer product of a predecessor column and a successor row: entry
// (p,q) -> g(col[p], row[q]), with both mirror indexes built. Distinct (p,q)
// pairs only, so the add operator is never invoked here; the parameter keeps
// the signature aligned with the fold in times_with.
template <Semiring S, typename F, typename G>
Relation<S> combine(F&&, G&& g, const typename Relation<S>::Row& col,
                    const typename Relation<S>::Row& row) {
    Relation<S> out;
    for (const auto& [p, w1] : col) {
        for (const auto& [q, w2] : row) {
            auto w = g(w1, w2);
            if (!is_zero<S>(w)) {
                out.add_with([](const auto& a, const auto&) { return a; }, p, q, w);
            }
        }
    }
    return out;
}

// Relation product (r*s)(p,q) = sum_f { g(r(p,m), s(m,q)) | m }: intersect
// back(r) with fore(s) on the middle index, form the outer product per middle
// node, and fold the pieces entrywise with f in ascending middle order.
template <Semiring S, typename F, typename G>
Relation<S> times_with(F&& f, G&& g, const Relation<S>& r, const Relation<S>& s) {
    Relation<S> acc;
    const auto& rb = r.back();
    const auto& sf = s.fore();
    // Walk the smaller outer map, probing the larger; both are ordered, so
    // the middle nodes still arrive in ascending order.
    if (rb.size() <= sf.size()) {
        for (const auto& [m, col] : rb) {
            auto it = sf.find(m);
            if (it == sf.end()) continue;
            Relation<S> piece = combine<S>(f, g, col, it->second);
            for (const auto& [p, q, w] : piece.to_edges()) acc.add_with(f, p, q, w);
        }
    } else {
        for (const auto& [m, row] : sf) {
            auto it = rb.find(m);
            if (it == rb.end()) continue;
            Relation<S> piece = combine<S>(f, g, it->second, row);
            for (const auto& [p, q, w] : piece.to_edges()) acc.add_with(f, p, q, w);
        }
    }
    return acc;
}

template <Semiring S>
Relation<S> multiply(const Relation<S>& r, const Relation<S>& s) {
    return times_with<S>([](const auto& a, const auto& b) { return S::plus(a, b); },
                         [](const auto& a, const auto& b) { return S::times(a, b); }, r, s);
}

template <Semiring S>
Relation<S> add(const Relation<S>& r, const Relation<S>& s) {
    return plus_with<S>([](const auto& a, const auto& b) { return S::plus(a, b); }, r, s);
}

// plus_with(S::plus, old, delta) fused with the diff against old. Entries
// outside the delta's support cannot change under plus, so only those are
// examined; returns the merged relation and the changed entries.
template <Semiring S>
std::pair<Relation<S>, Relation<S>> merge_diff(const Relation<S>& old,
                                               const Relation<S>& delta) {
    Relation<S> merged = old;
    Relation<S> changed;
    for (const auto& [p, row] : delta.fore()) {
        for (const auto& [q, w] : row) {
            auto old_v = old.lookup(p, q);
            auto new_v = is_zero<S>(old_v) ? w : S::plus(old_v, w);
            if (S::eq(new_v, old_v)) continue;
            // add_with drops the entry when the combined value is zero,
            // matching plus_with's normalization.
            merged.add_with([&new_v](const auto&, const auto&) { return new_v; }, p, q, w);
            if (!is_zero<S>(new_v)) {
                changed.add_with([](const auto& a, const auto&) { return a; }, p, q, new_v);
            }
        }
    }
    return {std::move(merged), std::move(changed)};
}

// Entries of newer whose weight differs from older at the same pair,
// including entries absent from older. Entries present only in older are not
// reported; updates are monotone in this engine.
template <Semiring S>
Relation<S> diff(const Relation<S>& newer, const Relation<S>& older) {
    Relation<S> out;
    for (const auto& [p, row] : newer.fore()) {
        for (const auto& [q, w] : row) {
            if (!S::eq(older.lookup(p, q), w)) {
                out.add_with([](const auto& a, const auto&) { return a; }, p, q, w);
            }
        }
    }
    return out;
}

} // namespace semirel

#endif
