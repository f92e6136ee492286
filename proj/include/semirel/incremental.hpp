#ifndef SEMIREL_INCREMENTAL_HPP
#define SEMIREL_INCREMENTAL_HPP

#include <cstddef>
#include <exception>
#include <map>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "semirel/chain.hpp"
#include "semirel/relation.hpp"
#include "semirel/semiring.hpp"

namespace semirel {

enum class ExecMode { Serial, Parallel };

template <Semiring S>
struct Edge {
    NodeId from;
    ExtLetter letter;
    NodeId to;
    typename S::Value weight;
};

template <Semiring S>
using EdgeBatch = std::vector<Edge<S>>;

// Per-sweep accounting exported to the CLI --stats output.
struct SweepStats {
    std::size_t multiplications = 0;
    std::size_t changed_nodes = 0;
    std::size_t delta_entries = 0;
    // (chain node id, |delta|) for every node whose relation changed.
    std::vector<std::pair<std::uint32_t, std::size_t>> node_delta_sizes;

    void accumulate(const SweepStats& other) {
        multiplications += other.multiplications;
        changed_nodes += other.changed_nodes;
        delta_entries += other.delta_entries;
    }
};

// Letter-indexed weighted automaton with, for every chain node, the current
// relation of its word. Values are immutable; updates return a new automaton
// that shares all unchanged relations with its predecessor, so readers may
// keep old snapshots. The bottom-up sweep evaluates the nodes of one chain
// level independently; in Parallel mode they run on OpenMP threads, with
// results identical to the Serial reference.
template <Semiring S>
class IncrementalAutomaton {
public:
    using Rel = Relation<S>;
    using Value = typename S::Value;

    IncrementalAutomaton() = default;

    // Builds the chain for the query words, installs the one-letter
    // relations by folding the base edges with plus, and computes every
    // product node bottom-up.
    static IncrementalAutomaton init(const std::vector<Word>& query_words,
                                     const EdgeBatch<S>& base_edges,
                                     ExecMode mode = ExecMode::Serial) {
        if (query_words.empty())
            throw std::invalid_argument("IncrementalAutomaton::init: no query words");
        IncrementalAutomaton a;
        a.mode_ = mode;
        a.chain_ = std::make_shared<const Chain>(Chain::build(query_words));
        a.products_.assign(a.chain_->nodes().size(), empty_rel());
        for (const auto& [letter, rel] : group_by_letter(base_edges))
            a.base_[letter] = std::make_shared<const Rel>(std::move(rel));
        return a.recompute_full();
    }

    ExecMode mode() const { return mode_; }
    void set_mode(ExecMode mode) { mode_ = mode; }

    const Chain& chain() const { return *chain_; }

    const Rel& letter_relation(const ExtLetter& c) const {
        auto it = base_.find(c);
        return it == base_.end() ? *empty_rel() : *it->second;
    }

    const Rel& relation(const Word& w) const {
        auto it = chain_->query_index().find(w);
        if (it == chain_->query_index().end())
            throw std::invalid_argument("IncrementalAutomaton: word is not registered");
        return *products_[it->second];
    }

    Value query(const Word& w, NodeId p, NodeId q) const { return relation(w).lookup(p, q); }

    const Rel& node_relation(std::uint32_t node) const { return *products_[node]; }

    // Algorithm: per changed letter c, delta(c) := diff(base(c) + d(c), base(c));
    // then bottom-up for every product node t = l*r with a changed input,
    //   D := delta(l)*A(r) + A(l)*delta(r) + delta(l)*delta(r)
    // over the OLD stored relations, A'(t) := A(t) + D and
    // delta(t) := diff(A'(t), A(t)). Nodes with an empty delta keep their
    // relation shared with the previous snapshot.
    IncrementalAutomaton apply_delta(const EdgeBatch<S>& delta,
                                     SweepStats* stats = nullptr) const {
        IncrementalAutomaton next = *this;
        const auto& nodes = chain_->nodes();
        const auto& units = chain_->unit_index();
        std::vector<RelPtr> deltas(nodes.size());

        for (const auto& [letter, d] : group_by_letter(delta)) {
            auto [merged, changed] = merge_diff(letter_relation(letter), d);
            if (changed.empty()) continue;
            auto merged_ptr = std::make_shared<const Rel>(std::move(merged));
            next.base_[letter] = merged_ptr;
            if (auto it = units.find(letter); it != units.end()) {
                next.products_[it->second] = merged_ptr;
                deltas[it->second] = std::make_shared<const Rel>(std::move(changed));
            }
        }

        SweepStats sweep;
        const auto& levels = chain_->levels();
        for (std::size_t depth = 1; depth < levels.size(); ++depth) {
            sweep_level(levels[depth], next, deltas, /*incremental=*/true, &sweep);
        }
        collect_stats(deltas, sweep);
        if (stats) *stats = std::move(sweep);
        return next;
    }

    // Recomputes every product node from the one-letter relations by full
    // multiplication; the oracle against which apply_delta is checked.
    IncrementalAutomaton recompute_full() const {
        IncrementalAutomaton next = *this;
        next.products_.assign(chain_->nodes().size(), empty_rel());
        std::vector<RelPtr> deltas; // unused in full mode
        for (const auto& level : chain_->levels()) {
            sweep_level(level, next, deltas, /*incremental=*/false, nullptr);
        }
        return next;
    }

    // Folds the batch into the base relations and recomputes everything from
    // scratch; the per-step cost model apply_delta is benchmarked against.
    IncrementalAutomaton rebase_full(const EdgeBatch<S>& delta) const {
        IncrementalAutomaton next = *this;
        for (const auto& [letter, d] : group_by_letter(delta)) {
            next.base_[letter] =
                std::make_shared<const Rel>(add(letter_relation(letter), d));
        }
        return next.recompute_full();
    }

    // Entrywise comparison of all product relations under eq.
    template <typename Eq>
    bool equal_products(const IncrementalAutomaton& other, Eq&& eq) const {
        if (products_.size() != other.products_.size()) return false;
        for (std::size_t i = 0; i < products_.size(); ++i) {
            const Rel& a = *products_[i];
            const Rel& b = *other.products_[i];
            if (a.size() != b.size()) return false;
            for (const auto& [p, q, w] : a.to_edges()) {
                if (!eq(b.lookup(p, q), w)) return false;
            }
        }
        return true;
    }

    bool equal_products(const IncrementalAutomaton& other) const {
        return equal_products(other,
                              [](const Value& a, const Value& b) { return S::eq(a, b); });
    }

    std::size_t base_entry_count() const {
        std::size_t n = 0;
        for (const auto& [letter, rel] : base_) n += rel->size();
        return n;
    }

private:
    using RelPtr = std::shared_ptr<const Rel>;

    static RelPtr empty_rel() {
        static const RelPtr e = std::make_shared<const Rel>();
        return e;
    }

    static std::map<ExtLetter, Rel> group_by_letter(const EdgeBatch<S>& batch) {
        std::map<ExtLetter, Rel> by_letter;
        for (const auto& e : batch) by_letter[e.letter].add(e.from, e.to, e.weight);
        return by_letter;
    }

    struct NodeOutcome {
        RelPtr product; // null: unchanged
        RelPtr delta;   // null: no delta
        std::size_t multiplications = 0;
    };

    // Evaluates one chain level. Every node reads only strictly earlier
    // levels plus this->products_ (the old snapshot) and writes its own
    // slot, so the iterations are independent; scheduling cannot change the
    // results.
    void sweep_level(const std::vector<std::uint32_t>& level, IncrementalAutomaton& next,
                     std::vector<RelPtr>& deltas, bool incremental,
                     SweepStats* sweep) const {
        const auto& nodes = chain_->nodes();
        std::vector<NodeOutcome> out(level.size());
        std::size_t active = level.size();
        if (incremental) {
            active = 0;
            for (std::uint32_t id : level) {
                const ChainNode& node = nodes[id];
                if (node.is_unit()) continue;
                const auto& t = node.times();
                if (deltas[t.left] || deltas[t.right]) ++active;
            }
        }
        const bool parallel = mode_ == ExecMode::Parallel && active > 1;
        std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1) if (parallel)
        for (std::size_t i = 0; i < level.size(); ++i) {
            try {
                const std::uint32_t id = level[i];
                const ChainNode& node = nodes[id];
                if (node.is_unit()) {
                    // Unit nodes only appear here during full recomputation;
                    // the incremental sweep seeds them with the base update.
                    auto it = next.base_.find(node.unit().letter);
                    out[i].product = it == next.base_.end() ? empty_rel() : it->second;
                    continue;
                }
                const auto& t = node.times();
                if (incremental) {
                    out[i] = update_times_node(id, t, deltas);
                } else {
                    out[i].product = std::make_shared<const Rel>(
                        multiply(*next.products_[t.left], *next.products_[t.right]));
                    out[i].multiplications = 1;
                }
            } catch (...) {
                // Weight operations may signal invariant violations; carry
                // the exception out of the parallel region intact.
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);

        for (std::size_t i = 0; i < level.size(); ++i) {
            if (out[i].product) next.products_[level[i]] = out[i].product;
            if (incremental && out[i].delta) deltas[level[i]] = out[i].delta;
            if (sweep) sweep->multiplications += out[i].multiplications;
        }
    }

    NodeOutcome update_times_node(std::uint32_t id, const ChainNode::Times& t,
                                  const std::vector<RelPtr>& deltas) const {
        NodeOutcome out;
        const RelPtr& dl = deltas[t.left];
        const RelPtr& dr = deltas[t.right];
        if (!dl && !dr) return out;

        const Rel& old_left = *products_[t.left];
        const Rel& old_right = *products_[t.right];
        Rel contribution;
        auto accumulate = [&](const Rel& a, const Rel& b) {
            if (a.empty() || b.empty()) return;
            ++out.multiplications;
            Rel term = multiply(a, b);
            contribution = add(contribution, term);
        };
        if (dl) accumulate(*dl, old_right);
        if (dr) accumulate(old_left, *dr);
        if (dl && dr) accumulate(*dl, *dr);
        if (contribution.empty()) return out;

        auto [merged, changed] = merge_diff(*products_[id], contribution);
        if (changed.empty()) return out;
        out.product = std::make_shared<const Rel>(std::move(merged));
        out.delta = std::make_shared<const Rel>(std::move(changed));
        return out;
    }

    void collect_stats(const std::vector<RelPtr>& deltas, SweepStats& sweep) const {
        for (std::size_t i = 0; i < deltas.size(); ++i) {
            if (!deltas[i]) continue;
            std::size_t n = deltas[i]->size();
            ++sweep.changed_nodes;
            sweep.delta_entries += n;
            sweep.node_delta_sizes.emplace_back(static_cast<std::uint32_t>(i), n);
        }
    }

    std::shared_ptr<const Chain> chain_;
    std::map<ExtLetter, RelPtr> base_;
    std::vector<RelPtr> products_;
    ExecMode mode_ = ExecMode::Serial;
};

} // namespace semirel

#endif
