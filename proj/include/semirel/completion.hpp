#ifndef SEMIREL_COMPLETION_HPP
#define SEMIREL_COMPLETION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semirel/chain.hpp"
#include "semirel/eweight.hpp"
#include "semirel/incremental.hpp"

namespace semirel {

// Rewrite rule over alphabet symbols; the left-hand side is never empty.
struct Rule {
    std::vector<Symbol> lhs;
    std::vector<Symbol> rhs;

    friend bool operator==(const Rule&, const Rule&) = default;
};

struct Limits {
    std::size_t max_steps = 10000;
    std::size_t max_states = 100000;
    std::uint32_t max_height = 64;
};

// lambda-interleaving of a plain word: l w1 l w2 l ... l wn l. The empty
// word maps to the single-letter lambda word.
Word lambda_interleave(const std::vector<Symbol>& word);

// The fixed query set of the completion loop: [l l] for TRANSITIVE,
// [->c l c] and [c l <-c] per alphabet letter for INVERSE, and the
// lambda-interleavings of every rule side for REWRITE.
std::vector<Word> query_words(std::size_t alphabet_size, const std::vector<Rule>& rules);

// Incompatibility witness: the stored value at A(l_lambda)(p,q) whose
// tracking names the minimal-height edge and the split position of the lhs.
struct Violation {
    std::size_t rule_index;
    NodeId p;
    NodeId q;
    EWeight witness;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct CompletionStats {
    std::size_t steps = 0;
    std::size_t rewrite_firings = 0;
    std::size_t transitive_edges = 0;
    std::size_t inverse_edges = 0;
    std::size_t epsilon_rounds = 0;
    std::size_t states = 0;
    std::size_t edges = 0;
    SweepStats sweep_total;
};

struct Progress {
    std::size_t steps;
    std::size_t states;
    std::uint32_t max_height;
};

using CompletionBatch = EdgeBatch<EWeightSemiring>;

// One recorded event of a run: either a rewrite firing or a batch of
// epsilon edges from the saturation rules. The batch replayed in order over
// a fresh flower automaton reproduces the run.
struct TraceEvent {
    enum class Kind { Rewrite, Epsilon };
    Kind kind;
    CompletionBatch batch;
    std::optional<Violation> firing; // set for Kind::Rewrite
};

struct RunOptions {
    bool record_trace = false;
    // Compare every apply_delta against full recomputation (slow; weight
    // equivalence, since tracked witnesses may differ between the routes).
    bool cross_check = false;
    std::function<void(const Progress&)> progress;
};

struct Outcome {
    enum class Status { Success, LimitSteps, LimitStates, LimitHeight };

    Status status;
    std::uint32_t bound = 0;
    CompletionStats stats;
    std::vector<TraceEvent> trace;

    bool success() const { return status == Status::Success; }
};

std::string show_status(Outcome::Status s);

// Algorithm state: automaton over the extended alphabet, fresh-state
// counter, rule set and limits. Construction builds the flower automaton
// (state 1 with a height-0 loop per letter and a reflexive epsilon loop) and
// the multiplication chain for the query set.
class Completion {
public:
    Completion(std::vector<std::string> alphabet, std::vector<Rule> rules,
               Limits limits = {}, ExecMode mode = ExecMode::Serial);

    // All pairs connected by two epsilon steps but not by one, as epsilon
    // edges.
    CompletionBatch find_transitive() const;

    // All pairs where an inverse letter collapses against its letter
    // ([->c l c] or [c l <-c] evaluates to One) without an epsilon edge yet.
    CompletionBatch find_inverse() const;

    // First rule and state pair, in rule order then ascending (p,q), where
    // A(l_lambda)(p,q) <_0 A(r_lambda)(p,q) fails. Requires the epsilon
    // rules to be saturated.
    std::optional<Violation> find_rewrite() const;

    // Number of fresh states the repair path for v needs.
    std::size_t fresh_states_for(const Violation& v) const;

    // Plain-edge height the repair path introduces (witness height + 1), or
    // nothing when the right-hand side is empty.
    std::optional<std::uint32_t> path_height_for(const Violation& v) const;

    // Splits lhs = s c t at the witness offset and emits the repair path
    // from witness.from to witness.to: PostInv(s_k..s_1) at the witness
    // height, then Plain(r_1..r_m) at height+1, then PreInv(t_j..t_1) at the
    // witness height, through fresh states carrying reflexive epsilon loops.
    // An empty label sequence degenerates to a single epsilon edge.
    CompletionBatch make_rewrite_path(const Violation& v);

    void apply(const CompletionBatch& batch);

    // The saturation loop and rewrite steps until no rule applies or a
    // limit is hit.
    Outcome run(const RunOptions& options = {});

    std::uint32_t bound() const; // max height over plain-letter edges

    const IncrementalAutomaton<EWeightSemiring>& automaton() const { return aut_; }
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    const std::vector<Rule>& rules() const { return rules_; }
    const CompletionStats& stats() const { return stats_; }
    std::size_t state_count() const { return next_state_ - 1; }
    const Limits& limits() const { return limits_; }

private:
    void saturate(Outcome& outcome, const RunOptions& options);
    void check(const RunOptions& options) const;

    std::vector<std::string> alphabet_;
    std::vector<Rule> rules_;
    Limits limits_;
    IncrementalAutomaton<EWeightSemiring> aut_;
    NodeId next_state_ = 1;
    CompletionStats stats_;
};

} // namespace semirel

#endif
