#include "semirel/completion.hpp"

#include <algorithm>
#include <stdexcept>

namespace semirel {

Word lambda_interleave(const std::vector<Symbol>& word) {
    Word out;
    out.reserve(2 * word.size() + 1);
    out.push_back(ExtLetter::lambda());
    for (Symbol c : word) {
        out.push_back(ExtLetter::plain(c));
        out.push_back(ExtLetter::lambda());
    }
    return out;
}

std::vector<Word> query_words(std::size_t alphabet_size, const std::vector<Rule>& rules) {
    std::vector<Word> words;
    words.push_back({ExtLetter::lambda(), ExtLetter::lambda()});
    for (Symbol c = 0; c < alphabet_size; ++c) {
        words.push_back({ExtLetter::pre_inv(c), ExtLetter::lambda(), ExtLetter::plain(c)});
        words.push_back({ExtLetter::plain(c), ExtLetter::lambda(), ExtLetter::post_inv(c)});
    }
    for (const auto& rule : rules) {
        words.push_back(lambda_interleave(rule.lhs));
        words.push_back(lambda_interleave(rule.rhs));
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

std::string show_status(Outcome::Status s) {
    switch (s) {
        case Outcome::Status::Success: return "success";
        case Outcome::Status::LimitSteps: return "limit (max-steps)";
        case Outcome::Status::LimitStates: return "limit (max-states)";
        case Outcome::Status::LimitHeight: return "limit (max-height)";
    }
    return "?";
}

Completion::Completion(std::vector<std::string> alphabet, std::vector<Rule> rules,
                       Limits limits, ExecMode mode)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)), limits_(limits) {
    if (alphabet_.empty())
        throw std::invalid_argument("Completion: empty alphabet");
    for (const auto& rule : rules_) {
        if (rule.lhs.empty())
            throw std::invalid_argument("Completion: rule with empty left-hand side");
        for (Symbol c : rule.lhs)
            if (c >= alphabet_.size())
                throw std::invalid_argument("Completion: rule symbol outside alphabet");
        for (Symbol c : rule.rhs)
            if (c >= alphabet_.size())
                throw std::invalid_argument("Completion: rule symbol outside alphabet");
    }

    const NodeId flower = 1;
    next_state_ = 2;
    CompletionBatch base;
    for (Symbol c = 0; c < alphabet_.size(); ++c) {
        base.push_back({flower, ExtLetter::plain(c), flower, EWeight::edge_val(0, flower, flower)});
    }
    base.push_back({flower, ExtLetter::lambda(), flower, EWeight::one()});
    aut_ = IncrementalAutomaton<EWeightSemiring>::init(
        query_words(alphabet_.size(), rules_), base, mode);
    stats_.states = 1;
    stats_.edges = aut_.base_entry_count();
}

namespace {

const Word kLambdaLambda{ExtLetter::lambda(), ExtLetter::lambda()};

// Epsilon edges for every differing entry of rel against the epsilon
// relation; all stored values must be One.
void epsilon_edges_from(const Relation<EWeightSemiring>& rel,
                        const Relation<EWeightSemiring>& eps, CompletionBatch& out) {
    Relation<EWeightSemiring> fresh = diff(rel, eps);
    for (const auto& [p, q, w] : fresh.to_edges()) {
        if (!w.is_one())
            throw engine_error("epsilon rule query produced a non-One weight: " + w.render());
        out.push_back({p, ExtLetter::lambda(), q, EWeight::one()});
    }
}

} // namespace

CompletionBatch Completion::find_transitive() const {
    CompletionBatch out;
    epsilon_edges_from(aut_.relation(kLambdaLambda),
                       aut_.letter_relation(ExtLetter::lambda()), out);
    return out;
}

CompletionBatch Completion::find_inverse() const {
    CompletionBatch out;
    const auto& eps = aut_.letter_relation(ExtLetter::lambda());
    for (Symbol c = 0; c < alphabet_.size(); ++c) {
        Word pre{ExtLetter::pre_inv(c), ExtLetter::lambda(), ExtLetter::plain(c)};
        Word post{ExtLetter::plain(c), ExtLetter::lambda(), ExtLetter::post_inv(c)};
        epsilon_edges_from(aut_.relation(pre), eps, out);
        epsilon_edges_from(aut_.relation(post), eps, out);
    }
    return out;
}

std::optional<Violation> Completion::find_rewrite() const {
    for (std::size_t r = 0; r < rules_.size(); ++r) {
        const auto& lhs_rel = aut_.relation(lambda_interleave(rules_[r].lhs));
        const auto& rhs_rel = aut_.relation(lambda_interleave(rules_[r].rhs));
        for (const auto& [p, row] : lhs_rel.fore()) {
            for (const auto& [q, w] : row) {
                if (lt_zero(w, rhs_rel.lookup(p, q))) continue;
                if (!w.is_val())
                    throw engine_error("rewrite witness is not a finite weight: " + w.render());
                if (w.track().total != rules_[r].lhs.size())
                    throw engine_error("rewrite witness tracks a wrong letter count");
                return Violation{r, p, q, w};
            }
        }
    }
    return std::nullopt;
}

std::size_t Completion::fresh_states_for(const Violation& v) const {
    const Rule& rule = rules_[v.rule_index];
    // s = lhs[0..offset), c = lhs[offset], t = the rest; the path carries
    // one edge per letter of s, rhs and t.
    std::size_t labels = (rule.lhs.size() - 1) + rule.rhs.size();
    return labels == 0 ? 0 : labels - 1;
}

std::optional<std::uint32_t> Completion::path_height_for(const Violation& v) const {
    if (rules_[v.rule_index].rhs.empty()) return std::nullopt;
    return v.witness.height() + 1;
}

CompletionBatch Completion::make_rewrite_path(const Violation& v) {
    const Rule& rule = rules_[v.rule_index];
    const std::uint32_t h = v.witness.height();
    const std::uint32_t offset = v.witness.track().offset;
    const NodeId from = v.witness.track().from;
    const NodeId to = v.witness.track().to;

    std::vector<ExtLetter> labels;
    std::vector<std::uint32_t> heights;
    // PostInv over the reversed prefix s, then the right-hand side one level
    // up, then PreInv over the reversed suffix t.
    for (std::size_t i = offset; i-- > 0;) {
        labels.push_back(ExtLetter::post_inv(rule.lhs[i]));
        heights.push_back(h);
    }
    for (Symbol c : rule.rhs) {
        labels.push_back(ExtLetter::plain(c));
        heights.push_back(h + 1);
    }
    for (std::size_t i = rule.lhs.size(); i-- > offset + 1;) {
        labels.push_back(ExtLetter::pre_inv(rule.lhs[i]));
        heights.push_back(h);
    }

    CompletionBatch batch;
    if (labels.empty()) {
        if (aut_.letter_relation(ExtLetter::lambda()).lookup(from, to).is_one())
            return batch; // already present; nothing to add
        batch.push_back({from, ExtLetter::lambda(), to, EWeight::one()});
        return batch;
    }

    std::vector<NodeId> path{from};
    for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
        NodeId fresh = next_state_++;
        path.push_back(fresh);
        batch.push_back({fresh, ExtLetter::lambda(), fresh, EWeight::one()});
        ++stats_.states;
    }
    path.push_back(to);

    for (std::size_t i = 0; i < labels.size(); ++i) {
        EWeight w;
        switch (labels[i].kind) {
            case ExtLetter::Kind::Plain:
                w = EWeight::edge_val(heights[i], path[i], path[i + 1]);
                break;
            case ExtLetter::Kind::PreInv:
                w = EWeight::inv(InvSide::Pre, heights[i]);
                break;
            case ExtLetter::Kind::PostInv:
                w = EWeight::inv(InvSide::Post, heights[i]);
                break;
            case ExtLetter::Kind::Lambda:
                throw engine_error("rewrite path cannot contain a lambda label");
        }
        batch.push_back({path[i], labels[i], path[i + 1], w});
    }
    return batch;
}

void Completion::apply(const CompletionBatch& batch) {
    SweepStats sweep;
    aut_ = aut_.apply_delta(batch, &sweep);
    stats_.sweep_total.accumulate(sweep);
    stats_.edges = aut_.base_entry_count();
}

void Completion::check(const RunOptions& options) const {
    if (!options.cross_check) return;
    auto full = aut_.recompute_full();
    bool ok = aut_.equal_products(
        full, [](const EWeight& a, const EWeight& b) { return EWeightSemiring::equiv(a, b); });
    if (!ok)
        throw engine_error("incremental products diverged from full recomputation");
}

void Completion::saturate(Outcome& outcome, const RunOptions& options) {
    while (true) {
        CompletionBatch transitive = find_transitive();
        CompletionBatch inverse = find_inverse();
        if (transitive.empty() && inverse.empty()) return;
        stats_.transitive_edges += transitive.size();
        stats_.inverse_edges += inverse.size();
        ++stats_.epsilon_rounds;
        CompletionBatch batch = std::move(transitive);
        batch.insert(batch.end(), inverse.begin(), inverse.end());
        apply(batch);
        check(options);
        if (options.record_trace)
            outcome.trace.push_back({TraceEvent::Kind::Epsilon, std::move(batch), std::nullopt});
    }
}

std::uint32_t Completion::bound() const {
    std::uint32_t best = 0;
    for (Symbol c = 0; c < alphabet_.size(); ++c) {
        for (const auto& [p, q, w] : aut_.letter_relation(ExtLetter::plain(c)).to_edges()) {
            if (!w.is_val())
                throw engine_error("plain letter carries a non-finite weight");
            best = std::max(best, w.height());
        }
    }
    return best;
}

Outcome Completion::run(const RunOptions& options) {
    Outcome outcome;
    check(options);
    saturate(outcome, options);
    while (true) {
        auto violation = find_rewrite();
        if (!violation) {
            outcome.status = Outcome::Status::Success;
            break;
        }
        if (stats_.steps >= limits_.max_steps) {
            outcome.status = Outcome::Status::LimitSteps;
            break;
        }
        if (auto h = path_height_for(*violation); h && *h > limits_.max_height) {
            outcome.status = Outcome::Status::LimitHeight;
            break;
        }
        if (state_count() + fresh_states_for(*violation) > limits_.max_states) {
            outcome.status = Outcome::Status::LimitStates;
            break;
        }
        CompletionBatch batch = make_rewrite_path(*violation);
        if (batch.empty())
            throw engine_error("rewrite violation with an already-satisfied repair path");
        ++stats_.steps;
        ++stats_.rewrite_firings;
        apply(batch);
        check(options);
        if (options.record_trace)
            outcome.trace.push_back({TraceEvent::Kind::Rewrite, std::move(batch), *violation});
        if (options.progress)
            options.progress({stats_.steps, state_count(), bound()});
        saturate(outcome, options);
    }
    outcome.bound = bound();
    stats_.states = state_count();
    stats_.edges = aut_.base_entry_count();
    outcome.stats = stats_;
    return outcome;
}

} // namespace semirel
