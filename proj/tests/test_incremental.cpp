#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "semirel/incremental.hpp"

using namespace semirel;

namespace {

Word w(const std::string& letters) {
    Word out;
    for (char ch : letters) out.push_back(ExtLetter::plain(static_cast<Symbol>(ch - 'a')));
    return out;
}

template <Semiring S>
Edge<S> edge(NodeId from, char letter, NodeId to, typename S::Value weight) {
    return {from, ExtLetter::plain(static_cast<Symbol>(letter - 'a')), to, weight};
}

using BoolAut = IncrementalAutomaton<BoolSemiring>;
using FuzzyAut = IncrementalAutomaton<FuzzySemiring>;

} // namespace

TEST_CASE("init computes products from base edges") {
    auto a = BoolAut::init({w("ab")},
                           {edge<BoolSemiring>(1, 'a', 2, true),
                            edge<BoolSemiring>(2, 'b', 3, true)});
    CHECK(a.query(w("ab"), 1, 3));
    CHECK(!a.query(w("ab"), 1, 2));
    CHECK(a.relation(w("ab")).size() == 1);

    auto empty = BoolAut::init({w("ab")}, {});
    CHECK(empty.relation(w("ab")).empty());
}

TEST_CASE("init with the lambda letter") {
    Word ll{ExtLetter::lambda(), ExtLetter::lambda()};
    EdgeBatch<BoolSemiring> base{{1, ExtLetter::lambda(), 1, true}};
    auto a = BoolAut::init({ll}, base);
    CHECK(a.query(ll, 1, 1));
}

TEST_CASE("query rejects unregistered words") {
    auto a = BoolAut::init({w("ab")}, {edge<BoolSemiring>(1, 'a', 2, true)});
    CHECK_THROWS_AS(a.query(w("ba"), 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(BoolAut::init({}, {}), std::invalid_argument);
}

TEST_CASE("apply_delta extends an existing path") {
    auto a = BoolAut::init({w("ab")}, {edge<BoolSemiring>(1, 'a', 2, true)});
    CHECK(a.relation(w("ab")).empty());
    SweepStats stats;
    auto b = a.apply_delta({edge<BoolSemiring>(2, 'b', 3, true)}, &stats);
    CHECK(b.query(w("ab"), 1, 3));
    // only the A(a) * delta(b) term can contribute here
    CHECK(stats.multiplications == 1);
    // the old snapshot is untouched
    CHECK(!a.letter_relation(ExtLetter::plain(1)).lookup(2, 3));
}

TEST_CASE("empty delta changes nothing") {
    auto a = BoolAut::init({w("ab")}, {edge<BoolSemiring>(1, 'a', 2, true)});
    SweepStats stats;
    auto b = a.apply_delta({}, &stats);
    CHECK(b.equal_products(a));
    CHECK(stats.changed_nodes == 0);
    CHECK(stats.delta_entries == 0);
}

TEST_CASE("re-adding an existing edge produces no delta") {
    auto a = BoolAut::init({w("ab")}, {edge<BoolSemiring>(1, 'a', 2, true)});
    SweepStats stats;
    auto b = a.apply_delta({edge<BoolSemiring>(1, 'a', 2, true)}, &stats);
    CHECK(stats.changed_nodes == 0);
    CHECK(b.equal_products(a));
}

TEST_CASE("fuzzy delta agrees with full recomputation") {
    auto a = FuzzyAut::init({w("aa")}, {edge<FuzzySemiring>(1, 'a', 1, Fuzzy::of(0))});
    auto b = a.apply_delta({edge<FuzzySemiring>(1, 'a', 2, Fuzzy::of(1)),
                            edge<FuzzySemiring>(2, 'a', 1, Fuzzy::of(1))});
    CHECK(b.equal_products(b.recompute_full()));
    // frozen from enumerating all two-step paths by hand
    const auto& aa = b.relation(w("aa"));
    CHECK(aa.lookup(1, 1) == Fuzzy::of(1));
    CHECK(aa.lookup(1, 2) == Fuzzy::of(0));
    CHECK(aa.lookup(2, 1) == Fuzzy::of(0));
    CHECK(aa.lookup(2, 2) == Fuzzy::of(1));
    CHECK(aa.size() == 4);
}

TEST_CASE("recompute_full is idempotent on a fresh automaton") {
    auto a = FuzzyAut::init({w("abab"), w("ba")},
                            {edge<FuzzySemiring>(1, 'a', 2, Fuzzy::of(2)),
                             edge<FuzzySemiring>(2, 'b', 1, Fuzzy::of(1))});
    CHECK(a.equal_products(a.recompute_full()));
}

namespace {

template <Semiring S, typename WeightGen>
void oracle_rounds(int rounds, int seed, WeightGen&& gen) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> node(1, 20);
    std::uniform_int_distribution<int> letter(0, 2);
    std::uniform_int_distribution<int> word_len(1, 5);
    std::uniform_int_distribution<int> word_count(1, 6);
    std::uniform_int_distribution<int> batch_count(1, 8);
    std::uniform_int_distribution<int> batch_size(1, 6);

    for (int round = 0; round < rounds; ++round) {
        std::vector<Word> words;
        int wc = word_count(rng);
        for (int i = 0; i < wc; ++i) {
            Word word;
            int wl = word_len(rng);
            for (int j = 0; j < wl; ++j)
                word.push_back(ExtLetter::plain(static_cast<Symbol>(letter(rng))));
            words.push_back(word);
        }
        auto make_batch = [&] {
            EdgeBatch<S> batch;
            int n = batch_size(rng);
            for (int i = 0; i < n; ++i)
                batch.push_back({static_cast<NodeId>(node(rng)),
                                 ExtLetter::plain(static_cast<Symbol>(letter(rng))),
                                 static_cast<NodeId>(node(rng)), gen(rng)});
            return batch;
        };

        auto aut = IncrementalAutomaton<S>::init(words, make_batch());
        int batches = batch_count(rng);
        for (int b = 0; b < batches; ++b) {
            auto old_products = aut;
            aut = aut.apply_delta(make_batch());
            REQUIRE(aut.equal_products(aut.recompute_full()));
            // monotone: entries never disappear, weights only grow
            for (const auto& [word, id] : aut.chain().query_index()) {
                for (const auto& [p, q, v] : old_products.relation(word).to_edges()) {
                    auto now = aut.relation(word).lookup(p, q);
                    CHECK(S::eq(S::plus(now, v), now));
                }
            }
        }
    }
}

} // namespace

TEST_CASE("randomized oracle: apply_delta equals recompute_full") {
    oracle_rounds<BoolSemiring>(25, 1201, [](std::mt19937&) { return true; });
    oracle_rounds<FuzzySemiring>(25, 1202, [](std::mt19937& rng) {
        std::uniform_int_distribution<int> h(-3, 5);
        return Fuzzy::of(h(rng));
    });
}

TEST_CASE("parallel sweep matches the serial reference exactly") {
    std::mt19937 rng(1203);
    std::uniform_int_distribution<int> node(1, 15);
    std::uniform_int_distribution<int> letter(0, 2);
    std::uniform_int_distribution<int> h(-3, 5);

    std::vector<Word> words{w("abc"), w("abab"), w("cba"), w("aa"), w("bcb")};
    auto make_batch = [&] {
        EdgeBatch<FuzzySemiring> batch;
        for (int i = 0; i < 5; ++i)
            batch.push_back({static_cast<NodeId>(node(rng)),
                             ExtLetter::plain(static_cast<Symbol>(letter(rng))),
                             static_cast<NodeId>(node(rng)), Fuzzy::of(h(rng))});
        return batch;
    };

    auto base = make_batch();
    std::vector<EdgeBatch<FuzzySemiring>> deltas;
    for (int i = 0; i < 10; ++i) deltas.push_back(make_batch());

    auto serial = FuzzyAut::init(words, base, ExecMode::Serial);
    auto parallel = FuzzyAut::init(words, base, ExecMode::Parallel);
    CHECK(parallel.equal_products(serial));
    for (const auto& d : deltas) {
        serial = serial.apply_delta(d);
        parallel = parallel.apply_delta(d);
        REQUIRE(parallel.equal_products(serial));
    }
}

TEST_CASE("sweep stats bound the genuinely changed entries") {
    auto a = FuzzyAut::init({w("ab"), w("abb")},
                            {edge<FuzzySemiring>(1, 'a', 2, Fuzzy::of(1)),
                             edge<FuzzySemiring>(2, 'b', 3, Fuzzy::of(1)),
                             edge<FuzzySemiring>(3, 'b', 4, Fuzzy::of(1))});
    SweepStats stats;
    auto b = a.apply_delta({edge<FuzzySemiring>(2, 'b', 5, Fuzzy::of(2))}, &stats);
    for (const auto& [id, delta_size] : stats.node_delta_sizes) {
        // delta size equals the number of entries that differ between the
        // snapshots at that node
        std::size_t changed = diff(b.node_relation(id), a.node_relation(id)).size();
        CHECK(delta_size == changed);
    }
    CHECK(stats.changed_nodes > 0);
}
