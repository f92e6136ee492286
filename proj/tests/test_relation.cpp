#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "semirel/relation.hpp"

using namespace semirel;

namespace {

Relation<FuzzySemiring> fz(std::initializer_list<std::tuple<NodeId, NodeId, int>> edges) {
    Relation<FuzzySemiring> r;
    for (const auto& [p, q, w] : edges) r.add(p, q, Fuzzy::of(w));
    return r;
}

auto fuzzy_max = [](const Fuzzy& a, const Fuzzy& b) { return fuzzy_plus(a, b); };
auto fuzzy_min = [](const Fuzzy& a, const Fuzzy& b) { return fuzzy_times(a, b); };

} // namespace

TEST_CASE("empty and identity") {
    Relation<FuzzySemiring> e;
    CHECK(e.lookup(1, 2) == Fuzzy::neg_inf());
    CHECK(e.empty());

    auto id = Relation<FuzzySemiring>::identity({1, 2}, Fuzzy::pos_inf());
    CHECK(id.lookup(1, 1) == Fuzzy::pos_inf());
    CHECK(id.lookup(1, 2) == Fuzzy::neg_inf());
    CHECK(id.size() == 2);
}

TEST_CASE("lookup, successors, predecessors") {
    auto r = fz({{1, 2, 3}});
    CHECK(r.lookup(1, 2) == Fuzzy::of(3));
    auto preds = r.predecessors(2);
    REQUIRE(preds.size() == 1);
    CHECK(preds.at(1) == Fuzzy::of(3));
    CHECK(r.successors(2).empty());
}

TEST_CASE("plus_with merges entrywise") {
    auto a = fz({{1, 2, 3}});
    auto b = fz({{1, 2, 5}});
    auto merged = plus_with<FuzzySemiring>(fuzzy_max, a, b);
    CHECK(merged.lookup(1, 2) == Fuzzy::of(5));
    CHECK(merged.size() == 1);

    auto c = fz({{2, 3, 4}});
    auto disjoint = plus_with<FuzzySemiring>(fuzzy_max, a, c);
    CHECK(disjoint.lookup(1, 2) == Fuzzy::of(3));
    CHECK(disjoint.lookup(2, 3) == Fuzzy::of(4));

    auto same = plus_with<FuzzySemiring>(fuzzy_max, a, Relation<FuzzySemiring>{});
    CHECK(equal(same, a));
}

TEST_CASE("plus_with drops entries combined to zero") {
    auto a = fz({{1, 2, 3}, {2, 3, 1}});
    auto b = fz({{1, 2, 5}});
    auto annihilate = [](const Fuzzy&, const Fuzzy&) { return Fuzzy::neg_inf(); };
    auto merged = plus_with<FuzzySemiring>(annihilate, a, b);
    CHECK(merged.lookup(1, 2) == Fuzzy::neg_inf());
    CHECK(merged.lookup(2, 3) == Fuzzy::of(1)); // only b's key overlapped
    CHECK(merged.size() == 1);
    CHECK(oracles::mirror_consistent(merged));
}

TEST_CASE("plus_with keeps argument order for the combiner") {
    // left-biased combiner: result must always come from the first relation
    auto left = [](const Fuzzy& a, const Fuzzy&) { return a; };
    auto small = fz({{1, 2, 1}});
    auto large = fz({{1, 2, 9}, {2, 3, 9}, {3, 4, 9}});
    CHECK(plus_with<FuzzySemiring>(left, small, large).lookup(1, 2) == Fuzzy::of(1));
    CHECK(plus_with<FuzzySemiring>(left, large, small).lookup(1, 2) == Fuzzy::of(9));
}

TEST_CASE("times_with follows two-step paths") {
    Relation<BoolSemiring> a;
    a.add(1, 2, true);
    Relation<BoolSemiring> b;
    b.add(2, 3, true);
    auto product = multiply(a, b);
    CHECK(product.lookup(1, 3));
    CHECK(product.size() == 1);

    auto with_empty = multiply(a, Relation<BoolSemiring>{});
    CHECK(with_empty.empty());
}

TEST_CASE("times_with aggregates parallel paths with plus") {
    // max(min(3,5), min(7,2)) = 3
    auto r = fz({{1, 2, 3}, {1, 3, 7}});
    auto s = fz({{2, 4, 5}, {3, 4, 2}});
    auto product = multiply(r, s);
    CHECK(product.lookup(1, 4) == Fuzzy::of(3));
    CHECK(product.size() == 1);
}

TEST_CASE("combine builds the outer product") {
    using Row = Relation<FuzzySemiring>::Row;
    Row col{{1, Fuzzy::of(3)}};
    Row row{{4, Fuzzy::of(5)}};
    auto r = combine<FuzzySemiring>(fuzzy_max, fuzzy_min, col, row);
    CHECK(r.lookup(1, 4) == Fuzzy::of(3));
    CHECK(r.size() == 1);

    Row col2{{1, Fuzzy::of(3)}, {2, Fuzzy::of(9)}};
    auto r2 = combine<FuzzySemiring>(fuzzy_max, fuzzy_min, col2, row);
    CHECK(r2.lookup(1, 4) == Fuzzy::of(3));
    CHECK(r2.lookup(2, 4) == Fuzzy::of(5));
    CHECK(oracles::mirror_consistent(r2));

    auto r3 = combine<FuzzySemiring>(fuzzy_max, fuzzy_min, Row{}, row);
    CHECK(r3.empty());
}

TEST_CASE("diff reports new and changed entries") {
    auto a = fz({{1, 2, 3}});
    CHECK(equal(diff(a, Relation<FuzzySemiring>{}), a));
    CHECK(diff(a, a).empty());
    auto b = fz({{1, 2, 5}});
    auto d = diff(b, a);
    CHECK(d.lookup(1, 2) == Fuzzy::of(5));
    CHECK(d.size() == 1);
}

TEST_CASE("mirror invariant holds under random construction") {
    std::mt19937 rng(7001);
    for (int i = 0; i < 50; ++i) {
        auto r = oracles::random_fuzzy_relation(rng, 10, 30);
        CHECK(oracles::mirror_consistent(r));
        auto s = oracles::random_fuzzy_relation(rng, 10, 30);
        CHECK(oracles::mirror_consistent(add(r, s)));
        CHECK(oracles::mirror_consistent(multiply(r, s)));
        CHECK(oracles::mirror_consistent(diff(r, s)));
    }
}

TEST_CASE("times_with agrees with the naive product") {
    std::mt19937 rng(7002);
    for (int i = 0; i < 60; ++i) {
        auto r = oracles::random_fuzzy_relation(rng, 15, 40);
        auto s = oracles::random_fuzzy_relation(rng, 15, 40);
        CHECK(equal(multiply(r, s), oracles::naive_multiply(r, s)));

        auto rb = oracles::random_bool_relation(rng, 15, 40);
        auto sb = oracles::random_bool_relation(rng, 15, 40);
        CHECK(equal(multiply(rb, sb), oracles::naive_multiply(rb, sb)));

        auto rn = oracles::random_nat_relation(rng, 15, 40);
        auto sn = oracles::random_nat_relation(rng, 15, 40);
        CHECK(equal(multiply(rn, sn), oracles::naive_multiply(rn, sn)));
    }
}

namespace {

// Relations over a fixed universe as semiring elements, for the law check.
struct RelFuzzySemiring {
    using Value = Relation<FuzzySemiring>;
    static const std::set<NodeId>& universe() {
        static const std::set<NodeId> u{1, 2, 3, 4};
        return u;
    }
    static Value zero() { return {}; }
    static Value one() { return Value::identity(universe(), Fuzzy::pos_inf()); }
    static Value plus(const Value& a, const Value& b) { return semirel::add(a, b); }
    static Value times(const Value& a, const Value& b) { return multiply(a, b); }
    static bool eq(const Value& a, const Value& b) { return equal(a, b); }
    static std::string show(const Value& v) {
        std::string out = "{";
        for (const auto& [p, q, w] : v.to_edges())
            out += "(" + std::to_string(p) + "," + std::to_string(q) + "):" + w.show() + " ";
        return out + "}";
    }
};

} // namespace

TEST_CASE("relations over an idempotent semiring form a semiring") {
    std::mt19937 rng(7003);
    std::vector<Relation<FuzzySemiring>> samples{RelFuzzySemiring::zero(),
                                                 RelFuzzySemiring::one()};
    for (int i = 0; i < 5; ++i) samples.push_back(oracles::random_fuzzy_relation(rng, 4, 6));
    CHECK(check_semiring_laws<RelFuzzySemiring>(samples).empty());
    for (const auto& r : samples)
        CHECK(equal(semirel::add(r, r), r)); // idempotent addition carries over
}
