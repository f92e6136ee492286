#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "semirel/semiring.hpp"

using namespace semirel;

TEST_CASE("fuzzy plus is max under the total order") {
    CHECK(fuzzy_plus(Fuzzy::of(3), Fuzzy::of(5)) == Fuzzy::of(5));
    CHECK(fuzzy_plus(Fuzzy::neg_inf(), Fuzzy::of(7)) == Fuzzy::of(7));
    CHECK(fuzzy_plus(Fuzzy::pos_inf(), Fuzzy::of(7)) == Fuzzy::pos_inf());
}

TEST_CASE("fuzzy times is min") {
    CHECK(fuzzy_times(Fuzzy::of(3), Fuzzy::of(5)) == Fuzzy::of(3));
    CHECK(fuzzy_times(Fuzzy::pos_inf(), Fuzzy::of(7)) == Fuzzy::of(7));
    CHECK(fuzzy_times(Fuzzy::neg_inf(), Fuzzy::of(7)) == Fuzzy::neg_inf());
}

TEST_CASE("fuzzy order and construction") {
    CHECK(Fuzzy::neg_inf() < Fuzzy::of(-1000000));
    CHECK(Fuzzy::of(-1) < Fuzzy::of(0));
    CHECK(Fuzzy::of(0) < Fuzzy::pos_inf());
    CHECK(Fuzzy::of(42).value() == 42);
    CHECK_THROWS_AS(Fuzzy::of(std::numeric_limits<std::int64_t>::max()), engine_error);
    CHECK_THROWS_AS(Fuzzy::of(std::numeric_limits<std::int64_t>::min()), engine_error);
    CHECK_THROWS_AS(Fuzzy::neg_inf().value(), engine_error);
}

TEST_CASE("boolean semiring satisfies the laws") {
    const bool samples[] = {false, true};
    CHECK(check_semiring_laws<BoolSemiring>(samples).empty());
}

TEST_CASE("natural semiring satisfies the laws") {
    std::vector<std::uint64_t> samples{0, 1, 2, 3, 7};
    CHECK(check_semiring_laws<NatSemiring>(samples).empty());
}

TEST_CASE("fuzzy semiring satisfies the laws") {
    std::vector<Fuzzy> samples{Fuzzy::neg_inf(), Fuzzy::of(-1), Fuzzy::of(0), Fuzzy::of(2),
                               Fuzzy::pos_inf()};
    CHECK(check_semiring_laws<FuzzySemiring>(samples).empty());
}

TEST_CASE("boolean and fuzzy addition is idempotent") {
    for (bool a : {false, true}) CHECK(BoolSemiring::plus(a, a) == a);
    for (Fuzzy a : {Fuzzy::neg_inf(), Fuzzy::of(-3), Fuzzy::of(0), Fuzzy::pos_inf()})
        CHECK(FuzzySemiring::plus(a, a) == a);
}

namespace {

// Deliberately broken instance: plus is max, times shifts and halves, so
// identities, annihilation and distributivity all fail somewhere.
struct BrokenSemiring {
    using Value = std::uint64_t;
    static Value zero() { return 0; }
    static Value one() { return 1; }
    static Value plus(Value a, Value b) { return std::max(a, b); }
    static Value times(Value a, Value b) { return (a + b + 2) / 2; }
    static bool eq(Value a, Value b) { return a == b; }
    static std::string show(Value a) { return std::to_string(a); }
};

} // namespace

TEST_CASE("law checker detects a broken instance") {
    std::vector<std::uint64_t> samples{0, 1, 2, 3, 5};
    auto report = check_semiring_laws<BrokenSemiring>(samples);
    REQUIRE(!report.empty());
    bool saw_annihilation = false;
    for (const auto& v : report)
        if (v.law == "zero-annihilates") saw_annihilation = true;
    CHECK(saw_annihilation);
}
