#include <doctest.h>

#include <algorithm>
#include <set>

#include "hodge/builtins.hpp"
#include "hodge/diamond.hpp"
#include "support/generators.hpp"

using namespace hodge;

namespace {

const HodgeDiamond kPoint(0, {{1}});
const HodgeDiamond kGenus2(1, {{1, 2}, {2, 1}});

std::multiset<int> entry_multiset(const HodgeDiamond& d) {
    std::multiset<int> out;
    for (const auto& row : d.entries())
        for (int v : row) out.insert(v);
    return out;
}

}  // namespace

TEST_CASE("shift identity and forced placements") {
    CHECK(shift(kPoint, 0, 0) == kPoint);

    const HodgeDiamond moved = shift(kPoint, 1, 3);
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) CHECK(moved.at(p, q) == ((p == 1 && q == 1) ? 1 : 0));

    const HodgeDiamond curve_shift = shift(kGenus2, 1, 3);
    CHECK(curve_shift.at(1, 1) == 1);
    CHECK(curve_shift.at(2, 1) == 2);
    CHECK(curve_shift.at(1, 2) == 2);
    CHECK(curve_shift.at(2, 2) == 1);
    CHECK(curve_shift.total() == kGenus2.total());
}

TEST_CASE("shift preserves the entry multiset") {
    testgen::Rng rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = testgen::rand_int(rng, 0, 4);
        const int i = testgen::rand_int(rng, 0, 3);
        const int target = n + i + testgen::rand_int(rng, 0, 2);
        const HodgeDiamond d = testgen::random_diamond(rng, n, 9, {.connected = false});
        const HodgeDiamond s = shift(d, i, target);
        CHECK(s.total() == d.total());
        // nonzero entries are a sub-multiset placed along the shifted block
        auto before = entry_multiset(d);
        auto after = entry_multiset(s);
        before.erase(0);
        after.erase(0);
        CHECK(before == after);
    }
    CHECK_THROWS_AS(shift(kGenus2, 2, 2), DimensionError);
}

TEST_CASE("direct_sum identity, commutativity, associativity") {
    const HodgeDiamond zero(1);
    CHECK(direct_sum(kGenus2, zero) == kGenus2);

    const HodgeDiamond cp2 = projective_space(2).diamond;
    const HodgeDiamond doubled = direct_sum(cp2, cp2);
    CHECK(doubled.at(0, 0) == 2);
    CHECK(doubled.at(1, 1) == 2);
    CHECK(doubled.at(2, 2) == 2);
    CHECK(doubled.at(1, 0) == 0);

    testgen::Rng rng(102);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = testgen::rand_int(rng, 0, 4);
        const auto a = testgen::random_diamond(rng, n, 9, {.connected = false});
        const auto b = testgen::random_diamond(rng, n, 9, {.connected = false});
        const auto c = testgen::random_diamond(rng, n, 9, {.connected = false});
        CHECK(direct_sum(a, b) == direct_sum(b, a));
        CHECK(direct_sum(direct_sum(a, b), c) == direct_sum(a, direct_sum(b, c)));
    }

    CHECK_THROWS_AS(direct_sum(kGenus2, cp2), DimensionError);
}

TEST_CASE("serre symmetry predicate") {
    CHECK(serre_symmetric(projective_space(3).diamond));
    CHECK(serre_symmetric(kGenus2));

    auto rows = projective_space(3).diamond.entries();
    rows[1][0] = 2;
    rows[2][3] = 1;
    CHECK_FALSE(serre_symmetric(HodgeDiamond(3, std::move(rows))));

    testgen::Rng rng(103);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = testgen::rand_int(rng, 1, 4);
        const auto a = testgen::random_diamond(rng, n, 9, {.serre = true, .connected = false});
        const auto b = testgen::random_diamond(rng, n, 9, {.serre = true, .connected = false});
        CHECK(serre_symmetric(a));
        CHECK(serre_symmetric(direct_sum(a, b)));
    }
}

TEST_CASE("euler characteristics") {
    // chi_p = sum_q (-1)^q h[p][q]; on CP2 the lone 1 in row p sits at q = p
    CHECK(euler_p(projective_space(2).diamond) == std::vector<int>{1, -1, 1});
    CHECK(euler_p(kGenus2) == std::vector<int>{-1, 1});
    CHECK(euler_p(HodgeDiamond(2)) == std::vector<int>{0, 0, 0});

    CHECK(topological_euler(projective_space(3).betti.value()) == 4);
    CHECK(topological_euler(BettiVector(1, {1, 4, 1})) == -2);
    CHECK(topological_euler(BettiVector(0, {1})) == 1);
}

TEST_CASE("anti-diagonal sums") {
    const HochschildDims cp2 = anti_diagonal_sums(projective_space(2).diamond);
    for (int k = -2; k <= 2; ++k) CHECK(cp2.at(k) == (k == 0 ? 3 : 0));

    const HochschildDims g2 = anti_diagonal_sums(kGenus2);
    CHECK(g2.at(-1) == 2);
    CHECK(g2.at(0) == 2);
    CHECK(g2.at(1) == 2);

    CHECK(anti_diagonal_sums(kPoint).at(0) == 1);

    testgen::Rng rng(104);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = testgen::rand_int(rng, 0, 5);
        const auto d = testgen::random_diamond(rng, n, 9, {.connected = false});
        const auto hh = anti_diagonal_sums(d);
        long long total = 0;
        for (int v : hh.dims) total += v;
        CHECK(total == d.total());
    }
}

TEST_CASE("defect vector constructors") {
    CHECK_THROWS_AS(DefectVector(1, {0, -1, 0}), ValidationError);
    const DefectVector bypass = DefectVector::unchecked(1, {0, -1, 0});
    CHECK(bypass.at(1) == -1);
    CHECK_FALSE(bypass.is_zero());

    const DefectVector zero(1, {0, 0, 0});
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.first_positive().has_value());

    const DefectVector d(2, {0, 1, 0, 2, 0});
    CHECK(d.first_positive() == 1);
}

TEST_CASE("value type bounds") {
    CHECK(kGenus2.at(-1, 0) == 0);
    CHECK(kGenus2.at(0, 5) == 0);
    CHECK_THROWS_AS(HodgeDiamond(1, {{1, 2}, {2, -1}}), ValidationError);
    CHECK_THROWS_AS(HodgeDiamond(1, {{1, 2}}), ValidationError);
    CHECK_THROWS_AS(BettiVector(1, {1, 2}), ValidationError);
    CHECK_THROWS_AS(BettiVector(1, {1, -2, 1}), ValidationError);
    CHECK(BettiVector(1, {1, 4, 1}).at(-2) == 0);
    CHECK(BettiVector(1, {1, 4, 1}).at(3) == 0);
}
