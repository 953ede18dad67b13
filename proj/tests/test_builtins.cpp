#include <doctest.h>

#include "hodge/builtins.hpp"
#include "hodge/spectral.hpp"

using namespace hodge;

TEST_CASE("projective spaces") {
    const ManifoldModel cp2 = projective_space(2);
    CHECK(cp2.diamond == HodgeDiamond(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(cp2.betti->values() == std::vector<int>{1, 0, 1, 0, 1});
    CHECK(cp2.flags.kaehler == true);
    CHECK(cp2.flags.fujiki == true);
    CHECK(cp2.flags.ddbar == true);
    CHECK(cp2.flags.e1_degenerate == true);

    for (int n = 0; n <= 16; ++n) {
        const ManifoldModel cpn = projective_space(n);
        CHECK(validation_issues(cpn).empty());
        CHECK(frolicher_defect(cpn).is_zero());
    }
    CHECK_THROWS_AS(projective_space(-1), PreconditionError);
}

TEST_CASE("curves") {
    const ManifoldModel g2 = curve(2);
    CHECK(g2.diamond == HodgeDiamond(1, {{1, 2}, {2, 1}}));
    CHECK(g2.betti->values() == std::vector<int>{1, 4, 1});
    CHECK(g2.flags.e1_degenerate == true);
    CHECK(frolicher_defect(g2).is_zero());
    CHECK_THROWS_AS(curve(-2), PreconditionError);
}

TEST_CASE("tori") {
    CHECK(torus(1).diamond == curve(1).diamond);
    CHECK(torus(1).betti == curve(1).betti);

    const ManifoldModel t2 = torus(2);
    CHECK(t2.diamond == HodgeDiamond(2, {{1, 2, 1}, {2, 4, 2}, {1, 2, 1}}));
    CHECK(t2.betti->values() == std::vector<int>{1, 4, 6, 4, 1});

    for (int n = 0; n <= 6; ++n) {
        CHECK(validation_issues(torus(n)).empty());
        CHECK(frolicher_defect(torus(n)).is_zero());
    }
    CHECK_THROWS_AS(torus(-1), PreconditionError);
}

TEST_CASE("point and synthetic") {
    const ManifoldModel pt = point_model();
    CHECK(pt.dim == 0);
    CHECK(pt.h(0, 0) == 1);
    CHECK(pt.betti->values() == std::vector<int>{1});

    const ManifoldModel s = synthetic("s", 1, HodgeDiamond(1, {{1, 3}, {3, 1}}), BettiVector(1, {1, 6, 1}));
    CHECK(s.name == "s");
    CHECK(s.flags.e1_degenerate == true);  // inferred from the data
    CHECK_THROWS_AS(synthetic("bad", 2, HodgeDiamond(1, {{1, 0}, {0, 1}})), ValidationError);
}

TEST_CASE("builtin dispatcher") {
    CHECK(builtin(BuiltinKind::Point).name == "point");
    CHECK(builtin(BuiltinKind::ProjectiveSpace, 3).diamond == projective_space(3).diamond);
    CHECK(builtin(BuiltinKind::Curve, 2).diamond == curve(2).diamond);
    CHECK(builtin(BuiltinKind::Torus, 2).diamond == torus(2).diamond);
}
