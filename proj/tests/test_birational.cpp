#include <doctest.h>

#include "hodge/birational.hpp"
#include "hodge/builtins.hpp"
#include "support/generators.hpp"

using namespace hodge;

namespace {

FactorizationStep up(ManifoldModel center) { return {StepDirection::BlowUp, std::move(center)}; }
FactorizationStep down(ManifoldModel center) { return {StepDirection::BlowDown, std::move(center)}; }

}  // namespace

TEST_CASE("apply_step: blow-up then blow-down restores the model") {
    const ManifoldModel cp3 = projective_space(3);
    const ManifoldModel blown = apply_step(cp3, up(point_model()));
    CHECK(blown.h(1, 1) == 2);
    CHECK(blown.h(2, 2) == 2);

    const ManifoldModel back = apply_step(blown, down(point_model()));
    CHECK(back.diamond == cp3.diamond);
    CHECK(back.betti == cp3.betti);
}

TEST_CASE("apply_step: infeasible blow-down") {
    // CP3 has h[1][2] = h[2][1] = 0; removing a genus-1 curve must subtract 1
    // from both, and the first offender in row-major order is reported
    CHECK_THROWS_WITH_AS(apply_step(projective_space(3), down(curve(1))),
                         doctest::Contains("h[1][2] would become -1"), PreconditionError);
}

TEST_CASE("blow-up/blow-down inverse on random models") {
    testgen::Rng rng(401);
    for (int trial = 0; trial < 40; ++trial) {
        const int nz = testgen::rand_int(rng, 0, 2);
        const int r = testgen::rand_int(rng, 2, 4);
        const auto z = testgen::random_model_with_betti(rng, "Z", nz, 6, 2);
        const auto x = testgen::random_model_with_betti(rng, "X", nz + r, 6, 2);
        const auto there = apply_step(x, up(z));
        const auto back = apply_step(there, down(z));
        CHECK(back.diamond == x.diamond);
        CHECK(back.betti == x.betti);
    }
}

TEST_CASE("run_script traces and aborts") {
    FactorizationScript round_trip{"round_trip", projective_space(3), {up(point_model()), down(point_model())}};
    const ScriptRun run = run_script(round_trip);
    CHECK(run.trace.size() == 3);
    CHECK(run.final.diamond == projective_space(3).diamond);

    FactorizationScript twice{"twice", projective_space(3), {up(point_model()), up(point_model())}};
    const ScriptRun run2 = run_script(twice);
    CHECK(run2.final.h(1, 1) == 3);
    CHECK(run2.trace[0].h(1, 1) == 1);
    CHECK(run2.trace[1].h(1, 1) == 2);
    CHECK(run2.trace[2].h(1, 1) == 3);

    FactorizationScript empty{"empty", projective_space(3), {}};
    CHECK(run_script(empty).final.diamond == projective_space(3).diamond);

    FactorizationScript broken{"broken",
                               projective_space(3),
                               {up(point_model()), down(curve(1)), up(point_model())}};
    try {
        run_script(broken);
        FAIL("expected StepError");
    } catch (const StepError& e) {
        CHECK(e.step_index() == 1);
        CHECK(std::string(e.what()).find("step 1") != std::string::npos);
    }
}

TEST_CASE("count_delta") {
    const auto pt = point_model();
    FactorizationScript uud{"uud", projective_space(3), {up(pt), up(pt), down(pt)}};
    CHECK(count_delta(uud) == 1);

    FactorizationScript ud{"ud", projective_space(3), {up(pt), down(pt)}};
    CHECK(count_delta(ud) == 0);

    FactorizationScript empty{"empty", projective_space(3), {}};
    CHECK(count_delta(empty) == 0);

    ManifoldModel two_points;
    two_points.name = "2pt";
    two_points.dim = 0;
    two_points.connected = false;
    two_points.diamond = HodgeDiamond(0, {{2}});
    FactorizationScript disconnected{"disc", projective_space(3), {up(normalized(two_points))}};
    CHECK_THROWS_AS(count_delta(disconnected), PreconditionError);
}

TEST_CASE("count_delta matches the h11 and b2 movement") {
    testgen::Rng rng(402);
    for (int trial = 0; trial < 40; ++trial) {
        const auto start = (trial % 2 == 0) ? projective_space(testgen::rand_int(rng, 3, 5))
                                            : testgen::random_model_with_betti(rng, "S", 4, 6, 2);
        const FactorizationScript script = testgen::random_script(rng, start, 6);
        const ScriptRun run = run_script(script);
        const int delta = count_delta(script);
        CHECK(run.final.h(1, 1) - run.trace.front().h(1, 1) == delta);
        const auto b_start = effective_betti(run.trace.front());
        const auto b_final = effective_betti(run.final);
        REQUIRE(b_start.has_value());
        REQUIRE(b_final.has_value());
        CHECK(b_final->at(2) - b_start->at(2) == delta);
        CHECK(b_final->at(1) == b_start->at(1));
    }
}

TEST_CASE("invariant audit: blow-ups preserve the audit quantities") {
    const ManifoldModel cp3 = projective_space(3);
    const ManifoldModel blown = point_blow_up(cp3);
    const InvariantAuditReport report = invariant_audit(cp3, blown);
    CHECK(report.all_equal());
    CHECK(blown.h(1, 1) != cp3.h(1, 1));  // h11 moves and is deliberately not audited
    for (const auto& entry : report.entries) CHECK(entry.invariant.find("h[1][1]") != 0);

    CHECK_THROWS_AS(invariant_audit(cp3, projective_space(2)), DimensionError);
}

TEST_CASE("invariant audit over random scripts") {
    testgen::Rng rng(403);
    for (int trial = 0; trial < 30; ++trial) {
        const auto start = testgen::random_model_with_betti(rng, "S", testgen::rand_int(rng, 3, 5), 6, 2);
        const FactorizationScript script = testgen::random_script(rng, start, 6);
        const ScriptRun run = run_script(script);
        const InvariantAuditReport report = invariant_audit(run.trace.front(), run.final);
        CHECK(report.all_equal());
        for (const auto& entry : report.entries) CHECK(entry.status != InvariantAuditReport::Status::Unknown);
    }
}

TEST_CASE("invariant audit marks betti comparisons unknown when data is missing") {
    ManifoldModel a = projective_space(3);
    a.betti.reset();
    a.flags = {};
    ManifoldModel b = projective_space(3);
    const InvariantAuditReport report = invariant_audit(a, b);
    CHECK(report.all_equal());
    bool saw_unknown = false;
    for (const auto& entry : report.entries)
        saw_unknown = saw_unknown || entry.status == InvariantAuditReport::Status::Unknown;
    CHECK(saw_unknown);
}

TEST_CASE("minimal-model style fixture: equal h11 endpoints balance the script") {
    // Two models with equal h11 joined by a script: ups and downs must cancel.
    const auto pt = point_model();
    FactorizationScript script{"balanced", projective_space(4), {up(pt), up(pt), down(pt), down(pt)}};
    const ScriptRun run = run_script(script);
    CHECK(run.final.h(1, 1) == run.trace.front().h(1, 1));
    CHECK(count_delta(script) == 0);
}
