#include "hodge/birational.hpp"

namespace hodge {

namespace {

// Inverse of the tri-state conjunction w = x AND z, solved for x given w, z.
// w = true with z = false has no solution: the claimed blow-up cannot exist.
std::optional<bool> tri_and_invert(std::optional<bool> whole, std::optional<bool> part, const char* what) {
    if (whole && *whole) {
        if (part && !*part)
            throw PreconditionError(std::string("blow-down inconsistent: the current model satisfies ") + what +
                                    " but the center does not");
        return true;
    }
    if (whole && !*whole && part && *part) return false;
    return std::nullopt;
}

ManifoldModel blow_down(const ManifoldModel& current, const ManifoldModel& center_raw,
                        const BlowUpOptions& opts) {
    (void)opts;
    const ManifoldModel center = normalized(center_raw);
    const int n = current.dim;
    const int r = n - center.dim;
    if (r == 1)
        throw CodimensionError(
            "codimension must be >= 2: a codimension-1 center changes nothing at this level");
    if (r < 2)
        throw CodimensionError("codimension must be >= 2, got " + std::to_string(r));

    ManifoldModel out;
    out.name = "Bl^-1_" + center.name + "(" + current.name + ")";
    out.dim = n;
    out.connected = current.connected;

    std::vector<std::vector<int>> h(static_cast<std::size_t>(n) + 1,
                                    std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            int acc = current.diamond.at(p, q);
            for (int i = 1; i <= r - 1; ++i) acc -= center.diamond.at(p - i, q - i);
            if (acc < 0)
                throw PreconditionError("blow-down inapplicable: h[" + std::to_string(p) + "][" +
                                        std::to_string(q) + "] would become " + std::to_string(acc));
            h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = acc;
        }
    out.diamond = HodgeDiamond(n, std::move(h));

    const auto b_cur = effective_betti(current);
    const auto b_z = effective_betti(center);
    if (b_cur && b_z) {
        std::vector<int> b(static_cast<std::size_t>(2 * n) + 1, 0);
        for (int k = 0; k <= 2 * n; ++k) {
            int acc = b_cur->at(k);
            for (int l = 1; l <= r - 1; ++l) acc -= b_z->at(k - 2 * l);
            if (acc < 0)
                throw PreconditionError("blow-down inapplicable: b[" + std::to_string(k) + "] would become " +
                                        std::to_string(acc));
            b[static_cast<std::size_t>(k)] = acc;
        }
        out.betti = BettiVector(n, std::move(b));
        out.betti_derived = current.betti_derived || center.betti_derived || !current.betti.has_value() ||
                            !center.betti.has_value();
    }

    // The blown-down model is only constrained by the iff-statements for
    // degeneracy and the ddbar-lemma; kaehler-ness does not descend.
    out.flags.fujiki = current.flags.fujiki;
    out.flags.e1_degenerate =
        tri_and_invert(current.flags.e1_degenerate, center.flags.e1_degenerate, "E1-degeneracy");
    out.flags.ddbar = tri_and_invert(current.flags.ddbar, center.flags.ddbar, "the ddbar-lemma");
    out.provenance.push_back("blow-down of '" + current.name + "' along '" + center.name +
                             "'; contractibility is assumed, not derivable from dimension data");

    try {
        return normalized(std::move(out));
    } catch (const ValidationError& e) {
        throw PreconditionError(std::string("blow-down produces an invalid model: ") + e.what());
    }
}

}  // namespace

bool InvariantAuditReport::all_equal() const {
    for (const auto& entry : entries)
        if (entry.status == Status::Different) return false;
    return true;
}

ManifoldModel apply_step(const ManifoldModel& current, const FactorizationStep& step,
                         const BlowUpOptions& opts) {
    if (step.direction == StepDirection::BlowUp) return blow_up(BlowUpSpec(current, step.center), opts);
    return blow_down(current, step.center, opts);
}

ScriptRun run_script(const FactorizationScript& script, const BlowUpOptions& opts) {
    ScriptRun run;
    run.trace.push_back(normalized(script.start));
    for (std::size_t i = 0; i < script.steps.size(); ++i) {
        try {
            run.trace.push_back(apply_step(run.trace.back(), script.steps[i], opts));
        } catch (const Error& e) {
            const auto& step = script.steps[i];
            throw StepError("script '" + script.name + "' step " + std::to_string(i) + " (" +
                                (step.direction == StepDirection::BlowUp ? "blowup" : "blowdown") + " along '" +
                                step.center.name + "') failed: " + e.what(),
                            i);
        }
    }
    run.final = run.trace.back();
    return run;
}

int count_delta(const FactorizationScript& script) {
    for (std::size_t i = 0; i < script.steps.size(); ++i)
        if (!script.steps[i].center.connected)
            throw PreconditionError("count_delta: step " + std::to_string(i) + " center '" +
                                    script.steps[i].center.name + "' is not connected");
    run_script(script);  // validates applicability
    int delta = 0;
    for (const auto& step : script.steps) delta += (step.direction == StepDirection::BlowUp) ? 1 : -1;
    return delta;
}

InvariantAuditReport invariant_audit(const ManifoldModel& a, const ManifoldModel& b) {
    if (a.dim != b.dim)
        throw DimensionError("invariant_audit: dimension mismatch (" + std::to_string(a.dim) + " vs " +
                             std::to_string(b.dim) + ")");
    InvariantAuditReport report;
    auto add_known = [&report](std::string name, int left, int right) {
        report.entries.push_back({std::move(name), left, right,
                                  left == right ? InvariantAuditReport::Status::Equal
                                                : InvariantAuditReport::Status::Different});
    };

    for (int p = 0; p <= a.dim; ++p) add_known("h[" + std::to_string(p) + "][0]", a.h(p, 0), b.h(p, 0));
    for (int q = 0; q <= a.dim; ++q) add_known("h[0][" + std::to_string(q) + "]", a.h(0, q), b.h(0, q));

    const auto ba = effective_betti(a);
    const auto bb = effective_betti(b);
    if (ba && bb) {
        add_known("b1", ba->at(1), bb->at(1));
        add_known("b2 - h[1][1]", ba->at(2) - a.h(1, 1), bb->at(2) - b.h(1, 1));
    } else {
        report.entries.push_back({"b1", ba ? std::optional<int>(ba->at(1)) : std::nullopt,
                                  bb ? std::optional<int>(bb->at(1)) : std::nullopt,
                                  InvariantAuditReport::Status::Unknown});
        report.entries.push_back({"b2 - h[1][1]",
                                  ba ? std::optional<int>(ba->at(2) - a.h(1, 1)) : std::nullopt,
                                  bb ? std::optional<int>(bb->at(2) - b.h(1, 1)) : std::nullopt,
                                  InvariantAuditReport::Status::Unknown});
    }
    return report;
}

}  // namespace hodge
