#include "hodge/spectral.hpp"

namespace hodge {

namespace {

BettiVector require_betti(const ManifoldModel& m) {
    auto b = effective_betti(m);
    if (!b)
        throw BettiRequiredError("Betti data required: model '" + m.name +
                                 "' has none and e1_degenerate is not set");
    return *b;
}

}  // namespace

DefectVector frolicher_defect(const ManifoldModel& m) {
    const BettiVector b = require_betti(m);
    const BettiVector row_sums = betti_from_diamond(m.diamond);
    std::vector<int> d(static_cast<std::size_t>(2 * m.dim) + 1, 0);
    for (int k = 0; k <= 2 * m.dim; ++k) d[static_cast<std::size_t>(k)] = row_sums.at(k) - b.at(k);
    return DefectVector(m.dim, std::move(d));
}

DegeneracyReport degenerates_at_E1(const ManifoldModel& m) {
    DegeneracyReport report;
    report.model_name = m.name;
    report.defect = frolicher_defect(m);
    report.first_failing_k = report.defect.first_positive();
    report.degenerate = !report.first_failing_k.has_value();
    return report;
}

bool check_defect_identity(const BlowUpSpec& spec, const ManifoldModel& result) {
    const DefectVector dx = frolicher_defect(spec.ambient());
    const DefectVector dz = frolicher_defect(spec.center());
    const DefectVector dres = frolicher_defect(result);
    const int r = spec.codim();
    for (int k = 0; k <= 2 * result.dim; ++k) {
        int rhs = dx.at(k);
        for (int l = 1; l <= r - 1; ++l) rhs += dz.at(k - 2 * l);
        if (dres.at(k) != rhs) return false;
    }
    return true;
}

DegeneracyTriple propagate_degeneracy(const BlowUpSpec& spec) {
    DegeneracyTriple verdicts;
    verdicts.ambient = degenerates_at_E1(spec.ambient()).degenerate;
    verdicts.center = degenerates_at_E1(spec.center()).degenerate;
    verdicts.blow_up = degenerates_at_E1(blow_up(spec)).degenerate;
    return verdicts;
}

bool ddbar_necessary(const ManifoldModel& m) {
    return degenerates_at_E1(m).degenerate && hodge_symmetric(m.diamond);
}

}  // namespace hodge
