#pragma once

#include <optional>
#include <string>

#include "hodge/blowup.hpp"
#include "hodge/model.hpp"

namespace hodge {

/// Verdict on E1-degeneracy of the Frolicher spectral sequence, decided by
/// dimension counts: degenerate iff the defect vector vanishes.
struct DegeneracyReport {
    std::string model_name;
    DefectVector defect;
    bool degenerate = false;
    std::optional<int> first_failing_k;  // least k with defect[k] > 0
};

/// Verdicts for a blow-up and its two inputs; the first is always the
/// conjunction of the other two.
struct DegeneracyTriple {
    bool blow_up = false;
    bool ambient = false;
    bool center = false;
};

// d[k] = sum_{p+q=k} h[p][q] - b[k]. Throws BettiRequiredError when the model
// carries no Betti data and none is derivable from its flags.
DefectVector frolicher_defect(const ManifoldModel& m);

DegeneracyReport degenerates_at_E1(const ManifoldModel& m);

// The blow-up defect identity:
//   defect(result)[k] = defect(X)[k] + sum_{l=1}^{r-1} defect(Z)[k-2l]
// checked for every k in [0, 2n]. All three models need Betti data.
bool check_defect_identity(const BlowUpSpec& spec, const ManifoldModel& result);

// Computes the blow-up and reports degeneracy of all three models.
DegeneracyTriple propagate_degeneracy(const BlowUpSpec& spec);

// Necessary conditions for the ddbar-lemma: E1-degeneracy plus Hodge
// symmetry. A true result does NOT certify the lemma; user-asserted ddbar
// flags are kept separate from this check.
bool ddbar_necessary(const ManifoldModel& m);

}  // namespace hodge
