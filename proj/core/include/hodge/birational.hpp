#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodge/blowup.hpp"
#include "hodge/model.hpp"

namespace hodge {

enum class StepDirection { BlowUp, BlowDown };

/// One step of a weak-factorization script. Centers are full models; the same
/// center may recur across steps since only its invariants matter here.
struct FactorizationStep {
    StepDirection direction = StepDirection::BlowUp;
    ManifoldModel center;
};

struct FactorizationScript {
    std::string name;
    ManifoldModel start;
    std::vector<FactorizationStep> steps;
};

struct ScriptRun {
    ManifoldModel final;
    std::vector<ManifoldModel> trace;  // start, X1, ..., Xl
};

/// Comparison of the quantities that must agree on bimeromorphically
/// equivalent models: the h[p][0] row, the h[0][q] column, b1 and b2 - h11.
struct InvariantAuditReport {
    enum class Status { Equal, Different, Unknown };

    struct Entry {
        std::string invariant;
        std::optional<int> left;
        std::optional<int> right;
        Status status = Status::Unknown;
    };

    std::vector<Entry> entries;

    // No entry disagrees; entries undecidable for lack of Betti data pass.
    bool all_equal() const;
};

/// BlowUp delegates to blow_up. BlowDown inverts it: subtracts the center's
/// shifted contributions entrywise and fails if any entry (Hodge or Betti)
/// would go negative or the result fails validation -- the script then does
/// not describe a factorization.
ManifoldModel apply_step(const ManifoldModel& current, const FactorizationStep& step,
                         const BlowUpOptions& opts = {});

/// Folds apply_step over the script. The first inapplicable step aborts with
/// a StepError carrying its index.
ScriptRun run_script(const FactorizationScript& script, const BlowUpOptions& opts = {});

/// #blow-ups - #blow-downs. Requires every center connected and the script
/// valid; equals the h11 (and b2) difference between the endpoints.
int count_delta(const FactorizationScript& script);

InvariantAuditReport invariant_audit(const ManifoldModel& a, const ManifoldModel& b);

}  // namespace hodge
