#include "hodge/model.hpp"

#include <sstream>

namespace hodge {

std::optional<bool> tri_and(std::optional<bool> a, std::optional<bool> b) {
    if ((a && !*a) || (b && !*b)) return false;
    if (a && b) return true;  // both known true here
    return std::nullopt;
}

namespace {

struct Inference {
    ManifoldModel model;
    std::vector<std::string> issues;

    void issue(const std::string& text) { issues.push_back(text); }

    // Strengthen an unknown flag; record a contradiction otherwise.
    void imply(std::optional<bool>& flag, const char* flag_name, const char* reason) {
        if (!flag) {
            flag = true;
        } else if (!*flag) {
            issue(std::string("flag contradiction: ") + reason + " requires " + flag_name + "=true, but " +
                  flag_name + "=false was set");
        }
    }
};

std::string frolicher_message(int k, int row_sum, int bk) {
    std::ostringstream os;
    os << "Frölicher inequality violated at k=" << k << " (b[" << k << "]=" << bk << " > " << row_sum << ")";
    return os.str();
}

Inference infer_and_check(ManifoldModel m) {
    Inference inf{std::move(m), {}};
    ManifoldModel& model = inf.model;

    if (model.diamond.dim() != model.dim)
        inf.issue("diamond dimension " + std::to_string(model.diamond.dim()) + " does not match dim " +
                  std::to_string(model.dim));
    if (model.betti && model.betti->dim() != model.dim)
        inf.issue("betti dimension " + std::to_string(model.betti->dim()) + " does not match dim " +
                  std::to_string(model.dim));
    if (!inf.issues.empty()) return inf;  // nothing below is meaningful on mismatched shapes

    if (model.connected && model.h(0, 0) != 1)
        inf.issue("connected model must have h[0][0]=1, got " + std::to_string(model.h(0, 0)));

    // kaehler => ddbar => (e1 degeneracy and Hodge symmetry)
    if (model.flags.kaehler && *model.flags.kaehler)
        inf.imply(model.flags.ddbar, "ddbar", "kaehler=true");
    if (model.flags.ddbar && *model.flags.ddbar) {
        inf.imply(model.flags.e1_degenerate, "e1_degenerate", "ddbar=true");
        if (!hodge_symmetric(model.diamond))
            inf.issue("flag contradiction: ddbar=true requires Hodge symmetry h[p][q]=h[q][p]");
    }

    // derive first so the derived vector passes through the same checks
    if (!model.betti && model.flags.e1_degenerate && *model.flags.e1_degenerate) {
        model.betti = betti_from_diamond(model.diamond);
        model.betti_derived = true;
    }

    if (model.betti) {
        const BettiVector row_sums = betti_from_diamond(model.diamond);
        const int top = 2 * model.dim;
        if (model.connected && model.betti->at(0) != 1)
            inf.issue("connected model must have b[0]=1, got " + std::to_string(model.betti->at(0)));
        for (int k = 0; k <= top; ++k)
            if (model.betti->at(k) > row_sums.at(k))
                inf.issue(frolicher_message(k, row_sums.at(k), model.betti->at(k)));
        for (int k = 0; k <= model.dim; ++k)
            if (model.betti->at(k) != model.betti->at(top - k))
                inf.issue("Poincaré symmetry violated: b[" + std::to_string(k) + "]=" +
                          std::to_string(model.betti->at(k)) + " but b[" + std::to_string(top - k) + "]=" +
                          std::to_string(model.betti->at(top - k)) +
                          (model.betti_derived ? " (betti derived from e1_degenerate)" : ""));

        const bool degenerate = (*model.betti == row_sums);
        if (!model.flags.e1_degenerate) {
            model.flags.e1_degenerate = degenerate;
        } else if (*model.flags.e1_degenerate != degenerate) {
            inf.issue(degenerate
                          ? "flag contradiction: e1_degenerate=false but b[k] equals the Hodge row sums for all k"
                          : "flag contradiction: e1_degenerate=true but b[k] differs from the Hodge row sums");
        }
    }

    return inf;
}

}  // namespace

std::vector<std::string> validation_issues(const ManifoldModel& m) { return infer_and_check(m).issues; }

ManifoldModel normalized(ManifoldModel m) {
    Inference inf = infer_and_check(std::move(m));
    if (!inf.issues.empty()) {
        std::string joined = "model '" + inf.model.name + "' invalid:";
        for (const auto& issue : inf.issues) joined += "\n  - " + issue;
        throw ValidationError(joined);
    }
    return std::move(inf.model);
}

std::optional<BettiVector> effective_betti(const ManifoldModel& m) {
    if (m.betti) return m.betti;
    if (m.flags.e1_degenerate && *m.flags.e1_degenerate) return betti_from_diamond(m.diamond);
    return std::nullopt;
}

}  // namespace hodge
