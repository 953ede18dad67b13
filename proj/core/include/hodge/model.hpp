#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodge/diamond.hpp"

namespace hodge {

/// Tri-state structural flags. nullopt means "unknown"; inference may
/// strengthen unknown to a definite value but never overrides one the user
/// set. A contradiction between a set flag and the data is a validation error.
struct StructureFlags {
    std::optional<bool> kaehler;
    std::optional<bool> fujiki;
    std::optional<bool> ddbar;
    std::optional<bool> e1_degenerate;

    bool operator==(const StructureFlags&) const = default;
};

// Tri-state conjunction: false wins, unknown absorbs true.
std::optional<bool> tri_and(std::optional<bool> a, std::optional<bool> b);

/// A named manifold at dimension level: Hodge diamond, optional Betti vector,
/// structural flags. Treated as an immutable value once normalized.
struct ManifoldModel {
    std::string name;
    int dim = 0;
    bool connected = true;
    HodgeDiamond diamond;
    std::optional<BettiVector> betti;
    StructureFlags flags;

    // True when betti was filled in from the e1_degenerate flag rather than
    // supplied. Derived vectors are not serialized; they are re-derivable.
    bool betti_derived = false;

    // Assumptions the engine could not verify from dimension data (center
    // embeddings, contractibility of blow-downs). Not serialized.
    std::vector<std::string> provenance;

    int h(int p, int q) const { return diamond.at(p, q); }
    int b(int k) const { return betti ? betti->at(k) : 0; }
};

/// Runs flag inference and reports every violated invariant.
///
/// Inference chain: kaehler => ddbar => (e1_degenerate and Hodge symmetry);
/// e1_degenerate with no Betti data derives b[k] = sum_{p+q=k} h[p][q];
/// e1_degenerate unknown with Betti data present is resolved by comparison.
/// Checks: dimension agreement, h[0][0] = 1 on connected models, b[0] = 1 on
/// connected models, the Frolicher inequality, Poincare symmetry of b, and
/// consistency of every set flag with the data.
std::vector<std::string> validation_issues(const ManifoldModel& m);

/// Inferred copy of m. Throws ValidationError listing every violation.
ManifoldModel normalized(ManifoldModel m);

// Betti data usable by spectral operations: the stored vector, or the derived
// one when e1_degenerate is set. nullopt when neither is available.
std::optional<BettiVector> effective_betti(const ManifoldModel& m);

}  // namespace hodge
