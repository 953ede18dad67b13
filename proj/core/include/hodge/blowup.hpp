#pragma once

#include <utility>
#include <vector>

#include "hodge/model.hpp"

namespace hodge {

/// Rules the engine applies beyond pure arithmetic. Kaehler-ness of a blow-up
/// along a submanifold of a Kaehler manifold is standard but is an inference
/// about geometry, not dimension data, so it can be switched off.
struct BlowUpOptions {
    bool infer_kaehler = true;
};

/// A blow-up problem: ambient model X and the center Z, which may be given as
/// several connected components of equal dimension (they are blown up one by
/// one, which at dimension level is the same as blowing up their union).
/// Construction normalizes both sides and requires codimension r >= 2.
class BlowUpSpec {
public:
    BlowUpSpec(ManifoldModel ambient, ManifoldModel center);
    BlowUpSpec(ManifoldModel ambient, std::vector<ManifoldModel> center_components);

    const ManifoldModel& ambient() const { return ambient_; }

    // The center as one (possibly disconnected) model; component diamonds and
    // Betti vectors are summed entrywise, flags combined by tri_and.
    const ManifoldModel& center() const { return center_; }

    const std::vector<ManifoldModel>& components() const { return components_; }

    int codim() const { return ambient_.dim - center_.dim; }

private:
    ManifoldModel ambient_;
    ManifoldModel center_;
    std::vector<ManifoldModel> components_;
};

/// Diamond of the projectivization of a rank-r holomorphic bundle over base:
/// entry[p][q] = sum_{i=0}^{r-1} base.h[p-i][q-i], dimension base.dim + r - 1.
HodgeDiamond projective_bundle(const ManifoldModel& base, int rank);

/// The exceptional divisor E, a CP^{r-1}-bundle over the center: diamond from
/// projective_bundle, Betti numbers b_E[k] = sum_{i=0}^{r-1} b_Z[k-2i] when
/// the center carries them, flags propagated from the center.
ManifoldModel exceptional_divisor(const BlowUpSpec& spec, const BlowUpOptions& opts = {});

/// The blow-up of X along Z at dimension level:
///
///   h[p][q](result) = h[p][q](X) + sum_{i=1}^{r-1} h[p-i][q-i](Z)
///
/// Betti numbers come from de_rham_blow_up when both sides carry them (or
/// derive them via e1_degenerate); otherwise the output omits them. Flags:
/// fujiki and kaehler copy the ambient's (kaehler only under the documented
/// rule in BlowUpOptions), e1_degenerate and ddbar are the tri-state
/// conjunction of the inputs' flags.
ManifoldModel blow_up(const BlowUpSpec& spec, const BlowUpOptions& opts = {});

/// b[k](result) = bX[k] + sum_{l=1}^{r-1} bZ[k-2l]. Requires r >= 2 and
/// bX.dim - bZ.dim = r.
BettiVector de_rham_blow_up(const BettiVector& bX, const BettiVector& bZ, int r);

/// Hochschild dimensions of the blow-up computed two ways: first through the
/// blown-up diamond's anti-diagonals, second as HH(X) + (r-1) copies of HH(Z)
/// aligned on k in [-n, n]. The two must agree; both are returned for audit.
std::pair<HochschildDims, HochschildDims> hochschild_blow_up(const BlowUpSpec& spec,
                                                             const BlowUpOptions& opts = {});

/// Blow-up at one point: adds 1 to h[p][p] for 0 < p < dim. Requires dim >= 2.
ManifoldModel point_blow_up(const ManifoldModel& x, const BlowUpOptions& opts = {});

}  // namespace hodge
