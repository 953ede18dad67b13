#include "hodge/blowup.hpp"

#include <string>

namespace hodge {

namespace {

ManifoldModel combine_components(std::vector<ManifoldModel>& components) {
    if (components.empty()) throw PreconditionError("blow-up center needs at least one component");
    for (auto& c : components) c = normalized(std::move(c));

    const int dim = components.front().dim;
    for (const auto& c : components)
        if (c.dim != dim)
            throw DimensionError("blow-up center components must share one dimension (got " +
                                 std::to_string(c.dim) + " and " + std::to_string(dim) + ")");
    if (components.size() == 1) return components.front();

    ManifoldModel combined;
    combined.dim = dim;
    combined.connected = false;
    combined.diamond = components.front().diamond;
    combined.flags = components.front().flags;
    combined.name = components.front().name;

    bool betti_ok = true;
    bool betti_derived = components.front().betti_derived || !components.front().betti.has_value();
    std::optional<BettiVector> betti_sum = effective_betti(components.front());
    for (std::size_t i = 1; i < components.size(); ++i) {
        const auto& c = components[i];
        combined.name += "+" + c.name;
        combined.diamond = direct_sum(combined.diamond, c.diamond);
        combined.flags.kaehler = tri_and(combined.flags.kaehler, c.flags.kaehler);
        combined.flags.fujiki = tri_and(combined.flags.fujiki, c.flags.fujiki);
        combined.flags.ddbar = tri_and(combined.flags.ddbar, c.flags.ddbar);
        combined.flags.e1_degenerate = tri_and(combined.flags.e1_degenerate, c.flags.e1_degenerate);
        auto eff = effective_betti(c);
        if (betti_ok && betti_sum && eff) {
            std::vector<int> sum = betti_sum->values();
            for (int k = 0; k <= 2 * dim; ++k) sum[static_cast<std::size_t>(k)] += eff->at(k);
            betti_sum = BettiVector(dim, std::move(sum));
            betti_derived = betti_derived || c.betti_derived || !c.betti.has_value();
        } else {
            betti_ok = false;
        }
    }
    if (betti_ok && betti_sum) {
        combined.betti = std::move(betti_sum);
        combined.betti_derived = betti_derived;
    }
    return normalized(std::move(combined));
}

void require_codim(int ambient_dim, int center_dim) {
    const int r = ambient_dim - center_dim;
    if (r == 1)
        throw CodimensionError(
            "codimension must be >= 2: blowing up along a codimension-1 center is an isomorphism at this "
            "level");
    if (r < 2)
        throw CodimensionError("codimension must be >= 2, got " + std::to_string(r) + " (ambient dim " +
                               std::to_string(ambient_dim) + ", center dim " + std::to_string(center_dim) + ")");
}

}  // namespace

BlowUpSpec::BlowUpSpec(ManifoldModel ambient, ManifoldModel center)
    : BlowUpSpec(std::move(ambient), std::vector<ManifoldModel>{std::move(center)}) {}

BlowUpSpec::BlowUpSpec(ManifoldModel ambient, std::vector<ManifoldModel> center_components)
    : ambient_(normalized(std::move(ambient))),
      center_(combine_components(center_components)),
      components_(std::move(center_components)) {
    require_codim(ambient_.dim, center_.dim);
}

HodgeDiamond projective_bundle(const ManifoldModel& base, int rank) {
    if (rank < 1) throw PreconditionError("projective_bundle: rank must be >= 1");
    const int n = base.dim + rank - 1;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n) + 1,
                                      std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            int acc = 0;
            for (int i = 0; i < rank; ++i) acc += base.diamond.at(p - i, q - i);
            out[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = acc;
        }
    return HodgeDiamond(n, std::move(out));
}

ManifoldModel exceptional_divisor(const BlowUpSpec& spec, const BlowUpOptions& opts) {
    const ManifoldModel& z = spec.center();
    const int r = spec.codim();

    ManifoldModel e;
    e.name = "E(" + z.name + ")";
    e.dim = spec.ambient().dim - 1;
    e.connected = z.connected;
    e.diamond = projective_bundle(z, r);
    if (auto bz = effective_betti(z)) {
        std::vector<int> b(static_cast<std::size_t>(2 * e.dim) + 1, 0);
        for (int k = 0; k <= 2 * e.dim; ++k) {
            int acc = 0;
            for (int i = 0; i < r; ++i) acc += bz->at(k - 2 * i);
            b[static_cast<std::size_t>(k)] = acc;
        }
        e.betti = BettiVector(e.dim, std::move(b));
        e.betti_derived = z.betti_derived || !z.betti.has_value();
    }
    e.flags.kaehler = opts.infer_kaehler ? z.flags.kaehler : std::nullopt;
    e.flags.fujiki = z.flags.fujiki;
    e.flags.ddbar = z.flags.ddbar;
    e.flags.e1_degenerate = z.flags.e1_degenerate;
    e.provenance.push_back("projectivized normal bundle of '" + z.name + "'; bundle structure assumed, not derivable from dimension data");
    return normalized(std::move(e));
}

ManifoldModel blow_up(const BlowUpSpec& spec, const BlowUpOptions& opts) {
    const ManifoldModel& x = spec.ambient();
    const ManifoldModel& z = spec.center();
    const int n = x.dim;
    const int r = spec.codim();

    if (opts.infer_kaehler && x.flags.kaehler == std::optional<bool>(true)) {
        const auto& zf = z.flags;
        const bool center_not_kaehler = zf.kaehler == std::optional<bool>(false) ||
                                        zf.ddbar == std::optional<bool>(false) ||
                                        zf.e1_degenerate == std::optional<bool>(false) ||
                                        !hodge_symmetric(z.diamond);
        if (center_not_kaehler)
            throw ValidationError(
                "center '" + z.name + "' cannot embed in the Kaehler ambient '" + x.name +
                "': a closed submanifold of a Kaehler manifold is Kaehler, but the center's data says "
                "otherwise (disable kaehler inference to compute the formal result)");
    }

    ManifoldModel out;
    out.name = "Bl_" + z.name + "(" + x.name + ")";
    out.dim = n;
    out.connected = x.connected;

    std::vector<std::vector<int>> h(static_cast<std::size_t>(n) + 1,
                                    std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            int acc = x.diamond.at(p, q);
            for (int i = 1; i <= r - 1; ++i) acc += z.diamond.at(p - i, q - i);
            h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = acc;
        }
    out.diamond = HodgeDiamond(n, std::move(h));

    const auto bx = effective_betti(x);
    const auto bz = effective_betti(z);
    if (bx && bz) {
        out.betti = de_rham_blow_up(*bx, *bz, r);
        out.betti_derived = x.betti_derived || z.betti_derived || !x.betti.has_value() || !z.betti.has_value();
    }

    out.flags.kaehler = opts.infer_kaehler ? x.flags.kaehler : std::nullopt;
    out.flags.fujiki = x.flags.fujiki;
    out.flags.e1_degenerate = tri_and(x.flags.e1_degenerate, z.flags.e1_degenerate);
    out.flags.ddbar = tri_and(x.flags.ddbar, z.flags.ddbar);

    out.provenance.push_back("blow-up of '" + x.name + "' along '" + z.name +
                             "'; the embedding of the center is assumed, not derivable from dimension data");
    if (!out.betti && (bx || bz))
        out.provenance.push_back("Betti data omitted: not available on both inputs");
    return normalized(std::move(out));
}

BettiVector de_rham_blow_up(const BettiVector& bX, const BettiVector& bZ, int r) {
    if (r < 2) require_codim(bX.dim(), bX.dim() - r);
    if (bX.dim() - bZ.dim() != r)
        throw DimensionError("de_rham_blow_up: expected codimension " + std::to_string(r) + ", got " +
                             std::to_string(bX.dim() - bZ.dim()));
    std::vector<int> b(static_cast<std::size_t>(2 * bX.dim()) + 1, 0);
    for (int k = 0; k <= 2 * bX.dim(); ++k) {
        int acc = bX.at(k);
        for (int l = 1; l <= r - 1; ++l) acc += bZ.at(k - 2 * l);
        b[static_cast<std::size_t>(k)] = acc;
    }
    return BettiVector(bX.dim(), std::move(b));
}

std::pair<HochschildDims, HochschildDims> hochschild_blow_up(const BlowUpSpec& spec, const BlowUpOptions& opts) {
    const int n = spec.ambient().dim;
    const int r = spec.codim();

    HochschildDims left = anti_diagonal_sums(blow_up(spec, opts).diamond);

    const HochschildDims hx = anti_diagonal_sums(spec.ambient().diamond);
    const HochschildDims hz = anti_diagonal_sums(spec.center().diamond);
    HochschildDims right;
    right.n = n;
    right.dims.assign(static_cast<std::size_t>(2 * n) + 1, 0);
    for (int k = -n; k <= n; ++k)
        right.dims[static_cast<std::size_t>(k + n)] = hx.at(k) + (r - 1) * hz.at(k);

    return {std::move(left), std::move(right)};
}

ManifoldModel point_blow_up(const ManifoldModel& x, const BlowUpOptions& opts) {
    if (x.dim < 2)
        throw PreconditionError("point_blow_up: ambient dimension must be >= 2, got " + std::to_string(x.dim));
    ManifoldModel point;
    point.name = "point";
    point.dim = 0;
    point.diamond = HodgeDiamond(0, {{1}});
    point.betti = BettiVector(0, {1});
    point.flags = {true, true, true, true};
    return blow_up(BlowUpSpec(x, std::move(point)), opts);
}

}  // namespace hodge
