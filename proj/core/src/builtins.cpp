#include "hodge/builtins.hpp"

namespace hodge {

namespace {

constexpr StructureFlags all_true{true, true, true, true};

int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > 1'000'000'000)
            throw PreconditionError("binomial(" + std::to_string(n) + "," + std::to_string(k) + ") too large");
    }
    return static_cast<int>(acc);
}

}  // namespace

ManifoldModel point_model() {
    ManifoldModel m;
    m.name = "point";
    m.dim = 0;
    m.diamond = HodgeDiamond(0, {{1}});
    m.betti = BettiVector(0, {1});
    m.flags = all_true;
    return normalized(std::move(m));
}

ManifoldModel projective_space(int n) {
    if (n < 0) throw PreconditionError("projective_space: n must be >= 0");
    ManifoldModel m;
    m.name = "CP" + std::to_string(n);
    m.dim = n;
    std::vector<std::vector<int>> h(static_cast<std::size_t>(n) + 1,
                                    std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (int p = 0; p <= n; ++p) h[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)] = 1;
    m.diamond = HodgeDiamond(n, std::move(h));
    std::vector<int> b(static_cast<std::size_t>(2 * n) + 1, 0);
    for (int k = 0; k <= 2 * n; k += 2) b[static_cast<std::size_t>(k)] = 1;
    m.betti = BettiVector(n, std::move(b));
    m.flags = all_true;
    return normalized(std::move(m));
}

ManifoldModel curve(int genus) {
    if (genus < 0) throw PreconditionError("curve: genus must be >= 0");
    ManifoldModel m;
    m.name = "curve_g" + std::to_string(genus);
    m.dim = 1;
    m.diamond = HodgeDiamond(1, {{1, genus}, {genus, 1}});
    m.betti = BettiVector(1, {1, 2 * genus, 1});
    m.flags = all_true;
    return normalized(std::move(m));
}

ManifoldModel torus(int n) {
    if (n < 0) throw PreconditionError("torus: n must be >= 0");
    ManifoldModel m;
    m.name = "torus_" + std::to_string(n);
    m.dim = n;
    std::vector<std::vector<int>> h(static_cast<std::size_t>(n) + 1,
                                    std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (int s = 0; s <= n; ++s)
        for (int t = 0; t <= n; ++t)
            h[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = binomial(n, s) * binomial(n, t);
    m.diamond = HodgeDiamond(n, std::move(h));
    std::vector<int> b(static_cast<std::size_t>(2 * n) + 1, 0);
    for (int k = 0; k <= 2 * n; ++k) b[static_cast<std::size_t>(k)] = binomial(2 * n, k);
    m.betti = BettiVector(n, std::move(b));
    m.flags = all_true;
    return normalized(std::move(m));
}

ManifoldModel synthetic(std::string name, int dim, HodgeDiamond diamond, std::optional<BettiVector> betti,
                        StructureFlags flags) {
    ManifoldModel m;
    m.name = std::move(name);
    m.dim = dim;
    m.diamond = std::move(diamond);
    m.betti = std::move(betti);
    m.flags = flags;
    return normalized(std::move(m));
}

ManifoldModel builtin(BuiltinKind kind, int param) {
    switch (kind) {
        case BuiltinKind::Point: return point_model();
        case BuiltinKind::ProjectiveSpace: return projective_space(param);
        case BuiltinKind::Curve: return curve(param);
        case BuiltinKind::Torus: return torus(param);
    }
    throw PreconditionError("builtin: unknown kind");
}

}  // namespace hodge
