#pragma once

#include <string>

#include "hodge/model.hpp"

namespace hodge {

// The catalog of manifolds the engine can construct from parameters alone.

// Dimension 0, all flags true.
ManifoldModel point_model();

// CP^n: diagonal diamond, Betti (1,0,1,...,1), all flags true.
ManifoldModel projective_space(int n);

// Compact curve of genus g: h = (1,g;g,1), Betti (1,2g,1).
ManifoldModel curve(int genus);

// Complex n-torus: h[s][t] = C(n,s) C(n,t), Betti b_k = C(2n,k).
ManifoldModel torus(int n);

// Pass-through constructor; the model is normalized and validated.
ManifoldModel synthetic(std::string name, int dim, HodgeDiamond diamond,
                        std::optional<BettiVector> betti = std::nullopt, StructureFlags flags = {});

enum class BuiltinKind { Point, ProjectiveSpace, Curve, Torus };

// Dispatcher over the parameterized kinds; param is ignored for Point.
ManifoldModel builtin(BuiltinKind kind, int param = 0);

}  // namespace hodge
