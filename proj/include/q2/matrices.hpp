#pragma once

#include "q2/exact.hpp"
#include "q2/graph.hpp"

namespace q2 {

enum class CandleKind { Double, Single };

struct CandleMatrix {
    ExactMatrix matrix;
    Root2 scale;  // matrix/scale is orthogonal: matrix^2 = scale^2 * I
};

// Block matrix over Q(sqrt 2) whose pattern is the candle's adjacency: chain
// of 2x2 blocks J/R between the twin pairs, sqrt2 end blocks at the degree-2
// ends, and for the single kind a J diagonal block on the adjacent end pair.
// scale = 2 for k >= 2; the single k = 1 case is 3I - 2J on K_3 with scale 3.
CandleMatrix candle_matrix(int k, CandleKind kind);

enum class NamedMatrix { M, M1, M2 };

ExactMatrix named_matrix_exact(NamedMatrix which);
Root2 named_matrix_scale(NamedMatrix which);
Graph named_matrix_graph(NamedMatrix which);

}  // namespace q2
