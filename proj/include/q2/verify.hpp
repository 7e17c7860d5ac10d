#pragma once

#include <Eigen/Dense>

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "q2/exact.hpp"
#include "q2/graph.hpp"

namespace q2 {

using FloatMatrix = Eigen::MatrixXd;

FloatMatrix to_float(const ExactMatrix& m);

// Off-diagonal support equals E(g) under the graph's labeling; diagonal free.
bool pattern_match(const ExactMatrix& a, const Graph& g);
bool pattern_match(const FloatMatrix& a, const Graph& g, double tol);

// Eigenvalues of the float image, clustered: gaps <= tol * max(1, spectral
// radius) merge; returns (cluster mean, multiplicity) sorted ascending.
std::vector<std::pair<double, int>> spectrum(const FloatMatrix& a, double tol = 1e-8);
std::vector<std::pair<double, int>> spectrum(const ExactMatrix& a, double tol = 1e-8);

// X^2 == scale^2 * I in Q(sqrt 2); no floating point involved.
bool verify_orthogonality_exact(const ExactMatrix& x, const Root2& scale);

// max |(A/scale)^2 - I|
double orthogonality_residual(const FloatMatrix& a, double scale);

struct SspResult {
    bool has_ssp = false;
    int nullity = 0;
};

// Strong Spectral Property: the only symmetric X with X o A = 0, X o I = 0
// and AX = XA is X = 0. nullity = dimension of the solution space.
SspResult ssp_check(const ExactMatrix& a);
SspResult ssp_check(const FloatMatrix& a, double tol = 1e-9);

struct VerificationReport {
    bool pattern_ok = false;
    double orth_residual = std::numeric_limits<double>::infinity();
    bool orth_ok = false;
    bool orth_exact = false;  // exact route taken and passed
    std::vector<std::pair<double, int>> spectrum;
    int distinct_count = 0;
    std::optional<bool> ssp;
    std::optional<int> ssp_nullity;
    bool verified = false;
};

struct Certificate {
    Graph graph;
    std::optional<ExactMatrix> exact;  // set when the matrix lives in Q(sqrt 2)
    FloatMatrix floating;              // float image, always set
    Root2 scale_exact = Root2(1);      // used when exact is set
    double scale = 1.0;
    bool relabeled = false;  // matrix transferred through an isomorphism
    VerificationReport report;
};

Certificate make_exact_certificate(Graph g, ExactMatrix m, Root2 scale, bool relabeled = false);
Certificate make_float_certificate(Graph g, FloatMatrix m, double scale = 1.0);

// Fills c.report: pattern, orthogonality (exact when possible), spectrum,
// distinct count, SSP. verified = pattern_ok && orth_ok && distinct_count==2.
const VerificationReport& verify_certificate(Certificate& c, double tol = 1e-9);

}  // namespace q2
