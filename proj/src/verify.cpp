#include "q2/verify.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>

namespace q2 {

FloatMatrix to_float(const ExactMatrix& m) {
    FloatMatrix f(m.dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) f(i, j) = m.at(i, j).to_double();
    return f;
}

bool pattern_match(const ExactMatrix& a, const Graph& g) {
    if (a.dim() != g.order()) throw InvalidParameter("pattern_match: dimension mismatch");
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j)
            if (a.at(i, j).is_zero() == g.adjacent(i, j)) return false;
    return true;
}

bool pattern_match(const FloatMatrix& a, const Graph& g, double tol) {
    if (a.rows() != g.order() || a.cols() != g.order())
        throw InvalidParameter("pattern_match: dimension mismatch");
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j) {
            bool nonzero = std::abs(a(i, j)) > tol;
            if (nonzero != g.adjacent(i, j)) return false;
        }
    return true;
}

std::vector<std::pair<double, int>> spectrum(const FloatMatrix& a, double tol) {
    if (tol <= 0) throw InvalidParameter("spectrum: tol must be positive");
    Eigen::SelfAdjointEigenSolver<FloatMatrix> es(0.5 * (a + a.transpose()),
                                                  Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericError("spectrum: eigensolver failed");
    Eigen::VectorXd ev = es.eigenvalues();
    double radius = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
    double gap = tol * std::max(1.0, radius);
    std::vector<std::pair<double, int>> out;
    int i = 0;
    while (i < ev.size()) {
        int j = i;
        while (j + 1 < ev.size() && ev(j + 1) - ev(j) <= gap) ++j;
        double mean = 0;
        for (int k = i; k <= j; ++k) mean += ev(k);
        out.emplace_back(mean / (j - i + 1), j - i + 1);
        i = j + 1;
    }
    return out;
}

std::vector<std::pair<double, int>> spectrum(const ExactMatrix& a, double tol) {
    return spectrum(to_float(a), tol);
}

bool verify_orthogonality_exact(const ExactMatrix& x, const Root2& scale) {
    ExactMatrix sq = x.multiply(x);
    return sq == ExactMatrix::scaled_identity(x.dim(), scale * scale);
}

double orthogonality_residual(const FloatMatrix& a, double scale) {
    FloatMatrix s = a / scale;
    return ((s * s) - FloatMatrix::Identity(a.rows(), a.cols())).cwiseAbs().maxCoeff();
}

namespace {

// Rows of the commutator system over the unknown entries x_{ij} at
// non-edge positions of A's support graph. supp(i,j) must be symmetric.
template <typename Scalar, typename Supp, typename Entry>
std::pair<int, std::vector<std::vector<Scalar>>> ssp_system(int n, Supp supp, Entry entry) {
    std::vector<std::vector<int>> var(n, std::vector<int>(n, -1));
    int nvars = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!supp(i, j)) {
                var[i][j] = var[j][i] = nvars;
                ++nvars;
            }
    std::vector<std::vector<Scalar>> rows;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            std::vector<Scalar> row(nvars, Scalar(0));
            bool any = false;
            for (int r = 0; r < n; ++r) {
                // (AX - XA)_{pq} = sum_r a_{pr} x_{rq} - x_{pr} a_{rq}
                if (r != q && var[r][q] >= 0 && supp(p, r)) {
                    row[var[r][q]] += entry(p, r);
                    any = true;
                }
                if (r != p && var[p][r] >= 0 && supp(r, q)) {
                    row[var[p][r]] -= entry(r, q);
                    any = true;
                }
            }
            if (any) rows.push_back(std::move(row));
        }
    return {nvars, std::move(rows)};
}

}  // namespace

SspResult ssp_check(const ExactMatrix& a) {
    int n = a.dim();
    auto supp = [&](int i, int j) { return i == j || !a.at(i, j).is_zero(); };
    auto entry = [&](int i, int j) { return a.at(i, j); };
    auto [nvars, rows] = ssp_system<Root2>(n, supp, entry);
    int nullity = nvars - exact_rank(std::move(rows));
    return {nullity == 0, nullity};
}

SspResult ssp_check(const FloatMatrix& a, double tol) {
    int n = static_cast<int>(a.rows());
    auto supp = [&](int i, int j) { return i == j || a(i, j) != 0.0; };
    auto entry = [&](int i, int j) { return a(i, j); };
    auto [nvars, rows] = ssp_system<double>(n, supp, entry);
    if (nvars == 0) return {true, 0};
    FloatMatrix sys = FloatMatrix::Zero(static_cast<int>(rows.size()), nvars);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int c = 0; c < nvars; ++c) sys(r, c) = rows[r][c];
    int rank = 0;
    if (rows.empty()) {
        rank = 0;
    } else {
        Eigen::JacobiSVD<FloatMatrix> svd(sys);
        double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
        for (int i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > tol * std::max(smax, 1.0)) ++rank;
    }
    int nullity = nvars - rank;
    return {nullity == 0, nullity};
}

Certificate make_exact_certificate(Graph g, ExactMatrix m, Root2 scale, bool relabeled) {
    Certificate c;
    c.graph = std::move(g);
    c.floating = to_float(m);
    c.exact = std::move(m);
    c.scale = scale.to_double();
    c.scale_exact = std::move(scale);
    c.relabeled = relabeled;
    return c;
}

Certificate make_float_certificate(Graph g, FloatMatrix m, double scale) {
    Certificate c;
    c.graph = std::move(g);
    c.floating = std::move(m);
    c.scale = scale;
    c.scale_exact = Root2(1);
    return c;
}

const VerificationReport& verify_certificate(Certificate& c, double tol) {
    VerificationReport r;
    if (c.exact) {
        r.pattern_ok = pattern_match(*c.exact, c.graph);
        r.orth_exact = verify_orthogonality_exact(*c.exact, c.scale_exact);
    } else {
        r.pattern_ok = pattern_match(c.floating, c.graph, tol);
    }
    r.orth_residual = orthogonality_residual(c.floating, c.scale);
    r.orth_ok = r.orth_exact || r.orth_residual <= tol;
    r.spectrum = spectrum(c.floating);
    r.distinct_count = static_cast<int>(r.spectrum.size());
    SspResult ssp = c.exact ? ssp_check(*c.exact) : ssp_check(c.floating);
    r.ssp = ssp.has_ssp;
    r.ssp_nullity = ssp.nullity;
    r.verified = r.pattern_ok && r.orth_ok && r.distinct_count == 2;
    c.report = r;
    return c.report;
}

}  // namespace q2
