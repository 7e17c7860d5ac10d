#include "q2/exact.hpp"

#include <sstream>

namespace q2 {

std::string Root2::str() const {
    std::ostringstream os;
    if (rad == 0) {
        os << rat;
    } else {
        if (rat != 0) os << rat << (rad > 0 ? "+" : "");
        if (rad == 1)
            os << "sqrt2";
        else if (rad == -1)
            os << "-sqrt2";
        else
            os << rad << "*sqrt2";
    }
    return os.str();
}

ExactMatrix ExactMatrix::multiply(const ExactMatrix& o) const {
    if (n_ != o.n_) throw InvalidParameter("ExactMatrix: dimension mismatch");
    ExactMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Root2 s;
            for (int k = 0; k < n_; ++k) {
                const Root2& a = at(i, k);
                const Root2& b = o.at(k, j);
                if (!a.is_zero() && !b.is_zero()) s += a * b;
            }
            r.e_[static_cast<std::size_t>(i) * n_ + j] = std::move(s);
        }
    return r;
}

ExactMatrix ExactMatrix::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw InvalidParameter("ExactMatrix: permutation length mismatch");
    ExactMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            r.e_[static_cast<std::size_t>(perm[i]) * n_ + perm[j]] = at(i, j);
    return r;
}

int exact_rank(std::vector<std::vector<Root2>> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows[0].size();
    int rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[pivot_row]);
        Root2 inv = rows[pivot_row][c].inverse();
        for (std::size_t cc = c; cc < cols; ++cc) rows[pivot_row][cc] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][c].is_zero()) continue;
            Root2 f = rows[r][c];
            for (std::size_t cc = c; cc < cols; ++cc) rows[r][cc] -= f * rows[pivot_row][cc];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

}  // namespace q2
