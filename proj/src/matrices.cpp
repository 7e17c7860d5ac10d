#include "q2/matrices.hpp"

namespace q2 {

namespace {

const Root2 kSqrt2 = Root2::sqrt2();

// Chain blocks between pair m and pair m+1 (pairs are {2m-1,2m}).
void put_J(ExactMatrix& x, int m) {
    for (int a : {2 * m - 1, 2 * m})
        for (int b : {2 * m + 1, 2 * m + 2}) x.set(a, b, 1);
}

void put_R(ExactMatrix& x, int m) {
    x.set(2 * m - 1, 2 * m + 1, -1);
    x.set(2 * m - 1, 2 * m + 2, 1);
    x.set(2 * m, 2 * m + 1, 1);
    x.set(2 * m, 2 * m + 2, -1);
}

}  // namespace

CandleMatrix candle_matrix(int k, CandleKind kind) {
    if (kind == CandleKind::Double && k < 2)
        throw InvalidParameter("candle_matrix: double kind needs k >= 2");
    if (kind == CandleKind::Single && k < 1)
        throw InvalidParameter("candle_matrix: single kind needs k >= 1");

    if (kind == CandleKind::Single && k == 1) {
        // 3I - 2J: squares to 9I, pattern K_3.
        ExactMatrix x(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) x.set(i, j, i == j ? 1 : -2);
        return {std::move(x), Root2(3)};
    }

    if (kind == CandleKind::Double) {
        ExactMatrix x(2 * k);
        x.set(0, 1, kSqrt2);
        x.set(0, 2, -kSqrt2);
        for (int m = 1; m <= k - 2; ++m)
            (m % 2 == 1) ? put_J(x, m) : put_R(x, m);
        // Right end column; sign pattern matches the preceding chain block.
        x.set(2 * k - 3, 2 * k - 1, kSqrt2);
        x.set(2 * k - 2, 2 * k - 1, (k % 2 == 1) ? -kSqrt2 : kSqrt2);
        return {std::move(x), Root2(2)};
    }

    // Single, k >= 2: alternation fixed from the far end so that the chain
    // block entering the J diagonal block is R.
    ExactMatrix x(2 * k + 1);
    x.set(0, 1, kSqrt2);
    x.set(0, 2, (k % 2 == 0) ? kSqrt2 : -kSqrt2);
    for (int m = 1; m <= k - 1; ++m)
        ((k - 1 - m) % 2 == 0) ? put_R(x, m) : put_J(x, m);
    x.set(2 * k - 1, 2 * k - 1, 1);
    x.set(2 * k, 2 * k, 1);
    x.set(2 * k - 1, 2 * k, 1);
    return {std::move(x), Root2(2)};
}

ExactMatrix named_matrix_exact(NamedMatrix which) {
    const Root2 r2 = kSqrt2;
    switch (which) {
        case NamedMatrix::M: {
            ExactMatrix m(5);
            m.set(0, 1, r2);
            m.set(0, 2, r2);
            m.set(1, 3, -1);
            m.set(1, 4, 1);
            m.set(2, 3, 1);
            m.set(2, 4, -1);
            m.set(3, 3, 1);
            m.set(4, 4, 1);
            m.set(3, 4, 1);
            return m;
        }
        case NamedMatrix::M1: {
            ExactMatrix m(6);
            m.set(0, 0, -1);
            m.set(5, 5, -1);
            m.set(3, 3, 1);
            m.set(4, 4, 1);
            m.set(0, 1, 2);
            m.set(0, 2, 2);
            m.set(1, 2, 1);
            m.set(1, 3, r2);
            m.set(1, 4, -r2);
            m.set(2, 3, -r2);
            m.set(2, 4, r2);
            m.set(3, 5, 2);
            m.set(4, 5, 2);
            return m;
        }
        case NamedMatrix::M2: {
            ExactMatrix m(8);
            m.set(0, 0, 2);
            m.set(1, 1, -2);
            m.set(2, 2, -2);
            m.set(5, 5, 2);
            m.set(6, 6, 2);
            m.set(7, 7, -2);
            m.set(0, 1, r2);
            m.set(0, 2, r2);
            m.set(1, 3, -1);
            m.set(1, 4, 1);
            m.set(2, 3, 1);
            m.set(2, 4, -1);
            m.set(3, 4, -2);
            m.set(3, 5, 1);
            m.set(3, 6, 1);
            m.set(4, 5, 1);
            m.set(4, 6, 1);
            m.set(5, 7, -r2);
            m.set(6, 7, r2);
            return m;
        }
    }
    throw InvalidParameter("named_matrix: unknown name");
}

Root2 named_matrix_scale(NamedMatrix which) {
    switch (which) {
        case NamedMatrix::M: return Root2(2);
        case NamedMatrix::M1: return Root2(3);
        case NamedMatrix::M2: return Root2::sqrt2(2);
    }
    throw InvalidParameter("named_matrix: unknown name");
}

Graph named_matrix_graph(NamedMatrix which) {
    switch (which) {
        case NamedMatrix::M: return single_candle(2);
        case NamedMatrix::M1: return named_graph("G3_plus_edge");
        case NamedMatrix::M2: return named_graph("G4_plus_edge");
    }
    throw InvalidParameter("named_matrix: unknown name");
}

}  // namespace q2
