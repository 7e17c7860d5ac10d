#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "q2/errors.hpp"

namespace q2 {

using Rational = boost::multiprecision::cpp_rational;

// Element of Q(sqrt 2): rat + rad*sqrt(2). Closed under +,-,*, and division
// by nonzero elements: 1/(a+b√2) = (a-b√2)/(a²-2b²), and a²-2b² = 0 only for
// a = b = 0 since √2 is irrational.
struct Root2 {
    Rational rat;
    Rational rad;

    Root2() = default;
    Root2(int v) : rat(v) {}  // NOLINT: implicit by design, mirrors integer literals
    Root2(Rational a, Rational b) : rat(std::move(a)), rad(std::move(b)) {}

    static Root2 sqrt2(int coeff = 1) { return Root2(0, coeff); }

    bool is_zero() const { return rat == 0 && rad == 0; }

    double to_double() const {
        return static_cast<double>(rat) + static_cast<double>(rad) * 1.4142135623730950488;
    }

    Root2 operator-() const { return Root2(-rat, -rad); }
    Root2 operator+(const Root2& o) const { return Root2(rat + o.rat, rad + o.rad); }
    Root2 operator-(const Root2& o) const { return Root2(rat - o.rat, rad - o.rad); }
    Root2 operator*(const Root2& o) const {
        return Root2(rat * o.rat + 2 * rad * o.rad, rat * o.rad + rad * o.rat);
    }
    Root2& operator+=(const Root2& o) {
        rat += o.rat;
        rad += o.rad;
        return *this;
    }
    Root2& operator-=(const Root2& o) {
        rat -= o.rat;
        rad -= o.rad;
        return *this;
    }
    Root2& operator*=(const Root2& o) { return *this = *this * o; }

    Root2 inverse() const {
        Rational norm = rat * rat - 2 * rad * rad;
        if (norm == 0) throw NumericError("Root2: division by zero");
        return Root2(rat / norm, -rad / norm);
    }
    Root2 operator/(const Root2& o) const { return *this * o.inverse(); }

    bool operator==(const Root2&) const = default;

    std::string str() const;
};

// Symmetric matrix over Q(sqrt 2); set_sym writes both triangles.
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}

    static ExactMatrix scaled_identity(int n, const Root2& d) {
        ExactMatrix m(n);
        for (int i = 0; i < n; ++i) m.set(i, i, d);
        return m;
    }

    int dim() const { return n_; }
    const Root2& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, Root2 v) {
        e_[static_cast<std::size_t>(i) * n_ + j] = v;
        e_[static_cast<std::size_t>(j) * n_ + i] = std::move(v);
    }

    ExactMatrix multiply(const ExactMatrix& o) const;
    ExactMatrix permuted(const std::vector<int>& perm) const;  // index i -> perm[i]

    bool operator==(const ExactMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<Root2> e_;
};

// Exact rank by Gaussian elimination over the field Q(sqrt 2). rows is a
// dense equation matrix (not necessarily square or symmetric).
int exact_rank(std::vector<std::vector<Root2>> rows);

}  // namespace q2
