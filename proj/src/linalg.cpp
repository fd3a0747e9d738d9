#include "rcdb/linalg.hpp"

#include <cmath>
#include <cstdlib>

namespace rcdb {

double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const Vec& v) { return std::sqrt(dot(v, v)); }

SymMat SymMat::identity(std::size_t d, double scale) {
    SymMat m(d);
    for (std::size_t i = 0; i < d; ++i) m.a_[i * d + i] = scale;
    return m;
}

SymMat SymMat::from_rows(const std::vector<Vec>& rows) {
    const std::size_t d = rows.size();
    SymMat m(d);
    double amax = 0.0;
    for (const auto& r : rows) {
        if (r.size() != d) throw DimensionMismatch("from_rows: non-square input");
        for (double x : r) amax = std::max(amax, std::abs(x));
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (std::abs(rows[i][j] - rows[j][i]) > 1e-12 * (1.0 + amax))
                throw DimensionMismatch("from_rows: input is not symmetric");
            m.a_[i * d + j] = 0.5 * (rows[i][j] + rows[j][i]);
        }
    return m;
}

void SymMat::add_outer(const Vec& v, double c) {
    if (v.size() != d_) throw DimensionMismatch("add_outer: size mismatch");
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) a_[i * d_ + j] += c * v[i] * v[j];
}

Vec SymMat::mul(const Vec& v) const {
    if (v.size() != d_) throw DimensionMismatch("mul: size mismatch");
    Vec out(d_, 0.0);
    for (std::size_t i = 0; i < d_; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < d_; ++j) s += a_[i * d_ + j] * v[j];
        out[i] = s;
    }
    return out;
}

double SymMat::quad_form(const Vec& v) const { return dot(v, mul(v)); }

double SymMat::max_abs() const {
    double m = 0.0;
    for (double x : a_) m = std::max(m, std::abs(x));
    return m;
}

CholFactor cholesky(const SymMat& m) {
    const std::size_t d = m.dim();
    CholFactor f;
    f.d_ = d;
    f.l_.assign(d * d, 0.0);
    auto& l = f.l_;
    for (std::size_t j = 0; j < d; ++j) {
        double pivot = m(j, j);
        for (std::size_t k = 0; k < j; ++k) pivot -= l[j * d + k] * l[j * d + k];
        if (pivot <= 1e-14)
            throw NotPositiveDefinite("cholesky: pivot " + std::to_string(pivot) +
                                      " at column " + std::to_string(j));
        l[j * d + j] = std::sqrt(pivot);
        for (std::size_t i = j + 1; i < d; ++i) {
            double s = m(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l[i * d + k] * l[j * d + k];
            l[i * d + j] = s / l[j * d + j];
        }
    }
    return f;
}

Vec solve(const CholFactor& f, const Vec& b) {
    const std::size_t d = f.dim();
    if (b.size() != d) throw DimensionMismatch("solve: size mismatch");
    Vec y(d);
    for (std::size_t i = 0; i < d; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= f(i, k) * y[k];
        y[i] = s / f(i, i);
    }
    Vec x(d);
    for (std::size_t ii = d; ii-- > 0;) {
        double s = y[ii];
        for (std::size_t k = ii + 1; k < d; ++k) s -= f(k, ii) * x[k];
        x[ii] = s / f(ii, ii);
    }
    return x;
}

double elliptical_norm(const CholFactor& f, const Vec& v) {
    const std::size_t d = f.dim();
    if (v.size() != d) throw DimensionMismatch("elliptical_norm: size mismatch");
    // v^T m^{-1} v = ||L^{-1} v||^2
    Vec y(d);
    for (std::size_t i = 0; i < d; ++i) {
        double s = v[i];
        for (std::size_t k = 0; k < i; ++k) s -= f(i, k) * y[k];
        y[i] = s / f(i, i);
    }
    return norm2(y);
}

SymMat rank_one_add(const SymMat& m, const Vec& v, double c) {
    SymMat out = m;
    out.add_outer(v, c);
    return out;
}

}  // namespace rcdb
