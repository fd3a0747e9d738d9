#pragma once

#include <cstddef>
#include <vector>

#include "rcdb/errors.hpp"

namespace rcdb {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& v);

// Dense symmetric matrix, row-major. Only symmetric constructors are exposed;
// every mutation keeps the storage symmetric.
class SymMat {
public:
    SymMat() = default;
    explicit SymMat(std::size_t d) : d_(d), a_(d * d, 0.0) {}

    static SymMat identity(std::size_t d, double scale = 1.0);
    static SymMat from_rows(const std::vector<Vec>& rows);  // validates symmetry

    std::size_t dim() const { return d_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }

    // m += c * v v^T, c >= 0
    void add_outer(const Vec& v, double c);

    Vec mul(const Vec& v) const;
    // v^T m v
    double quad_form(const Vec& v) const;
    double max_abs() const;

private:
    std::size_t d_ = 0;
    std::vector<double> a_;
};

// Lower-triangular Cholesky factor, L L^T = source matrix.
class CholFactor {
public:
    std::size_t dim() const { return d_; }
    double operator()(std::size_t i, std::size_t j) const { return l_[i * d_ + j]; }

    friend CholFactor cholesky(const SymMat& m);

private:
    std::size_t d_ = 0;
    std::vector<double> l_;
};

// Throws NotPositiveDefinite if a pivot falls at or below 1e-14.
CholFactor cholesky(const SymMat& m);

// Solves m x = b given the factor of m.
Vec solve(const CholFactor& f, const Vec& b);

// ||v||_{m^{-1}} = sqrt(v^T m^{-1} v)
double elliptical_norm(const CholFactor& f, const Vec& v);

SymMat rank_one_add(const SymMat& m, const Vec& v, double c);

}  // namespace rcdb
