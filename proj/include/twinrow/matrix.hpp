#pragma once

#include "twinrow/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace twinrow {

/// Dense square matrix over a polynomial ring.
template <class Ring>
class Matrix {
public:
    Matrix(std::size_t dim, std::size_t nvars) : dim_(dim), nvars_(nvars), a_(dim * dim, Ring(nvars)) {}

    std::size_t dim() const { return dim_; }
    std::size_t nvars() const { return nvars_; }

    const Ring& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    void set(std::size_t i, std::size_t j, Ring v) {
        if (v.nvars() != nvars_)
            throw std::invalid_argument("matrix entry with wrong variable count");
        a_[i * dim_ + j] = std::move(v);
    }

    void swap_rows(std::size_t r, std::size_t s) {
        for (std::size_t j = 0; j < dim_; ++j)
            std::swap(a_[r * dim_ + j], a_[s * dim_ + j]);
    }

private:
    std::size_t dim_;
    std::size_t nvars_;
    std::vector<Ring> a_;
};

using PolyMatrix = Matrix<XPolynomial>;

namespace detail {

template <class Ring>
Ring laplace(const Matrix<Ring>& m, std::vector<std::size_t>& cols, std::size_t row) {
    const std::size_t k = cols.size();
    if (k == 0)
        return Ring::one(m.nvars());
    if (k == 1)
        return m(row, cols[0]);
    Ring det(m.nvars());
    for (std::size_t c = 0; c < k; ++c) {
        const Ring& entry = m(row, cols[c]);
        if (entry.is_zero())
            continue;
        const std::size_t col = cols[c];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
        Ring minor = laplace(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(c), col);
        if (c % 2 == 0)
            det += entry * minor;
        else
            det -= entry * minor;
    }
    return det;
}

} // namespace detail

/// Cofactor (Laplace) expansion along the first row.
template <class Ring>
Ring cofactor_determinant(const Matrix<Ring>& m) {
    std::vector<std::size_t> cols(m.dim());
    for (std::size_t j = 0; j < m.dim(); ++j)
        cols[j] = j;
    return detail::laplace(m, cols, 0);
}

/// Fraction-free Bareiss elimination; every division is exact.
template <class Ring>
Ring bareiss_determinant(Matrix<Ring> m) {
    const std::size_t n = m.dim();
    if (n == 0)
        return Ring::one(m.nvars());
    bool negate = false;
    Ring prev = Ring::one(m.nvars());
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m(p, k).is_zero())
                ++p;
            if (p == n)
                return Ring(m.nvars());
            m.swap_rows(k, p);
            negate = !negate;
        }
        const Ring pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Ring lead = m(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                Ring v = pivot * m(i, j) - lead * m(k, j);
                m.set(i, j, k == 0 ? std::move(v) : exact_div(v, prev));
            }
            m.set(i, k, Ring(m.nvars()));
        }
        prev = pivot;
    }
    Ring det = m(n - 1, n - 1);
    return negate ? -det : det;
}

/// Exact determinant: cofactor expansion up to 4x4, Bareiss beyond.
template <class Ring>
Ring determinant(const Matrix<Ring>& m) {
    return m.dim() <= 4 ? cofactor_determinant(m) : bareiss_determinant(m);
}

} // namespace twinrow
