#pragma once

#include "twinrow/characters.hpp"
#include "twinrow/polynomial.hpp"
#include "twinrow/tseries.hpp"

#include <cstddef>

namespace twinrow {

using XSeries = TSeries<XPolynomial>;
using ZSeries = TSeries<ZPolynomial>;

/// N = n(n-1)/2, the t-degree of f.
constexpr std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

/// Default truncation order N + 2.
constexpr std::size_t default_order(std::size_t n) { return pair_count(n) + 2; }

/// f = prod_{i<j} (1 - t x_i x_j).
XSeries f_product(std::size_t n);

/// f from the determinant with columns x^{n-1}, x^{n-j} + x^{n+j-2} (j >= 2),
/// divided by the Vandermonde determinant, under x -> sqrt(t) x.
XSeries f_weyl_determinant(std::size_t n);

/// Z_d = (-1)^d [t^d] f.
XPolynomial Z_from_f(const XSeries& f, std::size_t d);

/// Sum of Schur polynomials over the shapes (beta-1 | beta), beta a strict partition of d;
/// shapes with more than n rows are dropped.
SchurExpansion Z_hook_sum(int d, std::size_t n);

/// g from the determinant with columns x^{n-1}, x^{n-2}, x^{n-3}, x^{n-j} + x^{n+j-4} (j >= 4).
XSeries g_weyl_determinant(std::size_t n);

/// Signed sum over the shapes (beta-3 | beta), beta a strict partition of k+j into j parts >= 3.
SchurExpansion G_hook_sum(int k, std::size_t n);

/// sum_{k<=K} chi_{(k,k)}(x_1..x_n) t^k from the Weyl character formula.
XSeries F_direct(std::size_t n, std::size_t K);

/// g * f^{-1} mod t^{K+1}, both from their determinant formulas.
XSeries F_from_ratio(std::size_t n, std::size_t K);

/// F_direct(n, N-1) * f_product(n) truncated at t^{N-1}.
XSeries g_from_series(std::size_t n);

/// f_product(n) * F_direct(n, K) mod t^{K+1}; coefficients of t^N..t^K must vanish.
XSeries f_times_F(std::size_t n, std::size_t K);

/// Coefficientwise x -> z (resp. z -> x) conversion of symmetric coefficients.
ZSeries to_z_series(const XSeries& s);
XSeries to_x_series(const ZSeries& s, std::size_t n);

struct GenFunBundle {
    std::size_t n;
    std::size_t K;
    XSeries f;
    XSeries g;
    XSeries F;
};

/// All routes for f, g and F, cross-checked. Throws RouteMismatch naming the first
/// differing power of t and the Schur coefficients that differ.
GenFunBundle bundle(std::size_t n, std::size_t K);

} // namespace twinrow
