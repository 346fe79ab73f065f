#pragma once

#include "twinrow/errors.hpp"
#include "twinrow/polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace twinrow {

/// Truncated power series in the formal variable t with polynomial coefficients.
///
/// A series known up to t^K stores exactly K+1 coefficients; coefficients of
/// t^{K+1} and beyond are unknown. When `is_polynomial()` holds those higher
/// coefficients are known to be zero and the series can be extended freely.
template <class Ring>
class TSeries {
public:
    TSeries(std::size_t nvars, std::vector<Ring> coeffs, std::size_t order, bool polynomial)
        : n_(nvars), c_(std::move(coeffs)), order_(order), polynomial_(polynomial) {
        if (c_.size() > order_ + 1)
            throw std::invalid_argument("more coefficients than the truncation order allows");
        for (const auto& c : c_)
            if (c.nvars() != n_)
                throw std::invalid_argument("series coefficient with wrong variable count");
        c_.resize(order_ + 1, Ring(n_));
    }

    // Exact polynomial sum_k coeffs[k] t^k.
    static TSeries polynomial(std::size_t nvars, std::vector<Ring> coeffs) {
        const std::size_t order = coeffs.empty() ? 0 : coeffs.size() - 1;
        return TSeries(nvars, std::move(coeffs), order, true);
    }

    static TSeries one(std::size_t nvars) { return polynomial(nvars, {Ring::one(nvars)}); }

    std::size_t nvars() const { return n_; }
    std::size_t order() const { return order_; }
    bool is_polynomial() const { return polynomial_; }
    const std::vector<Ring>& coeffs() const { return c_; }

    // Coefficient of t^k. Beyond the order this is zero for polynomials and an error otherwise.
    Ring coeff(std::size_t k) const {
        if (k <= order_)
            return c_[k];
        if (polynomial_)
            return Ring(n_);
        throw std::out_of_range("coefficient beyond the truncation order is unknown");
    }

    // Highest nonzero power, or nullopt for the zero series.
    std::optional<std::size_t> degree() const {
        for (std::size_t k = c_.size(); k-- > 0;)
            if (!c_[k].is_zero())
                return k;
        return std::nullopt;
    }

    TSeries truncated(std::size_t k) const {
        if (k > order_ && !polynomial_)
            throw std::out_of_range("cannot extend a truncated series");
        std::vector<Ring> c;
        c.reserve(k + 1);
        for (std::size_t i = 0; i <= k; ++i)
            c.push_back(coeff(i));
        const bool still_poly = polynomial_ && k >= degree().value_or(0);
        return TSeries(n_, std::move(c), k, still_poly);
    }

    template <class F>
    auto map(F&& f) const {
        using R = decltype(f(c_[0]));
        std::vector<R> c;
        c.reserve(c_.size());
        for (const auto& x : c_)
            c.push_back(f(x));
        const std::size_t n = c.empty() ? 0 : c.front().nvars();
        return TSeries<R>(n, std::move(c), order_, polynomial_);
    }

    friend bool operator==(const TSeries& a, const TSeries& b) {
        return a.n_ == b.n_ && a.order_ == b.order_ && a.c_ == b.c_;
    }

private:
    std::size_t n_;
    std::vector<Ring> c_;
    std::size_t order_;
    bool polynomial_;
};

namespace detail {

template <class Ring>
std::size_t effective_order(const TSeries<Ring>& s) {
    return s.is_polynomial() ? std::numeric_limits<std::size_t>::max() : s.order();
}

} // namespace detail

/// Cauchy product truncated at t^K (and at the smaller order of the operands).
template <class Ring>
TSeries<Ring> tseries_mul(const TSeries<Ring>& a, const TSeries<Ring>& b, std::size_t K) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("series variable-count mismatch");
    const std::size_t order = std::min({K, detail::effective_order(a), detail::effective_order(b)});
    std::vector<Ring> out;
    out.reserve(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        Ring acc(a.nvars());
        for (std::size_t i = 0; i <= k; ++i) {
            if (i > a.order() && a.is_polynomial())
                break;
            if (k - i > b.order() && b.is_polynomial())
                continue;
            const Ring& ai = a.coeffs()[i];
            if (ai.is_zero())
                continue;
            const Ring& bj = b.coeffs()[k - i];
            if (bj.is_zero())
                continue;
            acc += ai * bj;
        }
        out.push_back(std::move(acc));
    }
    const bool poly = a.is_polynomial() && b.is_polynomial() && order >= a.order() + b.order();
    return TSeries<Ring>(a.nvars(), std::move(out), order, poly);
}

template <class Ring>
TSeries<Ring> tseries_add(const TSeries<Ring>& a, const TSeries<Ring>& b) {
    const std::size_t order = std::min(detail::effective_order(a), detail::effective_order(b));
    const bool poly = a.is_polynomial() && b.is_polynomial();
    const std::size_t k = poly ? std::max(a.order(), b.order()) : order;
    std::vector<Ring> out;
    out.reserve(k + 1);
    for (std::size_t i = 0; i <= k; ++i)
        out.push_back(a.coeff(i) + b.coeff(i));
    return TSeries<Ring>(a.nvars(), std::move(out), k, poly);
}

/// b with a * b == 1 mod t^{K+1}. Requires a(0) == 1.
template <class Ring>
TSeries<Ring> tseries_invert(const TSeries<Ring>& a, std::size_t K) {
    const auto one = Ring::one(a.nvars());
    if (!(a.coeff(0) == one))
        throw std::domain_error("tseries_invert: constant term must be 1");
    const std::size_t order = std::min(K, detail::effective_order(a));
    std::vector<Ring> b;
    b.reserve(order + 1);
    b.push_back(one);
    for (std::size_t k = 1; k <= order; ++k) {
        Ring acc(a.nvars());
        for (std::size_t i = 1; i <= k; ++i) {
            if (i > a.order() && a.is_polynomial())
                break;
            const Ring& ai = a.coeffs()[i];
            if (!ai.is_zero())
                acc += ai * b[k - i];
        }
        b.push_back(-acc);
    }
    return TSeries<Ring>(a.nvars(), std::move(b), order, false);
}

/// exp(a) mod t^{K+1} over a rational coefficient ring. Requires a(0) == 0.
template <class Ring>
TSeries<Ring> tseries_exp(const TSeries<Ring>& a, std::size_t K) {
    if (!a.coeff(0).is_zero())
        throw std::domain_error("tseries_exp: constant term must be 0");
    const std::size_t order = std::min(K, detail::effective_order(a));
    // b' = a' b  =>  k b_k = sum_{i=1}^k i a_i b_{k-i}
    std::vector<Ring> b;
    b.reserve(order + 1);
    b.push_back(Ring::one(a.nvars()));
    for (std::size_t k = 1; k <= order; ++k) {
        Ring acc(a.nvars());
        for (std::size_t i = 1; i <= k; ++i) {
            const Ring ai = a.coeff(i);
            if (!ai.is_zero())
                acc += (ai * b[k - i]).scaled(Rational(static_cast<long>(i)));
        }
        b.push_back(acc.scaled(Rational(1, static_cast<long>(k))));
    }
    return TSeries<Ring>(a.nvars(), std::move(b), order, false);
}

/// log(a) mod t^{K+1} over a rational coefficient ring. Requires a(0) == 1.
template <class Ring>
TSeries<Ring> tseries_log(const TSeries<Ring>& a, std::size_t K) {
    if (!(a.coeff(0) == Ring::one(a.nvars())))
        throw std::domain_error("tseries_log: constant term must be 1");
    const std::size_t order = std::min(K, detail::effective_order(a));
    // a b' = a'  =>  k b_k = k a_k - sum_{i=1}^{k-1} i b_i a_{k-i}
    std::vector<Ring> b;
    b.reserve(order + 1);
    b.emplace_back(a.nvars());
    for (std::size_t k = 1; k <= order; ++k) {
        Ring acc = a.coeff(k).scaled(Rational(static_cast<long>(k)));
        for (std::size_t i = 1; i < k; ++i) {
            const Ring aki = a.coeff(k - i);
            if (!aki.is_zero() && !b[i].is_zero())
                acc -= (b[i] * aki).scaled(Rational(static_cast<long>(i)));
        }
        b.push_back(acc.scaled(Rational(1, static_cast<long>(k))));
    }
    return TSeries<Ring>(a.nvars(), std::move(b), order, false);
}

/// Splits p by total degree and maps the degree-2k component to t^k, i.e. the
/// substitution x_i -> sqrt(t) x_i. Odd-degree components are an error.
template <class Coeff, class Space>
TSeries<SparsePolynomial<Coeff, Space>> sqrt_t_substitute(const SparsePolynomial<Coeff, Space>& p) {
    using Poly = SparsePolynomial<Coeff, Space>;
    std::vector<Poly> c;
    for (auto& [deg, part] : p.homogeneous_split()) {
        if (deg % 2 != 0)
            throw InvariantError("sqrt_t_substitute: odd-degree component of degree " + std::to_string(deg));
        const std::size_t k = deg / 2;
        if (c.size() <= k)
            c.resize(k + 1, Poly(p.nvars()));
        c[k] = part;
    }
    if (c.empty())
        c.emplace_back(p.nvars());
    return TSeries<Poly>::polynomial(p.nvars(), std::move(c));
}

} // namespace twinrow
