#include "twinrow/genfun.hpp"

#include "twinrow/errors.hpp"
#include "twinrow/matrix.hpp"
#include "twinrow/symmetric.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace twinrow {

namespace {

void require_n(std::size_t n) {
    if (n < 2)
        throw std::invalid_argument("generating-function routes need n >= 2");
}

XPolynomial x_power(std::size_t n, std::size_t i, unsigned k) {
    ExponentVector e(n);
    e[i] = k;
    return XPolynomial::monomial(std::move(e), 1);
}

// det(column_j(x_i)) / Delta under x -> sqrt(t) x; column j (0-based) is x^{lo[j]} (+ x^{hi[j]}).
XSeries determinant_quotient(std::size_t n, const std::vector<unsigned>& lo, const std::vector<int>& hi) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            XPolynomial entry = x_power(n, i, lo[j]);
            if (hi[j] >= 0)
                entry += x_power(n, i, static_cast<unsigned>(hi[j]));
            m.set(i, j, std::move(entry));
        }
    return sqrt_t_substitute(divide_by_vandermonde(determinant(m)));
}

std::string first_difference(const XSeries& a, const XSeries& b, std::size_t upto) {
    for (std::size_t k = 0; k <= upto; ++k) {
        const XPolynomial ca = a.coeff(k), cb = b.coeff(k);
        if (ca == cb)
            continue;
        std::string msg = "first difference at t^" + std::to_string(k);
        try {
            msg += ": Schur difference " + to_string(schur_decompose(ca) - schur_decompose(cb));
        } catch (const std::invalid_argument&) {
            msg += ": (non-symmetric coefficient)";
        }
        return msg;
    }
    return {};
}

void expect_same(const char* what, const XSeries& a, const XSeries& b, std::size_t upto) {
    const std::string diff = first_difference(a, b, upto);
    if (!diff.empty())
        throw RouteMismatch(std::string(what) + " routes disagree, " + diff);
}

} // namespace

XSeries f_product(std::size_t n) {
    require_n(n);
    std::vector<XPolynomial> c{XPolynomial::one(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            ExponentVector e(n);
            e[i] = 1;
            e[j] = 1;
            // multiply by (1 - x_i x_j t)
            c.emplace_back(n);
            for (std::size_t k = c.size() - 1; k > 0; --k)
                c[k] -= c[k - 1].shifted(e);
        }
    return XSeries::polynomial(n, std::move(c));
}

XSeries f_weyl_determinant(std::size_t n) {
    require_n(n);
    std::vector<unsigned> lo(n);
    std::vector<int> hi(n, -1);
    for (std::size_t j = 1; j <= n; ++j) {
        lo[j - 1] = static_cast<unsigned>(n - j);
        if (j >= 2)
            hi[j - 1] = static_cast<int>(n + j - 2);
    }
    return determinant_quotient(n, lo, hi);
}

XPolynomial Z_from_f(const XSeries& f, std::size_t d) {
    const std::size_t N = pair_count(f.nvars());
    if (d > N)
        throw std::out_of_range("Z_from_f: d exceeds N");
    const XPolynomial c = f.coeff(d);
    return d % 2 == 0 ? c : -c;
}

SchurExpansion Z_hook_sum(int d, std::size_t n) {
    SchurExpansion out;
    for (const auto& beta : strict_partitions(d, 1)) {
        const Partition shape = hook_sum_partition_Z(beta);
        if (shape.length() <= n)
            out.add(shape, 1);
    }
    return out;
}

XSeries g_weyl_determinant(std::size_t n) {
    require_n(n);
    std::vector<unsigned> lo(n);
    std::vector<int> hi(n, -1);
    for (std::size_t j = 1; j <= n; ++j) {
        lo[j - 1] = static_cast<unsigned>(n - j);
        if (j >= 4)
            hi[j - 1] = static_cast<int>(n + j - 4);
    }
    return determinant_quotient(n, lo, hi);
}

SchurExpansion G_hook_sum(int k, std::size_t n) {
    if (k < 0)
        throw std::invalid_argument("G_hook_sum: negative index");
    SchurExpansion out;
    if (k == 0) {
        out.add(Partition{}, 1);
        return out;
    }
    // j parts >= 3, all distinct, summing to k + j needs 2j + j(j-1)/2 <= k.
    for (int j = 1; 2 * j + j * (j - 1) / 2 <= k; ++j) {
        const Integer sign = (k + j) % 2 == 0 ? 1 : -1;
        for (const auto& beta : strict_partitions(k + j, 3, j)) {
            const Partition shape = hook_sum_partition_G(beta);
            if (shape.length() <= n)
                out.add(shape, sign);
        }
    }
    return out;
}

XSeries F_direct(std::size_t n, std::size_t K) {
    require_n(n);
    std::vector<XPolynomial> c;
    c.reserve(K + 1);
    for (std::size_t k = 0; k <= K; ++k)
        c.push_back(weyl_character(Partition{static_cast<int>(k), static_cast<int>(k)}, n));
    return XSeries(n, std::move(c), K, false);
}

ZSeries to_z_series(const XSeries& s) {
    ElementaryProducts ep(s.nvars());
    return s.map([&](const XPolynomial& p) { return ep.to_z(MonomialSymmetric::from_x(p)); });
}

XSeries to_x_series(const ZSeries& s, std::size_t n) {
    ElementaryProducts ep(n);
    std::vector<XPolynomial> c;
    c.reserve(s.order() + 1);
    for (const auto& z : s.coeffs())
        c.push_back(ep.from_z(z).to_x());
    return XSeries(n, std::move(c), s.order(), s.is_polynomial());
}

// The products below run on z-representations: all coefficients are symmetric,
// and z-polynomials are much smaller than their x-expansions.

XSeries F_from_ratio(std::size_t n, std::size_t K) {
    const ZSeries g = to_z_series(g_weyl_determinant(n));
    const ZSeries f = to_z_series(f_weyl_determinant(n));
    return to_x_series(tseries_mul(g, tseries_invert(f, K), K), n);
}

XSeries g_from_series(std::size_t n) {
    require_n(n);
    const std::size_t top = pair_count(n) - 1;
    const ZSeries F = to_z_series(F_direct(n, top));
    const ZSeries f = to_z_series(f_product(n));
    const XSeries g = to_x_series(tseries_mul(F, f, top), n);
    return XSeries(n, g.coeffs(), top, true);
}

XSeries f_times_F(std::size_t n, std::size_t K) {
    const ZSeries F = to_z_series(F_direct(n, K));
    const ZSeries f = to_z_series(f_product(n));
    return to_x_series(tseries_mul(f, F, K), n);
}

GenFunBundle bundle(std::size_t n, std::size_t K) {
    require_n(n);
    const std::size_t N = pair_count(n);
    const XSeries f = f_product(n);
    expect_same("f (product vs determinant)", f, f_weyl_determinant(n), N);
    if (f.degree() != N)
        throw RouteMismatch("f does not have t-degree N = " + std::to_string(N));

    const XSeries g = g_weyl_determinant(n);
    if (g.degree().value_or(0) > N - 1)
        throw RouteMismatch("g has t-degree above N-1");
    expect_same("g (determinant vs F*f)", g, g_from_series(n), N - 1);

    const XSeries F = F_direct(n, K);
    expect_same("F (direct vs g/f)", F, F_from_ratio(n, K), K);
    const XSeries fF = f_times_F(n, K);
    expect_same("g vs f*F", g.truncated(K), fF, K);
    return GenFunBundle{n, K, f, g, F};
}

} // namespace twinrow
