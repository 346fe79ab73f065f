#include "twinrow/characters.hpp"

#include "twinrow/errors.hpp"
#include "twinrow/matrix.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace twinrow {

SchurExpansion::SchurExpansion(std::initializer_list<std::pair<const Partition, Integer>> init) {
    for (const auto& [p, c] : init)
        add(p, c);
}

Integer SchurExpansion::coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Integer(0) : it->second;
}

void SchurExpansion::add(const Partition& p, const Integer& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(p, 0);
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& o) {
    for (const auto& [p, c] : o.terms_)
        add(p, c);
    return *this;
}

SchurExpansion SchurExpansion::operator-() const {
    SchurExpansion r = *this;
    for (auto& [p, c] : r.terms_)
        c = -c;
    return r;
}

SchurExpansion SchurExpansion::truncated_to(std::size_t n) const {
    SchurExpansion r;
    for (const auto& [p, c] : terms_)
        if (p.length() <= n)
            r.add(p, c);
    return r;
}

std::string to_string(const SchurExpansion& e) {
    if (e.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : e.terms()) {
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (mag != 1)
            out += mag.get_str() + ' ';
        out += to_string(p);
    }
    return out;
}

XPolynomial vandermonde(std::size_t n) {
    XPolynomial v = XPolynomial::one(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            v *= XPolynomial::variable(n, i) - XPolynomial::variable(n, j);
    return v;
}

XPolynomial alternant(std::span<const unsigned> exponents) {
    const std::size_t n = exponents.size();
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ExponentVector e(n);
            e[i] = exponents[j];
            m.set(i, j, XPolynomial::monomial(std::move(e), 1));
        }
    return determinant(m);
}

XPolynomial divide_by_vandermonde(const XPolynomial& p) {
    const std::size_t n = p.nvars();
    XPolynomial q = p;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            q = exact_div(q, XPolynomial::variable(n, i) - XPolynomial::variable(n, j));
    return q;
}

XPolynomial weyl_character(const Partition& k, std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("weyl_character: n must be positive");
    if (k.length() > n)
        return XPolynomial(n);
    std::vector<unsigned> exps(n);
    for (std::size_t i = 0; i < n; ++i)
        exps[i] = static_cast<unsigned>(k[i]) + static_cast<unsigned>(n - 1 - i);
    return divide_by_vandermonde(alternant(exps));
}

XPolynomial elementary_z(int j, std::size_t n) {
    if (j < 0 || static_cast<std::size_t>(j) > n)
        return XPolynomial(n);
    std::vector<XPolynomial::Term> terms;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != j)
            continue;
        ExponentVector e(n);
        for (std::size_t i = 0; i < n; ++i)
            e[i] = (mask >> i) & 1u;
        terms.emplace_back(std::move(e), 1);
    }
    return XPolynomial::from_terms(n, std::move(terms));
}

namespace {

// z_index as a polynomial in nvars z-variables, vanishing above `limit`.
ZPolynomial z_entry(int index, std::size_t nvars, std::size_t limit) {
    if (index < 0 || static_cast<std::size_t>(index) > limit)
        return ZPolynomial(nvars);
    if (index == 0)
        return ZPolynomial::one(nvars);
    return ZPolynomial::variable(nvars, static_cast<std::size_t>(index - 1));
}

ZPolynomial giambelli_determinant(const Partition& k, std::size_t nvars, std::size_t limit) {
    const Partition l = conjugate(k);
    const std::size_t m = l.length();
    Matrix<ZPolynomial> mat(m, nvars);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            mat.set(i, j, z_entry(l[i] - static_cast<int>(i) + static_cast<int>(j), nvars, limit));
    return determinant(mat);
}

} // namespace

ZPolynomial giambelli_character(const Partition& k, std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("giambelli_character: n must be positive");
    return giambelli_determinant(k, n, n);
}

ZPolynomial giambelli_stable(const Partition& k, std::size_t nvars) {
    const std::size_t m = std::max<std::size_t>({nvars, static_cast<std::size_t>(k.weight()), 1});
    return giambelli_determinant(k, m, m);
}

XPolynomial z_to_x(const ZPolynomial& p, std::size_t n) {
    ElementaryProducts ep(n);
    return ep.from_z(p).to_x();
}

ZPolynomial x_to_z(const XPolynomial& p) {
    ElementaryProducts ep(p.nvars());
    return ep.to_z(MonomialSymmetric::from_x(p));
}

SchurExpansion schur_decompose(const MonomialSymmetric& p) {
    // p * a_delta = sum_lambda c_lambda a_{lambda+delta}, and x^{lambda+delta} occurs in
    // a_{mu+delta} only for mu = lambda, so c_lambda = [x^{lambda+delta}] (p * Delta).
    const std::size_t n = p.nvars();
    const XPolynomial delta_poly = vandermonde(n);
    std::set<std::uint64_t> degrees;
    for (const auto& [mu, c] : p.terms())
        degrees.insert(mu.degree());
    SchurExpansion out;
    for (auto d : degrees) {
        for (const Partition& lambda : partitions_of(static_cast<int>(d), static_cast<int>(n))) {
            const auto rows = lambda.padded(n);
            Integer c = 0;
            for (const auto& [e, s] : delta_poly.terms()) {
                ExponentVector beta(n);
                bool ok = true;
                for (std::size_t i = 0; i < n && ok; ++i) {
                    const long v = static_cast<long>(rows[i]) + static_cast<long>(n - 1 - i) - static_cast<long>(e[i]);
                    if (v < 0)
                        ok = false;
                    else
                        beta[i] = static_cast<ExponentVector::value_type>(v);
                }
                if (ok)
                    c += s * p.coefficient(beta);
            }
            out.add(lambda, c);
        }
    }
    return out;
}

SchurExpansion schur_decompose(const XPolynomial& p) { return schur_decompose(MonomialSymmetric::from_x(p)); }

SchurExpansion schur_decompose(const ZPolynomial& p, std::size_t n) {
    ElementaryProducts ep(n);
    return schur_decompose(ep.from_z(p));
}

XPolynomial schur_to_x(const SchurExpansion& e, std::size_t n) {
    XPolynomial r(n);
    for (const auto& [p, c] : e.terms())
        r += weyl_character(p, n).scaled(c);
    return r;
}

ZPolynomial schur_to_z(const SchurExpansion& e, std::size_t n) {
    ZPolynomial r(n);
    for (const auto& [p, c] : e.terms())
        r += giambelli_character(p, n).scaled(c);
    return r;
}

ZPolynomial schur_to_z_stable(const SchurExpansion& e, std::size_t nvars) {
    std::size_t m = std::max<std::size_t>(nvars, 1);
    for (const auto& [p, c] : e.terms())
        m = std::max(m, static_cast<std::size_t>(p.weight()));
    ZPolynomial r(m);
    for (const auto& [p, c] : e.terms())
        r += giambelli_stable(p, m).scaled(c);
    return r;
}

ZPolynomial su_specialize(const ZPolynomial& p, std::size_t n) {
    if (p.nvars() != n)
        throw std::invalid_argument("su_specialize: expected a polynomial in z_1..z_n");
    std::vector<ZPolynomial::Term> terms;
    for (const auto& [a, c] : p.terms()) {
        ExponentVector b = a;
        b[n - 1] = 0;
        terms.emplace_back(std::move(b), c);
    }
    return ZPolynomial::from_terms(n, std::move(terms));
}

SchurExpansion su_specialize(const SchurExpansion& e, std::size_t n) {
    SchurExpansion r;
    for (const auto& [p, c] : e.terms()) {
        if (p.length() > n)
            continue;
        if (p.length() < n) {
            r.add(p, c);
            continue;
        }
        std::vector<int> rows = p.parts();
        const int full = rows.back();
        for (auto& v : rows)
            v -= full;
        r.add(Partition(std::move(rows)), c);
    }
    return r;
}

} // namespace twinrow
