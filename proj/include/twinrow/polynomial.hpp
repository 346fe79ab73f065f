#pragma once

#include "twinrow/errors.hpp"
#include "twinrow/exponent_vector.hpp"
#include "twinrow/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace twinrow {

// Variable spaces. Only used to keep x- and z-polynomials from mixing.
struct XSpace {
    static constexpr char symbol = 'x';
};
struct ZSpace {
    static constexpr char symbol = 'z';
};

/// Sparse multivariate polynomial in `nvars` variables with exact coefficients.
///
/// Terms are kept in canonical form: strictly decreasing graded-lex order, no
/// zero coefficients. The zero polynomial has no terms. Values are immutable
/// through the public interface except for the compound assignment operators.
template <class Coeff, class Space>
class SparsePolynomial {
public:
    using coeff_type = Coeff;
    using space_type = Space;
    using Term = std::pair<ExponentVector, Coeff>;

    SparsePolynomial() = default;
    explicit SparsePolynomial(std::size_t nvars) : n_(nvars) {}

    static SparsePolynomial constant(std::size_t nvars, const Coeff& c) {
        SparsePolynomial p(nvars);
        if (c != 0)
            p.terms_.emplace_back(ExponentVector(nvars), c);
        return p;
    }

    static SparsePolynomial one(std::size_t nvars) { return constant(nvars, Coeff(1)); }

    // The variable with index i (0-based).
    static SparsePolynomial variable(std::size_t nvars, std::size_t i) {
        if (i >= nvars)
            throw std::out_of_range("variable index out of range");
        ExponentVector e(nvars);
        e[i] = 1;
        return monomial(std::move(e), Coeff(1));
    }

    static SparsePolynomial monomial(ExponentVector e, const Coeff& c) {
        SparsePolynomial p(e.size());
        if (c != 0)
            p.terms_.emplace_back(std::move(e), c);
        return p;
    }

    // Builds from arbitrary (possibly repeated, possibly zero) terms.
    static SparsePolynomial from_terms(std::size_t nvars, std::vector<Term> terms) {
        SparsePolynomial p(nvars);
        for (const auto& t : terms)
            if (t.first.size() != nvars)
                throw std::invalid_argument("exponent vector length does not match variable count");
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    std::size_t nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Term& leading_term() const {
        if (terms_.empty())
            throw std::domain_error("leading term of the zero polynomial");
        return terms_.front();
    }

    // Total degree; undefined (throws) for zero.
    std::uint64_t degree() const {
        return leading_term().first.degree();
    }

    bool is_homogeneous() const {
        if (terms_.empty())
            return true;
        const auto d = terms_.front().first.degree();
        return std::all_of(terms_.begin(), terms_.end(),
                           [d](const Term& t) { return t.first.degree() == d; });
    }

    Coeff coefficient(const ExponentVector& e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, const ExponentVector& k) { return grlex_less(k, t.first); });
        if (it != terms_.end() && it->first == e)
            return it->second;
        return Coeff(0);
    }

    Coeff constant_term() const { return coefficient(ExponentVector(n_)); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.front().first.degree() == 0);
    }

    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    SparsePolynomial operator-() const {
        SparsePolynomial r = *this;
        for (auto& t : r.terms_)
            t.second = -t.second;
        return r;
    }

    SparsePolynomial& operator+=(const SparsePolynomial& o) { return *this = merge(*this, o, 1); }
    SparsePolynomial& operator-=(const SparsePolynomial& o) { return *this = merge(*this, o, -1); }
    SparsePolynomial& operator*=(const SparsePolynomial& o) { return *this = *this * o; }

    friend SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b) { return merge(a, b, 1); }
    friend SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b) { return merge(a, b, -1); }

    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
        check_same_space(a, b);
        SparsePolynomial r(a.n_);
        if (a.is_zero() || b.is_zero())
            return r;
        if (b.size() == 1 || a.size() == 1) {
            // Monomial multiplication preserves the order, no sort needed.
            const auto& [big, small] = a.size() == 1 ? std::pair{&b, &a} : std::pair{&a, &b};
            const auto& [me, mc] = small->terms_.front();
            r.terms_.reserve(big->size());
            for (const auto& [e, c] : big->terms_)
                r.terms_.emplace_back(e + me, c * mc);
            return r;
        }
        std::unordered_map<ExponentVector, Coeff, ExponentHash> acc;
        acc.reserve(a.size() * b.size());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                acc[ea + eb] += ca * cb;
        r.terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (c != 0)
                r.terms_.emplace_back(e, std::move(c));
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return grlex_less(y.first, x.first); });
        return r;
    }

    SparsePolynomial scaled(const Coeff& c) const {
        if (c == 0)
            return SparsePolynomial(n_);
        SparsePolynomial r = *this;
        for (auto& t : r.terms_)
            t.second *= c;
        return r;
    }

    // Multiplication by a monomial x^e.
    SparsePolynomial shifted(const ExponentVector& e) const {
        SparsePolynomial r = *this;
        for (auto& t : r.terms_)
            t.first += e;
        return r;
    }

    SparsePolynomial pow(unsigned k) const {
        SparsePolynomial r = one(n_);
        for (unsigned i = 0; i < k; ++i)
            r = r * *this;
        return r;
    }

    // Same polynomial viewed in m variables. Dropping variables requires them to be absent.
    SparsePolynomial with_nvars(std::size_t m) const {
        SparsePolynomial r(m);
        r.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) {
            for (std::size_t i = m; i < e.size(); ++i)
                if (e[i] != 0)
                    throw std::domain_error("cannot drop a variable that occurs in the polynomial");
            ExponentVector f = e;
            f.resize(m);
            r.terms_.emplace_back(std::move(f), c);
        }
        if (m < n_)
            r.canonicalize();
        return r;
    }

    // Sets variables with index >= m to zero and views the result in m variables.
    SparsePolynomial truncated_to(std::size_t m) const {
        SparsePolynomial r(m);
        for (const auto& [e, c] : terms_) {
            bool keep = true;
            for (std::size_t i = m; i < e.size(); ++i)
                if (e[i] != 0) {
                    keep = false;
                    break;
                }
            if (!keep)
                continue;
            ExponentVector f = e;
            f.resize(m);
            r.terms_.emplace_back(std::move(f), c);
        }
        r.canonicalize();
        return r;
    }

    // Map degree -> homogeneous component.
    std::map<std::uint64_t, SparsePolynomial> homogeneous_split() const {
        std::map<std::uint64_t, SparsePolynomial> parts;
        for (const auto& t : terms_) {
            auto [it, inserted] = parts.try_emplace(t.first.degree(), n_);
            it->second.terms_.push_back(t);
        }
        return parts;
    }

private:
    static void check_same_space(const SparsePolynomial& a, const SparsePolynomial& b) {
        if (a.n_ != b.n_)
            throw std::invalid_argument("variable-count mismatch: " + std::to_string(a.n_) + " vs " +
                                        std::to_string(b.n_));
    }

    static SparsePolynomial merge(const SparsePolynomial& a, const SparsePolynomial& b, int sign) {
        check_same_space(a, b);
        SparsePolynomial r(a.n_);
        r.terms_.reserve(a.size() + b.size());
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && grlex_less(j->first, i->first))) {
                r.terms_.push_back(*i++);
            } else if (i == a.terms_.end() || grlex_less(i->first, j->first)) {
                r.terms_.emplace_back(j->first, sign > 0 ? j->second : Coeff(-j->second));
                ++j;
            } else {
                Coeff c = sign > 0 ? Coeff(i->second + j->second) : Coeff(i->second - j->second);
                if (c != 0)
                    r.terms_.emplace_back(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }

    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return grlex_less(y.first, x.first); });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Term& t) { return t.second == 0; });
        terms_ = std::move(out);
    }

    std::size_t n_ = 0;
    std::vector<Term> terms_;
};

using XPolynomial = SparsePolynomial<Integer, XSpace>;
using QXPolynomial = SparsePolynomial<Rational, XSpace>;
using ZPolynomial = SparsePolynomial<Integer, ZSpace>;
using QZPolynomial = SparsePolynomial<Rational, ZSpace>;

/// Exact quotient q with q * den == num. Throws DivisibilityError otherwise.
template <class Coeff, class Space>
SparsePolynomial<Coeff, Space> exact_div(const SparsePolynomial<Coeff, Space>& num,
                                         const SparsePolynomial<Coeff, Space>& den) {
    using Poly = SparsePolynomial<Coeff, Space>;
    if (den.is_zero())
        throw std::domain_error("division by the zero polynomial");
    if (num.nvars() != den.nvars())
        throw std::invalid_argument("variable-count mismatch in exact_div");
    if (den.size() == 1) {
        const auto& [de, dc] = den.leading_term();
        std::vector<typename Poly::Term> q;
        q.reserve(num.size());
        for (const auto& [e, c] : num.terms()) {
            if (!de.divides(e))
                throw DivisibilityError("exact_div: monomial divisor does not divide a term");
            Coeff qc = c / dc;
            if (qc * dc != c)
                throw DivisibilityError("exact_div: coefficient not divisible");
            q.emplace_back(e - de, std::move(qc));
        }
        return Poly::from_terms(num.nvars(), std::move(q));
    }

    const auto& [lead_e, lead_c] = den.leading_term();
    std::map<ExponentVector, Coeff, GrlexGreater> rem;
    for (const auto& t : num.terms())
        rem.emplace_hint(rem.end(), t.first, t.second);
    std::vector<typename Poly::Term> q;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!lead_e.divides(it->first))
            throw DivisibilityError("exact_div: nonzero remainder");
        Coeff qc = it->second / lead_c;
        if (qc * lead_c != it->second)
            throw DivisibilityError("exact_div: coefficient not divisible");
        ExponentVector qe = it->first - lead_e;
        rem.erase(it);
        for (std::size_t k = 1; k < den.size(); ++k) {
            const auto& [de, dc] = den.terms()[k];
            auto [pos, inserted] = rem.try_emplace(qe + de, 0);
            pos->second -= qc * dc;
            if (pos->second == 0)
                rem.erase(pos);
        }
        q.emplace_back(std::move(qe), std::move(qc));
    }
    // Quotient terms come out in decreasing order already.
    return Poly::from_terms(num.nvars(), std::move(q));
}

template <class Space>
SparsePolynomial<Rational, Space> to_rational(const SparsePolynomial<Integer, Space>& p) {
    std::vector<typename SparsePolynomial<Rational, Space>::Term> t;
    t.reserve(p.size());
    for (const auto& [e, c] : p.terms())
        t.emplace_back(e, Rational(c));
    return SparsePolynomial<Rational, Space>::from_terms(p.nvars(), std::move(t));
}

/// Integral view of a rational polynomial; throws InvariantError on a fractional coefficient.
template <class Space>
SparsePolynomial<Integer, Space> to_integral(const SparsePolynomial<Rational, Space>& p) {
    std::vector<typename SparsePolynomial<Integer, Space>::Term> t;
    t.reserve(p.size());
    for (const auto& [e, c] : p.terms()) {
        if (!is_integral(c))
            throw InvariantError("expected an integral coefficient, got " + c.get_str());
        t.emplace_back(e, Integer(c.get_num()));
    }
    return SparsePolynomial<Integer, Space>::from_terms(p.nvars(), std::move(t));
}

/// Human-readable form, e.g. "x1^2 x2 - 3 x3 + 1". Terms in canonical order.
template <class Coeff, class Space>
std::string to_string(const SparsePolynomial<Coeff, Space>& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += ' ';
            mono += Space::symbol + std::to_string(i + 1);
            if (e[i] > 1)
                mono += '^' + std::to_string(e[i]);
        }
        const bool negative = c < 0;
        Coeff mag = negative ? Coeff(-c) : c;
        std::string coeff = mag.get_str();
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (mono.empty())
            out += coeff;
        else if (mag == 1)
            out += mono;
        else
            out += coeff + ' ' + mono;
    }
    return out;
}

} // namespace twinrow
