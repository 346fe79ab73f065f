#include "twinrow/symmetric.hpp"

#include "twinrow/errors.hpp"
#include "twinrow/partitions.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace twinrow {

Integer orbit_size(const ExponentVector& e) {
    ExponentVector s = e.sorted_decreasing();
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i])
            ++j;
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), j - i);
        r /= f;
        i = j;
    }
    return r;
}

MonomialSymmetric MonomialSymmetric::one(std::size_t nvars) {
    MonomialSymmetric m(nvars);
    m.terms_.emplace(ExponentVector(nvars), Integer(1));
    return m;
}

MonomialSymmetric MonomialSymmetric::from_x(const XPolynomial& p) {
    MonomialSymmetric m(p.nvars());
    for (const auto& [e, c] : p.terms())
        if (e.is_weakly_decreasing())
            m.terms_.emplace(e, c);
    Integer expected_terms = 0;
    for (const auto& [mu, c] : m.terms_)
        expected_terms += orbit_size(mu);
    if (expected_terms != static_cast<unsigned long>(p.size()))
        throw std::invalid_argument("polynomial is not symmetric");
    for (const auto& [e, c] : p.terms()) {
        auto it = m.terms_.find(e.sorted_decreasing());
        if (it == m.terms_.end() || it->second != c)
            throw std::invalid_argument("polynomial is not symmetric");
    }
    return m;
}

XPolynomial MonomialSymmetric::to_x() const {
    std::vector<XPolynomial::Term> out;
    for (const auto& [mu, c] : terms_) {
        std::vector<ExponentVector::value_type> v(mu.begin(), mu.end());
        std::sort(v.begin(), v.end());
        do {
            out.emplace_back(ExponentVector(std::span<const ExponentVector::value_type>(v)), c);
        } while (std::next_permutation(v.begin(), v.end()));
    }
    return XPolynomial::from_terms(n_, std::move(out));
}

Integer MonomialSymmetric::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e.is_weakly_decreasing() ? e : e.sorted_decreasing());
    return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<std::pair<ExponentVector, Integer>> MonomialSymmetric::leading() const {
    if (terms_.empty())
        return std::nullopt;
    return *terms_.begin();
}

void MonomialSymmetric::add(const ExponentVector& mu, const Integer& c) {
    if (c == 0)
        return;
    if (mu.size() != n_ || !mu.is_weakly_decreasing())
        throw std::invalid_argument("monomial symmetric key must be a dominant exponent vector");
    auto [it, inserted] = terms_.try_emplace(mu, 0);
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

void MonomialSymmetric::add_scaled(const MonomialSymmetric& other, const Integer& c) {
    if (other.n_ != n_)
        throw std::invalid_argument("variable-count mismatch");
    for (const auto& [mu, d] : other.terms_)
        add(mu, d * c);
}

MonomialSymmetric MonomialSymmetric::times_elementary(std::size_t j) const {
    if (j == 0)
        return *this;
    MonomialSymmetric out(n_);
    if (j > n_)
        return out;
    std::vector<unsigned> masks;
    for (unsigned mask = 0; mask < (1u << n_); ++mask)
        if (static_cast<std::size_t>(__builtin_popcount(mask)) == j)
            masks.push_back(mask);

    // coefficient of m_mu = sum_lambda c_lambda |orbit lambda| #{S : sort(lambda + 1_S) = mu} / |orbit mu|
    Map acc;
    for (const auto& [lambda, c] : terms_) {
        const Integer w = c * orbit_size(lambda);
        for (unsigned mask : masks) {
            ExponentVector nu = lambda;
            for (std::size_t i = 0; i < n_; ++i)
                if (mask & (1u << i))
                    ++nu[i];
            acc[nu.sorted_decreasing()] += w;
        }
    }
    for (auto& [mu, v] : acc) {
        const Integer orb = orbit_size(mu);
        Integer q = v / orb;
        if (q * orb != v)
            throw InvariantError("monomial-basis product with e_j is not integral");
        if (q != 0)
            out.terms_.emplace(mu, std::move(q));
    }
    return out;
}

bool is_symmetric(const XPolynomial& p) {
    try {
        (void)MonomialSymmetric::from_x(p);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

const MonomialSymmetric& ElementaryProducts::get(const ExponentVector& a) {
    for (std::size_t j = n_; j < a.size(); ++j)
        if (a[j] != 0)
            return zero_;
    ExponentVector key(n_);
    for (std::size_t j = 0; j < std::min(n_, a.size()); ++j)
        key[j] = a[j];
    if (auto it = cache_.find(key); it != cache_.end())
        return it->second;
    std::size_t top = n_;
    while (top > 0 && key[top - 1] == 0)
        --top;
    if (top == 0)
        return cache_.emplace(key, MonomialSymmetric::one(n_)).first->second;
    ExponentVector prev = key;
    --prev[top - 1];
    MonomialSymmetric value = get(prev).times_elementary(top);
    return cache_.emplace(key, std::move(value)).first->second;
}

MonomialSymmetric ElementaryProducts::from_z(const ZPolynomial& p) {
    MonomialSymmetric out(n_);
    for (const auto& [a, c] : p.terms())
        out.add_scaled(get(a), c);
    return out;
}

ZPolynomial ElementaryProducts::to_z(MonomialSymmetric p) {
    if (p.nvars() != n_)
        throw std::invalid_argument("variable-count mismatch");
    // Each step removes the leading dominant monomial, so the number of steps is
    // bounded by the number of partitions of the degrees involved.
    std::size_t guard = 0;
    if (auto lead = p.leading()) {
        const int top = static_cast<int>(lead->first.degree());
        for (int d = 0; d <= top; ++d)
            guard += partitions_of(d, static_cast<int>(n_)).size();
    }
    std::vector<ZPolynomial::Term> out;
    std::size_t steps = 0;
    while (auto lead = p.leading()) {
        if (++steps > guard)
            throw InvariantError("x_to_z: iteration guard exceeded");
        const auto& [mu, c] = *lead;
        ExponentVector a(n_);
        for (std::size_t j = 0; j < n_; ++j)
            a[j] = mu[j] - (j + 1 < n_ ? mu[j + 1] : 0);
        const Integer coeff = c;
        p.add_scaled(get(a), -coeff);
        out.emplace_back(std::move(a), coeff);
    }
    return ZPolynomial::from_terms(n_, std::move(out));
}

} // namespace twinrow
