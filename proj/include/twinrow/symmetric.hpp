#pragma once

#include "twinrow/polynomial.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>

namespace twinrow {

/// Symmetric polynomial in n variables, stored in the monomial symmetric basis:
/// one coefficient per weakly decreasing exponent vector mu, standing for the
/// sum m_mu of all distinct permutations of x^mu.
///
/// This is the compact bridge between x-polynomials (expanded), z-polynomials
/// and Schur expansions; none of those conversions needs full x-products.
class MonomialSymmetric {
public:
    using Map = std::map<ExponentVector, Integer, GrlexGreater>;

    explicit MonomialSymmetric(std::size_t nvars) : n_(nvars) {}

    // Throws std::invalid_argument when p is not symmetric.
    static MonomialSymmetric from_x(const XPolynomial& p);

    static MonomialSymmetric one(std::size_t nvars);

    XPolynomial to_x() const;

    std::size_t nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const Map& terms() const { return terms_; }

    // Coefficient of any monomial x^e (e need not be sorted).
    Integer coefficient(const ExponentVector& e) const;

    // Largest dominant monomial in graded-lex order, which is also the leading
    // monomial of the expanded polynomial.
    std::optional<std::pair<ExponentVector, Integer>> leading() const;

    void add(const ExponentVector& mu, const Integer& c);
    void add_scaled(const MonomialSymmetric& other, const Integer& c);

    // Product with the elementary symmetric polynomial e_j.
    MonomialSymmetric times_elementary(std::size_t j) const;

    friend bool operator==(const MonomialSymmetric&, const MonomialSymmetric&) = default;

private:
    std::size_t n_;
    Map terms_;
};

/// Number of distinct permutations of an exponent vector.
Integer orbit_size(const ExponentVector& e);

bool is_symmetric(const XPolynomial& p);

/// Memoized monomial-basis forms of products z^a = e_1^{a_1} ... e_n^{a_n}.
/// Not thread-safe; create one per thread.
class ElementaryProducts {
public:
    explicit ElementaryProducts(std::size_t nvars) : n_(nvars), zero_(nvars) {}

    std::size_t nvars() const { return n_; }

    // Indices beyond n contribute zero (e_j = 0 for j > n).
    const MonomialSymmetric& get(const ExponentVector& a);

    MonomialSymmetric from_z(const ZPolynomial& p);

    // Inverse of from_z: the unique z-polynomial (in n z-variables) with the given value.
    ZPolynomial to_z(MonomialSymmetric p);

private:
    std::size_t n_;
    MonomialSymmetric zero_;
    std::map<ExponentVector, MonomialSymmetric, GrlexGreater> cache_;
};

} // namespace twinrow
