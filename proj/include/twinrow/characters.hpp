#pragma once

#include "twinrow/partitions.hpp"
#include "twinrow/polynomial.hpp"
#include "twinrow/symmetric.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>

namespace twinrow {

/// Integer combination of Schur polynomials, keyed by partition.
class SchurExpansion {
public:
    using Map = std::map<Partition, Integer, CanonicalPartitionOrder>;

    SchurExpansion() = default;
    SchurExpansion(std::initializer_list<std::pair<const Partition, Integer>> init);

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(const Partition& p) const;
    void add(const Partition& p, const Integer& c);

    SchurExpansion& operator+=(const SchurExpansion& o);
    SchurExpansion operator-() const;
    friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b) { return a += b; }
    friend SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b) { return a += -b; }
    friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

    // Drops partitions with more than n rows.
    SchurExpansion truncated_to(std::size_t n) const;

private:
    Map terms_;
};

std::string to_string(const SchurExpansion& e);

/// prod_{i<j} (x_i - x_j), expanded.
XPolynomial vandermonde(std::size_t n);

/// det(x_i^{lambda_j}) for the given column exponents; n = exponents.size().
XPolynomial alternant(std::span<const unsigned> exponents);

/// Exact quotient by the Vandermonde product, one linear factor at a time.
XPolynomial divide_by_vandermonde(const XPolynomial& p);

/// Schur polynomial s_k(x_1..x_n) from the Weyl alternant quotient. Zero when k has more than n rows.
XPolynomial weyl_character(const Partition& k, std::size_t n);

/// j-th elementary symmetric polynomial in x_1..x_n; 1 for j = 0 and 0 for j < 0 or j > n.
XPolynomial elementary_z(int j, std::size_t n);

/// Second Giambelli (dual Jacobi-Trudi) determinant det(z_{l_i - i + j}) over the
/// conjugate partition l, with z_0 = 1 and z_j = 0 for j < 0 or j > n.
ZPolynomial giambelli_character(const Partition& k, std::size_t n);

/// The same determinant without the z_j = 0 (j > n) rule: the symmetric function
/// itself, in z_1..z_m with m = max(1, |k|) unless a larger nvars is requested.
ZPolynomial giambelli_stable(const Partition& k, std::size_t nvars = 0);

XPolynomial z_to_x(const ZPolynomial& p, std::size_t n);

/// Unique q in z_1..z_n with z_to_x(q, n) == p. Throws std::invalid_argument for
/// non-symmetric input.
ZPolynomial x_to_z(const XPolynomial& p);

SchurExpansion schur_decompose(const MonomialSymmetric& p);
SchurExpansion schur_decompose(const XPolynomial& p);
SchurExpansion schur_decompose(const ZPolynomial& p, std::size_t n);

XPolynomial schur_to_x(const SchurExpansion& e, std::size_t n);
ZPolynomial schur_to_z(const SchurExpansion& e, std::size_t n);
ZPolynomial schur_to_z_stable(const SchurExpansion& e, std::size_t nvars = 0);

/// SU(n) specialization z_n = 1.
ZPolynomial su_specialize(const ZPolynomial& p, std::size_t n);
SchurExpansion su_specialize(const SchurExpansion& e, std::size_t n);

} // namespace twinrow
