#pragma once

#include "twinrow/characters.hpp"
#include "twinrow/genfun.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace twinrow {

/// D_1 = sum_{p=1}^{m} z_{p-1} d/dz_p with z_0 = 1, m = p.nvars().
///
/// The operators live on symmetric functions: applied to the representation of an
/// element in enough z-variables (see lift_to_stable) they act by box removal on
/// Schur functions. Applied to a polynomial already reduced by z_j = 0 (j > n)
/// they are just the literal finite-m formula.
ZPolynomial D1_z(const ZPolynomial& p);

/// D_2 = (1/2)[sum_{p=2}^{m} z_{p-2} d/dz_p + D_1^2]. Throws InvariantError if the
/// result is not integral.
ZPolynomial D2_z(const ZPolynomial& p);

SchurExpansion D1_graphical(const SchurExpansion& e);
SchurExpansion D2_graphical(const SchurExpansion& e);

/// Unique lift of a symmetric polynomial in x_1..x_n to a symmetric function
/// supported on Schur functions with at most n rows, written in z_1..z_m with m large
/// enough that no z-index is truncated.
ZPolynomial lift_to_stable(const XPolynomial& p);
ZPolynomial lift_to_stable(const ZPolynomial& p, std::size_t n);

struct PowerSumData {
    int k;
    XPolynomial p_k;  // sum_i x_i^k
    XPolynomial m_k;  // sum_{i<j} x_i^k x_j^k
};

/// Throws InvariantError if 2 m_k != p_k^2 - p_{2k}.
PowerSumData power_sum(int k, std::size_t n);

/// exp(-sum_{k=1}^K m_k t^k / k) mod t^{K+1}, computed over the rationals and
/// returned with integral coefficients.
XSeries f_exp_form(std::size_t n, std::size_t K);

enum class CheckStatus { pass, fail };

struct VerificationReport {
    std::string identity;
    std::size_t n = 0;
    std::optional<long> index;
    CheckStatus status = CheckStatus::pass;
    std::optional<std::string> first_mismatch;

    bool passed() const { return status == CheckStatus::pass; }
};

bool all_passed(const std::vector<VerificationReport>& reports);

/// D_1 Z_j = z_1 Z_{j-1} for j = 1..N, one report per j, on the Z_j of the
/// n-variable f. Both the z-derivative route and the box-removal route are run.
std::vector<VerificationReport> verify_D1_f(std::size_t n);

/// D_2 f = [t^2 (z_1^2 - z_2) - t] f coefficientwise for t^0..t^{N+2}.
std::vector<VerificationReport> verify_D2_f(std::size_t n);

/// D_2 chi_{(k,k)} = chi_{(k-1,k-1)} for k = 1..K, graphical and z routes.
std::vector<VerificationReport> verify_D2_F(std::size_t n, std::size_t K);

/// D_2 G_j + z_1 D_1 G_{j-1} + z_2 G_{j-2} = 0 for j = 0..N-1 (G_{<0} = 0).
std::vector<VerificationReport> verify_g_ode(std::size_t n);

/// The same four identities for the symmetric-function series (infinitely many
/// variables), up to t^J: f from its power-sum exponential, F from Giambelli, g = fF.
/// Also checks the Z and G hook formulas on these series.
std::vector<VerificationReport> verify_stable_identities(std::size_t J);

/// z-derivative vs box-removal definitions on a single Schur function in n variables.
std::vector<VerificationReport> verify_dual_definitions(const Partition& lambda, std::size_t n);

} // namespace twinrow
