#include "twinrow/diffops.hpp"

#include "twinrow/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace twinrow {

namespace {

// sum_{p=shift}^{m} z_{p-shift} d/dz_p, with z_0 = 1.
ZPolynomial lowering(const ZPolynomial& q, std::size_t shift) {
    const std::size_t m = q.nvars();
    std::vector<ZPolynomial::Term> out;
    for (const auto& [a, c] : q.terms()) {
        for (std::size_t p = shift; p <= m; ++p) {
            const auto power = a[p - 1];
            if (power == 0)
                continue;
            ExponentVector b = a;
            --b[p - 1];
            if (p - shift >= 1)
                ++b[p - shift - 1];
            out.emplace_back(std::move(b), c * power);
        }
    }
    return ZPolynomial::from_terms(m, std::move(out));
}

ZPolynomial z_var(std::size_t nvars, std::size_t j) { return ZPolynomial::variable(nvars, j - 1); }

std::string mismatch(const ZPolynomial& lhs, const ZPolynomial& rhs) {
    return "lhs - rhs = " + to_string(lhs - rhs);
}

VerificationReport report(std::string identity, std::size_t n, std::optional<long> index,
                          std::optional<std::string> failure) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.n = n;
    r.index = index;
    r.status = failure ? CheckStatus::fail : CheckStatus::pass;
    r.first_mismatch = std::move(failure);
    return r;
}

// Symmetric-function lift of an n-variable value, its operator image, projected back to n variables.
ZPolynomial apply_lifted(const SchurExpansion& e, std::size_t n, ZPolynomial (*op)(const ZPolynomial&)) {
    return op(schur_to_z_stable(e)).truncated_to(n);
}

struct NVariableData {
    std::vector<ZPolynomial> z;         // z-representation in z_1..z_n
    std::vector<SchurExpansion> schur;  // Schur expansion, at most n rows
};

NVariableData analyse(const XSeries& s, std::size_t upto) {
    NVariableData d;
    const auto zs = to_z_series(s);
    for (std::size_t k = 0; k <= upto; ++k) {
        d.z.push_back(zs.coeff(k));
        d.schur.push_back(schur_decompose(s.coeff(k)));
    }
    return d;
}

// Coefficient k of a polynomial-in-t sequence, zero outside the stored range.
ZPolynomial at(const std::vector<ZPolynomial>& v, long k, std::size_t nvars) {
    if (k < 0 || static_cast<std::size_t>(k) >= v.size())
        return ZPolynomial(nvars);
    return v[static_cast<std::size_t>(k)];
}

const SchurExpansion& at(const std::vector<SchurExpansion>& v, long k) {
    static const SchurExpansion zero;
    if (k < 0 || static_cast<std::size_t>(k) >= v.size())
        return zero;
    return v[static_cast<std::size_t>(k)];
}

std::optional<std::string> compare_routes(const ZPolynomial& z_route, const ZPolynomial& graphical,
                                          const ZPolynomial& rhs) {
    if (!(z_route == rhs))
        return "z-route: " + mismatch(z_route, rhs);
    if (!(graphical == rhs))
        return "graphical route: " + mismatch(graphical, rhs);
    return std::nullopt;
}

} // namespace

ZPolynomial D1_z(const ZPolynomial& p) { return lowering(p, 1); }

ZPolynomial D2_z(const ZPolynomial& p) {
    const ZPolynomial twice = lowering(p, 2) + D1_z(D1_z(p));
    std::vector<ZPolynomial::Term> half;
    for (const auto& [a, c] : twice.terms()) {
        if (!mpz_divisible_ui_p(c.get_mpz_t(), 2))
            throw InvariantError("D2_z produced a non-integral coefficient");
        half.emplace_back(a, c / 2);
    }
    return ZPolynomial::from_terms(p.nvars(), std::move(half));
}

SchurExpansion D1_graphical(const SchurExpansion& e) {
    SchurExpansion out;
    for (const auto& [lambda, c] : e.terms())
        for (const auto& mu : remove_one_box(lambda))
            out.add(mu, c);
    return out;
}

SchurExpansion D2_graphical(const SchurExpansion& e) {
    SchurExpansion out;
    for (const auto& [lambda, c] : e.terms())
        for (const auto& mu : remove_two_boxes_distinct_rows(lambda))
            out.add(mu, c);
    return out;
}

ZPolynomial lift_to_stable(const XPolynomial& p) { return schur_to_z_stable(schur_decompose(p)); }

ZPolynomial lift_to_stable(const ZPolynomial& p, std::size_t n) { return schur_to_z_stable(schur_decompose(p, n)); }

PowerSumData power_sum(int k, std::size_t n) {
    if (k < 1)
        throw std::invalid_argument("power_sum: k must be positive");
    auto pk = [n](int power) {
        XPolynomial s(n);
        for (std::size_t i = 0; i < n; ++i) {
            ExponentVector e(n);
            e[i] = static_cast<unsigned>(power);
            s += XPolynomial::monomial(std::move(e), 1);
        }
        return s;
    };
    XPolynomial m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            ExponentVector e(n);
            e[i] = e[j] = static_cast<unsigned>(k);
            m += XPolynomial::monomial(std::move(e), 1);
        }
    PowerSumData d{k, pk(k), m};
    if (!(m.scaled(2) == d.p_k * d.p_k - pk(2 * k)))
        throw InvariantError("m_k != (p_k^2 - p_2k)/2");
    return d;
}

XSeries f_exp_form(std::size_t n, std::size_t K) {
    std::vector<QXPolynomial> a{QXPolynomial(n)};
    for (std::size_t k = 1; k <= K; ++k)
        a.push_back(to_rational(power_sum(static_cast<int>(k), n).m_k).scaled(Rational(-1, static_cast<long>(k))));
    const TSeries<QXPolynomial> log_f(n, std::move(a), K, false);
    return tseries_exp(log_f, K).map([](const QXPolynomial& q) { return to_integral(q); });
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

std::vector<VerificationReport> verify_D1_f(std::size_t n) {
    const std::size_t N = pair_count(n);
    const NVariableData f = analyse(f_product(n), N);
    const ZPolynomial z1 = z_var(n, 1);
    std::vector<VerificationReport> out;
    for (std::size_t j = 1; j <= N; ++j) {
        // Z_j = (-1)^j f_j, so D_1 f = -z_1 t f reads D_1 Z_j = z_1 Z_{j-1}.
        const Integer sj = j % 2 == 0 ? 1 : -1;
        const ZPolynomial rhs = (z1 * f.z[j - 1]).scaled(-sj);
        const ZPolynomial z_route = apply_lifted(f.schur[j], n, D1_z).scaled(sj);
        const ZPolynomial graphical = schur_to_z(D1_graphical(f.schur[j]), n).scaled(sj);
        out.push_back(report("D1 Z_j = z1 Z_{j-1}", n, static_cast<long>(j), compare_routes(z_route, graphical, rhs)));
    }
    return out;
}

std::vector<VerificationReport> verify_D2_f(std::size_t n) {
    const std::size_t N = pair_count(n);
    const NVariableData f = analyse(f_product(n), N);
    const ZPolynomial z1 = z_var(n, 1), z2 = z_var(n, 2);
    const ZPolynomial q = z1 * z1 - z2;
    std::vector<VerificationReport> out;
    for (long j = 0; j <= static_cast<long>(N) + 2; ++j) {
        const ZPolynomial rhs = q * at(f.z, j - 2, n) - at(f.z, j - 1, n);
        const ZPolynomial z_route = apply_lifted(at(f.schur, j), n, D2_z);
        const ZPolynomial graphical = schur_to_z(D2_graphical(at(f.schur, j)), n);
        out.push_back(report("D2 f = [t^2(z1^2-z2)-t] f", n, j, compare_routes(z_route, graphical, rhs)));
    }
    return out;
}

std::vector<VerificationReport> verify_D2_F(std::size_t n, std::size_t K) {
    if (K < 1)
        throw std::invalid_argument("verify_D2_F: K must be at least 1");
    std::vector<VerificationReport> out;
    for (std::size_t k = 1; k <= K; ++k) {
        const int ki = static_cast<int>(k);
        const Partition row2{ki, ki}, lower{ki - 1, ki - 1};
        std::optional<std::string> failure;
        const SchurExpansion graphical = D2_graphical(SchurExpansion{{row2, 1}});
        if (!(graphical == SchurExpansion{{lower, 1}}))
            failure = "graphical route gives " + to_string(graphical);
        const ZPolynomial chi = giambelli_character(row2, n);
        const ZPolynomial z_route = D2_z(lift_to_stable(chi, n)).truncated_to(n);
        const ZPolynomial rhs = giambelli_character(lower, n);
        if (!failure && !(z_route == rhs))
            failure = "z-route: " + mismatch(z_route, rhs);
        out.push_back(report("D2 chi_(k,k) = chi_(k-1,k-1)", n, static_cast<long>(k), failure));
    }
    return out;
}

std::vector<VerificationReport> verify_g_ode(std::size_t n) {
    const std::size_t N = pair_count(n);
    const NVariableData g = analyse(g_weyl_determinant(n), N - 1);
    const ZPolynomial z1 = z_var(n, 1), z2 = z_var(n, 2);
    const ZPolynomial zero(n);
    std::vector<VerificationReport> out;
    for (long j = 0; j <= static_cast<long>(N) - 1; ++j) {
        const ZPolynomial tail = z2 * at(g.z, j - 2, n);
        const ZPolynomial z_route =
            apply_lifted(at(g.schur, j), n, D2_z) + z1 * apply_lifted(at(g.schur, j - 1), n, D1_z) + tail;
        const ZPolynomial graphical = schur_to_z(D2_graphical(at(g.schur, j)), n) +
                                      z1 * schur_to_z(D1_graphical(at(g.schur, j - 1)), n) + tail;
        out.push_back(report("D2 G_j + z1 D1 G_{j-1} + z2 G_{j-2} = 0", n, j, compare_routes(z_route, graphical, zero)));
    }
    return out;
}

namespace {

// Power sums p_1..p_top in the elementary basis of symmetric functions (Newton's identities).
std::vector<QZPolynomial> newton_power_sums(std::size_t top, std::size_t m) {
    std::vector<QZPolynomial> p(top + 1, QZPolynomial(m));
    auto e = [m](std::size_t i) { return QZPolynomial::variable(m, i - 1); };
    for (std::size_t k = 1; k <= top; ++k) {
        QZPolynomial acc = e(k).scaled(Rational(static_cast<long>(k) * (k % 2 == 1 ? 1 : -1)));
        for (std::size_t i = 1; i < k; ++i) {
            const QZPolynomial term = e(i) * p[k - i];
            acc += i % 2 == 1 ? term : -term;
        }
        p[k] = acc;
    }
    return p;
}

} // namespace

std::vector<VerificationReport> verify_stable_identities(std::size_t J) {
    const std::size_t m = std::max<std::size_t>(2 * J, 2);
    const auto p = newton_power_sums(2 * J, m);

    std::vector<QZPolynomial> log_f{QZPolynomial(m)};
    for (std::size_t k = 1; k <= J; ++k)
        log_f.push_back((p[k] * p[k] - p[2 * k]).scaled(Rational(-1, 2 * static_cast<long>(k))));
    const ZSeries f = tseries_exp(TSeries<QZPolynomial>(m, std::move(log_f), J, false), J)
                          .map([](const QZPolynomial& q) { return to_integral(q); });

    std::vector<ZPolynomial> Fc;
    for (std::size_t k = 0; k <= J; ++k)
        Fc.push_back(giambelli_stable(Partition{static_cast<int>(k), static_cast<int>(k)}, m));
    const ZSeries F(m, std::move(Fc), J, false);
    const ZSeries g = tseries_mul(f, F, J);

    const ZPolynomial z1 = z_var(m, 1), z2 = z_var(m, 2);
    const ZPolynomial zero(m);
    auto c = [&](const ZSeries& s, long k) { return k < 0 ? ZPolynomial(m) : s.coeff(static_cast<std::size_t>(k)); };
    auto check = [](const ZPolynomial& lhs, const ZPolynomial& rhs) -> std::optional<std::string> {
        if (lhs == rhs)
            return std::nullopt;
        return mismatch(lhs, rhs);
    };
    constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

    std::vector<VerificationReport> out;
    for (long j = 0; j <= static_cast<long>(J); ++j) {
        const Integer sign = j % 2 == 0 ? 1 : -1;
        out.push_back(report("stable: D1 f = -z1 t f", 0, j, check(D1_z(c(f, j)), -(z1 * c(f, j - 1)))));
        out.push_back(report("stable: D2 f = [t^2(z1^2-z2)-t] f", 0, j,
                             check(D2_z(c(f, j)), (z1 * z1 - z2) * c(f, j - 2) - c(f, j - 1))));
        out.push_back(report("stable: D2 F = t F", 0, j, check(D2_z(c(F, j)), c(F, j - 1))));
        out.push_back(report("stable: D2 g + t z1 D1 g + t^2 z2 g = 0", 0, j,
                             check(D2_z(c(g, j)) + z1 * D1_z(c(g, j - 1)) + z2 * c(g, j - 2), zero)));
        // D_1 g = -t z_1 g + f D_1 F
        ZPolynomial fD1F(m);
        for (long i = 0; i <= j; ++i)
            fD1F += c(f, i) * D1_z(c(F, j - i));
        out.push_back(report("stable: D1 g = -t z1 g + f D1 F", 0, j, check(D1_z(c(g, j)), -(z1 * c(g, j - 1)) + fD1F)));
        out.push_back(report("stable: Z_j hook sum", 0, j,
                             check(c(f, j).scaled(sign), schur_to_z_stable(Z_hook_sum(static_cast<int>(j), unbounded), m))));
        out.push_back(report("stable: G_j hook sum", 0, j,
                             check(c(g, j), schur_to_z_stable(G_hook_sum(static_cast<int>(j), unbounded), m))));
    }
    return out;
}

std::vector<VerificationReport> verify_dual_definitions(const Partition& lambda, std::size_t n) {
    const std::size_t m = std::max<std::size_t>(static_cast<std::size_t>(lambda.weight()), 1);
    const ZPolynomial s = giambelli_stable(lambda, m);
    const SchurExpansion single{{lambda, 1}};
    std::vector<VerificationReport> out;
    const std::string name = "dual definitions " + to_string(lambda);

    auto run = [&](const char* op, const ZPolynomial& z_route, const SchurExpansion& graphical) {
        std::optional<std::string> failure;
        const ZPolynomial g_stable = schur_to_z_stable(graphical, m);
        if (!(z_route == g_stable))
            failure = "symmetric functions: " + mismatch(z_route, g_stable);
        else if (!(z_route.truncated_to(n) == schur_to_z(graphical, n)))
            failure = "n variables: " + mismatch(z_route.truncated_to(n), schur_to_z(graphical, n));
        out.push_back(report(name + ' ' + op, n, std::nullopt, failure));
    };
    run("D1", D1_z(s), D1_graphical(single));
    run("D2", D2_z(s), D2_graphical(single));
    return out;
}

} // namespace twinrow
