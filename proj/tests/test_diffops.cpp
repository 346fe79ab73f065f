#include "helpers.hpp"
#include "oracles.hpp"

#include "twinrow/diffops.hpp"
#include "twinrow/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace twinrow;
using testing::X;
using testing::Z;

namespace {

std::vector<long> failing_indices(const std::vector<VerificationReport>& reports) {
    std::vector<long> out;
    for (const auto& r : reports)
        if (!r.passed())
            out.push_back(r.index.value_or(-1));
    return out;
}

} // namespace

TEST_CASE("D1 and D2 on z-polynomials") {
    CHECK(D1_z(Z("z1", 3)) == Z("1", 3));
    CHECK(D1_z(Z("z1 z2 - z3", 3)) == Z("z1^2", 3));
    CHECK(D1_z(Z("5", 3)).is_zero());
    CHECK(D2_z(Z("z2", 3)) == Z("1", 3));
    CHECK(D2_z(Z("z1^2", 3)) == Z("1", 3));
    CHECK(D2_z(Z("z1", 3)).is_zero());
    CHECK(D2_z(Z("z3", 3)) == Z("z1", 3));
}

TEST_CASE("D1 and D2 by box removal") {
    CHECK(D1_graphical(SchurExpansion{{Partition{2, 1}, 1}}) ==
          SchurExpansion{{Partition{2}, 1}, {Partition{1, 1}, 1}});
    CHECK(D1_graphical(SchurExpansion{{Partition{}, 1}}).is_zero());
    CHECK(D2_graphical(SchurExpansion{{Partition{2, 2}, 1}}) == SchurExpansion{{Partition{1, 1}, 1}});
    CHECK(D2_graphical(SchurExpansion{{Partition{1, 1}, 3}}) == SchurExpansion{{Partition{}, 3}});
    CHECK(D2_graphical(SchurExpansion{{Partition{3}, 1}}).is_zero());
    CHECK(D2_graphical(SchurExpansion{{Partition{2, 1, 1}, 1}}) ==
          SchurExpansion{{Partition{2}, 1}, {Partition{1, 1}, 1}});
}

TEST_CASE("z route agrees with box removal on Schur functions") {
    for (int d = 0; d <= 7; ++d)
        for (const auto& rows : oracle::partitions(d)) {
            const Partition lam(rows);
            for (std::size_t n = 2; n <= 4; ++n)
                CHECK(all_passed(verify_dual_definitions(lam, n)));
        }
}

TEST_CASE("lifting before differentiating") {
    // z1 z3 at n = 3 is the character of (2,1,1); its lift is z1 z3 - z4.
    const ZPolynomial lifted = lift_to_stable(Z("z1 z3", 3), 3);
    CHECK(lifted.truncated_to(4) == Z("z1 z3 - z4", 4));
    CHECK(D1_z(lifted).truncated_to(3) == Z("z1 z2", 3));
    CHECK(lift_to_stable(weyl_character(Partition{2, 1, 1}, 3)).truncated_to(4) == Z("z1 z3 - z4", 4));

    // The literal finite-variable formula does not see the truncated z_3 and disagrees
    // with box removal: chi_(2,2) = z2^2 at n = 2.
    const ZPolynomial chi = giambelli_character(Partition{2, 2}, 2);
    CHECK(D1_z(chi) == Z("2 z1 z2", 2));
    const SchurExpansion boxes = D1_graphical(SchurExpansion{{Partition{2, 2}, 1}}).truncated_to(2);
    CHECK(schur_to_z(boxes, 2) == Z("z1 z2", 2));
    CHECK(D1_z(lift_to_stable(chi, 2)).truncated_to(2) == Z("z1 z2", 2));
}

TEST_CASE("power sums and the exponential form of f") {
    const auto ps = power_sum(2, 3);
    CHECK(ps.p_k == X("x1^2 + x2^2 + x3^2", 3));
    CHECK(ps.m_k == X("x1^2 x2^2 + x1^2 x3^2 + x2^2 x3^2", 3));
    for (std::size_t n = 2; n <= 4; ++n) {
        const std::size_t K = default_order(n);
        CHECK(f_exp_form(n, K) == f_product(n).truncated(K));
    }
    CHECK(f_exp_form(3, 0) == XSeries::one(3).truncated(0));
}

TEST_CASE("identities for symmetric functions in infinitely many variables") {
    const auto reports = verify_stable_identities(6);
    CHECK(reports.size() > 20);
    for (const auto& r : reports) {
        INFO(r.identity, " index ", r.index.value_or(-1), " ", r.first_mismatch.value_or(""));
        CHECK(r.passed());
    }
}

TEST_CASE("identities at finite n") {
    SUBCASE("D2 on the characters of (k,k) holds for every n") {
        for (std::size_t n = 2; n <= 4; ++n)
            CHECK(all_passed(verify_D2_F(n, default_order(n))));
    }
    SUBCASE("D1 on f holds at n = 2 only") {
        CHECK(all_passed(verify_D1_f(2)));
        const auto bad = failing_indices(verify_D1_f(3));
        CHECK(bad == std::vector<long>{3});
    }
    SUBCASE("D2 on f fails where the right side exceeds the t-degree of f") {
        const auto bad2 = failing_indices(verify_D2_f(2));
        CHECK(bad2 == std::vector<long>{2, 3});
        const auto bad3 = failing_indices(verify_D2_f(3));
        CHECK(std::find(bad3.begin(), bad3.end(), 4) != bad3.end());
        CHECK(std::find(bad3.begin(), bad3.end(), 5) != bad3.end());
    }
    SUBCASE("g equation holds for n = 2") {
        CHECK(all_passed(verify_g_ode(2)));
        CHECK_FALSE(all_passed(verify_g_ode(3)));
    }
}

TEST_CASE("D operators lower the weighted degree by one and two") {
    // weight of z_i is i
    const auto weights = [](const ZPolynomial& p) {
        std::set<unsigned> out;
        for (const auto& [e, c] : p.terms()) {
            unsigned w = 0;
            for (std::size_t i = 0; i < e.size(); ++i)
                w += static_cast<unsigned>(i + 1) * e[i];
            out.insert(w);
        }
        return out;
    };
    const std::vector<ZPolynomial> samples{Z("z1^3 z2", 4), Z("z2 z3 - z1 z4", 4), Z("z4^2 + z1 z3 z4", 4)};
    for (const auto& p : samples) {
        const unsigned w = *weights(p).begin();
        CHECK(weights(D1_z(p)) == std::set<unsigned>{w - 1});
        CHECK(weights(D2_z(p)) == std::set<unsigned>{w - 2});
    }
}
