#pragma once

// Brute-force reference implementations used only by the tests. None of them call
// the library routine they are checking.

#include "twinrow/characters.hpp"
#include "twinrow/partitions.hpp"
#include "twinrow/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using namespace twinrow;

// Subsets of {min_part..d} with the right sum (and length), sorted lex decreasing.
inline std::vector<std::vector<int>> strict_partitions(int d, int min_part, int length = -1) {
    std::vector<std::vector<int>> out;
    if (d == 0 && (length <= 0))
        out.push_back({});
    const int lo = std::max(min_part, 1);
    if (d < lo)
        return out;
    const int width = d - lo + 1;
    for (unsigned long mask = 1; mask < (1ul << width); ++mask) {
        std::vector<int> parts;
        int sum = 0;
        for (int b = width - 1; b >= 0; --b)
            if (mask >> b & 1ul) {
                parts.push_back(lo + b);
                sum += lo + b;
            }
        if (sum == d && (length < 0 || static_cast<int>(parts.size()) == length))
            out.push_back(parts);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

// All partitions of d with at most max_parts rows, by recursion on the largest part.
inline std::vector<std::vector<int>> partitions(int d, int max_parts = 1 << 20, int cap = -1) {
    if (cap < 0)
        cap = d;
    if (d == 0)
        return {{}};
    if (max_parts == 0)
        return {};
    std::vector<std::vector<int>> out;
    for (int first = std::min(d, cap); first >= 1; --first)
        for (auto rest : partitions(d - first, max_parts - 1, first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    return out;
}

using Cells = std::set<std::pair<int, int>>;

inline Cells cells(const std::vector<int>& rows) {
    Cells c;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        for (int j = 0; j < rows[i]; ++j)
            c.insert({i, j});
    return c;
}

// Row lengths if the cell set is a Young diagram, otherwise nothing.
inline std::optional<std::vector<int>> diagram_rows(const Cells& c) {
    std::vector<int> rows;
    for (const auto& [i, j] : c) {
        if (static_cast<int>(rows.size()) <= i)
            rows.resize(i + 1, 0);
        rows[i]++;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < rows[i]; ++j)
            if (!c.count({static_cast<int>(i), j}))
                return std::nullopt;
        if (i > 0 && rows[i] > rows[i - 1])
            return std::nullopt;
    }
    while (!rows.empty() && rows.back() == 0)
        rows.pop_back();
    return rows;
}

// Every single cell whose removal leaves a diagram.
inline std::multiset<std::vector<int>> remove_one(const std::vector<int>& rows) {
    std::multiset<std::vector<int>> out;
    const Cells all = cells(rows);
    for (const auto& cell : all) {
        Cells c = all;
        c.erase(cell);
        if (auto r = diagram_rows(c))
            out.insert(*r);
    }
    return out;
}

// Every unordered pair of cells in distinct rows whose removal leaves a diagram.
inline std::multiset<std::vector<int>> remove_two_distinct_rows(const std::vector<int>& rows) {
    std::multiset<std::vector<int>> out;
    const Cells all = cells(rows);
    for (auto a = all.begin(); a != all.end(); ++a)
        for (auto b = std::next(a); b != all.end(); ++b) {
            if (a->first == b->first)
                continue;
            Cells c = all;
            c.erase(*a);
            c.erase(*b);
            if (auto r = diagram_rows(c))
                out.insert(*r);
        }
    return out;
}

// Frobenius coordinates read off the diagram cell by cell.
inline std::pair<std::vector<int>, std::vector<int>> frobenius(const std::vector<int>& rows) {
    const Cells c = cells(rows);
    std::vector<int> arms, legs;
    for (int i = 0; c.count({i, i}); ++i) {
        int a = 0, b = 0;
        while (c.count({i, i + a + 1}))
            ++a;
        while (c.count({i + b + 1, i}))
            ++b;
        arms.push_back(a);
        legs.push_back(b);
    }
    return {arms, legs};
}

// Schur polynomial as the sum of x^T over semistandard tableaux with entries 1..n.
inline XPolynomial ssyt_schur(const std::vector<int>& rows, std::size_t n) {
    std::vector<std::vector<int>> t;
    for (int r : rows)
        t.emplace_back(r, 0);
    std::vector<XPolynomial::Term> terms;
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        for (int j = 0; j < rows[i]; ++j)
            order.push_back({i, j});
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == order.size()) {
            ExponentVector e(n);
            for (const auto& row : t)
                for (int v : row)
                    ++e[v - 1];
            terms.emplace_back(std::move(e), 1);
            return;
        }
        const auto [i, j] = order[k];
        int lo = 1;
        if (j > 0)
            lo = std::max(lo, t[i][j - 1]);
        if (i > 0)
            lo = std::max(lo, t[i - 1][j] + 1);
        for (int v = lo; v <= static_cast<int>(n); ++v) {
            t[i][j] = v;
            fill(k + 1);
        }
    };
    fill(0);
    return XPolynomial::from_terms(n, std::move(terms));
}

// Repeatedly strips the Schur polynomial of the leading monomial.
inline std::map<std::vector<int>, Integer> greedy_schur(XPolynomial p) {
    std::map<std::vector<int>, Integer> out;
    const std::size_t n = p.nvars();
    for (int guard = 0; !p.is_zero(); ++guard) {
        if (guard > 10000)
            throw std::runtime_error("greedy_schur did not terminate");
        const auto& [e, c] = p.leading_term();
        std::vector<int> rows;
        for (std::size_t i = 0; i < n; ++i)
            rows.push_back(static_cast<int>(e[i]));
        if (!std::is_sorted(rows.begin(), rows.end(), std::greater<>()))
            throw std::invalid_argument("leading monomial is not dominant: input not symmetric");
        while (!rows.empty() && rows.back() == 0)
            rows.pop_back();
        const Integer coeff = c;
        out[rows] += coeff;
        p -= ssyt_schur(rows, n).scaled(coeff);
    }
    return out;
}

inline XPolynomial elementary(std::size_t j, std::size_t n) {
    std::vector<XPolynomial::Term> terms;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (static_cast<std::size_t>(__builtin_popcount(mask)) == j) {
            ExponentVector e(n);
            for (std::size_t i = 0; i < n; ++i)
                e[i] = mask >> i & 1u;
            terms.emplace_back(std::move(e), 1);
        }
    return XPolynomial::from_terms(n, std::move(terms));
}

// Substitutes z_j -> e_j(x_1..x_n) term by term (z_j = 0 for j > n).
inline XPolynomial substitute(const ZPolynomial& p, std::size_t n) {
    XPolynomial out(n);
    for (const auto& [a, c] : p.terms()) {
        XPolynomial term = XPolynomial::constant(n, c);
        for (std::size_t j = 0; j < a.size(); ++j)
            for (unsigned k = 0; k < a[j]; ++k)
                term = term * elementary(j + 1, n);
        out += term;
    }
    return out;
}

// prod_{i<j}(1 - t x_i x_j): coefficient of t^k is (-1)^k times the sum over k-subsets of pairs.
inline std::vector<XPolynomial> f_by_subsets(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pairs.push_back({i, j});
    std::vector<std::vector<XPolynomial::Term>> terms(pairs.size() + 1);
    for (unsigned long mask = 0; mask < (1ul << pairs.size()); ++mask) {
        ExponentVector e(n);
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if (mask >> p & 1ul) {
                ++e[pairs[p].first];
                ++e[pairs[p].second];
            }
        const int k = __builtin_popcountl(mask);
        terms[k].emplace_back(std::move(e), k % 2 == 0 ? 1 : -1);
    }
    std::vector<XPolynomial> out;
    for (auto& t : terms)
        out.push_back(XPolynomial::from_terms(n, std::move(t)));
    return out;
}

inline XPolynomial from_exponents(std::size_t n, std::initializer_list<std::pair<std::vector<unsigned>, long>> init) {
    std::vector<XPolynomial::Term> terms;
    for (const auto& [v, c] : init) {
        ExponentVector e(n);
        for (std::size_t i = 0; i < v.size(); ++i)
            e[i] = v[i];
        terms.emplace_back(std::move(e), c);
    }
    return XPolynomial::from_terms(n, std::move(terms));
}

} // namespace oracle
