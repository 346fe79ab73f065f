#include "twinrow/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace twinrow {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be non-negative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(std::size_t n) const {
    if (parts_.size() > n)
        throw std::invalid_argument("partition has more rows than the requested length");
    std::vector<int> r = parts_;
    r.resize(n, 0);
    return r;
}

std::string to_string(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p[i]);
    }
    return s + ']';
}

StrictPartition::StrictPartition(std::initializer_list<int> parts) : StrictPartition(std::vector<int>(parts)) {}

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("strict partition parts must be positive");
        if (i > 0 && parts_[i] >= parts_[i - 1])
            throw std::invalid_argument("strict partition parts must be strictly decreasing");
    }
}

int StrictPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition conjugate(const Partition& lambda) {
    if (lambda.empty())
        return {};
    std::vector<int> c(static_cast<std::size_t>(lambda[0]), 0);
    for (int row : lambda.parts())
        for (int j = 0; j < row; ++j)
            ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

namespace {

void check_strict(const std::vector<int>& v, int min_value, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < min_value || (i > 0 && v[i] >= v[i - 1]))
            throw std::invalid_argument(std::string("invalid Frobenius ") + what);
    }
}

} // namespace

Partition from_frobenius(const FrobeniusCoordinates& fc) {
    if (fc.arms.size() != fc.legs.size())
        throw std::invalid_argument("Frobenius arms and legs differ in length");
    check_strict(fc.arms, 0, "arms");
    check_strict(fc.legs, 0, "legs");
    const std::size_t r = fc.rank();
    if (r == 0)
        return {};
    std::vector<int> rows;
    for (std::size_t i = 0; i < r; ++i)
        rows.push_back(fc.arms[i] + static_cast<int>(i) + 1);
    // Below the diagonal only the first r columns reach; column j has length legs[j] + j + 1.
    const int depth = fc.legs[0] + 1;
    for (int row = static_cast<int>(r) + 1; row <= depth; ++row) {
        int len = 0;
        for (std::size_t j = 0; j < r; ++j)
            if (fc.legs[j] + static_cast<int>(j) + 1 >= row)
                ++len;
        rows.push_back(len);
    }
    return Partition(std::move(rows));
}

FrobeniusCoordinates to_frobenius(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    FrobeniusCoordinates fc;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        const int idx = static_cast<int>(i) + 1;
        if (lambda[i] < idx)
            break;
        fc.arms.push_back(lambda[i] - idx);
        fc.legs.push_back(conj[i] - idx);
    }
    return fc;
}

namespace {

void strict_rec(int remaining, int max_part, int min_part, std::optional<int> parts_left, std::vector<int>& cur,
                std::vector<StrictPartition>& out) {
    if (remaining == 0) {
        if (!parts_left || *parts_left == 0)
            out.emplace_back(cur);
        return;
    }
    if (parts_left && *parts_left == 0)
        return;
    for (int p = std::min(remaining, max_part); p >= min_part; --p) {
        cur.push_back(p);
        strict_rec(remaining - p, p - 1, min_part, parts_left ? std::optional<int>(*parts_left - 1) : std::nullopt,
                   cur, out);
        cur.pop_back();
    }
}

void partition_rec(int remaining, int max_part, std::optional<int> rows_left, std::vector<int>& cur,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (rows_left && *rows_left == 0)
        return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partition_rec(remaining - p, p, rows_left ? std::optional<int>(*rows_left - 1) : std::nullopt, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<StrictPartition> strict_partitions(int d, int min_part, std::optional<int> num_parts) {
    if (d < 0)
        throw std::invalid_argument("strict_partitions: negative weight");
    std::vector<StrictPartition> out;
    std::vector<int> cur;
    strict_rec(d, d, std::max(min_part, 1), num_parts, cur, out);
    return out;
}

std::vector<Partition> partitions_of(int d, std::optional<int> max_parts) {
    if (d < 0)
        throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    partition_rec(d, d, max_parts, cur, out);
    return out;
}

namespace {

Partition hook_shape(const StrictPartition& beta, int arm_shift) {
    FrobeniusCoordinates fc;
    for (int b : beta.parts()) {
        if (b - arm_shift < 0)
            throw std::invalid_argument("hook part below the admissible minimum");
        fc.arms.push_back(b - arm_shift);
        fc.legs.push_back(b);
    }
    return from_frobenius(fc);
}

} // namespace

Partition hook_sum_partition_Z(const StrictPartition& beta) { return hook_shape(beta, 1); }

Partition hook_sum_partition_G(const StrictPartition& beta) { return hook_shape(beta, 3); }

std::vector<Partition> remove_one_box(const Partition& lambda) {
    std::vector<Partition> out;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
        // Row i ends in a corner when the next row is strictly shorter.
        if (i + 1 == p.size() || p[i + 1] < p[i]) {
            std::vector<int> q = p;
            --q[i];
            out.emplace_back(std::move(q));
        }
    }
    return out;
}

std::vector<Partition> remove_two_boxes_distinct_rows(const Partition& lambda) {
    std::vector<Partition> out;
    const auto& p = lambda.parts();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            std::vector<int> q = p;
            --q[i];
            --q[j];
            if (std::is_sorted(q.begin(), q.end(), std::greater<>()) && q.back() >= 0)
                out.emplace_back(std::move(q));
        }
    return out;
}

std::vector<int> z_lambda_row_lengths(std::span<const int> lambda_desc, int n) {
    const int r = static_cast<int>(lambda_desc.size());
    if (r == 0)
        throw std::invalid_argument("z_lambda_row_lengths: empty index sequence");
    // lam(i) is lambda_i with 1-based i and lambda_1 the smallest.
    auto lam = [&](int i) { return lambda_desc[static_cast<std::size_t>(r - i)]; };
    if (lam(1) < 0)
        throw std::invalid_argument("z_lambda_row_lengths: negative index");
    for (int i = 1; i < r; ++i)
        if (lam(i + 1) <= lam(i))
            throw std::invalid_argument("z_lambda_row_lengths: indices must be strictly increasing");
    if (lam(r) > n - 2)
        throw std::invalid_argument("z_lambda_row_lengths: largest index exceeds n-2");

    std::vector<int> k(static_cast<std::size_t>(n), -1);
    auto assign = [&](int j, int value) {
        if (j < 1 || j > n)
            return;
        auto& slot = k[static_cast<std::size_t>(j - 1)];
        if (slot != -1 && slot != value)
            throw std::logic_error("z_lambda_row_lengths: overlapping cases disagree");
        slot = value;
    };
    for (int j = 1; j <= r; ++j)
        assign(j, j + lam(r - j + 1));
    for (int j = r + 1; j <= r + lam(1) + 1; ++j)
        assign(j, r);
    for (int kk = 1; kk <= r - 1; ++kk)
        for (int j = r + lam(kk) + 3 - kk; j <= r + lam(kk + 1) + 1 - kk; ++j)
            assign(j, r - kk);
    for (int j = lam(r) + 3; j <= n; ++j)
        assign(j, 0);
    for (int v : k)
        if (v == -1)
            throw std::logic_error("z_lambda_row_lengths: a row is not covered by any case");
    return k;
}

} // namespace twinrow
