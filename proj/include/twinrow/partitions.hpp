#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace twinrow {

/// Weakly decreasing sequence of positive integers (a Young diagram, rows top to bottom).
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    // Trailing zeros are dropped; anything else that is not weakly decreasing and
    // non-negative is rejected.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int weight() const;
    // Row i (0-based); zero past the last row.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    // Row lengths padded with zeros to n entries. Requires length() <= n.
    std::vector<int> padded(std::size_t n) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
};

std::string to_string(const Partition& p);

/// Order used for canonical listings: larger weight first, then lexicographically larger first.
struct CanonicalPartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.weight() != b.weight())
            return a.weight() > b.weight();
        return a > b;
    }
};

/// Frobenius coordinates (a_1,...,a_r | b_1,...,b_r) with a_i = lambda_i - i and
/// b_i = lambda'_i - i (1-based i).
struct FrobeniusCoordinates {
    std::vector<int> arms;
    std::vector<int> legs;

    std::size_t rank() const { return arms.size(); }
    friend bool operator==(const FrobeniusCoordinates&, const FrobeniusCoordinates&) = default;
};

/// Strictly decreasing positive sequence beta_1 > ... > beta_r >= 1.
class StrictPartition {
public:
    StrictPartition() = default;
    StrictPartition(std::initializer_list<int> parts);
    explicit StrictPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int weight() const;

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

Partition from_frobenius(const FrobeniusCoordinates& fc);
FrobeniusCoordinates to_frobenius(const Partition& lambda);

/// Strict partitions of d with every part >= min_part and, if given, exactly
/// num_parts parts. Lexicographically decreasing.
std::vector<StrictPartition> strict_partitions(int d, int min_part, std::optional<int> num_parts = std::nullopt);

/// All partitions of d with at most max_parts rows, lexicographically decreasing.
std::vector<Partition> partitions_of(int d, std::optional<int> max_parts = std::nullopt);

/// (beta_1-1,...,beta_r-1 | beta_1,...,beta_r): the shapes summed in Z_d.
Partition hook_sum_partition_Z(const StrictPartition& beta);

/// (beta_1-3,...,beta_j-3 | beta_1,...,beta_j): the shapes summed in G_k. Requires parts >= 3.
Partition hook_sum_partition_G(const StrictPartition& beta);

/// Diagrams obtained by deleting one corner box.
std::vector<Partition> remove_one_box(const Partition& lambda);

/// Diagrams obtained by deleting two boxes in different rows (a vertical 2-strip),
/// one entry per removable pair.
std::vector<Partition> remove_two_boxes_distinct_rows(const Partition& lambda);

/// Row lengths (k_1..k_n) of the character attached to the increasing index
/// sequence lambda_1 < ... < lambda_r, passed largest first as
/// (lambda_r, ..., lambda_1). Follows the four-case piecewise rule literally.
/// Requires n-2 >= lambda_r.
std::vector<int> z_lambda_row_lengths(std::span<const int> lambda_desc, int n);

} // namespace twinrow
