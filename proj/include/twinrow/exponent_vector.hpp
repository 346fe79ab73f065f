#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>

namespace twinrow {

/// Powers of x_1..x_n (or z_1..z_n) in a monomial.
class ExponentVector {
public:
    using value_type = std::uint32_t;

    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : e_(n, 0) {}
    ExponentVector(std::initializer_list<value_type> init) : e_(init) {}
    explicit ExponentVector(std::span<const value_type> s) : e_(s.begin(), s.end()) {}

    template <class It>
    ExponentVector(It first, It last) : e_(first, last) {}

    std::size_t size() const { return e_.size(); }
    value_type operator[](std::size_t i) const { return e_[i]; }
    value_type& operator[](std::size_t i) { return e_[i]; }

    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }
    auto begin() { return e_.begin(); }
    auto end() { return e_.end(); }

    std::uint64_t degree() const {
        return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
    }

    void resize(std::size_t n) { e_.resize(n, 0); }

    // True when x^this divides x^other.
    bool divides(const ExponentVector& other) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > other.e_[i])
                return false;
        return true;
    }

    ExponentVector& operator+=(const ExponentVector& o) {
        for (std::size_t i = 0; i < e_.size(); ++i)
            e_[i] += o.e_[i];
        return *this;
    }

    friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }

    // Requires b.divides(a).
    friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (b.e_[i] > a.e_[i])
                throw std::domain_error("monomial quotient with negative exponent");
            a.e_[i] -= b.e_[i];
        }
        return a;
    }

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) { return a.e_ == b.e_; }

    // Weakly decreasing copy; the dominant representative of the S_n orbit.
    ExponentVector sorted_decreasing() const {
        ExponentVector r = *this;
        std::sort(r.e_.begin(), r.e_.end(), std::greater<>());
        return r;
    }

    bool is_weakly_decreasing() const {
        return std::is_sorted(e_.begin(), e_.end(), std::greater<>());
    }

private:
    boost::container::small_vector<value_type, 8> e_;
};

/// Graded lexicographic order with x_1 > x_2 > ... > x_n. Used globally.
inline bool grlex_less(const ExponentVector& a, const ExponentVector& b) {
    const auto da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct GrlexGreater {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const { return grlex_less(b, a); }
};

struct ExponentHash {
    std::size_t operator()(const ExponentVector& e) const noexcept {
        std::size_t h = 0xcbf29ce484222325ull;
        for (auto v : e) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace twinrow
