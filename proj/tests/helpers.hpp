#pragma once

#include "twinrow/polynomial.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace testing {

// Parses the printed form, e.g. "x1^2 x2 - 3 x3 + 1", into a polynomial in nvars variables.
template <class Poly>
Poly parse(const std::string& s, std::size_t nvars) {
    using twinrow::ExponentVector;
    std::vector<typename Poly::Term> terms;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && s[i] == ' ')
            ++i;
    };
    int sign = 1;
    skip();
    if (i < s.size() && s[i] == '-') {
        sign = -1;
        ++i;
    }
    while (true) {
        skip();
        typename Poly::coeff_type c = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/'))
                ++j;
            c = typename Poly::coeff_type(s.substr(i, j - i));
            i = j;
        }
        ExponentVector e(nvars);
        while (true) {
            skip();
            if (i >= s.size() || s[i] != Poly::space_type::symbol)
                break;
            ++i;
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            const std::size_t var = std::stoul(s.substr(i, j - i));
            i = j;
            unsigned power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                j = i;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                    ++j;
                power = static_cast<unsigned>(std::stoul(s.substr(i, j - i)));
                i = j;
            }
            if (var == 0 || var > nvars)
                throw std::invalid_argument("variable index out of range in '" + s + "'");
            e[var - 1] += power;
        }
        terms.emplace_back(std::move(e), c * sign);
        skip();
        if (i >= s.size())
            break;
        if (s[i] == '+')
            sign = 1;
        else if (s[i] == '-')
            sign = -1;
        else
            throw std::invalid_argument("cannot parse '" + s + "'");
        ++i;
    }
    if (terms.size() == 1 && s == "0")
        return Poly(nvars);
    return Poly::from_terms(nvars, std::move(terms));
}

inline twinrow::XPolynomial X(const std::string& s, std::size_t n) { return parse<twinrow::XPolynomial>(s, n); }
inline twinrow::ZPolynomial Z(const std::string& s, std::size_t n) { return parse<twinrow::ZPolynomial>(s, n); }
inline twinrow::QXPolynomial QX(const std::string& s, std::size_t n) { return parse<twinrow::QXPolynomial>(s, n); }
inline twinrow::QZPolynomial QZ(const std::string& s, std::size_t n) { return parse<twinrow::QZPolynomial>(s, n); }

} // namespace testing
