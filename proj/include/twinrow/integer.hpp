#pragma once

#include <gmpxx.h>

#include <string>

namespace twinrow {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) { return v.get_str(); }

inline bool is_integral(const Rational& v) { return v.get_den() == 1; }

} // namespace twinrow
