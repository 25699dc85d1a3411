#pragma once

#include <gmpxx.h>

#include <string>

namespace tensorinv {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

BigInt factorial(unsigned n);
BigInt double_factorial(long n);  // n!! with (-1)!! = 0!! = 1

}  // namespace tensorinv
