#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace deszeta {

// Arbitrary-precision integer and exact rational. mpq_rational keeps the
// denominator positive and the fraction canonical after every operation.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

Int factorial(unsigned n);
Int binomial(unsigned n, unsigned k);

// (s)_0 = 1, (s)_k = s(s+1)...(s+k-1)
Rational pochhammer_exact(const Rational& s, unsigned k);

}  // namespace deszeta
