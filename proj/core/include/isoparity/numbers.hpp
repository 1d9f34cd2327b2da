#ifndef ISOPARITY_NUMBERS_HPP
#define ISOPARITY_NUMBERS_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "isoparity/errors.hpp"

namespace isoparity {

using Int = mpz_class;

// Always in lowest terms with positive denominator; construct through
// rational()/parse_rational() which canonicalize (mpq_class alone does not).
using Rational = mpq_class;

Rational rational(const Int& num, const Int& den);
Rational rational(long num, long den = 1);

// Accepts "n", "n/d", decimal-free forms only.
std::optional<Rational> parse_rational(const std::string& s);

bool is_integer(const Rational& x);

// v_ell(x); nullopt is the +infinity sentinel for x = 0.
std::optional<long> valuation(const Int& x, const Int& ell);
std::optional<long> valuation(const Rational& x, const Int& ell);

Int modpow(Int base, Int exp, const Int& mod);

// Legendre symbol, ell an odd prime: -1, 0, +1.
int legendre(const Int& a, const Int& ell);

// Kronecker symbol (a/n), the fully general extension.
int kronecker(const Int& a, const Int& n);

bool is_prime(const Int& n);
Int next_prime(const Int& n);

// Distinct prime factors with exponents, smallest first. Trial division up to
// factor_bound, then a primality check on the cofactor; a composite cofactor
// beyond the bound throws FactorBoundExceeded.
std::vector<std::pair<Int, long>> factorize(const Int& n, long factor_bound = 1000000);

// Primes dividing the denominator of any coordinate.
std::vector<Int> denominator_primes(const std::vector<Rational>& xs, long factor_bound = 1000000);

}  // namespace isoparity

#endif
