#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "hyperclass/errors.hpp"

namespace hyperclass {

/// Exact arbitrary-precision rational; stored canonically (reduced, denominator > 0).
using Rat = boost::multiprecision::mpq_rational;
/// Exact arbitrary-precision integer, used inside determinant/HNF kernels.
using Big = boost::multiprecision::mpz_int;

/// Largest integer <= q.
Big rat_floor(const Rat& q);
/// Smallest integer >= q.
Big rat_ceil(const Rat& q);
/// Fractional part in [0, 1).
Rat frac(const Rat& q);
/// True iff q is an integer.
bool is_integer(const Rat& q);

/// floor cast to long long; throws InputError if it does not fit.
long long rat_floor_ll(const Rat& q);
long long rat_ceil_ll(const Rat& q);

/// Parses "p/q" or "p" (optional sign, q > 0). Throws InputError with the
/// offending text on malformed input.
Rat parse_rational(std::string_view text);

/// Canonical rendering "p/q" with q >= 1 and gcd(|p|, q) = 1; integers render as "p".
std::string rat_to_string(const Rat& q);

/// Least common denominator of a tuple (1 for the empty tuple).
long long common_denominator(const std::vector<Rat>& tuple);

/// Coordinatewise fractional part.
std::vector<Rat> frac_tuple(const std::vector<Rat>& tuple);

long long gcd_ll(long long a, long long b);

/// Fraction order used by the classification tables: p/q < u/v iff q < v, or
/// q = v and p < u. Tuples compare lexicographically in this order.
bool frac_order_less(const Rat& x, const Rat& y);
bool tuple_frac_less(const std::vector<Rat>& a, const std::vector<Rat>& b);

} // namespace hyperclass
