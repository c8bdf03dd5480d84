#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hgmod {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/* Parses "a", "-a" or "a/b"; the result is canonicalized. Floats are rejected. */
Rational parse_rational(std::string_view text);

/* Canonical exact string: "a" for integers, "a/b" otherwise. */
std::string to_string(const Rational& q);

bool is_prime(long n);

/* p-adic valuation; x must be nonzero. */
int p_valuation(const Integer& x, long p);
int p_valuation(const Rational& x, long p);

/* Denominator prime to p, i.e. x lies in the localization Z_(p). */
bool is_p_integral(const Rational& x, long p);
bool is_p_integral(const Vector& v, long p);

Integer pow_int(long base, unsigned exponent);

/* For p-integral c, the integer r in [0, p^k) with c == r mod p^k Z_(p). */
Integer residue_mod_prime_power(const Rational& c, long p, unsigned k);

/* Image of a p-integral rational in Z/pZ, as 0..p-1. */
long residue_mod_p(const Rational& c, long p);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Rational dot(const Vector& a, const Vector& b);

std::vector<std::string> to_strings(const Vector& v);

} // namespace hgmod
