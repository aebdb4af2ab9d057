#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <vector>

namespace molpred {

// Exact arithmetic scalar. GMP keeps values in lowest terms with a
// positive denominator, so equality and ordering are value-exact.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Vec = std::vector<Rational>;

// Optional bound: std::nullopt stands for -inf on lower bounds and
// +inf on upper bounds, depending on position.
using Bound = std::optional<Rational>;

Rational dot(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);
Vec scaled(const Vec& v, const Rational& s);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec unit_vec(int dim, int i);

// Scales a nonzero rational vector by the unique positive factor that
// makes all entries coprime integers. Sign pattern is preserved.
Vec canonical_ray(const Vec& v);

// Same scaling, but additionally negated if the leading nonzero entry
// is negative; used for directions where both orientations are valid.
Vec canonical_direction(const Vec& v);

bool lex_less(const Vec& a, const Vec& b);

// Dedupes and lexicographically sorts a list of points in place.
void sort_unique(std::vector<Vec>& pts);

std::string format_rational(const Rational& q);
std::string format_vec(const Vec& v, char sep = ' ');

// Parses "int" or "num/den". Returns std::nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& token);

}  // namespace molpred
