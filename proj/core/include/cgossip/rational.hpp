#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cgossip {

/// Exact scalar for finite-time convergence claims. cpp_rational keeps every
/// value normalized (coprime numerator/denominator, positive denominator).
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using RationalVector = std::vector<Rational>;

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(num, den);
}

/// Formats as "p" or "p/q".
inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p" or "p/q" (used by the CLI for --x0 lists).
Rational parse_rational(const std::string& text);

/// Prime factors of a positive big integer by trial division. The integers
/// audited here are products of small clique sizes and initial denominators,
/// so every factor is tiny; a residual above the trial bound is an error.
std::set<std::int64_t> prime_factors(BigInt value, std::int64_t trial_bound = 1'000'000);

}  // namespace cgossip
