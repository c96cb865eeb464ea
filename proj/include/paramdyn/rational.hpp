#pragma once

#include <gmpxx.h>

#include <string>

namespace paramdyn {

// Exact rationals. mpq_class keeps gcd(|num|, den) = 1, den >= 1 and
// represents zero as 0/1, which is exactly the canonical form we rely on
// for coefficient-wise equality everywhere else.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "p", "-p", "p/q" (q > 0 after canonicalization). Rejects anything else.
Rat rat_from_string(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& x);

// log max(|numerator|, denominator) for a reduced rational; zero maps to 0.
double q_weil_height(const Rat& x);

// Natural log of a positive big integer, safe for values far beyond double range.
double log_abs(const Int& z);

}  // namespace paramdyn
