#pragma once

#include <string>

#include "interp/tuple.hpp"

namespace interp {

// Exact rational with positive denominator, normalized. Threshold
// comparisons here are strict inequalities and must never round.
struct Rational {
  i64 num = 0;
  i64 den = 1;

  Rational() = default;
  Rational(i64 n, i64 d);

  friend bool operator==(const Rational&, const Rational&) = default;
};

bool operator<(const Rational& a, const Rational& b);
bool operator<(i64 a, const Rational& b);
bool operator<(const Rational& a, i64 b);
std::string to_string(const Rational& q);

// Degree of the hyperelliptic secant scroll, d - g - 1. Requires d > g + 1.
i64 scroll_degree(i64 d, i64 g);

// The obstruction arithmetic for the curve class (d, g) = (r + 2, 2).
struct ExceptionalReport {
  i64 d = 0;
  i64 g = 0;
  i64 r = 0;
  i64 deg_scroll = 0;
  i64 chi_N = 0;    // (r+1)d - (r-3)(g-1) = r^2 + 2r + 5
  i64 chi_NCS = 0;  // always 11
  Rational threshold;  // (chi_N + r - 2) / (r - 1) = (r^2 + 3r + 3)/(r - 1)
  bool obstructed = false;  // chi_NCS > threshold
};

ExceptionalReport obstruction_report(i64 r);

}  // namespace interp
