#include "interp/exceptional.hpp"

#include <numeric>
#include <stdexcept>

namespace interp {

Rational::Rational(i64 n, i64 d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i64 g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

bool operator<(const Rational& a, const Rational& b) {
  return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
}

bool operator<(i64 a, const Rational& b) { return Rational(a, 1) < b; }

bool operator<(const Rational& a, i64 b) { return a < Rational(b, 1); }

std::string to_string(const Rational& q) {
  if (q.den == 1) return std::to_string(q.num);
  return std::to_string(q.num) + "/" + std::to_string(q.den);
}

i64 scroll_degree(i64 d, i64 g) {
  if (d <= g + 1)
    throw std::invalid_argument("scroll_degree requires d > g + 1");
  return d - g - 1;
}

ExceptionalReport obstruction_report(i64 r) {
  if (r < 3) throw std::invalid_argument("obstruction_report requires r >= 3");
  ExceptionalReport rep;
  rep.d = r + 2;
  rep.g = 2;
  rep.r = r;
  rep.deg_scroll = scroll_degree(rep.d, rep.g);  // = r - 1
  rep.chi_N = chi_normal(rep.d, rep.g, r);       // = r^2 + 2r + 5
  // C has class (4 - r)F + 2H on the scroll, so
  // C.C = 4(4 - r) + 4(r - 1) = 12 and Riemann-Roch gives chi = 11.
  rep.chi_NCS = 11;
  rep.threshold = Rational(rep.chi_N + r - 2, r - 1);
  rep.obstructed = rep.threshold < rep.chi_NCS;
  return rep;
}

}  // namespace interp
