#include "interp/p1_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace interp {

SplitBundle::SplitBundle(std::vector<i64> degs) : degrees(std::move(degs)) {
  if (degrees.empty())
    throw std::invalid_argument("split bundle needs at least one summand");
  std::sort(degrees.begin(), degrees.end(), std::greater<i64>());
}

i64 h0(const SplitBundle& b) {
  i64 s = 0;
  for (i64 a : b.degrees) s = checked_add(s, std::max<i64>(0, a + 1));
  return s;
}

i64 h1(const SplitBundle& b) {
  i64 s = 0;
  for (i64 a : b.degrees) s = checked_add(s, std::max<i64>(0, -a - 1));
  return s;
}

i64 chi(const SplitBundle& b) {
  i64 s = 0;
  for (i64 a : b.degrees) s = checked_add(s, a + 1);
  return s;
}

SplitBundle twist(const SplitBundle& b, i64 e) {
  std::vector<i64> degs = b.degrees;
  for (i64& a : degs) a = checked_add(a, e);
  return SplitBundle(std::move(degs));
}

i64 modify_chi(const SplitBundle& b,
               const std::vector<std::pair<i64, i64>>& mods) {
  return chi_split_modification(chi(b), mods);
}

bool interpolates(const SplitBundle& b) {
  if (h1(b) != 0) return false;
  const i64 sections = h0(b);
  const i64 m = b.rank();
  const i64 lo = sections / m;
  const i64 hi = (sections + m - 1) / m;
  if (h0(twist(b, -lo)) != sections - m * lo) return false;
  if (h0(twist(b, -hi)) != std::max<i64>(0, sections - m * hi)) return false;
  return true;
}

bool last_case_core(i64 g) {
  if (g < 1) throw std::invalid_argument("last_case_core requires g >= 1");

  // The degree-(4g+1) rational normal curve splits into 4g summands of
  // degree 4g+3; their total chi must be 4g(4g+4).
  {
    std::vector<i64> degs(static_cast<size_t>(4 * g), 4 * g + 3);
    if (chi(SplitBundle(std::move(degs))) != 4 * g * (4 * g + 4)) return false;
  }

  const SplitBundle b({2 * g + 6, 2 * g + 5});
  if (!interpolates(b)) return false;

  // V is a hyperplane of H^0(b) not containing H^0 of the first factor.
  const i64 v_dim = h0(b) - 1;
  for (i64 e = 1; e <= 2 * g + 8; ++e) {
    const i64 w = h0(twist(b, -e));
    const i64 expected = std::max<i64>(0, v_dim - 2 * e);
    if (expected > 0) {
      // Generic position gives dim(V intersect W) = w - 1; it must meet
      // the interpolation target exactly.
      if (w - 1 != expected) return false;
    } else {
      // Every leftover section must sit in the first factor, where the
      // defining functional of V does not vanish identically.
      const i64 first_factor = std::max<i64>(0, (2 * g + 6) - e + 1);
      if (w != 0 && w != first_factor) return false;
      if (w > 1) return false;
    }
  }
  return true;
}

}  // namespace interp
