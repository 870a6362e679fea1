#include "interp/tuple.hpp"

#include <sstream>
#include <stdexcept>

namespace interp {

i64 checked_add(i64 a, i64 b) {
  i64 out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in addition");
  return out;
}

i64 checked_sub(i64 a, i64 b) {
  i64 out;
  if (__builtin_sub_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in subtraction");
  return out;
}

i64 checked_mul(i64 a, i64 b) {
  i64 out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in multiplication");
  return out;
}

int slot_of(int i, int j, int k) {
  for (size_t s = 0; s < kMarkedTypes.size(); ++s) {
    const MarkedType& mt = kMarkedTypes[s];
    if (mt.i == i && mt.j == j && mt.k == k) return static_cast<int>(s);
  }
  return -1;
}

i64 MarkedCounts::total() const {
  i64 s = 0;
  for (i64 v : c) s = checked_add(s, v);
  return s;
}

i64 MarkedCounts::sum_i() const {
  i64 s = 0;
  for (size_t t = 0; t < 9; ++t)
    s = checked_add(s, checked_mul(kMarkedTypes[t].i, c[t]));
  return s;
}

i64 MarkedCounts::sum_j() const {
  i64 s = 0;
  for (size_t t = 0; t < 9; ++t)
    s = checked_add(s, checked_mul(kMarkedTypes[t].j, c[t]));
  return s;
}

i64 MarkedCounts::sum_k() const {
  i64 s = 0;
  for (size_t t = 0; t < 9; ++t)
    s = checked_add(s, checked_mul(kMarkedTypes[t].k, c[t]));
  return s;
}

i64 MarkedCounts::sum_ij() const { return checked_add(sum_i(), sum_j()); }

bool MarkedCounts::is_zero() const {
  for (i64 v : c)
    if (v != 0) return false;
  return true;
}

size_t TupleHash::operator()(const Tuple& t) const {
  // FNV-1a over the 12 fields.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](i64 v) {
    std::uint64_t u = static_cast<std::uint64_t>(v);
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (u >> (8 * byte)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(t.d);
  mix(t.g);
  mix(t.r);
  for (i64 v : t.n.c) mix(v);
  return static_cast<size_t>(h);
}

std::string to_string(const Tuple& t) {
  std::ostringstream os;
  os << "(" << t.d << ", " << t.g << ", " << t.r << "; [";
  for (size_t s = 0; s < 9; ++s) {
    if (s) os << ",";
    os << t.n.c[s];
  }
  os << "])";
  return os.str();
}

std::vector<std::string> validate(const Tuple& t) {
  std::vector<std::string> out;
  if (t.r < 2) out.push_back("r must be at least 2");
  if (t.g < 0) out.push_back("genus must be nonnegative");
  if (t.d < 0) out.push_back("degree must be nonnegative");
  for (size_t s = 0; s < 9; ++s) {
    if (t.n.c[s] < 0) {
      out.push_back("negative count in slot " + std::to_string(s));
    }
  }
  if (!out.empty()) return out;  // sums below assume sane fields
  const i64 K = t.n.sum_k();
  if (K >= t.r - 1) {
    out.push_back("K = " + std::to_string(K) + " must be < r - 1 = " +
                  std::to_string(t.r - 1));
  }
  if (t.r == 2 && t.n.sum_j() != 0) {
    out.push_back("r = 2 requires J = 0, got J = " +
                  std::to_string(t.n.sum_j()));
  }
  return out;
}

bool is_admissible(const Tuple& t) { return validate(t).empty(); }

i64 chi_normal(i64 d, i64 g, i64 r) {
  return checked_sub(checked_mul(r + 1, d), checked_mul(r - 3, g - 1));
}

i64 chi_modified(const Tuple& t) {
  i64 chi = checked_sub(checked_mul(t.r + 1, t.d),
                        checked_add(checked_mul(t.r - 3, t.g), 2));
  for (size_t s = 0; s < 9; ++s) {
    const MarkedType& mt = kMarkedTypes[s];
    const i64 coeff = t.r - 1 - mt.i - 2 * mt.j - mt.k;
    chi = checked_sub(chi, checked_mul(coeff, t.n.c[s]));
  }
  return chi;
}

i64 chi_top(const Tuple& t) {
  if (t.d < t.g + t.r) {
    throw std::invalid_argument("chi_top requires d >= g + r, got " +
                                to_string(t));
  }
  i64 chi = t.d - t.g + 2;
  for (size_t s = 0; s < 9; ++s) {
    const MarkedType& mt = kMarkedTypes[s];
    chi = checked_add(chi, checked_mul(mt.i + mt.j - 1, t.n.c[s]));
  }
  if (chi < 0) {
    throw std::logic_error("chi_top came out negative on " + to_string(t));
  }
  return chi;
}

ChiReport chi_report(const Tuple& t) {
  return ChiReport{chi_modified(t), chi_top(t), t.r - 1};
}

i64 regime_weight(const MarkedType& mt, i64 r) {
  return (r - 2) * mt.i + (r - 3) * mt.j - mt.k;
}

i64 regime_lhs(const Tuple& t) {
  i64 s = 0;
  for (size_t slot = 0; slot < 9; ++slot) {
    s = checked_add(
        s, checked_mul(regime_weight(kMarkedTypes[slot], t.r), t.n.c[slot]));
  }
  return s;
}

i64 regime_rhs(const Tuple& t) {
  return checked_sub(checked_add(checked_mul(2, t.d), checked_mul(2, t.g)),
                     t.r + 2);
}

bool regime_holds(const Tuple& t) { return regime_lhs(t) <= regime_rhs(t); }

i64 chi_split_modification(i64 chi,
                           const std::vector<std::pair<i64, i64>>& mods) {
  for (const auto& [deg, corank] : mods) {
    if (deg < 0 || corank < 0)
      throw std::invalid_argument("modification degree/corank must be >= 0");
    chi = checked_sub(chi, checked_mul(deg, corank));
  }
  return chi;
}

void enumerate_marked_counts(
    i64 d, i64 g, i64 r, const std::function<void(const MarkedCounts&)>& f) {
  if (r <= 2) {
    throw std::invalid_argument(
        "enumerate_marked_counts requires r >= 3 (r = 2 is handled in "
        "closed form)");
  }
  const i64 rhs = 2 * d + 2 * g - r - 2;
  const i64 k_max = r - 2;

  // Per-type caps. Positive-weight types are bounded through the regime
  // inequality after allowing the maximal negative offset K <= r - 2;
  // the remaining types all carry k >= 1 and so are bounded by the K cap.
  std::array<i64, 9> cap{};
  for (size_t s = 0; s < 9; ++s) {
    const MarkedType& mt = kMarkedTypes[s];
    const i64 w = regime_weight(mt, r);
    if (w > 0) {
      const i64 budget = rhs + k_max;
      cap[s] = budget >= 0 ? budget / w : -1;
    } else {
      cap[s] = mt.k > 0 ? k_max / mt.k : k_max;
    }
    if (cap[s] < 0) cap[s] = -1;  // regime already unsatisfiable
  }

  MarkedCounts n;
  std::function<void(size_t, i64, i64)> rec = [&](size_t slot, i64 k_used,
                                                  i64 partial_lhs) {
    if (slot == 9) {
      Tuple t{d, g, r, n};
      if (regime_lhs(t) <= rhs && is_admissible(t)) f(n);
      return;
    }
    const MarkedType& mt = kMarkedTypes[slot];
    const i64 w = regime_weight(mt, r);
    for (i64 v = 0; v <= cap[slot]; ++v) {
      const i64 k_new = k_used + v * mt.k;
      if (mt.k > 0 && k_new > k_max) break;
      // Later slots can push the left side down by at most the unused
      // K budget (each admissible type has w >= -k for r >= 3), and the
      // pruned quantity is monotone in v, so break rather than continue.
      const i64 lhs_new = partial_lhs + v * w;
      if (lhs_new - (k_max - k_new) > rhs) break;
      n.c[slot] = v;
      rec(slot + 1, k_new, lhs_new);
    }
    n.c[slot] = 0;
  };
  rec(0, 0, 0);
}

std::vector<MarkedCounts> enumerate_marked_counts(i64 d, i64 g, i64 r) {
  std::vector<MarkedCounts> out;
  enumerate_marked_counts(d, g, r,
                          [&out](const MarkedCounts& n) { out.push_back(n); });
  return out;
}

}  // namespace interp
