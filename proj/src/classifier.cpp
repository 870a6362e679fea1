#include "interp/classifier.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace interp {

bool is_exceptional_triple(i64 d, i64 g, i64 r) {
  return g == 2 && (r == 3 || r == 4 || r == 5) && d == r + 2;
}

std::optional<i64> delta(const MarkedCounts& n) {
  if (n.sum_ij() > 3) return std::nullopt;
  const i64 I = n.sum_i();
  const i64 J = n.sum_j();
  if (I == 0 && J == 0) return 2;
  if (I == 1 && J == 0) return 3;
  if (I == 1 && J == 1) return 5;
  if (I == 2 && J == 0) return 4;
  if (I == 2 && J == 1) return 5;
  if (I == 3 && J == 0) return 4;
  throw std::logic_error("delta table is missing a case");
}

namespace {

// The two r = 3 families on which the space-curve theorem is silent.
bool in_p3_family(const Tuple& t) {
  if (t.g == 0) return false;
  const i64 I = t.n.sum_i();
  const i64 J = t.n.sum_j();
  const i64 K = t.n.sum_k();
  if (J == 0 && K == 0 && I == 2 * t.d + 2 * t.g - 14) return true;
  if (K == 1 && I == 2 * t.d + 2 * t.g - 9) return true;
  return false;
}

// The two r >= 12 families excluded by the high-dimension theorem.
bool in_high_family(const Tuple& t, bool lengthened) {
  const i64 I = t.n.sum_i();
  const i64 J = t.n.sum_j();
  const i64 K = t.n.sum_k();
  if (I == 1 && J == 1 && K == t.r - 2 && t.d + t.g == 2 * t.r - 2)
    return true;
  const auto dn = delta(t.n);
  if (dn) {
    // K = 4r - 2d - 2g - delta(n) > r/2 (or (r+3)/2 with the strengthened
    // corollary), plus the mod-5 congruence.
    const bool k_matches = K == 4 * t.r - 2 * t.d - 2 * t.g - *dn;
    const bool above = lengthened ? 2 * K > t.r + 3 : 2 * K > t.r;
    if (k_matches && above) {
      const i64 m = ((t.d + t.g + t.r) % 5 + 5) % 5;
      if (m == (*dn + 2) % 5 || m == (*dn + 4) % 5) return true;
    }
  }
  return false;
}

bool in_excellent_proposition_range(i64 d, i64 g, i64 r) {
  switch (r) {
    case 4: return d + g >= 11;
    case 5: return d + g >= 14;
    case 6: return d + g >= 13;
    case 7: return d + g >= 14;
    case 8: return true;
    case 9:
    case 10:
    case 11: return true;
    default: return false;
  }
}

}  // namespace

Classification classify(const Tuple& t, bool lengthened) {
  if (!is_admissible(t))
    throw std::invalid_argument("classify requires an admissible tuple");
  if (t.d < t.g + t.r)
    throw std::invalid_argument("classify requires d >= g + r");

  if (!regime_holds(t)) return Classification::NotGood;

  if (t.n.is_zero()) {
    return is_exceptional_triple(t.d, t.g, t.r) ? Classification::NotGood
                                                : Classification::Good;
  }

  if (t.r == 2) return Classification::Good;  // J = 0 by admissibility
  if (t.g == 0) return Classification::Good;  // regime already checked

  if (t.r == 3) {
    return in_p3_family(t) ? Classification::OutsideClosedForm
                           : Classification::Good;
  }

  if (t.r >= 11) {
    // r = 11 is fully covered by the excellent-range proposition; the
    // exception families only bite from r = 12 up.
    if (t.r == 11) return Classification::Good;
    return in_high_family(t, lengthened) ? Classification::OutsideClosedForm
                                         : Classification::Good;
  }

  // 4 <= r <= 10 with marked points: only the excellent ranges are proven.
  if (in_excellent_proposition_range(t.d, t.g, t.r)) return Classification::Good;
  return Classification::OutsideClosedForm;
}

Excellence is_excellent(i64 d, i64 g, i64 r) {
  if (d < g + r)
    throw std::invalid_argument("is_excellent requires d >= g + r");

  if (is_exceptional_triple(d, g, r)) return Excellence::No;
  if (r == 2) return Excellence::Yes;
  if (g == 0) return Excellence::Yes;
  if (r == 3) return Excellence::Unproven;  // families make it unprovable here
  if (in_excellent_proposition_range(d, g, r)) return Excellence::Yes;

  // Induction: d + g >= 2r - 1 with all three predecessors excellent.
  static std::mutex memo_mu;
  static std::map<std::tuple<i64, i64, i64>, Excellence> memo;
  const auto key = std::make_tuple(d, g, r);
  {
    std::lock_guard lock(memo_mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  Excellence result = Excellence::Unproven;
  if (r >= 4 && d + g >= 2 * r - 1) {
    if (is_excellent(d - 1, g - 1, r) == Excellence::Yes &&
        is_excellent(d - 1, g, r - 1) == Excellence::Yes &&
        is_excellent(d - 2, g - 1, r - 1) == Excellence::Yes) {
      result = Excellence::Yes;
    }
  }
  std::lock_guard lock(memo_mu);
  memo.emplace(key, result);
  return result;
}

i64 max_general_points(i64 d, i64 g, i64 r) {
  if (d < g + r)
    throw std::invalid_argument("max_general_points requires d >= g + r");
  if (g == 2 && d == r + 2 && (r == 3 || r == 5)) return 9;
  const i64 chi = chi_normal(d, g, r);
  if (chi < 0) throw std::logic_error("negative chi in max_general_points");
  return chi / (r - 1);
}

}  // namespace interp
