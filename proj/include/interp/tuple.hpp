#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace interp {

using i64 = std::int64_t;

// Checked 64-bit arithmetic. Inputs in scope (d, g, r <= 1e4) cannot
// overflow, but every chi/regime computation goes through these anyway.
i64 checked_add(i64 a, i64 b);
i64 checked_sub(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

// One of the nine admissible marked-point types (i, j; k).
struct MarkedType {
  int i;
  int j;
  int k;

  friend bool operator==(const MarkedType&, const MarkedType&) = default;
};

// Canonical slot order. Everything that serializes counts uses this order.
inline constexpr std::array<MarkedType, 9> kMarkedTypes = {{
    {1, 1, 1}, {2, 0, 1}, {1, 0, 2}, {1, 1, 0}, {1, 0, 1},
    {2, 0, 0}, {0, 0, 2}, {1, 0, 0}, {0, 0, 1},
}};

// Slot indices into kMarkedTypes, named for readability at call sites.
enum Slot : int {
  kSlot111 = 0,
  kSlot201 = 1,
  kSlot102 = 2,
  kSlot110 = 3,
  kSlot101 = 4,
  kSlot200 = 5,
  kSlot002 = 6,
  kSlot100 = 7,
  kSlot001 = 8,
};

int slot_of(int i, int j, int k);  // -1 when (i,j;k) is not admissible

// Dense 9-slot multiplicity vector over the admissible types.
struct MarkedCounts {
  std::array<i64, 9> c{};

  i64 operator[](int slot) const { return c[static_cast<size_t>(slot)]; }
  i64& operator[](int slot) { return c[static_cast<size_t>(slot)]; }

  i64 total() const;   // sum of all counts
  i64 sum_i() const;   // sum of i * n
  i64 sum_j() const;   // sum of j * n
  i64 sum_k() const;   // sum of k * n
  i64 sum_ij() const;  // sum of (i + j) * n

  bool is_zero() const;

  friend bool operator==(const MarkedCounts&, const MarkedCounts&) = default;
  friend bool operator<(const MarkedCounts& a, const MarkedCounts& b) {
    return a.c < b.c;
  }
};

// The unit of decision: degree, genus, ambient dimension and marked counts.
struct Tuple {
  i64 d = 0;
  i64 g = 0;
  i64 r = 2;
  MarkedCounts n;

  friend bool operator==(const Tuple&, const Tuple&) = default;
  friend bool operator<(const Tuple& a, const Tuple& b) {
    if (a.d != b.d) return a.d < b.d;
    if (a.g != b.g) return a.g < b.g;
    if (a.r != b.r) return a.r < b.r;
    return a.n < b.n;
  }
};

struct TupleHash {
  size_t operator()(const Tuple& t) const;
};

std::string to_string(const Tuple& t);

struct ChiReport {
  i64 chi_total = 0;
  i64 chi_top = 0;
  i64 rank = 0;  // r - 1
};

// Admissibility. Returns one entry per violated constraint; empty means ok.
std::vector<std::string> validate(const Tuple& t);
bool is_admissible(const Tuple& t);

// chi of the unmodified normal bundle, (r + 1)d - (r - 3)(g - 1).
i64 chi_normal(i64 d, i64 g, i64 r);

// chi of the modified bundle:
// (r + 1)d - (r - 3)g - 2 - sum (r - 1 - i - 2j - k) * n.
i64 chi_modified(const Tuple& t);

// chi of the distinguished line subbundle, d - g + 2 + sum (i + j - 1) * n.
// Requires d >= g + r; the result is asserted nonnegative.
i64 chi_top(const Tuple& t);

ChiReport chi_report(const Tuple& t);

// The necessary linear condition:
//   sum ((r - 2)i + (r - 3)j - k) * n  <=  2d + 2g - r - 2.
i64 regime_weight(const MarkedType& mt, i64 r);
i64 regime_lhs(const Tuple& t);
i64 regime_rhs(const Tuple& t);
bool regime_holds(const Tuple& t);

// General Euler bookkeeping: chi - sum deg * corank over the modifications.
i64 chi_split_modification(i64 chi,
                           const std::vector<std::pair<i64, i64>>& mods);

// Streams every admissible n with K <= r - 2 satisfying the regime
// inequality for (d, g, r). Rejects r <= 2. Emission order is the
// lexicographic order of the canonical 9-slot vector.
void enumerate_marked_counts(i64 d, i64 g, i64 r,
                             const std::function<void(const MarkedCounts&)>& f);
std::vector<MarkedCounts> enumerate_marked_counts(i64 d, i64 g, i64 r);

}  // namespace interp
