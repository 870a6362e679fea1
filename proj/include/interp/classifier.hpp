#pragma once

#include <optional>

#include "interp/tuple.hpp"

namespace interp {

enum class Classification {
  Good,
  NotGood,
  OutsideClosedForm,
};

enum class Excellence {
  Yes,
  No,
  Unproven,
};

// The three tuples whose normal bundle fails interpolation.
bool is_exceptional_triple(i64 d, i64 g, i64 r);

// delta(n), defined when sum (i + j) n <= 3. Depends only on (I, J).
std::optional<i64> delta(const MarkedCounts& n);

// Closed-form decision from the classification theorems. Requires an
// admissible tuple with d >= g + r.
//
// NotGood is returned exactly where the theorems disprove interpolation:
// regime violations (the inequality is necessary) and the three
// exceptional triples with n = 0. Tuples inside the r = 3 or r >= 12
// exceptional families are OutsideClosedForm: the theorems withhold a
// verdict there, and some members (e.g. (6,1,3;0)) are in fact good.
//
// `lengthened` switches the high-dimension exception threshold from the
// default r/2 to the strengthened (r+3)/2.
Classification classify(const Tuple& t, bool lengthened = false);

// Whether (d, g, r) is good for every admissible n satisfying regime,
// via the excellent-range propositions and the induction from them.
Excellence is_excellent(i64 d, i64 g, i64 r);

// Largest n such that a general curve passes through n general points.
i64 max_general_points(i64 d, i64 g, i64 r);

}  // namespace interp
