#pragma once

#include <optional>
#include <string>
#include <vector>

#include "interp/tuple.hpp"

namespace interp {

enum class RuleId {
  TwoSecantA,      // K < r - 2: adds a (1,1;1) point at (d-1, g-1, r)
  TwoSecantB,      // K = r - 2: collapses k, adds a (1,1;0) point
  TwoSecantBackA,  // K = r - 3: collapses k, adds a (1,0;1) point
  TwoSecantBackB,  // K = r - 2: collapses k, adds a (1,0;2) point
  StickA,          // K < r - 2: j -> i transposition keeping k, r drops
  StickB,          // K = r - 2: transposition dropping k, r drops
  TwoSticksA,      // K < r - 3
  TwoSticksB,      // K = r - 3
  TwoSticksC,      // K = r - 2
  LowerD,          // both children required
  Izz,             // removes one (l,0;0) point; second child transposed
  Ijz,             // r = 3 only, removes one (1,1;0) point
  Zzk,             // removes one (0,0;l) point; second child collapses k
  Special5,        // r = 5, g >= 2, n = 0
  NegTwist,        // not a standalone rule; folded into the constructions
  BaseP2,
  BaseP3Mid,
  BaseLastCase,
  Base835,
  BaseRational,
};

const char* rule_name(RuleId id);
std::optional<RuleId> rule_from_name(const std::string& name);
bool is_base_rule(RuleId id);

struct SideCondition {
  std::string desc;
  i64 lhs = 0;
  std::string rel;
  i64 rhs = 0;
  bool satisfied = true;

  friend bool operator==(const SideCondition&, const SideCondition&) = default;
};

// One applicable instance of a reduction lemma or base case. Invariants:
// every recorded side condition is satisfied, every child passes validate,
// and (d, total points) strictly decreases lexicographically to each child.
struct RuleApplication {
  RuleId rule;
  Tuple parent;
  std::vector<Tuple> children;  // empty exactly for base-case leaves
  std::vector<SideCondition> side_conditions;
  i64 consumed_l = 0;  // point parameter for Izz / Ijz / Zzk
  i64 consumed_m = 0;  // second parameter for Ijz

  friend bool operator==(const RuleApplication&,
                         const RuleApplication&) = default;
};

// Count transforms shared by several lemmas.
MarkedCounts collapse_k(const MarkedCounts& n);            // (i,j;k) -> (i,j;0)
MarkedCounts stick_transpose_keep_k(const MarkedCounts& n);  // (i,j;k)->(j,0;k)
MarkedCounts stick_transpose_drop_k(const MarkedCounts& n);  // (i,j;k)->(j,0;0)

// Each apply_* returns every applicable instance (several when the lemma
// leaves a choice of point type free), in deterministic order. An empty
// result means inapplicable.
std::vector<RuleApplication> apply_two_secant(const Tuple& t);
std::vector<RuleApplication> apply_two_secant_backwards(const Tuple& t);
std::vector<RuleApplication> apply_special5(const Tuple& t);
std::vector<RuleApplication> apply_stick(const Tuple& t);
std::vector<RuleApplication> apply_two_sticks(const Tuple& t);
std::vector<RuleApplication> apply_lower_d(const Tuple& t);
std::vector<RuleApplication> apply_izz(const Tuple& t);
std::vector<RuleApplication> apply_ijz(const Tuple& t);
std::vector<RuleApplication> apply_zzk(const Tuple& t);

// First matching base case, if any.
std::optional<RuleApplication> base_case(const Tuple& t,
                                         bool allow_rational = true);

// All applications of one named rule (used by the certificate checker).
std::vector<RuleApplication> apply_rule(RuleId id, const Tuple& t,
                                        bool allow_rational = true);

// The fixed search order over rule families: point-removal rules first,
// then degree-lowering, then the dimension-lowering rules. Each family
// resolves its own K-case internally.
using ApplyFn = std::vector<RuleApplication> (*)(const Tuple&);
struct RuleFamily {
  const char* name;
  ApplyFn fn;
};
const std::vector<RuleFamily>& search_rule_families();

}  // namespace interp
