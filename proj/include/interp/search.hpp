#pragma once

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "interp/rules.hpp"
#include "interp/tuple.hpp"

namespace interp {

enum class Outcome {
  Good,
  NotGoodRegime,     // the necessary inequality fails
  NotGoodException,  // one of the three exceptional triples with n = 0
  Unknown,           // sound rule set, but no derivation found
  Aborted,           // node budget exhausted; never memoized
};

const char* outcome_name(Outcome o);
bool is_not_good(Outcome o);

struct Config {
  i64 node_budget = 10'000'000;  // rule applications per query
  bool base_rational = true;     // allow the rational-curve leaf
  bool exhaustive_rules = false; // keep evaluating rules after a success
  bool lengthened_threshold = false;  // classifier threshold flag
  int jobs = 1;
};

// A replayable derivation tree. Leaves carry a base-case application with
// no children; inner nodes carry the rule application that produced the
// child tuples, in order.
struct Certificate {
  Tuple root;
  RuleApplication node;
  std::vector<Certificate> children;

  i64 depth() const;
};

struct CheckFailure {
  std::string path;    // root-relative child indices, e.g. "root/1/0"
  std::string reason;
};

// Independent replay of a certificate: re-runs every node's applicability
// predicate and child construction and compares exactly.
std::optional<CheckFailure> check_certificate(const Certificate& c,
                                              bool allow_rational = true);

class Engine {
 public:
  explicit Engine(Config cfg = Config{});

  const Config& config() const { return cfg_; }

  // Decides goodness of an admissible tuple. Deterministic for a fixed
  // config; memoized across calls. Throws on inadmissible input.
  Outcome decide(const Tuple& t);

  // Rebuilds the derivation tree for a tuple decide() certified.
  std::optional<Certificate> certificate(const Tuple& t);

  // Depth of the certificate decide() finds, without materializing it.
  i64 certified_depth(const Tuple& t);

  i64 nodes_used_last_query() const { return last_nodes_used_.load(); }
  size_t memo_size() const;

 private:
  Outcome decide_rec(const Tuple& t, i64& budget);
  std::optional<Outcome> memo_lookup(const Tuple& t) const;
  void memo_store(const Tuple& t, Outcome o);
  // The first rule application whose children are all certified; requires
  // decide(t) == Good.
  RuleApplication certified_step(const Tuple& t);

  Config cfg_;
  mutable std::shared_mutex mu_;
  std::unordered_map<Tuple, Outcome, TupleHash> memo_;
  mutable std::shared_mutex depth_mu_;
  std::unordered_map<Tuple, i64, TupleHash> depth_memo_;
  std::atomic<i64> last_nodes_used_{0};
};

struct RangeSpec {
  i64 r_lo = 0;
  i64 r_hi = 0;
  std::optional<std::pair<i64, i64>> d_plus_g;
  std::optional<std::pair<i64, i64>> d;
  std::optional<std::pair<i64, i64>> g;
  bool zero_only = false;

  // Throws unless the spec pins down a finite (d, g) region with r >= 2.
  void validate_spec() const;
};

struct SweepRow {
  Tuple t;
  Outcome outcome = Outcome::Unknown;
  i64 depth = 0;  // certificate depth for good rows, 0 otherwise
};

struct SweepReport {
  std::vector<SweepRow> rows;  // sorted by (d, g, r, n)
  i64 good = 0;
  i64 notgood = 0;
  i64 unknown = 0;
  bool aborted = false;
};

// Runs decide over every admissible regime-satisfying tuple in range
// (d >= g + r). Rows are sorted before returning, so worker count never
// changes the output.
SweepReport sweep(Engine& engine, const RangeSpec& range, int jobs = 1);

}  // namespace interp
