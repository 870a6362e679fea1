#include "interp/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

#include "interp/classifier.hpp"

namespace interp {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Good: return "good";
    case Outcome::NotGoodRegime: return "notgood-regime";
    case Outcome::NotGoodException: return "notgood-exception";
    case Outcome::Unknown: return "unknown";
    case Outcome::Aborted: return "aborted";
  }
  return "?";
}

bool is_not_good(Outcome o) {
  return o == Outcome::NotGoodRegime || o == Outcome::NotGoodException;
}

i64 Certificate::depth() const {
  i64 best = 0;
  for (const Certificate& c : children) best = std::max(best, c.depth());
  return best + 1;
}

Engine::Engine(Config cfg) : cfg_(cfg) {
  if (cfg_.node_budget <= 0)
    throw std::invalid_argument("node budget must be positive");
}

std::optional<Outcome> Engine::memo_lookup(const Tuple& t) const {
  std::shared_lock lock(mu_);
  auto it = memo_.find(t);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void Engine::memo_store(const Tuple& t, Outcome o) {
  std::unique_lock lock(mu_);
  memo_.emplace(t, o);  // insert-if-absent; first inserted value wins
}

size_t Engine::memo_size() const {
  std::shared_lock lock(mu_);
  return memo_.size();
}

Outcome Engine::decide(const Tuple& t) {
  const auto violations = validate(t);
  if (!violations.empty()) {
    throw std::invalid_argument("decide requires an admissible tuple: " +
                                violations.front());
  }
  i64 budget = cfg_.node_budget;
  const Outcome out = decide_rec(t, budget);
  last_nodes_used_.store(cfg_.node_budget - budget);
  return out;
}

Outcome Engine::decide_rec(const Tuple& t, i64& budget) {
  if (auto cached = memo_lookup(t)) return *cached;

  Outcome out;
  if (!regime_holds(t)) {
    out = Outcome::NotGoodRegime;
  } else if (base_case(t, cfg_.base_rational)) {
    out = Outcome::Good;
  } else {
    bool certified = false;
    for (const RuleFamily& family : search_rule_families()) {
      for (const RuleApplication& app : family.fn(t)) {
        if (--budget < 0) return Outcome::Aborted;
        bool all_good = true;
        for (const Tuple& child : app.children) {
          const Outcome c = decide_rec(child, budget);
          if (c == Outcome::Aborted) return Outcome::Aborted;
          if (c != Outcome::Good) {
            all_good = false;
            break;
          }
        }
        if (all_good) {
          certified = true;
          if (!cfg_.exhaustive_rules) break;
        }
      }
      if (certified && !cfg_.exhaustive_rules) break;
    }
    if (certified) {
      out = Outcome::Good;
    } else if (t.n.is_zero() && t.d >= t.g + t.r &&
               is_exceptional_triple(t.d, t.g, t.r)) {
      out = Outcome::NotGoodException;
    } else {
      out = Outcome::Unknown;
    }
  }
  memo_store(t, out);
  return out;
}

RuleApplication Engine::certified_step(const Tuple& t) {
  if (auto base = base_case(t, cfg_.base_rational)) return *base;
  for (const RuleFamily& family : search_rule_families()) {
    for (const RuleApplication& app : family.fn(t)) {
      bool all_good = true;
      for (const Tuple& child : app.children) {
        if (decide(child) != Outcome::Good) {
          all_good = false;
          break;
        }
      }
      if (all_good) return app;
    }
  }
  throw std::logic_error("no certifying step for a tuple decided good: " +
                         to_string(t));
}

std::optional<Certificate> Engine::certificate(const Tuple& t) {
  if (decide(t) != Outcome::Good) return std::nullopt;
  Certificate cert;
  cert.root = t;
  cert.node = certified_step(t);
  for (const Tuple& child : cert.node.children) {
    auto sub = certificate(child);
    if (!sub)
      throw std::logic_error("certified child failed to produce a tree");
    cert.children.push_back(std::move(*sub));
  }
  return cert;
}

i64 Engine::certified_depth(const Tuple& t) {
  if (decide(t) != Outcome::Good) return 0;
  {
    std::shared_lock lock(depth_mu_);
    auto it = depth_memo_.find(t);
    if (it != depth_memo_.end()) return it->second;
  }
  const RuleApplication step = certified_step(t);
  i64 best = 0;
  for (const Tuple& child : step.children)
    best = std::max(best, certified_depth(child));
  std::unique_lock lock(depth_mu_);
  depth_memo_.emplace(t, best + 1);
  return best + 1;
}

namespace {

std::optional<CheckFailure> check_node(const Certificate& c,
                                       const std::string& path,
                                       bool allow_rational) {
  if (!is_admissible(c.root))
    return CheckFailure{path, "tuple fails validation: " + to_string(c.root)};
  if (!(c.node.parent == c.root))
    return CheckFailure{path, "node parent differs from recorded root"};

  const auto candidates = apply_rule(c.node.rule, c.root, allow_rational);
  bool matched = false;
  for (const RuleApplication& cand : candidates) {
    if (cand == c.node) {
      matched = true;
      break;
    }
  }
  if (!matched) {
    return CheckFailure{
        path, std::string("replay of ") + rule_name(c.node.rule) +
                  " did not reproduce the recorded application on " +
                  to_string(c.root)};
  }

  if (is_base_rule(c.node.rule)) {
    if (!c.children.empty() || !c.node.children.empty())
      return CheckFailure{path, "base-case leaf carries children"};
    return std::nullopt;
  }
  if (c.children.size() != c.node.children.size())
    return CheckFailure{path, "child certificate count mismatch"};
  for (size_t i = 0; i < c.children.size(); ++i) {
    if (!(c.children[i].root == c.node.children[i]))
      return CheckFailure{path + "/" + std::to_string(i),
                          "child root differs from constructed child"};
    if (auto fail = check_node(c.children[i], path + "/" + std::to_string(i),
                               allow_rational)) {
      return fail;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<CheckFailure> check_certificate(const Certificate& c,
                                              bool allow_rational) {
  return check_node(c, "root", allow_rational);
}

void RangeSpec::validate_spec() const {
  if (r_lo < 2 || r_hi < r_lo)
    throw std::invalid_argument("range spec needs 2 <= r_lo <= r_hi");
  const bool d_bounded = (d && d->second >= d->first) ||
                         (d_plus_g && d_plus_g->second >= d_plus_g->first);
  if (!d_bounded)
    throw std::invalid_argument(
        "range spec must bound d or d+g from above (g alone is not enough)");
  if (!zero_only && r_lo <= 2)
    throw std::invalid_argument(
        "marked-count enumeration needs r >= 3; use zero-only mode for r = 2");
}

SweepReport sweep(Engine& engine, const RangeSpec& range, int jobs) {
  range.validate_spec();
  if (jobs < 1) jobs = 1;

  // Materialize the work list up front so parallel workers just index it.
  std::vector<Tuple> work;
  for (i64 r = range.r_lo; r <= range.r_hi; ++r) {
    i64 d_hi = range.d ? range.d->second : std::numeric_limits<i64>::max();
    if (range.d_plus_g) d_hi = std::min(d_hi, range.d_plus_g->second);
    const i64 d_lo = range.d ? range.d->first : 0;
    for (i64 d = std::max<i64>(d_lo, r); d <= d_hi; ++d) {
      for (i64 g = 0; g <= d - r; ++g) {
        if (range.g && (g < range.g->first || g > range.g->second)) continue;
        if (range.d_plus_g &&
            (d + g < range.d_plus_g->first || d + g > range.d_plus_g->second))
          continue;
        if (range.zero_only) {
          Tuple t{d, g, r, {}};
          if (regime_holds(t)) work.push_back(t);
        } else {
          enumerate_marked_counts(d, g, r, [&](const MarkedCounts& n) {
            work.push_back(Tuple{d, g, r, n});
          });
        }
      }
    }
  }

  SweepReport report;
  std::mutex rows_mu;
  std::atomic<size_t> next{0};
  std::atomic<bool> aborted{false};
  std::string worker_error;

  auto worker = [&]() {
    try {
      for (;;) {
        if (aborted.load()) return;
        const size_t idx = next.fetch_add(1);
        if (idx >= work.size()) return;
        const Tuple& t = work[idx];
        const Outcome out = engine.decide(t);
        if (out == Outcome::Aborted) {
          aborted.store(true);
          return;
        }
        SweepRow row{t, out, 0};
        if (out == Outcome::Good) row.depth = engine.certified_depth(t);
        std::lock_guard lock(rows_mu);
        report.rows.push_back(std::move(row));
      }
    } catch (const std::exception& e) {
      aborted.store(true);
      std::lock_guard lock(rows_mu);
      if (worker_error.empty()) worker_error = e.what();
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (!worker_error.empty())
    throw std::runtime_error("sweep worker failed: " + worker_error);

  report.aborted = aborted.load();
  std::sort(report.rows.begin(), report.rows.end(),
            [](const SweepRow& a, const SweepRow& b) { return a.t < b.t; });
  for (const SweepRow& row : report.rows) {
    switch (row.outcome) {
      case Outcome::Good: ++report.good; break;
      case Outcome::NotGoodRegime:
      case Outcome::NotGoodException: ++report.notgood; break;
      case Outcome::Unknown: ++report.unknown; break;
      case Outcome::Aborted: break;
    }
  }
  return report;
}

}  // namespace interp
