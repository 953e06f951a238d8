#include "geodetic/diophantine.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <numeric>
#include <thread>

#include "geodetic/automorphism.hpp"
#include "geodetic/checkpoint.hpp"
#include "geodetic/distance.hpp"
#include "geodetic/error.hpp"
#include "geodetic/graph_io.hpp"
#include "geodetic/predicates.hpp"

namespace geodetic {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kChargeInterval = 1024;

class Budget {
 public:
  explicit Budget(const SearchOptions& options)
      : options_(options), start_(Clock::now()) {}

  // Returns false once the budget is exhausted; every later call agrees.
  bool Charge(std::uint64_t nodes) {
    const std::uint64_t total =
        nodes_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
    if (options_.node_budget && total > *options_.node_budget) {
      stop_.store(true, std::memory_order_relaxed);
    }
    if (options_.time_budget && Clock::now() - start_ > *options_.time_budget) {
      stop_.store(true, std::memory_order_relaxed);
    }
    return !stopped();
  }
  bool stopped() const { return stop_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

 private:
  const SearchOptions& options_;
  Clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
};

using PartitionKey = std::vector<int>;
using Solutions = std::vector<LengthVector>;

std::string SkeletonLabel(const Skeleton& s) {
  return s.name.empty() ? EncodeGraph6(s.base) : s.name;
}

// Work units are solved independently in any order and merged by sorting,
// so worker count never changes the result.
template <typename SolveFn>
SolveResult RunPartitions(const std::vector<PartitionKey>& keys,
                          const SearchOptions& options,
                          const CheckpointHeader& header, Budget& budget,
                          SolveFn solve) {
  std::unique_ptr<CheckpointLog> log;
  if (!options.checkpoint_path.empty()) {
    log = std::make_unique<CheckpointLog>(options.checkpoint_path, header);
  }

  SolveResult result;
  result.partitions = keys.size();
  std::vector<std::optional<Solutions>> found(keys.size());
  if (log) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const auto it = log->completed().find(keys[i]);
      if (it != log->completed().end()) {
        found[i] = it->second;
        ++result.resumed_partitions;
      }
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= keys.size() || budget.stopped()) return;
      if (found[i]) continue;
      std::optional<Solutions> solutions = solve(keys[i], budget);
      if (!solutions) return;
      if (log) log->Record(keys[i], *solutions);
      found[i] = std::move(solutions);
    }
  };
  const int workers = std::max(1, options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  const auto completed = static_cast<std::size_t>(
      std::count_if(found.begin(), found.end(),
                    [](const auto& f) { return f.has_value(); }));
  if (completed != keys.size()) {
    throw BudgetExceededError(
        "search budget exhausted after " + std::to_string(completed) + " of " +
            std::to_string(keys.size()) + " partitions" +
            (log ? "; resume with checkpoint '" + log->path() + "'" : ""),
        completed, keys.size(), log ? log->path() : "");
  }
  for (auto& f : found) {
    for (auto& lv : *f) result.solutions.push_back(std::move(lv));
  }
  std::sort(result.solutions.begin(), result.solutions.end());
  result.nodes = budget.nodes();
  return result;
}

// Realization gate shared by both engines: builds the subdivision and runs
// the early-exit geodesic sweep.
class RealizationGate {
 public:
  RealizationGate(const Skeleton& skeleton, int target_d,
                  const std::vector<SegmentPath>* c1_paths)
      : builder_(skeleton.base),
        kept_(c1_paths ? skeleton.base.num_vertices() : 0),
        target_d_(target_d),
        c1_paths_(c1_paths) {}

  bool Accept(std::span<const int> lengths) {
    builder_.Build(lengths);
    const auto probe = probe_.Run(builder_.offsets(), builder_.neighbors(), kept_);
    if (!probe.connected || !probe.geodetic ||
        probe.diameter != static_cast<std::uint32_t>(target_d_)) {
      return false;
    }
    if (c1_paths_) {
      for (const SegmentPath& path : *c1_paths_) {
        std::int64_t length = 0;
        for (EdgeId e : path.edges) length += lengths[e];
        if (length != probe_.distance(path.from(), path.to())) return false;
      }
    }
    return true;
  }

 private:
  SubdivisionBuilder builder_;
  GeodesicProbe probe_;
  Vertex kept_;
  int target_d_;
  const std::vector<SegmentPath>* c1_paths_;
};

// Depth-first search over the variables in a fixed most-constrained order.
// The common sum s is fixed per partition, which turns every equal-sum
// constraint into a fixed-sum constraint; each variable's domain is then
// narrowed so that every equal-sum constraint it belongs to can still be
// completed by its unassigned variables.
class ConditionSearch {
 public:
  static constexpr std::size_t kPartitionDepth = 3;
  static constexpr int kNoSum = -1;

  explicit ConditionSearch(const GeodeticSystem& system)
      : system_(system),
        paths_(SegmentPaths(system.skeleton.base, system.d0())),
        var_eq_(system.num_vars()),
        var_par_(system.num_vars()) {
    for (std::size_t c = 0; c < system.equal_sum.size(); ++c) {
      for (EdgeId e : system.equal_sum[c].edges) var_eq_[e].push_back(c);
    }
    for (std::size_t c = 0; c < system.parity.size(); ++c) {
      for (EdgeId e : system.parity[c].edges) var_par_[e].push_back(c);
    }
    BuildOrder();
  }

  std::vector<PartitionKey> Partitions() const {
    std::vector<PartitionKey> keys;
    const std::size_t depth = std::min(kPartitionDepth, order_.size());
    for (int s : SumValues()) {
      State state = FreshState();
      std::vector<int> prefix;
      CollectPrefixes(state, 0, depth, s, prefix, keys);
    }
    return keys;
  }

  std::optional<Solutions> Solve(const PartitionKey& key, Budget& budget) const {
    State state = FreshState();
    const int s = key[0];
    for (std::size_t i = 1; i < key.size(); ++i) {
      const int var = order_[i - 1];
      int lo = 0;
      int hi = 0;
      if (!Domain(state, var, s, lo, hi) || key[i] < lo || key[i] > hi) {
        return Solutions{};
      }
      Assign(state, var, key[i]);
      if (!ParityHolds(state, var)) return Solutions{};
    }
    Solutions solutions;
    RealizationGate gate(system_.skeleton, system_.target_d, &paths_);
    std::uint64_t pending = 0;
    if (!Descend(state, key.size() - 1, s, gate, budget, pending, solutions)) {
      return std::nullopt;
    }
    budget.Charge(pending);
    return solutions;
  }

 private:
  struct State {
    std::vector<int> values;
    std::vector<std::int64_t> eq_fixed;
    std::vector<std::int64_t> eq_free_lo;
    std::vector<std::int64_t> eq_free_hi;
    std::vector<std::int64_t> par_fixed;
    std::vector<int> par_free;
  };

  std::vector<int> SumValues() const {
    if (system_.equal_sum.empty()) return {kNoSum};
    std::vector<int> sums;
    for (int s = system_.sum_lo; s <= system_.sum_hi; ++s) sums.push_back(s);
    return sums;
  }

  State FreshState() const {
    State st;
    st.values.assign(system_.num_vars(), 0);
    st.eq_fixed.assign(system_.equal_sum.size(), 0);
    st.eq_free_lo.assign(system_.equal_sum.size(), 0);
    st.eq_free_hi.assign(system_.equal_sum.size(), 0);
    for (std::size_t c = 0; c < system_.equal_sum.size(); ++c) {
      for (EdgeId e : system_.equal_sum[c].edges) {
        st.eq_free_lo[c] += system_.bounds[e].lo;
        st.eq_free_hi[c] += system_.bounds[e].hi;
      }
    }
    st.par_fixed.assign(system_.parity.size(), 0);
    st.par_free.resize(system_.parity.size());
    for (std::size_t c = 0; c < system_.parity.size(); ++c) {
      st.par_free[c] = static_cast<int>(system_.parity[c].edges.size());
    }
    return st;
  }

  // Greedy order: next variable is the one sitting in the equal-sum
  // constraint closest to completion, ties broken by total membership and
  // then by index.
  void BuildOrder() {
    const std::size_t n = system_.num_vars();
    std::vector<int> placed_in(system_.equal_sum.size(), 0);
    std::vector<char> taken(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      int best = -1;
      std::tuple<int, int, int> best_score{-1, -1, 0};
      for (std::size_t v = 0; v < n; ++v) {
        if (taken[v]) continue;
        int closest = 0;
        for (int c : var_eq_[v]) closest = std::max(closest, placed_in[c]);
        const auto membership =
            static_cast<int>(var_eq_[v].size() + var_par_[v].size());
        const std::tuple<int, int, int> score{closest, membership,
                                              -static_cast<int>(v)};
        if (score > best_score) {
          best_score = score;
          best = static_cast<int>(v);
        }
      }
      taken[best] = 1;
      order_.push_back(best);
      for (int c : var_eq_[best]) ++placed_in[c];
    }
  }

  bool Domain(const State& st, int var, int s, int& lo, int& hi) const {
    std::int64_t low = system_.bounds[var].lo;
    std::int64_t high = system_.bounds[var].hi;
    if (s != kNoSum) {
      for (int c : var_eq_[var]) {
        const std::int64_t others_lo = st.eq_free_lo[c] - system_.bounds[var].lo;
        const std::int64_t others_hi = st.eq_free_hi[c] - system_.bounds[var].hi;
        low = std::max(low, s - st.eq_fixed[c] - others_hi);
        high = std::min(high, s - st.eq_fixed[c] - others_lo);
      }
    }
    lo = static_cast<int>(low);
    hi = static_cast<int>(high);
    return low <= high;
  }

  void Assign(State& st, int var, int value) const {
    st.values[var] = value;
    for (int c : var_eq_[var]) {
      st.eq_fixed[c] += value;
      st.eq_free_lo[c] -= system_.bounds[var].lo;
      st.eq_free_hi[c] -= system_.bounds[var].hi;
    }
    for (int c : var_par_[var]) {
      st.par_fixed[c] += value;
      --st.par_free[c];
    }
  }

  void Unassign(State& st, int var) const {
    const int value = st.values[var];
    for (int c : var_eq_[var]) {
      st.eq_fixed[c] -= value;
      st.eq_free_lo[c] += system_.bounds[var].lo;
      st.eq_free_hi[c] += system_.bounds[var].hi;
    }
    for (int c : var_par_[var]) {
      st.par_fixed[c] -= value;
      ++st.par_free[c];
    }
    st.values[var] = 0;
  }

  // Parity constraints completed by the last assignment to var.
  bool ParityHolds(const State& st, int var) const {
    for (int c : var_par_[var]) {
      if (st.par_free[c] == 0 && st.par_fixed[c] % 2 == 0) return false;
    }
    return true;
  }

  void CollectPrefixes(State& st, std::size_t depth, std::size_t target,
                       int s, std::vector<int>& prefix,
                       std::vector<PartitionKey>& keys) const {
    if (depth == target) {
      PartitionKey key = {s};
      key.insert(key.end(), prefix.begin(), prefix.end());
      keys.push_back(std::move(key));
      return;
    }
    const int var = order_[depth];
    int lo = 0;
    int hi = 0;
    if (!Domain(st, var, s, lo, hi)) return;
    for (int value = lo; value <= hi; ++value) {
      Assign(st, var, value);
      if (ParityHolds(st, var)) {
        prefix.push_back(value);
        CollectPrefixes(st, depth + 1, target, s, prefix, keys);
        prefix.pop_back();
      }
      Unassign(st, var);
    }
  }

  bool Descend(State& st, std::size_t depth, int s, RealizationGate& gate,
               Budget& budget, std::uint64_t& pending,
               Solutions& solutions) const {
    if (depth == order_.size()) {
      if (gate.Accept(st.values)) solutions.push_back({st.values});
      return true;
    }
    const int var = order_[depth];
    int lo = 0;
    int hi = 0;
    if (!Domain(st, var, s, lo, hi)) return true;
    for (int value = lo; value <= hi; ++value) {
      if (++pending == kChargeInterval) {
        if (!budget.Charge(pending)) return false;
        pending = 0;
      }
      Assign(st, var, value);
      bool keep_going = true;
      if (ParityHolds(st, var)) {
        keep_going = Descend(st, depth + 1, s, gate, budget, pending, solutions);
      }
      Unassign(st, var);
      if (!keep_going) return false;
    }
    return true;
  }

  const GeodeticSystem& system_;
  std::vector<SegmentPath> paths_;
  std::vector<std::vector<int>> var_eq_;
  std::vector<std::vector<int>> var_par_;
  std::vector<int> order_;
};

std::optional<std::uint64_t> CheckedPower(std::uint64_t base, std::size_t exp) {
  std::uint64_t value = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(value, base, &value)) return std::nullopt;
  }
  return value;
}

}  // namespace

int SegmentLengthBound(int d0, int target_d) { return target_d - d0 + 1; }

GeodeticSystem BuildSystem(const Skeleton& skeleton, int target_d) {
  if (target_d < skeleton.d0) {
    throw Error(ErrorCode::kInvalidArgument,
                "target diameter " + std::to_string(target_d) +
                    " is below the base diameter " +
                    std::to_string(skeleton.d0));
  }
  GeodeticSystem system;
  system.skeleton = skeleton;
  system.target_d = target_d;
  const int hi = SegmentLengthBound(skeleton.d0, target_d);
  system.bounds.assign(skeleton.base.num_edges(), VariableBounds{1, hi});

  const int odd_len = 2 * skeleton.d0 + 1;
  const int even_len = 2 * skeleton.d0 + 2;
  for (auto& cycle : SegmentCycles(skeleton.base, odd_len)) {
    system.parity.push_back({ConstraintType::kParity, std::move(cycle.edges)});
  }
  for (auto& cycle : SegmentCycles(skeleton.base, even_len)) {
    system.equal_sum.push_back(
        {ConstraintType::kEqualSum, std::move(cycle.edges)});
  }
  system.sum_lo = even_len;
  system.sum_hi = even_len * hi;
  return system;
}

SolveResult SolveConditions(const GeodeticSystem& system,
                            const SearchOptions& options) {
  const ConditionSearch search(system);
  Budget budget(options);
  int bound = 0;
  for (const auto& b : system.bounds) bound = std::max(bound, b.hi);
  const CheckpointHeader header{SkeletonLabel(system.skeleton),
                                system.target_d, bound, "conditions"};
  return RunPartitions(
      search.Partitions(), options, header, budget,
      [&](const PartitionKey& key, Budget& b) { return search.Solve(key, b); });
}

SolveResult SolveExhaustive(const Skeleton& skeleton, int target_d, int bound,
                            const SearchOptions& options) {
  if (bound < 1) {
    throw Error(ErrorCode::kInvalidArgument, "exhaustive bound must be >= 1");
  }
  const std::size_t m = skeleton.base.num_edges();
  const auto space = CheckedPower(static_cast<std::uint64_t>(bound), m);
  if (!space || *space > options.max_candidates) {
    throw BudgetExceededError(
        "exhaustive space " + std::to_string(bound) + "^" + std::to_string(m) +
            " exceeds the candidate budget of " +
            std::to_string(options.max_candidates),
        0, 0, "");
  }

  // Prefix length: as many leading edges as keep the partition count <= 4096.
  std::size_t depth = 0;
  while (depth < m && *CheckedPower(bound, depth + 1) <= 4096 && bound > 1) {
    ++depth;
  }
  std::vector<PartitionKey> keys;
  PartitionKey key(depth, 1);
  for (;;) {
    keys.push_back(key);
    std::size_t i = depth;
    while (i > 0 && key[i - 1] == bound) key[--i] = 1;
    if (i == 0) break;
    ++key[i - 1];
  }

  Budget budget(options);
  const CheckpointHeader header{SkeletonLabel(skeleton), target_d, bound,
                                "exhaustive"};
  auto solve = [&](const PartitionKey& prefix,
                   Budget& b) -> std::optional<Solutions> {
    RealizationGate gate(skeleton, target_d, nullptr);
    std::vector<int> lengths(m, 1);
    std::copy(prefix.begin(), prefix.end(), lengths.begin());
    Solutions solutions;
    std::uint64_t pending = 0;
    for (;;) {
      if (++pending == kChargeInterval) {
        if (!b.Charge(pending)) return std::nullopt;
        pending = 0;
      }
      if (gate.Accept(lengths)) solutions.push_back({lengths});
      std::size_t i = m;
      while (i > depth && lengths[i - 1] == bound) lengths[--i] = 1;
      if (i == depth) break;
      ++lengths[i - 1];
    }
    b.Charge(pending);
    return solutions;
  };
  return RunPartitions(keys, options, header, budget, solve);
}

std::string_view EngineModeName(EngineMode mode) {
  return mode == EngineMode::kConditions ? "conditions" : "exhaustive";
}

EngineMode ParseEngineMode(std::string_view name) {
  if (name == "conditions") return EngineMode::kConditions;
  if (name == "exhaustive") return EngineMode::kExhaustive;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown mode '" + std::string(name) +
                  "' (expected conditions or exhaustive)");
}

EnumerationReport EnumerateClasses(const Skeleton& skeleton, int target_d,
                                   EngineMode mode,
                                   const EnumerateOptions& options) {
  const auto start = Clock::now();
  if (target_d < skeleton.d0) {
    throw Error(ErrorCode::kInvalidArgument,
                "target diameter " + std::to_string(target_d) +
                    " is below the base diameter " +
                    std::to_string(skeleton.d0));
  }
  EnumerationReport report;
  report.base = SkeletonLabel(skeleton);
  report.target_d = target_d;
  report.mode = mode;

  const int natural_bound = SegmentLengthBound(skeleton.d0, target_d);
  SolveResult result;
  if (mode == EngineMode::kConditions) {
    report.bound = natural_bound;
    result = SolveConditions(BuildSystem(skeleton, target_d), options.search);
  } else {
    report.bound = options.sound ? 2 * target_d + 1
                                 : options.bound.value_or(natural_bound);
    result = SolveExhaustive(skeleton, target_d, report.bound, options.search);
  }
  if (report.bound < 2 * target_d + 1) {
    report.caveat =
        "segment lengths searched up to " + std::to_string(report.bound) +
        "; completeness beyond this bound assumes every " +
        std::to_string(skeleton.d0) +
        "-segment path of a geodetic homeomorph is a geodesic";
  }

  const AutomorphismGroup group = Automorphisms(skeleton.base);
  std::map<LengthVector, std::uint64_t> classes;
  for (const LengthVector& lv : result.solutions) {
    ++classes[CanonicalLengths(lv, group)];
    const Graph realized = Realize(skeleton.base, lv);
    if (!IsGeodetic(realized).geodetic || Diameter(realized) != target_d) {
      report.all_realizations_geodetic = false;
    }
  }
  report.raw_solution_count = result.solutions.size();
  report.class_count = classes.size();

  if (MooreParamsOf(skeleton.base) == MooreParams{3, 2} && target_d >= 2) {
    report.formula_value = ConjecturedCount(target_d);
    report.formula_match = report.raw_solution_count == *report.formula_value;
  }

  const bool full_dump = report.formula_match == false;
  for (const auto& [canonical, seen] : classes) {
    if (!full_dump && report.witnesses.size() >= options.max_witnesses) {
      report.witnesses_truncated = true;
      break;
    }
    report.witnesses.push_back(
        {canonical, group.order() / StabilizerOrder(canonical, group)});
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return report;
}

EnumerationReport ExhaustiveOracle(const Skeleton& skeleton, int target_d,
                                   int bound, const EnumerateOptions& options) {
  EnumerateOptions explicit_bound = options;
  explicit_bound.bound = bound;
  explicit_bound.sound = false;
  return EnumerateClasses(skeleton, target_d, EngineMode::kExhaustive,
                          explicit_bound);
}

std::uint64_t ConjecturedCount(int d) {
  if (d < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "conjectured count is defined for d >= 2");
  }
  const std::uint64_t n = static_cast<std::uint64_t>(d) + 3;
  std::uint64_t value = 1;
  // value = C(n-5+i, i) after step i; dividing out gcd first keeps the
  // product exact without a wider type.
  for (std::uint64_t i = 1; i <= 5; ++i) {
    const std::uint64_t g = std::gcd(value, i);
    const std::uint64_t factor = (n - 5 + i) / (i / g);
    if (__builtin_mul_overflow(value / g, factor, &value)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "C(d+3, 5) overflows 64 bits for d = " + std::to_string(d));
    }
  }
  return value;
}

}  // namespace geodetic
