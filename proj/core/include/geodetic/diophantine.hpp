#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "geodetic/homeomorph.hpp"

namespace geodetic {

enum class ConstraintType { kParity, kEqualSum };

struct Constraint {
  ConstraintType type = ConstraintType::kParity;
  std::vector<EdgeId> edges;
};

struct VariableBounds {
  int lo = 1;
  int hi = 1;
};

// Constraint system whose natural solutions are the segment-length vectors
// of candidate geodetic homeomorphs of a Moore base with diameter target_d:
// one variable per base edge, an odd-sum constraint per (2d0+1)-segment
// cycle, and a shared sum s over every (2d0+2)-segment cycle.
struct GeodeticSystem {
  Skeleton skeleton;
  int target_d = 0;
  std::vector<VariableBounds> bounds;
  std::vector<Constraint> parity;
  std::vector<Constraint> equal_sum;
  // Range swept by the common sum s.
  int sum_lo = 0;
  int sum_hi = 0;

  std::size_t num_vars() const { return bounds.size(); }
  int d0() const { return skeleton.d0; }
};

// Upper bound on a single segment length for the given target diameter:
// a segment is part of a d0-segment geodesic of length <= target_d whose
// other segments have length >= 1.
int SegmentLengthBound(int d0, int target_d);

// Throws Error{kInvalidArgument} when target_d < d0.
GeodeticSystem BuildSystem(const Skeleton& skeleton, int target_d);

struct SearchOptions {
  int workers = 1;
  std::optional<std::chrono::milliseconds> time_budget;
  // Search-tree nodes (conditions engine) or candidates (exhaustive engine).
  std::optional<std::uint64_t> node_budget;
  // Exhaustive engine refuses spaces larger than this up front.
  std::uint64_t max_candidates = 4'000'000'000ull;
  // When set, completed partitions are appended here and skipped on resume.
  std::string checkpoint_path;
};

struct SolveResult {
  // Sorted lexicographically.
  std::vector<LengthVector> solutions;
  std::uint64_t nodes = 0;
  std::size_t partitions = 0;
  std::size_t resumed_partitions = 0;
};

// All vectors within bounds satisfying every parity and equal-sum
// constraint whose realization also makes every d0-segment path a geodesic,
// is geodetic, and has diameter exactly target_d. Throws
// BudgetExceededError.
SolveResult SolveConditions(const GeodeticSystem& system,
                            const SearchOptions& options = {});

// Every vector in [1, bound]^|E| whose realization is geodetic with
// diameter exactly target_d; no condition filtering. Throws
// BudgetExceededError.
SolveResult SolveExhaustive(const Skeleton& skeleton, int target_d, int bound,
                            const SearchOptions& options = {});

enum class EngineMode { kConditions, kExhaustive };
std::string_view EngineModeName(EngineMode mode);
EngineMode ParseEngineMode(std::string_view name);

struct ClassWitness {
  LengthVector canonical;
  std::uint64_t orbit_size = 0;
};

struct EnumerationReport {
  std::string base;
  int target_d = 0;
  EngineMode mode = EngineMode::kConditions;
  int bound = 0;
  std::uint64_t raw_solution_count = 0;
  std::uint64_t class_count = 0;
  // C(target_d + 3, 5) for the Petersen base, compared against the number
  // of solutions of the system (raw_solution_count).
  std::optional<std::uint64_t> formula_value;
  std::optional<bool> formula_match;
  std::vector<ClassWitness> witnesses;
  bool witnesses_truncated = false;
  std::chrono::milliseconds elapsed{0};
  bool all_realizations_geodetic = true;
  std::optional<std::string> caveat;
};

struct EnumerateOptions {
  SearchOptions search;
  // Exhaustive engine only; defaults to SegmentLengthBound(d0, target_d).
  std::optional<int> bound;
  // Exhaustive engine only: raise the bound to 2 * target_d + 1.
  bool sound = false;
  // Witness list cap; ignored (full dump) when the formula disagrees.
  std::size_t max_witnesses = 1000;
};

EnumerationReport EnumerateClasses(const Skeleton& skeleton, int target_d,
                                   EngineMode mode,
                                   const EnumerateOptions& options = {});

// Exhaustive-mode EnumerateClasses with an explicit bound.
EnumerationReport ExhaustiveOracle(const Skeleton& skeleton, int target_d,
                                   int bound,
                                   const EnumerateOptions& options = {});

// C(d + 3, 5) in checked 64-bit arithmetic. Throws Error{kInvalidArgument}
// for d < 2 and on overflow.
std::uint64_t ConjecturedCount(int d);

// Variables, bounds, constraints and per-variable membership counts.
nlohmann::json DumpSystem(const GeodeticSystem& system);

nlohmann::json ToJson(const EnumerationReport& report,
                      bool include_timing = false);

}  // namespace geodetic
