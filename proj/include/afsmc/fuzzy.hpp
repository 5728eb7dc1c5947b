#pragma once

#include <array>
#include <stdexcept>

#include "afsmc/types.hpp"

namespace afsmc::fuzzy {

enum class InputLabel { NL = 0, NS = 1, ZE = 2, PS = 3, PL = 4 };
enum class OutputLabel { S = 0, MS = 1, M = 2, ML = 3, L = 4 };

inline constexpr int kNumLabels = 5;
inline constexpr int kNumRules = kNumLabels * kNumLabels;

using Memberships = std::array<double, kNumLabels>;

// Five-label partition over [-E, E]: triangles centered at
// (-E, -E/2, 0, E/2, E) with spacing E/2; NL and PL saturate at 1 beyond
// the outer centers. Degrees sum to 1 everywhere.
struct InputPartition {
  double half_width = 1.0;

  void validate() const;
};

// 25-cell map from (edot label = row, e label = column) to output label.
struct RuleTable {
  std::array<std::array<OutputLabel, kNumLabels>, kNumLabels> cells;

  // The gain-scheduling table used throughout: rows run NL..PL in edot,
  // columns NL..PL in e.
  static const RuleTable& standard();
};

// Crisp per-rule output values in 1/s. Must satisfy 0 < s <= ms <= m <= ml <= l.
struct OutputSingletons {
  double s = 1.0;
  double ms = 3.0;
  double m = 5.0;
  double ml = 7.0;
  double l = 10.0;

  double value(OutputLabel label) const;
  void validate() const;
};

struct FuzzyConfig {
  InputPartition e_partition{1.1};
  InputPartition edot_partition{2.2};
  RuleTable table = RuleTable::standard();
  OutputSingletons singletons;

  void validate() const;
};

struct DegenerateFiring : std::runtime_error {
  explicit DegenerateFiring(double denominator);
};

Memberships membership_degrees(const InputPartition& partition, double x);

OutputLabel rule_lookup(const RuleTable& table, InputLabel edot_label,
                        InputLabel e_label);

// Weighted-average defuzzification over all 25 rules with product firing
// strengths. Result lies in [singletons.s, singletons.l]. Throws
// DegenerateFiring if the total firing strength collapses (unreachable for
// a valid partition).
double infer_lambda(const FuzzyConfig& config, double e, double edot);

// Per-joint inference stacked into a diagonal matrix.
Mat3 lambda_matrix(const std::array<FuzzyConfig, 3>& configs, const Vec3& e,
                   const Vec3& edot);

}  // namespace afsmc::fuzzy
