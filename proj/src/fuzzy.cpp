#include "afsmc/fuzzy.hpp"

#include <cmath>

namespace afsmc::fuzzy {

void InputPartition::validate() const {
  if (!(std::isfinite(half_width) && half_width > 0.0)) {
    throw std::invalid_argument("partition half width must be positive");
  }
}

const RuleTable& RuleTable::standard() {
  using enum OutputLabel;
  // Rows: edot = NL, NS, ZE, PS, PL. Columns: e = NL, NS, ZE, PS, PL.
  static const RuleTable table{{{
      {{L, L, ML, M, MS}},
      {{L, ML, M, MS, S}},
      {{ML, M, M, M, ML}},
      {{MS, MS, M, ML, L}},
      {{S, MS, ML, L, L}},
  }}};
  return table;
}

double OutputSingletons::value(OutputLabel label) const {
  switch (label) {
    case OutputLabel::S: return s;
    case OutputLabel::MS: return ms;
    case OutputLabel::M: return m;
    case OutputLabel::ML: return ml;
    case OutputLabel::L: return l;
  }
  throw std::logic_error("invalid output label");
}

void OutputSingletons::validate() const {
  if (!(s > 0.0 && s <= ms && ms <= m && m <= ml && ml <= l) ||
      !std::isfinite(l)) {
    throw std::invalid_argument(
        "output singletons must satisfy 0 < S <= MS <= M <= ML <= L");
  }
}

void FuzzyConfig::validate() const {
  e_partition.validate();
  edot_partition.validate();
  singletons.validate();
}

DegenerateFiring::DegenerateFiring(double denominator)
    : std::runtime_error("degenerate rule firing, total strength " +
                         std::to_string(denominator)) {}

Memberships membership_degrees(const InputPartition& partition, double x) {
  const double e = partition.half_width;
  const double h = e / 2.0;  // center spacing

  Memberships mu{};
  if (x <= -e) {
    mu[0] = 1.0;
    return mu;
  }
  if (x >= e) {
    mu[4] = 1.0;
    return mu;
  }
  for (int i = 0; i < kNumLabels; ++i) {
    const double center = -e + h * i;
    const double rise = 1.0 - std::abs(x - center) / h;
    mu[i] = rise > 0.0 ? rise : 0.0;
  }
  return mu;
}

OutputLabel rule_lookup(const RuleTable& table, InputLabel edot_label,
                        InputLabel e_label) {
  return table.cells[static_cast<int>(edot_label)][static_cast<int>(e_label)];
}

double infer_lambda(const FuzzyConfig& config, double e, double edot) {
  const Memberships mu_e = membership_degrees(config.e_partition, e);
  const Memberships mu_edot = membership_degrees(config.edot_partition, edot);

  double weighted = 0.0;
  double total = 0.0;
  for (int row = 0; row < kNumLabels; ++row) {
    if (mu_edot[row] == 0.0) continue;
    for (int col = 0; col < kNumLabels; ++col) {
      const double firing = mu_edot[row] * mu_e[col];
      if (firing == 0.0) continue;
      const OutputLabel out = config.table.cells[row][col];
      weighted += firing * config.singletons.value(out);
      total += firing;
    }
  }
  if (total < 1e-15) {
    throw DegenerateFiring(total);
  }
  return weighted / total;
}

Mat3 lambda_matrix(const std::array<FuzzyConfig, 3>& configs, const Vec3& e,
                   const Vec3& edot) {
  Mat3 out = Mat3::Zero();
  for (int i = 0; i < 3; ++i) {
    out(i, i) = infer_lambda(configs[i], e[i], edot[i]);
  }
  return out;
}

}  // namespace afsmc::fuzzy
