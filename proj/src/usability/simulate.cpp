#include <cmath>
#include <random>

#include "vrmenu/error.hpp"
#include "vrmenu/usability/usability.hpp"

namespace vrmenu::usability {

SimulationResult simulate_selections(const core::MenuNode& menu, const layout::LayoutResult& layout,
                                     const ViewerConfig& viewer, const FittsParams& params, std::size_t trials,
                                     std::uint64_t seed) {
  if (trials == 0) {
    throw Error(ErrorCode::kInvalidArgument, "trials must be positive");
  }
  if (menu.buttons.empty()) {
    throw Error(ErrorCode::kEmptyMenu, "menu " + menu.id + " has no buttons to select");
  }
  const UsabilityReport report = menu_usability_report(menu, layout, viewer, params);
  const std::size_t n = report.per_button.size();

  SimulationResult result;
  result.menu_id = menu.id;
  result.trials = trials;
  result.seed = seed;
  result.analytic_mean_mt = report.mean_mt;
  result.button_ids = menu.buttons;
  result.per_button_hits.assign(n, 0);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    ++result.per_button_hits[pick(rng)];
  }
  // Hit frequencies times MT; equal to summing per draw but without the
  // rounding drift of a long running sum.
  for (std::size_t k = 0; k < n; ++k) {
    const double share = static_cast<double>(result.per_button_hits[k]) / static_cast<double>(trials);
    result.empirical_mean_mt += share * report.per_button[k].movement_time;
  }

  double variance = 0.0;
  for (const auto& b : report.per_button) {
    const double d = b.movement_time - report.mean_mt;
    variance += d * d;
  }
  variance /= static_cast<double>(n);
  result.standard_error = std::sqrt(variance / static_cast<double>(trials));
  return result;
}

}  // namespace vrmenu::usability
