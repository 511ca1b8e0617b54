#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "combstat/objects.hpp"
#include "combstat/series.hpp"

namespace combstat {

// Generating functions of the catalog; each marks a distinguished leaf, node, vertex or step.
enum class GfFamily { B, Babs, D, U, P, A, G, I, J };

// ClosedForm is the stated rational-radical expression, AltClosedForm its second
// expression where one exists (D, U), FixedPoint iterates the defining equation.
enum class GfPath { ClosedForm, AltClosedForm, FixedPoint };

struct GfInfo {
  GfFamily id;
  std::string_view name;
  std::string_view variables;
  Field field;
  bool egf;
  Family objects;
  StatisticId statistic;
  std::string_view formula;
};

const std::vector<GfInfo>& all_gf_families();
const GfInfo& gf_info(GfFamily f);
GfFamily parse_gf_family(std::string_view name);
std::string_view path_name(GfPath p);
GfPath parse_path(std::string_view name);
std::vector<GfPath> available_paths(GfFamily f);

// Bounds that hold every coefficient of size <= n exactly.
Truncation default_truncation(GfFamily f, int n);
// Refuses truncations whose dense lattice exceeds the cell budget.
void check_truncation_budget(const Truncation& t, std::size_t max_cells = 50'000'000);

// Exact truncated expansion. EGF families keep their 1/n! scaling here.
Series expand(GfFamily f, const Truncation& t, GfPath path = GfPath::ClosedForm);
// Same series with [z^n] multiplied by n! for EGF families.
Series expand_counts(GfFamily f, const Truncation& t, GfPath path = GfPath::ClosedForm);

// Left side minus right side of the defining equation, evaluated at the closed form.
// For I and J this is the differential equation together with its initial condition.
Series residual(GfFamily f, const Truncation& t);

DistributionTable distribution_from_gf(GfFamily f, int n, GfPath path = GfPath::ClosedForm);

// d/dy at y = 1 of the expansion (counts scaling for EGF families is not applied).
Series derivative_at_y1(GfFamily f, const Truncation& t);
// Derivative minus its product-form expression; nullopt when no product form is registered.
std::optional<Series> derivative_identity_residual(GfFamily f, const Truncation& t);

struct AbscissaCheck {
  int max_n = 0;
  bool passed = true;
  bool closed_form_agrees = true;  // stated d/du expression versus the expansion
  std::optional<std::string> counterexample;
};
// [x^r z^n] d/du Babs at u = y = 1, divided by c_n, against (6r-3n)/(n+2).
AbscissaCheck abscissa_check(int max_n);

// JSON dump {vars, truncation, field, entries}.
std::string series_json(const Series& s, std::string_view vars, int indent = 2);
std::string series_json(const SeriesQ2& s, std::string_view vars, int indent = 2);

}  // namespace combstat
