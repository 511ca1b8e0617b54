#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "combstat/closed.hpp"
#include "combstat/exact.hpp"
#include "combstat/series.hpp"

namespace combstat {

// Fixed-r limit laws as n grows, each given by a bivariate generating function in x (position) and y (depth).
enum class LimitLaw { BinaryLeaf, DyckVertex, DyckUpstep, DyckDownstep, SchroederLeaf, NoncrossingNode };

struct LimitInfo {
  LimitLaw id;
  std::string_view name;
  int first_index;
  Field field;
  AvgFormulaId average;
  std::string_view formula;
};

const std::vector<LimitInfo>& all_limit_laws();
const LimitInfo& limit_info(LimitLaw law);
LimitLaw parse_limit_law(std::string_view name);

// Which constant multiplies y in the Schroeder denominator: the stated 4, or 14 (diagnostic only).
enum class SchroederVariant { Stated, Diagnostic };

using LimitColumn = std::vector<std::pair<int, ExactScalar>>;

// p_{r,d} for d = 0..dmax, zero entries included.
LimitColumn limit_distribution(LimitLaw law, int r, int dmax,
                               SchroederVariant variant = SchroederVariant::Stated);
// Columns r = first_index..rmax in one expansion.
std::vector<LimitColumn> limit_columns(LimitLaw law, int rmax, int dmax,
                                       SchroederVariant variant = SchroederVariant::Stated);

// Sum over d of p_{r,d} and sum of d p_{r,d}, exact (through y = 1 + e with e^2 = 0,
// or the finite columns where the law has bounded support).
std::vector<ExactScalar> limit_masses(LimitLaw law, int rmax, SchroederVariant variant = SchroederVariant::Stated);
std::vector<ExactScalar> limit_means(LimitLaw law, int rmax, SchroederVariant variant = SchroederVariant::Stated);

// Coefficients r = first_index..rmax of the stated y-derivative at y = 1, where one is stated.
std::optional<std::vector<ExactScalar>> stated_derivative(LimitLaw law, int rmax);
std::string_view stated_derivative_formula(LimitLaw law);

// Single-column closed forms stated next to the bivariate laws.
struct Specialization {
  LimitLaw law;
  int r;
  std::string_view formula;
};
const std::vector<Specialization>& stated_specializations();
LimitColumn specialization_column(const Specialization& s, int dmax);

// Exact finite-n probabilities [x^r y^d z^n] / (objects of size n), r = first_index..rmax, d = 0..dmax.
std::vector<std::vector<Rational>> finite_distribution(LimitLaw law, int n, int rmax, int dmax);
double max_abs_deviation(LimitLaw law, int n, int rmax, int dmax);

struct SchroederColumnReport {
  int r = 0;
  LimitColumn stated;
  LimitColumn diagnostic;
  std::vector<Rational> empirical;  // n = empirical_n, d = 0..dmax
  ExactScalar stated_mass, stated_mean, diagnostic_mass, diagnostic_mean;
  ExactScalar table_mean;          // fixed-r average
  ExactScalar derivative_mean;     // coefficient of the stated derivative
  Rational empirical_mean;         // exact, over all depths
  double mean_gap = 0;             // |empirical_mean - table_mean| / table_mean
  double mean_gap_half = 0;        // same at half the size
  double stated_vs_empirical = 0;  // max |p - p(n)| over d <= dmax
  double diagnostic_vs_empirical = 0;
};

struct SchroederReport {
  int rmax = 3;
  int dmax = 12;
  int empirical_n = 60;
  double tolerance = 0.05;       // distributions, max abs deviation
  double mean_tolerance = 0.1;   // means, relative gap
  std::vector<SchroederColumnReport> columns;
  LimitColumn printed_r0;
  // (a) stated law versus the printed r = 0 law
  bool stated_matches_r0 = false;
  // (b) stated law versus the empirical distributions
  bool stated_matches_empirical = false;
  // (c) stated law means versus the fixed-r averages; the stated derivative versus those averages
  bool stated_means_match_table = false;
  bool derivative_matches_table = false;
  bool printed_r0_matches_empirical = false;
  bool diagnostic_matches_r0 = false;
  bool diagnostic_matches_empirical = false;
  bool diagnostic_means_match_table = false;
  // empirical means versus the fixed-r averages: gap within mean_tolerance and shrinking from n/2 to n
  bool empirical_agrees_with_table = false;
  std::vector<std::string> findings;

  std::string json(int indent = 2) const;
};

SchroederReport schroeder_discrepancy_report(int rmax = 3, int dmax = 12, int empirical_n = 60);

}  // namespace combstat
