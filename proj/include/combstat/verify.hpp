#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "combstat/closed.hpp"
#include "combstat/objects.hpp"

namespace combstat {

enum class CheckStatus { Pass, Warn, Fail };
std::string_view status_name(CheckStatus s);

struct CheckResult {
  std::string check_id;
  std::string family;
  std::string n_or_r;
  CheckStatus status = CheckStatus::Pass;
  std::optional<std::string> counterexample;
  std::optional<std::string> note;
};

struct VerifyOptions {
  std::string suite = "all";
  int max_n = -1;  // -1 selects the per-suite default
  int workers = 1;
  int residual_order = 20;  // nz = nx for functional-equation residuals
  Budgets budgets{};
};

struct VerifyReport {
  std::vector<CheckResult> checks;  // sorted by (check_id, family, n_or_r)
  int count(CheckStatus s) const;
  // 0 when nothing failed (warnings allowed), 1 otherwise.
  int exit_code() const;
  std::string json(int indent = 2) const;
};

const std::vector<std::string_view>& verify_suites();
VerifyReport run_verify(const VerifyOptions& opts);

// Statistic whose exact average a closed formula gives.
struct FormulaSource {
  AvgFormulaId formula;
  Family family;
  StatisticId statistic;
};
const std::vector<FormulaSource>& formula_sources();

// Checks whose mismatch against the printed formula reports WARN rather than FAIL.
const std::vector<std::string_view>& discrepancy_watch();

}  // namespace combstat
