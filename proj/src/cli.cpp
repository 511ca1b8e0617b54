#include "combstat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

#include "combstat/closed.hpp"
#include "combstat/gfcat.hpp"
#include "combstat/limits.hpp"
#include "combstat/maps.hpp"
#include "combstat/verify.hpp"

namespace combstat {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("invalid " + what + ": '" + text + "'");
}

void apply_budget(const std::string& spec, Budgets& b) {
  auto eq = spec.find('=');
  if (eq == std::string::npos) {
    int v = parse_int(spec, "budget");
    for (auto& [f, lim] : b.limits) lim = v;
    return;
  }
  b.limits[parse_family(spec.substr(0, eq))] = parse_int(spec.substr(eq + 1), "budget");
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
  out << '\n';
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string scalar_text(const ExactScalar& s) { return to_string(s); }

std::string rational_decimal(const Rational& q, int digits) { return q.decimal(digits); }

BigInt family_count(Family f, int n) {
  switch (f) {
    case Family::Binary:
    case Family::Plane:
    case Family::Dyck:
    case Family::Triangulation: return catalan(n);
    case Family::Schroeder:
    case Family::Dissection: return little_schroeder(n);
    case Family::Noncrossing: return noncrossing_t(n);
    case Family::Increasing: return factorial(n);
  }
  return 0;
}

std::optional<GfFamily> gf_for(Family f, StatisticId stat) {
  for (const auto& g : all_gf_families())
    if (g.objects == f && g.statistic == stat) return g.id;
  return std::nullopt;
}

std::optional<AvgFormulaId> formula_for(StatisticId stat) {
  for (const auto& fs : formula_sources())
    if (fs.statistic == stat) return fs.formula;
  return std::nullopt;
}

struct Args {
  // positionals
  std::string a, b;
  std::optional<int> n, r, k;
  int dmax = 10;
  int rmax = 3;
  std::string source;
  std::string method = "closed";
  std::string variant = "stated";
  std::string path = "closed";
  bool counts = false;
  bool inverse = false;
  bool report = false;
  long max_cells = 50'000'000;
};

// ---------------------------------------------------------------- count, enumerate

int cmd_count(const Args& a, const RunConfig& cfg, std::ostream& out) {
  const Family f = parse_family(a.a);
  const int n = *a.n;
  const std::string source = a.source.empty() ? "closed" : a.source;
  if (source != "closed" && source != "enum" && source != "both") throw UsageError("--source must be enum, closed or both");
  const BigInt closed = family_count(f, n);
  std::optional<BigInt> enumerated;
  if (source != "closed") enumerated = BigInt(static_cast<long>(generate_all(f, n, cfg.budgets).size()));
  const BigInt value = source == "enum" ? *enumerated : closed;
  const bool match = !enumerated || *enumerated == closed;
  if (cfg.format == "json") {
    ordered_json j;
    j["family"] = family_name(f);
    j["n"] = n;
    j["count"] = value.get_str();
    if (source == "both") {
      j["enumerated"] = enumerated->get_str();
      j["status"] = match ? "match" : "mismatch";
    }
    out << j.dump(2) << '\n';
  } else {
    csv_row(out, source == "both" ? std::vector<std::string>{"family", "n", "count", "enumerated", "status"}
                                  : std::vector<std::string>{"family", "n", "count"});
    std::vector<std::string> row = {std::string(family_name(f)), std::to_string(n), value.get_str()};
    if (source == "both") {
      row.push_back(enumerated->get_str());
      row.push_back(match ? "match" : "mismatch");
    }
    csv_row(out, row);
  }
  return match ? 0 : 1;
}

int cmd_enumerate(const Args& a, const RunConfig& cfg, std::ostream& out) {
  const Family f = parse_family(a.a);
  const int n = *a.n;
  auto objs = generate_all(f, n, cfg.budgets);
  std::vector<std::string> codes;
  for (const auto& o : objs) codes.push_back(encode(o));
  std::sort(codes.begin(), codes.end());
  if (cfg.format == "json") {
    ordered_json j;
    j["family"] = family_name(f);
    j["n"] = n;
    j["count"] = codes.size();
    j["objects"] = codes;
    out << j.dump(2) << '\n';
    return 0;
  }
  csv_row(out, {"family", "n", "index", "object"});
  for (std::size_t i = 0; i < codes.size(); ++i) csv_row(out, {std::string(family_name(f)), std::to_string(n), std::to_string(i), codes[i]});
  return 0;
}

// ---------------------------------------------------------------- distribution

DistributionTable table_from(const std::string& source, Family f, StatisticId stat, int n, const RunConfig& cfg) {
  if (source == "gf") {
    auto g = gf_for(f, stat);
    if (!g) throw UsageError("no generating function registered for " + std::string(family_name(f)) + " " +
                             std::string(statistic_info(stat).name));
    return distribution_from_gf(*g, n);
  }
  TableOptions o;
  o.workers = cfg.workers;
  o.budgets = cfg.budgets;
  return distribution_table(f, stat, n, o);
}

int cmd_distribution(const Args& a, const RunConfig& cfg, std::ostream& out) {
  const Family f = parse_family(a.a);
  const StatisticId stat = find_statistic(f, a.b);
  const int n = *a.n;
  const std::string source = a.source.empty() ? "enum" : a.source;
  if (source != "enum" && source != "gf" && source != "both") throw UsageError("--source must be enum, gf or both");

  const DistributionTable primary = table_from(source == "gf" ? "gf" : "enum", f, stat, n, cfg);
  std::optional<DistributionTable> other;
  if (source == "both") other = table_from("gf", f, stat, n, cfg);
  if (a.k && !primary.stratified) throw UsageError("--k applies to leaf statistics of plane trees only");

  std::set<std::tuple<int, int, int>> keys;
  for (const auto& [key, c] : primary.counts) keys.insert(key);
  if (other)
    for (const auto& [key, c] : other->counts) keys.insert(key);

  struct Row {
    int k, r, d;
    BigInt count, total;
    std::optional<bool> match;
  };
  std::vector<Row> rows;
  bool all_match = true;
  for (const auto& [k, r, d] : keys) {
    if (a.k && k != *a.k) continue;
    if (a.r && r != *a.r) continue;
    Row row{k, r, d, primary.count(r, d, k), primary.total(r, k), std::nullopt};
    if (other) {
      row.match = other->count(r, d, k) == row.count && other->total(r, k) == row.total;
      all_match = all_match && *row.match;
    }
    rows.push_back(std::move(row));
  }
  if (other && (other->totals != primary.totals)) all_match = false;

  const bool with_k = primary.stratified;
  auto probability = [&](const Row& row) { return Rational(row.count, row.total); };
  if (cfg.format == "json") {
    ordered_json j;
    j["family"] = family_name(f);
    j["statistic"] = statistic_info(stat).name;
    j["n"] = n;
    j["source"] = source;
    j["objects"] = primary.object_count.get_str();
    j["rows"] = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json e;
      if (with_k) e["k"] = row.k;
      e["r"] = row.r;
      e["d"] = row.d;
      e["count"] = row.count.get_str();
      e["total"] = row.total.get_str();
      if (cfg.decimal) e["probability_decimal"] = rational_decimal(probability(row), cfg.digits);
      if (row.match) e["status"] = *row.match ? "match" : "mismatch";
      j["rows"].push_back(std::move(e));
    }
    out << j.dump(2) << '\n';
  } else if (cfg.format == "plotdata") {
    std::optional<std::pair<int, int>> block;
    for (const auto& row : rows) {
      if (!block || *block != std::pair(row.k, row.r)) {
        if (block) out << "\n";
        out << "# " << (with_k ? "k=" + std::to_string(row.k) + " " : "") << "r=" << row.r << "\n";
        block = std::pair(row.k, row.r);
      }
      out << row.d << " " << fmt_double(probability(row).to_double()) << "\n";
    }
  } else {
    std::vector<std::string> header = {"family", "statistic", "n"};
    if (with_k) header.push_back("k");
    for (const char* h : {"r", "d", "count", "total"}) header.push_back(h);
    if (cfg.decimal) header.push_back("probability_decimal");
    if (other) header.push_back("status");
    csv_row(out, header);
    for (const auto& row : rows) {
      std::vector<std::string> cells = {std::string(family_name(f)), std::string(statistic_info(stat).name), std::to_string(n)};
      if (with_k) cells.push_back(std::to_string(row.k));
      cells.push_back(std::to_string(row.r));
      cells.push_back(std::to_string(row.d));
      cells.push_back(row.count.get_str());
      cells.push_back(row.total.get_str());
      if (cfg.decimal) cells.push_back(rational_decimal(probability(row), cfg.digits));
      if (row.match) cells.push_back(*row.match ? "match" : "mismatch");
      csv_row(out, cells);
    }
  }
  return all_match ? 0 : 1;
}

// ---------------------------------------------------------------- average

Rational table_mean(const DistributionTable& t, int r, int k) {
  BigInt total = t.total(r, k);
  if (total == 0) throw std::out_of_range("position " + std::to_string(r) + " does not occur at this size");
  Rational s;
  for (const auto& [d, c] : t.column(r, k)) s += Rational(c) * Rational(d);
  return s / Rational(total);
}

// Limit curve of average / sqrt(pi n) against alpha = r/n.
double normalized_curve(AvgFormulaId f, double alpha) {
  constexpr long big = 1'000'000'000'000L;
  const long r = std::lround(alpha * static_cast<double>(big));
  return growing_r_average(f, big, r) / std::sqrt(std::numbers::pi * static_cast<double>(big));
}

int cmd_average(const Args& a, const RunConfig& cfg, std::ostream& out) {
  const Family f = parse_family(a.a);
  const StatisticId stat = find_statistic(f, a.b);
  const std::string& method = a.method;
  if (method != "exact" && method != "closed" && method != "asymptotic-fixed-r" && method != "asymptotic")
    throw UsageError("--method must be exact, closed, asymptotic-fixed-r or asymptotic");
  const auto formula = formula_for(stat);
  if (method != "exact" && !formula)
    throw UsageError("no closed formula for " + std::string(family_name(f)) + " " + std::string(statistic_info(stat).name));

  if (method == "asymptotic" && cfg.format == "plotdata" && !a.n) {
    const double hi = *formula == AvgFormulaId::DyckVertex ? 2.0 : 1.0;
    out << "# alpha normalized_average\n";
    for (int i = 0; i < 100; ++i) {
      const double alpha = hi * i / 99.0;
      out << fmt_double(alpha) << " " << fmt_double(normalized_curve(*formula, alpha)) << "\n";
    }
    return 0;
  }
  if (method != "asymptotic-fixed-r" && !a.n) throw UsageError("--n is required for method " + method);

  struct Row {
    long r;
    std::string value;
    std::optional<std::string> decimal;
    double plot = 0;
  };
  std::vector<Row> rows;
  std::vector<long> positions;
  std::optional<DistributionTable> table;
  if (method == "exact") {
    auto g = gf_for(f, stat);
    if (g) table = distribution_from_gf(*g, *a.n);
    else table = table_from("enum", f, stat, *a.n, cfg);
    if (table->stratified && !a.k) throw UsageError("--k is required for leaf statistics of plane trees");
  }
  const int k = a.k.value_or(0);
  if (a.r) {
    positions.push_back(*a.r);
  } else if (method == "asymptotic-fixed-r") {
    for (long r = formula_first_index(*formula); r <= 7; ++r) positions.push_back(r);
  } else if (table) {
    for (int r : table->positions(k)) positions.push_back(r);
  } else {
    for (long r = formula_first_index(*formula); r <= formula_last_index(*formula, *a.n); ++r) positions.push_back(r);
  }
  for (long r : positions) {
    Row row{r, "", std::nullopt, 0};
    if (method == "asymptotic") {
      const double v = growing_r_average(*formula, *a.n, r);
      row.value = fmt_double(v);
      row.plot = v;
    } else if (method == "asymptotic-fixed-r") {
      const ExactScalar v = fixed_r_limit_average(*formula, r);
      row.value = scalar_text(v);
      row.decimal = to_decimal(v, cfg.digits);
      row.plot = as_quad(v).to_double();
    } else {
      const Rational v = method == "closed" ? exact_average(*formula, *a.n, r) : table_mean(*table, static_cast<int>(r), k);
      row.value = v.str();
      row.decimal = v.decimal(cfg.digits);
      row.plot = v.to_double();
    }
    rows.push_back(std::move(row));
  }

  if (cfg.format == "json") {
    ordered_json j;
    j["family"] = family_name(f);
    j["statistic"] = statistic_info(stat).name;
    j["method"] = method;
    if (a.n) j["n"] = *a.n;
    if (a.k) j["k"] = *a.k;
    if (method == "asymptotic") j["approximate"] = true;
    j["rows"] = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json e;
      e["r"] = row.r;
      e["value"] = row.value;
      if (cfg.decimal && row.decimal) e["decimal"] = *row.decimal;
      j["rows"].push_back(std::move(e));
    }
    out << j.dump(2) << '\n';
  } else if (cfg.format == "plotdata") {
    for (const auto& row : rows) out << row.r << " " << fmt_double(row.plot) << "\n";
  } else if (a.r && !cfg.decimal) {
    out << rows.front().value << '\n';
  } else {
    std::vector<std::string> header = {"r", method == "asymptotic" ? "approximate_value" : "value"};
    if (cfg.decimal && method != "asymptotic") header.push_back("decimal");
    csv_row(out, header);
    for (const auto& row : rows) {
      std::vector<std::string> cells = {std::to_string(row.r), row.value};
      if (cfg.decimal && method != "asymptotic") cells.push_back(row.decimal.value_or(""));
      csv_row(out, cells);
    }
  }
  return 0;
}

// ---------------------------------------------------------------- limit

int cmd_limit(const Args& a, const RunConfig& cfg, std::ostream& out) {
  const LimitLaw law = parse_limit_law(a.a);
  const LimitInfo& info = limit_info(law);
  if (a.variant != "stated" && a.variant != "diagnostic") throw UsageError("--variant must be stated or diagnostic");
  if (a.variant == "diagnostic" && law != LimitLaw::SchroederLeaf)
    throw UsageError("--variant diagnostic applies to schroeder-leaf only");
  const SchroederVariant variant = a.variant == "diagnostic" ? SchroederVariant::Diagnostic : SchroederVariant::Stated;
  if (a.report) {
    if (law != LimitLaw::SchroederLeaf) throw UsageError("--report applies to schroeder-leaf only");
    out << schroeder_discrepancy_report(a.rmax, a.dmax).json(2) << '\n';
    return 0;
  }
  const int lo = a.r.value_or(info.first_index), hi = a.r.value_or(a.rmax);
  if (lo < info.first_index) throw std::out_of_range("r below the first index " + std::to_string(info.first_index));
  auto columns = limit_columns(law, hi, a.dmax, variant);
  std::vector<std::pair<int, LimitColumn>> picked;
  for (int r = lo; r <= hi; ++r) picked.emplace_back(r, columns.at(static_cast<std::size_t>(r - info.first_index)));

  if (cfg.format == "json") {
    ordered_json j;
    j["law"] = info.name;
    j["field"] = field_name(info.field);
    if (law == LimitLaw::SchroederLeaf) j["variant"] = a.variant;
    j["columns"] = ordered_json::array();
    for (const auto& [r, col] : picked) {
      ordered_json c;
      c["r"] = r;
      c["p"] = ordered_json::array();
      for (const auto& [d, p] : col) {
        ordered_json e;
        e["d"] = d;
        e["p"] = scalar_text(p);
        if (cfg.decimal) e["decimal"] = to_decimal(p, cfg.digits);
        c["p"].push_back(std::move(e));
      }
      j["columns"].push_back(std::move(c));
    }
    out << j.dump(2) << '\n';
  } else if (cfg.format == "plotdata") {
    bool first = true;
    for (const auto& [r, col] : picked) {
      if (!first) out << "\n";
      first = false;
      out << "# r=" << r << "\n";
      for (const auto& [d, p] : col) out << d << " " << fmt_double(as_quad(p).to_double()) << "\n";
    }
  } else {
    std::vector<std::string> header = {"law", "r", "d", "p"};
    if (cfg.decimal) header.push_back("decimal");
    csv_row(out, header);
    for (const auto& [r, col] : picked)
      for (const auto& [d, p] : col) {
        std::vector<std::string> cells = {std::string(info.name), std::to_string(r), std::to_string(d), scalar_text(p)};
        if (cfg.decimal) cells.push_back(to_decimal(p, cfg.digits));
        csv_row(out, cells);
      }
  }
  return 0;
}

// ---------------------------------------------------------------- convert, expand

int cmd_convert(const Args& a, const RunConfig& cfg, std::ostream& out) {
  const BijectionId id = parse_bijection(a.a);
  const BijectionInfo& info = bijection_info(id);
  std::string result;
  if (!a.inverse) {
    result = encode_image(apply_bijection(id, decode(info.domain, a.b)));
  } else {
    MapImage img = info.codomain ? MapImage(decode(*info.codomain, a.b)) : MapImage(decode_permutation(a.b));
    result = encode(invert_bijection(id, img));
  }
  if (cfg.format == "json") {
    ordered_json j;
    j["bijection"] = info.name;
    j["direction"] = a.inverse ? "inverse" : "forward";
    j["input"] = a.b;
    j["output"] = result;
    out << j.dump(2) << '\n';
  } else {
    out << result << '\n';
  }
  return 0;
}

int cmd_expand(const Args& a, const RunConfig& cfg, std::ostream& out) {
  const GfFamily g = parse_gf_family(a.a);
  const GfInfo& info = gf_info(g);
  Truncation t = default_truncation(g, a.n.value_or(6));
  if (cfg.trunc_z) t.nz = *cfg.trunc_z;
  if (cfg.trunc_x) t.nx = *cfg.trunc_x;
  if (cfg.trunc_y) t.ny = *cfg.trunc_y;
  t.validate();
  check_truncation_budget(t, static_cast<std::size_t>(a.max_cells));
  const GfPath path = parse_path(a.path);
  const Series s = a.counts ? expand_counts(g, t, path) : expand(g, t, path);
  if (cfg.format == "json") {
    out << series_json(s, info.variables, 2) << '\n';
    return 0;
  }
  std::vector<std::string> header = {"z", "x"};
  if (t.nv > 0) header.push_back("v");
  if (t.u_range > 0) header.push_back("u");
  header.push_back("y");
  header.push_back("coefficient");
  if (cfg.decimal) header.push_back("decimal");
  csv_row(out, header);
  s.for_each_nonzero([&](const Exponents& e, const Rational& c) {
    std::vector<std::string> cells = {std::to_string(e.z), std::to_string(e.x)};
    if (t.nv > 0) cells.push_back(std::to_string(e.v));
    if (t.u_range > 0) cells.push_back(std::to_string(e.u));
    cells.push_back(std::to_string(e.y));
    cells.push_back(c.str());
    if (cfg.decimal) cells.push_back(c.decimal(cfg.digits));
    csv_row(out, cells);
  });
  return 0;
}

// ---------------------------------------------------------------- verify, table2

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  VerifyOptions o;
  o.suite = cfg.suite;
  o.max_n = cfg.max_n;
  o.workers = cfg.workers;
  o.budgets = cfg.budgets;
  const VerifyReport rep = run_verify(o);
  if (cfg.format != "csv") {
    out << rep.json(2) << '\n';
  } else {
    csv_row(out, {"check_id", "family", "n_or_r", "status", "counterexample"});
    for (const auto& c : rep.checks)
      csv_row(out, {c.check_id, c.family, c.n_or_r, std::string(status_name(c.status)), c.counterexample.value_or("")});
  }
  err << rep.checks.size() << " checks: " << rep.count(CheckStatus::Pass) << " PASS, " << rep.count(CheckStatus::Warn)
      << " WARN, " << rep.count(CheckStatus::Fail) << " FAIL\n";
  return rep.exit_code();
}

int cmd_table2(const RunConfig& cfg, std::ostream& out) {
  const auto rows = table2(7);
  if (cfg.format == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json e;
      e["label"] = row.label;
      e["first_r"] = row.first_r;
      e["values"] = ordered_json::array();
      for (const auto& v : row.values) e["values"].push_back(scalar_text(v));
      if (cfg.decimal) {
        e["decimals"] = ordered_json::array();
        for (const auto& v : row.values) e["decimals"].push_back(to_decimal(v, cfg.digits));
      }
      j.push_back(std::move(e));
    }
    out << j.dump(2) << '\n';
  } else if (cfg.format == "plotdata") {
    bool first = true;
    for (const auto& row : rows) {
      if (!first) out << "\n";
      first = false;
      out << "# " << row.label << "\n";
      for (std::size_t i = 0; i < row.values.size(); ++i)
        out << row.first_r + static_cast<int>(i) << " " << fmt_double(as_quad(row.values[i]).to_double()) << "\n";
    }
  } else {
    std::vector<std::string> header = {"row", "r", "value"};
    if (cfg.decimal) header.push_back("decimal");
    csv_row(out, header);
    for (const auto& row : rows)
      for (std::size_t i = 0; i < row.values.size(); ++i) {
        std::vector<std::string> cells = {row.label, std::to_string(row.first_r + static_cast<int>(i)), scalar_text(row.values[i])};
        if (cfg.decimal) cells.push_back(to_decimal(row.values[i], cfg.digits));
        csv_row(out, cells);
      }
  }
  return 0;
}

struct Common {
  std::string format;
  bool decimal = false;
  int digits = 4;
  std::string config;
  int workers = 1;
  std::vector<std::string> budget;
  int trunc_z = 0, trunc_x = 0, trunc_y = 0;
  std::string suite;
  int max_n = -1;
};

void add_common(CLI::App* s, Common& c) {
  s->add_option("--format", c.format, "csv, json or plotdata")->check(CLI::IsMember({"csv", "json", "plotdata"}));
  s->add_flag("--decimal", c.decimal, "add decimal columns next to exact values");
  s->add_option("--digits", c.digits, "significant decimals");
  s->add_option("--config", c.config, "JSON config file (fallback: COMBSTAT_CONFIG)");
  s->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
  s->add_option("--budget", c.budget, "enumeration limit: N for all families, or family=N")->take_all();
  s->add_option("--trunc-z", c.trunc_z, "z truncation")->check(CLI::NonNegativeNumber);
  s->add_option("--trunc-x", c.trunc_x, "x truncation")->check(CLI::NonNegativeNumber);
  s->add_option("--trunc-y", c.trunc_y, "y truncation")->check(CLI::NonNegativeNumber);
}

bool given(const CLI::App* s, const std::string& name) {
  const CLI::Option* o = s->get_option_no_throw(name);
  return o != nullptr && o->count() > 0;
}

RunConfig resolve(const CLI::App* s, const Common& c) {
  RunConfig cfg;
  std::string path = c.config;
  if (!given(s, "--config"))
    if (const char* env = std::getenv("COMBSTAT_CONFIG"); env && *env) path = env;
  if (!path.empty()) apply_config_file(path, cfg);
  if (given(s, "--format")) cfg.format = c.format;
  if (given(s, "--decimal")) cfg.decimal = c.decimal;
  if (given(s, "--digits")) cfg.digits = c.digits;
  if (given(s, "--workers")) cfg.workers = c.workers;
  for (const auto& b : c.budget) apply_budget(b, cfg.budgets);
  if (given(s, "--trunc-z")) cfg.trunc_z = c.trunc_z;
  if (given(s, "--trunc-x")) cfg.trunc_x = c.trunc_x;
  if (given(s, "--trunc-y")) cfg.trunc_y = c.trunc_y;
  if (given(s, "--suite")) cfg.suite = c.suite;
  if (given(s, "--max-n")) cfg.max_n = c.max_n;
  return cfg;
}

}  // namespace

void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file '" + path + "' must hold a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "format") cfg.format = v.get<std::string>();
    else if (key == "decimal") cfg.decimal = v.get<bool>();
    else if (key == "digits") cfg.digits = v.get<int>();
    else if (key == "workers") cfg.workers = v.get<int>();
    else if (key == "suite") cfg.suite = v.get<std::string>();
    else if (key == "max-n") cfg.max_n = v.get<int>();
    else if (key == "trunc-z") cfg.trunc_z = v.get<int>();
    else if (key == "trunc-x") cfg.trunc_x = v.get<int>();
    else if (key == "trunc-y") cfg.trunc_y = v.get<int>();
    else if (key == "budget") {
      if (v.is_number_integer()) {
        for (auto& [f, lim] : cfg.budgets.limits) lim = v.get<int>();
      } else {
        for (const auto& [fam, lim] : v.items()) cfg.budgets.limits[parse_family(fam)] = lim.get<int>();
      }
    } else {
      throw UsageError("config file '" + path + "': unknown key '" + key + "'");
    }
  }
  if (cfg.format != "csv" && cfg.format != "json" && cfg.format != "plotdata")
    throw UsageError("config file '" + path + "': format must be csv, json or plotdata");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration, generating functions and limit laws for Catalan-like families", "combstat"};
  app.require_subcommand(1);
  Common c;
  Args a;

  auto* count = app.add_subcommand("count", "number of objects of size n");
  count->add_option("family", a.a)->required();
  count->add_option("--n", a.n)->required();
  count->add_option("--source", a.source, "closed (default), enum or both");

  auto* enumerate = app.add_subcommand("enumerate", "list every object of size n in the text codec");
  enumerate->add_option("family", a.a)->required();
  enumerate->add_option("--n", a.n)->required();

  auto* distribution = app.add_subcommand("distribution", "exact distribution table of a statistic");
  distribution->add_option("family", a.a)->required();
  distribution->add_option("statistic", a.b)->required();
  distribution->add_option("--n", a.n)->required();
  distribution->add_option("--r", a.r, "restrict to one position");
  distribution->add_option("--k", a.k, "leaf-count stratum (plane trees)");
  distribution->add_option("--source", a.source, "enum (default), gf or both");

  auto* average = app.add_subcommand("average", "average of a statistic at position r");
  average->add_option("family", a.a)->required();
  average->add_option("statistic", a.b)->required();
  average->add_option("--n", a.n);
  average->add_option("--r", a.r);
  average->add_option("--k", a.k, "leaf-count stratum (plane trees)");
  average->add_option("--method", a.method, "exact, closed (default), asymptotic-fixed-r or asymptotic");

  auto* limit = app.add_subcommand("limit", "fixed-r limit distribution");
  limit->add_option("law", a.a)->required();
  limit->add_option("--r", a.r);
  limit->add_option("--rmax", a.rmax, "last column when --r is absent");
  limit->add_option("--dmax", a.dmax, "largest depth");
  limit->add_option("--variant", a.variant, "stated (default) or diagnostic");
  limit->add_flag("--report", a.report, "comparison report for the Schroeder law");

  auto* convert = app.add_subcommand("convert", "apply a bijection to an encoded object");
  convert->add_option("bijection", a.a)->required();
  convert->add_option("object", a.b)->required();
  convert->add_flag("--inverse", a.inverse);

  auto* expand_cmd = app.add_subcommand("expand", "truncated expansion of a generating function");
  expand_cmd->add_option("gf", a.a)->required();
  expand_cmd->add_option("--n", a.n, "size bound for the default truncation");
  expand_cmd->add_option("--path", a.path, "closed, alt-closed or fixed-point");
  expand_cmd->add_flag("--counts", a.counts, "multiply [z^n] by n! for exponential families");
  expand_cmd->add_option("--max-cells", a.max_cells, "dense cell budget");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--suite", c.suite, "exact, series, objects, bijections, gf, identities, closed, limits or all");
  verify->add_option("--max-n", c.max_n, "size limit for enumeration-based checks");

  auto* tab = app.add_subcommand("table2", "fixed-r asymptotic averages");

  for (CLI::App* s : {count, enumerate, distribution, average, limit, convert, expand_cmd, verify, tab}) add_common(s, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    const RunConfig cfg = resolve(chosen, c);
    if (chosen == count) return cmd_count(a, cfg, out);
    if (chosen == enumerate) return cmd_enumerate(a, cfg, out);
    if (chosen == distribution) return cmd_distribution(a, cfg, out);
    if (chosen == average) return cmd_average(a, cfg, out);
    if (chosen == limit) return cmd_limit(a, cfg, out);
    if (chosen == convert) return cmd_convert(a, cfg, out);
    if (chosen == expand_cmd) return cmd_expand(a, cfg, out);
    if (chosen == verify) return cmd_verify(cfg, out, err);
    return cmd_table2(cfg, out);
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace combstat
