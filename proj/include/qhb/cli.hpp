#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// that tests can drive it in-process.
//
// Exit codes: 0 success, 2 usage/parse/domain error, 3 witness conditions
// fail, 4 no stable tail within the horizon.

#include "qhb/enumerators.hpp"
#include "qhb/exact.hpp"
#include "qhb/hamming_witness.hpp"
#include "qhb/json_io.hpp"
#include "qhb/krawtchouk.hpp"
#include "qhb/lp_bound.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qhb::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kConditionsFail = 3,
  kUnstableTail = 4,
};

enum class Format { text, json, csv };

struct Output {
  std::ostream& out;
  std::ostream& err;
  Format format = Format::text;
  bool approx = false;

  // Exact value, with a decimal rendering appended under --approx.
  std::string num(const Rational& q) const {
    if (!approx) return to_string(q);
    return to_string(q) + " (~" + approx_string(q) + ")";
  }

  // JSON: "key": exact, plus "key_approx" under --approx.
  void put(nlohmann::json& obj, const std::string& key, const Rational& q) const {
    obj[key] = to_string(q);
    if (approx) obj[key + "_approx"] = approx_string(q);
  }

  // CSV cell(s): exact, then the decimal column under --approx.
  std::string cells(const Rational& q) const {
    return approx ? to_string(q) + "," + approx_string(q) : to_string(q);
  }
  std::string header(const std::string& name) const {
    return approx ? name + "," + name + "_approx" : name;
  }
  std::string empty_cells() const { return approx ? "," : ""; }

  void emit(const nlohmann::json& doc) const { out << doc.dump(2) << '\n'; }
};

namespace detail {

inline std::string join(const std::vector<int>& v, const char* sep = ", ") {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw json_io::SchemaError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw json_io::SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline const char* horizon_note() {
  return "verified for every length in [d, horizon]; lengths beyond the horizon are "
         "extrapolated, not checked";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// kraw

inline int cmd_kraw(int k, int x, int n, int m, const Output& o) {
  const KrawParams p(n, m);
  const Integer value = kraw_eval(k, x, p);
  switch (o.format) {
    case Format::text:
      o.out << o.num(Rational(value)) << '\n';
      break;
    case Format::json: {
      nlohmann::json doc{{"k", k}, {"x", x}, {"n", n}, {"m", m}};
      o.put(doc, "value", Rational(value));
      o.emit(doc);
      break;
    }
    case Format::csv:
      o.out << "k,x,n,m," << o.header("value") << '\n'
            << k << ',' << x << ',' << n << ',' << m << ',' << o.cells(Rational(value)) << '\n';
      break;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// bound

inline int cmd_bound(const std::string& path, const Output& o) {
  const auto input = json_io::witness_from_json(detail::read_json_file(path));
  const KBasisPoly& f = input.poly;
  const IndexSet& S = input.S;
  const auto values = poly_values(f);
  const auto conditions = qhb::detail::check_conditions(f, S, values);
  std::optional<BoundReport> bound;
  if (conditions.ok()) bound = qhb::detail::theorem1_bound(f, S, values);

  const int n = f.params().n();
  switch (o.format) {
    case Format::text: {
      o.out << "n = " << n << ", m = " << f.params().m() << ", S = {" << detail::join(S.indices(), ",")
            << "}\n";
      o.out << "condition 1 (f_t > 0 on S, f_t >= 0 elsewhere): "
            << (conditions.cond1_ok ? "ok" : "violated at t = " + detail::join(conditions.cond1_violations))
            << '\n';
      o.out << "condition 2 (f(t) <= 0 outside S): "
            << (conditions.cond2_ok ? "ok" : "violated at t = " + detail::join(conditions.cond2_violations))
            << '\n';
      if (bound) {
        o.out << "bound: K <= " << o.num(bound->bound) << '\n';
        o.out << "bound_floor: " << to_string(bound->bound_floor) << '\n';
        o.out << "argmax_t: " << bound->argmax_t << '\n';
        o.out << "ratios f(t)/f_t:\n";
        for (size_t i = 0; i < bound->S.size(); ++i)
          o.out << "  t = " << bound->S[i] << ": " << o.num(bound->per_t_ratios[i]) << '\n';
      } else {
        o.out << "bound: not computed (conditions fail)\n";
      }
      break;
    }
    case Format::json: {
      nlohmann::json doc{{"n", n}, {"m", f.params().m()}, {"conditions", json_io::to_json(conditions)}};
      if (bound) {
        nlohmann::json b = json_io::to_json(*bound);
        if (o.approx) {
          b["bound_approx"] = approx_string(bound->bound);
          nlohmann::json ratios = nlohmann::json::array();
          for (const auto& r : bound->per_t_ratios) ratios.push_back(approx_string(r));
          b["ratios_approx"] = std::move(ratios);
        }
        doc["bound"] = std::move(b);
      } else {
        doc["bound"] = nullptr;
      }
      o.emit(doc);
      break;
    }
    case Format::csv: {
      o.out << "t,in_S," << o.header("f_t") << ',' << o.header("f_value") << ',' << o.header("ratio") << '\n';
      size_t s_pos = 0;
      for (int t = 0; t <= n; ++t) {
        const bool in_s = S.contains(t);
        o.out << t << ',' << (in_s ? 1 : 0) << ',' << o.cells(f[static_cast<size_t>(t)]) << ','
              << o.cells(values[static_cast<size_t>(t)]) << ',';
        if (in_s && bound) o.out << o.cells(bound->per_t_ratios[s_pos]);
        else o.out << o.empty_cells();
        o.out << '\n';
        if (in_s) ++s_pos;
      }
      break;
    }
  }
  return bound ? kOk : kConditionsFail;
}

// ---------------------------------------------------------------------------
// threshold

inline void render_threshold(const ThresholdReport& r, bool found, const Output& o) {
  switch (o.format) {
    case Format::text: {
      if (found) o.out << "N(" << r.d << ", " << r.m << ") = " << r.threshold << '\n';
      else o.out << "N(" << r.d << ", " << r.m << "): not found (check fails at the horizon)\n";
      o.out << "horizon: " << r.horizon << " (" << detail::horizon_note() << ")\n";
      o.out << "stable tail: " << detail::yes_no(r.stable_tail) << " (last " << tail_window(r.horizon)
            << " lengths must pass)\n";
      o.out << "n\tpass\targmax_t\tbound\thamming_rhs\n";
      for (const auto& v : r.per_n) {
        o.out << v.n << '\t' << (v.pass ? "pass" : "fail") << '\t'
              << (v.argmax_t ? std::to_string(*v.argmax_t) : "-") << '\t'
              << (v.bound ? o.num(*v.bound) : "-") << '\t' << o.num(v.hamming_rhs) << '\n';
      }
      break;
    }
    case Format::json: {
      nlohmann::json doc = json_io::to_json(r);
      doc["note"] = detail::horizon_note();
      if (o.approx) {
        for (size_t i = 0; i < r.per_n.size(); ++i) {
          if (r.per_n[i].bound) doc["per_n"][i]["bound_approx"] = approx_string(*r.per_n[i].bound);
          doc["per_n"][i]["hamming_rhs_approx"] = approx_string(r.per_n[i].hamming_rhs);
        }
      }
      o.emit(doc);
      break;
    }
    case Format::csv: {
      o.out << "n,pass,argmax_t," << o.header("bound") << ',' << o.header("hamming_rhs") << '\n';
      for (const auto& v : r.per_n) {
        o.out << v.n << ',' << (v.pass ? 1 : 0) << ',' << (v.argmax_t ? std::to_string(*v.argmax_t) : "")
              << ',' << (v.bound ? o.cells(*v.bound) : o.empty_cells()) << ',' << o.cells(v.hamming_rhs)
              << '\n';
      }
      break;
    }
  }
}

inline int cmd_threshold(int d, int m, std::optional<int> horizon, const Output& o) {
  const int h = horizon.value_or(default_horizon(d));
  try {
    const auto report = find_threshold(d, m, h);
    render_threshold(report, true, o);
    return report.stable_tail ? kOk : kUnstableTail;
  } catch (const NoPassingTail& e) {
    render_threshold(e.report(), false, o);
    o.err << "error: " << e.what() << '\n';
    return kUnstableTail;
  }
}

// ---------------------------------------------------------------------------
// table1

inline int cmd_table1(int max_d, int m, std::optional<int> horizon, const Output& o) {
  if (max_d < 1) throw std::domain_error("--max-d must be >= 1");
  if (m < 2) throw std::domain_error("--m must be >= 2");
  struct Row {
    int d;
    int horizon;
    std::optional<int> threshold;
    bool stable;
    std::optional<int> reference;
  };
  const bool has_reference = m == 2;
  std::vector<Row> rows;
  bool all_stable = true;
  for (int d = 1; d <= max_d; d += 2) {
    Row row{d, horizon.value_or(default_horizon(d)), std::nullopt, false, std::nullopt};
    if (row.horizon < d) throw std::domain_error("horizon " + std::to_string(row.horizon) + " is below d = " + std::to_string(d));
    if (has_reference) {
      const auto& tab = tabulated_binary_thresholds();
      if (auto it = tab.find(d); it != tab.end()) row.reference = it->second;
    }
    try {
      const auto r = find_threshold(d, m, row.horizon);
      row.threshold = r.threshold;
      row.stable = r.stable_tail;
    } catch (const NoPassingTail&) {
    }
    all_stable = all_stable && row.stable;
    rows.push_back(row);
  }

  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  switch (o.format) {
    case Format::text: {
      o.out << "N(d, " << m << ") for odd d <= " << max_d << '\n';
      if (!has_reference) o.out << "no published reference values for m = " << m << " (computed only)\n";
      o.out << "d\tN\thorizon\tstable\treference\n";
      for (const auto& r : rows)
        o.out << r.d << '\t' << opt(r.threshold) << '\t' << r.horizon << '\t' << detail::yes_no(r.stable) << '\t'
              << opt(r.reference) << '\n';
      break;
    }
    case Format::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rows)
        arr.push_back({{"d", r.d},
                       {"threshold", r.threshold ? nlohmann::json(*r.threshold) : nlohmann::json(nullptr)},
                       {"horizon", r.horizon},
                       {"stable_tail", r.stable},
                       {"reference", r.reference ? nlohmann::json(*r.reference) : nlohmann::json(nullptr)}});
      o.emit({{"m", m}, {"max_d", max_d}, {"reference_available", has_reference}, {"rows", std::move(arr)},
              {"note", detail::horizon_note()}});
      break;
    }
    case Format::csv: {
      o.out << "d,threshold,horizon,stable_tail,reference\n";
      for (const auto& r : rows)
        o.out << r.d << ',' << (r.threshold ? std::to_string(*r.threshold) : "") << ',' << r.horizon << ','
              << (r.stable ? 1 : 0) << ',' << (r.reference ? std::to_string(*r.reference) : "") << '\n';
      break;
    }
  }
  return all_stable ? kOk : kUnstableTail;
}

// ---------------------------------------------------------------------------
// macwilliams

inline int cmd_macwilliams(const std::string& direction, const std::string& path, const Output& o) {
  const auto input = json_io::distribution_from_json(detail::read_json_file(path));
  const WeightDistribution result = direction == "forward" ? mw_forward(input) : mw_inverse(input);
  switch (o.format) {
    case Format::text: {
      o.out << "n = " << result.params().n() << ", m = " << result.params().m() << ", K = "
            << o.num(result.dimension()) << '\n';
      for (size_t i = 0; i < result.size(); ++i) o.out << "A[" << i << "] = " << o.num(result[i]) << '\n';
      if (!result.nonnegative()) o.out << "note: distribution has negative entries\n";
      break;
    }
    case Format::json: {
      nlohmann::json doc = json_io::to_json(result);
      if (o.approx) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& a : result.entries()) arr.push_back(approx_string(a));
        doc["A_approx"] = std::move(arr);
      }
      o.emit(doc);
      break;
    }
    case Format::csv: {
      o.out << "i," << o.header("A") << '\n';
      for (size_t i = 0; i < result.size(); ++i) o.out << i << ',' << o.cells(result[i]) << '\n';
      break;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// check

inline std::string bound_status(const Rational& K, const Rational& rhs) {
  if (K < rhs) return "satisfied";
  if (K == rhs) return "satisfied with equality";
  return "violated";
}

inline int cmd_check(int n, const Rational& K, int d, int m, std::optional<int> horizon, const Output& o) {
  if (sgn(K) <= 0) throw std::domain_error("K must be positive");
  const Rational hamming = hamming_rhs(n, d, m);
  const Rational singleton = singleton_rhs(n, d, m);
  const int h = horizon.value_or(std::max(default_horizon(d), n));

  std::optional<ThresholdReport> threshold;
  try {
    threshold = find_threshold(d, m, h);
  } catch (const NoPassingTail&) {
  }
  const bool certified = threshold && threshold->stable_tail && n >= threshold->threshold && n <= h;

  switch (o.format) {
    case Format::text: {
      o.out << "code ((" << n << ", " << to_string(K) << ", " << d << "))_" << m << '\n';
      o.out << "hamming: K <= " << o.num(hamming) << ": " << bound_status(K, hamming) << '\n';
      o.out << "singleton: K <= " << o.num(singleton) << ": " << bound_status(K, singleton) << '\n';
      if (threshold) {
        o.out << "threshold: N(" << d << ", " << m << ") = " << threshold->threshold << " (horizon " << h
              << ", stable tail " << detail::yes_no(threshold->stable_tail) << ")\n";
        if (certified)
          o.out << "n >= N: every ((" << n << ", K, " << d << "))_" << m
                << " code obeys the Hamming bound, pure or impure\n";
        else
          o.out << "n < N: the Hamming bound is only established for pure codes at this length\n";
      } else {
        o.out << "threshold: not found within horizon " << h << '\n';
      }
      break;
    }
    case Format::json: {
      nlohmann::json doc{{"n", n}, {"K", to_string(K)}, {"d", d}, {"m", m}};
      nlohmann::json ham{{"status", bound_status(K, hamming)}};
      o.put(ham, "rhs", hamming);
      nlohmann::json sing{{"status", bound_status(K, singleton)}};
      o.put(sing, "rhs", singleton);
      doc["hamming"] = std::move(ham);
      doc["singleton"] = std::move(sing);
      doc["threshold"] = {{"N", threshold ? nlohmann::json(threshold->threshold) : nlohmann::json(nullptr)},
                          {"horizon", h},
                          {"stable_tail", threshold ? threshold->stable_tail : false},
                          {"hamming_applies_to_all_codes", certified}};
      o.emit(doc);
      break;
    }
    case Format::csv: {
      o.out << "bound,K," << o.header("rhs") << ",status\n";
      o.out << "hamming," << to_string(K) << ',' << o.cells(hamming) << ',' << bound_status(K, hamming) << '\n';
      o.out << "singleton," << to_string(K) << ',' << o.cells(singleton) << ',' << bound_status(K, singleton)
            << '\n';
      break;
    }
  }
  return threshold && threshold->stable_tail ? kOk : kUnstableTail;
}

// ---------------------------------------------------------------------------
// dispatch

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact linear-programming bounds for quantum error-correcting codes", "qhb"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  bool approx = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--approx", approx, "Append decimal approximations to exact values");

  int k = 0, x = 0, n = 0, m = 0, d = 0, max_d = 15;
  std::optional<int> horizon;
  std::string file, direction, K_text;

  auto* kraw = app.add_subcommand("kraw", "Evaluate the Krawtchouk polynomial P_k(x; n)");
  kraw->add_option("--k", k, "Degree")->required();
  kraw->add_option("--x", x, "Point")->required();
  kraw->add_option("--n", n, "Code length")->required();
  kraw->add_option("--m", m, "Level count")->required();

  auto* bound = app.add_subcommand("bound", "Check a witness polynomial and compute its dimension bound");
  bound->add_option("--file", file, "Witness JSON file")->required();

  auto* threshold = app.add_subcommand("threshold", "Find N(d, m)");
  threshold->add_option("--d", d, "Minimum distance")->required();
  threshold->add_option("--m", m, "Level count")->required();
  threshold->add_option("--horizon", horizon, "Largest length checked (default max(100, 10 d))");

  auto* table1 = app.add_subcommand("table1", "Tabulate N(d, m) for odd d");
  m = 2;
  table1->add_option("--max-d", max_d, "Largest distance")->capture_default_str();
  table1->add_option("--m", m, "Level count")->capture_default_str();
  table1->add_option("--horizon", horizon, "Largest length checked (default max(100, 10 d) per row)");

  auto* mac = app.add_subcommand("macwilliams", "Quantum MacWilliams transform of a weight distribution");
  mac->add_option("--direction", direction, "forward (A -> A') or inverse (A' -> A)")
      ->required()
      ->check(CLI::IsMember({"forward", "inverse"}));
  mac->add_option("--file", file, "Distribution JSON file")->required();

  auto* check = app.add_subcommand("check", "Test ((n, K, d))_m against the Hamming and Singleton bounds");
  check->add_option("--n", n, "Code length")->required();
  check->add_option("--K", K_text, "Code dimension")->required();
  check->add_option("--d", d, "Minimum distance")->required();
  check->add_option("--m", m, "Level count")->required();
  check->add_option("--horizon", horizon, "Largest length checked for the threshold");

  std::vector<const char*> argv{"qhb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  const Output o{out, err,
                 format == "json"  ? Format::json
                 : format == "csv" ? Format::csv
                                   : Format::text,
                 approx};
  try {
    if (*kraw) return cmd_kraw(k, x, n, m, o);
    if (*bound) return cmd_bound(file, o);
    if (*threshold) return cmd_threshold(d, m, horizon, o);
    if (*table1) return cmd_table1(max_d, m, horizon, o);
    if (*mac) return cmd_macwilliams(direction, file, o);
    if (*check) return cmd_check(n, parse_rational(K_text), d, m, horizon, o);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace qhb::cli
