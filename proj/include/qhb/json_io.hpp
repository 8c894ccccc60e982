#pragma once

// JSON encodings. Rationals are always written as "p/q" or integer strings;
// on input a JSON integer is accepted as well.
//
//   distribution: {"n": int, "m": int, "K": rat, "A": [rat, ...]}
//   witness:      {"n": int, "m": int, "S": [int], "coeffs": [rat, ...]}
//   threshold:    {"d", "m", "horizon", "threshold", "stable_tail",
//                  "per_n": [{"n", "pass", "argmax_t", "bound", "hamming_rhs"}]}

#include "qhb/enumerators.hpp"
#include "qhb/exact.hpp"
#include "qhb/hamming_witness.hpp"
#include "qhb/lp_bound.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qhb::json_io {

using nlohmann::json;

/// Schema or value error in a JSON document.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) throw SchemaError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
  return *it;
}

inline int int_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

inline Rational rational_value(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Integer(v.dump()));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(where + ": " + e.what());
  }
  throw SchemaError(where + " must be a rational string");
}

inline std::vector<Rational> rational_array(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_array()) throw SchemaError(std::string("field \"") + key + "\" must be an array");
  std::vector<Rational> out;
  out.reserve(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    out.push_back(rational_value(v[i], std::string(key) + "[" + std::to_string(i) + "]"));
  return out;
}

template <typename Fn>
auto wrap(Fn&& fn) {
  try {
    return fn();
  } catch (const SchemaError&) {
    throw;
  } catch (const json::exception& e) {
    throw SchemaError(e.what());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  } catch (const std::domain_error& e) {
    throw SchemaError(e.what());
  }
}

}  // namespace detail

inline json rational(const Rational& q) { return to_string(q); }

inline json rational_array(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& q : v) arr.push_back(rational(q));
  return arr;
}

inline WeightDistribution distribution_from_json(const json& doc) {
  return detail::wrap([&] {
    const KrawParams p(detail::int_field(doc, "n"), detail::int_field(doc, "m"));
    Rational K = detail::rational_value(detail::field(doc, "K"), "K");
    return WeightDistribution(p, std::move(K), detail::rational_array(doc, "A"));
  });
}

inline json to_json(const WeightDistribution& dist) {
  return json{{"n", dist.params().n()},
              {"m", dist.params().m()},
              {"K", rational(dist.dimension())},
              {"A", rational_array(dist.entries())}};
}

struct WitnessInput {
  KBasisPoly poly;
  IndexSet S;
};

inline WitnessInput witness_from_json(const json& doc) {
  return detail::wrap([&] {
    const KrawParams p(detail::int_field(doc, "n"), detail::int_field(doc, "m"));
    const json& s = detail::field(doc, "S");
    if (!s.is_array()) throw SchemaError("field \"S\" must be an array");
    std::vector<int> indices;
    for (const auto& v : s) {
      if (!v.is_number_integer()) throw SchemaError("entries of \"S\" must be integers");
      indices.push_back(v.get<int>());
    }
    KBasisPoly poly(p, detail::rational_array(doc, "coeffs"));
    IndexSet S(std::move(indices), p.n());
    return WitnessInput{std::move(poly), std::move(S)};
  });
}

inline json to_json(const KBasisPoly& f, const IndexSet& S) {
  return json{{"n", f.params().n()},
              {"m", f.params().m()},
              {"S", S.indices()},
              {"coeffs", rational_array(f.coeffs())}};
}

inline json to_json(const ConditionReport& r) {
  return json{{"S", r.S},
              {"cond1_ok", r.cond1_ok},
              {"cond1_violations", r.cond1_violations},
              {"cond2_ok", r.cond2_ok},
              {"cond2_violations", r.cond2_violations}};
}

inline json to_json(const BoundReport& r) {
  return json{{"bound", rational(r.bound)},
              {"bound_floor", to_string(r.bound_floor)},
              {"argmax_t", r.argmax_t},
              {"S", r.S},
              {"ratios", rational_array(r.per_t_ratios)}};
}

inline json to_json(const LengthVerdict& v) {
  return json{{"n", v.n},
              {"pass", v.pass},
              {"argmax_t", v.argmax_t ? json(*v.argmax_t) : json(nullptr)},
              {"bound", v.bound ? rational(*v.bound) : json(nullptr)},
              {"hamming_rhs", rational(v.hamming_rhs)}};
}

inline json to_json(const ThresholdReport& r) {
  json per_n = json::array();
  for (const auto& v : r.per_n) per_n.push_back(to_json(v));
  return json{{"d", r.d},
              {"m", r.m},
              {"horizon", r.horizon},
              {"threshold", r.threshold},
              {"stable_tail", r.stable_tail},
              {"per_n", std::move(per_n)}};
}

inline ThresholdReport threshold_from_json(const json& doc) {
  return detail::wrap([&] {
    ThresholdReport r;
    r.d = detail::int_field(doc, "d");
    r.m = detail::int_field(doc, "m");
    r.horizon = detail::int_field(doc, "horizon");
    r.threshold = detail::int_field(doc, "threshold");
    const json& stable = detail::field(doc, "stable_tail");
    if (!stable.is_boolean()) throw SchemaError("field \"stable_tail\" must be a boolean");
    r.stable_tail = stable.get<bool>();
    const json& rows = detail::field(doc, "per_n");
    if (!rows.is_array()) throw SchemaError("field \"per_n\" must be an array");
    for (const auto& row : rows) {
      LengthVerdict v;
      v.n = detail::int_field(row, "n");
      const json& pass = detail::field(row, "pass");
      if (!pass.is_boolean()) throw SchemaError("field \"pass\" must be a boolean");
      v.pass = pass.get<bool>();
      const json& arg = detail::field(row, "argmax_t");
      const json& bound = detail::field(row, "bound");
      v.conditions_ok = !bound.is_null();
      if (!arg.is_null()) v.argmax_t = arg.get<int>();
      if (!bound.is_null()) v.bound = detail::rational_value(bound, "bound");
      v.hamming_rhs = detail::rational_value(detail::field(row, "hamming_rhs"), "hamming_rhs");
      r.per_n.push_back(std::move(v));
    }
    return r;
  });
}

}  // namespace qhb::json_io
