#pragma once

// Single-polynomial dual certificate for quantum codes.
//
// Given f(x) = sum_i f_i P_i(x) with
//   (1) f_t > 0 for t in S and f_t >= 0 otherwise,
//   (2) f(t) <= 0 for t outside S,
// every ((n, K, d))_m code with S a subset of {0..d-1} satisfies
//   K <= m^{-n} max_{t in S} f(t) / f_t.

#include "qhb/exact.hpp"
#include "qhb/krawtchouk.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qhb {

/// Polynomial given by its coefficients in the Krawtchouk basis.
class KBasisPoly {
 public:
  KBasisPoly(KrawParams params, std::vector<Rational> coeffs)
      : params_(params), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<size_t>(params_.n()) + 1)
      throw std::invalid_argument("KBasisPoly: expected " + std::to_string(params_.n() + 1) +
                                  " coefficients, got " + std::to_string(coeffs_.size()));
  }

  /// The basis element P_k.
  static KBasisPoly unit(const KrawParams& p, int k) {
    detail::require_index("degree k", k, p.n());
    std::vector<Rational> c(static_cast<size_t>(p.n()) + 1, Rational(0));
    c[static_cast<size_t>(k)] = 1;
    return KBasisPoly(p, std::move(c));
  }

  const KrawParams& params() const { return params_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](size_t i) const { return coeffs_[i]; }

  KBasisPoly scaled(const Rational& c) const {
    auto out = coeffs_;
    for (auto& v : out) v *= c;
    return KBasisPoly(params_, std::move(out));
  }

 private:
  KrawParams params_;
  std::vector<Rational> coeffs_;
};

/// Sorted, duplicate-free subset of {0..n}.
class IndexSet {
 public:
  IndexSet(std::vector<int> indices, int n) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (indices_.empty()) throw std::invalid_argument("index set S must be nonempty");
    for (int t : indices_) detail::require_index("index in S", t, n);
    mask_.assign(static_cast<size_t>(n) + 1, false);
    for (int t : indices_) mask_[static_cast<size_t>(t)] = true;
  }

  /// {0, ..., last}.
  static IndexSet prefix(int last, int n) {
    std::vector<int> v;
    for (int t = 0; t <= last; ++t) v.push_back(t);
    return IndexSet(std::move(v), n);
  }

  bool contains(int t) const {
    return t >= 0 && static_cast<size_t>(t) < mask_.size() && mask_[static_cast<size_t>(t)];
  }
  const std::vector<int>& indices() const { return indices_; }
  size_t size() const { return indices_.size(); }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

 private:
  std::vector<int> indices_;
  std::vector<bool> mask_;
};

struct ConditionReport {
  bool cond1_ok = true;
  std::vector<int> cond1_violations;  // f_t <= 0 on S, or f_t < 0 off S
  bool cond2_ok = true;
  std::vector<int> cond2_violations;  // f(t) > 0 with t outside S
  std::vector<int> S;

  bool ok() const { return cond1_ok && cond2_ok; }
};

struct BoundReport {
  Rational bound;
  int argmax_t = 0;
  std::vector<int> S;
  std::vector<Rational> per_t_ratios;  // f(t) / f_t, aligned with S
  Integer bound_floor;
};

/// Thrown by theorem1_bound when the hypotheses do not hold.
class ConditionsNotMet : public std::runtime_error {
 public:
  explicit ConditionsNotMet(ConditionReport report)
      : std::runtime_error(describe(report)), report_(std::move(report)) {}

  const ConditionReport& report() const { return report_; }

 private:
  static std::string describe(const ConditionReport& r) {
    std::string msg = "witness conditions fail:";
    if (!r.cond1_ok) msg += " condition 1 (coefficient signs)";
    if (!r.cond2_ok) msg += " condition 2 (f(t) <= 0 outside S)";
    return msg;
  }

  ConditionReport report_;
};

/// f(t) = sum_r f_r P_r(t).
inline Rational poly_eval(const KBasisPoly& f, int t) {
  detail::require_index("point t", t, f.params().n());
  const auto col = kraw_column(t, f.params());
  Rational acc = 0;
  for (size_t r = 0; r < col.size(); ++r) acc += f[r] * col[r];
  return acc;
}

/// [f(0), ..., f(n)] against a prebuilt table for the same parameters.
inline std::vector<Rational> poly_values(const KBasisPoly& f, const KrawtchoukTable& table) {
  if (!(table.params() == f.params()))
    throw std::invalid_argument("poly_values: table built for different parameters");
  const int n = f.params().n();
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(n) + 1);
  for (int t = 0; t <= n; ++t) {
    Rational acc = 0;
    for (int r = 0; r <= n; ++r) {
      const auto& c = f[static_cast<size_t>(r)];
      if (sgn(c) != 0) acc += c * table(r, t);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

inline std::vector<Rational> poly_values(const KBasisPoly& f) {
  return poly_values(f, KrawtchoukTable(f.params()));
}

namespace detail {

inline ConditionReport check_conditions(const KBasisPoly& f, const IndexSet& S,
                                        const std::vector<Rational>& values) {
  ConditionReport report;
  report.S = S.indices();
  const int n = f.params().n();
  for (int t = 0; t <= n; ++t) {
    const int sign = sgn(f[static_cast<size_t>(t)]);
    if (S.contains(t) ? sign <= 0 : sign < 0) report.cond1_violations.push_back(t);
    if (!S.contains(t) && sgn(values[static_cast<size_t>(t)]) > 0)
      report.cond2_violations.push_back(t);
  }
  report.cond1_ok = report.cond1_violations.empty();
  report.cond2_ok = report.cond2_violations.empty();
  return report;
}

inline BoundReport theorem1_bound(const KBasisPoly& f, const IndexSet& S,
                                  const std::vector<Rational>& values) {
  auto conditions = check_conditions(f, S, values);
  if (!conditions.ok()) throw ConditionsNotMet(std::move(conditions));

  BoundReport report;
  report.S = S.indices();
  std::optional<Rational> best;
  for (int t : S) {
    Rational ratio = values[static_cast<size_t>(t)] / f[static_cast<size_t>(t)];
    if (!best || ratio > *best) {  // strict: smallest index wins ties
      best = ratio;
      report.argmax_t = t;
    }
    report.per_t_ratios.push_back(std::move(ratio));
  }
  report.bound = *best * rpow(f.params().m(), -f.params().n());
  report.bound_floor = floor(report.bound);
  return report;
}

}  // namespace detail

inline IndexSet make_index_set(const KBasisPoly& f, std::vector<int> S) {
  return IndexSet(std::move(S), f.params().n());
}

/// Checks both sign conditions and lists every violating index.
inline ConditionReport check_conditions(const KBasisPoly& f, const IndexSet& S) {
  return detail::check_conditions(f, S, poly_values(f));
}

/// The bound K <= m^{-n} max_{t in S} f(t)/f_t. Throws ConditionsNotMet when
/// the hypotheses fail.
inline BoundReport theorem1_bound(const KBasisPoly& f, const IndexSet& S) {
  return detail::theorem1_bound(f, S, poly_values(f));
}

inline BoundReport theorem1_bound(const KBasisPoly& f, const IndexSet& S,
                                  const KrawtchoukTable& table) {
  return detail::theorem1_bound(f, S, poly_values(f, table));
}

}  // namespace qhb
