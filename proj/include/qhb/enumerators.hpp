#pragma once

// Quantum MacWilliams transform between a weight distribution {A_r} and its
// dual {A'_i}:
//
//   sum_i A'_i x^{n-i} y^i = (K / m^n) sum_r A_r (x + gamma y)^{n-r} (x - y)^r
//
// Expanding (x + gamma y)^{n-r} (x - y)^r = sum_i P_i(r) x^{n-i} y^i gives the
// coefficient form A'_i = (K / m^n) sum_r A_r P_i(r); the inverse is
// A_r = (1 / (K m^n)) sum_i A'_i P_r(i).

#include "qhb/exact.hpp"
#include "qhb/krawtchouk.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qhb {

class WeightDistribution {
 public:
  WeightDistribution(KrawParams params, Rational dimension, std::vector<Rational> entries)
      : params_(params), dimension_(std::move(dimension)), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<size_t>(params_.n()) + 1)
      throw std::invalid_argument("WeightDistribution: expected " + std::to_string(params_.n() + 1) +
                                  " entries, got " + std::to_string(entries_.size()));
    if (sgn(dimension_) <= 0) throw std::invalid_argument("WeightDistribution: K must be positive");
  }

  /// Distributions of actual codes are nonnegative; transform outputs are not
  /// forced to be, so this is reported rather than enforced.
  bool nonnegative() const {
    for (const auto& a : entries_)
      if (sgn(a) < 0) return false;
    return true;
  }

  const KrawParams& params() const { return params_; }
  const Rational& dimension() const { return dimension_; }
  const std::vector<Rational>& entries() const { return entries_; }
  const Rational& operator[](size_t i) const { return entries_[i]; }
  size_t size() const { return entries_.size(); }

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

 private:
  KrawParams params_;
  Rational dimension_;
  std::vector<Rational> entries_;
};

namespace detail {

// out[a] = scale * sum_b in[b] * P_a(b)
inline std::vector<Rational> krawtchouk_apply(const std::vector<Rational>& in, const KrawParams& p,
                                              const Rational& scale) {
  const KrawtchoukTable table(p);
  const int n = p.n();
  std::vector<Rational> out;
  out.reserve(in.size());
  for (int a = 0; a <= n; ++a) {
    Rational acc = 0;
    for (int b = 0; b <= n; ++b) {
      acc += in[static_cast<size_t>(b)] * table(a, b);
    }
    out.push_back(acc * scale);
  }
  return out;
}

}  // namespace detail

/// Dual distribution: A'_i = (K / m^n) sum_r A_r P_i(r).
inline WeightDistribution mw_forward(const WeightDistribution& dist) {
  const auto& p = dist.params();
  const Rational scale = dist.dimension() * rpow(p.m(), -p.n());
  return WeightDistribution(p, dist.dimension(),
                            detail::krawtchouk_apply(dist.entries(), p, scale));
}

/// Primal distribution: A_r = (1 / (K m^n)) sum_i A'_i P_r(i).
inline WeightDistribution mw_inverse(const WeightDistribution& dual) {
  const auto& p = dual.params();
  const Rational scale = rpow(p.m(), -p.n()) / dual.dimension();
  return WeightDistribution(p, dual.dimension(),
                            detail::krawtchouk_apply(dual.entries(), p, scale));
}

struct PurityWindowReport {
  int d = 0;
  std::vector<bool> equal;  // equal[i] <=> A_i == A'_i, i = 0..d-1
  bool all_equal = false;
};

/// Compares A_i and A'_i on the window i = 0..d-1.
inline PurityWindowReport check_purity_window(const WeightDistribution& primal,
                                              const WeightDistribution& dual, int d) {
  if (!(primal.params() == dual.params()) || primal.dimension() != dual.dimension())
    throw std::invalid_argument("check_purity_window: distributions have different (n, m, K)");
  if (d < 1) throw std::domain_error("check_purity_window: d must be >= 1");
  if (d > primal.params().n() + 1)
    throw std::domain_error("check_purity_window: d exceeds n + 1");
  PurityWindowReport report{d, {}, true};
  for (int i = 0; i < d; ++i) {
    const bool same = primal[static_cast<size_t>(i)] == dual[static_cast<size_t>(i)];
    report.equal.push_back(same);
    report.all_equal = report.all_equal && same;
  }
  return report;
}

}  // namespace qhb
