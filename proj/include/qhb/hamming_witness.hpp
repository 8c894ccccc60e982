#pragma once

// The squared partial-sum witness
//
//   f_t = (P_0(t) + ... + P_e(t))^2,   e = floor((d-1)/2),
//
// its closed-form values f(t), the quantum Hamming and Singleton bounds, and
// the search for the length N(d, m) from which the witness bound coincides
// with the Hamming bound.

#include "qhb/exact.hpp"
#include "qhb/krawtchouk.hpp"
#include "qhb/lp_bound.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace qhb {

/// Witness parameters for distance d at length n. S = {0..2e} for either parity of d.
class WitnessSpec {
 public:
  WitnessSpec(int n, int d, int m) : params_(n, m), d_(d), e_((d - 1) / 2) {
    if (d < 1) throw std::domain_error("distance d must be >= 1, got " + std::to_string(d));
    if (d > n)
      throw std::domain_error("distance d = " + std::to_string(d) + " exceeds length n = " +
                              std::to_string(n));
  }

  const KrawParams& params() const { return params_; }
  int n() const { return params_.n(); }
  int m() const { return params_.m(); }
  int d() const { return d_; }
  int e() const { return e_; }
  IndexSet S() const { return IndexSet::prefix(2 * e_, n()); }

 private:
  KrawParams params_;
  int d_;
  int e_;
};

/// f_t = (sum_{i<=e} P_i(t))^2, summed then squared.
inline KBasisPoly witness_coeffs(const WitnessSpec& spec) {
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<size_t>(spec.n()) + 1);
  for (int t = 0; t <= spec.n(); ++t) {
    const Integer s = kraw_partial_sum(spec.e(), t, spec.params());
    coeffs.emplace_back(s * s);
  }
  return KBasisPoly(spec.params(), std::move(coeffs));
}

/// f(t) from the closed form
///   m^{2n} sum_{i,j<=e} sum_s C(t, 2t+2s-i-j) C(n-t, s) C(2t+2s-i-j, t+s-j)
///                              (gamma-1)^{i+j-2s-t} gamma^s.
inline Integer witness_value(int t, const WitnessSpec& spec) {
  const int n = spec.n();
  const int e = spec.e();
  detail::require_index("point t", t, n);
  const Integer gamma = spec.params().gamma();
  const Integer gamma_minus_one = gamma - 1;
  Integer sum = 0;
  for (int i = 0; i <= e; ++i) {
    for (int j = 0; j <= e; ++j) {
      for (int s = 0; s <= n - t; ++s) {
        const int top = 2 * t + 2 * s - i - j;
        Integer term = binomial(t, top);
        if (term == 0) continue;
        term *= binomial(n - t, s) * binomial(top, t + s - j);
        if (term == 0) continue;
        term *= ipow(gamma_minus_one, i + j - 2 * s - t) * ipow(gamma, s);
        sum += term;
      }
    }
  }
  return sum * ipow(spec.m(), 2 * static_cast<std::int64_t>(n));
}

/// Largest K allowed by the quantum Hamming bound: m^n / sum_{i<=e} gamma^i C(n, i).
inline Rational hamming_rhs(int n, int d, int m) {
  const WitnessSpec spec(n, d, m);
  Integer volume = 0;
  for (int i = 0; i <= spec.e(); ++i) volume += ipow(spec.params().gamma(), i) * binomial(n, i);
  Rational r(ipow(m, n), volume);
  r.canonicalize();
  return r;
}

/// Quantum Singleton bound m^{n-2d+2}; below 1 when n < 2d - 2.
inline Rational singleton_rhs(int n, int d, int m) {
  if (m < 2) throw std::domain_error("m must be >= 2");
  if (d < 1) throw std::domain_error("d must be >= 1");
  return rpow(m, static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(d) + 2);
}

struct LengthVerdict {
  int n = 0;
  bool pass = false;
  bool conditions_ok = false;
  std::optional<int> argmax_t;     // empty when the conditions fail
  std::optional<Rational> bound;   // empty when the conditions fail
  Rational hamming_rhs;
};

/// Runs the witness through the bound engine at length n and passes iff the
/// conditions hold, the maximum ratio is attained at t = 0 (ties allowed),
/// and the bound equals the Hamming value exactly.
inline LengthVerdict check_n(int n, int d, int m) {
  const WitnessSpec spec(n, d, m);
  const KBasisPoly f = witness_coeffs(spec);
  const IndexSet S = spec.S();
  const KrawtchoukTable table(spec.params());

  LengthVerdict verdict;
  verdict.n = n;
  verdict.hamming_rhs = hamming_rhs(n, d, m);
  try {
    const BoundReport bound = theorem1_bound(f, S, table);
    verdict.conditions_ok = true;
    verdict.argmax_t = bound.argmax_t;
    verdict.bound = bound.bound;
    // argmax is the smallest index attaining the max, so 0 iff ratio(0) >= all.
    verdict.pass = bound.argmax_t == 0 && bound.bound == verdict.hamming_rhs;
  } catch (const ConditionsNotMet&) {
    verdict.pass = false;
  }
  return verdict;
}

inline int default_horizon(int d) { return std::max(100, 10 * d); }

struct ThresholdReport {
  int d = 0;
  int m = 0;
  int horizon = 0;
  int threshold = 0;
  bool stable_tail = false;
  std::vector<LengthVerdict> per_n;  // n = d..horizon
};

/// Raised when check_n fails at the horizon itself.
class NoPassingTail : public std::runtime_error {
 public:
  explicit NoPassingTail(ThresholdReport report)
      : std::runtime_error("no passing tail: check fails at the horizon n = " +
                           std::to_string(report.horizon) + "; increase the horizon"),
        report_(std::move(report)) {}

  const ThresholdReport& report() const { return report_; }

 private:
  ThresholdReport report_;
};

/// Size of the trailing window that must pass for a report to be trusted.
inline int tail_window(int horizon) { return (horizon + 9) / 10; }

/// Smallest N >= d such that check_n passes for every n in [N, horizon].
///
/// Every length in [d, horizon] is evaluated; lengths are independent and are
/// spread across worker threads. Results are stored by n so the report does
/// not depend on scheduling.
inline ThresholdReport find_threshold(int d, int m, int horizon, unsigned workers = 0) {
  if (d < 1) throw std::domain_error("distance d must be >= 1");
  if (m < 2) throw std::domain_error("m must be >= 2");
  if (horizon < d)
    throw std::domain_error("horizon " + std::to_string(horizon) + " is below d = " +
                            std::to_string(d));

  ThresholdReport report;
  report.d = d;
  report.m = m;
  report.horizon = horizon;
  const int count = horizon - d + 1;
  report.per_n.resize(static_cast<size_t>(count));

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(count));
  std::vector<std::future<void>> jobs;
  jobs.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      // Strided so each worker gets a mix of short and long lengths.
      for (int idx = static_cast<int>(w); idx < count; idx += static_cast<int>(workers))
        report.per_n[static_cast<size_t>(idx)] = check_n(d + idx, d, m);
    }));
  }
  for (auto& job : jobs) job.get();

  if (!report.per_n.back().pass) {
    report.threshold = horizon + 1;
    throw NoPassingTail(std::move(report));
  }
  int threshold = horizon;
  while (threshold > d && report.per_n[static_cast<size_t>(threshold - 1 - d)].pass) --threshold;
  report.threshold = threshold;
  report.stable_tail = threshold <= horizon - tail_window(horizon) + 1;
  return report;
}

inline ThresholdReport find_threshold(int d, int m) { return find_threshold(d, m, default_horizon(d)); }

struct SmallLengthCheck {
  int n = 0;
  Rational singleton;
  Rational hamming;
  bool singleton_within_hamming = false;  // singleton <= hamming
  bool no_nontrivial_code = false;        // singleton < 2: no code with K >= 2 exists
  bool covered = false;                   // either of the above
};

struct SmallLengthCoverage {
  std::vector<SmallLengthCheck> per_n;  // n = d..N-1
  bool all_hold = true;
};

/// For d <= n < N, checks that the Singleton bound already enforces the
/// Hamming bound: either Singleton is the stronger of the two, or it leaves
/// no room for a code with K >= 2 (a one-dimensional code detects every error
/// trivially, so only K >= 2 is at stake).
inline SmallLengthCoverage verify_small_n_coverage(int d, int m, int threshold) {
  if (threshold < d)
    throw std::domain_error("threshold " + std::to_string(threshold) + " is below d = " +
                            std::to_string(d));
  SmallLengthCoverage out;
  for (int n = d; n < threshold; ++n) {
    SmallLengthCheck c{n, singleton_rhs(n, d, m), hamming_rhs(n, d, m)};
    c.singleton_within_hamming = c.singleton <= c.hamming;
    c.no_nontrivial_code = c.singleton < 2;
    c.covered = c.singleton_within_hamming || c.no_nontrivial_code;
    out.all_hold = out.all_hold && c.covered;
    out.per_n.push_back(std::move(c));
  }
  return out;
}

/// Published thresholds N(d, 2) for odd d <= 15.
inline const std::map<int, int>& tabulated_binary_thresholds() {
  static const std::map<int, int> values{{1, 1},   {3, 5},   {5, 9},   {7, 14},
                                         {9, 20},  {11, 25}, {13, 30}, {15, 35}};
  return values;
}

}  // namespace qhb
