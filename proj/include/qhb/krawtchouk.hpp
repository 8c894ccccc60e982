#pragma once

// Krawtchouk polynomials for the m^2-ary Hamming scheme:
//
//   P_k(x; n) = sum_{j=0}^{k} (-1)^j gamma^{k-j} C(x, j) C(n-x, k-j),  gamma = m^2 - 1.

#include "qhb/exact.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhb {

/// Fixes one Krawtchouk family: code length n and level count m.
class KrawParams {
 public:
  KrawParams(int n, int m) : n_(n), m_(m) {
    if (n < 1) throw std::domain_error("KrawParams: n must be >= 1, got " + std::to_string(n));
    if (m < 2) throw std::domain_error("KrawParams: m must be >= 2, got " + std::to_string(m));
  }

  int n() const { return n_; }
  int m() const { return m_; }
  long q() const { return static_cast<long>(m_) * m_; }
  long gamma() const { return q() - 1; }

  /// Same m, length n - 1. Requires n >= 2.
  KrawParams shortened() const { return KrawParams(n_ - 1, m_); }

  friend bool operator==(const KrawParams&, const KrawParams&) = default;

 private:
  int n_;
  int m_;
};

namespace detail {

inline void require_index(const char* what, int value, int n) {
  if (value < 0 || value > n)
    throw std::domain_error(std::string(what) + " = " + std::to_string(value) +
                            " outside [0, " + std::to_string(n) + "]");
}

}  // namespace detail

/// P_k(x; n) by the defining sum.
inline Integer kraw_eval(int k, int x, const KrawParams& p) {
  const int n = p.n();
  detail::require_index("degree k", k, n);
  detail::require_index("point x", x, n);
  const Integer gamma = p.gamma();
  Integer sum = 0;
  for (int j = 0; j <= k; ++j) {
    Integer term = ipow(gamma, k - j) * binomial(x, j) * binomial(n - x, k - j);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

/// sum_{i=0}^{e} P_i(x; n), summed term by term.
inline Integer kraw_partial_sum(int e, int x, const KrawParams& p) {
  detail::require_index("degree e", e, p.n());
  detail::require_index("point x", x, p.n());
  Integer sum = 0;
  for (int i = 0; i <= e; ++i) sum += kraw_eval(i, x, p);
  return sum;
}

/// [P_0(x), ..., P_{max_degree}(x)] via the three-term recurrence in the degree
///   (k+1) P_{k+1}(x) = ((n-k) gamma + k - q x) P_k(x) - gamma (n-k+1) P_{k-1}(x).
inline std::vector<Integer> kraw_column(int x, const KrawParams& p, int max_degree) {
  const int n = p.n();
  detail::require_index("point x", x, n);
  detail::require_index("degree", max_degree, n);
  const long gamma = p.gamma();
  const long q = p.q();
  std::vector<Integer> col(static_cast<size_t>(max_degree) + 1);
  col[0] = 1;
  if (max_degree >= 1) col[1] = Integer(gamma) * n - Integer(q) * x;
  for (int k = 1; k < max_degree; ++k) {
    Integer next = (Integer(n - k) * gamma + k - Integer(q) * x) * col[k] -
                   Integer(gamma) * (n - k + 1) * col[k - 1];
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(k + 1));
    col[k + 1] = std::move(next);
  }
  return col;
}

inline std::vector<Integer> kraw_column(int x, const KrawParams& p) {
  return kraw_column(x, p, p.n());
}

/// [P_k(0), ..., P_k(n)].
inline std::vector<Integer> kraw_row(int k, const KrawParams& p) {
  detail::require_index("degree k", k, p.n());
  std::vector<Integer> row;
  row.reserve(static_cast<size_t>(p.n()) + 1);
  for (int x = 0; x <= p.n(); ++x) row.push_back(std::move(kraw_column(x, p, k)[k]));
  return row;
}

/// Full (n+1) x (n+1) matrix of P_k(x; n), immutable once built.
class KrawtchoukTable {
 public:
  explicit KrawtchoukTable(const KrawParams& p) : params_(p) {
    const auto size = static_cast<size_t>(p.n()) + 1;
    values_.resize(size * size);
    for (int x = 0; x <= p.n(); ++x) {
      auto col = kraw_column(x, p);
      for (int k = 0; k <= p.n(); ++k) values_[index(k, x)] = std::move(col[k]);
    }
  }

  const KrawParams& params() const { return params_; }
  int n() const { return params_.n(); }

  /// P_k(x); no range checks.
  const Integer& operator()(int k, int x) const { return values_[index(k, x)]; }

  const Integer& at(int k, int x) const {
    detail::require_index("degree k", k, n());
    detail::require_index("point x", x, n());
    return (*this)(k, x);
  }

 private:
  size_t index(int k, int x) const {
    return static_cast<size_t>(k) * (static_cast<size_t>(n()) + 1) + static_cast<size_t>(x);
  }

  KrawParams params_;
  std::vector<Integer> values_;
};

}  // namespace qhb
