#pragma once

#include "qhb/exact.hpp"
#include "qhb/krawtchouk.hpp"

#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhb {

/// Coefficients c_0..c_n with P_i(x) P_j(x) = sum_k c_k P_k(x).
struct LinearizationRow {
  int i = 0;
  int j = 0;
  std::vector<Integer> coeffs;
};

/// Expands P_i P_j in the Krawtchouk basis:
///
///   c_k = sum_s C(k, 2k+2s-i-j) C(n-k, s) C(2k+2s-i-j, k+s-j) (gamma-1)^{i+j-2s-k} gamma^s
///
/// Terms with a vanishing binomial are skipped, which also keeps the
/// (gamma-1) exponent nonnegative.
inline LinearizationRow linearize_product(int i, int j, const KrawParams& p) {
  const int n = p.n();
  detail::require_index("degree i", i, n);
  detail::require_index("degree j", j, n);
  const Integer gamma = p.gamma();
  const Integer gamma_minus_one = p.gamma() - 1;

  LinearizationRow row{i, j, std::vector<Integer>(static_cast<size_t>(n) + 1)};
  for (int k = 0; k <= n; ++k) {
    Integer ck = 0;
    for (int s = 0; s <= n - k; ++s) {
      const int top = 2 * k + 2 * s - i - j;
      Integer b = binomial(k, top);
      if (b == 0) continue;
      b *= binomial(n - k, s);
      if (b == 0) continue;
      b *= binomial(top, k + s - j);
      if (b == 0) continue;
      const int exponent = i + j - 2 * s - k;
      if (exponent < 0) throw std::logic_error("linearize_product: negative exponent on support");
      ck += b * ipow(gamma_minus_one, exponent) * ipow(gamma, s);
    }
    row.coeffs[static_cast<size_t>(k)] = std::move(ck);
  }
  return row;
}

/// Recovers f_0..f_n from values[t] = sum_r f_r P_r(t) using orthogonality:
/// f_k = m^{-2n} sum_t values[t] P_t(k).
inline std::vector<Rational> kbasis_extract(std::span<const Rational> values, const KrawParams& p) {
  const int n = p.n();
  if (values.size() != static_cast<size_t>(n) + 1)
    throw std::invalid_argument("kbasis_extract: expected " + std::to_string(n + 1) +
                                " values, got " + std::to_string(values.size()));
  const Rational scale = rpow(p.m(), -2 * static_cast<std::int64_t>(n));
  std::vector<Rational> coeffs;
  coeffs.reserve(values.size());
  for (int k = 0; k <= n; ++k) {
    const auto col = kraw_column(k, p);  // P_t(k) for t = 0..n
    Rational acc = 0;
    for (int t = 0; t <= n; ++t) acc += values[static_cast<size_t>(t)] * col[static_cast<size_t>(t)];
    coeffs.push_back(acc * scale);
  }
  return coeffs;
}

}  // namespace qhb
