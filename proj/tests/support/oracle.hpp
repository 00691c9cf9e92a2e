#pragma once

// Reference computations that share no code with the library: a fine-grid
// sign scan for the cutoffs built on the closed-form alpha sum, and frozen
// exact values worked out in rational arithmetic.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

struct Primitives {
  double v_low;
  double v_high;
  double delta;
};

/// Cutoffs held as low-type weights c_k = 1 - mu_bar_k.
struct ScanCutoffs {
  std::vector<double> value;
  std::vector<double> complement;
};

namespace detail {

inline double vhat_c(const Primitives& p, double c) {
  return p.v_low - ((1.0 - c) / c) * (p.v_high - p.v_low);
}

}  // namespace detail

/// Delta_{n+1} at prior with low weight c, from R(mu_bar_k, mu) =
/// alpha_k v_H + gamma_k vhat(mu) with alpha_k, gamma_k in closed form.
inline double gap(const Primitives& p, const std::vector<double>& cuts_c, const std::vector<double>& alpha,
                  std::size_t n, double c) {
  auto delay_at = [&](std::size_t k) {
    const double ck = cuts_c[k];
    const double gamma = ck * std::pow(p.delta, static_cast<double>(k));
    const double r = alpha[k] * p.v_high + gamma * detail::vhat_c(p, c);
    return (ck - c) / ck * p.v_high + (c / ck) * p.delta * r;
  };
  return delay_at(n) - delay_at(n - 1);
}

/// Each mu_bar_{n+1} located by scanning `points` equally spaced beliefs
/// on (mu_bar_n, 1) for the first sign change of the gap, then linear
/// interpolation inside the bracketing cell. Stops below `eps` or after
/// `max_cutoffs`.
inline ScanCutoffs sign_scan_cutoffs(const Primitives& p, std::size_t points = 1'000'000, double eps = 1e-10,
                                     std::size_t max_cutoffs = 60) {
  ScanCutoffs out;
  const double mu1 = p.v_low / p.v_high;
  out.value = {0.0, mu1};
  out.complement = {1.0, 1.0 - mu1};
  std::vector<double> alpha{0.0, mu1};
  while (out.complement.back() > eps && out.value.size() < max_cutoffs) {
    const std::size_t n = out.value.size() - 1;
    const double cn = out.complement.back();
    const double h = cn / static_cast<double>(points);
    double prev_c = cn;
    double prev_g = gap(p, out.complement, alpha, n, prev_c);
    bool found = false;
    for (std::size_t j = 1; j < points; ++j) {
      const double c = cn - h * static_cast<double>(j);
      const double g = gap(p, out.complement, alpha, n, c);
      if (prev_g < 0.0 && g >= 0.0) {
        const double root = prev_c + (c - prev_c) * (prev_g / (prev_g - g));
        out.complement.push_back(root);
        out.value.push_back(1.0 - root);
        found = true;
        break;
      }
      prev_c = c;
      prev_g = g;
    }
    if (!found) break;
    // alpha for the new cutoff from the explicit sum over the chain.
    const std::size_t k = out.complement.size() - 1;
    const auto& c = out.complement;
    double sum = 0.0;
    for (std::size_t i = 1; i < k; ++i) {
      sum += std::pow(p.delta, static_cast<double>(k - i)) * (c[i - 1] - c[i]) / (c[i] * c[i - 1]);
    }
    alpha.push_back((c[k - 1] - c[k]) / c[k - 1] + c[k] * sum);
  }
  return out;
}

/// Best mean-preserving mix of w over three grid points x[a] < x[b] < x[c],
/// with the middle weight stepped over `steps` + 1 values in [0, 1].
inline double best_three_point(const std::vector<double>& x, const std::vector<double>& w, double mu0,
                               int steps = 10) {
  double best = -INFINITY;
  const std::size_t n = x.size();
  for (std::size_t a = 0; a < n && x[a] <= mu0; ++a) {
    for (std::size_t c = n; c-- > a + 1 && x[c] >= mu0;) {
      for (std::size_t b = a + 1; b < c; ++b) {
        for (int t = 0; t <= steps; ++t) {
          const double wb = static_cast<double>(t) / steps;
          const double wc = (mu0 - wb * x[b] - (1.0 - wb) * x[a]) / (x[c] - x[a]);
          const double wa = 1.0 - wb - wc;
          if (wa < 0.0 || wc < 0.0) continue;
          best = std::max(best, wa * w[a] + wb * w[b] + wc * w[c]);
        }
      }
    }
  }
  return best;
}

/// Best two-point mix on the same grid.
inline double best_two_point(const std::vector<double>& x, const std::vector<double>& w, double mu0) {
  double best = -INFINITY;
  for (std::size_t a = 0; a < x.size() && x[a] <= mu0; ++a) {
    for (std::size_t c = a; c < x.size(); ++c) {
      if (x[c] < mu0) continue;
      if (x[c] == x[a]) {
        best = std::max(best, w[a]);
        continue;
      }
      const double wc = (mu0 - x[a]) / (x[c] - x[a]);
      best = std::max(best, (1.0 - wc) * w[a] + wc * w[c]);
    }
  }
  return best;
}

/// Exact cutoffs (v_L, v_H) = (1, 2) from rational arithmetic.
inline constexpr double kMuBar2Delta08 = 7.0 / 9.0;
inline constexpr double kMuBar3Delta08 = 181.0 / 197.0;
inline constexpr double kMuBar4Delta08 = 21417.0 / 21929.0;
inline constexpr double kMuBar5Delta08 = 12507001.0 / 12572537.0;
inline constexpr double kMuBar2Delta095 = 59.0 / 78.0;
inline constexpr double kMuBar3Delta095 = 53299.0 / 60158.0;
inline constexpr double kMuBar4Delta095 = 877577841.0 / 924623722.0;

/// alpha at mu_bar_2 and mu_bar_3 for (1, 2, 0.8).
inline constexpr double kAlphaMuBar2Delta08 = 11.0 / 15.0;
inline constexpr double kAlphaMuBar3Delta08 = 4181.0 / 4925.0;

}  // namespace oracle
