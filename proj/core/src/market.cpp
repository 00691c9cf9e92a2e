#include "coase/market.hpp"

#include <cmath>
#include <cstdio>

namespace coase {

Belief::Belief(double high) {
  if (!std::isfinite(high) || high < -kBeliefSnap || high > 1.0 + kBeliefSnap) {
    throw std::invalid_argument("belief " + std::to_string(high) + " outside [0, 1]");
  }
  if (high < kBeliefSnap) high = 0.0;
  if (high > 1.0 - kBeliefSnap) high = 1.0;
  high_ = high;
  low_ = 1.0 - high;
}

Belief Belief::from_complement(double low) {
  if (!std::isfinite(low) || low < -kBeliefSnap || low > 1.0 + kBeliefSnap) {
    throw std::invalid_argument("low-type weight " + std::to_string(low) + " outside [0, 1]");
  }
  if (low <= 0.0) return Belief(1.0, 0.0);
  if (low >= 1.0) return Belief(0.0, 1.0);
  return Belief(1.0 - low, low);
}

void MarketParams::validate() const {
  if (!(std::isfinite(v_low) && std::isfinite(v_high) && std::isfinite(delta))) {
    throw std::invalid_argument("market parameters must be finite");
  }
  if (v_low < 0.0) throw std::invalid_argument("v_low must be non-negative");
  if (!(v_low < v_high)) throw std::invalid_argument("v_low must be strictly below v_high");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
}

MarketParams make_params(double v_low, double v_high, double delta, double mu0) {
  MarketParams p{v_low, v_high, delta, Belief(mu0)};
  p.validate();
  return p;
}

double virtual_value(const MarketParams& p, Belief mu) {
  if (mu.certain_high()) {
    throw std::domain_error("virtual value has a pole at belief 1");
  }
  return p.v_low - (mu.value() / mu.complement()) * p.delta_v();
}

Belief mu_bar_1(const MarketParams& p) { return Belief(p.v_low / p.v_high); }

double sale_value(const MarketParams& p, Belief posterior, Belief prior) {
  if (posterior.certain_high()) return p.v_high;
  return posterior.value() * p.v_high + posterior.complement() * virtual_value(p, prior);
}

std::string to_string(Belief b) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", b.value());
  return buf;
}

}  // namespace coase
