#include "coase/mechanism.hpp"

#include <cmath>
#include <string>

namespace coase {

namespace {

constexpr double kIdentityTolerance = 1e-12;

Belief delay_point(const CutoffTable& table, std::size_t n) {
  if (n - 1 > table.last_index()) {
    throw TableExhausted("class " + std::to_string(n) + " has no delay cutoff in the table");
  }
  return table.cutoff(n - 1);
}

// beta(delay | v_high): the share of high types pooled with the low type so
// that the delay posterior is exactly `delay`.
double high_delay_prob(Belief mu0, Belief delay) {
  if (delay.value() == 0.0) return 0.0;
  return (mu0.complement() / mu0.value()) * (delay.value() / delay.complement());
}

}  // namespace

const Outcome* Mechanism::find(Belief mu) const noexcept {
  for (const auto& o : outcomes) {
    if (o.posterior == mu) return &o;
  }
  return nullptr;
}

double posted_price_for_class(const CutoffTable& table, std::size_t n) {
  const auto& p = table.params();
  if (table.degenerate()) return p.v_high;
  if (n == 0) return p.v_low;
  return p.v_low + (1.0 - std::pow(p.delta, static_cast<double>(n))) * p.delta_v();
}

Split equilibrium_split(const CutoffTable& table, Belief mu0) {
  const std::size_t n = delay_class(table, mu0);
  Split s;
  s.prior = mu0;
  s.delay_class = n;
  if (n == 0) {
    s.posterior_delay = s.posterior_sale = mu0;
    return s;
  }
  const Belief delay = delay_point(table, n);
  s.posterior_delay = delay;
  s.posterior_sale = Belief(1.0);
  s.weight_delay = mu0.complement() / delay.complement();
  s.weight_sale = (delay.complement() - mu0.complement()) / delay.complement();
  s.q_delay = 0.0;
  s.q_sale = 1.0;
  return s;
}

Mechanism build_mechanism_for_class(const CutoffTable& table, Belief mu0, std::size_t n) {
  const auto& p = table.params();
  Mechanism m;
  m.prior = mu0;
  m.delay_class = n;
  m.posted_price = posted_price_for_class(table, n);
  if (n == 0) {
    if (table.degenerate()) throw std::invalid_argument("v_low = 0 has no class-0 sellers");
    m.outcomes.push_back({mu0, 1.0, 1.0, 1.0, p.v_low});
    return m;
  }
  const Belief delay = delay_point(table, n);
  if (mu0 < delay) {
    throw std::invalid_argument("prior " + to_string(mu0) + " lies below the class-" + std::to_string(n) +
                                " delay posterior " + to_string(delay));
  }
  const double pooled = high_delay_prob(mu0, delay);
  m.outcomes.push_back({Belief(1.0), 0.0, 1.0 - pooled, 1.0, m.posted_price});
  m.outcomes.push_back({delay, 1.0, pooled, 0.0, 0.0});
  return m;
}

Mechanism build_mechanism(const CutoffTable& table, Belief mu0) {
  return build_mechanism_for_class(table, mu0, delay_class(table, mu0));
}

SellerChoice seller_choice(const CutoffTable& table, Belief mu0, double delay_weight) {
  if (!(delay_weight >= 0.0 && delay_weight <= 1.0)) {
    throw std::invalid_argument("delay weight must lie in [0, 1]");
  }
  SellerChoice choice{build_mechanism(table, mu0), std::nullopt, 1.0};
  const std::size_t n = choice.delay.delay_class;
  if (!table.degenerate() && n >= 1 && mu0.value() == table.cutoff(n).value()) {
    choice.hasten = build_mechanism_for_class(table, mu0, n - 1);
    choice.delay_weight = delay_weight;
  }
  return choice;
}

PostedPrice posted_price_view(const Mechanism& m, const CutoffTable& table) {
  const auto& p = table.params();
  if (m.delay_class == 0) {
    return {m.posted_price, 1.0, m.prior};
  }
  if (m.outcomes.size() != 2) throw ConsistencyError("delaying mechanism must have two outcomes");
  const Outcome& sale = m.outcomes[0];
  const Outcome& delay = m.outcomes[1];
  const PostedPrice view{sale.transfer, sale.prob_high, delay.posterior};

  const double rent = rent_for_class(table, delay_class(table, view.reject_posterior));
  const double miss = p.v_high - view.price - p.delta * rent;
  if (std::abs(miss) > kIdentityTolerance * p.v_high) {
    throw ConsistencyError("high type not indifferent at price " + std::to_string(view.price));
  }
  if (!(view.price > p.v_low)) {
    throw ConsistencyError("delaying price does not exclude the low type");
  }
  return view;
}

BindingResiduals check_binding_constraints(const Mechanism& m, const ValueSurface& s) {
  const auto& p = s.params();
  BindingResiduals r;
  for (const auto& o : m.outcomes) {
    r.participation_low += o.prob_low * (p.v_low * o.trade_prob - o.transfer);
    double payoff = p.v_high * o.trade_prob - o.transfer;
    if (o.trade_prob < 1.0) payoff += (1.0 - o.trade_prob) * p.delta * buyer_rent(s, o.posterior);
    r.incentive_high += (o.prob_high - o.prob_low) * payoff;
  }
  return r;
}

double expected_revenue(const Mechanism& m, const ValueSurface& s) {
  const auto& p = s.params();
  double total = 0.0;
  for (const auto& o : m.outcomes) {
    const double mass = m.prior.value() * o.prob_high + m.prior.complement() * o.prob_low;
    total += mass * o.trade_prob * o.transfer;
    if (o.trade_prob < 1.0) {
      total += mass * (1.0 - o.trade_prob) * p.delta * seller_revenue(s, o.posterior);
    }
  }
  return total;
}

}  // namespace coase
