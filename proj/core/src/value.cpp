#include "coase/value.hpp"

#include <cmath>
#include <string>

namespace coase {

namespace {

void require_interior_prior(Belief mu0) {
  if (mu0.certain_high()) throw std::domain_error("continuation values need a prior below 1");
}

// Weight on posterior 1 when splitting `x` between `base` and 1.
double sale_weight(Belief x, Belief base) {
  return (base.complement() - x.complement()) / base.complement();
}

double delay_weight(Belief x, Belief base) { return x.complement() / base.complement(); }

}  // namespace

double eval_R_branch(const ValueSurface& s, std::size_t n, Belief mu_prime, Belief mu0) {
  require_interior_prior(mu0);
  const auto& table = s.table();
  const auto& p = s.params();
  if (table.degenerate()) return mu_prime.value() * p.v_high;
  if (n == 0) return sale_value(p, mu_prime, mu0);
  if (n - 1 > table.last_index()) {
    throw TableExhausted("class " + std::to_string(n) + " branch needs cutoffs the table lacks");
  }

  // Walk the no-trade path mu' -> mu_bar_n-1 -> ... -> mu_bar_0 = 0,
  // collecting the discounted high-type sales along the way.
  Belief prev = table.cutoff(n - 1);
  double value = sale_weight(mu_prime, prev) * p.v_high;
  double scale = p.delta * delay_weight(mu_prime, prev);
  for (std::size_t k = n - 1; k >= 1; --k) {
    const Belief cur = table.cutoff(k);
    prev = table.cutoff(k - 1);
    value += scale * sale_weight(cur, prev) * p.v_high;
    scale *= p.delta * delay_weight(cur, prev);
  }
  return value + scale * virtual_value(p, mu0);
}

double eval_R(const ValueSurface& s, Belief mu_prime, Belief mu0) {
  require_interior_prior(mu0);
  if (s.table().degenerate()) return mu_prime.value() * s.params().v_high;
  if (mu_prime.certain_high()) return s.params().v_high;
  return eval_R_branch(s, delay_class(s.table(), mu_prime), mu_prime, mu0);
}

RDecomposition decompose_R(const ValueSurface& s, Belief mu_prime) {
  const auto& table = s.table();
  const double delta = s.params().delta;
  if (table.degenerate()) return {mu_prime.value(), 0.0};
  if (mu_prime.certain_high()) return {1.0, 0.0};

  const std::size_t n = delay_class(table, mu_prime);
  if (n == 0) return {mu_prime.value(), mu_prime.complement()};

  // alpha = (mu' - mu_{n-1}) / (1 - mu_{n-1})
  //       + (1 - mu') sum_{i=1}^{n-1} delta^(n-i) (mu_i - mu_{i-1}) / ((1 - mu_i)(1 - mu_{i-1}))
  double sum = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const Belief cur = table.cutoff(i);
    const Belief prev = table.cutoff(i - 1);
    const double step = (prev.complement() - cur.complement()) / (cur.complement() * prev.complement());
    sum += std::pow(delta, static_cast<double>(n - i)) * step;
  }
  const double alpha = sale_weight(mu_prime, table.cutoff(n - 1)) + mu_prime.complement() * sum;
  const double gamma = mu_prime.complement() * std::pow(delta, static_cast<double>(n));
  return {alpha, gamma};
}

double seller_revenue(const ValueSurface& s, Belief mu0) {
  require_interior_prior(mu0);
  if (s.table().degenerate()) return mu0.value() * s.params().v_high;
  return eval_R(s, mu0, mu0);
}

double rent_for_class(const CutoffTable& table, std::size_t n) {
  if (table.degenerate()) return 0.0;
  const auto& p = table.params();
  return std::pow(p.delta, static_cast<double>(n)) * p.delta_v();
}

double buyer_rent(const ValueSurface& s, Belief mu0) {
  return rent_for_class(s.table(), delay_class(s.table(), mu0));
}

RentInterval rent_correspondence(const ValueSurface& s, Belief mu0) {
  const auto& table = s.table();
  if (!table.degenerate()) {
    for (std::size_t i = 1; i < table.size(); ++i) {
      if (std::abs(mu0.value() - table.cutoff(i).value()) <= kBeliefSnap) {
        return {rent_for_class(table, i), rent_for_class(table, i - 1)};
      }
    }
  }
  const double r = buyer_rent(s, mu0);
  return {r, r};
}

}  // namespace coase
