#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "coase/cutoffs.hpp"
#include "coase/market.hpp"
#include "coase/value.hpp"

namespace coase {

/// Raised when a constructed object fails an identity it must satisfy by
/// construction.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The equilibrium policy at one prior: a two-point Bayes-plausible split
/// and the trade probability at each posterior. For class-0 priors both
/// posteriors equal the prior and the split is degenerate.
struct Split {
  Belief prior;
  std::size_t delay_class = 0;
  Belief posterior_delay;
  Belief posterior_sale;
  double weight_delay = 0.0;
  double weight_sale = 1.0;
  double q_delay = 1.0;
  double q_sale = 1.0;

  [[nodiscard]] bool degenerate() const noexcept { return posterior_delay == posterior_sale; }
};

/// One posterior in the support of a communication device.
struct Outcome {
  Belief posterior;
  double prob_low = 0.0;   ///< beta(posterior | v_low)
  double prob_high = 0.0;  ///< beta(posterior | v_high)
  double trade_prob = 0.0;
  double transfer = 0.0;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Canonical mechanism at a prior: device, allocation and transfers.
/// Class n >= 1 mechanisms list the sale posterior 1 first and the delay
/// posterior second; class 0 has a single outcome at the prior.
struct Mechanism {
  Belief prior;
  std::size_t delay_class = 0;
  std::vector<Outcome> outcomes;
  double posted_price = 0.0;

  /// Outcome whose posterior label equals `mu` exactly, if any.
  [[nodiscard]] const Outcome* find(Belief mu) const noexcept;

  friend bool operator==(const Mechanism&, const Mechanism&) = default;
};

/// Take-it-or-leave-it reading of a mechanism.
struct PostedPrice {
  double price = 0.0;
  double accept_prob_high = 1.0;
  Belief reject_posterior;  ///< belief after a rejection (the prior for class 0)
};

/// Price v_low + (1 - delta^n) dv charged by a class-n seller; v_high for
/// every class when v_low = 0.
double posted_price_for_class(const CutoffTable& table, std::size_t n);

Split equilibrium_split(const CutoffTable& table, Belief mu0);

Mechanism build_mechanism(const CutoffTable& table, Belief mu0);

/// Mechanism a class-n seller would offer at prior mu0. Requires
/// mu_bar_n-1 <= mu0 for n >= 1; n = delay_class(mu0) gives build_mechanism.
Mechanism build_mechanism_for_class(const CutoffTable& table, Belief mu0, std::size_t n);

/// At a cutoff prior mu_bar_i (i >= 1) the seller is indifferent between the
/// class-i mechanism and the class-(i-1) one and may mix. `delay_weight` is
/// the probability on the class-i (longer delay) mechanism. Off cutoffs
/// `hasten` is empty and the weight is 1.
struct SellerChoice {
  Mechanism delay;
  std::optional<Mechanism> hasten;
  double delay_weight = 1.0;
};

SellerChoice seller_choice(const CutoffTable& table, Belief mu0, double delay_weight = 1.0);

/// Throws ConsistencyError if v_high - price != delta * rent(reject
/// posterior) beyond 1e-12 * v_high, or if a delaying price does not
/// exceed v_low.
PostedPrice posted_price_view(const Mechanism& m, const CutoffTable& table);

struct BindingResiduals {
  double participation_low = 0.0;
  double incentive_high = 0.0;
};

/// Low-type participation surplus and the high type's truthful-minus-mimic
/// payoff, continuation rents from `s`. Both vanish for equilibrium mechanisms.
BindingResiduals check_binding_constraints(const Mechanism& m, const ValueSurface& s);

/// Expected stage revenue plus the discounted equilibrium revenue of the
/// seller who inherits each no-trade posterior.
double expected_revenue(const Mechanism& m, const ValueSurface& s);

}  // namespace coase
