#pragma once

#include <cstddef>

#include "coase/cutoffs.hpp"
#include "coase/market.hpp"

namespace coase {

/// Coefficients of R(mu', .) = alpha * v_high + gamma * vhat(mu0).
struct RDecomposition {
  double alpha = 0.0;  ///< discounted probability of selling to the high type
  double gamma = 0.0;  ///< discounted probability of selling to the low type
};

/// Closed interval of high-type rents.
struct RentInterval {
  double lo = 0.0;
  double hi = 0.0;
  [[nodiscard]] bool singleton() const noexcept { return lo == hi; }
};

/// The seller's continuation values R(mu', mu0) induced by the equilibrium
/// policy of a cutoff table: the value a seller with prior mu0 assigns to
/// handing his future self the posterior mu'.
class ValueSurface {
 public:
  explicit ValueSurface(CutoffTable table) : table_(std::move(table)) {}

  [[nodiscard]] const CutoffTable& table() const noexcept { return table_; }
  [[nodiscard]] const MarketParams& params() const noexcept { return table_.params(); }

 private:
  CutoffTable table_;
};

/// R(mu', mu0) by the delay recursion down the cutoff chain.
/// Throws std::domain_error at mu0 = 1.
double eval_R(const ValueSurface& s, Belief mu_prime, Belief mu0);

/// Value of the class-n branch of R extended affinely to any mu'. Equals
/// eval_R when n = delay_class(mu'); used for one-sided limits at cutoffs.
double eval_R_branch(const ValueSurface& s, std::size_t n, Belief mu_prime, Belief mu0);

/// (alpha, gamma) for posterior mu', with alpha from the explicit sum over
/// the cutoff chain rather than the recursion.
RDecomposition decompose_R(const ValueSurface& s, Belief mu_prime);

/// Seller equilibrium revenue R(mu0, mu0); mu0 * v_high when v_low = 0.
double seller_revenue(const ValueSurface& s, Belief mu0);

/// delta^n * (v_high - v_low) for the delay class n of mu0 (0 when v_low = 0).
/// The low type's rent is identically zero.
double buyer_rent(const ValueSurface& s, Belief mu0);

/// High-type rent for a seller in delay class n.
double rent_for_class(const CutoffTable& table, std::size_t n);

/// Rent set with indifference at the cutoffs: [delta^i dv, delta^(i-1) dv]
/// at mu_bar_i (matched within 1e-12), the singleton buyer_rent elsewhere.
RentInterval rent_correspondence(const ValueSurface& s, Belief mu0);

}  // namespace coase
