#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "nmweyl/alcove.hpp"
#include "nmweyl/series.hpp"
#include "nmweyl/weyl.hpp"

namespace nmweyl {

/// Thrown when the dual solve has not stabilized at the requested qmax.
class NotStabilized : public std::runtime_error {
 public:
  explicit NotStabilized(const std::string& what) : std::runtime_error(what) {}
};

/// Both routes to m_{lambda,mu}(q).
struct MCoeff {
  QSeries from_dual;     // y^lambda coefficient of F_mu
  QSeries from_pairing;  // <ch P_lambda, G_mu>_0
  int box = 0;           // box used for ch P_lambda in the pairing route
  bool agree() const { return from_dual == from_pairing; }
};

/// The t = 0 family E_lambda(x,q,0) and the dual family
/// G_mu(x,q) = E_mu(x^{-1},q^{-1},inf) over one root system, with caches.
/// All members are safe to call concurrently.
class EFamily {
 public:
  explicit EFamily(std::shared_ptr<const RootSystem> rs);
  explicit EFamily(std::string_view cartan) : EFamily(RootSystem::build(cartan)) {}

  const RootSystem& root_system() const { return *rs_; }
  const AffineWeylGroup& group() const { return *group_; }

  /// Exact E_lambda(x,q,0) from the alcove paths of m_lambda (qmax = kExactQ).
  const QSeriesPoly& e_t0(const Weight& lambda) const;
  QSeriesPoly e_t0(const Weight& lambda, int qmax) const { return e_t0(lambda).truncated(qmax); }
  /// Uncached, with a chosen reduced word of m_lambda.
  QSeriesPoly e_t0_with(const Weight& lambda, TieBreak tb) const;
  /// Same polynomial through the restricted paths of the word of t_{lambda_-}.
  QSeriesPoly e_t0_restricted(const Weight& lambda) const;

  /// N_i = -<lambda_-, alpha_i^vee> - [sigma_lambda(alpha_i) < 0].
  std::vector<int> norm_exponents(const Weight& lambda) const;
  /// (q)_lambda as an exact polynomial (qmax = kExactQ).
  QSeries q_norm(const Weight& lambda) const;

  /// {nu : nu ≺ mu} in the order the solver uses (larger elements first).
  std::vector<Weight> strict_lower_set(const Weight& mu) const;

  /// G_mu modulo q^{qmax+1}, from orthogonality against E_nu, nu ≺ mu.
  QSeriesPoly dual_truncated(const Weight& mu, int qmax) const;
  /// G_mu, certified by re-solving at qmax + 2; throws NotStabilized.
  QSeriesPoly dual_t_inf(const Weight& mu, int qmax) const;
  /// F_mu(y) = G_mu(y^{-1}).
  QSeriesPoly f_t_inf(const Weight& mu, int qmax) const { return dual_t_inf(mu, qmax).inverted(); }

  /// m_{lambda,mu}(q) by the y-coefficient of F_mu and by <ch P_lambda, G_mu>_0.
  MCoeff m_coeff(const Weight& lambda, const Weight& mu, int qmax) const;
  /// Only the first route, from the truncated dual.
  QSeries m_coeff_dual(const Weight& lambda, const Weight& mu, int qmax) const;

  /// Coefficients c_mu with f = sum c_mu E_mu(x,q,0) modulo q^{qmax+1}.
  std::map<Weight, QSeries> expand_in_e_basis(const QSeriesPoly& f) const;

  /// ch P_lambda exact on the box; reuses a cached expansion on a larger box.
  QSeriesPoly projective(const Weight& lambda, int qmax, int box) const;

  /// <E_nu, x^{-nu'}>_0 at the given truncation (cached).
  QSeries gram_entry(const Weight& nu, const Weight& nu_prime, int qmax) const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::shared_ptr<const AffineWeylGroup> group_;

  mutable std::mutex mu_;
  mutable std::map<Weight, std::shared_ptr<const QSeriesPoly>> e_cache_;
  mutable std::map<std::pair<Weight, int>, std::shared_ptr<const QSeriesPoly>> dual_cache_;
  mutable std::map<std::tuple<Weight, Weight, int>, QSeries> gram_cache_;
  mutable std::map<std::pair<Weight, int>, std::pair<int, std::shared_ptr<const QSeriesPoly>>> proj_cache_;
};

/// E_lambda(x,0,0) through Demazure operators applied to x^{lambda_+}.
QSeriesPoly key_polynomial(const RootSystem& rs, const Weight& lambda);
/// pi_i (f - x^{-alpha_i} s_i f)/(1 - x^{-alpha_i}) on a q-free or q-graded polynomial.
QSeriesPoly demazure_operator(const RootSystem& rs, const QSeriesPoly& f, int i);

}  // namespace nmweyl
