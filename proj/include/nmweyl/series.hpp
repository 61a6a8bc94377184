#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nmweyl/lattice.hpp"
#include "nmweyl/rootsys.hpp"

namespace nmweyl {

/// Truncation order used to mark exact polynomials; arithmetic with a truncated
/// operand then truncates to the operand's order.
inline constexpr int kExactQ = 1 << 28;

/// Power series in q with integer coefficients, known modulo q^{qmax+1}.
class QSeries {
 public:
  explicit QSeries(int qmax = 0) : qmax_(qmax) {}
  QSeries(int qmax, std::vector<Integer> coeffs);
  static QSeries one(int qmax) { return monomial(qmax, 0); }
  static QSeries monomial(int qmax, int k, const Integer& c = 1);

  int qmax() const { return qmax_; }
  /// -1 for the zero series.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Lowest exponent with non-zero coefficient, -1 for zero.
  int valuation() const;
  bool is_zero() const { return c_.empty(); }
  const Integer& coeff(int k) const;
  const std::vector<Integer>& coeffs() const { return c_; }
  bool nonnegative() const;

  void add_to(int k, const Integer& c);
  QSeries truncated(int qmax) const;
  /// Relabels the order; raising it asserts the value is exact.
  QSeries as_qmax(int qmax) const;
  /// Multiplicative inverse; requires a unit constant term.
  QSeries inverse() const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator-(const QSeries& a);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  /// Equal through the smaller of the two truncation orders.
  friend bool operator==(const QSeries& a, const QSeries& b);

  std::string to_string() const;

 private:
  void trim();
  int qmax_ = 0;
  std::vector<Integer> c_;
};

/// Sum over (weight, q-degree) of integer coefficients, truncated at qmax:
/// a Laurent polynomial in x^P with coefficients in Z[[q]]/(q^{qmax+1}).
class QSeriesPoly {
 public:
  QSeriesPoly() = default;
  QSeriesPoly(int rank, int qmax) : rank_(rank), qmax_(qmax) {}
  static QSeriesPoly monomial(const Weight& wt, int qmax, int qdeg = 0, const Integer& c = 1);
  static QSeriesPoly constant(int rank, const QSeries& s);

  int rank() const { return rank_; }
  int qmax() const { return qmax_; }
  const std::map<Weight, QSeries>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Number of non-zero (weight, q-degree) coefficients.
  std::size_t num_terms() const;
  int max_qdegree() const;
  int max_abs_coord() const;

  QSeries coefficient(const Weight& wt) const;
  QSeries constant_term() const { return coefficient(Weight(rank_)); }
  void add_term(const Weight& wt, int qdeg, const Integer& c);
  void add(const Weight& wt, const QSeries& s);

  QSeriesPoly truncated(int qmax) const;
  /// Relabels the order; raising it asserts the value is exact.
  QSeriesPoly as_qmax(int qmax) const;
  QSeriesPoly restricted(int box_radius) const;
  /// Only the q^k coefficients, as a polynomial with qmax 0.
  QSeriesPoly q_slice(int k) const;
  /// Multiply by x^nu q^qdeg.
  QSeriesPoly shifted(const Weight& nu, int qdeg = 0) const;
  /// x^nu -> x^{f(nu)} for an additive bijection f.
  QSeriesPoly mapped(const std::function<Weight(const Weight&)>& f) const;
  QSeriesPoly inverted() const {
    return mapped([](const Weight& w) { return -w; });
  }
  /// In-place multiplication by (1 - q^qdeg x^nu).
  void mul_binomial(const Weight& nu, int qdeg);

  bool nonnegative() const;

  QSeriesPoly& operator+=(const QSeriesPoly& o);
  QSeriesPoly& operator-=(const QSeriesPoly& o);
  friend QSeriesPoly operator+(QSeriesPoly a, const QSeriesPoly& b) { return a += b; }
  friend QSeriesPoly operator-(QSeriesPoly a, const QSeriesPoly& b) { return a -= b; }
  friend QSeriesPoly operator-(const QSeriesPoly& a);
  friend QSeriesPoly operator*(const QSeriesPoly& a, const QSeriesPoly& b);
  friend QSeriesPoly operator*(const QSeries& s, const QSeriesPoly& p);
  friend bool operator==(const QSeriesPoly& a, const QSeriesPoly& b);

  std::string to_string() const;

 private:
  void absorb_qmax(int other) {
    if (other < qmax_) *this = truncated(other);
  }
  int rank_ = 0;
  int qmax_ = 0;
  std::map<Weight, QSeries> terms_;
};

/// (q;q)_infinity^power truncated.
QSeries q_pochhammer_power(int qmax, int power);

/// (q;q)_inf^n prod_{a>0} prod_{i>=0} (1 - q^i x^a)(1 - q^{i+1} x^{-a}), truncated.
/// Cached per (type, qmax).
std::shared_ptr<const QSeriesPoly> t0_kernel(const RootSystem& rs, int qmax);

/// <f, g>_0 = constant term of f g K.
QSeries inner0(const RootSystem& rs, const QSeriesPoly& f, const QSeriesPoly& g);
/// Constant term of h K for a fixed kernel; shared by the pairing routines.
QSeries pair_with_kernel(const QSeriesPoly& h, const QSeriesPoly& kernel);

/// Coefficients a_k of (q;q)^rk prod_{a>0}(1-x^a) prod_{a in Delta}(q x^a; q)_inf
/// for k = 0..qmax, each as a polynomial with qmax 0.
std::vector<QSeriesPoly> eta_product(const RootSystem& rs, int qmax);

/// x^lambda / [(q;q)^n prod_{a>0}(1-x^a) prod_{a in Delta}(q x^a;q)_inf],
/// exact for all weights with |coord| <= box_radius.
QSeriesPoly ch_projective(const RootSystem& rs, const Weight& lambda, int qmax, int box_radius);

/// All weights with every coordinate in [-radius, radius], sorted.
std::vector<Weight> weights_in_box(int rank, int radius);

}  // namespace nmweyl
