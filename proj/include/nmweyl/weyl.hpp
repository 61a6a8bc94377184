#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

#include "nmweyl/lattice.hpp"
#include "nmweyl/rootsys.hpp"

namespace nmweyl {

/// Element of the finite Weyl group, stored as its action on weights and on
/// coroots. Length is computed on construction.
class WeylElt {
 public:
  static WeylElt identity(const RootSystem& rs);
  static WeylElt simple_reflection(const RootSystem& rs, int i);
  static WeylElt reflection(const RootSystem& rs, int root_index);

  const RootSystem& root_system() const { return *rs_; }

  Weight act(const Weight& lambda) const;
  Coroot act(const Coroot& beta) const;

  WeylElt operator*(const WeylElt& other) const;
  WeylElt inverse() const;

  int length() const { return length_; }
  bool is_identity() const { return length_ == 0; }
  /// Indices of positive roots alpha with w(alpha) negative.
  std::vector<int> inversion_set() const;
  /// w(alpha_i) is negative, i.e. l(w s_i) < l(w).
  bool has_right_descent(int i) const;
  /// w^{-1}(alpha_i) is negative, i.e. l(s_i w) < l(w).
  bool has_left_descent(int i) const;

  /// w(rho); determines w uniquely.
  Weight rho_image() const { return act(rs_->rho()); }

  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.weight_action_ == b.weight_action_; }

 private:
  using Matrix = std::array<std::array<int, kMaxRank>, kMaxRank>;
  WeylElt(const RootSystem& rs, const Matrix& wa, const Matrix& ca);
  int compute_length() const;

  const RootSystem* rs_ = nullptr;
  Matrix weight_action_{};
  Matrix coroot_action_{};
  int length_ = 0;
};

enum class TieBreak { Smallest, Largest };

/// Reduced word s_{i_1} ... s_{i_k} of a finite Weyl element (letters in 0..n-1).
std::vector<int> reduced_word(const WeylElt& w, TieBreak tb = TieBreak::Smallest);
WeylElt weyl_from_word(const RootSystem& rs, const std::vector<int>& word);

/// Bruhat order u <= v, by the lifting property along a reduced word of v.
bool bruhat_leq(const WeylElt& u, const WeylElt& v);

std::size_t weyl_group_order(const RootSystem& rs);

/// All elements of W in length-lex order (length, then smallest reduced word).
/// Throws std::length_error if |W| would exceed `limit`.
std::vector<WeylElt> enumerate_weyl_group(const RootSystem& rs, std::size_t limit = 200000);

/// Orbit W.lambda, sorted.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda);

/// beta^vee = classical + deg * delta^vee.
struct AffineCoroot {
  Coroot classical;
  long deg = 0;

  bool is_positive(const RootSystem& rs) const {
    return deg > 0 || (deg == 0 && rs.is_positive_coroot(classical));
  }
  friend bool operator==(const AffineCoroot&, const AffineCoroot&) = default;
};

/// t_mu * sigma in W ⋉ P.
class ExtAffineElt {
 public:
  ExtAffineElt(Weight wt, WeylElt dir) : wt_(wt), dir_(std::move(dir)) {}
  static ExtAffineElt identity(const RootSystem& rs) { return {rs.zero_weight(), WeylElt::identity(rs)}; }
  static ExtAffineElt translation(const RootSystem& rs, const Weight& mu) { return {mu, WeylElt::identity(rs)}; }

  const Weight& wt() const { return wt_; }
  const WeylElt& dir() const { return dir_; }

  ExtAffineElt operator*(const ExtAffineElt& o) const { return {wt_ + dir_.act(o.wt_), dir_ * o.dir_}; }
  ExtAffineElt inverse() const {
    WeylElt inv = dir_.inverse();
    return {-inv.act(wt_), inv};
  }

  /// (t_mu sigma)(b + k delta) = sigma(b) + (k - <mu, sigma(b)>) delta.
  AffineCoroot act(const AffineCoroot& beta) const {
    Coroot c = dir_.act(beta.classical);
    return {c, beta.deg - pairing(wt_, c)};
  }

  /// Number of positive affine coroots sent to negative ones.
  int length() const;

  bool is_identity() const { return wt_.is_zero() && dir_.is_identity(); }
  friend bool operator==(const ExtAffineElt& a, const ExtAffineElt& b) { return a.wt_ == b.wt_ && a.dir_ == b.dir_; }

 private:
  Weight wt_;
  WeylElt dir_;
};

/// Affine reflection s_{beta^vee} = t_{-k beta} s_beta for beta^vee = b + k delta.
ExtAffineElt affine_reflection(const RootSystem& rs, const AffineCoroot& beta);

struct ReducedWord {
  int pi_index = 0;
  std::vector<int> letters;  // over {0, 1, ..., n}; 0 is the affine node

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

struct AntidominantData {
  Weight lambda_minus;
  WeylElt sigma;                // shortest with sigma(lambda_minus) = lambda
  std::vector<int> sigma_word;  // a reduced word of sigma
};

/// Reduced word of t_{lambda_-} assembled from words of sigma_lambda^{-1} and
/// m_lambda; letters [0, r) come from sigma_lambda^{-1}.
struct TranslationWord {
  ReducedWord word;
  int r = 0;
  ExtAffineElt element;
};

enum class OrderVariant { Standard, Dual };
enum class OrderRelation { Less, Greater, Equal, Incomparable };

/// Extended affine Weyl group W ⋉ P over a fixed root system, with the
/// length-zero subgroup Pi built once at construction.
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(std::shared_ptr<const RootSystem> rs);

  const RootSystem& root_system() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
  int rank() const { return rs_->rank(); }

  /// s_0 = t_theta s_theta and s_1..s_n.
  const ExtAffineElt& simple_reflection(int node) const { return simple_[node]; }
  /// alpha_0^vee = -theta^vee + delta^vee and alpha_i^vee.
  AffineCoroot simple_coroot(int node) const;

  const std::vector<ExtAffineElt>& pi_subgroup() const { return pi_; }
  /// j' with pi s_j pi^{-1} = s_{j'}.
  int node_image(int pi_index, int node) const { return node_perm_[pi_index][node]; }
  int node_preimage(int pi_index, int node) const { return node_perm_inv_[pi_index][node]; }

  /// Greedy right descent; ties broken by the smallest (or largest) node.
  ReducedWord reduced_word(const ExtAffineElt& a, TieBreak tb = TieBreak::Smallest) const;
  ExtAffineElt evaluate(const ReducedWord& w) const;
  /// beta_k = s_{i_l} ... s_{i_{k+1}} (alpha_{i_k}^vee). Throws on non-reduced words.
  std::vector<AffineCoroot> beta_sequence(const ReducedWord& w) const;

  AntidominantData antidominant_data(const Weight& lambda) const;
  /// m_lambda = t_lambda sigma_lambda.
  ExtAffineElt min_coset_rep(const Weight& lambda) const;
  TranslationWord translation_word(const Weight& lambda, TieBreak tb = TieBreak::Smallest) const;

  OrderRelation cherednik_cmp(const Weight& lambda, const Weight& mu, OrderVariant v = OrderVariant::Standard) const;
  /// lambda ≽ mu.
  bool cherednik_geq(const Weight& lambda, const Weight& mu, OrderVariant v = OrderVariant::Standard) const;
  /// {nu : nu ≼ mu}, sorted.
  std::vector<Weight> lower_set(const Weight& mu, OrderVariant v = OrderVariant::Standard) const;

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<ExtAffineElt> simple_;
  std::vector<ExtAffineElt> pi_;
  std::vector<std::vector<int>> node_perm_;
  std::vector<std::vector<int>> node_perm_inv_;
};

}  // namespace nmweyl
