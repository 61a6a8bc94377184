#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nmweyl/lattice.hpp"

namespace nmweyl {

enum class Family { A, B, C, D, E, F, G };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  /// Parses names like "A2", "g2", "E8". Throws std::invalid_argument.
  static CartanType parse(std::string_view name);
  /// Throws std::invalid_argument when the rank is not allowed for the family.
  void validate() const;
  std::string name() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

struct Root {
  Weight root;                 // fundamental-weight coordinates
  Coroot coroot;               // simple-coroot coordinates
  std::vector<int> simple;     // coordinates in the simple-root basis
  int height = 0;
  int norm = 0;                // (alpha|alpha), scaled so the shortest simple root has norm 1
};

/// Finite root datum of one Cartan type. Immutable once built.
///
/// Convention: cartan(i, j) = <alpha_j, alpha_i^vee>, so the simple root
/// alpha_j has fundamental-weight coordinates given by column j.
class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  static std::shared_ptr<const RootSystem> build(CartanType type) {
    return std::make_shared<const RootSystem>(type);
  }
  static std::shared_ptr<const RootSystem> build(std::string_view name) {
    return build(CartanType::parse(name));
  }

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  int cartan(int i, int j) const { return cartan_[i][j]; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  int num_positive_roots() const { return static_cast<int>(positive_.size()); }

  Weight simple_root(int i) const { return positive_[simple_index_[i]].root; }
  Coroot simple_coroot(int i) const { return Coroot::unit(rank(), i); }
  Weight fundamental_weight(int i) const { return Weight::unit(rank(), i); }
  Weight zero_weight() const { return Weight(rank()); }
  Weight rho() const { return rho_; }

  /// Highest short root and its coroot (the highest coroot).
  const Root& theta() const { return positive_[theta_index_]; }
  /// Highest root (long); used for the dual Coxeter number.
  const Root& highest_root() const { return positive_[highest_root_index_]; }
  int dual_coxeter_number() const { return dual_coxeter_; }
  /// |P/Q| = det of the Cartan matrix.
  int index_of_connection() const { return det_; }

  /// <2 rho, alpha^vee> for the positive root with the given index.
  int two_rho_pairing(int root_index) const { return two_rho_[root_index]; }

  /// Index of the positive root whose coroot is +-beta; sign written to *sign.
  /// Returns -1 when beta is not a coroot.
  int coroot_index(const Coroot& beta, int* sign = nullptr) const;
  bool is_positive_coroot(const Coroot& beta) const;

  /// Simple-root coordinates of nu when nu lies in the root lattice Q.
  std::optional<std::vector<long>> root_coords(const Weight& nu) const;
  /// nu in Q_+ (non-negative integer combination of simple roots).
  bool in_positive_cone(const Weight& nu) const;
  /// <nu, 2 rho^vee>; strictly positive on non-zero elements of Q_+.
  long height(const Weight& nu) const;

  /// (alpha_i|alpha_i) in units of the shortest root; long roots have max_norm().
  int simple_norm(int i) const { return simple_norm_[i]; }
  int max_norm() const { return max_norm_; }

  Weight reflect_simple(const Weight& lambda, int i) const;
  Coroot reflect_simple(const Coroot& beta, int i) const;
  Weight reflect(const Weight& lambda, int root_index) const;

  bool is_dominant(const Weight& lambda) const { return lambda.all_nonneg(); }
  bool is_antidominant(const Weight& lambda) const { return lambda.all_nonpos(); }

 private:
  void enumerate_roots();
  void check_against_orbit_closure() const;

  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> simple_norm_;
  int max_norm_ = 1;
  std::vector<Root> positive_;
  std::vector<int> simple_index_;
  std::vector<int> two_rho_;
  Weight rho_;
  int theta_index_ = 0;
  int highest_root_index_ = 0;
  int dual_coxeter_ = 0;
  int det_ = 1;
  std::vector<std::vector<long>> adj_;  // adjugate of the Cartan matrix
  Coroot two_rho_check_;
  std::unordered_map<Coroot, int> coroot_lookup_;
};

/// Standard Bourbaki-numbered Cartan matrix, entry (i,j) = <alpha_j, alpha_i^vee>.
std::vector<std::vector<int>> cartan_matrix(const CartanType& type);

}  // namespace nmweyl
