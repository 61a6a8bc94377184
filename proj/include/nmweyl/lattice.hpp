#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nmweyl {

using Integer = boost::multiprecision::cpp_int;

inline constexpr int kMaxRank = 8;

/// Fixed-capacity integer vector of a lattice of rank <= kMaxRank.
///
/// The tag keeps weights (fundamental-weight coordinates) and coroots
/// (simple-coroot coordinates) from being mixed up; the only bridge between
/// the two is `pairing`.
template <class Tag>
class LatticeVec {
 public:
  LatticeVec() = default;
  explicit LatticeVec(int rank) : rank_(static_cast<std::int8_t>(rank)) {
    if (rank < 0 || rank > kMaxRank) throw std::invalid_argument("lattice rank out of range");
  }
  LatticeVec(std::initializer_list<int> coords) : LatticeVec(static_cast<int>(coords.size())) {
    int i = 0;
    for (int v : coords) c_[i++] = v;
  }
  explicit LatticeVec(std::span<const int> coords) : LatticeVec(static_cast<int>(coords.size())) {
    for (int i = 0; i < rank_; ++i) c_[i] = coords[i];
  }
  static LatticeVec unit(int rank, int i) {
    LatticeVec v(rank);
    v.c_[i] = 1;
    return v;
  }

  int rank() const { return rank_; }
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }

  bool is_zero() const {
    for (int i = 0; i < rank_; ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  bool all_nonneg() const {
    for (int i = 0; i < rank_; ++i)
      if (c_[i] < 0) return false;
    return true;
  }
  bool all_nonpos() const {
    for (int i = 0; i < rank_; ++i)
      if (c_[i] > 0) return false;
    return true;
  }
  int max_abs() const {
    int m = 0;
    for (int i = 0; i < rank_; ++i) m = std::max(m, c_[i] < 0 ? -c_[i] : c_[i]);
    return m;
  }

  LatticeVec& operator+=(const LatticeVec& o) {
    check_rank(o);
    for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  LatticeVec& operator-=(const LatticeVec& o) {
    check_rank(o);
    for (int i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend LatticeVec operator+(LatticeVec a, const LatticeVec& b) { return a += b; }
  friend LatticeVec operator-(LatticeVec a, const LatticeVec& b) { return a -= b; }
  friend LatticeVec operator-(LatticeVec a) {
    for (int i = 0; i < a.rank_; ++i) a.c_[i] = -a.c_[i];
    return a;
  }
  friend LatticeVec operator*(int k, LatticeVec a) {
    for (int i = 0; i < a.rank_; ++i) a.c_[i] *= k;
    return a;
  }

  friend bool operator==(const LatticeVec& a, const LatticeVec& b) {
    if (a.rank_ != b.rank_) return false;
    for (int i = 0; i < a.rank_; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }
  // Lexicographic on coordinates; this is the canonical serialization order.
  friend std::strong_ordering operator<=>(const LatticeVec& a, const LatticeVec& b) {
    if (a.rank_ != b.rank_) return a.rank_ <=> b.rank_;
    for (int i = 0; i < a.rank_; ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
    return std::strong_ordering::equal;
  }

  std::vector<int> to_vector() const { return {c_.begin(), c_.begin() + rank_}; }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(rank_);
    for (int i = 0; i < rank_; ++i) h = h * 1000003u ^ static_cast<std::size_t>(c_[i] + 0x9e37);
    return h;
  }

  friend std::ostream& operator<<(std::ostream& os, const LatticeVec& v) {
    os << '[';
    for (int i = 0; i < v.rank_; ++i) os << (i ? "," : "") << v.c_[i];
    return os << ']';
  }

 private:
  void check_rank(const LatticeVec& o) const {
    if (o.rank_ != rank_) throw std::invalid_argument("lattice rank mismatch");
  }

  std::array<std::int32_t, kMaxRank> c_{};
  std::int8_t rank_ = 0;
};

struct WeightTag {};
struct CorootTag {};

/// Element of the weight lattice P in fundamental-weight coordinates.
using Weight = LatticeVec<WeightTag>;
/// Element of the coroot lattice in simple-coroot coordinates.
using Coroot = LatticeVec<CorootTag>;

/// Canonical pairing <lambda, beta^vee>; a plain dot product because
/// <omega_i, alpha_j^vee> = delta_ij.
inline long pairing(const Weight& lambda, const Coroot& beta) {
  if (lambda.rank() != beta.rank()) throw std::invalid_argument("pairing: rank mismatch");
  long s = 0;
  for (int i = 0; i < lambda.rank(); ++i) s += static_cast<long>(lambda[i]) * beta[i];
  return s;
}

template <class Tag>
std::string to_string(const LatticeVec<Tag>& v) {
  std::string s = "[";
  for (int i = 0; i < v.rank(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace nmweyl

template <class Tag>
struct std::hash<nmweyl::LatticeVec<Tag>> {
  std::size_t operator()(const nmweyl::LatticeVec<Tag>& v) const noexcept { return v.hash(); }
};
