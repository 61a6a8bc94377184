#include "nmweyl/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace nmweyl {

namespace {

using Rational = boost::multiprecision::cpp_rational;

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

void link(std::vector<std::vector<int>>& a, int i, int j) {
  a[i][j] = -1;
  a[j][i] = -1;
}

}  // namespace

CartanType CartanType::parse(std::string_view name) {
  if (name.size() < 2) throw std::invalid_argument("bad Cartan type '" + std::string(name) + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  auto pos = std::string_view("ABCDEFG").find(f);
  if (pos == std::string_view::npos)
    throw std::invalid_argument("unknown Cartan family in '" + std::string(name) + "'");
  int rank = 0;
  for (char c : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad Cartan rank in '" + std::string(name) + "'");
    rank = rank * 10 + (c - '0');
    if (rank > 100) throw std::invalid_argument("bad Cartan rank in '" + std::string(name) + "'");
  }
  CartanType t{static_cast<Family>(pos), rank};
  t.validate();
  return t;
}

void CartanType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B:
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (ok && rank > kMaxRank) ok = false;
  if (!ok) throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for type " + family_letter(family));
}

std::string CartanType::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

std::vector<std::vector<int>> cartan_matrix(const CartanType& type) {
  type.validate();
  const int n = type.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (type.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case Family::B:  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case Family::C:  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case Family::E:
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case Family::F:  // alpha_1, alpha_2 long
      link(a, 0, 1);
      link(a, 1, 2);
      link(a, 2, 3);
      a[2][1] = -2;
      break;
    case Family::G:  // alpha_1 short
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

RootSystem::RootSystem(CartanType type) : type_(type), cartan_(cartan_matrix(type)) {
  const int n = rank();

  // Symmetrizer: (alpha_i|alpha_i) up to a common scale; propagate along the
  // connected Dynkin diagram using a_ij (alpha_i|alpha_i) = a_ji (alpha_j|alpha_j).
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i] != 0 && d[j] == 0 && cartan_[i][j] != 0) {
          d[j] = d[i] * cartan_[i][j] / cartan_[j][i];
          changed = true;
        }
  }
  Rational dmin = *std::min_element(d.begin(), d.end());
  simple_norm_.resize(n);
  for (int i = 0; i < n; ++i) {
    Rational r = d[i] / dmin;
    if (denominator(r) != 1) throw std::logic_error("non-integral symmetrizer");
    simple_norm_[i] = static_cast<int>(numerator(r));
  }
  max_norm_ = *std::max_element(simple_norm_.begin(), simple_norm_.end());

  // Adjugate and determinant of the Cartan matrix, used for Q-membership tests.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = cartan_[i][j];
    m[i][n + i] = 1;
  }
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (m[p][c] == 0) ++p;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Rational piv = m[c][c];
    for (auto& v : m[c]) v /= piv;
    for (int r = 0; r < n; ++r)
      if (r != c && m[r][c] != 0) {
        Rational f = m[r][c];
        for (int k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
      }
  }
  det_ = static_cast<int>(numerator(det));
  adj_.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = m[i][n + j] * det;
      if (denominator(v) != 1) throw std::logic_error("non-integral adjugate");
      adj_[i][j] = static_cast<long>(numerator(v));
    }

  enumerate_roots();
  check_against_orbit_closure();
}

void RootSystem::enumerate_roots() {
  const int n = rank();
  std::map<std::vector<int>, int> index;
  auto add = [&](const std::vector<int>& c) {
    Root r;
    r.simple = c;
    r.root = Weight(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.root[i] += c[j] * cartan_[i][j];
    for (int v : c) r.height += v;
    // 2 (beta|beta) in units of the shortest root: sum c_j c_k a_jk d_j.
    long n2 = 0;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) n2 += static_cast<long>(c[j]) * c[k] * cartan_[j][k] * simple_norm_[j];
    r.norm = static_cast<int>(n2 / 2);
    r.coroot = Coroot(n);
    for (int j = 0; j < n; ++j) {
      long num = static_cast<long>(c[j]) * simple_norm_[j];
      if (num % r.norm != 0) throw std::logic_error("non-integral coroot");
      r.coroot[j] = static_cast<int>(num / r.norm);
    }
    index[c] = static_cast<int>(positive_.size());
    positive_.push_back(std::move(r));
  };

  std::vector<int> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    simple_index_.push_back(static_cast<int>(positive_.size()));
    layer.push_back(static_cast<int>(positive_.size()));
    add(c);
  }
  while (!layer.empty()) {
    std::vector<int> next;
    for (int idx : layer) {
      const std::vector<int> c = positive_[idx].simple;
      for (int i = 0; i < n; ++i) {
        int p = 0;
        for (;;) {
          std::vector<int> down = c;
          down[i] -= p + 1;
          if (!index.count(down)) break;
          ++p;
        }
        int pair = positive_[idx].root[i];
        if (p - pair <= 0) continue;
        std::vector<int> up = c;
        up[i] += 1;
        if (index.count(up)) continue;
        next.push_back(static_cast<int>(positive_.size()));
        add(up);
      }
    }
    layer = std::move(next);
  }

  rho_ = Weight(n);
  for (int i = 0; i < n; ++i) rho_[i] = 1;
  two_rho_check_ = Coroot(n);
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    two_rho_.push_back(static_cast<int>(2 * pairing(rho_, positive_[k].coroot)));
    two_rho_check_ += positive_[k].coroot;
    coroot_lookup_[positive_[k].coroot] = static_cast<int>(k);
  }

  const int min_norm = 1;
  int best_short = -1, best = 0;
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    const Root& r = positive_[k];
    if (r.norm == min_norm && (best_short < 0 || r.height > positive_[best_short].height))
      best_short = static_cast<int>(k);
    if (r.height > positive_[best].height) best = static_cast<int>(k);
  }
  theta_index_ = best_short;
  highest_root_index_ = best;
  dual_coxeter_ = 1 + static_cast<int>(pairing(rho_, positive_[best].coroot));
}

// Independent pass: W-orbit of the simple roots under simple reflections must
// reproduce exactly the roots found by the string closure.
void RootSystem::check_against_orbit_closure() const {
  std::set<Weight> orbit;
  std::vector<Weight> stack;
  for (int i = 0; i < rank(); ++i) {
    Weight a = simple_root(i);
    if (orbit.insert(a).second) stack.push_back(a);
  }
  while (!stack.empty()) {
    Weight w = stack.back();
    stack.pop_back();
    for (int i = 0; i < rank(); ++i) {
      Weight r = reflect_simple(w, i);
      if (orbit.insert(r).second) stack.push_back(r);
    }
  }
  std::set<Weight> closure;
  for (const Root& r : positive_) {
    closure.insert(r.root);
    closure.insert(-r.root);
    if (pairing(r.root, r.coroot) != 2) throw std::logic_error("root/coroot pairing is not 2");
  }
  if (orbit != closure) throw std::logic_error("root closure disagrees with Weyl orbit of simple roots");
}

int RootSystem::coroot_index(const Coroot& beta, int* sign) const {
  auto it = coroot_lookup_.find(beta);
  if (it != coroot_lookup_.end()) {
    if (sign) *sign = 1;
    return it->second;
  }
  it = coroot_lookup_.find(-beta);
  if (it != coroot_lookup_.end()) {
    if (sign) *sign = -1;
    return it->second;
  }
  return -1;
}

bool RootSystem::is_positive_coroot(const Coroot& beta) const { return coroot_lookup_.count(beta) > 0; }

std::optional<std::vector<long>> RootSystem::root_coords(const Weight& nu) const {
  const int n = rank();
  if (nu.rank() != n) throw std::invalid_argument("root_coords: rank mismatch");
  std::vector<long> c(n, 0);
  for (int i = 0; i < n; ++i) {
    long s = 0;
    for (int j = 0; j < n; ++j) s += adj_[i][j] * nu[j];
    if (s % det_ != 0) return std::nullopt;
    c[i] = s / det_;
  }
  return c;
}

bool RootSystem::in_positive_cone(const Weight& nu) const {
  auto c = root_coords(nu);
  if (!c) return false;
  return std::all_of(c->begin(), c->end(), [](long v) { return v >= 0; });
}

long RootSystem::height(const Weight& nu) const { return pairing(nu, two_rho_check_); }

Weight RootSystem::reflect_simple(const Weight& lambda, int i) const {
  Weight r = lambda;
  const int k = lambda[i];
  if (k == 0) return r;
  for (int j = 0; j < rank(); ++j) r[j] -= k * cartan_[j][i];
  return r;
}

Coroot RootSystem::reflect_simple(const Coroot& beta, int i) const {
  // beta - <alpha_i, beta> alpha_i^vee
  long k = 0;
  for (int j = 0; j < rank(); ++j) k += static_cast<long>(cartan_[j][i]) * beta[j];
  Coroot r = beta;
  r[i] -= static_cast<int>(k);
  return r;
}

Weight RootSystem::reflect(const Weight& lambda, int root_index) const {
  const Root& r = positive_[root_index];
  return lambda - static_cast<int>(pairing(lambda, r.coroot)) * r.root;
}

}  // namespace nmweyl
