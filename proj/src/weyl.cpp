#include "nmweyl/weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace nmweyl {

namespace {

bool coroot_is_negative(const Coroot& c) {
  for (int i = 0; i < c.rank(); ++i) {
    if (c[i] < 0) return true;
    if (c[i] > 0) return false;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// WeylElt

WeylElt::WeylElt(const RootSystem& rs, const Matrix& wa, const Matrix& ca)
    : rs_(&rs), weight_action_(wa), coroot_action_(ca) {
  length_ = compute_length();
}

WeylElt WeylElt::identity(const RootSystem& rs) {
  Matrix id{};
  for (int i = 0; i < rs.rank(); ++i) id[i][i] = 1;
  return WeylElt(rs, id, id);
}

WeylElt WeylElt::simple_reflection(const RootSystem& rs, int i) {
  if (i < 0 || i >= rs.rank()) throw std::out_of_range("simple reflection index");
  const int n = rs.rank();
  Matrix m{}, c{};
  for (int j = 0; j < n; ++j) {
    m[j][j] = 1;
    c[j][j] = 1;
  }
  for (int j = 0; j < n; ++j) {
    m[j][i] -= rs.cartan(j, i);
    c[i][j] -= rs.cartan(j, i);
  }
  return WeylElt(rs, m, c);
}

WeylElt WeylElt::reflection(const RootSystem& rs, int root_index) {
  const Root& r = rs.positive_roots().at(root_index);
  const int n = rs.rank();
  Matrix m{}, c{};
  for (int j = 0; j < n; ++j)
    for (int l = 0; l < n; ++l) {
      m[j][l] = (j == l) - r.root[j] * r.coroot[l];
      c[j][l] = (j == l) - r.coroot[j] * r.root[l];
    }
  return WeylElt(rs, m, c);
}

Weight WeylElt::act(const Weight& lambda) const {
  const int n = rs_->rank();
  Weight r(n);
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += weight_action_[i][j] * lambda[j];
    r[i] = s;
  }
  return r;
}

Coroot WeylElt::act(const Coroot& beta) const {
  const int n = rs_->rank();
  Coroot r(n);
  for (int i = 0; i < n; ++i) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += coroot_action_[i][j] * beta[j];
    r[i] = s;
  }
  return r;
}

WeylElt WeylElt::operator*(const WeylElt& o) const {
  const int n = rs_->rank();
  Matrix m{}, c{};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int a = weight_action_[i][k], b = coroot_action_[i][k];
      if (a)
        for (int j = 0; j < n; ++j) m[i][j] += a * o.weight_action_[k][j];
      if (b)
        for (int j = 0; j < n; ++j) c[i][j] += b * o.coroot_action_[k][j];
    }
  return WeylElt(*rs_, m, c);
}

WeylElt WeylElt::inverse() const {
  const int n = rs_->rank();
  Matrix m{}, c{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m[i][j] = coroot_action_[j][i];
      c[i][j] = weight_action_[j][i];
    }
  return WeylElt(*rs_, m, c);
}

int WeylElt::compute_length() const {
  int len = 0;
  for (const Root& r : rs_->positive_roots())
    if (coroot_is_negative(act(r.coroot))) ++len;
  return len;
}

std::vector<int> WeylElt::inversion_set() const {
  std::vector<int> out;
  const auto& roots = rs_->positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (coroot_is_negative(act(roots[k].coroot))) out.push_back(static_cast<int>(k));
  return out;
}

bool WeylElt::has_right_descent(int i) const {
  // column i of the coroot action is w(alpha_i^vee)
  for (int j = 0; j < rs_->rank(); ++j) {
    if (coroot_action_[j][i] < 0) return true;
    if (coroot_action_[j][i] > 0) return false;
  }
  return false;
}

bool WeylElt::has_left_descent(int i) const {
  // w^{-1}(alpha_i^vee) has coroot-action matrix (weight_action)^T, so it is row i of weight_action.
  for (int j = 0; j < rs_->rank(); ++j) {
    if (weight_action_[i][j] < 0) return true;
    if (weight_action_[i][j] > 0) return false;
  }
  return false;
}

std::vector<int> reduced_word(const WeylElt& w, TieBreak tb) {
  const int n = w.root_system().rank();
  std::vector<int> rev;
  WeylElt cur = w;
  while (!cur.is_identity()) {
    int pick = -1;
    for (int k = 0; k < n; ++k) {
      int i = tb == TieBreak::Smallest ? k : n - 1 - k;
      if (cur.has_right_descent(i)) {
        pick = i;
        break;
      }
    }
    if (pick < 0) throw std::logic_error("no right descent on a non-identity Weyl element");
    rev.push_back(pick);
    cur = cur * WeylElt::simple_reflection(w.root_system(), pick);
  }
  return {rev.rbegin(), rev.rend()};
}

WeylElt weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElt w = WeylElt::identity(rs);
  for (int i : word) w = w * WeylElt::simple_reflection(rs, i);
  return w;
}

bool bruhat_leq(const WeylElt& u, const WeylElt& v) {
  if (u.length() > v.length()) return false;
  const RootSystem& rs = v.root_system();
  const std::vector<int> word = reduced_word(v);
  WeylElt cur = u;
  // Lifting property: if v s < v then u <= v iff (u s <= v s when u s < u, else u <= v s).
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    if (cur.has_right_descent(*it)) cur = cur * WeylElt::simple_reflection(rs, *it);
  return cur.is_identity();
}

std::size_t weyl_group_order(const RootSystem& rs) {
  // |W| = prod over positive roots of (ht + 1) / ht
  boost::multiprecision::cpp_rational r = 1;
  for (const Root& a : rs.positive_roots()) r *= boost::multiprecision::cpp_rational(a.height + 1, a.height);
  return static_cast<std::size_t>(boost::multiprecision::numerator(r));
}

std::vector<WeylElt> enumerate_weyl_group(const RootSystem& rs, std::size_t limit) {
  if (weyl_group_order(rs) > limit) throw std::length_error("Weyl group larger than enumeration limit");
  std::vector<WeylElt> elems{WeylElt::identity(rs)};
  std::set<Weight> seen{rs.rho()};
  std::vector<WeylElt> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(WeylElt::simple_reflection(rs, i));
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const WeylElt& s : gens) {
      WeylElt w = elems[head] * s;
      if (seen.insert(w.rho_image()).second) {
        if (elems.size() >= limit) throw std::length_error("Weyl group larger than enumeration limit");
        elems.push_back(w);
      }
    }
  }
  std::vector<std::pair<std::pair<int, std::vector<int>>, std::size_t>> keys;
  keys.reserve(elems.size());
  for (std::size_t k = 0; k < elems.size(); ++k) keys.push_back({{elems[k].length(), reduced_word(elems[k])}, k});
  std::sort(keys.begin(), keys.end());
  std::vector<WeylElt> out;
  out.reserve(elems.size());
  for (auto& [key, k] : keys) out.push_back(elems[k]);
  return out;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda) {
  std::set<Weight> orbit{lambda};
  std::vector<Weight> stack{lambda};
  while (!stack.empty()) {
    Weight w = stack.back();
    stack.pop_back();
    for (int i = 0; i < rs.rank(); ++i) {
      if (w[i] == 0) continue;
      Weight r = rs.reflect_simple(w, i);
      if (orbit.insert(r).second) stack.push_back(r);
    }
  }
  return {orbit.begin(), orbit.end()};
}

// ---------------------------------------------------------------------------
// Extended affine group

int ExtAffineElt::length() const {
  const RootSystem& rs = dir_.root_system();
  int len = 0;
  for (const Root& r : rs.positive_roots()) {
    for (int sign : {1, -1}) {
      const Coroot image = dir_.act(sign > 0 ? r.coroot : -r.coroot);
      const long c = pairing(wt_, image);
      const long kmin = sign > 0 ? 0 : 1;
      // image degree is k - c; count k >= kmin with k < c, or k == c and the image is negative.
      if (c > kmin) len += static_cast<int>(c - kmin);
      if (c >= kmin && coroot_is_negative(image)) ++len;
    }
  }
  return len;
}

ExtAffineElt affine_reflection(const RootSystem& rs, const AffineCoroot& beta) {
  int sign = 0;
  int idx = rs.coroot_index(beta.classical, &sign);
  if (idx < 0) throw std::invalid_argument("affine_reflection: classical part is not a coroot");
  const Weight root = sign * rs.positive_roots()[idx].root;
  return {-static_cast<int>(beta.deg) * root, WeylElt::reflection(rs, idx)};
}

AffineWeylGroup::AffineWeylGroup(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs)) {
  const RootSystem& R = *rs_;
  const int n = R.rank();
  const Root& theta = R.theta();
  int theta_idx = R.coroot_index(theta.coroot);
  simple_.push_back(ExtAffineElt(theta.root, WeylElt::reflection(R, theta_idx)));
  for (int i = 0; i < n; ++i) simple_.push_back(ExtAffineElt(R.zero_weight(), WeylElt::simple_reflection(R, i)));

  // Pi: one length-zero element per class of P/Q. Length zero forces the
  // translation part to be minuscule, so search the orbits of the fundamental
  // weights with <omega_i, theta^vee> = 1.
  pi_.push_back(ExtAffineElt::identity(R));
  for (int i = 0; i < n; ++i) {
    if (pairing(R.fundamental_weight(i), theta.coroot) != 1) continue;
    for (const Weight& nu : weyl_orbit(R, R.fundamental_weight(i))) {
      ExtAffineElt m = min_coset_rep(nu);
      if (m.length() != 0) continue;
      bool dup = std::any_of(pi_.begin(), pi_.end(), [&](const ExtAffineElt& p) { return p == m; });
      if (!dup) pi_.push_back(m);
    }
  }
  if (static_cast<int>(pi_.size()) != R.index_of_connection())
    throw std::logic_error("Pi table size does not match |P/Q|");

  for (const ExtAffineElt& p : pi_) {
    std::vector<int> perm(n + 1, -1), inv(n + 1, -1);
    const ExtAffineElt pinv = p.inverse();
    for (int j = 0; j <= n; ++j) {
      ExtAffineElt conj = p * simple_[j] * pinv;
      for (int k = 0; k <= n; ++k)
        if (conj == simple_[k]) perm[j] = k;
      if (perm[j] < 0) throw std::logic_error("Pi element does not permute simple reflections");
      inv[perm[j]] = j;
    }
    node_perm_.push_back(perm);
    node_perm_inv_.push_back(inv);
  }
}

AffineCoroot AffineWeylGroup::simple_coroot(int node) const {
  if (node == 0) return {-rs_->theta().coroot, 1};
  return {rs_->simple_coroot(node - 1), 0};
}

ReducedWord AffineWeylGroup::reduced_word(const ExtAffineElt& a, TieBreak tb) const {
  const int nodes = rank() + 1;
  std::vector<int> rev;
  ExtAffineElt cur = a;
  int len = cur.length();
  while (len > 0) {
    int pick = -1;
    for (int k = 0; k < nodes; ++k) {
      int i = tb == TieBreak::Smallest ? k : nodes - 1 - k;
      if (!cur.act(simple_coroot(i)).is_positive(*rs_)) {
        pick = i;
        break;
      }
    }
    if (pick < 0) throw std::logic_error("no affine right descent on a positive-length element");
    rev.push_back(pick);
    cur = cur * simple_[pick];
    --len;
  }
  for (std::size_t p = 0; p < pi_.size(); ++p)
    if (pi_[p] == cur) return {static_cast<int>(p), {rev.rbegin(), rev.rend()}};
  throw std::logic_error("length-zero element missing from the Pi table");
}

ExtAffineElt AffineWeylGroup::evaluate(const ReducedWord& w) const {
  ExtAffineElt e = pi_.at(w.pi_index);
  for (int i : w.letters) e = e * simple_.at(i);
  return e;
}

std::vector<AffineCoroot> AffineWeylGroup::beta_sequence(const ReducedWord& w) const {
  if (evaluate(w).length() != static_cast<int>(w.letters.size()))
    throw std::invalid_argument("beta_sequence: word is not reduced");
  const std::size_t l = w.letters.size();
  std::vector<AffineCoroot> betas(l);
  ExtAffineElt suffix = ExtAffineElt::identity(*rs_);  // s_{i_l} ... s_{i_{k+1}}
  for (std::size_t k = l; k-- > 0;) {
    betas[k] = suffix.act(simple_coroot(w.letters[k]));
    suffix = suffix * simple_[w.letters[k]];
  }
  return betas;
}

AntidominantData AffineWeylGroup::antidominant_data(const Weight& lambda) const {
  const RootSystem& R = *rs_;
  Weight mu = lambda;
  std::vector<int> word;
  for (;;) {
    int i = 0;
    while (i < R.rank() && mu[i] <= 0) ++i;
    if (i == R.rank()) break;
    mu = R.reflect_simple(mu, i);
    word.push_back(i);
  }
  return {mu, weyl_from_word(R, word), word};
}

ExtAffineElt AffineWeylGroup::min_coset_rep(const Weight& lambda) const {
  return {lambda, antidominant_data(lambda).sigma};
}

TranslationWord AffineWeylGroup::translation_word(const Weight& lambda, TieBreak tb) const {
  const AntidominantData ad = antidominant_data(lambda);
  const std::vector<int> sigma_inv = nmweyl::reduced_word(ad.sigma.inverse(), tb);
  const ReducedWord m = reduced_word(min_coset_rep(lambda), tb);
  ReducedWord t{m.pi_index, {}};
  for (int i : sigma_inv) t.letters.push_back(node_preimage(m.pi_index, i + 1));
  t.letters.insert(t.letters.end(), m.letters.begin(), m.letters.end());
  ExtAffineElt expect = ExtAffineElt::translation(*rs_, ad.lambda_minus);
  if (!(evaluate(t) == expect) || expect.length() != static_cast<int>(t.letters.size()))
    throw std::logic_error("assembled word of t_{lambda_-} is not a reduced word of it");
  return {t, static_cast<int>(sigma_inv.size()), expect};
}

bool AffineWeylGroup::cherednik_geq(const Weight& lambda, const Weight& mu, OrderVariant v) const {
  const AntidominantData a = antidominant_data(lambda), b = antidominant_data(mu);
  if (a.lambda_minus == b.lambda_minus) {
    return v == OrderVariant::Standard ? bruhat_leq(a.sigma, b.sigma) : bruhat_leq(b.sigma, a.sigma);
  }
  return rs_->in_positive_cone(b.lambda_minus - a.lambda_minus);
}

OrderRelation AffineWeylGroup::cherednik_cmp(const Weight& lambda, const Weight& mu, OrderVariant v) const {
  if (lambda == mu) return OrderRelation::Equal;
  if (cherednik_geq(lambda, mu, v)) return OrderRelation::Greater;
  if (cherednik_geq(mu, lambda, v)) return OrderRelation::Less;
  return OrderRelation::Incomparable;
}

std::vector<Weight> AffineWeylGroup::lower_set(const Weight& mu, OrderVariant v) const {
  const RootSystem& R = *rs_;
  const int n = R.rank();
  const AntidominantData top = antidominant_data(mu);
  // nu_- = mu_- + beta with beta in Q_+; nu_- antidominant implies
  // 0 <= beta <= -mu_- coordinatewise in the simple-root basis.
  // -mu_- is dominant, so its simple-root coordinates are non-negative
  // rationals with denominator dividing det; det * (-mu_-) lies in Q.
  std::vector<long> bound(n, 0);
  const auto scaled = R.root_coords(-R.index_of_connection() * top.lambda_minus);
  if (!scaled) throw std::logic_error("det * weight not in the root lattice");
  for (int i = 0; i < n; ++i) bound[i] = (*scaled)[i] / R.index_of_connection();
  std::vector<Weight> out;
  std::vector<long> c(n, 0);
  std::function<void(int, Weight)> rec = [&](int i, Weight cur) {
    if (i == n) {
      if (!R.is_antidominant(cur)) return;
      for (const Weight& nu : weyl_orbit(R, cur)) {
        if (cur == top.lambda_minus && !cherednik_geq(mu, nu, v)) continue;
        out.push_back(nu);
      }
      return;
    }
    const Weight a = R.simple_root(i);
    for (long k = 0; k <= bound[i]; ++k) {
      rec(i + 1, cur);
      cur += a;
    }
  };
  rec(0, top.lambda_minus);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nmweyl
