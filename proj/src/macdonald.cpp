#include "nmweyl/macdonald.hpp"

#include <algorithm>
#include <sstream>

namespace nmweyl {

using Rational = boost::multiprecision::cpp_rational;

EFamily::EFamily(std::shared_ptr<const RootSystem> rs)
    : rs_(std::move(rs)), group_(std::make_shared<const AffineWeylGroup>(rs_)) {}

const QSeriesPoly& EFamily::e_t0(const Weight& lambda) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = e_cache_.find(lambda);
    if (it != e_cache_.end()) return *it->second;
  }
  const ReducedWord w = group_->reduced_word(group_->min_coset_rep(lambda));
  const long bound = path_qdeg_bound(*group_, w, 0);
  auto e = std::make_shared<const QSeriesPoly>(path_sum(*group_, w, 0, static_cast<int>(bound)).as_qmax(kExactQ));
  if (!(e->coefficient(lambda) == QSeries::one(kExactQ))) throw std::logic_error("E_lambda: leading coefficient is not 1");
  std::lock_guard<std::mutex> lock(mu_);
  return *e_cache_.emplace(lambda, e).first->second;
}

QSeriesPoly EFamily::e_t0_with(const Weight& lambda, TieBreak tb) const {
  const ReducedWord w = group_->reduced_word(group_->min_coset_rep(lambda), tb);
  return path_sum(*group_, w, 0, static_cast<int>(path_qdeg_bound(*group_, w, 0))).as_qmax(kExactQ);
}

QSeriesPoly EFamily::e_t0_restricted(const Weight& lambda) const {
  const TranslationWord tw = group_->translation_word(lambda);
  return path_sum(*group_, tw.word, tw.r, static_cast<int>(path_qdeg_bound(*group_, tw.word, tw.r))).as_qmax(kExactQ);
}

std::vector<int> EFamily::norm_exponents(const Weight& lambda) const {
  const AntidominantData ad = group_->antidominant_data(lambda);
  std::vector<int> n(rs_->rank());
  for (int i = 0; i < rs_->rank(); ++i) n[i] = -ad.lambda_minus[i] - (ad.sigma.has_right_descent(i) ? 1 : 0);
  return n;
}

QSeries EFamily::q_norm(const Weight& lambda) const {
  const std::vector<int> n = norm_exponents(lambda);
  int deg = 0;
  for (int k : n) deg += k * (k + 1) / 2;
  QSeries r = QSeries::one(deg);
  for (int k : n)
    for (int j = 1; j <= k; ++j) r = r - QSeries::monomial(deg, j) * r;
  return r.as_qmax(kExactQ);
}

std::vector<Weight> EFamily::strict_lower_set(const Weight& mu) const {
  std::vector<Weight> all = group_->lower_set(mu);
  std::vector<std::tuple<long, int, Weight>> keyed;
  for (const Weight& nu : all) {
    if (nu == mu) continue;
    const AntidominantData ad = group_->antidominant_data(nu);
    keyed.emplace_back(rs_->height(ad.lambda_minus), ad.sigma.length(), nu);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Weight> out;
  for (auto& k : keyed) out.push_back(std::get<2>(k));
  return out;
}

QSeries EFamily::gram_entry(const Weight& nu, const Weight& nu_prime, int qmax) const {
  const auto key = std::make_tuple(nu, nu_prime, qmax);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = gram_cache_.find(key);
    if (it != gram_cache_.end()) return it->second;
  }
  const QSeriesPoly& e = e_t0(nu);
  auto kernel = t0_kernel(*rs_, qmax);
  const auto& kt = kernel->terms();
  QSeries r(qmax);
  // constant term of E_nu x^{-nu'} K
  for (const auto& [w, s] : e.terms()) {
    auto it = kt.find(nu_prime - w);
    if (it != kt.end()) r += s * it->second;
  }
  std::lock_guard<std::mutex> lock(mu_);
  return gram_cache_.emplace(key, r).first->second;
}

namespace {

// Solves A0 c = r over Z given a pre-analysed A0.
class ConstantSolver {
 public:
  explicit ConstantSolver(std::vector<std::vector<Integer>> a) : a_(std::move(a)), m_(a_.size()) {
    lower_ = upper_ = true;
    for (std::size_t i = 0; i < m_; ++i) {
      if (a_[i][i] != 1 && a_[i][i] != -1) lower_ = upper_ = false;
      for (std::size_t j = 0; j < m_; ++j) {
        if (j > i && a_[i][j] != 0) lower_ = false;
        if (j < i && a_[i][j] != 0) upper_ = false;
      }
    }
    if (!lower_ && !upper_) invert_rational();
  }

  std::vector<Integer> solve(const std::vector<Integer>& r) const {
    std::vector<Integer> c(m_);
    if (lower_) {
      for (std::size_t i = 0; i < m_; ++i) {
        Integer s = r[i];
        for (std::size_t j = 0; j < i; ++j) s -= a_[i][j] * c[j];
        c[i] = s * a_[i][i];
      }
    } else if (upper_) {
      for (std::size_t i = m_; i-- > 0;) {
        Integer s = r[i];
        for (std::size_t j = i + 1; j < m_; ++j) s -= a_[i][j] * c[j];
        c[i] = s * a_[i][i];
      }
    } else {
      for (std::size_t i = 0; i < m_; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < m_; ++j) s += inv_[i][j] * r[j];
        if (boost::multiprecision::denominator(s) != 1) throw std::logic_error("dual solve: non-integral solution");
        c[i] = boost::multiprecision::numerator(s);
      }
    }
    return c;
  }

 private:
  void invert_rational() {
    std::vector<std::vector<Rational>> a(m_, std::vector<Rational>(2 * m_));
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) a[i][j] = a_[i][j];
      a[i][m_ + i] = 1;
    }
    for (std::size_t col = 0; col < m_; ++col) {
      std::size_t piv = col;
      while (piv < m_ && a[piv][col] == 0) ++piv;
      if (piv == m_) throw std::logic_error("dual solve: singular leading Gram matrix");
      std::swap(a[piv], a[col]);
      const Rational p = a[col][col];
      for (auto& x : a[col]) x /= p;
      for (std::size_t i = 0; i < m_; ++i) {
        if (i == col || a[i][col] == 0) continue;
        const Rational f = a[i][col];
        for (std::size_t j = col; j < 2 * m_; ++j) a[i][j] -= f * a[col][j];
      }
    }
    inv_.assign(m_, std::vector<Rational>(m_));
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j) inv_[i][j] = a[i][m_ + j];
  }

  std::vector<std::vector<Integer>> a_;
  std::size_t m_;
  bool lower_ = false, upper_ = false;
  std::vector<std::vector<Rational>> inv_;
};

}  // namespace

QSeriesPoly EFamily::dual_truncated(const Weight& mu, int qmax) const {
  const auto key = std::make_pair(mu, qmax);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = dual_cache_.find(key);
    if (it != dual_cache_.end()) return *it->second;
  }
  const std::vector<Weight> L = strict_lower_set(mu);
  const std::size_t m = L.size();
  QSeriesPoly g = QSeriesPoly::monomial(-mu, qmax);
  if (m > 0) {
    std::vector<std::vector<QSeries>> A(m, std::vector<QSeries>(m));
    std::vector<QSeries> b(m);
    std::vector<std::vector<Integer>> a0(m, std::vector<Integer>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        A[i][j] = gram_entry(L[i], L[j], qmax);
        a0[i][j] = A[i][j].coeff(0);
      }
      b[i] = -gram_entry(L[i], mu, qmax);
    }
    const ConstantSolver solver(std::move(a0));
    // c = c_0 + c_1 q + ...; A_0 c_k = b_k - sum_{t>=1} A_t c_{k-t}
    std::vector<std::vector<Integer>> c;
    for (int k = 0; k <= qmax; ++k) {
      std::vector<Integer> r(m);
      for (std::size_t i = 0; i < m; ++i) {
        r[i] = b[i].coeff(k);
        for (std::size_t j = 0; j < m; ++j) {
          const QSeries& aij = A[i][j];
          for (int t = 1; t <= k && t <= aij.degree(); ++t)
            if (aij.coeff(t) != 0 && c[k - t][j] != 0) r[i] -= aij.coeff(t) * c[k - t][j];
        }
      }
      c.push_back(solver.solve(r));
    }
    for (std::size_t j = 0; j < m; ++j)
      for (int k = 0; k <= qmax; ++k) g.add_term(-L[j], k, c[k][j]);
  }
  auto shared = std::make_shared<const QSeriesPoly>(std::move(g));
  std::lock_guard<std::mutex> lock(mu_);
  return *dual_cache_.emplace(key, shared).first->second;
}

QSeriesPoly EFamily::dual_t_inf(const Weight& mu, int qmax) const {
  const QSeriesPoly g = dual_truncated(mu, qmax);
  const QSeriesPoly wider = dual_truncated(mu, qmax + 2);
  if (wider.max_qdegree() > qmax) {
    std::ostringstream os;
    os << "G_" << to_string(mu) << " has not stabilized at qmax=" << qmax << " (q-degree " << wider.max_qdegree()
       << " appears); raise qmax";
    throw NotStabilized(os.str());
  }
  return g;
}

QSeries EFamily::m_coeff_dual(const Weight& lambda, const Weight& mu, int qmax) const {
  return dual_truncated(mu, qmax).coefficient(-lambda);
}

QSeriesPoly EFamily::projective(const Weight& lambda, int qmax, int box) const {
  const auto key = std::make_pair(lambda, qmax);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = proj_cache_.find(key);
    if (it != proj_cache_.end() && it->second.first >= box) return it->second.second->restricted(box);
  }
  auto p = std::make_shared<const QSeriesPoly>(ch_projective(*rs_, lambda, qmax, box));
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = proj_cache_[key];
  if (!slot.second || slot.first < box) slot = {box, p};
  return *p;
}

MCoeff EFamily::m_coeff(const Weight& lambda, const Weight& mu, int qmax) const {
  MCoeff out;
  const QSeriesPoly g = dual_truncated(mu, qmax);
  out.from_dual = g.coefficient(-lambda);

  auto kernel = t0_kernel(*rs_, qmax);
  int box = lambda.max_abs();
  for (const auto& [wg, sg] : g.terms())
    for (const auto& [wk, sk] : kernel->terms())
      if (sg.valuation() + sk.valuation() <= qmax) box = std::max(box, (wg + wk).max_abs());
  out.box = box;
  const QSeriesPoly p = projective(lambda, qmax, box);
  QSeries r(qmax);
  for (const auto& [wg, sg] : g.terms()) {
    for (const auto& [wk, sk] : kernel->terms()) {
      if (sg.valuation() + sk.valuation() > qmax) continue;
      auto it = p.terms().find(-(wg + wk));
      if (it != p.terms().end()) r += it->second * sg * sk;
    }
  }
  out.from_pairing = r;
  return out;
}

std::map<Weight, QSeries> EFamily::expand_in_e_basis(const QSeriesPoly& f) const {
  std::map<Weight, QSeries> out;
  QSeriesPoly rest = f;
  while (!rest.is_zero()) {
    // a Cherednik-maximal monomial of what is left
    std::vector<Weight> supp;
    for (const auto& [w, s] : rest.terms()) supp.push_back(w);
    const Weight* top = nullptr;
    for (const Weight& cand : supp) {
      bool maximal = true;
      for (const Weight& other : supp)
        if (group_->cherednik_cmp(other, cand) == OrderRelation::Greater) {
          maximal = false;
          break;
        }
      if (maximal) {
        top = &cand;
        break;
      }
    }
    if (!top) throw std::logic_error("expand_in_e_basis: no maximal monomial");
    const QSeries c = rest.coefficient(*top);
    out.try_emplace(*top, QSeries(f.qmax())).first->second += c;
    rest -= c * e_t0(*top);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

QSeriesPoly demazure_operator(const RootSystem& rs, const QSeriesPoly& f, int i) {
  const Weight a = rs.simple_root(i);
  QSeriesPoly out(f.rank(), f.qmax());
  for (const auto& [mu, s] : f.terms()) {
    const int m = mu[i];
    if (m >= 0) {
      for (int j = 0; j <= m; ++j) out.add(mu - j * a, s);
    } else {
      for (int j = 1; j <= -m - 1; ++j) out.add(mu + j * a, -s);
    }
  }
  return out;
}

QSeriesPoly key_polynomial(const RootSystem& rs, const Weight& lambda) {
  Weight cur = lambda;
  std::vector<int> letters;
  while (true) {
    int i = 0;
    while (i < rs.rank() && cur[i] >= 0) ++i;
    if (i == rs.rank()) break;
    cur = rs.reflect_simple(cur, i);
    letters.push_back(i);
  }
  QSeriesPoly f = QSeriesPoly::monomial(cur, 0);
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) f = demazure_operator(rs, f, *it);
  return f;
}

}  // namespace nmweyl
