#include "nmweyl/series.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace nmweyl {

namespace {
const Integer kZero = 0;

std::string coeff_prefix(const Integer& c, bool first, bool has_rest) {
  std::string s;
  Integer a = c;
  if (a < 0) {
    s += first ? "-" : " - ";
    a = -a;
  } else if (!first) {
    s += " + ";
  }
  if (a != 1 || !has_rest) {
    s += a.str();
    if (has_rest) s += "*";
  }
  return s;
}
}  // namespace

// ---- QSeries ----

QSeries::QSeries(int qmax, std::vector<Integer> coeffs) : qmax_(qmax), c_(std::move(coeffs)) {
  if (qmax < 0) throw std::invalid_argument("qmax must be non-negative");
  if (static_cast<int>(c_.size()) > qmax + 1) c_.resize(qmax + 1);
  trim();
}

QSeries QSeries::monomial(int qmax, int k, const Integer& c) {
  QSeries s(qmax);
  s.add_to(k, c);
  return s;
}

void QSeries::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int QSeries::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return -1;
}

const Integer& QSeries::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

bool QSeries::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer& c) { return c >= 0; });
}

void QSeries::add_to(int k, const Integer& c) {
  if (k < 0) throw std::invalid_argument("negative q exponent");
  if (k > qmax_ || c == 0) return;
  if (k >= static_cast<int>(c_.size())) c_.resize(k + 1);
  c_[k] += c;
  trim();
}

QSeries QSeries::truncated(int qmax) const {
  QSeries s = *this;
  s.qmax_ = std::min(qmax, qmax_);
  if (static_cast<int>(s.c_.size()) > s.qmax_ + 1) s.c_.resize(s.qmax_ + 1);
  s.trim();
  return s;
}

QSeries QSeries::as_qmax(int qmax) const {
  if (qmax <= qmax_) return truncated(qmax);
  QSeries s = *this;
  s.qmax_ = qmax;
  return s;
}

QSeries QSeries::inverse() const {
  if (qmax_ >= kExactQ) throw std::domain_error("QSeries::inverse needs a finite truncation");
  const Integer& c0 = coeff(0);
  if (c0 != 1 && c0 != -1) throw std::domain_error("QSeries::inverse: constant term is not a unit");
  std::vector<Integer> r(qmax_ + 1);
  r[0] = c0;
  for (int k = 1; k <= qmax_; ++k) {
    Integer s = 0;
    for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j) s += c_[j] * r[k - j];
    r[k] = -s * c0;
  }
  return QSeries(qmax_, std::move(r));
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (o.qmax_ < qmax_) *this = truncated(o.qmax_);
  const std::size_t n = std::min(o.c_.size(), static_cast<std::size_t>(qmax_ + 1));
  if (c_.size() < n) c_.resize(n);
  for (std::size_t k = 0; k < n; ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  if (o.qmax_ < qmax_) *this = truncated(o.qmax_);
  const std::size_t n = std::min(o.c_.size(), static_cast<std::size_t>(qmax_ + 1));
  if (c_.size() < n) c_.resize(n);
  for (std::size_t k = 0; k < n; ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

QSeries operator-(const QSeries& a) {
  QSeries r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int qm = std::min(a.qmax_, b.qmax_);
  if (a.is_zero() || b.is_zero()) return QSeries(qm);
  const int deg = std::min(qm, a.degree() + b.degree());
  std::vector<Integer> r(deg + 1);
  for (int i = 0; i <= a.degree() && i <= deg; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j <= b.degree() && i + j <= deg; ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return QSeries(qm, std::move(r));
}

bool operator==(const QSeries& a, const QSeries& b) {
  const int qm = std::min({a.qmax_, b.qmax_, std::max(a.degree(), b.degree())});
  for (int k = 0; k <= qm; ++k)
    if (a.coeff(k) != b.coeff(k)) return false;
  return true;
}

std::string QSeries::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    if (c_[k] == 0) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? "q" : "q^" + std::to_string(k));
    s += coeff_prefix(c_[k], first, !mono.empty()) + mono;
    first = false;
  }
  return s;
}

// ---- QSeriesPoly ----

QSeriesPoly QSeriesPoly::monomial(const Weight& wt, int qmax, int qdeg, const Integer& c) {
  QSeriesPoly p(wt.rank(), qmax);
  p.add_term(wt, qdeg, c);
  return p;
}

QSeriesPoly QSeriesPoly::constant(int rank, const QSeries& s) {
  QSeriesPoly p(rank, s.qmax());
  p.add(Weight(rank), s);
  return p;
}

std::size_t QSeriesPoly::num_terms() const {
  std::size_t n = 0;
  for (const auto& [w, s] : terms_)
    for (const auto& c : s.coeffs()) n += c != 0;
  return n;
}

int QSeriesPoly::max_qdegree() const {
  int d = -1;
  for (const auto& [w, s] : terms_) d = std::max(d, s.degree());
  return d;
}

int QSeriesPoly::max_abs_coord() const {
  int m = 0;
  for (const auto& [w, s] : terms_) m = std::max(m, w.max_abs());
  return m;
}

QSeries QSeriesPoly::coefficient(const Weight& wt) const {
  auto it = terms_.find(wt);
  if (it == terms_.end()) return QSeries(qmax_);
  return it->second;
}

void QSeriesPoly::add_term(const Weight& wt, int qdeg, const Integer& c) {
  if (wt.rank() != rank_) throw std::invalid_argument("QSeriesPoly: rank mismatch");
  if (qdeg > qmax_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(wt, qmax_);
  it->second.add_to(qdeg, c);
  if (it->second.is_zero()) terms_.erase(it);
}

void QSeriesPoly::add(const Weight& wt, const QSeries& s) {
  if (wt.rank() != rank_) throw std::invalid_argument("QSeriesPoly: rank mismatch");
  if (s.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(wt, qmax_);
  it->second += s.truncated(qmax_);
  if (it->second.is_zero()) terms_.erase(it);
}

QSeriesPoly QSeriesPoly::truncated(int qmax) const {
  QSeriesPoly r(rank_, std::min(qmax, qmax_));
  for (const auto& [w, s] : terms_) {
    QSeries t = s.truncated(r.qmax_);
    if (!t.is_zero()) r.terms_.emplace_hint(r.terms_.end(), w, std::move(t));
  }
  return r;
}

QSeriesPoly QSeriesPoly::as_qmax(int qmax) const {
  if (qmax <= qmax_) return truncated(qmax);
  QSeriesPoly r(rank_, qmax);
  for (const auto& [w, s] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, s.as_qmax(qmax));
  return r;
}

QSeriesPoly QSeriesPoly::restricted(int box_radius) const {
  QSeriesPoly r(rank_, qmax_);
  for (const auto& [w, s] : terms_)
    if (w.max_abs() <= box_radius) r.terms_.emplace_hint(r.terms_.end(), w, s);
  return r;
}

QSeriesPoly QSeriesPoly::q_slice(int k) const {
  QSeriesPoly r(rank_, 0);
  for (const auto& [w, s] : terms_)
    if (s.coeff(k) != 0) r.add_term(w, 0, s.coeff(k));
  return r;
}

QSeriesPoly QSeriesPoly::shifted(const Weight& nu, int qdeg) const {
  QSeriesPoly r(rank_, qmax_);
  if (qdeg > qmax_) return r;
  for (const auto& [w, s] : terms_) {
    if (s.valuation() + qdeg > qmax_) continue;
    std::vector<Integer> c(qdeg, Integer(0));
    c.insert(c.end(), s.coeffs().begin(), s.coeffs().end());
    QSeries t(qmax_, std::move(c));
    r.terms_.emplace(w + nu, std::move(t));
  }
  return r;
}

QSeriesPoly QSeriesPoly::mapped(const std::function<Weight(const Weight&)>& f) const {
  QSeriesPoly r(rank_, qmax_);
  for (const auto& [w, s] : terms_) r.add(f(w), s);
  return r;
}

void QSeriesPoly::mul_binomial(const Weight& nu, int qdeg) {
  *this -= shifted(nu, qdeg);
}

bool QSeriesPoly::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.nonnegative(); });
}

QSeriesPoly& QSeriesPoly::operator+=(const QSeriesPoly& o) {
  if (rank_ != o.rank_ && !(o.is_zero() && o.rank_ == 0)) {
    if (is_zero() && rank_ == 0)
      rank_ = o.rank_;
    else
      throw std::invalid_argument("QSeriesPoly: rank mismatch");
  }
  absorb_qmax(o.qmax_);
  for (const auto& [w, s] : o.terms_) add(w, s);
  return *this;
}

QSeriesPoly& QSeriesPoly::operator-=(const QSeriesPoly& o) { return *this += -o; }

QSeriesPoly operator-(const QSeriesPoly& a) {
  QSeriesPoly r = a;
  for (auto& [w, s] : r.terms_) s = -s;
  return r;
}

QSeriesPoly operator*(const QSeriesPoly& a, const QSeriesPoly& b) {
  if (a.rank_ != b.rank_) throw std::invalid_argument("QSeriesPoly: rank mismatch");
  QSeriesPoly r(a.rank_, std::min(a.qmax_, b.qmax_));
  std::map<Weight, std::vector<Integer>> acc;
  if (a.is_zero() || b.is_zero()) return r;
  const int qm = std::min(r.qmax_, a.max_qdegree() + b.max_qdegree());
  for (const auto& [wa, sa] : a.terms_) {
    for (const auto& [wb, sb] : b.terms_) {
      const int va = sa.valuation(), vb = sb.valuation();
      if (va + vb > qm) continue;
      auto& out = acc[wa + wb];
      if (static_cast<int>(out.size()) < qm + 1) out.resize(qm + 1);
      for (int i = va; i <= sa.degree(); ++i) {
        if (sa.coeffs()[i] == 0) continue;
        for (int j = vb; j <= sb.degree() && i + j <= qm; ++j) out[i + j] += sa.coeffs()[i] * sb.coeffs()[j];
      }
    }
  }
  for (auto& [w, c] : acc) {
    QSeries s(r.qmax_, std::move(c));
    if (!s.is_zero()) r.terms_.emplace_hint(r.terms_.end(), w, std::move(s));
  }
  return r;
}

QSeriesPoly operator*(const QSeries& s, const QSeriesPoly& p) {
  QSeriesPoly r(p.rank_, std::min(s.qmax(), p.qmax_));
  for (const auto& [w, t] : p.terms_) {
    QSeries u = s * t;
    if (!u.is_zero()) r.terms_.emplace_hint(r.terms_.end(), w, std::move(u));
  }
  return r;
}

bool operator==(const QSeriesPoly& a, const QSeriesPoly& b) {
  const int qm = std::min(a.qmax_, b.qmax_);
  QSeriesPoly ta = a.truncated(qm), tb = b.truncated(qm);
  if (ta.terms_.size() != tb.terms_.size()) return false;
  auto it = tb.terms_.begin();
  for (const auto& [w, s] : ta.terms_) {
    if (it->first != w || !(it->second == s)) return false;
    ++it;
  }
  return true;
}

std::string QSeriesPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, s] : terms_) {
    for (int k = 0; k <= s.degree(); ++k) {
      const Integer& c = s.coeffs()[k];
      if (c == 0) continue;
      std::string mono;
      if (k == 1) mono = "q";
      if (k > 1) mono = "q^" + std::to_string(k);
      if (!w.is_zero()) mono += (mono.empty() ? "" : "*") + std::string("x") + nmweyl::to_string(w);
      out += coeff_prefix(c, first, !mono.empty()) + mono;
      first = false;
    }
  }
  return out;
}

// ---- kernel and friends ----

QSeries q_pochhammer_power(int qmax, int power) {
  QSeries base = QSeries::one(qmax);
  for (int j = 1; j <= qmax; ++j) base = base - QSeries::monomial(qmax, j) * base;
  QSeries r = QSeries::one(qmax);
  if (power >= 0) {
    for (int p = 0; p < power; ++p) r = r * base;
  } else {
    const QSeries inv = base.inverse();
    for (int p = 0; p < -power; ++p) r = r * inv;
  }
  return r;
}

namespace {

QSeriesPoly compute_kernel(const RootSystem& rs, int qmax) {
  QSeriesPoly k = QSeriesPoly::constant(rs.rank(), q_pochhammer_power(qmax, rs.rank()));
  for (const Root& a : rs.positive_roots()) {
    k.mul_binomial(a.root, 0);
    for (int i = 1; i <= qmax; ++i) {
      k.mul_binomial(a.root, i);
      k.mul_binomial(-a.root, i);
    }
  }
  return k;
}

}  // namespace

std::shared_ptr<const QSeriesPoly> t0_kernel(const RootSystem& rs, int qmax) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::shared_ptr<const QSeriesPoly>> cache;
  const auto key = std::make_pair(rs.type().name(), qmax);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto k = std::make_shared<const QSeriesPoly>(compute_kernel(rs, qmax));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, k).first->second;
}

QSeries pair_with_kernel(const QSeriesPoly& h, const QSeriesPoly& kernel) {
  const int qm = std::min(h.qmax(), kernel.qmax());
  QSeries r(qm);
  for (const auto& [w, s] : h.terms()) {
    auto it = kernel.terms().find(-w);
    if (it == kernel.terms().end()) continue;
    r += s * it->second;
  }
  return r;
}

QSeries inner0(const RootSystem& rs, const QSeriesPoly& f, const QSeriesPoly& g) {
  const int qm = std::min(f.qmax(), g.qmax());
  auto kernel = t0_kernel(rs, qm);
  const auto& kt = kernel->terms();
  QSeries r(qm);
  for (const auto& [wf, sf] : f.terms()) {
    for (const auto& [wg, sg] : g.terms()) {
      if (sf.valuation() + sg.valuation() > qm) continue;
      auto it = kt.find(-(wf + wg));
      if (it == kt.end()) continue;
      r += sf * sg * it->second;
    }
  }
  return r;
}

std::vector<QSeriesPoly> eta_product(const RootSystem& rs, int qmax) {
  auto k = t0_kernel(rs, qmax);
  std::vector<QSeriesPoly> out;
  for (int j = 0; j <= qmax; ++j) out.push_back(k->q_slice(j));
  return out;
}

std::vector<Weight> weights_in_box(int rank, int radius) {
  std::vector<Weight> out;
  Weight w(rank);
  for (int i = 0; i < rank; ++i) w[i] = -radius;
  if (radius < 0) return out;
  while (true) {
    out.push_back(w);
    int i = rank - 1;
    while (i >= 0 && w[i] == radius) {
      w[i] = -radius;
      --i;
    }
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

QSeriesPoly ch_projective(const RootSystem& rs, const Weight& lambda, int qmax, int box_radius) {
  if (lambda.max_abs() > box_radius) throw std::invalid_argument("box too small to contain x^lambda");
  const int n = rs.rank();
  long hbox = 0;
  for (int i = 0; i < n; ++i) hbox += box_radius * rs.height(rs.fundamental_weight(i));
  long max_root_h = 0;
  for (const Root& a : rs.positive_roots()) max_root_h = std::max(max_root_h, rs.height(a.root));

  // Descendants of (nu, d) have height >= H(nu) - (qmax - d) * max_root_h.
  auto prune = [&](const QSeriesPoly& p) {
    QSeriesPoly r(n, p.qmax());
    for (const auto& [w, s] : p.terms()) {
      const long excess = rs.height(w) - hbox;
      if (excess <= 0) {
        r.add(w, s);
        continue;
      }
      const long keep = qmax - (excess + max_root_h - 1) / max_root_h;
      if (keep >= 0) r.add(w, s.truncated(static_cast<int>(keep)));
    }
    return r;
  };

  // f / (1 - q^i x^beta) as a geometric series.
  auto divide = [&](const QSeriesPoly& f, const Weight& beta, int i) {
    QSeriesPoly sum = f;
    QSeriesPoly term = f;
    while (true) {
      term = prune(term.shifted(beta, i));
      if (term.is_zero()) break;
      sum += term;
    }
    return sum;
  };

  QSeriesPoly f = QSeriesPoly::constant(n, q_pochhammer_power(qmax, -n)).shifted(lambda, 0);
  for (const Root& a : rs.positive_roots())
    for (int i = 1; i <= qmax; ++i) {
      f = divide(f, a.root, i);
      f = divide(f, -a.root, i);
    }
  for (const Root& a : rs.positive_roots()) f = divide(f, a.root, 0);
  return f.restricted(box_radius);
}

}  // namespace nmweyl
