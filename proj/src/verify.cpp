#include "nmweyl/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nmweyl/parallel.hpp"

namespace nmweyl {

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

void VerifyReport::add(std::string description, std::string expected, std::string actual, bool ok) {
  checks.push_back({std::move(description), std::move(expected), std::move(actual), ok});
}

void VerifyReport::merge(const VerifyReport& other, const std::string& prefix) {
  for (const Check& c : other.checks) checks.push_back({prefix + c.description, c.expected, c.actual, c.pass});
  for (const std::string& n : other.notes) notes.push_back(prefix + n);
}

namespace {

VerifyReport make_report(const std::string& suite, const RootSystem& rs, int box, int qmax) {
  VerifyReport r;
  r.suite = suite;
  r.cartan = rs.type().name();
  r.box = box;
  r.qmax = qmax;
  return r;
}

// sum c_k q^k from a coefficient list
QSeries qs(std::initializer_list<int> coeffs, int qmax = kExactQ) {
  std::vector<Integer> c(coeffs.begin(), coeffs.end());
  return QSeries(qmax, std::move(c));
}

QSeriesPoly poly(int rank, std::initializer_list<std::pair<Weight, QSeries>> terms, int qmax = kExactQ) {
  QSeriesPoly p(rank, qmax);
  for (const auto& [w, s] : terms) p.add(w, s);
  return p;
}

std::string weights_string(const std::vector<Weight>& ws) {
  std::string s = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? "," : "") + to_string(ws[i]);
  return s + "}";
}

}  // namespace

VerifyReport verify_orthogonality(const EFamily& fam, int box, int qmax, const VerifyOptions& opt) {
  const RootSystem& rs = fam.root_system();
  VerifyReport rep = make_report("orthogonality", rs, box, qmax);
  const std::vector<Weight> ws = weights_in_box(rs.rank(), box);
  const std::size_t n = ws.size();

  std::vector<QSeriesPoly> dual(n);
  std::vector<std::string> stab(n);
  parallel_for(n, opt.threads, [&](std::size_t i) {
    dual[i] = fam.dual_truncated(ws[i], qmax);
    try {
      fam.dual_t_inf(ws[i], qmax);
    } catch (const NotStabilized& e) {
      stab[i] = e.what();
    }
  });
  for (const std::string& s : stab)
    if (!s.empty()) rep.notes.push_back(s);
  if (rep.notes.empty())
    rep.notes.push_back("G_mu stable at qmax+2 for all " + std::to_string(n) + " weights");

  std::vector<QSeries> vals(n * n);
  parallel_for(n * n, opt.threads, [&](std::size_t k) {
    vals[k] = inner0(rs, fam.e_t0(ws[k / n], qmax), dual[k % n]);
  });
  for (std::size_t k = 0; k < n * n; ++k) {
    const Weight& l = ws[k / n];
    const Weight& m = ws[k % n];
    const QSeries expected = l == m ? fam.q_norm(l).truncated(qmax) : QSeries(qmax);
    rep.add("<E_" + to_string(l) + ", G_" + to_string(m) + ">_0", expected, vals[k]);
  }
  return rep;
}

std::vector<Weight> expansion_candidates(const EFamily& fam, const Weight& lambda, int radius) {
  std::vector<Weight> out;
  for (const Weight& mu : weights_in_box(fam.root_system().rank(), radius)) {
    if (!fam.root_system().root_coords(mu - lambda)) continue;
    if (fam.group().cherednik_geq(mu, lambda)) out.push_back(mu);
  }
  return out;
}

VerifyReport verify_expansion(const EFamily& fam, const Weight& lambda, int box, int qmax, const VerifyOptions& opt) {
  const RootSystem& rs = fam.root_system();
  VerifyReport rep = make_report("expansion", rs, box, qmax);
  rep.weight = lambda;
  const QSeriesPoly lhs = fam.projective(lambda, qmax, box);

  std::set<Weight> done;
  std::vector<Weight> processed;
  QSeriesPoly rhs(rs.rank(), qmax);
  std::vector<Weight> prev_set, last_set;
  int unchanged = 0;
  int radius = std::max(box, lambda.max_abs());
  bool stable = false;
  constexpr int kStableRounds = 2;
  for (int round = 0; round <= opt.max_rounds; ++round, ++radius) {
    std::vector<Weight> fresh;
    for (const Weight& mu : expansion_candidates(fam, lambda, radius))
      if (!done.count(mu)) fresh.push_back(mu);
    std::vector<QSeriesPoly> contrib(fresh.size());
    std::vector<QSeries> mval(fresh.size());
    parallel_for(fresh.size(), opt.threads, [&](std::size_t i) {
      mval[i] = fam.m_coeff_dual(lambda, fresh[i], qmax);
      contrib[i] = QSeriesPoly(rs.rank(), qmax);
      if (!mval[i].is_zero()) {
        const QSeriesPoly st = ch_standard(fam, fresh[i], qmax).character.restricted(box);
        contrib[i] = mval[i] * st;
      }
    });
    QSeriesPoly next = rhs;
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      next += contrib[i];
      done.insert(fresh[i]);
      processed.push_back(fresh[i]);
      if (!mval[i].is_zero())
        rep.notes.push_back("m_{" + to_string(lambda) + "," + to_string(fresh[i]) + "} = " + mval[i].to_string());
    }
    prev_set = last_set;
    last_set.assign(done.begin(), done.end());
    unchanged = (round > 0 && next == rhs) ? unchanged + 1 : 0;
    rhs = std::move(next);
    if (unchanged >= kStableRounds) {
      stable = true;
      break;
    }
  }

  std::ostringstream diag;
  if (stable) {
    diag << "stable at candidate radius " << radius << " (" << done.size() << " candidates)";
  } else {
    diag << "not stable after " << opt.max_rounds << " enlargements; last two candidate sets: "
         << weights_string(prev_set) << " and " << weights_string(last_set);
  }
  rep.add("candidate set stabilized", "stable", diag.str(), stable);

  std::set<Weight> support;
  for (const auto& [w, s] : lhs.terms()) support.insert(w);
  for (const auto& [w, s] : rhs.terms()) support.insert(w);
  for (const Weight& w : support)
    rep.add("coefficient of x^" + to_string(w), lhs.coefficient(w), rhs.coefficient(w));

  if (opt.pairing_route) {
    std::vector<MCoeff> mc(processed.size());
    parallel_for(processed.size(), opt.threads, [&](std::size_t i) { mc[i] = fam.m_coeff(lambda, processed[i], qmax); });
    for (std::size_t i = 0; i < processed.size(); ++i)
      rep.add("m_{" + to_string(lambda) + "," + to_string(processed[i]) + "}: pairing route vs y-coefficient",
              mc[i].from_dual, mc[i].from_pairing);
  }
  return rep;
}

VerifyReport verify_bicharacter(const EFamily& fam, int box, int qmax, const VerifyOptions& opt) {
  const RootSystem& rs = fam.root_system();
  VerifyReport rep = make_report("bicharacter", rs, box, qmax);
  for (const Weight& lambda : weights_in_box(rs.rank(), box)) {
    VerifyReport sub = verify_expansion(fam, lambda, box, qmax, opt);
    rep.merge(sub, "y^" + to_string(lambda) + ": ");
  }
  return rep;
}

QSeriesPoly eta_affine_weyl_sum(const RootSystem& rs, int qmax) {
  const int n = rs.rank();
  const std::vector<WeylElt> W = enumerate_weyl_group(rs);
  std::vector<Weight> urho;
  for (const WeylElt& u : W) urho.push_back(u.rho_image());
  const long hv = rs.dual_coxeter_number();
  QSeriesPoly out(n, qmax);
  int empty = 0;
  for (int shell = 0; empty < 2; ++shell) {
    bool any = false;
    for (const Weight& c : weights_in_box(n, shell)) {
      if (c.max_abs() != shell) continue;
      Coroot h(n);
      Weight nu(n);
      for (int j = 0; j < n; ++j) {
        h[j] = c[j];
        nu += (c[j] * (rs.max_norm() / rs.simple_norm(j))) * rs.simple_root(j);
      }
      const long nn = pairing(nu, h);
      if ((hv * nn) % 2 != 0) throw std::logic_error("eta oracle: odd quadratic form");
      for (std::size_t k = 0; k < W.size(); ++k) {
        const long e = pairing(urho[k], h) + hv * nn / 2;
        if (e < 0) throw std::logic_error("eta oracle: negative q-exponent");
        if (e > qmax) continue;
        any = true;
        const Weight x = rs.rho() - urho[k] - static_cast<int>(hv) * nu;
        out.add_term(x, static_cast<int>(e), W[k].length() % 2 ? -1 : 1);
      }
    }
    empty = any ? 0 : empty + 1;
  }
  return out;
}

VerifyReport verify_eta(const RootSystem& rs, int qmax) {
  VerifyReport rep = make_report("eta", rs, 0, qmax);
  const std::vector<QSeriesPoly> prod = eta_product(rs, qmax);
  const QSeriesPoly sum = eta_affine_weyl_sum(rs, qmax);
  for (int k = 0; k <= qmax; ++k) rep.add("a_" + std::to_string(k) + ": product vs affine Weyl sum", prod[k], sum.q_slice(k));
  return rep;
}

VerifyReport verify_positivity(const EFamily& fam, int box, int qmax, const VerifyOptions& opt) {
  const RootSystem& rs = fam.root_system();
  VerifyReport rep = make_report("positivity", rs, box, qmax);
  const std::vector<Weight> ws = weights_in_box(rs.rank(), box);
  std::vector<QSeriesPoly> dual(ws.size());
  parallel_for(ws.size(), opt.threads, [&](std::size_t i) {
    fam.e_t0(ws[i]);
    dual[i] = fam.dual_truncated(ws[i], qmax);
  });
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const QSeriesPoly& e = fam.e_t0(ws[i]);
    rep.add("E_" + to_string(ws[i]) + " in Z>=0[q][P]", "non-negative", e.nonnegative() ? "non-negative" : e.to_string(),
            e.nonnegative());
    rep.add("G_" + to_string(ws[i]) + " in Z>=0[q][P]", "non-negative",
            dual[i].nonnegative() ? "non-negative" : dual[i].to_string(), dual[i].nonnegative());
  }
  for (const Weight& l : ws)
    for (std::size_t j = 0; j < ws.size(); ++j) {
      const QSeries m = dual[j].coefficient(-l);
      rep.add("m_{" + to_string(l) + "," + to_string(ws[j]) + "} >= 0", "non-negative",
              m.nonnegative() ? "non-negative" : m.to_string(), m.nonnegative());
    }
  return rep;
}

VerifyReport verify_sl2_golden(const VerifyOptions& opt) {
  EFamily fam("A1");
  const RootSystem& rs = fam.root_system();
  const int qmax = 6;
  VerifyReport rep = make_report("sl2", rs, 6, qmax);
  const Weight z{0}, a{2};
  auto w = [&](int k) { return k * a; };

  // multiplicities m_{0,mu}
  const std::vector<std::pair<Weight, QSeries>> mexp = {
      {z, qs({1})}, {a, qs({1})}, {w(-1), qs({0, 1, 1})}, {w(2), qs({1, 1, 1})}};
  std::vector<MCoeff> mc(mexp.size());
  parallel_for(mexp.size(), opt.threads, [&](std::size_t i) { mc[i] = fam.m_coeff(z, mexp[i].first, qmax); });
  for (std::size_t i = 0; i < mexp.size(); ++i) {
    const std::string name = "m_{0," + to_string(mexp[i].first) + "}";
    QSeries exact;
    std::string err;
    try {
      exact = fam.dual_t_inf(mexp[i].first, qmax).coefficient(z);
    } catch (const NotStabilized& e) {
      err = e.what();
    }
    if (!err.empty())
      rep.add(name + " (stabilized dual)", mexp[i].second.to_string(), err, false);
    else
      rep.add(name + " (stabilized dual)", mexp[i].second, exact.as_qmax(kExactQ));
    rep.add(name + " (pairing with ch P_0)", mexp[i].second.truncated(qmax), mc[i].from_pairing);
  }

  // monomials in the E-basis
  struct Line {
    int k;
    std::vector<std::pair<int, QSeries>> rhs;  // multiples of alpha -> coefficient
  };
  const std::vector<Line> lines = {
      {0, {{0, qs({1})}}},
      {1, {{1, qs({1})}, {0, qs({0, -1})}}},
      {-1, {{-1, qs({1})}, {1, qs({-1})}, {0, qs({-1})}}},
      {2, {{2, qs({1})}, {-1, qs({0, 0, 0, -1})}, {1, qs({0, -1, -1})}, {0, qs({0, 0, 0, 1})}}},
      {-2, {{-2, qs({1})}, {2, qs({-1})}, {-1, qs({-1, -1, -1})}, {1, qs({0, 1, 1})}, {0, qs({0, 1})}}},
      {3,
       {{3, qs({1})},
        {-2, qs({0, 0, 0, 0, 0, -1})},
        {2, qs({0, -1, -1, -1, -1})},
        {-1, qs({0, 0, 0, 0, 0, 1, 1, 1})},
        {1, qs({0, 0, 0, 1, 1, 1})},
        {0, qs({0, 0, 0, 0, 0, 0, -1})}}},
  };
  for (const Line& line : lines) {
    std::map<Weight, QSeries> expected;
    for (const auto& [k, c] : line.rhs) expected[w(k)] = c;
    const std::map<Weight, QSeries> got = fam.expand_in_e_basis(QSeriesPoly::monomial(w(line.k), kExactQ));
    auto render = [](const std::map<Weight, QSeries>& m) {
      std::string s;
      for (const auto& [wt, c] : m) s += (s.empty() ? "" : " + ") + ("(" + c.to_string() + ")E" + to_string(wt));
      return s;
    };
    bool ok = expected.size() == got.size();
    for (const auto& [wt, c] : expected) {
      auto it = got.find(wt);
      ok = ok && it != got.end() && it->second == c;
    }
    rep.add("x^(" + std::to_string(line.k) + " alpha) in the E-basis", render(expected), render(got), ok);
  }

  // q^0 and q^1 coefficients of m_{0,mu}/(q)_mu for mu ≼ 2 alpha
  const std::vector<std::pair<int, std::pair<int, int>>> display = {{0, {1, 0}}, {1, {1, 1}}, {-1, {0, 1}}, {2, {1, 2}}};
  const std::vector<Weight> below = fam.group().lower_set(w(2));
  rep.add("{mu : mu ≼ 2 alpha}", weights_string({w(-1), z, a, w(2)}), weights_string(below),
          below == std::vector<Weight>{w(-1), z, a, w(2)});
  for (const auto& [k, coeffs] : display) {
    const QSeries d = fam.m_coeff_dual(z, w(k), 1) * ch_A_algebra(fam, w(k), 1);
    rep.add("coefficient of E_(" + std::to_string(k) + " alpha) in ch P_0, q-degrees < 2", qs({coeffs.first, coeffs.second}, 1),
            d);
  }

  // direct expansion of ch P_0
  const QSeriesPoly p = fam.projective(z, 2, 6);
  const QSeriesPoly q0 = poly(1, {{w(0), qs({1})}, {w(1), qs({1})}, {w(2), qs({1})}, {w(3), qs({1})}}, 0);
  const QSeriesPoly q1 = poly(1, {{w(-1), qs({1})}, {w(0), qs({2})}, {w(1), qs({3})}, {w(2), qs({3})}}, 0);
  auto slice_on = [&](int k, const std::vector<int>& mult) {
    QSeriesPoly s(1, 0);
    const QSeriesPoly full = p.q_slice(k);
    for (int m : mult) s.add(w(m), full.coefficient(w(m)));
    return s;
  };
  rep.add("ch P_0, q^0 slice on x^(k alpha), k=-1..3", q0, slice_on(0, {-1, 0, 1, 2, 3}));
  rep.add("ch P_0, q^1 slice on x^(k alpha), k=-1..2", q1, slice_on(1, {-1, 0, 1, 2}));
  return rep;
}

VerifyReport verify_a1_anchors() {
  EFamily fam("A1");
  const RootSystem& rs = fam.root_system();
  const int qmax = 8;
  VerifyReport rep = make_report("anchors", rs, 2, qmax);
  const Weight z{0}, a{2}, na{-2}, a2{4};
  rep.add("E_alpha", poly(1, {{a, qs({1})}, {z, qs({0, 1})}}), fam.e_t0(a));
  rep.add("E_-alpha", poly(1, {{na, qs({1})}, {a, qs({1})}, {z, qs({1, 1})}}), fam.e_t0(na));
  rep.add("E_2alpha",
          poly(1, {{a2, qs({1})}, {na, qs({0, 0, 0, 1})}, {a, qs({0, 1, 1, 1})}, {z, qs({0, 0, 1, 1, 1})}}),
          fam.e_t0(a2));
  rep.add("(q)_alpha", qs({1, -1}), fam.q_norm(a));
  rep.add("(q)_-alpha", qs({1, -1, -1, 1}), fam.q_norm(na));
  auto dual = [&](const Weight& mu) -> std::pair<QSeriesPoly, std::string> {
    try {
      return {fam.dual_t_inf(mu, qmax).as_qmax(kExactQ), ""};
    } catch (const NotStabilized& e) {
      return {QSeriesPoly(1, qmax), e.what()};
    }
  };
  const auto ga = dual(a), gna = dual(na);
  const QSeriesPoly ga_exp = poly(1, {{na, qs({1})}, {z, qs({1})}});
  const QSeriesPoly gna_exp = poly(1, {{a, qs({1})}, {na, qs({0, 0, 1})}, {z, qs({0, 1, 1})}});
  rep.add("G_alpha", ga_exp.to_string(), ga.second.empty() ? ga.first.to_string() : ga.second,
          ga.second.empty() && ga.first == ga_exp);
  rep.add("G_-alpha", gna_exp.to_string(), gna.second.empty() ? gna.first.to_string() : gna.second,
          gna.second.empty() && gna.first == gna_exp);
  return rep;
}

}  // namespace nmweyl
