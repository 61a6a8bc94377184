// Acceptance run: one PASS/FAIL line per criterion, details for failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "nmweyl/characters.hpp"
#include "nmweyl/qbg.hpp"
#include "nmweyl/verify.hpp"
#include "oracles.hpp"

using namespace nmweyl;

namespace {

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> info;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void absorb(const VerifyReport& r, const std::string& tag) {
    for (const Check& c : r.checks) {
      ++checks;
      if (!c.pass) failures.push_back(tag + ": " + c.description + " expected " + c.expected + " got " + c.actual);
    }
  }
};

QSeries qs(std::vector<int> c, int qmax = kExactQ) {
  std::vector<Integer> v(c.begin(), c.end());
  return QSeries(qmax, v);
}

QSeriesPoly a1(std::initializer_list<std::tuple<int, int, int>> terms) {
  QSeriesPoly p(1, kExactQ);
  for (auto [w, k, c] : terms) p.add_term(Weight{w}, k, c);
  return p;
}

// (q)_lambda in A1 for lambda = n omega: prod_{k=1}^{N}(1-q^k), N = |n| - [n > 0]
QSeries a1_norm(int n, int qmax) {
  const int N = (n < 0 ? -n : n) - (n > 0 ? 1 : 0);
  QSeries s = QSeries::one(qmax);
  for (int k = 1; k <= N; ++k) s = s * (QSeries::one(qmax) - QSeries::monomial(qmax, k));
  return s;
}

// one m_{lambda,mu} computed both ways
struct RoutePair {
  std::string what;
  bool agree;
};

std::string show(const std::map<Weight, QSeries>& m) {
  std::string s;
  for (const auto& [w, c] : m) s += (s.empty() ? "" : " + ") + ("(" + c.to_string() + ")E" + to_string(w));
  return s;
}

// ---------------------------------------------------------------- criterion 1
Outcome golden(std::vector<RoutePair>& pairs) {
  Outcome o;
  EFamily fam("A1");
  const Weight z{0}, a{2};
  auto w = [&](int k) { return k * a; };

  const std::vector<std::pair<Weight, QSeries>> m = {
      {z, qs({1})}, {a, qs({1})}, {-a, qs({0, 1, 1})}, {2 * a, qs({1, 1, 1})}};
  for (const auto& [mu, want] : m) {
    const MCoeff c = fam.m_coeff(z, mu, 6);
    pairs.push_back({"A1 m_{0," + to_string(mu) + "}: " + c.from_dual.to_string() + " vs " + c.from_pairing.to_string(),
                     c.agree()});
    const QSeries exact = fam.dual_t_inf(mu, 6).coefficient(z).as_qmax(kExactQ);
    o.expect(exact == want && exact.degree() == want.degree(),
             "m_{0," + to_string(mu) + "} = " + exact.to_string() + ", want " + want.to_string());
  }

  const std::vector<std::pair<int, std::map<int, QSeries>>> lines = {
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
  for (const auto& [k, rhs] : lines) {
    std::map<Weight, QSeries> want;
    for (const auto& [j, c] : rhs) want[w(j)] = c;
    const auto got = fam.expand_in_e_basis(QSeriesPoly::monomial(w(k), kExactQ));
    bool ok = got.size() == want.size();
    for (const auto& [mu, c] : want) ok = ok && got.count(mu) && got.at(mu) == c && got.at(mu).degree() == c.degree();
    o.expect(ok, "x^(" + std::to_string(k) + "a) = " + show(got) + ", want " + show(want));
  }

  // two-slice display: q^0 and q^1 coefficients of E_mu, mu ≼ 2 alpha
  const std::map<int, QSeries> display = {{0, qs({1, 0}, 1)}, {1, qs({1, 1}, 1)}, {-1, qs({0, 1}, 1)}, {2, qs({1, 2}, 1)}};
  o.expect(fam.group().lower_set(w(2)) == std::vector<Weight>{w(-1), z, a, w(2)}, "lower set of 2 alpha");
  for (const auto& [k, want] : display) {
    const QSeries got = fam.m_coeff_dual(z, w(k), 1) * ch_A_algebra(fam, w(k), 1);
    o.expect(got == want, "E_(" + std::to_string(k) + "a) in ch P_0: " + got.to_string() + ", want " + want.to_string());
  }
  const QSeriesPoly p = fam.projective(z, 1, 6);
  const int q0[] = {0, 1, 1, 1, 1}, q1[] = {1, 2, 3, 3};
  for (int k = -1; k <= 3; ++k)
    o.expect(p.q_slice(0).coefficient(w(k)) == qs({q0[k + 1]}, 0), "ch P_0 q^0 at x^(" + std::to_string(k) + "a)");
  for (int k = -1; k <= 2; ++k)
    o.expect(p.q_slice(1).coefficient(w(k)) == qs({q1[k + 1]}, 0), "ch P_0 q^1 at x^(" + std::to_string(k) + "a)");
  o.absorb(verify_sl2_golden(), "sl2 suite");
  return o;
}

// ---------------------------------------------------------------- criterion 2
Outcome anchors() {
  Outcome o;
  EFamily fam("A1");
  const Weight a{2};
  o.expect(fam.e_t0(a) == a1({{2, 0, 1}, {0, 1, 1}}), "E_a = " + fam.e_t0(a).to_string());
  o.expect(fam.e_t0(-a) == a1({{-2, 0, 1}, {2, 0, 1}, {0, 0, 1}, {0, 1, 1}}), "E_-a = " + fam.e_t0(-a).to_string());
  o.expect(fam.q_norm(a) == qs({1, -1}) && fam.q_norm(a).degree() == 1, "(q)_a = " + fam.q_norm(a).to_string());
  o.expect(fam.q_norm(-a) == qs({1, -1}) * qs({1, 0, -1}) && fam.q_norm(-a).degree() == 3,
           "(q)_-a = " + fam.q_norm(-a).to_string());
  const QSeriesPoly ga = fam.dual_t_inf(a, 8), gm = fam.dual_t_inf(-a, 8);
  o.expect(ga == a1({{-2, 0, 1}, {0, 0, 1}}) && ga.max_qdegree() == 0, "G_a = " + ga.to_string());
  o.expect(gm == a1({{2, 0, 1}, {-2, 2, 1}, {0, 1, 1}, {0, 2, 1}}) && gm.max_qdegree() == 2, "G_-a = " + gm.to_string());
  o.absorb(verify_a1_anchors(), "anchors suite");
  return o;
}

// ---------------------------------------------------------------- criterion 3
Outcome orthogonality() {
  Outcome o;
  for (auto [name, box, qmax] : {std::tuple{"A1", 4, 8}, {"A2", 2, 6}, {"B2", 1, 5}, {"G2", 1, 5}}) {
    EFamily fam(name);
    const VerifyReport r = verify_orthogonality(fam, box, qmax);
    o.absorb(r, name);
    for (const std::string& n : r.notes) o.info.push_back(std::string(name) + ": " + n);
    for (const Weight& mu : weights_in_box(fam.root_system().rank(), box)) {
      bool stable = true;
      try {
        fam.dual_t_inf(mu, qmax);
      } catch (const NotStabilized&) {
        stable = false;
      }
      o.expect(stable, std::string(name) + ": G_" + to_string(mu) + " not stable at qmax " + std::to_string(qmax));
    }
    if (std::string(name) == "A1")
      for (int n = -box; n <= box; ++n)
        o.expect(fam.q_norm(Weight{n}).truncated(qmax) == a1_norm(n, qmax), "A1 norm at " + std::to_string(n));
  }
  return o;
}

// ---------------------------------------------------------------- criterion 4
Outcome expansion(std::vector<RoutePair>& pairs) {
  Outcome o;
  VerifyOptions opt;
  opt.pairing_route = true;
  const std::string pairing_tag = "pairing route vs y-coefficient";
  struct Run {
    const char* name;
    int box;
    int qmax;
    std::vector<Weight> lams;
  };
  const std::vector<Run> runs = {
      {"A1", 3, 4, {Weight{0}, Weight{1}, Weight{-1}, Weight{2}, Weight{-2}}},
      {"A2", 2, 3, {Weight{0, 0}, Weight{1, 0}}},
  };
  for (const Run& run : runs) {
    EFamily fam(run.name);
    for (const Weight& lam : run.lams) {
      const VerifyReport r = verify_expansion(fam, lam, run.box, run.qmax, opt);
      const std::string tag = std::string(run.name) + " lambda=" + to_string(lam);
      for (const Check& c : r.checks) {
        if (c.description.find(pairing_tag) != std::string::npos) continue;
        o.expect(c.pass, tag + ": " + c.description + " expected " + c.expected + " got " + c.actual);
        if (c.description == "candidate set stabilized") o.info.push_back(tag + ": " + c.actual);
      }
      // pairing checks are collected for criterion 7 from the same run
      for (const Check& c : r.checks)
        if (c.description.find(pairing_tag) != std::string::npos)
          pairs.push_back({tag + " " + c.description + ": " + c.expected + " vs " + c.actual, c.pass});
      // independent check of the left side: eta * ch P_lambda = x^lambda inside a smaller box
      if (std::string(run.name) == "A1") {
        const int big = 14, inner = 3;
        const QSeriesPoly p = fam.projective(lam, run.qmax, big);
        const QSeriesPoly prod = (oracle::eta_naive(fam.root_system(), run.qmax) * p).restricted(inner);
        o.expect(prod == QSeriesPoly::monomial(lam, run.qmax), tag + ": eta * ch P != x^lambda on the inner box");
      }
    }
  }
  // y-coefficient form over the whole y-box
  EFamily a1("A1");
  o.absorb(verify_bicharacter(a1, 2, 2), "A1 bicharacter");
  return o;
}

// ---------------------------------------------------------------- criterion 5
Outcome eta() {
  Outcome o;
  for (auto [name, qmax] : {std::pair{"A1", 6}, {"A2", 5}}) {
    auto rs = RootSystem::build(name);
    const auto a = eta_product(*rs, qmax);
    const QSeriesPoly kac = oracle::eta_kac(*rs, qmax);
    for (int k = 0; k <= qmax; ++k)
      o.expect(a[k] == kac.q_slice(k), std::string(name) + ": a_" + std::to_string(k) + " = " + a[k].to_string() +
                                           " but the affine Weyl sum gives " + kac.q_slice(k).to_string());
    o.absorb(verify_eta(*rs, qmax), name);
  }
  return o;
}

// ---------------------------------------------------------------- criterion 6
Outcome properties() {
  Outcome o;
  struct Box {
    const char* name;
    int box;
    int qmax;
  };
  const Box boxes[] = {{"A1", 4, 8}, {"A2", 2, 6}, {"B2", 1, 5}, {"G2", 1, 5}};
  for (const Box& b : boxes) {
    EFamily fam(b.name);
    const RootSystem& rs = fam.root_system();
    const AffineWeylGroup& G = fam.group();
    const std::string tag = b.name;
    WeylElt w0 = WeylElt::identity(rs);
    for (const WeylElt& w : enumerate_weyl_group(rs))
      if (w.length() > w0.length()) w0 = w;
    for (const Weight& lam : weights_in_box(rs.rank(), b.box)) {
      const std::string at = tag + " " + to_string(lam);
      const QSeriesPoly& e = fam.e_t0(lam);
      bool tri = e.coefficient(lam) == qs({1});
      for (const auto& [nu, s] : e.terms()) tri = tri && (nu == lam || G.cherednik_cmp(nu, lam) == OrderRelation::Less);
      o.expect(tri, at + ": E not unitriangular");
      o.expect(e.nonnegative(), at + ": E has a negative coefficient");
      const QSeriesPoly g = fam.dual_t_inf(lam, b.qmax);
      bool gtri = g.coefficient(-lam) == qs({1});
      for (const auto& [nu, s] : g.terms())
        gtri = gtri && (nu == -lam || G.cherednik_cmp(-nu, lam) == OrderRelation::Less);
      o.expect(gtri, at + ": G not unitriangular");
      o.expect(g.nonnegative(), at + ": G has a negative coefficient");
      o.expect(fam.e_t0_with(lam, TieBreak::Smallest) == e && fam.e_t0_with(lam, TieBreak::Largest) == e,
               at + ": E depends on the reduced word");
      if (tag != "G2" && lam.max_abs() <= 2)
        o.expect(oracle::q_zero(e) == oracle::key(rs, lam), at + ": E at q=0 is not the key polynomial");
      const QSeriesPoly rhs = fam.dual_t_inf(-w0.act(lam), b.qmax).mapped([&](const Weight& v) { return w0.act(v); });
      o.expect(g.inverted() == rhs, at + ": w0 symmetry of G fails");
      o.expect(fam.q_norm(lam) * ch_A_algebra(fam, lam, b.qmax) == QSeries::one(b.qmax), at + ": (q) * ch A != 1");
      o.expect(ch_proper_standard(fam, lam).character == e, at + ": restricted route differs");
    }
    // order axioms and the -lambda isomorphism
    const auto ws = weights_in_box(rs.rank(), b.box);
    const std::size_t n = ws.size();
    std::map<Weight, std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) idx[ws[i]] = i;
    std::vector<char> ge(n * n), du(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        ge[i * n + j] = G.cherednik_geq(ws[i], ws[j]);
        du[i * n + j] = G.cherednik_geq(ws[i], ws[j], OrderVariant::Dual);
      }
    bool refl = true, anti = true, trans = true, iso = true;
    for (std::size_t i = 0; i < n; ++i) {
      refl = refl && ge[i * n + i];
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && ge[i * n + j] && ge[j * n + i]) anti = false;
        if (ge[i * n + j] != du[idx[-ws[i]] * n + idx[-ws[j]]]) iso = false;
        if (ge[i * n + j])
          for (std::size_t k = 0; k < n; ++k)
            if (ge[j * n + k] && !ge[i * n + k]) trans = false;
      }
    }
    o.expect(refl, tag + ": order not reflexive");
    o.expect(anti, tag + ": order not antisymmetric");
    o.expect(trans, tag + ": order not transitive");
    o.expect(iso, tag + ": lambda -> -lambda is not an order isomorphism onto the dual order");
  }
  // QBG for every type with |W| <= 1152
  for (const char* name : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "G2", "F4"}) {
    auto rs = RootSystem::build(name);
    const auto len = oracle::weyl_lengths(*rs);
    QuantumBruhatGraph g(*rs);
    bool exclusive = true, match = true;
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
      const WeylElt& w = g.vertices()[v];
      const int lw = len.at(w.rho_image());
      for (int a = 0; a < rs->num_positive_roots(); ++a) {
        const int lws = len.at(w.act(rs->reflect(rs->rho(), a)));
        const bool br = lws == lw + 1, qu = lws == lw - rs->two_rho_pairing(a) + 1;
        exclusive = exclusive && !(br && qu);
        const EdgeKind want = br ? EdgeKind::Bruhat : qu ? EdgeKind::Quantum : EdgeKind::None;
        match = match && g.kind(static_cast<int>(v), a) == want;
      }
    }
    o.expect(g.vertices().size() == len.size(), std::string(name) + ": vertex count");
    o.expect(exclusive, std::string(name) + ": an edge is both Bruhat and quantum");
    o.expect(match, std::string(name) + ": edge kinds disagree with direct length computation");
    o.expect(g.strongly_connected(), std::string(name) + ": QBG not strongly connected");
  }
  return o;
}

// ---------------------------------------------------------------- criterion 7
Outcome two_routes(const std::vector<RoutePair>& pairs) {
  Outcome o;
  for (const RoutePair& p : pairs) o.expect(p.agree, p.what);
  o.expect(!pairs.empty(), "no pairs exercised");
  return o;
}

}  // namespace

int main() {
  std::vector<RoutePair> pairs;
  struct Criterion {
    int id;
    const char* title;
    double limit_s;  // 0: no limit
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "SL(2) golden example", 1.0, [&] { return golden(pairs); }},
      {2, "A1 anchor values", 1.0, anchors},
      {3, "orthogonality A1/A2/B2/G2", 0, orthogonality},
      {4, "reciprocal expansion and bicharacter", 0, [&] { return expansion(pairs); }},
      {5, "eta identity A1 q^6, A2 q^5", 0, eta},
      {6, "property suites", 0, properties},
      {7, "two-route agreement of m", 0, [&] { return two_routes(pairs); }},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) o.failures.push_back("took " + std::to_string(secs) + " s");
    const bool ok = o.failures.empty();
    all = all && ok;
    std::printf("criterion %d: %s  %s (%zu checks, %.2f s)\n", c.id, ok ? "PASS" : "FAIL", c.title, o.checks, secs);
    for (const std::string& f : o.failures) std::printf("    fail: %s\n", f.c_str());
    if (std::getenv("NMWEYL_VERBOSE"))
      for (const std::string& s : o.info) std::printf("    info: %s\n", s.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
