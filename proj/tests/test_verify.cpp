#include "doctest.h"

#include "nmweyl/io.hpp"
#include "nmweyl/verify.hpp"
#include "oracles.hpp"

using namespace nmweyl;

namespace {

std::string failures(const VerifyReport& r) {
  std::string s;
  for (const Check& c : r.checks)
    if (!c.pass) s += c.description + ": expected " + c.expected + ", got " + c.actual + "\n";
  return s;
}

// q = 0 slice of ch P_0: prod over positive roots of (1 - x^a)^{-1}, on a box
QSeriesPoly geometric_q0(const RootSystem& rs, int box) {
  std::map<Weight, Integer> cur{{Weight(rs.rank()), 1}};
  for (const Root& r : rs.positive_roots()) {
    std::map<Weight, Integer> nxt;
    for (const auto& [w, c] : cur)
      for (Weight v = w; v.max_abs() <= 8 * box + 12; v += r.root) nxt[v] += c;
    cur.swap(nxt);
  }
  QSeriesPoly out(rs.rank(), 0);
  for (const auto& [w, c] : cur)
    if (w.max_abs() <= box) out.add_term(w, 0, c);
  return out;
}

}  // namespace

TEST_CASE("orthogonality suites") {
  EFamily a1("A1");
  const VerifyReport r = verify_orthogonality(a1, 2, 6);
  CHECK_MESSAGE(r.pass(), failures(r));
  CHECK(r.checks.size() == 25);
  CHECK(r.checks.front().description.find("<E_") == 0);
  EFamily a2("A2");
  const VerifyReport r2 = verify_orthogonality(a2, 1, 4);
  CHECK_MESSAGE(r2.pass(), failures(r2));
  for (const char* name : {"B2", "G2", "C3"}) {
    EFamily f(name);
    CHECK(inner0(f.root_system(), f.e_t0(f.root_system().zero_weight(), 4), f.dual_t_inf(f.root_system().zero_weight(), 4)) ==
          QSeries::one(4));
  }
}

TEST_CASE("expansion suites") {
  EFamily a1("A1");
  VerifyOptions opt;
  opt.pairing_route = true;
  for (const Weight& lam : {Weight{0}, Weight{1}, Weight{-1}}) {
    CAPTURE(lam);
    const VerifyReport r = verify_expansion(a1, lam, 3, 2, opt);
    CHECK_MESSAGE(r.pass(), failures(r));
    CHECK(r.checks.front().description == "candidate set stabilized");
  }
  VerifyOptions short_run;
  short_run.max_rounds = 0;
  const VerifyReport bad = verify_expansion(a1, Weight{0}, 3, 2, short_run);
  CHECK_FALSE(bad.pass());
  CHECK(bad.checks.front().actual.find("last two candidate sets") != std::string::npos);
}

TEST_CASE("q = 0 slice of the expansion against the geometric series") {
  for (auto [name, box] : {std::pair{"A1", 4}, {"A2", 2}, {"B2", 1}}) {
    CAPTURE(name);
    EFamily fam(name);
    const RootSystem& rs = fam.root_system();
    const Weight z = rs.zero_weight();
    QSeriesPoly rhs(rs.rank(), 0);
    for (const Weight& mu : expansion_candidates(fam, z, box + 4)) {
      const QSeries m = fam.m_coeff_dual(z, mu, 0);
      if (!m.is_zero()) rhs += m * fam.e_t0(mu, 0).restricted(box);
    }
    CHECK(rhs == geometric_q0(rs, box));
    CHECK(fam.projective(z, 0, box) == geometric_q0(rs, box));
  }
}

TEST_CASE("bicharacter suites") {
  EFamily a1("A1");
  const VerifyReport r = verify_bicharacter(a1, 2, 2);
  CHECK_MESSAGE(r.pass(), failures(r));
  EFamily a2("A2");
  const VerifyReport r2 = verify_bicharacter(a2, 1, 1);
  CHECK_MESSAGE(r2.pass(), failures(r2));
}

TEST_CASE("eta, positivity, golden and anchors") {
  for (auto [name, qmax] : {std::pair{"A1", 6}, {"A2", 5}, {"G2", 3}}) {
    auto rs = RootSystem::build(name);
    const VerifyReport r = verify_eta(*rs, qmax);
    CHECK_MESSAGE(r.pass(), failures(r));
    CHECK(eta_affine_weyl_sum(*rs, qmax) == oracle::eta_kac(*rs, qmax));
  }
  EFamily a1("A1");
  const VerifyReport p = verify_positivity(a1, 2, 6);
  CHECK_MESSAGE(p.pass(), failures(p));
  const VerifyReport g = verify_sl2_golden();
  CHECK_MESSAGE(g.pass(), failures(g));
  const VerifyReport an = verify_a1_anchors();
  CHECK_MESSAGE(an.pass(), failures(an));
}

TEST_CASE("reports are deterministic across thread counts") {
  EFamily a(std::string_view("A2")), b(std::string_view("A2"));
  VerifyOptions one, four;
  one.threads = 1;
  four.threads = 4;
  CHECK(report_json(verify_orthogonality(a, 1, 3, one)).dump() == report_json(verify_orthogonality(b, 1, 3, four)).dump());
  CHECK(report_json(verify_expansion(a, Weight{1, 0}, 1, 1, four)).dump() ==
        report_json(verify_expansion(b, Weight{1, 0}, 1, 1, one)).dump());
}

TEST_CASE("raising qmax keeps lower coefficients") {
  EFamily fam("A1");
  for (const Weight& lam : weights_in_box(1, 3)) {
    const QSeriesPoly g3 = fam.dual_truncated(lam, 3), g6 = fam.dual_truncated(lam, 6);
    CHECK(g6.truncated(3) == g3);
    CHECK(fam.projective(lam, 2, 3) == fam.projective(lam, 4, 3).truncated(2));
  }
}

TEST_CASE("report JSON layout") {
  const json j = report_json(verify_a1_anchors());
  CHECK(j.at("suite") == "anchors");
  CHECK(j.at("params").at("type") == "A1");
  CHECK(j.at("pass") == true);
  CHECK(j.at("checks")[0].contains("expected"));
}
