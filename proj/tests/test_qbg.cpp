#include "doctest.h"

#include "nmweyl/qbg.hpp"
#include "oracles.hpp"

using namespace nmweyl;

TEST_CASE("A1 quantum Bruhat graph") {
  auto rs = RootSystem::build("A1");
  const WeylElt e = WeylElt::identity(*rs), s = WeylElt::simple_reflection(*rs, 0);
  CHECK(edge_kind(e, 0) == EdgeKind::Bruhat);
  CHECK(edge_kind(s, 0) == EdgeKind::Quantum);
  QuantumBruhatGraph g(*rs);
  REQUIRE(g.vertices().size() == 2);
  REQUIRE(g.edges().size() == 2);
  CHECK(g.edges()[0].kind == EdgeKind::Bruhat);
  CHECK(g.vertices()[g.edges()[0].from].is_identity());
  CHECK(g.edges()[1].kind == EdgeKind::Quantum);
  CHECK(g.vertices()[g.edges()[1].to].is_identity());
  CHECK(g.strongly_connected());
}

TEST_CASE("A2 (s1, alpha1) is a quantum step") {
  auto rs = RootSystem::build("A2");
  const WeylElt s1 = WeylElt::simple_reflection(*rs, 0);
  // l(s1 s1) = 0 = 1 - <2rho, alpha1^vee> + 1
  CHECK(edge_kind(s1, 0) == EdgeKind::Quantum);
  QuantumBruhatGraph g(*rs);
  CHECK(g.vertices().size() == 6);
  CHECK(g.edges().size() == 15);
  CHECK(g.strongly_connected());
  const std::string dot = g.to_dot();
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("dashed") != std::string::npos);
}

TEST_CASE("edge kinds agree with direct length computation for |W| <= 1152") {
  for (const char* name : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "G2", "F4"}) {
    CAPTURE(name);
    auto rs = RootSystem::build(name);
    const auto len = oracle::weyl_lengths(*rs);
    QuantumBruhatGraph g(*rs);
    REQUIRE(g.vertices().size() == len.size());
    const int nr = rs->num_positive_roots();
    std::size_t edges = 0;
    bool exclusive = true, kinds_match = true, lengths_ok = true;
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
      const WeylElt& w = g.vertices()[v];
      const int lw = len.at(w.rho_image());
      for (int a = 0; a < nr; ++a) {
        const int lws = len.at(w.act(rs->reflect(rs->rho(), a)));
        const bool bruhat = lws == lw + 1;
        const bool quantum = lws == lw - rs->two_rho_pairing(a) + 1;
        exclusive = exclusive && !(bruhat && quantum);
        const EdgeKind want = bruhat ? EdgeKind::Bruhat : quantum ? EdgeKind::Quantum : EdgeKind::None;
        kinds_match = kinds_match && g.kind(static_cast<int>(v), a) == want;
        if (want != EdgeKind::None) {
          ++edges;
          const int t = g.target(static_cast<int>(v), a);
          lengths_ok = lengths_ok && g.vertices()[t].length() == lws;
        }
      }
    }
    CHECK(exclusive);
    CHECK(kinds_match);
    CHECK(lengths_ok);
    CHECK(g.edges().size() == edges);
    CHECK(g.strongly_connected());
  }
}
