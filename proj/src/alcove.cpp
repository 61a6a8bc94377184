#include "nmweyl/alcove.hpp"

#include <stdexcept>
#include <unordered_map>

#include "nmweyl/qbg.hpp"

namespace nmweyl {

namespace {

struct Step {
  int root = -1;      // positive root index of the classical part
  Weight increment;   // -k * bar(beta), before applying the current direction
  long deg = 0;
};

std::vector<Step> steps_of(const RootSystem& rs, const std::vector<AffineCoroot>& betas) {
  std::vector<Step> out;
  for (const AffineCoroot& b : betas) {
    int sign = 1;
    const int idx = rs.coroot_index(b.classical, &sign);
    if (idx < 0) throw std::logic_error("beta sequence entry is not an affine coroot");
    Weight root = rs.positive_roots()[idx].root;
    if (sign < 0) root = -root;
    out.push_back({idx, static_cast<int>(-b.deg) * root, b.deg});
  }
  return out;
}

}  // namespace

PathData path_data(const AffineWeylGroup& G, const ReducedWord& word, int restrict_from) {
  const int l = static_cast<int>(word.letters.size());
  if (restrict_from < 0 || restrict_from > l) throw std::invalid_argument("restrict_from out of range");
  PathData d{G.pi_subgroup()[word.pi_index], G.beta_sequence(word), restrict_from, 0};
  for (int j = restrict_from; j < l; ++j) d.start = d.start * G.simple_reflection(word.letters[j]);
  for (int j = restrict_from; j < l; ++j) d.max_qdeg += std::max(0L, d.betas[j].deg);
  return d;
}

long path_qdeg_bound(const AffineWeylGroup& G, const ReducedWord& word, int restrict_from) {
  return path_data(G, word, restrict_from).max_qdeg;
}

void enumerate_paths(const AffineWeylGroup& G, const ReducedWord& word, const ExtAffineElt& u, int restrict_from,
                     const std::function<bool(const AlcovePath&)>& visit) {
  if (!(G.evaluate(word) == u)) throw std::invalid_argument("word does not evaluate to u");
  const PathData d = path_data(G, word, restrict_from);
  const RootSystem& rs = G.root_system();
  const std::vector<Step> steps = steps_of(rs, d.betas);
  const int l = static_cast<int>(steps.size());

  std::vector<WeylElt> refl;
  for (int a = 0; a < rs.num_positive_roots(); ++a) refl.push_back(WeylElt::reflection(rs, a));

  AlcovePath cur{{}, d.start, {}, d.start.wt(), 0};
  bool stop = false;
  std::function<void(int)> dfs = [&](int j) {
    if (stop) return;
    if (j == l) {
      cur.wt = cur.end.wt();
      if (!visit(cur)) stop = true;
      return;
    }
    // exclude position j+1 first
    dfs(j + 1);
    if (stop) return;
    const Step& s = steps[j];
    const WeylElt& dir = cur.end.dir();
    const WeylElt next = dir * refl[s.root];
    const EdgeKind kind = edge_kind_from_lengths(dir.length(), next.length(), rs.two_rho_pairing(s.root));
    if (kind == EdgeKind::None) return;
    const ExtAffineElt saved = cur.end;
    cur.end = ExtAffineElt(cur.end.wt() + dir.act(s.increment), next);
    cur.J.push_back(j + 1);
    if (kind == EdgeKind::Quantum) {
      cur.quantum_degrees.push_back(s.deg);
      cur.qdeg += s.deg;
    }
    dfs(j + 1);
    if (kind == EdgeKind::Quantum) {
      cur.quantum_degrees.pop_back();
      cur.qdeg -= s.deg;
    }
    cur.J.pop_back();
    cur.end = saved;
  };
  dfs(restrict_from);
}

QSeriesPoly path_sum_enumerated(const AffineWeylGroup& G, const ReducedWord& word, int restrict_from, int qmax) {
  QSeriesPoly sum(G.rank(), qmax);
  enumerate_paths(G, word, G.evaluate(word), restrict_from, [&](const AlcovePath& p) {
    if (p.qdeg < 0) throw std::logic_error("negative q-degree on an alcove path");
    sum.add_term(p.wt, static_cast<int>(p.qdeg), 1);
    return true;
  });
  return sum;
}

QSeriesPoly path_sum(const AffineWeylGroup& G, const ReducedWord& word, int restrict_from, int qmax) {
  const PathData d = path_data(G, word, restrict_from);
  const RootSystem& rs = G.root_system();
  const std::vector<Step> steps = steps_of(rs, d.betas);
  const int l = static_cast<int>(steps.size());
  const int n = rs.rank();

  std::vector<WeylElt> refl;
  for (int a = 0; a < rs.num_positive_roots(); ++a) refl.push_back(WeylElt::reflection(rs, a));

  // F(j, w): sum over paths through positions > j starting in direction w of
  // x^(weight gained) q^(degree gained).
  std::vector<std::unordered_map<Weight, QSeriesPoly>> memo(l + 1);
  std::function<const QSeriesPoly&(int, const WeylElt&)> F = [&](int j, const WeylElt& w) -> const QSeriesPoly& {
    const Weight key = w.rho_image();
    auto it = memo[j].find(key);
    if (it != memo[j].end()) return it->second;
    QSeriesPoly val(n, qmax);
    if (j == l) {
      val.add_term(Weight(n), 0, 1);
    } else {
      val = F(j + 1, w);
      const Step& s = steps[j];
      const WeylElt next = w * refl[s.root];
      const EdgeKind kind = edge_kind_from_lengths(w.length(), next.length(), rs.two_rho_pairing(s.root));
      if (kind != EdgeKind::None) {
        const long qd = kind == EdgeKind::Quantum ? s.deg : 0;
        if (qd < 0) throw std::logic_error("negative q-degree on an alcove path");
        if (qd <= qmax) val += F(j + 1, next).shifted(w.act(s.increment), static_cast<int>(qd));
      }
    }
    return memo[j].emplace(key, std::move(val)).first->second;
  };
  return F(restrict_from, d.start.dir()).shifted(d.start.wt(), 0);
}

}  // namespace nmweyl
