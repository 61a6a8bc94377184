#include "nmweyl/qbg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nmweyl {

const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Bruhat: return "bruhat";
    case EdgeKind::Quantum: return "quantum";
    case EdgeKind::None: break;
  }
  return "none";
}

EdgeKind edge_kind(const WeylElt& w, int root_index) {
  const RootSystem& rs = w.root_system();
  const WeylElt ws = w * WeylElt::reflection(rs, root_index);
  return edge_kind_from_lengths(w.length(), ws.length(), rs.two_rho_pairing(root_index));
}

QuantumBruhatGraph::QuantumBruhatGraph(const RootSystem& rs, std::size_t limit)
    : rs_(&rs), num_roots_(rs.num_positive_roots()), vertices_(enumerate_weyl_group(rs, limit)) {
  const int nv = static_cast<int>(vertices_.size());
  for (int v = 0; v < nv; ++v) index_.push_back({vertices_[v].rho_image(), v});
  std::sort(index_.begin(), index_.end());

  std::vector<WeylElt> refl;
  for (int a = 0; a < num_roots_; ++a) refl.push_back(WeylElt::reflection(rs, a));

  kind_.assign(static_cast<std::size_t>(nv) * num_roots_, EdgeKind::None);
  target_.assign(static_cast<std::size_t>(nv) * num_roots_, -1);
  for (int v = 0; v < nv; ++v) {
    for (int a = 0; a < num_roots_; ++a) {
      const WeylElt ws = vertices_[v] * refl[a];
      const int t = index_of(ws);
      const EdgeKind k = edge_kind_from_lengths(vertices_[v].length(), ws.length(), rs.two_rho_pairing(a));
      kind_[v * num_roots_ + a] = k;
      target_[v * num_roots_ + a] = t;
      if (k != EdgeKind::None) edges_.push_back({v, t, a, k});
    }
  }
}

int QuantumBruhatGraph::index_of(const WeylElt& w) const {
  const Weight key = w.rho_image();
  auto it = std::lower_bound(index_.begin(), index_.end(), std::make_pair(key, -1));
  if (it == index_.end() || it->first != key) throw std::out_of_range("element not in QBG");
  return it->second;
}

bool QuantumBruhatGraph::strongly_connected() const {
  const int nv = static_cast<int>(vertices_.size());
  auto reach = [&](bool reverse) {
    std::vector<std::vector<int>> adj(nv);
    for (const QBGEdge& e : edges_) {
      if (reverse)
        adj[e.to].push_back(e.from);
      else
        adj[e.from].push_back(e.to);
    }
    std::vector<char> seen(nv, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int t : adj[v])
        if (!seen[t]) {
          seen[t] = 1;
          ++count;
          stack.push_back(t);
        }
    }
    return count == nv;
  };
  return reach(false) && reach(true);
}

std::string QuantumBruhatGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph QBG {\n  // " << rs_->type().name() << "\n";
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    os << "  v" << v << " [label=\"";
    const auto word = reduced_word(vertices_[v]);
    if (word.empty()) os << "e";
    for (std::size_t k = 0; k < word.size(); ++k) os << (k ? " " : "") << "s" << word[k] + 1;
    os << "\"];\n";
  }
  for (const QBGEdge& e : edges_) {
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << to_string(rs_->positive_roots()[e.root].root)
       << "\", style=" << (e.kind == EdgeKind::Bruhat ? "solid" : "dashed") << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace nmweyl
