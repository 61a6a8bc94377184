#pragma once

#include <string>
#include <vector>

#include "nmweyl/weyl.hpp"

namespace nmweyl {

enum class EdgeKind { None, Bruhat, Quantum };

const char* to_string(EdgeKind k);

/// Kind of the arrow w -> w s_alpha for a positive root alpha (by index).
EdgeKind edge_kind(const WeylElt& w, int root_index);

/// Same test when l(w s_alpha) is already known.
inline EdgeKind edge_kind_from_lengths(int len_w, int len_ws, int two_rho_pairing) {
  if (len_ws == len_w + 1) return EdgeKind::Bruhat;
  if (len_ws == len_w - two_rho_pairing + 1) return EdgeKind::Quantum;
  return EdgeKind::None;
}

struct QBGEdge {
  int from = 0;  // vertex index
  int to = 0;
  int root = 0;  // positive root index
  EdgeKind kind = EdgeKind::None;
};

/// Quantum Bruhat graph of W with vertices in length-lex order and a flat
/// (vertex, root) -> edge table.
class QuantumBruhatGraph {
 public:
  explicit QuantumBruhatGraph(const RootSystem& rs, std::size_t limit = 200000);

  const std::vector<WeylElt>& vertices() const { return vertices_; }
  const std::vector<QBGEdge>& edges() const { return edges_; }
  int index_of(const WeylElt& w) const;

  EdgeKind kind(int vertex, int root) const { return kind_[vertex * num_roots_ + root]; }
  int target(int vertex, int root) const { return target_[vertex * num_roots_ + root]; }

  bool strongly_connected() const;
  /// Graphviz rendering; Bruhat edges solid, quantum edges dashed.
  std::string to_dot() const;

 private:
  const RootSystem* rs_;
  int num_roots_ = 0;
  std::vector<WeylElt> vertices_;
  std::vector<QBGEdge> edges_;
  std::vector<EdgeKind> kind_;
  std::vector<int> target_;
  std::vector<std::pair<Weight, int>> index_;  // sorted by rho image
};

}  // namespace nmweyl
