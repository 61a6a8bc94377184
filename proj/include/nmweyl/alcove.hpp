#pragma once

#include <functional>
#include <vector>

#include "nmweyl/series.hpp"
#include "nmweyl/weyl.hpp"

namespace nmweyl {

struct AlcovePath {
  std::vector<int> J;                 // 1-based positions in the word, increasing
  ExtAffineElt end;
  std::vector<long> quantum_degrees;  // deg of the coroot at each quantum step
  Weight wt;                          // wt(end)
  long qdeg = 0;
};

/// Folded form of a word: the start point and the data of each reflection.
struct PathData {
  ExtAffineElt start;  // pi s_{i_{r+1}} ... s_{i_l}
  std::vector<AffineCoroot> betas;
  int restrict_from = 0;
  long max_qdeg = 0;  // sum of deg over the allowed positions
};

PathData path_data(const AffineWeylGroup& G, const ReducedWord& word, int restrict_from);

/// Depth-first enumeration of the quantum alcove paths J ⊆ {r+1, ..., l} of
/// the word, starting from its suffix after position r; for r = 0 that is u
/// itself. The callback returns false to stop early.
/// Throws std::invalid_argument if the word is not a reduced word of u.
void enumerate_paths(const AffineWeylGroup& G, const ReducedWord& word, const ExtAffineElt& u, int restrict_from,
                     const std::function<bool(const AlcovePath&)>& visit);

/// Sum of x^wt q^qdeg over the paths, by folding the enumeration.
QSeriesPoly path_sum_enumerated(const AffineWeylGroup& G, const ReducedWord& word, int restrict_from, int qmax);

/// Same sum by dynamic programming over (position, direction); polynomial in
/// the word length for fixed W.
QSeriesPoly path_sum(const AffineWeylGroup& G, const ReducedWord& word, int restrict_from, int qmax);

/// Upper bound on the q-degree of any path, so qmax >= this gives the exact sum.
long path_qdeg_bound(const AffineWeylGroup& G, const ReducedWord& word, int restrict_from);

}  // namespace nmweyl
