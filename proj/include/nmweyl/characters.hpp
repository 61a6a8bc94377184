#pragma once

#include <string>

#include "nmweyl/macdonald.hpp"

namespace nmweyl {

enum class CharLabel { ProperStandard, Standard, DualProperCostandard, Algebra, WeylWithChar, Projective };

const char* to_string(CharLabel l);

struct CharRecord {
  CharLabel label = CharLabel::ProperStandard;
  Weight weight;
  QSeriesPoly character;
  std::string provenance;  // which formula produced it
};

/// Graded character of the highest-weight algebra: prod_j prod_{k<=N_j} (1-q^k)^{-1}.
QSeries ch_A_algebra(const EFamily& fam, const Weight& lambda, int qmax);

/// ch D_lambda = E_lambda(x,q,0), computed from both the m_lambda paths and
/// the restricted paths on the word of t_{lambda_-}; throws std::logic_error
/// if they differ.
CharRecord ch_proper_standard(const EFamily& fam, const Weight& lambda);

/// ch Delta_lambda = E_lambda(x,q,0) ch A_lambda.
CharRecord ch_standard(const EFamily& fam, const Weight& lambda, int qmax);

/// Restricted path sum over J ⊆ {m+1..l} of a reduced word of t_mu.
CharRecord ch_weyl_with_char(const EFamily& fam, const Weight& mu, int m, const ReducedWord& word);

/// ch U∨: E_lambda(y,q^{-1},inf) = F_lambda(y,q).
CharRecord ch_dual_proper_costandard(const EFamily& fam, const Weight& lambda, int qmax);

/// ch P_lambda restricted to a box.
CharRecord ch_projective_record(const EFamily& fam, const Weight& lambda, int qmax, int box);

}  // namespace nmweyl
