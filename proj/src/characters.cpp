#include "nmweyl/characters.hpp"

#include <stdexcept>

namespace nmweyl {

const char* to_string(CharLabel l) {
  switch (l) {
    case CharLabel::ProperStandard: return "properStandard";
    case CharLabel::Standard: return "standard";
    case CharLabel::DualProperCostandard: return "dualProperCostandard";
    case CharLabel::Algebra: return "algebra";
    case CharLabel::WeylWithChar: return "weylWithChar";
    case CharLabel::Projective: return "projective";
  }
  return "?";
}

QSeries ch_A_algebra(const EFamily& fam, const Weight& lambda, int qmax) {
  QSeries r = QSeries::one(qmax);
  for (int n : fam.norm_exponents(lambda)) {
    for (int k = 1; k <= n; ++k) {
      // 1/(1-q^k) = sum_j q^{jk}
      QSeries geo(qmax);
      for (int j = 0; j * k <= qmax; ++j) geo.add_to(j * k, 1);
      r = r * geo;
    }
  }
  return r;
}

CharRecord ch_proper_standard(const EFamily& fam, const Weight& lambda) {
  const QSeriesPoly& e = fam.e_t0(lambda);
  const QSeriesPoly r = fam.e_t0_restricted(lambda);
  if (!(e == r)) throw std::logic_error("ch D_" + to_string(lambda) + ": restricted paths disagree with m_lambda paths");
  return {CharLabel::ProperStandard, lambda, e, "alcove paths of m_lambda = restricted paths of t_{lambda_-}"};
}

CharRecord ch_standard(const EFamily& fam, const Weight& lambda, int qmax) {
  const QSeriesPoly c = ch_A_algebra(fam, lambda, qmax) * fam.e_t0(lambda, qmax);
  return {CharLabel::Standard, lambda, c, "E_lambda(x,q,0) * ch A_lambda"};
}

CharRecord ch_weyl_with_char(const EFamily& fam, const Weight& mu, int m, const ReducedWord& word) {
  const AffineWeylGroup& G = fam.group();
  if (!(G.evaluate(word) == ExtAffineElt::translation(fam.root_system(), mu)))
    throw std::invalid_argument("word is not a word of t_mu");
  const QSeriesPoly c =
      path_sum(G, word, m, static_cast<int>(path_qdeg_bound(G, word, m))).as_qmax(kExactQ);
  return {CharLabel::WeylWithChar, mu, c, "restricted alcove paths, m = " + std::to_string(m)};
}

CharRecord ch_dual_proper_costandard(const EFamily& fam, const Weight& lambda, int qmax) {
  return {CharLabel::DualProperCostandard, lambda, fam.f_t_inf(lambda, qmax), "G_lambda(y^{-1}) from the orthogonality solve"};
}

CharRecord ch_projective_record(const EFamily& fam, const Weight& lambda, int qmax, int box) {
  return {CharLabel::Projective, lambda, fam.projective(lambda, qmax, box), "geometric expansion in a box of radius " + std::to_string(box)};
}

}  // namespace nmweyl
