#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nmweyl/characters.hpp"
#include "nmweyl/macdonald.hpp"

namespace nmweyl {

struct Check {
  std::string description;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::string cartan;
  int box = 0;
  int qmax = 0;
  std::optional<Weight> weight;
  std::vector<Check> checks;
  std::vector<std::string> notes;  // informational, never affects pass

  bool pass() const;
  void add(std::string description, std::string expected, std::string actual, bool ok);
  void add(std::string description, const QSeries& expected, const QSeries& actual) {
    add(std::move(description), expected.to_string(), actual.to_string(), expected == actual);
  }
  void add(std::string description, const QSeriesPoly& expected, const QSeriesPoly& actual) {
    add(std::move(description), expected.to_string(), actual.to_string(), expected == actual);
  }
  /// Appends the checks and notes of another report, prefixing descriptions.
  void merge(const VerifyReport& other, const std::string& prefix);
  std::size_t failures() const;
};

struct VerifyOptions {
  int threads = 0;          // 0: NMWEYL_THREADS or hardware
  bool pairing_route = false;  // also compute m_{lambda,mu} through <ch P, G>_0
  int max_rounds = 12;      // candidate-radius enlargements before giving up
};

VerifyReport verify_orthogonality(const EFamily& fam, int box, int qmax, const VerifyOptions& opt = {});
VerifyReport verify_expansion(const EFamily& fam, const Weight& lambda, int box, int qmax,
                              const VerifyOptions& opt = {});
VerifyReport verify_bicharacter(const EFamily& fam, int box, int qmax, const VerifyOptions& opt = {});
VerifyReport verify_eta(const RootSystem& rs, int qmax);
VerifyReport verify_positivity(const EFamily& fam, int box, int qmax, const VerifyOptions& opt = {});
/// The complete SL(2), lambda = 0 example with its exact values.
VerifyReport verify_sl2_golden(const VerifyOptions& opt = {});
/// Closed forms of E, (q), G for A1 weights +-alpha.
VerifyReport verify_a1_anchors();

/// Sum over the affine Weyl group: sum_{u in W, h in Q^vee} (-1)^{l(u)}
/// x^{rho - u rho - h^vee nu(h)} q^{<u rho, h> + h^vee |nu(h)|^2 / 2}, truncated.
QSeriesPoly eta_affine_weyl_sum(const RootSystem& rs, int qmax);

/// Candidates mu ≽ lambda with mu - lambda in Q and |coords| <= radius.
std::vector<Weight> expansion_candidates(const EFamily& fam, const Weight& lambda, int radius);

}  // namespace nmweyl
