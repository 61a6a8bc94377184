#include "nmweyl/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "nmweyl/io.hpp"
#include "nmweyl/parallel.hpp"
#include "nmweyl/qbg.hpp"

namespace nmweyl {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Weight parse_weight(const std::string& text, int rank, const char* flag) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      v.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": not an integer list: '" + text + "'");
    }
  }
  if (static_cast<int>(v.size()) != rank)
    throw UsageError(std::string(flag) + ": expected " + std::to_string(rank) + " coordinates, got " +
                     std::to_string(v.size()));
  return Weight(std::span<const int>(v));
}

std::string word_string(const std::vector<int>& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? " s" : "s") + std::to_string(w[k] + 1);
  return s;
}

void print_report_text(const VerifyReport& r, std::ostream& out) {
  out << r.suite << " " << r.cartan << " box=" << r.box << " qmax=" << r.qmax;
  if (r.weight) out << " weight=" << to_string(*r.weight);
  out << "\n";
  for (const Check& c : r.checks)
    if (!c.pass) out << "FAIL " << c.description << "\n  expected: " << c.expected << "\n  actual:   " << c.actual << "\n";
  for (const std::string& n : r.notes) out << "note: " << n << "\n";
  out << (r.pass() ? "PASS" : "FAIL") << " (" << r.checks.size() - r.failures() << "/" << r.checks.size()
      << " checks)\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonsymmetric Macdonald polynomials at t=0 and Iwahori character identities"};
  app.name("nmweyl");
  app.require_subcommand(1);
  app.fallthrough();

  std::string cartan = "A1";
  int qmax = 8;
  int box = 3;
  std::string fmt = "json";
  int threads = 0;
  app.add_option("--cartan", cartan, "Cartan type, e.g. A2, B3, G2")->capture_default_str();
  app.add_option("--qmax", qmax, "q-truncation order")->check(CLI::NonNegativeNumber)->capture_default_str();
  app.add_option("--box", box, "weight box radius |coord| <= box")->check(CLI::NonNegativeNumber)->capture_default_str();
  app.add_option("--out", fmt, "output format")->check(CLI::IsMember({"json", "text", "dot"}))->capture_default_str();
  app.add_option("--threads", threads, "worker threads (0: NMWEYL_THREADS or hardware)")->check(CLI::NonNegativeNumber);

  std::string weight, lam, mu, label = "proper", suite;
  int restrict_from = -1;
  bool dot = false, pairing = false;

  auto* e_cmd = app.add_subcommand("e", "E_lambda(x,q,0)");
  e_cmd->add_option("--weight", weight, "weight in fundamental-weight coordinates, comma separated")->required();
  auto* dual_cmd = app.add_subcommand("dual", "F_mu(y,q) = E_mu(y,q^-1,inf)");
  dual_cmd->add_option("--weight", weight)->required();
  auto* norm_cmd = app.add_subcommand("norm", "(q)_lambda");
  norm_cmd->add_option("--weight", weight)->required();
  auto* m_cmd = app.add_subcommand("mcoeff", "m_{lambda,mu}(q) by both routes");
  m_cmd->add_option("--lam", lam)->required();
  m_cmd->add_option("--mu", mu)->required();
  auto* qbg_cmd = app.add_subcommand("qbg", "quantum Bruhat graph");
  qbg_cmd->add_flag("--dot", dot, "Graphviz output");
  auto* paths_cmd = app.add_subcommand("paths", "quantum alcove paths");
  paths_cmd->add_option("--weight", weight)->required();
  paths_cmd->add_option("--restrict", restrict_from, "restricted enumeration on the word of t_{lambda_-}")
      ->check(CLI::NonNegativeNumber);
  auto* char_cmd = app.add_subcommand("char", "module characters");
  char_cmd->add_option("--weight", weight)->required();
  char_cmd->add_option("--label", label)
      ->check(CLI::IsMember({"proper", "standard", "costandard", "algebra", "projective"}))
      ->capture_default_str();
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"orth", "orthogonality", "expansion", "bichar", "bicharacter", "eta", "positivity", "sl2",
                             "anchors"}));
  verify_cmd->add_option("--lam", lam, "lambda for the expansion suite");
  verify_cmd->add_flag("--pairing", pairing, "also compute m by the pairing route");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "nmweyl: " << e.what() << "\n";
    return 2;
  }

  std::shared_ptr<const RootSystem> rs;
  try {
    rs = RootSystem::build(cartan);
  } catch (const std::exception& e) {
    err << "nmweyl: --cartan: " << e.what() << "\n";
    return 2;
  }
  if (threads > 0) threads = std::min(threads, 256);
  VerifyOptions vopt;
  vopt.threads = threads;
  vopt.pairing_route = pairing;

  auto provenance = [&](const std::string& cmd) {
    return json{{"command", cmd}, {"type", rs->type().name()}, {"qmax", qmax}, {"box", box}};
  };
  auto emit = [&](json j, const std::string& text) {
    if (fmt == "json")
      out << j.dump(2) << "\n";
    else
      out << text << "\n";
  };

  try {
    EFamily fam(rs);
    const int n = rs->rank();
    if (e_cmd->parsed()) {
      const Weight l = parse_weight(weight, n, "--weight");
      const QSeriesPoly e = fam.e_t0(l, qmax);
      json j = provenance("e");
      j["weight"] = weight_json(l);
      j["result"] = series_json(e);
      emit(j, e.to_string());
      return 0;
    }
    if (dual_cmd->parsed()) {
      const Weight l = parse_weight(weight, n, "--weight");
      const QSeriesPoly f = fam.f_t_inf(l, qmax);
      json j = provenance("dual");
      j["weight"] = weight_json(l);
      j["result"] = series_json(f);
      emit(j, f.to_string());
      return 0;
    }
    if (norm_cmd->parsed()) {
      const Weight l = parse_weight(weight, n, "--weight");
      const QSeries s = fam.q_norm(l);
      json j = provenance("norm");
      j["weight"] = weight_json(l);
      j["result"] = series_json(s);
      emit(j, s.to_string());
      return 0;
    }
    if (m_cmd->parsed()) {
      const Weight l = parse_weight(lam, n, "--lam"), m = parse_weight(mu, n, "--mu");
      const MCoeff mc = fam.m_coeff(l, m, qmax);
      json j = provenance("mcoeff");
      j["lambda"] = weight_json(l);
      j["mu"] = weight_json(m);
      j["from_dual"] = series_json(mc.from_dual);
      j["from_pairing"] = series_json(mc.from_pairing);
      j["pairing_box"] = mc.box;
      j["agree"] = mc.agree();
      emit(j, "y-coefficient: " + mc.from_dual.to_string() + "\npairing:       " + mc.from_pairing.to_string() +
                  (mc.agree() ? "\nagree" : "\nDISAGREE"));
      return mc.agree() ? 0 : 1;
    }
    if (qbg_cmd->parsed()) {
      const QuantumBruhatGraph g(*rs);
      if (dot || fmt == "dot") {
        out << g.to_dot();
        return 0;
      }
      json edges = json::array();
      std::string text;
      for (const QBGEdge& e : g.edges()) {
        const std::string from = word_string(reduced_word(g.vertices()[e.from]));
        const std::string to = word_string(reduced_word(g.vertices()[e.to]));
        edges.push_back({{"from", from}, {"to", to}, {"root", weight_json(rs->positive_roots()[e.root].root)},
                         {"kind", to_string(e.kind)}});
        text += from + " -> " + to + " [" + to_string(e.kind) + "]\n";
      }
      json j = provenance("qbg");
      j["vertices"] = g.vertices().size();
      j["edges"] = edges;
      j["strongly_connected"] = g.strongly_connected();
      emit(j, text + (g.strongly_connected() ? "strongly connected" : "NOT strongly connected"));
      return 0;
    }
    if (paths_cmd->parsed()) {
      const Weight l = parse_weight(weight, n, "--weight");
      const AffineWeylGroup& G = fam.group();
      ReducedWord word;
      int r = 0;
      if (restrict_from >= 0) {
        word = G.translation_word(l).word;
        r = restrict_from;
        if (r > static_cast<int>(word.letters.size())) throw UsageError("--restrict exceeds the word length");
      } else {
        word = G.reduced_word(G.min_coset_rep(l));
      }
      json paths = json::array();
      std::string text;
      enumerate_paths(G, word, G.evaluate(word), r, [&](const AlcovePath& p) {
        paths.push_back(path_json(p));
        text += "J=" + json(p.J).dump() + " wt=" + to_string(p.wt) + " qdeg=" + std::to_string(p.qdeg) + "\n";
        return true;
      });
      json j = provenance("paths");
      j["weight"] = weight_json(l);
      j["word"] = {{"pi", word.pi_index}, {"letters", word.letters}};
      j["restrict"] = r;
      j["paths"] = paths;
      emit(j, text + std::to_string(paths.size()) + " paths");
      return 0;
    }
    if (char_cmd->parsed()) {
      const Weight l = parse_weight(weight, n, "--weight");
      CharRecord rec;
      if (label == "proper") {
        rec = ch_proper_standard(fam, l);
        rec.character = rec.character.truncated(qmax);
      } else if (label == "standard") {
        rec = ch_standard(fam, l, qmax);
      } else if (label == "costandard") {
        rec = ch_dual_proper_costandard(fam, l, qmax);
      } else if (label == "algebra") {
        rec = {CharLabel::Algebra, l, QSeriesPoly::constant(n, ch_A_algebra(fam, l, qmax)), "prod (1-q^k)^-1"};
      } else {
        rec = ch_projective_record(fam, l, qmax, box);
      }
      json j = provenance("char");
      j["record"] = char_record_json(rec);
      emit(j, rec.character.to_string());
      return 0;
    }
    if (verify_cmd->parsed()) {
      VerifyReport rep;
      if (suite == "orth" || suite == "orthogonality") {
        rep = verify_orthogonality(fam, box, qmax, vopt);
      } else if (suite == "expansion") {
        if (lam.empty()) throw UsageError("verify expansion needs --lam");
        rep = verify_expansion(fam, parse_weight(lam, n, "--lam"), box, qmax, vopt);
      } else if (suite == "bichar" || suite == "bicharacter") {
        rep = verify_bicharacter(fam, box, qmax, vopt);
      } else if (suite == "eta") {
        rep = verify_eta(*rs, qmax);
      } else if (suite == "positivity") {
        rep = verify_positivity(fam, box, qmax, vopt);
      } else if (suite == "sl2") {
        rep = verify_sl2_golden(vopt);
      } else {
        rep = verify_a1_anchors();
      }
      if (fmt == "json") {
        out << report_json(rep).dump(2) << "\n";
      } else {
        print_report_text(rep, out);
      }
      return rep.pass() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "nmweyl: " << e.what() << "\n";
    return 2;
  } catch (const NotStabilized& e) {
    err << "nmweyl: " << e.what() << "\n";
    return 1;
  } catch (const std::length_error& e) {
    err << "nmweyl: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "nmweyl: error: " << e.what() << "\n";
    return 1;
  }
  err << "nmweyl: no subcommand\n";
  return 2;
}

}  // namespace nmweyl
