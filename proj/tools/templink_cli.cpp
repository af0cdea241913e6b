// templink: linking numbers of periodic orbits on the template T_{p,q,r}.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "templink/census.hpp"
#include "templink/report.hpp"

using namespace templink;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct TripleFlags {
  int p = 0, q = 0, r = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--p", p, "first cone order")->required();
    cmd->add_option("--q", q, "second cone order")->required();
    cmd->add_option("--r", r, "third cone order")->required();
  }
  Triple triple() const { return Triple(p, q, r); }
};

struct Output {
  std::string format = "text";
  std::string path;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--format", format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
    cmd->add_option("--out", path, "write the report to this file instead of stdout");
  }
  Format fmt() const { return parse_format(format); }

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    f << text;
  }
};

std::vector<CyclicWord> parse_orbits(const std::vector<std::string>& words) {
  std::vector<CyclicWord> out;
  for (const auto& w : words) out.push_back(CyclicWord::parse(w));
  return out;
}

std::string word_list(const std::vector<CyclicWord>& words, Format f, const std::string& key) {
  std::ostringstream os;
  switch (f) {
    case Format::csv:
      os << key << '\n';
      for (const auto& w : words) os << w.str() << '\n';
      break;
    case Format::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& w : words) arr.push_back(w.str());
      os << nlohmann::ordered_json{{key, arr}}.dump(2) << '\n';
      break;
    }
    case Format::text:
      for (const auto& w : words) os << w.str() << '\n';
      break;
  }
  return os.str();
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linking numbers of periodic orbits of geodesic flows on 3-conic spheres"};
  app.require_subcommand(1);

  // lk
  TripleFlags lk_t;
  Output lk_out;
  std::vector<std::string> lk_words;
  auto* lk = app.add_subcommand("lk", "linking number of two orbits");
  lk_t.add_to(lk);
  lk_out.add_to(lk);
  lk->add_option("words", lk_words, "two cyclic words over {a,b}")->required()->expected(2);

  // cr
  std::vector<std::string> cr_words;
  auto* cr = app.add_subcommand("cr", "crossing number of two orbits (self-crossing when equal)");
  cr->add_option("words", cr_words, "two cyclic words over {a,b}")->required()->expected(2);

  // admissible
  TripleFlags adm_t;
  std::vector<std::string> adm_words;
  auto* adm = app.add_subcommand("admissible", "check whether words code orbits of the template");
  adm_t.add_to(adm);
  adm->add_option("words", adm_words, "cyclic words over {a,b}")->required();

  // enumerate
  TripleFlags en_t;
  Output en_out;
  std::size_t en_len = 8;
  auto* en = app.add_subcommand("enumerate", "all admissible orbits up to a length");
  en_t.add_to(en);
  en_out.add_to(en);
  en->add_option("--max-len", en_len, "maximal word length")->capture_default_str();

  // extremal
  TripleFlags ex_t;
  Output ex_out;
  std::size_t ex_check = 0;
  auto* ex = app.add_subcommand("extremal", "extremal orbit codes");
  ex_t.add_to(ex);
  ex_out.add_to(ex);
  ex->add_option("--max-len", ex_check,
                 "also compare with the admissible orbits without admissible cut up to this length");

  // cuts
  std::string cuts_word;
  std::optional<int> cuts_p, cuts_q, cuts_r;
  auto* cuts = app.add_subcommand("cuts", "cuts of a cyclic word");
  cuts->add_option("word", cuts_word, "cyclic word over {a,b}")->required();
  cuts->add_option("--p", cuts_p, "with --q and --r: mark admissible cuts");
  cuts->add_option("--q", cuts_q);
  cuts->add_option("--r", cuts_r);

  // verify
  std::optional<int> v_p, v_q, v_r;
  int v_pmax = 4, v_qmax = 5, v_rmax = 7;
  std::optional<int> v_p2q, v_p2r;
  unsigned v_jobs = default_jobs();
  std::size_t v_len = 0;
  bool v_self = true;
  std::vector<std::string> v_words;
  Output v_out;
  auto* verify = app.add_subcommand("verify", "check that all pairs of extremal orbits link negatively");
  verify->add_option("--p", v_p, "single triple (with --q, --r)");
  verify->add_option("--q", v_q);
  verify->add_option("--r", v_r);
  verify->add_option("--p-max", v_pmax)->capture_default_str();
  verify->add_option("--q-max", v_qmax)->capture_default_str();
  verify->add_option("--r-max", v_rmax)->capture_default_str();
  verify->add_option("--p2-q-max", v_p2q, "bound on q for p = 2 (default --q-max)");
  verify->add_option("--p2-r-max", v_p2r, "bound on r for p = 2 (default --r-max)");
  verify->add_option("--jobs", v_jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--max-len", v_len, "single triple: use all admissible orbits up to this length");
  verify->add_option("words", v_words, "single triple: verify these words instead of the extremal orbits");
  verify->add_flag("--self,!--no-self", v_self, "include self-pairs (default on)");
  v_out.add_to(verify);

  // table
  TripleFlags tab_t;
  auto* table = app.add_subcommand("table", "kneading sequences and constants of a triple");
  tab_t.add_to(table);

  // homology
  std::vector<std::int64_t> orders;
  auto* hom = app.add_subcommand("homology", "order of H_1 of the unit tangent bundle");
  hom->add_option("orders", orders, "cone orders")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "templink: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*lk) {
      const Triple t = lk_t.triple();
      const auto w = parse_orbits(lk_words);
      if (lk_out.fmt() == Format::text) {
        lk_out.emit(template_linking(t, w[0], w[1]).str() + '\n');
      } else {
        const auto start = std::chrono::steady_clock::now();
        const auto reports = verify_pairs(t, w, w[0] == w[1]);
        std::ostringstream os;
        write_pairs(os, t, reports, lk_out.fmt(), elapsed(start));
        lk_out.emit(os.str());
      }
    } else if (*cr) {
      const auto w = parse_orbits(cr_words);
      std::cout << pair_crossing(w[0], w[1]) << '\n';
    } else if (*adm) {
      const KneadingData kd = kneading(adm_t.triple());
      for (const auto& raw : adm_words) {
        const Canonical c = canonicalize(raw);
        const bool ok = c.power == 1 && is_admissible(c.root, kd);
        std::cout << raw << ' ' << (ok ? "admissible" : "not admissible") << '\n';
      }
    } else if (*en) {
      en_out.emit(word_list(enumerate_admissible(en_t.triple(), en_len), en_out.fmt(), "words"));
    } else if (*ex) {
      const Triple t = ex_t.triple();
      if (ex_check == 0) {
        ex_out.emit(word_list(extremal_orbits(t), ex_out.fmt(), "words"));
      } else {
        const auto check = cross_check_extremal(t, ex_check);
        std::ostringstream os;
        const auto line = [&](const char* name, const std::vector<CyclicWord>& ws) {
          os << name << " (" << ws.size() << "):";
          for (const auto& w : ws) os << ' ' << w.str();
          os << '\n';
        };
        line("formula", check.formula);
        line("no admissible cut", check.census);
        line("formula only", check.formula_only);
        line("census only", check.census_only);
        line("formula, not admissible", check.non_admissible);
        os << (check.consistent() ? "consistent" : "inconsistent") << '\n';
        ex_out.emit(os.str());
      }
    } else if (*cuts) {
      const CyclicWord w = CyclicWord::parse(cuts_word);
      std::optional<KneadingData> kd;
      if (cuts_p || cuts_q || cuts_r) {
        if (!(cuts_p && cuts_q && cuts_r)) throw CLI::ValidationError("--p, --q and --r go together");
        kd = kneading(Triple(*cuts_p, *cuts_q, *cuts_r));
      }
      for (const auto& c : enumerate_cuts(w)) {
        std::cout << to_string(c.u) << '|' << to_string(c.v);
        if (kd) std::cout << (is_admissible_cut(c, *kd) ? " admissible" : " not admissible");
        std::cout << '\n';
      }
    } else if (*verify) {
      std::ostringstream os;
      std::size_t violations = 0;
      if (v_p || v_q || v_r) {
        if (!(v_p && v_q && v_r)) throw CLI::ValidationError("--p, --q and --r go together");
        const Triple t(*v_p, *v_q, *v_r);
        const auto start = std::chrono::steady_clock::now();
        const auto words = !v_words.empty() ? parse_orbits(v_words)
                           : v_len > 0      ? enumerate_admissible(t, v_len)
                                            : extremal_orbits(t);
        const auto reports = verify_pairs(t, words, v_self);
        for (const auto& r : reports) violations += r.negative ? 0 : 1;
        write_pairs(os, t, reports, v_out.fmt(), elapsed(start));
      } else {
        if (!v_words.empty()) throw CLI::ValidationError("words need a single triple (--p, --q, --r)");
        auto triples = verification_triples(v_pmax, v_qmax, v_rmax);
        const int q2 = v_p2q.value_or(v_qmax), r2 = v_p2r.value_or(v_rmax);
        for (const auto& t : verification_triples(2, q2, r2)) {
          if (std::find(triples.begin(), triples.end(), t) == triples.end()) triples.push_back(t);
        }
        std::sort(triples.begin(), triples.end());
        const RangeSummary s = verify_triples(triples, v_jobs);
        violations = s.violations;
        write_range(os, s, v_out.fmt());
      }
      v_out.emit(os.str());
      if (violations > 0) {
        std::cerr << "templink: " << violations << " pair(s) with non-negative linking number\n";
        return kViolation;
      }
    } else if (*table) {
      const Triple t = tab_t.triple();
      const KneadingData kd = kneading(t);
      const BlockConstraints bc = max_block_constraints(t);
      std::cout << align_columns({{"triple", t.str()},
                                  {"delta", std::to_string(t.delta())},
                                  {"u_L", kd.u_left.str()},
                                  {"u_R", kd.u_right.str()},
                                  {"v_L", kd.v_left.str()},
                                  {"v_R", kd.v_right.str()},
                                  {"max a-run", std::to_string(bc.max_run_a)},
                                  {"max b-run", std::to_string(bc.max_run_b)},
                                  {"max block repeat", std::to_string(bc.max_syllable_repeat)},
                                  {"fiber linking", fiber_linking(t).str()}});
    } else if (*hom) {
      std::cout << homology_order(orders) << '\n';
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "templink: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {  // WordError, DomainError
    std::cerr << "templink: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "templink: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
