// Command-line front end. Exit codes: 0 ok, 1 not PSD or a falsified
// property, 2 malformed input, 3 resource cap exceeded, 4 undetermined sign.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "s2inf/appendix.hpp"
#include "s2inf/characters.hpp"
#include "s2inf/error.hpp"
#include "s2inf/gns.hpp"
#include "s2inf/obstruction.hpp"
#include "s2inf/random.hpp"
#include "s2inf/suite.hpp"

namespace {

using namespace s2inf;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitUndetermined = 4;

std::vector<std::string> split(std::string const &text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    auto const b = item.find_first_not_of(" \t");
    auto const e = item.find_last_not_of(" \t");
    if (b != std::string::npos)
      out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

unsigned parse_unsigned(std::string const &text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos ||
      text.size() > 9)
    throw ParseError("expected a non-negative integer, got '" + text + "'");
  return static_cast<unsigned>(std::stoul(text));
}

// "1..8", "2,4,8" or "5".
std::vector<unsigned> parse_m_range(std::string const &text) {
  std::vector<unsigned> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    auto const lo = parse_unsigned(text.substr(0, dots));
    auto const hi = parse_unsigned(text.substr(dots + 2));
    if (lo > hi)
      throw ParseError("empty range '" + text + "'");
    for (auto m = lo; m <= hi; ++m)
      out.push_back(m);
  } else {
    for (auto const &item : split(text, ','))
      out.push_back(parse_unsigned(item));
  }
  if (out.empty())
    throw ParseError("empty m list");
  return out;
}

struct Options {
  unsigned max_level = Limits{}.max_dense_level;
  long precision_cap = 0;

  Limits limits() const {
    Limits l;
    l.max_dense_level = max_level;
    return l;
  }
  mpfr_prec_t cap() const {
    return precision_cap > 0 ? static_cast<mpfr_prec_t>(precision_cap) : precision_cap_from_env();
  }
};

int cmd_char_eval(Options const &opt, std::string const &alpha_text, std::string const &perm) {
  auto const alpha = AlphaParam::parse(alpha_text);
  auto const s = CubePermutation::parse(perm, opt.limits());
  std::cout << to_string(char_eval(alpha, s)) << "\n";
  return kExitOk;
}

int cmd_gram(Options const &opt, std::string const &alpha_text, int all_level,
             std::string const &elements_text, std::string const &witness) {
  auto const alpha = AlphaParam::parse(alpha_text);
  std::vector<CubePermutation> elements;
  if (all_level >= 0) {
    if (all_level > 2)
      throw CapExceeded("gram --all-level is limited to n <= 2");
    elements = all_permutations(static_cast<unsigned>(all_level));
  } else {
    for (auto const &item : split(elements_text, ';'))
      elements.push_back(CubePermutation::parse(item, opt.limits()));
    if (elements.empty())
      throw ParseError("gram needs --all-level or a non-empty --elements list");
    unsigned top = 0;
    for (auto const &g : elements)
      top = std::max(top, g.level());
    for (auto &g : elements)
      g = embed_head(g, top, opt.limits());
  }
  WitnessMode mode = WitnessMode::elimination;
  if (witness == "signs")
    mode = WitnessMode::signs;
  else if (witness != "elimination")
    throw ParseError("--witness must be 'signs' or 'elimination'");
  auto const report = gram_matrix(alpha, elements, mode);
  std::cout << report.to_json().dump(2) << "\n";
  switch (report.verdict) {
  case GramVerdict::psd:
    return kExitOk;
  case GramVerdict::not_psd:
    return kExitFalse;
  default:
    return kExitUndetermined;
  }
}

int cmd_obstruction(Options const &opt, std::string const &alpha_text, std::string const &m_text,
                    bool witness, std::string const &format) {
  if (format != "text" && format != "csv" && format != "json")
    throw ParseError("--format must be text, csv or json");
  std::vector<AlphaParam> alphas;
  for (auto const &item : split(alpha_text, ','))
    alphas.push_back(AlphaParam::parse(item));
  if (alphas.empty())
    throw ParseError("--alpha is empty");

  std::vector<ObstructionReport> reports;
  int status = kExitOk;
  nlohmann::json witnesses = nlohmann::json::array();
  if (witness) {
    for (auto const &alpha : alphas) {
      if (!alpha.is_real() || alpha.is_classified())
        throw PreconditionError("--witness needs a non-integer alpha, got " + alpha.to_string());
      try {
        auto const w = noninteger_witness(alpha, kDefaultNonIntegerThreshold, opt.cap());
        reports.push_back(w.report);
        witnesses.push_back({{"alpha", alpha.to_string()},
                             {"m", w.m},
                             {"floor_plus_3", alpha.floor() + 3},
                             {"floor_plus_4", alpha.floor() + 4},
                             {"report", w.report.to_json()}});
      } catch (WitnessNotFound const &e) {
        std::cerr << e.what() << "\n";
        bool undetermined = false;
        for (auto const &r : e.scanned()) {
          reports.push_back(r);
          undetermined |= r.sign == Sign::undetermined;
        }
        status = std::max(status, undetermined ? kExitUndetermined : kExitFalse);
      }
    }
  } else {
    auto const ms = parse_m_range(m_text);
    for (auto const &alpha : alphas)
      for (auto m : ms) {
        reports.push_back(c_alpha(alpha, m, opt.cap()));
        if (reports.back().sign == Sign::undetermined)
          status = kExitUndetermined;
      }
  }

  if (format == "csv") {
    std::cout << kObstructionCsvHeader << "\n";
    for (auto const &r : reports)
      std::cout << r.csv_row() << "\n";
  } else if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (auto const &r : reports)
      j.push_back(r.to_json());
    if (witness)
      std::cout << nlohmann::json{{"witnesses", witnesses}, {"scanned", j}}.dump(2) << "\n";
    else
      std::cout << j.dump(2) << "\n";
  } else if (witness) {
    for (auto const &r : reports)
      std::cout << "alpha=" << r.alpha << " m=" << r.m << " " << r.value_string() << " "
                << to_string(r.sign) << "\n";
  } else {
    // One row per alpha; the prefix is dropped when there is a single alpha.
    std::string current;
    bool first = true;
    for (auto const &r : reports) {
      if (first || r.alpha != current) {
        if (!first)
          std::cout << "\n";
        if (alphas.size() > 1)
          std::cout << "alpha=" << r.alpha << ": ";
        current = r.alpha;
        first = true;
      }
      std::cout << (first ? "" : " ") << r.value_string();
      first = false;
    }
    std::cout << "\n";
  }
  if (status == kExitUndetermined)
    std::cerr << "undetermined\n";
  return status;
}

int cmd_construct_si(Options const &opt, std::string const &perm, unsigned r) {
  auto const s = CubePermutation::parse(perm, opt.limits());
  Limits limits = opt.limits();
  auto const family = construct_si(s, r, limits);
  auto const verification = verify_si_properties(s, family.members);
  nlohmann::json out{{"construction", family.to_json()}, {"verification", verification.to_json()}};
  std::cout << out.dump(2) << "\n";
  return verification.passed() ? kExitOk : kExitFalse;
}

int cmd_gns_check(Options const &opt, std::string const &alpha_text, std::string const &perm,
                  std::vector<std::string> const &sets) {
  auto const alpha = AlphaParam::parse(alpha_text);
  nlohmann::json out;
  bool ok = true;
  if (!perm.empty()) {
    auto const s = CubePermutation::parse(perm, opt.limits());
    auto const matrix = matrix_character(s);
    auto const fixed = fixed_fraction(s);
    out["permutation"] = {{"perm", s.to_cycle_string()},
                          {"matrix_character", matrix.to_string()},
                          {"fixed_fraction", fixed.to_string()},
                          {"passed", matrix == fixed}};
    ok &= matrix == fixed;
  }
  if (sets.size() != 4)
    throw ParseError("--sets takes four nice sets A B C D");
  std::vector<NiceSet> parsed;
  for (auto const &text : sets)
    parsed.push_back(NiceSet::parse(text, opt.limits()));
  auto const report = projection_identity_checks(alpha, parsed[0], parsed[1], parsed[2], parsed[3]);
  out["alpha"] = alpha.to_string();
  out["projection"] = report.to_json();
  ok &= report.all_passed();
  std::cout << out.dump(2) << "\n";
  return ok ? kExitOk : kExitFalse;
}

int cmd_verify_all(std::uint64_t seed) {
  auto const results = run_acceptance_suite(seed);
  std::cout << render_report(results, seed);
  int status = kExitOk;
  for (auto const &r : results)
    if (!r.passed) {
      std::cerr << "failing criterion: " << r.id << " " << r.name << "\n";
      status = kExitFalse;
    }
  return status;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Characters of S(2^inf): exact checks and certificates"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--max-level", opt.max_level, "Cap on dense permutation levels")
      ->capture_default_str();
  app.add_option("--precision-cap", opt.precision_cap,
                 "Bits of working precision before giving up (default: $S2INF_PRECISION_CAP or 4096)");

  std::string alpha = "1", perm, elements, witness_mode = "elimination", m_range = "1..8",
              format = "text";
  int all_level = -1;
  unsigned r = 1;
  bool witness = false;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> sets{"k=1:10", "k=2:1100", "k=1:10", "k=2:1100"};

  auto *char_eval_cmd = app.add_subcommand("char-eval", "chi_alpha(s) = mu(Fix s)^alpha");
  char_eval_cmd->add_option("--alpha", alpha, "Integer, inf, or decimal")->required();
  char_eval_cmd->add_option("--perm", perm, "Permutation in table or cycle notation")->required();

  auto *gram_cmd = app.add_subcommand("gram", "Gram matrix PSD decision");
  gram_cmd->add_option("--alpha", alpha)->required();
  auto *all_opt = gram_cmd->add_option("--all-level", all_level, "Use all of S(2^n), n <= 2");
  gram_cmd->add_option("--elements", elements, "';'-separated permutations")->excludes(all_opt);
  gram_cmd->add_option("--witness", witness_mode, "signs or elimination")->capture_default_str();

  auto *obstruction_cmd = app.add_subcommand("obstruction", "C_alpha(m) with sign certificates");
  obstruction_cmd->add_option("--alpha", alpha, "Comma-separated alpha list")->required();
  obstruction_cmd->add_option("--m", m_range, "Range a..b or a comma list")->capture_default_str();
  obstruction_cmd->add_flag("--witness", witness, "Search for a certified negative C_alpha(m)");
  obstruction_cmd->add_option("--format", format, "text, csv or json")->capture_default_str();
  obstruction_cmd->add_option("--precision", opt.precision_cap, "Same as --precision-cap");

  auto *si_cmd = app.add_subcommand("construct-si", "Build and verify the family s_i");
  si_cmd->add_option("--perm", perm)->required();
  si_cmd->add_option("--r", r, "Family of 2^r members")->capture_default_str();

  auto *gns_cmd = app.add_subcommand("gns-check", "Matrix character and projection identities");
  gns_cmd->add_option("--alpha", alpha)->capture_default_str();
  gns_cmd->add_option("--perm", perm, "Compare <pi(s) xi, xi> with mu(Fix s)");
  gns_cmd->add_option("--sets", sets, "Nice sets A B C D")->expected(4)->capture_default_str();

  auto *verify_cmd = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify_cmd->add_option("--seed", seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*char_eval_cmd)
      return cmd_char_eval(opt, alpha, perm);
    if (*gram_cmd)
      return cmd_gram(opt, alpha, all_level, elements, witness_mode);
    if (*obstruction_cmd)
      return cmd_obstruction(opt, alpha, m_range, witness, format);
    if (*si_cmd)
      return cmd_construct_si(opt, perm, r);
    if (*gns_cmd)
      return cmd_gns_check(opt, alpha, perm, sets);
    return cmd_verify_all(seed);
  } catch (CapExceeded const &e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (ParseError const &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (PreconditionError const &e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (LevelMismatch const &e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (InconsistencyError const &e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kExitFalse;
  }
}
