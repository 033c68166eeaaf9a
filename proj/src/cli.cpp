#include "trimat/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "trimat/hardness.hpp"
#include "trimat/langtools.hpp"
#include "trimat/occurrences.hpp"
#include "trimat/oracle.hpp"

namespace trimat::cli {

namespace {

using nlohmann::json;

json gaps_json(const GapProfile& profile, const Interner& interner) {
  json gaps = json::array();
  for (const VarSet& g : profile.gaps()) {
    json names = json::array();
    for (VarId v = 0; v < 64; ++v) {
      if (g.contains(v)) names.push_back(interner.name(v));
    }
    gaps.push_back(names);
  }
  return gaps;
}

json witness_json(const CounterEvidence& ce, const Interner& interner) {
  return json{{"type", "subword"},
              {"side", std::string(to_string(ce.side))},
              {"subword", to_string(ce.subword, interner)},
              {"gaps", gaps_json(ce.profile, interner)}};
}

json substitution_json(const Substitution& phi, const Interner& interner) {
  json assignment = json::object();
  for (const auto& [v, m] : phi.entries()) {
    assignment[interner.name(v)] = m.to_string();
  }
  return json{{"type", "substitution"}, {"assignment", assignment}};
}

SpaceKind oracle_space_for(Structure s) {
  return s == Structure::un_semigroup ? SpaceKind::unitriangular : SpaceKind::triangular;
}

// Decides one claim line; returns 0/1, or 2 on input errors or oracle
// disagreement. Shared by single-claim and batch mode.
int check_one(const RunConfig& cfg, const std::string& text, std::ostream& out,
              std::ostream& err) {
  Interner interner;
  const Claim claim = parse_claim(text, interner);
  const Verdict verdict = decide(claim, cfg.structure, cfg.n);

  std::string oracle_note;
  if (cfg.cross_check) {
    try {
      const OracleVerdict ov = brute_force_check(claim, cfg.n, oracle_space_for(cfg.structure),
                                                 cfg.cap);
      if (ov.holds != verdict.holds) {
        err << "error: oracle disagrees on '" << text << "': decider says "
            << (verdict.holds ? "holds" : "fails") << ", brute force says "
            << (ov.holds ? "holds" : "fails") << "\n";
        return 2;
      }
      oracle_note = "agrees";
    } catch (const std::length_error&) {
      oracle_note = "skipped-cap";
    }
  }

  const std::string shown = to_string(claim, interner);
  if (cfg.json) {
    json record{{"claim", shown},
                {"structure", std::string(to_string(cfg.structure))},
                {"n", cfg.n},
                {"holds", verdict.holds}};
    if (verdict.witness) record["witness"] = witness_json(*verdict.witness, interner);
    if (!oracle_note.empty()) record["oracle"] = oracle_note;
    out << record.dump() << "\n";
  } else {
    out << (verdict.holds ? "holds" : "fails") << ": " << shown << "\n";
    if (verdict.witness) {
      out << "witness: " << witness_json(*verdict.witness, interner).dump() << "\n";
    }
  }
  return verdict.holds ? 0 : 1;
}

Word random_word(std::mt19937_64& rng, std::size_t length, Interner& interner) {
  const VarId x = interner.intern("x");
  const VarId y = interner.intern("y");
  std::vector<VarId> letters(length);
  for (auto& l : letters) l = (rng() & 1) ? x : y;
  return Word(std::move(letters));
}

double median_decide_ms(const RunConfig& cfg, std::size_t total_size, std::uint64_t seed,
                        int reps) {
  std::vector<double> times;
  for (int rep = 0; rep < reps; ++rep) {
    Interner interner;
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(rep));
    const Word w = random_word(rng, total_size / 2, interner);
    const Word w2 = random_word(rng, total_size - total_size / 2, interner);
    const Claim claim(ClaimKind::semigroup_identity, Polynomial::single(w),
                      Polynomial::single(w2));
    const auto start = std::chrono::steady_clock::now();
    decide(claim, cfg.structure, cfg.n);
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

struct SelfCheck {
  std::string name;
  bool passed;
};

std::vector<SelfCheck> selftest_checks() {
  std::vector<SelfCheck> checks;
  const auto add = [&](std::string name, bool passed) {
    checks.push_back({std::move(name), passed});
  };

  for (int n = 1; n <= 3; ++n) {
    Interner in;
    const Word x = parse_word("x", in);
    const bool dec = sem_identity_holds(x.pow(static_cast<unsigned>(n)),
                                        x.pow(static_cast<unsigned>(n) + 1), n)
                         .holds;
    const Claim c(ClaimKind::semigroup_identity,
                  Polynomial::single(x.pow(static_cast<unsigned>(n))),
                  Polynomial::single(x.pow(static_cast<unsigned>(n) + 1)));
    const bool orc = brute_force_check(c, n, SpaceKind::triangular).holds;
    add("x^n = x^(n+1) in (T_" + std::to_string(n) + ", .)", dec && orc);
  }

  for (int n = 2; n <= 3; ++n) {
    Interner in;
    const unsigned un = static_cast<unsigned>(n);
    const Word x = parse_word("x", in);
    const Word y = parse_word("y", in);
    const Polynomial lhs = Polynomial::single(x.pow(un - 1) * y.pow(un - 1));
    const Polynomial rhs({x.pow(un) * y.pow(un - 1), x.pow(un - 1) * y.pow(un)});
    const Claim c(ClaimKind::semiring_identity, lhs, rhs);
    const bool dec = ais_identity_holds(lhs, rhs, n).holds;
    const bool orc = brute_force_check(c, n, SpaceKind::triangular).holds;
    add("x^(n-1) y^(n-1) = x^n y^(n-1) + x^(n-1) y^n in (T_" + std::to_string(n) + ", +, .)",
        dec && orc);
  }

  {
    Interner in;
    const Word w = parse_word("x y x x y x", in);
    const Word w2 = parse_word("x y x y x", in);
    bool ok = !sem_identity_holds(w, w2, 3).holds;
    Substitution phi(3);
    phi.set(*in.find("x"), BoolMatrix::parse("1 1 0; 0 0 1; 0 0 1"));
    phi.set(*in.find("y"), BoolMatrix::parse("1 0 0; 0 0 0; 0 0 1"));
    ok = ok && eval_word(w, phi) != eval_word(w2, phi);
    ok = ok && condition_exists_EG(w, w2, 3);
    add("x y x^2 y x = x y x y x fails in (T_3, .) yet satisfies the equal-gaps "
        "existence condition",
        ok);
  }
  {
    Interner in;
    const Word w = parse_word("x x y x", in);
    const Word w2 = parse_word("x y x", in);
    const bool ok = sem_identity_holds(w, w2, 2).holds && !condition_forall_EG(w, w2, 2);
    add("x^2 y x = x y x holds in (T_2, .) yet fails the all-gaps-equal condition", ok);
  }

  for (int n = 2; n <= 3; ++n) {
    Interner in;
    const Word xy = parse_word("x y", in);
    const Word yx = parse_word("y x", in);
    const unsigned un = static_cast<unsigned>(n);
    const bool ok = !sem_identity_holds(xy.pow(un), yx.pow(un), n).holds &&
                    u_sem_identity_holds(xy.pow(un), yx.pow(un), n).holds;
    add("(xy)^n = (yx)^n fails in (T_" + std::to_string(n) + ", .) but holds in (U_" +
            std::to_string(n + 1) + ", .)",
        ok);
  }

  {
    Interner in;
    const Claim c = parse_claim("x y = x x y + x y y", in);
    const bool ok = ais_identity_holds(c.lhs(), c.rhs(), 2).holds &&
                    brute_force_check(c, 2, SpaceKind::triangular).holds &&
                    !brute_force_check(c, 3, SpaceKind::unitriangular).holds;
    add("x y = x^2 y + x y^2 holds in (T_2, +, .) and fails in (U_3, +, .)", ok);
  }

  add("C4 structural properties", verify_c4_properties().all_passed());
  return checks;
}

}  // namespace

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.file.empty()) {
    return check_one(cfg, cfg.claim_text, out, err);
  }
  std::ifstream in(cfg.file);
  if (!in) {
    err << "error: cannot open " << cfg.file << "\n";
    return 2;
  }
  int status = 0;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      status = std::max(status, check_one(cfg, line, out, err));
    } catch (const std::exception& e) {
      err << "error: " << e.what() << " in claim '" << line << "'\n";
      status = 2;
    }
  }
  return status;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Interner interner;
  const Claim claim = parse_claim(cfg.claim_text, interner);
  (void)err;
  if (cfg.trials > 0) {
    const auto found = random_falsify(claim, cfg.n, cfg.space, cfg.trials, cfg.seed);
    if (cfg.json) {
      json record{{"claim", to_string(claim, interner)},
                  {"space", std::string(to_string(cfg.space))},
                  {"n", cfg.n},
                  {"trials", cfg.trials},
                  {"seed", cfg.seed},
                  {"falsified", found.has_value()}};
      if (found) record["witness"] = substitution_json(*found, interner);
      out << record.dump() << "\n";
    } else if (found) {
      out << "falsified: " << to_string(claim, interner) << "\n";
      out << "witness: " << substitution_json(*found, interner).dump() << "\n";
    } else {
      out << "no counterexample in " << cfg.trials << " trials: "
          << to_string(claim, interner) << "\n";
    }
    return found ? 1 : 0;
  }
  const OracleVerdict verdict = brute_force_check(claim, cfg.n, cfg.space, cfg.cap);
  if (cfg.json) {
    json record{{"claim", to_string(claim, interner)},
                {"space", std::string(to_string(cfg.space))},
                {"n", cfg.n},
                {"holds", verdict.holds}};
    if (verdict.counterexample) {
      record["witness"] = substitution_json(*verdict.counterexample, interner);
    }
    out << record.dump() << "\n";
  } else {
    out << (verdict.holds ? "holds" : "fails") << ": " << to_string(claim, interner) << "\n";
    if (verdict.counterexample) {
      out << "witness: " << substitution_json(*verdict.counterexample, interner).dump() << "\n";
    }
  }
  return verdict.holds ? 0 : 1;
}

int cmd_subwords(const std::string& word_text, std::size_t k, std::ostream& out) {
  Interner interner;
  const Word host = parse_word(word_text, interner);
  if (k > host.length()) {
    throw std::invalid_argument("subwords: k exceeds the word length");
  }
  for_each_occurrence(host, k, [&](const Occurrence& occ, const GapProfile& profile) {
    out << to_string(spelled(host, occ), interner) << " @";
    for (const std::uint32_t p : occ.positions) out << ' ' << (p + 1);
    out << " |";
    bool first = true;
    for (const VarSet& g : profile.gaps()) {
      out << (first ? " " : "; ") << to_string(g, interner);
      first = false;
    }
    out << "\n";
  });
  return 0;
}

int cmd_reduce(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open " + path);
  }
  Interner interner;
  const HittingSetInstance inst = HittingSetInstance::parse(in);
  const ReducedIdentity red = reduce_hitting_set(inst, interner);
  out << to_string(red.claim, interner) << "\n";
  return 0;
}

int cmd_language_member(const std::string& lang_text, const std::string& word_text,
                        std::ostream& out) {
  Interner interner;
  const SimpleLanguage lang = parse_language(lang_text, interner);
  const Word w = parse_word(word_text, interner);
  const bool member = language_member_scan(w, lang);
  out << (member ? "member" : "non-member") << "\n";
  return member ? 0 : 1;
}

int cmd_language_distinguish(int n, const std::string& w_text, const std::string& w2_text,
                             std::ostream& out) {
  Interner interner;
  const Word w = parse_word(w_text, interner);
  const Word w2 = parse_word(w2_text, interner);
  const auto lang = distinguishing_language(w, w2, n);
  if (!lang) {
    out << "none\n";
    return 1;
  }
  out << to_string(*lang, interner) << "\n";
  return 0;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  out << "bench structure=" << to_string(cfg.structure) << " n=" << cfg.n
      << " m=" << cfg.bench_size << " reps=" << cfg.bench_reps << " seed=" << cfg.seed << "\n";
  const double base = median_decide_ms(cfg, cfg.bench_size, cfg.seed, cfg.bench_reps);
  out << "m=" << cfg.bench_size << ": " << base << " ms\n";
  if (cfg.bench_grow) {
    const double grown = median_decide_ms(cfg, cfg.bench_size * 2, cfg.seed, cfg.bench_reps);
    out << "m=" << cfg.bench_size * 2 << ": " << grown << " ms\n";
    out << "ratio: " << (base > 0 ? grown / base : 0.0) << "\n";
  }
  return 0;
}

int cmd_selftest(std::ostream& out) {
  bool all = true;
  for (const SelfCheck& check : selftest_checks()) {
    out << (check.passed ? "ok " : "FAIL ") << check.name << "\n";
    all = all && check.passed;
  }
  out << (all ? "selftest passed" : "selftest FAILED") << "\n";
  return all ? 0 : 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures for identities and inequalities of upper triangular "
               "Boolean matrices"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string structure_name = "tn-semigroup";
  std::string space_name = "tri";
  std::vector<std::string> claim_parts;

  auto* check = app.add_subcommand("check", "Decide a claim combinatorially");
  check->add_option("--n", cfg.n, "matrix dimension")->required();
  check->add_option("--structure", structure_name,
                    "tn-semiring | tn-semigroup | tn-ordered | un-semigroup");
  check->add_option("claim", claim_parts, "claim text, e.g. \"x y x = x y\"");
  check->add_option("--file", cfg.file, "batch file, one claim per line");
  check->add_flag("--json", cfg.json, "one JSON record per claim");
  check->add_flag("--oracle", cfg.cross_check, "cross-check against brute force when in cap");
  check->add_option("--cap", cfg.cap, "substitution cap for --oracle");

  auto* oracle = app.add_subcommand("oracle", "Check a claim by exhaustive or random substitution");
  oracle->add_option("--n", cfg.n, "matrix dimension")->required();
  oracle->add_option("--space", space_name, "tri | unitri");
  oracle->add_option("--trials", cfg.trials, "random trials instead of exhaustive search");
  oracle->add_option("--seed", cfg.seed, "random seed");
  oracle->add_option("--cap", cfg.cap, "substitution cap");
  oracle->add_flag("--json", cfg.json, "JSON output");
  oracle->add_option("claim", claim_parts, "claim text")->required();

  std::string word_text;
  std::size_t subword_k = 0;
  auto* subwords = app.add_subcommand("subwords", "List subword occurrences with gap profiles");
  subwords->add_option("word", word_text, "host word")->required();
  subwords->add_option("k", subword_k, "subword length")->required();

  std::string instance_path;
  auto* reduce = app.add_subcommand("reduce", "Hitting-Set instance to a C4 identity");
  reduce->add_option("instance", instance_path, "instance file: 'r q' then q index lines")
      ->required();

  auto* language = app.add_subcommand("language", "Simple-language operations");
  language->require_subcommand(1);
  std::string lang_text, lw_text, lw2_text;
  auto* member = language->add_subcommand("member", "Membership in a simple language");
  member->add_option("language", lang_text, "e.g. \"{x,y}* x {}* x {x,y}*\"")->required();
  member->add_option("word", lw_text, "word to test")->required();
  auto* distinguish =
      language->add_subcommand("distinguish", "Language containing w but not w'");
  distinguish->add_option("--n", cfg.n, "matrix dimension")->required();
  distinguish->add_option("w", lw_text, "lower word")->required();
  distinguish->add_option("w2", lw2_text, "upper word")->required();

  auto* bench = app.add_subcommand("bench", "Time the decider on random identities");
  bench->add_option("--n", cfg.n, "matrix dimension")->required();
  bench->add_option("--m", cfg.bench_size, "total identity size");
  bench->add_option("--structure", structure_name, "structure to decide under");
  bench->add_option("--seed", cfg.seed, "random seed");
  bench->add_option("--reps", cfg.bench_reps, "repetitions per size");
  bench->add_flag("--grow", cfg.bench_grow, "also time size 2m and report the ratio");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in regression checks");

  std::vector<const char*> argv;
  argv.push_back("trimat");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (const auto s = parse_structure(structure_name)) {
      cfg.structure = *s;
    } else {
      err << "usage error: unknown structure '" << structure_name << "'\n";
      return 2;
    }
    if (space_name == "tri") {
      cfg.space = SpaceKind::triangular;
    } else if (space_name == "unitri") {
      cfg.space = SpaceKind::unitriangular;
    } else {
      err << "usage error: unknown space '" << space_name << "'\n";
      return 2;
    }
    std::string joined;
    for (const std::string& part : claim_parts) {
      if (!joined.empty()) joined += ' ';
      joined += part;
    }
    cfg.claim_text = joined;

    if (check->parsed()) {
      if (cfg.claim_text.empty() && cfg.file.empty()) {
        err << "usage error: check needs a claim or --file\n";
        return 2;
      }
      return cmd_check(cfg, out, err);
    }
    if (oracle->parsed()) return cmd_oracle(cfg, out, err);
    if (subwords->parsed()) return cmd_subwords(word_text, subword_k, out);
    if (reduce->parsed()) return cmd_reduce(instance_path, out);
    if (member->parsed()) return cmd_language_member(lang_text, lw_text, out);
    if (distinguish->parsed()) return cmd_language_distinguish(cfg.n, lw_text, lw2_text, out);
    if (bench->parsed()) return cmd_bench(cfg, out);
    if (selftest->parsed()) return cmd_selftest(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no command\n";
  return 2;
}

}  // namespace trimat::cli
