#ifndef TRIMAT_CLI_HPP_
#define TRIMAT_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "trimat/boolmat.hpp"
#include "trimat/decider.hpp"

namespace trimat::cli {

/// Everything one invocation runs with. Populated from the command line by
/// run(); kept as a plain struct so tests can drive commands directly.
struct RunConfig {
  std::string command;
  int n = 2;
  Structure structure = Structure::tn_semigroup;
  SpaceKind space = SpaceKind::triangular;
  std::string claim_text;
  std::string file;            // batch input, one claim per line, '#' comments
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;    // 0 = exhaustive
  std::uint64_t cap = default_space_cap;
  bool json = false;
  bool cross_check = false;    // --oracle
  // bench parameters
  std::size_t bench_size = 2000;
  int bench_reps = 3;
  bool bench_grow = false;
};

/// Runs one CLI invocation. Exit status: 0 = holds (or command succeeded),
/// 1 = fails (or counterexample / selftest failure found), 2 = usage or
/// input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_subwords(const std::string& word_text, std::size_t k, std::ostream& out);
int cmd_reduce(const std::string& path, std::ostream& out);
int cmd_language_member(const std::string& lang_text, const std::string& word_text,
                        std::ostream& out);
int cmd_language_distinguish(int n, const std::string& w_text, const std::string& w2_text,
                             std::ostream& out);
int cmd_bench(const RunConfig& cfg, std::ostream& out);
int cmd_selftest(std::ostream& out);

}  // namespace trimat::cli

#endif  // TRIMAT_CLI_HPP_
