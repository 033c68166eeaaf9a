#ifndef TRIMAT_LANGTOOLS_HPP_
#define TRIMAT_LANGTOOLS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trimat/terms.hpp"

namespace trimat {

/// A simple language S1* u1 S2* ... uk S{k+1}*: k single-variable markers
/// interleaved with k+1 (possibly empty) variable sets. k = 0 denotes S1*
/// alone. These languages mirror subword occurrences with gaps: w belongs
/// iff u1..uk occurs in w with gaps contained in the corresponding sets.
struct SimpleLanguage {
  std::vector<VarId> markers;   // u_1..u_k
  std::vector<VarSet> sigmas;   // S_1..S_{k+1}

  std::size_t marker_count() const { return markers.size(); }
  void validate() const;
};

/// Membership by dynamic programming over the k+1 partial-match states.
bool language_member_scan(const Word& w, const SimpleLanguage& lang);

/// Membership by the matrix route: realize the language as a host word whose
/// gaps are exactly the sigmas, build the witness substitution, and read
/// entry (1, k+1) of the word's value in dimension n >= k+1.
bool language_member_matrix(const Word& w, const SimpleLanguage& lang, int n);
bool language_member_matrix(const Word& w, const SimpleLanguage& lang);  // n = k+1

/// If the inequality w <= w' fails in the ordered semigroup of triangular
/// Boolean n-by-n matrices, a simple language with fewer than n markers
/// containing w but not w'; absent when the inequality holds.
std::optional<SimpleLanguage> distinguishing_language(const Word& w, const Word& w2, int n);

inline constexpr std::uint64_t default_language_cap = std::uint64_t{1} << 20;

/// All simple languages over the given variable set with k in [0, n-1]:
/// the k = 0 alphabet languages plus every marker/sigma combination.
/// Deterministic order; refuses outputs larger than `cap`.
std::vector<SimpleLanguage> enumerate_languages(const VarSet& sigma, int n,
                                                std::uint64_t cap = default_language_cap);

/// Text form used by the CLI: `{x,y}* x {}* x {x,y}*`.
SimpleLanguage parse_language(std::string_view text, Interner& interner);
std::string to_string(const SimpleLanguage& lang, const Interner& interner);

}  // namespace trimat

#endif  // TRIMAT_LANGTOOLS_HPP_
