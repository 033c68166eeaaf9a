#ifndef TRIMAT_DECIDER_HPP_
#define TRIMAT_DECIDER_HPP_

#include <optional>
#include <string_view>

#include "trimat/occurrences.hpp"
#include "trimat/terms.hpp"

namespace trimat {

enum class WitnessSide {
  lower_in_upper_missing,
  left_in_right_missing,
  right_in_left_missing,
};

std::string_view to_string(WitnessSide side);

/// A re-checkable refutation: the named subword occurs on the named side of
/// the claim with the named gap profile, and no occurrence on the other side
/// has componentwise smaller gaps.
struct CounterEvidence {
  Word subword;
  GapProfile profile;
  WitnessSide side;
};

struct Verdict {
  bool holds;
  std::optional<CounterEvidence> witness;  // present iff !holds

  static Verdict ok() { return {true, std::nullopt}; }
  static Verdict fail(CounterEvidence ce) { return {false, std::move(ce)}; }
};

// Decision procedures for the four structures carried by the upper triangular
// Boolean n-by-n matrices. All verdicts are deterministic: on failure the
// lexicographically first violating (k, subword, profile) is reported.

/// Inequality W <= W' in the additively idempotent semiring (T_n,+,.):
/// holds iff for every k in [0, n-1], every occurrence of a length-k subword
/// in a summand of the lower side is matched, with componentwise smaller or
/// equal gaps, by an occurrence in some summand of the upper side. k = 0 is
/// the empty-subword convention and amounts to per-summand alphabet
/// containment.
Verdict ais_inequality_holds(const Polynomial& lower, const Polynomial& upper, int n);

/// Identity W = W' in (T_n,+,.): both inequalities.
Verdict ais_identity_holds(const Polynomial& lhs, const Polynomial& rhs, int n);

/// Inequality w <= w' in the ordered semigroup (T_n,.,<=): holds iff w == w',
/// or |w| >= n and the gap-domination check passes at k = n-1 alone (the
/// lower lengths then follow).
Verdict sem_inequality_holds(const Word& w, const Word& w2, int n);

/// Identity w = w' in the semigroup (T_n,.): both inequalities.
Verdict sem_identity_holds(const Word& w, const Word& w2, int n);

/// Identity w = w' in the semigroup (U_{n+1},.) of unitriangular matrices of
/// dimension n+1: holds iff w and w' have the same subwords of every length
/// up to n.
Verdict u_sem_identity_holds(const Word& w, const Word& w2, int n);

/// Subword-set equality at exactly length k (k = 0 is trivially true).
bool same_subwords_of_length(const Word& w, const Word& w2, std::size_t k);

/// Diagnostic: every common subword of length k < n (the empty subword
/// included) has occurrences in both words with identical gaps. Necessary but
/// not sufficient for the identity to hold in (T_n,.).
bool condition_exists_EG(const Word& w, const Word& w2, int n);

/// Diagnostic: every occurrence of a subword of length k < n in either word
/// has an occurrence with identical gaps in the other. Sufficient but not
/// necessary for the identity to hold in (T_n,.).
bool condition_forall_EG(const Word& w, const Word& w2, int n);

/// For every common subword of length k < n, the leftmost occurrences in the
/// two words have the same gaps. A consequence of the identity holding in
/// (T_n,.).
bool leftmost_gaps_equal(const Word& w, const Word& w2, int n);

enum class Structure { tn_semiring, tn_semigroup, tn_ordered, un_semigroup };

std::string_view to_string(Structure s);
std::optional<Structure> parse_structure(std::string_view name);

/// Dispatches a parsed claim to the right procedure. `n` is the matrix
/// dimension of the chosen structure (for un_semigroup, the dimension of the
/// unitriangular matrices themselves, so the subword bound is n-1).
/// Semiring claims are rejected under the semigroup structures; inequalities
/// are rejected under tn_semigroup and un_semigroup, which carry no order.
Verdict decide(const Claim& claim, Structure structure, int n);

}  // namespace trimat

#endif  // TRIMAT_DECIDER_HPP_
