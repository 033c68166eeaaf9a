#ifndef TRIMAT_ORACLE_HPP_
#define TRIMAT_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "trimat/boolmat.hpp"
#include "trimat/occurrences.hpp"
#include "trimat/terms.hpp"

namespace trimat {

/// A map from variables to matrices of one fixed dimension. Unmapped
/// variables read as the zero matrix.
class Substitution {
 public:
  explicit Substitution(int n);

  int dim() const { return n_; }
  void set(VarId v, BoolMatrix image);
  const BoolMatrix& image(VarId v) const;

  /// The explicitly assigned entries, sorted by variable id.
  const std::map<VarId, BoolMatrix>& entries() const { return images_; }

 private:
  int n_;
  BoolMatrix zero_;
  std::map<VarId, BoolMatrix> images_;
};

/// Left-to-right product of the letters' images. The empty word is rejected:
/// in the semigroup setting there is no identity element to return.
BoolMatrix eval_word(const Word& w, const Substitution& phi);

/// Sum of the summands' values; independent of summand order.
BoolMatrix eval_polynomial(const Polynomial& p, const Substitution& phi);

/// The witness substitution attached to an occurrence of u (length k < n) in
/// the host word: each variable of the host maps to the matrix with 1 at
/// diagonal position (l,l) for every gap l containing it and at (l,l+1) for
/// every position l of u holding it. Variables outside the host's alphabet
/// default to zero. Under this substitution, a word evaluates with a 1 in
/// entry (1, k+1) iff it contains an occurrence of u whose gaps are
/// componentwise contained in the chosen occurrence's gaps.
Substitution build_phi_uv(const Word& u, const Word& host, const Occurrence& occ, int n);

/// Entry (1, k+1) of the probe's value under build_phi_uv. The empty probe
/// evaluates as the identity matrix (the empty product).
bool subword_criterion(const Word& u, const Word& host, const Occurrence& occ, int n,
                       const Word& probe);

struct OracleVerdict {
  bool holds;
  std::optional<Substitution> counterexample;  // present iff !holds
};

inline constexpr std::uint64_t default_eval_cap = std::uint64_t{1} << 24;

/// Exhaustively checks a claim over all substitutions into the given matrix
/// space. Substitutions are enumerated in odometer order: variables sorted by
/// id, the last one cycling fastest, each running over the space's fixed
/// enumeration order; the first violating substitution is returned. Refuses
/// to run when |space|^#variables exceeds the cap.
OracleVerdict brute_force_check(const Claim& claim, int n, SpaceKind space,
                                std::uint64_t cap = default_eval_cap);

/// Same, over an explicit finite carrier of matrices (for subsemigroups).
OracleVerdict brute_force_check(const Claim& claim, std::span<const BoolMatrix> carrier,
                                std::uint64_t cap = default_eval_cap);

/// Random search for a violating substitution: per trial, each variable draws
/// an independent uniform element of the space (uniform via random bits in
/// the free positions). Deterministic under a fixed seed.
std::optional<Substitution> random_falsify(const Claim& claim, int n, SpaceKind space,
                                           std::uint64_t trials, std::uint64_t seed);

}  // namespace trimat

#endif  // TRIMAT_ORACLE_HPP_
