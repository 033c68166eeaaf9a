#ifndef TRIMAT_HARDNESS_HPP_
#define TRIMAT_HARDNESS_HPP_

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trimat/boolmat.hpp"
#include "trimat/oracle.hpp"
#include "trimat/terms.hpp"

namespace trimat {

/// The nine-element subsemigroup C4 of the 4x4 upper triangular Boolean
/// matrices whose identity checking is coNP-complete. Elements carry both a
/// tag (for table arithmetic) and a fixed matrix; the two representations are
/// checked against each other on first use.
enum class C4Tag : std::uint8_t { e, a, b, a2, ab, ba, b2, a2b, ba2 };

inline constexpr std::size_t c4_size = 9;

std::string_view c4_name(C4Tag t);

/// The fixed matrices, indexed by tag value.
const std::array<BoolMatrix, c4_size>& c4_matrices();

/// Product in C4 via the precomputed 9x9 table.
C4Tag c4_mul(C4Tag x, C4Tag y);

/// The full table; throws std::logic_error if the nine matrices were not
/// closed under product (a transcription error).
const std::array<std::array<C4Tag, c4_size>, c4_size>& c4_table();

struct PropertyReport {
  std::vector<std::pair<std::string, bool>> checks;
  bool all_passed() const;
};

/// Direct computation of the structural facts the reduction relies on:
/// power relations, the sandwich relations aba = a and bab = b, which
/// elements are idempotent, squares being idempotent, products of idempotents
/// being idempotent, and {a2, b2, a2b, ba2} being precisely the elements with
/// a 1 at (1,4) and an ideal.
PropertyReport verify_c4_properties();

/// A Hitting Set instance: q nonempty subsets of {1..r}; a hitting set is an
/// H with |H intersect U_i| = 1 for every i.
struct HittingSetInstance {
  int universe_size = 0;                 // r
  std::vector<std::vector<int>> sets;    // 1-based indices, sorted, deduplicated

  /// File format: first line `r q`, then q lines of space-separated 1-based
  /// indices. Duplicate indices within a set are merged; q = 0 and empty sets
  /// are rejected.
  static HittingSetInstance parse(std::istream& in);

  void validate() const;
};

/// The reduced identity w = w^2 together with the variable roles needed to
/// read a hitting set back off a falsifying substitution.
struct ReducedIdentity {
  Claim claim;
  std::vector<VarId> x_vars;  // x_1..x_r
  std::vector<VarId> y_vars;  // y_1..y_r
  VarId z_var;
};

/// Builds the semigroup identity w = w^2 over variables x1..xr, y1..yr, z
/// with w = z u_1..u_q v_1..v_r, u_i = (x_{j1}..x_{jp} z)^2 for U_i =
/// {j1..jp}, and v_j = (x_j y_j z y_j x_j z)^2. The identity fails in C4 iff
/// the instance has a hitting set, and the claim size is bounded by
/// 3(1 + 2(r+1)q + 12r).
ReducedIdentity reduce_hitting_set(const HittingSetInstance& inst, Interner& interner);

/// Brute-force search over all 2^r candidate subsets (requires r <= 20).
std::optional<std::vector<int>> hitting_set_exists(const HittingSetInstance& inst);

/// Reads a hitting set off a substitution that falsifies the reduced
/// identity: {s_j : x_j maps to b} when z maps to a, and symmetrically with a
/// and b swapped. Throws std::invalid_argument if the substitution does not
/// falsify the identity.
std::vector<int> extract_hitting_set(const HittingSetInstance& inst, const ReducedIdentity& red,
                                     const Substitution& phi);

}  // namespace trimat

#endif  // TRIMAT_HARDNESS_HPP_
