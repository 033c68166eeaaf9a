#ifndef TRIMAT_OCCURRENCES_HPP_
#define TRIMAT_OCCURRENCES_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "trimat/terms.hpp"

namespace trimat {

/// One occurrence of a length-k subword in a host word: the k chosen
/// positions, strictly increasing, 0-based.
struct Occurrence {
  std::vector<std::uint32_t> positions;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
  friend std::strong_ordering operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// The gaps of an occurrence: the alphabets of the k+1 segments of the host
/// word between (and around) the chosen positions. For the empty subword the
/// single gap is the host's whole alphabet.
class GapProfile {
 public:
  GapProfile() = default;
  explicit GapProfile(std::vector<VarSet> gaps) : gaps_(std::move(gaps)) {}

  std::size_t arity() const { return gaps_.size(); }  // k + 1
  const VarSet& gap(std::size_t l) const { return gaps_.at(l); }
  std::span<const VarSet> gaps() const { return gaps_; }

  friend bool operator==(const GapProfile&, const GapProfile&) = default;
  friend std::strong_ordering operator<=>(const GapProfile&, const GapProfile&) = default;

 private:
  std::vector<VarSet> gaps_;
};

/// True iff `dominated` is componentwise contained in `dominating`:
/// dominated[l] is a subset of dominating[l] for every l. Profiles must have
/// equal arity.
bool profile_dominates(const GapProfile& dominating, const GapProfile& dominated);

/// The word spelled by an occurrence.
Word spelled(const Word& host, const Occurrence& occ);

/// The gap profile of a valid occurrence in the host word.
GapProfile gaps_of(const Word& host, const Occurrence& occ);

/// Calls fn once per occurrence of a length-k subword in the host, in
/// lexicographic order of position tuples. k == 0 yields the single empty
/// occurrence with gap alf(host).
void for_each_occurrence(
    const Word& host, std::size_t k,
    const std::function<void(const Occurrence&, const GapProfile&)>& fn);

/// Materialized variant, one (spelled subword, profile) pair per position
/// selection, lexicographic; requires k <= |host|.
std::vector<std::pair<Word, GapProfile>> enumerate_occurrences(const Word& host, std::size_t k);

/// The unique leftmost occurrence of u in v, if u is a subword of v: each
/// letter of u is matched to its earliest possible position.
std::optional<Occurrence> leftmost_occurrence(const Word& u, const Word& v);

/// The antichain of minimal profiles under componentwise inclusion. A profile
/// G has a dominated element in the input set iff it dominates some member of
/// the result. All profiles must have the same arity. Output is sorted.
std::vector<GapProfile> minimal_profiles(std::span<const GapProfile> profiles);

/// All distinct gap profiles per spelled subword of length k, over a family
/// of host words. Profiles are sorted and deduplicated per subword.
using ProfileMap = std::map<Word, std::vector<GapProfile>>;
ProfileMap collect_profiles(std::span<const Word> hosts, std::size_t k);

/// The set of distinct subwords of w of length k (each enumerated once).
std::set<Word> distinct_subwords(const Word& w, std::size_t k);

}  // namespace trimat

#endif  // TRIMAT_OCCURRENCES_HPP_
