#include "trimat/decider.hpp"

#include <algorithm>
#include <stdexcept>

namespace trimat {

namespace {

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("decider: n must be >= 1");
}

// Core criterion at one subword length: every (subword, profile) occurring on
// the `from` side must have a dominated occurrence on the `to` side. The `to`
// profiles are reduced to their minimal antichain first; a dominated element
// exists iff a minimal one is dominated.
Verdict check_domination(std::span<const Word> from, std::span<const Word> to, std::size_t k,
                         WitnessSide side) {
  const ProfileMap lower = collect_profiles(from, k);
  const ProfileMap upper = collect_profiles(to, k);
  for (const auto& [subword, profiles] : lower) {
    const auto it = upper.find(subword);
    std::vector<GapProfile> antichain;
    if (it != upper.end()) antichain = minimal_profiles(it->second);
    for (const GapProfile& g : profiles) {
      const bool matched = std::any_of(
          antichain.begin(), antichain.end(),
          [&](const GapProfile& candidate) { return profile_dominates(g, candidate); });
      if (!matched) return Verdict::fail({subword, g, side});
    }
  }
  return Verdict::ok();
}

GapProfile all_empty_profile(std::size_t arity) {
  return GapProfile(std::vector<VarSet>(arity));
}

}  // namespace

std::string_view to_string(WitnessSide side) {
  switch (side) {
    case WitnessSide::lower_in_upper_missing: return "lower-in-upper-missing";
    case WitnessSide::left_in_right_missing: return "left-in-right-missing";
    case WitnessSide::right_in_left_missing: return "right-in-left-missing";
  }
  return "?";
}

Verdict ais_inequality_holds(const Polynomial& lower, const Polynomial& upper, int n) {
  check_n(n);
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
    Verdict v = check_domination(lower.summands(), upper.summands(), k,
                                 WitnessSide::lower_in_upper_missing);
    if (!v.holds) return v;
  }
  return Verdict::ok();
}

Verdict ais_identity_holds(const Polynomial& lhs, const Polynomial& rhs, int n) {
  check_n(n);
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
    Verdict v =
        check_domination(lhs.summands(), rhs.summands(), k, WitnessSide::left_in_right_missing);
    if (!v.holds) return v;
    v = check_domination(rhs.summands(), lhs.summands(), k, WitnessSide::right_in_left_missing);
    if (!v.holds) return v;
  }
  return Verdict::ok();
}

Verdict sem_inequality_holds(const Word& w, const Word& w2, int n) {
  check_n(n);
  if (w.empty() || w2.empty()) {
    throw std::invalid_argument("sem_inequality_holds: sides must be nonempty words");
  }
  if (w == w2) return Verdict::ok();
  if (w.length() < static_cast<std::size_t>(n)) {
    // Words shorter than n are maximal: w occurs in itself with all gaps
    // empty, and only w itself can match that.
    return Verdict::fail(
        {w, all_empty_profile(w.length() + 1), WitnessSide::lower_in_upper_missing});
  }
  const Word from[] = {w};
  const Word to[] = {w2};
  return check_domination(from, to, static_cast<std::size_t>(n) - 1,
                          WitnessSide::lower_in_upper_missing);
}

Verdict sem_identity_holds(const Word& w, const Word& w2, int n) {
  check_n(n);
  if (w.empty() || w2.empty()) {
    throw std::invalid_argument("sem_identity_holds: sides must be nonempty words");
  }
  if (w == w2) return Verdict::ok();
  if (w.length() < static_cast<std::size_t>(n)) {
    return Verdict::fail({w, all_empty_profile(w.length() + 1), WitnessSide::left_in_right_missing});
  }
  if (w2.length() < static_cast<std::size_t>(n)) {
    return Verdict::fail(
        {w2, all_empty_profile(w2.length() + 1), WitnessSide::right_in_left_missing});
  }
  const Word left[] = {w};
  const Word right[] = {w2};
  const std::size_t k = static_cast<std::size_t>(n) - 1;
  Verdict v = check_domination(left, right, k, WitnessSide::left_in_right_missing);
  if (!v.holds) return v;
  return check_domination(right, left, k, WitnessSide::right_in_left_missing);
}

Verdict u_sem_identity_holds(const Word& w, const Word& w2, int n) {
  if (n < 0) throw std::invalid_argument("u_sem_identity_holds: n must be >= 0");
  if (w.empty() || w2.empty()) {
    throw std::invalid_argument("u_sem_identity_holds: sides must be nonempty words");
  }
  for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
    const std::set<Word> in_w = distinct_subwords(w, k);
    const std::set<Word> in_w2 = distinct_subwords(w2, k);
    if (in_w == in_w2) continue;
    // Witness: the smallest subword present on one side only, with its
    // leftmost occurrence profile there.
    for (const Word& u : in_w) {
      if (!in_w2.contains(u)) {
        return Verdict::fail({u, gaps_of(w, *leftmost_occurrence(u, w)),
                              WitnessSide::left_in_right_missing});
      }
    }
    for (const Word& u : in_w2) {
      if (!in_w.contains(u)) {
        return Verdict::fail({u, gaps_of(w2, *leftmost_occurrence(u, w2)),
                              WitnessSide::right_in_left_missing});
      }
    }
  }
  return Verdict::ok();
}

bool same_subwords_of_length(const Word& w, const Word& w2, std::size_t k) {
  return distinct_subwords(w, k) == distinct_subwords(w2, k);
}

bool condition_exists_EG(const Word& w, const Word& w2, int n) {
  check_n(n);
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
    const ProfileMap in_w = collect_profiles(std::span<const Word>(&w, 1), k);
    const ProfileMap in_w2 = collect_profiles(std::span<const Word>(&w2, 1), k);
    for (const auto& [subword, profiles] : in_w) {
      const auto it = in_w2.find(subword);
      if (it == in_w2.end()) continue;  // not a common subword
      std::vector<GapProfile> shared;
      std::set_intersection(profiles.begin(), profiles.end(), it->second.begin(),
                            it->second.end(), std::back_inserter(shared));
      if (shared.empty()) return false;
    }
  }
  return true;
}

bool condition_forall_EG(const Word& w, const Word& w2, int n) {
  check_n(n);
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
    const ProfileMap in_w = collect_profiles(std::span<const Word>(&w, 1), k);
    const ProfileMap in_w2 = collect_profiles(std::span<const Word>(&w2, 1), k);
    if (in_w != in_w2) return false;
  }
  return true;
}

bool leftmost_gaps_equal(const Word& w, const Word& w2, int n) {
  check_n(n);
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
    const std::set<Word> common_candidates = distinct_subwords(w, k);
    for (const Word& u : common_candidates) {
      const auto occ_w = leftmost_occurrence(u, w);
      const auto occ_w2 = leftmost_occurrence(u, w2);
      if (!occ_w2.has_value()) continue;  // not common
      if (gaps_of(w, *occ_w) != gaps_of(w2, *occ_w2)) return false;
    }
  }
  return true;
}

std::string_view to_string(Structure s) {
  switch (s) {
    case Structure::tn_semiring: return "tn-semiring";
    case Structure::tn_semigroup: return "tn-semigroup";
    case Structure::tn_ordered: return "tn-ordered";
    case Structure::un_semigroup: return "un-semigroup";
  }
  return "?";
}

std::optional<Structure> parse_structure(std::string_view name) {
  if (name == "tn-semiring") return Structure::tn_semiring;
  if (name == "tn-semigroup") return Structure::tn_semigroup;
  if (name == "tn-ordered") return Structure::tn_ordered;
  if (name == "un-semigroup") return Structure::un_semigroup;
  return std::nullopt;
}

Verdict decide(const Claim& claim, Structure structure, int n) {
  check_n(n);
  const bool identity = is_identity(claim.kind());
  const bool semiring = is_semiring(claim.kind());
  switch (structure) {
    case Structure::tn_semiring:
      return identity ? ais_identity_holds(claim.lhs(), claim.rhs(), n)
                      : ais_inequality_holds(claim.lhs(), claim.rhs(), n);
    case Structure::tn_semigroup:
      if (semiring) {
        throw std::invalid_argument("decide: semiring claim under tn-semigroup; use tn-semiring");
      }
      if (!identity) {
        throw std::invalid_argument("decide: inequality under tn-semigroup; use tn-ordered");
      }
      return sem_identity_holds(claim.lhs_word(), claim.rhs_word(), n);
    case Structure::tn_ordered:
      if (semiring) {
        throw std::invalid_argument("decide: semiring claim under tn-ordered; use tn-semiring");
      }
      return identity ? sem_identity_holds(claim.lhs_word(), claim.rhs_word(), n)
                      : sem_inequality_holds(claim.lhs_word(), claim.rhs_word(), n);
    case Structure::un_semigroup:
      if (semiring || !identity) {
        throw std::invalid_argument("decide: un-semigroup decides semigroup identities only");
      }
      return u_sem_identity_holds(claim.lhs_word(), claim.rhs_word(), n - 1);
  }
  throw std::invalid_argument("decide: unknown structure");
}

}  // namespace trimat
