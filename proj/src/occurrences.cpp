#include "trimat/occurrences.hpp"

#include <algorithm>
#include <stdexcept>

namespace trimat {

namespace {

void check_occurrence(const Word& host, const Occurrence& occ) {
  for (std::size_t i = 0; i < occ.positions.size(); ++i) {
    if (occ.positions[i] >= host.length()) {
      throw std::invalid_argument("occurrence position out of range");
    }
    if (i > 0 && occ.positions[i] <= occ.positions[i - 1]) {
      throw std::invalid_argument("occurrence positions must be strictly increasing");
    }
  }
}

// Per-letter prefix occurrence counts of a host word, for O(|alphabet|)
// alphabet-of-range queries.
struct RangeAlphabet {
  std::vector<VarId> letters;                         // distinct letters of the host
  std::vector<std::vector<std::uint32_t>> prefix;     // letters.size() x (|host|+1)

  explicit RangeAlphabet(const Word& host) {
    const VarSet alpha = host.alphabet();
    for (VarId v = 0; v < 64; ++v) {
      if (alpha.contains(v)) letters.push_back(v);
    }
    prefix.assign(letters.size(), std::vector<std::uint32_t>(host.length() + 1, 0));
    for (std::size_t idx = 0; idx < letters.size(); ++idx) {
      auto& row = prefix[idx];
      for (std::size_t i = 0; i < host.length(); ++i) {
        row[i + 1] = row[i] + (host.at(i) == letters[idx] ? 1 : 0);
      }
    }
  }

  // Alphabet of host[a..b), 0-based half-open.
  VarSet of_range(std::size_t a, std::size_t b) const {
    VarSet s;
    for (std::size_t idx = 0; idx < letters.size(); ++idx) {
      if (prefix[idx][b] > prefix[idx][a]) s.insert(letters[idx]);
    }
    return s;
  }
};

}  // namespace

bool profile_dominates(const GapProfile& dominating, const GapProfile& dominated) {
  if (dominating.arity() != dominated.arity()) {
    throw std::invalid_argument("profile_dominates: arity mismatch");
  }
  for (std::size_t l = 0; l < dominating.arity(); ++l) {
    if (!dominated.gap(l).subset_of(dominating.gap(l))) return false;
  }
  return true;
}

Word spelled(const Word& host, const Occurrence& occ) {
  check_occurrence(host, occ);
  std::vector<VarId> letters;
  letters.reserve(occ.positions.size());
  for (std::uint32_t p : occ.positions) letters.push_back(host.at(p));
  return Word(std::move(letters));
}

GapProfile gaps_of(const Word& host, const Occurrence& occ) {
  check_occurrence(host, occ);
  std::vector<VarSet> gaps;
  gaps.reserve(occ.positions.size() + 1);
  std::size_t start = 0;
  for (std::uint32_t p : occ.positions) {
    VarSet g;
    for (std::size_t i = start; i < p; ++i) g.insert(host.at(i));
    gaps.push_back(g);
    start = p + 1;
  }
  VarSet tail;
  for (std::size_t i = start; i < host.length(); ++i) tail.insert(host.at(i));
  gaps.push_back(tail);
  return GapProfile(std::move(gaps));
}

void for_each_occurrence(
    const Word& host, std::size_t k,
    const std::function<void(const Occurrence&, const GapProfile&)>& fn) {
  const std::size_t m = host.length();
  if (k > m) return;
  if (k == 0) {
    fn(Occurrence{}, GapProfile({host.alphabet()}));
    return;
  }
  const RangeAlphabet ranges(host);
  Occurrence occ;
  occ.positions.resize(k);
  for (std::size_t i = 0; i < k; ++i) occ.positions[i] = static_cast<std::uint32_t>(i);
  std::vector<VarSet> gaps(k + 1);
  while (true) {
    std::size_t start = 0;
    for (std::size_t i = 0; i < k; ++i) {
      gaps[i] = ranges.of_range(start, occ.positions[i]);
      start = occ.positions[i] + 1;
    }
    gaps[k] = ranges.of_range(start, m);
    fn(occ, GapProfile(gaps));

    // next combination in lexicographic order
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (occ.positions[i] + (k - i) < m) {
        ++occ.positions[i];
        for (std::size_t j = i + 1; j < k; ++j) occ.positions[j] = occ.positions[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
  }
}

std::vector<std::pair<Word, GapProfile>> enumerate_occurrences(const Word& host, std::size_t k) {
  if (k > host.length()) {
    throw std::invalid_argument("enumerate_occurrences: k exceeds the host length");
  }
  std::vector<std::pair<Word, GapProfile>> out;
  for_each_occurrence(host, k, [&](const Occurrence& occ, const GapProfile& profile) {
    out.emplace_back(spelled(host, occ), profile);
  });
  return out;
}

std::optional<Occurrence> leftmost_occurrence(const Word& u, const Word& v) {
  Occurrence occ;
  occ.positions.reserve(u.length());
  std::size_t from = 0;
  for (std::size_t i = 0; i < u.length(); ++i) {
    std::size_t p = from;
    while (p < v.length() && v.at(p) != u.at(i)) ++p;
    if (p == v.length()) return std::nullopt;
    occ.positions.push_back(static_cast<std::uint32_t>(p));
    from = p + 1;
  }
  return occ;
}

std::vector<GapProfile> minimal_profiles(std::span<const GapProfile> profiles) {
  std::vector<GapProfile> sorted(profiles.begin(), profiles.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty()) {
    const std::size_t arity = sorted.front().arity();
    for (const GapProfile& p : sorted) {
      if (p.arity() != arity) {
        throw std::invalid_argument("minimal_profiles: arity mismatch");
      }
    }
  }
  std::vector<GapProfile> minimal;
  for (const GapProfile& p : sorted) {
    bool has_smaller = false;
    for (const GapProfile& q : sorted) {
      if (q != p && profile_dominates(p, q)) {
        has_smaller = true;
        break;
      }
    }
    if (!has_smaller) minimal.push_back(p);
  }
  return minimal;
}

ProfileMap collect_profiles(std::span<const Word> hosts, std::size_t k) {
  std::map<Word, std::set<GapProfile>> grouped;
  for (const Word& host : hosts) {
    for_each_occurrence(host, k, [&](const Occurrence& occ, const GapProfile& profile) {
      grouped[spelled(host, occ)].insert(profile);
    });
  }
  ProfileMap out;
  for (auto& [subword, profiles] : grouped) {
    out.emplace(subword, std::vector<GapProfile>(profiles.begin(), profiles.end()));
  }
  return out;
}

namespace {

// Enumerates each distinct length-k subword exactly once by always matching
// the next letter at its earliest occurrence.
void distinct_subwords_from(const Word& w,
                            const std::vector<std::vector<std::uint32_t>>& next,
                            const std::vector<VarId>& letters, std::size_t start,
                            std::size_t remaining, std::vector<VarId>& prefix,
                            std::set<Word>& out) {
  if (remaining == 0) {
    out.insert(Word(prefix));
    return;
  }
  for (std::size_t idx = 0; idx < letters.size(); ++idx) {
    const std::uint32_t p = next[idx][start];
    if (p == w.length()) continue;
    if (w.length() - p < remaining) continue;
    prefix.push_back(letters[idx]);
    distinct_subwords_from(w, next, letters, p + 1, remaining - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::set<Word> distinct_subwords(const Word& w, std::size_t k) {
  std::set<Word> out;
  if (k > w.length()) return out;
  if (k == 0) {
    out.insert(Word());
    return out;
  }
  const VarSet alpha = w.alphabet();
  std::vector<VarId> letters;
  for (VarId v = 0; v < 64; ++v) {
    if (alpha.contains(v)) letters.push_back(v);
  }
  // next[idx][i]: first position >= i holding letters[idx], or |w|.
  std::vector<std::vector<std::uint32_t>> next(
      letters.size(), std::vector<std::uint32_t>(w.length() + 1));
  for (std::size_t idx = 0; idx < letters.size(); ++idx) {
    next[idx][w.length()] = static_cast<std::uint32_t>(w.length());
    for (std::size_t i = w.length(); i-- > 0;) {
      next[idx][i] = (w.at(i) == letters[idx]) ? static_cast<std::uint32_t>(i) : next[idx][i + 1];
    }
  }
  std::vector<VarId> prefix;
  distinct_subwords_from(w, next, letters, 0, k, prefix, out);
  return out;
}

}  // namespace trimat
