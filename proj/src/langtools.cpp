#include "trimat/langtools.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "trimat/decider.hpp"
#include "trimat/occurrences.hpp"
#include "trimat/oracle.hpp"

namespace trimat {

void SimpleLanguage::validate() const {
  if (sigmas.size() != markers.size() + 1) {
    throw std::invalid_argument("SimpleLanguage: need exactly one more set than markers");
  }
}

bool language_member_scan(const Word& w, const SimpleLanguage& lang) {
  lang.validate();
  const std::size_t k = lang.marker_count();
  // reachable[l]: a prefix of w can end with l markers matched, sitting
  // inside S_{l+1}*.
  std::vector<char> reachable(k + 1, 0);
  reachable[0] = 1;
  for (const VarId c : w.letters()) {
    std::vector<char> next(k + 1, 0);
    for (std::size_t l = 0; l <= k; ++l) {
      if (!reachable[l]) continue;
      if (lang.sigmas[l].contains(c)) next[l] = 1;
      if (l < k && lang.markers[l] == c) next[l + 1] = 1;
    }
    reachable = std::move(next);
  }
  return reachable[k] != 0;
}

namespace {

// A host word realizing the language's gaps exactly: each sigma's variables
// listed once, in id order, between the markers.
Word realizing_host(const SimpleLanguage& lang) {
  std::vector<VarId> letters;
  for (std::size_t l = 0; l <= lang.marker_count(); ++l) {
    for (VarId v = 0; v < 64; ++v) {
      if (lang.sigmas[l].contains(v)) letters.push_back(v);
    }
    if (l < lang.marker_count()) letters.push_back(lang.markers[l]);
  }
  return Word(std::move(letters));
}

Occurrence marker_occurrence(const SimpleLanguage& lang) {
  Occurrence occ;
  std::uint32_t pos = 0;
  for (std::size_t l = 0; l < lang.marker_count(); ++l) {
    pos += static_cast<std::uint32_t>(lang.sigmas[l].count());
    occ.positions.push_back(pos);
    ++pos;
  }
  return occ;
}

}  // namespace

bool language_member_matrix(const Word& w, const SimpleLanguage& lang, int n) {
  lang.validate();
  const std::size_t k = lang.marker_count();
  if (static_cast<std::size_t>(n) < k + 1) {
    throw std::invalid_argument("language_member_matrix: need n >= k+1");
  }
  return subword_criterion(Word(std::vector<VarId>(lang.markers)), realizing_host(lang),
                           marker_occurrence(lang), n, w);
}

bool language_member_matrix(const Word& w, const SimpleLanguage& lang) {
  return language_member_matrix(w, lang, static_cast<int>(lang.marker_count()) + 1);
}

std::optional<SimpleLanguage> distinguishing_language(const Word& w, const Word& w2, int n) {
  const Verdict verdict = sem_inequality_holds(w, w2, n);
  if (verdict.holds) return std::nullopt;
  const CounterEvidence& ce = *verdict.witness;
  SimpleLanguage lang;
  lang.markers.assign(ce.subword.letters().begin(), ce.subword.letters().end());
  lang.sigmas.assign(ce.profile.gaps().begin(), ce.profile.gaps().end());
  return lang;
}

std::vector<SimpleLanguage> enumerate_languages(const VarSet& sigma, int n, std::uint64_t cap) {
  if (n < 1) throw std::invalid_argument("enumerate_languages: n must be >= 1");
  std::vector<VarId> vars;
  for (VarId v = 0; v < 64; ++v) {
    if (sigma.contains(v)) vars.push_back(v);
  }
  if (vars.size() >= 63) throw std::length_error("enumerate_languages: alphabet too large");
  const std::uint64_t subset_count = std::uint64_t{1} << vars.size();

  // count(k) = |vars|^k * subset_count^(k+1); guard the cap progressively.
  std::uint64_t total = 0;
  for (int k = 0; k < n; ++k) {
    if (k > 0 && vars.empty()) continue;
    unsigned __int128 count = subset_count;
    for (int i = 0; i < k && count <= cap; ++i) {
      count *= vars.size();
      if (count > cap) break;
      count *= subset_count;
    }
    if (count > cap || total > cap - static_cast<std::uint64_t>(count)) {
      throw std::length_error("enumerate_languages: output exceeds the cap");
    }
    total += static_cast<std::uint64_t>(count);
  }

  const auto subset_at = [&](std::uint64_t index) {
    VarSet s;
    for (std::size_t b = 0; b < vars.size(); ++b) {
      if ((index >> b) & 1) s.insert(vars[b]);
    }
    return s;
  };

  std::vector<SimpleLanguage> out;
  out.reserve(total);
  for (int k = 0; k < n; ++k) {
    if (k > 0 && vars.empty()) continue;
    // odometer over marker choices, then over the k+1 sigma subsets
    std::vector<std::size_t> marker_digits(static_cast<std::size_t>(k), 0);
    while (true) {
      std::vector<std::uint64_t> sigma_digits(static_cast<std::size_t>(k) + 1, 0);
      while (true) {
        SimpleLanguage lang;
        for (std::size_t i = 0; i < marker_digits.size(); ++i) {
          lang.markers.push_back(vars[marker_digits[i]]);
        }
        for (std::uint64_t d : sigma_digits) lang.sigmas.push_back(subset_at(d));
        out.push_back(std::move(lang));

        std::size_t j = sigma_digits.size();
        bool carried = true;
        while (j > 0) {
          --j;
          if (++sigma_digits[j] < subset_count) {
            carried = false;
            break;
          }
          sigma_digits[j] = 0;
        }
        if (carried) break;
      }
      if (k == 0) break;
      std::size_t j = marker_digits.size();
      bool carried = true;
      while (j > 0) {
        --j;
        if (++marker_digits[j] < vars.size()) {
          carried = false;
          break;
        }
        marker_digits[j] = 0;
      }
      if (carried) break;
    }
  }
  return out;
}

SimpleLanguage parse_language(std::string_view text, Interner& interner) {
  SimpleLanguage lang;
  std::size_t pos = 0;
  const auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  bool expect_sigma = true;
  while (true) {
    skip_space();
    if (pos >= text.size()) break;
    if (text[pos] == '{') {
      if (!expect_sigma) {
        throw ParseError("expected a marker variable, found a set", pos);
      }
      ++pos;
      VarSet s;
      skip_space();
      while (pos < text.size() && text[pos] != '}') {
        const std::size_t start = pos;
        if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
          while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                       text[pos] == '_')) {
            ++pos;
          }
        }
        if (pos == start) throw ParseError("expected a variable name in set", pos);
        s.insert(interner.intern(text.substr(start, pos - start)));
        skip_space();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          skip_space();
        }
      }
      if (pos >= text.size()) throw ParseError("unterminated set", pos);
      ++pos;  // '}'
      if (pos >= text.size() || text[pos] != '*') {
        throw ParseError("expected '*' after set", pos);
      }
      ++pos;
      lang.sigmas.push_back(s);
      expect_sigma = false;
    } else {
      if (expect_sigma) {
        throw ParseError("expected a '{...}*' set", pos);
      }
      const std::size_t start = pos;
      if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
          ++pos;
        }
      }
      if (pos == start) throw ParseError("expected a marker variable", pos);
      lang.markers.push_back(interner.intern(text.substr(start, pos - start)));
      expect_sigma = true;
    }
  }
  if (lang.sigmas.size() != lang.markers.size() + 1) {
    throw ParseError("language must alternate sets and markers, starting and ending with a set",
                     pos);
  }
  return lang;
}

std::string to_string(const SimpleLanguage& lang, const Interner& interner) {
  std::string out;
  for (std::size_t l = 0; l < lang.sigmas.size(); ++l) {
    if (l > 0) out += ' ' + interner.name(lang.markers[l - 1]) + ' ';
    out += to_string(lang.sigmas[l], interner) + "*";
  }
  return out;
}

}  // namespace trimat
