#ifndef TRIMAT_TERMS_HPP_
#define TRIMAT_TERMS_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace trimat {

using VarId = std::uint32_t;

/// Maps variable names to small dense ids, stably for the interner's
/// lifetime. Not synchronized: confine each instance to one thread, or to a
/// setup phase before concurrent reads.
class Interner {
 public:
  VarId intern(std::string_view name);
  std::optional<VarId> find(std::string_view name) const;
  const std::string& name(VarId id) const;
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VarId> ids_;
};

/// A set of variables as a one-word bitset over interned ids. Keeps subset
/// tests and equality at word level; the price is a hard cap of 64 distinct
/// variables per interner scope, plenty for desk-scale claims.
class VarSet {
 public:
  VarSet() = default;

  static VarSet single(VarId v) {
    VarSet s;
    s.insert(v);
    return s;
  }

  void insert(VarId v);
  bool contains(VarId v) const { return v < 64 && ((bits_ >> v) & 1); }
  bool subset_of(const VarSet& other) const { return (bits_ & ~other.bits_) == 0; }
  bool empty() const { return bits_ == 0; }
  int count() const;
  std::uint64_t bits() const { return bits_; }

  VarSet operator|(const VarSet& o) const { return VarSet(bits_ | o.bits_); }
  VarSet operator&(const VarSet& o) const { return VarSet(bits_ & o.bits_); }

  friend bool operator==(const VarSet&, const VarSet&) = default;
  friend std::strong_ordering operator<=>(const VarSet&, const VarSet&) = default;

 private:
  explicit VarSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

/// A word: a finite, possibly empty sequence of variables. The empty word is
/// representable (it is needed as a subword convention) but is rejected as a
/// summand of a polynomial and hence as a side of a claim.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<VarId> letters) : letters_(std::move(letters)) {}

  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  VarId at(std::size_t i) const { return letters_.at(i); }
  std::span<const VarId> letters() const { return letters_; }

  VarSet alphabet() const;

  /// Concatenation.
  friend Word operator*(const Word& a, const Word& b);
  Word pow(unsigned k) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<VarId> letters_;
};

/// A finite nonempty set of nonempty words, written as a formal sum. Set
/// semantics: construction sorts and deduplicates, so summand order and
/// multiplicity never matter.
class Polynomial {
 public:
  explicit Polynomial(std::vector<Word> summands);
  static Polynomial single(Word w);

  std::span<const Word> summands() const { return summands_; }
  VarSet alphabet() const;
  std::size_t total_length() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Word> summands_;  // sorted, unique
};

enum class ClaimKind {
  semigroup_identity,
  semigroup_inequality,
  semiring_identity,
  semiring_inequality,
};

bool is_identity(ClaimKind kind);
bool is_semiring(ClaimKind kind);

/// One identity or inequality. For inequalities, lhs is the lower side. The
/// semigroup kinds require a single summand on each side.
class Claim {
 public:
  Claim(ClaimKind kind, Polynomial lhs, Polynomial rhs);

  ClaimKind kind() const { return kind_; }
  const Polynomial& lhs() const { return lhs_; }
  const Polynomial& rhs() const { return rhs_; }

  /// Single-summand accessors, valid for the semigroup kinds.
  const Word& lhs_word() const;
  const Word& rhs_word() const;

  VarSet alphabet() const { return lhs_.alphabet() | rhs_.alphabet(); }

  /// Total length of all words on both sides.
  std::size_t size() const { return lhs_.total_length() + rhs_.total_length(); }

 private:
  ClaimKind kind_;
  Polynomial lhs_;
  Polynomial rhs_;
};

/// Z_1 = x1, Z_{m+1} = Z_m x_{m+1} Z_m, over variables named x1..xm.
/// The result has length 2^m - 1.
Word zimin(int m, Interner& interner);

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position);
  std::size_t position;  // 0-based offset into the input text
};

/// Claim grammar: variables are identifiers `[a-zA-Z][a-zA-Z0-9_]*`;
/// juxtaposition (whitespace or `*`) is concatenation; `^k` repeats a
/// variable k times; `+` separates summands; `=` is an identity and `<=` an
/// inequality with the lower side on the left. A claim is a semiring claim
/// iff either side is written with `+`.
Claim parse_claim(std::string_view text, Interner& interner);

/// Parses a bare word in the same grammar (no `+`, `=`, `<=`).
Word parse_word(std::string_view text, Interner& interner);

std::string to_string(const Word& w, const Interner& interner);
std::string to_string(const Polynomial& p, const Interner& interner);
std::string to_string(const Claim& c, const Interner& interner);
std::string to_string(const VarSet& s, const Interner& interner);

}  // namespace trimat

#endif  // TRIMAT_TERMS_HPP_
