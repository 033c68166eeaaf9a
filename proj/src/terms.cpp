#include "trimat/terms.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace trimat {

VarId Interner::intern(std::string_view name) {
  auto it = ids_.find(std::string(name));
  if (it != ids_.end()) return it->second;
  const VarId id = static_cast<VarId>(names_.size());
  names_.emplace_back(name);
  ids_.emplace(names_.back(), id);
  return id;
}

std::optional<VarId> Interner::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

const std::string& Interner::name(VarId id) const {
  if (id >= names_.size()) {
    throw std::invalid_argument("Interner::name: unknown variable id " + std::to_string(id));
  }
  return names_[id];
}

void VarSet::insert(VarId v) {
  if (v >= 64) {
    throw std::invalid_argument(
        "VarSet: variable id " + std::to_string(v) +
        " out of range; at most 64 distinct variables are supported per interner");
  }
  bits_ |= std::uint64_t{1} << v;
}

int VarSet::count() const { return std::popcount(bits_); }

VarSet Word::alphabet() const {
  VarSet s;
  for (VarId v : letters_) s.insert(v);
  return s;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<VarId> letters;
  letters.reserve(a.letters_.size() + b.letters_.size());
  letters.insert(letters.end(), a.letters_.begin(), a.letters_.end());
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(letters));
}

Word Word::pow(unsigned k) const {
  std::vector<VarId> letters;
  letters.reserve(letters_.size() * k);
  for (unsigned i = 0; i < k; ++i) {
    letters.insert(letters.end(), letters_.begin(), letters_.end());
  }
  return Word(std::move(letters));
}

Polynomial::Polynomial(std::vector<Word> summands) : summands_(std::move(summands)) {
  if (summands_.empty()) {
    throw std::invalid_argument("Polynomial: must have at least one summand");
  }
  for (const Word& w : summands_) {
    if (w.empty()) {
      throw std::invalid_argument("Polynomial: the empty word is not a valid summand");
    }
  }
  std::sort(summands_.begin(), summands_.end());
  summands_.erase(std::unique(summands_.begin(), summands_.end()), summands_.end());
}

Polynomial Polynomial::single(Word w) {
  std::vector<Word> one;
  one.push_back(std::move(w));
  return Polynomial(std::move(one));
}

VarSet Polynomial::alphabet() const {
  VarSet s;
  for (const Word& w : summands_) s = s | w.alphabet();
  return s;
}

std::size_t Polynomial::total_length() const {
  std::size_t total = 0;
  for (const Word& w : summands_) total += w.length();
  return total;
}

bool is_identity(ClaimKind kind) {
  return kind == ClaimKind::semigroup_identity || kind == ClaimKind::semiring_identity;
}

bool is_semiring(ClaimKind kind) {
  return kind == ClaimKind::semiring_identity || kind == ClaimKind::semiring_inequality;
}

Claim::Claim(ClaimKind kind, Polynomial lhs, Polynomial rhs)
    : kind_(kind), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
  if (!is_semiring(kind_) && (lhs_.summands().size() != 1 || rhs_.summands().size() != 1)) {
    throw std::invalid_argument("Claim: semigroup claims need exactly one word per side");
  }
}

const Word& Claim::lhs_word() const {
  if (is_semiring(kind_)) {
    throw std::invalid_argument("Claim::lhs_word: not a semigroup claim");
  }
  return lhs_.summands()[0];
}

const Word& Claim::rhs_word() const {
  if (is_semiring(kind_)) {
    throw std::invalid_argument("Claim::rhs_word: not a semigroup claim");
  }
  return rhs_.summands()[0];
}

Word zimin(int m, Interner& interner) {
  if (m < 1 || m > 26) {
    throw std::invalid_argument("zimin: m must be in [1, 26], got " + std::to_string(m));
  }
  std::vector<VarId> letters{interner.intern("x1")};
  for (int i = 2; i <= m; ++i) {
    const VarId xi = interner.intern("x" + std::to_string(i));
    std::vector<VarId> next;
    next.reserve(letters.size() * 2 + 1);
    next.insert(next.end(), letters.begin(), letters.end());
    next.push_back(xi);
    next.insert(next.end(), letters.begin(), letters.end());
    letters = std::move(next);
  }
  return Word(std::move(letters));
}

ParseError::ParseError(const std::string& message, std::size_t pos)
    : std::runtime_error(message + " (at offset " + std::to_string(pos) + ")"), position(pos) {}

namespace {

// Hand-rolled tokenizer/parser for the claim grammar. Tokens: identifier,
// integer (only after '^'), and the punctuation ^ + * = <=.
struct Parser {
  std::string_view text;
  std::size_t pos = 0;
  Interner& interner;

  explicit Parser(std::string_view t, Interner& i) : text(t), interner(i) {}

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_space();
    return pos >= text.size();
  }

  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
  bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string_view ident() {
    skip_space();
    const std::size_t start = pos;
    if (pos >= text.size() || !is_ident_start(text[pos])) {
      throw ParseError("expected a variable name", pos);
    }
    while (pos < text.size() && is_ident_char(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }

  unsigned integer() {
    skip_space();
    const std::size_t start = pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected an exponent after '^'", pos);
    }
    unsigned value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<unsigned>(text[pos] - '0');
      if (value > 1'000'000) throw ParseError("exponent too large", start);
      ++pos;
    }
    return value;
  }

  // word := atom (('*')? atom)*   with   atom := IDENT ('^' INT)?
  Word word() {
    std::vector<VarId> letters;
    const std::size_t start = pos;
    bool first = true;
    while (true) {
      const char c = peek();
      if (first || c == '*' || is_ident_start(c)) {
        if (!first && c == '*') ++pos;
        const VarId v = interner.intern(ident());
        unsigned reps = 1;
        if (peek() == '^') {
          ++pos;
          reps = integer();
        }
        for (unsigned i = 0; i < reps; ++i) letters.push_back(v);
        first = false;
      } else {
        break;
      }
    }
    if (letters.empty()) {
      throw ParseError("empty word summand", start);
    }
    return Word(std::move(letters));
  }

  // side := word ('+' word)*  ; reports whether a '+' was seen.
  Polynomial side(bool& saw_plus) {
    std::vector<Word> summands;
    summands.push_back(word());
    while (peek() == '+') {
      ++pos;
      saw_plus = true;
      summands.push_back(word());
    }
    return Polynomial(std::move(summands));
  }

  Claim claim() {
    if (at_end()) throw ParseError("empty claim", pos);
    bool saw_plus = false;
    Polynomial lhs = side(saw_plus);
    skip_space();
    bool identity;
    if (pos < text.size() && text[pos] == '=') {
      identity = true;
      ++pos;
    } else if (pos + 1 < text.size() && text[pos] == '<' && text[pos + 1] == '=') {
      identity = false;
      pos += 2;
    } else {
      throw ParseError("expected '=' or '<='", pos);
    }
    Polynomial rhs = side(saw_plus);
    if (!at_end()) throw ParseError("unexpected trailing input", pos);
    ClaimKind kind;
    if (saw_plus) {
      kind = identity ? ClaimKind::semiring_identity : ClaimKind::semiring_inequality;
    } else {
      kind = identity ? ClaimKind::semigroup_identity : ClaimKind::semigroup_inequality;
    }
    return Claim(kind, std::move(lhs), std::move(rhs));
  }
};

}  // namespace

Claim parse_claim(std::string_view text, Interner& interner) {
  Parser p(text, interner);
  return p.claim();
}

Word parse_word(std::string_view text, Interner& interner) {
  Parser p(text, interner);
  Word w = p.word();
  if (!p.at_end()) throw ParseError("unexpected trailing input", p.pos);
  return w;
}

std::string to_string(const Word& w, const Interner& interner) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.length()) {
    std::size_t run = 1;
    while (i + run < w.length() && w.at(i + run) == w.at(i)) ++run;
    if (!out.empty()) out += ' ';
    out += interner.name(w.at(i));
    if (run > 1) out += '^' + std::to_string(run);
    i += run;
  }
  return out;
}

std::string to_string(const Polynomial& p, const Interner& interner) {
  std::string out;
  for (const Word& w : p.summands()) {
    if (!out.empty()) out += " + ";
    out += to_string(w, interner);
  }
  return out;
}

std::string to_string(const Claim& c, const Interner& interner) {
  return to_string(c.lhs(), interner) + (is_identity(c.kind()) ? " = " : " <= ") +
         to_string(c.rhs(), interner);
}

std::string to_string(const VarSet& s, const Interner& interner) {
  std::string out = "{";
  bool first = true;
  for (VarId v = 0; v < 64; ++v) {
    if (!s.contains(v)) continue;
    if (!first) out += ',';
    out += interner.name(v);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace trimat
