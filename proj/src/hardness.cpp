#include "trimat/hardness.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace trimat {

namespace {

const std::array<std::string_view, c4_size> kNames = {"e",  "a",  "b",   "a2", "ab",
                                                      "ba", "b2", "a2b", "ba2"};

std::array<BoolMatrix, c4_size> make_c4_matrices() {
  return {
      BoolMatrix::parse("1 0 0 0; 0 1 0 0; 0 0 1 0; 0 0 0 1"),  // e
      BoolMatrix::parse("1 1 0 0; 0 0 0 1; 0 0 0 0; 0 0 0 1"),  // a
      BoolMatrix::parse("1 0 1 0; 0 0 0 0; 0 0 0 1; 0 0 0 1"),  // b
      BoolMatrix::parse("1 1 0 1; 0 0 0 1; 0 0 0 0; 0 0 0 1"),  // a2
      BoolMatrix::parse("1 0 1 0; 0 0 0 1; 0 0 0 0; 0 0 0 1"),  // ab
      BoolMatrix::parse("1 1 0 0; 0 0 0 0; 0 0 0 1; 0 0 0 1"),  // ba
      BoolMatrix::parse("1 0 1 1; 0 0 0 0; 0 0 0 1; 0 0 0 1"),  // b2
      BoolMatrix::parse("1 0 1 1; 0 0 0 1; 0 0 0 0; 0 0 0 1"),  // a2b
      BoolMatrix::parse("1 1 0 1; 0 0 0 0; 0 0 0 1; 0 0 0 1"),  // ba2
  };
}

std::array<std::array<C4Tag, c4_size>, c4_size> make_c4_table() {
  const auto& mats = c4_matrices();
  std::array<std::array<C4Tag, c4_size>, c4_size> table{};
  for (std::size_t i = 0; i < c4_size; ++i) {
    for (std::size_t j = 0; j < c4_size; ++j) {
      const BoolMatrix product = mats[i] * mats[j];
      const auto it = std::find(mats.begin(), mats.end(), product);
      if (it == mats.end()) {
        throw std::logic_error("C4 is not closed under product at " + std::string(kNames[i]) +
                               " * " + std::string(kNames[j]));
      }
      table[i][j] = static_cast<C4Tag>(it - mats.begin());
    }
  }
  return table;
}

Word word_of(std::initializer_list<VarId> vars) {
  return Word(std::vector<VarId>(vars));
}

}  // namespace

std::string_view c4_name(C4Tag t) { return kNames[static_cast<std::size_t>(t)]; }

const std::array<BoolMatrix, c4_size>& c4_matrices() {
  static const std::array<BoolMatrix, c4_size> mats = make_c4_matrices();
  return mats;
}

const std::array<std::array<C4Tag, c4_size>, c4_size>& c4_table() {
  static const auto table = make_c4_table();
  return table;
}

C4Tag c4_mul(C4Tag x, C4Tag y) {
  return c4_table()[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
}

bool PropertyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

PropertyReport verify_c4_properties() {
  PropertyReport report;
  const auto& mats = c4_matrices();
  const auto tag = [](C4Tag t) { return t; };
  const auto is_idem = [&](C4Tag t) { return c4_mul(t, t) == t; };

  // 0: power relations
  {
    const bool ok = c4_mul(c4_mul(C4Tag::a, C4Tag::a), C4Tag::a) == C4Tag::a2 &&
                    c4_mul(c4_mul(C4Tag::b, C4Tag::b), C4Tag::b) == C4Tag::b2 &&
                    c4_mul(C4Tag::a, C4Tag::b2) == C4Tag::a2b &&
                    c4_mul(C4Tag::a2, C4Tag::b) == C4Tag::a2b &&
                    c4_mul(C4Tag::a2, C4Tag::b2) == C4Tag::a2b;
    report.checks.emplace_back("0: a^3=a^2, b^3=b^2, a b^2 = a^2 b = a^2 b^2", ok);
  }
  // 1: sandwich relations
  {
    const bool ok = c4_mul(c4_mul(C4Tag::a, C4Tag::b), C4Tag::a) == tag(C4Tag::a) &&
                    c4_mul(c4_mul(C4Tag::b, C4Tag::a), C4Tag::b) == tag(C4Tag::b);
    report.checks.emplace_back("1: aba=a and bab=b", ok);
  }
  // 2: all elements except a and b are idempotent
  {
    bool ok = !is_idem(C4Tag::a) && !is_idem(C4Tag::b);
    for (std::size_t i = 0; i < c4_size; ++i) {
      const C4Tag t = static_cast<C4Tag>(i);
      if (t == C4Tag::a || t == C4Tag::b) continue;
      ok = ok && is_idem(t);
    }
    report.checks.emplace_back("2: idempotents are exactly the elements other than a and b", ok);
  }
  // 3: every square is idempotent
  {
    bool ok = true;
    for (std::size_t i = 0; i < c4_size; ++i) {
      const C4Tag sq = c4_mul(static_cast<C4Tag>(i), static_cast<C4Tag>(i));
      ok = ok && is_idem(sq);
    }
    report.checks.emplace_back("3: every square is idempotent", ok);
  }
  // 4: products of idempotents are idempotent, over the whole subsemigroup
  // generated by the idempotents (closure search).
  {
    std::vector<C4Tag> reachable;
    for (std::size_t i = 0; i < c4_size; ++i) {
      if (is_idem(static_cast<C4Tag>(i))) reachable.push_back(static_cast<C4Tag>(i));
    }
    const std::vector<C4Tag> generators = reachable;
    bool ok = true;
    for (std::size_t at = 0; at < reachable.size(); ++at) {
      for (const C4Tag g : generators) {
        const C4Tag p = c4_mul(reachable[at], g);
        ok = ok && is_idem(p);
        if (std::find(reachable.begin(), reachable.end(), p) == reachable.end()) {
          reachable.push_back(p);
        }
      }
    }
    report.checks.emplace_back("4: any product of idempotents is idempotent", ok);
  }
  // 5: I = {a2, b2, a2b, ba2} is exactly the set with 1 at (1,4) and an ideal
  {
    const auto in_I = [&](C4Tag t) {
      return t == C4Tag::a2 || t == C4Tag::b2 || t == C4Tag::a2b || t == C4Tag::ba2;
    };
    bool ok = true;
    for (std::size_t i = 0; i < c4_size; ++i) {
      ok = ok && (in_I(static_cast<C4Tag>(i)) == mats[i].get(1, 4));
    }
    for (std::size_t i = 0; i < c4_size; ++i) {
      for (std::size_t j = 0; j < c4_size; ++j) {
        const C4Tag c = static_cast<C4Tag>(i);
        const C4Tag d = static_cast<C4Tag>(j);
        if (!in_I(d)) continue;
        ok = ok && in_I(c4_mul(c, d)) && in_I(c4_mul(d, c));
      }
    }
    report.checks.emplace_back("5: {a2,b2,a2b,ba2} = elements with 1 at (1,4), and an ideal", ok);
  }
  return report;
}

HittingSetInstance HittingSetInstance::parse(std::istream& in) {
  HittingSetInstance inst;
  int q = 0;
  if (!(in >> inst.universe_size >> q)) {
    throw std::invalid_argument("HittingSetInstance: expected header line 'r q'");
  }
  std::string line;
  std::getline(in, line);  // rest of header line
  int read = 0;
  while (read < q && std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream entries(line);
    std::vector<int> set;
    int v = 0;
    while (entries >> v) set.push_back(v);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    inst.sets.push_back(std::move(set));
    ++read;
  }
  if (read != q) {
    throw std::invalid_argument("HittingSetInstance: expected " + std::to_string(q) +
                                " set lines, found " + std::to_string(read));
  }
  inst.validate();
  return inst;
}

void HittingSetInstance::validate() const {
  if (universe_size < 1) {
    throw std::invalid_argument("HittingSetInstance: universe size must be >= 1");
  }
  if (sets.empty()) {
    throw std::invalid_argument("HittingSetInstance: at least one set is required");
  }
  for (const auto& set : sets) {
    if (set.empty()) {
      throw std::invalid_argument("HittingSetInstance: sets must be nonempty");
    }
    for (int v : set) {
      if (v < 1 || v > universe_size) {
        throw std::invalid_argument("HittingSetInstance: element " + std::to_string(v) +
                                    " outside 1.." + std::to_string(universe_size));
      }
    }
  }
}

ReducedIdentity reduce_hitting_set(const HittingSetInstance& inst, Interner& interner) {
  inst.validate();
  const int r = inst.universe_size;
  std::vector<VarId> xs, ys;
  for (int j = 1; j <= r; ++j) {
    xs.push_back(interner.intern("x" + std::to_string(j)));
    ys.push_back(interner.intern("y" + std::to_string(j)));
  }
  const VarId z = interner.intern("z");

  Word w = word_of({z});
  for (const auto& set : inst.sets) {
    std::vector<VarId> block;
    block.reserve(set.size() + 1);
    for (int j : set) block.push_back(xs[static_cast<std::size_t>(j - 1)]);
    block.push_back(z);
    w = w * Word(block).pow(2);
  }
  for (int j = 1; j <= r; ++j) {
    const VarId xj = xs[static_cast<std::size_t>(j - 1)];
    const VarId yj = ys[static_cast<std::size_t>(j - 1)];
    w = w * word_of({xj, yj, z, yj, xj, z}).pow(2);
  }

  Claim claim(ClaimKind::semigroup_identity, Polynomial::single(w), Polynomial::single(w.pow(2)));
  return {std::move(claim), std::move(xs), std::move(ys), z};
}

std::optional<std::vector<int>> hitting_set_exists(const HittingSetInstance& inst) {
  inst.validate();
  const int r = inst.universe_size;
  if (r > 20) {
    throw std::invalid_argument("hitting_set_exists: universe too large for 2^r enumeration");
  }
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << r); ++mask) {
    bool ok = true;
    for (const auto& set : inst.sets) {
      int hit = 0;
      for (int v : set) hit += static_cast<int>((mask >> (v - 1)) & 1);
      if (hit != 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<int> h;
      for (int v = 1; v <= r; ++v) {
        if ((mask >> (v - 1)) & 1) h.push_back(v);
      }
      return h;
    }
  }
  return std::nullopt;
}

std::vector<int> extract_hitting_set(const HittingSetInstance& inst, const ReducedIdentity& red,
                                     const Substitution& phi) {
  // The substitution falsifies w = w^2 iff the value of w is not idempotent.
  const BoolMatrix value = eval_word(red.claim.lhs_word(), phi);
  if (value.is_idempotent()) {
    throw std::invalid_argument("extract_hitting_set: substitution does not falsify the identity");
  }
  const auto& mats = c4_matrices();
  const BoolMatrix& z_image = phi.image(red.z_var);
  const BoolMatrix* marker = nullptr;
  if (z_image == mats[static_cast<std::size_t>(C4Tag::a)]) {
    marker = &mats[static_cast<std::size_t>(C4Tag::b)];
  } else if (z_image == mats[static_cast<std::size_t>(C4Tag::b)]) {
    marker = &mats[static_cast<std::size_t>(C4Tag::a)];
  } else {
    throw std::invalid_argument("extract_hitting_set: z must map to a or b in a falsifier");
  }
  std::vector<int> h;
  for (int j = 1; j <= inst.universe_size; ++j) {
    if (phi.image(red.x_vars[static_cast<std::size_t>(j - 1)]) == *marker) h.push_back(j);
  }
  for (const auto& set : inst.sets) {
    int hit = 0;
    for (int v : set) {
      hit += std::binary_search(h.begin(), h.end(), v) ? 1 : 0;
    }
    if (hit != 1) {
      throw std::invalid_argument(
          "extract_hitting_set: extracted set does not meet every U_i exactly once");
    }
  }
  return h;
}

}  // namespace trimat
