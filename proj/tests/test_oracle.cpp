#include "trimat/oracle.hpp"

#include <random>

#include "doctest.h"

using namespace trimat;

namespace {

// Independent search used to cross-check the matrix criterion: does the probe
// contain an occurrence of u with gaps componentwise inside `bound`?
bool dominated_occurrence_exists(const Word& u, const Word& probe, const GapProfile& bound) {
  bool found = false;
  for_each_occurrence(probe, u.length(), [&](const Occurrence& occ, const GapProfile& g) {
    if (found || spelled(probe, occ) != u) return;
    if (profile_dominates(bound, g)) found = true;
  });
  return found;
}

std::vector<Word> words_up_to(std::size_t max_len, const std::vector<VarId>& letters,
                              bool include_empty) {
  std::vector<Word> out;
  if (include_empty) out.push_back(Word());
  std::vector<std::vector<VarId>> frontier{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<VarId>> next;
    for (const auto& prefix : frontier) {
      for (VarId l : letters) {
        auto extended = prefix;
        extended.push_back(l);
        out.push_back(Word(extended));
        next.push_back(std::move(extended));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("word evaluation matches the worked 3x3 substitution") {
  Interner in;
  const Word w = parse_word("x y x x y x", in);
  const Word w2 = parse_word("x y x y x", in);
  Substitution phi(3);
  phi.set(*in.find("x"), BoolMatrix::parse("1 1 0; 0 0 1; 0 0 1"));
  phi.set(*in.find("y"), BoolMatrix::parse("1 0 0; 0 0 0; 0 0 1"));
  CHECK(eval_word(w, phi) == BoolMatrix::parse("1 1 1; 0 0 1; 0 0 1"));
  CHECK(eval_word(w2, phi) == BoolMatrix::parse("1 1 0; 0 0 1; 0 0 1"));
  CHECK(eval_word(parse_word("x", in), phi) == phi.image(*in.find("x")));
  CHECK_THROWS_AS(eval_word(Word(), phi), std::invalid_argument);
  // unmapped variables default to zero
  CHECK(eval_word(parse_word("z", in), phi).is_zero());
}

TEST_CASE("polynomial evaluation is a summand-order-independent sum") {
  Interner in;
  const Word xy = parse_word("x y", in);
  const Word yx = parse_word("y x", in);
  Substitution phi(2);
  phi.set(*in.find("x"), BoolMatrix::parse("1 1; 0 0"));
  phi.set(*in.find("y"), BoolMatrix::parse("0 1; 0 1"));
  CHECK(eval_polynomial(Polynomial::single(xy), phi) == eval_word(xy, phi));
  CHECK(eval_polynomial(Polynomial({xy, yx}), phi) ==
        eval_word(xy, phi) + eval_word(yx, phi));
  CHECK(eval_polynomial(Polynomial({xy, yx}), phi) == eval_polynomial(Polynomial({yx, xy}), phi));
}

TEST_CASE("witness substitution layout") {
  Interner in;
  // u of length 3 inside a host placing x in the first gap, at positions 2
  // and 3 of u, and in the last gap: diagonal 1s at (1,1) and (4,4),
  // superdiagonal 1s at (2,3) and (3,4).
  const VarId x = in.intern("x");
  const VarId u1 = in.intern("u1");
  const VarId u3 = in.intern("u3");
  const Word host = parse_word("x u1 x x x", in);
  // spelled subword u = u1 x x at positions 1, 2, 3: x sits in the first and
  // last gaps and at positions 2 and 3 of u
  const Word u = parse_word("u1 x x", in);
  const Occurrence occ{{1, 2, 3}};
  const Substitution phi = build_phi_uv(u, host, occ, 4);
  CHECK(phi.image(x) == BoolMatrix::parse("1 0 0 0; 0 0 1 0; 0 0 0 1; 0 0 0 1"));
  CHECK(phi.image(u1).get(1, 2));
  CHECK(phi.image(u3).is_zero());

  SUBCASE("empty subword maps every host letter to e11") {
    const Substitution phi0 = build_phi_uv(Word(), host, Occurrence{}, 2);
    CHECK(phi0.image(x) == BoolMatrix::unit(2, 1, 1));
    CHECK(phi0.image(u1) == BoolMatrix::unit(2, 1, 1));
  }
  SUBCASE("length bound is enforced") {
    CHECK_THROWS_AS(build_phi_uv(u, host, occ, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_phi_uv(parse_word("x", in), host, occ, 4), std::invalid_argument);
  }
}

TEST_CASE("matrix criterion equals the direct dominated-occurrence search") {
  Interner in;
  const VarId x = in.intern("x");
  const VarId y = in.intern("y");
  const std::vector<VarId> letters{x, y};

  SUBCASE("the worked middle-gap example") {
    const Word host = parse_word("x y x x y x", in);
    const Word u = parse_word("x x", in);
    const Occurrence occ{{2, 3}};  // the x^2 with empty middle gap
    CHECK(subword_criterion(u, host, occ, 3, host));
    CHECK_FALSE(subword_criterion(u, host, occ, 3, parse_word("x y x y x", in)));
  }

  SUBCASE("small grid") {
    const auto subwords = words_up_to(2, letters, true);
    const auto hosts = words_up_to(4, letters, false);
    const auto probes = words_up_to(4, letters, true);
    for (const Word& u : subwords) {
      const int n = static_cast<int>(u.length()) + 1;
      for (const Word& host : hosts) {
        for_each_occurrence(host, u.length(), [&](const Occurrence& occ, const GapProfile& g) {
          if (spelled(host, occ) != u) return;
          for (const Word& probe : probes) {
            CHECK(subword_criterion(u, host, occ, n, probe) ==
                  dominated_occurrence_exists(u, probe, g));
          }
        });
      }
    }
  }
}

TEST_CASE("exhaustive substitution check") {
  Interner in;
  SUBCASE("x^2 y x = x y x holds over all 64 substitutions in T_2") {
    const Claim c = parse_claim("x x y x = x y x", in);
    const OracleVerdict v = brute_force_check(c, 2, SpaceKind::triangular);
    CHECK(v.holds);
    CHECK_FALSE(v.counterexample.has_value());
  }
  SUBCASE("x y x^2 y x = x y x y x fails in T_3, as the worked substitution shows") {
    const Claim c = parse_claim("x y x x y x = x y x y x", in);
    const OracleVerdict v = brute_force_check(c, 3, SpaceKind::triangular);
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.counterexample.has_value());
    // the reported substitution really violates the identity
    const Substitution& phi = *v.counterexample;
    CHECK(eval_word(c.lhs_word(), phi) != eval_word(c.rhs_word(), phi));
    // and the worked substitution is a violator too
    Substitution worked(3);
    worked.set(*in.find("x"), BoolMatrix::parse("1 1 0; 0 0 1; 0 0 1"));
    worked.set(*in.find("y"), BoolMatrix::parse("1 0 0; 0 0 0; 0 0 1"));
    CHECK(eval_word(c.lhs_word(), worked) != eval_word(c.rhs_word(), worked));
  }
  SUBCASE("x y = x^2 y + x y^2 fails in the unitriangular 3x3 semiring") {
    const Claim c = parse_claim("x y = x x y + x y y", in);
    CHECK_FALSE(brute_force_check(c, 3, SpaceKind::unitriangular).holds);
    CHECK(brute_force_check(c, 2, SpaceKind::triangular).holds);
  }
  SUBCASE("inequalities use the natural order") {
    CHECK(brute_force_check(parse_claim("x x <= x", in), 2, SpaceKind::triangular).holds);
    CHECK_FALSE(brute_force_check(parse_claim("x <= x x", in), 2, SpaceKind::triangular).holds);
  }
  SUBCASE("cap") {
    const Claim c = parse_claim("x y z = z y x", in);
    CHECK_THROWS_AS(brute_force_check(c, 4, SpaceKind::triangular, 1000), std::length_error);
  }
  SUBCASE("deterministic first counterexample") {
    const Claim c = parse_claim("x y = y x", in);
    const auto v1 = brute_force_check(c, 2, SpaceKind::triangular);
    const auto v2 = brute_force_check(c, 2, SpaceKind::triangular);
    REQUIRE_FALSE(v1.holds);
    CHECK(v1.counterexample->entries() == v2.counterexample->entries());
  }
}

TEST_CASE("random falsification") {
  Interner in;
  const Claim failing = parse_claim("x y = y x", in);
  const Claim holding = parse_claim("x x y x = x y x", in);

  const auto found = random_falsify(failing, 2, SpaceKind::triangular, 500, 7);
  REQUIRE(found.has_value());
  CHECK(eval_word(failing.lhs_word(), *found) != eval_word(failing.rhs_word(), *found));

  CHECK_FALSE(random_falsify(holding, 2, SpaceKind::triangular, 500, 7).has_value());

  // seed stability
  const auto a = random_falsify(failing, 2, SpaceKind::triangular, 50, 1234);
  const auto b = random_falsify(failing, 2, SpaceKind::triangular, 50, 1234);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->entries() == b->entries());
}
