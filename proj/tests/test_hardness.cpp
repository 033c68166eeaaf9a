#include "trimat/hardness.hpp"

#include <sstream>

#include "doctest.h"

using namespace trimat;

namespace {

HittingSetInstance instance_from(const std::string& text) {
  std::istringstream in(text);
  return HittingSetInstance::parse(in);
}

}  // namespace

TEST_CASE("table arithmetic matches the matrices") {
  // closure is verified on first use; spot-check the named relations
  CHECK(c4_mul(c4_mul(C4Tag::a, C4Tag::b), C4Tag::a) == C4Tag::a);
  CHECK(c4_mul(c4_mul(C4Tag::b, C4Tag::a), C4Tag::b) == C4Tag::b);
  CHECK(c4_mul(c4_mul(C4Tag::a, C4Tag::a), C4Tag::a) == C4Tag::a2);
  CHECK(c4_mul(C4Tag::a, C4Tag::b2) == C4Tag::a2b);
  CHECK(c4_mul(C4Tag::a2, C4Tag::b) == C4Tag::a2b);
  for (std::size_t i = 0; i < c4_size; ++i) {
    CHECK(c4_mul(C4Tag::e, static_cast<C4Tag>(i)) == static_cast<C4Tag>(i));
    CHECK(c4_mul(static_cast<C4Tag>(i), C4Tag::e) == static_cast<C4Tag>(i));
  }
  // table vs matrices, all 81 products
  const auto& mats = c4_matrices();
  for (std::size_t i = 0; i < c4_size; ++i) {
    for (std::size_t j = 0; j < c4_size; ++j) {
      const C4Tag t = c4_mul(static_cast<C4Tag>(i), static_cast<C4Tag>(j));
      CHECK(mats[static_cast<std::size_t>(t)] == mats[i] * mats[j]);
    }
  }
}

TEST_CASE("structural properties") {
  const PropertyReport report = verify_c4_properties();
  for (const auto& [name, passed] : report.checks) {
    INFO(name);
    CHECK(passed);
  }
  CHECK(report.all_passed());
  CHECK(report.checks.size() == 6);

  // the ideal is exactly the elements marked at (1,4); idempotents are the
  // seven elements other than a and b
  const auto& mats = c4_matrices();
  int idempotents = 0;
  for (std::size_t i = 0; i < c4_size; ++i) {
    if (mats[i].is_idempotent()) ++idempotents;
  }
  CHECK(idempotents == 7);
  CHECK(mats[static_cast<std::size_t>(C4Tag::a2)].get(1, 4));
  CHECK_FALSE(mats[static_cast<std::size_t>(C4Tag::ab)].get(1, 4));
}

TEST_CASE("instance parsing") {
  const HittingSetInstance inst = instance_from("2 2\n1 2\n2\n");
  CHECK(inst.universe_size == 2);
  REQUIRE(inst.sets.size() == 2);
  CHECK(inst.sets[0] == std::vector<int>{1, 2});
  CHECK(inst.sets[1] == std::vector<int>{2});

  SUBCASE("duplicates inside a set are merged") {
    CHECK(instance_from("2 1\n1 1 2\n").sets[0] == std::vector<int>{1, 2});
  }
  SUBCASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(instance_from("2 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(instance_from("0 1\n1\n"), std::invalid_argument);
    CHECK_THROWS_AS(instance_from("2 2\n1\n"), std::invalid_argument);   // missing a line
    CHECK_THROWS_AS(instance_from("2 1\n3\n"), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(instance_from("nonsense"), std::invalid_argument);
  }
}

TEST_CASE("reduction output") {
  Interner in;
  const HittingSetInstance inst = instance_from("1 1\n1\n");
  const ReducedIdentity red = reduce_hitting_set(inst, in);
  // w = z (x1 z)^2 (x1 y1 z y1 x1 z)^2 and the identity is w = w^2
  const Word expected = parse_word("z x1 z x1 z x1 y1 z y1 x1 z x1 y1 z y1 x1 z", in);
  CHECK(red.claim.kind() == ClaimKind::semigroup_identity);
  CHECK(red.claim.lhs_word() == expected);
  CHECK(red.claim.rhs_word() == expected.pow(2));
  CHECK(red.x_vars.size() == 1);
  CHECK(red.y_vars.size() == 1);

  SUBCASE("size bound") {
    for (const char* text : {"1 1\n1\n", "2 2\n1 2\n2\n", "2 1\n1\n"}) {
      Interner in2;
      const HittingSetInstance i2 = instance_from(text);
      const ReducedIdentity r2 = reduce_hitting_set(i2, in2);
      const std::size_t r = static_cast<std::size_t>(i2.universe_size);
      const std::size_t q = i2.sets.size();
      CHECK(r2.claim.size() <= 3 * (1 + 2 * (r + 1) * q + 12 * r));
    }
  }
}

TEST_CASE("hitting set search") {
  SUBCASE("a set hitting both") {
    const auto h = hitting_set_exists(instance_from("3 2\n1 2\n2 3\n"));
    REQUIRE(h.has_value());
    // {2} is the canonical answer; any reported answer must be valid
    for (const auto& set : instance_from("3 2\n1 2\n2 3\n").sets) {
      int hits = 0;
      for (int v : set) {
        hits += std::count(h->begin(), h->end(), v);
      }
      CHECK(hits == 1);
    }
  }
  SUBCASE("singleton instances") {
    CHECK(hitting_set_exists(instance_from("1 2\n1\n1\n")) == std::vector<int>{1});
    CHECK(hitting_set_exists(instance_from("2 2\n1 2\n1 2\n")).has_value());
  }
  SUBCASE("unhittable family") {
    // any H meets {1,2} once and {1},{2} once each: impossible
    CHECK_FALSE(hitting_set_exists(instance_from("2 3\n1 2\n1\n2\n")).has_value());
  }
}

TEST_CASE("forward substitution falsifies exactly when a hitting set exists") {
  Interner in;
  const HittingSetInstance inst = instance_from("2 2\n1 2\n2\n");
  const ReducedIdentity red = reduce_hitting_set(inst, in);
  const auto h = hitting_set_exists(inst);
  REQUIRE(h.has_value());  // {2}

  const auto& mats = c4_matrices();
  const auto mat = [&](C4Tag t) { return mats[static_cast<std::size_t>(t)]; };
  Substitution phi(4);
  for (int j = 1; j <= inst.universe_size; ++j) {
    const bool in_h = std::count(h->begin(), h->end(), j) > 0;
    phi.set(red.x_vars[static_cast<std::size_t>(j - 1)], mat(in_h ? C4Tag::b : C4Tag::e));
    phi.set(red.y_vars[static_cast<std::size_t>(j - 1)], mat(in_h ? C4Tag::e : C4Tag::b));
  }
  phi.set(red.z_var, mat(C4Tag::a));

  // the whole word evaluates to a, which is not idempotent
  CHECK(eval_word(red.claim.lhs_word(), phi) == mat(C4Tag::a));
  CHECK(eval_word(red.claim.lhs_word(), phi) != eval_word(red.claim.rhs_word(), phi));

  // and the extraction reads the hitting set back
  CHECK(extract_hitting_set(inst, red, phi) == *h);
}

TEST_CASE("extraction handles the mirrored falsifier with z mapped to b") {
  Interner in;
  const HittingSetInstance inst = instance_from("2 2\n1 2\n2\n");
  const ReducedIdentity red = reduce_hitting_set(inst, in);
  const auto& mats = c4_matrices();
  const auto mat = [&](C4Tag t) { return mats[static_cast<std::size_t>(t)]; };
  // roles of a and b swapped relative to the forward construction
  Substitution phi(4);
  phi.set(red.x_vars[0], mat(C4Tag::e));
  phi.set(red.x_vars[1], mat(C4Tag::a));
  phi.set(red.y_vars[0], mat(C4Tag::a));
  phi.set(red.y_vars[1], mat(C4Tag::e));
  phi.set(red.z_var, mat(C4Tag::b));
  REQUIRE_FALSE(eval_word(red.claim.lhs_word(), phi).is_idempotent());
  CHECK(extract_hitting_set(inst, red, phi) == std::vector<int>{2});
}

TEST_CASE("extraction rejects non-falsifiers") {
  Interner in;
  const HittingSetInstance inst = instance_from("1 1\n1\n");
  const ReducedIdentity red = reduce_hitting_set(inst, in);
  Substitution identity_sub(4);
  const auto& mats = c4_matrices();
  identity_sub.set(red.x_vars[0], mats[0]);
  identity_sub.set(red.y_vars[0], mats[0]);
  identity_sub.set(red.z_var, mats[0]);
  CHECK_THROWS_AS(extract_hitting_set(inst, red, identity_sub), std::invalid_argument);
}

TEST_CASE("oracle counterexamples over the nine-element carrier round-trip") {
  Interner in;
  const HittingSetInstance inst = instance_from("1 1\n1\n");
  const ReducedIdentity red = reduce_hitting_set(inst, in);
  const auto& mats = c4_matrices();
  const OracleVerdict v =
      brute_force_check(red.claim, std::span<const BoolMatrix>(mats.data(), mats.size()));
  REQUIRE_FALSE(v.holds);  // {1} is a hitting set, so the identity fails
  const std::vector<int> h = extract_hitting_set(inst, red, *v.counterexample);
  CHECK(h == std::vector<int>{1});
}
