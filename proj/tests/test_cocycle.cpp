// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "twistlab/circle.hpp"
#include "twistlab/cocycle.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/group.hpp"
#include "twistlab/prng.hpp"
#include "twistlab/subgroup.hpp"

using namespace twistlab;

namespace {

CircleValue cv(const std::string& text) { return CircleValue::parse(text); }

GroupElement gen_named(const Group& g, const std::string& name) {
  for (const auto& [nm, el] : named_generators(g))
    if (nm == name) return el;
  FAIL("no generator named ", name, " in ", g.name());
  return g.identity();
}

GroupElement za(std::vector<std::int64_t> coords) {
  GroupElement e;
  e.family = FamilyTag::free_abelian;
  e.nf = std::move(coords);
  return e;
}

// sigma((x1,x2),(y1,y2)) = (-1)^(x2*y1) on the 2x2 elementary abelian group;
// the smallest nontrivial cocycle, with extension of order 8
Cocycle pauli() {
  Group g = make_elementary_abelian(2, 2);
  const std::uint64_t n = 4;
  std::vector<std::vector<CircleValue>> values(n, std::vector<CircleValue>(n));
  const auto& coords = abelian_coordinates(g)->coords;
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j)
      values[i][j] = (coords[i][1] * coords[j][0]) % 2 == 1 ? cv("1/2") : CircleValue::one();
  return table_cocycle(std::move(g), std::move(values));
}

}  // namespace

// ==== table cocycles ========================================================

TEST_CASE("pauli table cocycle on the Klein four-group") {
  Cocycle c = pauli();
  const Group& g = c.group();
  CHECK_EQ(c.kind(), "table");
  CHECK_FALSE(c.uses_theta());

  GroupElement x = element_by_index(g, 1);  // (1,0)
  GroupElement z = element_by_index(g, 2);  // (0,1)
  CHECK_EQ(print_element(g, x), "(1,0)");
  CHECK_EQ(print_element(g, z), "(0,1)");

  SUBCASE("values") {
    CHECK_EQ(c.value(x, z), CircleValue::one());
    CHECK_EQ(c.value(z, x), cv("1/2"));
  }

  SUBCASE("conjugation phase and regularity defect") {
    // lambda(x) lambda(z) lambda(x)^* = -lambda(z)
    CHECK_EQ(sigma_tilde(c, x, z), cv("1/2"));
    CHECK_EQ(regularity_defect(c, x, z), cv("1/2"));
    CHECK_EQ(regularity_defect(c, z, x), cv("1/2"));
    CHECK_EQ(regularity_defect(c, x, x), CircleValue::one());
  }

  SUBCASE("validation is exhaustive on a small group") {
    Prng rng(7);
    CocycleValidation v = validate_cocycle(c, rng);
    CHECK_EQ(v.mode, "exhaustive");
    CHECK_EQ(v.checked, 64);
  }

  SUBCASE("d_sigma and the central extension") {
    CHECK_EQ(d_sigma(c), 2);
    Group ext = sigma_extension(c);
    CHECK_EQ(ext.order(), 8);
    CHECK_EQ(element_names(ext)[0], "((0,0), 1)");
    CHECK_EQ(element_names(ext)[1], "((0,0), z)");

    // lifts of x and z anticommute, and their product squares to the
    // central -1, so the extension is the dihedral group of order 8
    GroupElement xe = element_by_index(ext, 2);
    GroupElement ze = element_by_index(ext, 4);
    CHECK_FALSE(commutes(ext, xe, ze));
    CHECK_EQ(element_power(ext, xe, 2), ext.identity());
    CHECK_EQ(element_power(ext, ze, 2), ext.identity());
    GroupElement xz = multiply(ext, xe, ze);
    CHECK_EQ(element_power(ext, xz, 2), element_by_index(ext, 1));
    CHECK_EQ(element_power(ext, xz, 4), ext.identity());
  }
}

TEST_CASE("table cocycle rejects malformed input") {
  Group g = make_cyclic(3);

  SUBCASE("non-square table") {
    std::vector<std::vector<CircleValue>> values(3, std::vector<CircleValue>(2));
    CHECK_THROWS_AS(table_cocycle(g, values), Error);
  }

  SUBCASE("normalization failure in the identity row") {
    std::vector<std::vector<CircleValue>> values(3, std::vector<CircleValue>(3));
    values[0][1] = cv("1/3");
    try {
      table_cocycle(g, values);
      FAIL("expected InvalidCocycle");
    } catch (const Error& e) {
      CHECK_EQ(e.kind(), ErrorKind::invalid_cocycle);
    }
  }
}

TEST_CASE("validation finds a concrete counterexample") {
  // normalized but not a cocycle: sigma(g, g) = w alone breaks the identity
  // at the triple (g, g, g^2)
  Group g = make_cyclic(3);
  std::vector<std::vector<CircleValue>> values(3, std::vector<CircleValue>(3));
  values[1][1] = cv("1/3");
  Cocycle c = table_cocycle(g, values);
  Prng rng(11);
  try {
    validate_cocycle(c, rng);
    FAIL("expected InvalidCocycle");
  } catch (const Error& e) {
    CHECK_EQ(e.kind(), ErrorKind::invalid_cocycle);
    CHECK(std::string(e.what()).find("cocycle identity fails") != std::string::npos);
  }
}

// ==== bicharacter cocycles ==================================================

TEST_CASE("bicharacter cocycle on a cyclic group") {
  Group g = make_cyclic(4);
  Cocycle c = bicharacter_cocycle(g, {{cv("1/4")}});
  CHECK_EQ(c.kind(), "bicharacter");
  CHECK_EQ(c.value(element_by_index(g, 1), element_by_index(g, 1)), cv("1/4"));
  CHECK_EQ(c.value(element_by_index(g, 3), element_by_index(g, 3)), cv("1/4"));  // 9/4 -> 1/4
  CHECK_EQ(d_sigma(c), 4);
  Prng rng(3);
  CHECK_EQ(validate_cocycle(c, rng).mode, "exhaustive");

  SUBCASE("the extension is abelian of order 16") {
    // sigma is a symmetric bicharacter, so the extension stays abelian; the
    // lift of g has order 8 with fourth power the central z^2
    Group ext = sigma_extension(c);
    CHECK_EQ(ext.order(), 16);
    GroupElement lift = element_by_index(ext, 4);  // (g, 1)
    GroupElement z = element_by_index(ext, 1);     // (e, z)
    CHECK(commutes(ext, lift, z));
    CHECK_EQ(element_power(ext, lift, 4), element_by_index(ext, 2));
    CHECK_EQ(element_power(ext, lift, 8), ext.identity());
    CHECK_EQ(element_power(ext, z, 4), ext.identity());
    for (std::uint64_t i = 0; i < 16; ++i)
      for (std::uint64_t j = i + 1; j < 16; ++j)
        CHECK(commutes(ext, element_by_index(ext, i), element_by_index(ext, j)));
  }
}

TEST_CASE("bicharacter well-definedness on torsion coordinates") {
  Group g = make_cyclic(4);

  SUBCASE("entry of incompatible order is rejected") {
    try {
      bicharacter_cocycle(g, {{cv("1/3")}});
      FAIL("expected InvalidCocycle");
    } catch (const Error& e) {
      CHECK_EQ(e.kind(), ErrorKind::invalid_cocycle);
      CHECK(std::string(e.what()).find("not constant on residues") != std::string::npos);
    }
  }

  SUBCASE("theta entries never vanish on torsion coordinates") {
    CHECK_THROWS_AS(bicharacter_cocycle(g, {{cv("theta")}}), Error);
  }

  SUBCASE("groups without canonical coordinates are rejected") {
    try {
      bicharacter_cocycle(make_dihedral(4), {{cv("1/2")}});
      FAIL("expected InvalidCocycle");
    } catch (const Error& e) {
      CHECK_EQ(e.kind(), ErrorKind::invalid_cocycle);
      CHECK(std::string(e.what()).find("pullback") != std::string::npos);
    }
  }
}

TEST_CASE("bicharacter cocycle on a free abelian group") {
  // noncommutative 2-torus: sigma(x, y) = theta^(x1 * y2)
  Group g = make_free_abelian(2);
  Cocycle c = bicharacter_cocycle(
      g, {{CircleValue::one(), cv("theta")}, {CircleValue::one(), CircleValue::one()}});
  CHECK(c.uses_theta());
  CHECK_EQ(c.value(za({1, 0}), za({0, 1})), cv("theta"));
  CHECK_EQ(c.value(za({0, 1}), za({1, 0})), CircleValue::one());
  CHECK_EQ(regularity_defect(c, za({1, 0}), za({0, 1})), cv("theta"));
  CHECK_EQ(regularity_defect(c, za({3, 1}), za({3, 1})), CircleValue::one());
  CHECK_EQ(c.value(za({-2, 0}), za({0, 1})), cv("-2*theta"));

  SUBCASE("sampled validation on an infinite group") {
    Prng rng(5);
    CocycleValidation v = validate_cocycle(c, rng, 4);
    CHECK_EQ(v.mode, "sampled");
    CHECK_EQ(v.checked, 1000);
  }

  SUBCASE("d_sigma needs a finite group") {
    CHECK_THROWS_AS(d_sigma(c), Error);
  }

  SUBCASE("restriction to a finite-index sublattice rescales the pairing") {
    Subgroup s = Subgroup::from_lattice(g, {{2, 0}, {0, 1}});
    Cocycle r = restrict_cocycle(c, s.as_group(), "the lattice 2Z x Z");
    CHECK_EQ(r.kind(), "derived");
    CHECK(r.uses_theta());
    CHECK_EQ(regularity_defect(r, za({1, 0}), za({0, 1})), cv("2*theta"));
  }
}

// ==== pullback cocycles =====================================================

TEST_CASE("pullback cocycle factors through the free abelianization") {
  SUBCASE("on a Baumslag-Solitar group") {
    Group g = make_baumslag_solitar(2);
    CHECK_EQ(free_abelianization_rank(g), 2);
    Cocycle c = pullback_cocycle(
        g, {{CircleValue::one(), cv("theta")}, {CircleValue::one(), CircleValue::one()}});
    CHECK_EQ(c.kind(), "pullback");
    CHECK(c.uses_theta());

    GroupElement a = gen_named(g, "a");
    GroupElement b = gen_named(g, "b");
    GroupElement b2 = multiply(g, b, b);
    // a and b^2 commute, and the pullback pairing sees exponents (1,0), (0,2)
    CHECK(commutes(g, a, b2));
    CHECK_EQ(regularity_defect(c, a, b2), cv("2*theta"));

    Prng rng(17);
    CHECK_EQ(validate_cocycle(c, rng, 2).mode, "sampled");
  }

  SUBCASE("on the discrete Heisenberg group the center pairs trivially") {
    Group g = make_heisenberg3();
    CHECK_EQ(free_abelianization_rank(g), 2);
    Cocycle c = pullback_cocycle(
        g, {{CircleValue::one(), cv("theta")}, {CircleValue::one(), CircleValue::one()}});
    GroupElement z = gen_named(g, "z");
    GroupElement x = gen_named(g, "x");
    // z is a commutator, so it dies in the abelianization
    CHECK_EQ(regularity_defect(c, z, x), CircleValue::one());
    Prng rng(23);
    validate_cocycle(c, rng, 2);
  }

  SUBCASE("rank-zero pullback degenerates to the trivial cocycle") {
    Group g = make_cyclic(3);
    Cocycle c = pullback_cocycle(g, {});
    CHECK_EQ(c.value(element_by_index(g, 1), element_by_index(g, 2)), CircleValue::one());
    CHECK_EQ(d_sigma(c), 1);
  }

  SUBCASE("wrong matrix size is rejected") {
    CHECK_THROWS_AS(pullback_cocycle(make_heisenberg3(), {{CircleValue::one()}}), Error);
  }
}

// ==== product cocycles ======================================================

TEST_CASE("product cocycle on a materialized finite product") {
  Group a = make_cyclic(2);
  Group b = make_cyclic(2);
  Group p = make_direct_product({a, b});
  REQUIRE(p.is_finite());
  Cocycle c = product_cocycle(p, {trivial_cocycle(a), bicharacter_cocycle(b, {{cv("1/2")}})});
  CHECK_EQ(c.kind(), "table");
  CHECK_EQ(d_sigma(c), 2);
  // index split is first-factor-fastest: index 2 = (e, g), index 3 = (g, g)
  CHECK_EQ(c.value(element_by_index(p, 2), element_by_index(p, 2)), cv("1/2"));
  CHECK_EQ(c.value(element_by_index(p, 1), element_by_index(p, 1)), CircleValue::one());
  CHECK_EQ(c.value(element_by_index(p, 3), element_by_index(p, 3)), cv("1/2"));
  Prng rng(29);
  CHECK_EQ(validate_cocycle(c, rng).mode, "exhaustive");
}

TEST_CASE("product cocycle on a lazy product") {
  Group zn = make_free_abelian(1);
  Group h = make_heisenberg3();
  Group p = make_direct_product({zn, h});
  REQUIRE_EQ(p.family(), FamilyTag::direct_product);
  Cocycle c = product_cocycle(
      p, {bicharacter_cocycle(zn, {{cv("theta")}}), trivial_cocycle(h)});
  CHECK_EQ(c.kind(), "product");
  CHECK(c.uses_theta());

  GroupElement g1;
  g1.family = FamilyTag::direct_product;
  g1.nf = TupleNf{{za({3}), h.identity()}};
  GroupElement g2;
  g2.family = FamilyTag::direct_product;
  g2.nf = TupleNf{{za({1}), gen_named(h, "x")}};
  CHECK_EQ(c.value(g1, g2), cv("3*theta"));
  Prng rng(31);
  CHECK_EQ(validate_cocycle(c, rng, 2).mode, "sampled");
}

TEST_CASE("product cocycle skips trivial factors") {
  Group t = make_trivial();
  Group z4 = make_cyclic(4);
  Group p = make_direct_product({t, z4});
  REQUIRE(p.same_group(z4));
  Cocycle c = product_cocycle(p, {trivial_cocycle(t), bicharacter_cocycle(z4, {{cv("1/4")}})});
  CHECK_EQ(c.kind(), "bicharacter");
  CHECK_EQ(d_sigma(c), 4);
}

TEST_CASE("product cocycle rejects mismatched factors") {
  Group p = make_direct_product({make_cyclic(2), make_cyclic(3)});
  CHECK_THROWS_AS(product_cocycle(p, {trivial_cocycle(make_cyclic(2))}), Error);
  CHECK_THROWS_AS(
      product_cocycle(p, {trivial_cocycle(make_cyclic(3)), trivial_cocycle(make_cyclic(2))}),
      Error);
}

// ==== extensions under size limits ==========================================

TEST_CASE("sigma extension respects the dense-table cap") {
  Group g = make_cyclic(100);
  Cocycle c = bicharacter_cocycle(g, {{cv("1/100")}});
  try {
    sigma_extension(c);
    FAIL("expected GroupTooLarge");
  } catch (const Error& e) {
    CHECK_EQ(e.kind(), ErrorKind::group_too_large);
  }
}

TEST_CASE("trivial cocycle extension reproduces the group") {
  Group g = make_cyclic(3);
  Group ext = sigma_extension(trivial_cocycle(g));
  CHECK_EQ(ext.order(), 3);
  CHECK_EQ(element_names(ext)[1], "(g, 1)");
}
