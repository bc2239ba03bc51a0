// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "twistlab/circle.hpp"
#include "twistlab/cocycle.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/group.hpp"
#include "twistlab/kleppner.hpp"
#include "twistlab/prng.hpp"
#include "twistlab/subgroup.hpp"

using namespace twistlab;

namespace {

CircleValue cv(const std::string& text) { return CircleValue::parse(text); }

GroupElement gen(const Group& g, const std::string& name) {
  for (const auto& [nm, el] : named_generators(g))
    if (nm == name) return el;
  FAIL("no generator named ", name, " in ", g.name());
  return g.identity();
}

// e1^a e2^b in a rank-2 free abelian group
GroupElement za(const Group& g, std::int64_t a, std::int64_t b) {
  auto gs = named_generators(g);
  return multiply(g, element_power(g, gs[0].second, a), element_power(g, gs[1].second, b));
}

// sigma((x1,x2),(y1,y2)) = (-1)^(x2 y1) on Z_2 x Z_2; the Pauli phase table
Cocycle pauli(const Group& g) {
  std::vector<std::vector<CircleValue>> values(4, std::vector<CircleValue>(4, CircleValue::one()));
  const auto& coords = abelian_coordinates(g)->coords;
  auto coord = [&](std::uint64_t idx) { return coords[idx]; };
  for (std::uint64_t i = 0; i < 4; ++i)
    for (std::uint64_t j = 0; j < 4; ++j)
      if (coord(i)[1] % 2 != 0 && coord(j)[0] % 2 != 0) values[i][j] = cv("1/2");
  return table_cocycle(g, std::move(values));
}

// antisymmetric lattice form sigma(m,n) = w^(m2 n1) on Z^2
Cocycle lattice_form(const Group& g, const std::string& w) {
  return bicharacter_cocycle(g, {{cv("0"), cv("0")}, {cv(w), cv("0")}});
}

}  // namespace

// ==== sigma-regularity ======================================================

TEST_CASE("the identity is regular for every cocycle") {
  Group z6 = make_cyclic(6);
  Group v4 = make_elementary_abelian(2, 2);
  Group zz = make_free_abelian(2);
  Group bs = make_baumslag_solitar(2);
  std::vector<Cocycle> cs = {
      trivial_cocycle(z6),
      pauli(v4),
      lattice_form(zz, "theta"),
      pullback_cocycle(bs, {{cv("0"), cv("theta")}, {cv("0"), cv("0")}}),
  };
  for (const Cocycle& c : cs) {
    RegularityVerdict v = is_sigma_regular(c, c.group().identity());
    CHECK_EQ(v.status, RegularityVerdict::Status::regular);
    CHECK_MESSAGE(v.method.find("identity") != std::string::npos, v.method);
    CHECK_EQ(v.cls.kind, ClassSize::Kind::finite);
    CHECK_EQ(v.cls.size, 1);
  }
}

TEST_CASE("regularity on the integer lattice") {
  Group zz = make_free_abelian(2);

  SUBCASE("formal antisymmetric form") {
    Cocycle c = lattice_form(zz, "theta");
    RegularityVerdict v = is_sigma_regular(c, za(zz, 1, 0));
    CHECK_EQ(v.status, RegularityVerdict::Status::irregular);
    REQUIRE(v.witness.has_value());
    CHECK_EQ(*v.witness, za(zz, 0, 1));
    REQUIRE(v.defect.has_value());
    CHECK_EQ(*v.defect, cv("-1*theta"));
    CHECK_MESSAGE(v.method.find("centralizer generators") != std::string::npos, v.method);
    CHECK_EQ(v.cls.kind, ClassSize::Kind::finite);
    CHECK_EQ(v.cls.size, 1);  // abelian group, singleton class
  }

  SUBCASE("half-integer form") {
    Cocycle c = lattice_form(zz, "1/2");
    CHECK_EQ(is_sigma_regular(c, za(zz, 2, 0)).status, RegularityVerdict::Status::regular);
    RegularityVerdict v = is_sigma_regular(c, za(zz, 1, 0));
    CHECK_EQ(v.status, RegularityVerdict::Status::irregular);
    REQUIRE(v.witness.has_value());
    CHECK_EQ(*v.witness, za(zz, 0, 1));
    CHECK_EQ(*v.defect, cv("1/2"));
  }
}

TEST_CASE("regularity on the Pauli square") {
  Group v4 = make_elementary_abelian(2, 2);
  Cocycle c = pauli(v4);
  RegularityVerdict v = is_sigma_regular(c, element_by_index(v4, 1));
  CHECK_EQ(v.status, RegularityVerdict::Status::irregular);
  REQUIRE(v.witness.has_value());
  CHECK_EQ(*v.witness, element_by_index(v4, 2));
  CHECK_EQ(*v.defect, cv("1/2"));
  CHECK_EQ(v.method, "exhaustive centralizer scan");
  CHECK_EQ(v.checked, 3);  // e and the element itself pair trivially first
}

TEST_CASE("regularity outside closed forms stays honest") {
  Group lamp = make_lamplighter();
  Cocycle c = trivial_cocycle(lamp);

  // pure shifts carry a generated centralizer, lamp configurations do not
  RegularityVerdict vt = is_sigma_regular(c, gen(lamp, "t"));
  CHECK_EQ(vt.status, RegularityVerdict::Status::regular);
  CHECK(vt.cls.is_infinite());

  RegularityVerdict vx = is_sigma_regular(c, gen(lamp, "x0"), 4);
  CHECK_EQ(vx.status, RegularityVerdict::Status::unknown);
  CHECK_EQ(vx.checked, 200);  // effort * 50 commuting samples, none decisive
  CHECK_MESSAGE(vx.method.find("without a certificate") != std::string::npos, vx.method);
  CHECK(vx.cls.is_infinite());
}

// ==== sigma-regular classes =================================================

TEST_CASE("regular classes follow the defect kernel") {
  SUBCASE("trivial cocycle keeps every class") {
    Group d4 = make_dihedral(4);
    CHECK_EQ(sigma_regular_classes(trivial_cocycle(d4)).size(), conjugacy_classes(d4).size());
    Group q8 = make_quaternion8();
    CHECK_EQ(sigma_regular_classes(trivial_cocycle(q8)).size(), conjugacy_classes(q8).size());
  }

  SUBCASE("Pauli cocycle keeps only the identity") {
    Group v4 = make_elementary_abelian(2, 2);
    auto classes = sigma_regular_classes(pauli(v4));
    REQUIRE_EQ(classes.size(), 1);
    CHECK_EQ(classes[0].front(), v4.identity());
  }

  SUBCASE("quarter-turn form on the 4x4 torus keeps only the identity") {
    Group t = make_direct_product({make_cyclic(4), make_cyclic(4)});
    Cocycle c = bicharacter_cocycle(t, {{cv("0"), cv("1/4")}, {cv("0"), cv("0")}});
    auto classes = sigma_regular_classes(c);
    REQUIRE_EQ(classes.size(), 1);
    CHECK_EQ(classes[0].front(), t.identity());
  }

  SUBCASE("finite groups only") {
    CHECK_THROWS_AS((void)sigma_regular_classes(trivial_cocycle(make_free_abelian(1))), Error);
  }
}

// ==== Kleppner's condition ==================================================

TEST_CASE("kleppner on lattice forms") {
  Group zz = make_free_abelian(2);

  SUBCASE("formal irrational form holds") {
    KleppnerVerdict v = kleppner_condition(lattice_form(zz, "theta"));
    CHECK_EQ(v.status, Truth::yes);
    CHECK_FALSE(v.witness.has_value());
    CHECK_FALSE(v.evidence.empty());
  }

  SUBCASE("half-integer form fails at (2,0)") {
    KleppnerVerdict v = kleppner_condition(lattice_form(zz, "1/2"));
    REQUIRE_EQ(v.status, Truth::no);
    REQUIRE(v.witness.has_value());
    CHECK_EQ(v.witness->element, za(zz, 2, 0));
    CHECK_EQ(v.witness->status, RegularityVerdict::Status::regular);
    CHECK_EQ(v.witness->cls.kind, ClassSize::Kind::finite);
  }
}

TEST_CASE("kleppner on finite groups") {
  SUBCASE("nontrivial finite group with the trivial cocycle fails") {
    Group z6 = make_cyclic(6);
    KleppnerVerdict v = kleppner_condition(trivial_cocycle(z6));
    REQUIRE_EQ(v.status, Truth::no);
    CHECK_EQ(v.witness->element, element_by_index(z6, 1));
    CHECK_EQ(v.witness->cls.size, 1);
  }

  SUBCASE("Pauli cocycle rescues the four-group") {
    Group v4 = make_elementary_abelian(2, 2);
    KleppnerVerdict v = kleppner_condition(pauli(v4));
    CHECK_EQ(v.status, Truth::yes);
    bool counted = false;
    for (const std::string& line : v.evidence)
      counted = counted || line.find("only the identity class") != std::string::npos;
    CHECK(counted);
  }

  SUBCASE("quarter-turn torus holds, its trivial cousin fails") {
    Group t = make_direct_product({make_cyclic(4), make_cyclic(4)});
    Cocycle c = bicharacter_cocycle(t, {{cv("0"), cv("1/4")}, {cv("0"), cv("0")}});
    CHECK_EQ(kleppner_condition(c).status, Truth::yes);
    KleppnerVerdict v = kleppner_condition(trivial_cocycle(t));
    REQUIRE_EQ(v.status, Truth::no);
    CHECK_EQ(v.witness->element, element_by_index(t, 1));
  }
}

TEST_CASE("kleppner on Baumslag-Solitar groups") {
  SUBCASE("formal irrational parameter holds") {
    Group bs = make_baumslag_solitar(2);
    Cocycle c = pullback_cocycle(bs, {{cv("0"), cv("theta")}, {cv("0"), cv("0")}});
    KleppnerVerdict v = kleppner_condition(c);
    CHECK_EQ(v.status, Truth::yes);
    bool solved = false;
    for (const std::string& line : v.evidence)
      solved = solved || line.find("only at the identity") != std::string::npos;
    CHECK(solved);
  }

  SUBCASE("rational parameter 1/3 fails at b^6") {
    Group bs = make_baumslag_solitar(2);
    Cocycle c = pullback_cocycle(bs, {{cv("0"), cv("1/3")}, {cv("0"), cv("0")}});
    KleppnerVerdict v = kleppner_condition(c);
    REQUIRE_EQ(v.status, Truth::no);
    // the centre is <b^2>; the least power killing the 1/3 pairing is the third
    CHECK_EQ(v.witness->element, element_power(bs, gen(bs, "b"), 6));
    CHECK_EQ(v.witness->cls.size, 1);
  }

  SUBCASE("rational parameter 1/2 on BS(3,3) fails at b^6") {
    Group bs = make_baumslag_solitar(3);
    Cocycle c = pullback_cocycle(bs, {{cv("0"), cv("1/2")}, {cv("0"), cv("0")}});
    KleppnerVerdict v = kleppner_condition(c);
    REQUIRE_EQ(v.status, Truth::no);
    CHECK_EQ(v.witness->element, element_power(bs, gen(bs, "b"), 6));
  }
}

TEST_CASE("kleppner on the discrete Heisenberg group") {
  Group h = make_heisenberg3();

  SUBCASE("trivial cocycle fails at the centre") {
    KleppnerVerdict v = kleppner_condition(trivial_cocycle(h));
    REQUIRE_EQ(v.status, Truth::no);
    CHECK_EQ(v.witness->element, gen(h, "z"));
    CHECK_MESSAGE(v.witness->method.find("trivial cocycle") != std::string::npos,
                  v.witness->method);
  }

  SUBCASE("pullback cocycles cannot see the centre") {
    // z dies in the abelianization, so the defect pairing never constrains it
    Cocycle c = pullback_cocycle(h, {{cv("0"), cv("theta")}, {cv("0"), cv("0")}});
    KleppnerVerdict v = kleppner_condition(c);
    REQUIRE_EQ(v.status, Truth::no);
    CHECK_EQ(v.witness->element, gen(h, "z"));
    CHECK_EQ(v.witness->cls.size, 1);
  }
}

TEST_CASE("kleppner for the trivial cocycle follows the ICC classification") {
  KleppnerVerdict lamp = kleppner_condition(trivial_cocycle(make_lamplighter()));
  CHECK_EQ(lamp.status, Truth::yes);

  KleppnerVerdict fp = kleppner_condition(trivial_cocycle(make_free_product_z_zn(3)));
  CHECK_EQ(fp.status, Truth::yes);

  Group d = make_infinite_dihedral();
  KleppnerVerdict v = kleppner_condition(trivial_cocycle(d));
  REQUIRE_EQ(v.status, Truth::no);
  CHECK_EQ(v.witness->element, gen(d, "t"));
  CHECK_EQ(v.witness->cls.size, 2);
}

TEST_CASE("kleppner always fails on the infinite dihedral group") {
  // the translation subgroup is abelian and reflections never commute with a
  // nonzero translation, so translations are regular whatever the cocycle is
  Group d = make_infinite_dihedral();
  Cocycle c = pullback_cocycle(d, {});  // the free abelianization has rank 0
  KleppnerVerdict v = kleppner_condition(c);
  REQUIRE_EQ(v.status, Truth::no);
  CHECK_EQ(v.witness->element, gen(d, "t"));
  bool closed_form = false;
  for (const std::string& line : v.evidence)
    closed_form = closed_form || line.find("translations") != std::string::npos;
  CHECK(closed_form);
}

TEST_CASE("kleppner holds outright when the FC-center is trivial") {
  Group fp = make_free_product_z_zn(3);
  Cocycle c = pullback_cocycle(fp, {{cv("1/7")}});
  KleppnerVerdict v = kleppner_condition(c);
  CHECK_EQ(v.status, Truth::yes);
  bool noted = false;
  for (const std::string& line : v.evidence)
    noted = noted || line.find("FC-center is trivial") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("kleppner across direct products") {
  SUBCASE("central FC-center solved jointly") {
    Group h = make_heisenberg3();
    Group bs = make_baumslag_solitar(2);
    Group p = make_direct_product({h, bs});
    Cocycle c = product_cocycle(
        p, {trivial_cocycle(h),
            pullback_cocycle(bs, {{cv("0"), cv("theta")}, {cv("0"), cv("0")}})});
    KleppnerVerdict v = kleppner_condition(c);
    REQUIRE_EQ(v.status, Truth::no);
    CHECK_EQ(v.witness->element, gen(p, "f1.z"));
    CHECK_EQ(v.witness->cls.size, 1);
  }

  SUBCASE("both factors hold, the product holds") {
    Group zz = make_free_abelian(2);
    Group bs = make_baumslag_solitar(2);
    Group p = make_direct_product({zz, bs});
    Cocycle c = product_cocycle(
        p, {lattice_form(zz, "theta"),
            pullback_cocycle(bs, {{cv("0"), cv("theta")}, {cv("0"), cv("0")}})});
    CHECK_EQ(kleppner_condition(c).status, Truth::yes);
  }

  SUBCASE("factor verdicts lift when the FC-center is not central") {
    Group d = make_infinite_dihedral();
    Group h = make_heisenberg3();
    Group p = make_direct_product({d, h});
    Cocycle c = product_cocycle(p, {trivial_cocycle(d), trivial_cocycle(h)});
    KleppnerVerdict v = kleppner_condition(c);
    REQUIRE_EQ(v.status, Truth::no);
    CHECK_EQ(v.witness->element, gen(p, "f1.t"));
    CHECK_EQ(v.witness->cls.size, 2);
    CHECK_MESSAGE(v.witness->method.find("lifted from factor 1") != std::string::npos,
                  v.witness->method);
  }

  SUBCASE("opaque cocycles fall back to sampling the FC-center") {
    Group d = make_infinite_dihedral();
    Group h = make_heisenberg3();
    Group p = make_direct_product({d, h});
    Cocycle sigma = product_cocycle(p, {trivial_cocycle(d), trivial_cocycle(h)});
    Cocycle c = restrict_cocycle(sigma, Subgroup::whole(p).as_group(), "itself");
    CHECK_EQ(c.kind(), "derived");
    KleppnerVerdict v = kleppner_condition(c);
    REQUIRE_EQ(v.status, Truth::no);
    bool sampled = false;
    for (const std::string& line : v.evidence)
      sampled = sampled || line.find("sampled violation") != std::string::npos;
    CHECK(sampled);
  }
}

// ==== invariants ============================================================

TEST_CASE("regularity is a class function") {
  std::vector<Cocycle> cs;
  cs.push_back(pauli(make_elementary_abelian(2, 2)));
  cs.push_back(trivial_cocycle(make_dihedral(4)));
  cs.push_back(trivial_cocycle(make_quaternion8()));
  {
    Group t = make_direct_product({make_cyclic(4), make_cyclic(4)});
    cs.push_back(bicharacter_cocycle(t, {{cv("0"), cv("1/4")}, {cv("0"), cv("0")}}));
  }
  Prng rng(0x7e57);
  for (const Cocycle& c : cs) {
    const Group& g = c.group();
    for (int i = 0; i < 1000; ++i) {
      GroupElement a = sample_element(g, rng);
      GroupElement h = sample_element(g, rng);
      RegularityVerdict va = is_sigma_regular(c, a);
      RegularityVerdict vb = is_sigma_regular(c, conjugate(g, a, h));
      CHECK_EQ(va.status, vb.status);
    }
  }
}

TEST_CASE("the trivial cocycle leaves every sampled element regular") {
  // restricted to families whose centralizers have closed forms
  std::vector<Group> gs = {make_free_abelian(2), make_infinite_dihedral(), make_heisenberg3()};
  Prng rng(0xabcd);
  for (const Group& g : gs) {
    Cocycle c = trivial_cocycle(g);
    for (int i = 0; i < 60; ++i) {
      RegularityVerdict v = is_sigma_regular(c, sample_element(g, rng));
      CHECK_EQ(v.status, RegularityVerdict::Status::regular);
    }
  }
}

TEST_CASE("failing verdicts reproduce under a direct re-check") {
  std::vector<Cocycle> failing;
  {
    Group zz = make_free_abelian(2);
    failing.push_back(lattice_form(zz, "1/2"));
  }
  {
    Group bs = make_baumslag_solitar(2);
    failing.push_back(pullback_cocycle(bs, {{cv("0"), cv("1/3")}, {cv("0"), cv("0")}}));
  }
  {
    Group h = make_heisenberg3();
    failing.push_back(pullback_cocycle(h, {{cv("0"), cv("theta")}, {cv("0"), cv("0")}}));
  }
  {
    Group d = make_infinite_dihedral();
    failing.push_back(pullback_cocycle(d, {}));
  }
  {
    Group v4 = make_elementary_abelian(2, 2);
    failing.push_back(trivial_cocycle(v4));
  }
  for (const Cocycle& c : failing) {
    KleppnerVerdict v = kleppner_condition(c);
    REQUIRE_EQ(v.status, Truth::no);
    REQUIRE(v.witness.has_value());
    CHECK_FALSE(v.witness->element == c.group().identity());
    RegularityVerdict again = is_sigma_regular(c, v.witness->element);
    CHECK_EQ(again.status, RegularityVerdict::Status::regular);
    CHECK_EQ(again.cls.kind, ClassSize::Kind::finite);
  }
}
