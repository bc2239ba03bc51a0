// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#include <vector>

#include "doctest.h"
#include "twistlab/errors.hpp"
#include "twistlab/group.hpp"
#include "twistlab/subgroup.hpp"

using namespace twistlab;

namespace {

GroupElement gen(const Group& g, const std::string& name) {
  for (const auto& [nm, el] : named_generators(g))
    if (nm == name) return el;
  FAIL("no generator named ", name);
  return g.identity();
}

}  // namespace

// ============================================================
// construction and canonicalization
// ============================================================

TEST_CASE("index subgroups canonicalize and validate closure") {
  Group d4 = make_dihedral(4);
  // <r^2> = {e, r^2} = indices {0, 2}
  Subgroup h = Subgroup::from_indices(d4, {0, 2});
  CHECK_EQ(h.kind(), Subgroup::Kind::finite_list);
  CHECK(h.contains(element_by_index(d4, 2)));
  CHECK_FALSE(h.contains(element_by_index(d4, 1)));
  CHECK_EQ(h.describe(), "{e, r^2}");
  // {e, r} is not closed
  CHECK_THROWS_AS(Subgroup::from_indices(d4, {0, 1}), Error);
  // the whole list normalizes to whole_group
  Subgroup w = Subgroup::from_indices(d4, {0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(w.is_whole());
  CHECK_EQ(Subgroup::from_indices(d4, {0}).kind(), Subgroup::Kind::trivial_only);
}

TEST_CASE("lattice subgroups canonicalize through HNF") {
  Group z2 = make_free_abelian(2);
  Subgroup a = Subgroup::from_lattice(z2, {{Integer(2), Integer(0)}, {Integer(1), Integer(3)}});
  Subgroup b = Subgroup::from_lattice(z2, {{Integer(1), Integer(3)}, {Integer(3), Integer(3)}});
  CHECK(a.equals(b));
  GroupElement v;
  v.family = FamilyTag::free_abelian;
  v.nf = std::vector<std::int64_t>{1, 3};
  CHECK(a.contains(v));
  v.nf = std::vector<std::int64_t>{1, 0};
  CHECK_FALSE(a.contains(v));
  // unimodular basis collapses to the whole group
  Subgroup u = Subgroup::from_lattice(z2, {{Integer(1), Integer(1)}, {Integer(0), Integer(1)}});
  CHECK(u.is_whole());
  CHECK(Subgroup::from_lattice(z2, {}).is_trivial_subgroup());
}

// ============================================================
// as_group identifications
// ============================================================

TEST_CASE("finite subgroup becomes a standalone table group") {
  Group d4 = make_dihedral(4);
  // centre {e, r^2}
  Subgroup h = Subgroup::from_indices(d4, {0, 2});
  auto [grp, embed] = h.as_group();
  CHECK_EQ(grp.order(), 2);
  GroupElement back = embed(element_by_index(grp, 1));
  CHECK_EQ(print_element(d4, back), "r^2");
}

TEST_CASE("closed-form central subgroups identify with Z") {
  Group heis = make_heisenberg3();
  Subgroup z = Subgroup::heis_center_of(heis);
  auto [grp, embed] = z.as_group();
  CHECK_EQ(grp.name(), "free_abelian(1)");
  GroupElement two = element_power(grp, gen(grp, "e1"), 2);
  CHECK_EQ(print_element(heis, embed(two)), "(0,0,2)");

  Group bs = make_baumslag_solitar(3);
  Subgroup c = Subgroup::bs_centre_of(bs);
  CHECK_EQ(c.describe(), "<b^3>");
  auto [cg, cembed] = c.as_group();
  CHECK_EQ(print_element(bs, cembed(gen(cg, "e1"))), "b^3");
  CHECK(c.contains(element_power(bs, gen(bs, "b"), 3)));
  CHECK_FALSE(c.contains(gen(bs, "b")));
}

TEST_CASE("lattice subgroup embeds by basis combination") {
  Group z2 = make_free_abelian(2);
  Subgroup l = Subgroup::from_lattice(z2, {{Integer(2), Integer(0)}, {Integer(0), Integer(3)}});
  auto [grp, embed] = l.as_group();
  CHECK_EQ(grp.name(), "free_abelian(2)");
  GroupElement e2 = gen(grp, "e2");
  CHECK_EQ(print_element(z2, embed(e2)), "(0,3)");
}

// ============================================================
// quotients
// ============================================================

TEST_CASE("finite quotient builds coset tables") {
  Group d4 = make_dihedral(4);
  Subgroup centre = Subgroup::from_indices(d4, {0, 2});
  auto [q, project] = centre.quotient();
  CHECK_EQ(q.order(), 4);
  // D4 / centre is the Klein four-group: every nonidentity coset squares to e
  for (std::uint64_t i = 1; i < 4; ++i) {
    GroupElement c = element_by_index(q, i);
    CHECK_EQ(multiply(q, c, c), q.identity());
  }
  CHECK_EQ(print_element(q, project(element_by_index(d4, 2))), "[e]");
  // <s> = {e, s} is not normal in D4
  Subgroup s = Subgroup::from_indices(d4, {0, 4});
  CHECK_THROWS_AS(s.quotient(), Error);
}

TEST_CASE("infinite dihedral modulo translations is Z/2") {
  Group g = make_infinite_dihedral();
  Subgroup t = Subgroup::dinf_translations_of(g);
  auto [q, project] = t.quotient();
  CHECK_EQ(q.order(), 2);
  CHECK_EQ(index_of(q, project(gen(g, "s"))), 1);
  CHECK_EQ(index_of(q, project(gen(g, "t"))), 0);
}

TEST_CASE("heisenberg modulo its centre is Z^2") {
  Group g = make_heisenberg3();
  auto [q, project] = Subgroup::heis_center_of(g).quotient();
  CHECK_EQ(q.name(), "free_abelian(2)");
  GroupElement x = gen(g, "x");
  GroupElement y = gen(g, "y");
  // the commutator dies in the quotient
  GroupElement comm = multiply(g, multiply(g, x, y), inverse(g, multiply(g, y, x)));
  CHECK_EQ(project(comm), q.identity());
  CHECK_EQ(print_element(q, project(x)), "(1,0)");
}

TEST_CASE("BS(n,n) modulo its centre is the free product") {
  Group g = make_baumslag_solitar(2);
  auto [q, project] = Subgroup::bs_centre_of(g).quotient();
  CHECK_EQ(q.name(), "free_product_z_zn(2)");
  GroupElement b = gen(g, "b");
  CHECK_EQ(project(element_power(g, b, 2)), q.identity());
  CHECK_FALSE(project(b) == q.identity());
  GroupElement w = multiply(g, gen(g, "a"), b);
  CHECK_EQ(print_element(q, project(w)), "a b");
}

TEST_CASE("whole and trivial quotients are degenerate") {
  Group g = make_lamplighter();
  auto [t, tp] = Subgroup::whole(g).quotient();
  CHECK(t.is_trivial());
  CHECK_EQ(tp(gen(g, "t")), t.identity());
  auto [same, sp] = Subgroup::trivial(g).quotient();
  CHECK(same.same_group(g));
  CHECK_EQ(sp(gen(g, "t")), gen(g, "t"));
}

// ============================================================
// product subgroups
// ============================================================

TEST_CASE("componentwise subgroups act factor by factor") {
  Group prod = make_direct_product({make_heisenberg3(), make_free_product_z_zn(2)});
  Subgroup s = Subgroup::componentwise(
      prod, {Subgroup::heis_center_of(direct_factors(prod)[0]),
             Subgroup::trivial(direct_factors(prod)[1])});
  CHECK_EQ(s.kind(), Subgroup::Kind::product);
  CHECK_EQ(s.describe(), "<z> x {e}");

  auto gens = named_generators(prod);  // f1.x f1.y f1.z f2.a f2.b
  CHECK(s.contains(element_power(prod, gens[2].second, 5)));
  CHECK_FALSE(s.contains(gens[0].second));
  CHECK_FALSE(s.contains(gens[3].second));

  // quotient: Heis/<z> x (Z*Z2)/{e} = Z^2 x (Z*Z2), still a lazy product
  auto [q, project] = s.quotient();
  CHECK_EQ(direct_factors(q).size(), 2);
  GroupElement img = project(gens[2].second);
  CHECK_EQ(img, q.identity());
  CHECK_FALSE(project(gens[0].second) == q.identity());

  // as_group: <z> x {e} identifies with Z
  auto [h, embed] = s.as_group();
  CHECK_EQ(h.name(), "free_abelian(1)");
  CHECK_EQ(print_element(prod, embed(gen(h, "e1"))), "((0,0,1),e)");
}

TEST_CASE("containment drives series checks") {
  Group d4 = make_dihedral(4);
  Subgroup tr = Subgroup::trivial(d4);
  Subgroup centre = Subgroup::from_indices(d4, {0, 2});
  Subgroup rot = Subgroup::from_indices(d4, {0, 1, 2, 3});
  Subgroup whole = Subgroup::whole(d4);
  CHECK(tr.contained_in(centre));
  CHECK(centre.contained_in(rot));
  CHECK(rot.contained_in(whole));
  CHECK_FALSE(rot.contained_in(centre));
  CHECK_FALSE(centre.equals(rot));
  CHECK(centre.equals(Subgroup::from_indices(d4, {2, 0})));
}
