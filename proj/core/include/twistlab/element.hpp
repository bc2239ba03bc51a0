// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <variant>
#include <vector>

namespace twistlab {

enum class FamilyTag {
  finite,             // concrete multiplication table
  free_abelian,       // Z^n
  infinite_dihedral,  // Z x| Z_2
  heisenberg3,        // integer Heisenberg group
  baumslag_solitar,   // <a, b | a b^n = b^n a>
  free_product_z_zn,  // Z * Z_n
  lamplighter,        // (+)Z_2 x| Z
  direct_product,
};

const char* family_tag_name(FamilyTag t);

// Alternating-word syllable: a^exp (is_b false) or b^exp (is_b true).
// Words never contain two consecutive syllables with the same letter way and
// never a zero exponent; free_product_z_zn keeps b-exponents in [1, n-1].
struct Syllable {
  bool is_b = false;
  std::int64_t exp = 0;
  bool operator==(const Syllable&) const = default;
};

// (shift, flip) = t^shift s^flip in <t, s | s^2 = e, s t s = t^-1>.
struct DihedralNf {
  std::int64_t shift = 0;
  bool flip = false;
  bool operator==(const DihedralNf&) const = default;
};

// Upper unitriangular 3x3 integer matrix with entries (x, y, z):
// (x1,y1,z1)(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1*y2).
struct HeisNf {
  std::int64_t x = 0, y = 0, z = 0;
  bool operator==(const HeisNf&) const = default;
};

// Reduced alternating word in Z * Z_n.
struct WordNf {
  std::vector<Syllable> syllables;
  bool operator==(const WordNf&) const = default;
};

// Element lift(word) * (b^n)^centre of <a, b | a b^n = b^n a>; word is the
// reduced image in the quotient Z * Z_n, centre counts central b^n factors.
struct BsNf {
  std::vector<Syllable> syllables;
  std::int64_t centre = 0;
  bool operator==(const BsNf&) const = default;
};

// (finite lamp support, shift); lamps sorted strictly ascending.
struct LampNf {
  std::vector<std::int64_t> lamps;
  std::int64_t shift = 0;
  bool operator==(const LampNf&) const = default;
};

struct GroupElement;

struct TupleNf {
  std::vector<GroupElement> parts;
  bool operator==(const TupleNf& other) const;
};

// Canonical normal form. Two elements are equal in the group iff their
// GroupElement representations compare equal; the family's operations keep
// every produced element canonical.
struct GroupElement {
  FamilyTag family = FamilyTag::finite;
  std::variant<std::int64_t,                // finite: element index
               std::vector<std::int64_t>,   // free_abelian: coordinates
               DihedralNf, HeisNf, WordNf, BsNf, LampNf, TupleNf>
      nf;
  bool operator==(const GroupElement&) const = default;
};

// Total order for deterministic witness tie-breaks; lexicographic on the
// canonical data. Returns <0, 0, >0.
int compare_elements(const GroupElement& a, const GroupElement& b);

inline bool element_less(const GroupElement& a, const GroupElement& b) {
  return compare_elements(a, b) < 0;
}

}  // namespace twistlab
