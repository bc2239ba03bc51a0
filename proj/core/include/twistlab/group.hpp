// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twistlab/element.hpp"
#include "twistlab/prng.hpp"

namespace twistlab {

enum class Truth { yes, no, unknown };
const char* truth_name(Truth t);

// Order above which dense per-element structures (tables, the regular
// representation) are refused with GroupTooLarge.
inline constexpr std::uint64_t kMaxDenseOrder = 256;

// Witness that the conjugates c^m g c^-m are pairwise distinct, so the class
// of g is infinite. `argument` names the closed-form reason; `verified_up_to`
// powers were checked explicitly at construction time.
struct InfiniteClassCertificate {
  GroupElement conjugator;
  std::string argument;
  int verified_up_to = 0;
};

struct ClassSize {
  enum class Kind { finite, infinite, unknown_beyond };
  Kind kind = Kind::finite;
  std::uint64_t size = 0;                                  // finite
  std::optional<InfiniteClassCertificate> certificate;     // infinite
  std::uint64_t bound = 0;                                 // unknown_beyond

  static ClassSize make_finite(std::uint64_t n) {
    ClassSize c;
    c.kind = Kind::finite;
    c.size = n;
    return c;
  }
  static ClassSize make_infinite(InfiniteClassCertificate cert) {
    ClassSize c;
    c.kind = Kind::infinite;
    c.certificate = std::move(cert);
    return c;
  }
  static ClassSize make_unknown(std::uint64_t bound) {
    ClassSize c;
    c.kind = Kind::unknown_beyond;
    c.bound = bound;
    return c;
  }
  bool is_finite() const { return kind == Kind::finite; }
  bool is_infinite() const { return kind == Kind::infinite; }
};

std::string class_size_to_string(const ClassSize& c);

// Exact description of a centralizer C_G(g). `generated` lists an exact
// generating set; character arguments over C_G(g) only ever evaluate on
// the generators.
struct CentralizerDescription {
  enum class Kind { whole_group, explicit_list, generated };
  Kind kind = Kind::whole_group;
  std::vector<GroupElement> generators;  // generated
  std::vector<GroupElement> elements;    // explicit_list
  std::string text;
};

// Group-level facts recorded at construction, with the mathematical reason
// spelled out so reports can cite it.
struct GroupMetadata {
  Truth amenable = Truth::unknown;
  std::string amenable_reason;
  Truth in_class_p = Truth::unknown;  // Powers-type class P
  std::string in_class_p_reason;
  Truth fc_hypercentral = Truth::unknown;
  std::string fc_hypercentral_reason;
};

struct IccVerdict {
  Truth status = Truth::unknown;
  std::optional<GroupElement> witness;  // nontrivial element with finite class (status no)
  std::optional<ClassSize> witness_class;
  // status yes: sampled elements with their infinite-class certificates
  std::vector<std::pair<GroupElement, InfiniteClassCertificate>> certificates;
  std::string note;
};

// Optional exponent-coordinate structure of a finite abelian group:
// element <-> coordinate vector mod moduli. Lets bicharacter cocycles apply
// to finite groups.
struct AbelianCoordinates {
  std::vector<std::int64_t> moduli;
  std::vector<std::vector<std::int64_t>> coords;  // per element index
};

class FamilyImpl;

// Value-semantic handle; all state is immutable behind a shared_ptr.
class Group {
 public:
  Group() = default;
  explicit Group(std::shared_ptr<const FamilyImpl> impl) : impl_(std::move(impl)) {}

  const FamilyImpl& impl() const { return *impl_; }
  bool valid() const { return impl_ != nullptr; }

  FamilyTag family() const;
  const std::string& name() const;
  bool is_finite() const;
  std::uint64_t order() const;  // throws InfiniteGroup when not finite
  bool is_trivial() const;
  const GroupMetadata& metadata() const;
  GroupElement identity() const;

  // Structural identity (same family and parameters). Ops on elements of a
  // different group raise FamilyMismatch.
  bool same_group(const Group& other) const;

 private:
  std::shared_ptr<const FamilyImpl> impl_;
};

// Constructors. Parameters are validated (InvalidArgument on nonsense,
// GroupTooLarge above the dense cap for table-backed families).
Group make_trivial();
Group make_cyclic(std::int64_t n);
Group make_dihedral(std::int64_t n);  // order 2n
Group make_quaternion8();
Group make_elementary_abelian(std::int64_t p, std::int64_t k);
Group make_finite_from_table(std::vector<std::string> names,
                             std::vector<std::vector<std::int64_t>> table);
Group make_free_abelian(std::int64_t rank);
Group make_infinite_dihedral();
Group make_heisenberg3();
Group make_baumslag_solitar(std::int64_t n);   // n >= 2
Group make_free_product_z_zn(std::int64_t n);  // n >= 2
Group make_lamplighter();
Group make_direct_product(std::vector<Group> factors);

// Core operations.
GroupElement multiply(const Group& g, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const Group& g, const GroupElement& a);
// Conjugate of a by h: h a h^-1.
GroupElement conjugate(const Group& g, const GroupElement& a, const GroupElement& h);
bool commutes(const Group& g, const GroupElement& a, const GroupElement& b);
GroupElement element_power(const Group& g, const GroupElement& a, std::int64_t k);
ClassSize class_size(const Group& g, const GroupElement& a, int effort = 20);
CentralizerDescription centralizer_description(const Group& g, const GroupElement& a);
IccVerdict is_icc(const Group& g, int effort = 20);
std::string print_element(const Group& g, const GroupElement& a);
std::vector<std::pair<std::string, GroupElement>> named_generators(const Group& g);
GroupElement sample_element(const Group& g, Prng& rng);

// Finite-group helpers (InfiniteGroup otherwise).
const std::vector<std::string>& element_names(const Group& g);
GroupElement element_by_index(const Group& g, std::uint64_t index);
std::uint64_t index_of(const Group& g, const GroupElement& a);
// Classes sorted by least member index; each class sorted by index.
std::vector<std::vector<GroupElement>> conjugacy_classes(const Group& g);
// Greedy small generating set: repeatedly adjoin the least-index element
// outside the current closure.
std::vector<GroupElement> small_generating_set(const Group& g);
const std::optional<AbelianCoordinates>& abelian_coordinates(const Group& g);

// Rank of the free part of G^ab and the induced coordinate map; every
// homomorphism G -> Z^k factors through these coordinates.
int free_abelianization_rank(const Group& g);
std::vector<std::int64_t> free_abelianization_coords(const Group& g, const GroupElement& a);

// Family parameter accessors (InvalidArgument when the family does not carry
// the parameter).
std::int64_t torsion_parameter(const Group& g);      // n of BS(n,n) or Z * Z_n
std::int64_t free_abelian_rank(const Group& g);
const std::vector<Group>& direct_factors(const Group& g);  // lazy products only

}  // namespace twistlab
