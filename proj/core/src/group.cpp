// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#include "twistlab/group.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "family_impl.hpp"
#include "twistlab/errors.hpp"

namespace twistlab {

const char* truth_name(Truth t) {
  switch (t) {
    case Truth::yes: return "yes";
    case Truth::no: return "no";
    case Truth::unknown: return "unknown";
  }
  return "?";
}

std::string class_size_to_string(const ClassSize& c) {
  switch (c.kind) {
    case ClassSize::Kind::finite: return "finite(" + std::to_string(c.size) + ")";
    case ClassSize::Kind::infinite: return "infinite";
    case ClassSize::Kind::unknown_beyond:
      return "unknown_beyond(" + std::to_string(c.bound) + ")";
  }
  return "?";
}

// ---- Group handle ----------------------------------------------------------

FamilyTag Group::family() const { return impl_->tag(); }
const std::string& Group::name() const { return impl_->name(); }
bool Group::is_finite() const { return impl_->finite(); }
std::uint64_t Group::order() const { return impl_->order(); }
bool Group::is_trivial() const { return impl_->finite() && impl_->order() == 1; }
const GroupMetadata& Group::metadata() const { return impl_->metadata(); }
GroupElement Group::identity() const { return impl_->identity(); }
bool Group::same_group(const Group& other) const {
  return impl_.get() == other.impl_.get() || impl_->same(*other.impl_);
}

GroupElement multiply(const Group& g, const GroupElement& a, const GroupElement& b) {
  g.impl().check(a);
  g.impl().check(b);
  return g.impl().mul(a, b);
}

GroupElement inverse(const Group& g, const GroupElement& a) {
  g.impl().check(a);
  return g.impl().inv(a);
}

GroupElement conjugate(const Group& g, const GroupElement& a, const GroupElement& h) {
  g.impl().check(a);
  g.impl().check(h);
  return g.impl().mul(g.impl().mul(h, a), g.impl().inv(h));
}

bool commutes(const Group& g, const GroupElement& a, const GroupElement& b) {
  g.impl().check(a);
  g.impl().check(b);
  return g.impl().mul(a, b) == g.impl().mul(b, a);
}

GroupElement element_power(const Group& g, const GroupElement& a, std::int64_t k) {
  g.impl().check(a);
  GroupElement base = k < 0 ? g.impl().inv(a) : a;
  std::uint64_t e = k < 0 ? -static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
  GroupElement acc = g.impl().identity();
  while (e > 0) {
    if (e & 1) acc = g.impl().mul(acc, base);
    base = g.impl().mul(base, base);
    e >>= 1;
  }
  return acc;
}

ClassSize class_size(const Group& g, const GroupElement& a, int effort) {
  g.impl().check(a);
  return g.impl().cls(a, effort);
}

CentralizerDescription centralizer_description(const Group& g, const GroupElement& a) {
  g.impl().check(a);
  return g.impl().centralizer(a);
}

IccVerdict is_icc(const Group& g, int effort) { return g.impl().icc(effort); }

std::string print_element(const Group& g, const GroupElement& a) {
  g.impl().check(a);
  return g.impl().print(a);
}

std::vector<std::pair<std::string, GroupElement>> named_generators(const Group& g) {
  return g.impl().gens();
}

GroupElement sample_element(const Group& g, Prng& rng) { return g.impl().sample(rng); }

int free_abelianization_rank(const Group& g) { return g.impl().free_rank(); }

std::vector<std::int64_t> free_abelianization_coords(const Group& g, const GroupElement& a) {
  g.impl().check(a);
  return g.impl().free_coords(a);
}

// ---- finite helpers --------------------------------------------------------

const FiniteImpl* as_finite(const Group& g) {
  return dynamic_cast<const FiniteImpl*>(&g.impl());
}

const FiniteImpl& require_finite(const Group& g) {
  const FiniteImpl* f = as_finite(g);
  if (!f) {
    if (g.is_finite())
      fail(ErrorKind::group_too_large,
           g.name() + ": no dense table (order above " + std::to_string(kMaxDenseOrder) + ")");
    fail(ErrorKind::infinite_group, g.name() + " is infinite");
  }
  return *f;
}

const std::vector<std::string>& element_names(const Group& g) {
  return require_finite(g).names();
}

GroupElement element_by_index(const Group& g, std::uint64_t index) {
  return require_finite(g).element(index);
}

std::uint64_t index_of(const Group& g, const GroupElement& a) {
  return require_finite(g).index(a);
}

std::vector<std::vector<GroupElement>> conjugacy_classes(const Group& g) {
  return require_finite(g).classes();
}

std::vector<GroupElement> small_generating_set(const Group& g) {
  return require_finite(g).generating_set();
}

const std::optional<AbelianCoordinates>& abelian_coordinates(const Group& g) {
  return require_finite(g).coordinates();
}

// ---- FiniteImpl ------------------------------------------------------------

FiniteImpl::FiniteImpl(std::string name, std::vector<std::string> names,
                       std::vector<std::uint16_t> table, GroupMetadata meta,
                       std::vector<std::pair<std::string, std::uint64_t>> generator_indices,
                       std::optional<AbelianCoordinates> coords)
    : name_(std::move(name)),
      n_(names.size()),
      names_(std::move(names)),
      table_(std::move(table)),
      meta_(std::move(meta)),
      gen_idx_(std::move(generator_indices)),
      coords_(std::move(coords)) {
  if (n_ == 0) fail(ErrorKind::invalid_argument, "empty group table");
  if (n_ > kMaxDenseOrder)
    fail(ErrorKind::group_too_large,
         "order " + std::to_string(n_) + " exceeds the dense cap " +
             std::to_string(kMaxDenseOrder));
  if (table_.size() != n_ * n_)
    fail(ErrorKind::invalid_argument, "group table is not square");
  for (std::uint16_t v : table_)
    if (v >= n_) fail(ErrorKind::invalid_argument, "group table entry out of range");

  // identity must sit at index 0
  for (std::uint64_t j = 0; j < n_; ++j)
    if (mul_idx(0, j) != j || mul_idx(j, 0) != j)
      fail(ErrorKind::invalid_argument, "element 0 is not an identity");

  // Latin square: rows and columns are permutations
  for (std::uint64_t i = 0; i < n_; ++i) {
    std::vector<bool> seen_row(n_, false), seen_col(n_, false);
    for (std::uint64_t j = 0; j < n_; ++j) {
      std::uint64_t r = mul_idx(i, j), c = mul_idx(j, i);
      if (seen_row[r] || seen_col[c])
        fail(ErrorKind::invalid_argument, "group table is not a Latin square");
      seen_row[r] = seen_col[c] = true;
    }
  }

  inv_.assign(n_, 0);
  for (std::uint64_t i = 0; i < n_; ++i) {
    bool found = false;
    for (std::uint64_t j = 0; j < n_; ++j)
      if (mul_idx(i, j) == 0) {
        if (mul_idx(j, i) != 0)
          fail(ErrorKind::invalid_argument, "one-sided inverse in group table");
        inv_[i] = static_cast<std::uint16_t>(j);
        found = true;
        break;
      }
    if (!found) fail(ErrorKind::invalid_argument, "missing inverse in group table");
  }

  for (std::uint64_t i = 0; i < n_; ++i)
    for (std::uint64_t j = 0; j < n_; ++j)
      for (std::uint64_t k = 0; k < n_; ++k)
        if (mul_idx(mul_idx(i, j), k) != mul_idx(i, mul_idx(j, k)))
          fail(ErrorKind::invalid_argument, "group table is not associative");

  if (coords_) {
    if (coords_->coords.size() != n_)
      fail(ErrorKind::invalid_argument, "coordinate list size mismatch");
    std::uint64_t prod = 1;
    for (std::int64_t m : coords_->moduli) prod *= static_cast<std::uint64_t>(m);
    if (prod != n_)
      fail(ErrorKind::invalid_argument, "coordinate moduli do not multiply to the order");
    std::size_t r = coords_->moduli.size();
    for (std::uint64_t i = 0; i < n_; ++i)
      for (std::uint64_t j = 0; j < n_; ++j) {
        std::uint64_t k = mul_idx(i, j);
        for (std::size_t t = 0; t < r; ++t) {
          std::int64_t want =
              (coords_->coords[i][t] + coords_->coords[j][t]) % coords_->moduli[t];
          if (coords_->coords[k][t] != want)
            fail(ErrorKind::invalid_argument, "coordinates are not additive");
        }
      }
  }
}

GroupElement FiniteImpl::element(std::uint64_t i) const {
  if (i >= n_) fail(ErrorKind::invalid_argument, "element index out of range");
  GroupElement e;
  e.family = FamilyTag::finite;
  e.nf = static_cast<std::int64_t>(i);
  return e;
}

std::uint64_t FiniteImpl::index(const GroupElement& a) const {
  check(a);
  return static_cast<std::uint64_t>(std::get<std::int64_t>(a.nf));
}

GroupElement FiniteImpl::mul(const GroupElement& a, const GroupElement& b) const {
  return element(mul_idx(index(a), index(b)));
}

GroupElement FiniteImpl::inv(const GroupElement& a) const {
  return element(inv_[index(a)]);
}

void FiniteImpl::check(const GroupElement& a) const {
  if (a.family != FamilyTag::finite || !std::holds_alternative<std::int64_t>(a.nf))
    fail(ErrorKind::family_mismatch,
         "element of family " + std::string(family_tag_name(a.family)) +
             " used in " + name_);
  std::int64_t i = std::get<std::int64_t>(a.nf);
  if (i < 0 || static_cast<std::uint64_t>(i) >= n_)
    fail(ErrorKind::family_mismatch, "element index out of range for " + name_);
}

bool FiniteImpl::same(const FamilyImpl& other) const {
  const auto* o = dynamic_cast<const FiniteImpl*>(&other);
  return o && o->names_ == names_ && o->table_ == table_;
}

std::string FiniteImpl::print(const GroupElement& a) const { return names_[index(a)]; }

std::vector<std::pair<std::string, GroupElement>> FiniteImpl::gens() const {
  std::vector<std::pair<std::string, GroupElement>> out;
  for (const auto& [nm, idx] : gen_idx_) out.emplace_back(nm, element(idx));
  return out;
}

ClassSize FiniteImpl::cls(const GroupElement& a, int) const {
  std::uint64_t i = index(a);
  std::set<std::uint64_t> orbit;
  for (std::uint64_t h = 0; h < n_; ++h) orbit.insert(conj_idx(i, h));
  return ClassSize::make_finite(orbit.size());
}

CentralizerDescription FiniteImpl::centralizer(const GroupElement& a) const {
  std::uint64_t i = index(a);
  CentralizerDescription d;
  d.kind = CentralizerDescription::Kind::explicit_list;
  for (std::uint64_t h = 0; h < n_; ++h)
    if (mul_idx(i, h) == mul_idx(h, i)) d.elements.push_back(element(h));
  if (d.elements.size() == n_) {
    d.kind = CentralizerDescription::Kind::whole_group;
    d.text = "whole group";
  } else {
    d.text = "explicit list of " + std::to_string(d.elements.size()) + " elements";
  }
  return d;
}

IccVerdict FiniteImpl::icc(int) const {
  IccVerdict v;
  if (n_ == 1) {
    v.status = Truth::yes;
    v.note = "trivial group: the ICC condition is vacuous";
    return v;
  }
  v.status = Truth::no;
  v.witness = element(1);
  v.witness_class = cls(element(1), 0);
  v.note = "finite group: every conjugacy class is finite";
  return v;
}

GroupElement FiniteImpl::sample(Prng& rng) const { return element(rng.below(n_)); }

const std::vector<std::vector<GroupElement>>& FiniteImpl::classes() const {
  if (classes_cache_.empty()) {
    std::vector<bool> seen(n_, false);
    for (std::uint64_t i = 0; i < n_; ++i) {
      if (seen[i]) continue;
      std::set<std::uint64_t> orbit;
      for (std::uint64_t h = 0; h < n_; ++h) orbit.insert(conj_idx(i, h));
      std::vector<GroupElement> cl;
      for (std::uint64_t m : orbit) {
        seen[m] = true;
        cl.push_back(element(m));
      }
      classes_cache_.push_back(std::move(cl));
    }
  }
  return classes_cache_;
}

namespace {

// Closure of {0} + gens under multiplication; a finite cancellative
// subsemigroup is a subgroup, so products alone suffice.
std::vector<bool> closure_mask(const FiniteImpl& f, const std::vector<std::uint64_t>& gens) {
  std::uint64_t n = f.order();
  std::vector<bool> in(n, false);
  std::vector<std::uint64_t> work;
  auto add = [&](std::uint64_t x) {
    if (!in[x]) {
      in[x] = true;
      work.push_back(x);
    }
  };
  add(0);
  for (std::uint64_t g : gens) add(g);
  std::vector<std::uint64_t> members;
  while (!work.empty()) {
    std::uint64_t x = work.back();
    work.pop_back();
    members.push_back(x);
    for (std::uint64_t y : members) {
      add(f.mul_idx(x, y));
      add(f.mul_idx(y, x));
    }
  }
  return in;
}

}  // namespace

std::vector<GroupElement> FiniteImpl::generating_set() const {
  std::vector<std::uint64_t> gens;
  std::vector<bool> in = closure_mask(*this, gens);
  for (std::uint64_t i = 0; i < n_; ++i) {
    if (in[i]) continue;
    gens.push_back(i);
    in = closure_mask(*this, gens);
  }
  std::vector<GroupElement> out;
  for (std::uint64_t g : gens) out.push_back(element(g));
  return out;
}

GroupMetadata finite_metadata(bool trivial) {
  GroupMetadata m;
  m.amenable = Truth::yes;
  m.amenable_reason = "finite groups are amenable";
  if (trivial) {
    m.in_class_p = Truth::yes;
    m.in_class_p_reason = "the trivial group is the only amenable member of class P";
  } else {
    m.in_class_p = Truth::no;
    m.in_class_p_reason = "class P consists of ICC groups; a nontrivial finite group is not ICC";
  }
  m.fc_hypercentral = Truth::yes;
  m.fc_hypercentral_reason = "every conjugacy class of a finite group is finite, so FC(G) = G";
  return m;
}

// ---- finite constructors ---------------------------------------------------

namespace {

std::shared_ptr<const FiniteImpl> build_finite(
    std::string name, std::vector<std::string> names, std::vector<std::uint16_t> table,
    std::vector<std::pair<std::string, std::uint64_t>> gens,
    std::optional<AbelianCoordinates> coords) {
  GroupMetadata meta = finite_metadata(names.size() == 1);
  return std::make_shared<const FiniteImpl>(std::move(name), std::move(names),
                                            std::move(table), std::move(meta),
                                            std::move(gens), std::move(coords));
}

std::vector<std::uint16_t> table_from_fn(
    std::uint64_t n, const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& f) {
  std::vector<std::uint16_t> t(n * n);
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j) t[i * n + j] = static_cast<std::uint16_t>(f(i, j));
  return t;
}

}  // namespace

Group make_trivial() {
  return Group(build_finite("trivial", {"e"}, {0}, {}, AbelianCoordinates{{1}, {{0}}}));
}

Group make_cyclic(std::int64_t n) {
  if (n < 1) fail(ErrorKind::invalid_argument, "cyclic order must be >= 1");
  if (n == 1) return make_trivial();
  std::uint64_t un = static_cast<std::uint64_t>(n);
  std::vector<std::string> names(un);
  AbelianCoordinates coords;
  coords.moduli = {n};
  for (std::uint64_t k = 0; k < un; ++k) {
    names[k] = k == 0 ? "e" : (k == 1 ? "g" : "g^" + std::to_string(k));
    coords.coords.push_back({static_cast<std::int64_t>(k)});
  }
  auto table = table_from_fn(un, [un](std::uint64_t i, std::uint64_t j) { return (i + j) % un; });
  return Group(build_finite("cyclic(" + std::to_string(n) + ")", std::move(names),
                            std::move(table), {{"g", 1}}, std::move(coords)));
}

Group make_dihedral(std::int64_t n) {
  if (n < 1) fail(ErrorKind::invalid_argument, "dihedral parameter must be >= 1");
  std::uint64_t un = static_cast<std::uint64_t>(n);
  std::uint64_t order = 2 * un;
  // index k in [0,n): r^k; index n+k: r^k s
  std::vector<std::string> names(order);
  for (std::uint64_t k = 0; k < un; ++k) {
    std::string rk = k == 0 ? "" : (k == 1 ? "r" : "r^" + std::to_string(k));
    names[k] = k == 0 ? "e" : rk;
    names[un + k] = k == 0 ? "s" : rk + " s";
  }
  auto mul = [un](std::uint64_t i, std::uint64_t j) -> std::uint64_t {
    std::uint64_t k1 = i % un, f1 = i / un, k2 = j % un, f2 = j / un;
    // (r^k1 s^f1)(r^k2 s^f2) = r^{k1 + (-1)^f1 k2} s^{f1 xor f2}
    std::uint64_t k = f1 ? (k1 + un - k2 % un) % un : (k1 + k2) % un;
    return (f1 ^ f2) * un + k;
  };
  std::vector<std::pair<std::string, std::uint64_t>> gens;
  if (n >= 2) gens.push_back({"r", 1});
  gens.push_back({"s", un});
  return Group(build_finite("dihedral(" + std::to_string(n) + ")", std::move(names),
                            table_from_fn(order, mul), std::move(gens), std::nullopt));
}

Group make_quaternion8() {
  // index = 2*axis + (sign < 0), axes 1, i, j, k
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  // axis multiplication: axis_table[a][b] = (axis, sign)
  static const int axis_tab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_tab[4][4] = {{+1, +1, +1, +1},
                                     {+1, -1, +1, -1},
                                     {+1, -1, -1, +1},
                                     {+1, +1, -1, -1}};
  // sign_tab[a][b]: i*i = -1, i*j = k, j*i = -k, etc.
  auto mul = [](std::uint64_t x, std::uint64_t y) -> std::uint64_t {
    int ax = static_cast<int>(x / 2), sx = x % 2 ? -1 : 1;
    int ay = static_cast<int>(y / 2), sy = y % 2 ? -1 : 1;
    int az = axis_tab[ax][ay];
    int sz = sign_tab[ax][ay] * sx * sy;
    return static_cast<std::uint64_t>(az * 2 + (sz < 0 ? 1 : 0));
  };
  return Group(build_finite("quaternion8", std::move(names), table_from_fn(8, mul),
                            {{"i", 2}, {"j", 4}}, std::nullopt));
}

namespace {

std::string tuple_name(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

Group make_elementary_abelian(std::int64_t p, std::int64_t k) {
  if (p < 2) fail(ErrorKind::invalid_argument, "elementary abelian prime must be >= 2");
  // primality: composite p would still give a valid abelian group Z_p^k, but
  // the family promises a prime; reject clearly.
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) fail(ErrorKind::invalid_argument, "elementary abelian parameter p must be prime");
  if (k < 1) fail(ErrorKind::invalid_argument, "elementary abelian rank must be >= 1");
  double size = 1;
  for (std::int64_t i = 0; i < k; ++i) size *= static_cast<double>(p);
  if (size > static_cast<double>(kMaxDenseOrder))
    fail(ErrorKind::group_too_large, "elementary abelian group exceeds the dense cap");
  std::uint64_t up = static_cast<std::uint64_t>(p);
  std::uint64_t n = 1;
  for (std::int64_t i = 0; i < k; ++i) n *= up;

  AbelianCoordinates coords;
  coords.moduli.assign(k, p);
  std::vector<std::string> names(n);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    std::vector<std::int64_t> digits(k);
    std::uint64_t rest = idx;
    for (std::int64_t t = 0; t < k; ++t) {  // first coordinate varies fastest
      digits[t] = static_cast<std::int64_t>(rest % up);
      rest /= up;
    }
    names[idx] = tuple_name(digits);
    coords.coords.push_back(std::move(digits));
  }
  auto mul = [&coords, up, k](std::uint64_t i, std::uint64_t j) -> std::uint64_t {
    std::uint64_t idx = 0, mult = 1;
    for (std::int64_t t = 0; t < k; ++t) {
      std::uint64_t d = static_cast<std::uint64_t>(coords.coords[i][t] + coords.coords[j][t]) % up;
      idx += d * mult;
      mult *= up;
    }
    return idx;
  };
  std::vector<std::pair<std::string, std::uint64_t>> gens;
  std::uint64_t mult = 1;
  for (std::int64_t t = 0; t < k; ++t) {
    gens.push_back({"e" + std::to_string(t + 1), mult});
    mult *= up;
  }
  // the table must be built before coords is moved into the call below
  auto table = table_from_fn(n, mul);
  return Group(build_finite(
      "elementary_abelian(" + std::to_string(p) + "," + std::to_string(k) + ")",
      std::move(names), std::move(table), std::move(gens), std::move(coords)));
}

Group make_finite_from_table(std::vector<std::string> names,
                             std::vector<std::vector<std::int64_t>> table) {
  std::uint64_t n = names.size();
  if (n == 0) fail(ErrorKind::invalid_argument, "empty element list");
  if (n > kMaxDenseOrder)
    fail(ErrorKind::group_too_large, "table order exceeds the dense cap");
  if (table.size() != n) fail(ErrorKind::invalid_argument, "table is not square");
  std::vector<std::uint16_t> flat(n * n);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (table[i].size() != n) fail(ErrorKind::invalid_argument, "table is not square");
    for (std::uint64_t j = 0; j < n; ++j) {
      std::int64_t v = table[i][j];
      if (v < 0 || static_cast<std::uint64_t>(v) >= n)
        fail(ErrorKind::invalid_argument, "table entry out of range");
      flat[i * n + j] = static_cast<std::uint16_t>(v);
    }
  }
  auto impl = build_finite("table(order=" + std::to_string(n) + ")", std::move(names),
                           std::move(flat), {}, std::nullopt);
  // synthesize generator names from the greedy generating set
  Group g(impl);
  std::vector<std::pair<std::string, std::uint64_t>> gens;
  for (const GroupElement& e : impl->generating_set())
    gens.push_back({impl->print(e), impl->index(e)});
  if (gens.empty()) return g;
  auto impl2 = std::make_shared<const FiniteImpl>(
      impl->name(), impl->names(),
      [&] {
        std::vector<std::uint16_t> t(impl->order() * impl->order());
        for (std::uint64_t i = 0; i < impl->order(); ++i)
          for (std::uint64_t j = 0; j < impl->order(); ++j)
            t[i * impl->order() + j] = static_cast<std::uint16_t>(impl->mul_idx(i, j));
        return t;
      }(),
      finite_metadata(impl->order() == 1), std::move(gens), std::nullopt);
  return Group(impl2);
}

Group materialize_finite_product(const std::vector<Group>& factors) {
  std::vector<const FiniteImpl*> fs;
  std::uint64_t n = 1;
  for (const Group& g : factors) {
    const FiniteImpl* f = as_finite(g);
    if (!f) fail(ErrorKind::invalid_argument, "materialize_finite_product: non-table factor");
    fs.push_back(f);
    n *= f->order();
  }
  // mixed-radix index, first factor varies fastest
  auto split = [&](std::uint64_t idx) {
    std::vector<std::uint64_t> part(fs.size());
    for (std::size_t t = 0; t < fs.size(); ++t) {
      part[t] = idx % fs[t]->order();
      idx /= fs[t]->order();
    }
    return part;
  };
  auto join = [&](const std::vector<std::uint64_t>& part) {
    std::uint64_t idx = 0, mult = 1;
    for (std::size_t t = 0; t < fs.size(); ++t) {
      idx += part[t] * mult;
      mult *= fs[t]->order();
    }
    return idx;
  };
  std::vector<std::string> names(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    auto part = split(i);
    std::string s = "(";
    for (std::size_t t = 0; t < fs.size(); ++t) {
      if (t) s += ",";
      s += fs[t]->names()[part[t]];
    }
    names[i] = s + ")";
  }
  auto mul = [&](std::uint64_t i, std::uint64_t j) {
    auto a = split(i), b = split(j);
    std::vector<std::uint64_t> c(fs.size());
    for (std::size_t t = 0; t < fs.size(); ++t) c[t] = fs[t]->mul_idx(a[t], b[t]);
    return join(c);
  };
  std::optional<AbelianCoordinates> coords;
  bool all_coords = true;
  for (const FiniteImpl* f : fs)
    if (!f->coordinates()) all_coords = false;
  if (all_coords) {
    coords.emplace();
    for (const FiniteImpl* f : fs)
      for (std::int64_t m : f->coordinates()->moduli) coords->moduli.push_back(m);
    for (std::uint64_t i = 0; i < n; ++i) {
      auto part = split(i);
      std::vector<std::int64_t> c;
      for (std::size_t t = 0; t < fs.size(); ++t)
        for (std::int64_t v : fs[t]->coordinates()->coords[part[t]]) c.push_back(v);
      coords->coords.push_back(std::move(c));
    }
  }
  std::vector<std::pair<std::string, std::uint64_t>> gens;
  for (std::size_t t = 0; t < fs.size(); ++t) {
    for (const auto& [nm, el] : fs[t]->gens()) {
      std::vector<std::uint64_t> part(fs.size(), 0);
      part[t] = fs[t]->index(el);
      gens.push_back({"f" + std::to_string(t + 1) + "." + nm, join(part)});
    }
  }
  std::string name = "direct_product(";
  for (std::size_t t = 0; t < fs.size(); ++t) {
    if (t) name += ", ";
    name += fs[t]->name();
  }
  name += ")";
  auto table = table_from_fn(n, mul);
  return Group(build_finite(std::move(name), std::move(names), std::move(table),
                            std::move(gens), std::move(coords)));
}

}  // namespace twistlab
