// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#include "twistlab/cocycle.hpp"

#include <functional>
#include <utility>

#include "family_impl.hpp"
#include "twistlab/errors.hpp"

namespace twistlab {

class CocycleImpl {
 public:
  virtual ~CocycleImpl() = default;
  virtual const Group& grp() const = 0;
  virtual const std::string& kind_name() const = 0;
  virtual std::string describe() const = 0;
  virtual CircleValue value(const GroupElement& a, const GroupElement& b) const = 0;
  virtual bool uses_theta() const = 0;
};

const Group& Cocycle::group() const { return impl_->grp(); }
const std::string& Cocycle::kind() const { return impl_->kind_name(); }
std::string Cocycle::describe() const { return impl_->describe(); }
CircleValue Cocycle::value(const GroupElement& a, const GroupElement& b) const {
  return impl_->value(a, b);
}
bool Cocycle::uses_theta() const { return impl_->uses_theta(); }

namespace {

const std::string kTrivial = "trivial";
const std::string kTable = "table";
const std::string kBicharacter = "bicharacter";
const std::string kPullback = "pullback";
const std::string kProduct = "product";
const std::string kDerived = "derived";

class TrivialCo final : public CocycleImpl {
 public:
  explicit TrivialCo(Group g) : g_(std::move(g)) {}
  const Group& grp() const override { return g_; }
  const std::string& kind_name() const override { return kTrivial; }
  std::string describe() const override { return "trivial cocycle"; }
  CircleValue value(const GroupElement& a, const GroupElement& b) const override {
    g_.impl().check(a);
    g_.impl().check(b);
    return CircleValue::one();
  }
  bool uses_theta() const override { return false; }

 private:
  Group g_;
};

class TableCo final : public CocycleImpl {
 public:
  TableCo(Group g, std::vector<CircleValue> flat, bool theta)
      : g_(std::move(g)), flat_(std::move(flat)), theta_(theta) {}
  const Group& grp() const override { return g_; }
  const std::string& kind_name() const override { return kTable; }
  std::string describe() const override {
    return "table cocycle on " + std::to_string(g_.order()) + " elements";
  }
  CircleValue value(const GroupElement& a, const GroupElement& b) const override {
    return flat_[index_of(g_, a) * g_.order() + index_of(g_, b)];
  }
  bool uses_theta() const override { return theta_; }

 private:
  Group g_;
  std::vector<CircleValue> flat_;
  bool theta_;
};

// sigma(a, b) = prod_{i,j} theta[i][j]^(x_i y_j) for integer coordinate maps
// x, y; a bicharacter in each variable, hence automatically a normalized
// cocycle.
class ExponentCo final : public CocycleImpl {
 public:
  ExponentCo(Group g, std::vector<std::vector<CircleValue>> theta, bool free_coords,
             const std::string& kind)
      : g_(std::move(g)), theta_(std::move(theta)), free_coords_(free_coords), kind_(kind) {
    for (const auto& row : theta_)
      for (const CircleValue& v : row)
        if (v.has_theta()) theta_flag_ = true;
  }
  const Group& grp() const override { return g_; }
  const std::string& kind_name() const override { return kind_; }
  std::string describe() const override {
    return kind_ + " cocycle via a " + std::to_string(theta_.size()) + "x" +
           std::to_string(theta_.size()) + " exponent matrix";
  }
  CircleValue value(const GroupElement& a, const GroupElement& b) const override {
    std::vector<std::int64_t> x = coords(a);
    std::vector<std::int64_t> y = coords(b);
    CircleValue out = CircleValue::one();
    for (std::size_t i = 0; i < theta_.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < theta_.size(); ++j) {
        if (y[j] == 0) continue;
        out = out * theta_[i][j].pow(Integer(x[i]) * Integer(y[j]));
      }
    }
    return out;
  }
  bool uses_theta() const override { return theta_flag_; }

  std::vector<std::int64_t> coords(const GroupElement& a) const {
    if (free_coords_) return free_abelianization_coords(g_, a);
    return abelian_coordinates(g_)->coords[index_of(g_, a)];
  }

 private:
  Group g_;
  std::vector<std::vector<CircleValue>> theta_;
  bool free_coords_;
  std::string kind_;
  bool theta_flag_ = false;
};

class ProductCo final : public CocycleImpl {
 public:
  ProductCo(Group g, std::vector<Cocycle> factors)
      : g_(std::move(g)), factors_(std::move(factors)) {}
  const Group& grp() const override { return g_; }
  const std::string& kind_name() const override { return kProduct; }
  std::string describe() const override {
    return "componentwise product of " + std::to_string(factors_.size()) + " cocycles";
  }
  CircleValue value(const GroupElement& a, const GroupElement& b) const override {
    g_.impl().check(a);
    g_.impl().check(b);
    const TupleNf& x = std::get<TupleNf>(a.nf);
    const TupleNf& y = std::get<TupleNf>(b.nf);
    CircleValue out = CircleValue::one();
    for (std::size_t i = 0; i < factors_.size(); ++i)
      out = out * factors_[i].value(x.parts[i], y.parts[i]);
    return out;
  }
  bool uses_theta() const override {
    for (const Cocycle& f : factors_)
      if (f.uses_theta()) return true;
    return false;
  }
  const std::vector<Cocycle>& factors() const { return factors_; }

 private:
  Group g_;
  std::vector<Cocycle> factors_;
};

class DerivedCo final : public CocycleImpl {
 public:
  DerivedCo(Group g, Cocycle parent, std::function<GroupElement(const GroupElement&)> embed,
            std::string desc)
      : g_(std::move(g)),
        parent_(std::move(parent)),
        embed_(std::move(embed)),
        desc_(std::move(desc)) {}
  const Group& grp() const override { return g_; }
  const std::string& kind_name() const override { return kDerived; }
  std::string describe() const override { return desc_; }
  CircleValue value(const GroupElement& a, const GroupElement& b) const override {
    return parent_.value(embed_(a), embed_(b));
  }
  bool uses_theta() const override { return parent_.uses_theta(); }

 private:
  Group g_;
  Cocycle parent_;
  std::function<GroupElement(const GroupElement&)> embed_;
  std::string desc_;
};

}  // namespace

// ---- factories -------------------------------------------------------------

Cocycle trivial_cocycle(Group g) {
  return Cocycle(std::make_shared<const TrivialCo>(std::move(g)));
}

Cocycle table_cocycle(Group g, std::vector<std::vector<CircleValue>> values) {
  const std::uint64_t n = g.order();  // InfiniteGroup on infinite input
  if (values.size() != n)
    fail(ErrorKind::invalid_cocycle, "cocycle table must have one row per element");
  std::vector<CircleValue> flat;
  flat.reserve(n * n);
  bool theta = false;
  for (const auto& row : values) {
    if (row.size() != n)
      fail(ErrorKind::invalid_cocycle, "cocycle table must be square");
    for (const CircleValue& v : row) {
      if (v.has_theta()) theta = true;
      flat.push_back(v);
    }
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    if (!(flat[i] == CircleValue::one()) || !(flat[i * n] == CircleValue::one()))
      fail(ErrorKind::invalid_cocycle,
           "cocycle is not normalized at " + element_names(g)[i]);
  }
  return Cocycle(std::make_shared<const TableCo>(std::move(g), std::move(flat), theta));
}

Cocycle bicharacter_cocycle(Group g, std::vector<std::vector<CircleValue>> theta) {
  std::size_t k;
  std::vector<std::int64_t> moduli;
  bool free_coords = false;
  if (g.family() == FamilyTag::free_abelian) {
    k = static_cast<std::size_t>(free_abelian_rank(g));
    moduli.assign(k, 0);
    free_coords = true;
  } else if (g.is_finite() && abelian_coordinates(g).has_value()) {
    moduli = abelian_coordinates(g)->moduli;
    k = moduli.size();
  } else {
    fail(ErrorKind::invalid_cocycle,
         g.name() + " carries no canonical abelian coordinates; use a pullback cocycle");
  }
  if (theta.size() != k)
    fail(ErrorKind::invalid_cocycle,
         "exponent matrix must be " + std::to_string(k) + "x" + std::to_string(k));
  for (const auto& row : theta)
    if (row.size() != k)
      fail(ErrorKind::invalid_cocycle,
           "exponent matrix must be " + std::to_string(k) + "x" + std::to_string(k));
  // well-definedness on torsion coordinates: theta[i][j]^(m_i) and
  // theta[i][j]^(m_j) must both be 1, else the value depends on the chosen
  // coordinate representative
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      bool ok = (moduli[i] == 0 || theta[i][j].pow(Integer(moduli[i])).is_identity()) &&
                (moduli[j] == 0 || theta[i][j].pow(Integer(moduli[j])).is_identity());
      if (!ok)
        fail(ErrorKind::invalid_cocycle,
             "entry (" + std::to_string(i) + "," + std::to_string(j) +
                 ") = " + theta[i][j].to_string() +
                 " is not constant on residues modulo the coordinate order");
    }
  }
  return Cocycle(std::make_shared<const ExponentCo>(std::move(g), std::move(theta),
                                                    free_coords, kBicharacter));
}

Cocycle pullback_cocycle(Group g, std::vector<std::vector<CircleValue>> theta) {
  std::size_t k = static_cast<std::size_t>(free_abelianization_rank(g));
  if (theta.size() != k)
    fail(ErrorKind::invalid_cocycle,
         "pullback matrix must be " + std::to_string(k) + "x" + std::to_string(k) +
             " (the free abelianization rank)");
  for (const auto& row : theta)
    if (row.size() != k)
      fail(ErrorKind::invalid_cocycle, "pullback matrix must be square");
  return Cocycle(
      std::make_shared<const ExponentCo>(std::move(g), std::move(theta), true, kPullback));
}

Cocycle product_cocycle(const Group& product_group, std::vector<Cocycle> factors) {
  std::vector<Cocycle> kept;
  for (Cocycle& f : factors)
    if (!f.group().is_trivial()) kept.push_back(std::move(f));
  if (kept.empty()) {
    if (!product_group.is_trivial())
      fail(ErrorKind::invalid_cocycle, "factor cocycles do not match the product group");
    return trivial_cocycle(product_group);
  }
  if (kept.size() == 1) {
    if (!kept[0].group().same_group(product_group))
      fail(ErrorKind::invalid_cocycle, "factor cocycle group mismatch");
    return std::move(kept[0]);
  }
  if (product_group.family() == FamilyTag::direct_product) {
    const std::vector<Group>& fs = direct_factors(product_group);
    if (fs.size() != kept.size())
      fail(ErrorKind::invalid_cocycle, "factor cocycles do not match the product group");
    for (std::size_t i = 0; i < fs.size(); ++i)
      if (!kept[i].group().same_group(fs[i]))
        fail(ErrorKind::invalid_cocycle, "factor cocycle group mismatch at position " +
                                             std::to_string(i + 1));
    return Cocycle(std::make_shared<const ProductCo>(product_group, std::move(kept)));
  }
  // dense materialized product: expand into a table, mixed-radix split with
  // the first kept factor varying fastest (matching the materialization)
  std::uint64_t expect = 1;
  for (const Cocycle& f : kept) expect *= f.group().order();
  if (!product_group.is_finite() || product_group.order() != expect)
    fail(ErrorKind::invalid_cocycle, "factor cocycles do not match the product group");
  const std::uint64_t n = product_group.order();
  auto split = [&](std::uint64_t idx) {
    std::vector<GroupElement> parts;
    for (const Cocycle& f : kept) {
      parts.push_back(element_by_index(f.group(), idx % f.group().order()));
      idx /= f.group().order();
    }
    return parts;
  };
  auto combine = [&](const std::vector<GroupElement>& parts) {
    std::uint64_t idx = 0, radix = 1;
    for (std::size_t t = 0; t < kept.size(); ++t) {
      idx += index_of(kept[t].group(), parts[t]) * radix;
      radix *= kept[t].group().order();
    }
    return idx;
  };
  // the split is only meaningful when it is multiplicative against the
  // product group's own table; this catches reordered or wrong factor lists
  for (std::uint64_t i = 0; i < n; ++i) {
    auto a = split(i);
    for (std::uint64_t j = 0; j < n; ++j) {
      auto b = split(j);
      std::vector<GroupElement> ab;
      for (std::size_t t = 0; t < kept.size(); ++t)
        ab.push_back(multiply(kept[t].group(), a[t], b[t]));
      if (combine(ab) != index_of(product_group,
                                  multiply(product_group, element_by_index(product_group, i),
                                           element_by_index(product_group, j))))
        fail(ErrorKind::invalid_cocycle, "factor cocycles do not match the product group");
    }
  }
  std::vector<std::vector<CircleValue>> values(n, std::vector<CircleValue>(n));
  for (std::uint64_t i = 0; i < n; ++i) {
    auto a = split(i);
    for (std::uint64_t j = 0; j < n; ++j) {
      auto b = split(j);
      CircleValue v = CircleValue::one();
      for (std::size_t t = 0; t < kept.size(); ++t)
        v = v * kept[t].value(a[t], b[t]);
      values[i][j] = v;
    }
  }
  return table_cocycle(product_group, std::move(values));
}

const std::vector<Cocycle>& product_factors(const Cocycle& c) {
  const auto* p = dynamic_cast<const ProductCo*>(&c.impl());
  if (p == nullptr)
    fail(ErrorKind::invalid_argument, "not a product cocycle: " + c.describe());
  return p->factors();
}

Cocycle restrict_cocycle(const Cocycle& parent, const Subgroup::AsGroup& sub,
                         const std::string& where) {
  return Cocycle(std::make_shared<const DerivedCo>(
      sub.group, parent, sub.embed, "restriction of " + parent.describe() + " to " + where));
}

// ---- derived quantities ----------------------------------------------------

CircleValue sigma_tilde(const Cocycle& c, const GroupElement& g, const GroupElement& h) {
  const Group& grp = c.group();
  GroupElement moved = conjugate(grp, h, g);
  return c.value(g, h) * c.value(moved, g).conj();
}

CircleValue regularity_defect(const Cocycle& c, const GroupElement& g,
                              const GroupElement& h) {
  const Group& grp = c.group();
  if (!commutes(grp, g, h))
    fail(ErrorKind::not_commuting, "the regularity defect needs commuting arguments: " +
                                       print_element(grp, g) + " and " +
                                       print_element(grp, h));
  return c.value(g, h) * c.value(h, g).conj();
}

CocycleValidation validate_cocycle(const Cocycle& c, Prng& rng, int effort) {
  const Group& g = c.group();
  auto check_identity = [&](const GroupElement& a, const GroupElement& b,
                            const GroupElement& x) {
    CircleValue lhs = c.value(a, b) * c.value(multiply(g, a, b), x);
    CircleValue rhs = c.value(a, multiply(g, b, x)) * c.value(b, x);
    if (!(lhs == rhs))
      fail(ErrorKind::invalid_cocycle,
           "cocycle identity fails at (" + print_element(g, a) + ", " +
               print_element(g, b) + ", " + print_element(g, x) + "): " + lhs.to_string() +
               " != " + rhs.to_string());
  };
  auto check_normalized = [&](const GroupElement& a) {
    if (!(c.value(g.identity(), a) == CircleValue::one()) ||
        !(c.value(a, g.identity()) == CircleValue::one()))
      fail(ErrorKind::invalid_cocycle,
           "cocycle is not normalized at " + print_element(g, a));
  };
  CocycleValidation out;
  if (g.is_finite() && g.order() <= 64) {
    const std::uint64_t n = g.order();
    std::vector<GroupElement> els;
    for (std::uint64_t i = 0; i < n; ++i) els.push_back(element_by_index(g, i));
    for (const GroupElement& a : els) check_normalized(a);
    for (const GroupElement& a : els)
      for (const GroupElement& b : els)
        for (const GroupElement& x : els) check_identity(a, b, x);
    out.mode = "exhaustive";
    out.checked = n * n * n;
    return out;
  }
  const std::uint64_t trials = static_cast<std::uint64_t>(effort) * 250;
  for (std::uint64_t t = 0; t < trials; ++t) {
    GroupElement a = sample_element(g, rng);
    GroupElement b = sample_element(g, rng);
    GroupElement x = sample_element(g, rng);
    if (t % 10 == 0) check_normalized(a);
    check_identity(a, b, x);
  }
  out.mode = "sampled";
  out.checked = trials;
  return out;
}

Integer d_sigma(const Cocycle& c) {
  const Group& g = c.group();
  if (!g.is_finite())
    fail(ErrorKind::infinite_group, "d_sigma is defined here only for finite groups");
  Integer acc = 1;
  const std::uint64_t n = g.order();
  for (std::uint64_t i = 0; i < n; ++i) {
    GroupElement a = element_by_index(g, i);
    for (std::uint64_t j = 0; j < n; ++j) {
      CircleValue v = c.value(a, element_by_index(g, j));
      if (v.has_theta())
        fail(ErrorKind::infinite_d_sigma,
             "cocycle value at (" + element_names(g)[i] + ", " + element_names(g)[j] +
                 ") involves theta; the generated circle subgroup is infinite");
      acc = lcm_with_denominator(acc, v.rational_part());
    }
  }
  return acc;
}

Group sigma_extension(const Cocycle& c) {
  const Group& g = c.group();
  const Integer d_big = d_sigma(c);
  const std::uint64_t d = d_big.convert_to<std::uint64_t>();
  const std::uint64_t n = g.order();
  if (d * n > kMaxDenseOrder)
    fail(ErrorKind::group_too_large,
         "sigma extension has order " + std::to_string(d * n) + ", above the dense cap");
  std::vector<std::string> names(d * n);
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = 0; j < d; ++j) {
      std::string zpart = j == 0 ? "1" : (j == 1 ? "z" : "z^" + std::to_string(j));
      names[i * d + j] = "(" + element_names(g)[i] + ", " + zpart + ")";
    }
  }
  std::vector<std::vector<std::int64_t>> table(d * n, std::vector<std::int64_t>(d * n));
  for (std::uint64_t i1 = 0; i1 < n; ++i1) {
    GroupElement a = element_by_index(g, i1);
    for (std::uint64_t i2 = 0; i2 < n; ++i2) {
      GroupElement b = element_by_index(g, i2);
      // sigma(a, b) = exp(2 pi i q) with q * d integral by the choice of d
      Rational qd = c.value(a, b).rational_part() * d_big;
      std::uint64_t shift = numerator(qd).convert_to<std::uint64_t>();
      std::uint64_t prod = index_of(g, multiply(g, a, b));
      for (std::uint64_t j1 = 0; j1 < d; ++j1)
        for (std::uint64_t j2 = 0; j2 < d; ++j2)
          table[i1 * d + j1][i2 * d + j2] =
              static_cast<std::int64_t>(prod * d + (j1 + j2 + shift) % d);
    }
  }
  // the table constructor re-checks associativity, which is precisely the
  // cocycle identity for this extension
  return make_finite_from_table(std::move(names), std::move(table));
}

}  // namespace twistlab
