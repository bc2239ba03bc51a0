// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#include "twistlab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "twistlab/errors.hpp"
#include "twistlab/prng.hpp"

namespace twistlab {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXd;
using Cplx = std::complex<double>;

constexpr double kZeroBandLow = 1e-11;
constexpr double kZeroBandHigh = 1e-7;
constexpr double kBuildTol = 1e-12;

std::uint64_t checked_order(const Group& g) {
  if (!g.is_finite())
    fail(ErrorKind::infinite_group, "the dense representation needs a finite group");
  std::uint64_t n = g.order();
  if (n > kMaxDenseOrder)
    fail(ErrorKind::group_too_large,
         "order " + std::to_string(n) + " exceeds the dense representation cap of " +
             std::to_string(kMaxDenseOrder));
  return n;
}

Cplx sigma_num(const TwistedAlgebra& a, const GroupElement& x, const GroupElement& y) {
  return a.cocycle.value(x, y).eval_numeric(a.theta_value);
}

// Nullity under the relative singular-value split, refusing the guard band.
// Values at or below 1e-11 of the largest are zeros, values at or above
// 1e-7 are not, anything between is reported instead of rounded.
int count_null(const std::vector<double>& svals, int ncols, const std::string& what) {
  if (svals.empty()) return ncols;
  double smax = *std::max_element(svals.begin(), svals.end());
  if (smax <= 1e-14) return ncols;
  int zero = 0;
  for (double s : svals) {
    double r = s / smax;
    if (r > kZeroBandLow && r < kZeroBandHigh)
      fail(ErrorKind::ill_conditioned,
           what + ": relative singular value " + std::to_string(r) +
               " sits inside the (1e-11, 1e-7) guard band");
    if (r <= kZeroBandLow) ++zero;
  }
  return zero + (ncols - static_cast<int>(svals.size()));
}

struct CenterBasis {
  int dim = 0;
  std::vector<MatrixXcd> matrices;  // self-adjoint-closed spanning set
};

// Center of the algebra in lambda coordinates: coefficient vectors c with
// sum_g c_g lambda(g) commuting with lambda(h) for each generator h. Per
// basis vector delta_k this reads c_{k h^-1} sigma(k h^-1, h) =
// c_{h^-1 k} sigma(h, h^-1 k).
CenterBasis center_solve(const TwistedAlgebra& a) {
  const Group& g = a.group;
  const int n = static_cast<int>(g.order());

  std::vector<GroupElement> hs = small_generating_set(g);
  CenterBasis out;
  if (hs.empty()) {  // trivial group
    out.dim = n;
    for (int i = 0; i < n; ++i) out.matrices.push_back(a.lambda[static_cast<std::size_t>(i)]);
    return out;
  }

  MatrixXcd sys = MatrixXcd::Zero(static_cast<int>(hs.size()) * n, n);
  for (std::size_t t = 0; t < hs.size(); ++t) {
    const GroupElement& h = hs[t];
    GroupElement hinv = inverse(g, h);
    for (int k = 0; k < n; ++k) {
      GroupElement ek = element_by_index(g, static_cast<std::uint64_t>(k));
      GroupElement left = multiply(g, ek, hinv);
      GroupElement right = multiply(g, hinv, ek);
      int row = static_cast<int>(t) * n + k;
      sys(row, static_cast<int>(index_of(g, left))) += sigma_num(a, left, h);
      sys(row, static_cast<int>(index_of(g, right))) -= sigma_num(a, h, right);
    }
  }

  Eigen::BDCSVD<MatrixXcd> svd(sys, Eigen::ComputeFullV);
  std::vector<double> svals(svd.singularValues().data(),
                            svd.singularValues().data() + svd.singularValues().size());
  out.dim = count_null(svals, n, "center dimension of " + g.name());
  for (int i = 0; i < out.dim; ++i) {
    Eigen::VectorXcd coeff = svd.matrixV().col(n - 1 - i);
    MatrixXcd z = MatrixXcd::Zero(n, n);
    for (int k = 0; k < n; ++k) z += coeff(k) * a.lambda[static_cast<std::size_t>(k)];
    out.matrices.push_back(std::move(z));
  }
  return out;
}

// Sorted eigenvalues split where the gap is decisive; gaps inside the band
// between "same block" and "different block" are refused.
std::vector<std::pair<int, int>> cluster_ranges(const VectorXd& ev, const std::string& what) {
  const int n = static_cast<int>(ev.size());
  double scale = 1.0;
  for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(ev(i)));
  std::vector<std::pair<int, int>> out;
  int start = 0;
  for (int i = 1; i < n; ++i) {
    double gap = ev(i) - ev(i - 1);
    if (gap >= 1e-4 * scale) {
      out.emplace_back(start, i);
      start = i;
    } else if (gap > 1e-8 * scale) {
      fail(ErrorKind::ill_conditioned,
           what + ": eigenvalue gap " + std::to_string(gap) +
               " is too wide to merge and too narrow to split");
    }
  }
  out.emplace_back(start, n);
  return out;
}

struct BlockData {
  std::vector<int> sizes;            // n_b ascending
  std::vector<MatrixXcd> projections;  // aligned with sizes
};

// Isotypic decomposition via two independent random self-adjoint central
// combinations, jointly diagonalized. Each isotypic subspace has dimension
// n_b^2 in the regular representation.
BlockData block_solve(const TwistedAlgebra& a) {
  const Group& g = a.group;
  const int n = static_cast<int>(g.order());
  CenterBasis cb = center_solve(a);

  Prng rng(0xb10c);
  auto unit = [&rng]() { return static_cast<double>(rng.below(1u << 30)) / (1u << 29) - 1.0; };
  auto combo = [&](void) {
    MatrixXcd c = MatrixXcd::Zero(n, n);
    for (const MatrixXcd& z : cb.matrices) c += Cplx(unit(), unit()) * z;
    return MatrixXcd((c + c.adjoint()) / 2.0);
  };
  MatrixXcd c1 = combo();
  MatrixXcd c2 = combo();

  Eigen::SelfAdjointEigenSolver<MatrixXcd> es1(c1);
  std::vector<std::pair<MatrixXcd, int>> spaces;  // eigenvector block, size
  for (auto [lo, hi] : cluster_ranges(es1.eigenvalues(), "block separation of " + g.name())) {
    MatrixXcd q = es1.eigenvectors().middleCols(lo, hi - lo);
    MatrixXcd b = q.adjoint() * c2 * q;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es2((b + b.adjoint()) / 2.0);
    for (auto [l2, h2] :
         cluster_ranges(es2.eigenvalues(), "block separation of " + g.name())) {
      MatrixXcd qq = q * es2.eigenvectors().middleCols(l2, h2 - l2);
      spaces.emplace_back(std::move(qq), h2 - l2);
    }
  }

  if (static_cast<int>(spaces.size()) != cb.dim)
    fail(ErrorKind::ill_conditioned,
         "random central combinations separated " + std::to_string(spaces.size()) +
             " subspaces where the center has dimension " + std::to_string(cb.dim));

  BlockData out;
  std::vector<std::pair<int, MatrixXcd>> blocks;
  for (auto& [q, s] : spaces) {
    int nb = static_cast<int>(std::lround(std::sqrt(static_cast<double>(s))));
    if (nb * nb != s)
      fail(ErrorKind::ill_conditioned,
           "isotypic subspace of dimension " + std::to_string(s) +
               " is not a perfect square");
    blocks.emplace_back(nb, MatrixXcd(q * q.adjoint()));
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  int total = 0;
  for (auto& [nb, p] : blocks) {
    total += nb * nb;
    out.sizes.push_back(nb);
    out.projections.push_back(std::move(p));
  }
  if (total != n)
    fail(ErrorKind::internal_inconsistency, "block dimensions do not exhaust the algebra");
  return out;
}

}  // namespace

TwistedAlgebra build_twisted_algebra(const Group& g, const Cocycle& c,
                                     std::optional<double> theta_value) {
  if (!c.group().same_group(g))
    fail(ErrorKind::invalid_argument, "cocycle lives on a different group");
  const int n = static_cast<int>(checked_order(g));

  TwistedAlgebra a{g, c, theta_value, {}, 0.0};
  if (c.uses_theta() && !theta_value)
    fail(ErrorKind::missing_theta_value,
         "the cocycle involves the formal irrational; supply a numeric value to build "
         "matrices");

  a.lambda.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    GroupElement gi = element_by_index(g, static_cast<std::uint64_t>(i));
    MatrixXcd m = MatrixXcd::Zero(n, n);
    for (int h = 0; h < n; ++h) {
      GroupElement eh = element_by_index(g, static_cast<std::uint64_t>(h));
      int row = static_cast<int>(index_of(g, multiply(g, gi, eh)));
      m(row, h) = sigma_num(a, gi, eh);
    }
    a.lambda.push_back(std::move(m));
  }

  // unitarity, then multiplicativity lambda(g) lambda(h) = sigma(g,h) lambda(gh),
  // both measured on the matrices (exhaustive for small orders, sampled beyond)
  auto track = [&a](double d) { a.build_defect = std::max(a.build_defect, d); };
  for (int i = 0; i < n; ++i) {
    MatrixXcd u = a.lambda[static_cast<std::size_t>(i)] *
                  a.lambda[static_cast<std::size_t>(i)].adjoint();
    track((u - MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff());
  }
  std::vector<std::pair<int, int>> pairs;
  if (n <= 16) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) pairs.emplace_back(i, j);
  } else {
    Prng rng(0xfeed);
    for (int k = 0; k < 200; ++k)
      pairs.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                         static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
  }
  for (auto [i, j] : pairs) {
    GroupElement gi = element_by_index(g, static_cast<std::uint64_t>(i));
    GroupElement gj = element_by_index(g, static_cast<std::uint64_t>(j));
    int ij = static_cast<int>(index_of(g, multiply(g, gi, gj)));
    MatrixXcd diff = a.lambda[static_cast<std::size_t>(i)] * a.lambda[static_cast<std::size_t>(j)] -
                     sigma_num(a, gi, gj) * a.lambda[static_cast<std::size_t>(ij)];
    track(diff.cwiseAbs().maxCoeff());
  }
  if (a.build_defect > kBuildTol)
    fail(ErrorKind::internal_inconsistency,
         "regular representation failed its own algebra checks with deviation " +
             std::to_string(a.build_defect));
  return a;
}

int center_dimension(const TwistedAlgebra& a) { return center_solve(a).dim; }

std::vector<int> block_structure(const TwistedAlgebra& a) { return block_solve(a).sizes; }

TraceVector canonical_trace(const TwistedAlgebra& a) {
  const int n = static_cast<int>(a.group.order());
  TraceVector t;
  for (int i = 0; i < n; ++i)
    t.values.push_back(a.lambda[static_cast<std::size_t>(i)].trace() /
                       static_cast<double>(n));
  return t;
}

std::vector<TraceVector> extreme_traces(const TwistedAlgebra& a) {
  const int n = static_cast<int>(a.group.order());
  BlockData bd = block_solve(a);
  std::vector<std::pair<int, TraceVector>> rows;
  for (std::size_t b = 0; b < bd.sizes.size(); ++b) {
    TraceVector t;
    double s = static_cast<double>(bd.sizes[b]) * bd.sizes[b];
    for (int i = 0; i < n; ++i)
      t.values.push_back((bd.projections[b] * a.lambda[static_cast<std::size_t>(i)]).trace() /
                         s);
    rows.emplace_back(bd.sizes[b], std::move(t));
  }
  auto key = [](const Cplx& z) {
    return std::make_pair(std::llround(z.real() * 1e9), std::llround(z.imag() * 1e9));
  };
  std::sort(rows.begin(), rows.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    for (std::size_t i = 0; i < x.second.values.size(); ++i) {
      auto kx = key(x.second.values[i]), ky = key(y.second.values[i]);
      if (kx != ky) return kx < ky;
    }
    return false;
  });
  std::vector<TraceVector> out;
  for (auto& [nb, t] : rows) out.push_back(std::move(t));
  return out;
}

int invariant_trace_space_dim(const TwistedAlgebra& a) {
  const Group& g = a.group;
  const int n = static_cast<int>(g.order());

  MatrixXcd gram = MatrixXcd::Zero(n, n);
  auto accumulate = [&gram](int ia, Cplx ca, int ib, Cplx cb) {
    // rank-one update for the sparse row ca * e_ia + cb * e_ib
    if (ia == ib) {
      Cplx c = ca + cb;
      gram(ia, ia) += std::conj(c) * c;
      return;
    }
    gram(ia, ia) += std::conj(ca) * ca;
    gram(ib, ib) += std::conj(cb) * cb;
    gram(ia, ib) += std::conj(ca) * cb;
    gram(ib, ia) += std::conj(cb) * ca;
  };

  for (int i = 0; i < n; ++i) {
    GroupElement gi = element_by_index(g, static_cast<std::uint64_t>(i));
    for (int j = 0; j < n; ++j) {
      GroupElement gj = element_by_index(g, static_cast<std::uint64_t>(j));
      // traciality: sigma(g,h) v_{gh} = sigma(h,g) v_{hg}
      int ij = static_cast<int>(index_of(g, multiply(g, gi, gj)));
      int ji = static_cast<int>(index_of(g, multiply(g, gj, gi)));
      accumulate(ij, sigma_num(a, gi, gj), ji, -sigma_num(a, gj, gi));
      // invariance under gamma_g: sigma_tilde(g,h) v_{g h g^-1} = v_h
      int conj_idx = static_cast<int>(index_of(g, conjugate(g, gj, gi)));
      Cplx phase = sigma_tilde(a.cocycle, gi, gj).eval_numeric(a.theta_value);
      accumulate(conj_idx, phase, j, Cplx(-1.0, 0.0));
    }
  }

  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(gram);
  std::vector<double> svals;
  for (int i = 0; i < n; ++i) svals.push_back(std::sqrt(std::max(es.eigenvalues()(i), 0.0)));
  return count_null(svals, n, "invariant trace space of " + g.name());
}

void validate_trace(const TwistedAlgebra& a, const TraceVector& psi) {
  const Group& g = a.group;
  const int n = static_cast<int>(g.order());
  if (static_cast<int>(psi.values.size()) != n)
    fail(ErrorKind::invalid_trace, "trace vector length does not match the group order");
  int e = static_cast<int>(index_of(g, g.identity()));
  if (std::abs(psi.values[static_cast<std::size_t>(e)] - Cplx(1.0, 0.0)) > 1e-9)
    fail(ErrorKind::invalid_trace, "trace is not normalized at the identity");

  // traciality forces psi(h) = sigma_tilde(g,h) psi(g h g^-1)
  for (int i = 0; i < n; ++i) {
    GroupElement gi = element_by_index(g, static_cast<std::uint64_t>(i));
    for (int j = 0; j < n; ++j) {
      GroupElement gj = element_by_index(g, static_cast<std::uint64_t>(j));
      int cidx = static_cast<int>(index_of(g, conjugate(g, gj, gi)));
      Cplx phase = sigma_tilde(a.cocycle, gi, gj).eval_numeric(a.theta_value);
      if (std::abs(psi.values[static_cast<std::size_t>(j)] -
                   phase * psi.values[static_cast<std::size_t>(cidx)]) > 1e-9)
        fail(ErrorKind::invalid_trace,
             "trace is not constant on the twist-adjusted class of " + print_element(g, gj));
    }
  }

  // positivity through the Gram matrix psi(lambda(x) lambda(y)^*)
  MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i) {
    GroupElement gi = element_by_index(g, static_cast<std::uint64_t>(i));
    for (int j = 0; j < n; ++j) {
      GroupElement gj = element_by_index(g, static_cast<std::uint64_t>(j));
      GroupElement gjinv = inverse(g, gj);
      int idx = static_cast<int>(index_of(g, multiply(g, gi, gjinv)));
      Cplx phase = std::conj(sigma_num(a, gj, gjinv)) * sigma_num(a, gi, gjinv);
      m(i, j) = phase * psi.values[static_cast<std::size_t>(idx)];
    }
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es((m + m.adjoint()) / 2.0);
  double top = std::max(1.0, es.eigenvalues().maxCoeff());
  if (es.eigenvalues().minCoeff() < -1e-9 * top)
    fail(ErrorKind::invalid_trace, "trace fails positivity: Gram eigenvalue " +
                                       std::to_string(es.eigenvalues().minCoeff()));
}

double carey_moran_residual(const TwistedAlgebra& a, const TraceVector& psi,
                            const GroupElement& h, const std::vector<GroupElement>& g_list) {
  const Group& g = a.group;
  const int n = static_cast<int>(g.order());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!a.cocycle
               .value(element_by_index(g, static_cast<std::uint64_t>(i)),
                      element_by_index(g, static_cast<std::uint64_t>(j)))
               .is_identity())
        fail(ErrorKind::invalid_argument,
             "the averaged-unitary expansion is stated for untwisted group algebras");
  for (std::size_t i = 0; i < g_list.size(); ++i)
    for (std::size_t j = i + 1; j < g_list.size(); ++j)
      if (g_list[i] == g_list[j])
        fail(ErrorKind::invalid_argument, "conjugating elements must be distinct");
  validate_trace(a, psi);

  auto at = [&](const GroupElement& x) {
    return psi.values[static_cast<std::size_t>(index_of(g, x))];
  };
  const int big_n = static_cast<int>(g_list.size());
  Cplx c = at(h);

  MatrixXcd s = MatrixXcd::Zero(n, n);
  for (const GroupElement& gi : g_list)
    s += a.lambda[static_cast<std::size_t>(index_of(g, conjugate(g, h, gi)))];
  MatrixXcd an = MatrixXcd::Identity(n, n) - std::conj(c) * s;
  MatrixXcd x = an.adjoint() * an;

  // read psi off the matrix through the lambda-coefficients of x
  Cplx direct = 0.0;
  for (int i = 0; i < n; ++i) {
    Cplx coeff = (a.lambda[static_cast<std::size_t>(i)].adjoint() * x).trace() /
                 static_cast<double>(n);
    direct += coeff * psi.values[static_cast<std::size_t>(i)];
  }

  Cplx cross = 0.0;
  GroupElement hinv = inverse(g, h);
  for (int j = 0; j < big_n; ++j)
    for (int i = 0; i < big_n; ++i) {
      if (i == j) continue;
      cross += at(multiply(g, conjugate(g, hinv, g_list[static_cast<std::size_t>(j)]),
                           conjugate(g, h, g_list[static_cast<std::size_t>(i)])));
    }
  Cplx formula = 1.0 - static_cast<double>(big_n) * std::norm(c) + std::norm(c) * cross;
  return std::abs(direct - formula);
}

double conjugation_identity_defect(const TwistedAlgebra& a, const GroupElement& g,
                                   const GroupElement& h) {
  const Group& grp = a.group;
  const auto& lg = a.lambda[static_cast<std::size_t>(index_of(grp, g))];
  const auto& lh = a.lambda[static_cast<std::size_t>(index_of(grp, h))];
  const auto& lc = a.lambda[static_cast<std::size_t>(index_of(grp, conjugate(grp, h, g)))];
  Cplx phase = sigma_tilde(a.cocycle, g, h).eval_numeric(a.theta_value);
  MatrixXcd diff = lg * lh * lg.adjoint() - phase * lc;
  Eigen::BDCSVD<MatrixXcd> svd(diff);
  return svd.singularValues().size() == 0 ? 0.0 : svd.singularValues()(0);
}

}  // namespace twistlab
