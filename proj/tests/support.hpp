// SPDX-License-Identifier: Apache-2.0
// Shared fixtures, random generators, and independent oracles for the tests.
#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "csalg/algebra.hpp"
#include "csalg/linalg.hpp"
#include "csalg/maps.hpp"
#include "csalg/random.hpp"

namespace csalg::test {

inline FinAlgebra qc2() { return build_group_algebra(FiniteGroup::cyclic(2), "QC2"); }
inline FinAlgebra qs3() { return build_group_algebra(FiniteGroup::symmetric(3), "QS3"); }
inline FinAlgebra qd4() { return build_group_algebra(FiniteGroup::dihedral(4), "QD4"); }

struct Named {
  std::string name;
  FinAlgebra algebra;
};

/// The algebras every property suite runs over.
inline std::vector<Named> corpus() {
  return {
      {"M2", build_matrix_algebra(2)},
      {"M3", build_matrix_algebra(3)},
      {"QC2", qc2()},
      {"QS3", qs3()},
      {"QD4", qd4()},
      {"M2xQC2", direct_product(build_matrix_algebra(2), qc2())},
      {"M2(x)QC2", tensor_product(build_matrix_algebra(2), qc2())},
      {"T2", build_upper_triangular(2)},
      {"T3", build_upper_triangular(3)},
      {"T2+1", adjoin_unit(build_upper_triangular(2))},
      {"M2xT2", direct_product(build_matrix_algebra(2), build_upper_triangular(2))},
      {"Z1+1", adjoin_unit(zero_algebra(1))},
      {"Z2", zero_algebra(2)},
  };
}

inline bool is_semiprime_family(const std::string& name) {
  return name == "M2" || name == "M3" || name == "QC2" || name == "QS3" || name == "QD4" || name == "M2xQC2" ||
         name == "M2(x)QC2";
}

/// Number of conjugacy classes, straight from the Cayley table.
inline std::size_t conjugacy_class_count(const FiniteGroup& g) {
  std::set<std::set<std::size_t>> classes;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::set<std::size_t> cls;
    for (std::size_t h = 0; h < g.order(); ++h) cls.insert(g.mul(g.mul(h, x), g.inverse(h)));
    classes.insert(cls);
  }
  return classes.size();
}

/// Class sums of G as elements of Q[G].
inline std::vector<Vec> class_sums(const FiniteGroup& g) {
  std::set<std::set<std::size_t>> classes;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::set<std::size_t> cls;
    for (std::size_t h = 0; h < g.order(); ++h) cls.insert(g.mul(g.mul(h, x), g.inverse(h)));
    classes.insert(cls);
  }
  std::vector<Vec> out;
  for (const auto& cls : classes) {
    Vec v = zero_vec(g.order());
    for (auto x : cls) v[x] = 1;
    out.push_back(v);
  }
  return out;
}

/// Structure constants of a in the basis given by the columns of p (invertible).
inline FinAlgebra rebase(const FinAlgebra& a, const Mat& p) {
  const std::size_t n = a.dim();
  Mat inv(n, n);
  for (std::size_t c = 0; c < n; ++c) inv.set_col(c, solve_affine(p, unit_vec(n, c))->particular);
  auto consts = tabulate_constants(n, [&](std::size_t i, std::size_t j) {
    return inv * a.multiply(p.col(i), p.col(j));
  });
  std::optional<Vec> unit;
  if (a.unit()) unit = inv * *a.unit();
  return FinAlgebra(n, std::move(consts), std::move(unit), {}, a.name() + "'");
}

inline Mat random_invertible(RationalSampler& rng, std::size_t n) {
  for (;;) {
    Mat p(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) p(r, c) = static_cast<long>(rng.integer(-2, 2));
    if (rank(p) == n) return p;
  }
}

/// Subalgebra of a generated by gens, with structure constants on its own
/// canonical basis. Unital when the closure contains a's unit.
inline FinAlgebra subalgebra_generated(const FinAlgebra& a, const std::vector<Vec>& gens) {
  const std::size_t n = a.dim();
  Subspace s = Subspace::span(n, gens);
  for (;;) {
    std::vector<Vec> more = s.basis();
    for (const auto& x : s.basis())
      for (const auto& y : s.basis()) more.push_back(a.multiply(x, y));
    Subspace next = Subspace::span(n, more);
    if (next == s) break;
    s = std::move(next);
  }
  const std::size_t d = s.dim();
  auto consts = tabulate_constants(d, [&](std::size_t i, std::size_t j) {
    return s.coordinates(a.multiply(s.basis()[i], s.basis()[j]));
  });
  std::optional<Vec> unit;
  if (a.unit() && s.contains(*a.unit())) unit = s.coordinates(*a.unit());
  return FinAlgebra(d, std::move(consts), std::move(unit), {}, "sub(" + a.name() + ")");
}

/// A random associative algebra of dimension <= 9: a re-based corpus member,
/// a subalgebra of T3 or M3 generated by random elements, or a small product.
inline FinAlgebra random_algebra(RationalSampler& rng) {
  switch (rng.integer(0, 4)) {
    case 0: {
      const std::vector<FinAlgebra> seeds{build_matrix_algebra(2), build_upper_triangular(2),
                                          build_upper_triangular(3), qs3(), qc2(),
                                          adjoin_unit(build_upper_triangular(2))};
      const auto& a = seeds[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(seeds.size()) - 1))];
      return rebase(a, random_invertible(rng, a.dim()));
    }
    case 1: {
      const FinAlgebra t3 = build_upper_triangular(3);
      std::vector<Vec> gens;
      for (int k = 0, m = static_cast<int>(rng.integer(1, 2)); k < m; ++k) {
        Vec v(t3.dim());
        for (auto& x : v) x = static_cast<long>(rng.integer(-1, 1));
        gens.push_back(v);
      }
      return subalgebra_generated(t3, gens);
    }
    case 2: {
      const FinAlgebra m3 = build_matrix_algebra(3);
      Vec v = zero_vec(9);
      // a random strictly upper / diagonal mix keeps the closure small
      for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = p; q < 3; ++q) v[matrix_unit(3, p, q)] = static_cast<long>(rng.integer(-2, 2));
      return subalgebra_generated(m3, {v});
    }
    case 3:
      return direct_product(build_upper_triangular(2), rng.integer(0, 1) ? qc2() : build_matrix_algebra(2));
    default:
      return adjoin_unit(rebase(build_upper_triangular(2), random_invertible(rng, 3)));
  }
}

/// Random element of a subspace (integer combination of its basis).
inline Vec random_member(RationalSampler& rng, const Subspace& s) {
  Vec v = zero_vec(s.ambient_dim());
  for (const auto& b : s.basis()) axpy(v, Rational(static_cast<long>(rng.integer(-3, 3))), b);
  return v;
}

}  // namespace csalg::test
