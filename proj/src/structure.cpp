// SPDX-License-Identifier: Apache-2.0
#include "csalg/structure.hpp"

#include "csalg/random.hpp"

namespace csalg {

Subspace commutator_subspace(const FinAlgebra& a) {
  const std::size_t n = a.dim();
  EchelonBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b.add(a.basis_product(i, j) - a.basis_product(j, i));
  return b.row_space();
}

Subspace square_subspace(const FinAlgebra& a) {
  const std::size_t n = a.dim();
  EchelonBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.add(a.basis_product(i, j));
  return b.row_space();
}

Subspace largest_ideal_within(const FinAlgebra& a, const Subspace& v) {
  const std::size_t n = a.dim();
  if (v.ambient_dim() != n) throw DimensionError("subspace does not live in the algebra");
  std::vector<Mat> left, right;
  for (std::size_t i = 0; i < n; ++i) {
    left.push_back(a.mult_operator(unit_vec(n, i), FinAlgebra::Side::Left));
    right.push_back(a.mult_operator(unit_vec(n, i), FinAlgebra::Side::Right));
  }
  Subspace current = v;
  while (!current.is_zero()) {
    // x = B^T c stays in V_t under every L_{b_i}, R_{b_i}: Q L B^T c = 0.
    const Mat q = current.quotient_projection();
    const Mat bt = current.basis_matrix().transpose();
    EchelonBuilder constraints(current.dim());
    for (std::size_t i = 0; i < n; ++i) {
      for (const Mat* op : {&left[i], &right[i]}) {
        const Mat rows = q * (*op) * bt;
        for (std::size_t r = 0; r < rows.rows(); ++r) constraints.add(rows.row(r));
      }
    }
    if (constraints.rank() == 0) break;
    const Subspace coeffs = constraints.kernel();
    std::vector<Vec> gens;
    for (const auto& c : coeffs.basis()) gens.push_back(bt * c);
    current = Subspace::span(n, gens);
  }
  return current;
}

CommutatorSimplicity is_commutator_simple(const FinAlgebra& a) {
  CommutatorSimplicity out;
  out.commutators = commutator_subspace(a);
  Subspace ideal = largest_ideal_within(a, out.commutators);
  out.simple = ideal.is_zero();
  if (!out.simple)
    out.witness = IdealWitness{std::move(ideal), "A*I ⊆ I, I*A ⊆ I, I ⊆ [A,A] (largest such ideal)"};
  return out;
}

namespace {

Subspace unital_radical(const FinAlgebra& a) {
  const std::size_t n = a.dim();
  Vec tr = zero_vec(n);  // tr L_{b_m}
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t j = 0; j < n; ++j) tr[m] += a.c(m, j, j);
  EchelonBuilder rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec row = zero_vec(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t m = 0; m < n; ++m)
        if (a.c(k, i, m) != 0 && tr[m] != 0) row[k] += a.c(k, i, m) * tr[m];
    rows.add(std::move(row));
  }
  return rows.kernel();
}

}  // namespace

Subspace radical(const FinAlgebra& a) {
  if (a.is_unital()) return unital_radical(a);
  const std::size_t n = a.dim();
  const Subspace big = unital_radical(adjoin_unit(a));
  std::vector<Vec> gens;
  for (const auto& v : big.basis()) {
    // The radical of the unitization lies in the embedded copy (coordinate 0 vanishes).
    gens.emplace_back(v.begin() + 1, v.end());
  }
  return Subspace::span(n, gens);
}

bool is_semiprime(const FinAlgebra& a) { return radical(a).is_zero(); }

std::vector<Subspace> power_chain(const FinAlgebra& a, const Subspace& ideal) {
  std::vector<Subspace> chain{ideal};
  while (!chain.back().is_zero()) {
    Subspace next = product_space(a, ideal, chain.back());
    if (next == chain.back()) break;
    chain.push_back(std::move(next));
  }
  return chain;
}

Rational TraceFunctional::operator()(const Vec& v) const {
  if (!domain.contains(v)) throw std::invalid_argument("trace functional evaluated outside A^2");
  Rational s = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) s += v[domain.pivots()[k]] * coeffs[k];
  return s;
}

bool satisfies_trace_identity(const FinAlgebra& a, const TraceFunctional& t) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (t(a.basis_product(i, j)) != t(a.basis_product(j, i))) return false;
  return true;
}

std::vector<TraceFunctional> trace_functional_space(const FinAlgebra& a) {
  const Subspace dom = square_subspace(a);
  const Subspace comm = commutator_subspace(a);
  EchelonBuilder rows(dom.dim());
  for (const auto& w : comm.basis()) {
    Vec row(dom.dim());
    for (std::size_t k = 0; k < dom.dim(); ++k) row[k] = w[dom.pivots()[k]];
    rows.add(std::move(row));
  }
  std::vector<TraceFunctional> out;
  const Subspace solutions = rows.kernel();
  for (const auto& c : solutions.basis()) out.push_back(TraceFunctional{c, dom});
  return out;
}

Mat trace_gram(const FinAlgebra& a, const TraceFunctional& t) {
  const std::size_t n = a.dim();
  Mat g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = t(a.basis_product(i, j));
  return g;
}

bool is_nondegenerate_trace(const FinAlgebra& a, const TraceFunctional& t) {
  if (!satisfies_trace_identity(a, t)) throw std::invalid_argument("functional does not satisfy tau(xy) = tau(yx)");
  // x with tau(x b_j) = sum_i x_i G_ij = 0 for all j.
  return kernel(trace_gram(a, t).transpose()).is_zero();
}

TraceFunctional functional_from_basis_values(const FinAlgebra& a, const Vec& values) {
  if (values.size() != a.dim()) throw DimensionError("functional needs one value per basis element");
  const Subspace dom = square_subspace(a);
  if (dom.dim() != a.dim()) throw std::invalid_argument("A^2 != A; give values on the A^2 basis instead");
  return TraceFunctional{values, dom};
}

TraceSearch has_nondegenerate_trace(const FinAlgebra& a, std::uint64_t seed, std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  const auto space = trace_functional_space(a);
  TraceSearch out;

  EchelonBuilder common(a.dim());
  for (const auto& t : space) {
    const Mat gt = trace_gram(a, t).transpose();
    for (std::size_t r = 0; r < gt.rows(); ++r) common.add(gt.row(r));
  }
  const Subspace shared = common.kernel();
  if (!shared.is_zero()) {
    out.outcome = TraceSearch::Outcome::DefiniteNegative;
    out.common_radical_vector = shared.basis().front();
    return out;
  }

  if (space.empty()) {  // only the zero algebra gets here
    out.outcome = TraceSearch::Outcome::Found;
    out.found = TraceFunctional{{}, square_subspace(a)};
    return out;
  }
  RationalSampler rng(seed);
  const Subspace& dom = space.front().domain;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const Vec mix = rng.nonzero_integer_vector(space.size(), 5);
    Vec coeffs = zero_vec(dom.dim());
    for (std::size_t s = 0; s < space.size(); ++s) axpy(coeffs, mix[s], space[s].coeffs);
    TraceFunctional t{std::move(coeffs), dom};
    out.trials_used = trial + 1;
    if (kernel(trace_gram(a, t).transpose()).is_zero()) {
      out.outcome = TraceSearch::Outcome::Found;
      out.found = std::move(t);
      return out;
    }
  }
  out.outcome = TraceSearch::Outcome::Inconclusive;
  return out;
}

}  // namespace csalg
