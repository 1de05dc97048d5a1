// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csalg/algebra.hpp"
#include "csalg/linalg.hpp"

namespace csalg {

/// span{ b_i b_j - b_j b_i }.
Subspace commutator_subspace(const FinAlgebra& a);

/// A^2 = span{ b_i b_j }.
Subspace square_subspace(const FinAlgebra& a);

/// The largest two-sided ideal contained in v, by the decreasing fixed point
/// V_{t+1} = { x in V_t : b_i x, x b_i in V_t for all i }.
Subspace largest_ideal_within(const FinAlgebra& a, const Subspace& v);

struct IdealWitness {
  Subspace ideal;
  std::string certificate;
};

struct CommutatorSimplicity {
  bool simple = false;
  Subspace commutators;
  std::optional<IdealWitness> witness;  // set iff !simple
};

CommutatorSimplicity is_commutator_simple(const FinAlgebra& a);

/// Nilpotent radical. For unital algebras: { x : tr L_{x b_i} = 0 for all i }
/// (valid in characteristic zero); otherwise computed in the unitization and
/// pulled back.
Subspace radical(const FinAlgebra& a);
bool is_semiprime(const FinAlgebra& a);

/// Powers rad, rad^2, ... down to (and including) the zero subspace, or
/// until they stop shrinking.
std::vector<Subspace> power_chain(const FinAlgebra& a, const Subspace& ideal);

/// Linear functional on A^2. coeffs[k] is the value on the k-th reduced
/// basis vector of `domain`, so tau(v) = sum_k v[pivot_k] * coeffs[k].
struct TraceFunctional {
  Vec coeffs;
  Subspace domain;

  Rational operator()(const Vec& v) const;
};

/// Checks tau(b_i b_j) = tau(b_j b_i) for all basis pairs.
bool satisfies_trace_identity(const FinAlgebra& a, const TraceFunctional& t);

/// Basis of all trace functionals on A^2.
std::vector<TraceFunctional> trace_functional_space(const FinAlgebra& a);

/// Gram matrix G_ij = tau(b_i b_j).
Mat trace_gram(const FinAlgebra& a, const TraceFunctional& t);

/// tau(xA) = 0 implies x = 0. Throws std::invalid_argument when t is not a trace.
bool is_nondegenerate_trace(const FinAlgebra& a, const TraceFunctional& t);

/// Functional given by its values on the basis of A (only meaningful when
/// A^2 = A, e.g. unital algebras).
TraceFunctional functional_from_basis_values(const FinAlgebra& a, const Vec& values);

struct TraceSearch {
  enum class Outcome { Found, DefiniteNegative, Inconclusive };
  Outcome outcome = Outcome::Inconclusive;
  std::optional<TraceFunctional> found;
  /// Nonzero x with tau(xA) = 0 for every trace functional (definite negative only).
  std::optional<Vec> common_radical_vector;
  std::size_t trials_used = 0;
};

/// Seeded random search for a nondegenerate trace functional.
TraceSearch has_nondegenerate_trace(const FinAlgebra& a, std::uint64_t seed, std::size_t trials);

}  // namespace csalg
