// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csalg/algebra.hpp"
#include "csalg/linalg.hpp"

namespace csalg {

/// Linear self-map of an algebra; acts on coefficient columns, x -> matrix * x.
struct LinearMap {
  Mat matrix;

  LinearMap() = default;
  explicit LinearMap(Mat m);

  static LinearMap identity(std::size_t dim) { return LinearMap(Mat::identity(dim)); }
  static LinearMap zero(std::size_t dim) { return LinearMap(Mat(dim, dim)); }
  /// Row-major dim x dim entries.
  static LinearMap from_flat(std::size_t dim, const Vec& flat);
  /// x -> x^t on build_matrix_algebra(n).
  static LinearMap transpose_on_matrices(std::size_t n);
  /// x -> [x, m] = xm - mx.
  static LinearMap inner_derivation(const FinAlgebra& a, const Element& m);
  /// x -> g x g^{-1} on build_group_algebra(G).
  static LinearMap group_conjugation(const FiniteGroup& g, std::size_t by);

  std::size_t dim() const { return matrix.rows(); }
  Vec flat() const;
  Element operator()(const Element& x) const { return Element(matrix * x.coeffs); }
  Vec operator()(const Vec& x) const { return matrix * x; }
  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

/// Subspace of the dim^2-dimensional space of linear maps (row-major flattening).
struct MapSpace {
  std::size_t algebra_dim = 0;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  bool contains(const LinearMap& d) const { return space.contains(d.flat()); }
  std::vector<LinearMap> basis_maps() const;
  friend bool operator==(const MapSpace&, const MapSpace&) = default;
};

MapSpace derivation_space(const FinAlgebra& a);
MapSpace inner_derivation_space(const FinAlgebra& a);
MapSpace jordan_derivation_space(const FinAlgebra& a);
/// Maps with D(x)x and D(x)x^2 in [A,A] for all x, via polarization.
MapSpace theorem31_hypothesis_space(const FinAlgebra& a);

/// Basis pair where D(b_i b_j) != D(b_i) b_j + b_i D(b_j), if any.
std::optional<std::pair<std::size_t, std::size_t>> leibniz_violation(const FinAlgebra& a, const LinearMap& d);

struct Witness {
  std::string description;
  std::vector<std::pair<std::string, Vec>> elements;
  std::optional<LinearMap> map;
};

enum class Verdict { Verified, HypothesesNotMet, Refutation };
std::string to_string(Verdict v);

struct VerificationReport {
  struct Check {
    std::string name;
    bool met = false;
    std::string detail;
  };
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::size_t>> spaces;
  /// Extra facts recorded alongside the verdict (e.g. homomorphism = false).
  std::vector<std::pair<std::string, bool>> facts;
  Verdict verdict = Verdict::HypothesesNotMet;
  std::optional<Witness> witness;

  std::optional<std::size_t> space_dim(const std::string& name) const;
  std::optional<bool> fact(const std::string& name) const;
};

VerificationReport verify_theorem31(const FinAlgebra& a);

/// Some m with [x, m] = d(x), or nullopt.
std::optional<Element> pointwise_inner_witness(const FinAlgebra& a, const LinearMap& d, const Element& x);

/// Whether d(x) = E(x) for some derivation E (affine feasibility over Der(A)).
bool agrees_with_some_derivation(const FinAlgebra& a, const MapSpace& der, const LinearMap& d, const Element& x);

struct LocalTestResult {
  bool pass = true;
  std::optional<Element> counterexample;
  std::size_t points_checked = 0;
};

/// Sampled local-derivation test. Points are visited in the order: unit (when
/// present), basis elements, then `samples` seeded random elements. A pass
/// certifies only the visited points.
LocalTestResult local_derivation_test(const FinAlgebra& a, const LinearMap& d, std::uint64_t seed,
                                      std::size_t samples);

struct PairCheck {
  bool holds = true;
  std::optional<std::pair<Element, Element>> witness;
};

struct TripleCheck {
  bool holds = true;
  std::optional<std::array<Element, 3>> witness;
};

/// T(xy + yx) = T(x)T(y) + T(y)T(x); the unit pair (when present) is tried
/// first, then basis pairs i <= j.
PairCheck jordan_homomorphism_check(const FinAlgebra& a, const LinearMap& t);

enum class Multiplicativity { Homomorphism, Antihomomorphism };
PairCheck multiplicativity_check(const FinAlgebra& a, const LinearMap& t, Multiplicativity mode);

/// Polarized form of T(x)^3 - x^3 in [A,A] over basis triples i <= j <= k
/// (unit triple first when present).
TripleCheck cubic_condition_check(const FinAlgebra& a, const LinearMap& t);

VerificationReport verify_theorem41(const FinAlgebra& a, const LinearMap& t);

struct IntertwinerResult {
  enum class Status { Witness, Infeasible, Inconclusive };
  Status status = Status::Inconclusive;
  std::optional<Element> u;      // invertible, u x = t(x) u
  std::size_t intertwiner_dim = 0;
};

/// Searches for invertible u with t(x) = u x u^{-1}.
IntertwinerResult intertwiner_witness(const FinAlgebra& a, const LinearMap& t, const Element& x, std::uint64_t seed,
                                      std::size_t invertibility_trials);

struct InnerAutoSample {
  Element x;
  IntertwinerResult result;
};

/// Local inner automorphism test over unit, basis, and `samples` random points.
std::vector<InnerAutoSample> local_inner_automorphism_test(const FinAlgebra& a, const LinearMap& t, std::uint64_t seed,
                                                           std::size_t samples, std::size_t invertibility_trials);

bool is_invertible(const FinAlgebra& a, const Element& u);

}  // namespace csalg
