// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "csalg/linalg.hpp"
#include "csalg/rational.hpp"

namespace csalg {

/// A coefficient vector over an algebra's basis.
struct Element {
  Vec coeffs;

  Element() = default;
  explicit Element(Vec c) : coeffs(std::move(c)) {}
  static Element zero(std::size_t dim) { return Element(zero_vec(dim)); }
  static Element basis(std::size_t dim, std::size_t i) { return Element(unit_vec(dim, i)); }

  std::size_t dim() const { return coeffs.size(); }
  bool is_zero() const { return csalg::is_zero(coeffs); }

  friend Element operator+(const Element& a, const Element& b) { return Element(a.coeffs + b.coeffs); }
  friend Element operator-(const Element& a, const Element& b) { return Element(a.coeffs - b.coeffs); }
  friend Element operator*(const Rational& s, const Element& a) { return Element(s * a.coeffs); }
  friend bool operator==(const Element&, const Element&) = default;
};

class AssociativityError : public std::runtime_error {
 public:
  AssociativityError(std::size_t i, std::size_t j, std::size_t k, Vec left, Vec right);
  std::size_t i, j, k;
  Vec left_product;   // (b_i b_j) b_k
  Vec right_product;  // b_i (b_j b_k)
};

class UnitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GroupTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite group given by its Cayley table: cayley[g][h] is the index of gh.
class FiniteGroup {
 public:
  /// Validates the Latin-square property, the identity, and associativity.
  FiniteGroup(std::vector<std::vector<std::size_t>> cayley, std::size_t identity);

  static FiniteGroup cyclic(std::size_t n);
  /// Dihedral group of the regular n-gon, order 2n. Element r^a s^b has index a + n*b.
  static FiniteGroup dihedral(std::size_t n);
  /// Symmetric group on n points; elements ordered lexicographically as permutations.
  static FiniteGroup symmetric(std::size_t n);

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t g, std::size_t h) const { return table_[g][h]; }
  std::size_t inverse(std::size_t g) const;
  const std::vector<std::vector<std::size_t>>& cayley() const { return table_; }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_;
};

/// Finite-dimensional associative algebra over Q given by structure
/// constants: b_i b_j = sum_k c(i,j,k) b_k.
class FinAlgebra {
 public:
  /// `constants` is the flattened tensor, index (i*dim + j)*dim + k.
  /// Throws AssociativityError / UnitError when the invariants fail.
  FinAlgebra(std::size_t dim, std::vector<Rational> constants, std::optional<Vec> unit = std::nullopt,
             std::vector<std::string> labels = {}, std::string name = {});

  std::size_t dim() const { return dim_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<Rational>& constants() const { return c_; }
  const std::optional<Vec>& unit() const { return unit_; }
  bool is_unital() const { return unit_.has_value(); }
  Element one() const;
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  std::string label(std::size_t i) const;
  bool is_commutative() const;

  /// b_i b_j as a coefficient vector.
  Vec basis_product(std::size_t i, std::size_t j) const;

  Vec multiply(const Vec& x, const Vec& y) const;
  Element multiply(const Element& x, const Element& y) const;
  Element commutator(const Element& x, const Element& y) const;

  /// Matrix of y -> xy (Left) or y -> yx (Right) acting on coefficient columns.
  enum class Side { Left, Right };
  Mat mult_operator(const Vec& x, Side side) const;
  Mat mult_operator(const Element& x, Side side) const { return mult_operator(x.coeffs, side); }

  /// Structural equality of the tensor and unit (labels and name ignored).
  bool same_structure(const FinAlgebra& other) const;

 private:
  void check_element(const Vec& x) const;
  void validate() const;

  std::size_t dim_;
  std::vector<Rational> c_;
  std::optional<Vec> unit_;
  std::vector<std::string> labels_;
  std::string name_;
};

/// Builds the flattened constants tensor from a product callback.
template <class F>
std::vector<Rational> tabulate_constants(std::size_t dim, F&& product) {
  std::vector<Rational> c(dim * dim * dim, Rational(0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Vec p = product(i, j);
      for (std::size_t k = 0; k < dim; ++k) c[(i * dim + j) * dim + k] = p[k];
    }
  return c;
}

/// M_n(Q) with matrix units e_pq at index p*n + q.
FinAlgebra build_matrix_algebra(std::size_t n);
FinAlgebra build_group_algebra(const FiniteGroup& g, std::string name = "Q[G]");
/// Upper-triangular n x n matrices; basis e_pq (p <= q) in lexicographic order.
FinAlgebra build_upper_triangular(std::size_t n);
FinAlgebra direct_product(const FinAlgebra& a, const FinAlgebra& b);
/// Basis b_i (x) b'_j at index i*dim(b) + j.
FinAlgebra tensor_product(const FinAlgebra& a, const FinAlgebra& b);
/// New unit at index 0, old basis shifted by one.
FinAlgebra adjoin_unit(const FinAlgebra& a);
/// dim-dimensional algebra with identically zero product.
FinAlgebra zero_algebra(std::size_t dim);

Subspace center(const FinAlgebra& a);

/// Index of an n x n matrix unit e_pq in build_matrix_algebra(n).
inline std::size_t matrix_unit(std::size_t n, std::size_t p, std::size_t q) { return p * n + q; }

/// Quotient a/I by a two-sided ideal, on the complement coordinates
/// I.free_columns() (in order). Throws std::invalid_argument if I is not an ideal.
FinAlgebra quotient(const FinAlgebra& a, const Subspace& ideal);

/// AI ⊆ I and IA ⊆ I.
bool is_ideal(const FinAlgebra& a, const Subspace& s);

/// span{ x y : x in s, y in t } as a subspace of the algebra.
Subspace product_space(const FinAlgebra& a, const Subspace& s, const Subspace& t);

}  // namespace csalg
