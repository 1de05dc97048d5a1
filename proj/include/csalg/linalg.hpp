// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "csalg/rational.hpp"

namespace csalg {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major rational matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_col(std::size_t c, const Vec& v);
  std::vector<Vec> row_list() const;

  Mat transpose() const;
  Vec operator*(const Vec& v) const;
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Rational& s, const Mat& m);
  friend bool operator==(const Mat& a, const Mat& b) = default;

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

/// A subspace of Q^n, stored as its reduced row echelon basis. Two equal
/// subspaces always have identical representations, so operator== is
/// structural.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& generators);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vec>& basis() const& { return basis_; }
  std::vector<Vec> basis() && { return std::move(basis_); }
  const std::vector<std::size_t>& pivots() const& { return pivots_; }
  std::vector<std::size_t> pivots() && { return std::move(pivots_); }
  /// Coordinates not carrying a pivot; their count is the codimension.
  std::vector<std::size_t> free_columns() const;

  /// v minus its component along the basis pivots; zero iff v lies in the span.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;

  /// Matrix Q (codim x n) whose kernel is exactly this subspace:
  /// Q·v = free-column entries of reduce(v).
  Mat quotient_projection() const;

  /// Matrix whose rows are the basis (dim x n).
  Mat basis_matrix() const;

  /// Coefficients c with v = sum c_k basis_k; requires contains(v).
  Vec coordinates(const Vec& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend class EchelonBuilder;
  std::size_t ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& v, const Subspace& w);
Subspace intersect(const Subspace& v, const Subspace& w);
/// w ⊆ v
bool contains(const Subspace& v, const Subspace& w);
bool equal(const Subspace& v, const Subspace& w);

/// Null space {x : m·x = 0}.
Subspace kernel(const Mat& m);

/// Column space of m as a subspace of Q^{rows}.
Subspace image(const Mat& m);

struct AffineSolution {
  Vec particular;
  Subspace kernel;
};

/// Solves m·x = b. nullopt means the system is infeasible.
std::optional<AffineSolution> solve_affine(const Mat& m, const Vec& b);

/// Incremental row reduction. Rows are added one at a time and kept in
/// reduced echelon form, so large over-determined constraint systems never
/// have to be materialized.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t cols) : space_(cols) {}

  /// Returns true when the row increased the rank.
  bool add(Vec row);
  std::size_t rank() const { return space_.dim(); }
  std::size_t cols() const { return space_.ambient_dim(); }
  const Subspace& row_space() const { return space_; }
  /// Null space of the accumulated rows.
  Subspace kernel() const;

 private:
  Subspace space_;
};

}  // namespace csalg
