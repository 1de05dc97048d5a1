// SPDX-License-Identifier: Apache-2.0
#include "csalg/linalg.hpp"

#include <algorithm>

namespace csalg {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Mat::set_col(std::size_t c, const Vec& v) {
  if (v.size() != rows_) throw DimensionError("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

std::vector<Vec> Mat::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Mat::operator*(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  Vec out = zero_vec(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& x = (*this)(r, c);
      if (x != 0) out[r] += x * v[c];
    }
  }
  return out;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
  Mat out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (y != 0) out(i, j) += x * y;
      }
    }
  return out;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum size mismatch");
  Mat out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += b.a_[i];
  return out;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference size mismatch");
  Mat out = a;
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
  return out;
}

Mat operator*(const Rational& s, const Mat& m) {
  Mat out = m;
  for (auto& x : out.a_) x *= s;
  return out;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

RrefResult rref(const Mat& m) {
  RrefResult res{m, {}, 0};
  Mat& a = res.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(piv, c), a(row, c));
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c)
        if (a(row, c) != 0) a(r, c) -= f * a(row, c);
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = res.pivots.size();
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

// ---------------------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& generators) {
  EchelonBuilder b(ambient_dim);
  for (const auto& g : generators) b.add(g);
  return b.row_space();
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vec(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c)
      ++k;
    else
      out.push_back(c);
  }
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionError("vector does not match subspace ambient dimension");
  Vec r = v;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (r[pivots_[k]] == 0) continue;
    const Rational f = r[pivots_[k]];
    axpy(r, -f, basis_[k]);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return csalg::is_zero(reduce(v)); }

Mat Subspace::quotient_projection() const {
  const auto free = free_columns();
  Mat q(free.size(), ambient_);
  for (std::size_t f = 0; f < free.size(); ++f) {
    q(f, free[f]) = 1;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Rational& x = basis_[k][free[f]];
      if (x != 0) q(f, pivots_[k]) = -x;
    }
  }
  return q;
}

Mat Subspace::basis_matrix() const { return Mat::from_rows(basis_, ambient_); }

Vec Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) throw std::invalid_argument("vector is not in the subspace");
  Vec c(basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

bool EchelonBuilder::add(Vec row) {
  if (row.size() != space_.ambient_) throw DimensionError("row length mismatch");
  row = space_.reduce(row);
  std::size_t p = 0;
  while (p < row.size() && row[p] == 0) ++p;
  if (p == row.size()) return false;
  const Rational inv = 1 / row[p];
  for (std::size_t c = p; c < row.size(); ++c)
    if (row[c] != 0) row[c] *= inv;
  for (auto& b : space_.basis_)
    if (b[p] != 0) {
      const Rational f = b[p];
      axpy(b, -f, row);
    }
  const auto at = std::lower_bound(space_.pivots_.begin(), space_.pivots_.end(), p);
  const auto idx = at - space_.pivots_.begin();
  space_.pivots_.insert(at, p);
  space_.basis_.insert(space_.basis_.begin() + idx, std::move(row));
  return true;
}

Subspace EchelonBuilder::kernel() const {
  const std::size_t n = space_.ambient_;
  std::vector<Vec> gens;
  for (std::size_t f : space_.free_columns()) {
    Vec x = zero_vec(n);
    x[f] = 1;
    for (std::size_t k = 0; k < space_.basis_.size(); ++k) x[space_.pivots_[k]] = -space_.basis_[k][f];
    gens.push_back(std::move(x));
  }
  return Subspace::span(n, gens);
}

// ---------------------------------------------------------------------------

namespace {

void require_same_ambient(const Subspace& v, const Subspace& w) {
  if (v.ambient_dim() != w.ambient_dim()) throw DimensionError("subspaces live in different ambient spaces");
}

}  // namespace

Subspace sum(const Subspace& v, const Subspace& w) {
  require_same_ambient(v, w);
  EchelonBuilder b(v.ambient_dim());
  for (const auto& x : v.basis()) b.add(x);
  for (const auto& x : w.basis()) b.add(x);
  return b.row_space();
}

Subspace intersect(const Subspace& v, const Subspace& w) {
  require_same_ambient(v, w);
  const std::size_t n = v.ambient_dim();
  if (v.is_zero() || w.is_zero()) return Subspace(n);
  // x = sum c_k v_k lies in w iff Q_w x = 0.
  const Mat q = w.quotient_projection();
  const Mat constraints = q * v.basis_matrix().transpose();
  const Subspace coeffs = kernel(constraints);
  std::vector<Vec> gens;
  for (const auto& c : coeffs.basis()) {
    Vec x = zero_vec(n);
    for (std::size_t k = 0; k < c.size(); ++k) axpy(x, c[k], v.basis()[k]);
    gens.push_back(std::move(x));
  }
  return Subspace::span(n, gens);
}

bool contains(const Subspace& v, const Subspace& w) {
  require_same_ambient(v, w);
  return std::all_of(w.basis().begin(), w.basis().end(), [&](const Vec& x) { return v.contains(x); });
}

bool equal(const Subspace& v, const Subspace& w) {
  require_same_ambient(v, w);
  return v == w;
}

Subspace kernel(const Mat& m) {
  EchelonBuilder b(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.add(m.row(r));
  return b.kernel();
}

Subspace image(const Mat& m) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
  return Subspace::span(m.rows(), cols);
}

std::optional<AffineSolution> solve_affine(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length must equal row count");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RrefResult red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(m.cols());
  for (std::size_t k = 0; k < red.rank; ++k) x[red.pivots[k]] = red.reduced(k, m.cols());
  return AffineSolution{std::move(x), kernel(m)};
}

}  // namespace csalg
