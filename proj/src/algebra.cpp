// SPDX-License-Identifier: Apache-2.0
#include "csalg/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace csalg {

AssociativityError::AssociativityError(std::size_t i_, std::size_t j_, std::size_t k_, Vec left, Vec right)
    : std::runtime_error("associativity fails at basis triple (" + std::to_string(i_) + "," + std::to_string(j_) +
                         "," + std::to_string(k_) + "): (b_i b_j) b_k = " + to_string(left) +
                         " but b_i (b_j b_k) = " + to_string(right)),
      i(i_),
      j(j_),
      k(k_),
      left_product(std::move(left)),
      right_product(std::move(right)) {}

// --- FiniteGroup -----------------------------------------------------------

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> cayley, std::size_t identity)
    : table_(std::move(cayley)), identity_(identity) {
  const std::size_t n = table_.size();
  if (n == 0) throw GroupTableError("group must have at least one element");
  if (identity_ >= n) throw GroupTableError("identity index out of range");
  for (std::size_t g = 0; g < n; ++g) {
    if (table_[g].size() != n) throw GroupTableError("Cayley table row " + std::to_string(g) + " has wrong length");
    std::vector<bool> seen(n, false);
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t v = table_[g][h];
      if (v >= n) throw GroupTableError("Cayley table entry out of range at row " + std::to_string(g));
      if (seen[v]) throw GroupTableError("Cayley table row " + std::to_string(g) + " is not a permutation");
      seen[v] = true;
    }
  }
  for (std::size_t h = 0; h < n; ++h) {
    std::vector<bool> seen(n, false);
    for (std::size_t g = 0; g < n; ++g) {
      if (seen[table_[g][h]]) throw GroupTableError("Cayley table column " + std::to_string(h) + " is not a permutation");
      seen[table_[g][h]] = true;
    }
  }
  for (std::size_t g = 0; g < n; ++g)
    if (table_[identity_][g] != g || table_[g][identity_] != g)
      throw GroupTableError("element " + std::to_string(identity_) + " is not a two-sided identity");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw GroupTableError("operation is not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                                "," + std::to_string(c) + ")");
}

std::size_t FiniteGroup::inverse(std::size_t g) const {
  for (std::size_t h = 0; h < order(); ++h)
    if (table_[g][h] == identity_) return h;
  throw GroupTableError("element has no inverse");  // unreachable for a validated table
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw GroupTableError("cyclic group order must be positive");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t), 0);
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  if (n == 0) throw GroupTableError("dihedral parameter must be positive");
  const std::size_t order = 2 * n;
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t a = x % n, b = x / n, c = y % n, d = y / n;
      // r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b + d)
      const std::size_t rot = b == 0 ? (a + c) % n : (a + n - c) % n;
      t[x][y] = rot + n * ((b + d) % 2);
    }
  return FiniteGroup(std::move(t), 0);
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  if (n == 0) throw GroupTableError("symmetric group degree must be positive");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t order = perms.size();
  std::vector<std::vector<std::size_t>> t(order, std::vector<std::size_t>(order));
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      std::vector<std::size_t> comp(n);
      for (std::size_t i = 0; i < n; ++i) comp[i] = perms[x][perms[y][i]];  // apply y, then x
      t[x][y] = static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), comp) - perms.begin());
    }
  return FiniteGroup(std::move(t), 0);
}

// --- FinAlgebra ------------------------------------------------------------

FinAlgebra::FinAlgebra(std::size_t dim, std::vector<Rational> constants, std::optional<Vec> unit,
                       std::vector<std::string> labels, std::string name)
    : dim_(dim), c_(std::move(constants)), unit_(std::move(unit)), labels_(std::move(labels)), name_(std::move(name)) {
  if (c_.size() != dim_ * dim_ * dim_) throw DimensionError("structure constant tensor must have dim^3 entries");
  if (unit_ && unit_->size() != dim_) throw DimensionError("unit vector has wrong length");
  if (!labels_.empty() && labels_.size() != dim_) throw DimensionError("label count must equal dimension");
  validate();
}

void FinAlgebra::validate() const {
  std::vector<Vec> prod(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) prod[i * dim_ + j] = basis_product(i, j);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        Vec left = zero_vec(dim_), right = zero_vec(dim_);
        const Vec& ij = prod[i * dim_ + j];
        const Vec& jk = prod[j * dim_ + k];
        for (std::size_t m = 0; m < dim_; ++m) {
          if (ij[m] != 0) axpy(left, ij[m], prod[m * dim_ + k]);
          if (jk[m] != 0) axpy(right, jk[m], prod[i * dim_ + m]);
        }
        if (left != right) throw AssociativityError(i, j, k, std::move(left), std::move(right));
      }
  if (unit_) {
    for (std::size_t i = 0; i < dim_; ++i) {
      const Vec b = unit_vec(dim_, i);
      if (multiply(*unit_, b) != b || multiply(b, *unit_) != b)
        throw UnitError("declared unit does not act as identity on basis element " + std::to_string(i));
    }
  }
}

Element FinAlgebra::one() const {
  if (!unit_) throw UnitError("algebra is not unital");
  return Element(*unit_);
}

std::string FinAlgebra::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "b" + std::to_string(i);
}

bool FinAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (c(i, j, k) != c(j, i, k)) return false;
  return true;
}

Vec FinAlgebra::basis_product(std::size_t i, std::size_t j) const {
  const auto base = c_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Vec(base, base + static_cast<std::ptrdiff_t>(dim_));
}

void FinAlgebra::check_element(const Vec& x) const {
  if (x.size() != dim_)
    throw DimensionError("element of dimension " + std::to_string(x.size()) + " used in algebra of dimension " +
                         std::to_string(dim_));
}

Vec FinAlgebra::multiply(const Vec& x, const Vec& y) const {
  check_element(x);
  check_element(y);
  Vec out = zero_vec(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& ck = c(i, j, k);
        if (ck != 0) out[k] += s * ck;
      }
    }
  }
  return out;
}

Element FinAlgebra::multiply(const Element& x, const Element& y) const {
  return Element(multiply(x.coeffs, y.coeffs));
}

Element FinAlgebra::commutator(const Element& x, const Element& y) const {
  return multiply(x, y) - multiply(y, x);
}

Mat FinAlgebra::mult_operator(const Vec& x, Side side) const {
  check_element(x);
  Mat m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& ck = side == Side::Left ? c(i, j, k) : c(j, i, k);
        if (ck != 0) m(k, j) += x[i] * ck;
      }
  }
  return m;
}

bool FinAlgebra::same_structure(const FinAlgebra& other) const {
  return dim_ == other.dim_ && c_ == other.c_ && unit_ == other.unit_;
}

// --- constructors ------------------------------------------------------------

FinAlgebra build_matrix_algebra(std::size_t n) {
  if (n == 0) throw std::invalid_argument("matrix algebra size must be at least 1");
  const std::size_t dim = n * n;
  std::vector<Rational> c(dim * dim * dim, Rational(0));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t s = 0; s < n; ++s)
        c[(matrix_unit(n, p, q) * dim + matrix_unit(n, q, s)) * dim + matrix_unit(n, p, s)] = 1;
  Vec unit = zero_vec(dim);
  for (std::size_t p = 0; p < n; ++p) unit[matrix_unit(n, p, p)] = 1;
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) labels.push_back("e" + std::to_string(p + 1) + std::to_string(q + 1));
  return FinAlgebra(dim, std::move(c), std::move(unit), std::move(labels), "M" + std::to_string(n));
}

FinAlgebra build_group_algebra(const FiniteGroup& g, std::string name) {
  const std::size_t dim = g.order();
  std::vector<Rational> c(dim * dim * dim, Rational(0));
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y) c[(x * dim + y) * dim + g.mul(x, y)] = 1;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < dim; ++x) labels.push_back("g" + std::to_string(x));
  return FinAlgebra(dim, std::move(c), unit_vec(dim, g.identity()), std::move(labels), std::move(name));
}

FinAlgebra build_upper_triangular(std::size_t n) {
  if (n == 0) throw std::invalid_argument("triangular algebra size must be at least 1");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p; q < n; ++q) units.emplace_back(p, q);
  const std::size_t dim = units.size();
  auto index_of = [&](std::size_t p, std::size_t q) {
    return static_cast<std::size_t>(std::find(units.begin(), units.end(), std::make_pair(p, q)) - units.begin());
  };
  auto c = tabulate_constants(dim, [&](std::size_t i, std::size_t j) {
    Vec v = zero_vec(dim);
    if (units[i].second == units[j].first) v[index_of(units[i].first, units[j].second)] = 1;
    return v;
  });
  Vec unit = zero_vec(dim);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) {
    if (units[i].first == units[i].second) unit[i] = 1;
    labels.push_back("e" + std::to_string(units[i].first + 1) + std::to_string(units[i].second + 1));
  }
  return FinAlgebra(dim, std::move(c), std::move(unit), std::move(labels), "T" + std::to_string(n));
}

FinAlgebra direct_product(const FinAlgebra& a, const FinAlgebra& b) {
  const std::size_t da = a.dim(), db = b.dim(), dim = da + db;
  std::vector<Rational> c(dim * dim * dim, Rational(0));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k) c[(i * dim + j) * dim + k] = a.c(i, j, k);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < db; ++k) c[((da + i) * dim + da + j) * dim + da + k] = b.c(i, j, k);
  std::optional<Vec> unit;
  if (a.unit() && b.unit()) {
    Vec u = *a.unit();
    u.insert(u.end(), b.unit()->begin(), b.unit()->end());
    unit = std::move(u);
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < da; ++i) labels.push_back("L." + a.label(i));
  for (std::size_t i = 0; i < db; ++i) labels.push_back("R." + b.label(i));
  return FinAlgebra(dim, std::move(c), std::move(unit), std::move(labels), a.name() + "x" + b.name());
}

FinAlgebra tensor_product(const FinAlgebra& a, const FinAlgebra& b) {
  const std::size_t da = a.dim(), db = b.dim(), dim = da * db;
  std::vector<Rational> c(dim * dim * dim, Rational(0));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t i2 = 0; i2 < da; ++i2)
        for (std::size_t j2 = 0; j2 < db; ++j2)
          for (std::size_t k = 0; k < da; ++k) {
            const Rational& ca = a.c(i, i2, k);
            if (ca == 0) continue;
            for (std::size_t l = 0; l < db; ++l) {
              const Rational& cb = b.c(j, j2, l);
              if (cb != 0) c[((i * db + j) * dim + i2 * db + j2) * dim + k * db + l] = ca * cb;
            }
          }
  std::optional<Vec> unit;
  if (a.unit() && b.unit()) {
    Vec u = zero_vec(dim);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < db; ++j) u[i * db + j] = (*a.unit())[i] * (*b.unit())[j];
    unit = std::move(u);
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) labels.push_back(a.label(i) + "." + b.label(j));
  return FinAlgebra(dim, std::move(c), std::move(unit), std::move(labels), a.name() + "(x)" + b.name());
}

FinAlgebra adjoin_unit(const FinAlgebra& a) {
  const std::size_t da = a.dim(), dim = da + 1;
  std::vector<Rational> c(dim * dim * dim, Rational(0));
  c[0] = 1;
  for (std::size_t i = 1; i < dim; ++i) {
    c[(0 * dim + i) * dim + i] = 1;
    c[(i * dim + 0) * dim + i] = 1;
  }
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k) c[((i + 1) * dim + j + 1) * dim + k + 1] = a.c(i, j, k);
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 0; i < da; ++i) labels.push_back(a.label(i));
  return FinAlgebra(dim, std::move(c), unit_vec(dim, 0), std::move(labels), a.name() + "+1");
}

FinAlgebra zero_algebra(std::size_t dim) {
  return FinAlgebra(dim, std::vector<Rational>(dim * dim * dim, Rational(0)), std::nullopt, {},
                    "Z" + std::to_string(dim));
}

Subspace center(const FinAlgebra& a) {
  const std::size_t n = a.dim();
  EchelonBuilder rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    // x b_i - b_i x = (R_{b_i} - L_{b_i}) x
    const Vec b = unit_vec(n, i);
    const Mat m = a.mult_operator(b, FinAlgebra::Side::Right) - a.mult_operator(b, FinAlgebra::Side::Left);
    for (std::size_t r = 0; r < n; ++r) rows.add(m.row(r));
  }
  return rows.kernel();
}

bool is_ideal(const FinAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw DimensionError("subspace does not live in the algebra");
  const std::size_t n = a.dim();
  for (const auto& x : s.basis())
    for (std::size_t i = 0; i < n; ++i) {
      const Vec b = unit_vec(n, i);
      if (!s.contains(a.multiply(b, x)) || !s.contains(a.multiply(x, b))) return false;
    }
  return true;
}

Subspace product_space(const FinAlgebra& a, const Subspace& s, const Subspace& t) {
  EchelonBuilder b(a.dim());
  for (const auto& x : s.basis())
    for (const auto& y : t.basis()) b.add(a.multiply(x, y));
  return b.row_space();
}

FinAlgebra quotient(const FinAlgebra& a, const Subspace& ideal) {
  if (!is_ideal(a, ideal)) throw std::invalid_argument("quotient requires a two-sided ideal");
  const auto keep = ideal.free_columns();
  const std::size_t dim = keep.size();
  auto project = [&](const Vec& v) {
    const Vec r = ideal.reduce(v);
    Vec out(dim);
    for (std::size_t t = 0; t < dim; ++t) out[t] = r[keep[t]];
    return out;
  };
  auto c = tabulate_constants(dim, [&](std::size_t i, std::size_t j) {
    return project(a.basis_product(keep[i], keep[j]));
  });
  std::optional<Vec> unit;
  if (a.unit()) unit = project(*a.unit());
  std::vector<std::string> labels;
  for (std::size_t k : keep) labels.push_back(a.label(k));
  return FinAlgebra(dim, std::move(c), std::move(unit), std::move(labels), a.name() + "/I");
}

}  // namespace csalg
