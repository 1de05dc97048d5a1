// SPDX-License-Identifier: Apache-2.0
#include "csalg/maps.hpp"

#include <algorithm>

#include "csalg/random.hpp"
#include "csalg/structure.hpp"

namespace csalg {

LinearMap::LinearMap(Mat m) : matrix(std::move(m)) {
  if (matrix.rows() != matrix.cols()) throw DimensionError("linear map matrix must be square");
}

LinearMap LinearMap::from_flat(std::size_t dim, const Vec& flat) {
  if (flat.size() != dim * dim) throw DimensionError("map needs dim^2 entries");
  Mat m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = flat[r * dim + c];
  return LinearMap(std::move(m));
}

LinearMap LinearMap::transpose_on_matrices(std::size_t n) {
  Mat m(n * n, n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) m(matrix_unit(n, q, p), matrix_unit(n, p, q)) = 1;
  return LinearMap(std::move(m));
}

LinearMap LinearMap::inner_derivation(const FinAlgebra& a, const Element& m) {
  return LinearMap(a.mult_operator(m, FinAlgebra::Side::Right) - a.mult_operator(m, FinAlgebra::Side::Left));
}

LinearMap LinearMap::group_conjugation(const FiniteGroup& g, std::size_t by) {
  const std::size_t n = g.order();
  const std::size_t inv = g.inverse(by);
  Mat m(n, n);
  for (std::size_t h = 0; h < n; ++h) m(g.mul(g.mul(by, h), inv), h) = 1;
  return LinearMap(std::move(m));
}

Vec LinearMap::flat() const {
  const std::size_t n = dim();
  Vec v(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) v[r * n + c] = matrix(r, c);
  return v;
}

std::vector<LinearMap> MapSpace::basis_maps() const {
  std::vector<LinearMap> out;
  for (const auto& v : space.basis()) out.push_back(LinearMap::from_flat(algebra_dim, v));
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::HypothesesNotMet: return "hypotheses-not-met";
    case Verdict::Refutation: return "REFUTATION";
  }
  return "unknown";
}

std::optional<std::size_t> VerificationReport::space_dim(const std::string& name) const {
  for (const auto& [k, v] : spaces)
    if (k == name) return v;
  return std::nullopt;
}

std::optional<bool> VerificationReport::fact(const std::string& name) const {
  for (const auto& [k, v] : facts)
    if (k == name) return v;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Linear expressions in the unknown map D. An expression is an n x n^2 matrix:
// row k holds the coefficients of the k-th output coordinate in the variables
// D[r][c], flattened as r*n + c.

namespace {

class MapExprBuilder {
 public:
  explicit MapExprBuilder(const FinAlgebra& a) : a_(a), n_(a.dim()) {
    for (std::size_t i = 0; i < n_; ++i) {
      left_.push_back(a.mult_operator(unit_vec(n_, i), FinAlgebra::Side::Left));
      right_.push_back(a.mult_operator(unit_vec(n_, i), FinAlgebra::Side::Right));
    }
  }

  std::size_t n() const { return n_; }
  Mat empty() const { return Mat(n_, n_ * n_); }
  const Mat& left(std::size_t i) const { return left_[i]; }
  const Mat& right(std::size_t i) const { return right_[i]; }

  /// expr += s * D(v)
  void add_apply(Mat& e, const Vec& v, const Rational& s) const {
    for (std::size_t m = 0; m < n_; ++m) {
      if (v[m] == 0) continue;
      const Rational f = s * v[m];
      for (std::size_t k = 0; k < n_; ++k) e(k, k * n_ + m) += f;
    }
  }

  /// expr += s * D(b_i) * y, where ry = R_y.
  void add_apply_times(Mat& e, std::size_t i, const Mat& ry, const Rational& s) const {
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t r = 0; r < n_; ++r)
        if (ry(k, r) != 0) e(k, r * n_ + i) += s * ry(k, r);
  }

  /// expr += s * x * D(b_i), where lx = L_x.
  void add_times_apply(Mat& e, const Mat& lx, std::size_t i, const Rational& s) const {
    add_apply_times(e, i, lx, s);  // same shape: coefficient of D[r][i] in coordinate k is lx(k, r)
  }

 private:
  const FinAlgebra& a_;
  std::size_t n_;
  std::vector<Mat> left_, right_;
};

void add_rows(EchelonBuilder& b, const Mat& e) {
  for (std::size_t r = 0; r < e.rows(); ++r) {
    Vec row = e.row(r);
    if (!is_zero(row)) b.add(std::move(row));
  }
}

void add_rows(EchelonBuilder& b, const Mat& q, const Mat& e) { add_rows(b, q * e); }

}  // namespace

MapSpace derivation_space(const FinAlgebra& a) {
  const MapExprBuilder x(a);
  const std::size_t n = x.n();
  EchelonBuilder rows(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat e = x.empty();
      x.add_apply(e, a.basis_product(i, j), 1);
      x.add_apply_times(e, i, x.right(j), -1);
      x.add_times_apply(e, x.left(i), j, -1);
      add_rows(rows, e);
    }
  return MapSpace{n, rows.kernel()};
}

MapSpace inner_derivation_space(const FinAlgebra& a) {
  const std::size_t n = a.dim();
  EchelonBuilder rows(n * n);
  for (std::size_t k = 0; k < n; ++k) rows.add(LinearMap::inner_derivation(a, Element::basis(n, k)).flat());
  return MapSpace{n, rows.row_space()};
}

MapSpace jordan_derivation_space(const FinAlgebra& a) {
  const MapExprBuilder x(a);
  const std::size_t n = x.n();
  EchelonBuilder rows(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Mat e = x.empty();
      x.add_apply(e, a.basis_product(i, j) + a.basis_product(j, i), 1);
      x.add_apply_times(e, i, x.right(j), -1);
      x.add_times_apply(e, x.left(i), j, -1);
      x.add_apply_times(e, j, x.right(i), -1);
      x.add_times_apply(e, x.left(j), i, -1);
      add_rows(rows, e);
    }
  return MapSpace{n, rows.kernel()};
}

namespace {

constexpr std::array<std::array<int, 3>, 6> kPermutations{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

}  // namespace

MapSpace theorem31_hypothesis_space(const FinAlgebra& a) {
  const MapExprBuilder x(a);
  const std::size_t n = x.n();
  const Mat q = commutator_subspace(a).quotient_projection();
  EchelonBuilder rows(n * n);
  if (q.rows() == 0) return MapSpace{n, rows.kernel()};  // [A,A] = A: no constraint

  // D(x)x: D(b_i) b_j + D(b_j) b_i, i <= j.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Mat e = x.empty();
      x.add_apply_times(e, i, x.right(j), 1);
      x.add_apply_times(e, j, x.right(i), 1);
      add_rows(rows, q, e);
    }

  // D(x)x^2: sum over orderings of D(b_s1) (b_s2 b_s3), i <= j <= k.
  std::vector<Mat> right_of_product(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      right_of_product[j * n + k] = a.mult_operator(a.basis_product(j, k), FinAlgebra::Side::Right);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        const std::array<std::size_t, 3> idx{i, j, k};
        Mat e = x.empty();
        for (const auto& p : kPermutations)
          x.add_apply_times(e, idx[p[0]], right_of_product[idx[p[1]] * n + idx[p[2]]], 1);
        add_rows(rows, q, e);
      }
  return MapSpace{n, rows.kernel()};
}

std::optional<std::pair<std::size_t, std::size_t>> leibniz_violation(const FinAlgebra& a, const LinearMap& d) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec bi = unit_vec(n, i), bj = unit_vec(n, j);
      if (d(a.basis_product(i, j)) != a.multiply(d(bi), bj) + a.multiply(bi, d(bj))) return std::pair{i, j};
    }
  return std::nullopt;
}

namespace {

/// Basis tuple at which the polarized hypothesis of the derivation theorem fails.
std::optional<std::vector<std::size_t>> hypothesis_violation(const FinAlgebra& a, const Subspace& comm,
                                                             const LinearMap& d) {
  const std::size_t n = a.dim();
  auto image = [&](std::size_t i) { return d(unit_vec(n, i)); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Vec v = a.multiply(image(i), unit_vec(n, j)) + a.multiply(image(j), unit_vec(n, i));
      if (!comm.contains(v)) return std::vector{i, j};
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        const std::array<std::size_t, 3> idx{i, j, k};
        Vec v = zero_vec(n);
        for (const auto& p : kPermutations)
          v = v + a.multiply(image(idx[p[0]]), a.basis_product(idx[p[1]], idx[p[2]]));
        if (!comm.contains(v)) return std::vector{i, j, k};
      }
  return std::nullopt;
}

std::string dims_detail(std::size_t h, std::size_t der) {
  return "dim H = " + std::to_string(h) + ", dim Der = " + std::to_string(der);
}

}  // namespace

VerificationReport verify_theorem31(const FinAlgebra& a) {
  VerificationReport rep;
  const bool semiprime = is_semiprime(a);
  const auto cs = is_commutator_simple(a);
  rep.checks.push_back({"semiprime", semiprime, semiprime ? "radical = 0" : "radical is nonzero"});
  rep.checks.push_back({"commutator-simple", cs.simple,
                        cs.simple ? "[A,A] contains no nonzero ideal"
                                  : "[A,A] contains an ideal of dim " + std::to_string(cs.witness->ideal.dim())});

  const MapSpace hyp = theorem31_hypothesis_space(a);
  const MapSpace der = derivation_space(a);
  rep.spaces = {{"hypothesis", hyp.dim()}, {"derivation", der.dim()}};
  rep.facts.push_back({"spaces-equal", hyp == der});

  if (!semiprime || !cs.simple) {
    rep.verdict = Verdict::HypothesesNotMet;
    return rep;
  }
  if (hyp == der) {
    rep.verdict = Verdict::Verified;
    rep.checks.push_back({"hypothesis space = derivation space", true, dims_detail(hyp.dim(), der.dim())});
    return rep;
  }

  rep.verdict = Verdict::Refutation;
  rep.checks.push_back({"hypothesis space = derivation space", false, dims_detail(hyp.dim(), der.dim())});
  const Subspace comm = commutator_subspace(a);
  for (const auto& v : hyp.space.basis()) {
    if (der.space.contains(v)) continue;
    const LinearMap d = LinearMap::from_flat(a.dim(), v);
    const auto bad = leibniz_violation(a, d);
    Witness w{"map satisfies the hypotheses but violates Leibniz at a basis pair", {}, d};
    if (bad) {
      w.elements.emplace_back("x", unit_vec(a.dim(), bad->first));
      w.elements.emplace_back("y", unit_vec(a.dim(), bad->second));
    }
    rep.witness = std::move(w);
    return rep;
  }
  for (const auto& v : der.space.basis()) {
    if (hyp.space.contains(v)) continue;
    const LinearMap d = LinearMap::from_flat(a.dim(), v);
    Witness w{"derivation violating the polarized hypothesis at a basis tuple", {}, d};
    if (const auto bad = hypothesis_violation(a, comm, d))
      for (std::size_t t = 0; t < bad->size(); ++t)
        w.elements.emplace_back("b" + std::to_string(t), unit_vec(a.dim(), (*bad)[t]));
    rep.witness = std::move(w);
    return rep;
  }
  return rep;
}

// ---------------------------------------------------------------------------

std::optional<Element> pointwise_inner_witness(const FinAlgebra& a, const LinearMap& d, const Element& x) {
  // [x, m] = (L_x - R_x) m
  const Mat op = a.mult_operator(x, FinAlgebra::Side::Left) - a.mult_operator(x, FinAlgebra::Side::Right);
  auto sol = solve_affine(op, d(x).coeffs);
  if (!sol) return std::nullopt;
  return Element(std::move(sol->particular));
}

bool agrees_with_some_derivation(const FinAlgebra& a, const MapSpace& der, const LinearMap& d, const Element& x) {
  const auto maps = der.basis_maps();
  Mat cols(a.dim(), maps.size());
  for (std::size_t t = 0; t < maps.size(); ++t) cols.set_col(t, maps[t](x.coeffs));
  return solve_affine(cols, d(x).coeffs).has_value();
}

namespace {

std::vector<Element> sample_points(const FinAlgebra& a, std::uint64_t seed, std::size_t samples) {
  std::vector<Element> pts;
  if (a.is_unital()) pts.push_back(a.one());
  for (std::size_t i = 0; i < a.dim(); ++i) pts.push_back(Element::basis(a.dim(), i));
  RationalSampler rng(seed);
  for (std::size_t s = 0; s < samples; ++s) pts.emplace_back(rng.vector(a.dim()));
  return pts;
}

}  // namespace

LocalTestResult local_derivation_test(const FinAlgebra& a, const LinearMap& d, std::uint64_t seed,
                                      std::size_t samples) {
  if (samples == 0) throw std::invalid_argument("samples must be at least 1");
  if (d.dim() != a.dim()) throw DimensionError("map dimension does not match algebra");
  const MapSpace der = derivation_space(a);
  LocalTestResult out;
  for (const auto& x : sample_points(a, seed, samples)) {
    ++out.points_checked;
    if (!agrees_with_some_derivation(a, der, d, x)) {
      out.pass = false;
      out.counterexample = x;
      return out;
    }
  }
  return out;
}

namespace {

std::vector<std::pair<Element, Element>> pair_candidates(const FinAlgebra& a, bool ordered) {
  const std::size_t n = a.dim();
  std::vector<std::pair<Element, Element>> out;
  if (a.is_unital()) out.emplace_back(a.one(), a.one());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = ordered ? 0 : i; j < n; ++j) out.emplace_back(Element::basis(n, i), Element::basis(n, j));
  return out;
}

}  // namespace

PairCheck jordan_homomorphism_check(const FinAlgebra& a, const LinearMap& t) {
  if (t.dim() != a.dim()) throw DimensionError("map dimension does not match algebra");
  for (auto& [x, y] : pair_candidates(a, false)) {
    const Element lhs = t(a.multiply(x, y) + a.multiply(y, x));
    const Element tx = t(x), ty = t(y);
    if (lhs != a.multiply(tx, ty) + a.multiply(ty, tx)) return PairCheck{false, std::pair{x, y}};
  }
  return {};
}

PairCheck multiplicativity_check(const FinAlgebra& a, const LinearMap& t, Multiplicativity mode) {
  if (t.dim() != a.dim()) throw DimensionError("map dimension does not match algebra");
  for (auto& [x, y] : pair_candidates(a, true)) {
    const Element lhs = t(a.multiply(x, y));
    const Element rhs = mode == Multiplicativity::Homomorphism ? a.multiply(t(x), t(y)) : a.multiply(t(y), t(x));
    if (lhs != rhs) return PairCheck{false, std::pair{x, y}};
  }
  return {};
}

TripleCheck cubic_condition_check(const FinAlgebra& a, const LinearMap& t) {
  if (t.dim() != a.dim()) throw DimensionError("map dimension does not match algebra");
  const std::size_t n = a.dim();
  const Subspace comm = commutator_subspace(a);
  std::vector<Element> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(t(Element::basis(n, i)));

  auto polarized = [&](const std::array<Element, 3>& x, const std::array<Element, 3>& tx) {
    Element s = Element::zero(n);
    for (const auto& p : kPermutations) {
      s = s + a.multiply(a.multiply(tx[p[0]], tx[p[1]]), tx[p[2]]);
      s = s - a.multiply(a.multiply(x[p[0]], x[p[1]]), x[p[2]]);
    }
    return s;
  };

  if (a.is_unital()) {
    const Element one = a.one();
    const Element t1 = t(one);
    if (!comm.contains(polarized({one, one, one}, {t1, t1, t1}).coeffs))
      return TripleCheck{false, std::array{one, one, one}};
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        const std::array x{Element::basis(n, i), Element::basis(n, j), Element::basis(n, k)};
        if (!comm.contains(polarized(x, {images[i], images[j], images[k]}).coeffs))
          return TripleCheck{false, x};
      }
  return {};
}

VerificationReport verify_theorem41(const FinAlgebra& a, const LinearMap& t) {
  if (t.dim() != a.dim()) throw DimensionError("map dimension does not match algebra");
  VerificationReport rep;
  const std::size_t n = a.dim();
  const bool unital = a.is_unital();
  const auto cs = is_commutator_simple(a);
  const std::size_t r = rank(t.matrix);
  const bool fixes_one = unital && t(a.one()) == a.one();
  const TripleCheck cubic = cubic_condition_check(a, t);

  rep.checks.push_back({"unital", unital, unital ? "unit present" : "no unit"});
  rep.checks.push_back({"commutator-simple", cs.simple, "dim [A,A] = " + std::to_string(cs.commutators.dim())});
  rep.checks.push_back({"surjective", r == n, "rank " + std::to_string(r) + " of " + std::to_string(n)});
  rep.checks.push_back({"T(1) = 1", fixes_one, fixes_one ? "unit fixed" : "unit not fixed"});
  rep.checks.push_back({"T(x)^3 - x^3 in [A,A]", cubic.holds, cubic.holds ? "all basis triples" : "fails"});
  rep.spaces = {{"commutator", cs.commutators.dim()}, {"rank", r}};

  const PairCheck jordan = jordan_homomorphism_check(a, t);
  const PairCheck homo = multiplicativity_check(a, t, Multiplicativity::Homomorphism);
  const PairCheck anti = multiplicativity_check(a, t, Multiplicativity::Antihomomorphism);
  rep.facts = {{"jordan-homomorphism", jordan.holds}, {"homomorphism", homo.holds}, {"antihomomorphism", anti.holds}};

  const bool hypotheses = unital && cs.simple && r == n && fixes_one && cubic.holds;
  if (!hypotheses) {
    rep.verdict = Verdict::HypothesesNotMet;
    if (!cubic.holds) {
      const auto& w = *cubic.witness;
      rep.witness = Witness{"basis triple where the polarized cubic condition fails",
                            {{"x", w[0].coeffs}, {"y", w[1].coeffs}, {"z", w[2].coeffs}},
                            std::nullopt};
    }
    return rep;
  }
  if (jordan.holds) {
    rep.verdict = Verdict::Verified;
    return rep;
  }
  rep.verdict = Verdict::Refutation;
  rep.witness = Witness{"pair with T(xy + yx) != T(x)T(y) + T(y)T(x)",
                        {{"x", jordan.witness->first.coeffs}, {"y", jordan.witness->second.coeffs}},
                        t};
  return rep;
}

// ---------------------------------------------------------------------------

bool is_invertible(const FinAlgebra& a, const Element& u) {
  return rank(a.mult_operator(u, FinAlgebra::Side::Left)) == a.dim();
}

IntertwinerResult intertwiner_witness(const FinAlgebra& a, const LinearMap& t, const Element& x, std::uint64_t seed,
                                      std::size_t invertibility_trials) {
  if (!a.is_unital()) throw std::invalid_argument("local inner automorphism test needs a unital algebra");
  // u x - t(x) u = (R_x - L_{t(x)}) u
  const Mat op = a.mult_operator(x, FinAlgebra::Side::Right) - a.mult_operator(t(x), FinAlgebra::Side::Left);
  const Subspace sols = kernel(op);
  IntertwinerResult out;
  out.intertwiner_dim = sols.dim();
  if (sols.is_zero()) {
    out.status = IntertwinerResult::Status::Infeasible;
    return out;
  }
  RationalSampler rng(seed);
  for (std::size_t trial = 0; trial < invertibility_trials; ++trial) {
    const Vec mix = rng.nonzero_integer_vector(sols.dim(), 3);
    Vec u = zero_vec(a.dim());
    for (std::size_t s = 0; s < sols.dim(); ++s) axpy(u, mix[s], sols.basis()[s]);
    Element cand(std::move(u));
    if (is_invertible(a, cand)) {
      out.status = IntertwinerResult::Status::Witness;
      out.u = std::move(cand);
      return out;
    }
  }
  out.status = IntertwinerResult::Status::Inconclusive;
  return out;
}

std::vector<InnerAutoSample> local_inner_automorphism_test(const FinAlgebra& a, const LinearMap& t, std::uint64_t seed,
                                                           std::size_t samples, std::size_t invertibility_trials) {
  if (!a.is_unital()) throw std::invalid_argument("local inner automorphism test needs a unital algebra");
  if (t.dim() != a.dim()) throw DimensionError("map dimension does not match algebra");
  std::vector<InnerAutoSample> out;
  std::uint64_t point_seed = seed;
  for (auto& x : sample_points(a, seed, samples)) {
    auto res = intertwiner_witness(a, t, x, ++point_seed, invertibility_trials);
    out.push_back({std::move(x), std::move(res)});
  }
  return out;
}

}  // namespace csalg
