// SPDX-License-Identifier: Apache-2.0
#include "csalg/pipeline.hpp"

#include <cmath>
#include <cstdlib>

#include "csalg/document.hpp"
#include "csalg/structure.hpp"

namespace csalg {

namespace {

std::optional<std::string> get(const Options& o, const std::string& key) {
  if (auto it = o.find(key); it != o.end()) return it->second;
  return std::nullopt;
}

std::string require(const Options& o, const std::string& key, const std::string& command) {
  if (auto v = get(o, key)) return *v;
  throw UsageError(command + ": missing required option '" + key + "'");
}

std::uint64_t parse_unsigned(const std::string& text, const std::string& key) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("option '" + key + "' expects a non-negative integer, got '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw UsageError("option '" + key + "' is out of range");
  }
}

std::uint64_t unsigned_option(const Options& o, const std::string& key, std::uint64_t fallback) {
  if (auto v = get(o, key)) return parse_unsigned(*v, key);
  return fallback;
}

void enforce_cap(const FinAlgebra& a, const Options& o) {
  const std::size_t cap = max_dim(o);
  if (a.dim() > cap)
    throw UsageError("algebra dimension " + std::to_string(a.dim()) + " exceeds the cap " + std::to_string(cap) +
                     " (raise it with --max-dim or " + kMaxDimEnv + ")");
}

FinAlgebra load_algebra(const std::string& path, const Options& o) {
  FinAlgebra a = parse_algebra_document(read_file(path));
  enforce_cap(a, o);
  return a;
}

void stamp(Report& r, const std::string& command, const FinAlgebra& a) {
  r.command = command;
  r.algebra = a.name();
  r.fingerprint = fingerprint(serialize_algebra(a));
}

ExitStatus status_of(Verdict v) {
  switch (v) {
    case Verdict::Verified: return ExitStatus::Ok;
    case Verdict::HypothesesNotMet: return ExitStatus::HypothesesNotMet;
    case Verdict::Refutation: return ExitStatus::Refutation;
  }
  return ExitStatus::InternalError;
}

std::vector<Vec> rows_of(const Mat& m) { return m.row_list(); }

void add_witness(ReportSection& s, const Witness& w) {
  s.add("witness", w.description);
  for (const auto& [name, v] : w.elements) s.add("witness-" + name, v);
  if (w.map) s.add("witness-map", rows_of(w.map->matrix));
}

void add_verification(Report& r, const VerificationReport& v) {
  auto& hyp = r.section("hypotheses");
  for (const auto& c : v.checks) {
    hyp.add(c.name, c.met);
    hyp.add(c.name + " (detail)", c.detail);
  }
  auto& spaces = r.section("dimensions");
  for (const auto& [k, d] : v.spaces) spaces.add(k, static_cast<std::int64_t>(d));
  if (!v.facts.empty()) {
    auto& facts = r.section("facts");
    for (const auto& [k, b] : v.facts) facts.add(k, b);
  }
  auto& verdict = r.section("verdict");
  verdict.add("verdict", to_string(v.verdict));
  if (v.witness) add_witness(verdict, *v.witness);
  r.escalate(status_of(v.verdict));
}

void add_trace_search(Report& r, ReportSection& s, const FinAlgebra& a, std::uint64_t seed, std::size_t trials) {
  const TraceSearch search = has_nondegenerate_trace(a, seed, trials);
  r.seeds.emplace_back("trace-search", seed);
  switch (search.outcome) {
    case TraceSearch::Outcome::Found:
      s.add("nondegenerate-trace", std::string("found"));
      s.add("functional", search.found->coeffs);
      s.add("trials-used", static_cast<std::int64_t>(search.trials_used));
      break;
    case TraceSearch::Outcome::DefiniteNegative:
      s.add("nondegenerate-trace", std::string("definite-negative"));
      s.add("common-radical-vector", *search.common_radical_vector);
      r.escalate(ExitStatus::PropertyFalse);
      break;
    case TraceSearch::Outcome::Inconclusive:
      s.add("nondegenerate-trace", std::string("inconclusive"));
      s.add("trials-used", static_cast<std::int64_t>(search.trials_used));
      r.escalate(ExitStatus::Inconclusive);
      break;
  }
}

Report gen(const Options& o) {
  const std::string family = require(o, "family", "gen");
  auto input = [&](const std::string& key) { return load_algebra(require(o, key, "gen " + family), o); };
  auto count = [&]() {
    const auto n = parse_unsigned(require(o, "n", "gen " + family), "n");
    if (n == 0) throw UsageError("gen " + family + ": --n must be at least 1");
    return static_cast<std::size_t>(n);
  };
  std::optional<FinAlgebra> a;
  if (family == "matrix") {
    const std::size_t n = count();
    if (n * n > max_dim(o)) throw UsageError("gen matrix: dimension exceeds the cap");
    a = build_matrix_algebra(n);
  } else if (family == "triangular") {
    const std::size_t n = count();
    if (n * (n + 1) / 2 > max_dim(o)) throw UsageError("gen triangular: dimension exceeds the cap");
    a = build_upper_triangular(n);
  } else if (family == "group") {
    const std::string path = require(o, "cayley", "gen group");
    const FiniteGroup g = parse_cayley_table(read_file(path));
    if (g.order() > max_dim(o)) throw UsageError("gen group: dimension exceeds the cap");
    a = build_group_algebra(g, get(o, "name").value_or("QG"));
  } else if (family == "direct") {
    a = direct_product(input("input"), input("input2"));
  } else if (family == "tensor") {
    const FinAlgebra x = input("input"), y = input("input2");
    if (x.dim() * y.dim() > max_dim(o)) throw UsageError("gen tensor: dimension exceeds the cap");
    a = tensor_product(x, y);
  } else if (family == "adjoin-unit") {
    a = adjoin_unit(input("input"));
  } else {
    throw UsageError("gen: unknown family '" + family + "' (matrix, group, triangular, direct, tensor, adjoin-unit)");
  }
  enforce_cap(*a, o);
  Report r;
  stamp(r, "gen", *a);
  r.section("generated")
      .add("family", family)
      .add("dim", static_cast<std::int64_t>(a->dim()))
      .add("unital", a->is_unital());
  r.document = serialize_algebra(*a);
  return r;
}

}  // namespace

std::size_t max_dim(const Options& options) {
  if (auto v = get(options, "max-dim")) return parse_unsigned(*v, "max-dim");
  if (const char* env = std::getenv(kMaxDimEnv)) return parse_unsigned(env, kMaxDimEnv);
  return kDefaultMaxDim;
}

LinearMap resolve_map(const std::string& source, const FinAlgebra& a) {
  if (source == "identity") return LinearMap::identity(a.dim());
  if (source == "transpose") {
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(a.dim()))));
    if (n * n != a.dim()) throw UsageError("--map transpose needs a matrix algebra (dimension n^2)");
    return LinearMap::transpose_on_matrices(n);
  }
  LinearMap m = parse_map(read_file(source));
  if (m.dim() != a.dim())
    throw UsageError("map dimension " + std::to_string(m.dim()) + " does not match algebra dimension " +
                     std::to_string(a.dim()));
  return m;
}

Report analyze_report(const FinAlgebra& a, std::uint64_t seed, std::size_t trials) {
  Report r;
  stamp(r, "analyze", a);
  r.section("algebra")
      .add("dim", static_cast<std::int64_t>(a.dim()))
      .add("unital", a.is_unital())
      .add("commutative", a.is_commutative());

  const auto cs = is_commutator_simple(a);
  auto& comm = r.section("commutator");
  comm.add("dim[A,A]", static_cast<std::int64_t>(cs.commutators.dim()));
  comm.add("basis", cs.commutators.basis());
  comm.add("commutator-simple", cs.simple);
  if (cs.witness) {
    comm.add("witness-ideal-dim", static_cast<std::int64_t>(cs.witness->ideal.dim()));
    comm.add("witness-ideal", cs.witness->ideal.basis());
    comm.add("witness-certificate", cs.witness->certificate);
    r.escalate(ExitStatus::PropertyFalse);
  }

  const Subspace rad = radical(a);
  auto& rs = r.section("radical");
  rs.add("dim", static_cast<std::int64_t>(rad.dim()));
  rs.add("semiprime", rad.is_zero());
  rs.add("basis", rad.basis());
  rs.add("nilpotency-chain-length", static_cast<std::int64_t>(power_chain(a, rad).size() - 1));
  if (!rad.is_zero()) r.escalate(ExitStatus::PropertyFalse);

  auto& tr = r.section("trace");
  tr.add("dim A^2", static_cast<std::int64_t>(square_subspace(a).dim()));
  tr.add("trace-space-dim", static_cast<std::int64_t>(trace_functional_space(a).size()));
  add_trace_search(r, tr, a, seed, trials);
  return r;
}

Report trace_report(const FinAlgebra& a, std::uint64_t seed, std::size_t trials) {
  Report r;
  stamp(r, "trace", a);
  const auto space = trace_functional_space(a);
  const Subspace dom = square_subspace(a);
  auto& s = r.section("trace");
  s.add("dim A^2", static_cast<std::int64_t>(dom.dim()));
  s.add("domain-basis", dom.basis());
  s.add("trace-space-dim", static_cast<std::int64_t>(space.size()));
  std::vector<Vec> basis;
  for (const auto& t : space) basis.push_back(t.coeffs);
  s.add("trace-space-basis", basis);
  for (std::size_t k = 0; k < space.size(); ++k)
    s.add("basis-functional-" + std::to_string(k) + "-nondegenerate", is_nondegenerate_trace(a, space[k]));
  add_trace_search(r, s, a, seed, trials);
  return r;
}

Report derivations_report(const FinAlgebra& a) {
  Report r;
  stamp(r, "derivations", a);
  r.section("map-spaces")
      .add("derivation", static_cast<std::int64_t>(derivation_space(a).dim()))
      .add("inner-derivation", static_cast<std::int64_t>(inner_derivation_space(a).dim()))
      .add("jordan-derivation", static_cast<std::int64_t>(jordan_derivation_space(a).dim()))
      .add("hypothesis", static_cast<std::int64_t>(theorem31_hypothesis_space(a).dim()))
      .add("center", static_cast<std::int64_t>(center(a).dim()));
  return r;
}

Report theorem31_report(const FinAlgebra& a) {
  Report r;
  stamp(r, "verify-thm31", a);
  const VerificationReport v = verify_theorem31(a);
  add_verification(r, v);
  auto& dims = r.section("summary");
  dims.add("H-dim", static_cast<std::int64_t>(*v.space_dim("hypothesis")));
  dims.add("Der-dim", static_cast<std::int64_t>(*v.space_dim("derivation")));
  return r;
}

Report theorem41_report(const FinAlgebra& a, const LinearMap& t) {
  Report r;
  stamp(r, "verify-thm41", a);
  add_verification(r, verify_theorem41(a, t));
  auto& m = r.section("multiplicativity");
  for (auto mode : {Multiplicativity::Homomorphism, Multiplicativity::Antihomomorphism}) {
    const std::string name = mode == Multiplicativity::Homomorphism ? "homomorphism" : "antihomomorphism";
    const PairCheck c = multiplicativity_check(a, t, mode);
    m.add(name, c.holds);
    if (c.witness) {
      m.add(name + "-witness-x", c.witness->first.coeffs);
      m.add(name + "-witness-y", c.witness->second.coeffs);
    }
  }
  return r;
}

Report local_derivation_report(const FinAlgebra& a, const LinearMap& d, std::uint64_t seed, std::size_t samples) {
  Report r;
  stamp(r, "local-test", a);
  r.seeds.emplace_back("samples", seed);
  const LocalTestResult res = local_derivation_test(a, d, seed, samples);
  auto& s = r.section("local-derivation");
  s.add("kind", std::string("derivation"));
  s.add("pass", res.pass);
  s.add("points-checked", static_cast<std::int64_t>(res.points_checked));
  s.add("scope", std::string("sampled points only; a pass does not certify all x"));
  if (res.counterexample) {
    s.add("counterexample", res.counterexample->coeffs);
    r.escalate(ExitStatus::PropertyFalse);
  }
  return r;
}

Report local_inner_automorphism_report(const FinAlgebra& a, const LinearMap& t, std::uint64_t seed,
                                       std::size_t samples, std::size_t trials) {
  Report r;
  stamp(r, "local-test", a);
  r.seeds.emplace_back("samples", seed);
  const auto results = local_inner_automorphism_test(a, t, seed, samples, trials);
  std::int64_t witnesses = 0, infeasible = 0, inconclusive = 0;
  auto& pts = r.section("points");
  for (std::size_t k = 0; k < results.size(); ++k) {
    const auto& [x, res] = results[k];
    const std::string key = "point-" + std::to_string(k);
    pts.add(key + "-x", x.coeffs);
    switch (res.status) {
      case IntertwinerResult::Status::Witness:
        ++witnesses;
        pts.add(key, std::string("witness"));
        pts.add(key + "-u", res.u->coeffs);
        break;
      case IntertwinerResult::Status::Infeasible:
        ++infeasible;
        pts.add(key, std::string("infeasible"));
        break;
      case IntertwinerResult::Status::Inconclusive:
        ++inconclusive;
        pts.add(key, std::string("inconclusive"));
        break;
    }
  }
  r.section("local-inner-automorphism")
      .add("kind", std::string("inner-auto"))
      .add("points-checked", static_cast<std::int64_t>(results.size()))
      .add("witnesses", witnesses)
      .add("infeasible", infeasible)
      .add("inconclusive", inconclusive)
      .add("scope", std::string("sampled points only; a pass does not certify all x"));
  if (infeasible > 0)
    r.escalate(ExitStatus::PropertyFalse);
  else if (inconclusive > 0)
    r.escalate(ExitStatus::Inconclusive);
  return r;
}

Report run_pipeline(const std::string& command, const Options& o) {
  if (command == "gen") return gen(o);
  if (command == "analyze" || command == "trace") {
    const FinAlgebra a = load_algebra(require(o, "input", command), o);
    const std::uint64_t seed = unsigned_option(o, "seed", 0);
    const std::uint64_t trials = unsigned_option(o, "trials", 20);
    if (trials == 0) throw UsageError(command + ": --trials must be at least 1");
    return command == "analyze" ? analyze_report(a, seed, trials) : trace_report(a, seed, trials);
  }
  if (command == "derivations") return derivations_report(load_algebra(require(o, "input", command), o));
  if (command == "verify-thm31") return theorem31_report(load_algebra(require(o, "input", command), o));
  if (command == "verify-thm41") {
    const FinAlgebra a = load_algebra(require(o, "input", command), o);
    return theorem41_report(a, resolve_map(require(o, "map", command), a));
  }
  if (command == "local-test") {
    const FinAlgebra a = load_algebra(require(o, "input", command), o);
    const LinearMap m = resolve_map(require(o, "map", command), a);
    const std::string kind = require(o, "kind", command);
    const std::uint64_t seed = parse_unsigned(require(o, "seed", command), "seed");
    const std::uint64_t samples = parse_unsigned(require(o, "samples", command), "samples");
    if (samples == 0) throw UsageError("local-test: --samples must be at least 1");
    if (kind == "derivation") return local_derivation_report(a, m, seed, samples);
    if (kind == "inner-auto") {
      if (!a.is_unital()) throw UsageError("local-test --kind inner-auto needs a unital algebra");
      const std::uint64_t trials = unsigned_option(o, "trials", 20);
      if (trials == 0) throw UsageError("local-test: --trials must be at least 1");
      return local_inner_automorphism_report(a, m, seed, samples, trials);
    }
    throw UsageError("local-test: unknown --kind '" + kind + "' (derivation, inner-auto)");
  }
  throw UsageError("unknown command '" + command +
                   "' (gen, analyze, derivations, verify-thm31, verify-thm41, local-test, trace)");
}

}  // namespace csalg
