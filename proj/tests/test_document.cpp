// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "csalg/document.hpp"
#include "csalg/pipeline.hpp"
#include "csalg/report.hpp"
#include "support.hpp"

using namespace csalg;
using namespace csalg::test;

namespace {

std::string data(const std::string& file) { return std::string(CSALG_TEST_DATA) + "/" + file; }

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("csalg-test-" + name);
  write_file(path.string(), contents);
  return path.string();
}

template <class T>
T entry(const Report& r, std::string_view section, std::string_view key) {
  const ReportSection* s = r.find_section(section);
  REQUIRE(s != nullptr);
  const ReportValue* v = s->find(key);
  REQUIRE(v != nullptr);
  REQUIRE(std::holds_alternative<T>(*v));
  return std::get<T>(*v);
}

}  // namespace

TEST_CASE("parse the hand-written M2 document") {
  const FinAlgebra a = parse_algebra_document(read_file(data("m2.alg")));
  CHECK(a.same_structure(build_matrix_algebra(2)));
  CHECK(a.name() == "M2");
  CHECK(a.label(1) == "e12");
  CHECK(a.one() == Element(Vec{1, 0, 0, 1}));
}

TEST_CASE("parse errors carry locations") {
  const std::string bad = "dim 2\nproduct 0 0 : 1/0 0\n";
  try {
    parse_document(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column > 0);
  }
  CHECK_THROWS_AS(parse_document("product 0 0 : 1 0\n"), ParseError);  // dim must come first
  CHECK_THROWS_AS(parse_document("dim 2\nproduct 0 0 : 1\n"), ParseError);
  CHECK_THROWS_AS(parse_document("dim 2\nproduct 0 0 : 1 0\nproduct 0 0 : 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_document("dim 2\nproduct 0 2 : 1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_document("dim 2\nfrobnicate\n"), ParseError);
  CHECK_THROWS_AS(read_file("/nonexistent/csalg/file.alg"), FileError);
}

TEST_CASE("perturbed constant is rejected with the failing triple") {
  std::string text = read_file(data("m2.alg"));
  const std::string from = "product 1 2 : 1 0 0 0";
  text.replace(text.find(from), from.size(), "product 1 2 : 2 0 0 0");
  try {
    parse_algebra_document(text);
    FAIL("expected AssociativityError");
  } catch (const AssociativityError& e) {
    // recompute the failing triple by hand from the perturbed table
    const AlgebraDocument doc = parse_document(text);
    std::vector<Rational> c(64, Rational(0));
    for (const auto& p : doc.products)
      for (std::size_t k = 0; k < 4; ++k) c[(p.i * 4 + p.j) * 4 + k] = p.coeffs[k];
    Vec left(4, Rational(0)), right(4, Rational(0));
    for (std::size_t m = 0; m < 4; ++m)
      for (std::size_t k = 0; k < 4; ++k) {
        left[k] += c[(e.i * 4 + e.j) * 4 + m] * c[(m * 4 + e.k) * 4 + k];
        right[k] += c[(e.j * 4 + e.k) * 4 + m] * c[(e.i * 4 + m) * 4 + k];
      }
    CHECK(left != right);
    CHECK(left == e.left_product);
    CHECK(right == e.right_product);
  }
}

TEST_CASE("serialization round trip") {
  for (const auto& [name, a] : corpus()) {
    CAPTURE(name);
    const std::string text = serialize_algebra(a);
    const FinAlgebra b = parse_algebra_document(text);
    CHECK(b.same_structure(a));
    CHECK(b.labels() == a.labels());
    CHECK(b.is_unital() == a.is_unital());
    CHECK(serialize_algebra(b) == text);
  }
  const FiniteGroup d4 = FiniteGroup::dihedral(4);
  CHECK(parse_cayley_table(serialize_cayley_table(d4)).cayley() == d4.cayley());
  const LinearMap t = LinearMap::transpose_on_matrices(2);
  CHECK(parse_map(serialize_map(t)) == t);
  CHECK(parse_cayley_table(read_file(data("s3.tbl"))).cayley() == FiniteGroup::symmetric(3).cayley());
  CHECK(parse_cayley_table(read_file(data("d4.tbl"))).cayley() == d4.cayley());
}

TEST_CASE("gen output parses back to the same algebra") {
  const Report r = run_pipeline("gen", {{"family", "matrix"}, {"n", "3"}});
  REQUIRE(r.document);
  CHECK(parse_algebra_document(*r.document).same_structure(build_matrix_algebra(3)));
  const Report g = run_pipeline("gen", {{"family", "group"}, {"cayley", data("s3.tbl")}, {"name", "QS3"}});
  REQUIRE(g.document);
  CHECK(parse_algebra_document(*g.document).same_structure(qs3()));
  CHECK(g.fingerprint == fingerprint(*g.document));

  const std::string m2 = data("m2.alg");
  const Report t = run_pipeline("gen", {{"family", "tensor"}, {"input", m2}, {"input2", m2}});
  CHECK(entry<std::int64_t>(t, "generated", "dim") == 16);
  CHECK_THROWS_AS(run_pipeline("gen", {{"family", "klein"}}), UsageError);
  CHECK_THROWS_AS(run_pipeline("gen", {{"family", "matrix"}, {"n", "0"}}), UsageError);
}

TEST_CASE("dimension cap") {
  CHECK(max_dim({}) == kDefaultMaxDim);
  CHECK(max_dim({{"max-dim", "7"}}) == 7);
  CHECK_THROWS_AS(run_pipeline("gen", {{"family", "matrix"}, {"n", "5"}}), UsageError);
  CHECK_NOTHROW(run_pipeline("gen", {{"family", "matrix"}, {"n", "5"}, {"max-dim", "25"}}));
  CHECK_THROWS_AS(run_pipeline("analyze", {{"input", data("m2.alg")}, {"max-dim", "3"}}), UsageError);
  ::setenv(kMaxDimEnv, "3", 1);
  CHECK(max_dim({}) == 3);
  CHECK(max_dim({{"max-dim", "9"}}) == 9);
  ::unsetenv(kMaxDimEnv);
}

TEST_CASE("pipeline usage errors") {
  CHECK_THROWS_AS(run_pipeline("frobnicate", {}), UsageError);
  CHECK_THROWS_AS(run_pipeline("analyze", {}), UsageError);
  CHECK_THROWS_AS(run_pipeline("verify-thm41", {{"input", data("m2.alg")}}), UsageError);
  CHECK_THROWS_AS(run_pipeline("local-test", {{"input", data("m2.alg")}, {"map", "identity"}, {"kind", "x"},
                                              {"seed", "1"}, {"samples", "3"}}),
                  UsageError);
  CHECK_THROWS_AS(run_pipeline("analyze", {{"input", "/nonexistent.alg"}}), FileError);
}

TEST_CASE("analyze M2") {
  const Report r = run_pipeline("analyze", {{"input", data("m2.alg")}});
  CHECK(r.status == ExitStatus::Ok);
  CHECK(entry<bool>(r, "commutator", "commutator-simple"));
  CHECK(entry<std::int64_t>(r, "commutator", "dim[A,A]") == 3);
  CHECK(entry<bool>(r, "radical", "semiprime"));
  CHECK(entry<std::int64_t>(r, "radical", "dim") == 0);
  CHECK(entry<std::string>(r, "trace", "nondegenerate-trace") == "found");
}

TEST_CASE("analyze T2 reports property false") {
  const Report r = analyze_report(build_upper_triangular(2), 0, 20);
  CHECK(r.status == ExitStatus::PropertyFalse);
  CHECK_FALSE(entry<bool>(r, "commutator", "commutator-simple"));
  CHECK_FALSE(entry<bool>(r, "radical", "semiprime"));
  CHECK(entry<std::int64_t>(r, "radical", "dim") == 1);
}

TEST_CASE("verify-thm31 on Q[S3]") {
  const std::string alg = temp_file("qs3.alg", serialize_algebra(qs3()));
  const Report r = run_pipeline("verify-thm31", {{"input", alg}});
  CHECK(r.status == ExitStatus::Ok);
  CHECK(entry<std::int64_t>(r, "summary", "H-dim") == 3);
  CHECK(entry<std::int64_t>(r, "summary", "Der-dim") == 3);
  CHECK(entry<std::string>(r, "verdict", "verdict") == "verified");

  const Report t = theorem31_report(build_upper_triangular(2));
  CHECK(t.status == ExitStatus::HypothesesNotMet);
}

TEST_CASE("verify-thm41 and local tests through the pipeline") {
  const std::string m2 = data("m2.alg");
  const Report t = run_pipeline("verify-thm41", {{"input", m2}, {"map", "transpose"}});
  CHECK(t.status == ExitStatus::Ok);
  CHECK(entry<bool>(t, "multiplicativity", "antihomomorphism"));
  CHECK_FALSE(entry<bool>(t, "multiplicativity", "homomorphism"));

  const std::string twice = temp_file("twice.map", serialize_map(LinearMap(Rational(2) * Mat::identity(4))));
  CHECK(run_pipeline("verify-thm41", {{"input", m2}, {"map", twice}}).status == ExitStatus::HypothesesNotMet);

  const Report id = run_pipeline(
      "local-test", {{"input", m2}, {"map", "identity"}, {"kind", "derivation"}, {"seed", "4"}, {"samples", "5"}});
  CHECK(id.status == ExitStatus::PropertyFalse);
  CHECK(entry<Vec>(id, "local-derivation", "counterexample") == Vec{1, 0, 0, 1});

  const Report ia = run_pipeline(
      "local-test", {{"input", m2}, {"map", "transpose"}, {"kind", "inner-auto"}, {"seed", "4"}, {"samples", "5"}});
  CHECK(ia.status == ExitStatus::Ok);
}

TEST_CASE("reports are deterministic") {
  const Options o{{"input", data("m2.alg")}, {"seed", "11"}};
  for (auto fmt : {ReportFormat::Text, ReportFormat::Structured})
    CHECK(emit_report(run_pipeline("analyze", o), fmt) == emit_report(run_pipeline("analyze", o), fmt));
  const Options l{{"input", data("m2.alg")}, {"map", "transpose"}, {"kind", "inner-auto"},
                  {"seed", "3"},             {"samples", "6"},     {"trials", "5"}};
  CHECK(emit_report(run_pipeline("local-test", l), ReportFormat::Structured) ==
        emit_report(run_pipeline("local-test", l), ReportFormat::Structured));
}

TEST_CASE("structured report round trip") {
  for (const Report& r : {analyze_report(build_matrix_algebra(2), 0, 20), theorem31_report(qs3()),
                          theorem41_report(build_matrix_algebra(2), LinearMap::transpose_on_matrices(2))}) {
    const std::string s = emit_report(r, ReportFormat::Structured);
    const Report back = parse_structured_report(s);
    CHECK(emit_report(back, ReportFormat::Structured) == s);
    CHECK(back.status == r.status);
    CHECK(back.fingerprint == r.fingerprint);
  }
}

TEST_CASE("refutation rendering") {
  Report r;
  r.command = "verify-thm31";
  r.section("verdict")
      .add("verdict", std::string("REFUTATION"))
      .add("witness", std::string("map violates Leibniz"))
      .add("witness-map", Vec{1, 0, 0, 1});
  r.escalate(ExitStatus::Refutation);
  r.escalate(ExitStatus::HypothesesNotMet);  // lower severity does not override
  CHECK(r.status == ExitStatus::Refutation);
  const std::string text = emit_report(r, ReportFormat::Text);
  CHECK(text.find("verdict: REFUTATION") != std::string::npos);
  CHECK(text.find("witness-map: (1, 0, 0, 1)") != std::string::npos);
  CHECK(text.find("status: refutation (5)") != std::string::npos);
  const std::string json = emit_report(r, ReportFormat::Structured);
  CHECK(json.find("\"exit_code\": 5") != std::string::npos);
}

TEST_CASE("fingerprint") {
  CHECK(fingerprint("") == "fnv1a64:cbf29ce484222325");
  CHECK(fingerprint("a") == "fnv1a64:af63dc4c8601ec8c");
}
