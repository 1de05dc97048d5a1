// SPDX-License-Identifier: Apache-2.0
// Batch front end: csalg <command> [inputs] [options]

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csalg/document.hpp"
#include "csalg/pipeline.hpp"
#include "csalg/report.hpp"

namespace {

constexpr int code(csalg::ExitStatus s) { return static_cast<int>(s); }

struct CommonFlags {
  std::string format = "text";
  std::string output;
  std::string max_dim;
};

void add_common(CLI::App* sub, CommonFlags& f) {
  sub->add_option("--format", f.format, "Report format")->check(CLI::IsMember({"text", "structured"}));
  sub->add_option("-o,--output", f.output, "Write the report (gen: the document) to this file");
  sub->add_option("--max-dim", f.max_dim, "Dimension cap (default 24, or $CSALG_MAX_DIM)");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace csalg;

  CLI::App app{"Exact computational toolkit for finite-dimensional associative algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  CommonFlags common;
  Options opts;
  std::vector<std::string> inputs;
  std::string n, cayley, name, map, kind, seed, samples, trials;

  auto* gen = app.add_subcommand("gen", "Materialize an algebra family as a document");
  gen->add_option("family", opts["family"], "matrix | group | triangular | direct | tensor | adjoin-unit")->required();
  gen->add_option("inputs", inputs, "Input algebra documents (direct, tensor, adjoin-unit)");
  gen->add_option("--n", n, "Matrix size");
  gen->add_option("--cayley", cayley, "Cayley table file");
  gen->add_option("--name", name, "Name of the generated group algebra");
  add_common(gen, common);

  auto file_command = [&](const char* cmd, const char* help) {
    auto* sub = app.add_subcommand(cmd, help);
    sub->add_option("algebra", inputs, "Algebra document")->required()->expected(1);
    add_common(sub, common);
    return sub;
  };
  auto* analyze = file_command("analyze", "Commutator subspace, commutator-simplicity, radical, traces");
  analyze->add_option("--seed", seed, "Seed of the nondegenerate-trace search (default 0)");
  analyze->add_option("--trials", trials, "Trials of the nondegenerate-trace search (default 20)");
  file_command("derivations", "Dimensions of the derivation-type map spaces");
  file_command("verify-thm31", "Check that the [A,A]-hypothesis maps are exactly the derivations");
  auto* thm41 = file_command("verify-thm41", "Check the cubic Jordan-homomorphism criterion for a map");
  thm41->add_option("--map", map, "transpose | identity | map file")->required();
  auto* local = file_command("local-test", "Sampled local-derivation / local inner automorphism test");
  local->add_option("--map", map, "transpose | identity | map file")->required();
  local->add_option("--kind", kind, "derivation | inner-auto")->required();
  local->add_option("--seed", seed, "Sampling seed")->required();
  local->add_option("--samples", samples, "Number of random sample points")->required();
  local->add_option("--trials", trials, "Invertibility trials per point (inner-auto, default 20)");
  auto* trace = file_command("trace", "Trace functionals on A^2 and nondegeneracy");
  trace->add_option("--seed", seed, "Seed of the nondegenerate-trace search (default 0)");
  trace->add_option("--trials", trials, "Trials of the nondegenerate-trace search (default 20)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : code(ExitStatus::UsageError);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (command != "gen") opts.erase("family");
  if (!inputs.empty()) opts["input"] = inputs[0];
  if (inputs.size() > 1) opts["input2"] = inputs[1];
  if (inputs.size() > 2) {
    std::cerr << "error: at most two input documents\n";
    return code(ExitStatus::UsageError);
  }
  for (auto [key, value] : {std::pair{"n", &n}, {"cayley", &cayley}, {"name", &name}, {"map", &map}, {"kind", &kind},
                            {"seed", &seed}, {"samples", &samples}, {"trials", &trials}, {"max-dim", &common.max_dim}})
    if (!value->empty()) opts[key] = *value;

  try {
    const Report report = run_pipeline(command, opts);
    const auto format = common.format == "structured" ? ReportFormat::Structured : ReportFormat::Text;
    if (command == "gen") {
      if (common.output.empty())
        std::cout << *report.document;
      else
        write_file(common.output, *report.document);
      return code(report.status);
    }
    const std::string text = emit_report(report, format);
    if (common.output.empty())
      std::cout << text;
    else
      write_file(common.output, text);
    return code(report.status);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return code(ExitStatus::UsageError);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return code(ExitStatus::UsageError);
  } catch (const AssociativityError& e) {
    std::cerr << "invalid algebra: " << e.what() << '\n';
    return code(ExitStatus::UsageError);
  } catch (const UnitError& e) {
    std::cerr << "invalid algebra: " << e.what() << '\n';
    return code(ExitStatus::UsageError);
  } catch (const GroupTableError& e) {
    std::cerr << "invalid Cayley table: " << e.what() << '\n';
    return code(ExitStatus::UsageError);
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return code(ExitStatus::UsageError);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return code(ExitStatus::InternalError);
  }
}
