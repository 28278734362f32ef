// frs: load fuzzy order structures from JSON documents, run the checkers and
// theorem batteries, and emit text or grep-able structured reports.
//
// Exit codes: 0 all executed checks passed, 1 property violation,
// 2 input/parse/precondition errors.

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "frs/extension.hpp"
#include "frs/io.hpp"
#include "frs/mutate.hpp"
#include "frs/seqmodel.hpp"
#include "frs/suite.hpp"

namespace {

using namespace frs;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string input;
  std::string out;
  std::string format = "text";
  std::uint64_t seed = 0;
  long trials = 200;
  long k_max = 20;
  std::string target = "foset";
  std::string vectors;

  bool structured() const { return format == "structured"; }
};

void emit(std::ostream& os, const Options& opt, const ReportLine& line,
          const std::string& text) {
  if (opt.structured()) {
    os << line.render() << "\n";
  } else {
    os << text << "\n";
  }
}

std::string describe_violation(const FuzzyOrderMatrix& m, const AxiomViolation& v) {
  switch (v.axiom) {
    case FosetAxiom::Reflexivity:
      return "(" + m.label(v.x) + ")";
    case FosetAxiom::Antisymmetry:
      return "(" + m.label(v.x) + "," + m.label(v.y) + ")";
    case FosetAxiom::Transitivity:
      return "(" + m.label(v.x) + "," + m.label(v.y) + "," + m.label(v.z) + ")";
  }
  return "";
}

int cmd_check_foset(std::ostream& os, const Options& opt) {
  const FuzzyOrderMatrix m = foset_from_json(load_json_file(opt.input));
  const AxiomReport report = validate_fuzzy_order(m);

  const auto axiom_line = [&](const char* name, bool pass) {
    ReportLine line;
    line.kv("def", "1.1").kv("axiom", name).kv("status", pass ? "pass" : "fail");
    std::string text = std::string(name) + ": " + (pass ? "pass" : "fail");
    for (const AxiomViolation& v : report.violations) {
      if (std::string(axiom_name(v.axiom)) != name) continue;
      line.kv("witness", describe_violation(m, v));
      text += " witness=" + describe_violation(m, v);
    }
    emit(os, opt, line, text);
  };
  if (!opt.structured()) os << "foset: size=" << m.size << "\n";
  axiom_line("reflexivity", report.reflexive);
  axiom_line("antisymmetry", report.antisymmetric);
  axiom_line("transitivity", report.transitive);
  return report.valid() ? kExitPass : kExitViolation;
}

int cmd_check_space(std::ostream& os, const Options& opt) {
  const GradedSpace sp = space_from_json(load_json_file(opt.input));
  int status = kExitPass;

  const CompatibilityReport compat = check_compatibility(sp, opt.trials, opt.seed);
  {
    ReportLine line;
    line.kv("def", "1.3").kv("status", compat.ok() ? "pass" : "fail").kv("trials", compat.trials);
    emit(os, opt, line,
         "compatibility (translation/scaling): " + std::string(compat.ok() ? "pass" : "fail") +
             " trials=" + std::to_string(compat.trials));
    if (!compat.ok()) status = kExitViolation;
  }
  {
    const bool arch = check_archimedean(sp);
    ReportLine line;
    line.kv("def", "1.9").kv("status", arch ? "pass" : "fail");
    emit(os, opt, line, "archimedean: " + std::string(arch ? "pass" : "fail"));
    if (!arch) status = kExitViolation;
  }
  {
    Rng rng(opt.seed);
    bool identities = true;
    for (long t = 0; t < opt.trials; ++t) {
      const Vec x = random_vec(rng, sp.dim);
      const Vec y = random_vec(rng, sp.dim);
      const LatticeOps ops = lattice_ops(sp, x, y);
      identities = identities && x == ops.pos - ops.neg && ops.abs == ops.pos + ops.neg &&
                   cwise_min(ops.pos, ops.neg).is_zero() && x + y == ops.join + ops.meet;
    }
    ReportLine line;
    line.kv("id", "lattice-calculus").kv("status", identities ? "pass" : "fail")
        .kv("trials", opt.trials);
    emit(os, opt, line,
         "lattice identities: " + std::string(identities ? "pass" : "fail") +
             " trials=" + std::to_string(opt.trials));
    if (!identities) status = kExitViolation;
  }
  return status;
}

int cmd_check_operator(std::ostream& os, const Options& opt) {
  const RationalOperator op = operator_from_json(load_json_file(opt.input));
  // classify_operator raises logic_error if its two homomorphism oracles
  // disagree; that surfaces as a violation, not a classification.
  const ClassifyReport report = classify_operator(op, opt.trials, opt.seed);

  {
    ReportLine line;
    line.kv("op", "classify")
        .kv("positive", report.positive ? "true" : "false")
        .kv("order_bounded", report.order_bounded ? "true" : "false")
        .kv("riesz_hom", report.riesz_hom ? "true" : "false")
        .kv("sigma_hom", report.sigma_hom ? "true" : "false");
    std::ostringstream text;
    text << "classification: positive=" << (report.positive ? "true" : "false")
         << " order_bounded=" << (report.order_bounded ? "true" : "false")
         << " riesz_hom=" << (report.riesz_hom ? "true" : "false")
         << " sigma_hom=" << (report.sigma_hom ? "true" : "false");
    emit(os, opt, line, text.str());
  }
  {
    ReportLine line;
    line.kv("def", "2.1").kv("check", "oracle-agreement").kv("status", "pass")
        .kv("trials", report.semantic_trials);
    emit(os, opt, line, "structural and semantic homomorphism oracles agree");
  }
  if (report.riesz_hom) {
    const CoordinateIdeal kernel = kernel_ideal(op);
    ReportLine line;
    line.kv("thm", "3.7").kv("kernel", to_json(kernel).dump()).kv("status", "pass");
    emit(os, opt, line, "kernel ideal: " + to_json(kernel).dump());
  }
  return kExitPass;
}

int cmd_quotient(std::ostream& os, const Options& opt) {
  const QuotientSpace q = quotient_from_json(load_json_file(opt.input));
  int status = kExitPass;

  const QuotientLatticeReport lattice = check_quotient_lattice(q, opt.trials, opt.seed);
  {
    ReportLine line;
    line.kv("thm", "3.5").kv("status", lattice.ok() ? "pass" : "fail").kv("trials", lattice.trials);
    if (!lattice.ok() && !lattice.failures.empty()) line.kv("witness", lattice.failures.front());
    emit(os, opt, line,
         "quotient lattice: " + std::string(lattice.ok() ? "pass" : "fail") +
             " trials=" + std::to_string(lattice.trials));
    if (!lattice.ok()) status = kExitViolation;
  }
  const ProjectionHomReport proj = check_projection_hom(q, std::min<long>(opt.trials, 512), opt.seed);
  {
    ReportLine line;
    line.kv("thm", "3.6").kv("status", proj.riesz_hom && proj.positive_part_commutes ? "pass" : "fail");
    emit(os, opt, line, std::string("canonical projection homomorphism: ") +
                            (proj.riesz_hom && proj.positive_part_commutes ? "pass" : "fail"));
    ReportLine kernel_line;
    kernel_line.kv("thm", "3.7").kv("status", proj.kernel_matches ? "pass" : "fail");
    emit(os, opt, kernel_line,
         std::string("projection kernel equals the ideal: ") + (proj.kernel_matches ? "pass" : "fail"));
    if (!proj.ok()) status = kExitViolation;
  }

  if (!opt.vectors.empty()) {
    const Json doc = load_json_file(opt.vectors);
    if (!doc.is_array()) throw InputError("--vectors expects an array of vectors");
    std::vector<QClass> classes;
    for (const Json& entry : doc) classes.push_back(project(q, vec_from_json(entry)));
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = 0; j < classes.size(); ++j) {
        const Rational g = quotient_grade(q, classes[i], classes[j]);
        ReportLine line;
        line.kv("nu", std::to_string(i) + "," + std::to_string(j)).kv("grade", format_rational(g));
        emit(os, opt, line,
             "nu([" + std::to_string(i) + "],[" + std::to_string(j) + "]) = " + format_rational(g));
      }
    }
  }
  return status;
}

int cmd_battery(std::ostream& os, const Options& opt) {
  const QuotientSpace q = quotient_from_json(load_json_file(opt.input));
  const ArchimedeanBattery battery = archimedean_battery(q, opt.trials, opt.seed);
  const auto line_for = [&](const char* name, bool value) {
    ReportLine line;
    line.kv("thm", "3.8").kv("cond", name).kv("status", value ? "pass" : "fail");
    emit(os, opt, line, std::string(name) + ": " + (value ? "pass" : "fail"));
  };
  line_for("archimedean", battery.archimedean);
  line_for("uniformly-closed", battery.uniformly_closed);
  line_for("monotone-limits", battery.cond3);
  line_for("stabilization", battery.cond4);
  return battery.all() ? kExitPass : kExitViolation;
}

int cmd_demo_nonarch(std::ostream& os, const Options& opt) {
  const NonArchDemo demo = nonarchimedean_demo(opt.k_max);
  for (const NonArchRow& row : demo.rows) {
    ReportLine line;
    line.kv("ex", "3").kv("k", row.k).kv("grade", format_rational(row.grade))
        .kv("lambda", format_rational(row.lambda)).kv("patch", row.patch_size)
        .kv("membership", row.membership_ok ? "ok" : "fail")
        .kv("domination", row.domination_ok ? "ok" : "fail");
    std::ostringstream text;
    text << "k=" << row.k << " nu([y],(1/k)[e])=" << format_rational(row.grade)
         << " correction lambda=" << format_rational(row.lambda)
         << " patch=" << row.patch_size;
    emit(os, opt, line, text.str());
  }
  {
    ReportLine line;
    line.kv("ex", "3").kv("y_nonzero", demo.y_nonzero_in_quotient ? "true" : "false")
        .kv("verdict", demo.verdict_not_archimedean ? "not-archimedean" : "inconclusive");
    emit(os, opt, line,
         std::string("[y] != [0]: ") + (demo.y_nonzero_in_quotient ? "true" : "false") +
             "; verdict: quotient is " +
             (demo.verdict_not_archimedean ? "NOT fuzzy Archimedean" : "inconclusive"));
  }
  return demo.verdict_not_archimedean ? kExitPass : kExitViolation;
}

int cmd_theta(std::ostream& os, const Options& opt) {
  const ThetaInstance inst = theta_instance_from_json(load_json_file(opt.input));
  const SublatticeSubspace m =
      SublatticeSubspace::verified(inst.space, inst.basis, 2, 32, opt.seed);
  const Vec value = theta_extension(m, inst.op, inst.x);
  ReportLine line;
  line.kv("thm", "4.13").kv("theta", to_json(value).dump()).kv("status", "pass");
  emit(os, opt, line, "theta(x) = " + value.to_string());
  return kExitPass;
}

int cmd_factorize(std::ostream& os, const Options& opt) {
  const FactorizationInstance inst = factorization_from_json(load_json_file(opt.input));
  const RationalOperator s1 = factorize(inst.q, inst.s, inst.t);
  ReportLine line;
  line.kv("thm", "5.1").kv("S1", to_json(s1).dump()).kv("status", "pass");
  emit(os, opt, line, "S1 = " + to_json(s1).dump());
  return kExitPass;
}

int cmd_mutate(std::ostream& os, const Options& opt) {
  const MutationOutcome outcome =
      run_mutation_harness(mutation_target_from_name(opt.target), opt.trials, opt.seed);
  ReportLine line;
  line.kv("mutation", opt.target).kv("detected", outcome.detected).kv("trials", outcome.trials)
      .kv("rerolls", outcome.rerolls).kv("status", outcome.ok() ? "pass" : "fail");
  std::ostringstream text;
  text << outcome.detected << "/" << outcome.trials << " mutants detected (rerolls "
       << outcome.rerolls << ")";
  emit(os, opt, line, text.str());
  for (const std::string& failure : outcome.failures) {
    ReportLine fail_line;
    fail_line.kv("mutation", opt.target).kv("failure", failure);
    emit(os, opt, fail_line, "failure: " + failure);
  }
  return outcome.ok() ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy Riesz space verification toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--seed", opt.seed, "randomness seed (fixes all sampling)");
  app.add_option("--trials", opt.trials, "sample count for randomized checks");
  app.add_option("--format", opt.format, "output format: text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--out", opt.out, "also write the report to this file");

  const auto add_input = [&opt](CLI::App* sub, bool positional) {
    sub->fallthrough();  // let --seed/--trials/--format/--out follow the subcommand
    if (positional) sub->add_option("input", opt.input, "input document");
    sub->add_option("--in", opt.input, "input document");
  };

  CLI::App* check_foset = app.add_subcommand("check-foset", "validate a fuzzy order");
  add_input(check_foset, true);
  CLI::App* check_space = app.add_subcommand("check-space", "check a graded space");
  add_input(check_space, true);
  CLI::App* check_operator = app.add_subcommand("check-operator", "classify an operator");
  add_input(check_operator, true);
  CLI::App* quotient = app.add_subcommand("quotient", "check a quotient space");
  add_input(quotient, true);
  quotient->add_option("--vectors", opt.vectors, "vectors whose nu-table to print");
  CLI::App* battery = app.add_subcommand("battery", "the four Archimedean-quotient conditions");
  add_input(battery, true);
  CLI::App* demo = app.add_subcommand("demo-nonarch", "non-Archimedean quotient certificates");
  demo->fallthrough();
  demo->add_option("--k-max", opt.k_max, "largest k to certify");
  CLI::App* theta = app.add_subcommand("theta", "dominated extension value");
  add_input(theta, true);
  CLI::App* factorize_cmd = app.add_subcommand("factorize", "factor T through a homomorphism");
  add_input(factorize_cmd, true);
  CLI::App* mutate = app.add_subcommand("mutate", "mutation detection harness");
  mutate->fallthrough();
  mutate->add_option("--target", opt.target, "foset|hom|ideal|quotient");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  std::ostringstream buffer;
  int status = kExitInput;
  try {
    if (check_foset->parsed()) status = cmd_check_foset(buffer, opt);
    if (check_space->parsed()) status = cmd_check_space(buffer, opt);
    if (check_operator->parsed()) status = cmd_check_operator(buffer, opt);
    if (quotient->parsed()) status = cmd_quotient(buffer, opt);
    if (battery->parsed()) status = cmd_battery(buffer, opt);
    if (demo->parsed()) status = cmd_demo_nonarch(buffer, opt);
    if (theta->parsed()) status = cmd_theta(buffer, opt);
    if (factorize_cmd->parsed()) status = cmd_factorize(buffer, opt);
    if (mutate->parsed()) status = cmd_mutate(buffer, opt);
  } catch (const InputError& e) {
    buffer << "input error: " << e.what() << "\n";
    status = kExitInput;
  } catch (const PreconditionError& e) {
    buffer << "precondition violated: " << e.what() << "\n";
    status = kExitInput;
  } catch (const std::logic_error& e) {
    buffer << "property violation: " << e.what() << "\n";
    status = kExitViolation;
  } catch (const std::exception& e) {
    buffer << "error: " << e.what() << "\n";
    status = kExitInput;
  }

  std::cout << buffer.str();
  if (!opt.out.empty()) {
    std::ofstream out(opt.out);
    if (!out) {
      std::cerr << "cannot write " << opt.out << "\n";
      return kExitInput;
    }
    out << buffer.str();
  }
  return status;
}
