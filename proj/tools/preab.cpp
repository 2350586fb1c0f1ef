// preab: validate instances and run identity suites.
//
//   preab validate --instance builtin:forms
//   preab check --suite envelope --max-weight 3 --instance builtin:pre-poisson-fixture
//   preab report --suite all --instance data/pre_gerstenhaber.json
//
// Exit status: 0 all identities hold, 1 some residual is nonzero, 2 usage or IO error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <preab/preab.hpp>

namespace {

struct Flags {
  preab::RunConfig cfg;
  std::string emit = "text";
  bool skip_axioms = false;
};

void add_run_flags(CLI::App* cmd, Flags& f, bool with_suites) {
  cmd->add_option("-i,--instance", f.cfg.source, "path, builtin:NAME or forms:vars,maxdeg")->capture_default_str();
  cmd->add_option("--max-failures", f.cfg.max_failures, "failure samples kept per identity")->capture_default_str();
  cmd->add_option("--threads", f.cfg.threads, "worker threads per suite")->capture_default_str();
  if (!with_suites) return;
  cmd->add_option("-s,--suite", f.cfg.suites, "axioms|tensor|prelie|envelope|symmetrized|all (repeatable)")
      ->capture_default_str();
  cmd->add_option("-w,--max-weight", f.cfg.weight, "weight cap for unary identities")->capture_default_str();
  cmd->add_option("--pair-weight", f.cfg.weight_pair, "weight cap for coproduct compositions")
      ->capture_default_str();
  cmd->add_option("--mutant", f.cfg.mutant, "enable one single-sign mutant");
  cmd->add_flag("--skip-axioms", f.skip_axioms, "do not prepend the axiom suite");
}

void emit(const std::vector<preab::SuiteReport>& rs, const std::string& how) {
  for (const auto& r : rs) {
    if (how == "machine")
      preab::emit_machine(std::cout, r);
    else
      preab::emit_text(std::cout, r);
  }
  if (how != "machine") preab::emit_summary(std::cout, rs);
}

int run(const std::string& mode, Flags f) {
  if (mode == "validate") f.cfg.suites = {"axioms"};
  if (mode == "check" && !f.skip_axioms) f.cfg.suites.insert(f.cfg.suites.begin(), "axioms");
  const auto suites = f.cfg.resolved_suites();  // rejects bad configs before any work
  if (f.cfg.mutant) preab::find_mutant(*f.cfg.mutant);
  const auto inst = preab::resolve_instance(f.cfg.source);

  std::vector<preab::SuiteReport> out;
  for (const auto& s : suites) out.push_back(preab::run_suite(s, inst, f.cfg));
  emit(out, mode == "report" ? "machine" : f.emit);
  if (mode == "report") return 0;
  return preab::all_passed(out) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact identity checker for graded pre-(a,b)-algebras"};
  app.require_subcommand(1);

  Flags f;
  auto* validate = app.add_subcommand("validate", "check the pre-(a,b) axioms of an instance");
  auto* check = app.add_subcommand("check", "run identity suites, exit 1 on any nonzero residual");
  auto* report = app.add_subcommand("report", "emit one machine record per identity");
  auto* list = app.add_subcommand("list", "print builtin instances, suites and mutants");
  add_run_flags(validate, f, false);
  add_run_flags(check, f, true);
  add_run_flags(report, f, true);
  for (auto* c : {validate, check}) c->add_option("--emit", f.emit, "text|machine")->check(CLI::IsMember({"text", "machine"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (list->parsed()) {
    for (const auto& n : preab::builtin_names()) std::cout << "builtin:" << n << "\n";
    for (const auto& s : preab::suite_names()) std::cout << "suite " << s << "\n";
    for (const auto& m : preab::mutants()) std::cout << "mutant " << m.name << " -> " << m.suite << "\n";
    return 0;
  }
  const std::string mode = validate->parsed() ? "validate" : check->parsed() ? "check" : "report";
  try {
    return run(mode, f);
  } catch (const std::exception& e) {
    std::cerr << "preab: " << e.what() << "\n";
    return 2;
  }
}
