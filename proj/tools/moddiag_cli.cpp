// moddiag_cli.cpp -- command-line front end; talks to the library through the
// public C interface only.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "moddiag/moddiag.h"

namespace {

constexpr int kExitUsage = 2;

struct AutomatonDeleter {
  void operator()(moddiag_automaton* a) const { moddiag_automaton_free(a); }
};
struct SystemDeleter {
  void operator()(moddiag_system* s) const { moddiag_system_free(s); }
};
struct ReportDeleter {
  void operator()(moddiag_report* r) const { moddiag_report_free(r); }
};
using AutomatonPtr = std::unique_ptr<moddiag_automaton, AutomatonDeleter>;
using SystemPtr = std::unique_ptr<moddiag_system, SystemDeleter>;
using ReportPtr = std::unique_ptr<moddiag_report, ReportDeleter>;

// Second argument is a pointer-to-pointer on purpose: the first argument's
// call fills *s, and argument evaluation order is unspecified.
std::string take_string(moddiag_status st, char** s) {
  if (st != MODDIAG_OK || !*s) return {};
  std::string out(*s);
  moddiag_string_free(*s);
  *s = nullptr;
  return out;
}

[[noreturn]] void die(const std::string& context) {
  std::cerr << "error: " << context;
  const char* detail = moddiag_last_error();
  if (detail && *detail) std::cerr << ": " << detail;
  std::cerr << "\n";
  std::exit(kExitUsage);
}

AutomatonPtr load_automaton(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    std::exit(kExitUsage);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  moddiag_automaton* a = nullptr;
  if (moddiag_automaton_parse(text.c_str(), &a) != MODDIAG_OK) die(path);
  return AutomatonPtr(a);
}

SystemPtr load_system(const std::vector<std::string>& paths,
                      std::vector<AutomatonPtr>& keep_alive) {
  moddiag_system* s = nullptr;
  if (moddiag_system_new(&s) != MODDIAG_OK) die("system");
  SystemPtr sys(s);
  for (const auto& path : paths) {
    auto a = load_automaton(path);
    if (moddiag_system_add(sys.get(), a.get()) != MODDIAG_OK) die(path);
    keep_alive.push_back(std::move(a));
  }
  return sys;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    std::exit(kExitUsage);
  }
  out << content;
}

// Prints the report in the chosen format and converts it to an exit code.
int finish(ReportPtr rep, const std::string& format) {
  char* s = nullptr;
  std::string body;
  if (format == "json")
    body = take_string(moddiag_report_json(rep.get(), &s), &s);
  else
    body = take_string(moddiag_report_text(rep.get(), &s), &s);
  std::cout << body;
  return moddiag_report_exit_code(rep.get());
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modular discrete-event diagnosability toolkit"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  int jobs = 0;
  app.add_option("--jobs", jobs, "worker threads (default: MODDIAG_JOBS or 1)");

  // compose
  auto* cmd_compose = app.add_subcommand("compose", "parallel composition of automata");
  std::vector<std::string> compose_files;
  std::string compose_out, compose_name;
  cmd_compose->add_option("files", compose_files, "input .fsm files")->required()->expected(-1);
  cmd_compose->add_option("-o,--output", compose_out, "write the composed .fsm here");
  cmd_compose->add_option("--name", compose_name, "name of the result");

  // project
  auto* cmd_project = app.add_subcommand("project", "natural projection onto a mask");
  std::string project_file, project_out;
  std::vector<std::string> project_obs;
  cmd_project->add_option("file", project_file, "input .fsm file")->required();
  cmd_project->add_option("--obs", project_obs, "events kept by the mask")
      ->required()
      ->delimiter(',');
  cmd_project->add_option("-o,--output", project_out, "write the projected .fsm here");

  // verifier
  auto* cmd_verifier = app.add_subcommand("verifier", "twin-plant verifier for one module");
  std::string verifier_file, verifier_dot;
  std::vector<std::string> verifier_obs;
  cmd_verifier->add_option("file", verifier_file, "input .fsm file")->required();
  cmd_verifier->add_option("--obs", verifier_obs, "observation mask (default: module observables)")
      ->delimiter(',');
  cmd_verifier->add_option("--dot", verifier_dot, "write the pair-state graph here");

  // check local|modular|virtual
  auto* cmd_check = app.add_subcommand("check", "diagnosability checks");
  cmd_check->require_subcommand(1);
  auto* cmd_local = cmd_check->add_subcommand("local", "each module in isolation");
  auto* cmd_modular = cmd_check->add_subcommand("modular", "modules inside the full system");
  auto* cmd_virtual = cmd_check->add_subcommand("virtual", "blocks share observations");
  std::vector<std::string> local_files, modular_files, virtual_files;
  std::string virtual_partition;
  cmd_local->add_option("files", local_files, "module .fsm files")->required()->expected(-1);
  cmd_modular->add_option("files", modular_files, "module .fsm files")->required()->expected(-1);
  cmd_virtual->add_option("files", virtual_files, "module .fsm files")->required()->expected(-1);
  cmd_virtual->add_option("--partition", virtual_partition,
                          "blocks as \"a,b|c\" (default: all modules in one block)");

  // analyze
  auto* cmd_analyze = app.add_subcommand("analyze", "structural filter for one candidate pair");
  std::string analyze_faulty, analyze_candidate;
  bool analyze_strict = false;
  cmd_analyze->add_option("faulty", analyze_faulty, "fault module .fsm")->required();
  cmd_analyze->add_option("candidate", analyze_candidate, "candidate module .fsm")->required();
  cmd_analyze->add_flag("--strict", analyze_strict, "require the non-faulty side to be supported");

  // synthesize
  auto* cmd_synth = app.add_subcommand("synthesize", "search for a working partition");
  std::vector<std::string> synth_files;
  bool synth_exhaustive = false;
  int synth_max_modules = 8;
  cmd_synth->add_option("files", synth_files, "module .fsm files")->required()->expected(-1);
  cmd_synth->add_flag("--exhaustive", synth_exhaustive, "try every partition, fewest merges first");
  cmd_synth->add_option("--max-modules", synth_max_modules,
                        "cap for the exhaustive enumeration (default 8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (jobs > 0) setenv("MODDIAG_JOBS", std::to_string(jobs).c_str(), 1);

  if (cmd_compose->parsed()) {
    std::vector<AutomatonPtr> autos;
    for (const auto& f : compose_files) autos.push_back(load_automaton(f));
    std::vector<const moddiag_automaton*> raw;
    for (const auto& a : autos) raw.push_back(a.get());
    moddiag_automaton* result = nullptr;
    if (moddiag_compose(raw.data(), raw.size(), compose_name.empty() ? nullptr : compose_name.c_str(),
                        &result) != MODDIAG_OK)
      die("compose");
    AutomatonPtr composed(result);
    char* s = nullptr;
    std::string fsm = take_string(moddiag_automaton_serialize(composed.get(), &s), &s);
    if (!compose_out.empty()) {
      write_file(compose_out, fsm);
      std::cout << "wrote " << compose_out << " (" << moddiag_automaton_state_count(composed.get())
                << " states)\n";
    } else {
      std::cout << fsm;
    }
    return 0;
  }

  if (cmd_project->parsed()) {
    auto a = load_automaton(project_file);
    auto obs = c_strings(project_obs);
    moddiag_automaton* result = nullptr;
    if (moddiag_project(a.get(), obs.data(), obs.size(), &result) != MODDIAG_OK)
      die(project_file);
    AutomatonPtr projected(result);
    char* s = nullptr;
    std::string fsm = take_string(moddiag_automaton_serialize(projected.get(), &s), &s);
    if (!project_out.empty()) {
      write_file(project_out, fsm);
      std::cout << "wrote " << project_out << " (" << moddiag_automaton_state_count(projected.get())
                << " states)\n";
    } else {
      std::cout << fsm;
    }
    return 0;
  }

  if (cmd_verifier->parsed()) {
    auto a = load_automaton(verifier_file);
    auto obs = c_strings(verifier_obs);
    moddiag_report* r = nullptr;
    if (moddiag_verifier(a.get(), obs.empty() ? nullptr : obs.data(), obs.size(), &r) != MODDIAG_OK)
      die(verifier_file);
    ReportPtr rep(r);
    if (!verifier_dot.empty()) {
      char* s = nullptr;
      write_file(verifier_dot, take_string(moddiag_report_dot(rep.get(), &s), &s));
    }
    return finish(std::move(rep), format);
  }

  if (cmd_local->parsed()) {
    // one verdict per file, collected into a single report ordering
    int worst = 0;
    for (const auto& f : local_files) {
      auto a = load_automaton(f);
      moddiag_report* r = nullptr;
      if (moddiag_check_local(a.get(), &r) != MODDIAG_OK) die(f);
      int code = finish(ReportPtr(r), format);
      worst = std::max(worst, code);
    }
    return worst;
  }

  if (cmd_modular->parsed()) {
    std::vector<AutomatonPtr> keep;
    auto sys = load_system(modular_files, keep);
    moddiag_report* r = nullptr;
    if (moddiag_check_modular(sys.get(), &r) != MODDIAG_OK) die("check modular");
    return finish(ReportPtr(r), format);
  }

  if (cmd_virtual->parsed()) {
    std::vector<AutomatonPtr> keep;
    auto sys = load_system(virtual_files, keep);
    moddiag_report* r = nullptr;
    if (moddiag_check_virtual(sys.get(),
                              virtual_partition.empty() ? nullptr : virtual_partition.c_str(),
                              &r) != MODDIAG_OK)
      die("check virtual");
    return finish(ReportPtr(r), format);
  }

  if (cmd_analyze->parsed()) {
    auto faulty = load_automaton(analyze_faulty);
    auto candidate = load_automaton(analyze_candidate);
    moddiag_report* r = nullptr;
    if (moddiag_analyze(faulty.get(), candidate.get(), analyze_strict ? 1 : 0, &r) != MODDIAG_OK)
      die("analyze");
    return finish(ReportPtr(r), format);
  }

  if (cmd_synth->parsed()) {
    std::vector<AutomatonPtr> keep;
    auto sys = load_system(synth_files, keep);
    moddiag_report* r = nullptr;
    if (moddiag_synthesize(sys.get(), synth_exhaustive ? 1 : 0, synth_max_modules, &r) !=
        MODDIAG_OK)
      die("synthesize");
    return finish(ReportPtr(r), format);
  }

  return kExitUsage;
}
