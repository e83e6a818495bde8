// report.hpp -- rendering verdicts and analyses for the CLI / C API
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "checks.hpp"
#include "structural.hpp"
#include "synthesis.hpp"
#include "verifier.hpp"

namespace moddiag {

/// A finished command: exit code, human text, machine JSON, optional DOT.
/// The JSON always carries the same top-level keys -- command, verdicts,
/// witness, partition, reports -- so downstream tooling can rely on them.
struct RunReport {
  int exit_code = 0;
  std::string text;
  nlohmann::json json;
  std::string dot;
};

nlohmann::json json_of(const Witness& w);
nlohmann::json json_of(const Verdict& v);
nlohmann::json json_of(const StructuralReport& r);
nlohmann::json json_of(const Partition& p);

RunReport make_check_report(const std::string& command, const std::vector<Verdict>& verdicts,
                            const std::optional<Partition>& partition = std::nullopt);

RunReport make_verifier_report(const std::string& module, const Verdict& verdict,
                               const std::string& dot);

RunReport make_analyze_report(const StructuralReport& rep);

RunReport make_synthesis_report(const SynthesisResult& res);

RunReport make_automaton_report(const std::string& command, const std::string& name,
                                const Automaton& a);

std::string render_text(const RunReport& rep);  // convenience: rep.text

}  // namespace moddiag
