#include "report.hpp"

#include <sstream>

namespace moddiag {

namespace {

std::string braces(const std::vector<std::string>& names) {
  std::string out = "{";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out + "}";
}

std::string dotted(const std::vector<std::string>& seq) {
  if (seq.empty()) return "ε";
  std::string out;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ".";
    out += seq[i];
  }
  return out;
}

nlohmann::json base_json(const std::string& command) {
  nlohmann::json j;
  j["command"] = command;
  j["verdicts"] = nlohmann::json::array();
  j["witness"] = nullptr;
  j["partition"] = nullptr;
  j["reports"] = nlohmann::json::array();
  return j;
}

void render_verdict(std::ostringstream& out, const Verdict& v) {
  out << "module " << v.module << " (" << scope_name(v.scope) << ", block " << braces(v.block)
      << ", mask " << braces(v.mask) << "): "
      << (v.diagnosable ? "DIAGNOSABLE" : "NOT DIAGNOSABLE");
  if (v.verifier_states > 0) out << " [" << v.verifier_states << " pair-states]";
  out << "\n";
  if (v.witness) {
    const Witness& w = *v.witness;
    out << "  indeterminate cycle at " << w.cycle_states.front() << " on " << dotted(w.cycle)
        << "\n";
    out << "  confused pair: faulty " << w.faulty << " / non-faulty " << w.nonfaulty << "\n";
    out << "  stem " << dotted(w.stem) << ", horizon " << w.horizon << "\n";
  }
  for (const auto& warn : v.warnings) out << "  warning: " << warn << "\n";
}

const Witness* first_witness(const std::vector<Verdict>& verdicts) {
  for (const auto& v : verdicts)
    if (v.witness) return &*v.witness;
  return nullptr;
}

bool all_diagnosable(const std::vector<Verdict>& verdicts) {
  for (const auto& v : verdicts)
    if (!v.diagnosable) return false;
  return true;
}

}  // namespace

nlohmann::json json_of(const Witness& w) {
  return {{"stem", w.stem},
          {"cycle", w.cycle},
          {"cycle_states", w.cycle_states},
          {"faulty", w.faulty},
          {"nonfaulty", w.nonfaulty},
          {"horizon", w.horizon}};
}

nlohmann::json json_of(const Verdict& v) {
  nlohmann::json j{{"scope", scope_name(v.scope)},
                   {"module", v.module},
                   {"block", v.block},
                   {"mask", v.mask},
                   {"diagnosable", v.diagnosable},
                   {"verifier_states", v.verifier_states},
                   {"warnings", v.warnings}};
  j["witness"] = v.witness ? json_of(*v.witness) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json json_of(const StructuralReport& r) {
  return {{"faulty", r.faulty_module},
          {"candidate", r.candidate_module},
          {"common", r.common},
          {"trigger", r.trigger},
          {"confirm", r.confirm},
          {"marked_any", r.marked_any},
          {"support_ok", r.support_ok},
          {"support_path", r.support_path},
          {"strict_ok", r.strict_ok},
          {"recommend", r.recommend},
          {"notes", r.notes}};
}

nlohmann::json json_of(const Partition& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& block : p.blocks) j.push_back(block);
  return j;
}

RunReport make_check_report(const std::string& command, const std::vector<Verdict>& verdicts,
                            const std::optional<Partition>& partition) {
  RunReport rep;
  rep.json = base_json(command);
  std::ostringstream out;
  out << "[" << command << "]";
  if (partition) out << " partition: " << partition->to_string();
  out << "\n";
  if (verdicts.empty()) out << "no fault-carrying modules; nothing to check\n";
  for (const auto& v : verdicts) {
    render_verdict(out, v);
    rep.json["verdicts"].push_back(json_of(v));
  }
  bool pass = all_diagnosable(verdicts);
  out << "overall: " << (pass ? "DIAGNOSABLE" : "NOT DIAGNOSABLE") << "\n";
  if (const Witness* w = first_witness(verdicts)) rep.json["witness"] = json_of(*w);
  if (partition) rep.json["partition"] = json_of(*partition);
  rep.exit_code = pass ? 0 : 1;
  rep.text = out.str();
  return rep;
}

RunReport make_verifier_report(const std::string& module, const Verdict& verdict,
                               const std::string& dot) {
  RunReport rep;
  rep.json = base_json("verifier");
  rep.json["verdicts"].push_back(json_of(verdict));
  if (verdict.witness) rep.json["witness"] = json_of(*verdict.witness);
  std::ostringstream out;
  out << "[verifier] " << module << "\n";
  render_verdict(out, verdict);
  rep.exit_code = verdict.diagnosable ? 0 : 1;
  rep.text = out.str();
  rep.dot = dot;
  return rep;
}

RunReport make_analyze_report(const StructuralReport& r) {
  RunReport rep;
  rep.json = base_json("analyze");
  rep.json["reports"].push_back(json_of(r));
  std::ostringstream out;
  out << "[analyze] faulty " << r.faulty_module << ", candidate " << r.candidate_module << ": "
      << (r.recommend ? "RECOMMEND" : "REJECT") << "\n";
  out << "  common " << braces(r.common) << "\n";
  out << "  trigger " << braces(r.trigger) << ", confirm " << braces(r.confirm) << "\n";
  out << "  faulty side marked: " << (r.marked_any ? "yes" : "no") << "\n";
  out << "  support: " << (r.support_ok ? "ok" : "not ok");
  if (!r.support_path.empty()) out << ", path " << dotted(r.support_path);
  out << "\n";
  for (const auto& note : r.notes) out << "  note: " << note << "\n";
  rep.exit_code = r.recommend ? 0 : 1;
  rep.text = out.str();
  return rep;
}

RunReport make_synthesis_report(const SynthesisResult& res) {
  RunReport rep;
  rep.json = base_json("synthesize");
  std::ostringstream out;
  out << "[synthesize] strategy: " << res.strategy << "\n";
  out << "partition: " << res.partition.to_string() << "\n";
  for (const auto& v : res.verdicts) {
    render_verdict(out, v);
    rep.json["verdicts"].push_back(json_of(v));
  }
  for (const auto& r : res.reports) {
    out << "structural: " << r.faulty_module << " + " << r.candidate_module << ": "
        << (r.recommend ? "recommend" : "reject") << " (trigger " << braces(r.trigger)
        << ", confirm " << braces(r.confirm);
    if (!r.support_path.empty()) out << ", support " << dotted(r.support_path);
    out << ")\n";
    rep.json["reports"].push_back(json_of(r));
  }
  for (const auto& note : res.notes) out << "note: " << note << "\n";
  out << "candidates examined: " << res.candidates_examined << "\n";
  out << "overall: " << (res.success ? "SUCCESS" : "FAILURE") << "\n";
  rep.json["partition"] = json_of(res.partition);
  if (const Witness* w = first_witness(res.verdicts)) rep.json["witness"] = json_of(*w);
  rep.json["synthesis"] = {{"strategy", res.strategy},
                           {"success", res.success},
                           {"candidates_examined", res.candidates_examined},
                           {"notes", res.notes}};
  rep.exit_code = res.success ? 0 : 1;
  rep.text = out.str();
  return rep;
}

RunReport make_automaton_report(const std::string& command, const std::string& name,
                                const Automaton& a) {
  RunReport rep;
  rep.json = base_json(command);
  rep.json["automaton"] = {{"name", name},
                           {"states", a.state_count()},
                           {"events", a.alphabet.size()},
                           {"transitions", static_cast<int>(a.transitions.size())}};
  std::ostringstream out;
  out << "[" << command << "] " << name << ": " << a.state_count() << " states, "
      << a.alphabet.size() << " events, " << a.transitions.size() << " transitions\n";
  rep.exit_code = 0;
  rep.text = out.str();
  return rep;
}

std::string render_text(const RunReport& rep) { return rep.text; }

}  // namespace moddiag
