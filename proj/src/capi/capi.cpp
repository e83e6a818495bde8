// capi.cpp -- the C surface over the core library
#include "moddiag/moddiag.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "../core/checks.hpp"
#include "../core/compose.hpp"
#include "../core/dot.hpp"
#include "../core/errors.hpp"
#include "../core/fsm_format.hpp"
#include "../core/report.hpp"
#include "../core/synthesis.hpp"

using namespace moddiag;

struct moddiag_automaton {
  NamedAutomaton na;
};

struct moddiag_system {
  ModularSystem sys;
};

struct moddiag_report {
  RunReport rep;
};

namespace {

thread_local std::string g_last_error;

moddiag_status fail(moddiag_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, translating exceptions into statuses.
template <typename Fn>
moddiag_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    return fail(MODDIAG_ERR_PARSE, e.what());
  } catch (const ModelError& e) {
    return fail(MODDIAG_ERR_MODEL, e.what());
  } catch (const std::exception& e) {
    return fail(MODDIAG_ERR_INTERNAL, e.what());
  }
}

moddiag_status out_string(const std::string& value, char** out) {
  if (!out) return fail(MODDIAG_ERR_USAGE, "null output pointer");
  *out = dup_string(value);
  if (!*out) return fail(MODDIAG_ERR_INTERNAL, "out of memory");
  return MODDIAG_OK;
}

moddiag_status wrap_report(RunReport rep, moddiag_report** out) {
  if (!out) return fail(MODDIAG_ERR_USAGE, "null output pointer");
  *out = new moddiag_report{std::move(rep)};
  return MODDIAG_OK;
}

}  // namespace

extern "C" {

const char* moddiag_last_error(void) { return g_last_error.c_str(); }

void moddiag_string_free(char* s) { std::free(s); }

moddiag_status moddiag_automaton_parse(const char* text, moddiag_automaton** out) {
  if (!text || !out) return fail(MODDIAG_ERR_USAGE, "null argument");
  return guarded([&] {
    auto na = parse_fsm(text);
    *out = new moddiag_automaton{std::move(na)};
    return MODDIAG_OK;
  });
}

void moddiag_automaton_free(moddiag_automaton* a) { delete a; }

const char* moddiag_automaton_name(const moddiag_automaton* a) {
  return a ? a->na.name.c_str() : "";
}

int moddiag_automaton_state_count(const moddiag_automaton* a) {
  return a ? a->na.automaton.state_count() : 0;
}

int moddiag_automaton_event_count(const moddiag_automaton* a) {
  return a ? a->na.automaton.alphabet.size() : 0;
}

moddiag_status moddiag_automaton_serialize(const moddiag_automaton* a, char** out) {
  if (!a) return fail(MODDIAG_ERR_USAGE, "null automaton");
  return guarded([&] { return out_string(serialize_fsm(a->na), out); });
}

moddiag_status moddiag_automaton_dot(const moddiag_automaton* a, char** out) {
  if (!a) return fail(MODDIAG_ERR_USAGE, "null automaton");
  return guarded([&] { return out_string(to_dot(a->na.automaton, a->na.name), out); });
}

moddiag_status moddiag_automaton_validate(const moddiag_automaton* a, moddiag_report** out) {
  if (!a) return fail(MODDIAG_ERR_USAGE, "null automaton");
  return guarded([&] {
    auto vr = a->na.automaton.validate();
    RunReport rep;
    rep.json = {{"command", "validate"},
                {"verdicts", nlohmann::json::array()},
                {"witness", nullptr},
                {"partition", nullptr},
                {"reports", nlohmann::json::array()},
                {"violations", vr.violations},
                {"warnings", vr.warnings}};
    std::string text = "[validate] " + a->na.name + ": " + (vr.ok() ? "ok" : "invalid") + "\n";
    for (const auto& v : vr.violations) text += "  violation: " + v + "\n";
    for (const auto& w : vr.warnings) text += "  warning: " + w + "\n";
    rep.text = text;
    rep.exit_code = vr.ok() ? 0 : 1;
    return wrap_report(std::move(rep), out);
  });
}

moddiag_status moddiag_compose(const moddiag_automaton* const* autos, size_t n,
                               const char* result_name, moddiag_automaton** out) {
  if (!autos || n == 0 || !out) return fail(MODDIAG_ERR_USAGE, "need at least one automaton");
  return guarded([&] {
    std::vector<const Automaton*> parts;
    std::string joined;
    for (size_t i = 0; i < n; ++i) {
      if (!autos[i]) return fail(MODDIAG_ERR_USAGE, "null automaton in list");
      parts.push_back(&autos[i]->na.automaton);
      if (i) joined += "_";
      joined += autos[i]->na.name;
    }
    NamedAutomaton na;
    na.name = result_name && *result_name ? result_name : joined;
    na.automaton = parallel_compose(parts);
    *out = new moddiag_automaton{std::move(na)};
    return MODDIAG_OK;
  });
}

moddiag_status moddiag_project(const moddiag_automaton* a, const char* const* events,
                               size_t n_events, moddiag_automaton** out) {
  if (!a || !out || (!events && n_events)) return fail(MODDIAG_ERR_USAGE, "null argument");
  return guarded([&] {
    std::vector<std::string> mask;
    for (size_t i = 0; i < n_events; ++i) mask.emplace_back(events[i]);
    NamedAutomaton na;
    na.name = a->na.name;
    na.automaton = project(a->na.automaton, mask);
    *out = new moddiag_automaton{std::move(na)};
    return MODDIAG_OK;
  });
}

moddiag_status moddiag_system_new(moddiag_system** out) {
  if (!out) return fail(MODDIAG_ERR_USAGE, "null output pointer");
  *out = new moddiag_system{};
  return MODDIAG_OK;
}

void moddiag_system_free(moddiag_system* s) { delete s; }

moddiag_status moddiag_system_add(moddiag_system* s, const moddiag_automaton* a) {
  if (!s || !a) return fail(MODDIAG_ERR_USAGE, "null argument");
  return guarded([&] {
    s->sys.add(a->na.name, a->na.automaton);
    return MODDIAG_OK;
  });
}

int moddiag_system_size(const moddiag_system* s) { return s ? s->sys.size() : 0; }

moddiag_status moddiag_verifier(const moddiag_automaton* a, const char* const* obs, size_t n_obs,
                                moddiag_report** out) {
  if (!a || (!obs && n_obs)) return fail(MODDIAG_ERR_USAGE, "null argument");
  return guarded([&] {
    Automaton m = a->na.automaton;
    m.compile();
    std::vector<std::string> mask;
    if (n_obs)
      for (size_t i = 0; i < n_obs; ++i) mask.emplace_back(obs[i]);
    else
      mask = m.alphabet.observable_names();

    FaultLabeledAutomaton fla = fault_split(m);
    Verifier ver = build_verifier(fla, mask);
    auto witness = find_indeterminate_cycle(ver);
    Verdict verdict;
    verdict.scope = Scope::Local;
    verdict.module = a->na.name;
    verdict.block = {a->na.name};
    verdict.mask = mask;
    verdict.diagnosable = !witness.has_value();
    verdict.witness = witness;
    verdict.verifier_states = static_cast<int>(ver.states.size());
    std::string dot = to_dot(ver, m.alphabet.names(), a->na.name + "_verifier");
    return wrap_report(make_verifier_report(a->na.name, verdict, dot), out);
  });
}

moddiag_status moddiag_check_local(const moddiag_automaton* a, moddiag_report** out) {
  if (!a) return fail(MODDIAG_ERR_USAGE, "null automaton");
  return guarded([&] {
    auto verdict = check_local(a->na.automaton, a->na.name);
    return wrap_report(make_check_report("check local", {verdict}), out);
  });
}

moddiag_status moddiag_check_modular(const moddiag_system* s, moddiag_report** out) {
  if (!s) return fail(MODDIAG_ERR_USAGE, "null system");
  return guarded([&] {
    auto verdicts = check_modular(s->sys);
    return wrap_report(make_check_report("check modular", verdicts), out);
  });
}

moddiag_status moddiag_check_virtual(const moddiag_system* s, const char* partition,
                                     moddiag_report** out) {
  if (!s) return fail(MODDIAG_ERR_USAGE, "null system");
  return guarded([&] {
    Partition p = partition ? parse_partition(partition) : Partition::coarsest(s->sys);
    auto verdicts = check_virtual(s->sys, p);
    return wrap_report(make_check_report("check virtual", verdicts, p.canonical(s->sys)), out);
  });
}

moddiag_status moddiag_analyze(const moddiag_automaton* faulty, const moddiag_automaton* candidate,
                               int strict, moddiag_report** out) {
  if (!faulty || !candidate) return fail(MODDIAG_ERR_USAGE, "null automaton");
  return guarded([&] {
    auto rep = analyze_pair(faulty->na.name, faulty->na.automaton, candidate->na.name,
                            candidate->na.automaton, strict != 0);
    return wrap_report(make_analyze_report(rep), out);
  });
}

moddiag_status moddiag_synthesize(const moddiag_system* s, int exhaustive, int max_modules,
                                  moddiag_report** out) {
  if (!s) return fail(MODDIAG_ERR_USAGE, "null system");
  return guarded([&] {
    SynthesisResult res = exhaustive
                              ? synthesize_exhaustive(s->sys, max_modules > 0 ? max_modules : 8)
                              : synthesize_greedy(s->sys);
    return wrap_report(make_synthesis_report(res), out);
  });
}

int moddiag_report_exit_code(const moddiag_report* r) { return r ? r->rep.exit_code : 2; }

moddiag_status moddiag_report_text(const moddiag_report* r, char** out) {
  if (!r) return fail(MODDIAG_ERR_USAGE, "null report");
  return out_string(r->rep.text, out);
}

moddiag_status moddiag_report_json(const moddiag_report* r, char** out) {
  if (!r) return fail(MODDIAG_ERR_USAGE, "null report");
  return guarded([&] { return out_string(r->rep.json.dump(2) + "\n", out); });
}

moddiag_status moddiag_report_dot(const moddiag_report* r, char** out) {
  if (!r) return fail(MODDIAG_ERR_USAGE, "null report");
  return out_string(r->rep.dot, out);
}

void moddiag_report_free(moddiag_report* r) { delete r; }

}  // extern "C"
