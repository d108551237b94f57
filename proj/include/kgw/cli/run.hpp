#pragma once

// The kgw command-line front end: configuration, dispatch and output.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kgw/category/serialize.hpp"
#include "kgw/constructions/comma_tau.hpp"
#include "kgw/constructions/conflations.hpp"
#include "kgw/constructions/invariants.hpp"
#include "kgw/constructions/qh.hpp"
#include "kgw/f1/axioms.hpp"
#include "kgw/f1/census.hpp"
#include "kgw/hermitian/decomposition.hpp"
#include "kgw/hermitian/witt.hpp"

namespace kgw::cli {

enum class Command { axioms, forms, decompose, k0, gw0, witt, qcat, qhcat, suites, exporter };
enum class Output { text, json, dot };

struct CommandInfo {
  Command command;
  const char* name;
  int default_size;
  int safe_size;  // largest max_size accepted
  const char* summary;
};

inline const std::vector<CommandInfo>& commands() {
  static const std::vector<CommandInfo> table{
      {Command::axioms, "axioms", 3, 4, "run the proto-exact and direct-sum axiom suite"},
      {Command::forms, "forms", 6, 10, "census of symmetric forms and their isometry classes"},
      {Command::decompose, "decompose", 6, f1::kMaxSize, "decompose a form literal as H(U) + N"},
      {Command::k0, "k0", 4, 7, "K0 from conflations, K0 of the direct-sum monoid, pi1 of BQ"},
      {Command::gw0, "gw0", 3, 5, "GW0 = W0 x GW_H,0 with the Q_h component cross-check"},
      {Command::witt, "witt", 6, 8, "the Witt monoid of forms up to a size"},
      {Command::qcat, "qcat", 3, 5, "the truncated Q-construction"},
      {Command::qhcat, "qhcat", 3, 4, "the truncated hermitian Q-construction"},
      {Command::suites, "suites", 3, 3, "every lemma suite at a common truncation"},
      {Command::exporter, "export", 3, 4, "write q, qh or e as JSON or DOT"},
  };
  return table;
}

inline const CommandInfo& info(Command c) {
  for (const auto& i : commands())
    if (i.command == c) return i;
  throw UsageError("unknown command");
}

struct RunConfig {
  Command command = Command::axioms;
  int max_size = -1;  // -1 picks the command default
  Output output = Output::text;
  unsigned jobs = 1;
  std::string out_path;
  std::string argument;  // form literal for decompose, category name for export

  int size() const { return max_size < 0 ? info(command).default_size : max_size; }
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

namespace detail {

using json = nlohmann::ordered_json;

inline json group_json(const cat::AbelianGroupSNF& g) { return {{"rank", g.rank}, {"torsion", g.torsion}}; }

inline json report_json(const SuiteReport& r) { return json::parse(to_json(r).dump()); }

inline void print_reports(std::ostream& os, const std::vector<SuiteReport>& reports) {
  std::size_t total = 0, failed = 0;
  for (const auto& r : reports) {
    os << r;
    for (const auto& c : r.checks) {
      ++total;
      failed += !c.passed;
    }
  }
  if (failed == 0)
    os << "all " << total << " checks pass\n";
  else
    os << failed << " of " << total << " checks FAIL\n";
}

inline bool all_passed(const std::vector<SuiteReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });
}

inline int emit_reports(const RunConfig& cfg, std::ostream& os, const std::vector<SuiteReport>& reports) {
  if (cfg.output == Output::json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    os << json{{"command", info(cfg.command).name}, {"max_size", cfg.size()}, {"passed", all_passed(reports)},
               {"suites", arr}}
              .dump(2)
       << "\n";
  } else {
    print_reports(os, reports);
  }
  return all_passed(reports) ? kOk : kFailure;
}

inline void require_output(const RunConfig& cfg, std::initializer_list<Output> allowed) {
  for (Output o : allowed)
    if (o == cfg.output) return;
  throw UsageError(std::string("output format not supported by ") + info(cfg.command).name);
}

inline int run_axioms(const RunConfig& cfg, std::ostream& os) {
  require_output(cfg, {Output::text, Output::json});
  f1::AxiomSuiteOptions opt;
  opt.max_size = cfg.size();
  opt.jobs = cfg.jobs;
  const SuiteReport r = f1::axiom_suite(opt);
  if (cfg.output == Output::text) {
    os << r << (r.passed() ? "all axioms pass" : "axiom failures") << " at max_size " << cfg.size() << "\n";
    return r.passed() ? kOk : kFailure;
  }
  return emit_reports(cfg, os, {r});
}

inline int run_forms(const RunConfig& cfg, std::ostream& os) {
  require_output(cfg, {Output::text, Output::json});
  json sizes = json::array();
  for (int n = 0; n <= cfg.size(); ++n) {
    const auto forms = herm::enumerate_forms(n);
    std::vector<std::string> reps;
    for (const auto& s : forms) {
      const std::string c = herm::canonical_representative(s).to_string();
      if (std::find(reps.begin(), reps.end(), c) == reps.end()) reps.push_back(c);
    }
    if (cfg.output == Output::text) {
      os << "n=" << n << ": " << forms.size() << " forms, " << reps.size() << " isometry classes:";
      for (const auto& r : reps) os << " " << r;
      os << "\n";
    }
    sizes.push_back({{"size", n}, {"forms", forms.size()}, {"classes", reps}});
  }
  if (cfg.output == Output::json) os << json{{"command", "forms"}, {"max_size", cfg.size()}, {"sizes", sizes}}.dump(2) << "\n";
  return kOk;
}

inline int run_decompose(const RunConfig& cfg, std::ostream& os) {
  require_output(cfg, {Output::text, Output::json});
  if (cfg.argument.empty()) throw UsageError("decompose needs a form literal such as \"inv:(1 2)(3)\"");
  herm::SymmetricForm s;
  try {
    s = herm::parse_form(cfg.argument);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const herm::Decomposition d = herm::iso_simple_decomposition(s);
  if (cfg.output == Output::text) {
    os << s.to_string() << " ≅ " << d.to_string() << "\n";
    os << "isometry " << s.to_string() << " -> " << d.target().to_string() << ": " << d.isometry.map.to_string()
       << "\n";
  } else {
    os << json{{"form", s.to_string()},
               {"decomposition", d.to_string()},
               {"hyperbolic_rank", d.hyperbolic_rank},
               {"simple", d.simple.to_string()},
               {"target", d.target().to_string()},
               {"isometry", d.isometry.map.values()}}
              .dump(2)
       << "\n";
  }
  return kOk;
}

inline int run_k0(const RunConfig& cfg, std::ostream& os) {
  require_output(cfg, {Output::text, Output::json});
  const int n = cfg.size();
  const cat::AbelianGroupSNF k = cons::k0(n);
  if (cfg.output == Output::json) {
    os << json{{"invariant", "K0"}, {"max_size", n}, {"group", group_json(k)}}.dump() << "\n";
    return kOk;
  }
  const cat::AbelianGroupSNF ko = cons::k0_oplus(n);
  os << "K0 (conflations, max_size " << n << ") = " << k.to_string() << "\n";
  os << "K0 of the direct-sum monoid = " << ko.to_string() << "\n";
  if (n <= 4) os << "pi1(BQ)^ab of the truncation (reported only) = " << cons::bq_pi1(n).to_string() << "\n";
  os << (k == ko ? "K0 agrees with K0 of the direct-sum monoid" : "K0 DIFFERS from K0 of the direct-sum monoid")
     << "\n";
  return k == ko ? kOk : kFailure;
}

inline int run_gw0(const RunConfig& cfg, std::ostream& os) {
  require_output(cfg, {Output::text, Output::json});
  const cons::GW0 g = cons::gw0(cfg.size());
  std::vector<std::string> witt;
  for (const auto& e : g.witt.elements) witt.push_back(e.to_string());
  if (cfg.output == Output::json) {
    os << json{{"invariant", "GW0"},
               {"max_size", g.max_size},
               {"description", g.description()},
               {"witt_elements", witt},
               {"hyperbolic", group_json(g.gw_h)},
               {"qh_components", g.qh_component_count},
               {"checks", report_json(g.checks)}}
              .dump(2)
       << "\n";
  } else {
    os << "GW0 = W0 x GW_H,0 = " << g.description() << " (truncated at " << g.max_size << ")\n";
    os << "W0 elements:";
    for (const auto& w : witt) os << " " << w;
    os << "\nGW_H,0 = " << g.gw_h.to_string() << "\n";
    os << "pi0(Q_h) components: " << g.qh_component_count << "\n" << g.checks;
  }
  return g.checks.passed() ? kOk : kFailure;
}

inline int run_witt(const RunConfig& cfg, std::ostream& os) {
  require_output(cfg, {Output::text, Output::json});
  const herm::WittMonoid w = herm::witt_monoid(cfg.size());
  std::vector<std::string> elements, generators;
  for (const auto& e : w.elements) elements.push_back(e.to_string());
  for (const auto& g : w.generator_forms) generators.push_back(g.to_string());
  json relations = json::array();
  for (const auto& [a, b] : w.presentation.relations) relations.push_back({a, b});
  if (cfg.output == Output::json) {
    os << json{{"invariant", "W0"},
               {"max_size", w.max_size},
               {"elements", elements},
               {"generators", generators},
               {"relations", relations},
               {"complete", w.complete}}
              .dump(2)
       << "\n";
    return kOk;
  }
  os << "W0 truncated at " << w.max_size << ": " << elements.size() << " elements\n";
  for (std::size_t k = 0; k < elements.size(); ++k) {
    os << "  " << elements[k] << "  =";
    for (auto c : w.coordinates[k]) os << " " << c;
    os << "\n";
  }
  os << "generators:";
  for (const auto& g : generators) os << " " << g;
  os << "\nrelations: " << w.presentation.relations.size() << "\n";
  if (w.presentation.is_free() && generators.size() == 1) os << "free on one generator\n";
  return kOk;
}

inline std::string category_text(const std::string& name, const cat::FiniteCategory& c) {
  std::ostringstream os;
  const cat::Components comps = cat::pi0(c);
  os << name << ": " << c.num_objects() << " objects, " << c.num_morphisms() << " morphisms, " << comps.size()
     << " components\n";
  for (cat::Id a = 0; a < c.num_objects(); ++a)
    for (cat::Id b = 0; b < c.num_objects(); ++b)
      if (!c.homs(a, b).empty())
        os << "  |Hom(" << c.object_label(a) << ", " << c.object_label(b) << ")| = " << c.homs(a, b).size() << "\n";
  return os.str();
}

inline void emit_category(const RunConfig& cfg, std::ostream& os, const std::string& name,
                          const cat::FiniteCategory& c) {
  switch (cfg.output) {
    case Output::text: os << category_text(name, c); break;
    case Output::json: os << cat::to_json(c).dump() << "\n"; break;
    case Output::dot: os << cat::to_dot(c, name); break;
  }
}

inline int run_qcat(const RunConfig& cfg, std::ostream& os) {
  const cons::QCategory q = cons::q_category(cfg.size());
  emit_category(cfg, os, "Q[max_size=" + std::to_string(cfg.size()) + "]", q.cat);
  return kOk;
}

inline int run_qhcat(const RunConfig& cfg, std::ostream& os) {
  const cons::QhCategory qh = cons::qh_category(cfg.size());
  const std::string name = "Q_h[max_size=" + std::to_string(cfg.size()) + "]";
  emit_category(cfg, os, name, qh.cat);
  if (cfg.output == Output::text) {
    const cons::QhComponents c = cons::qh_components(qh);
    for (std::size_t k = 0; k < c.components.size(); ++k)
      os << "component " << k << ": " << c.fixed_points[k] << " fixed points, " << c.components.members[k].size()
         << " forms\n";
  }
  return kOk;
}

inline int run_suites(const RunConfig& cfg, std::ostream& os) {
  require_output(cfg, {Output::text, Output::json});
  const int n = cfg.size();
  f1::AxiomSuiteOptions opt;
  opt.max_size = n;
  opt.jobs = cfg.jobs;
  std::vector<SuiteReport> reports;
  reports.push_back(f1::axiom_suite(opt));
  reports.push_back(f1::splitting_census(n + 1));
  reports.push_back(herm::decomposition_suite(n + 1, cfg.jobs));
  reports.push_back(cons::conflation_suite(n));
  reports.push_back(cons::base_change_suite(n));
  reports.push_back(cons::comma_tau_suite(herm::SymmetricForm::zero(), n + 1));
  reports.push_back(cons::comma_tau_suite(herm::hyperbolic(1), n + 1));
  reports.push_back(cons::eta_suite(herm::SymmetricForm::identity(1), n));
  reports.push_back(cons::gw0(n).checks);
  return emit_reports(cfg, os, reports);
}

inline int run_export(const RunConfig& cfg, std::ostream& os) {
  require_output(cfg, {Output::json, Output::dot});
  const std::string what = cfg.argument.empty() ? "q" : cfg.argument;
  const std::string suffix = "[max_size=" + std::to_string(cfg.size()) + "]";
  if (what == "q") {
    emit_category(cfg, os, "Q" + suffix, cons::q_category(cfg.size()).cat);
  } else if (what == "qh") {
    emit_category(cfg, os, "Q_h" + suffix, cons::qh_category(cfg.size()).cat);
  } else if (what == "e") {
    if (cfg.size() > 3) throw UsageError("export e accepts --max-size up to 3");
    emit_category(cfg, os, "E" + suffix, cons::conflation_category(cfg.size()).cat);
  } else {
    throw UsageError("export expects q, qh or e, got " + what);
  }
  return kOk;
}

}  // namespace detail

// Runs one command, writing its output to `out` (or to cfg.out_path).
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const CommandInfo& ci = info(cfg.command);
    if (cfg.max_size > ci.safe_size)
      throw UsageError(std::string(ci.name) + " accepts --max-size up to " + std::to_string(ci.safe_size));
    if (cfg.jobs == 0) throw UsageError("--jobs must be positive");
    if (cfg.output == Output::dot && cfg.command != Command::qcat && cfg.command != Command::qhcat &&
        cfg.command != Command::exporter)
      throw UsageError(std::string(ci.name) + " has no DOT output");
    std::ostringstream buffer;
    int code = kOk;
    switch (cfg.command) {
      case Command::axioms: code = detail::run_axioms(cfg, buffer); break;
      case Command::forms: code = detail::run_forms(cfg, buffer); break;
      case Command::decompose: code = detail::run_decompose(cfg, buffer); break;
      case Command::k0: code = detail::run_k0(cfg, buffer); break;
      case Command::gw0: code = detail::run_gw0(cfg, buffer); break;
      case Command::witt: code = detail::run_witt(cfg, buffer); break;
      case Command::qcat: code = detail::run_qcat(cfg, buffer); break;
      case Command::qhcat: code = detail::run_qhcat(cfg, buffer); break;
      case Command::suites: code = detail::run_suites(cfg, buffer); break;
      case Command::exporter: code = detail::run_export(cfg, buffer); break;
    }
    if (cfg.out_path.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(cfg.out_path, std::ios::binary);
      if (!file) throw IOError("cannot open " + cfg.out_path);
      file << buffer.str();
      if (!file) throw IOError("cannot write " + cfg.out_path);
    }
    return code;
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kFailure;
  }
}

// Counts behind the growth table in --help.
inline std::string growth_table() {
  auto choose = [](int n, int k) {
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return c;
  };
  auto falling = [](int n, int k) {
    std::uint64_t f = 1;
    for (int i = 0; i < k; ++i) f *= static_cast<std::uint64_t>(n - i);
    return f;
  };
  std::ostringstream os;
  os << "Growth with max_size n (why the defaults are small):\n"
     << "   n  forms(n)  Q morphisms  conflations  Hom_Q(0,n)\n";
  std::uint64_t inv_prev = 1, inv = 1, q_total = 0, e_total = 0;
  for (int n = 0; n <= 6; ++n) {
    if (n >= 2) {
      const std::uint64_t next = inv + static_cast<std::uint64_t>(n - 1) * inv_prev;
      inv_prev = inv;
      inv = next;
    }
    // new Q morphisms are those touching object n
    for (int u = 0; u <= n; ++u)
      for (int v = 0; v <= n; ++v) {
        if (u != n && v != n) continue;
        for (int k = u; k <= v; ++k) q_total += choose(v, k) * falling(k, u);
      }
    e_total += falling(n + 1, n + 1);  // (n + 1)! conflations with middle term n
    os << std::setw(4) << n << std::setw(10) << inv << std::setw(13) << q_total << std::setw(13) << e_total
       << std::setw(12) << (std::uint64_t{1} << n) << "\n";
  }
  os << "Defaults: 3 for category builds, 6 for form censuses.\n";
  return os.str();
}

// Parses argv and runs. Usage errors exit with 2.
inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite models of Q, Q_h and their invariants for pointed sets", "kgw"};
  app.require_subcommand(1);
  app.footer(growth_table());
  RunConfig cfg;
  std::string output = "text";
  const std::map<std::string, Output> outputs{{"text", Output::text}, {"json", Output::json}, {"dot", Output::dot}};
  for (const auto& ci : commands()) {
    CLI::App* sub = app.add_subcommand(ci.name, ci.summary);
    sub->add_option("--max-size", cfg.max_size,
                    "truncation bound (default " + std::to_string(ci.default_size) + ", at most " +
                        std::to_string(ci.safe_size) + ")")
        ->check(CLI::Range(0, ci.safe_size));
    sub->add_option("--output", output, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out_path, "write output to PATH");
    if (ci.command == Command::decompose) sub->add_option("form", cfg.argument, "form literal, e.g. \"inv:(1 2)(3)\"")->required();
    if (ci.command == Command::exporter) sub->add_option("category", cfg.argument, "q, qh or e")->check(CLI::IsMember({"q", "qh", "e"}));
    sub->callback([&cfg, c = ci.command] { cfg.command = c; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  cfg.output = outputs.at(output);
  if (cfg.command == Command::exporter && output == "text") cfg.output = Output::json;
  return run(cfg, out, err);
}

}  // namespace kgw::cli
