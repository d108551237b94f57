// One PASS/FAIL line per acceptance criterion, with wall-clock timings.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "kgw/kgw.hpp"

using namespace kgw;
using f1::Morphism;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && passed) detail = why;
    passed = passed && ok;
  }
  void require(const SuiteReport& r) {
    for (const auto& c : r.checks) require(c.passed, r.suite + "/" + c.name + ": " + c.witness);
  }
};

std::size_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::size_t>(n) * factorial(n - 1); }

// Involutions of {1..n} by filtering all permutations.
std::size_t brute_involution_count(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    bool inv = true;
    for (int x = 0; x < n; ++x) inv &= p[p[x]] == x;
    count += inv;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

Outcome axioms() {
  Outcome o;
  f1::AxiomSuiteOptions opt;
  opt.max_size = 4;
  o.require(f1::axiom_suite(opt));
  return o;
}

Outcome splitting() {
  Outcome o;
  o.require(f1::splitting_census(5));
  return o;
}

Outcome form_census() {
  Outcome o;
  const std::vector<std::size_t> expected{1, 1, 2, 4, 10, 26, 76};
  for (int n = 0; n <= 6; ++n) {
    const std::size_t got = herm::enumerate_forms(n).size();
    o.require(got == expected[n] && got == brute_involution_count(n),
              "n = " + std::to_string(n) + ": " + std::to_string(got) + " forms");
  }
  return o;
}

Outcome metabolic_to_hyperbolic() {
  Outcome o;
  std::size_t checked = 0;
  for (int n = 0; n <= 6; ++n)
    for (const auto& s : herm::enumerate_forms(n))
      for (const auto& u : herm::isotropic_subobjects(s)) {
        if (!u.is_lagrangian()) continue;
        const herm::Isometry phi = herm::metabolic_to_hyperbolic(u);
        const Morphism lhs = f1::compose(f1::dualize(phi.map), s.psi(), phi.map);
        o.require(phi.target == s && lhs == herm::hyperbolic(u.u()).psi(), s.to_string());
        ++checked;
      }
  o.require(checked > 0, "no Lagrangians found");
  return o;
}

Outcome decomposition() {
  Outcome o;
  o.require(herm::decomposition_suite(6, 1));
  return o;
}

Outcome witt() {
  Outcome o;
  const herm::WittMonoid w = herm::witt_monoid(6);
  o.require(w.elements.size() == 7 && w.complete, std::to_string(w.elements.size()) + " Witt elements");
  o.require(w.generator_forms.size() == 1 && w.generator_forms[0] == herm::SymmetricForm::identity(1) &&
                w.presentation.is_free(),
            "W_0 is not free on the point");
  for (const auto& e : w.elements) {
    o.require(e.is_identity(), e.to_string() + " is not an identity form");
    o.require(herm::isometry_group(e).size() == factorial(e.size()), "|Aut(" + e.to_string() + ")|");
  }
  return o;
}

Outcome group_completion() {
  Outcome o;
  const cat::AbelianGroupSNF z{1, {}};
  for (int n = 1; n <= 5; ++n) {
    o.require(cons::k0(n) == z, "k0(" + std::to_string(n) + ") = " + cons::k0(n).to_string());
    o.require(cons::k0_oplus(n) == z, "k0_oplus(" + std::to_string(n) + ")");
  }
  return o;
}

Outcome gw0() {
  Outcome o;
  for (int n = 0; n <= 4; ++n) {
    const cons::GW0 g = cons::gw0(n);
    o.require(g.checks);
    o.require(g.qh_component_count == static_cast<std::size_t>(n + 1), "pi0(Q_h) at " + std::to_string(n));
  }
  o.require(cons::gw0(4).description() == "N x Z", cons::gw0(4).description());
  return o;
}

Outcome fibres() {
  Outcome o;
  o.require(cons::conflation_suite(3));
  o.require(cons::base_change_suite(3, 2));
  return o;
}

Outcome comma() {
  Outcome o;
  o.require(cons::comma_tau_suite(herm::SymmetricForm::zero(), 4));
  o.require(cons::comma_tau_suite(herm::hyperbolic(1), 4));
  return o;
}

Outcome eta() {
  Outcome o;
  o.require(cons::eta_suite(herm::SymmetricForm::identity(1), 3));
  return o;
}

std::string cli_output(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), "kgw");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str() + "\x1f" + err.str();
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands{
      {"axioms"}, {"forms"}, {"decompose", "inv:(1 2)(3)"}, {"k0"}, {"gw0"}, {"witt"},
      {"qcat", "--output", "json"}, {"qhcat", "--output", "dot"}, {"suites"}, {"export", "e"}};
  for (const auto& c : commands) {
    std::string first;
    for (const char* jobs : {"1", "1", "2", "4"}) {
      auto args = c;
      args.insert(args.end(), {"--jobs", jobs});
      int code = 0;
      const std::string out = cli_output(args, code);
      o.require(code == 0, c.front() + " exited with " + std::to_string(code));
      if (first.empty()) first = out;
      o.require(out == first, c.front() + " differs under --jobs " + jobs);
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"axiom suite exhaustive at max_size 4", axioms},
      {"unique splitting census at |X| <= 5", splitting},
      {"form census matches involution numbers", form_census},
      {"metabolic forms are hyperbolic at size <= 6", metabolic_to_hyperbolic},
      {"decomposition unique up to isometry at size <= 6", decomposition},
      {"Witt monoid at size 6 is free on the point", witt},
      {"k0 = k0_oplus = Z for n = 1..5", group_completion},
      {"GW0 = N x Z and pi0(Q_h) has n + 1 components", gw0},
      {"F_C equivalences and base change suite", fibres},
      {"H^M is an equivalence for M in {0, H(pt)}", comma},
      {"eta equivalence for S = id_1 at size 3", eta},
      {"CLI output is deterministic across runs and --jobs", determinism},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    all = all && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " " << (k + 1) << ". " << criteria[k].first << " (" << ms
              << " ms)";
    if (!o.passed) std::cout << " -- " << o.detail;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
