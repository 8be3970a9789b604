// Acceptance suite: one line per criterion, exit 0 iff all pass.
// Each criterion pins its tolerance and time budget in code.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "asw/asw.hpp"

#ifndef ASW_CLI_PATH
#error "ASW_CLI_PATH must point at the built CLI"
#endif

using namespace asw;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int criterion, const std::string& what, bool pass, double secs, double budget) {
  bool ok = pass && secs <= budget;
  if (!ok) ++g_failures;
  std::printf("%s  criterion %d: %s [%.2f s, budget %.0f s]%s\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str(), secs, budget, pass && secs > budget ? " (over budget)" : "");
  std::fflush(stdout);
}

int cli_exit_code(const std::string& args) {
  std::string cmd = std::string("\"") + ASW_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -1;
}

// ---- criterion 1: Lemma 2.1 identities at p = 3, 5, 7, each under 1 s ----
void criterion1() {
  bool pass = true;
  double worst = 0;
  for (std::int64_t pv : {3, 5, 7}) {
    auto t0 = Clock::now();
    Prime p(pv);
    auto ws = witt_set(p);
    auto k1 = TowerSpec::create(p, {{Var::x1, mod_variable(p, Var::b1)}});
    Endo s1(k1, {TowerElem::generator(k1, Var::x1) + TowerElem::constant(k1, 1)});
    TowerElem c1 = lift(k1, ws->c1);
    TowerElem d1 = lift(k1, ws->d1);
    bool tr = trace(s1, static_cast<std::uint64_t>(pv), c1) == TowerElem::constant(k1, 1);
    bool wpid = wp(c1) == s1.apply(d1) - d1;
    pass = pass && tr && wpid;
    worst = std::max(worst, seconds_since(t0));
  }
  report(1, "Tr(C1) = 1 and wp(C1) = (sigma1-1)D1 for p in {3,5,7}", pass, worst, 1.0);
}

// ---- criterion 2: Lemma 3.2 identities at p = 3, 5; p = 5 under 30 s ----
void criterion2() {
  bool pass = true;
  double t5 = 0;
  for (std::int64_t pv : {3, 5}) {
    auto t0 = Clock::now();
    Prime p(pv);
    auto ws = witt_set(p);
    auto l2 = TowerSpec::create(
        p, {{Var::x1, mod_variable(p, Var::b1)}, {Var::x3, ws->d1 + mod_variable(p, Var::b3)}});
    Endo s1(l2, {TowerElem::generator(l2, Var::x1) + TowerElem::constant(l2, 1),
                 TowerElem::generator(l2, Var::x3) + lift(l2, ws->c1)});
    TowerElem c2 = lift(l2, ws->c2);
    TowerElem d2 = lift(l2, ws->d2);
    bool tr = trace(s1, static_cast<std::uint64_t>(pv * pv), c2) == TowerElem::constant(l2, 1);
    bool wpid = wp(c2) == s1.apply(d2) - d2;
    pass = pass && tr && wpid;
    if (pv == 5) t5 = seconds_since(t0);
  }
  report(2, "Tr_{p^2}(C2) = 1 and wp(C2) = (sigma1-1)D2 for p in {3,5}", pass, t5, 30.0);
}

// ---- criterion 3: every catalog row verifies at p = 3, under 60 s ----
void criterion3() {
  auto t0 = Clock::now();
  Prime p(3);
  bool pass = true;
  int count = 0;
  for (const auto& row : catalog()) {
    auto rep = verify(row.params(p));
    std::uint64_t expect = row.table == 2 ? 27 : 81;
    bool ok = rep.all_pass() && rep.closure_order == expect &&
              rep.find("iso_abstract") && rep.find("iso_abstract")->pass;
    if (!ok) {
      std::printf("  row %s failed\n", row.label.c_str());
      pass = false;
    }
    ++count;
  }
  pass = pass && count == 15;
  // the CLI run end to end, inside the same budget
  pass = pass && cli_exit_code("verify --p 3 --all") == 0;
  report(3, "all 15 catalog rows verify at p = 3 with the right closure order", pass,
         seconds_since(t0), 60.0);
}

// ---- criterion 4: p = 5 spot checks, under 5 min total ----
void criterion4() {
  auto t0 = Clock::now();
  Prime p(5);
  bool pass = true;
  for (const char* label : {"(xiv)", "(vii)", "(viii)", "(xii)", "(xiii)", "(vi)"}) {
    const CatalogRow* row = catalog_lookup(label, p);
    if (!row) {
      pass = false;
      continue;
    }
    auto rep = verify(row->params(p));
    if (!(rep.all_pass() && rep.closure_order == 625)) {
      std::printf("  row %s failed at p=5\n", label);
      pass = false;
    }
  }
  report(4, "rows (xiv),(vii),(viii),(xii),(xiii),H verify at p = 5 with order 625", pass,
         seconds_since(t0), 300.0);
}

// ---- criterion 5: the ten order-p^4 groups are pairwise non-isomorphic ----
void criterion5() {
  auto t0 = Clock::now();
  Prime p(3);
  std::vector<const CatalogRow*> rows;
  for (const auto& row : catalog()) {
    if (row.table == 1 && row.applicable(p)) rows.push_back(&row);
  }
  bool pass = rows.size() == 10;

  std::vector<PresGroup> groups;
  std::vector<Fingerprint> fps;
  for (auto* row : rows) {
    groups.push_back(PresGroup::from_params(row->params(p)));
    fps.push_back(fingerprint(groups.back()));
  }
  for (std::size_t i = 0; i < rows.size() && pass; ++i) {
    for (std::size_t j = i + 1; j < rows.size() && pass; ++j) {
      if (fps[i] != fps[j]) continue;  // distinct fingerprints suffice
      IsoResult r = are_isomorphic(groups[i], groups[j]);
      if (r.isomorphic) {
        std::printf("  %s and %s came out isomorphic\n", rows[i]->label.c_str(),
                    rows[j]->label.c_str());
        pass = false;
      }
    }
  }

  // (xii) vs (xiii) decided by exhaustive search, the prescreen switched off
  {
    PresGroup xii = PresGroup::from_params(catalog_lookup("(xii)", p)->params(p));
    PresGroup xiii = PresGroup::from_params(catalog_lookup("(xiii)", p)->params(p));
    IsoOptions opts;
    opts.fingerprint_prescreen = false;
    IsoResult r = are_isomorphic(xii, xiii, opts);
    pass = pass && !r.isomorphic && r.decided_by_search && r.nodes > 0;
  }
  report(5, "the 10 non-Abelian order-p^4 groups are pairwise non-isomorphic at p = 3", pass,
         seconds_since(t0), 600.0);
}

// ---- criterion 6: converse reconstruction for every p = 3 catalog row ----
void criterion6() {
  auto t0 = Clock::now();
  Prime p(3);
  bool pass = true;
  for (const auto& row : catalog()) {
    auto gp = row.params(p);
    auto spec = build_equations(gp);
    auto direct = build_sigmas(gp, spec);
    VerificationReport rep{gp};
    auto rec = reconstruct_sigmas(gp, spec, &rep);
    bool same = rep.all_pass() && rec.size() == direct.size();
    for (std::size_t i = 0; same && i < rec.size(); ++i) same = rec[i] == direct[i];
    if (!same) {
      std::printf("  converse mismatch on row %s\n", row.label.c_str());
      pass = false;
      continue;
    }
    // the reconstructed generators generate the same closure
    PresGroup pres = PresGroup::from_params(gp);
    std::vector<Endo> gens(rec.begin(), rec.begin() + (pres.is_h_form() ? 2 : rec.size()));
    std::vector<PresGroup::Elem> labels;
    for (std::size_t i = 0; i < gens.size(); ++i) labels.push_back(pres.gen(static_cast<int>(i) + 1));
    auto closure = close_group(gens, pres, labels, pres.order() + 1);
    if (!(closure.size == pres.order() && closure.label_consistent)) {
      std::printf("  converse closure mismatch on row %s\n", row.label.c_str());
      pass = false;
    }
  }
  report(6, "generators rebuilt from the bare towers match the direct construction (p = 3)", pass,
         seconds_since(t0), 120.0);
}

// ---- criterion 7: negative controls, named failures, exit code 1 ----
void criterion7() {
  auto t0 = Clock::now();
  Prime p(3);
  struct Control {
    const char* label;
    FaultKind fault;
    const char* fault_name;
    const char* expected_check;
  };
  const std::vector<Control> controls = {
      {"(vii)", FaultKind::DropB3X3, "drop-b3", "rel_swap_sigma3_sigma1"},
      {"(x)", FaultKind::DropA0X2, "drop-a0", "rel_swap_sigma2_sigma1"},
      {"(viii)", FaultKind::SwapC1D1, "swap-c1-d1", "trace_c1"},
      {"(xiii)", FaultKind::WrongAlpha, "wrong-alpha", "rel_pow_sigma2"},
      {"(xiv)", FaultKind::BreakSigma4, "break-sigma4", "rel_central_sigma4_sigma1"},
      {"(vi)", FaultKind::CorruptC2, "corrupt-c2", "trace_c2"},
  };
  bool pass = true;
  for (const auto& c : controls) {
    VerifyOptions opts;
    opts.fault = c.fault;
    auto rep = verify(catalog_lookup(c.label, p)->params(p), opts);
    const CheckResult* chk = rep.find(c.expected_check);
    if (rep.all_pass() || !chk || chk->pass) {
      std::printf("  fault %s did not trip %s\n", c.fault_name, c.expected_check);
      pass = false;
    }
    int code = cli_exit_code(std::string("verify --p 3 --group \"") + c.label +
                             "\" --inject-fault " + c.fault_name);
    if (code != 1) {
      std::printf("  fault %s: CLI exit code %d, wanted 1\n", c.fault_name, code);
      pass = false;
    }
  }
  report(7, "6 fault injections each fail a named check and exit 1", pass, seconds_since(t0),
         300.0);
}

// ---- criterion 8: identity (3) for the four degree-p^3 rows, p in {3,5} ----
void criterion8() {
  auto t0 = Clock::now();
  bool pass = true;
  for (std::int64_t pv : {3, 5}) {
    Prime p(pv);
    auto pu = static_cast<std::uint64_t>(pv);
    for (std::int64_t a0 = 0; a0 <= 1; ++a0) {
      for (std::int64_t a1 = 0; a1 <= 1; ++a1) {
        auto gp = GroupParams::degree_p3(p, a0, a1);
        auto spec = build_equations(gp);
        auto sig = build_sigmas(gp, spec);
        TowerElem x3 = TowerElem::generator(spec, Var::x3);
        TowerElem lhs = x3;
        TowerElem g = x3;
        for (std::uint64_t k = 1; k < pu; ++k) {
          g = sig[0].apply(g);
          lhs += g;
        }
        TowerElem rhs =
            difference_power(sig[0], pu - 2, lift(spec, witt_set(p)->c1)).scaled(a1);
        if (!(lhs == rhs)) {
          std::printf("  identity (3) failed for p=%lld a=(%lld,%lld)\n",
                      static_cast<long long>(pv), static_cast<long long>(a0),
                      static_cast<long long>(a1));
          pass = false;
        }
      }
    }
  }
  report(8, "(1+sigma1+...+sigma1^(p-1))x3 = a1(sigma1-1)^(p-2)C1(x1) for p in {3,5}", pass,
         seconds_since(t0), 60.0);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (g_failures == 0) {
    std::printf("acceptance: all 8 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
