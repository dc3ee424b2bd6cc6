// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria run against the default corpus over the standard prime
// sets {}, {2}, {3}, {2,3}, {3,5}, {2,3,5}.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "pifit/fitting.hpp"
#include "pifit/injectors.hpp"
#include "pifit/projectors.hpp"
#include "pifit/suites.hpp"

using namespace pifit;

namespace {

int g_jobs = 4;

bool no_failures(const std::vector<SuiteResult>& results, std::ostream& log) {
  bool ok = true;
  for (const auto& r : results) {
    if (r.status != SuiteStatus::Fail) continue;
    ok = false;
    log << "      FAILED " << r.suite << " group=" << r.scope.group
        << " pi=" << r.scope.pi.to_string();
    if (!r.scope.class_label.empty()) log << " class=" << r.scope.class_label;
    log << "\n";
    for (const auto& w : r.witnesses) log << "        " << w.dump() << "\n";
  }
  return ok;
}

bool run_ids(const Corpus& corpus, const std::vector<std::string>& ids, std::ostream& log,
             double budget_seconds = 0.0) {
  auto start = std::chrono::steady_clock::now();
  SuiteOptions opt;
  opt.jobs = g_jobs;
  auto results = run_suites(ids, corpus, default_pi_sets(), opt);
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool ok = no_failures(results, log);
  if (budget_seconds > 0 && elapsed > budget_seconds) {
    log << "      runtime " << elapsed << "s exceeds budget " << budget_seconds << "s\n";
    ok = false;
  }
  return ok;
}

bool criterion1(const Corpus& corpus, std::ostream& log) {
  return run_ids(corpus, {"prop-1.2"}, log, 300.0);
}

bool criterion2(const Corpus& corpus, std::ostream& log) {
  std::vector<std::string> ids = resolve_suite_ids("lemma-1.4");
  for (const auto& id : resolve_suite_ids("lemma-1.5")) ids.push_back(id);
  ids.push_back("lemma-2.4");
  ids.push_back("lemma-2.5");
  ids.push_back("lemma-1.6");
  return run_ids(corpus, ids, log);
}

bool criterion3(const Corpus& corpus, std::ostream& log) {
  return run_ids(corpus, {"prop-cor1"}, log);
}

bool criterion4(const Corpus& corpus, std::ostream& log) {
  bool ok = run_ids(corpus, {"lemma-teo1", "lemma-teo2"}, log);

  PiContext f21(Lattice::build(find_group(corpus, "F21").group), PrimeSet::parse("3,5"));
  auto proj = projectors_in(f21, f21.full());
  if (proj.size() != 7) {
    log << "      pinned: proj(F21, {3,5}) has size " << proj.size() << ", expected 7\n";
    ok = false;
  }
  for (int p : proj)
    if (f21.order_of(p) != 3) {
      log << "      pinned: proj(F21, {3,5}) contains a subgroup of order " << f21.order_of(p)
          << ", expected 3\n";
      ok = false;
    }

  PiContext s4(Lattice::build(find_group(corpus, "S4").group), PrimeSet{});
  auto carter = projectors_in(s4, s4.full());
  auto sylow2 = sylow_in_indices(s4.lattice(), s4.full(), 2);
  if (carter != sylow2) {
    log << "      pinned: proj_N(S4) is not the set of Sylow 2-subgroups\n";
    ok = false;
  }
  return ok;
}

bool criterion5(const Corpus& corpus, std::ostream& log) {
  auto start = std::chrono::steady_clock::now();
  bool ok = run_ids(corpus, {"theorem-2.9", "cor-2.11", "lemma-2.8b"}, log);

  // pinned: nilpotent injectors of S4 with witnesses inside A4
  PiContext s4(Lattice::build(find_group(corpus, "S4").group), PrimeSet{});
  FittingSet nil = trace(s4, ClassSpec::nilpotent());
  InjectorReport rep = injectors_constructive(s4, nil);
  if (rep.injectors.size() != 3) {
    log << "      pinned: inj_N(S4) has size " << rep.injectors.size() << ", expected 3\n";
    ok = false;
  }
  for (int v : rep.injectors)
    if (s4.order_of(v) != 8) {
      log << "      pinned: inj_N(S4) contains order " << s4.order_of(v) << ", expected 8\n";
      ok = false;
    }
  if (s4.order_of(s4.residual()) != 12) {
    log << "      pinned: S4^N should be A4\n";
    ok = false;
  }
  for (const auto& [pair, w] : rep.witnesses)
    if (!w.in_residual) {
      log << "      pinned: a conjugating witness for inj_N(S4) lies outside A4\n";
      ok = false;
    }

  // pinned: inj(F21, Npi({3,5})) = {C7}
  PiContext f21(Lattice::build(find_group(corpus, "F21").group), PrimeSet::parse("3,5"));
  FittingSet npi_f21 = trace(f21, ClassSpec::npi(f21.pi()));
  auto inj_f21 = injectors_bruteforce_in(f21, npi_f21, f21.full());
  if (inj_f21.size() != 1 || f21.order_of(inj_f21[0]) != 7) {
    log << "      pinned: inj(F21, npi{3,5}) should be exactly {C7}\n";
    ok = false;
  }

  // pinned: inj(A5xC7, E_pi({2,3,5})) = {A5 x 1}
  PiContext big(Lattice::build(find_group(corpus, "A5xC7").group), PrimeSet::parse("2,3,5"));
  FittingSet epi = trace(big, ClassSpec::e_pi(big.pi()));
  auto inj_big = injectors_bruteforce_in(big, epi, big.full());
  if (inj_big.size() != 1 || big.order_of(inj_big[0]) != 60) {
    log << "      pinned: inj(A5xC7, epi{2,3,5}) should be exactly {A5 x 1}\n";
    ok = false;
  }

  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > 600.0) {
    log << "      runtime " << elapsed << "s exceeds budget 600s\n";
    ok = false;
  }
  return ok;
}

bool criterion6(const Corpus& corpus, std::ostream& log) {
  return run_ids(corpus, {"lemma-2.8a"}, log);
}

bool criterion7(const Corpus& corpus, std::ostream& log) {
  bool ok = run_ids(corpus, {"remark-2", "remark-3"}, log);

  // the pinned S3 counterexample at pi = {2,3}
  std::vector<std::pair<std::string, std::shared_ptr<PiContext>>> ctxs;
  for (const auto& ng : corpus)
    ctxs.emplace_back(ng.name,
                      std::make_shared<PiContext>(Lattice::build(ng.group), PrimeSet::parse("2,3")));
  auto cex = validate_npi_fitting_class(ctxs, ClassSpec::nilpotent());
  if (!cex) {
    log << "      pinned: no counterexample for (nilpotent, pi={2,3})\n";
    return false;
  }
  PiContext& ctx = *ctxs.front().second;
  bool shape = !cex->axiom_i && cex->group_name == "S3" && ctx.order_of(cex->ambient) == 6 &&
               ctx.order_of(cex->m) == 2 && ctx.order_of(cex->n) == 2 &&
               !ctx.member(cex->ambient, ClassSpec::nilpotent()) &&
               ctx.dnormal(cex->m, cex->ambient) && ctx.dnormal(cex->n, cex->ambient) &&
               ctx.join(cex->m, cex->n) == cex->ambient;
  if (!shape) {
    log << "      pinned: counterexample is not two Dnormal C2's generating S3\n";
    ok = false;
  }
  return ok;
}

bool criterion8(const Corpus& corpus, std::ostream& log) {
  return run_ids(corpus, {"classical"}, log);
}

bool criterion9(const Corpus& corpus, std::ostream& log) {
  bool ok = true;
  for (const auto& ng : corpus) {
    auto lat = Lattice::build(ng.group);
    // O^pi by pi'-element generation vs normal-lattice minimum
    for (const auto& pi : default_pi_sets()) {
      IdSet generated = o_upper_pi_ids(*ng.group, full_ids(*ng.group), pi);
      if (generated != oracles::naive_o_upper_pi(*lat, pi)) {
        log << "      O^pi routes disagree on " << ng.name << " at " << pi.to_string() << "\n";
        ok = false;
      }
    }
    // lattice enumeration vs naive oracle
    if (ng.group->order() <= 48) {
      auto naive = oracles::naive_all_subgroups(*ng.group);
      if (naive.size() != lat->size()) {
        log << "      lattice size disagrees with the naive oracle on " << ng.name << "\n";
        ok = false;
      }
    }
    // pruned vs unpruned injector search
    for (const auto& pi : default_pi_sets()) {
      PiContext ctx(lat, pi);
      for (const FittingSet& fs :
           {trace(ctx, ClassSpec::npi(pi)), trace(ctx, ClassSpec::e_pi(pi)),
            trace(ctx, ClassSpec::all()), trace(ctx, ClassSpec::nilpotent())}) {
        if (!fs.validation.classical_ok()) continue;
        auto pruned = injectors_bruteforce_in(ctx, fs, ctx.full(), InjectorSearch::Pruned);
        auto unpruned = injectors_bruteforce_in(ctx, fs, ctx.full(), InjectorSearch::Unpruned);
        if (pruned != unpruned) {
          log << "      pruned/unpruned injector searches disagree on " << ng.name << " at "
              << pi.to_string() << " for " << fs.label << "\n";
          ok = false;
        }
      }
    }
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_jobs = std::max(1, std::atoi(argv[1]));
  Corpus corpus = default_corpus();

  struct Criterion {
    int num;
    const char* description;
    std::function<bool(const Corpus&, std::ostream&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Dnormality definition route equals the characterization on every subgroup", criterion1},
      {2, "Dnormality lemma suites (1.4.1-6, 1.5.1-3, 2.4, 2.5, 1.6) have zero failures",
       criterion2},
      {3, "four radical characterizations coincide for all standard Fitting sets", criterion3},
      {4, "projector = covering = one conjugacy class, with the three-way characterization",
       criterion4},
      {5, "injector existence, uniqueness, construction, witnesses, Dnormal intersections",
       criterion5},
      {6, "each injector arises as the radical of W * projector at the top level", criterion6},
      {7, "Npi passes the class axioms; nilpotent at pi={2,3} yields the S3 counterexample",
       criterion7},
      {8, "pi = {} reproduces the Fitting subgroup, nilpotent injectors, Carter subgroups",
       criterion8},
      {9, "independent oracles agree: O^pi routes, lattice enumeration, pruned search",
       criterion9},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream log;
    bool ok = false;
    try {
      ok = c.run(corpus, log);
    } catch (const std::exception& e) {
      log << "      exception: " << e.what() << "\n";
    }
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.num << ": " << c.description
              << " (" << static_cast<long>(ms) << " ms)\n";
    if (!ok) {
      std::cout << log.str();
      ++failures;
    }
  }
  if (failures) std::cout << failures << " criteria failed\n";
  return failures ? 1 : 0;
}
