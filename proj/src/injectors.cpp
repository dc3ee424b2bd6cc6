#include "pifit/injectors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "pifit/projectors.hpp"

namespace pifit {

namespace {

const std::vector<int>& f_maximal_cached(PiContext& ctx, const FittingSet& fs, int ambient,
                                         std::map<int, std::vector<int>>& cache) {
  auto it = cache.find(ambient);
  if (it == cache.end()) it = cache.emplace(ambient, f_maximal_in(ctx, fs, ambient)).first;
  return it->second;
}

std::string mismatch_witness(PiContext& ctx, const FittingSet& fs, int ambient) {
  std::ostringstream out;
  out << "{\"group\":\"" << ctx.group().name() << "\",\"pi\":\"" << ctx.pi().to_string()
      << "\",\"fitting_set\":\"" << fs.label << "\",\"ambient_order\":" << ctx.order_of(ambient)
      << "}";
  return out.str();
}

}  // namespace

std::vector<int> injectors_bruteforce_in(PiContext& ctx, const FittingSet& fs, int ambient,
                                         InjectorSearch mode) {
  if (mode == InjectorSearch::Auto)
    mode = fs.validation.classical_ok() ? InjectorSearch::Pruned : InjectorSearch::Unpruned;

  std::vector<int> subnormals;
  for (int k : ctx.subs_of(ambient))
    if (ctx.subnormal_in(k, ambient)) subnormals.push_back(k);

  std::map<int, std::vector<int>> fmax_cache;
  int floor = ctx.trivial();
  if (mode == InjectorSearch::Pruned) floor = radical_in(ctx, fs, ambient);

  std::vector<int> out;
  for (int v : ctx.subs_of(ambient)) {
    if (!ctx.contains(v, floor)) continue;
    bool ok = true;
    for (int k : subnormals) {
      int meet = ctx.intersect(v, k);
      const auto& fmax = f_maximal_cached(ctx, fs, k, fmax_cache);
      if (!std::binary_search(fmax.begin(), fmax.end(), meet)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(v);
  }
  return out;
}

std::optional<ConjugacyWitness> conjugacy_witness(PiContext& ctx, int v, int vstar) {
  if (ctx.order_of(v) != ctx.order_of(vstar)) return std::nullopt;
  const IdSet& residual = ctx.members(ctx.residual());
  for (ElementId g : residual)
    if (ctx.conj_sub(vstar, g) == v) return ConjugacyWitness{g, true};
  for (ElementId g = 0; g < ctx.group().order(); ++g) {
    if (id_member(residual, g)) continue;
    if (ctx.conj_sub(vstar, g) == v) return ConjugacyWitness{g, false};
  }
  return std::nullopt;
}

namespace {

/// Recursive constructive step; returns the injector set of `ambient`.
std::vector<int> construct_in(PiContext& ctx, const FittingSet& fs, int ambient,
                              std::map<int, std::vector<int>>& memo,
                              std::map<int, std::vector<int>>& fmax_cache,
                              InjectorReport* report) {
  auto it = memo.find(ambient);
  if (it != memo.end()) return it->second;

  std::vector<int> result;
  if (ctx.order_of(ambient) == 1) {
    result = {ctx.trivial()};
  } else {
    const int k = ctx.residual_in(ambient);
    if (k == ambient)
      throw MismatchError("residual did not descend in a pi'-soluble group",
                          mismatch_witness(ctx, fs, ambient));
    std::vector<int> inj_k = construct_in(ctx, fs, k, memo, fmax_cache, report);
    const int w = inj_k.front();

    std::vector<int> vs;
    for (int v : f_maximal_cached(ctx, fs, ambient, fmax_cache))
      if (ctx.contains(v, w)) vs.push_back(v);

    // close under conjugation inside `ambient`
    std::set<int> closed(vs.begin(), vs.end());
    std::deque<int> todo(vs.begin(), vs.end());
    while (!todo.empty()) {
      int cur = todo.front();
      todo.pop_front();
      for (ElementId g : ctx.lattice().gens_of(ambient)) {
        int c = ctx.conj_sub(cur, g);
        if (closed.insert(c).second) todo.push_back(c);
      }
    }
    result.assign(closed.begin(), closed.end());

    if (report) {
      InjectorLevel level;
      level.ambient = ambient;
      level.residual = k;
      level.chosen_injector = w;
      level.f_maximal_over_w = vs;
      report->trace.push_back(level);
    }
  }
  memo.emplace(ambient, result);
  return result;
}

}  // namespace

InjectorReport injectors_constructive(PiContext& ctx, const FittingSet& fs) {
  if (!ctx.piprime_soluble())
    throw DomainError("precondition failed: group " + ctx.group().name() + " is not " +
                      ctx.pi().to_string() + "'-soluble");
  if (!fs.validation.npi_ok())
    throw DomainError("precondition failed: " + fs.label + " is not an npi-valid Fitting set");

  InjectorReport report;
  std::map<int, std::vector<int>> memo, fmax_cache;
  report.injectors = construct_in(ctx, fs, ctx.full(), memo, fmax_cache, &report);
  std::reverse(report.trace.begin(), report.trace.end());  // outermost first

  std::vector<int> brute = injectors_bruteforce_in(ctx, fs, ctx.full(), InjectorSearch::Auto);
  if (brute != report.injectors)
    throw MismatchError("constructive and brute-force injectors disagree",
                        mismatch_witness(ctx, fs, ctx.full()));

  for (int v : report.injectors)
    for (int vstar : report.injectors) {
      if (v == vstar) continue;
      auto w = conjugacy_witness(ctx, v, vstar);
      if (!w)
        throw MismatchError("injectors are not conjugate", mismatch_witness(ctx, fs, ctx.full()));
      report.witnesses.emplace(std::make_pair(v, vstar), *w);
    }

  // radical-product cross-check at the top level: when the injector W of
  // the residual K is its radical, every injector V arises as (WP)_F for
  // some projector P.
  if (!report.trace.empty()) {
    const InjectorLevel& top = report.trace.front();
    const int k = top.residual;
    const int w = top.chosen_injector;
    const bool applicable = ctx.normal_in(w, k) && radical_in(ctx, fs, k) == w;
    std::vector<int> projs = applicable ? projectors_in(ctx, ctx.full()) : std::vector<int>{};
    for (int v : report.injectors) {
      Lemma28aCheck check;
      check.injector = v;
      check.applicable = applicable;
      if (applicable) {
        for (int p : projs) {
          int wp = ctx.join(w, p);
          if (radical_in(ctx, fs, wp) == v) {
            check.projector = p;
            break;
          }
        }
      }
      report.radical_product_checks.push_back(check);
    }
  }
  return report;
}

std::vector<DnormalIntersectionVerdict> dnormal_intersection_check(
    PiContext& ctx, const FittingSet& fs, const std::vector<int>& injectors) {
  std::vector<DnormalIntersectionVerdict> out;
  for (int n = 0; n < ctx.size(); ++n) {
    if (!ctx.dnormal(n, ctx.full())) continue;
    std::vector<int> inj_n = injectors_bruteforce_in(ctx, fs, n, InjectorSearch::Auto);
    for (int i : injectors) {
      DnormalIntersectionVerdict v;
      v.injector = i;
      v.dnormal_subgroup = n;
      v.intersection = ctx.intersect(i, n);
      v.is_injector_of_dnormal =
          std::find(inj_n.begin(), inj_n.end(), v.intersection) != inj_n.end();
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace pifit
