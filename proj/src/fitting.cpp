#include "pifit/fitting.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pifit {

bool FittingSet::has(int idx) const {
  return std::binary_search(members.begin(), members.end(), idx);
}

namespace {

bool in_sorted(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

FittingValidation validate_fitting_set(PiContext& ctx, const std::vector<int>& members) {
  FittingValidation v;
  // FS3: conjugation closure (generators suffice)
  for (int s : members) {
    for (ElementId g : ctx.group().generator_ids()) {
      int c = ctx.conj_sub(s, g);
      if (!in_sorted(members, c)) {
        v.fs3 = false;
        v.fs3_witness = AxiomWitness{s, -1, c};
        break;
      }
    }
    if (!v.fs3) break;
  }
  // FS1: descent
  for (int s : members) {
    for (int t : ctx.subs_of(s)) {
      if (in_sorted(members, t)) continue;
      if (v.fs1_classical && ctx.subnormal_in(t, s)) {
        v.fs1_classical = false;
        v.fs1_classical_witness = AxiomWitness{s, t, -1};
      }
      if (v.fs1_npi && ctx.dsubnormal(t, s)) {
        v.fs1_npi = false;
        v.fs1_npi_witness = AxiomWitness{s, t, -1};
      }
      if (!v.fs1_classical && !v.fs1_npi) break;
    }
    if (!v.fs1_classical && !v.fs1_npi) break;
  }
  // FS2: joins
  for (int s : members) {
    for (int t : members) {
      if (t < s) continue;
      int j = ctx.join(s, t);
      if (in_sorted(members, j)) continue;
      if (v.fs2_classical && ctx.normal_in(s, j) && ctx.normal_in(t, j)) {
        v.fs2_classical = false;
        v.fs2_classical_witness = AxiomWitness{s, t, j};
      }
      if (v.fs2_npi && ctx.dnormal(s, j) && ctx.dnormal(t, j)) {
        v.fs2_npi = false;
        v.fs2_npi_witness = AxiomWitness{s, t, j};
      }
      if (!v.fs2_classical && !v.fs2_npi) break;
    }
    if (!v.fs2_classical && !v.fs2_npi) break;
  }
  return v;
}

FittingSet trace(PiContext& ctx, const ClassSpec& spec) {
  FittingSet fs;
  fs.provenance = FittingSet::Provenance::TraceOfClass;
  fs.source_class = spec;
  fs.label = "trace(" + spec.to_string() + ")";
  for (int i = 0; i < ctx.size(); ++i)
    if (ctx.member(i, spec)) fs.members.push_back(i);
  fs.validation = validate_fitting_set(ctx, fs.members);
  return fs;
}

FittingSet explicit_fitting_set(PiContext& ctx, std::vector<int> members, std::string label) {
  FittingSet fs;
  fs.provenance = FittingSet::Provenance::Explicit;
  fs.label = std::move(label);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  fs.members = std::move(members);
  fs.validation = validate_fitting_set(ctx, fs.members);
  return fs;
}

FittingSet fitting_set_closure(PiContext& ctx, const std::vector<int>& seed) {
  if (seed.empty()) throw DomainError("closure seed must be nonempty");
  std::set<int> members(seed.begin(), seed.end());
  members.insert(ctx.trivial());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> snapshot(members.begin(), members.end());
    // conjugates
    for (int s : snapshot)
      for (int c : ctx.conjugates_of(s)) changed |= members.insert(c).second;
    // Dsubnormal descent
    for (int s : snapshot)
      for (int t : ctx.subs_of(s))
        if (!members.count(t) && ctx.dsubnormal(t, s)) changed |= members.insert(t).second;
    // Dnormal joins
    for (int s : snapshot)
      for (int t : snapshot) {
        if (t < s) continue;
        int j = ctx.join(s, t);
        if (!members.count(j) && ctx.dnormal(s, j) && ctx.dnormal(t, j))
          changed |= members.insert(j).second;
      }
  }
  FittingSet fs;
  fs.provenance = FittingSet::Provenance::ClosureOfSeed;
  fs.label = "closure(seed)";
  fs.members.assign(members.begin(), members.end());
  fs.validation = validate_fitting_set(ctx, fs.members);
  if (!fs.validation.npi_ok())
    throw MismatchError("fixpoint closure failed its own validation",
                        "{\"group\":\"" + ctx.group().name() + "\",\"pi\":\"" +
                            ctx.pi().to_string() + "\"}");
  return fs;
}

int radical_in(PiContext& ctx, const FittingSet& fs, int ambient) {
  if (!fs.validation.classical_ok())
    throw DomainError("radical requires a classically valid Fitting set: " + fs.label);
  IdSet acc{ctx.group().identity_id()};
  for (int s : fs.members)
    if (ctx.contains(ambient, s) && ctx.normal_in(s, ambient))
      acc = join_ids(ctx.group(), acc, ctx.members(s));
  return ctx.lattice().index_of(acc);
}

RadicalRoutes radical_routes(PiContext& ctx, const FittingSet& fs, int ambient) {
  auto join_over = [&](auto&& pred) {
    IdSet acc{ctx.group().identity_id()};
    for (int s : fs.members)
      if (ctx.contains(ambient, s) && pred(s)) acc = join_ids(ctx.group(), acc, ctx.members(s));
    return ctx.lattice().index_of(acc);
  };
  RadicalRoutes r{};
  r.normal_join = join_over([&](int s) { return ctx.normal_in(s, ambient); });
  r.subnormal_join = join_over([&](int s) { return ctx.subnormal_in(s, ambient); });
  r.dnormal_join = join_over([&](int s) { return ctx.dnormal(s, ambient); });
  r.dsubnormal_join = join_over([&](int s) { return ctx.dsubnormal(s, ambient); });
  return r;
}

std::vector<int> f_maximal_in(PiContext& ctx, const FittingSet& fs, int ambient) {
  std::vector<int> inside;
  for (int s : fs.members)
    if (ctx.contains(ambient, s)) inside.push_back(s);
  std::vector<int> out;
  for (int s : inside) {
    bool maximal = true;
    for (int t : inside)
      if (t != s && ctx.contains(t, s)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(s);
  }
  return out;
}

std::optional<ClassCounterexample> validate_npi_fitting_class(
    const std::vector<std::pair<std::string, std::shared_ptr<PiContext>>>& corpus_ctxs,
    const ClassSpec& spec) {
  for (const auto& [name, ctxp] : corpus_ctxs) {
    PiContext& ctx = *ctxp;
    for (int j = 0; j < ctx.size(); ++j) {
      // axiom (i): members are closed under Dnormal subgroups
      if (ctx.member(j, spec)) {
        for (int n : ctx.subs_of(j))
          if (ctx.dnormal(n, j) && !ctx.member(n, spec))
            return ClassCounterexample{name, j, n, -1, true};
      } else {
        // axiom (ii): Dnormal members generating j force j into the class
        for (int m : ctx.subs_of(j)) {
          if (!ctx.member(m, spec) || !ctx.dnormal(m, j)) continue;
          for (int n : ctx.subs_of(j)) {
            if (n < m || !ctx.member(n, spec) || !ctx.dnormal(n, j)) continue;
            if (ctx.join(m, n) == j) return ClassCounterexample{name, j, m, n, false};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace pifit
