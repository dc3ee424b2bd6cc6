#include "pifit/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <thread>

#include "pifit/fitting.hpp"
#include "pifit/injectors.hpp"
#include "pifit/projectors.hpp"

namespace pifit {

namespace {

const std::vector<std::string> kPerGroupSuites = {
    "prop-1.2",    "lemma-1.4.1", "lemma-1.4.2", "lemma-1.4.3", "lemma-1.4.4", "lemma-1.4.5",
    "lemma-1.4.6", "lemma-1.5.1", "lemma-1.5.2", "lemma-1.5.3", "lemma-2.4",   "lemma-2.5",
    "lemma-1.6",   "prop-cor1",   "lemma-teo1",  "lemma-teo2",  "lemma-2.8a",  "lemma-2.8b",
    "theorem-2.9", "cor-2.11"};

const std::vector<std::string> kCorpusSuites = {"remark-2", "remark-3", "classical"};

Json sub_wit(const Group& g, const IdSet& members) { return subgroup_json(g, members); }

/// One (group, prime-set) work item with its shared context and the
/// standard Fitting-set family.
class SuiteEngine {
 public:
  SuiteEngine(const NamedGroup& ng, LatticePtr lat, PrimeSet pi)
      : name_(ng.name), ctx_(std::move(lat), std::move(pi)) {}

  std::vector<SuiteResult> run(const std::string& id);

 private:
  using Checker = void (SuiteEngine::*)(SuiteResult&);

  SuiteResult fresh(const std::string& id, std::string class_label = "") {
    SuiteResult r;
    r.suite = id;
    r.scope = {name_, ctx_.pi(), std::move(class_label)};
    return r;
  }

  void fail(SuiteResult& r, Json witness) {
    r.status = SuiteStatus::Fail;
    r.witnesses.push_back(std::move(witness));
  }
  void skip(SuiteResult& r, const std::string& hypothesis) {
    r.status = SuiteStatus::SkippedHypothesis;
    r.witnesses.push_back(Json{{"violated_hypothesis", hypothesis}});
  }
  Json wit(int idx) { return sub_wit(ctx_.group(), ctx_.members(idx)); }

  PiContext& quotient_ctx(int kernel);
  const std::vector<FittingSet>& family();
  bool guaranteed_npi(const FittingSet& fs) const;

  void prop_1_2(SuiteResult&);
  void lemma_1_4_1(SuiteResult&);
  void lemma_1_4_2(SuiteResult&);
  void lemma_1_4_3(SuiteResult&);
  void lemma_1_4_4(SuiteResult&);
  void lemma_1_4_5(SuiteResult&);
  void lemma_1_4_6(SuiteResult&);
  void lemma_1_5_1(SuiteResult&);
  void lemma_1_5_2(SuiteResult&);
  void lemma_1_5_3(SuiteResult&);
  void lemma_2_4(SuiteResult&);
  void lemma_1_6(SuiteResult&);
  void lemma_teo1(SuiteResult&);
  void lemma_teo2(SuiteResult&);

  // per-Fitting-set suites produce one result per family member
  std::vector<SuiteResult> lemma_2_5();
  std::vector<SuiteResult> prop_cor1();
  std::vector<SuiteResult> lemma_2_8a();
  std::vector<SuiteResult> lemma_2_8b();
  std::vector<SuiteResult> theorem_2_9(bool trace_only);

  std::string name_;
  PiContext ctx_;
  std::map<int, std::unique_ptr<PiContext>> qctx_;
  std::unique_ptr<std::vector<FittingSet>> family_;
};

PiContext& SuiteEngine::quotient_ctx(int kernel) {
  auto it = qctx_.find(kernel);
  if (it == qctx_.end()) {
    const auto& qd = ctx_.quotient_lattice(ctx_.full(), kernel);
    it = qctx_.emplace(kernel, std::make_unique<PiContext>(qd.qlat, ctx_.pi())).first;
  }
  return *it->second;
}

const std::vector<FittingSet>& SuiteEngine::family() {
  if (!family_) {
    family_ = std::make_unique<std::vector<FittingSet>>();
    family_->push_back(trace(ctx_, ClassSpec::npi(ctx_.pi())));
    family_->push_back(trace(ctx_, ClassSpec::e_pi(ctx_.pi())));
    family_->push_back(trace(ctx_, ClassSpec::all()));
    family_->push_back(trace(ctx_, ClassSpec::nilpotent()));
    auto fac = factorize(ctx_.group().order());
    if (!fac.empty()) {
      int syl = ctx_.sylows_in(ctx_.full(), fac[0].first).front();
      auto fs = fitting_set_closure(ctx_, {syl});
      fs.label = "closure(sylow-" + std::to_string(fac[0].first) + ")";
      family_->push_back(std::move(fs));
    }
    auto fs = fitting_set_closure(ctx_, {ctx_.residual()});
    fs.label = "closure(residual)";
    family_->push_back(std::move(fs));
  }
  return *family_;
}

bool SuiteEngine::guaranteed_npi(const FittingSet& fs) const {
  if (fs.provenance == FittingSet::Provenance::ClosureOfSeed) return true;
  if (!fs.source_class) return false;
  auto tag = fs.source_class->tag;
  return tag == ClassSpec::Tag::Npi || tag == ClassSpec::Tag::EPi || tag == ClassSpec::Tag::All;
}

void SuiteEngine::prop_1_2(SuiteResult& r) {
  for (int h = 0; h < ctx_.size(); ++h) {
    bool def = ctx_.dnormal_def(h, ctx_.full());
    bool chr = ctx_.dnormal(h, ctx_.full());
    if (def != chr)
      fail(r, Json{{"subgroup", wit(h)}, {"definition_route", def}, {"characterization", chr}});
  }
}

void SuiteEngine::lemma_1_4_1(SuiteResult& r) {
  for (int h = 0; h < ctx_.size(); ++h) {
    if (!ctx_.dnormal(h, ctx_.full())) continue;
    for (int c : ctx_.conjugates_of(h))
      if (!ctx_.dnormal(c, ctx_.full()))
        fail(r, Json{{"subgroup", wit(h)}, {"conjugate", wit(c)}});
  }
}

void SuiteEngine::lemma_1_4_2(SuiteResult& r) {
  for (int h = 0; h < ctx_.size(); ++h) {
    if (!ctx_.dnormal(h, ctx_.full())) continue;
    for (int l : ctx_.overs_of(h))
      if (!ctx_.dnormal(h, l)) fail(r, Json{{"subgroup", wit(h)}, {"intermediate", wit(l)}});
  }
}

void SuiteEngine::lemma_1_4_3(SuiteResult& r) {
  for (int n = 0; n < ctx_.size(); ++n) {
    if (n == ctx_.trivial() || !ctx_.lattice().is_normal(n)) continue;
    PiContext& qc = quotient_ctx(n);
    const Quotient& q = ctx_.quotient(ctx_.full(), n);
    for (int h = 0; h < ctx_.size(); ++h) {
      if (!ctx_.dnormal(h, ctx_.full())) continue;
      int img = qc.lattice().index_of(q.image_ids(ctx_.members(h)));
      if (!qc.dnormal(img, qc.full()))
        fail(r, Json{{"subgroup", wit(h)}, {"kernel", wit(n)}});
    }
  }
}

void SuiteEngine::lemma_1_4_4(SuiteResult& r) {
  for (int n = 0; n < ctx_.size(); ++n) {
    if (n == ctx_.trivial() || !ctx_.lattice().is_normal(n)) continue;
    PiContext& qc = quotient_ctx(n);
    const Quotient& q = ctx_.quotient(ctx_.full(), n);
    for (int h : ctx_.overs_of(n)) {
      int img = qc.lattice().index_of(q.image_ids(ctx_.members(h)));
      if (qc.dnormal(img, qc.full()) && !ctx_.dnormal(h, ctx_.full()))
        fail(r, Json{{"subgroup", wit(h)}, {"kernel", wit(n)}});
    }
  }
}

void SuiteEngine::lemma_1_4_5(SuiteResult& r) {
  for (int n = 0; n < ctx_.size(); ++n) {
    if (n == ctx_.trivial() || !ctx_.lattice().is_normal(n)) continue;
    PiContext& qc = quotient_ctx(n);
    const Quotient& q = ctx_.quotient(ctx_.full(), n);
    for (int h : ctx_.overs_of(n)) {
      int img = qc.lattice().index_of(q.image_ids(ctx_.members(h)));
      if (qc.dsubnormal(img, qc.full()) && !ctx_.dsubnormal(h, ctx_.full()))
        fail(r, Json{{"subgroup", wit(h)}, {"kernel", wit(n)}});
    }
  }
}

void SuiteEngine::lemma_1_4_6(SuiteResult& r) {
  if (!ctx_.npi_member(ctx_.full())) {
    skip(r, "group is not in Npi" + ctx_.pi().to_string());
    return;
  }
  for (int h = 0; h < ctx_.size(); ++h)
    if (!ctx_.dsubnormal(h, ctx_.full())) fail(r, Json{{"subgroup", wit(h)}});
}

void SuiteEngine::lemma_1_5_1(SuiteResult& r) {
  for (int h = 0; h < ctx_.size(); ++h) {
    if (!ctx_.dnormal(h, ctx_.full())) continue;
    int o = ctx_.o_upper_pi(h);
    if (!ctx_.normal_in(o, ctx_.full())) {
      fail(r, Json{{"subgroup", wit(h)}, {"problem", "O^pi(H) not normal"}});
      continue;
    }
    if (o == ctx_.trivial()) {
      int opi = o_rho_index(ctx_.lattice(), ctx_.pi());
      if (!ctx_.contains(opi, h)) fail(r, Json{{"subgroup", wit(h)}, {"problem", "H not in O_pi(G)"}});
    } else {
      const auto& qd = ctx_.quotient_lattice(ctx_.full(), o);
      int img = qd.qlat->index_of(qd.q->image_ids(ctx_.members(h)));
      int opi = o_rho_index(*qd.qlat, ctx_.pi());
      if (!qd.qlat->contains(opi, img))
        fail(r, Json{{"subgroup", wit(h)}, {"problem", "image not inside O_pi of quotient"}});
    }
  }
}

void SuiteEngine::lemma_1_5_2(SuiteResult& r) {
  for (int h = 0; h < ctx_.size(); ++h) {
    if (!ctx_.dnormal(h, ctx_.full())) continue;
    int nc = ctx_.normal_closure_in(h, ctx_.full());
    int c = ctx_.core_in(h, ctx_.full());
    std::uint64_t index = ctx_.order_of(nc) / ctx_.order_of(c);
    if (!ctx_.pi().is_pi_number(index))
      fail(r, Json{{"subgroup", wit(h)}, {"closure_over_core_index", index}});
  }
}

void SuiteEngine::lemma_1_5_3(SuiteResult& r) {
  for (int h = 0; h < ctx_.size(); ++h) {
    if (!ctx_.dnormal(h, ctx_.full())) continue;
    for (int v = 0; v < ctx_.size(); ++v) {
      int meet = ctx_.intersect(h, v);
      if (!ctx_.dnormal(meet, v))
        fail(r, Json{{"subgroup", wit(h)}, {"with", wit(v)}, {"intersection", wit(meet)}});
    }
  }
}

void SuiteEngine::lemma_2_4(SuiteResult& r) {
  std::vector<int> dn;
  for (int h = 0; h < ctx_.size(); ++h)
    if (ctx_.dnormal(h, ctx_.full())) dn.push_back(h);
  for (int h : dn)
    for (int k : dn) {
      if (k < h) continue;
      int j = ctx_.join(h, k);
      if (!ctx_.dnormal(j, ctx_.full()))
        fail(r, Json{{"subgroup", wit(h)}, {"with", wit(k)}, {"join", wit(j)}});
    }
}

std::vector<SuiteResult> SuiteEngine::lemma_2_5() {
  std::vector<SuiteResult> out;
  for (const auto& fs : family()) {
    SuiteResult r = fresh("lemma-2.5", fs.label);
    if (!fs.validation.npi_ok()) {
      skip(r, fs.label + " is not an npi-Fitting set");
    } else {
      for (int h = 0; h < ctx_.size(); ++h) {
        if (!ctx_.dnormal(h, ctx_.full())) continue;
        int rad = radical_in(ctx_, fs, h);
        if (!ctx_.dnormal(rad, ctx_.full()))
          fail(r, Json{{"subgroup", wit(h)}, {"radical", wit(rad)}});
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

void SuiteEngine::lemma_1_6(SuiteResult& r) {
  if (!ctx_.piprime_soluble()) {
    skip(r, "group is not " + ctx_.pi().to_string() + "'-soluble");
    return;
  }
  int res = ctx_.residual();
  for (int m : ctx_.maximal_dnormal_proper())
    if (!ctx_.contains(m, res))
      fail(r, Json{{"maximal_dnormal", wit(m)}, {"residual", wit(res)}});
}

std::vector<SuiteResult> SuiteEngine::prop_cor1() {
  std::vector<SuiteResult> out;
  for (const auto& fs : family()) {
    SuiteResult r = fresh("prop-cor1", fs.label);
    if (!fs.validation.npi_ok()) {
      if (guaranteed_npi(fs)) {
        fail(r, Json{{"problem", "family guaranteed to be an npi-Fitting set failed validation"},
                     {"fitting_set", fs.label}});
      } else {
        skip(r, fs.label + " is not an npi-Fitting set");
      }
      out.push_back(std::move(r));
      continue;
    }
    RadicalRoutes routes = radical_routes(ctx_, fs, ctx_.full());
    if (routes.normal_join != routes.subnormal_join ||
        routes.normal_join != routes.dnormal_join ||
        routes.normal_join != routes.dsubnormal_join)
      fail(r, Json{{"normal_join", wit(routes.normal_join)},
                   {"subnormal_join", wit(routes.subnormal_join)},
                   {"dnormal_join", wit(routes.dnormal_join)},
                   {"dsubnormal_join", wit(routes.dsubnormal_join)}});
    // FS2 with Dsubnormal in place of Dnormal (consequence of the
    // four-way radical identity)
    for (int s : fs.members)
      for (int t : fs.members) {
        if (t < s) continue;
        int j = ctx_.join(s, t);
        if (ctx_.dsubnormal(s, j) && ctx_.dsubnormal(t, j) && !fs.has(j))
          fail(r, Json{{"subgroup", wit(s)}, {"with", wit(t)}, {"join", wit(j)}});
      }
    out.push_back(std::move(r));
  }
  return out;
}

void SuiteEngine::lemma_teo1(SuiteResult& r) {
  if (!ctx_.piprime_soluble()) {
    skip(r, "group is not " + ctx_.pi().to_string() + "'-soluble");
    return;
  }
  std::vector<int> proj = projectors_in(ctx_, ctx_.full());
  std::vector<int> cov = covering_subgroups(ctx_);
  if (proj.empty()) fail(r, Json{{"problem", "no projectors"}});
  if (proj != cov) fail(r, Json{{"problem", "projector and covering sets differ"}});
  if (!proj.empty() && proj != ctx_.conjugates_of(proj.front()))
    fail(r, Json{{"problem", "projectors are not a single conjugacy class"}});
}

void SuiteEngine::lemma_teo2(SuiteResult& r) {
  if (!ctx_.piprime_soluble()) {
    skip(r, "group is not " + ctx_.pi().to_string() + "'-soluble");
    return;
  }
  std::vector<int> proj = projectors_in(ctx_, ctx_.full());
  for (int h = 0; h < ctx_.size(); ++h) {
    auto c = projector_characterization(ctx_, h);
    bool is_proj = std::binary_search(proj.begin(), proj.end(), h);
    if (c.all() != is_proj)
      fail(r, Json{{"subgroup", wit(h)},
                   {"in_class", c.in_class},
                   {"self_dnormalizing", c.self_dnormalizing},
                   {"residual_property", c.residual_property},
                   {"is_projector", is_proj}});
  }
}

std::vector<SuiteResult> SuiteEngine::lemma_2_8a() {
  std::vector<SuiteResult> out;
  for (const auto& fs : family()) {
    SuiteResult r = fresh("lemma-2.8a", fs.label);
    if (!ctx_.piprime_soluble()) {
      skip(r, "group is not " + ctx_.pi().to_string() + "'-soluble");
    } else if (!fs.validation.npi_ok()) {
      skip(r, fs.label + " is not an npi-Fitting set");
    } else {
      try {
        InjectorReport rep = injectors_constructive(ctx_, fs);
        for (const auto& check : rep.radical_product_checks)
          if (check.applicable && check.projector < 0)
            fail(r, Json{{"injector", wit(check.injector)},
                         {"problem", "no projector P with V = (WP)_F"}});
      } catch (const Error& e) {
        fail(r, Json{{"error", e.what()}});
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SuiteResult> SuiteEngine::lemma_2_8b() {
  std::vector<SuiteResult> out;
  for (const auto& fs : family()) {
    SuiteResult r = fresh("lemma-2.8b", fs.label);
    if (!ctx_.piprime_soluble()) {
      skip(r, "group is not " + ctx_.pi().to_string() + "'-soluble");
    } else if (!fs.validation.npi_ok()) {
      skip(r, fs.label + " is not an npi-Fitting set");
    } else {
      int res = ctx_.residual();
      std::vector<int> fmax_g = f_maximal_in(ctx_, fs, ctx_.full());
      for (int w : f_maximal_in(ctx_, fs, res)) {
        std::vector<int> vs;
        for (int v : fmax_g)
          if (ctx_.contains(v, w)) vs.push_back(v);
        for (int v : vs)
          for (int v1 : vs) {
            if (v == v1) continue;
            int j = ctx_.join(v, v1);
            int jres = ctx_.residual_in(j);
            bool found = false;
            for (ElementId x : ctx_.members(jres))
              if (ctx_.conj_sub(v1, x) == v) {
                found = true;
                break;
              }
            if (!found)
              fail(r, Json{{"common_w", wit(w)}, {"v", wit(v)}, {"v1", wit(v1)},
                           {"problem", "no conjugating element inside <V,V1>^Npi"}});
          }
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SuiteResult> SuiteEngine::theorem_2_9(bool trace_only) {
  std::vector<SuiteResult> out;
  const std::string id = trace_only ? "cor-2.11" : "theorem-2.9";
  for (const auto& fs : family()) {
    if (trace_only && fs.provenance != FittingSet::Provenance::TraceOfClass) continue;
    SuiteResult r = fresh(id, fs.label);
    if (!ctx_.piprime_soluble()) {
      skip(r, "group is not " + ctx_.pi().to_string() + "'-soluble");
    } else if (!fs.validation.npi_ok()) {
      skip(r, fs.label + " is not an npi-Fitting set");
    } else {
      try {
        InjectorReport rep = injectors_constructive(ctx_, fs);
        if (rep.injectors.empty()) fail(r, Json{{"problem", "no injectors"}});
        if (!rep.injectors.empty() && rep.injectors != ctx_.conjugates_of(rep.injectors.front()))
          fail(r, Json{{"problem", "injectors are not a single conjugacy class"}});
        for (const auto& [pair, witn] : rep.witnesses)
          if (!witn.in_residual)
            fail(r, Json{{"v", wit(pair.first)},
                         {"v_star", wit(pair.second)},
                         {"problem", "conjugating witness found only outside the residual"}});
        for (const auto& verdict : dnormal_intersection_check(ctx_, fs, rep.injectors))
          if (!verdict.is_injector_of_dnormal)
            fail(r, Json{{"injector", wit(verdict.injector)},
                         {"dnormal", wit(verdict.dnormal_subgroup)},
                         {"intersection", wit(verdict.intersection)},
                         {"problem", "intersection is not an injector of the Dnormal subgroup"}});
        // Measured, not asserted: how often V ∩ K is F-maximal in K for
        // Dsubnormal (rather than subnormal) K.
        if (r.status == SuiteStatus::Pass && !trace_only) {
          std::size_t total = 0, fmax = 0;
          for (int k = 0; k < ctx_.size(); ++k) {
            if (!ctx_.dsubnormal(k, ctx_.full())) continue;
            auto fmax_k = f_maximal_in(ctx_, fs, k);
            for (int v : rep.injectors) {
              ++total;
              int meet = ctx_.intersect(v, k);
              fmax += std::binary_search(fmax_k.begin(), fmax_k.end(), meet) ? 1 : 0;
            }
          }
          r.witnesses.push_back(Json{{"observation", "dsubnormal-meet-f-maximality"},
                                     {"f_maximal", fmax},
                                     {"total", total}});
        }
      } catch (const Error& e) {
        fail(r, Json{{"error", e.what()}});
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SuiteResult> SuiteEngine::run(const std::string& id) {
  using Clock = std::chrono::steady_clock;
  auto start = Clock::now();
  std::vector<SuiteResult> results;

  if (id == "lemma-2.5") results = lemma_2_5();
  else if (id == "prop-cor1") results = prop_cor1();
  else if (id == "lemma-2.8a") results = lemma_2_8a();
  else if (id == "lemma-2.8b") results = lemma_2_8b();
  else if (id == "theorem-2.9") results = theorem_2_9(false);
  else if (id == "cor-2.11") results = theorem_2_9(true);
  else {
    static const std::map<std::string, Checker> kCheckers = {
        {"prop-1.2", &SuiteEngine::prop_1_2},       {"lemma-1.4.1", &SuiteEngine::lemma_1_4_1},
        {"lemma-1.4.2", &SuiteEngine::lemma_1_4_2}, {"lemma-1.4.3", &SuiteEngine::lemma_1_4_3},
        {"lemma-1.4.4", &SuiteEngine::lemma_1_4_4}, {"lemma-1.4.5", &SuiteEngine::lemma_1_4_5},
        {"lemma-1.4.6", &SuiteEngine::lemma_1_4_6}, {"lemma-1.5.1", &SuiteEngine::lemma_1_5_1},
        {"lemma-1.5.2", &SuiteEngine::lemma_1_5_2}, {"lemma-1.5.3", &SuiteEngine::lemma_1_5_3},
        {"lemma-2.4", &SuiteEngine::lemma_2_4},     {"lemma-1.6", &SuiteEngine::lemma_1_6},
        {"lemma-teo1", &SuiteEngine::lemma_teo1},   {"lemma-teo2", &SuiteEngine::lemma_teo2}};
    SuiteResult r = fresh(id);
    try {
      (this->*kCheckers.at(id))(r);
    } catch (const Error& e) {
      fail(r, Json{{"error", e.what()}});
    }
    results = {std::move(r)};
  }

  double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  for (auto& r : results) r.timing_ms = ms / static_cast<double>(results.size());
  return results;
}

// ---------- corpus-level suites ----------

using CtxList = std::vector<std::pair<std::string, std::shared_ptr<PiContext>>>;

CtxList make_contexts(const Corpus& corpus, const std::map<std::string, LatticePtr>& lats,
                      const PrimeSet& pi) {
  CtxList out;
  for (const auto& ng : corpus)
    out.emplace_back(ng.name, std::make_shared<PiContext>(lats.at(ng.name), pi));
  return out;
}

Json counterexample_json(const CtxList& ctxs, const ClassCounterexample& cex) {
  PiContext& ctx = [&]() -> PiContext& {
    for (const auto& [name, c] : ctxs)
      if (name == cex.group_name) return *c;
    throw DomainError("counterexample group vanished");
  }();
  Json j;
  j["group"] = cex.group_name;
  j["ambient"] = sub_wit(ctx.group(), ctx.members(cex.ambient));
  j["axiom"] = cex.axiom_i ? "dnormal-descent" : "dnormal-join";
  j["m"] = sub_wit(ctx.group(), ctx.members(cex.m));
  if (cex.n >= 0) j["n"] = sub_wit(ctx.group(), ctx.members(cex.n));
  return j;
}

SuiteResult remark_2(const Corpus& corpus, const std::map<std::string, LatticePtr>& lats,
                     const PrimeSet& pi) {
  SuiteResult r;
  r.suite = "remark-2";
  r.scope = {"corpus", pi, "nilpotent"};
  CtxList ctxs = make_contexts(corpus, lats, pi);
  auto cex = validate_npi_fitting_class(ctxs, ClassSpec::nilpotent());
  if (pi.explicit_size() <= 1) {
    // classical case: nilpotent groups do form a Fitting class
    if (cex) {
      r.status = SuiteStatus::Fail;
      r.witnesses.push_back(counterexample_json(ctxs, *cex));
    }
    return r;
  }
  bool has_nonnilpotent_pi_group = false;
  for (const auto& [name, ctx] : ctxs)
    for (int i = 0; i < ctx->size() && !has_nonnilpotent_pi_group; ++i)
      if (pi.is_pi_number(ctx->order_of(i)) && !ctx->member(i, ClassSpec::nilpotent()))
        has_nonnilpotent_pi_group = true;
  if (has_nonnilpotent_pi_group && !cex) {
    r.status = SuiteStatus::Fail;
    r.witnesses.push_back(
        Json{{"problem", "corpus has a non-nilpotent pi-group but no counterexample was found"}});
  } else if (cex) {
    r.witnesses.push_back(counterexample_json(ctxs, *cex));
  } else {
    r.witnesses.push_back(Json{{"note", "no counterexample derivable from this corpus"}});
  }
  return r;
}

SuiteResult remark_3(const Corpus& corpus, const std::map<std::string, LatticePtr>& lats,
                     const PrimeSet& pi) {
  SuiteResult r;
  r.suite = "remark-3";
  r.scope = {"corpus", pi, "npi" + pi.to_string()};
  CtxList ctxs = make_contexts(corpus, lats, pi);
  auto cex = validate_npi_fitting_class(ctxs, ClassSpec::npi(pi));
  if (cex) {
    r.status = SuiteStatus::Fail;
    r.witnesses.push_back(counterexample_json(ctxs, *cex));
  }
  return r;
}

SuiteResult classical_suite(const Corpus& corpus, const std::map<std::string, LatticePtr>& lats) {
  SuiteResult r;
  r.suite = "classical";
  r.scope = {"corpus", PrimeSet{}, "nilpotent"};
  auto fail = [&](Json j) {
    r.status = SuiteStatus::Fail;
    r.witnesses.push_back(std::move(j));
  };
  struct Pin {
    const char* group;
    std::size_t radical_order;
    std::size_t injector_order, injector_count;
    std::size_t projector_order, projector_count;
  };
  // Fitting subgroup, nilpotent injectors, Carter subgroups
  const Pin pins[] = {{"S3", 3, 3, 1, 2, 3}, {"S4", 4, 8, 3, 8, 3}, {"A4", 4, 4, 1, 3, 4}};
  for (const Pin& pin : pins) {
    bool found = false;
    for (const auto& ng : corpus) found |= ng.name == pin.group;
    if (!found) {
      r.status = SuiteStatus::SkippedHypothesis;
      r.witnesses.push_back(Json{{"violated_hypothesis",
                                  std::string("corpus lacks group ") + pin.group}});
      return r;
    }
  }
  for (const Pin& pin : pins) {
    PiContext ctx(lats.at(pin.group), PrimeSet{});
    FittingSet fs = trace(ctx, ClassSpec::nilpotent());
    if (!fs.validation.npi_ok()) {
      fail(Json{{"group", pin.group}, {"problem", "nilpotent trace not a Fitting set at pi={}"}});
      continue;
    }
    int rad = radical_in(ctx, fs, ctx.full());
    if (ctx.order_of(rad) != pin.radical_order)
      fail(Json{{"group", pin.group},
                {"problem", "Fitting subgroup order"},
                {"radical", sub_wit(ctx.group(), ctx.members(rad))}});
    std::vector<int> inj = injectors_bruteforce_in(ctx, fs, ctx.full());
    bool inj_ok = inj.size() == pin.injector_count;
    for (int v : inj) inj_ok = inj_ok && ctx.order_of(v) == pin.injector_order;
    if (!inj_ok)
      fail(Json{{"group", pin.group},
                {"problem", "nilpotent injectors"},
                {"count", inj.size()}});
    std::vector<int> proj = projectors_in(ctx, ctx.full());
    bool proj_ok = proj.size() == pin.projector_count;
    for (int u : proj) {
      proj_ok = proj_ok && ctx.order_of(u) == pin.projector_order;
      // Carter property: self-normalizing and nilpotent
      proj_ok = proj_ok && ctx.normalizer(u) == u && ctx.member(u, ClassSpec::nilpotent());
    }
    if (!proj_ok)
      fail(Json{{"group", pin.group},
                {"problem", "Carter subgroups"},
                {"count", proj.size()}});
  }
  return r;
}

void run_parallel(std::vector<std::function<void()>>& tasks, int jobs) {
  if (jobs <= 1 || tasks.size() <= 1) {
    for (auto& t : tasks) t();
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(tasks.size());
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      try {
        tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  for (int i = 1; i < jobs; ++i) threads.emplace_back(worker);
  worker();
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

const std::vector<std::string>& all_suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v = kPerGroupSuites;
    v.insert(v.end(), kCorpusSuites.begin(), kCorpusSuites.end());
    return v;
  }();
  return ids;
}

std::vector<std::string> resolve_suite_ids(const std::string& pattern) {
  const auto& ids = all_suite_ids();
  if (pattern == "all") return ids;
  if (std::find(ids.begin(), ids.end(), pattern) != ids.end()) return {pattern};
  std::vector<std::string> out;
  for (const auto& id : ids)
    if (id.rfind(pattern + ".", 0) == 0) out.push_back(id);
  if (out.empty()) throw ParseError("unknown suite '" + pattern + "'");
  return out;
}

std::vector<PrimeSet> default_pi_sets() {
  return {PrimeSet{},
          PrimeSet{{2}},
          PrimeSet{{3}},
          PrimeSet{{2, 3}},
          PrimeSet{{3, 5}},
          PrimeSet{{2, 3, 5}}};
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& ids, const Corpus& corpus,
                                    const std::vector<PrimeSet>& pis, const SuiteOptions& opt) {
  std::vector<std::string> per_group, corpus_level;
  for (const auto& id : ids) {
    if (std::find(kPerGroupSuites.begin(), kPerGroupSuites.end(), id) != kPerGroupSuites.end())
      per_group.push_back(id);
    else if (std::find(kCorpusSuites.begin(), kCorpusSuites.end(), id) != kCorpusSuites.end())
      corpus_level.push_back(id);
    else
      throw ParseError("unknown suite '" + id + "'");
  }

  std::map<std::string, LatticePtr> lats;
  for (const auto& ng : corpus) lats[ng.name] = Lattice::build(ng.group);

  struct GroupItem {
    std::size_t pi_idx, group_idx;
    std::vector<std::vector<SuiteResult>> per_suite;
  };
  struct CorpusItem {
    std::size_t pi_idx;
    std::string suite;
    SuiteResult result;
  };
  std::vector<GroupItem> group_items;
  std::vector<CorpusItem> corpus_items;
  if (!per_group.empty())
    for (std::size_t p = 0; p < pis.size(); ++p)
      for (std::size_t g = 0; g < corpus.size(); ++g) group_items.push_back({p, g, {}});
  bool want_classical = false;
  for (const auto& id : corpus_level) {
    if (id == "classical") {
      want_classical = true;
      continue;
    }
    for (std::size_t p = 0; p < pis.size(); ++p) corpus_items.push_back({p, id, {}});
  }

  std::vector<std::function<void()>> tasks;
  for (auto& item : group_items)
    tasks.push_back([&corpus, &lats, &pis, &per_group, &item] {
      const NamedGroup& ng = corpus[item.group_idx];
      SuiteEngine engine(ng, lats.at(ng.name), pis[item.pi_idx]);
      for (const auto& id : per_group) item.per_suite.push_back(engine.run(id));
    });
  for (auto& item : corpus_items)
    tasks.push_back([&corpus, &lats, &pis, &item] {
      item.result = item.suite == "remark-2" ? remark_2(corpus, lats, pis[item.pi_idx])
                                             : remark_3(corpus, lats, pis[item.pi_idx]);
    });
  SuiteResult classical_result;
  if (want_classical)
    tasks.push_back([&corpus, &lats, &classical_result] {
      classical_result = classical_suite(corpus, lats);
    });

  run_parallel(tasks, opt.jobs);

  std::vector<SuiteResult> out;
  for (const auto& id : ids) {
    if (id == "classical") {
      out.push_back(classical_result);
      continue;
    }
    auto suite_pos = std::find(per_group.begin(), per_group.end(), id);
    if (suite_pos != per_group.end()) {
      std::size_t pos = static_cast<std::size_t>(suite_pos - per_group.begin());
      for (std::size_t p = 0; p < pis.size(); ++p)
        for (std::size_t g = 0; g < corpus.size(); ++g)
          for (auto& item : group_items)
            if (item.pi_idx == p && item.group_idx == g)
              for (auto& r : item.per_suite[pos]) out.push_back(r);
    } else {
      for (std::size_t p = 0; p < pis.size(); ++p)
        for (auto& item : corpus_items)
          if (item.pi_idx == p && item.suite == id) out.push_back(item.result);
    }
  }
  if (!opt.timing)
    for (auto& r : out) r.timing_ms = 0.0;
  return out;
}

}  // namespace pifit
