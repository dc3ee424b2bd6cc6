// pifit: finite-group engine and verification CLI for pi-relative Fitting
// structure (Dnormal subgroups, Fitting sets, radicals, injectors,
// projectors) on concrete permutation groups.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "pifit/dnormal.hpp"
#include "pifit/fitting.hpp"
#include "pifit/injectors.hpp"
#include "pifit/projectors.hpp"
#include "pifit/report.hpp"
#include "pifit/suites.hpp"

namespace {

using namespace pifit;

constexpr const char* kPiUnset = "<unset>";

struct GlobalOpts {
  std::string pi_text = kPiUnset;  // unset: commands use {}, verify uses the default six
  std::string class_text = "npi";

  PrimeSet parse_pi() const { return PrimeSet::parse(pi_text == kPiUnset ? "" : pi_text); }
  std::string group;
  std::string corpus = "default";
  std::string format = "text";
  std::string subgroup;
  std::string seed_subgroups;
  std::string suite = "all";
  std::string method = "both";
  bool complement = false;
  bool no_timing = false;
  int jobs = 1;
};

Corpus load(const GlobalOpts& g) {
  if (g.corpus == "default") return default_corpus();
  return load_corpus_file(g.corpus);
}

IdSet parse_subgroup(const Group& g, const std::string& text) {
  IdSet seed;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    if (cur.find_first_not_of(" \t") == std::string::npos) continue;
    seed.push_back(g.id_of(parse_perm(cur, g.degree())));
  }
  std::sort(seed.begin(), seed.end());
  return closure_ids(g, seed);
}

std::vector<IdSet> parse_seed_subgroups(const Group& g, const std::string& text) {
  std::vector<IdSet> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ';')) {
    if (cur.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_subgroup(g, cur));
  }
  if (out.empty()) throw ParseError("--seed-subgroups lists no subgroups");
  return out;
}

void emit(const GlobalOpts& g, const Json& payload, const std::string& text) {
  if (g.format == "json")
    std::cout << payload.dump(2) << "\n";
  else
    std::cout << text;
}

Json subgroup_list_json(PiContext& ctx, const std::vector<int>& idxs) {
  Json arr = Json::array();
  for (int i : idxs) arr.push_back(subgroup_json(ctx.group(), ctx.members(i)));
  return arr;
}

std::string subgroup_list_text(PiContext& ctx, const std::vector<int>& idxs) {
  std::ostringstream out;
  for (int i : idxs) out << "  " << subgroup_brief(ctx.group(), ctx.members(i)) << "\n";
  return out.str();
}

struct Session {
  Corpus corpus;
  GroupPtr group;
  LatticePtr lat;
  std::unique_ptr<PiContext> ctx;

  Session(const GlobalOpts& g, bool needs_group = true) {
    corpus = load(g);
    if (!needs_group) return;
    if (g.group.empty()) throw ParseError("--group is required for this command");
    group = find_group(corpus, g.group).group;
    lat = Lattice::build(group);
    ctx = std::make_unique<PiContext>(lat, g.parse_pi());
  }
};

int cmd_lattice(const GlobalOpts& g) {
  Session s(g);
  PiContext& ctx = *s.ctx;
  Json subs = Json::array();
  std::ostringstream text;
  text << "group " << g.group << ": order " << ctx.group().order() << ", " << ctx.size()
       << " subgroups in " << ctx.lattice().classes().size() << " conjugacy classes\n";
  for (int i = 0; i < ctx.size(); ++i) {
    Json j = subgroup_json(ctx.group(), ctx.members(i));
    j["normal"] = ctx.lattice().is_normal(i);
    j["subnormal"] = ctx.lattice().is_subnormal(i);
    j["class"] = ctx.lattice().class_of(i);
    subs.push_back(j);
    text << "  " << subgroup_brief(ctx.group(), ctx.members(i))
         << (ctx.lattice().is_normal(i) ? " normal" : "")
         << (!ctx.lattice().is_normal(i) && ctx.lattice().is_subnormal(i) ? " subnormal" : "")
         << " class " << ctx.lattice().class_of(i) << "\n";
  }
  Json payload;
  payload["command"] = "lattice";
  payload["group"] = g.group;
  payload["order"] = ctx.group().order();
  payload["subgroup_count"] = ctx.size();
  payload["class_count"] = ctx.lattice().classes().size();
  payload["subgroups"] = subs;
  emit(g, payload, text.str());
  return 0;
}

int cmd_halls(const GlobalOpts& g) {
  Session s(g);
  PiContext& ctx = *s.ctx;
  PrimeSet rho = ctx.pi();
  if (g.complement) rho = rho.complement();
  auto idxs = hall_in_indices(ctx.lattice(), ctx.full(), rho);
  Json payload;
  payload["command"] = "halls";
  payload["group"] = g.group;
  payload["rho"] = rho.to_string();
  payload["subgroups"] = subgroup_list_json(ctx, idxs);
  std::ostringstream text;
  text << "Hall " << rho.to_string() << "-subgroups of " << g.group << ": " << idxs.size() << "\n"
       << subgroup_list_text(ctx, idxs);
  emit(g, payload, text.str());
  return 0;
}

int cmd_opi(const GlobalOpts& g) {
  Session s(g);
  PiContext& ctx = *s.ctx;
  PrimeSet rho = ctx.pi();
  if (g.complement) rho = rho.complement();
  int idx = o_rho_index(ctx.lattice(), rho);
  Json payload;
  payload["command"] = "opi";
  payload["group"] = g.group;
  payload["rho"] = rho.to_string();
  payload["subgroup"] = subgroup_json(ctx.group(), ctx.members(idx));
  emit(g, payload,
       "O_" + rho.to_string() + "(" + g.group + ") = " +
           subgroup_brief(ctx.group(), ctx.members(idx)) + "\n");
  return 0;
}

int cmd_oupperpi(const GlobalOpts& g) {
  Session s(g);
  PiContext& ctx = *s.ctx;
  int idx = ctx.o_upper_pi(ctx.full());
  Json payload;
  payload["command"] = "oupperpi";
  payload["group"] = g.group;
  payload["pi"] = pi_json(ctx.pi());
  payload["subgroup"] = subgroup_json(ctx.group(), ctx.members(idx));
  emit(g, payload,
       "O^" + ctx.pi().to_string() + "(" + g.group + ") = " +
           subgroup_brief(ctx.group(), ctx.members(idx)) + "\n");
  return 0;
}

int cmd_residual(const GlobalOpts& g) {
  Session s(g);
  PiContext& ctx = *s.ctx;
  int idx = ctx.residual();
  Json payload;
  payload["command"] = "residual";
  payload["group"] = g.group;
  payload["pi"] = pi_json(ctx.pi());
  payload["subgroup"] = subgroup_json(ctx.group(), ctx.members(idx));
  emit(g, payload,
       g.group + "^Npi" + ctx.pi().to_string() + " = " +
           subgroup_brief(ctx.group(), ctx.members(idx)) + "\n");
  return 0;
}

int cmd_dnormal(const GlobalOpts& g) {
  Session s(g);
  PiContext& ctx = *s.ctx;
  if (g.subgroup.empty()) throw ParseError("--subgroup is required");
  int h = ctx.lattice().index_of(parse_subgroup(ctx.group(), g.subgroup));
  bool def = ctx.dnormal_def(h, ctx.full());
  bool chr = ctx.dnormal(h, ctx.full());
  if (def != chr)
    throw MismatchError("dnormal routes disagree",
                        subgroup_json(ctx.group(), ctx.members(h)).dump());
  Json payload;
  payload["command"] = "dnormal";
  payload["group"] = g.group;
  payload["pi"] = pi_json(ctx.pi());
  payload["subgroup"] = subgroup_json(ctx.group(), ctx.members(h));
  payload["dnormal"] = chr;
  emit(g, payload, std::string(chr ? "true" : "false") + "\n");
  return 0;
}

int cmd_dsubnormal(const GlobalOpts& g) {
  Session s(g);
  PiContext& ctx = *s.ctx;
  if (g.subgroup.empty()) throw ParseError("--subgroup is required");
  int h = ctx.lattice().index_of(parse_subgroup(ctx.group(), g.subgroup));
  auto chain = ctx.dsubnormal_chain(h, ctx.full());
  Json payload;
  payload["command"] = "dsubnormal";
  payload["group"] = g.group;
  payload["pi"] = pi_json(ctx.pi());
  payload["subgroup"] = subgroup_json(ctx.group(), ctx.members(h));
  payload["dsubnormal"] = !chain.empty();
  payload["chain"] = subgroup_list_json(ctx, chain);
  std::ostringstream text;
  text << (!chain.empty() ? "true" : "false") << "\n";
  if (!chain.empty()) text << "chain:\n" << subgroup_list_text(ctx, chain);
  emit(g, payload, text.str());
  return 0;
}

std::vector<int> seed_indices(const GlobalOpts& g, PiContext& ctx) {
  std::vector<int> seed;
  for (const auto& ids : parse_seed_subgroups(ctx.group(), g.seed_subgroups))
    seed.push_back(ctx.lattice().index_of(ids));
  return seed;
}

/// Fitting set selected by the flags: the closure of --seed-subgroups when
/// given (so downstream operations see a valid set), else the --class trace.
FittingSet fitting_set_from_opts(const GlobalOpts& g, PiContext& ctx) {
  if (!g.seed_subgroups.empty()) return fitting_set_closure(ctx, seed_indices(g, ctx));
  return trace(ctx, ClassSpec::parse(g.class_text, ctx.pi()));
}

Json validation_json(PiContext& ctx, const FittingValidation& v) {
  auto wit = [&](const std::optional<AxiomWitness>& w) -> Json {
    if (!w) return nullptr;
    Json j;
    j["s"] = subgroup_json(ctx.group(), ctx.members(w->s));
    if (w->t >= 0) j["t"] = subgroup_json(ctx.group(), ctx.members(w->t));
    if (w->extra >= 0) j["join_or_conjugate"] = subgroup_json(ctx.group(), ctx.members(w->extra));
    return j;
  };
  Json j;
  j["fs1_classical"] = v.fs1_classical;
  j["fs2_classical"] = v.fs2_classical;
  j["fs3"] = v.fs3;
  j["fs1_npi"] = v.fs1_npi;
  j["fs2_npi"] = v.fs2_npi;
  if (!v.fs1_classical) j["fs1_classical_witness"] = wit(v.fs1_classical_witness);
  if (!v.fs2_classical) j["fs2_classical_witness"] = wit(v.fs2_classical_witness);
  if (!v.fs3) j["fs3_witness"] = wit(v.fs3_witness);
  if (!v.fs1_npi) j["fs1_npi_witness"] = wit(v.fs1_npi_witness);
  if (!v.fs2_npi) j["fs2_npi_witness"] = wit(v.fs2_npi_witness);
  return j;
}

int cmd_radical(const GlobalOpts& g) {
  Session s(g);
  PiContext& ctx = *s.ctx;
  FittingSet fs = fitting_set_from_opts(g, ctx);
  int rad = radical_in(ctx, fs, ctx.full());
  Json payload;
  payload["command"] = "radical";
  payload["group"] = g.group;
  payload["pi"] = pi_json(ctx.pi());
  payload["fitting_set"] = fs.label;
  payload["subgroup"] = subgroup_json(ctx.group(), ctx.members(rad));
  if (fs.validation.npi_ok()) {
    RadicalRoutes routes = radical_routes(ctx, fs, ctx.full());
    payload["routes_agree"] = routes.normal_join == routes.subnormal_join &&
                              routes.normal_join == routes.dnormal_join &&
                              routes.normal_join == routes.dsubnormal_join;
  }
  emit(g, payload,
       "radical of " + g.group + " for " + fs.label + " = " +
           subgroup_brief(ctx.group(), ctx.members(rad)) + "\n");
  return 0;
}

int cmd_fmaximal(const GlobalOpts& g) {
  Session s(g);
  PiContext& ctx = *s.ctx;
  FittingSet fs = fitting_set_from_opts(g, ctx);
  auto idxs = f_maximal_in(ctx, fs, ctx.full());
  Json payload;
  payload["command"] = "fmaximal";
  payload["group"] = g.group;
  payload["pi"] = pi_json(ctx.pi());
  payload["fitting_set"] = fs.label;
  payload["subgroups"] = subgroup_list_json(ctx, idxs);
  std::ostringstream text;
  text << "F-maximal subgroups of " << g.group << " for " << fs.label << ": " << idxs.size()
       << "\n"
       << subgroup_list_text(ctx, idxs);
  emit(g, payload, text.str());
  return 0;
}

int cmd_injectors(const GlobalOpts& g) {
  Session s(g);
  PiContext& ctx = *s.ctx;
  FittingSet fs = fitting_set_from_opts(g, ctx);
  Json payload;
  payload["command"] = "injectors";
  payload["group"] = g.group;
  payload["pi"] = pi_json(ctx.pi());
  payload["fitting_set"] = fs.label;
  std::ostringstream text;

  std::vector<int> brute;
  if (g.method == "brute" || g.method == "both") {
    brute = injectors_bruteforce_in(ctx, fs, ctx.full());
    payload["bruteforce"] = subgroup_list_json(ctx, brute);
    text << "brute-force injectors: " << brute.size() << "\n" << subgroup_list_text(ctx, brute);
    if (!brute.empty()) {
      bool one_class = brute == ctx.conjugates_of(brute.front());
      payload["single_conjugacy_class"] = one_class;
      text << "single conjugacy class: " << (one_class ? "yes" : "no") << "\n";
    }
  }
  if (g.method == "constructive" || g.method == "both") {
    InjectorReport rep = injectors_constructive(ctx, fs);
    payload["constructive"] = subgroup_list_json(ctx, rep.injectors);
    Json witnesses = Json::array();
    for (const auto& [pair, w] : rep.witnesses) {
      Json j;
      j["v"] = subgroup_json(ctx.group(), ctx.members(pair.first));
      j["v_star"] = subgroup_json(ctx.group(), ctx.members(pair.second));
      j["witness"] = ctx.group().element(w.g).to_cycles();
      j["in_residual"] = w.in_residual;
      witnesses.push_back(j);
    }
    payload["conjugacy_witnesses"] = witnesses;
    Json trace_json = Json::array();
    for (const auto& level : rep.trace) {
      Json j;
      j["ambient"] = subgroup_json(ctx.group(), ctx.members(level.ambient));
      j["residual"] = subgroup_json(ctx.group(), ctx.members(level.residual));
      j["injector_of_residual"] = subgroup_json(ctx.group(), ctx.members(level.chosen_injector));
      j["f_maximal_over_w"] = subgroup_list_json(ctx, level.f_maximal_over_w);
      trace_json.push_back(j);
    }
    payload["construction_trace"] = trace_json;
    text << "constructive injectors: " << rep.injectors.size() << "\n"
         << subgroup_list_text(ctx, rep.injectors);
    text << "recursion depth: " << rep.trace.size() << "\n";
  }
  emit(g, payload, text.str());
  return 0;
}

int cmd_projectors(const GlobalOpts& g) {
  Session s(g);
  PiContext& ctx = *s.ctx;
  ProjectorReport rep = projector_report(ctx);
  Json payload;
  payload["command"] = "projectors";
  payload["group"] = g.group;
  payload["pi"] = pi_json(ctx.pi());
  payload["projectors"] = subgroup_list_json(ctx, rep.projectors);
  payload["covering_subgroups"] = subgroup_list_json(ctx, rep.covering);
  payload["sets_agree"] = rep.projectors == rep.covering;
  Json characterization = Json::array();
  for (int h = 0; h < ctx.size(); ++h) {
    const auto& c = rep.characterization[h];
    if (!c.in_class && !c.self_dnormalizing) continue;  // keep the report readable
    Json j;
    j["subgroup"] = subgroup_json(ctx.group(), ctx.members(h));
    j["in_class"] = c.in_class;
    j["self_dnormalizing"] = c.self_dnormalizing;
    j["residual_property"] = c.residual_property;
    characterization.push_back(j);
  }
  payload["characterization"] = characterization;
  std::ostringstream text;
  text << "projectors: " << rep.projectors.size() << "\n"
       << subgroup_list_text(ctx, rep.projectors) << "covering subgroups: " << rep.covering.size()
       << " (" << (rep.projectors == rep.covering ? "same set" : "DIFFERENT") << ")\n";
  emit(g, payload, text.str());
  return 0;
}

int cmd_closure(const GlobalOpts& g) {
  Session s(g);
  PiContext& ctx = *s.ctx;
  if (g.seed_subgroups.empty()) throw ParseError("--seed-subgroups is required for closure");
  FittingSet fs = fitting_set_closure(ctx, seed_indices(g, ctx));
  Json payload;
  payload["command"] = "closure";
  payload["group"] = g.group;
  payload["pi"] = pi_json(ctx.pi());
  payload["members"] = subgroup_list_json(ctx, fs.members);
  payload["validation"] = validation_json(ctx, fs.validation);
  std::ostringstream text;
  text << "closure has " << fs.members.size() << " members\n"
       << subgroup_list_text(ctx, fs.members);
  emit(g, payload, text.str());
  return 0;
}

int cmd_validate_fitting(const GlobalOpts& g) {
  Session s(g);
  PiContext& ctx = *s.ctx;
  // seeds are validated as the literal collection, not closed first
  FittingSet fs = g.seed_subgroups.empty()
                      ? trace(ctx, ClassSpec::parse(g.class_text, ctx.pi()))
                      : explicit_fitting_set(ctx, seed_indices(g, ctx), "explicit(seed)");
  Json payload;
  payload["command"] = "validate-fitting";
  payload["group"] = g.group;
  payload["pi"] = pi_json(ctx.pi());
  payload["fitting_set"] = fs.label;
  payload["member_count"] = fs.members.size();
  payload["validation"] = validation_json(ctx, fs.validation);
  std::ostringstream text;
  const auto& v = fs.validation;
  text << fs.label << " on " << g.group << " (" << fs.members.size() << " members)\n"
       << "  classical: fs1=" << v.fs1_classical << " fs2=" << v.fs2_classical << " fs3=" << v.fs3
       << "\n"
       << "  npi:       fs1=" << v.fs1_npi << " fs2=" << v.fs2_npi << " fs3=" << v.fs3 << "\n";
  emit(g, payload, text.str());
  return 0;
}

int cmd_verify(const GlobalOpts& g) {
  Corpus corpus = load(g);
  std::vector<PrimeSet> pis =
      g.pi_text == kPiUnset ? default_pi_sets() : std::vector<PrimeSet>{g.parse_pi()};
  SuiteOptions opt;
  opt.jobs = g.jobs;
  opt.timing = !g.no_timing;
  auto results = run_suites(resolve_suite_ids(g.suite), corpus, pis, opt);
  bool any_fail = false;
  Json arr = Json::array();
  std::ostringstream text;
  std::size_t pass = 0, failn = 0, skip = 0;
  for (const auto& r : results) {
    any_fail |= r.status == SuiteStatus::Fail;
    (r.status == SuiteStatus::Pass ? pass : r.status == SuiteStatus::Fail ? failn : skip) += 1;
    arr.push_back(suite_result_json(r));
    text << "[" << to_string(r.status) << "] " << r.suite << " group=" << r.scope.group
         << " pi=" << r.scope.pi.to_string();
    if (!r.scope.class_label.empty()) text << " class=" << r.scope.class_label;
    text << "\n";
    if (r.status == SuiteStatus::Fail)
      for (const auto& w : r.witnesses) text << "    witness: " << w.dump() << "\n";
  }
  text << pass << " passed, " << failn << " failed, " << skip << " skipped\n";
  emit(g, arr, text.str());
  return any_fail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group engine for pi-relative Fitting structure"};
  app.require_subcommand(1);
  GlobalOpts g;

  auto add_common = [&](CLI::App* cmd, bool with_group = true) {
    cmd->add_option("--pi", g.pi_text, "comma list of primes; empty = classical case");
    cmd->add_option("--corpus", g.corpus, "corpus file path or 'default'");
    cmd->add_option("--format", g.format, "text|json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--jobs", g.jobs, "parallel work items");
    if (with_group) cmd->add_option("--group", g.group, "group name from the corpus");
    return cmd;
  };

  add_common(app.add_subcommand("lattice", "enumerate the subgroup lattice"));
  auto* halls = add_common(app.add_subcommand("halls", "Hall rho-subgroups"));
  halls->add_flag("--complement", g.complement, "use pi' instead of pi");
  auto* opi = add_common(app.add_subcommand("opi", "largest normal rho-subgroup"));
  opi->add_flag("--complement", g.complement, "use pi' instead of pi");
  add_common(app.add_subcommand("oupperpi", "smallest normal subgroup with pi-group quotient"));
  add_common(app.add_subcommand("residual", "Npi-residual"));
  auto* dn = add_common(app.add_subcommand("dnormal", "Dnormality of a subgroup"));
  dn->add_option("--subgroup", g.subgroup, "generators of the subgroup");
  auto* dsn = add_common(app.add_subcommand("dsubnormal", "Dsubnormality with witness chain"));
  dsn->add_option("--subgroup", g.subgroup, "generators of the subgroup");
  auto* rad = add_common(app.add_subcommand("radical", "F-radical"));
  rad->add_option("--class", g.class_text, "group class spec");
  rad->add_option("--seed-subgroups", g.seed_subgroups, "';'-separated subgroup generator lists");
  auto* fmax = add_common(app.add_subcommand("fmaximal", "F-maximal subgroups"));
  fmax->add_option("--class", g.class_text, "group class spec");
  fmax->add_option("--seed-subgroups", g.seed_subgroups, "';'-separated subgroup generator lists");
  auto* inj = add_common(app.add_subcommand("injectors", "F-injectors"));
  inj->add_option("--class", g.class_text, "group class spec");
  inj->add_option("--seed-subgroups", g.seed_subgroups, "';'-separated subgroup generator lists");
  inj->add_option("--method", g.method, "brute|constructive|both")
      ->check(CLI::IsMember({"brute", "constructive", "both"}));
  add_common(app.add_subcommand("projectors", "Npi-projectors and covering subgroups"));
  auto* clo = add_common(app.add_subcommand("closure", "smallest npi-Fitting set over a seed"));
  clo->add_option("--seed-subgroups", g.seed_subgroups, "';'-separated subgroup generator lists");
  auto* val = add_common(app.add_subcommand("validate-fitting", "FS1-FS3 validation"));
  val->add_option("--class", g.class_text, "group class spec");
  val->add_option("--seed-subgroups", g.seed_subgroups, "';'-separated subgroup generator lists");
  auto* ver = add_common(app.add_subcommand("verify", "run verification suites"), false);
  ver->add_option("--suite", g.suite, "suite id, prefix, or 'all'");
  ver->add_flag("--no-timing", g.no_timing, "zero out timing fields (stable output)");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "lattice") return cmd_lattice(g);
    if (cmd == "halls") return cmd_halls(g);
    if (cmd == "opi") return cmd_opi(g);
    if (cmd == "oupperpi") return cmd_oupperpi(g);
    if (cmd == "residual") return cmd_residual(g);
    if (cmd == "dnormal") return cmd_dnormal(g);
    if (cmd == "dsubnormal") return cmd_dsubnormal(g);
    if (cmd == "radical") return cmd_radical(g);
    if (cmd == "fmaximal") return cmd_fmaximal(g);
    if (cmd == "injectors") return cmd_injectors(g);
    if (cmd == "projectors") return cmd_projectors(g);
    if (cmd == "closure") return cmd_closure(g);
    if (cmd == "validate-fitting") return cmd_validate_fitting(g);
    if (cmd == "verify") return cmd_verify(g);
    std::cerr << "unknown command\n";
    return 2;
  } catch (const pifit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
