#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pifit/fitting.hpp"
#include "pifit/injectors.hpp"
#include "pifit/projectors.hpp"
#include "pifit/report.hpp"
#include "pifit/suites.hpp"

namespace py = pybind11;
using namespace pifit;

namespace {

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null:
      return py::none();
    case Json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
      return py::float_(j.get<double>());
    case Json::value_t::string:
      return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default:
      return py::none();
  }
}

PrimeSet pi_from_list(const std::vector<unsigned>& primes) { return PrimeSet(primes); }

/// The engine hands out shared_ptr<const Group>; pybind11 holders want the
/// mutable pointee. Groups are immutable, so the cast is safe.
std::shared_ptr<Group> mut(GroupPtr g) { return std::const_pointer_cast<Group>(std::move(g)); }

std::shared_ptr<Group> group_from_cycles(const std::vector<std::string>& gens, std::size_t degree,
                                         const std::string& name, std::size_t order_cap) {
  std::vector<Perm> perms;
  for (const auto& s : gens) perms.push_back(parse_perm(s, degree));
  return mut(Group::generate(std::move(perms), name, GenOptions{order_cap}));
}

/// Python-facing handle bundling a group with its lattice and one prime
/// set; mirrors the per-(group, pi) context the suites use.
class ContextHandle {
 public:
  ContextHandle(GroupPtr g, const std::vector<unsigned>& pi, std::size_t lattice_cap)
      : ctx_(Lattice::build(std::move(g), lattice_cap), pi_from_list(pi)) {}

  std::size_t subgroup_count() const { return const_cast<PiContext&>(ctx_).lattice().size(); }

  py::dict subgroup(int idx) {
    Json j = subgroup_json(ctx_.group(), ctx_.members(idx));
    j["index"] = idx;
    j["normal"] = ctx_.lattice().is_normal(idx);
    j["subnormal"] = ctx_.lattice().is_subnormal(idx);
    j["conjugacy_class"] = ctx_.lattice().class_of(idx);
    return json_to_py(j);
  }

  py::list subgroups() {
    py::list out;
    for (int i = 0; i < ctx_.size(); ++i) out.append(subgroup(i));
    return out;
  }

  int subgroup_index(const std::vector<std::string>& gens) {
    IdSet seed;
    for (const auto& s : gens)
      seed.push_back(ctx_.group().id_of(parse_perm(s, ctx_.group().degree())));
    std::sort(seed.begin(), seed.end());
    return ctx_.lattice().index_of(closure_ids(ctx_.group(), seed));
  }

  int join(int i, int j) { return ctx_.join(i, j); }
  int intersect(int i, int j) { return ctx_.intersect(i, j); }
  int normalizer(int i) { return ctx_.normalizer(i); }
  int conjugate(int i, const std::string& g) {
    return ctx_.conj_sub(i, ctx_.group().id_of(parse_perm(g, ctx_.group().degree())));
  }
  bool contains(int a, int i) { return ctx_.contains(a, i); }
  int derived(int i) { return ctx_.derived(i); }
  int core(int i) { return ctx_.core_in(i, ctx_.full()); }
  int normal_closure(int i) { return ctx_.normal_closure_in(i, ctx_.full()); }
  bool is_normal(int i, int a) { return ctx_.normal_in(i, a); }
  bool is_subnormal(int i, int a) { return ctx_.subnormal_in(i, a); }

  bool is_dnormal(int h) { return ctx_.dnormal(h, ctx_.full()); }
  bool is_dnormal_def(int h) { return ctx_.dnormal_def(h, ctx_.full()); }
  bool is_dnormal_in(int h, int a) { return ctx_.dnormal(h, a); }
  bool is_dsubnormal(int h) { return ctx_.dsubnormal(h, ctx_.full()); }
  std::vector<int> dsubnormal_chain(int h) { return ctx_.dsubnormal_chain(h, ctx_.full()); }
  bool is_self_dnormalizing(int h) { return ctx_.self_dnormalizing(h); }
  std::vector<int> maximal_dnormal() { return ctx_.maximal_dnormal_proper(); }

  int o_upper_pi(int i) { return ctx_.o_upper_pi(i); }
  int o_rho(const std::vector<unsigned>& rho, bool complement) {
    PrimeSet ps = pi_from_list(rho);
    return o_rho_index(ctx_.lattice(), complement ? ps.complement() : ps);
  }
  int residual() { return ctx_.residual(); }
  std::vector<int> minimal_normals() { return minimal_normal_indices(ctx_.lattice()); }
  std::vector<int> chief_series() { return chief_series_indices(ctx_.lattice()); }
  std::vector<int> hall(const std::vector<unsigned>& rho) {
    return hall_in_indices(ctx_.lattice(), ctx_.full(), pi_from_list(rho));
  }
  std::vector<int> sylow(unsigned p) { return sylow_in_indices(ctx_.lattice(), ctx_.full(), p); }
  bool reduces(int p_sub, int h, const std::vector<unsigned>& rho) {
    return reduces_into(ctx_.members(p_sub), ctx_.members(h), pi_from_list(rho));
  }
  bool pi_separable() { return ctx_.pi_separable(); }
  bool piprime_soluble() { return ctx_.piprime_soluble(); }

  bool class_member(int i, const std::string& spec) {
    return ctx_.member(i, ClassSpec::parse(spec, ctx_.pi()));
  }

  py::dict trace_set(const std::string& spec) {
    return fs_to_py(trace(ctx_, ClassSpec::parse(spec, ctx_.pi())));
  }
  py::dict closure_set(const std::vector<int>& seed) {
    return fs_to_py(fitting_set_closure(ctx_, seed));
  }
  py::dict explicit_set(const std::vector<int>& members) {
    return fs_to_py(explicit_fitting_set(ctx_, members, "explicit"));
  }
  int radical(const std::string& spec, int ambient) {
    FittingSet fs = trace(ctx_, ClassSpec::parse(spec, ctx_.pi()));
    return radical_in(ctx_, fs, ambient < 0 ? ctx_.full() : ambient);
  }
  std::vector<int> f_maximal(const std::string& spec, int ambient) {
    FittingSet fs = trace(ctx_, ClassSpec::parse(spec, ctx_.pi()));
    return f_maximal_in(ctx_, fs, ambient < 0 ? ctx_.full() : ambient);
  }
  std::vector<int> injectors(const std::string& spec) {
    FittingSet fs = trace(ctx_, ClassSpec::parse(spec, ctx_.pi()));
    return injectors_bruteforce_in(ctx_, fs, ctx_.full());
  }
  py::dict injectors_report(const std::string& spec) {
    FittingSet fs = trace(ctx_, ClassSpec::parse(spec, ctx_.pi()));
    InjectorReport rep = injectors_constructive(ctx_, fs);
    Json j;
    Json inj = Json::array();
    for (int v : rep.injectors) inj.push_back(subgroup_json(ctx_.group(), ctx_.members(v)));
    j["injectors"] = inj;
    Json wits = Json::array();
    for (const auto& [pair, w] : rep.witnesses)
      wits.push_back(Json{{"v", pair.first},
                          {"v_star", pair.second},
                          {"witness", ctx_.group().element(w.g).to_cycles()},
                          {"in_residual", w.in_residual}});
    j["witnesses"] = wits;
    j["levels"] = rep.trace.size();
    return json_to_py(j);
  }
  std::vector<int> projectors() { return projectors_in(ctx_, ctx_.full()); }
  std::vector<int> covering() { return covering_subgroups(ctx_); }
  py::dict characterization(int h) {
    auto c = projector_characterization(ctx_, h);
    py::dict out;
    out["in_class"] = c.in_class;
    out["self_dnormalizing"] = c.self_dnormalizing;
    out["residual_property"] = c.residual_property;
    return out;
  }

 private:
  py::dict fs_to_py(const FittingSet& fs) {
    Json j;
    j["label"] = fs.label;
    Json members = Json::array();
    for (int i : fs.members) members.push_back(i);
    j["members"] = members;
    j["fs1_classical"] = fs.validation.fs1_classical;
    j["fs2_classical"] = fs.validation.fs2_classical;
    j["fs3"] = fs.validation.fs3;
    j["fs1_npi"] = fs.validation.fs1_npi;
    j["fs2_npi"] = fs.validation.fs2_npi;
    return json_to_py(j);
  }

  PiContext ctx_;
};

py::list run_suites_py(const std::string& suite, py::object pi, const std::string& corpus_path,
                       int jobs) {
  Corpus corpus = corpus_path == "default" ? default_corpus() : load_corpus_file(corpus_path);
  std::vector<PrimeSet> pis;
  if (pi.is_none())
    pis = default_pi_sets();
  else
    pis = {pi_from_list(pi.cast<std::vector<unsigned>>())};
  SuiteOptions opt;
  opt.jobs = jobs;
  py::list out;
  for (const auto& r : run_suites(resolve_suite_ids(suite), corpus, pis, opt))
    out.append(json_to_py(suite_result_json(r)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite-group engine for pi-relative Fitting structure";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<CapError>(m, "CapError");
  py::register_exception<DomainError>(m, "DomainError");
  py::register_exception<MismatchError>(m, "MismatchError");

  py::class_<Group, std::shared_ptr<Group>>(m, "Group")
      .def_static("generate", &group_from_cycles, py::arg("generators"), py::arg("degree"),
                  py::arg("name") = "", py::arg("order_cap") = 10000)
      .def_static(
          "direct_product",
          [](const Group& a, const Group& b, const std::string& name) {
            return mut(Group::direct_product(a, b, name));
          },
          py::arg("a"), py::arg("b"), py::arg("name") = "")
      .def_property_readonly("order", &Group::order)
      .def_property_readonly("degree", &Group::degree)
      .def_property_readonly("name", &Group::name)
      .def("elements",
           [](const Group& g) {
             std::vector<std::string> out;
             for (const auto& p : g.elements()) out.push_back(p.to_cycles());
             return out;
           })
      .def("__len__", &Group::order)
      .def("__repr__", [](const Group& g) {
        return "<Group " + (g.name().empty() ? "?" : g.name()) + " of order " +
               std::to_string(g.order()) + ">";
      });

  py::class_<ContextHandle>(m, "Context")
      .def(py::init<GroupPtr, const std::vector<unsigned>&, std::size_t>(), py::arg("group"),
           py::arg("pi") = std::vector<unsigned>{}, py::arg("lattice_cap") = 1000)
      .def_property_readonly("subgroup_count", &ContextHandle::subgroup_count)
      .def("subgroup", &ContextHandle::subgroup)
      .def("subgroups", &ContextHandle::subgroups)
      .def("subgroup_index", &ContextHandle::subgroup_index)
      .def("join", &ContextHandle::join)
      .def("intersect", &ContextHandle::intersect)
      .def("normalizer", &ContextHandle::normalizer)
      .def("conjugate", &ContextHandle::conjugate)
      .def("contains", &ContextHandle::contains)
      .def("derived", &ContextHandle::derived)
      .def("core", &ContextHandle::core)
      .def("normal_closure", &ContextHandle::normal_closure)
      .def("is_normal", &ContextHandle::is_normal)
      .def("is_subnormal", &ContextHandle::is_subnormal)
      .def("is_dnormal", &ContextHandle::is_dnormal)
      .def("is_dnormal_def", &ContextHandle::is_dnormal_def)
      .def("is_dnormal_in", &ContextHandle::is_dnormal_in)
      .def("is_dsubnormal", &ContextHandle::is_dsubnormal)
      .def("dsubnormal_chain", &ContextHandle::dsubnormal_chain)
      .def("is_self_dnormalizing", &ContextHandle::is_self_dnormalizing)
      .def("maximal_dnormal", &ContextHandle::maximal_dnormal)
      .def("o_upper_pi", &ContextHandle::o_upper_pi)
      .def("o_rho", &ContextHandle::o_rho, py::arg("rho"), py::arg("complement") = false)
      .def("residual", &ContextHandle::residual)
      .def("minimal_normals", &ContextHandle::minimal_normals)
      .def("chief_series", &ContextHandle::chief_series)
      .def("hall", &ContextHandle::hall)
      .def("sylow", &ContextHandle::sylow)
      .def("reduces_into", &ContextHandle::reduces)
      .def("pi_separable", &ContextHandle::pi_separable)
      .def("piprime_soluble", &ContextHandle::piprime_soluble)
      .def("class_member", &ContextHandle::class_member)
      .def("trace", &ContextHandle::trace_set)
      .def("closure", &ContextHandle::closure_set)
      .def("explicit_set", &ContextHandle::explicit_set)
      .def("radical", &ContextHandle::radical, py::arg("spec"), py::arg("ambient") = -1)
      .def("f_maximal", &ContextHandle::f_maximal, py::arg("spec"), py::arg("ambient") = -1)
      .def("injectors", &ContextHandle::injectors)
      .def("injectors_report", &ContextHandle::injectors_report)
      .def("projectors", &ContextHandle::projectors)
      .def("covering_subgroups", &ContextHandle::covering)
      .def("characterization", &ContextHandle::characterization);

  m.def("parse_permutation", [](const std::string& text, std::size_t degree) {
    return parse_perm(text, degree).to_cycles();
  });
  m.def("default_corpus", [] {
    py::dict out;
    for (const auto& ng : default_corpus()) out[py::str(ng.name)] = mut(ng.group);
    return out;
  });
  m.def("load_corpus", [](const std::string& path) {
    py::dict out;
    for (const auto& ng : load_corpus_file(path)) out[py::str(ng.name)] = mut(ng.group);
    return out;
  });
  m.def("run_suites", &run_suites_py, py::arg("suite") = "all", py::arg("pi") = py::none(),
        py::arg("corpus") = "default", py::arg("jobs") = 1);
  m.def("suite_ids", [] { return all_suite_ids(); });
}
