#include <doctest.h>

#include "common.hpp"
#include "pifit/injectors.hpp"
#include "pifit/projectors.hpp"

using namespace pifit;
using testutil::make_ctx;
using testutil::sub_idx;

TEST_SUITE_BEGIN("fitting");

TEST_CASE("traces") {
  PiContext s4 = make_ctx("S4", "2,3");
  FittingSet nil = trace(s4, ClassSpec::nilpotent());
  CHECK(nil.members.size() == 24);  // everything except the four S3's, A4, S4
  FittingSet all = trace(s4, ClassSpec::all());
  CHECK(all.members.size() == 30);
  CHECK(all.validation.npi_ok());

  PiContext f21 = make_ctx("F21", "3,5");
  FittingSet npi = trace(f21, ClassSpec::npi(f21.pi()));
  CHECK(npi.members.size() == 9);  // 1, seven C3's, C7
  CHECK(npi.validation.npi_ok());
}

TEST_CASE("validating the nilpotent trace of S3 at pi={2,3} fails FS2 with a witness") {
  PiContext s3 = make_ctx("S3", "2,3");
  FittingSet fs = trace(s3, ClassSpec::nilpotent());
  CHECK(fs.validation.fs1_classical);
  CHECK(fs.validation.fs2_classical);
  CHECK(fs.validation.fs3);
  CHECK(fs.validation.fs1_npi);
  CHECK_FALSE(fs.validation.fs2_npi);
  REQUIRE(fs.validation.fs2_npi_witness.has_value());
  auto w = *fs.validation.fs2_npi_witness;
  CHECK(s3.order_of(w.s) == 2);
  CHECK(s3.order_of(w.t) == 2);
  CHECK(w.extra == s3.full());  // two Dnormal C2's generate S3, which is not nilpotent
}

TEST_CASE("fitting set closure") {
  PiContext f21 = make_ctx("F21", "3,5");
  int c7 = sub_idx(f21, {"(1 2 3 4 5 6 7)"});
  FittingSet fs = fitting_set_closure(f21, {c7});
  CHECK(fs.members.size() == 2);  // {1, C7}
  CHECK(fs.validation.npi_ok());

  FittingSet trivial_only = fitting_set_closure(f21, {f21.trivial()});
  CHECK(trivial_only.members.size() == 1);

  // seed = a Sylow 2 of S4 at pi = {}: closure is all 2-subgroups
  PiContext s4 = make_ctx("S4", "");
  int d8 = sub_idx(s4, {"(1 2 3 4)", "(1 3)"});
  FittingSet closed = fitting_set_closure(s4, {d8});
  FittingSet e2 = trace(s4, ClassSpec::e_pi(PrimeSet::parse("2")));
  CHECK(closed.members == e2.members);

  CHECK_THROWS_AS(fitting_set_closure(s4, {}), DomainError);
}

TEST_CASE("radicals") {
  PiContext s4 = make_ctx("S4", "");
  FittingSet nil = trace(s4, ClassSpec::nilpotent());
  int rad = radical_in(s4, nil, s4.full());
  CHECK(s4.order_of(rad) == 4);  // Fitting subgroup of S4 is V4

  FittingSet all = trace(s4, ClassSpec::all());
  CHECK(radical_in(s4, all, s4.full()) == s4.full());

  PiContext f21 = make_ctx("F21", "3,5");
  FittingSet npi = trace(f21, ClassSpec::npi(f21.pi()));
  CHECK(f21.order_of(radical_in(f21, npi, f21.full())) == 7);

  auto routes = radical_routes(f21, npi, f21.full());
  CHECK(routes.normal_join == routes.subnormal_join);
  CHECK(routes.normal_join == routes.dnormal_join);
  CHECK(routes.normal_join == routes.dsubnormal_join);
}

TEST_CASE("radical conjugation invariance") {
  for (const char* pi : {"", "2,3", "3,5"}) {
    PiContext ctx = make_ctx("S4", pi);
    for (FittingSet fs : {trace(ctx, ClassSpec::nilpotent()), trace(ctx, ClassSpec::npi(ctx.pi()))}) {
      if (!fs.validation.classical_ok()) continue;
      for (int h = 0; h < ctx.size(); ++h) {
        int rad = radical_in(ctx, fs, h);
        for (ElementId x : ctx.group().generator_ids())
          CHECK(ctx.conj_sub(rad, x) == radical_in(ctx, fs, ctx.conj_sub(h, x)));
      }
    }
  }
}

TEST_CASE("radical requires a classically valid set") {
  PiContext s3 = make_ctx("S3", "2,3");
  FittingSet bogus = explicit_fitting_set(s3, {sub_idx(s3, {"(1 2 3)"})}, "bogus");
  CHECK_FALSE(bogus.validation.fs1_classical);  // missing the trivial subgroup
  CHECK_THROWS_AS(radical_in(s3, bogus, s3.full()), DomainError);
}

TEST_CASE("F-maximal subgroups") {
  PiContext s4 = make_ctx("S4", "");
  FittingSet nil = trace(s4, ClassSpec::nilpotent());
  int a4 = sub_idx(s4, {"(1 2 3)", "(1 2)(3 4)"});
  auto fmax = f_maximal_in(s4, nil, a4);
  CHECK(fmax.size() == 5);  // V4 and the four C3's
  FittingSet all = trace(s4, ClassSpec::all());
  auto top = f_maximal_in(s4, all, s4.full());
  REQUIRE(top.size() == 1);
  CHECK(top[0] == s4.full());

  PiContext f21 = make_ctx("F21", "3,5");
  FittingSet npi = trace(f21, ClassSpec::npi(f21.pi()));
  CHECK(f_maximal_in(f21, npi, f21.full()).size() == 8);  // C7 and the seven C3's
}

TEST_CASE("brute-force injectors") {
  PiContext s4 = make_ctx("S4", "");
  FittingSet nil = trace(s4, ClassSpec::nilpotent());
  auto inj = injectors_bruteforce_in(s4, nil, s4.full());
  REQUIRE(inj.size() == 3);
  for (int v : inj) CHECK(s4.order_of(v) == 8);

  PiContext f21 = make_ctx("F21", "3,5");
  FittingSet npi = trace(f21, ClassSpec::npi(f21.pi()));
  auto injf = injectors_bruteforce_in(f21, npi, f21.full());
  REQUIRE(injf.size() == 1);
  CHECK(f21.order_of(injf[0]) == 7);

  // G inside the set: G is the unique F-maximal everywhere
  PiContext s4pi = make_ctx("S4", "2,3");
  FittingSet epi = trace(s4pi, ClassSpec::e_pi(s4pi.pi()));
  auto injs = injectors_bruteforce_in(s4pi, epi, s4pi.full());
  REQUIRE(injs.size() == 1);
  CHECK(injs[0] == s4pi.full());
}

TEST_CASE("pruned and unpruned brute force agree") {
  for (const char* name : {"S3", "S4", "A4", "Q8", "SL23", "F21"}) {
    for (const char* pi : {"", "2,3", "3,5"}) {
      PiContext ctx = make_ctx(name, pi);
      for (const FittingSet& fs :
           {trace(ctx, ClassSpec::npi(ctx.pi())), trace(ctx, ClassSpec::nilpotent()),
            trace(ctx, ClassSpec::e_pi(ctx.pi()))}) {
        if (!fs.validation.classical_ok()) continue;
        CHECK(injectors_bruteforce_in(ctx, fs, ctx.full(), InjectorSearch::Pruned) ==
              injectors_bruteforce_in(ctx, fs, ctx.full(), InjectorSearch::Unpruned));
      }
    }
  }
}

TEST_CASE("constructive injectors match brute force and carry witnesses") {
  PiContext s4 = make_ctx("S4", "");
  FittingSet nil = trace(s4, ClassSpec::nilpotent());
  InjectorReport rep = injectors_constructive(s4, nil);
  REQUIRE(rep.injectors.size() == 3);
  // recursion: S4 -> A4 -> V4 -> 1
  REQUIRE(rep.trace.size() == 3);
  CHECK(s4.order_of(rep.trace[0].residual) == 12);
  CHECK(s4.order_of(rep.trace[0].chosen_injector) == 4);
  for (const auto& [pair, w] : rep.witnesses) CHECK(w.in_residual);

  PiContext f21 = make_ctx("F21", "3,5");
  FittingSet npi = trace(f21, ClassSpec::npi(f21.pi()));
  InjectorReport repf = injectors_constructive(f21, npi);
  REQUIRE(repf.injectors.size() == 1);
  CHECK(f21.order_of(repf.injectors[0]) == 7);
}

TEST_CASE("constructive injectors check their preconditions") {
  PiContext a5 = make_ctx("A5", "2");
  FittingSet nil = trace(a5, ClassSpec::nilpotent());
  CHECK_THROWS_AS(injectors_constructive(a5, nil), DomainError);  // not {2}'-soluble

  PiContext s3 = make_ctx("S3", "2,3");
  FittingSet bad = trace(s3, ClassSpec::nilpotent());  // not npi-valid here
  CHECK_THROWS_AS(injectors_constructive(s3, bad), DomainError);
}

TEST_CASE("conjugacy witnesses and strata") {
  PiContext s4 = make_ctx("S4", "");
  FittingSet nil = trace(s4, ClassSpec::nilpotent());
  auto inj = injectors_bruteforce_in(s4, nil, s4.full());
  REQUIRE(inj.size() == 3);
  auto w = conjugacy_witness(s4, inj[0], inj[1]);
  REQUIRE(w.has_value());
  CHECK(w->in_residual);  // found inside A4
  CHECK(s4.conj_sub(inj[1], w->g) == inj[0]);

  auto self_w = conjugacy_witness(s4, inj[0], inj[0]);
  REQUIRE(self_w.has_value());
  CHECK(self_w->g == s4.group().identity_id());

  PiContext f21 = make_ctx("F21", "3,5");
  CHECK_FALSE(conjugacy_witness(f21, sub_idx(f21, {"(2 3 5)(4 7 6)"}),
                                sub_idx(f21, {"(1 2 3 4 5 6 7)"}))
                  .has_value());
}

TEST_CASE("injectors meet Dnormal subgroups in injectors") {
  PiContext s4 = make_ctx("S4", "");
  FittingSet nil = trace(s4, ClassSpec::nilpotent());
  auto inj = injectors_bruteforce_in(s4, nil, s4.full());
  for (const auto& verdict : dnormal_intersection_check(s4, nil, inj))
    CHECK(verdict.is_injector_of_dnormal);
  int a4 = sub_idx(s4, {"(1 2 3)", "(1 2)(3 4)"});
  auto inj_a4 = injectors_bruteforce_in(s4, nil, a4);
  REQUIRE(inj_a4.size() == 1);
  CHECK(s4.order_of(inj_a4[0]) == 4);  // D8 meets A4 in V4
}

TEST_CASE("projectors of F21 and S4") {
  PiContext f21 = make_ctx("F21", "3,5");
  auto proj = projectors_in(f21, f21.full());
  REQUIRE(proj.size() == 7);
  for (int p : proj) CHECK(f21.order_of(p) == 3);
  CHECK(covering_subgroups(f21) == proj);
  for (int p : proj) {
    auto c = projector_characterization(f21, p);
    CHECK(c.in_class);
    CHECK(c.self_dnormalizing);
    CHECK(c.residual_property);
  }

  PiContext s4 = make_ctx("S4", "");  // Npi = N: Carter subgroups
  auto carter = projectors_in(s4, s4.full());
  REQUIRE(carter.size() == 3);
  for (int p : carter) CHECK(s4.order_of(p) == 8);

  PiContext s4pi = make_ctx("S4", "2,3");  // G itself lies in the class
  auto projs = projectors_in(s4pi, s4pi.full());
  REQUIRE(projs.size() == 1);
  CHECK(projs[0] == s4pi.full());
}

TEST_CASE("classical pins for SL(2,3)") {
  PiContext ctx = make_ctx("SL23", "");
  FittingSet nil = trace(ctx, ClassSpec::nilpotent());
  int rad = radical_in(ctx, nil, ctx.full());
  CHECK(ctx.order_of(rad) == 8);  // the quaternion normal Sylow 2
  auto inj = injectors_bruteforce_in(ctx, nil, ctx.full());
  REQUIRE(inj.size() == 1);
  CHECK(inj[0] == rad);
  auto carter = projectors_in(ctx, ctx.full());
  REQUIRE(carter.size() == 4);
  for (int p : carter) {
    CHECK(ctx.order_of(p) == 6);
    CHECK(ctx.normalizer(p) == p);
  }
}

TEST_CASE("class-level validation") {
  std::vector<std::pair<std::string, std::shared_ptr<PiContext>>> ctxs;
  for (const char* name : {"S3", "S4"})
    ctxs.emplace_back(name, std::make_shared<PiContext>(
                                Lattice::build(testutil::corpus_group(name)),
                                PrimeSet::parse("2,3")));
  auto cex = validate_npi_fitting_class(ctxs, ClassSpec::nilpotent());
  REQUIRE(cex.has_value());
  CHECK(cex->group_name == "S3");
  CHECK_FALSE(cex->axiom_i);
  PiContext& s3 = *ctxs.front().second;
  CHECK(s3.order_of(cex->ambient) == 6);
  CHECK(s3.order_of(cex->m) == 2);
  CHECK(s3.order_of(cex->n) == 2);

  CHECK_FALSE(validate_npi_fitting_class(ctxs, ClassSpec::npi(PrimeSet::parse("2,3"))).has_value());
  CHECK_FALSE(validate_npi_fitting_class(ctxs, ClassSpec::all()).has_value());
}

TEST_SUITE_END();
