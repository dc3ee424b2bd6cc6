#include <doctest.h>

#include "common.hpp"
#include "oracles.hpp"
#include "pifit/pi_ops.hpp"
#include "pifit/quotient.hpp"

using namespace pifit;
using testutil::corpus_group;
using testutil::mk;

TEST_SUITE_BEGIN("structure");

TEST_CASE("lattice counts for the classics") {
  auto s3 = Lattice::build(corpus_group("S3"));
  CHECK(s3->size() == 6);  // 1, three C2, C3, S3
  auto s4 = Lattice::build(corpus_group("S4"));
  CHECK(s4->size() == 30);
  CHECK(s4->classes().size() == 11);
  auto triv = Lattice::build(Group::trivial());
  CHECK(triv->size() == 1);
  auto a5 = Lattice::build(corpus_group("A5"));
  CHECK(a5->size() == 59);
}

TEST_CASE("lattice cap") {
  CHECK_THROWS_AS(Lattice::build(corpus_group("S4"), 10), CapError);
}

TEST_CASE("lattice enumeration agrees with the naive oracle for |G| <= 48") {
  for (const char* name : {"S3", "S4", "A4", "V4", "Q8", "D8", "C12", "SL23", "F21", "S3xS3"}) {
    auto g = corpus_group(name);
    REQUIRE(g->order() <= 48);
    auto lat = Lattice::build(g);
    auto naive = oracles::naive_all_subgroups(*g);
    REQUIRE(lat->size() == naive.size());
    for (const auto& s : lat->subgroups()) CHECK(naive.count(s) == 1);
  }
}

TEST_CASE("normality, core, normal closure in S3 and S4") {
  PiContext s3 = testutil::make_ctx("S3", "");
  int c2 = testutil::sub_idx(s3, {"(1 2)"});
  CHECK(s3.core_in(c2, s3.full()) == s3.trivial());
  CHECK(s3.normal_closure_in(c2, s3.full()) == s3.full());

  int c3 = testutil::sub_idx(s3, {"(1 2 3)"});
  CHECK(s3.normal_in(c3, s3.full()));
  CHECK(s3.core_in(c3, s3.full()) == c3);
  CHECK(s3.normal_closure_in(c3, s3.full()) == c3);

  PiContext s4 = testutil::make_ctx("S4", "");
  int dt = testutil::sub_idx(s4, {"(1 2)(3 4)"});
  int v4 = s4.normal_closure_in(dt, s4.full());
  CHECK(s4.order_of(v4) == 4);
}

TEST_CASE("subnormality: descent matches chain-search oracle") {
  for (const char* name : {"S3", "S4", "A4", "Q8", "D8", "SL23", "F21", "S3xS3"}) {
    PiContext ctx = testutil::make_ctx(name, "");
    const Lattice& lat = ctx.lattice();
    for (int h = 0; h < ctx.size(); ++h) {
      CHECK(lat.is_subnormal(h) == oracles::naive_is_subnormal(lat, h, ctx.full()));
      for (int a = 0; a < ctx.size(); ++a)
        if (lat.contains(a, h))
          CHECK(ctx.subnormal_in(h, a) == oracles::naive_is_subnormal(lat, h, a));
    }
  }
}

TEST_CASE("subnormality examples") {
  PiContext q8 = testutil::make_ctx("Q8", "");
  for (int h = 0; h < q8.size(); ++h) CHECK(q8.lattice().is_subnormal(h));

  PiContext s3 = testutil::make_ctx("S3", "");
  CHECK_FALSE(s3.lattice().is_subnormal(testutil::sub_idx(s3, {"(1 2)"})));
  CHECK(s3.lattice().is_subnormal(s3.trivial()));
  CHECK(s3.lattice().is_subnormal(s3.full()));
}

TEST_CASE("quotient S4/V4 looks like S3") {
  auto s4 = corpus_group("S4");
  IdSet v4 = closure_ids(*s4, {s4->id_of(parse_perm("(1 2)(3 4)", 4)),
                               s4->id_of(parse_perm("(1 3)(2 4)", 4))});
  Quotient q(s4, full_ids(*s4), v4);
  CHECK(q.group().order() == 6);
  auto qlat = Lattice::build(q.group_ptr());
  CHECK(qlat->size() == 6);
  CHECK_FALSE(is_nilpotent(q.group()));
}

TEST_CASE("quotient maps: projection, section, homomorphism") {
  for (const char* name : {"S4", "A4", "Q8", "SL23", "F21", "S3xS3"}) {
    auto g = corpus_group(name);
    auto lat = Lattice::build(g);
    for (int n : lat->normal_indices()) {
      Quotient q(g, full_ids(*g), lat->members(n));
      CHECK(q.group().order() == g->order() / lat->order_of(n));
      // projection is a homomorphism with kernel exactly n
      for (ElementId a = 0; a < g->order(); ++a) {
        if (q.image_of(a) == q.group().identity_id())
          CHECK(id_member(lat->members(n), a));
        for (ElementId b = 0; b < g->order(); ++b)
          CHECK(q.group().mul(q.image_of(a), q.image_of(b)) == q.image_of(g->mul(a, b)));
      }
      // preimage(image(H)) = H*kernel; image of a normal subgroup is normal
      auto qlat = Lattice::build(q.group_ptr());
      for (int i = 0; i < static_cast<int>(lat->size()); ++i) {
        IdSet img = q.image_ids(lat->members(i));
        CHECK(q.preimage_ids(img) == join_ids(*g, lat->members(i), lat->members(n)));
        if (lat->is_normal(i))
          CHECK(qlat->is_normal(qlat->index_of(img)));
      }
      // image of a join is the join of the images
      for (int i = 0; i < static_cast<int>(lat->size()); ++i)
        for (int j = i; j < static_cast<int>(lat->size()); ++j) {
          IdSet lhs = q.image_ids(join_ids(*g, lat->members(i), lat->members(j)));
          IdSet rhs = join_ids(q.group(), q.image_ids(lat->members(i)),
                               q.image_ids(lat->members(j)));
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("quotient degenerate cases") {
  auto f21 = corpus_group("F21");
  Quotient by_trivial(f21, full_ids(*f21), IdSet{f21->identity_id()});
  CHECK(by_trivial.group().order() == 21);
  Quotient by_self(f21, full_ids(*f21), full_ids(*f21));
  CHECK(by_self.group().order() == 1);

  IdSet c7 = closure_ids(*f21, {f21->id_of(parse_perm("(1 2 3 4 5 6 7)", 7))});
  Quotient q(f21, full_ids(*f21), c7);
  CHECK(q.group().order() == 3);

  IdSet c3 = closure_ids(*f21, {f21->id_of(parse_perm("(2 3 5)(4 7 6)", 7))});
  CHECK_THROWS_AS(Quotient(f21, full_ids(*f21), c3), DomainError);  // not normal
}

TEST_CASE("derived subgroups") {
  PiContext s4 = testutil::make_ctx("S4", "");
  int a4 = s4.derived(s4.full());
  CHECK(s4.order_of(a4) == 12);
  CHECK(s4.derived(a4) != a4);
  CHECK(s4.order_of(s4.derived(a4)) == 4);  // derived(A4) = V4

  PiContext c12 = testutil::make_ctx("C12", "");
  CHECK(c12.derived(c12.full()) == c12.trivial());

  for (const char* name : {"S3", "S4", "A4", "Q8", "SL23", "F21"}) {
    auto lat = Lattice::build(corpus_group(name));
    CHECK(derived_subgroup_ids(lat->group(), full_ids(lat->group())) ==
          oracles::naive_derived(*lat));
  }
}

TEST_CASE("chief series of S4") {
  auto lat = Lattice::build(corpus_group("S4"));
  auto series = chief_series_indices(*lat);
  REQUIRE(series.size() == 4);
  CHECK(lat->order_of(series[0]) == 1);
  CHECK(lat->order_of(series[1]) == 4);
  CHECK(lat->order_of(series[2]) == 12);
  CHECK(lat->order_of(series[3]) == 24);
}

TEST_CASE("minimal normal subgroups") {
  auto s4 = Lattice::build(corpus_group("S4"));
  auto mins = minimal_normal_indices(*s4);
  REQUIRE(mins.size() == 1);
  CHECK(s4->order_of(mins[0]) == 4);  // V4

  auto q8 = Lattice::build(corpus_group("Q8"));
  auto minq = minimal_normal_indices(*q8);
  REQUIRE(minq.size() == 1);
  CHECK(q8->order_of(minq[0]) == 2);  // the centre

  auto s3s3 = Lattice::build(corpus_group("S3xS3"));
  CHECK(minimal_normal_indices(*s3s3).size() == 2);  // the two C3 factors

  auto a5 = Lattice::build(corpus_group("A5"));
  auto mina = minimal_normal_indices(*a5);
  REQUIRE(mina.size() == 1);
  CHECK(mina[0] == a5->full_index());  // A5 is simple

  CHECK(minimal_normal_indices(*Lattice::build(Group::trivial())).empty());
}

TEST_CASE("chief factors are characteristically simple") {
  for (const char* name : {"S3", "S4", "A4", "Q8", "SL23", "F21", "S3xS3", "A5", "A5xC7"}) {
    auto lat = Lattice::build(corpus_group(name));
    auto series = chief_series_indices(*lat);
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
      std::uint64_t q = lat->order_of(series[i + 1]) / lat->order_of(series[i]);
      auto fac = factorize(q);
      if (fac.size() == 1 && factor_elementary_abelian(lat->group(), lat->members(series[i + 1]),
                                                       lat->members(series[i]), fac[0].first))
        continue;
      // otherwise the factor must be simple: no intermediate subgroup of the
      // factor is normal in it
      Quotient factor(lat->group_ptr(), lat->members(series[i + 1]), lat->members(series[i]));
      auto flat = Lattice::build(factor.group_ptr());
      CHECK(flat->normal_indices().size() == 2);
    }
  }
}

TEST_CASE("nilpotence") {
  CHECK(is_nilpotent(*corpus_group("Q8")));
  CHECK(is_nilpotent(*corpus_group("C12")));
  CHECK(is_nilpotent(*Group::trivial()));
  CHECK_FALSE(is_nilpotent(*corpus_group("S3")));
  CHECK_FALSE(is_nilpotent(*corpus_group("S4")));
  CHECK_FALSE(is_nilpotent(*corpus_group("SL23")));
  CHECK(is_nilpotent(*corpus_group("D8")));
}

TEST_SUITE_END();
