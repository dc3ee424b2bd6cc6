"""Smoke tests for the python module against the C++ engine."""

import pytest

try:
    import pifitting as pf
except ImportError:  # build-tree layout: the bare extension is on sys.path
    import _core as pf


def test_group_generation():
    s4 = pf.Group.generate(["(1 2)", "(1 2 3 4)"], degree=4, name="S4")
    assert s4.order == 24
    assert s4.degree == 4
    assert len(s4.elements()) == 24
    assert "S4" in repr(s4)


def test_parse_errors():
    with pytest.raises(pf.ParseError):
        pf.Group.generate(["(1 5)"], degree=4)
    with pytest.raises(pf.CapError):
        pf.Group.generate(["(1 2)", "(1 2 3 4)"], degree=4, order_cap=5)


def test_direct_product():
    a5 = pf.Group.generate(["(1 2 3 4 5)", "(1 2 3)"], degree=5, name="A5")
    c7 = pf.Group.generate(["(1 2 3 4 5 6 7)"], degree=7, name="C7")
    assert pf.Group.direct_product(a5, c7, "A5xC7").order == 420


def test_lattice_and_classics():
    s4 = pf.Group.generate(["(1 2)", "(1 2 3 4)"], degree=4, name="S4")
    ctx = pf.Context(s4, pi=[])
    assert ctx.subgroup_count == 30
    info = ctx.subgroup(0)
    assert info["order"] == 1

    # Fitting subgroup of S4 is V4; nilpotent injectors are the Sylow 2's
    rad = ctx.radical("nilpotent")
    assert ctx.subgroup(rad)["order"] == 4
    inj = ctx.injectors("nilpotent")
    assert len(inj) == 3
    assert all(ctx.subgroup(v)["order"] == 8 for v in inj)
    assert ctx.projectors() == inj  # Carter subgroups


def test_dnormality():
    s3 = pf.Group.generate(["(1 2)", "(1 2 3)"], degree=3, name="S3")
    ctx35 = pf.Context(s3, pi=[3, 5])
    c2 = ctx35.subgroup_index(["(1 2)"])
    assert not ctx35.is_dnormal(c2)
    assert ctx35.is_dnormal(c2) == ctx35.is_dnormal_def(c2)

    ctx23 = pf.Context(s3, pi=[2, 3])
    c2b = ctx23.subgroup_index(["(1 2)"])
    assert ctx23.is_dnormal(c2b)
    chain = ctx23.dsubnormal_chain(c2b)
    assert chain[0] == c2b


def test_f21_structure():
    corpus = pf.default_corpus()
    ctx = pf.Context(corpus["F21"], pi=[3, 5])
    res = ctx.residual()
    assert ctx.subgroup(res)["order"] == 7
    proj = ctx.projectors()
    assert len(proj) == 7
    assert all(ctx.subgroup(p)["order"] == 3 for p in proj)
    assert ctx.covering_subgroups() == proj
    inj = ctx.injectors("npi")
    assert len(inj) == 1
    assert ctx.subgroup(inj[0])["order"] == 7
    report = ctx.injectors_report("npi")
    assert len(report["injectors"]) == 1


def test_fitting_set_validation():
    corpus = pf.default_corpus()
    ctx = pf.Context(corpus["S3"], pi=[2, 3])
    fs = ctx.trace("nilpotent")
    assert fs["fs1_classical"] and fs["fs2_classical"] and fs["fs3"]
    assert not fs["fs2_npi"]  # two Dnormal C2's generate S3, which is not nilpotent

    explicit = ctx.explicit_set([ctx.subgroup_index(["(1 2 3)"])])
    assert not explicit["fs1_classical"]  # missing the trivial subgroup


def test_hall_and_reduction():
    corpus = pf.default_corpus()
    ctx = pf.Context(corpus["S4"], pi=[2])
    halls = ctx.hall([2])
    assert len(halls) == 3
    assert all(ctx.subgroup(h)["order"] == 8 for h in halls)
    c3 = ctx.subgroup_index(["(1 2 3)"])
    assert ctx.reduces_into(halls[0], c3, [2])
    assert not ctx.reduces_into(halls[0], halls[1], [2])


def test_run_suite():
    results = pf.run_suites("prop-1.2", pi=[3, 5])
    assert results
    assert all(r["status"] == "pass" for r in results)
    assert {r["scope"]["group"] for r in results} >= {"S3", "S4", "F21"}
    assert "theorem-2.9" in pf.suite_ids()
