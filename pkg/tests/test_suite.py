from dataclasses import replace

import pytest

from vnum.graphs import c_nerve
from vnum.homology import hochster_betti
from vnum.localcoh import depth_symbolic, serre_depth
from vnum.sampling import Sampler, stream_seed
from vnum.suite import SUITES, Impl, SuiteResult, _v, _v_p, _v_p_oracle, rp2_signature_ok, run_all, run_suite
from vnum.vnumber import v_definitional


def shifted_betti(*args, **kwargs):
    """Shifts every second-syzygy degree up by one, a plausible off-by-one."""
    table = hochster_betti(*args, **kwargs)
    moved = {(i, j + (i == 2)): v for (i, j), v in table.entries.items()}
    return replace(table, entries=moved)


MUTANTS = [
    ("v", Impl(v=lambda ideal: _v(ideal) + 1), ["projective-plane", "clutter-oracle", "range-construction"]),
    ("v_p", Impl(v_p=lambda d, p: _v_p(d, p) + 1), ["dual-formula-oracle", "facet-bounds"]),
    ("v_p_oracle", Impl(v_p_oracle=lambda i, p: _v_p_oracle(i, p) + 1), ["dual-formula-oracle"]),
    ("v_oracle", Impl(v_oracle=lambda i: v_definitional(i) + 1), ["very-well-covered-cover"]),
    ("betti", Impl(betti=shifted_betti), ["pure-height-two-law", "projective-plane"]),
    ("depth_symbolic", Impl(depth_symbolic=lambda i, ell, p=2: depth_symbolic(i, ell, p) + 1),
     ["symbolic-power-bounds"]),
    ("serre_depth", Impl(serre_depth=lambda i, ell, r, p=2: serre_depth(i, ell, r, p) - 1),
     ["symbolic-power-bounds"]),
    ("c_nerve", Impl(c_nerve=lambda g: (c_nerve(g) or 0) + 1), ["nerve-domination", "nerve-counterexample"]),
]


@pytest.mark.parametrize("field, impl, names", MUTANTS, ids=[m[0] for m in MUTANTS])
def test_mutants_are_caught(field, impl, names):
    for name in names:
        res = run_suite(name, count=30, impl=impl)
        assert not res.ok, f"{name} missed a broken {field}"
        assert res.failures


def test_every_impl_field_has_a_mutant():
    assert {m[0] for m in MUTANTS} == set(Impl.__dataclass_fields__)


def test_small_run_is_green():
    results = run_all(seed=1, scale=0.05)
    assert [r.name for r in results] == sorted(SUITES)
    bad = [r.line() for r in results if not r.ok]
    assert not bad, bad


def test_runs_are_deterministic():
    a = run_suite("two-pure-characterization", seed=7, count=40)
    b = run_suite("two-pure-characterization", seed=7, count=40)
    assert (a.checked, a.skipped, a.notes) == (b.checked, b.skipped, b.notes)


def test_streams_depend_on_seed_and_suite():
    def first(seed, name):
        s = Sampler(stream_seed(seed, name))
        return [s.complex() for _ in range(5)]

    assert first(1, "a") == first(1, "a")
    assert first(1, "a") != first(2, "a")
    assert first(1, "a") != first(1, "b")


def test_parallel_matches_serial():
    names = ["clutter-oracle", "colon-dual-law"]
    serial = run_all(seed=3, names=names, scale=0.1, threads=1)
    parallel = run_all(seed=3, names=names, scale=0.1, threads=2)
    assert [r.to_dict()["checked"] for r in serial] == [r.to_dict()["checked"] for r in parallel]


def test_result_bookkeeping():
    res = SuiteResult("demo")
    assert not res.ok
    res.check(True, "fine")
    assert res.ok
    res.check(False, lambda: "lazy detail")
    res.skip("degenerate")
    assert not res.ok and res.failures == ["lazy detail"] and res.skipped["degenerate"] == 1
    assert res.line().startswith("FAIL demo: 2 checks, 1 failures, skipped 1")


def test_rp2_signature():
    assert rp2_signature_ok()
