"""The ten acceptance criteria at their full sample counts.

Each criterion prints one PASS/FAIL line. Run with ``pytest -s`` to see the
lines inline, or as a script: ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys
import time

import pytest

from vnum.complex import alexander_dual, is_2_pure
from vnum.families import bight_example, nerve_counterexample, range_complex, rp2, triangle_plus_point
from vnum.graphs import c_line, c_nerve, edge_ideal
from vnum.homology import hochster_betti
from vnum.ideals import ideal_invariants, stanley_reisner_ideal
from vnum.suite import run_suite
from vnum.vnumber import v_definitional, v_number


class Outcome:
    def __init__(self, number: int, title: str):
        self.number = number
        self.title = title
        self.problems: list[str] = []
        self.facts: list[str] = []
        self.start = time.perf_counter()

    def need(self, cond: bool, problem: str) -> None:
        if not cond:
            self.problems.append(problem)

    def suite(self, name: str, count: int | None = None, min_checks: int = 1):
        res = run_suite(name, seed=0, count=count)
        self.need(res.ok, f"{name}: {res.failure_count} failures, e.g. {res.failures[:2]}")
        self.need(res.checked >= min_checks, f"{name}: only {res.checked} checks")
        self.facts.append(f"{name} {res.checked} checks")
        return res

    def budget(self, seconds: float) -> None:
        took = time.perf_counter() - self.start
        self.need(took < seconds, f"took {took:.1f}s, budget {seconds:.0f}s")

    @property
    def ok(self) -> bool:
        return not self.problems

    def line(self) -> str:
        took = time.perf_counter() - self.start
        status = "PASS" if self.ok else "FAIL"
        body = "; ".join(self.problems) if self.problems else ", ".join(self.facts)
        return f"{status} criterion {self.number} ({self.title}, {took:.1f}s): {body}"


def criterion_1() -> Outcome:
    out = Outcome(1, "projective plane")
    d = rp2()
    ideal = stanley_reisner_ideal(d)
    b2, b3 = hochster_betti(d, 2), hochster_betti(d, 3)
    v = v_number(ideal).v
    out.need(v == 3 and v_definitional(ideal) == 3, f"v = {v}")
    out.need(b3.reg == 2 and b2.reg == 3, f"reg S/I = {b3.reg} at p=3, {b2.reg} at p=2")
    out.need(b2.depth == 2, f"depth at p=2 is {b2.depth}")
    out.need(is_2_pure(d), "not 2-pure")
    out.facts.append("v=3, reg 2 (p=3) / 3 (p=2), depth 2 (p=2), 2-pure")
    out.suite("projective-plane")
    out.budget(5)
    return out


def criterion_2() -> Outcome:
    out = Outcome(2, "pure height two")
    out.suite("pure-height-two-law", 1000, min_checks=3000)
    out.budget(120)
    return out


def criterion_3() -> Outcome:
    out = Outcome(3, "dual formula vs definition")
    res = out.suite("dual-formula-oracle", 1000)
    out.need(res.notes.get("pairs", 0) >= 1000, f"only {res.notes.get('pairs')} random pairs")
    out.need(res.checked > res.notes.get("pairs", 0), "named examples were not checked")
    out.facts.append(f"{res.notes.get('pairs')} random pairs plus examples")
    return out


def criterion_4() -> Outcome:
    out = Outcome(4, "multi-whisker and very well-covered cover ideals")
    for name in ("multi-whisker-cover", "very-well-covered-cover"):
        res = out.suite(name, 200)
        out.need(res.notes.get("instances", 0) >= 200, f"{name}: {res.notes.get('instances')} instances")
    return out


def criterion_5() -> Outcome:
    out = Outcome(5, "nerve domination")
    g = nerve_counterexample()
    got = (c_line(g), c_nerve(g), v_number(edge_ideal(g)).v)
    out.need(got == (2, 3, 3), f"(c_line, c_nerve, v) = {got}")
    out.facts.append(f"published graph {got}")
    out.suite("nerve-counterexample")
    out.suite("nerve-domination", 500, min_checks=501)
    return out


def criterion_6() -> Outcome:
    out = Outcome(6, "range construction")
    triples = [(p, q, r) for p in range(1, 6) for q in range(1, p + 1) for r in range(1, q + 1)]
    for p, q, r in triples:
        ideal = stanley_reisner_ideal(range_complex(p, q, r))
        got = (hochster_betti(ideal, 2).reg + 1, v_number(ideal).v, ideal_invariants(ideal).initial_degree)
        out.need(got == (p + 1, q, r + 1), f"({p},{q},{r}) gave {got}")
    out.facts.append(f"{len(triples)} triples")
    out.suite("range-construction")
    out.budget(60)
    return out


def criterion_7() -> Outcome:
    out = Outcome(7, "2-pure characterization")
    res = out.suite("two-pure-characterization", 1000, min_checks=1000)
    flagged = res.notes.get("flagged", {})
    for kind in ("2CM", "gorenstein", "matroid"):
        out.need(flagged.get(kind, 0) > 0, f"no {kind} instance met")
    out.facts.append(f"flagged {res.notes.get('flagged')}")
    return out


def criterion_8() -> Outcome:
    out = Outcome(8, "symbolic-power bounds")
    res = out.suite("symbolic-power-bounds", 300)
    out.need(res.notes.get("complexes", 0) >= 300, f"{res.notes.get('complexes')} complexes")
    return out


def criterion_9() -> Outcome:
    out = Outcome(9, "big-height and small-depth examples")
    for m, ell in ((4, 1), (5, 2)):
        d = bight_example(m, ell)
        v = v_number(stanley_reisner_ideal(alexander_dual(d))).v
        bight = ideal_invariants(stanley_reisner_ideal(d)).big_height
        out.need(v == 3 * m - 2 * ell - 2, f"(m,l)=({m},{ell}): v = {v}")
        out.need(bight - 1 == 2 * m - ell - 1, f"(m,l)=({m},{ell}): bight - 1 = {bight - 1}")
    d = triangle_plus_point()
    b = hochster_betti(d, 2)
    v = v_number(d).v
    out.need(v == 1 and int(d.dim) + 1 - b.depth == 2, f"v = {v}, dim - depth = {int(d.dim) + 1 - b.depth}")
    out.facts.append("(4,1) and (5,2) match, v=1 with dim-depth=2")
    out.suite("big-height-example")
    out.suite("triangle-plus-point")
    return out


def criterion_10() -> Outcome:
    out = Outcome(10, "edge ideals")
    out.suite("very-well-covered-edge", 200, min_checks=200)
    res = out.suite("multi-whisker-edge", 200)
    out.need(res.notes.get("instances", 0) >= 200, f"{res.notes.get('instances')} multi-whisker instances")
    return out


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 11)])
def test_acceptance(criterion, capsys):
    out = criterion()
    with capsys.disabled():
        print("\n" + out.line())
    assert out.ok, out.line()


if __name__ == "__main__":
    results = []
    for crit in CRITERIA:
        out = crit()
        print(out.line(), flush=True)
        results.append(out.ok)
    sys.exit(0 if all(results) else 1)
