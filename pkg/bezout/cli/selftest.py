"""
Bundled invariant suites for `selftest`.

Every suite draws from its own ``random.Random(seed)`` so a single suite
reproduces the same inputs whether it runs alone or with the others.
Sizes are kept small; the full sweeps live in the test suite.
"""
from __future__ import annotations

import random
import time
from math import prod
from typing import Callable, Optional

import structlog

from bezout.cli.schemas import SelftestReport, SuiteResult
from bezout.conditions import (
    adequate_split,
    feckly_clean_decompose,
    feckly_clean_table,
    pm_split,
    pm_witness,
    stable_range_one,
)
from bezout.matrices import ElementaryOp, Matrix, OpTranscript, realize, replay, unit_product_factorization
from bezout.reduction import (
    diagonal_reduce,
    kaplansky_step,
    mspec_pivot_loop,
    reduce_mod_jacobson,
)
from bezout.rings import (
    Integers,
    LocalizedIntegers,
    ModularIntegers,
    PolyOverPrimeField,
    RationalQuaternions,
    Ring,
)

logger = structlog.get_logger(__name__)

INSTANCES: tuple[Ring, ...] = (
    Integers(),
    PolyOverPrimeField(5),
    LocalizedIntegers(),
    ModularIntegers(12),
    RationalQuaternions(),
)


def _check(ok: bool, message: str) -> None:
    if not ok:
        raise AssertionError(message)


def random_op(ring: Ring, rng: random.Random, side: str, n: int) -> ElementaryOp:
    """A random elementary operation on an n x n matrix (n >= 2)."""
    i, j = rng.sample(range(n), 2)
    kind = rng.randrange(3)
    if kind == 0:
        lam = ring.random_element(rng, 5)
        return ElementaryOp.add_left_multiple(i, j, lam) if side == "left" else ElementaryOp.add_right_multiple(i, j, lam)
    if kind == 1:
        return ElementaryOp.swap_rows(i, j) if side == "left" else ElementaryOp.swap_cols(i, j)
    u = ring.from_int(-1)
    return ElementaryOp.scale_row_left(i, u) if side == "left" else ElementaryOp.scale_col_right(i, u)


def suite_ring_axioms(rng: random.Random) -> int:
    cases = 0
    for ring in INSTANCES:
        for _ in range(40):
            a, b, c = (ring.random_element(rng) for _ in range(3))
            _check((a * b) * c == a * (b * c), f"{ring.descriptor}: associativity at {a}, {b}, {c}")
            _check(a * (b + c) == a * b + a * c, f"{ring.descriptor}: left distributivity")
            _check((a + b) * c == a * c + b * c, f"{ring.descriptor}: right distributivity")
            _check(a * ring.one == a == ring.one * a, f"{ring.descriptor}: identity")
            _check(a + (-a) == ring.zero, f"{ring.descriptor}: additive inverse")
            cases += 1
    return cases


def suite_gcd(rng: random.Random) -> int:
    cases = 0
    for ring in INSTANCES:
        for _ in range(100):
            a, b = ring.random_element(rng), ring.random_element(rng)
            w = ring.extended_gcd(a, b)
            _check(w.holds(a, b), f"{ring.descriptor}: bezout witness for ({a}, {b})")
            u, c = ring.canonical_associate(a)
            _check(u * c == a and ring.is_unit(u), f"{ring.descriptor}: associate of {a}")
            if not b.is_zero():
                q = ring.try_divide(b * a, b)
                _check(q is not None and b * q == b * a, f"{ring.descriptor}: division")
            cases += 1
    return cases


def suite_transcripts(rng: random.Random) -> int:
    cases = 0
    for ring in (Integers(), RationalQuaternions(), PolyOverPrimeField(5)):
        for _ in range(30):
            n = rng.randint(2, 4)
            t = OpTranscript().extend(random_op(ring, rng, "left", n) for _ in range(5))
            t = t.extend(random_op(ring, rng, "right", n) for _ in range(5))
            a = Matrix.random(ring, rng, n, n, 5)
            p, p_inv, q, q_inv = realize(t, ring, n, n)
            _check(p @ a @ q == replay(t, a), f"{ring.descriptor}: P·A·Q differs from replay")
            _check((p @ p_inv).is_identity() and (q @ q_inv).is_identity(), f"{ring.descriptor}: inverses")
            cases += 1
    for ring in (Integers(), RationalQuaternions()):
        for _ in range(50):
            s, t_, w = (ring.random_element(rng, 5) for _ in range(3))
            unit_product_factorization(s, t_, w)
            cases += 1
    return cases


def suite_minors(rng: random.Random) -> int:
    ring = Integers()
    cases = 0
    for rows, cols in ((2, 2), (2, 3), (3, 3), (3, 2)):
        for _ in range(25):
            a = Matrix.random(ring, rng, rows, cols, 50)
            chain = diagonal_reduce(a).chain
            for k in range(1, min(rows, cols) + 1):
                expected = a.minor_gcd(k)
                _check(
                    ring.are_associates(prod(chain[:k], start=ring.one), expected),
                    f"chain {[str(d) for d in chain]} vs {k}x{k} minor gcd {expected} for {a}",
                )
            cases += 1
    return cases


def suite_kaplansky(rng: random.Random) -> int:
    cases = 0
    for ring, bound in ((Integers(), 10_000), (PolyOverPrimeField(5), 3)):
        done = 0
        while done < 100:
            a, b, c = (ring.random_element(rng, bound) for _ in range(3))
            if not ring.is_unit(ring.gcd(ring.gcd(a, b), c)):
                continue
            w = kaplansky_step(a, b, c)
            _check(w.holds(), f"kaplansky witness for ({a}, {b}, {c})")
            done += 1
        cases += done
    return cases


def suite_conditions(rng: random.Random) -> int:
    cases = 0
    for n in range(2, 41):
        _check(stable_range_one(n).verdict, f"stable range one fails for Z/{n}")
        cases += 1
    ring = Integers()
    for _ in range(100):
        a = ring.from_int(rng.randint(1, 10**6))
        b = ring.random_element(rng, 1000)
        split = adequate_split(a, b, audit=True)
        _check(split.r * split.s == a, f"adequate split of {a}")
        c = ring.random_element(rng, 1000)
        if ring.is_unit(ring.gcd(b, c)):
            pm_split(a, b, c)
        cases += 1
    for m in range(1, 21):
        for b in range(m):
            w = pm_witness(m, b, 1 - b)
            _check((1 + w.b * w.r) * (1 + w.c * w.s) % m == 0, f"pm witness mod {m}")
            cases += 1
    _check(feckly_clean_table().complete, "feckly-clean table has an empty row")
    zloc = LocalizedIntegers()
    for _ in range(100):
        feckly_clean_decompose(zloc.random_element(rng))
        cases += 1
    return cases


def suite_cross_algorithm(rng: random.Random) -> int:
    cases = 0
    ring = Integers()
    for _ in range(50):
        a = Matrix.random(ring, rng, 2, 2, 50)
        _check(mspec_pivot_loop(a).chain == diagonal_reduce(a).chain, f"pivot loop disagrees on {a}")
        cases += 1
    zloc = LocalizedIntegers()
    for _ in range(50):
        a = Matrix.random(zloc, rng, 2, 2, 50)
        _check(reduce_mod_jacobson(a).chain == diagonal_reduce(a).chain, f"mod-J reduction disagrees on {a}")
        cases += 1
    return cases


SUITES: dict[str, Callable[[random.Random], int]] = {
    "ring-axioms": suite_ring_axioms,
    "gcd": suite_gcd,
    "transcripts": suite_transcripts,
    "minors": suite_minors,
    "kaplansky": suite_kaplansky,
    "conditions": suite_conditions,
    "cross-algorithm": suite_cross_algorithm,
}


def run_selftest(seed: int, suite: Optional[str] = None) -> SelftestReport:
    names = [suite] if suite else list(SUITES)
    results = []
    for name in names:
        start = time.perf_counter()
        try:
            cases = SUITES[name](random.Random(seed))
            results.append(SuiteResult(name=name, passed=True, cases=cases, seconds=time.perf_counter() - start))
        except Exception as exc:
            logger.error("selftest_suite_failed", suite=name, error=str(exc))
            results.append(
                SuiteResult(name=name, passed=False, seconds=time.perf_counter() - start, detail=f"{type(exc).__name__}: {exc}")
            )
        logger.info("selftest_suite_done", suite=name, passed=results[-1].passed, cases=results[-1].cases)
    return SelftestReport(seed=seed, suites=results)
