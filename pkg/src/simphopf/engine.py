"""Hopf invariant of a labeled triangulated (2n-1)-sphere.

Pipeline: pick omega on an oriented target facet, pull it back along the
labeling, solve ``delta(theta) = f*omega`` exactly, then pair
``theta cup f*omega`` with the fundamental cycle.  The pairing must come out
an integer; anything else is reported as ``NonIntegerPairing``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable, Optional

from .cochains import Chain, Cochain, cup, pair
from .complex import (
    AbstractComplex,
    FundamentalCycle,
    build_complex,
    canonical_sign,
    compute_fundamental_cycle,
)
from .errors import NonIntegerPairing, WrongSourceDimension
from .linsolve import assemble_system, kernel_perturbation, solve_particular
from .pullback import (
    Labeling,
    OmegaChoice,
    TargetSphere,
    make_omega,
    pullback_omega,
    require_valid,
)


@dataclass(frozen=True)
class HopfOptions:
    sigma_bar: Optional[tuple] = None  # None means (1, ..., n+1)
    gauge_seed: Optional[int] = None
    reverse_source_orientation: bool = False
    odd_n_shortcut: bool = True
    pivoting: str = "markowitz"
    vertex_order: str = "label"  # "label" or "index"


@dataclass
class HopfResult:
    hopf: int
    raw_pairing: Fraction
    n: int
    stats: dict = field(default_factory=dict)


def target_dimension(c: AbstractComplex) -> int:
    if (c.dim + 1) % 2:
        raise WrongSourceDimension(f"source dimension {c.dim} is not of the form 2n-1")
    return (c.dim + 1) // 2


def compute_hopf(
    c: AbstractComplex,
    labeling: Labeling,
    opts: HopfOptions = HopfOptions(),
    *,
    cycle: Optional[FundamentalCycle] = None,
    theta_hook: Optional[Callable[[Cochain], Cochain]] = None,
) -> HopfResult:
    """Compute H(f) for the simplicial map given by ``labeling``.

    ``cycle`` may be passed to reuse an already computed fundamental cycle.
    ``theta_hook`` lets callers tamper with the primitive before pairing;
    it exists for fault-injection checks only.
    """
    start = time.perf_counter()
    n = target_dimension(c)
    require_valid(c, labeling, n)
    if cycle is None:
        cycle = compute_fundamental_cycle(c)
    stats = {"f_vector": c.f_vector, "n": n}
    if opts.odd_n_shortcut and n % 2 == 1:
        stats.update(shortcut=True, wall_time=time.perf_counter() - start)
        return HopfResult(0, Fraction(0), n, stats)
    if opts.vertex_order == "label":
        c, labeling, cycle = label_ordered(c, labeling, cycle)
    elif opts.vertex_order != "index":
        raise ValueError(f"unknown vertex order {opts.vertex_order!r}")

    target = TargetSphere(n)
    choice = OmegaChoice(opts.sigma_bar) if opts.sigma_bar else OmegaChoice.default(n)
    omega = make_omega(target, choice)
    f_omega = pullback_omega(c, labeling, omega)

    t_solve = time.perf_counter()
    report = solve_particular(assemble_system(c, f_omega), pivoting=opts.pivoting)
    solve_time = time.perf_counter() - t_solve
    theta = Cochain.from_vector(c, n - 1, report.particular_solution)
    if opts.gauge_seed is not None:
        theta = theta + kernel_perturbation(c, n, opts.gauge_seed)
    if theta_hook is not None:
        theta = theta_hook(theta)

    if opts.reverse_source_orientation:
        cycle = cycle.reversed()
    raw = pair(cup(theta, f_omega), Chain.from_cycle(cycle))
    stats.update(
        shortcut=False,
        rank=report.rank,
        nullity=report.nullity,
        fill=report.fill,
        solve_time=solve_time,
        wall_time=time.perf_counter() - start,
    )
    if raw.denominator != 1:
        raise NonIntegerPairing(f"pairing {raw} is not an integer")
    return HopfResult(int(raw), raw, n, stats)


def label_ordered(c: AbstractComplex, labeling: Labeling, cycle: FundamentalCycle):
    """Renumber vertices by ``(label, id)`` so the labeling is monotone.

    The ordered cup product commutes with pullback only along order-preserving
    maps.  Without this renumbering ``theta cup f*omega`` depends on the
    representative of omega; e.g. maps missing a label can pair to nonzero.
    The fundamental cycle is transported with the permutation sign of every
    facet, so the orientation class is unchanged.
    """
    rank = sorted(range(c.n_vertices), key=lambda v: (labeling[v], v))
    new_id = [0] * c.n_vertices
    for r, v in enumerate(rank):
        new_id[v] = r
    eps = {}
    facets = []
    for f, e in zip(c.facets, cycle.epsilon):
        s, sign = canonical_sign([new_id[v] for v in f])
        facets.append(s)
        eps[s] = e * sign
    c2 = build_complex(facets)
    lab2 = Labeling(tuple(labeling[v] for v in rank))
    cycle2 = FundamentalCycle(c2, tuple(eps[f] for f in c2.facets))
    return c2, lab2, cycle2


@dataclass
class ConsistencyReport:
    passed: bool
    value: Optional[int]
    reversed_value: Optional[int]
    values: list  # (variant key, H) sorted by key

    def lines(self):
        for key, h in self.values:
            yield f"{key}: {h}"


def oriented_facet_choices(n: int) -> list:
    """Both orientations of every target facet, as ordered label tuples."""
    out = []
    for s in TargetSphere(n).facets:
        out.append(s)
        out.append((s[1], s[0]) + s[2:])
    return out


def consistency_suite(
    c: AbstractComplex,
    labeling: Labeling,
    trials: int = 10,
    seed: int = 0,
    *,
    theta_hook: Optional[Callable[[Cochain], Cochain]] = None,
) -> ConsistencyReport:
    """Recompute H over every sigma-bar choice, random gauges and orientation reversal.

    Passes iff all sigma-bar and gauge variants agree and reversing the
    source orientation negates the common value.  The odd-n shortcut is
    disabled throughout so every variant really runs the solver.
    """
    n = target_dimension(c)
    cycle = compute_fundamental_cycle(c)
    rng = random.Random(seed)
    values = []

    def run(key, opts):
        res = compute_hopf(c, labeling, opts, cycle=cycle, theta_hook=theta_hook)
        values.append((key, res.hopf))
        return res.hopf

    for sb in oriented_facet_choices(n):
        run(("sigma_bar", sb), HopfOptions(sigma_bar=sb, odd_n_shortcut=False))
    for t in range(trials):
        gs = rng.randrange(2**31)
        run(("gauge", t, gs), HopfOptions(gauge_seed=gs, odd_n_shortcut=False))
    reversed_value = compute_hopf(
        c,
        labeling,
        HopfOptions(reverse_source_orientation=True, odd_n_shortcut=False),
        cycle=cycle,
        theta_hook=theta_hook,
    ).hopf
    values.sort(key=lambda kv: repr(kv[0]))
    distinct = {h for _, h in values}
    value = distinct.pop() if len(distinct) == 1 else None
    passed = value is not None and reversed_value == -value
    values.append((("reversed",), reversed_value))
    return ConsistencyReport(passed, value, reversed_value, values)


def label_permutation_values(c: AbstractComplex, labeling: Labeling) -> dict:
    """H(pi o labeling) for every permutation pi of the target labels."""
    n = target_dimension(c)
    labels = tuple(range(1, n + 3))
    cycle = compute_fundamental_cycle(c)
    out = {}
    for image in permutations(labels):
        perm = dict(zip(labels, image))
        out[image] = compute_hopf(
            c, labeling.permuted(perm), HopfOptions(odd_n_shortcut=False), cycle=cycle
        ).hopf
    return out
