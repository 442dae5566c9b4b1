"""Run the registered checks over the ordered pairs of a group.

Pairs are covered one by one, through conjugation-orbit representatives
weighted by orbit size, or on a fixed-seed sample (see :data:`MODES`).
"""

from __future__ import annotations

import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

import numpy as np

from ..codes import CodeOps, TableOps, codec_for
from ..errors import ConfigurationError, DomainError, PreconditionError, TheoremViolation
from ..groups import FiniteGroup
from ..hall.basis import MAX_GAMMA
from ..hall.constants import class_constants, prime_factors
from ..kernel import BACKEND, pair_rows, unitri_mutual_orders, unitri_pair_rows
from ..kernel_columns import COL, COLUMNS
from .catalog import EXHAUSTIVE_LIMIT, SAMPLE_PAIRS, CatalogEntry
from .checks import (
    BY_ID, CHECKS, SPREAD_PAIRS, GroupContext, applies, identity_pair_count, spread_positions,
)
from .orbits import PairOrbits
from .rows import element_pair_rows

log = logging.getLogger(__name__)

SAMPLE_SEED = "nilorder-sample"
# largest code range mapped back to indices through a dense lookup array
LOOKUP_LIMIT = 1 << 24


@dataclass(frozen=True)
class Violation:
    check: str
    a: int
    b: int
    message: str
    row: tuple = ()


@dataclass
class SweepReport:
    group: str
    order: int
    nilpotency_class: int | None
    mode: str
    pairs_checked: int
    checks: list
    violations: list = field(default_factory=list)
    ratio_counts: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def violations_for(self, check_id):
        return [v for v in self.violations if v.check == check_id]


def resolve_checks(gamma, requested=None, strict=True):
    """Check objects for a group of class ``gamma`` (``None`` = not nilpotent).

    With ``requested=None`` every applicable default check runs. Explicitly
    requested checks that do not apply raise when ``strict``, else are dropped.
    """
    if requested is None:
        return [c for c in CHECKS if c.default and applies(c, gamma)]
    out = []
    for cid in requested:
        if cid not in BY_ID:
            raise ConfigurationError(f"unknown check {cid!r}; known: {', '.join(BY_ID)}")
        c = BY_ID[cid]
        if not applies(c, gamma):
            if strict:
                have = "is not nilpotent" if gamma is None else f"has class {gamma}"
                raise ConfigurationError(f"check {cid!r} applies to {c.requires} groups only; this one {have}")
            continue
        if c not in out:
            out.append(c)
    return out


def distinct_rows(rows):
    """``(uniq, inverse)`` like ``np.unique(rows, axis=0, return_inverse=True)``.

    Factorizes one column at a time with 1-D sorts, which is much faster
    than the lexicographic row sort for millions of rows.
    """
    if len(rows) == 0:
        return rows[:0], np.zeros(0, dtype=np.int64)
    ids = np.zeros(len(rows), dtype=np.int64)
    for col in rows.T:
        vals, codes = np.unique(col, return_inverse=True)
        _, ids = np.unique(ids * len(vals) + codes.reshape(-1), return_inverse=True)
        ids = ids.reshape(-1)
    first = np.zeros(ids.max() + 1, dtype=np.int64)
    first[ids[::-1]] = np.arange(len(ids))[::-1]
    return rows[first], ids


def _sample_pairs(N, sample):
    rng = random.Random(SAMPLE_SEED)
    a = [rng.randrange(N) for _ in range(sample)]
    b = [rng.randrange(N) for _ in range(sample)]
    return np.array(a, dtype=np.int64), np.array(b, dtype=np.int64)


def _partitioned(job, total, workers):
    workers = max(1, int(workers))
    bounds = np.linspace(0, total, workers + 1).astype(int)
    parts = list(zip(bounds[:-1], bounds[1:]))
    if workers == 1:
        return [job(lo, hi) for lo, hi in parts]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda p: job(*p), parts))


@dataclass
class PairSpace:
    """The pairs a sweep evaluates, and how to compute more rows for it.

    ``mode`` is "exhaustive" (every ordered pair, row-major), "orbits" (one
    pair per orbit under simultaneous conjugation, ``weights`` holding the
    orbit sizes) or "sampled". ``ops`` and ``handles`` give vectorized group
    arithmetic (``None`` when only element objects are available).
    """

    G: FiniteGroup
    mode: str
    a_idx: np.ndarray
    b_idx: np.ndarray
    weights: np.ndarray | None = None
    table: object = None
    codec: object = None
    ops: object = None
    handles: np.ndarray | None = None
    workers: int = 1
    backend: str | None = None
    rows: np.ndarray | None = None

    @property
    def covered(self) -> int:
        return len(self.a_idx) if self.weights is None else int(self.weights.sum())

    def rows_for(self, ai, bi):
        ai, bi = np.asarray(ai, dtype=np.int64), np.asarray(bi, dtype=np.int64)

        def job(lo, hi):
            if self.table is not None:
                return pair_rows(self.table, ai[lo:hi], bi[lo:hi], backend=self.backend)
            if self.mode == "orbits":
                h = self.handles
                return unitri_pair_rows(self.codec, self.G.exponent, h[ai[lo:hi]], h[bi[lo:hi]],
                                        backend=self.backend)
            return element_pair_rows(self.G, ai[lo:hi], bi[lo:hi])

        chunks = _partitioned(job, len(ai), self.workers)
        return np.concatenate(chunks) if chunks else np.zeros((0, len(COLUMNS)), dtype=np.int64)

    def mutual_orders(self, ai, bi):
        if self.table is not None or self.mode != "orbits":
            return self.rows_for(ai, bi)[:, COL["mo"]]
        h = self.handles
        chunks = _partitioned(
            lambda lo, hi: unitri_mutual_orders(self.codec, self.G.exponent, h[ai[lo:hi]],
                                                h[bi[lo:hi]], backend=self.backend),
            len(ai), self.workers)
        return np.concatenate(chunks) if chunks else np.zeros(0, dtype=np.int64)


def _context(name, G, gamma):
    B = C = None
    if gamma is not None and gamma >= 1:
        if gamma > MAX_GAMMA:
            raise DomainError(f"class {gamma} exceeds the supported maximum {MAX_GAMMA}")
        k = class_constants(gamma)
        B, C = k.B, k.C
    return GroupContext(name=name, order=G.order, gamma=gamma, B=B, C=C)


MODES = ("exhaustive", "orbits", "sampled")


def _choose_mode(G, mode, backend):
    if mode is not None and mode not in MODES:
        raise ConfigurationError(f"unknown sweep mode {mode!r}; known: {', '.join(MODES)}")
    small = G.order <= EXHAUSTIVE_LIMIT
    coded = codec_for(G) is not None
    if mode is None:
        compiled = backend == "compiled" or (backend is None and BACKEND == "compiled")
        return "exhaustive" if small else "orbits" if coded and compiled else "sampled"
    if mode == "exhaustive" and not small:
        raise ConfigurationError(
            f"{G.name}: pair-by-pair sweeps are limited to {EXHAUSTIVE_LIMIT} elements"
        )
    if mode == "orbits" and not (small or coded):
        raise ConfigurationError(f"{G.name}: orbit sweeps need a table or unitriangular codes")
    return mode


def build_space(G, mode, workers=1, backend=None, sample=SAMPLE_PAIRS) -> PairSpace:
    N = G.order
    table = G.table() if N <= EXHAUSTIVE_LIMIT else None
    codec = codec_for(G)
    space = PairSpace(G, mode, None, None, table=table, codec=codec, workers=workers,
                      backend=backend)
    if table is not None:
        space.ops, space.handles = TableOps(table), np.arange(N, dtype=np.int64)
    elif codec is not None:
        codes = np.array([codec.encode(x) for x in G.elements], dtype=np.int64)
        space.ops, space.handles = CodeOps(codec, G.exponent), codes
    if mode == "exhaustive":
        space.a_idx = np.repeat(np.arange(N, dtype=np.int64), N)
        space.b_idx = np.tile(np.arange(N, dtype=np.int64), N)
    elif mode == "orbits":
        if table is not None:
            def to_index(x):
                return x
        elif codec.size > LOOKUP_LIMIT:
            order = np.argsort(space.handles)
            sorted_codes = space.handles[order]

            def to_index(x):
                return order[np.searchsorted(sorted_codes, x)]
        else:
            lookup = np.full(codec.size, -1, dtype=np.int64)
            lookup[space.handles] = np.arange(N)

            def to_index(x):
                return lookup[x]

        space.a_idx, space.b_idx, space.weights = PairOrbits(
            G, space.handles, space.ops, to_index).enumerate()
    else:
        space.a_idx, space.b_idx = _sample_pairs(N, sample)
    return space


def sweep(target, checks=None, workers=1, backend=None, strict=True, sample=SAMPLE_PAIRS,
          mode=None) -> SweepReport:
    """Sweep ``target`` (a CatalogEntry or a FiniteGroup) with the given check ids.

    ``mode`` is one of :data:`MODES`; by default every pair is swept through a
    table when the group is small, over conjugation orbits when it is a large
    unitriangular group and the compiled kernel is present, else on a sample.
    """
    t0 = time.perf_counter()
    if isinstance(target, CatalogEntry):
        G = target.build()
    elif isinstance(target, FiniteGroup):
        G = target
    else:
        raise TypeError("sweep target must be a CatalogEntry or a FiniteGroup")
    name = G.name or "group"
    gamma = G.nilpotency_class
    selected = resolve_checks(gamma, checks, strict=strict)
    requested, mode = mode, _choose_mode(G, mode, backend)
    ctx = _context(name, G, gamma)
    N = G.order
    space = build_space(G, mode, workers=workers, backend=backend, sample=sample)
    a_idx, b_idx = space.a_idx, space.b_idx
    rows = space.rows = space.rows_for(a_idx, b_idx)
    labels = {"exhaustive": "exhaustive", "orbits": f"orbits({len(a_idx)})",
              "sampled": f"sampled({len(a_idx)})"}
    report = SweepReport(
        group=name,
        order=N,
        nilpotency_class=gamma,
        mode=labels[mode],
        pairs_checked=space.covered,
        checks=[c.id for c in selected],
    )
    if mode == "sampled":
        if requested == "sampled":
            why = "sampling requested"
        elif space.codec is not None:
            why = "orbit sweeps need the compiled kernel"
        else:
            why = "group too large for an exhaustive sweep"
        report.notes.append(f"{len(a_idx)} pairs drawn with a fixed seed; {why}")
    elif mode == "orbits":
        report.notes.append(
            f"all {N * N} pairs covered by {len(a_idx)} conjugation-orbit representatives"
        )

    uniq, inverse = distinct_rows(rows)
    weights = space.weights if space.weights is not None else np.ones(len(a_idx), dtype=np.int64)
    counts = np.bincount(inverse, weights=weights, minlength=len(uniq)).astype(np.int64)

    violations = []
    for check in selected:
        if check.row is not None:
            for u, urow in enumerate(uniq):
                r = dict(zip(COLUMNS, (int(x) for x in urow)))
                msg = check.row(r, ctx)
                if msg:
                    for p in np.nonzero(inverse == u)[0]:
                        violations.append((check.id, int(p), msg))
        else:
            for p, msg in check.pairs(space, ctx):
                violations.append((check.id, int(p), msg))
    order_of = {c.id: i for i, c in enumerate(selected)}
    violations.sort(key=lambda v: (order_of[v[0]], v[1]))
    report.violations = [
        Violation(cid, int(a_idx[p]), int(b_idx[p]), msg, tuple(int(x) for x in rows[p]))
        for cid, p, msg in violations
    ]
    for note in space_notes(space, selected):
        report.notes.append(note)

    ratios = {}
    for urow, cnt in zip(uniq, counts):
        q = Fraction(int(urow[COL["oab"]]), int(urow[COL["mo"]]))
        ratios[q] = ratios.get(q, 0) + int(cnt)
    report.ratio_counts = dict(sorted(ratios.items()))
    if gamma is not None and gamma >= 3 and ratios:
        # o(ab) | o(a,b) B for ratio p/q in lowest terms iff p | B, likewise q | C
        b_min = lcm(*(q.numerator for q in ratios))
        c_min = lcm(*(q.denominator for q in ratios))
        report.notes.append(f"smallest constants fitting the observed ratios: B = {b_min}, C = {c_min}")
    if "hall-corollary" in report.checks and min(ctx.primes, default=gamma + 1) <= gamma:
        report.notes.append(
            f"hall-corollary vacuous: |G| = {N} has a prime <= class {gamma}"
        )
    report.elapsed = time.perf_counter() - t0
    log.info("swept %s: %d pairs (%d evaluated), %d checks in %.2fs", name, space.covered,
             len(a_idx), len(selected), report.elapsed)
    return report


def space_notes(space, selected):
    """Notes for checks that cover fewer pairs than the sweep itself."""
    ids = {c.id for c in selected}
    out = []
    if "class2-identities" in ids:
        k = identity_pair_count(space)
        if k < len(space.a_idx):
            out.append(f"class2-identities evaluated on {k} of {len(space.a_idx)} pairs")
    if "lemma-center" in ids and space.mode == "orbits":
        k = len(spread_positions(space, SPREAD_PAIRS))
        out.append(f"lemma-center evaluated on {k} of {len(space.a_idx)} pairs")
    return out


def ratio_census(reports):
    """Union of observed ratios o(ab)/o(a,b) per class, over nilpotent sweep reports.

    Raises TheoremViolation when a ratio has a prime above the class, when a
    class-2 ratio leaves {1/2, 1, 2}, or when an abelian ratio differs from 1.
    """
    census = {}
    for rep in reports:
        gamma = rep.nilpotency_class
        if gamma is None:
            raise PreconditionError(f"{rep.group} is not nilpotent")
        census.setdefault(gamma, set()).update(rep.ratio_counts)
    for gamma, ratios in census.items():
        for q in ratios:
            big = [p for p in prime_factors(q.numerator) + prime_factors(q.denominator) if p > gamma]
            if big:
                raise TheoremViolation(f"class {gamma}: ratio {q} has prime factors {big}")
        allowed = {1: {Fraction(1)}, 2: {Fraction(1, 2), Fraction(1), Fraction(2)}}.get(gamma)
        if allowed is not None and not ratios <= allowed:
            raise TheoremViolation(f"class {gamma}: ratios {sorted(ratios)} not within {sorted(allowed)}")
    return {g: sorted(census[g]) for g in sorted(census)}
