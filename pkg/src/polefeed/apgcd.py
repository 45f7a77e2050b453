"""Approximate polynomial GCD by root matching, plus the classical
remainder-sequence method and a benchmark harness comparing the two.

The remainder-sequence method (gcd_naive) is included deliberately: it is
numerically fragile on inputs whose leading coefficients are badly scaled,
and the benchmark quantifies exactly how fragile.  gcd_advanced recovers
the common factor from matched root pairs and rebuilds the cofactors by
interpolation, which keeps full accuracy on the same data.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import MatchingAmbiguity, NoConvergence, ZeroPolynomial
from .polycore import Poly, from_roots, newton_interpolate, roots

DEFAULT_EPS = 1e-8
# Relative eps perturbation used for the pairing stability check.
_STABILITY_REL = 0.1


@dataclass
class GcdResult:
    """Approximate gcd d with cofactors satisfying k*a + l*b = d."""

    d: Poly
    k: Poly
    l: Poly
    matched_pairs: list
    gcd_degree: int


@dataclass
class BenchReport:
    """Success rates of both gcd methods over seeded random instances."""

    scenario: str
    degree: int
    gcd_degree: int
    trials: int
    naive_successes: int
    advanced_successes: int
    seed: int
    eps: float
    elapsed_s: float = 0.0

    @property
    def naive_rate(self) -> float:
        return 100.0 * self.naive_successes / self.trials

    @property
    def advanced_rate(self) -> float:
        return 100.0 * self.advanced_successes / self.trials


def gcd_naive(a: Poly, b: Poly, tol: float = DEFAULT_EPS) -> Poly:
    """Monic gcd by the Euclidean remainder sequence.

    A division remainder whose max coefficient magnitude is at most
    tol*(1 + ||a|| + ||b||) is treated as zero; the threshold is fixed by
    the inputs, not by the shrinking iterates, so a remainder chain that
    descends to roundoff garbage keeps dividing until the degree runs out.
    Returns the constant 1 when no common factor survives.
    """
    if a.is_zero and b.is_zero:
        raise ZeroPolynomial("gcd of two zero polynomials")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    thr = tol * (1.0 + a.norm + b.norm)
    f, g = (a, b) if a.degree >= b.degree else (b, a)
    if g.norm <= thr:
        return f.monic()
    while g.degree > 0:
        r = f % g
        if r.is_zero or r.norm <= thr:
            return g.monic()
        f, g = g, r
    return Poly.one()


def _greedy_match(ra: np.ndarray, rb: np.ndarray, eps: float) -> list:
    """Pairs (i, j) by increasing distance, each root used once, dist <= eps."""
    if ra.size == 0 or rb.size == 0:
        return []
    dist = np.abs(ra[:, None] - rb[None, :])
    order = np.argsort(dist, axis=None, kind="stable")
    used_a = np.zeros(ra.size, dtype=bool)
    used_b = np.zeros(rb.size, dtype=bool)
    pairs = []
    for flat in order:
        i, j = divmod(int(flat), rb.size)
        if dist[i, j] > eps:
            break
        if used_a[i] or used_b[j]:
            continue
        used_a[i] = True
        used_b[j] = True
        pairs.append((i, j))
    return pairs


def gcd_advanced(a: Poly, b: Poly, eps: float = DEFAULT_EPS) -> GcdResult:
    """Approximate gcd from matched roots of a and b.

    Roots of both inputs are paired greedily by distance (threshold eps);
    each matched pair contributes the midpoint as a gcd root.  The
    cofactors k and l are interpolated from the unmatched roots so that
    k*a + l*b = d holds up to roundoff.  Raises MatchingAmbiguity when
    the pairing is not stable under a 10 percent perturbation of eps.
    """
    if a.is_zero or b.is_zero:
        raise ZeroPolynomial("gcd of the zero polynomial")

    # Constant inputs have a trivial gcd.
    if a.degree == 0:
        return GcdResult(Poly.one(), Poly.constant(1.0 / a.lc), Poly.zero(), [], 0)
    if b.degree == 0:
        return GcdResult(Poly.one(), Poly.zero(), Poly.constant(1.0 / b.lc), [], 0)

    ra = roots(a).roots
    rb = roots(b).roots
    pairs = _greedy_match(ra, rb, eps)
    lo = _greedy_match(ra, rb, eps * (1.0 - _STABILITY_REL))
    hi = _greedy_match(ra, rb, eps * (1.0 + _STABILITY_REL))
    if set(pairs) != set(lo) or set(pairs) != set(hi):
        raise MatchingAmbiguity(
            f"root pairing changes within {_STABILITY_REL:.0%} of eps={eps:g}"
        )

    r = len(pairs)
    mids = np.array([(ra[i] + rb[j]) / 2.0 for i, j in pairs])
    d = from_roots(mids)
    matched = [(complex(ra[i]), complex(rb[j]), float(abs(ra[i] - rb[j]))) for i, j in pairs]

    if r == b.degree:
        # b divides a (or equals it): d is monic b, so l*b = d exactly.
        return GcdResult(d, Poly.zero(), Poly.constant(1.0 / b.lc), matched, r)
    if r == a.degree:
        return GcdResult(d, Poly.constant(1.0 / a.lc), Poly.zero(), matched, r)

    in_a = {i for i, _ in pairs}
    in_b = {j for _, j in pairs}
    free_a = np.array([ra[i] for i in range(ra.size) if i not in in_a])
    free_b = np.array([rb[j] for j in range(rb.size) if j not in in_b])
    # k has degree deg(b)-r-1, fixed by values at the unmatched roots of b.
    k = newton_interpolate([(x, d(x) / a(x)) for x in free_b])
    l = newton_interpolate([(x, d(x) / b(x)) for x in free_a])
    return GcdResult(d, k, l, matched, r)


# ---------------------------------------------------------------------------
# Benchmark harness
# ---------------------------------------------------------------------------

_ANNULUS = (0.3, 1.5)
_MIN_SEPARATION = 1e-2
_LEAD_SCALE = 1e-5  # leading-coefficient ratio for the first specific scenario
_COEFF_GAP = 1e-5   # second-coefficient gap for the other specific scenario
_BATCH = 8          # candidate factors screened per draw

SCENARIOS = ("random", "specific1", "specific2")


def _screen_roots(batch: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """All roots of a batch of polynomials by simultaneous iteration.

    batch is (k, n+1) coefficients, low degree first, nonzero leading
    column.  Returns (k, n) roots and a per-row convergence flag.  Light
    screening machinery for the instance generator; the algorithmic path
    keeps the full single-polynomial kernel.
    """
    batch = np.asarray(batch, dtype=np.complex128)
    kk, n1 = batch.shape
    n = n1 - 1
    monic = batch / batch[:, -1:]
    mags = np.abs(monic[:, :-1])
    # Fujiwara-style inclusion radius per row.
    exps = 1.0 / (n - np.arange(n))
    rad = 2.0 * np.max(np.maximum(mags, 1e-300) ** exps, axis=1)
    rad = np.maximum(rad, 1e-3)
    ang = np.exp(2j * np.pi * (np.arange(n) + 0.375) / n)
    z = rad[:, None] * ang[None, :]
    alive = np.ones(kk, dtype=bool)
    idx = np.arange(n)
    for _ in range(80):
        za = z[alive]
        p = np.zeros_like(za)
        dp = np.zeros_like(za)
        for j in range(n, -1, -1):
            dp = dp * za + p
            p = p * za + monic[alive, j][:, None]
        dp = np.where(dp == 0, 1e-300, dp)
        nstep = p / dp
        diff = za[:, :, None] - za[:, None, :]
        diff[:, idx, idx] = np.inf
        s = (1.0 / diff).sum(axis=2)
        den = 1.0 - nstep * s
        den = np.where(den == 0, 1e-300, den)
        w = nstep / den
        z[alive] = za - w
        moved = np.abs(w).max(axis=1) > 1e-12 * (1.0 + np.abs(za).max(axis=1))
        alive[np.flatnonzero(alive)[~moved]] = False
        if not alive.any():
            break
    return z, ~alive


def _draw_factor(rng: np.random.Generator, deg: int, existing: np.ndarray,
                 lead: float = 1.0, window: bool = True) -> tuple[Poly, np.ndarray]:
    """Monic-by-default factor with iid standard normal complex coefficients.

    Accepted only when every root lies in the sampling annulus (skipped
    when the leading coefficient is rescaled, which necessarily pushes
    roots outside) and all roots, including previously placed ones, are
    pairwise separated.
    """
    if deg == 0:
        return Poly.one(), np.array([], dtype=np.complex128)
    while True:
        c = rng.standard_normal((_BATCH, deg)) + 1j * rng.standard_normal((_BATCH, deg))
        batch = np.concatenate([c, np.full((_BATCH, 1), lead + 0j)], axis=1)
        rts, ok = _screen_roots(batch)
        for row in range(_BATCH):
            if not ok[row]:
                continue
            rs = rts[row]
            mag = np.abs(rs)
            if window and (mag.min() < _ANNULUS[0] or mag.max() > _ANNULUS[1]):
                continue
            allr = np.concatenate([existing, rs]) if existing.size else rs
            diff = np.abs(allr[:, None] - allr[None, :])
            np.fill_diagonal(diff, np.inf)
            if diff.min() < _MIN_SEPARATION:
                continue
            return Poly(batch[row]), rs


@dataclass
class _Instance:
    a: Poly
    b: Poly
    common: np.ndarray


def make_instance(scenario: str, degree: int, gcd_degree: int,
                  rng: np.random.Generator) -> _Instance:
    """One benchmark pair a = d*ea, b = d*eb with a planted common factor d.

    random    : all three factors monic with iid normal coefficients,
                roots confined to an annulus and pairwise separated.
    specific1 : eb keeps iid lower coefficients but its leading
                coefficient is 1e-5, so lc(b) is 1e-5 times lc(a).
    specific2 : both inputs monic; eb's second-highest coefficient is
                shifted so the second-highest coefficients of a and b
                differ by exactly 1e-5.  The planted common roots stay
                exact in every scenario because d itself is untouched.
    """
    if scenario not in SCENARIOS:
        raise ValueError(f"unknown scenario {scenario!r}")
    if not (0 <= gcd_degree < degree):
        raise ValueError("need 0 <= gcd_degree < degree")
    extra = degree - gcd_degree
    d, dr = _draw_factor(rng, gcd_degree, np.array([], dtype=np.complex128))
    ea, ra = _draw_factor(rng, extra, dr)
    placed = np.concatenate([dr, ra])
    lead = _LEAD_SCALE if scenario == "specific1" else 1.0
    while True:
        eb, rb = _draw_factor(rng, extra, placed, lead=lead,
                              window=scenario != "specific1")
        if scenario == "specific2":
            # Shift one coefficient of the extra factor; the products then
            # differ in their second-highest coefficient by exactly the gap.
            delta = ea.coeffs[extra - 1] + _COEFF_GAP - eb.coeffs[extra - 1]
            cc = eb.coeffs.copy()
            cc[extra - 1] += delta
            eb = Poly(cc)
            rb, ok = _screen_roots(cc[None, :])
            rb = rb[0]
            mag = np.abs(rb)
            allr = np.concatenate([placed, rb])
            diff = np.abs(allr[:, None] - allr[None, :])
            np.fill_diagonal(diff, np.inf)
            if (not ok[0] or mag.min() < _ANNULUS[0] or mag.max() > _ANNULUS[1]
                    or diff.min() < _MIN_SEPARATION):
                continue
        return _Instance(d * ea, d * eb, dr)


def _recovers(d: Poly, common: np.ndarray, root_tol: float = 1e-6) -> bool:
    """True when d has exactly the planted degree and roots within tol."""
    if d.degree != common.size:
        return False
    if common.size == 0:
        return True
    try:
        got = roots(d).roots
    except (NoConvergence, ZeroPolynomial):
        return False
    pairs = _greedy_match(got, common, root_tol)
    return len(pairs) == common.size


def _bench_trial(scenario: str, degree: int, gcd_degree: int, eps: float,
                 seed: int, trial: int) -> tuple[bool, bool]:
    rng = np.random.default_rng([seed, trial])
    inst = make_instance(scenario, degree, gcd_degree, rng)
    try:
        ok_naive = _recovers(gcd_naive(inst.a, inst.b, eps), inst.common)
    except (NoConvergence, ZeroPolynomial):
        ok_naive = False
    try:
        ok_adv = _recovers(gcd_advanced(inst.a, inst.b, eps).d, inst.common)
    except (NoConvergence, MatchingAmbiguity, ZeroPolynomial):
        ok_adv = False
    return ok_naive, ok_adv


def gcd_bench(scenario: str, degree: int, gcd_degree: int, trials: int,
              eps: float = DEFAULT_EPS, seed: int = 0,
              workers: int | None = None) -> BenchReport:
    """Run seeded trials of both gcd methods and count exact recoveries.

    Success means the recovered gcd has the planted degree and its roots
    match the planted common roots within 1e-6.  Per-trial randomness is
    derived from (seed, trial index), so reports are reproducible and
    independent of the worker count.
    """
    t0 = time.perf_counter()
    if workers is None:
        workers = int(os.environ.get("POLEFEED_THREADS", "1") or "1")
    args = [(scenario, degree, gcd_degree, eps, seed, t) for t in range(trials)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda a: _bench_trial(*a), args))
    else:
        outcomes = [_bench_trial(*a) for a in args]
    n_ok = sum(1 for ok, _ in outcomes if ok)
    a_ok = sum(1 for _, ok in outcomes if ok)
    return BenchReport(
        scenario=scenario,
        degree=degree,
        gcd_degree=gcd_degree,
        trials=trials,
        naive_successes=n_ok,
        advanced_successes=a_ok,
        seed=seed,
        eps=eps,
        elapsed_s=time.perf_counter() - t0,
    )
