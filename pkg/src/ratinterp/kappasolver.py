"""Minimal degree-sum (kappa) solutions and rational Hermite interpolation.

For a reduced fraction a/b the degree sum is deg a + deg b.  Writing any
interpolant in the trace-row basis of (f, g) shows the degree sums below
n are exactly the values n - deg q_k for which s_k vanishes at no node,
each realized by the reduced row fraction r_k/s_k; every value >= n is
admissible as well.

The prescribed-split problem (numerator degree <= d, denominator degree
<= n - d - 1) is decided by the single trace row whose remainder degree
first drops to d or below: it is solvable iff that row's r and s are
coprime, and then the reduced row fraction is the solution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import scan_limit
from .eea import Decomposition, decompose, extended_euclid
from .errors import KappaNotAdmissible, NotAnInterpolant
from .exactpoly import ONE, ZERO, Poly, gcd, monomial
from .hermite import (
    InterpolationData,
    RationalFunction,
    check_interpolates,
    hermite_polynomial,
    nodal_poly,
    weak_cofactor,
)

Pair = tuple[Poly, Poly]


@dataclass(frozen=True)
class KappaIsolated:
    """One admissible degree sum below n, with its witness row."""

    kappa: int
    index: int
    solution: RationalFunction
    raw_pair: Pair  # the trace row (r_k, s_k) before canonical rescaling


@dataclass(frozen=True)
class KappaReport:
    """Isolated admissible degree sums, the tail threshold n, and the minimum."""

    isolated: tuple[KappaIsolated, ...]
    tail_threshold: int
    minimal_kappa: int
    minimal_solutions: tuple[RationalFunction, ...]

    def is_admissible(self, kappa: int) -> bool:
        if kappa >= self.tail_threshold:
            return True
        return any(entry.kappa == kappa for entry in self.isolated)


def kappa_of(rf: RationalFunction) -> int:
    """deg numer + deg denom of a reduced fraction; constants count as 0."""
    top = rf.numer.degree if not rf.numer.is_zero else 0
    return top + rf.denom.degree


def yy_form(rf: RationalFunction, data: InterpolationData) -> Decomposition:
    """Trace-row coordinates of the canonical weak pair of an interpolant."""
    if not check_interpolates(rf, data):
        raise NotAnInterpolant(f"{rf} does not interpolate the data")
    g = hermite_polynomial(data)
    if g.is_zero:
        raise ValueError(
            "identically zero data has no remainder sequence to decompose against"
        )
    trace = extended_euclid(nodal_poly(data), g)
    c = weak_cofactor(rf.numer, rf.denom, data)
    return decompose(rf.numer, rf.denom, c, trace)


def admissible_kappa(data: InterpolationData) -> KappaReport:
    """All admissible degree sums below n, with witnesses, plus the tail n."""
    n = data.n
    g = hermite_polynomial(data)
    if g.is_zero:
        # only the zero function has degree sum below n here
        zero = RationalFunction(ZERO, ONE)
        entry = KappaIsolated(kappa=0, index=1, solution=zero, raw_pair=(ZERO, ONE))
        return KappaReport(
            isolated=(entry,), tail_threshold=n,
            minimal_kappa=0, minimal_solutions=(zero,),
        )
    trace = extended_euclid(nodal_poly(data), g)
    entries = []
    for k in range(1, trace.N + 1):
        s_k = trace.s(k)
        if any(s_k(x) == 0 for x in data.nodes):
            continue
        entries.append(
            KappaIsolated(
                kappa=n - trace.q(k).degree,
                index=k,
                solution=RationalFunction(trace.r(k), s_k),
                raw_pair=(trace.r(k), s_k),
            )
        )
    # k = 1 always qualifies (s_1 == 1), so the set is never empty
    minimal = min(entry.kappa for entry in entries)
    return KappaReport(
        isolated=tuple(entries),
        tail_threshold=n,
        minimal_kappa=minimal,
        minimal_solutions=tuple(e.solution for e in entries if e.kappa == minimal),
    )


def sample_solution_of_kappa(data: InterpolationData, kappa: int) -> RationalFunction:
    """A concrete interpolant of degree sum exactly kappa."""
    if kappa < 0:
        raise ValueError("kappa must be nonnegative")
    report = admissible_kappa(data)
    n = data.n
    if kappa < n:
        for entry in report.isolated:
            if entry.kappa == kappa:
                return entry.solution
        raise KappaNotAdmissible(
            f"no interpolant has degree sum {kappa}; isolated values "
            f"{sorted({e.kappa for e in report.isolated})}, tail >= {n}"
        )
    f = nodal_poly(data)
    g = hermite_polynomial(data)
    if g.is_zero:
        # (x**e + 1) * f over 1 interpolates zero data with degree sum n + e
        return RationalFunction((monomial(kappa - n) + ONE) * f, ONE)
    if kappa == n:
        trace = extended_euclid(f, g)
        k = 1 if trace.N >= 2 else 0
        limit = scan_limit(n * data.node_count + 2 * n + 1)
        for lam in range(1, limit + 1):
            candidate = RationalFunction(
                trace.r(k) + lam * trace.r(k + 1),
                trace.s(k) + lam * trace.s(k + 1),
            )
            if kappa_of(candidate) == n and all(
                candidate.denom(x) != 0 for x in data.nodes
            ):
                return candidate
        raise RuntimeError("degree-sum sample scan exceeded its bound")
    # kappa > n: pad the base rows with a multiple of f; the denominator
    # stays constant, so every target is reachable with no scan
    pad = monomial(kappa - n) + ONE
    return RationalFunction(pad * f + f + g, ONE)


def hermite_rational(data: InterpolationData, d: int) -> RationalFunction | None:
    """The interpolant with deg numer <= d and deg denom <= n-d-1, if one exists."""
    n = data.n
    if not 0 <= d <= n - 1:
        raise ValueError(f"d must lie in 0..{n - 1}, got {d}")
    g = hermite_polynomial(data)
    if g.is_zero:
        return RationalFunction(ZERO, ONE)
    trace = extended_euclid(nodal_poly(data), g)
    for k in range(1, trace.N + 1):
        if trace.r(k).degree <= d:
            if gcd(trace.r(k), trace.s(k)) == ONE:
                return RationalFunction(trace.r(k), trace.s(k))
            return None
    # every nonzero remainder has degree above d: only the (unreachable)
    # zero row is small enough, so there is no solution
    return None
