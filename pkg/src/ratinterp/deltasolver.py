"""Minimal max-degree (delta) solutions of the rational interpolation problem.

The pairs (a, b) satisfying the weak conditions form a free module of
rank 2.  Consecutive rows of the remainder trace of (f, g) are bases of
it, and at a *critical* index, where the cumulative quotient degrees
straddle n, the two row degrees split n as mu1 + mu2 with mu1 <= mu2.
Such a basis is minimal and answers every question about the max-degree
of interpolants:

* if mu1 < mu2 and the small pair is coprime, the unique interpolant of
  minimal degree mu1 is a1/b1;
* otherwise the minimal degree is mu2, realized by the one-parameter
  family (a2 + p*a1)/(b2 + p*b1), deg p = mu2 - mu1, denominator
  nonvanishing at the nodes;
* the admissible degrees are exactly {mu1} u {delta >= mu2} in the first
  case and {delta >= mu2} in the second.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .config import scan_limit
from .eea import EEATrace, extended_euclid
from .errors import DegreeNotAdmissible, DenominatorVanishesAtNode, ZeroDenominator
from .exactpoly import ONE, ZERO, Poly, gcd, monomial
from .hermite import InterpolationData, RationalFunction, hermite_polynomial, nodal_poly

Pair = tuple[Poly, Poly]


@dataclass(frozen=True)
class MinimalBasis:
    """Two weak pairs generating all of them, with degree split mu1 + mu2 = n."""

    pair1: Pair
    pair2: Pair
    mu1: int
    mu2: int
    critical_index: int  # trace index of the basis rows; -1 for the all-zero case

    def __post_init__(self) -> None:
        assert self.mu1 <= self.mu2


@dataclass(frozen=True)
class DegreeSet:
    """Admissible max-degrees: an optional isolated value plus a tail."""

    isolated: int | None
    threshold: int

    def __contains__(self, delta: int) -> bool:
        return delta == self.isolated or delta >= self.threshold

    def __str__(self) -> str:
        tail = f"delta >= {self.threshold}"
        if self.isolated is not None:
            return f"{{{self.isolated}}} or {tail}"
        return tail


@dataclass(frozen=True)
class DeltaSolutionReport:
    """Everything known about the minimal max-degree for one instance.

    ``kind`` is "UNIQUE" (a single minimal interpolant, the
    representative) or "FAMILY" (the representative is one member of the
    family (a2 + p*a1)/(b2 + p*b1) with deg p == family_degree).
    ``node_constraints`` lists, per node, the forbidden value of p there
    (None when the denominator cannot vanish at that node).
    """

    kind: str
    minimal_delta: int
    basis: MinimalBasis
    representative: RationalFunction
    family_degree: int | None
    node_constraints: tuple[tuple[Fraction, Fraction | None], ...]

    def excluded_lambdas(self) -> tuple[Fraction, ...]:
        """Forbidden constant parameters, meaningful when family_degree == 0."""
        banned = {v for _, v in self.node_constraints if v is not None}
        return tuple(sorted(banned))


def critical_indices(trace: EEATrace) -> tuple[int, ...]:
    """All trace indices whose row pair splits n; there are one or two.

    Index i qualifies when deg r_i >= deg s_i and deg s_{i+1} >= deg r_{i+1},
    which by the cumulative degree identities is the straddle condition on
    the quotient degree sums.
    """
    out = []
    for i in range(1, trace.N + 1):
        if (
            trace.r(i).degree >= trace.s(i).degree
            and trace.s(i + 1).degree >= trace.r(i + 1).degree
        ):
            out.append(i)
    assert 1 <= len(out) <= 2, f"critical index count {len(out)}"
    return tuple(out)


def _pair_degree(pair: Pair) -> int:
    return int(max(pair[0].degree, pair[1].degree))


def minimal_basis(data: InterpolationData) -> MinimalBasis:
    """A minimal basis of the weak pairs, from the smallest critical index."""
    n = data.n
    g = hermite_polynomial(data)
    if g.is_zero:
        # all prescribed values are zero: (0, 1) interpolates and the
        # split 0 + n certifies minimality directly
        return MinimalBasis(
            pair1=(ZERO, ONE), pair2=(nodal_poly(data), ZERO),
            mu1=0, mu2=n, critical_index=-1,
        )
    trace = extended_euclid(nodal_poly(data), g)
    i = critical_indices(trace)[0]
    low: Pair = (trace.r(i), trace.s(i))
    high: Pair = (trace.r(i + 1), trace.s(i + 1))
    d_low, d_high = _pair_degree(low), _pair_degree(high)
    if d_high < d_low:
        low, high = high, low
        d_low, d_high = d_high, d_low
    assert d_low + d_high == n
    return MinimalBasis(pair1=low, pair2=high, mu1=d_low, mu2=d_high, critical_index=i)


def _is_unique_case(basis: MinimalBasis) -> bool:
    a1, b1 = basis.pair1
    return basis.mu1 < basis.mu2 and gcd(a1, b1) == ONE


def _family_member(data: InterpolationData, basis: MinimalBasis) -> RationalFunction:
    """The first member of the minimal family under a deterministic scan.

    Candidates p = x**e + k for k = 0, 1, 2, ... keep deg p == e exactly;
    each node forbids at most one k, so the scan ends within l + 1 steps.
    """
    a1, b1 = basis.pair1
    a2, b2 = basis.pair2
    e = basis.mu2 - basis.mu1
    limit = scan_limit(data.node_count + 2)
    for k in range(limit):
        p = monomial(e) + k
        denom = b2 + p * b1
        if any(denom(x) == 0 for x in data.nodes):
            continue
        member = RationalFunction(a2 + p * a1, denom)
        assert member.delta_degree == basis.mu2
        return member
    raise RuntimeError("family member scan exceeded its bound")


def minimal_delta_solutions(data: InterpolationData) -> DeltaSolutionReport:
    """Classify the minimal max-degree solutions for the instance."""
    basis = minimal_basis(data)
    a1, b1 = basis.pair1
    a2, b2 = basis.pair2
    if _is_unique_case(basis):
        return DeltaSolutionReport(
            kind="UNIQUE",
            minimal_delta=basis.mu1,
            basis=basis,
            representative=RationalFunction(a1, b1),
            family_degree=None,
            node_constraints=(),
        )
    constraints = []
    for x in data.nodes:
        if b1(x) != 0:
            constraints.append((x, -b2(x) / b1(x)))
        else:
            constraints.append((x, None))
    return DeltaSolutionReport(
        kind="FAMILY",
        minimal_delta=basis.mu2,
        basis=basis,
        representative=_family_member(data, basis),
        family_degree=basis.mu2 - basis.mu1,
        node_constraints=tuple(constraints),
    )


def admissible_delta_set(data: InterpolationData) -> DegreeSet:
    """The exact set of max-degrees realized by interpolants."""
    basis = minimal_basis(data)
    isolated = basis.mu1 if _is_unique_case(basis) else None
    return DegreeSet(isolated=isolated, threshold=basis.mu2)


def evaluate_parametrization(
    basis: MinimalBasis, p: Poly, q: Poly, data: InterpolationData
) -> RationalFunction:
    """The member (p*a1 + q*a2)/(p*b1 + q*b2), validated at the nodes."""
    if p.is_zero and q.is_zero:
        raise ValueError("(p, q) must not both be zero")
    a1, b1 = basis.pair1
    a2, b2 = basis.pair2
    denom = p * b1 + q * b2
    if denom.is_zero:
        raise ZeroDenominator("the combined denominator is the zero polynomial")
    for x in data.nodes:
        if denom(x) == 0:
            raise DenominatorVanishesAtNode(x)
    return RationalFunction(p * a1 + q * a2, denom)


def sample_solution_of_delta(data: InterpolationData, delta: int) -> RationalFunction:
    """A concrete interpolant whose reduced max-degree is exactly delta."""
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    basis = minimal_basis(data)
    unique = _is_unique_case(basis)
    if not (unique and delta == basis.mu1) and delta < basis.mu2:
        raise DegreeNotAdmissible(
            f"no interpolant has max-degree {delta}; "
            f"admissible: {admissible_delta_set(data)}"
        )
    a1, b1 = basis.pair1
    if unique:
        base = RationalFunction(a1, b1)
        if delta == basis.mu1:
            return base
    else:
        base = _family_member(data, basis)
        if delta == basis.mu2:
            return base
    # climb from the minimal solution: adding lam * x**(delta - mu2) * pair2
    # raises the degree to exactly delta for all but finitely many lam
    a2, b2 = basis.pair2
    shift = monomial(delta - basis.mu2)
    limit = scan_limit(data.n * data.node_count + 2 * delta + 1)
    for lam in range(1, limit + 1):
        denom = base.denom + lam * shift * b2
        if denom.is_zero:
            continue
        candidate = RationalFunction(base.numer + lam * shift * a2, denom)
        if candidate.delta_degree == delta and all(
            candidate.denom(x) != 0 for x in data.nodes
        ):
            return candidate
    raise RuntimeError("degree sample scan exceeded its bound")
