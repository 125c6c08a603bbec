"""Minimal-degree moving lines of a polynomial plane parametrization.

A moving line u(x)*T0 + v(x)*T1 + w(x) follows the parametrization
t -> (r0(t), r1(t)) when u*r0 + v*r1 + w = 0, i.e. (u, v, w) is a
relation among (r0, r1, 1).  The rows of the remainder trace of
(r0, r1) supply such relations, (t_i, s_i, -r_i), and at the index
where consecutive row degrees split n = deg r0 the two rows form a
basis of all moving lines with degrees mu and n - mu, mu minimal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .eea import EEATrace, extended_euclid
from .exactpoly import ONE, ZERO, Poly

_SLOTS = ("T0", "T1", "T2")


@dataclass(frozen=True)
class PlaneParametrization:
    """t -> (r0(t), r1(t)) with deg r0 >= deg r1 and r0 nonconstant."""

    r0: Poly
    r1: Poly

    def __post_init__(self) -> None:
        if self.r0.is_zero or self.r0.degree < 1:
            raise ValueError("r0 must be nonconstant")
        if self.r0.degree < self.r1.degree:
            raise ValueError("inputs must satisfy deg r0 >= deg r1")

    @property
    def n(self) -> int:
        return self.r0.degree


@dataclass(frozen=True)
class MovingLine:
    """The line ct0(x)*T0 + ct1(x)*T1 + c1(x)."""

    ct0: Poly
    ct1: Poly
    c1: Poly

    @property
    def degree(self) -> int | float:
        return max(self.ct0.degree, self.ct1.degree, self.c1.degree)

    def __str__(self) -> str:
        return _line_str([(self.ct0, "T0"), (self.ct1, "T1"), (self.c1, "")])


@dataclass(frozen=True)
class MuBasis:
    """Two moving lines of degrees mu <= n - mu generating all of them."""

    mu: int
    low: MovingLine
    high: MovingLine


def _row_degree(trace: EEATrace, i: int) -> int:
    return int(max(trace.r(i).degree, trace.s(i).degree))


def mu_basis(param: PlaneParametrization) -> MuBasis:
    """Minimal-degree basis of the moving lines of the parametrization."""
    n = param.n
    if param.r1.is_zero:
        # T1 alone is a relation of degree 0 when the second coordinate vanishes
        return MuBasis(
            mu=0,
            low=MovingLine(ZERO, ONE, ZERO),
            high=MovingLine(ONE, ZERO, -param.r0),
        )
    trace = extended_euclid(param.r0, param.r1)
    for i in range(trace.N + 1):
        d0 = _row_degree(trace, i)
        d1 = _row_degree(trace, i + 1)
        if d0 + d1 != n:
            continue
        first = MovingLine(trace.t(i), trace.s(i), -trace.r(i))
        second = MovingLine(trace.t(i + 1), trace.s(i + 1), -trace.r(i + 1))
        if d1 < d0:
            first, second = second, first
            d0, d1 = d1, d0
        return MuBasis(mu=d0, low=first, high=second)
    raise AssertionError("no degree split in the trace; broken remainder sequence")


def verify_moving_line(line: MovingLine, param: PlaneParametrization) -> bool:
    """True iff the line vanishes identically along the parametrization."""
    return (line.ct0 * param.r0 + line.ct1 * param.r1 + line.c1).is_zero


def cross_product_certificate(basis: MuBasis, param: PlaneParametrization) -> bool:
    """True iff the cross product of the two coefficient triples is +-(r0, r1, 1).

    This is the determinant identity that makes a row pair a basis; it
    fails for any pair of lines that merely happen to follow the curve.
    """
    u = (basis.low.ct0, basis.low.ct1, basis.low.c1)
    v = (basis.high.ct0, basis.high.ct1, basis.high.c1)
    cross = (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )
    target = (param.r0, param.r1, ONE)
    return cross == target or cross == tuple(-p for p in target)


# -- display helpers ---------------------------------------------------------


def _monomial_str(coeff, x_power: int, z_power: int = 0) -> str:
    mag = abs(coeff)
    factors = []
    if mag != 1 or (x_power == 0 and z_power == 0):
        factors.append(str(mag))
    if x_power:
        factors.append("x" if x_power == 1 else f"x^{x_power}")
    if z_power:
        factors.append("z" if z_power == 1 else f"z^{z_power}")
    body = "*".join(factors)
    return body if coeff > 0 else f"-{body}"


def _join_signed(terms: list[str]) -> str:
    out = terms[0]
    for term in terms[1:]:
        if term.startswith("-"):
            out += f" - {term[1:]}"
        else:
            out += f" + {term}"
    return out


def _line_str(slots: list[tuple[Poly, str]], homogeneous_degree: int | None = None) -> str:
    terms: list[str] = []
    for poly, label in slots:
        if poly.is_zero:
            continue
        monos = []
        for k in range(len(poly.coeffs) - 1, -1, -1):
            c = poly.coeff(k)
            if c == 0:
                continue
            z_power = 0 if homogeneous_degree is None else homogeneous_degree - k
            monos.append(_monomial_str(c, k, z_power))
        if not label:
            terms.extend(monos)
        elif len(monos) == 1:
            body = monos[0]
            if body == "1":
                terms.append(label)
            elif body == "-1":
                terms.append(f"-{label}")
            else:
                terms.append(f"{body}*{label}")
        else:
            terms.append(f"({_join_signed(monos)})*{label}")
    if not terms:
        return "0"
    return _join_signed(terms)


def projective_form(line: MovingLine, degree: int | None = None) -> str:
    """Render with each coefficient homogenized by z to the line's degree.

    The constant slot becomes the T2 coefficient.  Display only; no
    homogeneous arithmetic is performed.
    """
    d = int(line.degree) if degree is None else degree
    return _line_str(
        [(line.ct0, "T0"), (line.ct1, "T1"), (line.c1, "T2")],
        homogeneous_degree=d,
    )
