"""Interpolation data with multiplicities and its two canonical polynomials.

An instance prescribes, at each of finitely many distinct nodes x_i, the
values of a function and of its first few derivatives: values[j] is the
j-th derivative value at the node.  Two polynomials are attached to the
instance:

* the node polynomial f = prod (x - x_i)**n_i, monic of degree n, and
* the unique interpolating polynomial g of degree < n (Newton form with
  repeated nodes; confluent divided differences use the prescribed
  derivative values divided by factorials).

A pair (a, b) satisfies the *weak* conditions when f divides a - b*g;
it yields an actual interpolating fraction a/b exactly when, in
addition, b vanishes at no node.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ZeroDenominator
from .exactpoly import ONE, X, ZERO, Poly, Scalar, as_fraction, gcd


@dataclass(frozen=True)
class InterpolationData:
    """Nodes with multiplicities and prescribed derivative values.

    ``points[i] == (x_i, (y_i0, ..., y_i(n_i - 1)))`` where y_ij is the
    required j-th derivative value at x_i.
    """

    points: tuple[tuple[Fraction, tuple[Fraction, ...]], ...]

    def __post_init__(self) -> None:
        if not self.points:
            raise ValueError("at least one interpolation node is required")
        seen = set()
        for x, values in self.points:
            if not values:
                raise ValueError(f"node {x} has no prescribed values")
            if x in seen:
                raise ValueError(f"duplicate node {x}")
            seen.add(x)

    @classmethod
    def from_pairs(cls, pairs) -> "InterpolationData":
        """Build from (node, values) pairs of ints, strings, or Fractions."""
        points = tuple(
            (as_fraction(x), tuple(as_fraction(v) for v in values))
            for x, values in pairs
        )
        return cls(points)

    @property
    def n(self) -> int:
        """Total number of conditions (the sum of the multiplicities)."""
        return sum(len(values) for _, values in self.points)

    @property
    def node_count(self) -> int:
        return len(self.points)

    @property
    def nodes(self) -> tuple[Fraction, ...]:
        return tuple(x for x, _ in self.points)

    # -- JSON schema: {"points": [{"x": "...", "values": ["...", ...]}]} ----

    @classmethod
    def from_json_dict(cls, obj) -> "InterpolationData":
        if not isinstance(obj, dict) or "points" not in obj:
            raise ValueError('interpolation problem must be {"points": [...]}')
        raw = obj["points"]
        if not isinstance(raw, list):
            raise ValueError('"points" must be a JSON array')
        pairs = []
        for item in raw:
            if not isinstance(item, dict) or "x" not in item or "values" not in item:
                raise ValueError('each point must be {"x": ..., "values": [...]}')
            if not isinstance(item["values"], list):
                raise ValueError('"values" must be a JSON array')
            try:
                pairs.append((item["x"], item["values"]))
            except ZeroDivisionError as exc:
                raise ValueError("rational with zero denominator") from exc
        try:
            return cls.from_pairs(pairs)
        except ZeroDivisionError as exc:
            raise ValueError("rational with zero denominator") from exc

    def to_json_dict(self) -> dict:
        return {
            "points": [
                {"x": str(x), "values": [str(v) for v in values]}
                for x, values in self.points
            ]
        }


class RationalFunction:
    """A reduced fraction of polynomials with a monic denominator.

    Construction canonicalizes: the gcd of numerator and denominator is
    divided out and the denominator is rescaled monic, so equal fractions
    compare equal.  The zero function is 0/1.
    """

    __slots__ = ("numer", "denom")

    def __init__(self, numer: Poly, denom: Poly) -> None:
        if denom.is_zero:
            raise ZeroDenominator("zero denominator")
        if numer.is_zero:
            self.numer: Poly = ZERO
            self.denom: Poly = ONE
            return
        common = gcd(numer, denom)
        if common.degree > 0:
            numer = numer.div_rem(common)[0]
            denom = denom.div_rem(common)[0]
        scale = 1 / denom.leading
        self.numer = numer * scale
        self.denom = denom * scale

    @property
    def delta_degree(self) -> int:
        """max(deg numer, deg denom); 0 for the zero function."""
        return max(self.numer.degree, self.denom.degree)

    def __call__(self, x: Scalar) -> Fraction:
        bottom = self.denom(x)
        if bottom == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.numer(x) / bottom

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalFunction):
            return self.numer == other.numer and self.denom == other.denom
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.numer, self.denom))

    def __str__(self) -> str:
        if self.denom == ONE:
            return str(self.numer)
        top = str(self.numer)
        if " " in top:
            top = f"({top})"
        return f"{top}/({self.denom})"

    def __repr__(self) -> str:
        return f"RationalFunction({self.numer!r}, {self.denom!r})"

    def to_json(self) -> dict:
        return {"numer": self.numer.to_json(), "denom": self.denom.to_json()}


@lru_cache(maxsize=None)
def nodal_poly(data: InterpolationData) -> Poly:
    """The monic polynomial vanishing to the prescribed order at each node."""
    f = ONE
    for x, values in data.points:
        f = f * (X - x) ** len(values)
    return f


@lru_cache(maxsize=None)
def hermite_polynomial(data: InterpolationData) -> Poly:
    """The unique polynomial of degree < n matching all prescribed values.

    Newton form over the node sequence with repetitions; a divided
    difference over j+1 copies of the same node is y_ij / j!.
    """
    z: list[Fraction] = []
    vals: list[tuple[Fraction, ...]] = []
    for x, values in data.points:
        for _ in values:
            z.append(x)
            vals.append(values)
    n = len(z)
    col = [vals[i][0] for i in range(n)]
    newton_coeffs = [col[0]]
    factorial = 1
    for j in range(1, n):
        factorial *= j
        nxt = []
        for i in range(n - j):
            if z[i] == z[i + j]:
                nxt.append(vals[i][j] / factorial)
            else:
                nxt.append((col[i + 1] - col[i]) / (z[i + j] - z[i]))
        col = nxt
        newton_coeffs.append(col[0])
    g = ZERO
    basis = ONE
    for j in range(n):
        g = g + newton_coeffs[j] * basis
        basis = basis * (X - z[j])
    return g


def check_weak(a: Poly, b: Poly, data: InterpolationData) -> bool:
    """True iff the node polynomial divides a - b*g."""
    residue = a - b * hermite_polynomial(data)
    return residue.div_rem(nodal_poly(data))[1].is_zero


def check_interpolates(rf: RationalFunction, data: InterpolationData) -> bool:
    """True iff rf matches every prescribed value and is defined at every node."""
    if not check_weak(rf.numer, rf.denom, data):
        return False
    return all(rf.denom(x) != 0 for x in data.nodes)


def weak_cofactor(a: Poly, b: Poly, data: InterpolationData) -> Poly:
    """The unique c with a == b*g + c*f, for a pair satisfying the weak conditions."""
    q, r = (a - b * hermite_polynomial(data)).div_rem(nodal_poly(data))
    if not r.is_zero:
        raise ValueError("pair does not satisfy the weak interpolation conditions")
    return q
