"""Brute-force ground truth by exact linear algebra, independent of the
remainder-sequence machinery.

Weak pairs of bounded degree are the nullspace of the linear system that
states every prescribed derivative condition directly on the unknown
coefficients of (a, b) -- the interpolating polynomial g never enters,
so agreement with the trace-based solvers is evidence rather than a
tautology.  Moving lines of bounded degree are likewise a nullspace.
Elimination clears denominators and proceeds fraction-free over the
integers; back-substitution is exact over the rationals.

Admissible degree sums below n are decided split by split: the valid
members of a solution space (exact top degrees, denominator nonzero at
the nodes, coprime) form the complement of finitely many hypersurfaces,
so a full scan of a grid larger than the product degree either exhibits
a member or proves there is none.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .exactpoly import Poly
from .hermite import InterpolationData
from .mubasis import PlaneParametrization


@dataclass
class LinearSystem:
    """Rows of exact rational conditions over a described unknown vector."""

    matrix: list[list[Fraction]]
    unknowns: str


# -- fraction-free elimination ------------------------------------------------


def _cleared(row: list[Fraction]) -> list[int]:
    denom = math.lcm(*(c.denominator for c in row)) if row else 1
    return [int(c * denom) for c in row]


def _row_echelon_ff(rows: list[list[int]], pivot_width: int):
    """Bareiss fraction-free echelon form; pivots only in the first columns."""
    m = [list(r) for r in rows]
    piv_cols: list[int] = []
    rank = 0
    prev = 1
    for c in range(pivot_width):
        pivot_row = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        width = len(m[rank])
        # the update must hit every row below, zero head included: rows are
        # rescaled by the pivot so the next division by `prev` stays exact
        for i in range(rank + 1, len(m)):
            head = m[i][c]
            for j in range(c + 1, width):
                m[i][j] = (m[i][j] * m[rank][c] - head * m[rank][j]) // prev
            m[i][c] = 0
        prev = m[rank][c]
        piv_cols.append(c)
        rank += 1
        if rank == len(m):
            break
    return m[:rank], piv_cols


def nullspace(matrix: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Exact basis of the right nullspace, one vector per free column."""
    rows = [r for r in matrix if any(c != 0 for c in r)]
    if not rows:
        return [
            [Fraction(1) if j == i else Fraction(0) for j in range(ncols)]
            for i in range(ncols)
        ]
    ech, piv_cols = _row_echelon_ff([_cleared(r) for r in rows], ncols)
    pivots = set(piv_cols)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in reversed(list(zip(ech, piv_cols))):
            acc = sum((Fraction(row[j]) * v[j] for j in range(pc + 1, ncols)), Fraction(0))
            v[pc] = -acc / row[pc]
        for r in rows:
            assert sum((c * x for c, x in zip(r, v)), Fraction(0)) == 0
        basis.append(v)
    return basis


def solve_linear(
    matrix: list[list[Fraction]], rhs: list[Fraction]
) -> list[Fraction] | None:
    """One exact solution (free unknowns zero), or None when inconsistent."""
    ncols = len(matrix[0]) if matrix else 0
    aug = [list(r) + [v] for r, v in zip(matrix, rhs)]
    aug = [r for r in aug if any(c != 0 for c in r)]
    if not aug:
        return [Fraction(0)] * ncols
    ech, piv_cols = _row_echelon_ff([_cleared(r) for r in aug], ncols)
    # back-substitute with free unknowns at zero, then verify against the
    # original system; verification subsumes the inconsistency check
    x = [Fraction(0)] * ncols
    for row, pc in reversed(list(zip(ech, piv_cols))):
        acc = sum((Fraction(row[j]) * x[j] for j in range(pc + 1, ncols)), Fraction(0))
        x[pc] = (Fraction(row[ncols]) - acc) / row[pc]
    for r, v in zip(matrix, rhs):
        if sum((c * xi for c, xi in zip(r, x)), Fraction(0)) != v:
            return None
    return x


# -- weak interpolation pairs -------------------------------------------------


def weak_system(data: InterpolationData, da: int, db: int) -> LinearSystem:
    """Linearized derivative conditions on coefficients (a_0..a_da, b_0..b_db).

    Row (i, j) states (a - b*g)^(j)(x_i) = 0 using only the prescribed
    values: the g-derivatives of order <= j at x_i are the data itself.
    """
    rows = []
    for x, values in data.points:
        for j in range(len(values)):
            row = []
            for k in range(da + 1):
                row.append(
                    Fraction(math.perm(k, j)) * x ** (k - j) if k >= j else Fraction(0)
                )
            for k in range(db + 1):
                acc = Fraction(0)
                for t in range(min(j, k) + 1):
                    acc += math.comb(j, t) * values[j - t] * math.perm(k, t) * x ** (k - t)
                row.append(-acc)
            rows.append(row)
    return LinearSystem(matrix=rows, unknowns=f"a_0..a_{da}, b_0..b_{db}")


def weak_pairs_upto(
    data: InterpolationData, da: int, db: int
) -> list[tuple[Poly, Poly]]:
    """Exact basis of the weak pairs with deg a <= da and deg b <= db."""
    system = weak_system(data, da, db)
    vectors = nullspace(system.matrix, da + db + 2)
    return [(Poly(v[: da + 1]), Poly(v[da + 1 :])) for v in vectors]


def min_degree_weak_pair(data: InterpolationData) -> int:
    """Smallest max-degree of a nonzero weak pair."""
    for delta in range(data.n + 1):
        if weak_pairs_upto(data, delta, delta):
            return delta
    raise AssertionError("no weak pair up to degree n")  # pragma: no cover


def express_in_pair_basis(
    pair: tuple[Poly, Poly],
    basis1: tuple[Poly, Poly],
    basis2: tuple[Poly, Poly],
    dp: int,
    dq: int,
) -> tuple[Poly, Poly] | None:
    """Solve pair == p*basis1 + q*basis2 with deg p <= dp, deg q <= dq."""
    np_, nq = max(dp + 1, 0), max(dq + 1, 0)
    degrees = [
        int(max(g.degree, 0))
        for g in (*pair, *basis1, *basis2)
        if not g.is_zero
    ]
    width = (max(degrees) if degrees else 0) + max(dp, dq, 0) + 1
    rows = []
    rhs = []
    for target, g1, g2 in ((pair[0], basis1[0], basis2[0]), (pair[1], basis1[1], basis2[1])):
        for m in range(width):
            row = [g1.coeff(m - k) for k in range(np_)]
            row += [g2.coeff(m - k) for k in range(nq)]
            rows.append(row)
            rhs.append(target.coeff(m))
    solution = solve_linear(rows, rhs)
    if solution is None:
        return None
    return Poly(solution[:np_]), Poly(solution[np_:])


# -- degree sums below n ------------------------------------------------------


def _coprime(a: Poly, b: Poly) -> bool:
    """Coprimality by elimination, keeping this module free of gcd routines.

    Nonzero a, b share a factor iff some u*a + v*b == 0 with
    deg u < deg b and deg v < deg a, i.e. iff the Sylvester-style
    system has a nonzero kernel.
    """
    if a.is_zero:
        return not b.is_zero and b.degree == 0
    if b.is_zero:
        return a.degree == 0
    da, db = a.degree, b.degree
    if da == 0 or db == 0:
        return True
    rows = []
    for m in range(da + db):
        row = [a.coeff(m - k) for k in range(db)]
        row += [b.coeff(m - k) for k in range(da)]
        rows.append(row)
    return not nullspace(rows, da + db)


def _split_has_interpolant(data: InterpolationData, da: int, db: int) -> bool:
    """Is there an interpolant with numerator degree exactly da and
    denominator degree exactly db, in lowest terms?

    The solution space is scanned over a grid large enough that the
    product of the finitely many disqualifying polynomials (degree
    drops, node zeros, a common factor) cannot vanish everywhere on it
    unless one of them vanishes identically.
    """
    basis = weak_pairs_upto(data, da, db)
    if not basis:
        return False
    nodes = data.nodes
    # identically-failing linear conditions end the search early;
    # the zero numerator is still a valid reduced fraction when db == 0
    if (da > 0 or db > 0) and all(a.coeff(da) == 0 for a, _ in basis):
        return False
    if all(b.coeff(db) == 0 for _, b in basis):
        return False
    for x in nodes:
        if all(b(x) == 0 for _, b in basis):
            return False
    grid_size = 2 + len(nodes) + da + db + 1
    for lams in itertools.product(range(grid_size), repeat=len(basis)):
        if not any(lams):
            continue
        a = Poly(())
        b = Poly(())
        for lam, (ba, bb) in zip(lams, basis):
            if lam:
                a = a + lam * ba
                b = b + lam * bb
        if a.is_zero:
            if da != 0:
                continue
        elif a.degree != da:
            continue
        if b.is_zero or b.degree != db:
            continue
        if any(b(x) == 0 for x in nodes):
            continue
        if not _coprime(a, b):
            continue
        return True
    return False


def kappa_values_below_n(data: InterpolationData) -> set[int]:
    """Exhaustively found degree sums of interpolants below n."""
    found = set()
    for kappa in range(data.n):
        if any(
            _split_has_interpolant(data, da, kappa - da) for da in range(kappa + 1)
        ):
            found.add(kappa)
    return found


# -- moving lines -------------------------------------------------------------


def min_mu_oracle(param: PlaneParametrization) -> int:
    """Smallest degree of a nonzero moving line, by direct nullspace search.

    At candidate degree d the unknowns are the coefficients of u and v;
    w = -(u*r0 + v*r1) absorbs everything of degree <= d, so the
    conditions are the coefficients of u*r0 + v*r1 in degrees d+1..d+n.
    """
    n = param.n
    for d in range(n + 1):
        rows = []
        for m in range(d + 1, d + n + 1):
            row = [param.r0.coeff(m - k) for k in range(d + 1)]
            row += [param.r1.coeff(m - k) for k in range(d + 1)]
            rows.append(row)
        if nullspace(rows, 2 * (d + 1)):
            return d
    raise AssertionError("no moving line up to degree n")  # pragma: no cover
