"""The extended Euclidean algorithm with its full cofactor trace.

Starting from r0, r1 the remainder recurrence

    r_i = q_{i+1} * r_{i+1} + r_{i+2}

runs until r_{N+1} = 0, while the cofactor rows evolve by the same
recurrence from (s0, t0) = (0, 1) and (s1, t1) = (1, 0), so that

    r_i = s_i * r1 + t_i * r0      for every i.

The trace keeps every row and every quotient; remainders are stored
exactly as produced (no monic rescaling), since downstream consumers
depend on the raw values.

``decompose`` inverts the trace: any triple (a, b, c) with
a = r1*b + r0*c has a unique expansion a, b, c = sum m_i * (r_i, s_i, t_i)
with deg m_i < deg q_i for 1 <= i <= N.  Because the s-degrees increase
in steps of exactly deg q_i, the m_i fall out of repeated Euclidean
division of b by the s_i from the top down, and m_0 is then fixed by c.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeTie, NotASyzygy, ZeroSecondInput
from .exactpoly import ONE, ZERO, Poly


@dataclass(frozen=True)
class EEATrace:
    """Rows (r_i, s_i, t_i) for i = 0..N+1 and quotients q_1..q_N."""

    rows: tuple[tuple[Poly, Poly, Poly], ...]
    quotients: tuple[Poly, ...]

    @property
    def N(self) -> int:
        return len(self.quotients)

    @property
    def n(self) -> int:
        return self.rows[0][0].degree

    def r(self, i: int) -> Poly:
        return self.rows[i][0]

    def s(self, i: int) -> Poly:
        return self.rows[i][1]

    def t(self, i: int) -> Poly:
        return self.rows[i][2]

    def q(self, i: int) -> Poly:
        """Quotient q_i, 1-indexed: r_{i-1} = q_i * r_i + r_{i+1}."""
        return self.quotients[i - 1]

    def check_invariants(self) -> None:
        """Assert every structural identity of the trace; for test use."""
        N = self.N
        assert len(self.rows) == N + 2
        assert self.r(N + 1).is_zero and not self.r(N).is_zero
        r0, r1 = self.r(0), self.r(1)
        for i in range(1, N + 1):
            assert self.r(i).degree > self.r(i + 1).degree, f"degree not dropping at {i}"
        # defining recurrence and quotient degrees
        for i in range(1, N + 1):
            assert self.r(i - 1) == self.q(i) * self.r(i) + self.r(i + 1)
            if i >= 2 or r0.degree > r1.degree:
                assert self.q(i).degree >= 1, f"constant quotient q_{i}"
        # row identity r_i = s_i*r1 + t_i*r0
        for i in range(N + 2):
            assert self.r(i) == self.s(i) * r1 + self.t(i) * r0, f"row identity fails at {i}"
        # cumulative degree identities
        qsum = 0
        for i in range(1, N + 1):
            qsum += self.q(i).degree
            assert self.r(i).degree == r0.degree - qsum, f"r-degree identity fails at {i}"
        qsum = 0
        for i in range(2, N + 2):
            qsum += self.q(i - 1).degree
            assert self.s(i).degree == qsum, f"s-degree identity fails at {i}"
        # consecutive rows are unimodular, and the 2x2 minors reproduce the inputs
        for i in range(N + 1):
            sign = 1 if i % 2 == 0 else -1
            assert self.s(i) * self.t(i + 1) - self.s(i + 1) * self.t(i) == -sign
            assert self.r(i) * self.s(i + 1) - self.r(i + 1) * self.s(i) == sign * r0
            assert self.r(i + 1) * self.t(i) - self.r(i) * self.t(i + 1) == sign * r1


@dataclass(frozen=True)
class Decomposition:
    """Coordinates m_0..m_{N+1} of a triple in the trace-row basis."""

    m: tuple[Poly, ...]


def extended_euclid(r0: Poly, r1: Poly) -> EEATrace:
    """Run the algorithm on r0, r1 with deg r0 >= deg r1 >= 0."""
    if r1.is_zero:
        raise ZeroSecondInput("the second input polynomial is zero")
    if r0.is_zero or r0.degree < r1.degree:
        raise ValueError("inputs must satisfy deg r0 >= deg r1 >= 0, both nonzero")
    rows = [(r0, ZERO, ONE), (r1, ONE, ZERO)]
    quotients = []
    while not rows[-1][0].is_zero:
        prev_r, prev_s, prev_t = rows[-2]
        cur_r, cur_s, cur_t = rows[-1]
        q, rem = prev_r.div_rem(cur_r)
        quotients.append(q)
        rows.append((rem, prev_s - q * cur_s, prev_t - q * cur_t))
    return EEATrace(rows=tuple(rows), quotients=tuple(quotients))


def decompose(a: Poly, b: Poly, c: Poly, trace: EEATrace) -> Decomposition:
    """Expand (a, b, c) with a = r1*b + r0*c in the trace-row basis."""
    r0, r1 = trace.r(0), trace.r(1)
    if r0.degree == r1.degree:
        raise DegreeTie("decomposition requires deg r0 > deg r1")
    if a != r1 * b + r0 * c:
        raise NotASyzygy("triple does not satisfy a = r1*b + r0*c")
    N = trace.N
    m: list[Poly] = [ZERO] * (N + 2)
    rem = b
    for i in range(N + 1, 1, -1):
        m[i], rem = rem.div_rem(trace.s(i))
    m[1] = rem  # s_1 == 1
    residue = c
    for i in range(1, N + 2):
        residue = residue - m[i] * trace.t(i)
    m[0] = residue  # t_0 == 1
    for i in range(1, N + 1):
        # automatic for genuine syzygies; a violation means a broken trace
        assert m[i].degree < trace.q(i).degree
    return Decomposition(tuple(m))


def recombine(dec: Decomposition, trace: EEATrace) -> tuple[Poly, Poly, Poly]:
    """Sum m_i * (r_i, s_i, t_i) back into a triple."""
    if len(dec.m) != trace.N + 2:
        raise ValueError("decomposition length does not match the trace")
    a = b = c = ZERO
    for m_i, (r_i, s_i, t_i) in zip(dec.m, trace.rows):
        a = a + m_i * r_i
        b = b + m_i * s_i
        c = c + m_i * t_i
    return a, b, c


def syzygy_basis_pair(
    trace: EEATrace, i: int
) -> tuple[tuple[Poly, Poly, Poly], tuple[Poly, Poly, Poly]]:
    """Rows i and i+1, a module basis of the relations among (1, -r1, -r0)."""
    if not 0 <= i <= trace.N - 1:
        raise IndexError(f"row pair index {i} outside 0..{trace.N - 1}")
    return trace.rows[i], trace.rows[i + 1]
