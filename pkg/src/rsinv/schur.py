"""Partitions, Schur characters and GL_d-module series of the graded algebras.

A partition is a plain tuple of positive ints in weakly decreasing order;
``()`` is the partition of 0.  Characters of W_d(lambda) at a rational
matrix are computed from complete homogeneous traces (read off
``1/det(I - g t)``) via the Jacobi-Trudi determinant, so no eigenvalues are
ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exact import Matrix, PowerSeries, det, det_one_minus_gt, series_invert

Partition = tuple


def partition(parts) -> Partition:
    p = tuple(int(x) for x in parts)
    if any(x < 1 for x in p) or any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"not a partition: {p}")
    return p


def partitions_of(n: int, max_parts: int | None = None) -> list[Partition]:
    """Partitions of n with at most ``max_parts`` parts, in reverse lex order."""
    if max_parts is None:
        max_parts = n

    def gen(rest, largest, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, largest), 0, -1):
            for tail in gen(rest - first, first, slots - 1):
                yield (first,) + tail

    return list(gen(n, n, max_parts))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def weyl_dim(lam: Partition, d: int) -> int:
    """dim W_d(lambda) by the hook-content formula."""
    lam = partition(lam)
    if len(lam) > d:
        raise ValueError(f"partition {lam} has more than {d} parts")
    conj = conjugate(lam)
    num = den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= d + j - i
            den *= (row - j - 1) + (conj[j] - i - 1) + 1
    return num // den


def branch_add_box(lam: Partition, d: int) -> list[Partition]:
    """Partitions with at most d parts obtained by adding one box to lambda."""
    lam = partition(lam)
    if len(lam) > d:
        raise ValueError(f"partition {lam} has more than {d} parts")
    out = []
    for i in range(len(lam)):
        if i == 0 or lam[i - 1] > lam[i]:
            out.append(lam[:i] + (lam[i] + 1,) + lam[i + 1:])
    if len(lam) < d:
        out.append(lam + (1,))
    return out


@lru_cache(maxsize=4096)
def complete_traces(g: Matrix, N: int) -> PowerSeries:
    """h_n(g) = trace of g on the n-th symmetric power, n = 0..N."""
    return series_invert(det_one_minus_gt(g, N))


def schur_char(lam: Partition, g: Matrix) -> Fraction:
    """Trace of g on W_d(lambda) via Jacobi-Trudi: det(h_{lam_i - i + j})."""
    lam = partition(lam)
    d = len(g)
    if len(g[0]) != d:
        raise ValueError("g must be square")
    if len(lam) > d:
        raise ValueError(f"partition {lam} has more than {d} parts")
    k = len(lam)
    if k == 0:
        return Fraction(1)
    h = complete_traces(g, sum(lam) + k)

    def hh(m):
        return h[m] if m >= 0 else Fraction(0)

    return det(tuple(tuple(hh(lam[i] - i + j) for j in range(k)) for i in range(k)))


# --------------------------------------------------------------------------
# graded multiplicity series

@dataclass(frozen=True)
class SymmSeries:
    """Graded GL_d-module: multiplicity of each W_d(lambda), |lambda| <= N."""

    d: int
    N: int
    mults: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, m in self.mults.items():
            lam = partition(lam)
            if len(lam) > self.d or sum(lam) > self.N:
                continue
            if m:
                clean[lam] = int(m)
        object.__setattr__(self, "mults", dict(sorted(clean.items(), key=_order_key)))

    def __eq__(self, other):
        if not isinstance(other, SymmSeries):
            return NotImplemented
        return (self.d, self.N, self.mults) == (other.d, other.N, other.mults)

    def __hash__(self):
        return hash((self.d, self.N, tuple(self.mults.items())))

    def terms(self, n: int) -> dict:
        return {lam: m for lam, m in self.mults.items() if sum(lam) == n}

    def dims(self) -> list[int]:
        """Plain Hilbert series coefficients for degrees 0..N."""
        out = [0] * (self.N + 1)
        for lam, m in self.mults.items():
            out[sum(lam)] += m * weyl_dim(lam, self.d)
        return out

    def restrict(self, lo: int = 0, hi: int | None = None) -> "SymmSeries":
        hi = self.N if hi is None else hi
        return SymmSeries(self.d, hi, {lam: m for lam, m in self.mults.items() if lo <= sum(lam) <= hi})

    def _combine(self, other, sign):
        if self.d != other.d:
            raise ValueError("series over different d")
        N = min(self.N, other.N)
        out = dict(self.restrict(0, N).mults)
        for lam, m in other.restrict(0, N).mults.items():
            out[lam] = out.get(lam, 0) + sign * m
        return SymmSeries(self.d, N, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def to_text(self) -> str:
        return "\n".join(f"{_fmt_partition(lam)}: {m}" for lam, m in self.mults.items())

    @classmethod
    def from_text(cls, text: str, d: int, N: int) -> "SymmSeries":
        mults = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            lhs, _, rhs = line.rpartition(":")
            lam = () if lhs.strip() == "0" else tuple(int(x) for x in lhs.split(","))
            mults[lam] = int(rhs)
        return cls(d, N, mults)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "N": self.N,
            "terms": [{"partition": list(lam), "mult": m} for lam, m in self.mults.items()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SymmSeries":
        return cls(int(obj["d"]), int(obj["N"]),
                   {tuple(t["partition"]): int(t["mult"]) for t in obj["terms"]})


def _order_key(item):
    lam = item[0]
    return (sum(lam), tuple(-x for x in lam))


def _fmt_partition(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "0"


def glmodule_series_L(d: int, N: int) -> SymmSeries:
    """W(1) + sum_{n>=2} (W(n) + W(n-1,1)) for the left-nilpotent right-symmetric algebra."""
    if d < 2 or N < 1:
        raise ValueError("need d >= 2 and N >= 1")
    mults = {(1,): 1}
    for n in range(2, N + 1):
        mults[(n,)] = 1
        mults[(n - 1, 1)] = 1
    return SymmSeries(d, N, mults)


def glmodule_series_metabelian(d: int, N: int) -> SymmSeries:
    if d < 2 or N < 1:
        raise ValueError("need d >= 2 and N >= 1")
    mults = {(1,): 1}
    for n in range(2, N + 1):
        mults[(n - 1, 1)] = 1
    return SymmSeries(d, N, mults)


def glmodule_series_poly(d: int, N: int) -> SymmSeries:
    if d < 1 or N < 0:
        raise ValueError("need d >= 1 and N >= 0")
    return SymmSeries(d, N, {(n,) if n else (): 1 for n in range(N + 1)})


GLMODULE_SERIES = {
    "L": glmodule_series_L,
    "metabelian": glmodule_series_metabelian,
    "poly": glmodule_series_poly,
}


def series_eval_at_element(s: SymmSeries, g: Matrix) -> PowerSeries:
    """sum_n (sum_{|lambda|=n} m_lambda * S_lambda(eigenvalues of g)) z^n."""
    if len(g) != s.d:
        raise ValueError("matrix size does not match series d")
    coeffs = [Fraction(0)] * (s.N + 1)
    for lam, m in s.mults.items():
        coeffs[sum(lam)] += m * schur_char(lam, g)
    return PowerSeries(tuple(coeffs))


def monomial_count(n: int, d: int) -> int:
    return comb(n + d - 1, d - 1)
