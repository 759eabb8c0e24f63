"""Exact rational scalars, matrices, truncated power series and subspaces.

Scalars are :class:`fractions.Fraction`.  Matrices are tuples of row tuples
so they are hashable and can key caches.  A :class:`Subspace` keeps its
basis in reduced row-echelon form, which makes equality of subspaces a
plain ``==``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple  # tuple of Fraction
Matrix = tuple  # tuple of row tuples of Fraction


# --------------------------------------------------------------------------
# scalars

def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction."""
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    s = text.strip()
    num, slash, den = s.partition("/")
    try:
        if slash:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def json_number(q):
    """Integers stay JSON ints; proper fractions become ``"p/q"`` strings."""
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else format_rational(q)


# --------------------------------------------------------------------------
# matrices

def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    m = tuple(tuple(parse_rational(x) if isinstance(x, str) else Fraction(x) for x in row)
              for row in rows)
    if not m or not m[0]:
        raise ValueError("matrix must have at least one row and column")
    width = len(m[0])
    if any(len(r) != width for r in m):
        raise ValueError("matrix rows have different lengths")
    return m


def identity(n: int) -> Matrix:
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zero_matrix(rows: int, cols: int) -> Matrix:
    return tuple((Fraction(0),) * cols for _ in range(rows))


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), len(m[0])


def is_square(m: Matrix) -> bool:
    return len(m) == len(m[0])


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise ValueError("incompatible shapes")
    bt = list(zip(*b))
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append(tuple(sum((x * col[k] for k, x in nz), Fraction(0)) for col in bt))
    return tuple(out)


def mat_vec(a: Matrix, v: Sequence) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: Matrix) -> Matrix:
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def mat_pow(a: Matrix, k: int) -> Matrix:
    result = identity(len(a))
    for _ in range(k):
        result = mat_mul(result, a)
    return result


def rref(rows: Iterable[Sequence], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    work = [[Fraction(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        p = next((i for i in range(r, len(work)) if work[i][c]), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        prow = work[r]
        inv = 1 / prow[c]
        if inv != 1:
            for k in range(c, ncols):
                if prow[k]:
                    prow[k] *= inv
        support = [k for k in range(c, ncols) if prow[k]]
        for i in range(len(work)):
            if i != r:
                f = work[i][c]
                if f:
                    row = work[i]
                    for k in support:
                        row[k] -= f * prow[k]
        pivots.append(c)
        r += 1
    return work[:r], pivots


def rank(m: Matrix) -> int:
    return len(rref(m, len(m[0]))[1])


def det(m: Matrix) -> Fraction:
    """Determinant by Gaussian elimination over Q."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    a = [list(r) for r in m]
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            result = -result
        piv = a[c][c]
        result *= piv
        for i in range(c + 1, n):
            f = a[i][c] / piv
            if f:
                for k in range(c, n):
                    a[i][k] -= f * a[c][k]
    return result


# --------------------------------------------------------------------------
# subspaces

@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^ambient with an RREF basis (so ``==`` is subspace equality)."""

    ambient: int
    basis: tuple = ()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, v) -> bool:
        return span([*self.basis, tuple(v)], self.ambient).dim == self.dim

    def contains_space(self, other: "Subspace") -> bool:
        return span([*self.basis, *other.basis], self.ambient).dim == self.dim

    def __add__(self, other: "Subspace") -> "Subspace":
        return span([*self.basis, *other.basis], self.ambient)


def span(vectors: Iterable[Sequence], ambient: int) -> Subspace:
    vecs = [tuple(Fraction(x) for x in v) for v in vectors]
    for v in vecs:
        if len(v) != ambient:
            raise ValueError("vector length does not match ambient dimension")
    if not vecs or ambient == 0:
        return Subspace(ambient)
    rows, _ = rref(vecs, ambient)
    return Subspace(ambient, tuple(tuple(r) for r in rows))


def full_space(n: int) -> Subspace:
    return Subspace(n, identity(n)) if n else Subspace(0)


def kernel_basis(m: Matrix) -> Subspace:
    """Null space ``{v : m v = 0}``, returned in canonical (RREF) form."""
    cols = len(m[0])
    rows, pivots = rref(m, cols)
    free = [c for c in range(cols) if c not in set(pivots)]
    vecs = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        vecs.append(v)
    return span(vecs, cols)


def span_complement(space: Subspace, sub: Subspace) -> list[Vector]:
    """Vectors of ``space`` that extend a basis of ``sub`` to a basis of ``space``."""
    if space.ambient != sub.ambient:
        raise ValueError("ambient dimensions differ")
    if not space.contains_space(sub):
        raise ValueError("sub is not contained in space")
    current = sub
    extra = []
    for v in space.basis:
        grown = current + span([v], space.ambient)
        if grown.dim > current.dim:
            extra.append(v)
            current = grown
    return extra


# --------------------------------------------------------------------------
# truncated power series

@dataclass(frozen=True)
class PowerSeries:
    """Univariate power series truncated after degree ``N``."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("power series needs at least the constant term")

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, N: int) -> "PowerSeries":
        c = list(coeffs)[: N + 1]
        c += [0] * (N + 1 - len(c))
        return cls(tuple(c))

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.N, other.N)
        return PowerSeries(tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.N, other.N)
        return PowerSeries(tuple(a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs)))

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries(tuple(Fraction(other) * a for a in self.coeffs))
        n = min(self.N, other.N)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            out.append(sum((a[i] * b[k - i] for i in range(k + 1) if a[i] and b[k - i]), Fraction(0)))
        return PowerSeries(tuple(out))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return ", ".join(format_rational(c) for c in self.coeffs)


def series_invert(p: PowerSeries) -> PowerSeries:
    """Multiplicative inverse of a series with nonzero constant term."""
    c0 = p.coeffs[0]
    if c0 == 0:
        raise ZeroDivisionError("constant term is zero")
    inv = [1 / c0]
    for n in range(1, p.N + 1):
        s = sum((p.coeffs[k] * inv[n - k] for k in range(1, n + 1) if p.coeffs[k]), Fraction(0))
        inv.append(-s / c0)
    return PowerSeries(tuple(inv))


def det_one_minus_gt(g: Matrix, N: int) -> PowerSeries:
    """det(I - g t) as a series padded to degree N (Faddeev-LeVerrier)."""
    if not is_square(g):
        raise ValueError("g must be square")
    d = len(g)
    coeffs = [Fraction(1)]
    m = zero_matrix(d, d)
    eye = identity(d)
    for k in range(1, d + 1):
        m = mat_add(mat_mul(g, m), mat_scale(coeffs[-1], eye))
        coeffs.append(-trace(mat_mul(g, m)) / k)
    return PowerSeries.from_coeffs(coeffs, N)
