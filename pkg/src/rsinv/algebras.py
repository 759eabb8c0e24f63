"""Graded arithmetic in three relatively free algebras on x_1..x_d.

``L``
    The free right-symmetric algebra that is left-nilpotent of class 3.
    Only left-normed products survive, and everything after the first
    letter commutes, so a basis monomial is a head index plus an exponent
    vector for the tail.
``metabelian``
    The free metabelian Lie algebra, with basis x_i and left-normed
    commutators [x_i1, x_i2, ..., x_in] where i1 > i2 <= i3 <= ... <= in.
``poly``
    Polynomials.  Monomials are exponent vectors.

Generator indices are 1-based.  A matrix g acts on generators through its
columns, g(x_j) = sum_i g[i][j] x_i, which makes substitution a left action.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import NamedTuple

from .exact import Matrix, format_rational


class LMonomial(NamedTuple):
    head: int
    tail: tuple  # exponent vector (e_1, ..., e_d)

    @property
    def degree(self) -> int:
        return 1 + sum(self.tail)

    def factors(self) -> list[int]:
        return [self.head] + _exps_to_indices(self.tail)


class MetabMonomial(NamedTuple):
    """``Gen(i)`` when ``rest`` is empty, otherwise ``Comm(head, rest)``."""

    head: int
    rest: tuple = ()

    @property
    def is_generator(self) -> bool:
        return not self.rest

    @property
    def degree(self) -> int:
        return 1 + len(self.rest)

    def factors(self) -> list[int]:
        return [self.head, *self.rest]


def Gen(i: int) -> MetabMonomial:
    return MetabMonomial(i)


def Comm(head: int, rest) -> MetabMonomial:
    rest = tuple(rest)
    if not rest or head <= rest[0] or list(rest) != sorted(rest):
        raise ValueError(f"not a normal commutator: {head}, {rest}")
    return MetabMonomial(head, rest)


def _exps_to_indices(exps) -> list[int]:
    out = []
    for i, e in enumerate(exps, start=1):
        out.extend([i] * e)
    return out


def _indices_to_exps(indices, d: int) -> tuple:
    e = [0] * d
    for i in indices:
        e[i - 1] += 1
    return tuple(e)


class _Element:
    """Sparse linear combination of monomials with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in dict(terms).items():
                c = Fraction(c)
                if c:
                    clean[k] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    def __eq__(self, other):
        if type(other) is not type(self):
            if other == 0:
                return not self.terms
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def _combine(self, other, sign):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + sign * c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return self._raw(out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self._raw({k: -c for k, c in self.terms.items()})

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return self._raw({})
        return self._raw({k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def degrees(self) -> set:
        return {k.degree if hasattr(k, "degree") else sum(k) for k in self.terms}

    def __repr__(self):
        return f"{type(self).__name__}({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{format_rational(c)} * {self._fmt(k)}"
                          for k, c in sorted(self.terms.items()))


class LElement(_Element):
    __slots__ = ()

    @staticmethod
    def _fmt(m: LMonomial) -> str:
        return f"x{m.head}[{','.join(map(str, m.tail))}]"

    def __mul__(self, other):
        if isinstance(other, LElement):
            return l_mul(self, other)
        return self.scale(other)


class MetabElement(_Element):
    __slots__ = ()

    @staticmethod
    def _fmt(m: MetabMonomial) -> str:
        if m.is_generator:
            return f"x{m.head}"
        return "[" + ",".join(f"x{i}" for i in m.factors()) + "]"

    def __mul__(self, other):
        if isinstance(other, MetabElement):
            return metab_bracket(self, other)
        return self.scale(other)


class PolyElement(_Element):
    __slots__ = ()

    @staticmethod
    def _fmt(e: tuple) -> str:
        return f"[{','.join(map(str, e))}]"

    def __mul__(self, other):
        if isinstance(other, PolyElement):
            return poly_mul(self, other)
        return self.scale(other)


# --------------------------------------------------------------------------
# L: left-nilpotent right-symmetric algebra

def l_generator(i: int, d: int) -> LElement:
    return LElement._raw({LMonomial(i, (0,) * d): Fraction(1)})


def l_mul(a: LElement, b: LElement) -> LElement:
    """Product in L: u * x_j appends j to the tail of u; u * v = 0 when deg v >= 2."""
    out: dict = {}
    for v, cv in b.terms.items():
        if any(v.tail):
            continue
        j = v.head - 1
        for u, cu in a.terms.items():
            tail = list(u.tail)
            tail[j] += 1
            key = LMonomial(u.head, tuple(tail))
            val = out.get(key, 0) + cu * cv
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return LElement._raw(out)


def l_basis(d: int, n: int) -> list[LMonomial]:
    """Heads ascending, then tails in lex order of their sorted index lists."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    tails = [_indices_to_exps(t, d) for t in combinations_with_replacement(range(1, d + 1), n - 1)]
    return [LMonomial(h, t) for h in range(1, d + 1) for t in tails]


def l_module_action(w: LElement, f: PolyElement) -> LElement:
    """Right K[X_d]-module action: add the exponents of f into the tail."""
    out: dict = {}
    for u, cu in w.terms.items():
        for e, cf in f.terms.items():
            key = LMonomial(u.head, tuple(a + b for a, b in zip(u.tail, e)))
            val = out.get(key, 0) + cu * cf
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return LElement._raw(out)


# --------------------------------------------------------------------------
# free metabelian Lie algebra

def metab_generator(i: int, d: int | None = None) -> MetabElement:
    return MetabElement._raw({Gen(i): Fraction(1)})


def _normal_commutator(a: int, b: int, rest: list[int]) -> dict:
    """Normal form of the left-normed commutator [x_a, x_b, x_rest...].

    Entries past position two commute modulo the metabelian identity, so
    only the second slot has to be forced to the minimum; one Jacobi step
    [[a,b],c] = [[a,c],b] + [[c,b],a] does that.
    """
    if a == b:
        return {}
    sign = 1
    if a < b:
        a, b, sign = b, a, -1
    rest = sorted(rest)
    if not rest or b <= rest[0]:
        return {MetabMonomial(a, tuple([b] + rest)): sign}
    m = rest[0]
    others = rest[1:]
    out = {MetabMonomial(a, tuple(sorted([m, b] + others))): sign}
    # [[x_m, x_b], x_a, ...] = -[x_b, x_m, x_a, ...] with m < b
    key = MetabMonomial(b, tuple(sorted([m, a] + others)))
    out[key] = out.get(key, 0) - sign
    return {k: v for k, v in out.items() if v}


def _bracket_monomials(u: MetabMonomial, v: MetabMonomial) -> dict:
    if not u.is_generator and not v.is_generator:
        return {}
    if u.is_generator and v.is_generator:
        return _normal_commutator(u.head, v.head, [])
    if v.is_generator:
        return _normal_commutator(u.head, u.rest[0], list(u.rest[1:]) + [v.head])
    return {k: -c for k, c in _bracket_monomials(v, u).items()}


def metab_bracket(a: MetabElement, b: MetabElement) -> MetabElement:
    out: dict = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            for k, s in _bracket_monomials(u, v).items():
                val = out.get(k, 0) + s * cu * cv
                if val:
                    out[k] = val
                else:
                    out.pop(k, None)
    return MetabElement._raw(out)


def metab_basis(d: int, n: int) -> list[MetabMonomial]:
    if n < 1:
        raise ValueError("degree must be >= 1")
    if n == 1:
        return [Gen(i) for i in range(1, d + 1)]
    out = []
    for head in range(1, d + 1):
        for rest in combinations_with_replacement(range(1, d + 1), n - 1):
            if head > rest[0]:
                out.append(MetabMonomial(head, rest))
    return out


# --------------------------------------------------------------------------
# polynomials

def poly_generator(i: int, d: int) -> PolyElement:
    e = [0] * d
    e[i - 1] = 1
    return PolyElement._raw({tuple(e): Fraction(1)})


def poly_one(d: int) -> PolyElement:
    return PolyElement._raw({(0,) * d: Fraction(1)})


def poly_mul(a: PolyElement, b: PolyElement) -> PolyElement:
    out: dict = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            key = tuple(x + y for x, y in zip(u, v))
            val = out.get(key, 0) + cu * cv
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return PolyElement._raw(out)


def poly_basis(d: int, n: int) -> list[tuple]:
    return [_indices_to_exps(t, d) for t in combinations_with_replacement(range(1, d + 1), n)]


# --------------------------------------------------------------------------
# uniform view used by the group action and derivations

class _Algebra(NamedTuple):
    name: str
    element: type
    generator: object
    basis: object
    mul: object
    factors: object
    min_degree: int


ALGEBRAS = {
    "L": _Algebra("L", LElement, l_generator, l_basis, l_mul,
                  LMonomial.factors, 1),
    "metabelian": _Algebra("metabelian", MetabElement, metab_generator, metab_basis, metab_bracket,
                           MetabMonomial.factors, 1),
    "poly": _Algebra("poly", PolyElement, poly_generator, poly_basis, poly_mul,
                     _exps_to_indices, 0),
}


def get_algebra(name: str) -> _Algebra:
    try:
        return ALGEBRAS[name]
    except KeyError:
        raise ValueError(f"unknown algebra {name!r}; choose from {sorted(ALGEBRAS)}") from None


def algebra_of(elem) -> _Algebra:
    for alg in ALGEBRAS.values():
        if isinstance(elem, alg.element):
            return alg
    raise TypeError(f"not an algebra element: {elem!r}")


def linear_images(g: Matrix, alg: _Algebra) -> list:
    """Images of x_1..x_d under the linear map whose columns are given by g."""
    d = len(g)
    gens = [alg.generator(i, d) for i in range(1, d + 1)]
    images = []
    for j in range(d):
        img = alg.element._raw({})
        for i in range(d):
            if g[i][j]:
                img = img + gens[i].scale(g[i][j])
        images.append(img)
    return images


def _left_normed(alg, parts, d):
    if not parts:
        return poly_one(d)
    acc = parts[0]
    for p in parts[1:]:
        acc = alg.mul(acc, p)
    return acc


def substitute(g: Matrix, elem):
    """f(x_1, ..., x_d) -> f(g(x_1), ..., g(x_d)), renormalized to basis form."""
    alg = algebra_of(elem)
    d = len(g)
    images = linear_images(g, alg)
    out = alg.element._raw({})
    for mono, c in elem.terms.items():
        parts = [images[i - 1] for i in alg.factors(mono)]
        out = out + _left_normed(alg, parts, d).scale(c)
    return out


def derivation_apply(delta: Matrix, elem):
    """Leibniz extension of the linear map x_j -> sum_i delta[i][j] x_i."""
    alg = algebra_of(elem)
    d = len(delta)
    images = linear_images(delta, alg)
    gens = [alg.generator(i, d) for i in range(1, d + 1)]
    out = alg.element._raw({})
    for mono, c in elem.terms.items():
        idx = alg.factors(mono)
        for k in range(len(idx)):
            if not images[idx[k] - 1]:
                continue
            parts = [gens[i - 1] for i in idx]
            parts[k] = images[idx[k] - 1]
            out = out + _left_normed(alg, parts, d).scale(c)
    return out


def monomial_element(alg_name: str, mono):
    return get_algebra(alg_name).element._raw({mono: Fraction(1)})
