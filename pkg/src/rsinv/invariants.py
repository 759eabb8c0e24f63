"""Finite rational matrix groups acting on graded components, and Weitzenboeck derivations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .algebras import algebra_of, derivation_apply, get_algebra, substitute
from .exact import (
    Matrix,
    PowerSeries,
    Subspace,
    as_matrix,
    det,
    identity,
    kernel_basis,
    mat_add,
    mat_mul,
    mat_scale,
    mat_sub,
    span,
    zero_matrix,
)
from .schur import Partition, SymmSeries, schur_char, series_eval_at_element

DEFAULT_CAP = 10_000
DEFAULT_MAX_DIM = 5_000


class GroupNotFiniteError(ValueError):
    """Closure did not saturate within the element cap."""


class DimensionLimitError(ValueError):
    """A graded component is larger than the configured limit."""


@dataclass(frozen=True)
class FiniteMatrixGroup:
    d: int
    generators: tuple
    elements: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1


def _entry_key(m: Matrix):
    return tuple(x for row in m for x in row)


def group_closure(generators, cap: int = DEFAULT_CAP) -> FiniteMatrixGroup:
    """Saturate under products, breadth first; each new layer is sorted by entries."""
    gens = tuple(as_matrix(g) for g in generators)
    if not gens:
        raise ValueError("at least one generator is required")
    d = len(gens[0])
    for g in gens:
        if len(g) != d or len(g[0]) != d:
            raise ValueError("generators must be square matrices of the same size")
        if det(g) == 0:
            raise ValueError("generator is not invertible")
    eye = identity(d)
    seen = {eye}
    elements = [eye]
    frontier = [eye]
    while frontier:
        layer = set()
        for x in frontier:
            for g in gens:
                y = mat_mul(g, x)
                if y not in seen and y not in layer:
                    layer.add(y)
        if len(seen) + len(layer) > cap:
            raise GroupNotFiniteError(f"group not finite or above cap ({cap} elements)")
        frontier = sorted(layer, key=_entry_key)
        seen.update(frontier)
        elements.extend(frontier)
    return FiniteMatrixGroup(d, gens, tuple(elements))


def trivial_group(d: int) -> FiniteMatrixGroup:
    return group_closure([identity(d)])


# --------------------------------------------------------------------------
# graded action

def component_dim(algebra: str, d: int, n: int) -> int:
    alg = get_algebra(algebra)
    if n < alg.min_degree:
        return 0
    return len(alg.basis(d, n))


def _check_dim(algebra, d, n, max_dim):
    size = component_dim(algebra, d, n)
    if size > max_dim:
        raise DimensionLimitError(
            f"{algebra} component of degree {n} with d={d} has dimension {size} > {max_dim}")


@lru_cache(maxsize=None)
def _basis_index(algebra: str, d: int, n: int):
    basis = get_algebra(algebra).basis(d, n)
    return basis, {m: i for i, m in enumerate(basis)}


def coordinates(elem, algebra: str, d: int, n: int) -> tuple:
    basis, index = _basis_index(algebra, d, n)
    v = [Fraction(0)] * len(basis)
    for m, c in elem.terms.items():
        v[index[m]] = c
    return tuple(v)


def from_coordinates(vec, algebra: str, d: int, n: int):
    basis, _ = _basis_index(algebra, d, n)
    alg = get_algebra(algebra)
    return alg.element({m: c for m, c in zip(basis, vec) if c})


def _matrix_of(linear_map, algebra: str, d: int, n: int) -> Matrix:
    basis, _ = _basis_index(algebra, d, n)
    alg = get_algebra(algebra)
    cols = [coordinates(linear_map(alg.element._raw({m: Fraction(1)})), algebra, d, n) for m in basis]
    if not cols:
        return ()
    return tuple(zip(*cols))


@lru_cache(maxsize=1024)
def action_matrix(g: Matrix, algebra: str, d: int, n: int, max_dim: int = DEFAULT_MAX_DIM) -> Matrix:
    """Matrix of substitute(g, .) on the degree-n component, basis order as in the basis function."""
    g = as_matrix(g)
    if len(g) != d:
        raise ValueError("g must be d x d")
    _check_dim(algebra, d, n, max_dim)
    return _matrix_of(lambda e: substitute(g, e), algebra, d, n)


@lru_cache(maxsize=1024)
def derivation_matrix(delta: Matrix, algebra: str, d: int, n: int, max_dim: int = DEFAULT_MAX_DIM) -> Matrix:
    _check_dim(algebra, d, n, max_dim)
    return _matrix_of(lambda e: derivation_apply(delta, e), algebra, d, n)


@dataclass(frozen=True)
class GradedInvariantBasis:
    algebra: str
    degree: int
    d: int
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> list:
        return [from_coordinates(v, self.algebra, self.d, self.degree) for v in self.space.basis]


def _joint_kernel(mats, size: int) -> Subspace:
    rows = [row for m in mats for row in m]
    if size == 0:
        return Subspace(0)
    if not rows:
        return span([tuple(Fraction(int(i == j)) for j in range(size)) for i in range(size)], size)
    return kernel_basis(tuple(rows))


def fixed_space(G: FiniteMatrixGroup, algebra: str, n: int,
                max_dim: int = DEFAULT_MAX_DIM) -> GradedInvariantBasis:
    """Joint kernel of (A(gamma) - I) over the generators gamma."""
    size = component_dim(algebra, G.d, n)
    eye = identity(size) if size else ()
    mats = [mat_sub(action_matrix(g, algebra, G.d, n, max_dim), eye)
            for g in G.generators] if size else []
    return GradedInvariantBasis(algebra, n, G.d, _joint_kernel(mats, size))


def reynolds_project(G: FiniteMatrixGroup, elem):
    alg = algebra_of(elem)
    total = alg.element._raw({})
    for g in G.elements:
        total = total + substitute(g, elem)
    return total.scale(Fraction(1, G.order))


def molien_series(s: SymmSeries, G: FiniteMatrixGroup) -> PowerSeries:
    """Average of the series evaluated at every group element."""
    if s.d != G.d:
        raise ValueError("series and group have different d")
    total = PowerSeries((0,) * (s.N + 1))
    for g in G.elements:
        total = total + series_eval_at_element(s, g)
    return total * Fraction(1, G.order)


def isotypic_invariant_dim(lam: Partition, G: FiniteMatrixGroup) -> int:
    """dim W_d(lambda)^G as the average character."""
    val = sum((schur_char(lam, g) for g in G.elements), Fraction(0)) / G.order
    assert val.denominator == 1 and val >= 0, f"character average {val} is not a dimension"
    return int(val)


def linear_invariants(G: FiniteMatrixGroup) -> Subspace:
    return fixed_space(G, "poly", 1).space


# --------------------------------------------------------------------------
# Weitzenboeck derivations

@dataclass(frozen=True)
class WeitzenbockDerivation:
    d: int
    block_sizes: tuple
    matrix: Matrix

    @property
    def p(self) -> int:
        return len(self.block_sizes)


def weitzenbock_from_blocks(block_sizes) -> WeitzenbockDerivation:
    """Jordan blocks with zero diagonal; inside a block x_k -> x_{k+1}, the last letter -> 0."""
    sizes = tuple(int(b) for b in block_sizes)
    if not sizes or any(b < 1 for b in sizes):
        raise ValueError("block sizes must be positive")
    d = sum(sizes)
    m = [list(r) for r in zero_matrix(d, d)]
    start = 0
    for b in sizes:
        for k in range(start, start + b - 1):
            m[k + 1][k] = Fraction(1)
        start += b
    return WeitzenbockDerivation(d, sizes, tuple(tuple(r) for r in m))


def delta_constants(delta: WeitzenbockDerivation, algebra: str, n: int,
                    max_dim: int = DEFAULT_MAX_DIM) -> GradedInvariantBasis:
    size = component_dim(algebra, delta.d, n)
    if size == 0:
        return GradedInvariantBasis(algebra, n, delta.d, Subspace(0))
    return GradedInvariantBasis(algebra, n, delta.d,
                                kernel_basis(derivation_matrix(delta.matrix, algebra, delta.d, n, max_dim)))


def exp_automorphism(delta: WeitzenbockDerivation, alpha) -> Matrix:
    """exp(alpha * delta) as a finite sum (delta is nilpotent)."""
    alpha = Fraction(alpha)
    d = delta.d
    result = identity(d)
    power = identity(d)
    for k in range(1, d + 1):
        power = mat_mul(power, delta.matrix)
        if not any(x for row in power for x in row):
            break
        result = mat_add(result, mat_scale(alpha ** k / factorial(k), power))
    return result
