"""Degree-by-degree witnesses that invariant algebras of L are not finitely generated.

Finite computations can never prove infinite generation on their own.  The
verdicts here come in two kinds:

* ``"theorem"``: a sufficient criterion fires on finite data (a transcendence
  degree larger than the dimension of the linear invariants).  The
  transcendence degrees are known values, d for finite groups and d - 1 for
  Weitzenboeck constants.  They are not computed.
* ``"truncation-evidence"``: a dimension table up to the truncation degree,
  labeled as evidence only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .algebras import (
    LElement,
    PolyElement,
    l_generator,
    l_module_action,
    l_mul,
)
from .exact import Subspace, span, span_complement
from .invariants import (
    DEFAULT_MAX_DIM,
    FiniteMatrixGroup,
    WeitzenbockDerivation,
    component_dim,
    coordinates,
    delta_constants,
    from_coordinates,
    fixed_space,
    linear_invariants,
    weitzenbock_from_blocks,
)

TRANSCENDENCE_FINITE_GROUP = "transcendence degree of K[X_d]^G is d for every finite G"
TRANSCENDENCE_WEITZENBOCK = "transcendence degree of K[X_d]^delta is d-1 for a Weitzenboeck derivation"


class Verdict(str, Enum):
    NOT_FINITELY_GENERATED = "NotFinitelyGenerated"
    INCONCLUSIVE = "InconclusivePerPaper"
    TRIVIAL = "TrivialGroup"


@dataclass(frozen=True)
class CriterionVerdict:
    verdict: Verdict
    rule: str
    witness: dict = field(default_factory=dict)
    witness_kind: str = "theorem"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "rule": self.rule,
            "witness_kind": self.witness_kind,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class DegreeRow:
    n: int
    dim_invariants: int
    dim_module_span: int
    new_generators: int


@dataclass(frozen=True)
class ModGenReport:
    d: int
    N: int
    linear_invariant_dim: int
    degrees: tuple
    kind: str = "module"

    def row(self, n: int) -> DegreeRow:
        for r in self.degrees:
            if r.n == n:
                return r
        raise KeyError(n)

    def new_generators(self) -> dict:
        return {r.n: r.new_generators for r in self.degrees}

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "d": self.d,
            "N": self.N,
            "linear_invariant_dim": self.linear_invariant_dim,
            "degrees": [
                {"n": r.n, "dim_invariants": r.dim_invariants,
                 "dim_module_span": r.dim_module_span, "new_generators": r.new_generators}
                for r in self.degrees
            ],
        }


def _linear_forms(G: FiniteMatrixGroup) -> list[PolyElement]:
    d = G.d
    out = []
    for v in linear_invariants(G).basis:
        terms = {}
        for i, c in enumerate(v):
            if c:
                e = [0] * d
                e[i] = 1
                terms[tuple(e)] = c
        out.append(PolyElement(terms))
    return out


def _as_linear_l(f: PolyElement, d: int) -> LElement:
    out = LElement()
    for e, c in f.terms.items():
        out = out + l_generator(e.index(1) + 1, d).scale(c)
    return out


def _image_span(vectors_at_prev, step, d: int, n: int) -> Subspace:
    """span of step(v) for v in the previous degree, in degree-n coordinates."""
    size = component_dim("L", d, n)
    images = []
    for v in vectors_at_prev:
        w = from_coordinates(v, "L", d, n - 1)
        for img in step(w):
            images.append(coordinates(img, "L", d, n))
    return span(images, size)


def module_generator_report(G: FiniteMatrixGroup, N: int,
                            max_dim: int = DEFAULT_MAX_DIM) -> ModGenReport:
    """Minimal module generators of the invariants of L without linear part,
    over polynomials in the linear invariants, counted per degree."""
    if N < 2:
        raise ValueError("N must be at least 2")
    d = G.d
    lin = _linear_forms(G)
    rows = []
    prev = None
    for n in range(2, N + 1):
        inv = fixed_space(G, "L", n, max_dim).space
        if prev is None:
            reached = Subspace(inv.ambient)
        else:
            reached = _image_span(prev.basis, lambda w: [l_module_action(w, u) for u in lin], d, n)
        new = len(span_complement(inv, reached))
        rows.append(DegreeRow(n, inv.dim, reached.dim, new))
        prev = inv
    return ModGenReport(d, N, len(lin), tuple(rows), "module")


def algebra_generator_report(G: FiniteMatrixGroup, N: int,
                             max_dim: int = DEFAULT_MAX_DIM) -> ModGenReport:
    """Minimal algebra generators of the invariants of L per degree.

    In L a product is nonzero only when its right factor is linear, so the
    degree-n part of the subalgebra generated by lower degrees is the span
    of (degree n-1 invariants) * (linear invariants).
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    d = G.d
    lin = [_as_linear_l(f, d) for f in _linear_forms(G)]
    rows = []
    prev = None
    for n in range(1, N + 1):
        inv = fixed_space(G, "L", n, max_dim).space
        if prev is None:
            reached = Subspace(inv.ambient)
        else:
            reached = _image_span(prev.basis, lambda w: [l_mul(w, u) for u in lin], d, n)
        new = len(span_complement(inv, reached))
        rows.append(DegreeRow(n, inv.dim, reached.dim, new))
        prev = inv
    return ModGenReport(d, N, len(lin), tuple(rows), "algebra")


# --------------------------------------------------------------------------
# criteria

def check_finite_group(G: FiniteMatrixGroup) -> CriterionVerdict:
    if G.is_trivial:
        return CriterionVerdict(Verdict.TRIVIAL, "trivial-group", {"order": 1})
    m = linear_invariants(G).dim
    t = G.d
    # a nontrivial subgroup of GL_d cannot fix all of KX_d
    assert m < t
    return CriterionVerdict(
        Verdict.NOT_FINITELY_GENERATED,
        "finite-group",
        {"transcendence_degree": t, "linear_invariant_dim": m, "order": G.order,
         "fact": TRANSCENDENCE_FINITE_GROUP},
    )


def check_weitzenbock(delta: WeitzenbockDerivation) -> CriterionVerdict:
    d, p = delta.d, delta.p
    witness = {"d": d, "blocks": list(delta.block_sizes), "linear_constants_dim": p}
    if p == d:
        return CriterionVerdict(Verdict.TRIVIAL, "zero-derivation", witness)
    witness.update(transcendence_degree=d - 1, fact=TRANSCENDENCE_WEITZENBOCK)
    if d <= 2:
        return CriterionVerdict(Verdict.INCONCLUSIVE, "weitzenbock-small-d", witness)
    if p < d - 1:
        return CriterionVerdict(Verdict.NOT_FINITELY_GENERATED, "weitzenbock-few-blocks", witness)
    return CriterionVerdict(Verdict.INCONCLUSIVE, "weitzenbock-d-minus-1-blocks", witness)


def check_metabelian(G: FiniteMatrixGroup, N: int,
                     max_dim: int = DEFAULT_MAX_DIM) -> CriterionVerdict:
    """Evidence that the metabelian invariants are infinite dimensional while
    there are no linear invariants.

    Fires when invariants still appear in the upper half of the sampled
    degrees 2..N.  This is a truncation, not a proof.
    """
    m = linear_invariants(G).dim
    if m:
        return CriterionVerdict(Verdict.INCONCLUSIVE, "metabelian-linear-invariants",
                                {"linear_invariant_dim": m}, "truncation-evidence")
    dims = {n: fixed_space(G, "metabelian", n, max_dim).dim for n in range(2, N + 1)}
    witness = {"linear_invariant_dim": 0, "N": N,
               "dims": [{"n": n, "dim": v} for n, v in dims.items()],
               "label": f"evidence at N={N}"}
    upper = [v for n, v in dims.items() if 2 * n > N + 1]
    if N >= 2 and any(upper):
        return CriterionVerdict(Verdict.NOT_FINITELY_GENERATED, "metabelian-evidence", witness,
                                "truncation-evidence")
    return CriterionVerdict(Verdict.INCONCLUSIVE, "metabelian-evidence", witness,
                            "truncation-evidence")


def remark_generators(d: int) -> tuple[list[LElement], list[LElement]]:
    """x1x2 - x2x1 and the linear constants x2..xd of delta(x1) = x2."""
    x = [l_generator(i, d) for i in range(1, d + 1)]
    comm = l_mul(x[0], x[1]) - l_mul(x[1], x[0])
    return [comm], x[1:]


def remark_generation_check(d: int, N: int,
                            max_dim: int = DEFAULT_MAX_DIM) -> list[dict]:
    """For each degree, compare the span of products of the generators above
    with the constants of delta(x1) = x2, delta(x_i) = 0 for i >= 2."""
    if d < 2 or N < 1:
        raise ValueError("need d >= 2 and N >= 1")
    delta = weitzenbock_from_blocks([2] + [1] * (d - 2))
    higher, linear = remark_generators(d)
    table = []
    by_degree: dict[int, list[LElement]] = {1: list(linear)}
    for n in range(1, N + 1):
        if n >= 2:
            prods = [l_mul(a, b) for a in by_degree[n - 1] for b in linear]
            prods += [g for g in higher if g.degrees() == {n}]
            by_degree[n] = prods
        generated = span([coordinates(e, "L", d, n) for e in by_degree[n]], component_dim("L", d, n))
        by_degree[n] = [from_coordinates(v, "L", d, n) for v in generated.basis]
        constants = delta_constants(delta, "L", n, max_dim).space
        table.append({"n": n, "generated_dim": generated.dim, "constants_dim": constants.dim,
                      "equal": generated == constants})
    return table
