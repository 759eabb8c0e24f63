"""Random elements and independent oracles shared by the test modules."""

import random
from fractions import Fraction as F

from rsinv.algebras import (
    LElement,
    MetabElement,
    PolyElement,
    l_basis,
    metab_basis,
    poly_basis,
)


def random_element(rng: random.Random, algebra: str, d: int, max_degree: int = 4, terms: int = 3):
    out = {}
    for _ in range(rng.randint(1, terms)):
        n = rng.randint(0 if algebra == "poly" else 1, max_degree)
        basis = {"L": l_basis, "metabelian": metab_basis, "poly": poly_basis}[algebra](d, n)
        if not basis:
            continue
        m = rng.choice(basis)
        out[m] = out.get(m, 0) + F(rng.randint(-3, 3), rng.randint(1, 2))
    cls = {"L": LElement, "metabelian": MetabElement, "poly": PolyElement}[algebra]
    return cls(out)


def shmelkin_image(elem: MetabElement, d: int) -> dict:
    """Faithful image of the free metabelian Lie algebra in A + M.

    x_i -> a_i + y_i with A abelian on a_1..a_d and M the free K[t_1..t_d]-module
    on y_1..y_d, where [m, a_j] = m t_j.  A left-normed commutator
    [x_i1, x_i2, ..., x_in] maps to (y_i1 t_i2 - y_i2 t_i1) t_i3 ... t_in.
    Keys are ('a', i) or ('y', i, exponent vector).
    """
    out = {}

    def add(key, c):
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)

    for m, c in elem.terms.items():
        if m.is_generator:
            add(("a", m.head), c)
            add(("y", m.head, (0,) * d), c)
            continue
        idx = m.factors()
        rest = [0] * d
        for k in idx[2:]:
            rest[k - 1] += 1
        i1, i2 = idx[0], idx[1]
        e1 = list(rest)
        e1[i2 - 1] += 1
        e2 = list(rest)
        e2[i1 - 1] += 1
        add(("y", i1, tuple(e1)), c)
        add(("y", i2, tuple(e2)), -c)
    return out


def shmelkin_bracket(u: dict, v: dict, d: int) -> dict:
    """Bracket in A + M: [a, a'] = 0, [M, M] = 0, [m, a_j] = m t_j."""
    out = {}

    def add(key, c):
        val = out.get(key, 0) + c
        if val:
            out[key] = val
        else:
            out.pop(key, None)

    for ku, cu in u.items():
        for kv, cv in v.items():
            if ku[0] == "y" and kv[0] == "a":
                e = list(ku[2])
                e[kv[1] - 1] += 1
                add(("y", ku[1], tuple(e)), cu * cv)
            elif ku[0] == "a" and kv[0] == "y":
                e = list(kv[2])
                e[ku[1] - 1] += 1
                add(("y", kv[1], tuple(e)), -cu * cv)
    return out
