"""The defining identities of a brace differential graded algebra, as
executable discrepancy computations.

Each ``*_relation`` function returns ``lhs - rhs`` as a cochain; the
identity holds exactly when that cochain is zero.  Degrees ``|v|`` are
cochain degrees.

The identities are stated for the Koszul-signed structure

    d f = (-1)^{n+1} delta f,        f * g = (-1)^{pq} f cup g,

where ``delta`` is the plain alternating-sum coboundary and ``cup`` the
sign-free front/back product.  ``f -> (-1)^{n(n+1)/2} f`` carries
``(delta, cup)`` onto ``(d, *)``, so both structures have the same
cocycles and cohomology.  With the unsigned pair the distributivity and
boundary identities fail in general.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable, Sequence

from .hochschild import _insert_brace, hochschild_coboundary, hochschild_cup
from .subdivision import (
    HOCHSCHILD,
    SIMPLICIAL,
    Cochain,
    _evaluate_brace,
    delta_sign,
    simplicial_coboundary,
    simplicial_cup,
)


@dataclass(frozen=True)
class BDGAOps:
    """The three operations of one side; ``brace`` must accept an empty
    argument list (returning the cochain itself)."""

    name: str
    delta: Callable[[Cochain], Cochain]
    cup: Callable[[Cochain, Cochain], Cochain]
    brace: Callable[[Cochain, Sequence[Cochain]], Cochain]
    side: str


def _sgn(e: int) -> int:
    return -1 if e & 1 else 1


def _total(terms: list[Cochain], degree: int, like: Cochain) -> Cochain:
    out = {}
    for t in terms:
        if t.degree != degree:
            if t.is_zero():
                continue
            raise AssertionError(f"degree bookkeeping: {t.degree} != {degree}")
        for c, v in t.coeffs.items():
            out[c] = out.get(c, 0) + v
    return like._like(out, degree=degree)


def brace_relation(ops: BDGAOps, v, vs, ws) -> Cochain:
    """(v{v_1..v_m}){w_1..w_n} minus the sum over interleavings
    0 <= i_1 <= j_1 <= ... <= i_m <= j_m <= n."""
    m, n = len(vs), len(ws)
    lhs = ops.brace(ops.brace(v, vs), ws)
    wshift = [0]
    for w in ws:
        wshift.append(wshift[-1] + w.degree - 1)
    rhs = []
    for idx in combinations_with_replacement(range(n + 1), 2 * m):
        args = []
        prev = 0
        e = 0
        for k in range(m):
            i, j = idx[2 * k], idx[2 * k + 1]
            args.extend(ws[prev:i])
            args.append(ops.brace(vs[k], ws[i:j]))
            e += (vs[k].degree - 1) * wshift[i]
            prev = j
        args.extend(ws[prev:])
        term = ops.brace(v, args)
        rhs.append(term if _sgn(e) > 0 else -term)
    return lhs - _total(rhs, lhs.degree, lhs)


def distributivity_relation(ops: BDGAOps, v, w, vs) -> Cochain:
    """(v.w){v_1..v_n} minus sum_k +- v{v_1..v_k} . w{v_k+1..v_n}."""
    lhs = ops.brace(ops.cup(v, w), vs)
    rhs = []
    shift = 0
    for k in range(len(vs) + 1):
        if k:
            shift += vs[k - 1].degree - 1
        term = ops.cup(ops.brace(v, vs[:k]), ops.brace(w, vs[k:]))
        rhs.append(term if _sgn(w.degree * shift) > 0 else -term)
    return lhs - _total(rhs, lhs.degree, lhs)


def boundary_relation(ops: BDGAOps, v, vs) -> Cochain:
    """The coboundary of a brace expressed through braces of coboundaries
    and cup products with the outer arguments."""
    n = len(vs)
    d = [x.degree for x in vs]
    dv = v.degree
    brace, cup, delta = ops.brace, ops.cup, ops.delta
    lhs = [delta(brace(v, vs)), -brace(delta(v), vs)]
    for i in range(1, n + 1):
        e = dv + sum(d[:i - 1]) - i + 1
        t = brace(v, vs[:i - 1] + [delta(vs[i - 1])] + vs[i:])
        lhs.append(t if _sgn(e) > 0 else -t)
    rhs = []
    t = cup(vs[0], brace(v, vs[1:]))
    rhs.append(t if _sgn(dv * (d[0] - 1)) > 0 else -t)
    for i in range(1, n):
        e = dv + sum(d[:i]) - i - 1
        t = brace(v, vs[:i - 1] + [cup(vs[i - 1], vs[i])] + vs[i + 1:])
        rhs.append(-t if _sgn(e) > 0 else t)
    e = dv + sum(d[:n - 1]) - n
    t = cup(brace(v, vs[:n - 1]), vs[n - 1])
    rhs.append(t if _sgn(e) > 0 else -t)
    deg = lhs[0].degree
    return _total(lhs, deg, lhs[0]) - _total(rhs, deg, lhs[0])


def random_cocycle(K, field, rng, ops: BDGAOps, degree: int) -> Cochain:
    from .cohomology import random_cocycle as _random_cocycle
    return _random_cocycle(K, field, degree, rng, side=ops.side)


def gerstenhaber_bracket(ops: BDGAOps, x, y) -> Cochain:
    """[x, y] = x{y} - (-1)^{(|x|-1)(|y|-1)} y{x}."""
    a, b = ops.brace(x, [y]), ops.brace(y, [x])
    return a - b if _sgn((x.degree - 1) * (y.degree - 1)) > 0 else a + b


def koszul_differential(delta):
    def d(f):
        g = delta(f)
        return g if f.degree & 1 else -g
    return d


def koszul_product(cup):
    def mul(f, g):
        h = cup(f, g)
        return -h if (f.degree * g.degree) & 1 else h
    return mul


def simplicial_ops(sign=None) -> BDGAOps:
    return BDGAOps(
        name="simplicial",
        delta=koszul_differential(simplicial_coboundary),
        cup=koszul_product(simplicial_cup),
        brace=lambda f, args: _evaluate_brace(f, list(args), sign or delta_sign),
        side=SIMPLICIAL,
    )


def hochschild_ops() -> BDGAOps:
    return BDGAOps(
        name="hochschild",
        delta=koszul_differential(hochschild_coboundary),
        cup=koszul_product(hochschild_cup),
        brace=lambda f, args: _insert_brace(f, list(args)),
        side=HOCHSCHILD,
    )


RELATIONS = ("brace", "distributivity", "boundary")


def random_relation_case(K, field, rng, side, max_degree=2, max_args=2):
    """Dense random inputs (v, w, [v_i], [w_j]) for one trial."""
    def pick():
        return Cochain.random(K, field, rng.randint(0, max_degree), rng, side=side)
    v, w = pick(), pick()
    vs = [pick() for _ in range(rng.randint(1, max_args))]
    ws = [pick() for _ in range(rng.randint(1, max_args))]
    return v, w, vs, ws


def relation_discrepancy(ops: BDGAOps, relation: str, case) -> Cochain:
    v, w, vs, ws = case
    if relation == "brace":
        return brace_relation(ops, v, vs, ws)
    if relation == "distributivity":
        return distributivity_relation(ops, v, w, vs)
    if relation == "boundary":
        return boundary_relation(ops, v, vs)
    raise ValueError(f"unknown relation {relation!r}")
