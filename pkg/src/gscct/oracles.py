"""Slow reference evaluators used to cross-check the optimized paths.

Neither prunes its index enumeration by argument degrees; both rely only on
cochains vanishing off their own degree.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from typing import Sequence

from .hochschild import evaluate, generator
from .subdivision import Cochain, enumerate_chains


def naive_simplicial_brace(f: Cochain, args: Sequence[Cochain]) -> Cochain:
    """Dual of Delta_{1,r} by enumerating every tuple
    0 <= b'_1 <= b_1 <= ... <= b'_r <= b_r <= n."""
    r = len(args)
    n = f.degree + sum(a.degree for a in args) - r
    if n < 0:
        return f._like({}, degree=n)
    out = {}
    for c in enumerate_chains(f.complex, n):
        total = 0
        for bs in combinations_with_replacement(range(n + 1), 2 * r):
            outer = list(range(0, bs[0] + 1))
            value = 1
            e = 0
            for k in range(r):
                lo, hi = bs[2 * k], bs[2 * k + 1]
                value = value * args[k](c[lo:hi + 1])
                e += (hi - lo - 1) * lo
                nxt = bs[2 * k + 2] if k + 1 < r else n
                outer.extend(range(hi, nxt + 1))
            value = value * f(tuple(c[i] for i in outer))
            total = total - value if e & 1 else total + value
        out[c] = total
    return f._like(out, degree=n)


def naive_hochschild_brace(x: Cochain, args: Sequence[Cochain]) -> Cochain:
    """Brace computed through multilinear evaluation on incidence-algebra
    elements, trying every weakly increasing tuple of insertion points."""
    K, field = x.complex, x.field
    r = len(args)
    m = x.degree + sum(a.degree for a in args) - r
    if m < 0:
        return x._like({}, degree=m)
    out = {}
    for path in enumerate_chains(K, m):
        gens = [generator(K, field, s, t) for s, t in zip(path, path[1:])]
        total = None
        for ins in combinations_with_replacement(range(m + 1), r):
            inputs = []
            prev = 0
            e = 0
            ok = True
            for i, a in zip(ins, args):
                if i < prev or i + a.degree > m:
                    ok = False
                    break
                inputs.extend(gens[prev:i])
                inputs.append(evaluate(a, gens[i:i + a.degree]))
                e += i * (a.degree - 1)
                prev = i + a.degree
            if not ok:
                continue
            inputs.extend(gens[prev:])
            term = evaluate(x, inputs)
            if e & 1:
                term = -term
            total = term if total is None else total + term
        if total is not None:
            out[path] = total.coefficient(path[0], path[-1])
    return x._like(out, degree=m)


def bimodule_cup(F: Cochain, G: Cochain, path) -> object:
    """(F.G)(a_1..a_{p+q}) = F(a_1..a_p) G(a_{p+1}..) on one basis path."""
    K, field = F.complex, F.field
    gens = [generator(K, field, s, t) for s, t in zip(path, path[1:])]
    prod = evaluate(F, gens[:F.degree]) * evaluate(G, gens[F.degree:])
    return prod.coefficient(path[0], path[-1])


def delete_one_coboundary(F: Cochain) -> Cochain:
    """(dF)[s_0..s_{n+1}] = sum_i (-1)^i F[path without s_i]."""
    n = F.degree
    out = {}
    for c in enumerate_chains(F.complex, n + 1):
        total = 0
        for i in range(n + 2):
            v = F(c[:i] + c[i + 1:])
            total = total - v if i & 1 else total + v
        out[c] = total
    return F._like(out, degree=n + 1)
