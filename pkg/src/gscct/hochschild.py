"""The incidence algebra of the face poset and its Hochschild complex
relative to the diagonal subalgebra.

Relative cochains are stored on the path basis: the coefficient of a chain
``(s_0, ..., s_n)`` is the scalar by which the cochain sends the composable
generators ``(s_0,s_1), ..., (s_{n-1},s_n)`` to ``(s_0, s_n)``.  The
bimodule-map view (:func:`evaluate`) is kept for the coboundary and for
cross-checks.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .complex import SimplicialComplex
from .scalars import Field
from .subdivision import HOCHSCHILD, Cochain, _same_space, enumerate_chains


class IncidenceElement:
    """A finite linear combination of pairs ``(s, t)`` with ``s <= t``,
    keyed by basis positions."""

    __slots__ = ("complex", "field", "terms")

    def __init__(self, K: SimplicialComplex, field: Field, terms=None, check=True):
        self.complex = K
        self.field = field
        red = field.reduce
        out = {}
        for (s, t), v in (terms or {}).items():
            if check and t not in K.leq[s]:
                raise ValueError(f"{K.elements[s]} is not a face of {K.elements[t]}")
            v = red(v)
            if v:
                out[(s, t)] = v
        self.terms = out

    @classmethod
    def pair(cls, K, field, src, dst, coeff=1):
        if not isinstance(src, int):
            src = K.index[tuple(sorted(src))]
        if not isinstance(dst, int):
            dst = K.index[tuple(sorted(dst))]
        return cls(K, field, {(src, dst): coeff})

    @classmethod
    def unit(cls, K, field):
        """The sum of all diagonal pairs."""
        return cls(K, field, {(i, i): 1 for i in range(len(K.elements))}, check=False)

    @classmethod
    def diagonal(cls, K, field, values):
        return cls(K, field, {(i, i): v for i, v in values.items()}, check=False)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return IncidenceElement(self.complex, self.field, out, check=False)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return IncidenceElement(self.complex, self.field,
                                {k: s * v for k, v in self.terms.items()}, check=False)

    def __mul__(self, other):
        return incidence_multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, IncidenceElement) and self.terms == other.terms

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def coefficient(self, s, t):
        return self.terms.get((s, t), self.field.zero)

    def __repr__(self):
        K = self.complex
        parts = [f"{v}*({','.join(K.elements[s])};{','.join(K.elements[t])})"
                 for (s, t), v in sorted(self.terms.items())]
        return "IncidenceElement(" + " + ".join(parts) + ")"


def incidence_multiply(x: IncidenceElement, y: IncidenceElement) -> IncidenceElement:
    """(s, t)(u, w) = (s, w) if t == u, else 0, extended bilinearly."""
    by_src: dict[int, list] = {}
    for (u, w), b in y.terms.items():
        by_src.setdefault(u, []).append((w, b))
    out = {}
    for (s, t), a in x.terms.items():
        for w, b in by_src.get(t, ()):
            out[(s, w)] = out.get((s, w), 0) + a * b
    return IncidenceElement(x.complex, x.field, out, check=False)


def generator(K, field, s, t) -> IncidenceElement:
    return IncidenceElement(K, field, {(s, t): 1}, check=False)


def evaluate(F: Cochain, elements: Sequence[IncidenceElement]) -> IncidenceElement:
    """Apply ``F`` as a multilinear map over the diagonal subalgebra.

    Only tensors of composable generators survive; on those ``F`` returns
    its path coefficient times the pair joining the two ends.  With no
    inputs, a degree-0 cochain returns its diagonal element.
    """
    K, field = F.complex, F.field
    if len(elements) != F.degree:
        return IncidenceElement(K, field, {}, check=False)
    if F.degree == 0:
        return IncidenceElement(K, field, {(c[0], c[0]): v for c, v in F.coeffs.items()},
                                check=False)
    get = F.coeffs.get
    out = {}
    for picks in product(*(e.terms.items() for e in elements)):
        path = [picks[0][0][0]]
        coeff = 1
        for (s, t), v in picks:
            if s != path[-1]:
                break
            path.append(t)
            coeff = coeff * v
        else:
            f = get(tuple(path))
            if f:
                key = (path[0], path[-1])
                out[key] = out.get(key, 0) + coeff * f
    return IncidenceElement(K, field, out, check=False)


def path_generators(K, field, path) -> list[IncidenceElement]:
    return [generator(K, field, s, t) for s, t in zip(path, path[1:])]


def hochschild_coboundary(F: Cochain, targets=None) -> Cochain:
    """The Hochschild coboundary

        a_1 F(a_2..) + sum_i (-1)^i F(.., a_i a_{i+1}, ..) + (-1)^{n+1} F(..) a_{n+1}

    evaluated on every composable generator sequence of length ``n + 1``
    (or only on the paths in ``targets``).
    """
    K, field, n = F.complex, F.field, F.degree
    if n < 0:
        return F._like({}, degree=n + 1)
    out = {}
    for path in enumerate_chains(K, n + 1) if targets is None else targets:
        a = path_generators(K, field, path)
        total = incidence_multiply(a[0], evaluate(F, a[1:]))
        for i in range(1, n + 1):
            merged = a[:i - 1] + [incidence_multiply(a[i - 1], a[i])] + a[i + 1:]
            term = evaluate(F, merged)
            total = total - term if i & 1 else total + term
        last = incidence_multiply(evaluate(F, a[:n]), a[n])
        total = total - last if (n + 1) & 1 else total + last
        v = total.coefficient(path[0], path[-1])
        if v:
            out[path] = v
    return F._like(out, degree=n + 1)


def hochschild_cup(F: Cochain, G: Cochain) -> Cochain:
    """(F.G)[s_0..s_{p+q}] = F[s_0..s_p] G[s_p..s_{p+q}]."""
    _same_space(F, G)
    p, q = F.degree, G.degree
    if p < 0 or q < 0:
        return F._like({}, degree=p + q)
    fget, gget = F.coeffs.get, G.coeffs.get
    out = {}
    for path in enumerate_chains(F.complex, p + q):
        a = fget(path[:p + 1])
        if a:
            b = gget(path[p:])
            if b:
                out[path] = a * b
    return F._like(out, degree=p + q)


def _insertions(m: int, arities: Sequence[int]):
    """Insertion points i_1 <= ... with i_k + |x_k| <= i_{k+1} and
    i_n + |x_n| <= m."""
    n = len(arities)
    tail = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        tail[k] = tail[k + 1] + arities[k]
    pos = [0] * n

    def rec(k, lo):
        if k == n:
            yield tuple(pos)
            return
        for i in range(lo, m - tail[k] + 1):
            pos[k] = i
            yield from rec(k + 1, i + arities[k])

    yield from rec(0, 0)


def _insert_brace(x: Cochain, args: Sequence[Cochain]) -> Cochain:
    _same_space(x, *args)
    if not args:
        return x
    arities = [a.degree for a in args]
    m = x.degree + sum(arities) - len(args)
    if m < 0 or x.degree < 0 or min(arities) < 0:
        return x._like({}, degree=m)
    layout = []
    for ins in _insertions(m, arities):
        e = sum(i * (d - 1) for i, d in zip(ins, arities))
        layout.append((-1 if e & 1 else 1, ins))
    xget = x.coeffs.get
    gets = [a.coeffs.get for a in args]
    out = {}
    if layout:
        for path in enumerate_chains(x.complex, m):
            total = 0
            for sign, ins in layout:
                coeff = 1
                collapsed = list(path[:ins[0] + 1])
                for k, (i, d) in enumerate(zip(ins, arities)):
                    w = gets[k](path[i:i + d + 1])
                    if not w:
                        break
                    coeff = coeff * w
                    stop = ins[k + 1] + 1 if k + 1 < len(ins) else m + 1
                    collapsed.extend(path[i + d:stop])
                else:
                    v = xget(tuple(collapsed))
                    if v:
                        total = total + coeff * v if sign > 0 else total - coeff * v
            if total:
                out[path] = total
    return x._like(out, degree=m)


def hochschild_brace(x: Cochain, args: Sequence[Cochain]) -> Cochain:
    """``x{x_1, ..., x_n}``: insert each ``x_k`` into consecutive inputs of
    ``x`` with sign (-1)^{sum i_k (|x_k| - 1)}.  Requires ``n >= 1``."""
    args = list(args)
    if not args:
        raise ValueError("a brace needs at least one argument")
    if x.side != HOCHSCHILD:
        raise ValueError("hochschild_brace expects Hochschild cochains")
    return _insert_brace(x, args)


def hochschild_unit(K, field) -> Cochain:
    """The degree-0 cochain whose diagonal element is the unit."""
    return Cochain.constant(K, field, 0, 1, side=HOCHSCHILD)
