"""The barycentric subdivision as a simplicial set: chains, cochains, the
coboundary, the Alexander-Whitney cup product and the brace operations
dual to the cooperations Delta_{1,r}."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence

from .complex import SimplicialComplex
from .scalars import Field

Chain = tuple  # positions into K.elements, weakly increasing under inclusion

SIMPLICIAL = "simplicial"
HOCHSCHILD = "hochschild"


class Cochain:
    """A homogeneous cochain with exact, finitely supported coefficients.

    ``coeffs`` maps chains of length ``degree + 1`` to nonzero field values.
    The same class carries Hochschild cochains, whose path basis is in
    bijection with chains; ``side`` records which structure applies.
    """

    __slots__ = ("complex", "field", "degree", "coeffs", "side")

    def __init__(self, K: SimplicialComplex, field: Field, degree: int, coeffs=None,
                 side: str = SIMPLICIAL, check: bool = True):
        if degree < 0 and coeffs:
            raise ValueError("only the zero cochain has negative degree")
        if side not in (SIMPLICIAL, HOCHSCHILD):
            raise ValueError(f"unknown side {side!r}")
        self.complex = K
        self.field = field
        self.degree = degree
        self.side = side
        red = field.reduce
        out = {}
        for c, v in (coeffs or {}).items():
            c = tuple(c)
            if check:
                _check_chain(K, c, degree)
            v = red(v)
            if v:
                out[c] = v
        self.coeffs = out

    @classmethod
    def zero(cls, K, field, degree, side=SIMPLICIAL):
        return cls(K, field, degree, {}, side)

    @classmethod
    def indicator(cls, K, field, chain, side=SIMPLICIAL):
        return cls(K, field, len(chain) - 1, {tuple(chain): 1}, side)

    @classmethod
    def constant(cls, K, field, degree, value=1, side=SIMPLICIAL, normalized=False):
        return cls(K, field, degree,
                   {c: value for c in enumerate_chains(K, degree, normalized)}, side,
                   check=False)

    @classmethod
    def random(cls, K, field, degree, rng, side=SIMPLICIAL, normalized=False):
        """Dense random cochain: every basis chain draws a coefficient."""
        return cls(K, field, degree,
                   {c: field.random(rng) for c in enumerate_chains(K, degree, normalized)},
                   side, check=False)

    def __call__(self, chain):
        return self.coeffs.get(tuple(chain), self.field.zero)

    def _compatible(self, other: "Cochain"):
        if (self.complex is not other.complex and self.complex != other.complex) \
                or self.field != other.field or self.side != other.side:
            raise ValueError("cochains live in different complexes")
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch {self.degree} vs {other.degree}")

    def __add__(self, other):
        self._compatible(other)
        out = dict(self.coeffs)
        for c, v in other.coeffs.items():
            out[c] = out.get(c, 0) + v
        return self._like(out)

    def __neg__(self):
        return self._like({c: -v for c, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return self._like({c: s * v for c, v in self.coeffs.items()})

    def _like(self, coeffs, degree=None, side=None):
        return Cochain(self.complex, self.field, self.degree if degree is None else degree,
                       coeffs, self.side if side is None else side, check=False)

    def with_side(self, side):
        return Cochain(self.complex, self.field, self.degree, self.coeffs, side, check=False)

    @property
    def support(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_normalized(self) -> bool:
        return all(is_nondegenerate(c) for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.degree == other.degree and self.side == other.side
                and self.field == other.field and self.coeffs == other.coeffs)

    __hash__ = None

    def __repr__(self):
        return f"Cochain(side={self.side}, degree={self.degree}, support={self.support})"

    def dump_lines(self) -> list[str]:
        """``CHAIN <s0>|<s1>|... = <scalar>`` lines in basis order."""
        K, fmt = self.complex, self.field.format
        return [f"CHAIN {K.render_chain(c)} = {fmt(v)}" for c, v in sorted(self.coeffs.items())]


def _check_chain(K: SimplicialComplex, c, degree):
    if len(c) != degree + 1:
        raise ValueError(f"chain {c!r} does not have degree {degree}")
    n = len(K.elements)
    for i in c:
        if not 0 <= i < n:
            raise ValueError(f"chain {c!r} leaves the complex")
    for a, b in zip(c, c[1:]):
        if b not in K.leq[a]:
            raise ValueError(f"chain {c!r} is not weakly increasing")


def is_nondegenerate(c) -> bool:
    return all(a != b for a, b in zip(c, c[1:]))


def enumerate_chains(K: SimplicialComplex, n: int, normalized: bool = False) -> list[Chain]:
    """Weakly (or, if ``normalized``, strictly) increasing chains of degree ``n``,
    lexicographic in basis positions."""
    if n < 0:
        raise ValueError("negative degree")
    key = (n, normalized)
    cached = K._chains.get(key)
    if cached is not None:
        return cached
    if n == 0:
        out = [(i,) for i in range(len(K.elements))]
    else:
        out = []
        for c in enumerate_chains(K, n - 1, normalized):
            last = c[-1]
            for j in K.above[last]:
                if normalized and j == last:
                    continue
                out.append(c + (j,))
    K._chains[key] = out
    return out


def cofaces(K: SimplicialComplex, c: Chain, normalized: bool = False) -> list[Chain]:
    """Chains of one degree higher having ``c`` as a face, in basis order."""
    out = set()
    n = len(c)
    for i in range(n + 1):
        lo = K.above[c[i - 1]] if i > 0 else range(len(K.elements))
        hi = K.leq_sets_below[c[i]] if i < n else None
        for x in lo:
            if hi is not None and x not in hi:
                continue
            if normalized and ((i > 0 and x == c[i - 1]) or (i < n and x == c[i])):
                continue
            out.add(c[:i] + (x,) + c[i:])
    return sorted(out)


def restrict(c: Chain, indices: Sequence[int]) -> Chain:
    """The face (or, with repeated indices, the degeneracy) of ``c`` at the
    given weakly increasing positions."""
    n = len(c)
    prev = -1
    for i in indices:
        if not 0 <= i < n:
            raise IndexError(f"index {i} out of range for a chain of degree {n - 1}")
        if i < prev:
            raise ValueError("indices must be increasing")
        prev = i
    return tuple(c[i] for i in indices)


def simplicial_coboundary(f: Cochain, targets=None) -> Cochain:
    """(delta f)(s_0..s_{n+1}) = sum_i (-1)^i f(chain without s_i).

    ``targets`` restricts evaluation to the given chains of degree n + 1.
    """
    K, n = f.complex, f.degree
    if n < 0:
        return f._like({}, degree=n + 1)
    get = f.coeffs.get
    out = {}
    for c in enumerate_chains(K, n + 1) if targets is None else targets:
        total = 0
        for i in range(n + 2):
            v = get(c[:i] + c[i + 1:])
            if v:
                total = total - v if i & 1 else total + v
        if total:
            out[c] = total
    return f._like(out, degree=n + 1)


def simplicial_cup(f: Cochain, g: Cochain) -> Cochain:
    _same_space(f, g)
    p, q = f.degree, g.degree
    if p < 0 or q < 0:
        return f._like({}, degree=p + q)
    fget, gget = f.coeffs.get, g.coeffs.get
    out = {}
    for c in enumerate_chains(f.complex, p + q):
        a = fget(c[:p + 1])
        if a:
            b = gget(c[p:])
            if b:
                out[c] = a * b
    return f._like(out, degree=p + q)


def _same_space(*cochains: Cochain):
    first = cochains[0]
    for h in cochains[1:]:
        if h.complex is not first.complex and h.complex != first.complex:
            raise ValueError("cochains on different complexes")
        if h.field != first.field:
            raise ValueError("cochains over different fields")
        if h.side != first.side:
            raise ValueError("mixing simplicial and Hochschild cochains")


def delta_sign(offsets: Sequence[int], degrees: Sequence[int]) -> int:
    """Sign of the summand of Delta_{1,r} with b'_k = offsets[k] and
    b_k - b'_k = degrees[k]: (-1)^{sum (b_k - b'_k - 1) b'_k}."""
    e = 0
    for b0, d in zip(offsets, degrees):
        e += b0 * (d - 1)
    return -1 if e & 1 else 1


@lru_cache(maxsize=None)
def _placements(n: int, degrees: tuple) -> tuple:
    """Admissible (b'_1, ..., b'_r) with b'_k + d_k <= b'_{k+1} and
    b'_r + d_r <= n."""
    out = []

    def rec(k, lo, acc):
        if k == len(degrees):
            out.append(tuple(acc))
            return
        rest = sum(degrees[k + 1:])
        for b0 in range(lo, n - degrees[k] - rest + 1):
            acc.append(b0)
            rec(k + 1, b0 + degrees[k], acc)
            acc.pop()

    rec(0, 0, [])
    return tuple(out)


def brace_templates(n: int, degrees: tuple, sign: Callable) -> list:
    """For chains of degree ``n``: (sign, outer positions, inner slices) per
    admissible placement of arguments of the given degrees."""
    out = []
    for offsets in _placements(n, degrees):
        outer = []
        start = 0
        inner = []
        for b0, d in zip(offsets, degrees):
            outer.extend(range(start, b0 + 1))
            start = b0 + d
            inner.append((b0, b0 + d + 1))
        outer.extend(range(start, n + 1))
        out.append((sign(offsets, degrees), tuple(outer), tuple(inner)))
    return out


def brace_degree(f: Cochain, args: Sequence[Cochain]) -> int:
    return f.degree + sum(a.degree for a in args) - len(args)


def _evaluate_brace(f: Cochain, args: Sequence[Cochain], sign: Callable) -> Cochain:
    if not args:
        return f
    _same_space(f, *args)
    n = brace_degree(f, args)
    if n < 0 or f.degree < 0 or any(a.degree < 0 for a in args):
        return f._like({}, degree=n)
    degrees = tuple(a.degree for a in args)
    templates = brace_templates(n, degrees, sign)
    fget = f.coeffs.get
    gets = [a.coeffs.get for a in args]
    out = {}
    if templates:
        for c in enumerate_chains(f.complex, n):
            total = 0
            for s, outer, inner in templates:
                v = fget(tuple([c[i] for i in outer]))
                if not v:
                    continue
                for get, (lo, hi) in zip(gets, inner):
                    w = get(c[lo:hi])
                    if not w:
                        break
                    v = v * w
                else:
                    total = total + v if s > 0 else total - v
            if total:
                out[c] = total
    return f._like(out, degree=n)


def simplicial_brace(f: Cochain, args: Sequence[Cochain], *, sign: Callable | None = None
                     ) -> Cochain:
    """``f{f_1, ..., f_r}``: evaluate ``f`` on the outer face and each ``f_k``
    on the segment it absorbs.  Requires ``r >= 1``."""
    args = list(args)
    if not args:
        raise ValueError("a brace needs at least one argument")
    if f.side != SIMPLICIAL:
        raise ValueError("simplicial_brace expects simplicial cochains")
    return _evaluate_brace(f, args, sign or delta_sign)
