"""Finite simplicial complexes and their face posets."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

Simplex = tuple  # strictly sorted tuple of vertex labels

# characters reserved by the CHAIN dump format
_RESERVED = set(",|=#")


class FacetParseError(ValueError):
    def __init__(self, lineno: int | None, message: str):
        self.lineno = lineno
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(where + message)


def face_leq(a: Simplex, b: Simplex) -> bool:
    """Inclusion of vertex sets."""
    return set(a) <= set(b)


class SimplicialComplex:
    """A finite simplicial complex, closed under nonempty subsets.

    ``elements`` lists the simplices by dimension, then lexicographically;
    every downstream basis is indexed by positions in this list.  Chains are
    tuples of such positions.
    """

    def __init__(self, simplices: Iterable[Iterable[str]]):
        closed = set()
        for s in simplices:
            s = tuple(sorted(s))
            if not s:
                continue
            for k in range(1, len(s) + 1):
                closed.update(combinations(s, k))
        if not closed:
            raise ValueError("empty complex")
        self.elements: list[Simplex] = sorted(closed, key=lambda s: (len(s), s))
        self.index = {s: i for i, s in enumerate(self.elements)}
        self.vertices = sorted(v for (v,) in (s for s in self.elements if len(s) == 1))
        sets = [frozenset(s) for s in self.elements]
        n = len(self.elements)
        # above[i]: indices j with elements[i] <= elements[j], in basis order
        self.above = [tuple(j for j in range(n) if sets[i] <= sets[j]) for i in range(n)]
        self.leq = [frozenset(a) for a in self.above]
        self.below = [tuple(i for i in range(n) if sets[i] <= sets[j]) for j in range(n)]
        self.leq_sets_below = [frozenset(b) for b in self.below]
        self._chains: dict[tuple[int, bool], list[tuple[int, ...]]] = {}

    @property
    def simplices(self) -> frozenset:
        return frozenset(self.elements)

    @property
    def dimension(self) -> int:
        return max(len(s) for s in self.elements) - 1

    def __len__(self):
        return len(self.elements)

    def __contains__(self, s) -> bool:
        return tuple(sorted(s)) in self.index

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.elements == other.elements

    def __hash__(self):
        return hash(tuple(self.elements))

    def __repr__(self):
        return f"SimplicialComplex({self.f_vector()})"

    def f_vector(self) -> list[int]:
        counts = [0] * (self.dimension + 1)
        for s in self.elements:
            counts[len(s) - 1] += 1
        return counts

    def chain(self, *simplices) -> tuple[int, ...]:
        """Chain from simplices given as label iterables or strings ``"a,b"``."""
        out = []
        for s in simplices:
            if isinstance(s, str):
                s = s.split(",")
            out.append(self.index[tuple(sorted(s))])
        for a, b in zip(out, out[1:]):
            if b not in self.leq[a]:
                raise ValueError(f"not a chain: {simplices!r}")
        return tuple(out)

    def render_chain(self, chain) -> str:
        return "|".join(",".join(self.elements[i]) for i in chain)

    def max_chain_length(self) -> int:
        return self.dimension + 1


def poset_elements(K: SimplicialComplex) -> list[Simplex]:
    return list(K.elements)


def parse_facets(text: str) -> SimplicialComplex:
    facets = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        labels = stripped.split()
        for tok in labels:
            bad = _RESERVED.intersection(tok)
            if bad:
                raise FacetParseError(lineno, f"malformed vertex label {tok!r}")
        seen = set()
        for tok in labels:
            if tok in seen:
                raise FacetParseError(lineno, f"duplicate vertex {tok!r}")
            seen.add(tok)
        facets.append(labels)
    if not facets:
        raise FacetParseError(None, "no simplices listed")
    return SimplicialComplex(facets)


def load_facets(path) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_facets(fh.read())
