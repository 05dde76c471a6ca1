"""Cohomology of the two cochain complexes by exact elimination."""

from __future__ import annotations

from dataclasses import dataclass

from .complex import SimplicialComplex
from .hochschild import hochschild_coboundary
from .scalars import Field, FieldSpec, field_make
from .subdivision import (
    SIMPLICIAL,
    Cochain,
    cofaces,
    enumerate_chains,
    simplicial_coboundary,
)


@dataclass
class CoboundaryMatrix:
    """Sparse matrix of the coboundary from degree ``degree`` to
    ``degree + 1``; ``columns[j]`` maps row positions to entries."""

    degree: int
    rows: list
    cols: list
    columns: list

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    def to_dense(self, zero=0):
        out = [[zero] * len(self.cols) for _ in self.rows]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                out[i][j] = v
        return out


def coboundary_matrix(K: SimplicialComplex, side: str, n: int, normalized: bool = True,
                      field: Field | None = None) -> CoboundaryMatrix:
    field = field or field_make("q")
    delta = simplicial_coboundary if side == SIMPLICIAL else hochschild_coboundary
    cols = enumerate_chains(K, n, normalized)
    rows = enumerate_chains(K, n + 1, normalized)
    row_index = {c: i for i, c in enumerate(rows)}
    columns = []
    for c in cols:
        # only cofaces of c can see its indicator; for normalized bases the
        # image of a normalized cochain vanishes off the normalized rows
        image = delta(Cochain.indicator(K, field, c, side), targets=cofaces(K, c, normalized))
        columns.append({row_index[r]: v for r, v in image.coeffs.items()})
    return CoboundaryMatrix(n, rows, cols, columns)


def _eliminate(vectors, field: Field):
    """Echelon form of sparse vectors (dicts).  Returns pivots as
    {leading index: vector scaled to leading 1}."""
    red = field.reduce
    pivots = {}
    for vec in vectors:
        v = {k: x for k, x in vec.items() if x}
        while v:
            lead = min(v)
            p = pivots.get(lead)
            if p is None:
                inv = field.inv(v[lead])
                pivots[lead] = {k: red(x * inv) for k, x in v.items()}
                break
            a = v[lead]
            for k, x in p.items():
                y = red(v.get(k, 0) - a * x)
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
    return pivots


def rank(M: CoboundaryMatrix, field: Field) -> int:
    return len(_eliminate(M.columns, field))


def nullspace(M: CoboundaryMatrix, field: Field) -> list[dict]:
    """Basis of the kernel as sparse column-coordinate vectors."""
    red = field.reduce
    # reduced row echelon form of the row vectors of M
    nrows, ncols = M.shape
    rows = [dict() for _ in range(nrows)]
    for j, col in enumerate(M.columns):
        for i, v in col.items():
            rows[i][j] = v
    pivots = _eliminate(rows, field)
    leads = sorted(pivots, reverse=True)
    for lead in leads:
        p = pivots[lead]
        for other in leads:
            if other >= lead:
                continue
            q = pivots[other]
            a = q.get(lead)
            if a:
                for k, x in p.items():
                    y = red(q.get(k, 0) - a * x)
                    if y:
                        q[k] = y
                    else:
                        q.pop(k, None)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        vec = {free: field.one}
        for lead, p in pivots.items():
            a = p.get(free)
            if a:
                vec[lead] = red(-a)
        basis.append(vec)
    return basis


@dataclass
class BettiTable:
    field: FieldSpec
    values: tuple
    side: str
    normalized: bool

    def render(self) -> str:
        body = " ".join(f"b{i}={b}" for i, b in enumerate(self.values))
        norm = "true" if self.normalized else "false"
        return f"BETTI side={self.side} field={self.field.token} normalized={norm} : {body}"


def betti(K: SimplicialComplex, side: str = SIMPLICIAL, field: Field | FieldSpec | str = "q",
          max_degree: int | None = None, normalized: bool = True) -> BettiTable:
    if not isinstance(field, Field):
        field = field_make(field)
    if max_degree is None:
        max_degree = K.dimension + 1
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    ranks = []
    dims = []
    for n in range(max_degree + 1):
        M = coboundary_matrix(K, side, n, normalized, field)
        dims.append(len(M.cols))
        ranks.append(rank(M, field))
    values = []
    for n in range(max_degree + 1):
        below = ranks[n - 1] if n else 0
        values.append(dims[n] - ranks[n] - below)
    return BettiTable(field.spec, tuple(values), side, normalized)


def random_cocycle(K, field, degree, rng, side=SIMPLICIAL, normalized=False) -> Cochain:
    """Uniform random combination of a kernel basis of the coboundary."""
    M = coboundary_matrix(K, side, degree, normalized, field)
    coeffs = {}
    for vec in nullspace(M, field):
        s = field.random(rng)
        for j, x in vec.items():
            coeffs[M.cols[j]] = coeffs.get(M.cols[j], 0) + s * x
    return Cochain(K, field, degree, coeffs, side, check=False)
