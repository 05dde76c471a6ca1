"""The comparison map between simplicial and relative Hochschild cochains,
and seeded randomized checks that it preserves the structure."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from .complex import SimplicialComplex
from .hochschild import hochschild_brace, hochschild_coboundary, hochschild_cup
from .scalars import Field
from .subdivision import (
    HOCHSCHILD,
    SIMPLICIAL,
    Cochain,
    simplicial_brace,
    simplicial_coboundary,
    simplicial_cup,
)


def iota(f: Cochain) -> Cochain:
    """Send a cochain on chains ``s_0 <= ... <= s_n`` to the relative
    Hochschild cochain with the same coefficient on the matching path."""
    if f.side != SIMPLICIAL:
        raise ValueError("iota expects a simplicial cochain")
    return f.with_side(HOCHSCHILD)


def iota_inverse(F: Cochain) -> Cochain:
    if F.side != HOCHSCHILD:
        raise ValueError("iota_inverse expects a Hochschild cochain")
    return F.with_side(SIMPLICIAL)


@dataclass
class CheckReport:
    name: str
    passed: bool
    max_support: int
    trials: int
    seed: int
    # first failing discrepancy, for --dump
    witness: Cochain | None = dc_field(default=None, repr=False, compare=False)

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"CHECK {self.name} {status} max_support={self.max_support} "
                f"trials={self.trials} seed={self.seed}")


def trial_rng(seed: int, name: str, trial: int) -> random.Random:
    return random.Random(f"{seed}/{name}/{trial}")


def run_check(name, seed, trials, discrepancy) -> CheckReport:
    """Aggregate ``discrepancy(rng)`` over trials in index order."""
    worst = 0
    witness = None
    for t in range(trials):
        d = discrepancy(trial_rng(seed, name, t))
        if d.support > worst:
            worst = d.support
        if witness is None and not d.is_zero():
            witness = d
    return CheckReport(name, worst == 0, worst, trials, seed, witness)


def _degrees(degrees) -> list[int]:
    if isinstance(degrees, int):
        return list(range(degrees + 1))
    return list(degrees)


def verify_chain_map(K: SimplicialComplex, field: Field, degrees=2, seed: int = 0,
                     trials: int = 50) -> CheckReport:
    """iota(delta f) == delta(iota f) for random dense ``f``."""
    degs = _degrees(degrees)

    def discrepancy(rng):
        f = Cochain.random(K, field, rng.choice(degs), rng)
        return iota(simplicial_coboundary(f)) - hochschild_coboundary(iota(f))

    return run_check("cct-chain", seed, trials, discrepancy)


def verify_cup_map(K: SimplicialComplex, field: Field, degrees=2, seed: int = 0,
                   trials: int = 50) -> CheckReport:
    degs = _degrees(degrees)

    def discrepancy(rng):
        f = Cochain.random(K, field, rng.choice(degs), rng)
        g = Cochain.random(K, field, rng.choice(degs), rng)
        return iota(simplicial_cup(f, g)) - hochschild_cup(iota(f), iota(g))

    return run_check("cct-cup", seed, trials, discrepancy)


def verify_brace_map(K: SimplicialComplex, field: Field, degrees=2, seed: int = 0,
                     trials: int = 50, max_args: int = 2) -> CheckReport:
    degs = _degrees(degrees)

    def discrepancy(rng):
        f = Cochain.random(K, field, rng.choice(degs), rng)
        args = [Cochain.random(K, field, rng.choice(degs), rng)
                for _ in range(rng.randint(1, max_args))]
        lhs = iota(simplicial_brace(f, args))
        rhs = hochschild_brace(iota(f), [iota(a) for a in args])
        return lhs - rhs

    return run_check("cct-brace", seed, trials, discrepancy)


def verify_bdga(K: SimplicialComplex, field: Field, side: str, degrees=2, seed: int = 0,
                trials: int = 50, max_args: int = 2) -> list[CheckReport]:
    """One report per identity: brace, distributivity, boundary, plus the
    Gerstenhaber-bracket corollary on cocycles."""
    from . import relations as R

    ops = R.simplicial_ops() if side == SIMPLICIAL else R.hochschild_ops()
    max_deg = max(_degrees(degrees))
    prefix = f"bdga-{side}"
    reports = []
    for rel in R.RELATIONS:
        def discrepancy(rng, rel=rel):
            case = R.random_relation_case(K, field, rng, ops.side, max_deg, max_args)
            return R.relation_discrepancy(ops, rel, case)
        reports.append(run_check(f"{prefix}.{rel}", seed, trials, discrepancy))

    def bracket(rng):
        x = R.random_cocycle(K, field, rng, ops, rng.randint(0, max_deg))
        y = R.random_cocycle(K, field, rng, ops, rng.randint(0, max_deg))
        return ops.delta(R.gerstenhaber_bracket(ops, x, y))

    reports.append(run_check(f"{prefix}.bracket", seed, trials, bracket))
    return reports
