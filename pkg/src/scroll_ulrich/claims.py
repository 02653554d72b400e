"""Registry of closed-form claims checked against engine computations.

The registry itself is data (``data/claims.json``).  Each record names an
engine evaluator and gives the expected values as formulas in t and r,
optionally split by the parity of r, each branch with its own minimum rank.
"""

from __future__ import annotations

import ast
import json
import operator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Callable

from .chow import XI, ScrollParams, canonical_class
from .constituents import TowerSpec, line_class
from .riemann_roch import chi_end
from .scroll import coh_tower_twist
from .tower import (
    build_tower,
    chi_line_dual,
    chi_next_dual,
    ext1_dim,
    ineq_value,
    moduli_dim,
    sporadic_next,
)
from .ulrich import Status, ulrich_scan, worker_count


class Undecided(Exception):
    """The engine could only bound the value, not pin it down."""


class RegistryError(ValueError):
    pass


# Formula evaluation ---------------------------------------------------------

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
}


def _eval_node(node, env):
    if isinstance(node, ast.Expression):
        return _eval_node(node.body, env)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return Fraction(node.value)
    if isinstance(node, ast.Name):
        if node.id not in env:
            raise RegistryError(f"unknown variable {node.id!r}")
        return Fraction(env[node.id])
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval_node(node.operand, env)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            exp = _eval_node(node.right, env)
            if exp.denominator != 1 or exp < 0:
                raise RegistryError("exponent must be a non-negative integer")
            return _eval_node(node.left, env) ** int(exp)
        if type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](_eval_node(node.left, env), _eval_node(node.right, env))
    raise RegistryError(f"unsupported syntax in formula: {ast.dump(node)}")


def eval_formula(text: str, **env) -> Fraction:
    """Evaluate an integer-coefficient rational expression in t and r exactly."""
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise RegistryError(f"bad formula {text!r}: {exc}") from None
    return _eval_node(tree, env)


# Engine evaluators ----------------------------------------------------------

def _exact(bounds):
    if not bounds.exact:
        raise Undecided(f"only bounded: [{bounds.lo}, {bounds.hi}]")
    return bounds.lo


RANK2_MIXED = ("M1,L1", "L1,M2", "M1,L2", "L2,M2")
EXT_PAIRS = (("M2", "M1"), ("M1", "M2"), ("L1", "M1"), ("M2", "L1"), ("L2", "M1"), ("M2", "L2"))


def ev_ext_dims(p, t, r):
    return tuple(_exact(ext1_dim(a, TowerSpec.parse(p, base))) for a, base in EXT_PAIRS)


def ev_rank2_sporadic_dim(p, t, r):
    return (moduli_dim(TowerSpec.parse(p, "M1,M2")),)


def ev_rank2_sporadic_c1(p, t, r):
    """c1 of [M1, M2] followed by K_X + 4 xi; special means the halves agree."""
    c1 = build_tower(TowerSpec.parse(p, "M1,M2")).c1
    return c1.coords() + (canonical_class(p) + 4 * XI).coords()


def ev_rank2_mixed_dims(p, t, r):
    return tuple(moduli_dim(TowerSpec.parse(p, s)) for s in RANK2_MIXED)


def ev_sporadic_c1(p, t, r):
    return build_tower(TowerSpec.sporadic(p, r)).c1.coords()


def ev_sporadic_c2(p, t, r):
    return build_tower(TowerSpec.sporadic(p, r)).c2.coords()


def ev_sporadic_c3(p, t, r):
    return (build_tower(TowerSpec.sporadic(p, r)).c3,)


def ev_sporadic_recursions(p, t, r):
    spec = TowerSpec.sporadic(p, r)
    nxt = sporadic_next(r)
    h1 = coh_tower_twist(p, spec, -line_class(nxt, p), nonsplit=True)[1]
    return (
        _exact(h1),
        chi_next_dual(spec, nxt),
        chi_line_dual(spec, spec.constituents[-1]),
        chi_end(p, spec),
    )


def ev_sporadic_dim(p, t, r):
    return (moduli_dim(TowerSpec.sporadic(p, r)),)


def ev_ineq(p, t, r):
    return (ineq_value(r, t),)


def ev_mixed_c1(p, t, r):
    return build_tower(TowerSpec.mixed(p, r)).c1.coords()


def ev_mixed_chi(p, t, r):
    return (chi_end(p, TowerSpec.mixed(p, r)),)


def ev_mixed_dim(p, t, r):
    return (moduli_dim(TowerSpec.mixed(p, r)),)


def ev_slopes(p, t, r):
    return (
        build_tower(TowerSpec.sporadic(p, r)).slope,
        build_tower(TowerSpec.mixed(p, r)).slope,
    )


def scan_beta_bound(t: int) -> int:
    """Smallest |beta| box holding every named class for this t, at least 8."""
    return max(8, 3 * t - 1)


def ev_ulrich_scan(p, t, r):
    results = ulrich_scan(p, beta_bound=scan_beta_bound(t), workers=1)
    if any(v.status == Status.UNDECIDED for _, v in results):
        raise Undecided("scan has UNDECIDED cells")
    names = {line_class(lbl, p): lbl for lbl in ("L1", "L2", "M1", "M2")}
    return tuple(sorted(names.get(D, str(D)) for D, v in results if v.status == Status.ULRICH))


EVALUATORS: dict[str, Callable] = {
    "ext_dims": ev_ext_dims,
    "rank2_sporadic_dim": ev_rank2_sporadic_dim,
    "rank2_sporadic_c1": ev_rank2_sporadic_c1,
    "rank2_mixed_dims": ev_rank2_mixed_dims,
    "sporadic_c1": ev_sporadic_c1,
    "sporadic_c2": ev_sporadic_c2,
    "sporadic_c3": ev_sporadic_c3,
    "sporadic_recursions": ev_sporadic_recursions,
    "sporadic_dim": ev_sporadic_dim,
    "ineq": ev_ineq,
    "mixed_c1": ev_mixed_c1,
    "mixed_chi": ev_mixed_chi,
    "mixed_dim": ev_mixed_dim,
    "slopes": ev_slopes,
    "ulrich_scan": ev_ulrich_scan,
}

COMPARATORS = ("equal", "positive", "labels")


# Registry -------------------------------------------------------------------

@dataclass(frozen=True)
class Branch:
    r_min: int
    values: tuple[str, ...]


@dataclass(frozen=True)
class ClaimRecord:
    id: str
    reference: str
    evaluator: str
    comparator: str
    uses_r: bool
    branches: dict = field(hash=False)  # "any" | "odd" | "even" -> Branch
    known_discrepancy: bool = False

    def branch(self, r: int | None) -> Branch | None:
        if not self.uses_r:
            return self.branches.get("any")
        key = "any" if "any" in self.branches else ("odd" if r % 2 else "even")
        b = self.branches.get(key)
        if b is None or r < b.r_min:
            return None
        return b

    def expected(self, t: int, r: int | None) -> tuple:
        b = self.branch(r)
        if self.comparator == "labels":
            return tuple(sorted(b.values))
        env = {"t": t} if r is None else {"t": t, "r": r}
        return tuple(eval_formula(v, **env) for v in b.values)


def _parse_record(raw: dict) -> ClaimRecord:
    try:
        rec = ClaimRecord(
            id=raw["id"],
            reference=raw["reference"],
            evaluator=raw["evaluator"],
            comparator=raw.get("comparator", "equal"),
            uses_r=bool(raw.get("uses_r", True)),
            branches={
                k: Branch(int(v.get("r_min", 1)), tuple(v["values"]))
                for k, v in raw["expected"].items()
            },
            known_discrepancy=bool(raw.get("known_discrepancy", False)),
        )
    except KeyError as exc:
        raise RegistryError(f"claim record missing field {exc}") from None
    if rec.evaluator not in EVALUATORS:
        raise RegistryError(f"{rec.id}: unknown evaluator {rec.evaluator!r}")
    if rec.comparator not in COMPARATORS:
        raise RegistryError(f"{rec.id}: unknown comparator {rec.comparator!r}")
    if not set(rec.branches) <= {"any", "odd", "even"} or not rec.branches:
        raise RegistryError(f"{rec.id}: branches must be 'any' or 'odd'/'even'")
    if rec.comparator != "labels":
        for b in rec.branches.values():
            for v in b.values:
                eval_formula(v, t=1, r=1)
    return rec


def load_registry(path=None) -> list[ClaimRecord]:
    if path is None:
        text = resources.files("scroll_ulrich").joinpath("data/claims.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    data = json.loads(text)
    records = [_parse_record(raw) for raw in data["claims"]]
    ids = [r.id for r in records]
    if len(ids) != len(set(ids)):
        raise RegistryError("duplicate claim ids")
    return records


# Evaluation -----------------------------------------------------------------

@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    t: int
    r: int | None
    expected: tuple
    computed: tuple | None
    status: str
    reference: str = ""
    known_discrepancy: bool = False
    note: str = ""

    def sort_key(self):
        return (self.claim_id, self.t, -1 if self.r is None else self.r)


def _compare(rec: ClaimRecord, expected, computed) -> bool:
    if rec.comparator == "positive":
        return all(c > 0 for c in computed)
    return tuple(expected) == tuple(computed)


def evaluate(rec: ClaimRecord, t: int, r: int | None) -> ClaimResult:
    params = ScrollParams.sporadic(t)
    expected = rec.expected(t, r)
    try:
        computed = EVALUATORS[rec.evaluator](params, t, r)
    except Undecided as exc:
        return ClaimResult(rec.id, t, r, expected, None, "UNDECIDED", rec.reference,
                           rec.known_discrepancy, str(exc))
    status = "PASS" if _compare(rec, expected, computed) else "FAIL"
    return ClaimResult(rec.id, t, r, expected, tuple(computed), status, rec.reference,
                       rec.known_discrepancy)


def grid_cells(records, t_values, r_values):
    for rec in records:
        for t in t_values:
            if not rec.uses_r:
                if rec.branch(None) is not None:
                    yield rec, t, None
                continue
            for r in r_values:
                if rec.branch(r) is not None:
                    yield rec, t, r


def verify_claims(t_values, r_values, registry=None, claim_ids=None,
                  workers: int | None = None) -> list[ClaimResult]:
    records = load_registry() if registry is None else list(registry)
    if claim_ids is not None:
        known = {rec.id for rec in records}
        missing = [c for c in claim_ids if c not in known]
        if missing:
            raise RegistryError(f"unknown claim ids: {', '.join(missing)}")
        records = [rec for rec in records if rec.id in set(claim_ids)]
    cells = list(grid_cells(records, list(t_values), list(r_values)))
    n = worker_count(workers)
    if n == 1:
        results = [evaluate(*cell) for cell in cells]
    else:
        with ThreadPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(lambda cell: evaluate(*cell), cells))
    return sorted(results, key=ClaimResult.sort_key)


def unexpected_failures(results, strict: bool = False) -> list[ClaimResult]:
    return [
        res for res in results
        if res.status == "FAIL" and (strict or not res.known_discrepancy)
    ]
