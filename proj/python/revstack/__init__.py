"""Reverse-pass stack sorting: tiers, count tables, bases and series."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import _revstack
from ._revstack import CapExceeded, PermutationError, SeriesError

__all__ = [
    "CapExceeded",
    "PermutationError",
    "SeriesError",
    "parse",
    "tier",
    "tier_profile",
    "trace",
    "machine",
    "machine_sorts",
    "classify",
    "exact_table",
    "cumulative_table",
    "refined_counts",
    "basis",
    "av_count",
    "entringer",
    "family",
    "bijection_f",
    "bijection_f_inverse",
    "series",
    "verify",
]

Perm = Union[str, Sequence[int]]


def parse(perm: Perm) -> list[int]:
    """Accepts "2413", "2,4,1,3" or a sequence of ints."""
    if isinstance(perm, str):
        return _revstack.parse(perm)
    return _revstack.parse(",".join(str(int(v)) for v in perm)) if len(perm) else []


def tier(perm: Perm) -> int:
    return _revstack.rev_tier(parse(perm))


def tier_profile(perm: Perm) -> dict:
    return json.loads(_revstack.tier_json(parse(perm)))


def trace(perm: Perm) -> dict:
    return json.loads(_revstack.trace_json(parse(perm)))


def machine(perm: Perm, stacks: int) -> dict:
    return json.loads(_revstack.machine_json(parse(perm), stacks))


def machine_sorts(perm: Perm, stacks: int) -> bool:
    return _revstack.machine_sorts(parse(perm), stacks)


def classify(perm: Perm) -> str:
    return _revstack.classify(parse(perm))


def _two_key(cells) -> dict[tuple[int, int], int]:
    return {(n, t): int(v) for n, t, _, v in cells}


def exact_table(max_n: int, workers: int = 0, allow_large: bool = False) -> dict[tuple[int, int], int]:
    """{(n, t): count} for rev-tier exactly t."""
    return _two_key(_revstack.exact_table(max_n, workers, allow_large))


def cumulative_table(max_n: int, workers: int = 0, allow_large: bool = False) -> dict[tuple[int, int], int]:
    """{(n, t): count} for rev-tier at most t."""
    return _two_key(_revstack.cumulative_table(max_n, workers, allow_large))


def refined_counts(max_n: int, source: str = "recurrence", workers: int = 0) -> dict[str, dict[tuple[int, int, int], int]]:
    """{"eta" | "mu_u" | "mu_d": {(n, t, k): count}}, zero entries omitted."""
    raw = _revstack.refined_counts(max_n, source, workers)
    return {kind: {(n, t, k): int(v) for n, t, k, v in cells} for kind, cells in raw.items()}


def basis(tier_bound: int, max_len: int | None = None, strategy: str = "", workers: int = 0) -> dict:
    if max_len is None:
        max_len = min(3 * (tier_bound + 1), 10)
    return json.loads(_revstack.basis_json(tier_bound, max_len, strategy, workers))


def av_count(basis_perms: Iterable[Perm], max_n: int, workers: int = 0) -> list[int]:
    return list(_revstack.av_count([parse(p) for p in basis_perms], max_n, workers))


def entringer(max_n: int) -> dict:
    return json.loads(_revstack.entringer_json(max_n))


def family(n: int, workers: int = 0) -> dict:
    return json.loads(_revstack.family_json(n, workers))


def bijection_f(perm: Perm) -> list[int]:
    return _revstack.bijection_f(parse(perm))


def bijection_f_inverse(perm: Perm) -> list[int]:
    return _revstack.bijection_f_inverse(parse(perm))


def series(name: str, order: int = 20) -> list[Fraction]:
    """Coefficients x^0..x^order of mu0, mu1, mu2, tier0, tier1, tier2 or wilf."""
    return [Fraction(int(p), int(q)) for p, q in _revstack.series(name, order)]


def verify(suite: str = "all", max_n: int = 9, workers: int = 0) -> list[dict]:
    return [
        {"suite": s, "name": name, "passed": ok, "detail": detail}
        for s, name, ok, detail in _revstack.verify(suite, max_n, workers)
    ]
