"""Divisibility and gcd theorems for the B and C sequences.

Most of these hold only under the residue condition k % 3 != 1.  Checks are
run regardless and tagged: hypothesis_met is False when the condition fails,
and such results land in an expected-failure pool instead of counting as
violations.  Demonstrating that the condition is necessary (e.g.
gcd(B_{4,2}, B_{4,3}) = 3) is as much a part of the contract as the theorems
themselves.

gcd is always taken on magnitudes with gcd(0, x) = |x|, since 1 - k is
negative for k >= 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .engines import b_table, c_table
from .identities import TermContext
from .ring import SequenceParams


@dataclass(frozen=True)
class GcdReport:
    theorem_name: str
    inputs: dict[str, int]
    computed_gcd: int
    expected: int
    hypothesis_met: bool
    holds: bool


def residue_hypothesis(params: SequenceParams) -> bool:
    """The k % 3 != 1 condition shared by the gcd theorems."""
    return params.k % 3 != 1


def _report(
    name: str, inputs: dict[str, int], computed: int, expected: int, hyp: bool
) -> GcdReport:
    return GcdReport(name, inputs, computed, expected, hyp, computed == expected)


def check_index_divisibility(
    params: SequenceParams, m: int, n: int, ctx: TermContext | None = None
) -> GcdReport:
    """B_m | B_n whenever m | n; no residue condition.

    Stated gcd-style: gcd(B_m, B_n) = B_m, which is equivalent since B_m > 0
    for m >= 1.
    """
    if m < 1 or n < 1:
        raise ValueError("indices must be >= 1")
    if n % m != 0:
        raise ValueError(f"m={m} does not divide n={n}")
    b = b_table(params, n) if ctx is None else ctx.ensure(n).b
    return _report(
        "index-divisibility",
        {"k": params.k, "m": m, "n": n},
        math.gcd(b[m], b[n]),
        b[m],
        True,
    )


def check_coprime_norm(
    seq: str, params: SequenceParams, n: int, ctx: TermContext | None = None
) -> GcdReport:
    """gcd(|1-k|, X_n) = 1 for n >= 1, under k % 3 != 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    x = _seq_table(seq, params, n, ctx)
    return _report(
        f"coprime-norm-{seq.lower()}",
        {"k": params.k, "n": n},
        math.gcd(params.k - 1, x[n]),
        1,
        residue_hypothesis(params),
    )


def check_consecutive_coprime(
    seq: str, params: SequenceParams, n: int, ctx: TermContext | None = None
) -> GcdReport:
    """gcd(X_n, X_{n+1}) = 1 for n >= 1, under k % 3 != 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    x = _seq_table(seq, params, n + 1, ctx)
    return _report(
        f"consecutive-gcd-{seq.lower()}",
        {"k": params.k, "n": n},
        math.gcd(x[n], x[n + 1]),
        1,
        residue_hypothesis(params),
    )


def check_b_c_coprime(
    params: SequenceParams, n: int, ctx: TermContext | None = None
) -> GcdReport:
    """gcd(B_n, C_n) = 1 for n >= 0, under k % 3 != 1."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if ctx is None:
        b, c = b_table(params, n), c_table(params, n)
    else:
        ctx.ensure(n)
        b, c = ctx.b, ctx.c
    return _report(
        "b-c-coprime",
        {"k": params.k, "n": n},
        math.gcd(b[n], c[n]),
        1,
        residue_hypothesis(params),
    )


def check_strong_gcd(
    params: SequenceParams, m: int, n: int, ctx: TermContext | None = None
) -> GcdReport:
    """gcd(B_m, B_n) = B_{gcd(m,n)} for m, n >= 1, under k % 3 != 1."""
    if m < 1 or n < 1:
        raise ValueError("indices must be >= 1")
    b = b_table(params, max(m, n)) if ctx is None else ctx.ensure(max(m, n)).b
    return _report(
        "strong-gcd",
        {"k": params.k, "m": m, "n": n},
        math.gcd(b[m], b[n]),
        b[math.gcd(m, n)],
        residue_hypothesis(params),
    )


def _seq_table(
    seq: str, params: SequenceParams, hi: int, ctx: TermContext | None
) -> list[int]:
    if seq not in ("B", "C"):
        raise ValueError(f"seq must be 'B' or 'C', got {seq!r}")
    if ctx is not None:
        return ctx.ensure(hi).seq(seq)
    return b_table(params, hi) if seq == "B" else c_table(params, hi)
