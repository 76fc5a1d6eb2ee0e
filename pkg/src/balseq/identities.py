"""Exact two-sided evaluation of the closed-form identities.

Every evaluator computes both sides of its identity as exact integers (or
exact rationals where a closed form divides) and reports whether they agree.
There is deliberately no tolerance anywhere: the domain is exact arithmetic,
and an inexact comparison would mask the very transcription errors this
package pins down.

Terms are always recomputed from the iterative recurrence, never from the
engine a caller might be trying to validate, so identity checks and engine
checks fail independently.  A TermContext carries the shared tables when a
sweep evaluates many tuples for the same k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .engines import b_table, c_table
from .ring import SequenceParams, alpha_power_components

Exact = int | Fraction


@dataclass(frozen=True)
class IdentityReport:
    identity_name: str
    inputs: dict[str, int]
    lhs: Exact
    rhs: Exact
    holds: bool
    hypothesis_met: bool = True


@dataclass
class TermContext:
    """Iterative-engine term tables for one k, grown on demand.

    b[i] = B_{k,i}, c[i] = C_{k,i}, pk[i] = (k-1)^i.
    """

    params: SequenceParams
    b: list[int] = field(default_factory=list)
    c: list[int] = field(default_factory=list)
    pk: list[int] = field(default_factory=list)

    def ensure(self, hi: int) -> TermContext:
        if hi >= len(self.b):
            self.b = b_table(self.params, hi)
            self.c = c_table(self.params, hi)
            norm = self.params.norm
            pk = [1]
            for _ in range(hi):
                pk.append(pk[-1] * norm)
            self.pk = pk
        return self

    def seq(self, name: str) -> list[int]:
        if name == "B":
            return self.b
        if name == "C":
            return self.c
        raise ValueError(f"seq must be 'B' or 'C', got {name!r}")


def _ctx(params: SequenceParams, hi: int, ctx: TermContext | None) -> TermContext:
    if ctx is None:
        ctx = TermContext(params)
    return ctx.ensure(hi)


def _report(name: str, inputs: dict[str, int], lhs: Exact, rhs: Exact) -> IdentityReport:
    return IdentityReport(name, inputs, lhs, rhs, lhs == rhs)


# ---------------------------------------------------------------------------
# side computations, shared between single-shot evaluators and sweeps

def catalan_sides(ctx: TermContext, seq: str, n: int, r: int) -> tuple[int, int]:
    x = ctx.seq(seq)
    lhs = x[n + r] * x[n - r] - x[n] * x[n]
    br = ctx.b[r]
    if seq == "B":
        rhs = -ctx.pk[n - r] * br * br
    else:
        rhs = 8 * ctx.pk[n - r + 1] * br * br
    return lhs, rhs


def cassini_sides(ctx: TermContext, seq: str, n: int) -> tuple[int, int]:
    x = ctx.seq(seq)
    lhs = x[n] * x[n] - x[n - 1] * x[n + 1]
    rhs = ctx.pk[n - 1] if seq == "B" else -8 * ctx.pk[n]
    return lhs, rhs


def docagne_sides(ctx: TermContext, seq: str, m: int, n: int) -> tuple[int, int]:
    x = ctx.seq(seq)
    lhs = x[m] * x[n + 1] - x[n] * x[m + 1]
    if seq == "B":
        rhs = ctx.pk[n] * ctx.b[m - n]
    else:
        rhs = -8 * ctx.pk[n + 1] * ctx.b[m - n]
    return lhs, rhs


def vajda1_sides(ctx: TermContext, n: int, i: int, j: int) -> tuple[int, int]:
    b = ctx.b
    lhs = b[n + i] * b[n + j] - b[n] * b[n + i + j]
    rhs = ctx.pk[n] * b[i] * b[j]
    return lhs, rhs


def vajda2_sides(ctx: TermContext, n: int, m: int, ell: int) -> tuple[int, int]:
    b = ctx.b
    lhs = b[n + ell] * b[m - ell] - b[n] * b[m]
    rhs = ctx.pk[n] * b[m - n - ell] * b[ell]
    return lhs, rhs


def sum_sides(ctx: TermContext, seq: str, n: int) -> tuple[int, Exact]:
    """Direct summation against the closed form.

    The C closed form uses additive constant 4 - 3k (the variant that is
    exactly integral; see the errata module for the failing printed form).
    """
    k = ctx.params.k
    x = ctx.seq(seq)
    lhs = sum(x[: n + 1])
    const = 1 if seq == "B" else 4 - 3 * k
    rhs = Fraction(-(2 * k + 1) * x[n] + (k - 1) * x[n - 1] + const, -2 * k)
    return lhs, rhs if rhs.denominator != 1 else rhs.numerator


def addition_sides(ctx: TermContext, m: int, n: int) -> tuple[int, int]:
    b = ctx.b
    k = ctx.params.k
    lhs = b[m + n]
    rhs = b[m] * b[n + 1] + (1 - k) * b[m - 1] * b[n]
    return lhs, rhs


def doubling_sides(ctx: TermContext, n: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Sides of both index-doubling identities: (even pair, odd pair)."""
    b = ctx.b
    k = ctx.params.k
    even = (b[2 * n], b[n] * (b[n + 1] + (1 - k) * b[n - 1]))
    odd = (b[2 * n - 1], b[n] * b[n] + (1 - k) * b[n - 1] * b[n - 1])
    return even, odd


def power_sum_sides(ctx: TermContext, n: int) -> tuple[int, int]:
    u, v = alpha_power_components(ctx.params, n)
    lhs = 2 * u + ctx.params.trace * v
    rhs = ctx.b[n + 1] - ctx.params.norm * ctx.b[n - 1]
    return lhs, rhs


def c_from_b_sides(ctx: TermContext, n: int) -> tuple[int, int]:
    k = ctx.params.k
    lhs = ctx.c[n]
    rhs = ctx.b[n + 1] + 3 * (1 - k) * ctx.b[n]
    return lhs, rhs


# ---------------------------------------------------------------------------
# single-shot evaluators

def catalan(
    seq: str, params: SequenceParams, n: int, r: int, ctx: TermContext | None = None
) -> IdentityReport:
    """X_{n+r}*X_{n-r} - X_n^2 against its closed form, 0 <= r <= n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if r < 0 or r > n:
        raise ValueError("r must satisfy 0 <= r <= n")
    ctx = _ctx(params, n + r, ctx)
    lhs, rhs = catalan_sides(ctx, seq, n, r)
    return _report(f"catalan-{seq.lower()}", {"k": params.k, "n": n, "r": r}, lhs, rhs)


def cassini(
    seq: str, params: SequenceParams, n: int, ctx: TermContext | None = None
) -> IdentityReport:
    """X_n^2 - X_{n-1}*X_{n+1} against (k-1)^{n-1} (B) or -8(k-1)^n (C)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ctx = _ctx(params, n + 1, ctx)
    lhs, rhs = cassini_sides(ctx, seq, n)
    return _report(f"cassini-{seq.lower()}", {"k": params.k, "n": n}, lhs, rhs)


def docagne(
    seq: str, params: SequenceParams, m: int, n: int, ctx: TermContext | None = None
) -> IdentityReport:
    """X_m*X_{n+1} - X_n*X_{m+1} against its closed form, m >= n >= 0."""
    if n < 0 or m < n:
        raise ValueError("indices must satisfy m >= n >= 0")
    ctx = _ctx(params, m + 1, ctx)
    lhs, rhs = docagne_sides(ctx, seq, m, n)
    return _report(f"docagne-{seq.lower()}", {"k": params.k, "m": m, "n": n}, lhs, rhs)


def vajda(
    form: int,
    params: SequenceParams,
    n: int,
    i: int | None = None,
    j: int | None = None,
    m: int | None = None,
    ell: int | None = None,
    ctx: TermContext | None = None,
) -> IdentityReport:
    """Both Vajda formulations, rhs base (k-1)^n in each.

    Form 1: B_{n+i}*B_{n+j} - B_n*B_{n+i+j} = (k-1)^n * B_i * B_j.
    Form 2: B_{n+l}*B_{m-l} - B_n*B_m = (k-1)^n * B_{m-n-l} * B_l for
    m > n + l.  The free indices are named n, i, j, m, l here; the sequence
    parameter k is a separate quantity (statements of this identity sometimes
    reuse the letter k for an index).
    """
    if form == 1:
        if i is None or j is None:
            raise ValueError("form 1 takes n, i, j")
        if n < 0 or i < 0 or j < 0:
            raise ValueError("form 1 requires n, i, j >= 0")
        ctx = _ctx(params, n + i + j, ctx)
        lhs, rhs = vajda1_sides(ctx, n, i, j)
        return _report("vajda-1", {"k": params.k, "n": n, "i": i, "j": j}, lhs, rhs)
    if form == 2:
        if m is None or ell is None:
            raise ValueError("form 2 takes n, m, ell")
        if n < 0 or ell < 0 or m <= n + ell:
            raise ValueError("form 2 requires n, ell >= 0 and m > n + ell")
        ctx = _ctx(params, max(m, n + ell), ctx)
        lhs, rhs = vajda2_sides(ctx, n, m, ell)
        return _report("vajda-2", {"k": params.k, "n": n, "m": m, "ell": ell}, lhs, rhs)
    raise ValueError("form must be 1 or 2")


def sum_closed_form(
    seq: str, params: SequenceParams, n: int, ctx: TermContext | None = None
) -> IdentityReport:
    """First n+1 terms summed directly against the closed form (exact division)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ctx = _ctx(params, n, ctx)
    lhs, rhs = sum_sides(ctx, seq, n)
    return _report(f"sum-{seq.lower()}", {"k": params.k, "n": n}, lhs, rhs)


def addition_formula(
    params: SequenceParams, m: int, n: int, ctx: TermContext | None = None
) -> IdentityReport:
    """B_{m+n} = B_m*B_{n+1} + (1-k)*B_{m-1}*B_n for m >= 1, n >= 0."""
    if m < 1 or n < 0:
        raise ValueError("indices must satisfy m >= 1, n >= 0")
    ctx = _ctx(params, m + n, ctx)
    lhs, rhs = addition_sides(ctx, m, n)
    return _report("addition", {"k": params.k, "m": m, "n": n}, lhs, rhs)


def doubling_formulas(
    params: SequenceParams, n: int, ctx: TermContext | None = None
) -> IdentityReport:
    """Both doubling identities at n; holds only when both hold.

    The reported sides are the even-index pair, or the first failing pair
    when one fails.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    ctx = _ctx(params, 2 * n + 1, ctx)
    even, odd = doubling_sides(ctx, n)
    holds = even[0] == even[1] and odd[0] == odd[1]
    shown = even if even[0] != even[1] or holds else odd
    return IdentityReport("doubling", {"k": params.k, "n": n}, shown[0], shown[1], holds)


def power_sum_identity(
    params: SequenceParams, n: int, ctx: TermContext | None = None
) -> IdentityReport:
    """alpha^n + beta^n (ring route) against B_{n+1} - (k-1)*B_{n-1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ctx = _ctx(params, n + 1, ctx)
    lhs, rhs = power_sum_sides(ctx, n)
    return _report("power-sum", {"k": params.k, "n": n}, lhs, rhs)


def c_from_b(
    params: SequenceParams, n: int, ctx: TermContext | None = None
) -> IdentityReport:
    """C_n = B_{n+1} + 3(1-k)*B_n for n >= 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    ctx = _ctx(params, n + 1, ctx)
    lhs, rhs = c_from_b_sides(ctx, n)
    return _report("c-from-b", {"k": params.k, "n": n}, lhs, rhs)
