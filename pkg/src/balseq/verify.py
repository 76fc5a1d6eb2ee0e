"""Sweep runner: every identity and gcd theorem over a (k, index) box.

Each catalog entry sweeps its whole in-domain tuple set up to a max index
and returns counts plus the failing reports (reports are only materialized
for failures; sweeps over millions of tuples stay allocation-free).  The
hot multi-index loops repeat the arithmetic of the matching *_sides
functions inline; a unit test pins the two code paths together.

Checks whose residue hypothesis (k % 3 != 1) fails are counted in a
separate expected-failure pool and never as violations.  All aggregation is
commutative and the final report is canonically sorted, so the emitted JSON
is byte-identical no matter how many worker threads ran the sweep.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import __version__
from .divisibility import (
    GcdReport,
    check_b_c_coprime,
    check_consecutive_coprime,
    check_coprime_norm,
    check_index_divisibility,
    check_strong_gcd,
)
from .engines import a_matrix, mat_pow, r_base_matrix, r_matrix
from .identities import (
    IdentityReport,
    TermContext,
    cassini_sides,
    c_from_b_sides,
    doubling_sides,
    power_sum_sides,
)
from .ring import SequenceParams

Report = IdentityReport | GcdReport


@dataclass
class SweepOutcome:
    """Aggregate of one identity swept over one or more parameter boxes."""

    name: str
    checked: int = 0
    held: int = 0
    failed: int = 0
    hypothesis_not_met: int = 0
    violations: list[Report] = field(default_factory=list)
    expected_failures: list[Report] = field(default_factory=list)

    def absorb(self, report: Report) -> None:
        self.checked += 1
        if not report.hypothesis_met:
            self.hypothesis_not_met += 1
            if not report.holds:
                self.expected_failures.append(report)
        elif report.holds:
            self.held += 1
        else:
            self.failed += 1
            self.violations.append(report)

    def merge(self, other: SweepOutcome) -> None:
        self.checked += other.checked
        self.held += other.held
        self.failed += other.failed
        self.hypothesis_not_met += other.hypothesis_not_met
        self.violations.extend(other.violations)
        self.expected_failures.extend(other.expected_failures)


def _identity_fail(out: SweepOutcome, name, inputs, lhs, rhs) -> None:
    out.failed += 1
    out.violations.append(IdentityReport(name, inputs, lhs, rhs, False))


# ---------------------------------------------------------------------------
# identity sweeps

def sweep_catalan(seq: str):
    name = f"catalan-{seq.lower()}"

    def run(params: SequenceParams, max_index: int) -> SweepOutcome:
        out = SweepOutcome(name)
        ctx = TermContext(params).ensure(2 * max_index)
        x, b, pk, k = ctx.seq(seq), ctx.b, ctx.pk, params.k
        sign = -1 if seq == "B" else 8
        shift = 0 if seq == "B" else 1
        for n in range(1, max_index + 1):
            xn2 = x[n] * x[n]
            for r in range(n + 1):
                lhs = x[n + r] * x[n - r] - xn2
                br = b[r]
                rhs = sign * pk[n - r + shift] * br * br
                out.checked += 1
                if lhs == rhs:
                    out.held += 1
                else:
                    _identity_fail(out, name, {"k": k, "n": n, "r": r}, lhs, rhs)
        return out

    return run


def sweep_cassini(seq: str):
    name = f"cassini-{seq.lower()}"

    def run(params: SequenceParams, max_index: int) -> SweepOutcome:
        out = SweepOutcome(name)
        ctx = TermContext(params).ensure(max_index + 1)
        for n in range(1, max_index + 1):
            lhs, rhs = cassini_sides(ctx, seq, n)
            out.checked += 1
            if lhs == rhs:
                out.held += 1
            else:
                _identity_fail(out, name, {"k": params.k, "n": n}, lhs, rhs)
        return out

    return run


def sweep_docagne(seq: str):
    name = f"docagne-{seq.lower()}"

    def run(params: SequenceParams, max_index: int) -> SweepOutcome:
        out = SweepOutcome(name)
        ctx = TermContext(params).ensure(max_index + 1)
        x, b, pk, k = ctx.seq(seq), ctx.b, ctx.pk, params.k
        scale = 1 if seq == "B" else -8
        shift = 0 if seq == "B" else 1
        for m in range(max_index + 1):
            xm, xm1 = x[m], x[m + 1]
            for n in range(m + 1):
                lhs = xm * x[n + 1] - x[n] * xm1
                rhs = scale * pk[n + shift] * b[m - n]
                out.checked += 1
                if lhs == rhs:
                    out.held += 1
                else:
                    _identity_fail(out, name, {"k": k, "m": m, "n": n}, lhs, rhs)
        return out

    return run


def sweep_vajda_1(params: SequenceParams, max_index: int) -> SweepOutcome:
    out = SweepOutcome("vajda-1")
    ctx = TermContext(params).ensure(3 * max_index)
    b, pk, k = ctx.b, ctx.pk, params.k
    checked = held = 0
    for n in range(max_index + 1):
        pkn = pk[n]
        bn = b[n]
        for i in range(max_index + 1):
            bni = b[n + i]
            pknbi = pkn * b[i]
            base = n + i
            for j in range(max_index + 1):
                lhs = bni * b[n + j] - bn * b[base + j]
                rhs = pknbi * b[j]
                checked += 1
                if lhs == rhs:
                    held += 1
                else:
                    _identity_fail(
                        out, "vajda-1", {"k": k, "n": n, "i": i, "j": j}, lhs, rhs
                    )
    out.checked += checked
    out.held += held
    return out


def sweep_vajda_2(params: SequenceParams, max_index: int) -> SweepOutcome:
    out = SweepOutcome("vajda-2")
    ctx = TermContext(params).ensure(max_index)
    b, pk, k = ctx.b, ctx.pk, params.k
    checked = held = 0
    for m in range(1, max_index + 1):
        bm = b[m]
        for n in range(m):
            pkn = pk[n]
            bn_bm = b[n] * bm
            for ell in range(m - n):
                lhs = b[n + ell] * b[m - ell] - bn_bm
                rhs = pkn * b[m - n - ell] * b[ell]
                checked += 1
                if lhs == rhs:
                    held += 1
                else:
                    _identity_fail(
                        out, "vajda-2", {"k": k, "n": n, "m": m, "ell": ell}, lhs, rhs
                    )
    out.checked += checked
    out.held += held
    return out


def sweep_sum(seq: str):
    name = f"sum-{seq.lower()}"

    def run(params: SequenceParams, max_index: int) -> SweepOutcome:
        out = SweepOutcome(name)
        ctx = TermContext(params).ensure(max_index)
        x = ctx.seq(seq)
        k = params.k
        const = 1 if seq == "B" else 4 - 3 * k
        running = x[0]
        for n in range(1, max_index + 1):
            running += x[n]
            rhs = Fraction(-(2 * k + 1) * x[n] + (k - 1) * x[n - 1] + const, -2 * k)
            out.checked += 1
            if running == rhs:
                out.held += 1
            else:
                _identity_fail(out, name, {"k": k, "n": n}, running, rhs)
        return out

    return run


def sweep_addition(params: SequenceParams, max_index: int) -> SweepOutcome:
    out = SweepOutcome("addition")
    ctx = TermContext(params).ensure(2 * max_index)
    b, k = ctx.b, params.k
    checked = held = 0
    for m in range(1, max_index + 1):
        bm, bm1 = b[m], b[m - 1]
        for n in range(max_index + 1):
            lhs = b[m + n]
            rhs = bm * b[n + 1] + (1 - k) * bm1 * b[n]
            checked += 1
            if lhs == rhs:
                held += 1
            else:
                _identity_fail(out, "addition", {"k": k, "m": m, "n": n}, lhs, rhs)
    out.checked += checked
    out.held += held
    return out


def sweep_doubling(params: SequenceParams, max_index: int) -> SweepOutcome:
    out = SweepOutcome("doubling")
    ctx = TermContext(params).ensure(2 * max_index + 1)
    for n in range(1, max_index + 1):
        even, odd = doubling_sides(ctx, n)
        holds = even[0] == even[1] and odd[0] == odd[1]
        out.checked += 1
        if holds:
            out.held += 1
        else:
            shown = even if even[0] != even[1] else odd
            _identity_fail(
                out, "doubling", {"k": params.k, "n": n}, shown[0], shown[1]
            )
    return out


def sweep_power_sum(params: SequenceParams, max_index: int) -> SweepOutcome:
    out = SweepOutcome("power-sum")
    ctx = TermContext(params).ensure(max_index + 1)
    for n in range(1, max_index + 1):
        lhs, rhs = power_sum_sides(ctx, n)
        out.checked += 1
        if lhs == rhs:
            out.held += 1
        else:
            _identity_fail(out, "power-sum", {"k": params.k, "n": n}, lhs, rhs)
    return out


def sweep_c_from_b(params: SequenceParams, max_index: int) -> SweepOutcome:
    out = SweepOutcome("c-from-b")
    ctx = TermContext(params).ensure(max_index + 1)
    for n in range(max_index + 1):
        lhs, rhs = c_from_b_sides(ctx, n)
        out.checked += 1
        if lhs == rhs:
            out.held += 1
        else:
            _identity_fail(out, "c-from-b", {"k": params.k, "n": n}, lhs, rhs)
    return out


def _sweep_entrywise(out, name, k, n, got, want) -> None:
    for entry in range(4):
        out.checked += 1
        if got[entry] == want[entry]:
            out.held += 1
        else:
            inputs = {"k": k, "entry": entry}
            if n is not None:
                inputs["n"] = n
            _identity_fail(out, name, inputs, got[entry], want[entry])


def sweep_matrix_b(params: SequenceParams, max_index: int) -> SweepOutcome:
    """A^n (binary exponentiation) against the iterative B terms, entrywise."""
    out = SweepOutcome("matrix-b")
    ctx = TermContext(params).ensure(max_index + 1)
    b, k = ctx.b, params.k
    a = a_matrix(params)
    for n in range(1, max_index + 1):
        p = mat_pow(a, n)
        got = (p.a11, p.a12, p.a21, p.a22)
        want = (b[n + 1], (1 - k) * b[n], b[n], (1 - k) * b[n - 1])
        _sweep_entrywise(out, "matrix-b", k, n, got, want)
    return out


def sweep_matrix_c(params: SequenceParams, max_index: int) -> SweepOutcome:
    """R*A^n against the iterative C terms, entrywise."""
    out = SweepOutcome("matrix-c")
    ctx = TermContext(params).ensure(max_index + 1)
    c, k = ctx.c, params.k
    for n in range(1, max_index + 1):
        p = r_matrix(params, n)
        got = (p.a11, p.a12, p.a21, p.a22)
        want = (c[n + 1], (1 - k) * c[n], c[n], (1 - k) * c[n - 1])
        _sweep_entrywise(out, "matrix-c", k, n, got, want)
    return out


def sweep_ar_commute(params: SequenceParams, max_index: int) -> SweepOutcome:
    out = SweepOutcome("ar-commute")
    a, r = a_matrix(params), r_base_matrix(params)
    ar, ra = a @ r, r @ a
    _sweep_entrywise(
        out,
        "ar-commute",
        params.k,
        None,
        (ar.a11, ar.a12, ar.a21, ar.a22),
        (ra.a11, ra.a12, ra.a21, ra.a22),
    )
    return out


# ---------------------------------------------------------------------------
# divisibility sweeps

def sweep_index_divisibility(params: SequenceParams, max_index: int) -> SweepOutcome:
    out = SweepOutcome("index-divisibility")
    ctx = TermContext(params).ensure(max_index)
    for m in range(1, max_index + 1):
        for n in range(m, max_index + 1, m):
            out.absorb(check_index_divisibility(params, m, n, ctx))
    return out


def sweep_coprime_norm(seq: str):
    def run(params: SequenceParams, max_index: int) -> SweepOutcome:
        out = SweepOutcome(f"coprime-norm-{seq.lower()}")
        ctx = TermContext(params).ensure(max_index)
        for n in range(1, max_index + 1):
            out.absorb(check_coprime_norm(seq, params, n, ctx))
        return out

    return run


def sweep_consecutive_gcd(seq: str):
    def run(params: SequenceParams, max_index: int) -> SweepOutcome:
        out = SweepOutcome(f"consecutive-gcd-{seq.lower()}")
        ctx = TermContext(params).ensure(max_index + 1)
        for n in range(1, max_index + 1):
            out.absorb(check_consecutive_coprime(seq, params, n, ctx))
        return out

    return run


def sweep_b_c_coprime(params: SequenceParams, max_index: int) -> SweepOutcome:
    out = SweepOutcome("b-c-coprime")
    ctx = TermContext(params).ensure(max_index)
    for n in range(max_index + 1):
        out.absorb(check_b_c_coprime(params, n, ctx))
    return out


def sweep_strong_gcd(params: SequenceParams, max_index: int) -> SweepOutcome:
    out = SweepOutcome("strong-gcd")
    ctx = TermContext(params).ensure(max_index)
    for m in range(1, max_index + 1):
        for n in range(m, max_index + 1):
            out.absorb(check_strong_gcd(params, m, n, ctx))
    return out


SweepFn = Callable[[SequenceParams, int], SweepOutcome]

CATALOG: dict[str, SweepFn] = {
    "catalan-b": sweep_catalan("B"),
    "catalan-c": sweep_catalan("C"),
    "cassini-b": sweep_cassini("B"),
    "cassini-c": sweep_cassini("C"),
    "docagne-b": sweep_docagne("B"),
    "docagne-c": sweep_docagne("C"),
    "vajda-1": sweep_vajda_1,
    "vajda-2": sweep_vajda_2,
    "sum-b": sweep_sum("B"),
    "sum-c": sweep_sum("C"),
    "addition": sweep_addition,
    "doubling": sweep_doubling,
    "power-sum": sweep_power_sum,
    "c-from-b": sweep_c_from_b,
    "matrix-b": sweep_matrix_b,
    "matrix-c": sweep_matrix_c,
    "ar-commute": sweep_ar_commute,
    "index-divisibility": sweep_index_divisibility,
    "coprime-norm-b": sweep_coprime_norm("B"),
    "coprime-norm-c": sweep_coprime_norm("C"),
    "consecutive-gcd-b": sweep_consecutive_gcd("B"),
    "consecutive-gcd-c": sweep_consecutive_gcd("C"),
    "b-c-coprime": sweep_b_c_coprime,
    "strong-gcd": sweep_strong_gcd,
}


def resolve_identities(selection: str) -> list[str]:
    """Expand a comma-separated filter into catalog names.

    Each element may be "all", an exact catalog name, or a family prefix
    ("consecutive-gcd" selects every "consecutive-gcd-*" entry).
    """
    names: list[str] = []
    for raw in selection.split(","):
        token = raw.strip()
        if token == "all":
            names.extend(CATALOG)
            continue
        if token in CATALOG:
            names.append(token)
            continue
        family = [name for name in CATALOG if name.startswith(token + "-")]
        if not family:
            raise ValueError(f"unknown identity {token!r}")
        names.extend(family)
    seen: dict[str, None] = {}
    for name in names:
        seen.setdefault(name)
    return list(seen)


# ---------------------------------------------------------------------------
# run configuration, runner, JSON schema

@dataclass(frozen=True)
class VerifyRunConfig:
    k_lo: int = 1
    k_hi: int = 12
    max_index: int = 40
    identities: tuple[str, ...] = tuple(CATALOG)
    max_listed: int = 25

    def __post_init__(self) -> None:
        if self.k_lo < 1:
            raise ValueError("k must be >= 1")
        if self.k_hi < self.k_lo:
            raise ValueError("empty k range")
        if self.max_index < 1:
            raise ValueError("max index must be >= 1")
        if self.max_listed < 1:
            raise ValueError("max listed must be >= 1")
        for name in self.identities:
            if name not in CATALOG:
                raise ValueError(f"unknown identity {name!r}")


@dataclass
class VerifyReport:
    tool_version: str
    config: VerifyRunConfig
    results: list[Report]
    summary: dict

    @property
    def exit_code(self) -> int:
        return 0 if self.summary["total_failed"] == 0 else 1


def _sort_key(report: Report):
    name = getattr(report, "identity_name", None) or report.theorem_name
    return name, sorted(report.inputs.items())


def run_verify(config: VerifyRunConfig, threads: int = 1) -> VerifyReport:
    """Sweep every selected identity over the k range; deterministic output.

    The thread count affects wall time only: results are merged
    commutatively and canonically sorted, never ordered by completion.
    """
    tasks = [
        (name, k)
        for name in config.identities
        for k in range(config.k_lo, config.k_hi + 1)
    ]

    def run_task(task: tuple[str, int]) -> tuple[str, SweepOutcome]:
        name, k = task
        return name, CATALOG[name](SequenceParams(k), config.max_index)

    if threads == 1:
        partials = [run_task(t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            partials = list(pool.map(run_task, tasks))

    outcomes: dict[str, SweepOutcome] = {
        name: SweepOutcome(name) for name in config.identities
    }
    for name, partial in partials:
        outcomes[name].merge(partial)

    results: list[Report] = []
    for name, outcome in outcomes.items():
        results.extend(sorted(outcome.violations, key=_sort_key)[: config.max_listed])
        results.extend(
            sorted(outcome.expected_failures, key=_sort_key)[: config.max_listed]
        )
    results.sort(key=_sort_key)

    per_identity = {
        name: {
            "checked": outcome.checked,
            "held": outcome.held,
            "failed": outcome.failed,
            "hypothesis_not_met": outcome.hypothesis_not_met,
        }
        for name, outcome in outcomes.items()
    }
    summary = {
        "per_identity": per_identity,
        "total_checked": sum(o.checked for o in outcomes.values()),
        "total_held": sum(o.held for o in outcomes.values()),
        "total_failed": sum(o.failed for o in outcomes.values()),
        "total_hypothesis_not_met": sum(
            o.hypothesis_not_met for o in outcomes.values()
        ),
    }
    summary["all_held"] = summary["total_failed"] == 0
    return VerifyReport(__version__, config, results, summary)


def _exact_to_str(value) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def _exact_from_str(text: str):
    if "/" in text:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    return int(text)


def report_entry_to_dict(report: Report) -> dict:
    if isinstance(report, IdentityReport):
        return {
            "kind": "identity",
            "identity_name": report.identity_name,
            "inputs": dict(sorted(report.inputs.items())),
            "lhs": _exact_to_str(report.lhs),
            "rhs": _exact_to_str(report.rhs),
            "holds": report.holds,
            "hypothesis_met": report.hypothesis_met,
        }
    return {
        "kind": "gcd",
        "theorem_name": report.theorem_name,
        "inputs": dict(sorted(report.inputs.items())),
        "computed_gcd": str(report.computed_gcd),
        "expected": str(report.expected),
        "holds": report.holds,
        "hypothesis_met": report.hypothesis_met,
    }


def report_entry_from_dict(entry: dict) -> Report:
    if entry["kind"] == "identity":
        return IdentityReport(
            entry["identity_name"],
            dict(entry["inputs"]),
            _exact_from_str(entry["lhs"]),
            _exact_from_str(entry["rhs"]),
            entry["holds"],
            entry["hypothesis_met"],
        )
    return GcdReport(
        entry["theorem_name"],
        dict(entry["inputs"]),
        int(entry["computed_gcd"]),
        int(entry["expected"]),
        entry["hypothesis_met"],
        entry["holds"],
    )


def report_to_dict(report: VerifyReport) -> dict:
    # the thread count is deliberately absent: it must not affect the bytes
    return {
        "tool_version": report.tool_version,
        "config": {
            "k_lo": report.config.k_lo,
            "k_hi": report.config.k_hi,
            "max_index": report.config.max_index,
            "identities": list(report.config.identities),
            "max_listed": report.config.max_listed,
        },
        "results": [report_entry_to_dict(r) for r in report.results],
        "summary": report.summary,
    }


def report_from_dict(data: dict) -> VerifyReport:
    config = VerifyRunConfig(
        data["config"]["k_lo"],
        data["config"]["k_hi"],
        data["config"]["max_index"],
        tuple(data["config"]["identities"]),
        data["config"]["max_listed"],
    )
    return VerifyReport(
        data["tool_version"],
        config,
        [report_entry_from_dict(e) for e in data["results"]],
        data["summary"],
    )


def report_to_json(report: VerifyReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, sort_keys=True)


def report_from_json(text: str) -> VerifyReport:
    return report_from_dict(json.loads(text))
