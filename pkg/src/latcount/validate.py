"""Cross-validation driver: every engine checked against every other.

The checks run the same kind of evidence the test suite freezes, but as a
runtime command: brute-force oracle versus recurrence/profile-DP/closed
forms, spectral values against their long-established decimals, bound
tightness exactly where the theory says it is tight, and structural
invariants of every constructed transfer matrix.  ``quick`` stays around a
second; ``full`` sweeps to n = 30 and the three-column oracle products.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import profile_dp
from .complete_products import column_counts, count_complete_product
from .cylinders import c4_defect, c5_defect, count_c4, count_c5
from .engines import BaseFamily
from .graphs import (
    build_family,
    column,
    induced_is_connected,
    product_with_path,
)
from .oracle import count_connected_sets, enumerate_connected_sets, nth_root
from .pell import calibrate_seeds, count_ladder, count_prism
from .transfer_bound import build_transfer_matrix, dominant_eigenvalue, lower_bound_count

# spectral reference values for the defined locally-dense class, verified
# against direct enumeration of the class (see tests); printed 4-decimal
# sources agree for C4/C5/P3
SPECTRAL_REFERENCE = {
    ("cycle", 4): 10.5318,
    ("cycle", 5): 18.2600,
    ("path", 3): 4.6524,
    ("star", 4): 8.984339,
}

TOLERANCE = 5e-5


@dataclass
class CheckResult:
    name: str
    passed: bool
    details: str = ""


@dataclass
class RunReport:
    command: str
    wall_time: float = 0.0
    engine: str = "validate"
    verdicts: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v.passed for v in self.verdicts)


def _check(name: str, condition: bool, details: str = "") -> CheckResult:
    return CheckResult(name=name, passed=bool(condition), details=details)


def _quick_checks() -> list[CheckResult]:
    out = []

    got = count_c4(2)
    want = count_connected_sets(product_with_path(build_family("cycle", 4), 2))
    out.append(_check("count_c4(2) == oracle(C4 x P2)", got == want, f"{got} vs {want}"))

    got = count_c5(2)
    want = count_connected_sets(product_with_path(build_family("cycle", 5), 2))
    out.append(_check("count_c5(2) == oracle(C5 x P2)", got == want, f"{got} vs {want}"))

    for kind, m in (("path", 3), ("cycle", 4), ("star", 4), ("complete", 4)):
        g = build_family(kind, m)
        ok = all(
            profile_dp.exact_count(g, n)
            == count_connected_sets(product_with_path(g, n))
            for n in (1, 2)
        )
        out.append(_check(f"profile-dp == oracle ({BaseFamily(kind, m).label}, n<=2)", ok))

    ladder = {n: count_connected_sets(product_with_path(build_family("path", n), 2)) for n in (1, 2, 3)}
    prism = {n: count_connected_sets(product_with_path(build_family("cycle", n), 2)) for n in (3, 4)}
    out.append(
        _check(
            "two-row closed forms == oracle",
            all(count_ladder(n) == v for n, v in ladder.items())
            and all(count_prism(n) == v for n, v in prism.items()),
        )
    )
    try:
        calibrate_seeds(ladder, prism)
        out.append(_check("recurrence-seed calibration solvable", True))
    except ArithmeticError as exc:
        out.append(_check("recurrence-seed calibration solvable", False, str(exc)))

    for (kind, m), want_lam in SPECTRAL_REFERENCE.items():
        est = dominant_eigenvalue(build_transfer_matrix(build_family(kind, m)))
        label = BaseFamily(kind, m).label
        out.append(
            _check(
                f"lambda({label}) == {want_lam} +- {TOLERANCE}",
                est.converged and abs(est.eigenvalue - want_lam) <= TOLERANCE,
                f"got {est.eigenvalue:.6f} in {est.iterations} iterations",
            )
        )

    spot = nth_root(count_c4(2), 8)
    out.append(_check("c(C4 x P2) == 1.8960 +- 5e-5", abs(spot - 1.8960) <= TOLERANCE, f"{spot:.6f}"))

    for kind, m in (("path", 3), ("cycle", 4), ("cycle", 5), ("star", 4)):
        g = build_family(kind, m)
        eq = all(
            lower_bound_count(g, n) == count_connected_sets(product_with_path(g, n))
            for n in (1, 2)
        )
        out.append(_check(f"bound tight at n<=2 ({BaseFamily(kind, m).label})", eq))
    ok = all(
        lower_bound_count(build_family("complete", m), n) == count_complete_product(m, n)
        for m in (2, 3, 4)
        for n in range(1, 6)
    )
    out.append(_check("bound tight for complete bases (m<=4, n<=5)", ok))
    ok = all(
        lower_bound_count(build_family(kind, m), n) < profile_dp.exact_count(build_family(kind, m), n)
        for kind, m in (("path", 3), ("cycle", 4), ("star", 4))
        for n in (3, 4, 5)
    )
    out.append(_check("bound strict for non-complete bases (n in 3..5)", ok))
    return out


def _full_checks() -> list[CheckResult]:
    out = []

    ok4 = all(count_c4(n) == profile_dp.exact_count(build_family("cycle", 4), n) for n in range(1, 31))
    ok5 = all(count_c5(n) == profile_dp.exact_count(build_family("cycle", 5), n) for n in range(1, 31))
    out.append(_check("count_c4(n) == profile_dp(C4, n) for n <= 30", ok4))
    out.append(_check("count_c5(n) == profile_dp(C5, n) for n <= 30", ok5))

    ok = all(
        count_complete_product(m, n) == profile_dp.exact_count(build_family("complete", m), n)
        for m in range(1, 6)
        for n in range(1, 11)
    )
    out.append(_check("complete transfer == profile_dp (m<=5, n<=10)", ok))

    bases = [("path", 2), ("path", 3), ("path", 4), ("path", 5), ("cycle", 3),
             ("cycle", 4), ("cycle", 5), ("complete", 4), ("star", 4)]
    ok = True
    worst = ""
    for kind, m in bases:
        g = build_family(kind, m)
        for n in (1, 2, 3):
            if g.vertex_count * n > 26:
                continue
            a = profile_dp.exact_count(g, n)
            b = count_connected_sets(product_with_path(g, n))
            if a != b:
                ok = False
                worst = f"{kind}-{m} n={n}: {a} vs {b}"
    out.append(_check("profile-dp == oracle (9 bases, n <= 3)", ok, worst))

    span4 = column_counts(4, 30)
    span5 = column_counts(5, 30)
    ok = all(span4[k - 1] - c4_defect(k) > 0 for k in range(1, 31)) and all(
        span5[k - 1] - c5_defect(k) > 0 for k in range(1, 31)
    )
    out.append(_check("cylinder windowed terms positive (k <= 30)", ok))

    for kind, m, n in (("cycle", 4, 3), ("path", 3, 3)):
        g = build_family(kind, m)
        prod = product_with_path(g, n)
        cols = [column(prod, j) for j in range(1, n + 1)]
        contiguous = True
        for s in enumerate_connected_sets(prod):
            hit = [j for j, c in enumerate(cols) if s & c]
            if hit != list(range(hit[0], hit[-1] + 1)):
                contiguous = False
                break
        out.append(
            _check(f"column support contiguous ({BaseFamily(kind, m).label} x P{n})", contiguous)
        )

    for kind, m in (("path", 3), ("cycle", 4), ("cycle", 5), ("star", 4)):
        a = build_transfer_matrix(build_family(kind, m))
        sym = all(a.entry(i, j) == a.entry(j, i) for i in range(1, a.dim + 1) for j in range(1, a.dim + 1))
        full = a.rows[a.dim - 1] == (1 << a.dim) - 1
        out.append(_check(f"A symmetric with all-ones full row ({BaseFamily(kind, m).label})", sym and full))

    ok = all(
        lower_bound_count(build_family(kind, m), n)
        < profile_dp.exact_count(build_family(kind, m), n)
        for kind, m in (("path", 3), ("cycle", 4), ("cycle", 5), ("star", 4))
        for n in range(3, 11)
    )
    out.append(_check("bound strict for non-complete bases (n in 3..10)", ok))
    return out


def run_validation(scope: str = "quick") -> RunReport:
    if scope not in ("quick", "full"):
        raise ValueError(f"scope must be quick or full, got {scope!r}")
    start = time.perf_counter()
    verdicts = _quick_checks()
    if scope == "full":
        verdicts += _full_checks()
    return RunReport(
        command=f"validate --scope {scope}",
        wall_time=time.perf_counter() - start,
        verdicts=verdicts,
    )
