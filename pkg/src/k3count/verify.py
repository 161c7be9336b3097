"""Identity suite behind ``k3count verify``.

Every check recomputes both sides from scratch; nothing is cached between
checks, so a fault in one code path surfaces as a named failure.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Callable

from . import qseries as qs
from .counting import (
    check_functional_equation,
    closed_form_C0,
    dual_counting_series,
    expand_G,
    ng_fast,
    ng_series,
    ng_via_convolution,
    partition_series,
    recursion_C0,
    stabilization_degree,
    verify_durfee_identity,
)
from .partitions import enumerate_partitions, partition_p
from .schain import (
    delta_lower_bound,
    enumerate_lambda_configs,
    enumerate_mu_configs,
    is_admissible_mu,
    lambda_to_mu,
    mu_to_lambda,
)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class RunReport:
    command: str
    parameters: dict
    checks: list[Check] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def failing(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def to_json(self, include_elapsed: bool = False) -> dict:
        out = {
            "command": self.command,
            "parameters": self.parameters,
            "checks": [asdict(c) for c in self.checks],
            "ok": self.ok,
        }
        if include_elapsed:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


def _first_mismatch(*series: qs.QSeries) -> str:
    n = min(s.order for s in series)
    for g in range(n + 1):
        vals = [s[g] for s in series]
        if len(set(vals)) > 1:
            return f"first mismatch at q^{g}: {vals}"
    return ""


def run_verification(
    order: int = 40,
    max_m: int = 12,
    max_n: int = 8,
    recursion: Callable[[int, int], qs.QSeries] = recursion_C0,
) -> RunReport:
    """Run the full identity suite.

    ``order`` bounds the q-degree of series checks, ``max_m`` the weight of
    enumerated configurations, ``max_n`` the truncation index of ``G_n``.
    ``recursion`` can be replaced to confirm that a faulty C_{0,n} is caught.
    """
    report = RunReport("verify", {"order": order, "max_m": max_m, "max_n": max_n})
    start = time.perf_counter()

    # partition numbers three ways
    p_series = partition_series(max(order, max_m))
    p_inverse = qs.inverse(qs.pentagonal_series(max(order, max_m)))
    bad = [
        m
        for m in range(max_m + 1)
        if not len(enumerate_partitions(m)) == partition_p(m) == p_series[m]
    ]
    bad += [m for m in range(max(order, max_m) + 1) if partition_p(m) != p_inverse[m]]
    report.add(
        "partition_oracles",
        not bad,
        f"enumeration, recurrence and series inverse agree for m <= {max(order, max_m)}"
        if not bad
        else f"disagreement at m={sorted(set(bad))}",
    )

    lambda_counts = {m: len(enumerate_lambda_configs(m)) for m in range(max_m + 1)}
    bad = [m for m, c in lambda_counts.items() if c != partition_p(m)]
    report.add(
        "lambda_counts",
        not bad,
        f"|lambda configs of weight m| = P(m) for m <= {max_m}" if not bad else f"m={bad}",
    )

    dual = dual_counting_series(max_m)
    bad = []
    for m in range(max_m + 1):
        count = len(enumerate_mu_configs(m, admissible_only=True))
        if not count == partition_p(m) == dual[m]:
            bad.append(m)
    report.add(
        "mu_counts",
        not bad,
        f"|admissible mu configs| = P(m) = dual series coefficient for m <= {max_m}"
        if not bad
        else f"m={bad}",
    )

    bad = []
    for m in range(max_m + 1):
        lams = enumerate_lambda_configs(m)
        mus = enumerate_mu_configs(m, admissible_only=True)
        images = [mu_to_lambda(c) for c in mus]
        if (
            set(images) != set(lams)
            or len(set(images)) != len(images)
            or any(lambda_to_mu(mu_to_lambda(c)) != c for c in mus)
            or any(mu_to_lambda(lambda_to_mu(c)) != c for c in lams)
            or any(i.weight != c.weight or i.mu != c.mu for i, c in zip(images, mus))
        ):
            bad.append(m)
    report.add(
        "duality_bijection",
        not bad,
        f"conjugation is a weight- and mu-preserving bijection for m <= {max_m}"
        if not bad
        else f"m={bad}",
    )

    bad = []
    for m in range(max_m + 1):
        for c in enumerate_mu_configs(m):
            b = delta_lower_bound(c)
            if b < m or (b == m) != is_admissible_mu(c):
                bad.append(c)
    report.add(
        "delta_bound_law",
        not bad,
        f"B >= m with equality exactly on admissible configs, m <= {max_m}"
        if not bad
        else f"violations: {bad[:3]}",
    )

    g_m = expand_G(max_m, max_m)
    bad = [m for m in range(max_m + 1) if g_m[0][m] != lambda_counts[m]]
    report.add(
        "constant_term_counts",
        not bad,
        f"[q^m z^0] G_{max_m} = |lambda configs| for m <= {max_m}" if not bad else f"m={bad}",
    )

    fe_bad, c0_bad, low_bad, stab_bad = [], [], [], []
    c0_detail = ""
    for n in range(max_n + 1):
        g = expand_G(n, order)
        if not check_functional_equation(g):
            fe_bad.append(n)
        if not g.lowest_degree_ok():
            low_bad.append(n)
        rec, closed, direct = recursion(n, order), closed_form_C0(n, order), g[0]
        if not (rec == closed == direct):
            c0_bad.append(n)
            c0_detail = c0_detail or f"n={n}: " + _first_mismatch(rec, closed, direct)
        s = stabilization_degree(n, order)
        if s is not None and s < n + 1:
            stab_bad.append(n)
    report.add(
        "functional_equation",
        not fe_bad,
        f"holds for n <= {max_n} at order {order}" if not fe_bad else f"n={fe_bad}",
    )
    report.add(
        "c0_three_paths",
        not c0_bad,
        f"recursion = closed form = direct expansion for n <= {max_n}"
        if not c0_bad
        else c0_detail,
    )
    report.add(
        "lowest_degree",
        not low_bad,
        "C_{d,n} vanish below their minimal exponents" if not low_bad else f"n={low_bad}",
    )
    report.add(
        "stabilization",
        not stab_bad,
        "C_{0,n} agrees with the partition series through degree n"
        if not stab_bad
        else f"n={stab_bad}",
    )

    report.add(
        "durfee_identity",
        verify_durfee_identity(order),
        f"dual counting series = partition series to order {order}",
    )

    a, b, c = ng_series(order), ng_via_convolution(order), ng_fast(order)
    anchors = a[0] == 1 and (order < 1 or a[1] == 24)
    report.add(
        "ng_cross_path",
        a == b == c and anchors,
        f"product, convolution and pentagonal paths agree to g = {order}"
        if a == b == c and anchors
        else _first_mismatch(a, b, c) or "N_0 = 1, N_1 = 24 anchors failed",
    )

    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report
