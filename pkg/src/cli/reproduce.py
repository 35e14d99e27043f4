"""
Reproduce — эталонные сценарии из contracts/fixtures/

Каждый target вычисляет словарь {scenario: value}; строки отчёта строятся
по записям fixture (expected, q, μ, m, tier, kind берутся оттуда). Часть
targets добавляет сгенерированные строки, эталон которых — независимая
формула (замкнутая сумма Z, остаточные строки q=4, аналитика MDS).

КРИТИЧЕСКИЕ ИНВАРИАНТЫ:
1. Сценарий fixture без вычисленного значения → FixtureMismatchError
2. Все targets детерминированы (без случайности)
3. Порядок строк: записи fixture, затем сгенерированные строки
"""

import logging
from collections.abc import Callable
from functools import partial
from typing import Any, Final

from src.ag_bounds import PoleOrderProfile
from src.codes import rghw_oracle
from src.core.contracts import load_fixture
from src.core.domain import ReportRow, ValueKind
from src.core.errors import FixtureMismatchError, InvalidParameterError
from src.core.limits import SearchLimits
from src.hermitian import (
    HermitianFamily,
    build_hermitian,
    consecutive_pairs,
    diff_table,
    g1,
    g2,
    improvable_sets,
    rghw_hermitian,
)
from src.ramp import (
    guaranteed_bits,
    hermitian_profile_closed,
    hermitian_ramp_profile,
    leak_ceiling,
    mds_dual_rghw,
    mds_rghw,
    mds_scheme,
    oracle_profile,
    worst_case_gap,
)
from src.semigroup import make_semigroup, z_closed_form, z_function

logger = logging.getLogger(__name__)

Fixture = dict[str, Any]
Computed = dict[str, int]


# =============================================================================
# ROW ASSEMBLY
# =============================================================================


def _fixture_rows(fixture: Fixture, computed: Computed) -> list[ReportRow]:
    rows: list[ReportRow] = []
    for entry in fixture["entries"]:
        scenario = entry["scenario"]
        if scenario not in computed:
            raise FixtureMismatchError(
                f"{fixture['target']}: scenario {scenario!r} was not computed"
            )
        rows.append(
            ReportRow.build(
                scenario,
                computed[scenario],
                expected=entry["expected"],
                q=entry.get("q"),
                mu1=entry.get("mu1"),
                mu2=entry.get("mu2"),
                m=entry.get("m"),
                tier=entry.get("tier"),
                kind=ValueKind(entry.get("kind", ValueKind.EXACT.value)),
                source=entry.get("source", fixture["source"]),
            )
        )
    return rows


def mismatched(rows: list[ReportRow]) -> list[ReportRow]:
    """Строки с match = False."""
    return [row for row in rows if row.match is False]


# =============================================================================
# SINGLE PAIRS: ALL TIERS
# =============================================================================


def _pair_values(
    target: str,
    family: HermitianFamily,
    profile: PoleOrderProfile,
    mu1: int,
    mu2: int,
    limits: SearchLimits | None,
) -> Computed:
    override = None if profile is family.profile else profile
    computed: Computed = {
        f"{target}-dim-mu{mu1}": profile.dim(mu1),
        f"{target}-dim-mu{mu2}": profile.dim(mu2),
    }
    for m in range(1, profile.dim(mu1) - profile.dim(mu2) + 1):
        result = rghw_hermitian(family, mu1, mu2, m, profile=override, limits=limits)
        for tier, report in result.tiers.items():
            computed[f"{target}-{tier.value}-m{m}"] = report.value
        computed[f"{target}-best-m{m}"] = result.best
    return computed


def _example_pair(target: str, limits: SearchLimits | None) -> list[ReportRow]:
    fixture = load_fixture(target)
    params = fixture["params"]
    family = build_hermitian(params["q"], limits)
    computed = _pair_values(target, family, family.profile, params["mu1"], params["mu2"], limits)
    return _fixture_rows(fixture, computed)


def fixture_profile(family: HermitianFamily, params: dict[str, Any]) -> PoleOrderProfile:
    """H* = первые h_star_prefix_length элементов rank oracle + h_star_tail."""
    prefix = family.profile.h_star[: params["h_star_prefix_length"]]
    return PoleOrderProfile(
        n=family.n,
        semigroup=family.semigroup,
        h_star=prefix + tuple(params["h_star_tail"]),
    )


def _example_fixture_h_star(target: str, limits: SearchLimits | None) -> list[ReportRow]:
    fixture = load_fixture(target)
    params = fixture["params"]
    family = build_hermitian(params["q"], limits)
    profile = fixture_profile(family, params)
    computed = _pair_values(target, family, profile, params["mu1"], params["mu2"], limits)
    return _fixture_rows(fixture, computed)


# =============================================================================
# CLOSED-FORM RAMP PROFILES
# =============================================================================


def _example_closed_profile(target: str, limits: SearchLimits | None) -> list[ReportRow]:
    fixture = load_fixture(target)
    params = fixture["params"]
    q, mu_tilde, gap = params["q"], params["mu_tilde"], params["n_minus_mu"]
    leak = hermitian_profile_closed(q, q**3 - gap, mu_tilde)
    computed: Computed = {}
    for m in range(1, mu_tilde + 1):
        computed[f"{target}-t{m}"] = leak.t_m(m)
        computed[f"{target}-t{m}-plus-1"] = leak.t_m(m) + 1
        computed[f"{target}-r{m}"] = leak.r_m(m)
        computed[f"{target}-worst-gap-m{m}"] = worst_case_gap(q, mu_tilde, m)
    for size in params["sizes"]:
        computed[f"{target}-leak-ceiling-{size}"] = leak_ceiling(leak, size)
        computed[f"{target}-guaranteed-{size}"] = guaranteed_bits(leak, size)
    return _fixture_rows(fixture, computed)


# =============================================================================
# q=4, CODIMENSION 3: IMPROVABLE PAIRS
# =============================================================================


def _ex6(limits: SearchLimits | None) -> list[ReportRow]:
    fixture = load_fixture("ex6")
    params = fixture["params"]
    family = build_hermitian(params["q"], limits)
    profile = family.profile
    pairs = consecutive_pairs(profile, params["codim"])
    tail = tuple(params["h_star_tail"])
    last = len(pairs) - 1
    dual_pairs = sum(
        family.code(mu2).dual == family.code(pairs[last - index][0])
        for index, (_, mu2) in enumerate(pairs)
    )
    s1, s2 = improvable_sets(profile, params["codim"])

    computed: Computed = {
        "ex6-h-star-size": len(profile.h_star),
        "ex6-h-star-max": profile.gamma_max,
        "ex6-h-star-tail-matches": int(profile.h_star[-len(tail):] == tail),
        "ex6-pairs": len(pairs),
        "ex6-first-pair-mu1": pairs[0][0],
        "ex6-first-pair-mu2": pairs[0][1],
        "ex6-last-pair-mu1": pairs[-1][0],
        "ex6-last-pair-mu2": pairs[-1][1],
        "ex6-dual-pairs": int(dual_pairs),
        "ex6-s1-size": len(s1),
        "ex6-s2-size": len(s2),
        "ex6-union-size": len(set(s1) | set(s2)),
    }
    for mu1, _ in pairs:
        computed[f"ex6-s1-mu{mu1}"] = int(mu1 in s1)
        computed[f"ex6-s2-mu{mu1}"] = int(mu1 in s2)
    return _fixture_rows(fixture, computed)


def _table4(limits: SearchLimits | None) -> list[ReportRow]:
    fixture = load_fixture("table4")
    params = fixture["params"]
    q, codim = params["q"], params["codim"]
    family = build_hermitian(q, limits)
    profile = family.profile
    n = profile.n
    listed = {entry["mu1"] for entry in fixture["entries"]}

    computed: Computed = {}
    residual: list[ReportRow] = []
    for mu1, mu2 in consecutive_pairs(profile, codim):
        leak = hermitian_ramp_profile(profile, q, mu1, mu2, limits)
        for m in range(1, codim + 1):
            computed[f"table4-mu{mu1}-t{m}"] = leak.t_m(m)
            computed[f"table4-mu{mu1}-r{m}"] = leak.r_m(m)
            if mu1 in listed:
                continue
            common = {"q": q, "mu1": mu1, "mu2": mu2, "m": m, "source": "closed formula"}
            residual.append(
                ReportRow.build(
                    f"table4-mu{mu1}-t{m}",
                    leak.t_m(m),
                    expected=n - mu1 + params["residual_t_offsets"][m - 1],
                    tier="t",
                    kind=ValueKind.LOWER_BOUND,
                    **common,
                )
            )
            residual.append(
                ReportRow.build(
                    f"table4-mu{mu1}-r{m}",
                    leak.r_m(m),
                    expected=n - mu1 + params["residual_r_offsets"][m - 1],
                    tier="r",
                    kind=ValueKind.UPPER_BOUND,
                    **common,
                )
            )
    return _fixture_rows(fixture, computed) + residual


# =============================================================================
# OFFSET TABLES
# =============================================================================


def _table1(limits: SearchLimits | None) -> list[ReportRow]:
    fixture = load_fixture("table1")
    computed = {
        f"table1-q{q}-m{m}": value
        for q in fixture["params"]["q_values"]
        for m, value in diff_table(q).items()
    }
    return _fixture_rows(fixture, computed)


def _offset_table(target: str, limits: SearchLimits | None) -> list[ReportRow]:
    fixture = load_fixture(target)
    q, mu_tilde = fixture["params"]["q"], fixture["params"]["mu_tilde"]
    computed: Computed = {}
    for m in range(1, mu_tilde + 1):
        computed[f"{target}-g1-m{m}"] = g1(m, q)
        computed[f"{target}-g2-m{m}"] = g2(m, mu_tilde, q)
    return _fixture_rows(fixture, computed)


# =============================================================================
# Z CLOSED SUM / MDS
# =============================================================================


def _lemma9(limits: SearchLimits | None) -> list[ReportRow]:
    fixture = load_fixture("lemma9")
    computed = {
        entry["scenario"]: z_function(
            make_semigroup([entry["q"], entry["q"] + 1]), entry["mu1"], entry["m"], limits
        )
        for entry in fixture["entries"]
    }
    rows = _fixture_rows(fixture, computed)
    anchored = set(computed)
    for a in range(fixture["params"]["a_min"], fixture["params"]["a_max"] + 1):
        semigroup = make_semigroup([a, a + 1])
        for mu in range(1, a + 2):
            for m in range(1, mu + 1):
                scenario = f"lemma9-a{a}-mu{mu}-m{m}"
                if scenario in anchored:
                    continue
                rows.append(
                    ReportRow.build(
                        scenario,
                        z_function(semigroup, mu, m, limits),
                        expected=z_closed_form(a, mu, m),
                        q=a,
                        mu1=mu,
                        m=m,
                        tier="z",
                        source="closed form",
                    )
                )
    return rows


def _mds(limits: SearchLimits | None) -> list[ReportRow]:
    fixture = load_fixture("mds")
    params = fixture["params"]
    q, n, k1, k2 = params["q"], params["n"], params["k1"], params["k2"]
    scheme = mds_scheme(q, n, k1, k2)
    leak = oracle_profile(scheme, limits)
    computed: Computed = {}
    rows_extra: list[ReportRow] = []
    for m in range(1, k1 - k2 + 1):
        primal = rghw_oracle(scheme.c1, scheme.c2, m, limits)
        dual = rghw_oracle(scheme.c2.dual, scheme.c1.dual, m, limits)
        computed[f"mds-primal-m{m}"] = primal
        computed[f"mds-dual-m{m}"] = dual
        computed[f"mds-t{m}"] = leak.t_m(m)
        computed[f"mds-r{m}"] = leak.r_m(m)
        for name, value, expected in (
            ("primal", primal, mds_rghw(n, k1, k2, m)),
            ("dual", dual, mds_dual_rghw(n, k1, k2, m)),
        ):
            rows_extra.append(
                ReportRow.build(
                    f"mds-analytic-{name}-m{m}",
                    value,
                    expected=expected,
                    q=q,
                    m=m,
                    tier=name,
                    source="MDS weights",
                )
            )
    return _fixture_rows(fixture, computed) + rows_extra


# =============================================================================
# REGISTRY
# =============================================================================


Target = Callable[[SearchLimits | None], list[ReportRow]]

TARGETS: Final[dict[str, Target]] = {
    "ex1": partial(_example_pair, "ex1"),
    "ex2": partial(_example_pair, "ex2"),
    "ex3": partial(_example_fixture_h_star, "ex3"),
    "ex4": partial(_example_closed_profile, "ex4"),
    "ex5": partial(_example_closed_profile, "ex5"),
    "ex6": _ex6,
    "table1": _table1,
    "table2": partial(_offset_table, "table2"),
    "table3": partial(_offset_table, "table3"),
    "table4": _table4,
    "lemma9": _lemma9,
    "mds": _mds,
}


def reproduce(target: str, limits: SearchLimits | None = None) -> list[ReportRow]:
    """
    Строки отчёта для target.

    Raises:
        InvalidParameterError: Неизвестный target
        FixtureMismatchError: Сценарий fixture не вычислен
    """
    if target not in TARGETS:
        raise InvalidParameterError(f"unknown target {target!r}, choose one of {sorted(TARGETS)}")
    rows = TARGETS[target](limits)
    bad = mismatched(rows)
    logger.info("reproduce %s: %d rows, %d mismatches", target, len(rows), len(bad))
    for row in bad:
        logger.warning("%s: got %d, expected %s", row.scenario, row.value, row.expected)
    return rows
