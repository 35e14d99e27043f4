"""
rghw — командная строка RGHW-Ramp

Подкоманды:
    reproduce <target|all>        эталонные сценарии (contracts/fixtures/)
    bound                         границы RGHW (Hermitian tiers или Feng-Rao)
    oracle                        точные M_m перебором
    scheme                        профиль / access structure схемы по кодам
    hermitian {code|rghw|ghw|witness|diff-table|h-star}
    ramp {profile|share|reconstruct}
    semigroup {info|z}

Коды выхода: 0 — успех, 2 — расхождение с эталоном, 3 — ошибка ввода.
Логи идут в stderr; stdout / --out остаются машиночитаемыми.
"""

import argparse
import dataclasses
import json
import logging
import sys
from pathlib import Path
from typing import Any, Final

from jsonschema import ValidationError

from src.ag_bounds import onepoint_tiers, rghw_bound_onepoint, rghw_bound_onepoint_dual
from src.cli.output import write_document, write_rows
from src.cli.reproduce import TARGETS, mismatched, reproduce
from src.codes import (
    ghw_oracle,
    read_code_file,
    rghw_from_rdlp,
    rghw_oracle,
    rghw_subspace_oracle,
    rdlp_profile,
    write_code_file,
    zero_code,
)
from src.core.contracts import validate_leakage_profile, validate_share_file
from src.core.domain import BoundTier, LeakageProfile, Provenance, ReportRow, ValueKind
from src.core.errors import FixtureMismatchError, InvalidParameterError, RghwError
from src.core.limits import DEFAULT_LIMITS, SearchLimits
from src.fengrao import (
    OrderedBasis,
    build_owb,
    is_prefix_pair,
    read_basis_file,
    rghw_bound_dual_argmin,
    rghw_bound_primary_argmin,
    standard_basis,
    write_basis_file,
)
from src.hermitian import (
    build_hermitian,
    diff_table,
    g1,
    ghw_master,
    rghw_hermitian,
    witness_functions,
)
from src.ramp import (
    RampScheme,
    access_structure,
    hermitian_scheme,
    mds_scheme,
    profile,
    reconstruct,
    share,
)
from src.semigroup import parse_semigroup, z_closed_form, z_function_argmin

logger = logging.getLogger(__name__)

EXIT_OK: Final = 0
EXIT_MISMATCH: Final = 2
EXIT_INPUT: Final = 3

BASIS_HELP: Final = (
    "Упорядоченный базис для Feng-Rao (формат code files, n строк); без него стандартный "
    "базис, для которого Λ_i = {i} и границы равны m"
)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser, сообщающий об ошибках исключением (exit 3, а не 2), без сокращений опций."""

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(f"{self.prog}: {message}")


class _UsageError(Exception):
    pass


# =============================================================================
# HELPERS
# =============================================================================


def _limits(args: argparse.Namespace) -> SearchLimits:
    overrides = {
        name: getattr(args, name)
        for name in ("max_oracle_length", "max_index_subsets")
        if getattr(args, name) is not None
    }
    return dataclasses.replace(DEFAULT_LIMITS, **overrides)


def _int_list(text: str) -> list[int]:
    return [int(token) for token in text.replace(",", " ").split()]


def _profile_rows(leak: LeakageProfile, **common: Any) -> list[ReportRow]:
    rows: list[ReportRow] = []
    for m in range(1, leak.ell + 1):
        for name, value, provenance, bound_kind in (
            ("t", leak.t_m(m), leak.t_provenance[m - 1], ValueKind.LOWER_BOUND),
            ("r", leak.r_m(m), leak.r_provenance[m - 1], ValueKind.UPPER_BOUND),
        ):
            rows.append(
                ReportRow.build(
                    f"{name}{m}",
                    value,
                    m=m,
                    tier=name,
                    kind=bound_kind if provenance == Provenance.BOUND else ValueKind.EXACT,
                    source=provenance.value,
                    **common,
                )
            )
    return rows


def _write_profile(leak: LeakageProfile, path: str | None) -> None:
    if path is None:
        return
    document = leak.model_dump(mode="json")
    validate_leakage_profile(document)
    write_document(document, path)


def _require(args: argparse.Namespace, *names: str) -> None:
    missing = ["--" + name.replace("_", "-") for name in names if getattr(args, name, None) is None]
    if missing:
        raise InvalidParameterError(f"{args.command}: missing {', '.join(missing)}")


def _scheme(args: argparse.Namespace, limits: SearchLimits) -> tuple[RampScheme, Any]:
    """(схема, H*-профиль или None) по флагам --family."""
    if args.family == "hermitian":
        _require(args, "q", "mu1", "mu2")
        family = build_hermitian(args.q, limits)
        return hermitian_scheme(family, args.mu1, args.mu2), family.profile
    if args.family == "mds":
        _require(args, "q", "n", "k1", "k2")
        return mds_scheme(args.q, args.n, args.k1, args.k2), None
    _require(args, "code_file")
    c1 = read_code_file(args.code_file)
    c2 = read_code_file(args.code2_file) if args.code2_file else zero_code(c1.field, c1.n)
    return RampScheme.from_codes(c1, c2), None


def _basis(args: argparse.Namespace, field: Any, n: int) -> OrderedBasis | None:
    """Базис из --basis-file; None — стандартный e₁, …, eₙ."""
    if not getattr(args, "basis_file", None):
        return None
    basis = read_basis_file(args.basis_file)
    if basis.field != field or basis.n != n:
        raise InvalidParameterError(
            f"basis file is over {basis.field.name}^{basis.n}, codes are over {field.name}^{n}"
        )
    return basis


# =============================================================================
# COMMANDS
# =============================================================================


def cmd_reproduce(args: argparse.Namespace) -> int:
    limits = _limits(args)
    targets = sorted(TARGETS) if args.target == "all" else [args.target]
    rows: list[ReportRow] = []
    for target in targets:
        rows.extend(reproduce(target, limits))
    write_rows(rows, args.format, args.out)
    bad = mismatched(rows)
    for row in bad:
        print(f"MISMATCH {row.scenario}: got {row.value}, expected {row.expected}", file=sys.stderr)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_bound(args: argparse.Namespace) -> int:
    limits = _limits(args)
    rows: list[ReportRow] = []
    if args.family == "hermitian":
        _require(args, "mu1")
        pole_orders = build_hermitian(args.q, limits).profile
        common = {"q": args.q, "mu1": args.mu1, "mu2": args.mu2, "m": args.m}
        pair = (pole_orders, args.mu1, args.mu2, args.m)
        if args.tier == "all":
            reports = list(onepoint_tiers(*pair, limits).values())
            reports.append(rghw_bound_onepoint_dual(*pair, limits))
        elif args.tier == BoundTier.DUAL.value:
            reports = [rghw_bound_onepoint_dual(*pair, limits)]
        else:
            reports = [rghw_bound_onepoint(*pair, args.tier, limits)]
        for report in reports:
            rows.append(
                ReportRow.build(
                    f"bound-{report.tier.value}-m{args.m}",
                    report.value,
                    tier=report.tier.value,
                    kind=ValueKind.LOWER_BOUND,
                    source="argmin " + ",".join(str(g) for g in report.argmin),
                    **common,
                )
            )
    else:
        _require(args, "code_file")
        c1 = read_code_file(args.code_file)
        c2 = read_code_file(args.code2_file) if args.code2_file else zero_code(c1.field, c1.n)
        table = build_owb(_basis(args, c1.field, c1.n) or standard_basis(c1.field, c1.n))
        prefix = is_prefix_pair(table.basis, c1, c2)
        for name, bound in (
            ("primary", rghw_bound_primary_argmin(table, c1, c2, args.m, limits)),
            ("dual", rghw_bound_dual_argmin(table, c1, c2, args.m, limits)),
        ):
            rows.append(
                ReportRow.build(
                    f"fengrao-{name}-m{args.m}",
                    bound.value,
                    m=args.m,
                    tier=name,
                    kind=ValueKind.LOWER_BOUND,
                    source="prefix pair" if prefix else None,
                )
            )
    write_rows(rows, args.format, args.out)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    limits = _limits(args)
    c1 = read_code_file(args.code_file)
    c2 = read_code_file(args.code2_file) if args.code2_file else zero_code(c1.field, c1.n)
    if args.method == "subspace":
        value = rghw_subspace_oracle(c1, c2, args.m, limits)
    elif args.method == "rdlp":
        value = rghw_from_rdlp(rdlp_profile(c1, c2, limits), args.m)
    elif args.code2_file:
        value = rghw_oracle(c1, c2, args.m, limits)
    else:
        value = ghw_oracle(c1, args.m, limits)
    row = ReportRow.build(
        f"oracle-{args.method}-m{args.m}", value, q=c1.field.order, m=args.m, tier=args.method
    )
    write_rows([row], args.format, args.out)
    return EXIT_OK


def cmd_scheme(args: argparse.Namespace) -> int:
    limits = _limits(args)
    if args.mds:
        args.family = "mds"
    scheme, pole_profile = _scheme(args, limits)
    if args.action == "access":
        structure = access_structure(scheme, args.m, args.d, limits)
        rows = [
            ReportRow.build(f"access-m{args.m}-d{args.d}-{name}", len(sets), m=args.m, tier=name)
            for name, sets in (
                ("sets", structure.sets),
                ("minimal", structure.minimal),
                ("maximal", structure.maximal),
            )
        ]
        write_rows(rows, args.format, args.out)
        return EXIT_OK
    basis = _basis(args, scheme.field, scheme.n)
    leak = profile(scheme, args.mode, limits, basis=basis, pole_profile=pole_profile)
    _write_profile(leak, args.profile_out)
    write_rows(_profile_rows(leak, q=scheme.field.order), args.format, args.out)
    return EXIT_OK


def cmd_hermitian(args: argparse.Namespace) -> int:
    limits = _limits(args)
    q = args.q
    rows: list[ReportRow] = []
    if args.action == "diff-table":
        rows.extend(
            ReportRow.build(f"diff-q{q}-m{m}", value, q=q, m=m, tier="diff")
            for m, value in diff_table(q).items()
        )
        write_rows(rows, args.format, args.out)
        return EXIT_OK

    family = build_hermitian(q, limits)
    if args.action == "code":
        code = family.code(args.mu)
        if args.code_out:
            write_code_file(code, args.code_out)
        if args.basis_out:
            write_basis_file(family.basis, args.basis_out)
        rows.append(ReportRow.build(f"code-mu{args.mu}-dim", code.k, q=q, mu1=args.mu, tier="dim"))
    elif args.action == "rghw":
        result = rghw_hermitian(family, args.mu1, args.mu2, args.m, limits=limits)
        common = {"q": q, "mu1": args.mu1, "mu2": args.mu2, "m": args.m}
        selected = "exact-set" if args.tier == "exact" else args.tier
        for tier, report in result.tiers.items():
            if selected not in ("all", tier.value):
                continue
            rows.append(
                ReportRow.build(
                    f"rghw-{tier.value}",
                    report.value,
                    tier=tier.value,
                    kind=ValueKind.LOWER_BOUND,
                    **common,
                )
            )
        if result.closed is not None:
            closed_kind = ValueKind.EXACT if result.equality else ValueKind.LOWER_BOUND
            rows.append(
                ReportRow.build("rghw-formula", result.closed, tier="formula", kind=closed_kind, **common)
            )
        best_kind = ValueKind.EXACT if result.equality else ValueKind.LOWER_BOUND
        rows.append(
            ReportRow.build("rghw-best", result.best, tier="best", kind=best_kind, **common)
        )
    elif args.action == "ghw":
        report = ghw_master(family, args.mu, args.m)
        common = {"q": q, "mu1": args.mu, "m": args.m}
        rows.append(ReportRow.build("ghw-abundance", report.abundance, tier="abundance", **common))
        rows.append(
            ReportRow.build(
                "ghw-bound", report.bound, tier="bound", kind=ValueKind.LOWER_BOUND, **common
            )
        )
        shifted_kind = ValueKind.EXACT if report.equality else ValueKind.LOWER_BOUND
        rows.append(
            ReportRow.build(
                "ghw-bound-shifted", report.bound_shifted, tier="shifted", kind=shifted_kind, **common
            )
        )
    elif args.action == "witness":
        witnesses = witness_functions(family, args.mu1, args.m)
        rows.append(
            ReportRow.build(
                f"witness-mu{args.mu1}-m{args.m}",
                witnesses.common_zero_count,
                expected=args.mu1 - g1(args.m, q),
                q=q,
                mu1=args.mu1,
                m=args.m,
                tier=f"regime-{witnesses.regime}",
            )
        )
    else:
        rows.extend(
            ReportRow.build(f"h-star-{index}", gamma, q=q, tier="h-star")
            for index, gamma in enumerate(family.profile.h_star, start=1)
        )
    write_rows(rows, args.format, args.out)
    return EXIT_MISMATCH if mismatched(rows) else EXIT_OK


def cmd_ramp(args: argparse.Namespace) -> int:
    limits = _limits(args)
    scheme, pole_profile = _scheme(args, limits)

    if args.action == "profile":
        basis = _basis(args, scheme.field, scheme.n)
        leak = profile(scheme, args.mode, limits, basis=basis, pole_profile=pole_profile)
        _write_profile(leak, args.profile_out)
        write_rows(_profile_rows(leak, q=args.q), args.format, args.out)
        return EXIT_OK

    if args.action == "share":
        values = share(scheme, _int_list(args.secret), args.seed)
        document = {
            "field_order": scheme.field.order,
            "n": scheme.n,
            "seed": args.seed,
            "shares": {str(i): int(v) for i, v in enumerate(values.tolist(), start=1)},
        }
        validate_share_file(document)
        write_document(document, args.out)
        return EXIT_OK

    document = json.loads(Path(args.shares).read_text(encoding="utf-8"))
    validate_share_file(document)
    observed = {int(index): int(value) for index, value in document["shares"].items()}
    if args.subset:
        keep = set(_int_list(args.subset))
        observed = {i: v for i, v in observed.items() if i in keep}
    result = reconstruct(scheme, observed)
    rows = [ReportRow.build("determined", result.determined, m=scheme.ell, tier="determined")]
    if result.secret is not None:
        rows.extend(
            ReportRow.build(f"secret-{index}", int(value), tier="secret")
            for index, value in enumerate(result.secret.tolist(), start=1)
        )
    write_rows(rows, args.format, args.out)
    return EXIT_OK


def cmd_semigroup(args: argparse.Namespace) -> int:
    limits = _limits(args)
    semigroup = parse_semigroup(args.generators)
    rows: list[ReportRow] = []
    if args.action == "info":
        rows.append(ReportRow.build("genus", semigroup.genus, tier="genus"))
        rows.append(ReportRow.build("conductor", semigroup.conductor, tier="conductor"))
        rows.extend(
            ReportRow.build(f"gap-{i}", gap, tier="gap")
            for i, gap in enumerate(semigroup.gaps, start=1)
        )
        rows.append(ReportRow.build("deserts", len(semigroup.deserts()), tier="deserts"))
    else:
        value, shifts = z_function_argmin(semigroup, args.mu, args.m, limits)
        expected = None
        a = semigroup.generators[0]
        if a >= 2 and tuple(semigroup.generators) == (a, a + 1) and args.mu <= a + 1:
            expected = z_closed_form(a, args.mu, args.m)
        rows.append(
            ReportRow.build(
                f"z-mu{args.mu}-m{args.m}",
                value,
                expected=expected,
                mu1=args.mu,
                m=args.m,
                tier="z",
                source="shifts " + ",".join(str(s) for s in shifts),
            )
        )
    write_rows(rows, args.format, args.out)
    return EXIT_MISMATCH if mismatched(rows) else EXIT_OK


# =============================================================================
# PARSER
# =============================================================================


def _add_scheme_arguments(parser: argparse.ArgumentParser, families: tuple[str, ...]) -> None:
    parser.add_argument("--family", choices=families, default=families[0])
    parser.add_argument("--q", type=int, help="Hermitian q или порядок поля MDS")
    parser.add_argument("--mu1", type=int)
    parser.add_argument("--mu2", type=int)
    parser.add_argument("--n", type=int)
    parser.add_argument("--k1", type=int)
    parser.add_argument("--k2", type=int)
    parser.add_argument("--code-file")
    parser.add_argument("--code2-file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="rghw", description="RGHW bounds and ramp secret sharing leakage profiles."
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v INFO, -vv DEBUG")
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--out", help="Файл отчёта (по умолчанию stdout)")
    parser.add_argument("--max-oracle-length", type=int)
    parser.add_argument("--max-index-subsets", type=int)
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("reproduce", help="Эталонные сценарии")
    sub.add_argument("target", choices=sorted(TARGETS) + ["all"])
    sub.set_defaults(handler=cmd_reproduce)

    sub = commands.add_parser("bound", help="Нижние границы RGHW")
    sub.add_argument("--family", choices=("hermitian", "codes"), default="hermitian")
    sub.add_argument("--q", type=int, default=4)
    sub.add_argument("--mu1", type=int)
    sub.add_argument("--mu2", type=int, default=-1)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--tier", choices=[t.value for t in BoundTier] + ["all"], default="all")
    sub.add_argument("--code-file")
    sub.add_argument("--code2-file")
    sub.add_argument("--basis-file", help=BASIS_HELP)
    sub.set_defaults(handler=cmd_bound)

    sub = commands.add_parser("oracle", help="Точные RGHW перебором")
    sub.add_argument("--code-file", required=True)
    sub.add_argument("--code2-file")
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--method", choices=("subset", "subspace", "rdlp"), default="subset")
    sub.set_defaults(handler=cmd_oracle)

    sub = commands.add_parser("scheme", help="Профиль или access structure схемы")
    sub.add_argument("action", choices=("profile", "access"))
    sub.add_argument("--mds", action="store_true", help="Вложенная пара Reed-Solomon")
    _add_scheme_arguments(sub, ("codes", "mds"))
    sub.add_argument("--mode", choices=("oracle", "bound"), default="oracle")
    sub.add_argument("--m", type=int, default=1)
    sub.add_argument("--d", type=int, default=0)
    sub.add_argument("--basis-file", help=BASIS_HELP)
    sub.add_argument("--profile-out")
    sub.set_defaults(handler=cmd_scheme)

    sub = commands.add_parser("hermitian", help="Hermitian коды")
    sub.add_argument("--q", type=int, default=4)
    # --q допускается и после действия; без него остаётся значение группы
    q_option = _Parser(add_help=False)
    q_option.add_argument("--q", type=int, default=argparse.SUPPRESS)
    actions = sub.add_subparsers(dest="action", required=True)
    code = actions.add_parser("code", parents=[q_option])
    code.add_argument("--mu", type=int, required=True)
    code.add_argument("--code-out")
    code.add_argument("--basis-out", help="Базис значений мономов по возрастанию pole order")
    rghw = actions.add_parser("rghw", parents=[q_option])
    rghw.add_argument("--mu1", type=int, required=True)
    rghw.add_argument("--mu2", type=int, required=True)
    rghw.add_argument("--m", type=int, required=True)
    rghw.add_argument(
        "--tier",
        choices=("exact", "exact-set", "shifted", "closed", "all"),
        default="all",
        help="One-point уровни в отчёте; formula и best выводятся всегда",
    )
    ghw = actions.add_parser("ghw", parents=[q_option])
    ghw.add_argument("--mu", type=int, required=True)
    ghw.add_argument("--m", type=int, required=True)
    witness = actions.add_parser("witness", parents=[q_option])
    witness.add_argument("--mu1", type=int, required=True)
    witness.add_argument("--m", type=int, required=True)
    actions.add_parser("diff-table", parents=[q_option])
    actions.add_parser("h-star", parents=[q_option])
    sub.set_defaults(handler=cmd_hermitian)

    sub = commands.add_parser("ramp", help="Ramp-схемы: профиль, доли, восстановление")
    actions = sub.add_subparsers(dest="action", required=True)
    for name in ("profile", "share", "reconstruct"):
        action = actions.add_parser(name)
        _add_scheme_arguments(action, ("hermitian", "mds", "codes"))
        if name == "profile":
            action.add_argument("--mode", choices=("oracle", "bound"), default="bound")
            action.add_argument("--profile-out")
            action.add_argument("--basis-file", help=BASIS_HELP)
        elif name == "share":
            action.add_argument("--secret", required=True, help="Кодировки элементов через запятую")
            action.add_argument("--seed", type=int, required=True)
        else:
            action.add_argument("--shares", required=True, help="JSON файл долей")
            action.add_argument("--subset", help="Участники (1-based) через запятую")
    sub.set_defaults(handler=cmd_ramp)

    sub = commands.add_parser("semigroup", help="Численные полугруппы")
    actions = sub.add_subparsers(dest="action", required=True)
    info = actions.add_parser("info")
    info.add_argument("--generators", required=True)
    z = actions.add_parser("z")
    z.add_argument("--generators", required=True)
    z.add_argument("--mu", type=int, required=True)
    z.add_argument("--m", type=int, required=True)
    sub.set_defaults(handler=cmd_semigroup)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as error:
        print(error, file=sys.stderr)
        return EXIT_INPUT
    _configure_logging(args.verbose)
    try:
        return int(args.handler(args))
    except FixtureMismatchError as error:
        print(f"fixture mismatch: {error}", file=sys.stderr)
        return EXIT_MISMATCH
    except (RghwError, ValidationError, OSError, ValueError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
