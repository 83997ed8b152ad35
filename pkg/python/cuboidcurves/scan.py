"""Single-point reports, grid scans and their JSON-lines / CSV serialization.

Every row is rebuilt from its own exact strings and checked against the
defining equations before it is written; a failed check raises
:class:`~cuboidcurves.errors.VerificationError`.
"""

import csv
import json
import logging
from collections.abc import Iterable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from fractions import Fraction
from functools import partial
from typing import IO, Any

from . import __version__
from .cuboid import (
    WITNESS_FIELDS,
    CuboidWitness,
    positivity_gate,
    solve_cubic_rational,
    witnesses_from_profile,
)
from .curves.conic import (
    DEFAULT_SEARCH_LIMIT,
    ConicPoint,
    ConicSpec,
    LegendreForm,
    find_conic_point,
    legendre_solvable,
    normalize_conic,
)
from .curves.cubic import (
    CubicCurveSpec,
    alpha_from_surface_point,
    find_surface_points,
    mordell_form,
    reduced_cubic_roots,
    sextic_value,
)
from .errors import ExceptionalPointError, SingularInputError, VerificationError
from .parametrization import (
    CurvePair,
    MultisymmetricProfile,
    ParameterPoint,
    curve_pair,
    d_parameters,
    elementary_profile,
    singular_locus_check,
)
from .types import FormulaVariant, OutputFormat, SingularFactor, WitnessClass
from .utils import (
    ensure_rational,
    format_rational,
    parse_rational,
    rational,
    validate_positive_integer,
)

logger = logging.getLogger(__name__)

PROGRAM = "cuboidcurves"


def _fmt(value: Fraction | None) -> str | None:
    return None if value is None else format_rational(value)


@dataclass(frozen=True)
class RationalRange:
    """Inclusive arithmetic progression ``start, start + step, ...`` up to ``stop``."""

    start: Fraction
    stop: Fraction
    step: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "start", ensure_rational(self.start, "start"))
        object.__setattr__(self, "stop", ensure_rational(self.stop, "stop"))
        object.__setattr__(self, "step", ensure_rational(self.step, "step"))
        if self.step == 0:
            raise ValueError("step must be nonzero")

    @classmethod
    def parse(cls, text: str, name: str = "range") -> "RationalRange":
        """Parse ``"start:stop:step"`` or ``"start:stop"`` (step 1)."""
        parts = text.split(":")
        if len(parts) not in (2, 3):
            raise ValueError(f"{name} must look like start:stop:step, got {text!r}")
        start = parse_rational(parts[0], f"{name} start")
        stop = parse_rational(parts[1], f"{name} stop")
        step = parse_rational(parts[2], f"{name} step") if len(parts) == 3 else Fraction(1)
        if step == 0:
            raise ValueError(f"{name} step must be nonzero")
        return cls(start, stop, step)

    def values(self) -> tuple[Fraction, ...]:
        out: list[Fraction] = []
        v = self.start
        while (v <= self.stop) if self.step > 0 else (v >= self.stop):
            out.append(v)
            v += self.step
        return tuple(out)


def parse_values(text: str, name: str) -> tuple[Fraction, ...]:
    """
    Parse a range ``"a:b:s"`` or an explicit comma list ``"r1,r2,..."``.

    Args:
        text (str): Range or list of exact rationals.
        name (str): Field name used in error messages.

    Returns:
        tuple[Fraction, ...]: The values in order.
    """
    if ":" in text:
        return RationalRange.parse(text, name).values()
    return tuple(parse_rational(t, name) for t in text.split(","))


@dataclass(frozen=True)
class ScanConfig:
    """
    Parameters of a grid scan.

    Attributes:
        b_values (tuple[Fraction, ...]): Outer loop values.
        c_values (tuple[Fraction, ...]): Inner loop values.
        output_format (OutputFormat): Serialization of the rows.
        variant (FormulaVariant): Quartic used in the denominator of E21.
        search_limit (int): Largest exhaustive Legendre search bound.
        workers (int): Worker processes; 1 evaluates in-process.
    """

    b_values: tuple[Fraction, ...]
    c_values: tuple[Fraction, ...]
    output_format: OutputFormat = OutputFormat.JsonLines
    variant: FormulaVariant = FormulaVariant.Printed
    search_limit: int = DEFAULT_SEARCH_LIMIT
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(
            self, "b_values", tuple(ensure_rational(v, "b") for v in self.b_values)
        )
        object.__setattr__(
            self, "c_values", tuple(ensure_rational(v, "c") for v in self.c_values)
        )
        if not isinstance(self.output_format, OutputFormat):
            raise TypeError(
                f"output_format must be an OutputFormat, got {type(self.output_format).__name__}"
            )
        if not isinstance(self.variant, FormulaVariant):
            raise TypeError(f"variant must be a FormulaVariant, got {type(self.variant).__name__}")
        validate_positive_integer(self.search_limit, "search_limit")
        validate_positive_integer(self.workers, "workers")

    @classmethod
    def from_ranges(cls, b_range: str, c_range: str, **kwargs) -> "ScanConfig":
        return cls(parse_values(b_range, "b-range"), parse_values(c_range, "c-range"), **kwargs)

    def cells(self) -> list[ParameterPoint]:
        """Grid points in row-major order: ``b`` outer, ``c`` inner."""
        return [ParameterPoint(b, c) for b in self.b_values for c in self.c_values]

    def echo(self) -> dict[str, Any]:
        # the worker count stays out: output must not depend on it
        return {
            "b_values": [format_rational(v) for v in self.b_values],
            "c_values": [format_rational(v) for v in self.c_values],
            "format": self.output_format.value,
            "variant": self.variant.value,
            "search_limit": self.search_limit,
        }


@dataclass(frozen=True)
class LiftReport:
    w: Fraction
    alpha: Fraction
    cubic_roots: tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class BranchReport:
    """Conic and cubic of one branch at one parameter point."""

    branch: int
    Q: Fraction
    P: Fraction
    D: Fraction
    legendre: LegendreForm
    conic_rational: bool
    conic_point: ConicPoint | None
    mordell_k: Fraction | None
    sextic_roots: tuple[Fraction, ...]
    lifts: tuple[LiftReport, ...]

    def to_dict(self) -> dict[str, Any]:
        point = self.conic_point
        return {
            "branch": self.branch,
            "Q": _fmt(self.Q),
            "P": _fmt(self.P),
            "D": _fmt(self.D),
            "legendre": asdict(self.legendre) | {"MN": self.legendre.MN},
            "conic_rational": self.conic_rational,
            "conic_point": None if point is None else [_fmt(point.w), _fmt(point.alpha)],
            "mordell_k": _fmt(self.mordell_k),
            "sextic_roots": [_fmt(w) for w in self.sextic_roots],
            "lifts": [
                {
                    "w": _fmt(lift.w),
                    "alpha": _fmt(lift.alpha),
                    "cubic_roots": [_fmt(y) for y in lift.cubic_roots],
                }
                for lift in self.lifts
            ],
        }


@dataclass(frozen=True)
class VariantComparison:
    """Witnesses reconstructed at one point under each E21 variant; None where the profile is undefined."""

    printed: tuple[CuboidWitness, ...] | None
    corrected: tuple[CuboidWitness, ...] | None

    def witnesses(self, variant: FormulaVariant) -> tuple[CuboidWitness, ...]:
        found = self.printed if variant is FormulaVariant.Printed else self.corrected
        return found or ()

    @property
    def only_passing(self) -> FormulaVariant | None:
        """The variant that alone reconstructs a witness, if exactly one does."""
        if bool(self.printed) == bool(self.corrected):
            return None
        return FormulaVariant.Printed if self.printed else FormulaVariant.Corrected

    def to_dict(self) -> dict[str, Any]:
        only = self.only_passing
        return {
            "printed": None if self.printed is None else len(self.printed),
            "corrected": None if self.corrected is None else len(self.corrected),
            "only_passing": None if only is None else only.value,
        }


@dataclass(frozen=True)
class PointReport:
    """Everything known about one parameter point ``(b, c)``."""

    b: Fraction
    c: Fraction
    variant: FormulaVariant
    singular_factors: tuple[SingularFactor, ...]
    profile: MultisymmetricProfile | None = None
    master_identity: bool | None = None
    pair: CurvePair | None = None
    structure_identity: bool | None = None
    branches: tuple[BranchReport, ...] = ()
    edge_roots: tuple[Fraction, ...] = ()
    diagonal_roots: tuple[Fraction, ...] = ()
    witnesses: tuple[tuple[CuboidWitness, WitnessClass], ...] = ()
    variants: VariantComparison | None = None

    @property
    def status(self) -> str:
        return "singular" if self.singular_factors else "ok"

    def to_dict(self) -> dict[str, Any]:
        pair = self.pair
        return {
            "b": _fmt(self.b),
            "c": _fmt(self.c),
            "variant": self.variant.value,
            "status": self.status,
            "singular_factors": [f.value for f in self.singular_factors],
            "profile": None
            if self.profile is None
            else {k: _fmt(v) for k, v in self.profile.as_dict().items()},
            "master_identity": self.master_identity,
            "curve_pair": None
            if pair is None
            else {f.name: _fmt(getattr(pair, f.name)) for f in fields(pair)},
            "structure_identity": self.structure_identity,
            "branches": [br.to_dict() for br in self.branches],
            "edge_roots": [_fmt(v) for v in self.edge_roots],
            "diagonal_roots": [_fmt(v) for v in self.diagonal_roots],
            "witnesses": [
                {
                    "witness": [_fmt(getattr(wit, name)) for name in WITNESS_FIELDS],
                    "class": cls.value,
                }
                for wit, cls in self.witnesses
            ],
            "variants": None if self.variants is None else self.variants.to_dict(),
        }


def _branch_report(
    p: ParameterPoint, pair: CurvePair, branch: int, search_limit: int
) -> BranchReport:
    Q, P, D = pair.branch(branch)
    form = normalize_conic(Q)
    point = find_conic_point(ConicSpec(Q), search_limit=search_limit)
    mordell_k = mordell_form(CubicCurveSpec(P)).k if P != 0 else None
    surface_points = find_surface_points(p, branch, pair)
    lifts: list[LiftReport] = []
    for sp in surface_points:
        try:
            lifted = alpha_from_surface_point(sp, pair)
        except (ExceptionalPointError, SingularInputError) as e:
            logger.debug("no lift for branch %d at b=%s, c=%s: %s", branch, p.b, p.c, e)
            continue
        lifts.append(LiftReport(sp.w, lifted.alpha, reduced_cubic_roots(sp.w)))
    return BranchReport(
        branch=branch,
        Q=Q,
        P=P,
        D=D,
        legendre=form,
        conic_rational=point is not None,
        conic_point=point,
        mordell_k=mordell_k,
        sextic_roots=tuple(sp.w for sp in surface_points),
        lifts=tuple(lifts),
    )


def compare_variants(p: ParameterPoint) -> VariantComparison:
    """Reconstruct witnesses under both E21 variants; warns when only one succeeds."""
    found: dict[FormulaVariant, tuple[CuboidWitness, ...] | None] = {}
    for variant in FormulaVariant:
        try:
            profile = elementary_profile(p, variant)
        except SingularInputError:
            found[variant] = None
            continue
        found[variant] = tuple(witnesses_from_profile(profile))
    comparison = VariantComparison(
        printed=found[FormulaVariant.Printed], corrected=found[FormulaVariant.Corrected]
    )
    if comparison.only_passing is not None:
        logger.warning(
            "only the %s variant reconstructs a witness at b=%s, c=%s",
            comparison.only_passing.value,
            p.b,
            p.c,
        )
    return comparison


def report_point(
    b: rational,
    c: rational,
    variant: FormulaVariant = FormulaVariant.Printed,
    search_limit: int = DEFAULT_SEARCH_LIMIT,
) -> PointReport:
    """
    Evaluate and classify everything attached to ``(b, c)``.

    Singular factors are reported, not raised; the parts whose formulas are
    undefined at ``(b, c)`` are left empty.

    Args:
        b (rational): First parameter.
        c (rational): Second parameter.
        variant (FormulaVariant, optional): Quartic used in E21. Defaults to Printed.
        search_limit (int, optional): Largest exhaustive Legendre search bound. Defaults to 1_000_000.

    Returns:
        PointReport: Profile, curve data, conic and cubic classification of
            both branches, reconstructed witnesses, and which
            E21 variants reconstruct any witness at all.

    Raises:
        VerificationError: If an identity that must hold exactly fails.
    """
    p = ParameterPoint(b, c)
    factors = tuple(singular_locus_check(p, variant))
    variants = compare_variants(p)

    profile = None
    master = None
    edge_roots: tuple[Fraction, ...] = ()
    diagonal_roots: tuple[Fraction, ...] = ()
    witnesses: tuple[tuple[CuboidWitness, WitnessClass], ...] = ()
    try:
        profile = elementary_profile(p, variant)
    except SingularInputError as e:
        logger.debug("%s", e)
    if profile is not None:
        master = profile.satisfies_master_identity()
        if not master:
            raise VerificationError(f"master identity fails at b={p.b}, c={p.c}")
        edge_roots = tuple(solve_cubic_rational(profile.E10, profile.E20, profile.E30))
        diagonal_roots = tuple(solve_cubic_rational(profile.E01, profile.E02, profile.E03))
        witnesses = tuple(
            (wit, positivity_gate(wit)) for wit in variants.witnesses(variant)
        )

    pair = None
    structure = None
    branches: tuple[BranchReport, ...] = ()
    try:
        pair = curve_pair(p)
    except SingularInputError as e:
        logger.debug("%s", e)
    if pair is not None:
        structure = pair.satisfies_structure() and d_parameters(p) == (pair.D1, pair.D2)
        if not structure:
            raise VerificationError(f"D = -P^2/Q^3 fails at b={p.b}, c={p.c}")
        branches = tuple(_branch_report(p, pair, i, search_limit) for i in (1, 2))

    return PointReport(
        b=p.b,
        c=p.c,
        variant=variant,
        singular_factors=factors,
        profile=profile,
        master_identity=master,
        pair=pair,
        structure_identity=structure,
        branches=branches,
        edge_roots=edge_roots,
        diagonal_roots=diagonal_roots,
        witnesses=witnesses,
        variants=variants,
    )


@dataclass(frozen=True)
class ScanRow:
    """One grid cell as exact strings, ready for serialization."""

    b: str
    c: str
    status: str
    singular_factors: tuple[str, ...] = ()
    Q1: str | None = None
    Q2: str | None = None
    MN1: int | None = None
    MN2: int | None = None
    conic1_rational: bool | None = None
    conic2_rational: bool | None = None
    conic1_point: tuple[str, str] | None = None
    conic2_point: tuple[str, str] | None = None
    sextic1_roots: tuple[str, ...] = ()
    sextic2_roots: tuple[str, ...] = ()
    lifted_alphas: tuple[tuple[int, str, str], ...] = ()

    @classmethod
    def from_report(cls, report: PointReport) -> "ScanRow":
        values: dict[str, Any] = {
            "b": _fmt(report.b),
            "c": _fmt(report.c),
            "status": report.status,
            "singular_factors": tuple(f.value for f in report.singular_factors),
        }
        lifted: list[tuple[int, str, str]] = []
        for br in report.branches:
            i = br.branch
            point = br.conic_point
            values[f"Q{i}"] = _fmt(br.Q)
            values[f"MN{i}"] = br.legendre.MN
            values[f"conic{i}_rational"] = br.conic_rational
            values[f"conic{i}_point"] = (
                None if point is None else (_fmt(point.w), _fmt(point.alpha))
            )
            values[f"sextic{i}_roots"] = tuple(_fmt(w) for w in br.sextic_roots)
            lifted.extend((i, _fmt(lift.w), _fmt(lift.alpha)) for lift in br.lifts)
        values["lifted_alphas"] = tuple(lifted)
        return cls(**values)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, tuple):
                value = [list(v) if isinstance(v, tuple) else v for v in value]
            out[f.name] = value
        return out


CSV_COLUMNS = tuple(f.name for f in fields(ScanRow))


def _csv_cell(value: Any) -> Any:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return value
    if isinstance(value, tuple):
        return ";".join(
            " ".join(str(part) for part in v) if isinstance(v, tuple) else str(v)
            for v in value
        )
    return str(value)


def scan_cell(
    p: ParameterPoint,
    variant: FormulaVariant = FormulaVariant.Printed,
    search_limit: int = DEFAULT_SEARCH_LIMIT,
) -> ScanRow:
    return ScanRow.from_report(report_point(p.b, p.c, variant, search_limit))


def verify_row(row: ScanRow, variant: FormulaVariant = FormulaVariant.Printed) -> None:
    """
    Recheck every claim of a row from its own strings.

    Args:
        row (ScanRow): Row to check.
        variant (FormulaVariant, optional): Variant the row was produced with.

    Raises:
        VerificationError: On the first claim that does not hold.
    """
    p = ParameterPoint(parse_rational(row.b, "b"), parse_rational(row.c, "c"))
    where = f"row b={row.b}, c={row.c}"
    factors = tuple(f.value for f in singular_locus_check(p, variant))
    if factors != row.singular_factors:
        raise VerificationError(f"{where}: singular factors {row.singular_factors} != {factors}")
    if row.Q1 is None:
        return
    pair = curve_pair(p)
    for i in (1, 2):
        Q, P, D = pair.branch(i)
        if getattr(row, f"Q{i}") != format_rational(Q):
            raise VerificationError(f"{where}: Q{i} does not match")
        MN = getattr(row, f"MN{i}")
        if normalize_conic(Q).MN != MN:
            raise VerificationError(f"{where}: MN{i}={MN} does not normalize Q{i}")
        if getattr(row, f"conic{i}_rational") != legendre_solvable(MN):
            raise VerificationError(f"{where}: conic{i} classification disagrees with the criterion")
        point = getattr(row, f"conic{i}_point")
        if (point is not None) != getattr(row, f"conic{i}_rational"):
            raise VerificationError(f"{where}: conic{i} point does not match its classification")
        if point is not None:
            w, alpha = (parse_rational(v, f"conic{i}_point") for v in point)
            if not ConicSpec(Q).contains(w, alpha):
                raise VerificationError(f"{where}: conic{i} point ({w}, {alpha}) is off the conic")
        for text in getattr(row, f"sextic{i}_roots"):
            if sextic_value(D, parse_rational(text, f"sextic{i}_roots")) != 0:
                raise VerificationError(f"{where}: {text} is not a root of sextic {i}")
    for branch, w_text, alpha_text in row.lifted_alphas:
        Q, P, _ = pair.branch(branch)
        w = parse_rational(w_text, "lifted w")
        alpha = parse_rational(alpha_text, "lifted alpha")
        if w**2 + 3 != Q * alpha**2 or 2 * (w**2 - 1) != P * alpha**3:
            raise VerificationError(f"{where}: lift ({w}, {alpha}) misses a curve of branch {branch}")


def scan_points(
    points: Sequence[ParameterPoint],
    variant: FormulaVariant = FormulaVariant.Printed,
    search_limit: int = DEFAULT_SEARCH_LIMIT,
    workers: int = 1,
) -> Iterator[ScanRow]:
    """
    Evaluate cells, in parallel when ``workers > 1``, yielding verified rows in input order.

    Args:
        points (Sequence[ParameterPoint]): Cells to evaluate.
        variant (FormulaVariant, optional): Quartic used in E21. Defaults to Printed.
        search_limit (int, optional): Largest exhaustive Legendre search bound. Defaults to 1_000_000.
        workers (int, optional): Worker processes. Defaults to 1.

    Yields:
        ScanRow: One row per point.
    """
    workers = validate_positive_integer(workers, "workers")
    cell = partial(scan_cell, variant=variant, search_limit=search_limit)
    if workers == 1 or len(points) <= 1:
        rows: Iterable[ScanRow] = map(cell, points)
        for row in rows:
            verify_row(row, variant)
            yield row
        return
    chunksize = max(1, len(points) // (4 * workers))
    logger.info("scanning %d cells on %d workers", len(points), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map keeps input order whatever order the workers finish in
        for row in pool.map(cell, points, chunksize=chunksize):
            verify_row(row, variant)
            yield row


def scan_grid(config: ScanConfig) -> Iterator[ScanRow]:
    """Rows of the grid in row-major order (``b`` outer, ``c`` inner)."""
    return scan_points(config.cells(), config.variant, config.search_limit, config.workers)


@dataclass
class ScanSummary:
    rows: int = 0
    singular: int = 0
    conic1_rational: int = 0
    conic2_rational: int = 0
    sextic_root_found: int = 0
    lifted: int = 0

    def add(self, row: ScanRow) -> None:
        self.rows += 1
        self.singular += row.status == "singular"
        self.conic1_rational += bool(row.conic1_rational)
        self.conic2_rational += bool(row.conic2_rational)
        self.sextic_root_found += bool(row.sextic1_roots or row.sextic2_roots)
        self.lifted += len(row.lifted_alphas)

    def to_dict(self) -> dict[str, int]:
        return asdict(self)


def scan_header(variant: FormulaVariant, config: dict[str, Any]) -> dict[str, Any]:
    return {"program": PROGRAM, "version": __version__, "variant": variant.value, "config": config}


class JsonLinesWriter:
    def __init__(self, stream: IO[str]):
        self.stream = stream

    def _emit(self, kind: str, payload: dict[str, Any]) -> None:
        self.stream.write(json.dumps({"kind": kind, **payload}) + "\n")

    def header(self, header: dict[str, Any]) -> None:
        self._emit("header", header)

    def row(self, row: ScanRow) -> None:
        self._emit("row", row.to_dict())

    def summary(self, summary: ScanSummary) -> None:
        self._emit("summary", summary.to_dict())


class CsvWriter:
    def __init__(self, stream: IO[str]):
        self.stream = stream
        self.writer = csv.writer(stream, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")

    def header(self, header: dict[str, Any]) -> None:
        self.stream.write(f"# {header['program']} {header['version']} variant={header['variant']}\n")
        self.stream.write(f"# config {json.dumps(header['config'])}\n")
        self.writer.writerow(CSV_COLUMNS)

    def row(self, row: ScanRow) -> None:
        self.writer.writerow([_csv_cell(getattr(row, name)) for name in CSV_COLUMNS])

    def summary(self, summary: ScanSummary) -> None:
        counts = " ".join(f"{k}={v}" for k, v in summary.to_dict().items())
        self.stream.write(f"# summary {counts}\n")


def make_writer(output_format: OutputFormat, stream: IO[str]) -> JsonLinesWriter | CsvWriter:
    if output_format is OutputFormat.JsonLines:
        return JsonLinesWriter(stream)
    elif output_format is OutputFormat.Csv:
        return CsvWriter(stream)
    else:
        raise ValueError(f"unsupported output format: {output_format}")


def write_scan(
    rows: Iterable[ScanRow],
    header: dict[str, Any],
    output_format: OutputFormat,
    stream: IO[str],
) -> ScanSummary:
    """Write header, rows and summary; return the summary."""
    writer = make_writer(output_format, stream)
    summary = ScanSummary()
    writer.header(header)
    for row in rows:
        writer.row(row)
        summary.add(row)
    writer.summary(summary)
    return summary


def run_scan(config: ScanConfig, stream: IO[str]) -> ScanSummary:
    header = scan_header(config.variant, config.echo())
    return write_scan(scan_grid(config), header, config.output_format, stream)
