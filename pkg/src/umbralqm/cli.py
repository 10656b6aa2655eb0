"""Command line front end.

Tabulates basic polynomials, discrete exponentials and trigonometric
functions, infinite-well spectra/wavefunctions and energy bounds as CSV or
JSON. Data goes to stdout or --out; diagnostics go to stderr. Exit codes:
0 success, 2 validation error, 1 internal error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

from . import __version__
from .correspondences import EvaluationOverflow, basic_polynomial_value
from .functions import (
    ConsistencyError,
    DomainError,
    WaveSpec,
    amplitude_growth,
    momentum_to_wavelength,
    umbral_exp,
    umbral_exp_series,
    umbral_trig,
    wavelength_to_momentum,
)
from .operators import Correspondence, InvalidDeltaError, Kind
from .schrodinger import (
    ELECTRON_MASS_KG,
    PLANCK_LENGTH_M,
    PLANCK_TIME_S,
    PROTON_MASS_KG,
    NonPhysicalStateError,
    PhysicalUnits,
    WindowTooSmallError,
    energy_bounds,
    infinite_well_spectrum,
    infinite_well_wavefunction,
)

_KINDS = {"right": Kind.RIGHT, "left": Kind.LEFT, "symmetric": Kind.SYMMETRIC}
_CORR_CHOICES = ("right", "left", "symmetric", "all")
_FORMAT_CHOICES = ("csv", "json")

_DEFAULTS = {
    "sigma": 1.0,
    "tau": 1.0,
    "corr": "all",
    "format": "csv",
    "out": None,
    "window": "-10:10",
    "tol": 1e-10,
}

_CONTINUOUS = {"sin": math.sin, "cos": math.cos, "sinh": math.sinh, "cosh": math.cosh}


class ConfigError(ValueError):
    pass


@dataclass
class Table:
    name: str
    columns: list  # ordered (name, values) pairs


@dataclass
class RunConfig:
    sigma: float
    tau: float
    corr: str
    kinds: list
    fmt: str
    out: str | None
    window: tuple[int, int]
    tol: float


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------


def _parse_window(text: str) -> tuple[int, int]:
    try:
        lo_text, hi_text = text.split(":")
        lo, hi = int(lo_text), int(hi_text)
    except ValueError as exc:
        raise ConfigError(f"window must look like MIN:MAX, got {text!r}") from exc
    if lo > hi:
        raise ConfigError("window minimum exceeds maximum")
    return lo, hi


def _load_config_file(path: str) -> dict:
    values = {}
    try:
        with open(path, encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, 1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path}:{lineno}: expected key = value")
                key, _, value = line.partition("=")
                key = key.strip()
                if key not in _DEFAULTS:
                    raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
                values[key] = value.strip()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    return values


def resolve_config(args: argparse.Namespace) -> RunConfig:
    merged = dict(_DEFAULTS)
    env_path = os.environ.get("UMBRALQM_CONFIG")
    if env_path:
        merged.update(_load_config_file(env_path))
    for key in _DEFAULTS:
        flag = getattr(args, key, None)
        if flag is not None:
            merged[key] = flag

    try:
        sigma = float(merged["sigma"])
        tau = float(merged["tau"])
        tol = float(merged["tol"])
    except ValueError as exc:
        raise ConfigError(f"bad numeric configuration value: {exc}") from exc
    if sigma <= 0 or tau <= 0 or tol <= 0:
        raise ConfigError("sigma, tau and tol must be positive")
    corr = str(merged["corr"])
    if corr not in _CORR_CHOICES:
        raise ConfigError(f"corr must be one of {_CORR_CHOICES}")
    fmt = str(merged["format"])
    if fmt not in _FORMAT_CHOICES:
        raise ConfigError(f"format must be one of {_FORMAT_CHOICES}")
    kinds = list(_KINDS.values()) if corr == "all" else [_KINDS[corr]]
    window = _parse_window(str(merged["window"]))
    return RunConfig(sigma, tau, corr, kinds, fmt, merged["out"], window, tol)


# ---------------------------------------------------------------------------
# table formatting
# ---------------------------------------------------------------------------


def format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return format(value, ".17g")
    return str(value)


def parse_cell(text: str):
    if text == "":
        return None
    if text == "true":
        return True
    if text == "false":
        return False
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def write_csv(table: Table, stream) -> None:
    names = [name for name, _ in table.columns]
    stream.write(",".join(names) + "\n")
    length = len(table.columns[0][1]) if table.columns else 0
    for i in range(length):
        stream.write(",".join(format_cell(vals[i]) for _, vals in table.columns) + "\n")


def read_csv(stream) -> Table:
    lines = [line.rstrip("\n") for line in stream if line.strip() != ""]
    if not lines:
        raise ValueError("empty csv input")
    names = lines[0].split(",")
    columns = [(name, []) for name in names]
    for line in lines[1:]:
        cells = line.split(",")
        if len(cells) != len(names):
            raise ValueError("ragged csv row")
        for (_, vals), cell in zip(columns, cells):
            vals.append(parse_cell(cell))
    return Table("", columns)


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def _tables_to_json(command: str, cfg: RunConfig, tables: list[Table]) -> dict:
    return {
        "meta": {
            "command": command,
            "version": __version__,
            "config": {
                "sigma": cfg.sigma,
                "tau": cfg.tau,
                "corr": cfg.corr,
                "format": cfg.fmt,
                "window": list(cfg.window),
                "tol": cfg.tol,
                "out": cfg.out,
            },
        },
        "data": {
            "tables": [
                {
                    "name": t.name,
                    "columns": {name: [_json_value(v) for v in vals] for name, vals in t.columns},
                }
                for t in tables
            ]
        },
    }


def emit(command: str, cfg: RunConfig, tables: list[Table], multi_table: bool = False) -> int:
    if cfg.fmt == "json":
        text = json.dumps(_tables_to_json(command, cfg, tables), indent=2) + "\n"
        if cfg.out:
            with open(cfg.out, "w", encoding="utf-8") as handle:
                handle.write(text)
        else:
            sys.stdout.write(text)
        return 0
    if len(tables) == 1 and not multi_table:
        if cfg.out:
            with open(cfg.out, "w", encoding="utf-8") as handle:
                write_csv(tables[0], handle)
        else:
            write_csv(tables[0], sys.stdout)
        return 0
    if cfg.out:
        for table in tables:
            path = f"{cfg.out}_{table.name}.csv"
            with open(path, "w", encoding="utf-8") as handle:
                write_csv(table, handle)
        return 0
    write_csv(tables[0], sys.stdout)
    if len(tables) > 1:
        omitted = ", ".join(t.name for t in tables[1:])
        print(
            f"note: tables omitted on csv stdout ({omitted}); pass --out BASE or --format json",
            file=sys.stderr,
        )
    return 0


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _safe_cell(fn, *args) -> float:
    # Tabulated cells degrade to inf instead of aborting the whole table
    # when a closed form outgrows the double range on a wide window.
    try:
        return fn(*args)
    except OverflowError:
        return math.inf


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise ConfigError(f"{what} must be a comma-separated integer list") from exc


def _corr_name(kind: Kind) -> str:
    return kind.value


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_polys(cfg: RunConfig, args: argparse.Namespace) -> int:
    degrees = _parse_int_list(args.n, "--n")
    if not degrees:
        return _fail("--n must list at least one degree")
    if any(n < 0 for n in degrees):
        return _fail("polynomial degrees must be >= 0")
    lo, hi = cfg.window
    ms = list(range(lo, hi + 1))
    columns = [("m", ms), ("x", [m * cfg.sigma for m in ms])]
    for n in degrees:
        columns.append((f"continuous_n{n}", [(m * cfg.sigma) ** n for m in ms]))
    for kind in cfg.kinds:
        c = Correspondence(kind, cfg.sigma)
        for n in degrees:
            columns.append(
                (f"{_corr_name(kind)}_n{n}", [basic_polynomial_value(c, n, m) for m in ms])
            )
    return emit("polys", cfg, [Table("basic_polynomials", columns)])


def cmd_exp(cfg: RunConfig, args: argparse.Namespace) -> int:
    k = args.k
    with_series = not args.no_series
    if abs(k) * cfg.sigma >= 1 and with_series:
        return _fail(
            f"|k sigma| = {abs(k) * cfg.sigma:g} >= 1: the series diverges; "
            "pass --no-series for closed forms only"
        )
    if not with_series:
        print("note: series columns disabled, emitting closed forms only", file=sys.stderr)
    lo, hi = cfg.window
    ms = list(range(lo, hi + 1))
    columns = [
        ("m", ms),
        ("x", [m * cfg.sigma for m in ms]),
        ("continuous", [_safe_cell(math.exp, k * m * cfg.sigma) for m in ms]),
    ]
    for kind in cfg.kinds:
        c = Correspondence(kind, cfg.sigma)
        name = _corr_name(kind)
        columns.append((f"{name}_closed", [_safe_cell(umbral_exp, c, k, m) for m in ms]))
        if with_series:
            values, statuses = [], []
            for m in ms:
                v, st = umbral_exp_series(c, k, m, cfg.tol)
                values.append(v)
                statuses.append(st.value)
            columns.append((f"{name}_series", values))
            columns.append((f"{name}_status", statuses))
    return emit("exp", cfg, [Table("exponential", columns)])


def cmd_trig(cfg: RunConfig, args: argparse.Namespace) -> int:
    which = args.which
    lo, hi = cfg.window
    ms = list(range(lo, hi + 1))
    waves = []
    for kind in cfg.kinds:
        c = Correspondence(kind, cfg.sigma)
        if args.l is not None:
            waves.append(WaveSpec.from_points(c, args.l))
        else:
            waves.append(WaveSpec.from_momentum(c, args.k))
    samples = [("m", ms), ("x", [m * cfg.sigma for m in ms])]
    wave_cols = {
        "correspondence": [],
        "k": [],
        "k_sigma": [],
        "lambda": [],
        "points_per_wavelength": [],
        "is_minimal": [],
        "amplitude_factor_per_period": [],
    }
    continuous = _CONTINUOUS[which]
    for kind, wave in zip(cfg.kinds, waves):
        c = wave.correspondence
        name = _corr_name(kind)
        k = wave.k
        samples.append((f"{name}_{which}", [_safe_cell(umbral_trig, c, k, m, which) for m in ms]))
        samples.append((f"{name}_continuous", [_safe_cell(continuous, k * m * cfg.sigma) for m in ms]))
        wave_cols["correspondence"].append(name)
        wave_cols["k"].append(k)
        wave_cols["k_sigma"].append(k * cfg.sigma)
        wave_cols["lambda"].append(wave.wavelength)
        wave_cols["points_per_wavelength"].append(wave.points_per_wavelength)
        wave_cols["is_minimal"].append(wave.is_minimal)
        factor = None
        if kind is not Kind.SYMMETRIC:
            factor = amplitude_growth(wave.points_per_wavelength, 1)
        wave_cols["amplitude_factor_per_period"].append(factor)
    tables = [
        Table("samples", samples),
        Table("wave_parameters", [(k, v) for k, v in wave_cols.items()]),
    ]
    return emit("trig", cfg, tables, multi_table=True)


def cmd_well(cfg: RunConfig, args: argparse.Namespace) -> int:
    M = args.points
    if M < 2:
        return _fail("--points must be >= 2")
    levels = _parse_int_list(args.levels, "--levels") if args.levels else []
    for n in levels:
        if not 1 <= n <= M - 1:
            return _fail(f"level {n} outside [1, {M - 1}]")

    spectrum_cols = {
        "correspondence": [],
        "n": [],
        "k": [],
        "energy": [],
        "physical": [],
        "convergent": [],
        "degenerate_with": [],
        "energy_continuous": [],
    }
    for kind in cfg.kinds:
        c = Correspondence(kind, cfg.sigma)
        spec = infinite_well_spectrum(c, M)
        for lv in spec.levels:
            spectrum_cols["correspondence"].append(_corr_name(kind))
            spectrum_cols["n"].append(lv.n)
            spectrum_cols["k"].append(lv.momentum)
            spectrum_cols["energy"].append(lv.energy)
            spectrum_cols["physical"].append(lv.physical)
            spectrum_cols["convergent"].append(lv.convergent)
            spectrum_cols["degenerate_with"].append(M - lv.n)
            spectrum_cols["energy_continuous"].append((lv.n * math.pi / (M * cfg.sigma)) ** 2)
    tables = [Table("spectrum", [(k, v) for k, v in spectrum_cols.items()])]

    for kind in cfg.kinds:
        c = Correspondence(kind, cfg.sigma)
        for n in levels:
            try:
                wf = infinite_well_wavefunction(c, M, n)
            except NonPhysicalStateError as exc:
                return _fail(str(exc))
            except DomainError:
                print(
                    f"note: skipping {_corr_name(kind)} level {n}: momentum beyond the "
                    "k sigma = 1 convergence boundary",
                    file=sys.stderr,
                )
                continue
            ms = list(range(M + 1))
            tables.append(
                Table(
                    f"wavefunction_{_corr_name(kind)}_n{n}",
                    [
                        ("m", ms),
                        ("x", [m * cfg.sigma for m in ms]),
                        ("psi", list(wf.samples)),
                    ],
                )
            )
    return emit("well", cfg, tables, multi_table=True)


def cmd_bounds(cfg: RunConfig, args: argparse.Namespace) -> int:
    sigma_m = args.sigma_m
    tau_s = args.tau_s
    if args.particle == "electron":
        particles = [("electron", ELECTRON_MASS_KG)]
    elif args.particle == "proton":
        particles = [("proton", PROTON_MASS_KG)]
    elif args.particle == "custom":
        if args.mass is None or args.mass <= 0:
            return _fail("--particle custom requires a positive --mass in kg")
        particles = [("custom", args.mass)]
    else:
        particles = [("electron", ELECTRON_MASS_KG), ("proton", PROTON_MASS_KG)]
    columns = {
        "particle": [],
        "mass_kg": [],
        "e_max_time_ev": [],
        "e_max_space_ev": [],
        "e_binding_ev": [],
    }
    for name, mass in particles:
        bounds = energy_bounds(PhysicalUnits(mass=mass, sigma_m=sigma_m, tau_s=tau_s))
        columns["particle"].append(name)
        columns["mass_kg"].append(mass)
        columns["e_max_time_ev"].append(bounds.e_max_time_ev)
        columns["e_max_space_ev"].append(bounds.e_max_space_ev)
        columns["e_binding_ev"].append(bounds.binding_ev)
    return emit("bounds", cfg, [Table("bounds", [(k, v) for k, v in columns.items()])])


# ---------------------------------------------------------------------------
# self-check
# ---------------------------------------------------------------------------


def _run_checks(cfg: RunConfig):
    from fractions import Fraction

    from .correspondences import basic_polynomial, zeros_of_basic_polynomial
    from .operators import DeltaOperator, apply_delta, commutator_residual
    from .schrodinger import PlaneWaveState, apply_hamiltonian, well_state_count

    kinds = list(_KINDS.values())

    def heisenberg():
        for kind in kinds:
            for sigma in (1, Fraction(1, 3)):
                if commutator_residual(Correspondence(kind, sigma), 16) != 0:
                    return f"nonzero commutator residual for {kind.value}, sigma={sigma}"
        return None

    def lowering():
        for kind in kinds:
            c = Correspondence(kind, Fraction(1, 3))
            d = DeltaOperator.for_correspondence(c)
            for n in range(1, 17):
                if apply_delta(d, basic_polynomial(c, n)) != n * basic_polynomial(c, n - 1):
                    return f"lowering failed for {kind.value}, n={n}"
        return None

    def closed_vs_product():
        for kind in kinds:
            c = Correspondence(kind, 0.5)
            for n in range(13):
                for m in range(-12, 13):
                    value = basic_polynomial_value(c, n, m)
                    x = m * 0.5
                    if kind is Kind.RIGHT:
                        oracle = 1.0
                        for i in range(n):
                            oracle *= x - i * 0.5
                    elif kind is Kind.LEFT:
                        oracle = 1.0
                        for i in range(n):
                            oracle *= x + i * 0.5
                    else:
                        oracle = 1.0 if n == 0 else x
                        for i in range(max(n - 1, 0)):
                            oracle *= x + (2 * i - (n - 2)) * 0.5
                    if abs(value - oracle) > 1e-12 * max(1.0, abs(oracle)):
                        return f"value mismatch at {kind.value}, n={n}, m={m}"
        return None

    def exp_series():
        for kind in kinds:
            c = Correspondence(kind, 1)
            for ks in (-0.5, 0.5, 0.9):
                for m in range(-10, 11):
                    closed = umbral_exp(c, ks, m)
                    summed, _ = umbral_exp_series(c, ks, m, 1e-12)
                    if abs(summed - closed) > 1e-10 * max(1.0, abs(closed)):
                        return f"series mismatch at {kind.value}, k sigma={ks}, m={m}"
        return None

    def waves():
        for kind in kinds:
            c = Correspondence(kind, cfg.sigma)
            lmin = 4 if kind is Kind.SYMMETRIC else 8
            if abs(momentum_to_wavelength(c, 1 / cfg.sigma) - lmin * cfg.sigma) > 1e-12:
                return f"minimal wave mismatch for {kind.value}"
            for l in (12.0, 48.0):
                k = wavelength_to_momentum(c, l)
                if abs(momentum_to_wavelength(c, k) - l * cfg.sigma) > 1e-10 * l * cfg.sigma:
                    return f"wavelength round trip failed for {kind.value}, l={l}"
        return None

    def eigencheck():
        for kind in kinds:
            c = Correspondence(kind, 1.0)
            psi = PlaneWaveState(c, 0.5).tabulate((-8, 8))
            out = apply_hamiltonian(c, 2.0, psi)
            for m in out.indices():
                want = (0.25 + 2.0) * psi.value(m)
                if abs(out.value(m) - want) > 1e-10 * max(1.0, abs(want)):
                    return f"plane-wave eigencheck failed for {kind.value} at m={m}"
        return None

    def well_counts():
        if well_state_count(Correspondence(Kind.RIGHT, 1), 8) != (4, 3, 1):
            return "right well counts changed"
        if well_state_count(Correspondence(Kind.SYMMETRIC, 1), 8) != (4, 4, 4):
            return "symmetric well counts changed"
        return None

    def bounds_targets():
        u = PhysicalUnits()
        b = energy_bounds(u)
        if abs(b.e_max_time_ev - 1.22e28) > 0.01 * 1.22e28:
            return "time bound off target"
        if abs(b.e_max_space_ev - 1.46e50) > 0.02 * 1.46e50:
            return "electron space bound off target"
        return None

    def polynomial_zeros():
        if zeros_of_basic_polynomial(Correspondence(Kind.SYMMETRIC, 1), 3) != [-1, 0, 1]:
            return "symmetric zero pattern changed"
        return None

    return [
        ("heisenberg identity (degree 16, sigma 1 and 1/3)", heisenberg),
        ("basic sequence lowering (degree 16)", lowering),
        ("closed form vs direct product", closed_vs_product),
        ("exponential series vs closed form", exp_series),
        ("wavelength round trips and minimal waves", waves),
        ("constant-potential plane-wave eigencheck", eigencheck),
        ("well state counts", well_counts),
        ("energy bound targets", bounds_targets),
        ("symmetric zero pattern", polynomial_zeros),
    ]


def cmd_check(cfg: RunConfig, args: argparse.Namespace) -> int:
    failures = 0
    for name, check in _run_checks(cfg):
        detail = check()
        if detail is None:
            print(f"ok   {name}")
        else:
            failures += 1
            print(f"FAIL {name}: {detail}")
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="umbralqm",
        description="Tabulate lattice quantum mechanics data as CSV or JSON.",
    )
    parser.add_argument("--version", action="version", version=f"umbralqm {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sigma", type=float, help="lattice spacing (default 1)")
    common.add_argument("--tau", type=float, help="time step (default 1)")
    common.add_argument("--corr", choices=_CORR_CHOICES, help="correspondence selection")
    common.add_argument("--format", choices=_FORMAT_CHOICES, help="output format")
    common.add_argument("--out", help="output path (base path for multi-table csv)")
    common.add_argument("--window", help="lattice index window MIN:MAX (use --window=-10:10)")
    common.add_argument("--tol", type=float, help="series tolerance (default 1e-10)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("polys", parents=[common], help="basic polynomial values")
    p.add_argument("--n", default="1,2,3", help="comma-separated degrees")
    p.set_defaults(func=cmd_polys)

    p = sub.add_parser("exp", parents=[common], help="discrete exponential")
    p.add_argument("--k", type=float, required=True, help="momentum")
    p.add_argument("--no-series", action="store_true", help="emit closed forms only")
    p.set_defaults(func=cmd_exp)

    p = sub.add_parser("trig", parents=[common], help="discrete trigonometric functions")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=float, help="momentum")
    group.add_argument("--l", type=float, help="points per wavelength")
    p.add_argument("--which", choices=("sin", "cos", "sinh", "cosh"), default="sin")
    p.set_defaults(func=cmd_trig)

    p = sub.add_parser("well", parents=[common], help="infinite-well spectrum and wavefunctions")
    p.add_argument("--points", type=int, required=True, help="lattice points M in the well")
    p.add_argument("--levels", help="comma-separated levels for wavefunction tables")
    p.set_defaults(func=cmd_well)

    p = sub.add_parser("bounds", parents=[common], help="lattice energy upper limits")
    p.add_argument("--particle", choices=("electron", "proton", "custom", "both"), default="both")
    p.add_argument("--mass", type=float, help="mass in kg for --particle custom")
    p.add_argument("--sigma-m", type=float, default=PLANCK_LENGTH_M, help="lattice length in meters")
    p.add_argument("--tau-s", type=float, default=PLANCK_TIME_S, help="time step in seconds")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("check", parents=[common], help="run the invariant self-checks")
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = resolve_config(args)
        return args.func(cfg, args)
    except (
        ConfigError,
        DomainError,
        NonPhysicalStateError,
        WindowTooSmallError,
        EvaluationOverflow,
        InvalidDeltaError,
        ConsistencyError,
    ) as exc:
        return _fail(str(exc))
    except BrokenPipeError:
        return 1
    except Exception as exc:  # pragma: no cover
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
