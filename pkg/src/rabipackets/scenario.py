"""Scenario files, validity rules, presets and the run/verify drivers.

A scenario is an INI file::

    [params]              ; or [physical], see below
    rabi = 6
    detuning = 0

    [grid]
    center = 0
    half_width = 16
    n_points = 4096

    [ground]
    kind = gaussian       ; gaussian | tabulated | definite | absent
    center = 0
    sigma = 2
    phase_slope = 0
    weight = 1            ; complex, e.g. 0.5+0.5j

    [excited]
    kind = absent

    [schedule]
    tau_max = 30
    n_samples = 500
    snapshot_taus = 0, 30

    [output]
    directory = out
    prefix = fig2
    override_validity = no
"""

from __future__ import annotations

import configparser
import csv
import io
import json
import math
import re
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from . import observables
from .errors import ConservationError, ScenarioError
from .grid import MomentumGrid, build_grid
from .observables import ObservableRecord, conservation_residuals, distribution, record
from .oracle import OdeSettings, compare_propagators
from .propagator import evolve, generalized_detuning, generalized_rabi
from .states import (
    EXCITED,
    GROUND,
    TwoLevelState,
    assemble_state,
    gaussian_amplitudes,
    load_tabulated,
    tabulated_amplitudes,
)
from .units import PhysicalParams, SimParams, to_dimensionless

__all__ = [
    "CSV_COLUMNS",
    "PRESETS",
    "PacketSpec",
    "RunResult",
    "Scenario",
    "VerifyReport",
    "list_presets",
    "load_scenario",
    "parse_scenario",
    "preset",
    "run_scenario",
    "scenario_to_ini",
    "simulate",
    "validity_violations",
    "verify_scenario",
]

CSV_COLUMNS = (
    "tau", "n_g", "n_e", "p_mean_g", "p_mean_e", "p_norm_g", "p_norm_e",
    "e_kin_g", "e_kin_e", "e_kin_total", "e_norm_g", "e_norm_e",
)

PACKET_KINDS = ("gaussian", "tabulated", "definite", "absent")

# abort thresholds during a run
RUN_RESIDUAL_LIMIT = 1e-8
# pass thresholds for `verify`
ORACLE_LIMIT = 1e-8
NORM_LIMIT = 1e-10
MOMENTUM_LIMIT = 1e-9

TIME_RULE = "time validity: 2 * dp * tau_max <= pi/4"
GRID_RULE = "grid adequacy: half_width >= |packet center - grid center| + 6 sigma + 1 and dp <= sigma/8"


@dataclass(frozen=True)
class PacketSpec:
    kind: str = "absent"
    center: float = 0.0
    sigma: float = 1.0
    phase_slope: float = 0.0
    path: str | None = None
    weight: complex = 1.0


@dataclass(frozen=True)
class Scenario:
    params: SimParams
    grid_center: float
    grid_half_width: float
    grid_points: int
    ground: PacketSpec
    excited: PacketSpec
    tau_max: float
    n_samples: int = 500
    snapshot_taus: tuple[float, ...] = ()
    output_dir: str = "."
    prefix: str = "run"
    override_validity: bool = False
    physical: PhysicalParams | None = None
    preset: str | None = None
    base_dir: Path | None = field(default=None, compare=False)

    @property
    def grid(self) -> MomentumGrid:
        return build_grid(self.grid_center, self.grid_half_width, self.grid_points)

    @property
    def sample_taus(self) -> np.ndarray:
        return np.linspace(0.0, self.tau_max, self.n_samples)


# --------------------------------------------------------------------------
# validity


def validity_violations(scenario: Scenario) -> list[str]:
    """Human-readable list of broken validity rules (empty if none)."""
    problems = []
    grid = scenario.grid
    if not grid.is_definite:
        horizon = max([scenario.tau_max, *scenario.snapshot_taus])
        if 2.0 * grid.dp * horizon > math.pi / 4:
            problems.append(
                f"{TIME_RULE} violated: 2 * {grid.dp:.6g} * {horizon:.6g} = {2 * grid.dp * horizon:.6g}"
            )
        for level, spec in ((GROUND, scenario.ground), (EXCITED, scenario.excited)):
            if spec.kind != "gaussian":
                continue
            need = abs(spec.center - grid.center) + 6.0 * spec.sigma + 1.0
            if grid.half_width < need:
                problems.append(
                    f"{GRID_RULE} violated for {level} packet: half_width {grid.half_width:.6g} < {need:.6g}"
                )
            if grid.dp > spec.sigma / 8.0:
                problems.append(
                    f"{GRID_RULE} violated for {level} packet: dp {grid.dp:.6g} > sigma/8 = {spec.sigma / 8:.6g}"
                )
    return problems


def _check_structure(scenario: Scenario) -> None:
    if not scenario.tau_max > 0:
        raise ScenarioError(f"tau_max must be positive, got {scenario.tau_max!r}")
    if scenario.n_samples < 2:
        raise ScenarioError(f"n_samples must be >= 2, got {scenario.n_samples}")
    if any(t < 0 for t in scenario.snapshot_taus):
        raise ScenarioError("snapshot_taus must be non-negative")
    if scenario.ground.kind == "absent" and scenario.excited.kind == "absent":
        raise ScenarioError("at least one of [ground] and [excited] must be populated")
    single = scenario.grid_points == 1
    for level, spec in ((GROUND, scenario.ground), (EXCITED, scenario.excited)):
        if spec.kind not in PACKET_KINDS:
            raise ScenarioError(f"[{level}] kind must be one of {PACKET_KINDS}, got {spec.kind!r}")
        if spec.kind == "definite" and not single:
            raise ScenarioError(f"[{level}] kind 'definite' needs a single-point grid (n_points = 1)")
        if single and spec.kind in ("gaussian", "tabulated"):
            raise ScenarioError(f"[{level}] a single-point grid only accepts kinds 'definite' or 'absent'")
        if spec.kind == "gaussian" and not spec.sigma > 0:
            raise ScenarioError(f"[{level}] sigma must be positive")
        if spec.kind == "tabulated" and not spec.path:
            raise ScenarioError(f"[{level}] kind 'tabulated' requires a path")


def check_scenario(scenario: Scenario) -> Scenario:
    """Raise :class:`ScenarioError` unless the scenario is runnable."""
    _check_structure(scenario)
    try:
        scenario.grid
    except ValueError as exc:
        raise ScenarioError(f"[grid] {exc}") from exc
    if not scenario.override_validity:
        problems = validity_violations(scenario)
        if problems:
            raise ScenarioError("; ".join(problems) + " (set override_validity to run anyway)")
    return scenario


# --------------------------------------------------------------------------
# parsing


def _line_of(text: str, section: str, key: str) -> int | None:
    current = None
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        m = re.match(r"\[(.+)\]", stripped)
        if m:
            current = m.group(1).strip()
        elif current == section and re.match(rf"{re.escape(key)}\s*[=:]", stripped):
            return number
    return None


class _Reader:
    def __init__(self, parser: configparser.ConfigParser, text: str, origin: str):
        self.parser = parser
        self.text = text
        self.origin = origin

    def fail(self, section, key, message):
        line = _line_of(self.text, section, key)
        where = f"{self.origin}:{line}" if line else self.origin
        raise ScenarioError(f"{where}: [{section}] {key}: {message}")

    def raw(self, section, key, default=None, required=False):
        if self.parser.has_option(section, key):
            return self.parser.get(section, key).strip()
        if required:
            raise ScenarioError(f"{self.origin}: missing required key [{section}] {key}")
        return default

    def number(self, section, key, default=None, required=False, kind=float):
        value = self.raw(section, key, None, required)
        if value is None:
            return default
        try:
            if kind is int:
                parsed = float(value)
                if parsed != int(parsed):
                    raise ValueError
                return int(parsed)
            return kind(value)
        except ValueError:
            self.fail(section, key, f"cannot parse {value!r} as {kind.__name__}")

    def flag(self, section, key, default=False):
        if not self.parser.has_option(section, key):
            return default
        try:
            return self.parser.getboolean(section, key)
        except ValueError:
            self.fail(section, key, "expected yes/no")

    def numbers(self, section, key):
        value = self.raw(section, key, "")
        if not value:
            return ()
        try:
            return tuple(float(v) for v in value.replace(",", " ").split())
        except ValueError:
            self.fail(section, key, f"cannot parse {value!r} as a list of numbers")


def _read_params(r: _Reader):
    has_params = r.parser.has_section("params")
    has_physical = r.parser.has_section("physical")
    if has_params == has_physical:
        raise ScenarioError(f"{r.origin}: give exactly one of [params] or [physical]")
    if has_params:
        try:
            return SimParams(
                rabi=r.number("params", "rabi", required=True),
                detuning=r.number("params", "detuning", 0.0),
            ), None
        except ValueError as exc:
            r.fail("params", "rabi", str(exc))
    mass = r.number("physical", "atomic_mass", required=True)
    rabi = r.number("physical", "rabi_frequency", required=True)
    wavelength = r.number("physical", "wavelength")
    wavenumber = r.number("physical", "wavenumber")
    transition = r.number("physical", "transition_frequency")
    field_freq = r.number("physical", "field_frequency")
    detuning = r.number("physical", "detuning")
    try:
        if wavelength is not None:
            physical = PhysicalParams.from_wavelength(mass, wavelength, rabi, detuning or 0.0)
        elif transition is not None and field_freq is not None:
            if wavenumber is None:
                physical = PhysicalParams.from_field(mass, transition, field_freq, rabi)
            else:
                physical = PhysicalParams(mass, wavenumber, transition, field_freq, rabi)
        else:
            raise ScenarioError(
                f"{r.origin}: [physical] needs wavelength, or transition_frequency and field_frequency"
            )
        return to_dimensionless(physical), physical
    except ValueError as exc:
        raise ScenarioError(f"{r.origin}: [physical] {exc}") from exc


def _read_packet(r: _Reader, section: str) -> PacketSpec:
    if not r.parser.has_section(section):
        return PacketSpec(kind="absent")
    kind = r.raw(section, "kind", "gaussian").lower()
    if kind not in PACKET_KINDS:
        r.fail(section, "kind", f"must be one of {', '.join(PACKET_KINDS)}")
    return PacketSpec(
        kind=kind,
        center=r.number(section, "center", 0.0),
        sigma=r.number(section, "sigma", 1.0),
        phase_slope=r.number(section, "phase_slope", 0.0),
        path=r.raw(section, "path"),
        weight=r.number(section, "weight", 1.0 + 0.0j, kind=complex),
    )


def parse_scenario(text: str, origin: str = "<scenario>", base_dir: Path | None = None,
                   override_validity: bool = False) -> Scenario:
    """Parse and validate scenario text.

    ``override_validity`` waives the grid and time rules regardless of the
    file's own setting; structural errors are always reported.
    """
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    try:
        parser.read_string(text, source=origin)
    except configparser.Error as exc:
        raise ScenarioError(f"{origin}: {exc}") from exc
    r = _Reader(parser, text, origin)
    params, physical = _read_params(r)
    if not parser.has_section("grid"):
        raise ScenarioError(f"{origin}: missing [grid] section")
    if not parser.has_section("schedule"):
        raise ScenarioError(f"{origin}: missing [schedule] section")
    n_points = r.number("grid", "n_points", required=True, kind=int)
    if n_points < 1:
        r.fail("grid", "n_points", f"must be >= 1, got {n_points}")
    scenario = Scenario(
        params=params,
        physical=physical,
        grid_center=r.number("grid", "center", 0.0),
        grid_half_width=r.number("grid", "half_width", required=True),
        grid_points=n_points,
        ground=_read_packet(r, "ground"),
        excited=_read_packet(r, "excited"),
        tau_max=r.number("schedule", "tau_max", required=True),
        n_samples=r.number("schedule", "n_samples", 500, kind=int),
        snapshot_taus=r.numbers("schedule", "snapshot_taus"),
        output_dir=r.raw("output", "directory", "."),
        prefix=r.raw("output", "prefix", "run"),
        override_validity=override_validity or r.flag("output", "override_validity", False),
        preset=r.raw("output", "preset"),
        base_dir=base_dir,
    )
    return check_scenario(scenario)


def load_scenario(path, override_validity: bool = False) -> Scenario:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario {path}: {exc}") from exc
    return parse_scenario(text, origin=str(path), base_dir=path.parent, override_validity=override_validity)


def _fmt(x) -> str:
    if isinstance(x, complex):
        return repr(x.real) if x.imag == 0 else repr(x).strip("()")
    return repr(float(x))


def scenario_to_ini(scenario: Scenario) -> str:
    """Serialize a scenario in the same format :func:`parse_scenario` reads."""
    out = io.StringIO()
    w = out.write
    if scenario.physical is not None:
        ph = scenario.physical
        w("[physical]\n")
        w(f"atomic_mass = {_fmt(ph.atomic_mass)}\n")
        w(f"wavenumber = {_fmt(ph.wavenumber)}\n")
        w(f"transition_frequency = {_fmt(ph.transition_frequency)}\n")
        w(f"field_frequency = {_fmt(ph.field_frequency)}\n")
        w(f"rabi_frequency = {_fmt(ph.rabi_frequency)}\n\n")
    else:
        w("[params]\n")
        w(f"rabi = {_fmt(scenario.params.rabi)}\n")
        w(f"detuning = {_fmt(scenario.params.detuning)}\n\n")
    w("[grid]\n")
    w(f"center = {_fmt(scenario.grid_center)}\n")
    w(f"half_width = {_fmt(scenario.grid_half_width)}\n")
    w(f"n_points = {scenario.grid_points}\n\n")
    for level, spec in ((GROUND, scenario.ground), (EXCITED, scenario.excited)):
        w(f"[{level}]\nkind = {spec.kind}\n")
        if spec.kind == "gaussian":
            w(f"center = {_fmt(spec.center)}\nsigma = {_fmt(spec.sigma)}\n")
            w(f"phase_slope = {_fmt(spec.phase_slope)}\n")
        elif spec.kind == "tabulated":
            w(f"path = {spec.path}\n")
        if spec.kind != "absent":
            w(f"weight = {_fmt(complex(spec.weight))}\n")
        w("\n")
    w("[schedule]\n")
    w(f"tau_max = {_fmt(scenario.tau_max)}\n")
    w(f"n_samples = {scenario.n_samples}\n")
    w("snapshot_taus = " + ", ".join(_fmt(t) for t in scenario.snapshot_taus) + "\n\n")
    w("[output]\n")
    w(f"directory = {scenario.output_dir}\n")
    w(f"prefix = {scenario.prefix}\n")
    w(f"override_validity = {'yes' if scenario.override_validity else 'no'}\n")
    if scenario.preset:
        w(f"preset = {scenario.preset}\n")
    return out.getvalue()


# --------------------------------------------------------------------------
# initial state


def _packet_amplitudes(scenario: Scenario, spec: PacketSpec, level: str, grid: MomentumGrid):
    if spec.kind == "absent":
        return None
    if spec.kind == "definite":
        return np.ones(1, dtype=complex)
    if spec.kind == "gaussian":
        return gaussian_amplitudes(grid, spec.center, spec.sigma, spec.phase_slope, level=level)
    path = Path(spec.path)
    if not path.is_absolute() and scenario.base_dir is not None:
        path = scenario.base_dir / path
    try:
        table = load_tabulated(path)
    except ValueError as exc:
        raise ScenarioError(f"[{level}] {exc}") from exc
    return tabulated_amplitudes(grid, table, level=level)


def initial_state(scenario: Scenario) -> TwoLevelState:
    grid = scenario.grid
    ground = _packet_amplitudes(scenario, scenario.ground, GROUND, grid)
    excited = _packet_amplitudes(scenario, scenario.excited, EXCITED, grid)
    try:
        return assemble_state(grid, ground, excited, scenario.ground.weight, scenario.excited.weight)
    except ValueError as exc:
        raise ScenarioError(f"initial state: {exc}") from exc


# --------------------------------------------------------------------------
# running


@dataclass
class RunResult:
    records: list[ObservableRecord]
    snapshot_states: list[TwoLevelState]
    max_norm_drift: float
    max_momentum_drift: float
    files: dict[str, Path] = field(default_factory=dict)


def validate_records(records) -> None:
    """Spot-check the invariants every record must satisfy."""
    for rec in records:
        bad = []
        if not (-1e-15 <= rec.n_g <= 1 + 1e-12 and -1e-15 <= rec.n_e <= 1 + 1e-12):
            bad.append("populations outside [0, 1]")
        if abs(rec.n_g + rec.n_e - 1.0) > 1e-10:
            bad.append(f"n_g + n_e = {rec.n_g + rec.n_e!r}")
        if rec.e_kin_total != rec.e_kin_g + rec.e_kin_e:
            bad.append("kinetic energy split does not add up")
        if (rec.p_norm_g is None) != (rec.n_g < observables.POPULATION_FLOOR):
            bad.append("p_norm_g definedness inconsistent with n_g")
        if bad:
            raise ConservationError(f"record at tau = {rec.tau!r}: " + "; ".join(bad))


def simulate(scenario: Scenario, workers: int = 1) -> RunResult:
    """Sample observables at ``scenario.sample_taus`` and take snapshots.

    Every sample is evolved directly from the initial state, which is exact
    for the closed-form propagator and avoids accumulating rounding.
    """
    state0 = initial_state(scenario)
    records = []
    worst_norm = worst_mom = 0.0
    for tau in scenario.sample_taus:
        state = evolve(state0, float(tau), scenario.params, workers=workers)
        norm_drift, mom_drift = conservation_residuals(state, state0)
        worst_norm = max(worst_norm, norm_drift)
        worst_mom = max(worst_mom, mom_drift)
        if norm_drift > RUN_RESIDUAL_LIMIT or mom_drift > RUN_RESIDUAL_LIMIT:
            raise ConservationError(
                f"conservation residual exceeded {RUN_RESIDUAL_LIMIT:g} at tau = {tau!r}: "
                f"norm drift {norm_drift:.3g}, momentum drift {mom_drift:.3g}"
            )
        records.append(record(state))
    validate_records(records)
    snapshots = [evolve(state0, float(tau), scenario.params, workers=workers) for tau in scenario.snapshot_taus]
    return RunResult(records, snapshots, worst_norm, worst_mom)


def _cell(value) -> str:
    return "" if value is None else repr(float(value))


def series_csv(records) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow([_cell(getattr(rec, name)) for name in CSV_COLUMNS])
    return out.getvalue()


def snapshot_text(snapshot, amplitudes) -> str:
    """Three columns ``p Re Im`` on the level's physical momentum axis.

    The density is ``Re**2 + Im**2``; the format is the one accepted by
    ``kind = tabulated``.
    """
    out = io.StringIO()
    out.write(f"# level = {snapshot.level}\n# tau = {snapshot.tau!r}\n# p re im\n")
    for p, amp in zip(snapshot.momenta, amplitudes):
        out.write(f"{float(p)!r} {float(amp.real)!r} {float(amp.imag)!r}\n")
    return out.getvalue()


def run_scenario(scenario: Scenario, out_dir=None, workers: int = 1) -> RunResult:
    """Simulate and write the series CSV, snapshot tables and a JSON summary."""
    result = simulate(scenario, workers=workers)
    directory = Path(out_dir if out_dir is not None else scenario.output_dir)
    if not directory.is_absolute() and out_dir is None and scenario.base_dir is not None:
        directory = scenario.base_dir / directory
    directory.mkdir(parents=True, exist_ok=True)
    prefix = scenario.prefix

    series = directory / f"{prefix}_series.csv"
    series.write_text(series_csv(result.records))
    result.files["series"] = series

    for k, state in enumerate(result.snapshot_states):
        for level, amps in ((GROUND, state.a), (EXCITED, state.b)):
            path = directory / f"{prefix}_snapshot_{k:03d}_{level}.txt"
            path.write_text(snapshot_text(distribution(state, level), amps))
            result.files[f"snapshot_{k:03d}_{level}"] = path

    summary = {
        "preset": scenario.preset,
        "preset_description": PRESET_DESCRIPTIONS.get(scenario.preset),
        "params": {"rabi": scenario.params.rabi, "detuning": scenario.params.detuning},
        "grid": {
            "center": scenario.grid_center,
            "half_width": scenario.grid_half_width,
            "n_points": scenario.grid_points,
        },
        "tau_max": scenario.tau_max,
        "n_samples": scenario.n_samples,
        "final": result.records[-1].as_dict(),
        "residuals": {
            "max_norm_drift": result.max_norm_drift,
            "max_momentum_drift": result.max_momentum_drift,
        },
        "files": {k: p.name for k, p in result.files.items()},
    }
    path = directory / f"{prefix}_summary.json"
    path.write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    result.files["summary"] = path
    return result


@dataclass
class VerifyReport:
    max_oracle_error: float
    max_norm_drift: float
    max_momentum_drift: float
    checkpoints: tuple[float, ...]

    @property
    def passed(self) -> bool:
        return (
            self.max_oracle_error <= ORACLE_LIMIT
            and self.max_norm_drift <= NORM_LIMIT
            and self.max_momentum_drift <= MOMENTUM_LIMIT
        )

    def lines(self) -> list[str]:
        def mark(ok):
            return "ok" if ok else "FAIL"

        return [
            f"closed form vs RK4 oracle: max |error| = {self.max_oracle_error:.3e} "
            f"(limit {ORACLE_LIMIT:g}) {mark(self.max_oracle_error <= ORACLE_LIMIT)}",
            f"norm drift:                {self.max_norm_drift:.3e} "
            f"(limit {NORM_LIMIT:g}) {mark(self.max_norm_drift <= NORM_LIMIT)}",
            f"family momentum drift:     {self.max_momentum_drift:.3e} "
            f"(limit {MOMENTUM_LIMIT:g}) {mark(self.max_momentum_drift <= MOMENTUM_LIMIT)}",
        ]


def verify_scenario(scenario: Scenario, settings: OdeSettings | None = None, n_checkpoints: int = 4) -> VerifyReport:
    """Check the closed-form evolution against the RK4 oracle and conservation laws.

    Raises :class:`~rabipackets.errors.AccuracyError` when the oracle itself
    is too coarse to be trusted.
    """
    settings = settings or OdeSettings(tolerance=1e-9)
    state0 = initial_state(scenario)
    checkpoints = tuple(float(t) for t in np.linspace(0.0, scenario.tau_max, n_checkpoints + 1)[1:])
    error = compare_propagators(state0, checkpoints, scenario.params, settings)
    worst_norm = worst_mom = 0.0
    for tau in scenario.sample_taus:
        state = evolve(state0, float(tau), scenario.params)
        n, m = conservation_residuals(state, state0)
        worst_norm = max(worst_norm, n)
        worst_mom = max(worst_mom, m)
    return VerifyReport(error, worst_norm, worst_mom, checkpoints)


# --------------------------------------------------------------------------
# presets
#
# One-level wave-packet cases use rabi = 6: comparable to the Doppler spread
# of a sigma = 2 packet, so flopping is visible for many periods and then
# washes out within tau_max = 30. Two-level cases detune both packets
# (rabi = 8, detuning = -8) so the stationary point of beta(p) falls
# between them and the normalized momenta settle within the run.


def _one_level(name, tau_max=30.0, snapshots=None):
    return Scenario(
        params=SimParams(rabi=6.0, detuning=0.0),
        grid_center=0.0,
        grid_half_width=16.0,
        grid_points=4096,
        ground=PacketSpec("gaussian", center=0.0, sigma=2.0),
        excited=PacketSpec("absent"),
        tau_max=tau_max,
        n_samples=500,
        snapshot_taus=tuple(snapshots if snapshots is not None else (0.0, tau_max)),
        prefix=name,
        preset=name,
    )


def _definite(name):
    tau_max = 24.0 * math.pi / 20.0
    return Scenario(
        params=SimParams(rabi=20.0, detuning=0.0),
        grid_center=0.0,
        grid_half_width=0.0,
        grid_points=1,
        ground=PacketSpec("definite"),
        excited=PacketSpec("absent"),
        tau_max=tau_max,
        n_samples=500,
        snapshot_taus=(),
        prefix=name,
        preset=name,
    )


def _two_level(name):
    return Scenario(
        params=SimParams(rabi=8.0, detuning=-8.0),
        grid_center=5.0,
        grid_half_width=20.0,
        grid_points=4096,
        ground=PacketSpec("gaussian", center=0.0, sigma=2.0, weight=1.0),
        excited=PacketSpec("gaussian", center=10.0, sigma=2.0, weight=1.0),
        tau_max=30.0,
        n_samples=500,
        snapshot_taus=(0.0, 30.0),
        prefix=name,
        preset=name,
    )


def rabi_periods_at(params: SimParams, p: float, count: float) -> float:
    """Time for ``count`` full Rabi periods of the family at momentum ``p``."""
    beta = float(generalized_rabi(generalized_detuning(p, params), params))
    return 2.0 * math.pi * count / beta


def _fig1():
    params = SimParams(rabi=6.0, detuning=0.0)
    four, twelve = rabi_periods_at(params, 0.0, 4), rabi_periods_at(params, 0.0, 12)
    return _one_level("fig1", tau_max=twelve, snapshots=(0.0, four, twelve))


PRESET_DESCRIPTIONS = {
    "fig1": "ground-level momentum distribution initially, after 4 and after 12 Rabi floppings",
    "fig2": "level populations for the one-level wave-packet case (damped flopping)",
    "fig5": "one-state case with definite momentum (constant normalized momenta)",
    "fig6": "one-state wave-packet case (normalized momenta within one photon momentum)",
    "fig7": "general superpositional case (CAMEL)",
    "fig8": "kinetic energies for the one-level state with definite momentum",
    "fig9": "kinetic energies for the one-state wave-packet case",
    "fig10": "kinetic energies for the general superpositional case",
}

PRESETS = {
    "fig1": _fig1,
    "fig2": lambda: _one_level("fig2"),
    "fig5": lambda: _definite("fig5"),
    "fig6": lambda: _one_level("fig6"),
    "fig7": lambda: _two_level("fig7"),
    "fig8": lambda: _definite("fig8"),
    "fig9": lambda: _one_level("fig9"),
    "fig10": lambda: _two_level("fig10"),
}


def list_presets() -> list[str]:
    return [f"{name}: {PRESET_DESCRIPTIONS[name]}" for name in PRESETS]


def preset(name: str) -> Scenario:
    try:
        factory = PRESETS[name]
    except KeyError:
        raise ScenarioError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None
    return check_scenario(factory())


def with_output(scenario: Scenario, directory=None, prefix=None) -> Scenario:
    changes = {}
    if directory is not None:
        changes["output_dir"] = str(directory)
    if prefix is not None:
        changes["prefix"] = prefix
    return replace(scenario, **changes)
