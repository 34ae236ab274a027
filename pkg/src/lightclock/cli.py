"""Command-line surface: scenario configuration, batch evaluation, and
table/plot-data emission.

Parameters come from flags or from a JSON config file (flags win).  Physical
quantities in config files carry explicit unit tags; a mismatch is a config
error (exit 2).  Domain errors from the core exit 1.  Output is JSON for
single results and CSV for sweeps, both byte-deterministic.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Any, Sequence

from . import (
    GravCompareInput,
    LambdaFactor,
    MetricPoint,
    PropagationScenario,
    alterations,
    clocks,
    line_elements,
    medium,
    radar,
    transition,
    velocity_space,
)

DEFAULT_C = 299792458.0
DEFAULT_TRANSITION_K = 1e-3


def _tolerance() -> float:
    return float(os.environ.get("LIGHTCLOCK_TOL", "1e-12"))


class ConfigError(Exception):
    pass


# expected unit tag per config field; None means dimensionless (plain number)
_EXPECTED_UNITS: dict[str, str | None] = {
    "t1": "s", "t2": "s", "t3": "s", "t": "s",
    "dt": "s", "dt_emit": "s", "tau_s": "s", "a": "s",
    "c": "m/s", "v": "m/s", "v1": "m/s", "v2": "m/s", "v3": "m/s",
    "d": "m/s", "u": "m/s",
    "omega": "m/s", "omega1": "m/s", "omega2": "m/s", "omega3": "m/s",
    "x": "m", "y": "m", "z": "m",
    "dx": "m", "dy": "m", "dz": "m", "dr": "m", "dR": "m",
    "r0": "m", "r": "m", "R": "m", "R1": "m", "R2": "m", "rp": "m", "L": "m",
    "theta": "rad", "dtheta": "rad", "dphi": "rad",
    "nu_s": "Hz", "nu_r": "Hz",
    "mass": "kg", "mass_s": "kg",
    "rho": "kg/m^3",
    "G": "m^3/(kg s^2)",
    "rate": "1/s",
    # dimensionless
    "gamma": None, "g1_p": None, "g1_r": None,
    "rs_over_rp": None, "rr_over_rp": None,
    "k": None, "lam": None, "x_min": None, "x_max": None,
    "lambda_min": None, "lambda_max": None,
    "n": None, "n_pulses": None, "exponent": None,
    "count_a": None, "count_b": None,
}

_LAMBDA_FIELDS = ("Lambda", "Lambda1")


def _load_config(path: str | None) -> dict[str, Any]:
    """Read a config file, validating unit tags and stripping them."""
    if path is None:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"config {path} must be a JSON object")

    resolved: dict[str, Any] = {}
    for name, entry in raw.items():
        if name in _LAMBDA_FIELDS:
            if not (isinstance(entry, dict) and "value" in entry and "unit" in entry):
                raise ConfigError(
                    f"config field {name!r} needs an explicit unit tag "
                    '({"value": ..., "unit": "s^-2"|"m^-2"|"cm^-2"})'
                )
            if entry["unit"] not in line_elements.LAMBDA_UNITS:
                raise ConfigError(
                    f"config field {name!r}: unit {entry['unit']!r} is not one of "
                    f"{line_elements.LAMBDA_UNITS}"
                )
            resolved[name] = float(entry["value"])
            resolved["lambda_unit"] = entry["unit"]
            continue
        expected = _EXPECTED_UNITS.get(name)
        if expected is None:
            if isinstance(entry, dict):
                unit = entry.get("unit")
                if unit not in (None, "dimensionless", "1"):
                    raise ConfigError(
                        f"config field {name!r} is dimensionless, got unit {unit!r}"
                    )
                entry = entry["value"]
            resolved[name] = entry
        else:
            if not (isinstance(entry, dict) and "value" in entry and "unit" in entry):
                raise ConfigError(
                    f"config field {name!r} must carry a unit tag "
                    f'({{"value": ..., "unit": "{expected}"}})'
                )
            if entry["unit"] != expected:
                raise ConfigError(
                    f"config field {name!r}: expected unit {expected!r}, "
                    f"got {entry['unit']!r}"
                )
            resolved[name] = float(entry["value"])
    return resolved


class Params:
    """Flag/config merge: flags win, then config, then defaults."""

    def __init__(self, args: argparse.Namespace):
        self.args = vars(args)
        self.config = _load_config(self.args.get("config"))

    def get(self, name: str, default: Any = None, required: bool = False) -> Any:
        value = self.args.get(name)
        if value is None:
            value = self.config.get(name)
        if value is None:
            value = default
        if value is None and required:
            raise ConfigError(f"missing required parameter {name!r}")
        return value

    def light_speed(self) -> float:
        c = self.args.get("c")
        if c is not None:
            return c
        if self.args.get("natural_units"):
            return 1.0
        c = self.config.get("c")
        return DEFAULT_C if c is None else c


def _format_value(x: Any) -> str:
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, (bool, int, str)):
        return str(x)
    try:
        return repr(float(x))  # numpy scalars and friends
    except (TypeError, ValueError):
        return str(x)


def _write_text(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def emit_json(obj: dict[str, Any], out: str | None) -> None:
    _write_text(json.dumps(obj, sort_keys=True, indent=2) + "\n", out)


def emit_plot_data(
    header: Sequence[str], rows: Sequence[Sequence[Any]], out: str | None
) -> None:
    """CSV with a header naming columns and units, LF endings, and floats
    printed at full round-trip precision."""
    if not rows:
        raise ValueError("refusing to emit an empty series")
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_format_value(x) for x in row))
    _write_text("\n".join(lines) + "\n", out)


def _parse_sweep(text: str) -> list[float]:
    try:
        start_s, stop_s, count_s = text.split(":")
        start, stop, count = float(start_s), float(stop_s), int(count_s)
    except ValueError as exc:
        raise ConfigError(f"sweep must look like start:stop:count, got {text!r}") from exc
    if count < 2:
        raise ConfigError("sweep count must be at least 2")
    step = (stop - start) / (count - 1)
    return [start + i * step for i in range(count)]


# ---------------------------------------------------------------------------
# command handlers


def _cmd_radar(p: Params) -> int:
    c = p.light_speed()
    rec = radar.RadarRecord(
        t1=p.get("t1", required=True),
        t2=p.get("t2", required=True),
        t3=p.get("t3", required=True),
    )
    m = radar.einstein_measures(rec, c)
    result = {
        "t_E": m.t_E,
        "r_E": m.r_E,
        "v_E": m.v_E,
        "K": m.K,
        "t2_pred": m.t2_pred,
        "degenerate": m.degenerate,
        "geometric_mean_ok": radar.check_geometric_mean(rec, _tolerance()),
        "omega": radar.rapidity_from_vE(m.v_E, c).omega,
    }
    emit_json(result, p.get("out"))
    return 0


def _cmd_compose(p: Params) -> int:
    c = p.light_speed()
    v3 = velocity_space.compose_einstein(
        p.get("v1", required=True), p.get("v2", required=True), c
    )
    emit_json({"v3": v3}, p.get("out"))
    return 0


def _cmd_lorentz(p: Params) -> int:
    c = p.light_speed()
    event = velocity_space.Event4(
        t=p.get("t", required=True),
        x=p.get("x", required=True),
        y=p.get("y", 0.0),
        z=p.get("z", 0.0),
    )
    moved = velocity_space.lorentz_transform(event, p.get("v3", required=True), c)
    emit_json(
        {
            "t": moved.t,
            "x": moved.x,
            "y": moved.y,
            "z": moved.z,
            "interval_before": velocity_space.interval(event, c),
            "interval_after": velocity_space.interval(moved, c),
        },
        p.get("out"),
    )
    return 0


def _cmd_triangle(p: Params) -> int:
    c = p.light_speed()
    tri = velocity_space.solve_triangle(
        p.get("omega1", required=True),
        p.get("omega2", required=True),
        p.get("omega3", required=True),
        c,
    )
    ein = velocity_space.triangle_to_einstein(tri)
    emit_json(
        {
            "theta": tri.theta,
            "phi": tri.phi,
            "p1": tri.p1,
            "p2": tri.p2,
            "n": tri.n,
            "v1": ein.v1,
            "v2": ein.v2,
            "v3": ein.v3,
            "residual_projection": ein.residual_projection,
            "residual_beta": ein.residual_beta,
            "residual_normal": ein.residual_normal,
        },
        p.get("out"),
    )
    return 0


def _source(p: Params, force_massless: bool = False) -> line_elements.GravitySource:
    c = p.light_speed()
    G = p.get("G", 6.6743e-11)
    Lambda = p.get("Lambda", 0.0)
    lambda_unit = p.get("lambda_unit", "s^-2")
    if force_massless:
        return line_elements.GravitySource(
            mass_M=0.0, G=G, c=c, Lambda=Lambda, lambda_unit=lambda_unit
        )
    r0 = p.get("r0")
    mass = p.get("mass")
    if r0 is None and mass is None:
        raise ConfigError("need either r0 or mass")
    if r0 is not None:
        return line_elements.source_from_r0(
            r0, c=c, G=G, Lambda=Lambda, lambda_unit=lambda_unit
        )
    return line_elements.GravitySource(
        mass_M=mass, G=G, c=c, Lambda=Lambda, lambda_unit=lambda_unit
    )


def _metric_point(p: Params) -> MetricPoint:
    return MetricPoint(
        R=p.get("R", 0.0),
        theta=p.get("theta", math.pi / 2.0),
        dt=p.get("dt", 0.0),
        dR=p.get("dR", 0.0),
        dtheta=p.get("dtheta", 0.0),
        dphi=p.get("dphi", 0.0),
    )


def _cmd_metric(p: Params) -> int:
    c = p.light_speed()
    form = p.get("form")
    out = p.get("out")

    if form == "minkowski":
        ds2 = line_elements.minkowski_interval(
            p.get("dt", 0.0), p.get("dx", 0.0), p.get("dy", 0.0), p.get("dz", 0.0), c
        )
        emit_json({"ds2": ds2}, out)
        return 0

    if form == "linear":
        lam = LambdaFactor(
            v=p.get("v", required=True),
            d=p.get("d", 0.0),
            c=c,
            mode=p.get("mode", "real"),
        )
        ds2 = line_elements.linear_interval(lam, p.get("dt", 0.0), p.get("dr", 0.0), c)
        emit_json({"lambda": lam.value(), "ds2": ds2}, out)
        return 0

    if form == "rw":
        ds2 = line_elements.robertson_walker_interval(
            p.get("a", required=True), _metric_point(p), c
        )
        emit_json({"ds2": ds2}, out)
        return 0

    if form == "approx":
        src = _source(p)
        ds2 = line_elements.newtonian_first_approx(
            src, p.get("r", required=True), p.get("dt", 0.0), p.get("dr", 0.0), c
        )
        emit_json({"ds2": ds2, "field_strength": src.schwarzschild_r0 / p.get("r")}, out)
        return 0

    # Schwarzschild family: schwarzschild | modified | desitter
    src = _source(p, force_massless=(form == "desitter"))
    if form == "schwarzschild":
        lam_of = lambda R: line_elements.schwarzschild_lambda(src, R)
    else:
        lam_of = lambda R: line_elements.modified_schwarzschild_lambda(src, R)

    sweep = p.get("sweep_R")
    if sweep is not None:
        rows = []
        for R in _parse_sweep(sweep):
            lam = lam_of(R)
            gamma = math.sqrt(lam) if lam > 0 else float("nan")
            rows.append((R, lam, line_elements.null_radial_speed(lam, c), gamma))
        emit_plot_data(
            ("R_m", "lambda_dimensionless", "null_speed_m_per_s", "gamma_dimensionless"),
            rows,
            out,
        )
        return 0

    R = p.get("R")
    if R is None:
        raise ConfigError("need either R or sweep_R")
    lam = lam_of(R)
    result = {
        "R": R,
        "lambda": lam,
        "null_speed": line_elements.null_radial_speed(lam, c),
        "gamma": math.sqrt(lam) if lam > 0 else None,
    }
    point = _metric_point(p)
    if point.dt or point.dR or point.dtheta or point.dphi:
        result["ds2"] = line_elements.radial_interval_value(lam, point, c)
    emit_json(result, out)
    return 0


def _cmd_radar_distance(p: Params) -> int:
    c = p.light_speed()
    src = _source(p)
    delta_t = line_elements.radar_coordinate_time(
        src, p.get("R1", required=True), p.get("R2", required=True), c
    )
    emit_json({"delta_t": delta_t, "c_delta_t": c * delta_t}, p.get("out"))
    return 0


def _cmd_horizon(p: Params) -> int:
    src = _source(p)
    emit_json({"roots": line_elements.horizon_roots(src)}, p.get("out"))
    return 0


def _alter_gamma(p: Params, c: float) -> float:
    gamma = p.get("gamma")
    if gamma is None:
        v = p.get("v")
        if v is None:
            raise ConfigError("need either gamma or v")
        gamma = alterations.gamma_special(v, c)
    return gamma


def _cmd_alter(p: Params) -> int:
    c = p.light_speed()
    effect = p.get("effect")
    out = p.get("out")
    if effect == "doppler":
        gamma = _alter_gamma(p, c)
        nu_m = alterations.transverse_doppler(p.get("nu_s", required=True), gamma)
        emit_json({"gamma": gamma, "nu_m": nu_m}, out)
    elif effect == "total-doppler":
        nu_s = p.get("nu_s", required=True)
        received = alterations.total_doppler(nu_s, p.get("v", required=True), c)
        emit_json({"nu_received": received, "ratio": received / nu_s}, out)
    elif effect == "decay":
        gamma = _alter_gamma(p, c)
        tau_m = alterations.decay_lifetime(p.get("tau_s", required=True), gamma)
        emit_json({"gamma": gamma, "tau_m": tau_m}, out)
    elif effect == "mass":
        gamma = _alter_gamma(p, c)
        mass_m = alterations.mass_alteration(p.get("mass_s", required=True), gamma)
        emit_json({"gamma": gamma, "mass_m": mass_m}, out)
    else:  # pragma: no cover - argparse restricts choices
        raise ConfigError(f"unknown alteration {effect!r}")
    return 0


def _cmd_dilation(p: Params) -> int:
    c = p.light_speed()
    rs_over_rp = p.get("rs_over_rp", required=True)
    rr_over_rp = p.get("rr_over_rp", required=True)
    Lambda = p.get("Lambda", 0.0)
    Lambda1 = p.get("Lambda1")
    rp = p.get("rp")
    if (Lambda or Lambda1) and rp is None:
        raise ConfigError("rp is required when a cosmological constant is supplied")
    if rp is None:
        rp = 1.0
    inp = GravCompareInput(
        r_s=rs_over_rp * rp,
        r_P=rp,
        r_R=rr_over_rp * rp,
        Lambda=Lambda,
        Lambda1=Lambda1,
        lambda_unit=p.get("lambda_unit", "s^-2"),
        c=c,
    )
    emit_json({"ratio": alterations.gravitational_clock_compare(inp)}, p.get("out"))
    return 0


def _cmd_compare_frequency(p: Params) -> int:
    nu_p = alterations.frequency_compare(
        p.get("g1_p", required=True),
        p.get("g1_r", required=True),
        p.get("nu_r", required=True),
    )
    emit_json({"nu_p": nu_p}, p.get("out"))
    return 0


def _cmd_transition(p: Params) -> int:
    c = p.light_speed()
    mode = p.get("mode")
    out = p.get("out")
    k = p.get("k", DEFAULT_TRANSITION_K)
    if mode == "H":
        x_min = p.get("x_min", -5.0 * k)
        x_max = p.get("x_max", 5.0 * k)
        n = int(p.get("n", 101))
        grid = sorted(set(_parse_sweep(f"{x_min}:{x_max}:{n}") + [0.0, 2.0 * k]))
        grid = [x for x in grid if x_min <= x <= x_max]
        rows = [
            (
                x,
                transition.transition_profile(x, k),
                transition.transition_profile_prime(x, k),
            )
            for x in grid
        ]
        emit_plot_data(
            ("x_dimensionless", "H_dimensionless", "H_prime_dimensionless"), rows, out
        )
        return 0
    if mode == "interval":
        result = transition.partial_interval(
            p.get("lam", required=True), k, p.get("dt", 0.0), p.get("dR", 0.0), c
        )
        emit_json({"value": result.value, "branch": result.branch}, out)
        return 0
    if mode == "photons":
        lam = p.get("lam")
        if lam is not None:
            plus, minus = transition.photon_families(lam, k, c)
            emit_json({"lambda": lam, "speed_plus": plus, "speed_minus": minus}, out)
            return 0
        lam_min = p.get("lambda_min", 1e-3 * k)
        lam_max = p.get("lambda_max", 2.0 * k)
        n = int(p.get("n", 101))
        rows = []
        for lam_val in _parse_sweep(f"{lam_min}:{lam_max}:{n}"):
            plus, minus = transition.photon_families(lam_val, k, c)
            rows.append((lam_val, plus, minus))
        emit_plot_data(
            ("lambda_dimensionless", "speed_plus_m_per_s", "speed_minus_m_per_s"),
            rows,
            out,
        )
        return 0
    raise ConfigError(f"unknown transition mode {mode!r}")  # pragma: no cover


def _cmd_sim(p: Params) -> int:
    c = p.light_speed()
    mode = p.get("mode")
    out = p.get("out")
    if mode == "roundtrip":
        t1 = p.get("t1", required=True)
        scenario = PropagationScenario(
            velocity_profile=lambda _t: c, t1=t1, a=t1, b=10.0 * t1 + 1.0, c=c
        )
        rec = medium.roundtrip(scenario, p.get("omega", required=True), t1)
        emit_json(
            {
                "t1": rec.t1,
                "t2": rec.t2,
                "t3": rec.t3,
                "geometric_mean_ok": radar.check_geometric_mean(rec, _tolerance()),
            },
            out,
        )
        return 0
    if mode == "counts":
        spec = clocks.LightClockSpec(
            round_trip_length_L=p.get("L", required=True), light_speed_c=c
        )
        rows = [
            (i + 1, row.tau1, row.tau2, row.tau3, row.t1, row.t2, row.t3)
            for i, row in enumerate(
                medium.count_trace(
                    spec,
                    p.get("omega", required=True),
                    p.get("t1", required=True),
                    int(p.get("n_pulses", 3)),
                )
            )
        ]
        emit_plot_data(
            (
                "pulse_index",
                "tau1_ticks",
                "tau2_ticks",
                "tau3_ticks",
                "t1_s",
                "t2_s",
                "t3_s",
            ),
            rows,
            out,
        )
        return 0
    if mode == "equilinear":
        t1 = p.get("t1", required=True)
        t2 = p.get("t2", required=True)
        t3 = p.get("t3", required=True)
        scenario = PropagationScenario(
            velocity_profile=lambda _t: c, t1=t1, a=t1, b=t3, c=c
        )
        res = medium.equilinear_check(scenario, t1, t2, t3)
        emit_json(
            {"w1": res.w1, "w2": res.w2, "w3": res.w3, "residual": res.residual}, out
        )
        return 0
    if mode == "offset":
        separation, classical = medium.parallel_photon_offset(
            p.get("u", required=True),
            p.get("omega", required=True),
            c,
            p.get("dt_emit", required=True),
        )
        emit_json(
            {
                "separation": separation,
                "classical": classical,
                "ratio": separation / classical,
            },
            out,
        )
        return 0
    raise ConfigError(f"unknown sim mode {mode!r}")  # pragma: no cover


def _cmd_hubble(p: Params) -> int:
    model = p.get("model", required=True)
    t = p.get("t", required=True)
    if model == "linear":
        rate = p.get("rate", 1.0)
        scale = lambda tt: rate * tt
    elif model == "exponential":
        rate = p.get("rate", required=True)
        scale = lambda tt: (tt * rate).exp() if hasattr(tt * rate, "exp") else math.exp(rate * tt)
    elif model == "powerlaw":
        exponent = p.get("exponent", required=True)
        scale = lambda tt: tt**exponent
    else:  # pragma: no cover - argparse restricts choices
        raise ConfigError(f"unknown model {model!r}")
    rates = line_elements.hubble_deceleration(
        scale, t, rho=p.get("rho"), G=p.get("G", 6.6743e-11)
    )
    result: dict[str, Any] = {"H": rates.H, "q": rates.q}
    if rates.friedmann_residual is not None:
        result["friedmann_residual"] = rates.friedmann_residual
    emit_json(result, p.get("out"))
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--config", help="JSON config file; flags override it")
    sp.add_argument("--out", help="output path (default stdout)")
    sp.add_argument("--c", type=float, default=None, help="light speed in m/s")
    sp.add_argument(
        "--natural-units", action="store_true", help="set c = 1 unless --c is given"
    )
    sp.add_argument("--emit", choices=("json", "csv"), default=None, help=argparse.SUPPRESS)


def _float_arg(sp: argparse.ArgumentParser, *names: str) -> None:
    for name in names:
        sp.add_argument(f"--{name.replace('_', '-')}", dest=name, type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lightclock",
        description="Deterministic light-clock kinematics engine",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("radar", help="Einstein measures of a radar record")
    _add_common(sp)
    _float_arg(sp, "t1", "t2", "t3")
    sp.set_defaults(func=_cmd_radar)

    sp = sub.add_parser("compose", help="Einstein velocity composition")
    _add_common(sp)
    _float_arg(sp, "v1", "v2")
    sp.set_defaults(func=_cmd_compose)

    sp = sub.add_parser("lorentz", help="x-aligned boost of an event")
    _add_common(sp)
    _float_arg(sp, "t", "x", "y", "z", "v3")
    sp.set_defaults(func=_cmd_lorentz)

    sp = sub.add_parser("triangle", help="solve a hyperbolic velocity triangle")
    _add_common(sp)
    _float_arg(sp, "omega1", "omega2", "omega3")
    sp.set_defaults(func=_cmd_triangle)

    sp = sub.add_parser("metric", help="evaluate a line element")
    sp.add_argument(
        "form",
        choices=("minkowski", "linear", "schwarzschild", "modified", "desitter", "rw", "approx"),
    )
    _add_common(sp)
    _float_arg(
        sp, "dt", "dx", "dy", "dz", "dr", "dR", "dtheta", "dphi", "theta",
        "v", "d", "a", "R", "r", "r0", "mass", "G", "Lambda",
    )
    sp.add_argument("--mode", choices=("real", "complex"), default=None)
    sp.add_argument("--lambda-unit", dest="lambda_unit",
                    choices=line_elements.LAMBDA_UNITS, default=None)
    sp.add_argument("--sweep-R", dest="sweep_R", default=None,
                    help="radial sweep start:stop:count emitting CSV")
    sp.set_defaults(func=_cmd_metric)

    sp = sub.add_parser("radar-distance", help="radial pulse coordinate flight time")
    _add_common(sp)
    _float_arg(sp, "r0", "mass", "G", "R1", "R2")
    sp.set_defaults(func=_cmd_radar_distance)

    sp = sub.add_parser("horizon", help="horizon radii of the modified factor")
    _add_common(sp)
    _float_arg(sp, "r0", "mass", "G", "Lambda")
    sp.add_argument("--lambda-unit", dest="lambda_unit",
                    choices=line_elements.LAMBDA_UNITS, default=None)
    sp.set_defaults(func=_cmd_horizon)

    sp = sub.add_parser("alter", help="physical alteration ratios")
    sp.add_argument("effect", choices=("doppler", "total-doppler", "decay", "mass"))
    _add_common(sp)
    _float_arg(sp, "nu_s", "tau_s", "mass_s", "v", "gamma")
    sp.set_defaults(func=_cmd_alter)

    sp = sub.add_parser("dilation", help="gravitational clock-rate comparison")
    _add_common(sp)
    _float_arg(sp, "rs_over_rp", "rr_over_rp", "rp", "Lambda", "Lambda1")
    sp.add_argument("--lambda-unit", dest="lambda_unit",
                    choices=line_elements.LAMBDA_UNITS, default=None)
    sp.set_defaults(func=_cmd_dilation)

    sp = sub.add_parser("compare-frequency", help="two-position frequency comparison")
    _add_common(sp)
    _float_arg(sp, "g1_p", "g1_r", "nu_r")
    sp.set_defaults(func=_cmd_compare_frequency)

    sp = sub.add_parser("transition", help="transition-zone machinery")
    sp.add_argument("mode", choices=("H", "interval", "photons"))
    _add_common(sp)
    _float_arg(sp, "k", "lam", "x_min", "x_max", "lambda_min", "lambda_max", "dt", "dR")
    sp.add_argument("--n", type=int, default=None)
    sp.set_defaults(func=_cmd_transition)

    sp = sub.add_parser("sim", help="medium-propagation simulator")
    sp.add_argument("mode", choices=("roundtrip", "counts", "equilinear", "offset"))
    _add_common(sp)
    _float_arg(sp, "omega", "t1", "t2", "t3", "L", "u", "dt_emit")
    sp.add_argument("--n-pulses", dest="n_pulses", type=int, default=None)
    sp.set_defaults(func=_cmd_sim)

    sp = sub.add_parser("hubble", help="expansion rate and deceleration parameter")
    _add_common(sp)
    sp.add_argument("--model", choices=("linear", "exponential", "powerlaw"), default=None)
    _float_arg(sp, "t", "rate", "exponent", "rho", "G")
    sp.set_defaults(func=_cmd_hubble)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        params = Params(args)
        return args.func(params)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
