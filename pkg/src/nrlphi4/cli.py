"""Command-line front end.

    nrlphi4 <subcommand> [--config FILE] [--out PATH] [--format csv|json] [--<key> VALUE ...]

Config files hold ``key = value`` lines; ``#`` starts a comment. Flags
override file values, which override the defaults in ``KEYS``.

Exit codes: 0 success, 2 config error, 3 solver error, 4 I/O error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field

import numpy as np

from . import cutoffmodel as cm
from .compare import regularization_table
from .errors import ConfigError, ContractError, NRLError
from .fewbody import LatticeGeometry, fermi_momentum, stability_scan, tg_excitation
from .params import bare_coupling, running_bare_mass
from .passivity import contraction_report

COMMANDS = ("scatter", "bound", "regcompare", "edscan", "passivity")


def _bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _choice(*options):
    def parse(text):
        if text not in options:
            raise ValueError(f"expected one of {options}, got {text!r}")
        return text
    return parse


def _positive(parse):
    def inner(text):
        v = parse(text)
        if not v > 0:
            raise ValueError(f"must be positive, got {text!r}")
        return v
    return inner


pos_float = _positive(float)
pos_int = _positive(int)

# key: (parser, default, help)
KEYS = {
    "seed": (int, 0, "eigensolver start-vector seed"),
    # physical constants
    "m_sq": (pos_float, 1.0, "renormalized mass squared"),
    "lambda0": (pos_float, math.pi / 3.0, "bare quartic coupling (default: log-compensating value pi*c_log/3 at c_log=1)"),
    "c_log": (pos_float, 1.0, "mass counterterm slope"),
    "kappa_ref": (pos_float, 1.0, "counterterm reference cutoff"),
    "mu": (pos_float, 1.0, "renormalization point"),
    "case": (_choice("i", "ii"), "ii", "non-relativistic limit: i (m0=m) or ii (m fixed, m0 runs)"),
    # scatter
    "scan": (_choice("k", "kappa"), "k", "scatter: scan variable"),
    "kappa": (pos_float, 100.0, "scatter: cutoff for k scans"),
    "eps": (pos_float, None, "scatter: cutoff given as spacing, kappa = pi/eps"),
    "k": (pos_float, 1.0, "scatter: momentum for kappa scans"),
    "k_min": (pos_float, 0.1, "scatter: smallest momentum"),
    "k_max": (pos_float, 10.0, "scatter: largest momentum"),
    "kappa_min": (pos_float, 10.0, "scatter: smallest cutoff"),
    "kappa_max": (pos_float, 1e8, "scatter: largest cutoff"),
    "geometry": (_choice(*cm.GEOMETRIES), "disk", "scatter: cutoff region"),
    "n_points": (pos_int, 25, "points per scan"),
    # bound
    "g_min": (pos_float, 0.5, "bound: smallest renormalized coupling"),
    "g_max": (pos_float, 10.0, "bound: largest renormalized coupling"),
    # regcompare
    "eps_max": (pos_float, 0.1, "regcompare: coarsest spacing"),
    "eps_min": (pos_float, 0.001, "regcompare: finest spacing"),
    "n_eps": (pos_int, 5, "regcompare: number of spacings"),
    "running": (_bool, True, "regcompare: run the bare coupling with the cutoff"),
    "normalization": (_choice("literal", "unit"), "unit", "regcompare: well profile normalization"),
    "sigma": (_choice("1", "2"), "1", "regcompare: lattice kinetic factor"),
    # edscan
    "table": (_choice("stability", "tg"), "stability", "edscan: which table"),
    "n_max": (pos_int, 4, "edscan: largest particle number"),
    "L": (pos_int, 8, "edscan: linear lattice size"),
    "dim": (_choice("1", "2"), "1", "edscan: lattice dimension"),
    "periodic": (_bool, True, "edscan: periodic boundary conditions"),
    "t": (pos_float, 1.0, "edscan: hopping"),
    "U": (float, -2.0, "edscan: on-site coupling"),
    "tg_N": (pos_int, 41, "edscan tg: particle number (odd)"),
    "tg_L": (pos_float, 41.0, "edscan tg: ring length"),
    "j_max": (pos_int, 4, "edscan tg: largest momentum quantum"),
    # passivity
    "u_min": (float, 0.0, "passivity: smallest boost"),
    "u_max": (float, 0.99, "passivity: largest boost"),
    "m": (pos_float, 1.0, "passivity: particle mass"),
    "c": (pos_float, 1.0, "passivity: speed of light"),
    "n": (pos_int, 1, "passivity: particle number"),
}

# pairs of keys that fix the same quantity in different units
CONFLICTS = [("kappa", "eps")]


@dataclass
class RunConfig:
    values: dict
    command: str | None = None
    format: str = "csv"
    out: str | None = None
    explicit: set = field(default_factory=set)

    def __getitem__(self, key):
        return self.values[key]


def _parse_value(key, text, line=None):
    if key not in KEYS:
        raise ConfigError(f"unknown key {key!r}", line)
    parser = KEYS[key][0]
    try:
        return parser(text.strip())
    except ValueError as exc:
        raise ConfigError(f"invalid value for {key}: {exc}", line) from None


def parse_config(text: str = "", overrides=(), command: str | None = None,
                 format: str = "csv", out: str | None = None) -> RunConfig:
    """Parse ``key = value`` lines, then apply ``--key value`` overrides."""
    values = {k: spec[1] for k, spec in KEYS.items()}
    from_file = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected 'key = value', got {raw.strip()!r}", lineno)
        key, _, val = line.partition("=")
        key = key.strip()
        if not val.strip():
            raise ConfigError(f"missing value for {key!r}", lineno)
        from_file[key] = _parse_value(key, val, lineno)
    from_flags = {}
    items = list(overrides)
    i = 0
    while i < len(items):
        tok = items[i]
        if not tok.startswith("--"):
            raise ConfigError(f"unexpected argument {tok!r}")
        name = tok[2:]
        if "=" in name:
            name, val = name.split("=", 1)
            i += 1
        else:
            if i + 1 >= len(items):
                raise ConfigError(f"flag {tok} needs a value")
            val = items[i + 1]
            i += 2
        from_flags[name.replace("-", "_")] = _parse_value(name.replace("-", "_"), val)
    explicit = set(from_file) | set(from_flags)
    for a, b in CONFLICTS:
        a_set = a in from_flags or (a in from_file and b not in from_flags)
        b_set = b in from_flags or (b in from_file and a not in from_flags)
        if a_set and b_set:
            raise ConfigError(f"{a} and {b} both given; they set the same scale")
    values.update(from_file)
    values.update(from_flags)
    if values["eps"] is not None and ("eps" in from_flags or "kappa" not in explicit):
        values["kappa"] = math.pi / values["eps"]
    return RunConfig(values, command, format, out, explicit)


def _format_number(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if x.is_integer() and abs(x) < 1e16:
        return str(int(x))
    return repr(x)


def _json_value(x) -> str:
    if isinstance(x, str):
        return json.dumps(x)
    s = _format_number(x)
    return "null" if s in ("nan", "inf", "-inf") else s


def format_table(rows, fmt: str = "csv") -> str:
    if not rows:
        raise ContractError("empty table")
    cols = list(rows[0].keys())
    for r in rows:
        if list(r.keys()) != cols:
            raise ContractError(f"heterogeneous rows: {list(r.keys())} vs {cols}")
    if fmt == "csv":
        lines = [",".join(cols)]
        for r in rows:
            lines.append(",".join(v if isinstance(v, str) else _format_number(v) for v in r.values()))
        return "\n".join(lines) + "\n"
    if fmt == "json":
        objs = ["{" + ", ".join(f"{json.dumps(k)}: {_json_value(v)}" for k, v in r.items()) + "}" for r in rows]
        return "[\n  " + ",\n  ".join(objs) + "\n]\n"
    raise ContractError(f"unknown format {fmt!r}")


def emit_table(rows, fmt: str = "csv", path: str | None = None) -> str:
    """Write ``rows`` (list of dicts with identical keys) as CSV or JSON."""
    text = format_table(rows, fmt)
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return text


def _grid(lo, hi, n, log=True):
    if n == 1:
        return [lo]
    return [float(x) for x in (np.geomspace(lo, hi, n) if log else np.linspace(lo, hi, n))]


def _g0_at(cfg, kappa):
    if cfg["case"] == "i":
        return bare_coupling(cfg["lambda0"], cfg["m_sq"])
    return bare_coupling(cfg["lambda0"], running_bare_mass(cfg["m_sq"], cfg["c_log"], kappa, cfg["kappa_ref"]))


def run_scatter(cfg: RunConfig) -> list[dict]:
    rows = []
    if cfg["scan"] == "k":
        points = [(k, cfg["kappa"]) for k in _grid(cfg["k_min"], min(cfg["k_max"], cfg["kappa"] * 0.999), cfg["n_points"])]
    else:
        points = [(cfg["k"], kap) for kap in _grid(cfg["kappa_min"], cfg["kappa_max"], cfg["n_points"])]
    for k, kappa in points:
        g0 = _g0_at(cfg, kappa)
        T = cm.t_amplitude_bare(k, g0, kappa, geometry=cfg["geometry"])
        g = cm.renormalized_coupling(g0, kappa, cfg["mu"])
        Tr = cm.t_amplitude_renormalized(k, g, cfg["mu"])
        f = cm.angular_amplitude(k, T)
        rows.append({
            "k": k, "kappa": kappa, "g0": g0, "g": g,
            "reT": T.value.real, "imT": T.value.imag, "absT": abs(T.value),
            "reT_ren": Tr.value.real, "imT_ren": Tr.value.imag,
            "ref": f.real, "imf": f.imag,
            "delta": cm.s_wave_phase_shift(k, g, cfg["mu"]),
            "unitarity": T.unitarity_defect,
        })
    return rows


def run_bound(cfg: RunConfig) -> list[dict]:
    rows = []
    for g in _grid(cfg["g_min"], cfg["g_max"], cfg["n_points"]):
        st = cm.bound_state_energy(g, cfg["mu"])
        root = cm.bound_state_by_root(g, cfg["mu"])
        rows.append({"g": g, "mu": cfg["mu"], "B": st.B, "residual": st.residual,
                     "B_root": root.B, "rel_diff": abs(root.B / st.B - 1.0)})
    return rows


def run_regcompare(cfg: RunConfig) -> list[dict]:
    eps_list = _grid(cfg["eps_max"], cfg["eps_min"], cfg["n_eps"])
    return regularization_table(eps_list, cfg["m_sq"], cfg["c_log"], cfg["kappa_ref"], cfg["lambda0"],
                                running=cfg["running"], normalization=cfg["normalization"],
                                sigma=float(cfg["sigma"]))


def run_edscan(cfg: RunConfig) -> list[dict]:
    if cfg["table"] == "tg":
        N, L = cfg["tg_N"], cfg["tg_L"]
        rho = N / L
        kf = fermi_momentum(N, L)
        rows = []
        for j in range(1, cfg["j_max"] + 1):
            p = 2.0 * math.pi * j / L
            de = tg_excitation(N, L, j)
            rows.append({"N": N, "L": L, "j": j, "p": p, "dE": de,
                         "kF_form": p * p + 2 * kf * p, "thermo_form": p * p + 2 * math.pi * rho * p,
                         "finite_size": 2 * math.pi * rho * p / N})
        return rows
    geom = LatticeGeometry(int(cfg["dim"]), cfg["L"], cfg["periodic"])
    scan = stability_scan(range(1, cfg["n_max"] + 1), geom, cfg["t"], cfg["U"], seed=cfg["seed"])
    return [{"n": n, "E": e, "E_per_n": epn, "verdict": scan.verdict, "C": scan.C} for n, e, epn in scan.rows]


def run_passivity(cfg: RunConfig) -> list[dict]:
    rows = []
    for u in _grid(cfg["u_min"], cfg["u_max"], cfg["n_points"], log=False):
        r = contraction_report(u, cfg["m"], cfg["c"], cfg["n"])
        rows.append({"u": u, "min_rel": r.min_rel, "min_rel_subtracted": r.min_rel_subtracted,
                     "min_nr": r.min_nr, "cone_half_angle": r.cone_half_angle,
                     "rel_nonneg": r.positivity["rel"], "nr_nonneg": r.positivity["nr"]})
    return rows


RUNNERS = {
    "scatter": run_scatter,
    "bound": run_bound,
    "regcompare": run_regcompare,
    "edscan": run_edscan,
    "passivity": run_passivity,
}


def _build_parser():
    p = argparse.ArgumentParser(prog="nrlphi4", description=__doc__.splitlines()[0],
                                epilog="config keys: " + ", ".join(KEYS))
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--config", help="key = value config file")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args, rest = parser.parse_known_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        text = ""
        if args.config:
            with open(args.config, encoding="utf-8") as fh:
                text = fh.read()
        cfg = parse_config(text, rest, args.command, args.format, args.out)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cannot read config: {exc}", file=sys.stderr)
        return 2
    try:
        rows = RUNNERS[cfg.command](cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (NRLError, ArithmeticError) as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return 3
    try:
        emit_table(rows, cfg.format, cfg.out)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 4
    return 0


if __name__ == "__main__":
    sys.exit(main())
