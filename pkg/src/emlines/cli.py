"""Command-line front end: `emlines <subcommand> ...` with JSON, CSV or SVG output."""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from typing import Any, Callable

from . import boundary, guides, lineparams, linestate, matcher, planewave, smithchart, transient
from .errors import DomainError, ValidationError

UNIT_SCALE = {
    "Hz": 1.0, "kHz": 1e3, "MHz": 1e6, "GHz": 1e9,
    "m": 1.0, "cm": 1e-2, "mm": 1e-3, "um": 1e-6,
    "ohm": 1.0, "S": 1.0, "dB": 1.0,
    "deg": math.pi / 180, "rad": 1.0,
}
_QUANTITY = re.compile(r"^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*([A-Za-z]*)\s*$")


def parse_quantity(text: str) -> float:
    """Real number with an optional whitelisted unit suffix, returned in SI."""
    m = _QUANTITY.match(text)
    if not m:
        raise ValidationError(f"cannot parse quantity {text!r}")
    value, unit = float(m.group(1)), m.group(2)
    if unit and unit not in UNIT_SCALE:
        raise ValidationError(f"unit {unit!r} is not accepted")
    return value * UNIT_SCALE.get(unit, 1.0)


def parse_complex(text: str) -> complex:
    t = text.strip().replace(" ", "")
    if t.endswith("ohm"):
        t = t[:-3]
    try:
        return complex(t)
    except ValueError:
        raise ValidationError(f"cannot parse complex value {text!r}") from None


def parse_termination(text: str):
    t = text.strip().lower()
    if t == "short":
        return linestate.Short()
    if t == "open":
        return linestate.Open()
    return linestate.Load(parse_complex(text))


def _jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, complex):
        return {"re": _jsonable(value.real), "im": _jsonable(value.imag)}
    if isinstance(value, float):
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        if math.isnan(value):
            return "nan"
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, dict):
        out = {}
        for k, v in value.items():
            out[k] = _jsonable(v)
            if k.endswith("_rad") and isinstance(v, (int, float)):
                out[k[:-4] + "_deg"] = _jsonable(math.degrees(v))
        return out
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, linestate.Short):
        return "short"
    if isinstance(value, linestate.Open):
        return "open"
    if isinstance(value, linestate.Load):
        return _jsonable(value.z)
    return str(value)


def emit_json(inputs: dict, results: Any) -> str:
    return json.dumps({"inputs_normalized": _jsonable(inputs), "results": _jsonable(results)}, indent=2) + "\n"


def emit_csv(header: list, rows: list) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _need(args, *names: str) -> None:
    missing = [n for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        raise ValidationError("missing " + ", ".join("--" + n for n in missing))


# Subcommand handlers return (inputs, results) for JSON or a ready string.

def cmd_line(args) -> tuple:
    if args.kind == "constants":
        _need(args, "f")
        model = lineparams.LineModel(args.r or 0.0, args.l or 0.0, args.g or 0.0, args.c or 0.0)
        pc, z0 = lineparams.secondary_constants(model, args.f)
        inputs = {"r": model.r_per_m, "l": model.l_per_m, "g": model.g_per_m, "c": model.c_per_m, "f": args.f}
        return inputs, {"alpha": pc.alpha, "beta": pc.beta, "z0": z0, "wavelength": pc.wavelength()}
    if args.kind == "distortionless":
        _need(args, "alpha", "vp", "z0")
        m = lineparams.solve_distortionless(args.alpha, args.vp, args.z0)
        return ({"alpha": args.alpha, "vp": args.vp, "z0": args.z0},
                {"r": m.r_per_m, "l": m.l_per_m, "g": m.g_per_m, "c": m.c_per_m})
    if args.kind == "coax":
        _need(args, "a", "b")
        geom = lineparams.Coaxial(args.a, args.b, args.eps_r, args.mu_r)
    elif args.kind == "bifilar":
        _need(args, "a", "d")
        geom = lineparams.Bifilar(args.d, args.a, args.eps_r, args.mu_r)
    else:
        _need(args, "w", "h")
        geom = lineparams.Microstrip(args.w, args.h, args.thickness, args.eps_r)
    inputs = {k: v for k, v in vars(geom).items()}
    return inputs, {"z0": lineparams.geometric_z0(geom)}


def cmd_state(args) -> tuple:
    inputs: dict = {"z0": args.z0, "op": args.op}
    if args.op in ("rho", "swr", "extrema", "zin", "power"):
        _need(args, "zl")
        load = parse_termination(args.zl)
        inputs["zl"] = load
    if args.op == "rho":
        rho = linestate.reflection_coefficient(load, args.z0)
        return inputs, {"rho": rho, "magnitude": abs(rho), "phase_rad": math.atan2(rho.imag, rho.real)}
    if args.op == "swr":
        st = linestate.reflection_state(load, args.z0)
        return inputs, {"swr": st.swr, "rho": st.rho}
    if args.op == "extrema":
        rho = linestate.reflection_coefficient(load, args.z0)
        sw = linestate.standing_wave(rho, 1.0)
        return inputs, {"swr": sw.swr, "d_max_lambda": sw.d_max, "d_min_lambda": sw.d_min}
    if args.op == "zin":
        _need(args, "d")
        inputs["d_lambda"] = args.d
        z = linestate.input_impedance(load, args.z0, linestate.lossless_gamma(1.0), args.d)
        return inputs, {"z_in": z}
    if args.op == "power":
        _need(args, "vg", "zg", "d")
        vg, zg = parse_complex(args.vg), parse_complex(args.zg)
        inputs.update(vg=vg, zg=zg, d_lambda=args.d)
        rep = linestate.power_flow(vg, zg, args.z0, args.d, load)
        return inputs, dict(vars(rep))
    if args.op == "measure":
        _need(args, "swr", "dmin", "wavelength")
        inputs.update(swr=args.swr, d_min=args.dmin, wavelength=args.wavelength)
        zl = linestate.load_from_measurements(args.swr, args.dmin, args.wavelength, args.z0)
        return inputs, {"zl": zl, "rho": linestate.reflection_coefficient(linestate.Load(zl), args.z0)}
    if args.op == "oc-sc":
        _need(args, "zoc", "zsc", "length")
        zoc, zsc = parse_complex(args.zoc), parse_complex(args.zsc)
        inputs.update(zoc=zoc, zsc=zsc, length=args.length)
        sol = linestate.line_from_oc_sc(zoc, zsc, args.length)
        return inputs, {"z0": sol.z0, "beta": sol.beta, "wavelength": sol.wavelength}
    _need(args, "z03")
    inputs["z03"] = args.z03
    return inputs, {"z02": linestate.quarter_wave_z(args.z0, args.z03)}


def cmd_match(args) -> tuple:
    zl = parse_complex(args.zl)
    cfg = matcher.StubConfig(args.topology, args.stub, args.k)
    inputs = {"zl": zl, "z0": args.z0, "topology": cfg.topology.value, "stub": cfg.termination.value, "k": cfg.k}
    pairs = []
    for sol in matcher.solve_stub(zl, args.z0, cfg):
        pairs.append({"d1_lambda": sol.d1, "d2_lambda": sol.d2,
                      "residual": matcher.verify_match(zl, args.z0, cfg, sol)})
    return inputs, {"solutions": pairs}


def cmd_smith(args):
    z = parse_complex(args.z)
    g = smithchart.gamma_from_z(z)
    rotated = smithchart.rotate_toward_generator(g, args.rotate)
    inputs = {"z": z, "rotate_lambda": args.rotate}
    if args.format == "svg":
        pts = [(smithchart.GammaPoint(g), "load")]
        arcs = []
        if args.rotate:
            pts.append((smithchart.GammaPoint(rotated), "end"))
            arcs.append((g, math.fmod(args.rotate, 0.5), "toward generator"))
        ann = smithchart.ChartAnnotation(tuple(pts), tuple(arcs), (abs(g),))
        return smithchart.render_chart(ann)
    z_end = smithchart.z_from_gamma(rotated) if rotated != 1 else complex(math.inf, 0)
    return inputs, {"gamma": g, "swr": linestate.swr_from_rho(g), "gamma_rotated": rotated, "z_rotated": z_end}


def cmd_bounce(args):
    zl: Any = args.zl
    if zl.lower() in ("short", "open"):
        zl = parse_termination(zl)
    else:
        zl = parse_quantity(zl)
    src = transient.Pulse(args.pulse_width) if args.pulse_width else transient.Step()
    setup = transient.TransientSetup(args.v0, args.zg, args.z0, zl, args.length, args.velocity, src)
    at = setup.length if args.at is None else args.at
    t_end = args.t_end if args.t_end is not None else 10 * setup.tau
    v, i = transient.bounce(setup, at, t_end)
    wave = v if args.quantity == "v" else i
    if args.format == "json":
        inputs = {"v0": args.v0, "zg": args.zg, "z0": args.z0, "zl": zl, "length": args.length,
                  "velocity": args.velocity, "at": at, "t_end": t_end}
        return inputs, {"breakpoints": [list(p) for p in wave.breakpoints]}
    return wave.to_csv()


def _medium(args) -> planewave.Medium:
    return planewave.Medium(args.eps_r, args.eps_im, args.mu_r, args.mu_im, args.sigma, args.exotic)


def cmd_wave(args) -> tuple:
    if args.op == "params":
        _need(args, "f")
        med = _medium(args)
        wp = planewave.wave_params(med, args.f)
        res = dict(vars(wp))
        res["loss_tangent"] = planewave.loss_tangent(med, args.f)
        return {"medium": dict(vars(med)), "f": args.f}, res
    if args.op == "polarization":
        _need(args, "e1", "e2", "phase")
        p = planewave.classify_polarization(planewave.PolarizationSpec(args.e1, args.e2, args.phase))
        return ({"e1": args.e1, "e2": args.e2, "phase_rad": args.phase},
                {"kind": p.kind, "handedness": p.handedness, "angle_rad": p.angle,
                 "semi_major": p.semi_major, "semi_minor": p.semi_minor, "observer": p.observer})
    if args.op == "doppler":
        _need(args, "f")
        if args.shift is not None:
            return ({"f0": args.f, "shift": args.shift},
                    {"v_r": planewave.radial_velocity_from_doppler(args.shift, args.f)})
        _need(args, "v_r")
        return {"f0": args.f, "v_r": args.v_r}, {"shift": planewave.doppler_em(args.v_r, args.f)}
    _need(args, "f", "speed")
    f_obs = planewave.doppler_acoustic(args.f, args.speed, args.v_source, args.v_observer,
                                       not args.source_recedes, not args.observer_recedes)
    return ({"f_s": args.f, "v": args.speed, "v_source": args.v_source, "v_observer": args.v_observer,
             "source_approaching": not args.source_recedes, "observer_approaching": not args.observer_recedes},
            {"f_obs": f_obs})


def cmd_boundary(args) -> tuple:
    if args.op in ("brewster", "critical"):
        inputs = {"eps1": args.eps1, "eps2": args.eps2}
        if args.op == "brewster":
            return inputs, {"theta_rad": boundary.brewster_angle(args.eps1, args.eps2)}
        th = boundary.critical_angle(args.eps1, args.eps2)
        return inputs, {"theta_rad": th, "exists": th is not None}
    _need(args, "f")
    m1 = planewave.Medium(args.eps1, exotic=args.eps1 < 1)
    m2 = boundary.PEC if args.pec else planewave.Medium(args.eps2, args.eps2_im, args.mu2, args.mu2_im,
                                                        args.sigma2, exotic=args.eps2 < 1)
    iface = boundary.Interface(m1, m2, args.f)
    inputs = {"eps1": args.eps1, "medium2": "pec" if args.pec else dict(vars(m2)), "f": args.f}
    if args.op == "normal":
        rho, tau = boundary.normal_coeffs(iface)
        return inputs, {"rho": rho, "tau": tau, "reflected_power": abs(rho) ** 2}
    if args.op == "oblique":
        inputs["theta_i_rad"] = args.theta
        r = boundary.oblique(iface, args.theta)
        return inputs, {"theta_t_rad": r.theta_t, "cos_t": r.cos_t, "evanescent": r.evanescent,
                        "rho_perp": r.rho_perp, "tau_perp": r.tau_perp,
                        "rho_par": r.rho_par, "tau_par": r.tau_par}
    _need(args, "d")
    inputs.update(d=args.d, eps3=args.eps3)
    m3 = planewave.Medium(args.eps3, exotic=args.eps3 < 1)
    z3 = boundary.Interface(m1, m3, args.f).z2
    z_e, rho = boundary.slab_equivalent(iface.z1, iface.z2, z3, iface.gamma2, args.d)
    ratio, att = boundary.slab_through(iface.z1, iface.z2, z3, iface.gamma2, args.d)
    return inputs, {"z_e": z_e, "rho_front": rho, "reflected_power": abs(rho) ** 2,
                    "single_pass_ratio": abs(ratio), "single_pass_db": att}


def _mode_dict(p: guides.ModeParams) -> dict:
    return {"f_c": p.f_c, "beta": p.beta, "alpha_evanescent": p.alpha, "lambda_g": p.lambda_g,
            "v_p": p.v_p, "v_g": p.v_g, "z_wave": p.z_wave, "cutoff": p.cutoff}


def cmd_guide(args):
    fill = _medium(args)
    if args.kind == "rect":
        _need(args, "a", "b", "f")
        g = guides.RectGuide(args.a, args.b, fill, args.wall_sigma)
        inputs = {"a": args.a, "b": args.b, "f": args.f, "eps_r": fill.eps_r_re}
        if args.census:
            rows = [(m.family.value, m.m, m.n, fc) for m, fc in guides.mode_census(g, args.f, args.max_index)]
            if args.format == "json":
                return inputs, {"modes": [dict(zip(("family", "m", "n", "fc_hz"), r)) for r in rows]}
            return emit_csv(["family", "m", "n", "fc_hz"], rows)
        mode = guides.ModeId.parse(args.mode)
        res = _mode_dict(guides.rect_mode_params(g, mode, args.f))
        if mode == guides.ModeId(guides.Family.TE, 1, 0) and args.f > res["f_c"]:
            ad, am = guides.rect_attenuation(g, args.f)
            res.update(alpha_d=ad, alpha_m=am)
            if args.power is not None:
                c = guides.power_to_c(g, args.f, args.power)
                res.update(c_amp=c, peak_e=guides.peak_e_field(g, args.f, c))
        inputs["mode"] = str(mode)
        return inputs, res
    if args.kind == "circular":
        _need(args, "r0", "f")
        mode = guides.ModeId.parse(args.mode)
        p = guides.circular_params(args.r0, mode, args.f, fill)
        return {"r0": args.r0, "mode": str(mode), "f": args.f}, _mode_dict(p)
    if args.kind == "pp":
        _need(args, "a", "f")
        mode = guides.ModeId.parse(args.mode)
        p, ac, ad = guides.parallel_plate(args.a, mode, args.f, fill, args.wall_sigma)
        res = _mode_dict(p)
        res.update(alpha_c=ac, alpha_d=ad)
        return {"a": args.a, "mode": str(mode), "f": args.f}, res
    _need(args, "a", "b", "f")
    z0, ac, ad = guides.coax_tem(args.a, args.b, fill, args.wall_sigma, args.f)
    return {"a": args.a, "b": args.b, "f": args.f}, {"z0": z0, "alpha_c": ac, "alpha_d": ad}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(message)


def _medium_args(p) -> None:
    p.add_argument("--eps-r", type=parse_quantity, default=1.0)
    p.add_argument("--eps-im", type=parse_quantity, default=0.0)
    p.add_argument("--mu-r", type=parse_quantity, default=1.0)
    p.add_argument("--mu-im", type=parse_quantity, default=0.0)
    p.add_argument("--sigma", type=parse_quantity, default=0.0)
    p.add_argument("--exotic", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    q = parse_quantity
    root = _Parser(prog="emlines", description=__doc__)
    sub = root.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("line", help="line constants, distortionless design, geometric Z0")
    p.add_argument("kind", choices=["constants", "distortionless", "coax", "bifilar", "microstrip"])
    for name in ("r", "l", "g", "c", "f", "alpha", "vp", "z0", "a", "b", "d", "w", "h"):
        p.add_argument("--" + name, type=q)
    p.add_argument("--thickness", type=q, default=0.0)
    p.add_argument("--eps-r", type=q, default=1.0)
    p.add_argument("--mu-r", type=q, default=1.0)
    p.set_defaults(handler=cmd_line)

    p = sub.add_parser("state", help="reflection, impedance, standing waves, power")
    p.add_argument("--op", required=True,
                   choices=["rho", "swr", "extrema", "zin", "power", "measure", "oc-sc", "quarter"])
    p.add_argument("--z0", type=q, required=True)
    p.add_argument("--zl")
    p.add_argument("--d", type=float, help="line length in wavelengths")
    for name in ("vg", "zg", "zoc", "zsc"):
        p.add_argument("--" + name)
    for name in ("swr", "dmin", "wavelength", "length", "z03"):
        p.add_argument("--" + name, type=q)
    p.set_defaults(handler=cmd_state)

    p = sub.add_parser("match", help="single-stub matching")
    p.add_argument("--topology", choices=["series", "shunt"], required=True)
    p.add_argument("--stub", choices=["short", "open"], required=True)
    p.add_argument("--zl", required=True)
    p.add_argument("--z0", type=q, required=True)
    p.add_argument("--k", type=float, default=1.0)
    p.set_defaults(handler=cmd_match)

    p = sub.add_parser("smith", help="reflection-plane arithmetic and chart rendering")
    p.add_argument("--z", required=True, help="normalized impedance a+bj")
    p.add_argument("--rotate", type=float, default=0.0, help="move toward the generator, wavelengths")
    p.add_argument("--format", choices=["json", "svg"], default="json")
    p.set_defaults(handler=cmd_smith)

    p = sub.add_parser("bounce", help="transient bounce diagram")
    for name in ("v0", "zg", "z0", "length", "velocity"):
        p.add_argument("--" + name, type=q, required=True)
    p.add_argument("--zl", required=True, help="resistance, short or open")
    p.add_argument("--pulse-width", type=q)
    p.add_argument("--at", type=q, help="observation point, default the load")
    p.add_argument("--t-end", type=q)
    p.add_argument("--quantity", choices=["v", "i"], default="v")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(handler=cmd_bounce)

    p = sub.add_parser("wave", help="plane waves, polarization, Doppler")
    p.add_argument("--op", required=True, choices=["params", "polarization", "doppler", "acoustic"])
    _medium_args(p)
    for name in ("f", "e1", "e2", "phase", "shift", "v-r", "speed"):
        p.add_argument("--" + name, type=q)
    p.add_argument("--v-source", type=q, default=0.0)
    p.add_argument("--v-observer", type=q, default=0.0)
    p.add_argument("--source-recedes", action="store_true")
    p.add_argument("--observer-recedes", action="store_true")
    p.set_defaults(handler=cmd_wave)

    p = sub.add_parser("boundary", help="normal/oblique incidence, slabs, special angles")
    p.add_argument("--op", required=True, choices=["normal", "oblique", "slab", "brewster", "critical"])
    p.add_argument("--eps1", type=q, default=1.0)
    p.add_argument("--eps2", type=q, default=1.0)
    p.add_argument("--eps2-im", type=q, default=0.0)
    p.add_argument("--mu2", type=q, default=1.0)
    p.add_argument("--mu2-im", type=q, default=0.0)
    p.add_argument("--sigma2", type=q, default=0.0)
    p.add_argument("--eps3", type=q, default=1.0)
    p.add_argument("--pec", action="store_true")
    p.add_argument("--theta", type=q, default=0.0)
    p.add_argument("--f", type=q)
    p.add_argument("--d", type=q)
    p.set_defaults(handler=cmd_boundary)

    p = sub.add_parser("guide", help="rectangular, circular, parallel-plate and coaxial guides")
    p.add_argument("kind", choices=["rect", "circular", "pp", "coax"])
    for name in ("a", "b", "r0", "f", "wall-sigma", "power"):
        p.add_argument("--" + name, type=q)
    _medium_args(p)
    p.add_argument("--mode", default="TE10")
    p.add_argument("--census", action="store_true")
    p.add_argument("--max-index", type=int, default=10)
    p.add_argument("--format", choices=["json", "csv"], default=None)
    p.set_defaults(handler=cmd_guide)
    return root


def run(argv: list, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "guide" and args.format is None:
            args.format = "csv" if args.census else "json"
        result = args.handler(args)
    except ValidationError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except DomainError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    out.write(result if isinstance(result, str) else emit_json(*result))
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
