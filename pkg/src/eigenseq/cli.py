"""Command-line interface.

    eigenseq iterate --gate sigmax --max-iter 60 --emit hamiltonians
    eigenseq frame --in u0.json
    eigenseq distance --a hadamard --b u.json
    eigenseq compose --kind star --a sigmax --b sigmaz
    eigenseq distributivity --kind direct_sum --a phase:1.0 --b sigmax
    eigenseq sweep --steps 32

Anything that expects a matrix takes either a path to a matrix JSON file or
a gate name. Exit status: 0 success, 1 domain error, 2 malformed input.
"""
import argparse
import csv
import io
import os
import sys

import numpy as np

from . import serialize
from .complexmat import DEFAULT_TOL, hs_distance, phase_min_distance, unitarity_residual
from .compose import GATE_NAMES, CompositionKind, check_distributivity, compose, gate
from .eig import spectral_clusters
from .errors import EigenseqError, InputError
from .gateseq import build_frame, iterate_sequence, reflection_2x2
from .hamcay import cayley_rational, cayley_spectral, hamiltonian_from_frame

EMIT_CHOICES = ("frames", "hamiltonians", "cayleys", "spectra")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def load_matrix(ref):
    """Matrix from a JSON file path, or from a gate name if no such file exists."""
    if os.path.isfile(ref):
        try:
            with open(ref) as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {ref}: {e}") from None
        return serialize.matrix_from_json(text)
    return gate(ref)


def _tolerances(args):
    return DEFAULT_TOL.replace(
        eps_conv=args.tol_conv,
        eps_cluster=args.tol_cluster,
        eps_zero=args.tol_zero,
        eps_cmp=args.tol_cmp,
    )


def _single_input(args):
    if (args.gate is None) == (args.input is None):
        raise InputError("give exactly one of --gate or --in")
    return load_matrix(args.gate if args.gate is not None else args.input)


def _emits(text):
    if not text:
        return set()
    items = {t.strip() for t in text.split(",") if t.strip()}
    bad = items - set(EMIT_CHOICES)
    if bad:
        raise InputError(f"unknown --emit item(s) {sorted(bad)}; choose from {', '.join(EMIT_CHOICES)}")
    return items


def _pretty_matrix(m):
    return np.array2string(np.asarray(m), precision=10, suppress_small=True, max_line_width=160)


def _render(obj, fmt, pretty=None):
    if fmt == "pretty" and pretty is not None:
        return pretty
    if fmt == "csv":
        raise InputError("csv output is only available for iterate and sweep")
    return serialize.dumps(obj) + "\n"


def cmd_iterate(args, cfg):
    u0 = _single_input(args)
    emits = _emits(args.emit)
    states, report = iterate_sequence(u0, args.max_iter, cfg)
    if args.format == "csv":
        return serialize.trace_to_csv(states)

    trace = []
    for s in states:
        extras = {}
        if "frames" in emits:
            extras["frame"] = serialize.frame_to_obj(s.frame)
        if "hamiltonians" in emits:
            extras["hamiltonian"] = serialize.matrix_to_obj(hamiltonian_from_frame(s.frame))
        if "cayleys" in emits:
            extras["cayley"] = serialize.matrix_to_obj(cayley_spectral(s.frame))
        if "spectra" in emits:
            extras["spectrum"] = serialize.spectrum_to_obj(spectral_clusters(s.u, True, cfg))
        trace.append(serialize.state_to_obj(s, extras))
    obj = {"trace": trace, "report": serialize.report_to_obj(report)}

    lines = []
    for s in states:
        dist = "" if s.hs_dist_prev is None else f"  |U_k - U_k-1| = {s.hs_dist_prev:.3e}  d = {s.d_prev:.3e}"
        lines.append(f"k = {s.k}{dist}\n{_pretty_matrix(s.u)}")
    lines.append(f"{report.reason}: converged={report.converged} steps={report.steps} "
                 f"final_distance={report.final_distance:.3e}")
    return _render(obj, args.format, "\n".join(lines) + "\n")


def cmd_frame(args, cfg):
    frame = build_frame(_single_input(args), cfg)
    return _render(serialize.frame_to_obj(frame), args.format,
                   f"{_pretty_matrix(frame.columns)}\nphases: {frame.phases}\n")


def cmd_hamiltonian(args, cfg):
    h = hamiltonian_from_frame(build_frame(_single_input(args), cfg, kind="unitary"))
    return _render(serialize.matrix_to_obj(h), args.format, _pretty_matrix(h) + "\n")


def cmd_cayley(args, cfg):
    m = _single_input(args)
    mode = args.mode
    if mode == "auto":
        mode = "spectral" if unitarity_residual(m) <= cfg.eps_unitary else "rational"
    if mode == "spectral":
        v = cayley_spectral(build_frame(m, cfg, kind="unitary"))
    else:
        v = cayley_rational(m)
    return _render(serialize.matrix_to_obj(v), args.format, _pretty_matrix(v) + "\n")


def cmd_distance(args, cfg):
    a, b = load_matrix(args.a), load_matrix(args.b)
    obj = {"hs": hs_distance(a, b), "d": phase_min_distance(a, b, cfg.eps_unitary)}
    return _render(obj, args.format, f"hs = {obj['hs']!r}\nd  = {obj['d']!r}\n")


def cmd_compose(args, cfg):
    m = compose(args.kind, load_matrix(args.a), load_matrix(args.b))
    return _render(serialize.matrix_to_obj(m), args.format, _pretty_matrix(m) + "\n")


def cmd_distributivity(args, cfg):
    r = check_distributivity(args.kind, load_matrix(args.a), load_matrix(args.b), args.tol, cfg)
    obj = {
        "kind": r.kind.value,
        "residual": r.residual,
        "holds": r.holds,
        "tol": r.tol,
        "lhs": serialize.matrix_to_obj(r.lhs),
        "rhs": serialize.matrix_to_obj(r.rhs),
    }
    return _render(obj, args.format, f"{r.kind.value}: residual = {r.residual:.3e}, holds = {r.holds}\n")


def sweep_rows(steps, b_signs, max_iter, cfg):
    """One row per (a, b_sign) with a = i/steps, i = 0..steps-1."""
    rows = []
    for sign in b_signs:
        for i in range(steps):
            a = i / steps
            _, rep = iterate_sequence(reflection_2x2(a, sign), max_iter, cfg)
            rows.append((a, sign, rep))
    return rows


def cmd_sweep(args, cfg):
    if args.steps < 1:
        raise InputError("--steps must be >= 1")
    signs = {"1": (1,), "-1": (-1,), "both": (1, -1)}[args.b_sign]
    rows = sweep_rows(args.steps, signs, args.max_iter, cfg)
    if args.format == "json":
        return serialize.dumps([
            {"a": a, "b_sign": s, "steps": r.steps, "final_distance": r.final_distance,
             "converged": r.converged, "limit": serialize.matrix_to_obj(r.limit)}
            for a, s, r in rows
        ]) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["a", "b_sign", "steps", "final_distance"] + serialize.trace_header(2)[3:])
    for a, s, r in rows:
        limit = [repr(float(p)) for z in r.limit.ravel() for p in (z.real, z.imag)]
        w.writerow([repr(a), s, r.steps, repr(r.final_distance)] + limit)
    return buf.getvalue()


COMMANDS = {
    "iterate": cmd_iterate,
    "frame": cmd_frame,
    "hamiltonian": cmd_hamiltonian,
    "cayley": cmd_cayley,
    "distance": cmd_distance,
    "compose": cmd_compose,
    "distributivity": cmd_distributivity,
    "sweep": cmd_sweep,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol-conv", type=float)
    common.add_argument("--tol-cluster", type=float)
    common.add_argument("--tol-zero", type=float)
    common.add_argument("--tol-cmp", type=float)
    common.add_argument("--format", choices=("json", "csv", "pretty"), help="default: csv for sweep, json otherwise")
    common.add_argument("--out", default="-", help="output path, '-' for stdout")

    single = argparse.ArgumentParser(add_help=False)
    single.add_argument("--gate", help=f"gate name ({', '.join(GATE_NAMES)}; phase:<phi>, boost:<alpha>)")
    single.add_argument("--in", dest="input", help="matrix JSON file (or gate name)")

    pair = argparse.ArgumentParser(add_help=False)
    pair.add_argument("--a", required=True)
    pair.add_argument("--b", required=True)

    kinds = [k.value for k in CompositionKind]
    p = _Parser(prog="eigenseq", description="Eigenvector sequences of quantum gates.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    it = sub.add_parser("iterate", parents=[common, single], help="iterate U_{k+1} = F(U_k)")
    it.add_argument("--max-iter", type=int, default=1000)
    it.add_argument("--emit", default="", help=f"comma list of {', '.join(EMIT_CHOICES)}")
    sub.add_parser("frame", parents=[common, single], help="apply F once")
    sub.add_parser("hamiltonian", parents=[common, single], help="H = F diag(-theta) F*")
    cy = sub.add_parser("cayley", parents=[common, single], help="Cayley transform")
    cy.add_argument("--mode", choices=("auto", "spectral", "rational"), default="auto",
                    help="spectral: V of a unitary's Hamiltonian; rational: (H-i)(H+i)^-1 of a hermitian input")
    sub.add_parser("distance", parents=[common, pair], help="HS distance and phase-minimised distance")
    co = sub.add_parser("compose", parents=[common, pair], help="kronecker, direct_sum or star")
    co.add_argument("--kind", choices=kinds, required=True)
    di = sub.add_parser("distributivity", parents=[common, pair], help="compare F(A op B) with F(A) op F(B)")
    di.add_argument("--kind", choices=kinds, required=True)
    di.add_argument("--tol", type=float, default=1e-9)
    sw = sub.add_parser("sweep", parents=[common], help="iterate [[a,b],[b,-a]] over a grid of a in [0, 1)")
    sw.add_argument("--steps", type=int, default=32)
    sw.add_argument("--b-sign", choices=("1", "-1", "both"), default="1")
    sw.add_argument("--max-iter", type=int, default=1000)
    return p


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "max_iter", 1) < 1:
            raise InputError("--max-iter must be >= 1")
        if args.format is None:
            args.format = "csv" if args.command == "sweep" else "json"
        cfg = _tolerances(args)
        text = COMMANDS[args.command](args, cfg)
    except InputError as e:
        stderr.write(serialize.dumps(e.to_dict()) + "\n")
        return 2
    except EigenseqError as e:
        stderr.write(serialize.dumps(e.to_dict()) + "\n")
        return 1
    except np.linalg.LinAlgError as e:
        stderr.write(serialize.dumps({"error": "linear-algebra", "message": str(e)}) + "\n")
        return 1

    if args.out == "-":
        stdout.write(text)
    else:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as e:
            stderr.write(serialize.dumps({"error": "output", "message": str(e)}) + "\n")
            return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
