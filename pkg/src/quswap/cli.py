"""Command-line front end: gate dumps, verification suites, Fock experiments.

Subcommands:

* ``gate``     dump a named qudit gate matrix as JSON or CSV
* ``verify``   run the invariant suites and emit a JSON report
* ``exchange`` swap two coherent states through the fixed exchange unitary
* ``clone``    split a one-mode state across two modes, with oracle comparison

Complex numbers on the command line accept ``i`` or ``j`` suffixes
(``--z2=-0.4+0.3i``); angles are radians, with ``pi`` and fractions such as
``pi/2`` accepted symbolically. Matrices and states are serialized as
``{"dim": n, "entries": [[re, im], ...]}`` row-major; floats use Python's
shortest round-trip representation (up to 17 significant digits). Output is
deterministic byte-for-byte except for the wall-time fields in verification
reports.

Exit codes: 0 success / all checks passed, 1 verification failure,
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
import warnings

import numpy as np

from . import fock, gates, verify
from .core import fidelity, tensor_state

__all__ = ["main"]

GATE_BUILDERS = {
    "sigma1": gates.sigma1,
    "sigma3": gates.sigma3,
    "k": gates.reverse_gate,
    "cshift": gates.controlled_shift,
    "cshift-rev": gates.controlled_shift_reversed,
    "swap": gates.swap_direct,
    "swap-composed": gates.swap_composed,
}

_ANGLE_RE = re.compile(r"^(-?)pi(?:/(\d+(?:\.\d*)?))?$")


def parse_complex(text: str) -> complex:
    """Parse '0.7', '-0.4+0.3i' or '1j' into a complex number."""
    cleaned = text.strip().replace("i", "j").replace("I", "j")
    if "inf" in cleaned.lower() or "nan" in cleaned.lower():
        raise ValueError(f"non-finite complex value: {text!r}")
    return complex(cleaned.replace(" ", ""))


def parse_angle(text: str) -> float:
    """Parse an angle in radians; accepts 'pi' and fractions like 'pi/4'."""
    cleaned = text.strip().lower()
    m = _ANGLE_RE.match(cleaned)
    if m:
        value = math.pi / float(m.group(2)) if m.group(2) else math.pi
        return -value if m.group(1) else value
    return float(cleaned)


def complex_pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def matrix_payload(m: np.ndarray) -> dict:
    m = np.asarray(m, dtype=complex)
    entries = [complex_pair(z) for z in m.ravel()]
    return {"dim": int(m.shape[0]), "entries": entries}


def vector_payload(v: np.ndarray) -> dict:
    v = np.asarray(v, dtype=complex)
    return {"dim": int(v.shape[0]), "entries": [complex_pair(z) for z in v]}


def _write(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _matrix_csv(m: np.ndarray) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in np.asarray(m, dtype=complex):
        writer.writerow([f"{z.real:.17g}{z.imag:+.17g}i" for z in row])
    return buf.getvalue()


def cmd_gate(args: argparse.Namespace) -> int:
    if not (2 <= args.d <= 64):
        print(f"error: d must be in 2..64, got {args.d}", file=sys.stderr)
        return 2
    gate = GATE_BUILDERS[args.name](args.d)
    if args.format == "json":
        payload = {"gate": gate.label, "d": gate.d, **matrix_payload(gate.matrix)}
        _write(json.dumps(payload) + "\n", args.out)
    else:
        _write(_matrix_csv(gate.matrix), args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if not (2 <= args.d_max <= 16):
        print(f"error: --d-max must be in 2..16, got {args.d_max}", file=sys.stderr)
        return 2
    if not (1 <= args.n_max <= 64):
        print(f"error: --n-max must be in 1..64, got {args.n_max}", file=sys.stderr)
        return 2
    reports = verify.run_suite(args.suite, d_max=args.d_max, n_max=args.n_max)
    all_passed = all(r.passed for r in reports)
    payload = {
        "suite": args.suite,
        "d_max": args.d_max,
        "n_max": args.n_max,
        "all_passed": all_passed,
        "reports": [r.to_dict() for r in reports],
    }
    _write(json.dumps(payload, indent=2) + "\n", args.out)
    return 0 if all_passed else 1


def cmd_exchange(args: argparse.Namespace) -> int:
    n_max = args.n_max
    advisory = math.sqrt(n_max) / 4
    for label, z in (("z1", args.z1), ("z2", args.z2)):
        if abs(z) > advisory:
            print(f"warning: |{label}|={abs(z):.3f} exceeds the advisory bound "
                  f"sqrt(n_max)/4={advisory:.3f}", file=sys.stderr)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", fock.TruncationWarning)
        state1 = fock.coherent_state(args.z1, n_max)
        state2 = fock.coherent_state(args.z2, n_max)
    exchanged = fock.exchange_protocol(args.theta, n_max).apply(tensor_state(state1, state2))
    target = tensor_state(state2, state1)
    w1 = fock.coherent_truncation_weight(args.z1, n_max)
    w2 = fock.coherent_truncation_weight(args.z2, n_max)
    payload = {
        "z1": complex_pair(args.z1),
        "z2": complex_pair(args.z2),
        "theta": args.theta,
        "n_max": n_max,
        "fidelity": fidelity(target, exchanged),
        "truncation_weight": {"z1": w1, "z2": w2, "combined": 1 - (1 - w1) * (1 - w2)},
        # equal inputs are swapped to themselves, so they cannot detect a
        # broken protocol
        "non_discriminating": args.z1 == args.z2,
    }
    _write(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _load_coefficients(path: str, dim: int) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, list) or not raw:
        raise ValueError("coefficient file must be a non-empty JSON array")
    def _num(value) -> float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ValueError(f"not a number: {value!r}")
        return float(value)

    coeffs = np.zeros(len(raw), dtype=complex)
    for i, item in enumerate(raw):
        if isinstance(item, list) and len(item) == 2:
            coeffs[i] = complex(_num(item[0]), _num(item[1]))
        else:
            coeffs[i] = _num(item)
    if len(coeffs) > dim:
        raise ValueError(f"{len(coeffs)} coefficients exceed the cutoff dimension {dim}")
    if not np.all(np.isfinite(coeffs)):
        raise ValueError("coefficients must be finite")
    return coeffs


def cmd_clone(args: argparse.Namespace) -> int:
    n_max = args.n_max
    if (args.input is None) == (args.z is None):
        print("error: provide exactly one of --input or --z", file=sys.stderr)
        return 2
    if args.z is not None:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", fock.TruncationWarning)
            x = fock.coherent_state(args.z, n_max)
        source = {"coherent_z": complex_pair(args.z)}
    else:
        try:
            x = _load_coefficients(args.input, n_max + 1)
        except (OSError, ValueError, json.JSONDecodeError) as exc:
            print(f"error: cannot read coefficient file: {exc}", file=sys.stderr)
            return 2
        norm = float(np.linalg.norm(x))
        if abs(norm - 1.0) > 1e-12:
            if norm == 0.0:
                print("error: coefficient vector is zero", file=sys.stderr)
                return 2
            print(f"warning: input norm {norm:.6g} != 1; renormalizing", file=sys.stderr)
            x = x / norm
        source = {"coefficient_file": args.input}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", fock.TruncationWarning)
        numeric = fock.imperfect_clone_numeric(x, args.t_abs, n_max)
    closed = fock.imperfect_clone_closed_form(
        np.pad(x, (0, n_max + 1 - len(x))), args.t_abs, n_max)
    payload = {
        **source,
        "t_abs": args.t_abs,
        "n_max": n_max,
        "oracle_fidelity": fidelity(closed, numeric),
        "numeric": vector_payload(numeric),
        "closed_form": vector_payload(closed),
    }
    _write(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quswap",
        description="Qudit exchange-gate decomposition and two-mode Fock experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gate = sub.add_parser("gate", help="dump a qudit gate matrix")
    p_gate.add_argument("--name", required=True, choices=sorted(GATE_BUILDERS))
    p_gate.add_argument("--d", type=int, required=True, help="levels per qudit (2..64)")
    p_gate.add_argument("--format", choices=("json", "csv"), default="json")
    p_gate.add_argument("--out", help="write to file instead of stdout")
    p_gate.set_defaults(func=cmd_gate)

    p_verify = sub.add_parser("verify", help="run the invariant suites")
    p_verify.add_argument("--suite", choices=("qudit", "fock", "all"), default="all")
    p_verify.add_argument("--d-max", type=int, default=8, help="largest qudit dim (<=16)")
    p_verify.add_argument("--n-max", type=int, default=32, help="Fock cutoff (<=64)")
    p_verify.add_argument("--out", help="write to file instead of stdout")
    p_verify.set_defaults(func=cmd_verify)

    p_exch = sub.add_parser("exchange", help="swap two coherent states")
    p_exch.add_argument("--z1", type=parse_complex, required=True)
    p_exch.add_argument("--z2", type=parse_complex, required=True)
    p_exch.add_argument("--theta", type=parse_angle, default=0.0,
                        help="beamsplitter phase (radians; accepts pi, pi/2, ...)")
    p_exch.add_argument("--n-max", type=int, default=32)
    p_exch.add_argument("--out", help="write to file instead of stdout")
    p_exch.set_defaults(func=cmd_exchange)

    p_clone = sub.add_parser("clone", help="split a one-mode state across two modes")
    p_clone.add_argument("--input", help="JSON file of coefficients ([re, im] pairs or numbers)")
    p_clone.add_argument("--z", type=parse_complex, help="coherent input parameter")
    p_clone.add_argument("--t-abs", type=parse_angle, required=True,
                         help="beamsplitter strength |t| (radians; accepts pi/4, ...)")
    p_clone.add_argument("--n-max", type=int, default=32)
    p_clone.add_argument("--out", help="write to file instead of stdout")
    p_clone.set_defaults(func=cmd_clone)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
