"""Command-line front end.

Parses generator documents in a small line-oriented grammar, dispatches
the analyses, and emits deterministic text or JSON reports.

Grammar (UTF-8, LF or CRLF):

    # comment lines and blank lines are ignored
    d=<int> n=<int> [mode=group|stabilizer]
    g<idx>: [w^<j>] <site-token> <site-token> ...

with one site token per site, drawn from I, X, Z, X^<a>, Z^<b> or
X^<a>Z^<b>, exponents in [0, d).  The optional leading w^<j> token is a
global phase omega^j; for d = 2 the half-integer forms w^<p>/2 express
the quarter-turn phases (w^1/2 is the factor i).

Exit codes: 0 success, 2 validation failure (including failed verify
checks), 1 internal error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import re
import sys
import traceback
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import __version__
from .errors import (
    DimensionMismatch,
    ExponentOutOfRange,
    FrustGraphError,
    InvalidMode,
    ParseError,
)
from .gf import GFMatrix, rank
from .group import GroupSpec, commutation_graph
from .group import clique_number, sos_bound, sum_bound
from .oracle import (
    BOUND_TOLERANCE,
    LAGRANGE_TOLERANCE,
    OVERLAP_TOLERANCE,
    SWAP_TOLERANCE,
    OptimizerConfig,
    dense_pauli,
    lagrange_extremum,
    max_product_overlap,
    max_sos,
    max_sum_eigenvalue,
    theta_state,
    verify_swap_identity,
)
from .pauli import PauliOperator, omega_units
from .stabilizer import Stabilizer, bipartitions, builtin_code
from .symplectic import canonical_form

REPORT_SCHEMA = "frustgraph-report/1"

_HEADER_RE = re.compile(r"^d=(\d+)\s+n=(\d+)(?:\s+mode=(group|stabilizer))?$")
_GENERATOR_RE = re.compile(r"^g(\d+):\s*(\S.*)$")
_PHASE_RE = re.compile(r"^w\^(\d+)(/2)?$")
_X_RE = re.compile(r"^X\^(\d+)$")
_Z_RE = re.compile(r"^Z\^(\d+)$")
_XZ_RE = re.compile(r"^X\^(\d+)Z\^(\d+)$")


@dataclass(frozen=True)
class InputDocument:
    """A parsed generator document."""

    d: int
    n_sites: int
    generators: tuple[PauliOperator, ...]
    mode: str | None = None
    digest: str = ""


def real_str(x: float) -> str:
    """Positional decimal rendering with 12 significant digits kept."""
    x = float(x)
    if x != x or x in (float("inf"), float("-inf")):
        return str(x)
    if x == 0:
        return "0.000000000000"
    mantissa, exp_text = f"{x:.11e}".split("e")
    neg = mantissa.startswith("-")
    digits = mantissa.lstrip("-").replace(".", "")
    point = int(exp_text) + 1
    if point <= 0:
        out = "0." + "0" * (-point) + digits
    elif point >= len(digits):
        out = digits + "0" * (point - len(digits))
    else:
        out = digits[:point] + "." + digits[point:]
    return ("-" if neg else "") + out


def rational_dict(value: Fraction) -> dict:
    return {
        "num": value.numerator,
        "den": value.denominator,
        "real": real_str(float(value)),
    }


def _parse_exponent(text: str, d: int, line_no: int, col: int) -> int:
    e = int(text)
    if not 0 <= e < d:
        raise ExponentOutOfRange(
            f"line {line_no}, column {col}: exponent {e} outside [0, {d})"
        )
    return e


def _parse_site_token(tok: str, d: int, line_no: int, col: int) -> tuple[int, int]:
    if tok == "I":
        return 0, 0
    if tok == "X":
        return 1, 0
    if tok == "Z":
        return 0, 1
    m = _XZ_RE.match(tok)
    if m:
        return (
            _parse_exponent(m.group(1), d, line_no, col),
            _parse_exponent(m.group(2), d, line_no, col),
        )
    m = _X_RE.match(tok)
    if m:
        return _parse_exponent(m.group(1), d, line_no, col), 0
    m = _Z_RE.match(tok)
    if m:
        return 0, _parse_exponent(m.group(1), d, line_no, col)
    raise ParseError(line_no, col, f"unrecognised site token {tok!r}")


def _parse_phase_token(tok: str, d: int, line_no: int, col: int) -> int | None:
    m = _PHASE_RE.match(tok)
    if not m:
        return None
    j = int(m.group(1))
    if m.group(2):
        if d != 2:
            raise ParseError(
                line_no, col, "half-integer phase exponents exist only for d=2"
            )
        return j % 4
    return omega_units(d, j)


def parse_document(text: str) -> InputDocument:
    """Parse the line-oriented generator grammar into a document."""
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    header: tuple[int, int, str | None] | None = None
    generators: list[PauliOperator] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if header is None:
            m = _HEADER_RE.match(line.strip())
            if not m:
                raise ParseError(
                    line_no, 1, "expected header 'd=<int> n=<int> [mode=...]'"
                )
            d, n = int(m.group(1)), int(m.group(2))
            if n < 1:
                raise ParseError(line_no, 1, "n must be at least 1")
            header = (d, n, m.group(3))
            continue
        d, n, _mode = header
        m = _GENERATOR_RE.match(line)
        if not m:
            raise ParseError(line_no, 1, "expected generator line 'g<idx>: ...'")
        body = m.group(2)
        tokens = [(t.start() + m.start(2) + 1, t.group()) for t in re.finditer(r"\S+", body)]
        phase = 0
        if tokens:
            parsed = _parse_phase_token(tokens[0][1], d, line_no, tokens[0][0])
            if parsed is not None:
                phase = parsed
                tokens = tokens[1:]
        if len(tokens) != n:
            raise DimensionMismatch(
                f"line {line_no}: generator has {len(tokens)} site tokens, "
                f"expected {n}"
            )
        a: list[int] = []
        b: list[int] = []
        for col, tok in tokens:
            xa, zb = _parse_site_token(tok, d, line_no, col)
            a.append(xa)
            b.append(zb)
        generators.append(PauliOperator(d, tuple(a), tuple(b), phase))
    if header is None:
        raise ParseError(1, 1, "empty document; a header line is required")
    if not generators:
        raise ParseError(1, 1, "document defines no generators")
    d, n, mode = header
    return InputDocument(d, n, tuple(generators), mode, digest)


def _phase_token(op: PauliOperator) -> str | None:
    if not op.phase_exp:
        return None
    if op.d == 2:
        if op.phase_exp % 2 == 0:
            return f"w^{op.phase_exp // 2}"
        return f"w^{op.phase_exp}/2"
    return f"w^{op.phase_exp}"


def _site_token(a: int, b: int) -> str:
    if a and b:
        return f"X^{a}Z^{b}"
    if a:
        return "X" if a == 1 else f"X^{a}"
    if b:
        return "Z" if b == 1 else f"Z^{b}"
    return "I"


def serialize_document(doc: InputDocument) -> str:
    """Render a document back into the grammar; parses to the same content."""
    head = f"d={doc.d} n={doc.n_sites}"
    if doc.mode:
        head += f" mode={doc.mode}"
    lines = [head]
    for i, g in enumerate(doc.generators, start=1):
        tokens = []
        phase = _phase_token(g)
        if phase:
            tokens.append(phase)
        tokens.extend(_site_token(a, b) for a, b in zip(g.a, g.b))
        lines.append(f"g{i}: " + " ".join(tokens))
    return "\n".join(lines) + "\n"


def document_from_stabilizer(stab: Stabilizer, mode: str = "stabilizer") -> InputDocument:
    doc = InputDocument(stab.d, stab.n_sites, stab.generators, mode)
    text = serialize_document(doc)
    return InputDocument(
        stab.d,
        stab.n_sites,
        stab.generators,
        mode,
        hashlib.sha256(text.encode("utf-8")).hexdigest(),
    )


@dataclass(frozen=True)
class CommandFlags:
    """Options shared by the subcommands, mirroring OptimizerConfig defaults."""

    seed: int = 0
    restarts: int = 32
    tol: float = 1e-9
    cap_vertices: int = 256
    checks: tuple[str, ...] = ()
    d: int | None = None

    def optimizer(self) -> OptimizerConfig:
        return OptimizerConfig(restarts=self.restarts, tol=self.tol, seed=self.seed)


@dataclass(frozen=True)
class Report:
    """One command's deterministic result payload."""

    command: str
    input_digest: str
    result: dict
    version: str = __version__
    schema: str = REPORT_SCHEMA

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "command": self.command,
            "input_digest": self.input_digest,
            "result": self.result,
            "version": self.version,
        }


def _gamma_payload(gamma: GFMatrix) -> list[list[int]]:
    return gamma.to_lists()


def _run_analyze(doc: InputDocument, flags: CommandFlags) -> Report:
    spec = GroupSpec.from_generators(doc.generators)
    r = rank(spec.gamma)
    nullity = spec.k - r
    result = {
        "d": spec.d,
        "n_sites": doc.n_sites,
        "k": spec.k,
        "gamma": _gamma_payload(spec.gamma),
        "rank": r,
        "nullity": nullity,
        "clique_number": clique_number(spec),
        "sos_bound": sos_bound(spec),
        "sum_bound": real_str(sum_bound(spec)) if spec.d != 2 else None,
    }
    if spec.n_elements <= flags.cap_vertices:
        graph = commutation_graph(spec, flags.cap_vertices)
        result["graph"] = {
            "vertices": graph.n_vertices,
            "edges": graph.edge_count,
        }
    else:
        result["graph"] = None
    return Report("analyze", doc.digest, result)


def _run_canonical(doc: InputDocument, flags: CommandFlags) -> Report:
    spec = GroupSpec.from_generators(doc.generators)
    form = canonical_form(spec.gamma)
    result = {
        "d": spec.d,
        "k": spec.k,
        "gamma": _gamma_payload(spec.gamma),
        "O": _gamma_payload(form.O),
        "pair_blocks": form.m,
        "residual_dim": form.residual_dim,
        "rank": 2 * form.m,
    }
    return Report("canonical", doc.digest, result)


def _run_entanglement(doc: InputDocument, flags: CommandFlags) -> Report:
    if doc.mode == "group":
        raise InvalidMode("entanglement needs a stabilizer document")
    stab = Stabilizer(doc.generators)
    stab.validate()
    reports = stab.bipartition_reports()
    gme = stab.is_gme()
    if reports:
        ggm = min(r.gm_exact for r in reports)
    else:
        ggm = Fraction(0)
    result = {
        "d": stab.d,
        "n_sites": stab.n_sites,
        "k": stab.k,
        "is_gme": gme,
        "ggm": rational_dict(ggm),
        "bipartitions": [
            {
                "Q": list(r.Q.indices),
                "rank": r.rank_Q,
                "gm": rational_dict(r.gm_exact),
            }
            for r in reports
        ],
    }
    return Report("entanglement", doc.digest, result)


def _check_entry(name: str, deviation: float, tolerance: float, **extra) -> dict:
    entry = {"name": name}
    entry.update(extra)
    entry["deviation"] = real_str(deviation)
    entry["tolerance"] = real_str(tolerance)
    entry["pass"] = bool(deviation <= tolerance)
    return entry


def _run_verify(doc: InputDocument | None, flags: CommandFlags) -> Report:
    checks = list(flags.checks)
    if not checks:
        if doc is None:
            checks = ["swap", "lagrange", "theta"]
        else:
            checks = ["sos"]
            if doc.d != 2:
                checks.append("sum")
            if doc.mode == "stabilizer":
                checks.append("overlap")
    if doc is None and any(name in ("sos", "sum", "overlap") for name in checks):
        raise InvalidMode("sos/sum/overlap checks need an input file or --builtin")
    cfg = flags.optimizer()
    d_abstract = flags.d if flags.d is not None else (doc.d if doc else 3)
    entries: list[dict] = []
    for name in checks:
        if name == "swap":
            entries.append(
                _check_entry("swap", verify_swap_identity(d_abstract), SWAP_TOLERANCE, d=d_abstract)
            )
        elif name == "lagrange":
            got = lagrange_extremum(d_abstract, cfg)
            want = (1 + 1 / np.sqrt(d_abstract)) / 2
            entries.append(
                _check_entry("lagrange", abs(got - want), LAGRANGE_TOLERANCE, d=d_abstract)
            )
        elif name == "theta":
            vec = theta_state(d_abstract)
            total = 0.0
            for i in range(d_abstract):
                for j in range(d_abstract):
                    op = PauliOperator(d_abstract, (i,), (j,))
                    total += np.real(np.vdot(vec, dense_pauli(op) @ vec))
            want = d_abstract * (1 + np.sqrt(d_abstract)) / 2
            entries.append(
                _check_entry("theta", abs(total - want), BOUND_TOLERANCE, d=d_abstract)
            )
        elif name == "sos":
            spec = GroupSpec.from_generators(doc.generators)
            bound = float(sos_bound(spec))
            got = max_sos(spec, cfg)
            entries.append(
                _check_entry(
                    "sos",
                    abs(got - bound),
                    BOUND_TOLERANCE,
                    value=real_str(got),
                    bound=real_str(bound),
                )
            )
        elif name == "sum":
            spec = GroupSpec.from_generators(doc.generators)
            bound = sum_bound(spec)
            got = max_sum_eigenvalue(spec)
            entries.append(
                _check_entry(
                    "sum",
                    max(0.0, got - bound),
                    BOUND_TOLERANCE,
                    value=real_str(got),
                    bound=real_str(bound),
                )
            )
        elif name == "overlap":
            stab = Stabilizer(doc.generators)
            stab.validate()
            worst = 0.0
            for q in bipartitions(stab.n_sites):
                closed = stab.gm_measure(q).gm_value
                numeric = 1.0 - max_product_overlap(stab, q, cfg)
                worst = max(worst, abs(numeric - closed))
            entries.append(_check_entry("overlap", worst, OVERLAP_TOLERANCE))
        else:
            raise InvalidMode(f"unknown verify check {name!r}")
    result = {
        "checks": entries,
        "all_pass": all(e["pass"] for e in entries),
    }
    return Report("verify", doc.digest if doc else "", result)


def run_command(command: str, doc: InputDocument | None, flags: CommandFlags) -> Report:
    """Dispatch one subcommand over a parsed document."""
    if command == "analyze":
        return _run_analyze(doc, flags)
    if command == "canonical":
        return _run_canonical(doc, flags)
    if command == "entanglement":
        return _run_entanglement(doc, flags)
    if command == "verify":
        return _run_verify(doc, flags)
    raise InvalidMode(f"unknown command {command!r}")


def _text_lines(report: Report) -> list[str]:
    lines = [
        f"frustgraph {report.command} (schema {report.schema}, version {report.version})",
        f"input: {report.input_digest or '-'}",
    ]

    def emit(prefix: str, value) -> None:
        if isinstance(value, dict):
            if set(value) == {"num", "den", "real"}:
                lines.append(f"{prefix}: {value['num']}/{value['den']} = {value['real']}")
                return
            lines.append(f"{prefix}:")
            for key, sub in value.items():
                emit(f"  {key}", sub)
        elif isinstance(value, list) and value and isinstance(value[0], list):
            lines.append(f"{prefix}:")
            for row in value:
                lines.append("  " + " ".join(str(v) for v in row))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{prefix}:")
            for item in value:
                parts = ", ".join(
                    f"{k}={v['real'] if isinstance(v, dict) and 'real' in v else v}"
                    for k, v in item.items()
                )
                lines.append(f"  - {parts}")
        else:
            lines.append(f"{prefix}: {value}")

    for key, value in report.result.items():
        emit(key, value)
    return lines


def emit_report(report: Report, fmt: str = "text") -> str:
    """Deterministic serialization; field order is fixed by construction."""
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2)
    return "\n".join(_text_lines(report))


def _load_document(args) -> InputDocument | None:
    if getattr(args, "builtin", None):
        d = args.d if args.d is not None else 2
        n = args.n if args.n is not None else (5 if args.builtin == "five_qudit" else 3)
        return document_from_stabilizer(builtin_code(args.builtin, d, n))
    if getattr(args, "input", None):
        with open(args.input, encoding="utf-8") as handle:
            return parse_document(handle.read())
    return None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frustgraph",
        description="Commutation-graph bounds and stabilizer entanglement "
        "for generalized Pauli observables",
    )
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="input document path")
    common.add_argument("--builtin", choices=["five_qudit", "ghz"])
    common.add_argument("--d", type=int, default=None, help="dimension for --builtin or abstract checks")
    common.add_argument("--n", type=int, default=None, help="site count for --builtin")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--restarts", type=int, default=32)
    common.add_argument("--tol", type=float, default=1e-9)
    common.add_argument("--cap-vertices", type=int, default=256)
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common], help="generating graph, rank and bounds")
    sub.add_parser("canonical", parents=[common], help="symplectic normal form of the generating graph")
    sub.add_parser("entanglement", parents=[common], help="per-bipartition entanglement report")
    verify = sub.add_parser("verify", parents=[common], help="dense numeric cross-checks")
    for check in ("swap", "lagrange", "theta", "sos", "sum", "overlap"):
        verify.add_argument(f"--{check}", action="append_const", const=check, dest="checks")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = _load_document(args)
        flags = CommandFlags(
            seed=args.seed,
            restarts=args.restarts,
            tol=args.tol,
            cap_vertices=args.cap_vertices,
            checks=tuple(getattr(args, "checks", None) or ()),
            d=args.d,
        )
        if args.command != "verify" and doc is None:
            print("error[invalid-mode]: this command needs an input file or --builtin", file=sys.stderr)
            return 2
        report = run_command(args.command, doc, flags)
    except FrustGraphError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error[io]: {exc}", file=sys.stderr)
        return 2
    except Exception:
        traceback.print_exc()
        return 1
    print(emit_report(report, args.format))
    if args.command == "verify" and not report.result["all_pass"]:
        return 2
    return 0
