"""Session-file driven command line front end.

A session file declares one graded quotient presentation, optional named
modules over it, and a list of tasks; the CLI runs the tasks and emits
deterministic reports.  Format:

    # comment; blank lines ignored
    field Q                  |  field F 101
    ring x y:2               # name[:weight], weight 1 if omitted
    order grevlex            # optional: grevlex (default) or lex
    ideal x^2, x*y           # optional, comma separated generators

    module M                 # optional named modules
    gens 0, -1               # generator degrees, one line, required first
    rel x ; y^2              # one relation column; entries match gens; 0 = none
    end

    ring2 u v                # optional second presentation, used by the
    ideal2 u*v               # factorization-independence statement
    match u, v               # images of ring variables inside ring2
    matchinv x, y            # images of ring2 variables inside ring

    task hh M N              # tasks run in order; overrides: nmax=8
    task verify 4.1 S k nmax=6 window=-8:8 depth=12

Built-in module names: S (rank-one free in degree 0) and k (the residue
field).  Task kinds: hh, hh-homology, dualizing, smooth-check, and
verify <statement> where the statement identifiers are the opaque tokens
4.1, 4.1.2, 4.6, 4.7, 4.5, 4.2, 1.1, 1.2.

Output formats: json (versioned, byte deterministic, carries a sha256 of
the session bytes), csv (one row per side/n/degree/dim), table (aligned
text).  Exit status: 0 when every task ran and every verification passed,
1 when any verdict is fail or any task errored, 2 on malformed input.
"""

import argparse
import csv
import hashlib
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .algebra import AlgebraPresentation
from .derived import HilbertTable, VerificationReport
from .dualizing import (
    biduality_check,
    build_dualizing,
    factorization_independence,
    homothety_check,
    nonsmooth_certificate,
    smooth_diagnostics,
)
from .errors import (
    DualredError,
    NonHomogeneousInput,
    SessionError,
    TwistMismatch,
    UndefinedName,
)
from .field import field_from_descriptor
from .hochschild import hochschild_cohomology, hochschild_homology
from .modules import ModulePresentation, free_module, residue_field
from .parse import parse_poly
from .poly import PolyRing
from .reduction import (
    ambient_dual_reduction,
    classical_check,
    dualizing_via_tor,
    reduce_ext,
    verify_homology_reduction,
    verify_reduction,
)

SCHEMA_VERSION = 1

STATEMENTS = ("4.1", "4.1.2", "4.6", "4.7", "4.5", "4.2", "1.1", "1.2")

# statements taking (M, N); the rest take no module arguments except 1.2
_TWO_MODULE_STATEMENTS = ("4.1", "4.1.2", "4.6", "4.5", "4.2")

_RESERVED = ("S", "k")


class SessionTask:
    __slots__ = ("kind", "statement", "modules", "nmax", "window", "depth", "line")

    def __init__(self, kind, statement, modules, nmax, window, depth, line):
        self.kind = kind
        self.statement = statement
        self.modules = tuple(modules)
        self.nmax = nmax
        self.window = window
        self.depth = depth
        self.line = line

    def text(self):
        parts = [self.kind]
        if self.statement is not None:
            parts.append(self.statement)
        parts.extend(self.modules)
        if self.nmax is not None:
            parts.append("nmax=%d" % self.nmax)
        if self.window is not None:
            parts.append("window=%d:%d" % self.window)
        if self.depth is not None:
            parts.append("depth=%d" % self.depth)
        return " ".join(parts)


class SessionSpec:
    __slots__ = (
        "field",
        "algebra",
        "second",
        "fwd_images",
        "inv_images",
        "modules",
        "tasks",
        "text",
    )

    def __init__(self):
        self.field = None
        self.algebra = None
        self.second = None
        self.fwd_images = None
        self.inv_images = None
        self.modules = {}
        self.tasks = []
        self.text = ""

    def module(self, name, line=None):
        if name in self.modules:
            return self.modules[name]
        raise UndefinedName("undefined module %r" % name, line, 1)


def _split_list(text):
    return [p.strip() for p in text.split(",") if p.strip()]


def _parse_int(token, line, what):
    try:
        return int(token)
    except ValueError:
        raise SessionError("%s must be an integer, got %r" % (what, token), line, 1)


def _parse_window_token(token, line):
    parts = token.split(":")
    if len(parts) != 2:
        raise SessionError("window must look like LO:HI, got %r" % token, line, 1)
    lo = _parse_int(parts[0], line, "window low end")
    hi = _parse_int(parts[1], line, "window high end")
    if lo > hi:
        raise SessionError("empty window %d:%d" % (lo, hi), line, 1)
    return (lo, hi)


def _parse_ring_line(field, rest, line, what):
    names, weights = [], []
    for tok in rest.split():
        if ":" in tok:
            name, _, w = tok.partition(":")
            weights.append(_parse_int(w, line, "weight of %s" % name))
        else:
            name = tok
            weights.append(1)
        names.append(name)
    try:
        return PolyRing(field, names, weights)
    except ValueError as exc:
        raise SessionError("%s: %s" % (what, exc), line, 1)


def _reorder(ring, order, line):
    try:
        return PolyRing(ring.field, ring.names, ring.weights, order)
    except ValueError as exc:
        raise SessionError(str(exc), line, 1)


def _parse_polys(text, ring, line):
    out = []
    for chunk in _split_list(text):
        out.append(parse_poly(chunk, ring, line, 1))
    return out


def _positioned(exc, line):
    # same type, message prefixed with the session position
    return type(exc)("line %d: %s" % (line, exc))


def _make_algebra(ring, gens, line):
    try:
        return AlgebraPresentation(ring, gens)
    except NonHomogeneousInput as exc:
        raise _positioned(exc, line)
    except ValueError as exc:
        raise SessionError(str(exc), line, 1)


def parse_session(text):
    """Parse and validate a session; raises positioned errors."""
    spec = SessionSpec()
    spec.text = text
    ring = None
    ring2 = None
    ideal_line = None
    ideal2_gens = []
    order_seen = False
    module_open = None  # (name, gen_degrees, columns, line)

    def close_algebra():
        if spec.algebra is None and ring is not None:
            spec.algebra = AlgebraPresentation(ring, ())

    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.split("#", 1)[0].rstrip()
        if not stripped.strip():
            continue
        head, _, rest = stripped.strip().partition(" ")
        rest = rest.strip()

        if module_open is not None and head not in ("gens", "rel", "end"):
            raise SessionError(
                "module block %r is missing its end line" % module_open[0],
                lineno,
                1,
            )

        if head == "field":
            if spec.field is not None:
                raise SessionError("field declared twice", lineno, 1)
            try:
                spec.field = field_from_descriptor(rest.replace(" ", "_"))
            except ValueError as exc:
                raise SessionError(str(exc), lineno, 1)
        elif head == "ring":
            if spec.field is None:
                raise SessionError("field must precede ring", lineno, 1)
            if ring is not None:
                raise SessionError("ring declared twice", lineno, 1)
            ring = _parse_ring_line(spec.field, rest, lineno, "ring")
        elif head == "order":
            if ring is None or order_seen or spec.algebra is not None:
                raise SessionError("order must follow ring, once", lineno, 1)
            ring = _reorder(ring, rest, lineno)
            order_seen = True
        elif head == "ideal":
            if ring is None:
                raise SessionError("ideal must follow ring", lineno, 1)
            if spec.algebra is not None:
                raise SessionError("ideal declared twice", lineno, 1)
            try:
                gens = _parse_polys(rest, ring, lineno)
            except NonHomogeneousInput as exc:
                raise _positioned(exc, lineno)
            spec.algebra = _make_algebra(ring, gens, lineno)
            ideal_line = lineno
        elif head == "ring2":
            if ring is None:
                raise SessionError("ring2 must follow the first ring", lineno, 1)
            close_algebra()
            ring2 = _parse_ring_line(spec.field, rest, lineno, "ring2")
        elif head == "order2":
            if ring2 is None or spec.second is not None:
                raise SessionError("order2 must follow ring2, once", lineno, 1)
            ring2 = _reorder(ring2, rest, lineno)
        elif head == "ideal2":
            if ring2 is None:
                raise SessionError("ideal2 must follow ring2", lineno, 1)
            if spec.second is not None:
                raise SessionError("ideal2 declared twice", lineno, 1)
            try:
                ideal2_gens = _parse_polys(rest, ring2, lineno)
            except NonHomogeneousInput as exc:
                raise _positioned(exc, lineno)
            spec.second = _make_algebra(ring2, ideal2_gens, lineno)
        elif head in ("match", "matchinv"):
            if ring2 is None:
                raise SessionError("%s must follow ring2" % head, lineno, 1)
            if spec.second is None:
                spec.second = _make_algebra(ring2, ideal2_gens, lineno)
            close_algebra()
            src = ring if head == "match" else ring2
            dst = ring2 if head == "match" else ring
            imgs = _parse_polys(rest, dst, lineno)
            if len(imgs) != src.nvars:
                raise SessionError(
                    "%s needs %d images, got %d" % (head, src.nvars, len(imgs)),
                    lineno,
                    1,
                )
            if head == "match":
                spec.fwd_images = imgs
            else:
                spec.inv_images = imgs
        elif head == "module":
            if ring is None:
                raise SessionError("module must follow ring", lineno, 1)
            close_algebra()
            name = rest
            if not name or " " in name:
                raise SessionError("module needs one name", lineno, 1)
            if name in _RESERVED:
                raise SessionError("module name %r is reserved" % name, lineno, 1)
            if name in spec.modules:
                raise SessionError("module %r declared twice" % name, lineno, 1)
            module_open = (name, None, [], lineno)
        elif head == "gens":
            if module_open is None:
                raise SessionError("gens outside a module block", lineno, 1)
            if module_open[1] is not None:
                raise SessionError("gens declared twice", lineno, 1)
            degs = [
                _parse_int(t, lineno, "generator degree")
                for t in rest.replace(",", " ").split()
            ]
            module_open = (module_open[0], tuple(degs), module_open[2], module_open[3])
        elif head == "rel":
            if module_open is None:
                raise SessionError("rel outside a module block", lineno, 1)
            if module_open[1] is None:
                raise SessionError("gens must precede rel", lineno, 1)
            entries = [e.strip() for e in rest.split(";")]
            if len(entries) != len(module_open[1]):
                raise SessionError(
                    "relation has %d entries, module has %d generators"
                    % (len(entries), len(module_open[1])),
                    lineno,
                    1,
                )
            col = {}
            for pos, entry in enumerate(entries):
                if entry in ("", "0"):
                    continue
                try:
                    p = parse_poly(entry, spec.algebra.ring, lineno, 1)
                except NonHomogeneousInput as exc:
                    raise _positioned(exc, lineno)
                if not p.is_zero():
                    col[pos] = p
            module_open[2].append(col)
        elif head == "end":
            if module_open is None:
                raise SessionError("end outside a module block", lineno, 1)
            name, degs, cols, opened = module_open
            if degs is None:
                raise SessionError("module %r has no gens line" % name, opened, 1)
            try:
                spec.modules[name] = ModulePresentation(spec.algebra, degs, cols)
            except (NonHomogeneousInput, TwistMismatch) as exc:
                raise _positioned(exc, opened)
            module_open = None
        elif head == "task":
            if ring is None:
                raise SessionError("task must follow ring", lineno, 1)
            close_algebra()
            spec.tasks.append(_parse_task(rest, lineno))
        else:
            raise SessionError("unknown directive %r" % head, lineno, 1)

    if module_open is not None:
        raise SessionError(
            "module block %r is missing its end line" % module_open[0],
            module_open[3],
            1,
        )
    if spec.field is None or ring is None:
        raise SessionError("session needs field and ring lines", len(lines) or 1, 1)
    close_algebra()
    _validate_tasks(spec)
    _ = ideal_line
    return spec


def _parse_task(rest, lineno):
    toks = rest.split()
    if not toks:
        raise SessionError("empty task line", lineno, 1)
    kind = toks[0]
    rest_toks = toks[1:]
    statement = None
    if kind == "verify":
        if not rest_toks:
            raise SessionError("verify needs a statement identifier", lineno, 1)
        statement = rest_toks.pop(0)
        if statement not in STATEMENTS:
            raise SessionError(
                "unknown statement %r (expected one of %s)"
                % (statement, ", ".join(STATEMENTS)),
                lineno,
                1,
            )
    elif kind not in ("hh", "hh-homology", "dualizing", "smooth-check"):
        raise SessionError("unknown task kind %r" % kind, lineno, 1)

    modules, nmax, window, depth = [], None, None, None
    for tok in rest_toks:
        if "=" in tok:
            key, _, val = tok.partition("=")
            if key == "nmax":
                nmax = _parse_int(val, lineno, "nmax")
            elif key == "window":
                window = _parse_window_token(val, lineno)
            elif key == "depth":
                depth = _parse_int(val, lineno, "depth")
            else:
                raise SessionError("unknown task option %r" % key, lineno, 1)
        else:
            modules.append(tok)

    limit = _module_arity(kind, statement)
    if len(modules) > limit:
        raise SessionError(
            "task takes at most %d module names, got %d" % (limit, len(modules)),
            lineno,
            1,
        )
    return SessionTask(kind, statement, modules, nmax, window, depth, lineno)


def _module_arity(kind, statement):
    if kind in ("hh", "hh-homology"):
        return 2
    if kind == "verify":
        if statement in _TWO_MODULE_STATEMENTS:
            return 2
        if statement == "1.2":
            return 1
        return 0
    return 0


def _validate_tasks(spec):
    for task in spec.tasks:
        for name in task.modules:
            if name not in _RESERVED and name not in spec.modules:
                raise UndefinedName("undefined module %r" % name, task.line, 1)
        if task.kind == "verify" and task.statement == "1.1":
            if spec.second is None or spec.fwd_images is None or spec.inv_images is None:
                raise SessionError(
                    "statement 1.1 needs ring2/ideal2 and both match lines",
                    task.line,
                    1,
                )


def _resolve_module(spec, name):
    if name == "S":
        return free_module(spec.algebra, (0,))
    if name == "k":
        return residue_field(spec.algebra)
    return spec.module(name)


# -- task execution ------------------------------------------------------------


def _table_entries(table, label, n):
    return [
        {"label": label, "n": n, "degree": d, "dim": v}
        for d, v in table.nonzero_entries()
    ]


def _report_payload(report):
    lhs, rhs = [], []
    for label, n, lt, rt in report.rows:
        lhs.extend(_table_entries(lt, label, n))
        rhs.extend(_table_entries(rt, label, n))
    return {
        "statement": report.statement,
        "verdict": report.verdict,
        "first_discrepancy": report.first_discrepancy,
        "lhs": lhs,
        "rhs": rhs,
        "window": list(report.window),
        "truncation": dict(report.meta),
    }


def _tables_payload(tables, window, meta, statement=None, label="table"):
    lhs = []
    for n in sorted(tables):
        lhs.extend(_table_entries(tables[n], label, n))
    return {
        "statement": statement,
        "verdict": None,
        "first_discrepancy": None,
        "lhs": lhs,
        "rhs": [],
        "window": list(window),
        "truncation": dict(meta),
    }


def _resolve_knobs(task, defaults):
    nmax = task.nmax if task.nmax is not None else defaults["nmax"]
    window = task.window if task.window is not None else defaults["window"]
    if window is None:
        window = (-(nmax + 4), nmax + 4)
    depth = task.depth if task.depth is not None else defaults["depth"]
    return nmax, window, depth


def run_task(spec, task, defaults):
    """Execute one task; errors come back embedded, never raised."""
    nmax, window, depth = _resolve_knobs(task, defaults)
    try:
        payload = _dispatch(spec, task, nmax, window, depth)
    except DualredError as exc:
        payload = {
            "statement": None,
            "verdict": "error",
            "first_discrepancy": None,
            "lhs": [],
            "rhs": [],
            "labels": [],
            "window": list(window),
            "truncation": {},
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
    payload.setdefault("error", None)
    payload["task"] = task.text()
    return payload


def _dispatch(spec, task, nmax, window, depth):
    S = spec.algebra
    mods = [_resolve_module(spec, name) for name in task.modules]

    if task.kind == "hh":
        M = mods[0] if mods else free_module(S, (0,))
        N = mods[1] if len(mods) > 1 else M
        tabs = hochschild_cohomology(S, M, N, nmax, window, depth=depth)
        return _tables_payload(tabs, window, {"depth": depth or nmax + 4})
    if task.kind == "hh-homology":
        M = mods[0] if mods else free_module(S, (0,))
        N = mods[1] if len(mods) > 1 else M
        tabs = hochschild_homology(S, M, N, nmax, window, depth=depth)
        return _tables_payload(tabs, window, {"depth": depth or nmax + 4})
    if task.kind == "dualizing":
        D = build_dualizing(S, window)
        return _tables_payload(
            D.tables,
            window,
            {"concentrated_at": D.concentrated_at},
            statement="dualizing-homology",
        )
    if task.kind == "smooth-check":
        report = smooth_diagnostics(S, nmax, window, depth=depth)
        payload = _report_payload(report)
        cert = None
        witness = None
        if nmax > S.krull_dim():
            verdict = nonsmooth_certificate(S, nmax)
            cert = repr(verdict)
            witness = verdict.witness
        payload["truncation"]["certificate"] = cert
        payload["truncation"]["witness"] = witness
        return payload

    statement = task.statement
    if statement in _TWO_MODULE_STATEMENTS:
        M = mods[0] if mods else free_module(S, (0,))
        N = mods[1] if len(mods) > 1 else M
        op = {
            "4.1": verify_reduction,
            "4.1.2": reduce_ext,
            "4.6": verify_homology_reduction,
            "4.5": classical_check,
            "4.2": ambient_dual_reduction,
        }[statement]
        return _report_payload(op(S, M, N, nmax, window, depth=depth))
    if statement == "4.7":
        return _report_payload(dualizing_via_tor(S, nmax, window, depth=depth))
    if statement == "1.1":
        report = factorization_independence(
            S, spec.second, spec.fwd_images, spec.inv_images, window
        )
        return _report_payload(report)
    if statement == "1.2":
        D = build_dualizing(S, window)
        M = mods[0] if mods else free_module(S, (0,))
        ba = biduality_check(M, D, nmax, window, depth=depth)
        ha = homothety_check(D, nmax, window, depth=depth)
        combined = VerificationReport(
            "biduality-homothety",
            dict(ba.inputs),
            list(ba.rows) + [("homothety", n, l, r) for _, n, l, r in ha.rows],
            window,
            meta=dict(ba.meta),
        )
        return _report_payload(combined)
    raise SessionError("unhandled statement %r" % statement)


def _run_indexed(args):
    text, index, defaults = args
    spec = parse_session(text)
    return run_task(spec, spec.tasks[index], defaults)


def run_session(spec, defaults, jobs=1):
    """All tasks of a session, results in task order."""
    if jobs <= 1 or len(spec.tasks) <= 1:
        return [run_task(spec, t, defaults) for t in spec.tasks]
    work = [(spec.text, i, defaults) for i in range(len(spec.tasks))]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_indexed, work))


# -- output --------------------------------------------------------------------


def emit_report(results, fmt, session_hash):
    """Serialize results; json is byte deterministic."""
    if fmt == "json":
        payload = {
            "version": SCHEMA_VERSION,
            "session_hash": session_hash,
            "results": results,
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["task", "side", "label", "n", "degree", "dim"])
        for i, res in enumerate(results, start=1):
            for side in ("lhs", "rhs"):
                for cell in res[side]:
                    w.writerow(
                        [i, side, cell["label"], cell["n"], cell["degree"], cell["dim"]]
                    )
        return buf.getvalue()
    if fmt == "table":
        return _emit_table(results, session_hash)
    raise ValueError("unknown format %r" % fmt)


def _fmt_cells(cells):
    keyed = {}
    for cell in cells:
        keyed.setdefault((cell["label"], cell["n"]), []).append(
            (cell["degree"], cell["dim"])
        )
    return keyed


def _emit_table(results, session_hash):
    out = ["session %s" % session_hash]
    for i, res in enumerate(results, start=1):
        verdict = res["verdict"]
        out.append("task %d: %s" % (i, res["task"]))
        if res.get("error"):
            out.append(
                "  error %s: %s" % (res["error"]["type"], res["error"]["message"])
            )
            continue
        if res["statement"]:
            out.append("  statement: %s" % res["statement"])
        if verdict is not None:
            out.append("  verdict: %s" % verdict.upper())
        out.append("  window: %d..%d" % tuple(res["window"]))
        lhs, rhs = _fmt_cells(res["lhs"]), _fmt_cells(res["rhs"])
        for key in sorted(set(lhs) | set(rhs)):
            def side(d):
                return (
                    " ".join("%d:%d" % dv for dv in d[key]) if key in d else "-"
                )
            label, n = key
            if verdict is None:
                out.append("  [%s] n=%-3d %s" % (label, n, side(lhs)))
            else:
                out.append(
                    "  [%s] n=%-3d lhs %s | rhs %s" % (label, n, side(lhs), side(rhs))
                )
        disc = res.get("first_discrepancy")
        if disc:
            out.append(
                "  first discrepancy: n=%d degree=%d lhs=%d rhs=%d"
                % (disc["n"], disc["degree"], disc["lhs_dim"], disc["rhs_dim"])
            )
    return "\n".join(out) + "\n"


# -- entry point ---------------------------------------------------------------


def _window_flag(text):
    parts = text.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("window must look like LO:HI")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError("window bounds must be integers")
    if lo > hi:
        raise argparse.ArgumentTypeError("empty window")
    return (lo, hi)


def _add_common(p):
    p.add_argument("session", help="path to a session file")
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--window", type=_window_flag, default=None, metavar="LO:HI")
    p.add_argument("--depth", type=int, default=None)
    p.add_argument(
        "--format", choices=("json", "csv", "table"), default="table"
    )
    p.add_argument("--jobs", type=int, default=1)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="dualred",
        description="dualizing complexes and reduction checks for graded quotients",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    _add_common(sub.add_parser("run", help="run the session's own task list"))
    p = sub.add_parser("hh", help="Hochschild cohomology tables")
    _add_common(p)
    p.add_argument("left", nargs="?", default="S")
    p.add_argument("right", nargs="?", default="S")
    p = sub.add_parser("hh-homology", help="Hochschild homology tables")
    _add_common(p)
    p.add_argument("left", nargs="?", default="S")
    p.add_argument("right", nargs="?", default="S")
    _add_common(sub.add_parser("dualizing", help="dualizing homology tables"))
    _add_common(sub.add_parser("smooth-check", help="smoothness pattern report"))
    p = sub.add_parser("verify", help="run one verification statement")
    _add_common(p)
    p.add_argument("--statement", required=True, choices=STATEMENTS)
    p.add_argument("left", nargs="?", default=None)
    p.add_argument("right", nargs="?", default=None)
    return ap


def _synthesized_task(args):
    if args.command in ("hh", "hh-homology"):
        return SessionTask(
            args.command, None, (args.left, args.right), None, None, None, 0
        )
    if args.command in ("dualizing", "smooth-check"):
        return SessionTask(args.command, None, (), None, None, None, 0)
    mods = [m for m in (args.left, args.right) if m is not None]
    limit = _module_arity("verify", args.statement)
    if len(mods) > limit:
        raise SessionError(
            "statement %s takes at most %d module names" % (args.statement, limit)
        )
    return SessionTask("verify", args.statement, mods, None, None, None, 0)


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        raw = open(args.session, "rb").read()
    except OSError as exc:
        print("cannot read session: %s" % exc, file=sys.stderr)
        return 2
    session_hash = hashlib.sha256(raw).hexdigest()
    defaults = {"nmax": args.nmax, "window": args.window, "depth": args.depth}
    try:
        spec = parse_session(raw.decode("utf-8"))
        if args.command == "run":
            tasks = spec.tasks
        else:
            task = _synthesized_task(args)
            for name in task.modules:
                if name not in _RESERVED and name not in spec.modules:
                    raise UndefinedName("undefined module %r" % name)
            if task.kind == "verify":
                fake = SessionTask(
                    task.kind, task.statement, task.modules, None, None, None, 0
                )
                _validate_single(spec, fake)
            tasks = [task]
    except (SessionError, NonHomogeneousInput, TwistMismatch) as exc:
        print("session error: %s" % exc, file=sys.stderr)
        return 2
    if args.command == "run":
        results = run_session(spec, defaults, jobs=args.jobs)
    else:
        results = [run_task(spec, t, defaults) for t in tasks]
    sys.stdout.write(emit_report(results, args.format, session_hash))
    bad = any(r["verdict"] in ("fail", "error") for r in results)
    return 1 if bad else 0


def _validate_single(spec, task):
    if task.statement == "1.1" and (
        spec.second is None or spec.fwd_images is None or spec.inv_images is None
    ):
        raise SessionError("statement 1.1 needs ring2/ideal2 and both match lines")


if __name__ == "__main__":
    sys.exit(main())
