"""Batch front end: ``clusterkit <command> <input-file> [options]``.

Exit codes: 0 success, 2 parse error, 3 validation failure, 4 precondition
failure, 5 internal invariant violation.  Errors are written to stderr as a
one-line JSON object ``{"error": {...}}``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings

from .characters import Cluster
from .clusters import (cluster_decompose, cluster_in_field, compute_cluster, decompose_wrt,
                       is_amenable, splitting_field)
from .document import COMMANDS, DocumentError, ProblemDocument, parse
from .errors import EnumerationBoundError, InvariantViolation, PreconditionError
from .fields import make_field
from .induction import extend_character, induce
from .lie import validate_algebra
from .lmodule import hom_module, validate_module
from .oracle import DEFAULT_BOUND, cluster_by_factors

EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, EXIT_PRECONDITION, EXIT_INVARIANT = 0, 2, 3, 4, 5


class ValidationFailure(Exception):
    def __init__(self, violations):
        super().__init__("; ".join(violations))
        self.violations = violations


def field_info(F) -> dict:
    low_first = list(F.modulus)
    terms = []
    for e in range(len(low_first) - 1, -1, -1):
        a = low_first[e]
        if a:
            mono = "1" if e == 0 else ("t" if e == 1 else f"t^{e}")
            terms.append(mono if a == 1 and e else f"{a}" if e == 0 else f"{a}{mono}")
    return {"p": F.p, "degree": F.k, "order": F.q,
            "modulus": low_first, "modulus_text": " + ".join(terms) if F.k > 1 else "t"}


def field_name(F) -> str:
    return f"GF({F.q})"


def elem_text(F, a) -> str:
    """An element of GF(p^k) as a polynomial in t, highest degree first."""
    ds = F.digits(a)
    terms = []
    for e in range(len(ds) - 1, -1, -1):
        d = ds[e]
        if not d:
            continue
        if e == 0:
            terms.append(str(d))
        else:
            mono = "t" if e == 1 else f"t^{e}"
            terms.append(mono if d == 1 else f"{d}{mono}")
    return "+".join(terms) or "0"


class _Run:
    def __init__(self, doc: ProblemDocument, args):
        self.doc = doc
        self.args = args
        self.fields: dict = {}
        self.warnings: list[str] = []
        self.use(doc.field)

    def use(self, F):
        self.fields[field_name(F)] = F
        return field_name(F)

    # --- formatting helpers ---

    def scalar(self, F, a):
        return a if F.k == 1 else list(F.digits(a))

    def matrix(self, M):
        return [[self.scalar(M.field, a) for a in row] for row in M.rows]

    def cluster(self, C: Cluster, names):
        return {
            "field": self.use(C.field),
            "basis": list(names),
            "characters": C.to_json(),
            "orbits": [[C.chars.index(c) for c in O] for O in C.orbits()],
            "simple": len(C.orbits()) == 1,
        }

    def module(self, name):
        return self.doc.modules[name]

    def degree(self):
        return self.args.splitting_degree

    def _capture(self, fn, *a, **kw):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            out = fn(*a, **kw)
        for w in caught:
            msg = str(w.message)
            if msg not in self.warnings:
                self.warnings.append(msg)
        return out

    # --- commands ---

    def validate(self):
        L = self.doc.algebra
        out = {"algebra": validate_algebra(L).violations, "modules": {}}
        for name, entry in self.doc.modules.items():
            out["modules"][name] = validate_module(entry.module).violations
        return out

    def task_cluster(self, t):
        entry = self.module(t["module"])
        C = self._capture(compute_cluster, entry.module, None, self.degree())
        return {"module": entry.name, "cluster": self.cluster(C, entry.module.algebra.names)}

    def task_decompose(self, t):
        entry = self.module(t["module"])
        M = entry.module
        wrt = self.args.wrt or t.get("wrt")
        if wrt is not None:
            if wrt not in self.doc.subalgebras:
                raise DocumentError(f"unknown subalgebra {wrt!r}", path="--wrt")
            if entry.over is not None:
                raise PreconditionError("decomposition with respect to a subalgebra needs a module over the whole algebra")
            S = self.doc.subalgebras[wrt]
            dec = self._capture(decompose_wrt, M, S, self.degree())
            names = [M.algebra.names[i] for i in S.indices]
        else:
            dec = self._capture(cluster_decompose, M, self.degree())
            names = M.algebra.names
        parts = []
        for part in dec.parts:
            parts.append({
                "cluster": self.cluster(part.cluster, names),
                "dim": part.dim,
                "exponent": part.exponent,
                "basis": self.matrix(part.basis.T),
            })
        return {"module": entry.name, "wrt": wrt, "splitting_field": self.use(dec.field), "parts": parts}

    def task_amenable(self, t):
        entry = self.module(t["module"])
        rep = is_amenable(entry.module)
        F = entry.module.field
        return {
            "module": entry.name,
            "field": self.use(F),
            "amenable": rep.amenable,
            "min_polys": [[self.scalar(F, a) for a in m.coeffs] for m in rep.min_polys],
            "gcds": [[self.scalar(F, a) for a in g.coeffs] for g in rep.gcds],
        }

    def task_induce(self, t):
        entry = self.module(t["module"])
        S = self.doc.subalgebras[t["subalgebra"]]
        if entry.over != t["subalgebra"]:
            raise PreconditionError(f"module {entry.name!r} is not a module over {t['subalgebra']!r}")
        W = entry.module
        clW = self._capture(compute_cluster, W, None, self.degree())
        K = clW.field
        if len(clW.orbits()) != 1:
            raise PreconditionError(f"module {entry.name!r} has a cluster with {len(clW.orbits())} conjugacy classes; decompose it first")
        which = t.get("character", 0)
        if not isinstance(which, int) or not 0 <= which < len(clW):
            raise PreconditionError(f"character index {which!r} out of range")
        if self.args.alpha is not None or self.args.beta is not None:
            raw = [[self.args.alpha or 0, self.args.beta or 0]]
        else:
            raw = t.get("cobasis_values", [])
        values = []
        for v in raw:
            digits = v if isinstance(v, list) else [v]
            if len(digits) > K.k or any(not isinstance(d, int) or not 0 <= d < K.p for d in digits):
                raise PreconditionError(f"cobasis value {v!r} is not a digit tuple of {field_name(K)}")
            values.append(K.from_digits(digits))
        C = extend_character(clW.chars[which], values, S)
        method = t.get("method", "general")
        ind = induce(W, S, C, method=method)
        L = S.parent
        cob = S.cobasis
        labels = []
        for r, j in ind.labels:
            mono = " ".join(f"{L.names[i]}^{e}" for i, e in zip(cob, r) if e) or "1"
            labels.append({"exponents": list(r), "basis": j + 1, "label": f"{mono} (x) b{j + 1}"})
        return {
            "module": entry.name,
            "subalgebra": t["subalgebra"],
            "method": method,
            "cobasis": [L.names[i] for i in cob],
            "cluster": self.cluster(C, L.names),
            "dim": ind.dim,
            "labels": labels,
            "action": {L.names[i]: self.matrix(R) for i, R in enumerate(ind.module.action)},
        }

    def task_homcluster(self, t):
        V = self.module(t["source"])
        W = self.module(t.get("target", t["source"]))
        if V.module.algebra is not W.module.algebra:
            raise PreconditionError("source and target are modules over different algebras")
        H = hom_module(V.module, W.module)
        D = 1
        for X in (V.module, W.module, H):
            D = math.lcm(D, self._capture(splitting_field, X, None, self.degree()).k // X.field.k)
        F = V.module.field
        K = make_field(F.p, F.k * D)
        cV, cW, cH = (cluster_in_field(X, K) for X in (V.module, W.module, H))
        diffs = Cluster([b - a for a in cV for b in cW], K, F.q)
        names = V.module.algebra.names
        return {
            "source": V.name,
            "target": W.name,
            "dim": H.dim,
            "cluster": self.cluster(cH, names),
            "differences": self.cluster(diffs, names),
            "difference_law": cH.value_set() == diffs.value_set(),
        }

    def task_oracle_compare(self, t):
        entry = self.module(t["module"])
        M = entry.module
        bound = self.args.oracle_bound or DEFAULT_BOUND
        C = self._capture(compute_cluster, M, None, self.degree())
        O = self._capture(cluster_by_factors, M, bound, self.degree())
        names = M.algebra.names
        return {
            "module": entry.name,
            "bound": bound,
            "computed": self.cluster(C, names),
            "oracle": self.cluster(O, names),
            "agree": C.value_set() == O.value_set(),
        }

    def run(self, command):
        checks = self.validate()
        bad = [f"algebra: {v}" for v in checks["algebra"]]
        bad += [f"module {n}: {v}" for n, vs in checks["modules"].items() for v in vs]
        if bad:
            raise ValidationFailure(bad)
        results = []
        if command == "check":
            results.append({"algebra": list(self.doc.algebra.names),
                            "modules": {n: s.module.dim for n, s in self.doc.modules.items()},
                            "subalgebras": {n: [i + 1 for i in S.indices] for n, S in self.doc.subalgebras.items()},
                            "valid": True})
        else:
            handler = getattr(self, "task_" + command.replace("-", "_"))
            for n, t in enumerate(self.doc.tasks):
                if t["command"] != command:
                    continue
                try:
                    res = handler(t)
                except (PreconditionError, EnumerationBoundError, InvariantViolation) as e:
                    e.task = n
                    raise
                res = {"task": n, **res}
                if command == "oracle-compare" and not res["agree"]:
                    raise InvariantViolation(f"task {n}: computed cluster differs from the oracle")
                results.append(res)
        return {
            "command": command,
            "fields": {name: field_info(F) for name, F in sorted(self.fields.items(), key=lambda kv: (kv[1].p, kv[1].k))},
            "results": results,
            "warnings": list(self.warnings),
        }


def run(doc: ProblemDocument, command: str, args=None) -> dict:
    """Execute one command on a parsed document and return the report."""
    if args is None:
        args = build_parser().parse_args([command, "-"])
    return _Run(doc, args).run(command)


# --- human-readable output ---

def _char_text(F, values):
    return "(" + ", ".join(elem_text(F, F.from_digits(v)) for v in values) + ")"


def render(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    for name, info in report["fields"].items():
        lines.append(f"field {name}: modulus {info['modulus_text']}")
    for res in report["results"]:
        lines.append("")
        head = {k: v for k, v in res.items() if isinstance(v, (str, int, bool)) or v is None}
        lines.append("  ".join(f"{k}={v}" for k, v in head.items()))
        for key in ("cluster", "differences", "computed", "oracle"):
            if key in res:
                lines.extend(_render_cluster(key, res[key], report))
        for n, part in enumerate(res.get("parts", [])):
            lines.append(f"part {n}: dim {part['dim']}, exponent {part['exponent']}")
            lines.extend("  " + l for l in _render_cluster("cluster", part["cluster"], report))
            for v in part["basis"]:
                lines.append(f"    {v}")
        if "labels" in res:
            lines.append("basis: " + ", ".join(l["label"] for l in res["labels"]))
            for name, M in res["action"].items():
                lines.append(f"action of {name}:")
                for row in M:
                    lines.append("  " + " ".join(str(a) for a in row))
        if "min_polys" in res:
            info = report["fields"][res["field"]]
            F = make_field(info["p"], info["degree"])
            for m, g in zip(res["min_polys"], res["gcds"]):
                lines.append(f"min poly {_poly_text(F, m)}  gcd with derivative {_poly_text(F, g)}")
        if "modules" in res and isinstance(res["modules"], dict):
            for n, d in res["modules"].items():
                lines.append(f"module {n}: dim {d}")
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def _poly_text(F, coeffs):
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        a = F.from_digits(coeffs[e]) if isinstance(coeffs[e], list) else coeffs[e]
        if not a:
            continue
        c = elem_text(F, a)
        if e == 0:
            terms.append(c)
            continue
        mono = "t" if e == 1 else f"t^{e}"
        if a == 1:
            terms.append(mono)
        else:
            terms.append(f"({c}){mono}" if "+" in c else f"{c}{mono}")
    return " + ".join(terms) or "0"


def _render_cluster(key, cl, report):
    info = report["fields"][cl["field"]]
    F = make_field(info["p"], info["degree"])
    out = [f"{key} over {cl['field']} on ({', '.join(cl['basis'])}):"]
    for n, c in enumerate(cl["characters"]):
        out.append(f"  c{n + 1} = {_char_text(F, c)}")
    out.append(f"  classes: {cl['orbits']}  simple: {cl['simple']}")
    return out


# --- entry point ---

def build_parser():
    ap = argparse.ArgumentParser(prog="clusterkit", description="Character clusters of modules over restricted Lie algebras.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("input", help="problem document (JSON), or - for stdin")
    ap.add_argument("--wrt", metavar="NAME", help="decompose with respect to this subalgebra")
    ap.add_argument("--alpha", type=int, metavar="A", help="cobasis value A + B*t for induce")
    ap.add_argument("--beta", type=int, metavar="B")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--splitting-degree", type=int, metavar="D")
    ap.add_argument("--oracle-bound", type=int, metavar="N")
    return ap


def _error(code, kind, message, **extra):
    obj = {"error": {"code": code, "kind": kind, "message": message, **extra}}
    sys.stderr.write(json.dumps(obj, sort_keys=True) + "\n")
    return code


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK
    for opt in ("splitting_degree", "oracle_bound"):
        v = getattr(args, opt)
        if v is not None and v < 1:
            return _error(EXIT_PARSE, "usage", f"--{opt.replace('_', '-')} must be positive")
    try:
        if args.input == "-":
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as e:
        return _error(EXIT_PARSE, "io", str(e))
    try:
        doc = parse(text)
        report = run(doc, args.command, args)
    except DocumentError as e:
        return _error(e.exit_code, e.kind, e.message, **{k: v for k, v in e.to_json().items() if k not in ("kind", "message")})
    except ValidationFailure as e:
        return _error(EXIT_VALIDATION, "validation", str(e), violations=e.violations)
    except (PreconditionError, EnumerationBoundError) as e:
        return _error(EXIT_PRECONDITION, "precondition", str(e), **_task(e))
    except InvariantViolation as e:
        return _error(EXIT_INVARIANT, "invariant", str(e), **_task(e))
    except Exception as e:  # anything unexpected is an internal failure
        return _error(EXIT_INVARIANT, "internal", f"{type(e).__name__}: {e}")
    if args.json:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(render(report))
    return EXIT_OK


def _task(e):
    return {"task": e.task} if hasattr(e, "task") else {}


if __name__ == "__main__":
    sys.exit(main())
