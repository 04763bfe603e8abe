"""Problem documents: JSON text describing a field, an algebra, modules and tasks.

Indices in documents are 1-based.  Scalars are ints in [0, p) or, over an
extension field, arrays of base-p digits, lowest degree first.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ClusterkitError
from .fields import is_prime, make_field
from .lie import LieAlgebra, Subalgebra
from .linalg import Matrix
from .lmodule import LieModule

COMMANDS = ("check", "cluster", "decompose", "amenable", "induce", "homcluster", "oracle-compare")


class DocumentError(ClusterkitError):
    """A document that cannot be turned into a problem.

    ``exit_code`` is 2 for syntax and structural errors, 3 when the data is
    well-formed but a subalgebra is not closed under the bracket.
    """

    def __init__(self, message, path="", line=None, column=None, kind="semantic", exit_code=2):
        super().__init__(message)
        self.message = message
        self.path = path
        self.line = line
        self.column = column
        self.kind = kind
        self.exit_code = exit_code

    def to_json(self) -> dict:
        out = {"kind": self.kind, "message": self.message}
        if self.path:
            out["path"] = self.path
        if self.line is not None:
            out["line"] = self.line
            out["column"] = self.column
        return out


@dataclass
class ModuleSpec:
    name: str
    module: LieModule
    over: str | None = None  # subalgebra name, None for the whole algebra


@dataclass
class ProblemDocument:
    algebra: LieAlgebra
    subalgebras: dict[str, Subalgebra] = field(default_factory=dict)
    modules: dict[str, ModuleSpec] = field(default_factory=dict)
    tasks: list[dict] = field(default_factory=list)

    @property
    def field(self):
        return self.algebra.field


def _fail(path, msg):
    raise DocumentError(f"{path}: {msg}" if path else msg, path=path)


def _obj(x, path):
    if not isinstance(x, dict):
        _fail(path, "expected an object")
    return x


def _list(x, path, length=None):
    if not isinstance(x, list):
        _fail(path, "expected an array")
    if length is not None and len(x) != length:
        _fail(path, f"expected {length} entries, got {len(x)}")
    return x


def _int(x, path, lo=None, hi=None):
    if isinstance(x, bool) or not isinstance(x, int):
        _fail(path, "expected an integer")
    if lo is not None and x < lo or hi is not None and x > hi:
        _fail(path, f"{x} out of range [{lo}, {hi}]")
    return x


class _Scalars:
    def __init__(self, F):
        self.F = F

    def scalar(self, x, path):
        F = self.F
        if isinstance(x, list):
            if not 1 <= len(x) <= F.k:
                _fail(path, f"coefficient tuple of length {len(x)} for GF({F.p}^{F.k})")
            for n, d in enumerate(x):
                _int(d, f"{path}[{n}]", 0, F.p - 1)
            return F.from_digits(x)
        return _int(x, path, 0, F.p - 1)

    def vector(self, x, n, path):
        return [self.scalar(a, f"{path}[{i}]") for i, a in enumerate(_list(x, path, n))]

    def matrix(self, x, n, path):
        return [self.vector(r, n, f"{path}[{i}]") for i, r in enumerate(_list(x, path, n))]


def _name(x, path):
    if not isinstance(x, str) or not x:
        _fail(path, "expected a non-empty name")
    return x


def _parse_algebra(doc, sc: _Scalars):
    A = _obj(doc.get("algebra"), "algebra")
    n = _int(A.get("dim"), "algebra.dim", 1)
    names = A.get("names", [f"e{i + 1}" for i in range(n)])
    names = [_name(s, f"algebra.names[{i}]") for i, s in enumerate(_list(names, "algebra.names", n))]
    if len(set(names)) != n:
        _fail("algebra.names", "names must be distinct")
    brackets = [[[0] * n for _ in range(n)] for _ in range(n)]
    seen = set()
    for t, entry in enumerate(_list(A.get("brackets", []), "algebra.brackets")):
        path = f"algebra.brackets[{t}]"
        i, j, vec = _list(entry, path, 3)
        i = _int(i, f"{path}[0]", 1, n) - 1
        j = _int(j, f"{path}[1]", 1, n) - 1
        if i == j:
            _fail(path, "a bracket [e_i, e_i] is zero and must not be given")
        if frozenset((i, j)) in seen:
            _fail(path, f"bracket of {names[i]} and {names[j]} given twice")
        seen.add(frozenset((i, j)))
        v = sc.vector(vec, n, f"{path}[2]")
        brackets[i][j] = v
        brackets[j][i] = [sc.F.neg(a) for a in v]
    pmap = sc.matrix(A.get("pmap"), n, "algebra.pmap")
    return LieAlgebra(sc.F, names, brackets, pmap)


def _parse_subalgebras(doc, L):
    out = {}
    subs = _obj(doc.get("subalgebras", {}), "subalgebras")
    for name in sorted(subs):
        path = f"subalgebras.{name}"
        idx = [_int(i, f"{path}[{t}]", 1, L.dim) - 1 for t, i in enumerate(_list(subs[name], path))]
        if not idx or len(set(idx)) != len(idx):
            _fail(path, "expected distinct basis indices")
        try:
            out[name] = Subalgebra(L, sorted(idx))
        except ValueError as e:
            raise DocumentError(f"{path}: {e}", path=path, kind="validation", exit_code=3)
    return out


def _parse_modules(doc, L, subs, sc: _Scalars):
    out = {}
    mods = _obj(doc.get("modules", {}), "modules")
    for name in sorted(mods):
        path = f"modules.{name}"
        m = _obj(mods[name], path)
        d = _int(m.get("dim"), f"{path}.dim", 1)
        over = m.get("over")
        if over is None:
            A = L
        else:
            if over not in subs:
                _fail(f"{path}.over", f"unknown subalgebra {over!r}")
            S = subs[over]
            if not S.is_p_closed():
                raise DocumentError(f"{path}.over: subalgebra {over!r} is not closed under the p-map",
                                    path=f"{path}.over", kind="validation", exit_code=3)
            A = S.algebra
        action = _list(m.get("action"), f"{path}.action", A.dim)
        mats = [sc.matrix(R, d, f"{path}.action[{i}]") for i, R in enumerate(action)]
        out[name] = ModuleSpec(name, LieModule(A, [Matrix(sc.F, R, d) for R in mats]), over)
    return out


def _parse_tasks(doc, subs, mods):
    tasks = []
    for t, task in enumerate(_list(doc.get("tasks", []), "tasks")):
        path = f"tasks[{t}]"
        task = _obj(task, path)
        cmd = task.get("command")
        if cmd not in COMMANDS:
            _fail(f"{path}.command", f"unknown command {cmd!r}")
        for key in ("module", "source", "target"):
            if key in task and task[key] not in mods:
                _fail(f"{path}.{key}", f"unknown module {task[key]!r}")
        for key in ("subalgebra", "wrt"):
            if key in task and task[key] not in subs:
                _fail(f"{path}.{key}", f"unknown subalgebra {task[key]!r}")
        if cmd == "homcluster":
            if "source" not in task:
                _fail(path, "homcluster needs a source module")
        elif cmd != "check" and "module" not in task:
            _fail(path, f"{cmd} needs a module")
        if cmd == "induce":
            if "subalgebra" not in task:
                _fail(path, "induce needs a subalgebra")
            _list(task.get("cobasis_values", []), f"{path}.cobasis_values")
        tasks.append(dict(task))
    return tasks


def parse(text: str) -> ProblemDocument:
    """Parse and structurally validate a problem document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e.msg}", line=e.lineno, column=e.colno, kind="syntax")
    doc = _obj(doc, "")
    fld = _obj(doc.get("field"), "field")
    p = _int(fld.get("p"), "field.p", 2)
    if not is_prime(p):
        _fail("field.p", f"{p} is not prime")
    m = _int(fld.get("m", 1), "field.m", 1)
    if p ** m > 1 << 20:
        _fail("field", f"GF({p}^{m}) is larger than supported")
    sc = _Scalars(make_field(p, m))
    L = _parse_algebra(doc, sc)
    subs = _parse_subalgebras(doc, L)
    mods = _parse_modules(doc, L, subs, sc)
    tasks = _parse_tasks(doc, subs, mods)
    return ProblemDocument(L, subs, mods, tasks)
