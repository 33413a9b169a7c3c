"""Command line front end.

Input files are line oriented:

    field p=2                      or  field rational
    vertex 1
    arrow a: 1 -> 2
    relation a.b -1*c.d            paths compose left to right
    cap path=4
    weight a=1                     optional grading of arrows
    module S                       representation: dims, then one matrix per arrow
      dim 1 0
      a: [[1, 0]]
    end
    complex T                      complex of projectives
      term -1: 2 2
      term 0: 1
      entry -1 0 0: b                differential entry (degree, row, column)
      summand -1:0 0:0
    end

Exit status: 0 success, 1 a mathematical condition failed, 2 bad input.
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from . import admissible as adm
from . import algebra as alg
from . import ayoneda as ay
from . import ext as ex
from . import homotopy as ho
from . import linalg as la
from . import modcat as mc
from . import quotients as qu


class InputError(ValueError):
    pass


class ConditionFailed(Exception):
    def __init__(self, results):
        super().__init__("condition failed")
        self.results = results


class ParseError(InputError):
    def __init__(self, line, col, msg, path=None):
        self.line, self.col, self.msg, self.path = line, col, msg, path
        where = f"{path}:" if path else ""
        super().__init__(f"{where}{line}:{col}: {msg}")


# parsing


_NUM = re.compile(r"^[+-]?\d+(/\d+)?$")
_TERM = re.compile(r"^([+-]?)(?:(\d+(?:/\d+)?)\*)?([^\s*]+)$")


class AlgebraFile:
    def __init__(self):
        self.field = None
        self.vertices = []
        self.arrows = []
        self.relations = []
        self.cap = None
        self.weights = {}
        self.modules = {}
        self.complexes = {}
        self.positions = {}


def _col(raw, token):
    k = raw.find(token)
    return k + 1 if k >= 0 else 1


def parse_algebra_file(text, path=None):
    """Parse the line grammar above into an AlgebraFile (presentation still unbuilt)."""
    out = AlgebraFile()
    lines = text.splitlines()
    n = 0
    vindex = {}
    labels = {}

    def err(lineno, raw, token, msg):
        raise ParseError(lineno, _col(raw, token) if token else 1, msg, path)

    while n < len(lines):
        raw = lines[n]
        lineno = n + 1
        n += 1
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "field":
            try:
                out.field = la.Field.parse(rest)
            except (la.FieldError, ValueError) as e:
                err(lineno, raw, rest or head, str(e))
        elif head == "vertex":
            if not rest or " " in rest:
                err(lineno, raw, rest or head, "expected one vertex name")
            if rest in vindex:
                err(lineno, raw, rest, f"duplicate vertex {rest}")
            vindex[rest] = len(out.vertices)
            out.vertices.append(rest)
        elif head == "arrow":
            m = re.match(r"^([A-Za-z_][\w']*)\s*:\s*(\S+)\s*->\s*(\S+)$", rest)
            if not m:
                err(lineno, raw, rest or head, "expected 'arrow <label>: <src> -> <dst>'")
            label, s, t = m.groups()
            if label in labels:
                err(lineno, raw, label, f"duplicate arrow {label}")
            for v in (s, t):
                if v not in vindex:
                    err(lineno, raw, v, f"unknown vertex {v}")
            labels[label] = (vindex[s], vindex[t])
            out.arrows.append((label, vindex[s], vindex[t]))
        elif head == "relation":
            rel = _parse_combination(rest, raw, lineno, path, labels)
            for c, p in rel:
                for a, b in zip(p, p[1:]):
                    if labels[a][1] != labels[b][0]:
                        err(lineno, raw, ".".join(p), f"path {'.'.join(p)} is not composable")
            out.relations.append(rel)
            out.positions[len(out.relations) - 1] = lineno
        elif head == "cap":
            m = re.match(r"^path\s*=\s*(\d+)$", rest)
            if not m or int(m.group(1)) < 1:
                err(lineno, raw, rest or head, "expected 'cap path=<positive n>'")
            out.cap = int(m.group(1))
        elif head == "weight":
            for tok in rest.split():
                m = re.match(r"^([^=\s]+)=(\d+)$", tok)
                if not m or m.group(1) not in labels:
                    err(lineno, raw, tok, "expected '<arrow>=<natural>'")
                out.weights[m.group(1)] = int(m.group(2))
        elif head in ("module", "complex"):
            name = rest
            if not name or " " in name:
                err(lineno, raw, head, f"expected '{head} <name>'")
            body = []
            while True:
                if n >= len(lines):
                    err(lineno, raw, head, f"{head} {name} is missing 'end'")
                r2 = lines[n]
                n += 1
                l2 = r2.split("#", 1)[0].strip()
                if l2 == "end":
                    break
                if l2:
                    body.append((n, r2, l2))
            if head == "module":
                out.modules[name] = _parse_module_block(body, path, labels, vindex)
            else:
                out.complexes[name] = _parse_complex_block(body, path, labels, vindex)
        else:
            err(lineno, raw, head, f"unknown keyword {head!r}")
    if not out.vertices:
        raise ParseError(1, 1, "no vertices declared", path)
    return out


def _parse_combination(text, raw, lineno, path, labels, vertices=None):
    terms = []
    tokens = text.replace("+ ", "+").replace("- ", "-").split()
    if not tokens:
        raise ParseError(lineno, 1, "empty linear combination", path)
    for tok in tokens:
        m = _TERM.match(tok)
        if not m:
            raise ParseError(lineno, _col(raw, tok), f"bad term {tok!r}", path)
        sign, coeff, p = m.groups()
        c = Fraction(coeff) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        if _NUM.match(p):
            raise ParseError(lineno, _col(raw, tok), f"term {tok!r} has no path", path)
        parts = tuple(p.split("."))
        if vertices is not None and len(parts) == 1 and parts[0] in vertices:
            terms.append((c, ("@" + parts[0],)))
            continue
        for a in parts:
            if a not in labels:
                raise ParseError(lineno, _col(raw, a), f"unknown arrow {a}", path)
        terms.append((c, parts))
    return terms


def _parse_matrix(text, lineno, raw, path):
    try:
        m = json.loads(text.replace("'", '"'))
    except json.JSONDecodeError:
        m = None
    if not isinstance(m, list) or any(not isinstance(r, list) for r in m):
        raise ParseError(lineno, _col(raw, text), "expected a matrix like [[1, 0], [0, 1]]", path)
    out = []
    for r in m:
        row = []
        for x in r:
            try:
                row.append(Fraction(str(x)))
            except ValueError:
                raise ParseError(lineno, _col(raw, str(x)), f"bad entry {x!r}", path) from None
        out.append(row)
    return out


def _parse_module_block(body, path, labels, vindex):
    dims, maps = None, {}
    for lineno, raw, line in body:
        if line.startswith("dim"):
            toks = line.split()[1:]
            if len(toks) != len(vindex) or not all(t.isdigit() for t in toks):
                raise ParseError(lineno, 1, "expected 'dim' followed by one natural per vertex", path)
            dims = [int(t) for t in toks]
            continue
        label, sep, mat = line.partition(":")
        label = label.strip()
        if not sep or label not in labels:
            raise ParseError(lineno, _col(raw, label), f"unknown arrow {label}", path)
        maps[label] = (_parse_matrix(mat.strip(), lineno, raw, path), lineno)
    if dims is None:
        raise ParseError(body[0][0] if body else 1, 1, "module block needs a 'dim' line", path)
    return dims, maps


def _parse_complex_block(body, path, labels, vindex):
    terms, entries, summands = {}, [], []
    for lineno, raw, line in body:
        toks = line.split()
        if toks[0] == "term":
            m = re.match(r"^term\s+(-?\d+)\s*:(.*)$", line)
            if not m:
                raise ParseError(lineno, 1, "expected 'term <degree>: <vertices>'", path)
            vs = m.group(2).split()
            for v in vs:
                if v not in vindex:
                    raise ParseError(lineno, _col(raw, v), f"unknown vertex {v}", path)
            terms[int(m.group(1))] = [vindex[v] for v in vs]
        elif toks[0] == "entry":
            m = re.match(r"^entry\s+(-?\d+)\s+(\d+)\s+(\d+)\s*:(.*)$", line)
            if not m:
                raise ParseError(lineno, 1, "expected 'entry <degree> <row> <col>: <element>'", path)
            comb = _parse_combination(m.group(4).strip(), raw, lineno, path, labels, vindex)
            entries.append((int(m.group(1)), int(m.group(2)), int(m.group(3)), comb, lineno))
        elif toks[0] == "summand":
            s = {}
            for tok in toks[1:]:
                m = re.match(r"^(-?\d+):([\d,]+)$", tok)
                if not m:
                    raise ParseError(lineno, _col(raw, tok), "expected '<degree>:<positions>'", path)
                s[int(m.group(1))] = [int(x) for x in m.group(2).split(",")]
            summands.append(s)
        else:
            raise ParseError(lineno, _col(raw, toks[0]), f"unknown keyword {toks[0]!r}", path)
    return terms, entries, summands or None


# building objects


class Context:
    def __init__(self, args):
        self.args = args
        self.seed = getattr(args, "seed", 0) or 0
        self.warnings = []
        self._algebras = {}

    def field_override(self):
        f = getattr(self.args, "field", None)
        if f is None:
            return None
        try:
            return la.Field.parse(f)
        except (la.FieldError, ValueError) as e:
            raise InputError(str(e)) from None

    def load(self, path):
        if path in self._algebras:
            return self._algebras[path]
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(f"cannot read {path}: {e.strerror}") from None
        parsed = parse_algebra_file(text, path)
        field = self.field_override() or parsed.field
        if field is None:
            raise InputError(f"{path}: no field given (use 'field' or --field)")
        cap = getattr(self.args, "cap_path", None) or parsed.cap
        if cap is None:
            raise InputError(f"{path}: no path cap given (use 'cap path=<n>' or --cap-path)")
        Q = alg.Quiver(len(parsed.vertices), parsed.arrows)
        rels = [[(field(c), p) for c, p in r] for r in parsed.relations]
        P = alg.PathPresentation(Q, rels, field, cap, vertex_names=parsed.vertices)
        weights = None
        if parsed.weights:
            weights = {l: parsed.weights.get(l, 0) for l, _, _ in parsed.arrows}
        try:
            A = alg.from_presentation(P, weights)
        except alg.AlgebraError as e:
            raise InputError(f"{path}: {e}") from None
        A.name = path
        A.source_file = parsed
        self._algebras[path] = A
        return A

    def algebra(self, which="algebra"):
        path = getattr(self.args, which, None)
        if not path:
            raise InputError(f"--{which.replace('_', '-')} is required")
        return self.load(path)

    def vertex(self, A, name):
        names = A.vertex_names
        if name in names:
            return names.index(name)
        raise InputError(f"unknown vertex {name}")

    def vertices(self, A, text):
        if text is None:
            raise InputError("a vertex list is required")
        return [self.vertex(A, v.strip()) for v in str(text).split(",") if v.strip()]

    # modules

    def modules(self, A, text):
        """Summands named by a '+'-separated module expression."""
        if not text:
            raise InputError("a module expression is required")
        out = []
        for part in text.split("+"):
            out.extend(self._module_term(A, part.strip()))
        return out

    def module(self, A, text):
        mods = self.modules(A, text)
        if len(mods) == 1:
            return mods[0]
        S, _, _ = mc.direct_sum(mods)
        S.name = text
        return S

    def _module_term(self, A, term):
        kind, _, arg = term.partition(":")
        first = A.vertex_names[0]
        if kind in ("A", "regular"):
            return [mc.projective_module(A, v) for v in range(A.num_vertices)]
        if kind in ("simple", "proj", "inj"):
            v = self.vertex(A, arg or first)
            M = {"simple": mc.simple_module, "proj": mc.projective_module,
                 "inj": mc.injective_module}[kind](A, v)
            if kind == "simple":
                M.name = f"S{A.vertex_names[v]}"
            return [M]
        if kind == "omega":
            inner = self.module(A, arg)
            K = ex.omega_module(inner)
            K.name = f"Omega({inner.name})"
            return [K]
        if kind == "top":
            # A / J^k as a left module
            try:
                k = int(arg)
            except ValueError:
                raise InputError(f"bad module term {term!r}") from None
            R = mc.regular_module(A)
            Q, _ = mc.quotient_module(R, A.radical_power(k))
            Q.name = f"A/J^{k}"
            return [Q]
        parsed = A.source_file
        if term in parsed.modules:
            dims, maps = parsed.modules[term]
            try:
                M = mc.module_from_representation(A, dims, {l: m for l, (m, _) in maps.items()},
                                                  name=term)
            except mc.ModuleError as e:
                raise InputError(f"module {term}: {e}") from None
            return [M]
        raise InputError(f"unknown module {term!r}")

    # complexes

    def complex(self, A, text):
        if not text:
            raise InputError("a complex is required")
        kind, _, arg = text.partition(":")
        if kind == "stalk":
            return ho.regular_stalk(A, int(arg) if arg else 0)
        if kind == "idem":
            try:
                return qu.idempotent_tilting(A, self.vertices(A, arg), self.seed)
            except qu.QuotientError as e:
                raise ConditionFailed({"error": str(e)}) from None
        parsed = A.source_file
        if text not in parsed.complexes:
            raise InputError(f"unknown complex {text!r}")
        terms, entries, summands = parsed.complexes[text]
        f = A.field
        diffs = {d: [[A.zero() for _ in terms.get(d + 1, [])] for _ in vs]
                 for d, vs in terms.items() if d + 1 in terms}
        for d, s, t, comb, lineno in entries:
            if d not in diffs or s >= len(terms[d]) or t >= len(terms[d + 1]):
                raise InputError(f"line {lineno}: entry ({d},{s},{t}) out of range")
            x = A.zero()
            for c, p in comb:
                if p[0].startswith("@"):
                    y = A.idempotents[self.vertex(A, p[0][1:])]
                else:
                    y = alg.evaluate_path(A, p)
                x = la.vadd(x, la.vscale(y, f(c), f), f)
            src, tgt = terms[d][s], terms[d + 1][t]
            if A.mul(A.mul(A.idempotents[src], x), A.idempotents[tgt]) != x:
                raise InputError(f"line {lineno}: entry does not lie in e_{A.vertex_names[src]} A "
                                 f"e_{A.vertex_names[tgt]}")
            diffs[d][s][t] = x
        X = ho.ProjComplex(A, terms, diffs, summands, name=text)
        try:
            X.check()
        except ho.ComplexError as e:
            raise InputError(f"complex {text}: {e}") from None
        return X

    def ideal(self, A, text):
        kind, _, arg = (text or "").partition(":")
        if kind == "socle":
            return mc.socle_ideal(A, self.vertices(A, arg))
        if kind == "nabla":
            return mc.nabla_ideal(A, self.vertices(A, arg))
        if kind == "radpow":
            return alg.AlgebraIdeal(A, A.radical_power(int(arg)))
        if kind == "zero":
            return alg.AlgebraIdeal(A, [])
        raise InputError(f"unknown ideal {text!r} (socle:, nabla:, radpow:, zero)")

    def phi(self):
        text = getattr(self.args, "phi", None)
        if text is None:
            raise InputError("--phi is required")
        try:
            return adm.parse_degree_set(text)
        except ValueError as e:
            raise InputError(str(e)) from None


# report helpers


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, float):
        raise TypeError("floating point value in report")
    if isinstance(x, (adm.DegreeSet,)):
        return list(x)
    return x


def _complex_summary(X):
    return {"terms": {str(d): [X.algebra.vertex_names[v] for v in vs]
                      for d, vs in sorted(X.terms.items())},
            "summands": len(X.summands),
            "radical": X.is_radical()}


def _presentation_text(P):
    lines = [f"field {P.field.describe()}"]
    lines += [f"vertex {v}" for v in P.vertex_names]
    for l, s, t in P.quiver.arrows:
        lines.append(f"arrow {l}: {P.vertex_names[s]} -> {P.vertex_names[t]}")
    for rel in P.relations:
        toks = []
        for c, p in rel:
            c = Fraction(c)
            if P.field.p is not None and c > P.field.p // 2:
                c = c - P.field.p
            path = ".".join(p)
            toks.append(path if c == 1 else f"-{path}" if c == -1 else f"{c}*{path}")
        lines.append("relation " + " ".join(toks))
    lines.append(f"cap path={P.nilpotency_cap}")
    return "\n".join(lines) + "\n"


def _report_info(A):
    rep = alg.invariant_report(A).as_dict()
    rep["selfinjective"] = alg.is_selfinjective(A)
    rep["vertices"] = list(A.vertex_names)
    return rep


# commands


def cmd_admissible(ctx, a):
    if a.action == "check":
        S = adm.parse_degree_set(a.set)
        r = adm.is_admissible(S)
        res = {"set": list(S), "admissible": r.admissible, "witness": r.witness}
        if not r.admissible:
            raise ConditionFailed(res)
        return res
    if a.action == "family":
        m = None if a.m in ("inf", "infinity") else int(a.m)
        S = adm.phi_family(int(a.n), m if m is not None else float("inf"), a.cap_degree)
        r = adm.is_admissible(S)
        return {"set": list(S), "admissible": r.admissible, "witness": r.witness}
    S1 = adm.parse_degree_set(a.set)
    S2 = adm.parse_degree_set(a.other) if a.other else None
    r = adm.set_ops(S1, S2, a.op, a.m_value)
    return {"result": list(r.result), "admissible": r.admissible_report.admissible,
            "witness": r.admissible_report.witness}


def cmd_algebra(ctx, a):
    A = ctx.algebra()
    if a.action == "info":
        res = _report_info(A)
        res["presentation"] = {"arrows": len(A.presentation.quiver.arrows),
                               "relations": len(A.presentation.relations)}
        if A.path_weights is not None:
            res["graded_dims"] = alg.graded_dims(A)
        return res
    if a.action == "present":
        P = alg.presentation_of(A)
        return {"arrows": [[l, A.vertex_names[s], A.vertex_names[t]] for l, s, t in P.quiver.arrows],
                "relations": len(P.relations), "text": _presentation_text(P)}
    if a.action == "quotient":
        I = ctx.ideal(A, a.ideal)
        Q = alg.quotient_by_ideal(A, I)
        res = _report_info(Q)
        res["dim_ideal"] = I.dim
        return res
    cap = a.cap_resolution or 8
    g = alg.global_dimension(A, cap)
    return {"global_dimension": g}


def cmd_module(ctx, a):
    A = ctx.algebra()
    if a.action == "hom":
        M, N = ctx.module(A, a.source), ctx.module(A, a.target)
        return {"source": M.dim_vector(), "target": N.dim_vector(), "dim_hom": mc.hom_dim(M, N)}
    if a.action == "nustable":
        E = mc.max_nu_stable(A, ctx.seed)
        pi = mc.projective_injective_map(A, ctx.seed)
        verts = sorted({v for v in E.summand_vertices})
        return {"nu_stable_vertices": [A.vertex_names[v] for v in verts],
                "nu_permutation": [A.vertex_names[w] if w is not None else None for w in pi]}
    M = ctx.module(A, a.module)
    if a.action == "socle":
        d = mc.socle_radical_top(M)
        return {"module": M.dim_vector(), "socle": d["socle"].dim_vector(),
                "radical": d["radical"].dim_vector(), "top": d["top"].dim_vector()}
    if a.action == "syzygy":
        out = []
        X = M
        for _ in range(a.times):
            X = mc.syzygy(X)
            out.append(X.dim_vector())
        return {"module": M.dim_vector(), "syzygies": out,
                "last_is_projective": mc.is_projective(X)}
    parts = mc.decompose(M, ctx.seed)
    return {"module": M.dim_vector(), "summands": [X.dim_vector() for X, _, _ in parts]}


def cmd_complex(ctx, a):
    A = ctx.algebra()
    X = ctx.complex(A, a.complex)
    if a.action == "normalize":
        N = ho.normalize_radical(X)
        return {"before": _complex_summary(X), "after": _complex_summary(N)}
    if a.action == "homk":
        Y = ctx.complex(A, a.target) if a.target else X
        H = ho.HomK(X, Y, a.shift)
        return {"shift": a.shift, "dim": H.dim}
    if a.action == "end":
        E = ho.end_algebra_of_complex(X)
        res = {"complex": _complex_summary(X), "dim": E.dim}
        try:
            res["invariants"] = alg.invariant_report(E).as_dict()
        except (alg.AlgebraError, ValueError) as e:
            ctx.warnings.append(f"invariants unavailable: {e}")
        return res
    prov = getattr(X, "provenance", a.provenance)
    r = ho.tilting_report(X, prov)
    res = {"complex": _complex_summary(X), "tilting": r.as_dict()}
    if not r.verdict:
        raise ConditionFailed(res)
    return res


def cmd_ext(ctx, a):
    A = ctx.algebra()
    M = ctx.module(A, a.module)
    cap = a.cap_degree or 4
    if a.action == "table":
        N = ctx.module(A, a.target) if a.target else M
        return {"dims": {str(i): ex.ext_space(M, N, i, cap).dim for i in range(cap + 1)}}
    if a.action == "product":
        i, j = a.i, a.j
        S = ex.ext_group(M, M, i, i + j)
        T = ex.ext_group(M, M, j, i + j)
        table = [[ex.yoneda_product(f, g).coordinates for g in T] for f in S]
        return {"i": i, "j": j, "dim_i": len(S), "dim_j": len(T),
                "dim_target": ex.ext_space(M, M, i + j, i + j).dim, "products": table}
    out = []
    for f in ex.ext_group(M, M, a.i, a.i + 1):
        t = ex.syzygy_transport(f)
        out.append({"source": f.coordinates, "image": t.coordinates})
    return {"degree": a.i, "transport": out}


def cmd_ayoneda(ctx, a):
    A = ctx.algebra()
    phi = ctx.phi()
    cap = a.cap_degree
    if a.action == "verify":
        X = ctx.module(A, a.module)
        try:
            r = ay.verify_shift_instance(A, X, phi, cap, ctx.seed)
        except ay.AYError as e:
            raise ConditionFailed({"error": str(e)}) from None
        res = r.as_dict()
        if not r.verdict:
            raise ConditionFailed(res)
        return res
    mods = ctx.modules(A, a.module)
    if phi.max() is None:
        raise InputError("Phi must be finite or capped")
    E = ay.build_ay_algebra(A, mods, phi, cap)
    rep = ay.check_associativity(E)
    res = {"phi": list(phi), "dim": E.dim, "degree_dims": E.degree_dims(),
           "summands": [M.name or str(k + 1) for k, M in enumerate(mods)],
           "associative": rep["associative"], "witness_degrees": rep["degrees"]}
    if a.action == "assoc":
        if not rep["associative"]:
            raise ConditionFailed(res)
        return res
    if rep["associative"]:
        res["invariants"] = alg.invariant_report(E.algebra()).as_dict()
    return res


def cmd_verify(ctx, a):
    a.action = "verify"
    return cmd_ayoneda(ctx, a)


def cmd_tilt(ctx, a):
    A = ctx.algebra()
    try:
        T = qu.idempotent_tilting(A, ctx.vertices(A, a.e), ctx.seed)
    except qu.QuotientError as e:
        raise ConditionFailed({"error": str(e)}) from None
    r = ho.tilting_report(T, "by-construction")
    E = ho.end_algebra_of_complex(T)
    return {"complex": _complex_summary(T), "tilting": r.as_dict(), "end_dim": E.dim,
            "end_cartan": alg.cartan_matrix(E)}


def _pair_result(r):
    d = r.as_dict()
    if not r.verdict:
        raise ConditionFailed(d)
    return d


def cmd_quot(ctx, a):
    A = ctx.algebra()
    try:
        if a.action == "nabla":
            return _pair_result(qu.nabla_quotient_pair(A, ctx.vertices(A, a.e), ctx.seed))
        T = ctx.complex(A, a.complex)
        if a.action == "socle":
            return _pair_result(qu.socle_quotient_pair(A, T, ctx.vertices(A, a.vertices), ctx.seed))
        return _pair_result(qu.quotient_pair_check(A, T, ctx.ideal(A, a.ideal)))
    except (qu.QuotientError, mc.ModuleError) as e:
        raise ConditionFailed({"error": str(e), "status": "unknown"}) from None


def cmd_invariants(ctx, a):
    A = ctx.algebra()
    B = ctx.algebra("other")
    r1, r2 = alg.invariant_report(A), alg.invariant_report(B)
    res = alg.compare_reports(r1, r2)
    res["left"], res["right"] = r1.as_dict(), r2.as_dict()
    if not res["consistent"]:
        raise ConditionFailed(res)
    return res


# argument parsing


def _common(p):
    p.add_argument("--algebra", help="algebra file")
    p.add_argument("--field", help="override the field: p=<prime> or rational")
    p.add_argument("--cap-path", type=int, dest="cap_path")
    p.add_argument("--cap-resolution", type=int, dest="cap_resolution")
    p.add_argument("--cap-degree", type=int, dest="cap_degree")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser():
    top = argparse.ArgumentParser(prog="artifact", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("admissible")
    p.add_argument("action", choices=["check", "family", "ops"])
    p.add_argument("set", nargs="?")
    p.add_argument("other", nargs="?")
    p.add_argument("--n")
    p.add_argument("--m")
    p.add_argument("--op", default="intersect", choices=["intersect", "scale", "power"])
    p.add_argument("--m-value", type=int, dest="m_value")
    _common(p)
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("algebra")
    p.add_argument("action", choices=["info", "present", "quotient", "gldim"])
    p.add_argument("--ideal")
    _common(p)
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("module")
    p.add_argument("action", choices=["hom", "socle", "syzygy", "decompose", "nustable"])
    p.add_argument("--module")
    p.add_argument("--source")
    p.add_argument("--target")
    p.add_argument("--times", type=int, default=1)
    _common(p)
    p.set_defaults(func=cmd_module)

    p = sub.add_parser("complex")
    p.add_argument("action", choices=["normalize", "homk", "end", "tilt-report"])
    p.add_argument("--complex", required=True)
    p.add_argument("--target")
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--provenance", default="unknown", choices=["unknown", "by-construction"])
    _common(p)
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("ext")
    p.add_argument("action", choices=["table", "product", "transport"])
    p.add_argument("--module", required=True)
    p.add_argument("--target")
    p.add_argument("--i", type=int, default=1)
    p.add_argument("--j", type=int, default=1)
    _common(p)
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("ayoneda")
    p.add_argument("action", choices=["build", "assoc", "verify"])
    p.add_argument("--module", required=True)
    p.add_argument("--phi")
    _common(p)
    p.set_defaults(func=cmd_ayoneda)

    p = sub.add_parser("verify")
    p.add_argument("what", choices=["shift-instance"])
    p.add_argument("--module", required=True)
    p.add_argument("--phi")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tilt")
    p.add_argument("action", choices=["idem"])
    p.add_argument("--e", required=True)
    _common(p)
    p.set_defaults(func=cmd_tilt)

    p = sub.add_parser("quot")
    p.add_argument("action", choices=["socle", "nabla", "check"])
    p.add_argument("--e")
    p.add_argument("--complex")
    p.add_argument("--vertices")
    p.add_argument("--ideal")
    _common(p)
    p.set_defaults(func=cmd_quot)

    p = sub.add_parser("invariants")
    p.add_argument("action", choices=["compare"])
    p.add_argument("--other", required=True)
    _common(p)
    p.set_defaults(func=cmd_invariants)
    return top


def _render_plain(doc):
    lines = [f"command: {doc['command']}", f"status: {doc['status']}"]

    def walk(prefix, x):
        if isinstance(x, dict):
            for k in x:
                walk(f"{prefix}.{k}" if prefix else str(k), x[k])
        elif isinstance(x, str) and "\n" in x:
            lines.append(f"{prefix}:")
            lines.extend("  " + l for l in x.rstrip("\n").split("\n"))
        else:
            lines.append(f"{prefix}: {json.dumps(x) if not isinstance(x, str) else x}")

    walk("", doc["results"])
    for w in doc["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def execute(argv):
    """Run one command; returns (exit code, document or None, error text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (0 if e.code == 0 else 2), None, None
    ctx = Context(args)
    command = " ".join([args.command] + [str(getattr(args, "action", getattr(args, "what", "")))])
    code, status = 0, "ok"
    try:
        results = args.func(ctx, args)
    except ConditionFailed as e:
        results, code, status = e.results, 1, "condition-failed"
    except (InputError, ValueError, la.FieldError) as e:
        return 2, None, str(e)
    doc = {"command": command, "status": status, "results": _jsonable(results),
           "warnings": list(ctx.warnings)}
    return code, doc, None


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    code, doc, err = execute(argv)
    if err is not None:
        print(f"error: {err}", file=sys.stderr)
        return code
    if doc is None:
        return code
    if "--json" in argv:
        sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        sys.stdout.write(_render_plain(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
