"""Bounded complexes of projectives and maps in the homotopy category.

A ProjComplex stores, per degree, the vertices of its indecomposable
projective summands and, per differential, a matrix of algebra elements:
entry [s][t] lies in e_v A e_w for source summand P_v and target summand
P_w and acts by right multiplication A e_v -> A e_w.  Composition of such
matrices is the ordinary matrix product in "first then second" order.

Shift conventions: (X[n])^i = X^{i+n}, d_{X[n]} = (-1)^n d_X, and a chain
map f: X -> Y[n] has components f^i: X^i -> Y^{i+n}.
"""

from . import linalg as la
from . import modcat as mc
from .algebra import FDAlgebra, AlgebraError


class ComplexError(ValueError):
    pass


def _unit_check(A, x, v):
    """True when x in e_v A e_v is invertible there."""
    chi = mc.character(A, v)
    return any(chi.get(b, 0) * c for b, c in enumerate(x) if c)


def corner_inverse(A, u, v):
    idx = A.corner_basis(v, v)
    f = A.field
    cols = [[A.mul(u, A.basis_vector(b))[r] for r in idx] for b in idx]
    rhs = [A.idempotents[v][r] for r in idx]
    sol = la.solve_linear(la.transpose(cols, len(idx)), rhs, f, len(idx))
    if not sol.consistent:
        raise ComplexError("element is not a unit")
    y = A.zero()
    for b, c in zip(idx, sol.particular):
        y[b] = c
    return y


class ProjComplex:
    def __init__(self, algebra, terms, diffs=None, summands=None, name=None):
        self.algebra = algebra
        self.field = algebra.field
        self.terms = {int(d): list(vs) for d, vs in terms.items() if vs}
        self.diffs = {}
        for d, D in (diffs or {}).items():
            d = int(d)
            if d in self.terms and d + 1 in self.terms:
                self.diffs[d] = [[list(x) for x in row] for row in D]
        if summands is None:
            summands = [{d: list(range(len(vs))) for d, vs in self.terms.items()}] if self.terms else []
        self.summands = [{d: list(p) for d, p in s.items() if p} for s in summands]
        self.summands = [s for s in self.summands if s]
        self.name = name
        self._cache = {}

    def __repr__(self):
        t = {d: [self.algebra.vertex_names[v] for v in vs] for d, vs in sorted(self.terms.items())}
        return f"<ProjComplex {self.name or ''} {t}>"

    def degrees(self):
        return sorted(self.terms)

    def is_zero(self):
        return not self.terms

    def width(self):
        if not self.terms:
            return 0
        return max(self.terms) - min(self.terms)

    def entry(self, d, s, t):
        D = self.diffs.get(d)
        if D is None:
            return self.algebra.zero()
        return D[s][t]

    def diff(self, d):
        """Differential d -> d+1 as a full matrix of algebra elements."""
        src, tgt = self.terms.get(d, []), self.terms.get(d + 1, [])
        D = self.diffs.get(d)
        if D is None:
            return [[self.algebra.zero() for _ in tgt] for _ in src]
        return D

    def check(self):
        A = self.algebra
        for d, D in self.diffs.items():
            src, tgt = self.terms[d], self.terms[d + 1]
            for s, v in enumerate(src):
                for t, w in enumerate(tgt):
                    x = D[s][t]
                    if any(x) and (A.mul(A.mul(A.idempotents[v], x), A.idempotents[w]) != x):
                        raise ComplexError(f"entry ({d},{s},{t}) not in e_v A e_w")
        for d in self.terms:
            if d in self.diffs and d + 1 in self.diffs:
                P = matprod(A, self.diffs[d], self.diffs[d + 1])
                if any(any(x) for row in P for x in row):
                    raise ComplexError(f"d∘d != 0 at degree {d}")
        return True

    def is_radical(self):
        A = self.algebra
        return all(A.in_radical(x) for D in self.diffs.values() for row in D for x in row)

    def term_module(self, d):
        key = ("mod", d)
        if key not in self._cache:
            self._cache[key] = mc.projective_sum(self.algebra, self.terms.get(d, []))
        return self._cache[key]

    def module_complex(self):
        if "mcx" not in self._cache:
            terms = {d: self.term_module(d) for d in self.terms}
            diffs = {d: proj_map_matrix(self.algebra, self.terms[d], self.terms[d + 1], D)
                     for d, D in self.diffs.items()}
            self._cache["mcx"] = ModuleComplex(self.algebra, terms, diffs)
        return self._cache["mcx"]

    def restrict(self, summand):
        """The subcomplex on the given positions (dict degree -> positions)."""
        terms, diffs = {}, {}
        for d, pos in summand.items():
            terms[d] = [self.terms[d][p] for p in pos]
        for d, pos in summand.items():
            if d + 1 in summand and d in self.diffs:
                diffs[d] = [[self.diffs[d][s][t] for t in summand[d + 1]] for s in pos]
        return ProjComplex(self.algebra, terms, diffs)

    def summand_complexes(self):
        return [self.restrict(s) for s in self.summands]

    def multiplicities(self):
        """Alternating sums of projective multiplicities, one row per summand."""
        rows = []
        n = self.algebra.num_vertices
        for s in self.summands:
            row = [0] * n
            for d, pos in s.items():
                for p in pos:
                    row[self.terms[d][p]] += (-1) ** (d % 2)
            rows.append(row)
        return rows


def matprod(A, X, Y):
    """Product of algebra-element matrices in then-order."""
    out = []
    for row in X:
        orow = []
        for u in range(len(Y[0]) if Y else 0):
            acc = A.zero()
            for t, x in enumerate(row):
                if any(x):
                    y = Y[t][u]
                    if any(y):
                        acc = A.add(acc, A.mul(x, y))
            orow.append(acc)
        out.append(orow)
    return out


def proj_map_matrix(A, src, tgt, D):
    """Module matrix of the map sum P_src -> sum P_tgt given by right multiplication."""
    f = A.field
    src_mods = [mc.projective_module(A, v) for v in src]
    tgt_mods = [mc.projective_module(A, w) for w in tgt]
    rows = sum(P.dim for P in tgt_mods)
    cols = sum(P.dim for P in src_mods)
    M = la.zeros(rows, cols, f)
    coff = 0
    for s, Ps in enumerate(src_mods):
        roff = 0
        for t, Pt in enumerate(tgt_mods):
            x = D[s][t]
            if any(x):
                pos = {b: k for k, b in enumerate(Pt.basis_in_algebra)}
                for k, b in enumerate(Ps.basis_in_algebra):
                    y = A.mul(A.basis_vector(b), x)
                    for r, c in enumerate(y):
                        if c:
                            M[roff + pos[r]][coff + k] = c
            roff += Pt.dim
        coff += Ps.dim
    return M


def vector_to_elements(A, tgt, y):
    """Split a vector of sum P_w (w in tgt) into algebra elements."""
    out = []
    off = 0
    for w in tgt:
        P = mc.projective_module(A, w)
        x = A.zero()
        for k, b in enumerate(P.basis_in_algebra):
            x[b] = y[off + k]
        out.append(x)
        off += P.dim
    return out


def elements_to_vector(A, tgt, xs):
    y = []
    for w, x in zip(tgt, xs):
        P = mc.projective_module(A, w)
        y.extend(x[b] for b in P.basis_in_algebra)
    return y


class ModuleComplex:
    """Complex of modules: terms[d] an FDModule, diffs[d] a matrix X^d -> X^{d+1}."""

    def __init__(self, algebra, terms, diffs):
        self.algebra = algebra
        self.field = algebra.field
        self.terms = {d: M for d, M in terms.items() if M.dim}
        self.diffs = {d: m for d, m in diffs.items() if d in self.terms and d + 1 in self.terms}

    def term(self, d):
        return self.terms.get(d) or mc.zero_module(self.algebra)

    def check(self):
        f = self.field
        for d in self.diffs:
            if d + 1 in self.diffs:
                P = la.matmul(self.diffs[d + 1], self.diffs[d], f, self.terms[d + 1].dim)
                if not la.is_zero_matrix(P):
                    raise ComplexError(f"d∘d != 0 at degree {d}")
        return True


class ChainMap:
    """Chain map X -> Y[n]; components[d] is a matrix of algebra elements X^d -> Y^{d+n}."""

    def __init__(self, source, target, n, components):
        self.source, self.target, self.n = source, target, n
        self.components = components

    def then(self, other):
        """self: X -> Y[n], other: Y -> Z[m]; returns X -> Z[n+m]."""
        A = self.source.algebra
        comps = {}
        for d, F in self.components.items():
            G = other.components.get(d + self.n)
            if G is None or not F:
                continue
            comps[d] = matprod(A, F, G)
        return ChainMap(self.source, other.target, self.n + other.n, comps)

    def check(self):
        A = self.source.algebra
        X, Y, n = self.source, self.target, self.n
        sign = -1 if n % 2 else 1
        degs = set(X.terms) | {d - 1 for d in X.terms}
        for d in degs:
            left = matprod(A, X.diff(d), self.comp(d + 1)) if d in X.terms else None
            right = matprod(A, self.comp(d), Y.diff(d + n)) if d in X.terms else None
            if left is None:
                continue
            for r1, r2 in zip(left, right):
                for a, b in zip(r1, r2):
                    if A.sub(a, A.scale(b, A.field(sign))) != A.zero():
                        raise ComplexError("not a chain map")
        return True

    def comp(self, d):
        F = self.components.get(d)
        if F is None:
            return [[self.source.algebra.zero() for _ in self.target.terms.get(d + self.n, [])]
                    for _ in self.source.terms.get(d, [])]
        return F


# Hom in the homotopy category


class HomK:
    """Hom_K(X, Y[n]) = chain maps modulo null-homotopic maps.

    Unknowns are, for every summand P_v of X^d, a vector in e_v Y^{d+n}.
    """

    def __init__(self, X, Y, n):
        self.X, self.n = X, n
        self.Yproj = Y if isinstance(Y, ProjComplex) else None
        Ymc = Y.module_complex() if isinstance(Y, ProjComplex) else Y
        self.Y = Ymc
        A = X.algebra
        f = A.field
        self.field = f
        sign = f(-1) if n % 2 else f(1)
        # layout of f-unknowns and h-unknowns
        self.flay, fdim = self._layout(n)
        self.hlay, hdim = self._layout(n - 1)
        self.fdim = fdim
        # constraint rows: for each d, s: D_X[s][t] . y^{d+1}_t - sign * d_Y y^d_s
        eqs = []
        for d, src in X.terms.items():
            Ytgt = Ymc.terms.get(d + n + 1)
            if Ytgt is None:
                continue
            for s, v in enumerate(src):
                rows = Ytgt.at(v)
                if not rows:
                    continue
                block = [[f.zero()] * fdim for _ in rows]
                if d + 1 in X.terms:
                    for t, w in enumerate(X.terms[d + 1]):
                        x = X.entry(d, s, t)
                        key = (d + 1, t)
                        if not any(x) or key not in self.flay:
                            continue
                        off, cols = self.flay[key]
                        act = Ytgt.act(x)
                        for ri, r in enumerate(rows):
                            for ci, c in enumerate(cols):
                                if act[r][c]:
                                    block[ri][off + ci] = f(block[ri][off + ci] + act[r][c])
                key = (d, s)
                if key in self.flay and d + n in Ymc.diffs:
                    off, cols = self.flay[key]
                    dY = Ymc.diffs[d + n]
                    for ri, r in enumerate(rows):
                        for ci, c in enumerate(cols):
                            if dY[r][c]:
                                block[ri][off + ci] = f(block[ri][off + ci] - sign * dY[r][c])
                eqs.extend(block)
        if fdim == 0:
            Z = []
        elif eqs:
            Z = la.kernel(eqs, f, fdim)
        else:
            Z = [la.identity(fdim, f)[k] for k in range(fdim)]
        # boundaries: f^d_s = sum_t D_X[s][t] z^{d+1}_t + sign' d_Y z^d_s, sign' = (-1)^{n-1}... of Y[n]
        bounds = []
        for key, (hoff, hcols) in self.hlay.items():
            d, s = key
            for ci, c in enumerate(hcols):
                vec = [f.zero()] * fdim
                # h^d_s = basis vector c of e_v Y^{d+n-1}; contributes to f^d_s via d_Y
                if (d, s) in self.flay and d + n - 1 in Ymc.diffs:
                    off, cols = self.flay[(d, s)]
                    dY = Ymc.diffs[d + n - 1]
                    for k, r in enumerate(cols):
                        if dY[r][c]:
                            vec[off + k] = f(vec[off + k] + sign * dY[r][c])
                # and to f^{d-1}_{s'} via D_X[s'][s]
                if d - 1 in X.terms:
                    Yt = Ymc.terms[d + n - 1]
                    for s2, v2 in enumerate(X.terms[d - 1]):
                        x = X.entry(d - 1, s2, s)
                        if not any(x) or (d - 1, s2) not in self.flay:
                            continue
                        off, cols = self.flay[(d - 1, s2)]
                        act = Yt.act(x)
                        for k, r in enumerate(cols):
                            if act[r][c]:
                                vec[off + k] = f(vec[off + k] + act[r][c])
                if any(vec):
                    bounds.append(vec)
        self.B, self.Bpiv = la.rref(bounds, f, fdim) if bounds else ([], [])
        reduced = [la.reduce_mod(z, self.B, self.Bpiv, f) for z in Z]
        self.reps, self.rpiv = la.rref(reduced, f, fdim) if reduced else ([], [])
        self.cycle_dim = len(Z)

    def _layout(self, shift):
        lay = {}
        off = 0
        for d in sorted(self.X.terms):
            Yt = self.Y.terms.get(d + shift)
            if Yt is None:
                continue
            for s, v in enumerate(self.X.terms[d]):
                cols = Yt.at(v)
                if cols:
                    lay[(d, s)] = (off, cols)
                    off += len(cols)
        return lay, off

    @property
    def dim(self):
        return len(self.reps)

    def components(self, vec):
        """Algebra-element matrices of the chain map with unknown vector vec (Y projective)."""
        A = self.X.algebra
        Y = self.Yproj
        comps = {}
        for d, src in self.X.terms.items():
            tgt = Y.terms.get(d + self.n)
            if not tgt:
                continue
            Ymod = Y.term_module(d + self.n)
            rows = []
            for s, v in enumerate(src):
                y = [self.field.zero()] * Ymod.dim
                if (d, s) in self.flay:
                    off, cols = self.flay[(d, s)]
                    for k, c in enumerate(cols):
                        y[c] = vec[off + k]
                rows.append(vector_to_elements(A, tgt, y))
            comps[d] = rows
        return comps

    def vector(self, comps):
        A = self.X.algebra
        vec = [self.field.zero()] * self.fdim
        for (d, s), (off, cols) in self.flay.items():
            F = comps.get(d)
            if F is None:
                continue
            tgt = self.Yproj.terms[d + self.n]
            y = elements_to_vector(A, tgt, F[s])
            for k, c in enumerate(cols):
                vec[off + k] = y[c]
        return vec

    def coordinates(self, vec):
        f = self.field
        r = la.reduce_mod(vec, self.B, self.Bpiv, f)
        c = [r[p] for p in self.rpiv]
        if any(f(a - b) for a, b in zip(r, la.vcomb(c, self.reps, f, self.fdim))):
            raise ComplexError("not a chain map")
        return c

    def chain_map(self, coords):
        vec = la.vcomb(coords, self.reps, self.field, self.fdim)
        return ChainMap(self.X, self.Yproj, self.n, self.components(vec))

    def basis_maps(self):
        return [ChainMap(self.X, self.Yproj, self.n, self.components(r)) for r in self.reps]


def hom_in_K(X, Y, n=0):
    return HomK(X, Y, n)


def hom_dim_K(X, Y, n=0):
    return HomK(X, Y, n).dim


def end_algebra_of_complex(X, name="End"):
    """End_K(X) on a basis adapted to the summands of X.

    Basis element (a, b, k) is the k-th homotopy class X_a -> X_b; the
    product of (a, b, k) and (b, c, l) is "first then second".
    """
    A = X.algebra
    f = A.field
    parts = X.summand_complexes()
    r = len(parts)
    homs = {(a, b): HomK(parts[a], parts[b], 0) for a in range(r) for b in range(r)}
    index = []
    labels = []
    for a in range(r):
        for b in range(r):
            for k in range(homs[(a, b)].dim):
                index.append((a, b, k))
                labels.append(f"{a + 1}>{b + 1}#{k + 1}")
    pos = {key: n for n, key in enumerate(index)}
    maps = {key: homs[key[:2]].chain_map(la.identity(homs[key[:2]].dim, f)[key[2]]) for key in index}
    table = []
    for x in index:
        row = []
        for y in index:
            if x[1] != y[0]:
                row.append(())
                continue
            comp = maps[x].then(maps[y])
            H = homs[(x[0], y[1])]
            c = H.coordinates(H.vector(comp.components))
            row.append(tuple((pos[(x[0], y[1], k)], v) for k, v in enumerate(c) if v))
        table.append(row)
    dim = len(index)
    idems = []
    unit = [f.zero()] * dim
    for a in range(r):
        H = homs[(a, a)]
        ident = {d: [[A.idempotents[v] if s == t else A.zero() for t, _ in enumerate(vs)]
                     for s, v in enumerate(vs)] for d, vs in parts[a].terms.items()}
        c = H.coordinates(H.vector(ident))
        e = [f.zero()] * dim
        for k, v in enumerate(c):
            e[pos[(a, a, k)]] = v
            unit[pos[(a, a, k)]] = v
        idems.append(e)
    E = FDAlgebra(f, labels, table, unit, idems, name=name,
                  vertex_names=[str(a + 1) for a in range(r)])
    E.hom_spaces = homs
    E.basis_index = index
    E.basis_maps = maps
    E.parts = parts
    return E


# tilting report


class TiltingReport:
    def __init__(self, self_orthogonal, failing, k0_rank_full, generation):
        self.self_orthogonal = self_orthogonal
        self.failing = failing
        self.k0_rank_full = k0_rank_full
        self.generation = generation

    @property
    def verdict(self):
        return self.self_orthogonal and self.k0_rank_full

    def as_dict(self):
        return {"self_orthogonal": self.self_orthogonal, "failing": self.failing,
                "k0_rank_full": self.k0_rank_full, "generation": self.generation,
                "verdict": self.verdict}

    def __repr__(self):
        return f"TiltingReport({self.as_dict()})"


def shift_window(X, Y):
    """Shifts n for which Hom(X, Y[n]) can be nonzero."""
    if not X.terms or not Y.terms:
        return []
    lo = min(Y.terms) - max(X.terms)
    hi = max(Y.terms) - min(X.terms)
    return list(range(lo, hi + 1))


def tilting_report(T, provenance="unknown"):
    failing = None
    for n in shift_window(T, T):
        if n == 0:
            continue
        H = HomK(T, T, n)
        if H.dim:
            failing = {"shift": n, "dim": H.dim}
            break
    mult = T.multiplicities()
    k0 = la.int_rank(mult) == T.algebra.num_vertices if mult else T.algebra.num_vertices == 0
    gen = "by-construction" if provenance == "by-construction" else "necessary-only"
    return TiltingReport(failing is None, failing, k0, gen)


# normalization


def normalize_radical(X):
    """Homotopy-equivalent radical complex by Gaussian elimination of unit entries."""
    parts = [_normalize_one(P) for P in X.summand_complexes()]
    parts = [P for P in parts if not P.is_zero()]
    if not parts:
        return ProjComplex(X.algebra, {}, {})
    return direct_sum_complexes(parts)


def _normalize_one(X):
    A = X.algebra
    terms = {d: list(vs) for d, vs in X.terms.items()}
    diffs = {d: [[list(x) for x in row] for row in D] for d, D in X.diffs.items()}
    while True:
        hit = None
        for d in sorted(diffs):
            D = diffs[d]
            for s, v in enumerate(terms[d]):
                for t, w in enumerate(terms[d + 1]):
                    if v == w and any(D[s][t]) and _unit_check(A, D[s][t], v):
                        hit = (d, s, t)
                        break
                if hit:
                    break
            if hit:
                break
        if hit is None:
            break
        d, s, t = hit
        D = diffs[d]
        v = terms[d][s]
        uinv = corner_inverse(A, D[s][t], v)
        src_keep = [k for k in range(len(terms[d])) if k != s]
        tgt_keep = [k for k in range(len(terms[d + 1])) if k != t]
        newD = []
        for r in src_keep:
            row = []
            c = D[r][t]
            cu = A.mul(c, uinv) if any(c) else None
            for q in tgt_keep:
                x = D[r][q]
                if cu is not None and any(D[s][q]):
                    x = A.sub(x, A.mul(cu, D[s][q]))
                row.append(x)
            newD.append(row)
        if d - 1 in diffs:
            diffs[d - 1] = [[row[k] for k in src_keep] for row in diffs[d - 1]]
        if d + 1 in diffs:
            diffs[d + 1] = [diffs[d + 1][k] for k in tgt_keep]
        diffs[d] = newD
        terms[d] = [terms[d][k] for k in src_keep]
        terms[d + 1] = [terms[d + 1][k] for k in tgt_keep]
        for e in (d - 1, d, d + 1):
            if e in diffs and (not terms.get(e) or not terms.get(e + 1)):
                del diffs[e]
    return ProjComplex(A, terms, diffs)


def direct_sum_complexes(parts, name=None):
    A = parts[0].algebra
    terms, diffs, summands = {}, {}, []
    for P in parts:
        offs = {d: len(terms.get(d, [])) for d in P.terms}
        for S in P.summands:
            summands.append({d: [offs[d] + p for p in pos] for d, pos in S.items()})
        for d, vs in P.terms.items():
            terms.setdefault(d, []).extend(vs)
    for d in terms:
        if d + 1 not in terms:
            continue
        src, tgt = terms[d], terms[d + 1]
        D = [[A.zero() for _ in tgt] for _ in src]
        so = 0
        offs_src = {}
        offs_tgt = {}
        rs, rt = 0, 0
        for P in parts:
            ns, nt = len(P.terms.get(d, [])), len(P.terms.get(d + 1, []))
            if d in P.diffs:
                for s in range(ns):
                    for t in range(nt):
                        D[rs + s][rt + t] = list(P.diffs[d][s][t])
            rs += ns
            rt += nt
        diffs[d] = D
    return ProjComplex(A, terms, diffs, summands, name=name)


def stalk(A, vertices, degree=0, name=None, split=True):
    """Stalk complex of sum P_v in one degree; each P_v its own summand if split."""
    summands = [{degree: [k]} for k in range(len(vertices))] if split else None
    return ProjComplex(A, {degree: list(vertices)}, {}, summands, name=name)


def regular_stalk(A, degree=0):
    return stalk(A, list(range(A.num_vertices)), degree, name="A")


def shift_truncate(X, n=0, mode="shift", i=None):
    """mode 'shift': X[n]; 'sigma_lt': degrees < i; 'sigma_geq': degrees >= i."""
    A = X.algebra
    f = A.field
    if mode == "shift":
        sign = f(-1) if n % 2 else f(1)
        terms = {d - n: vs for d, vs in X.terms.items()}
        diffs = {d - n: [[A.scale(x, sign) for x in row] for row in D] for d, D in X.diffs.items()}
        summands = [{d - n: p for d, p in s.items()} for s in X.summands]
        return ProjComplex(A, terms, diffs, summands)
    if i is None:
        raise ComplexError("truncation needs a degree")
    if mode == "sigma_lt":
        keep = {d for d in X.terms if d < i}
    elif mode == "sigma_geq":
        keep = {d for d in X.terms if d >= i}
    else:
        raise ComplexError(f"unknown mode {mode!r}")
    terms = {d: X.terms[d] for d in keep}
    diffs = {d: X.diffs[d] for d in X.diffs if d in keep and d + 1 in keep}
    summands = [{d: p for d, p in s.items() if d in keep} for s in X.summands]
    return ProjComplex(A, terms, diffs, summands)


# Nakayama functor on complexes


def nu_vertex_map(A, seed=0):
    return mc.projective_injective_map(A, seed)


def nakayama_complex(T, seed=0):
    """Termwise nu for a complex over a self-injective algebra.

    nu P_v = I_v is identified with P_{pi(v)} through an explicit
    isomorphism; a differential entry x: P_v -> P_w becomes the map
    I_v -> I_w dual to left multiplication by x, transported along those
    isomorphisms.
    """
    A = T.algebra
    f = A.field
    pi = nu_vertex_map(A, seed)
    if any(pi[v] is None for vs in T.terms.values() for v in vs):
        raise ComplexError("nu of a summand is not projective")
    iso = {}
    for vs in T.terms.values():
        for v in vs:
            if v not in iso:
                P = mc.projective_module(A, pi[v])
                I = mc.injective_module(A, v)
                phi = mc.indecomposable_isomorphism(P, I)
                iso[v] = (phi, la.inverse(phi, f))
    op = A.opposite()
    terms = {d: [pi[v] for v in vs] for d, vs in T.terms.items()}
    diffs = {}
    for d, D in T.diffs.items():
        rows = []
        for s, v in enumerate(T.terms[d]):
            row = []
            for t, w in enumerate(T.terms[d + 1]):
                x = D[s][t]
                if not any(x):
                    row.append(A.zero())
                    continue
                # left multiplication by x: e_w A -> e_v A, then dualize
                Pv_op = mc.projective_module(op, v)
                Pw_op = mc.projective_module(op, w)
                posv = {b: k for k, b in enumerate(Pv_op.basis_in_algebra)}
                Mx = la.zeros(Pv_op.dim, Pw_op.dim, f)
                for k, b in enumerate(Pw_op.basis_in_algebra):
                    y = A.mul(x, A.basis_vector(b))
                    for r, c in enumerate(y):
                        if c:
                            Mx[posv[r]][k] = c
                Nx = la.transpose(Mx, Pw_op.dim)  # I_v -> I_w
                phi_v, _ = iso[v]
                _, phi_w_inv = iso[w]
                psi = la.matmul(phi_w_inv, la.matmul(Nx, phi_v, f), f)
                Pv = mc.projective_module(A, pi[v])
                gen = [A.idempotents[pi[v]][b] for b in Pv.basis_in_algebra]
                img = la.matvec(psi, gen, f)
                row.append(vector_to_elements(A, [pi[w]], img)[0])
            rows.append(row)
        diffs[d] = rows
    return ProjComplex(A, terms, diffs, T.summands)


def _add_equal_under_nu(A, vertices, seed=0):
    """add(sum P_v) = add(sum nu P_v) for the given vertex set."""
    V = set(vertices)
    if not V:
        return True
    pi = nu_vertex_map(A, seed)
    image = set()
    for v in V:
        if pi[v] is None:
            return False
        image.add(pi[v])
    return image == V


def is_almost_nu_stable(T, Qbar, seed=0):
    """Negative terms of T and positive terms of Qbar are stable under nu up to add."""
    if any(d > 0 for d in T.terms):
        raise ComplexError("T must be concentrated in degrees <= 0")
    if any(d < 0 for d in Qbar.terms):
        raise ComplexError("Qbar must be concentrated in degrees >= 0")
    negA = [v for d, vs in T.terms.items() if d < 0 for v in vs]
    posB = [v for d, vs in Qbar.terms.items() if d > 0 for v in vs]
    return (_add_equal_under_nu(T.algebra, negA, seed)
            and _add_equal_under_nu(Qbar.algebra, posB, seed))


# quotient complexes


def quotient_complex(T, ideal, quotient_algebra=None):
    """(T/IT over A/I, IT as a module complex over A)."""
    from .algebra import quotient_by_ideal
    A = T.algebra
    f = A.field
    Q = quotient_algebra or quotient_by_ideal(A, ideal)
    vmap = Q.vertex_map
    terms, diffs, keep = {}, {}, {}
    for d, vs in T.terms.items():
        keep[d] = [s for s, v in enumerate(vs) if v in vmap]
        terms[d] = [vmap[vs[s]] for s in keep[d]]
    for d, D in T.diffs.items():
        diffs[d] = [[Q.project(D[s][t]) for t in keep[d + 1]] for s in keep[d]]
    summands = []
    for S in T.summands:
        summands.append({d: [keep[d].index(p) for p in pos if p in keep[d]] for d, pos in S.items()})
    Tbar = ProjComplex(Q, terms, diffs, summands)
    # I T as a subcomplex of the module complex of T
    MC = T.module_complex()
    subs, sub_terms = {}, {}
    for d, vs in T.terms.items():
        vecs = []
        off = 0
        for v in vs:
            P = mc.projective_module(A, v)
            for x in ideal.basis:
                y = A.mul(x, A.idempotents[v])
                if any(y):
                    z = [f.zero()] * MC.terms[d].dim
                    for k, b in enumerate(P.basis_in_algebra):
                        z[off + k] = y[b]
                    vecs.append(z)
            off += P.dim
        basis = mc.submodule_basis(MC.terms[d], vecs)
        subs[d] = basis
        sub_terms[d] = mc.module_on_basis(MC.terms[d], basis)
    sub_diffs = {}
    for d, dm in MC.diffs.items():
        if subs.get(d) and subs.get(d + 1):
            coords = la.Coordinates(subs[d + 1], f, MC.terms[d + 1].dim)
            cols = [coords(la.matvec(dm, x, f)) for x in subs[d]]
            sub_diffs[d] = la.transpose(cols, len(subs[d + 1]))
    IT = ModuleComplex(A, sub_terms, sub_diffs)
    IT.bases = subs
    return Tbar, IT
