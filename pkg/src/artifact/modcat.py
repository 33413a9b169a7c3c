"""Finite-dimensional left modules over algebras with vertex idempotents.

A module stores one action matrix per algebra generator (the vertex
idempotents followed by the arrow elements).  Bases are vertex adapted:
each basis vector lies in e_v M for the vertex recorded in `vertex_of`,
so idempotents act as coordinate projections.  Matrices act on column
vectors; a hom M -> N is a dim N x dim M matrix and "f then g" is g @ f.
"""

import random
from fractions import Fraction

import sympy

from . import linalg as la
from .algebra import AlgebraError, AlgebraIdeal


class ModuleError(ValueError):
    pass


class DecompositionError(RuntimeError):
    pass


class FDModule:
    def __init__(self, algebra, vertex_of, gen_action, name=None):
        self.algebra = algebra
        self.field = algebra.field
        self.vertex_of = list(vertex_of)
        self.dim = len(self.vertex_of)
        self.gen_action = gen_action
        self.name = name
        self._cache = {}

    def __repr__(self):
        return f"<FDModule {self.name or ''} dim={self.dim} dims={self.dim_vector()}>"

    def dim_vector(self):
        n = self.algebra.num_vertices
        out = [0] * n
        for v in self.vertex_of:
            out[v] += 1
        return out

    def at(self, v):
        """Basis indices lying at vertex v."""
        key = ("at", v)
        if key not in self._cache:
            self._cache[key] = [k for k, w in enumerate(self.vertex_of) if w == v]
        return self._cache[key]

    def act_word(self, word):
        key = ("word", word)
        if key not in self._cache:
            m = self.gen_action[word[0]]
            for g in word[1:]:
                m = la.matmul(m, self.gen_action[g], self.field)
            self._cache[key] = m
        return self._cache[key]

    def act(self, x):
        """Matrix of the action of an algebra element x."""
        words, coords = self.algebra.word_data()
        c = coords(x)
        f = self.field
        out = la.zeros(self.dim, self.dim, f)
        for ci, w in zip(c, words):
            if ci:
                out = la.add(out, la.scale(self.act_word(w), ci, f), f)
        return out

    def act_basis(self, b):
        key = ("basis", b)
        if key not in self._cache:
            self._cache[key] = self.act(self.algebra.basis_vector(b))
        return self._cache[key]

    def check(self):
        """Action respects the structure constants on all basis pairs."""
        A = self.algebra
        f = self.field
        for a in range(A.dim):
            for b in range(A.dim):
                prod = A.mul(A.basis_vector(a), A.basis_vector(b))
                lhs = la.matmul(self.act_basis(a), self.act_basis(b), f)
                if lhs != self.act(prod):
                    raise ModuleError("action does not respect multiplication")
        if self.act(A.unit) != la.identity(self.dim, f):
            raise ModuleError("unit does not act as the identity")
        return True


class ModuleHom:
    def __init__(self, source, target, matrix):
        self.source = source
        self.target = target
        self.matrix = matrix

    def then(self, other):
        return ModuleHom(self.source, other.target,
                         la.matmul(other.matrix, self.matrix, self.source.field, self.target.dim))

    def is_zero(self):
        return la.is_zero_matrix(self.matrix)

    def rank(self):
        return la.rank(self.matrix, self.source.field) if self.matrix else 0

    def check(self):
        f = self.source.field
        for gs, gt in zip(self.source.gen_action, self.target.gen_action):
            lhs = _mm(self.matrix, gs, f, self.source.dim, self.target.dim)
            rhs = _mm(gt, self.matrix, f, self.target.dim, self.target.dim)
            if lhs != rhs:
                raise ModuleError("matrix does not intertwine the actions")
        return True

    def __repr__(self):
        return f"ModuleHom({self.source.dim} -> {self.target.dim})"


def _mm(A, B, f, inner, rows_out=None):
    if not A:
        return []
    if inner == 0:
        return la.zeros(len(A), len(B[0]) if B else 0, f)
    return la.matmul(A, B, f, inner)


def _gen_corners(A):
    """(i, j) corner of each generator, or None for idempotents."""
    if "gencorners" in A._cache:
        return A._cache["gencorners"]
    out = []
    n = A.num_vertices
    for k, g in enumerate(A.generators()):
        if k < n:
            out.append(None)
            continue
        found = None
        for i in range(n):
            if A.mul(A.idempotents[i], g) == g:
                for j in range(n):
                    if A.mul(g, A.idempotents[j]) == g:
                        found = (i, j)
                break
        out.append(found)
    A._cache["gencorners"] = out
    return out


# basic modules


def regular_module(A):
    gens = A.generators()
    acts = [A.left_matrix(g) for g in gens]
    return FDModule(A, [c[0] for c in A.corners], acts, name="A")


def projective_module(A, v):
    """A e_v: spanned by basis elements in corners (*, v)."""
    key = ("proj", v)
    if key in A._cache:
        return A._cache[key]
    idx = [b for b, c in enumerate(A.corners) if c[1] == v]
    pos = {b: k for k, b in enumerate(idx)}
    f = A.field
    acts = []
    for g in A.generators():
        m = la.zeros(len(idx), len(idx), f)
        for k, b in enumerate(idx):
            prod = A.mul(g, A.basis_vector(b))
            for r, c in enumerate(prod):
                if c:
                    m[pos[r]][k] = c
        acts.append(m)
    P = FDModule(A, [A.corners[b][0] for b in idx], acts, name=f"P{A.vertex_names[v]}")
    P.basis_in_algebra = idx
    P.summand_vertices = [v]
    A._cache[key] = P
    return P


def character(A, v):
    """Coefficient of e_v modulo the radical, on basis elements of e_v A e_v."""
    key = ("chi", v)
    if key not in A._cache:
        f = A.field
        rad = A.corner_radical(v, v)
        coords = la.Coordinates(rad + [A.idempotents[v]], f, A.dim)
        A._cache[key] = {b: coords(A.basis_vector(b))[-1] for b in A.corner_basis(v, v)}
    return A._cache[key]


def simple_module(A, v):
    f = A.field
    n = A.num_vertices
    acts = []
    for k, g in enumerate(A.generators()):
        if k < n:
            acts.append([[f.one() if k == v else f.zero()]])
        else:
            acts.append([[f.zero()]])
    return FDModule(A, [v], acts, name=f"S{A.vertex_names[v]}")


def duality_D(M):
    """Dual module over the opposite algebra (transposed action)."""
    op = M.algebra.opposite()
    acts = [la.transpose(m, M.dim) if M.dim else [] for m in M.gen_action]
    return FDModule(op, M.vertex_of, acts, name=f"D({M.name})")


def injective_module(A, v):
    """D(e_v A), the injective envelope of the v-th simple."""
    key = ("inj", v)
    if key not in A._cache:
        I = duality_D(projective_module(A.opposite(), v))
        I.name = f"I{A.vertex_names[v]}"
        A._cache[key] = I
    return A._cache[key]


def direct_sum(mods):
    """Direct sum with block inclusions and projections."""
    if not mods:
        raise ModuleError("empty direct sum")
    A = mods[0].algebra
    f = A.field
    n = sum(M.dim for M in mods)
    vertex_of = []
    for M in mods:
        vertex_of.extend(M.vertex_of)
    acts = []
    for g in range(len(A.generators())):
        m = la.zeros(n, n, f)
        off = 0
        for M in mods:
            for r in range(M.dim):
                for c in range(M.dim):
                    m[off + r][off + c] = M.gen_action[g][r][c]
            off += M.dim
        acts.append(m)
    S = FDModule(A, vertex_of, acts, name="+".join(str(M.name) for M in mods))
    incs, projs = [], []
    off = 0
    for M in mods:
        inc = la.zeros(n, M.dim, f)
        pr = la.zeros(M.dim, n, f)
        for k in range(M.dim):
            inc[off + k][k] = f.one()
            pr[k][off + k] = f.one()
        incs.append(inc)
        projs.append(pr)
        off += M.dim
    if all(hasattr(M, "summand_vertices") for M in mods):
        S.summand_vertices = [v for M in mods for v in M.summand_vertices]
    return S, incs, projs


def projective_sum(A, vertices):
    if not vertices:
        return zero_module(A)
    S, _, _ = direct_sum([projective_module(A, v) for v in vertices])
    S.summand_vertices = list(vertices)
    return S


def zero_module(A):
    M = FDModule(A, [], [[] for _ in A.generators()], name="0")
    M.summand_vertices = []
    return M


# submodules and quotients


def _vertex_split(M, vectors):
    """Vertex components of vectors, grouped by vertex."""
    out = {}
    for v in range(M.algebra.num_vertices):
        idx = M.at(v)
        if not idx:
            continue
        comps = []
        for x in vectors:
            if any(x[k] for k in idx):
                y = [M.field.zero()] * M.dim
                for k in idx:
                    y[k] = x[k]
                comps.append(y)
        out[v] = comps
    return out


def submodule_basis(M, vectors):
    """Vertex-adapted basis (list of vectors) of the submodule generated."""
    f = M.field
    A = M.algebra
    corners = _gen_corners(A)
    n = A.num_vertices
    spans = {v: ([], []) for v in range(n)}
    queue = []
    for v, comps in _vertex_split(M, vectors).items():
        queue.extend((v, c) for c in comps)
    while queue:
        v, x = queue.pop()
        R, piv = spans[v]
        r = la.reduce_mod(x, R, piv, f)
        if not any(r):
            continue
        R2, piv2 = la.rref(R + [r], f, M.dim)
        spans[v] = (R2, piv2)
        for g, c in enumerate(corners):
            if c is None or c[1] != v:
                continue
            y = la.matvec(M.gen_action[g], r, f)
            if any(y):
                queue.append((c[0], y))
    basis = []
    for v in range(n):
        basis.extend(spans[v][0])
    return basis


def _vertex_of_vector(M, x):
    for k, c in enumerate(x):
        if c:
            return M.vertex_of[k]
    raise ModuleError("zero vector has no vertex")


def module_on_basis(M, basis, name=None):
    """Submodule with the given vertex-adapted basis (must be closed)."""
    f = M.field
    vertex_of = [_vertex_of_vector(M, x) for x in basis]
    if not basis:
        return zero_module(M.algebra)
    coords = la.Coordinates(basis, f, M.dim)
    acts = []
    for g in M.gen_action:
        cols = [coords(la.matvec(g, x, f)) for x in basis]
        acts.append(la.transpose(cols, len(basis)))
    return FDModule(M.algebra, vertex_of, acts, name=name)


def submodule(M, vectors, name=None):
    """(U, inclusion matrix) for the submodule generated by vectors."""
    basis = submodule_basis(M, vectors)
    U = module_on_basis(M, basis, name=name)
    return U, la.transpose(basis, M.dim) if basis else la.zeros(M.dim, 0, M.field)


def quotient_module(M, vectors, name=None):
    """(M/U, projection matrix) where U is generated by vectors."""
    f = M.field
    U = submodule_basis(M, vectors)
    comp = []
    for v in range(M.algebra.num_vertices):
        Uv = [x for x in U if _vertex_of_vector(M, x) == v]
        std = []
        for k in M.at(v):
            e = [f.zero()] * M.dim
            e[k] = f.one()
            std.append(e)
        comp.extend(la.complement_basis(Uv, std, f, M.dim))
    m = len(U)
    coords = la.Coordinates(U + comp, f, M.dim)
    proj_cols = []
    for k in range(M.dim):
        e = [f.zero()] * M.dim
        e[k] = f.one()
        proj_cols.append(coords(e)[m:])
    P = la.transpose(proj_cols, len(comp)) if comp else []
    vertex_of = [_vertex_of_vector(M, x) for x in comp]
    acts = []
    for g in M.gen_action:
        cols = [coords(la.matvec(g, x, f))[m:] for x in comp]
        acts.append(la.transpose(cols, len(comp)) if comp else [])
    Q = FDModule(M.algebra, vertex_of, acts, name=name)
    return Q, P


def image_module(h):
    """Image of a ModuleHom as a submodule of its target."""
    cols = la.transpose(h.matrix, h.source.dim) if h.matrix else []
    return submodule(h.target, [c for c in cols if any(c)])


def kernel_module(h):
    f = h.source.field
    if h.target.dim == 0:
        vecs = [la.identity(h.source.dim, f)[k] for k in range(h.source.dim)]
    else:
        vecs = la.kernel(h.matrix, f, h.source.dim)
    return submodule(h.source, vecs)


# homs


def hom_space(M, N):
    """Field basis of Hom_A(M, N) as a list of ModuleHom."""
    if M.algebra is not N.algebra:
        raise ModuleError("modules over different algebras")
    return [ModuleHom(M, N, m) for m in hom_matrices(M, N)]


def hom_matrices(M, N):
    A = M.algebra
    f = M.field
    n = A.num_vertices
    var = {}
    blocks = []
    for v in range(n):
        rows, cols = N.at(v), M.at(v)
        for r in rows:
            for c in cols:
                var[(r, c)] = len(var)
        blocks.append((rows, cols))
    nv = len(var)
    if nv == 0:
        return []
    eqs = []
    for g, corner in enumerate(_gen_corners(A)):
        if corner is None:
            continue
        i, j = corner
        GM = M.gen_action[g]
        GN = N.gen_action[g]
        # (F GM - GN F) restricted to rows at i of N, cols at j of M
        Mi, Mj = M.at(i), M.at(j)
        Ni, Nj = N.at(i), N.at(j)
        if not Mj or not Ni:
            continue
        for r in Ni:
            for c in Mj:
                row = {}
                for k in Mi:
                    a = GM[k][c]
                    if a:
                        idx = var[(r, k)]
                        row[idx] = row.get(idx, 0) + a
                for k in Nj:
                    a = GN[r][k]
                    if a:
                        idx = var[(k, c)]
                        row[idx] = row.get(idx, 0) - a
                if any(f(x) for x in row.values()):
                    dense = [f.zero()] * nv
                    for idx, a in row.items():
                        dense[idx] = f(a)
                    eqs.append(dense)
    K = la.kernel(eqs, f, nv) if eqs else [la.identity(nv, f)[k] for k in range(nv)]
    out = []
    for kv in K:
        m = la.zeros(N.dim, M.dim, f)
        for (r, c), idx in var.items():
            m[r][c] = kv[idx]
        out.append(m)
    return out


def hom_dim(M, N):
    return len(hom_matrices(M, N))


def socle_radical_top(M):
    f = M.field
    A = M.algebra
    corners = _gen_corners(A)
    rad_vecs = []
    soc_eqs = []
    for g, c in enumerate(corners):
        if c is None:
            continue
        G = M.gen_action[g]
        rad_vecs.extend(col for col in la.transpose(G, M.dim) if any(col))
        soc_eqs.extend(G)
    if soc_eqs and M.dim:
        soc_vecs = la.kernel(soc_eqs, f, M.dim)
    else:
        soc_vecs = [la.identity(M.dim, f)[k] for k in range(M.dim)]
    soc, soc_inc = submodule(M, soc_vecs, name="soc")
    rad, rad_inc = submodule(M, rad_vecs, name="rad")
    top, top_proj = quotient_module(M, rad_vecs, name="top")
    return {"socle": soc, "radical": rad, "top": top,
            "socle_inclusion": soc_inc, "radical_inclusion": rad_inc, "top_projection": top_proj}


def radical_vectors(M):
    f = M.field
    out = []
    for g, c in enumerate(_gen_corners(M.algebra)):
        if c is not None:
            out.extend(col for col in la.transpose(M.gen_action[g], M.dim) if any(col))
    return submodule_basis(M, out)


def top_vectors(M):
    """Vertex-adapted standard vectors spanning a complement of rad M."""
    f = M.field
    R = radical_vectors(M)
    out = []
    for v in range(M.algebra.num_vertices):
        Rv = [x for x in R if _vertex_of_vector(M, x) == v]
        std = []
        for k in M.at(v):
            e = [f.zero()] * M.dim
            e[k] = f.one()
            std.append(e)
        out.extend((v, x) for x in la.complement_basis(Rv, std, f, M.dim))
    return out


def top_multiplicities(M):
    mult = [0] * M.algebra.num_vertices
    for v, _ in top_vectors(M):
        mult[v] += 1
    return mult


# projective covers, syzygies, Nakayama functor


def map_from_projective(P_v, M, x):
    """Matrix of the hom A e_v -> M sending e_v to x (x in e_v M)."""
    A = M.algebra
    f = M.field
    cols = []
    for b in P_v.basis_in_algebra:
        cols.append(la.matvec(M.act_basis(b), x, f))
    return la.transpose(cols, M.dim)


def projective_cover(M):
    """(P, epi) with P a sum of indecomposable projectives."""
    A = M.algebra
    f = M.field
    tops = top_vectors(M)
    if not tops:
        return zero_module(A), ModuleHom(zero_module(A), M, la.zeros(M.dim, 0, f))
    vertices = [v for v, _ in tops]
    P = projective_sum(A, vertices)
    blocks = [map_from_projective(projective_module(A, v), M, x) for v, x in tops]
    mat = [sum((blk[r] for blk in blocks), []) for r in range(M.dim)]
    return P, ModuleHom(P, M, mat)


def syzygy(M):
    P, epi = projective_cover(M)
    if P.dim == 0:
        return zero_module(M.algebra)
    K, _ = kernel_module(epi)
    return K


def syzygy_with_inclusion(M):
    P, epi = projective_cover(M)
    K, inc = kernel_module(epi)
    return K, inc, P, epi


def is_projective(M):
    A = M.algebra
    mult = top_multiplicities(M)
    return M.dim == sum(m * projective_module(A, v).dim for v, m in enumerate(mult))


def hom_to_regular_right_module(M):
    """Hom_A(M, A) as a left module over the opposite algebra."""
    A = M.algebra
    f = A.field
    op = A.opposite()
    R = regular_module(A)
    H = hom_matrices(M, R)
    n = A.num_vertices
    flat = [sum(h, []) for h in H]
    width = A.dim * M.dim
    basis, vertex_of = [], []
    for v in range(n):
        Rv = A.right_matrix(A.idempotents[v])
        comps = [sum(la.matmul(Rv, h, f), []) for h in H]
        rows = la.rref(comps, f, width)[0]
        basis.extend(rows)
        vertex_of.extend([v] * len(rows))
    if not basis:
        return zero_module(op), []
    coords = la.Coordinates(basis, f, width)
    acts = []
    for g in op.generators():
        Rg = A.right_matrix(g)
        cols = []
        for x in basis:
            h = [x[r * M.dim:(r + 1) * M.dim] for r in range(A.dim)]
            cols.append(coords(sum(la.matmul(Rg, h, f), [])))
        acts.append(la.transpose(cols, len(basis)))
    return FDModule(op, vertex_of, acts, name=f"Hom({M.name},A)"), basis


def nakayama(P, check=True):
    """nu P = D Hom_A(P, A) for a projective module P."""
    if check and not is_projective(P):
        raise ModuleError("Nakayama functor applied to a non-projective module")
    H, _ = hom_to_regular_right_module(P)
    N = duality_D(H)
    N.name = f"nu({P.name})"
    return N


# decomposition


def _min_poly(mat, f):
    """Minimal polynomial coefficients (low to high, monic) of a square matrix."""
    n = len(mat)
    powers = [sum(la.identity(n, f), [])]
    cur = la.identity(n, f)
    while True:
        cur = la.matmul(cur, mat, f)
        flat = sum(cur, [])
        sol = la.solve_linear(la.transpose(powers, n * n), flat, f)
        if sol.consistent:
            return [f(-c) for c in sol.particular] + [f.one()]
        powers.append(flat)


def _poly_factors(coeffs, f):
    """Pairwise coprime prime-power factors of a polynomial (coefficients low to high)."""
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(str(c)) * t ** k for k, c in enumerate(coeffs))
    if f.p is None:
        poly = sympy.Poly(expr, t, domain=sympy.QQ)
    else:
        poly = sympy.Poly(expr, t, modulus=f.p)
    _, facs = poly.factor_list()
    out = []
    for q, e in facs:
        cs = (q ** e).all_coeffs()[::-1]
        out.append([f(Fraction(int(sympy.Rational(c).p), int(sympy.Rational(c).q))) for c in cs])
    return out


def _eval_poly(coeffs, mat, f):
    n = len(mat)
    out = la.zeros(n, n, f)
    for c in reversed(coeffs):
        out = la.matmul(out, mat, f)
        for i in range(n):
            out[i][i] = f(out[i][i] + c)
    return out


def _poly_div(num, den, f):
    num = list(num)
    q = [f.zero()] * (len(num) - len(den) + 1)
    inv = f.inv(den[-1])
    for k in range(len(q) - 1, -1, -1):
        c = f(num[k + len(den) - 1] * inv)
        q[k] = c
        for i, d in enumerate(den):
            num[k + i] = f(num[k + i] - c * d)
    return q


def _fitting_split(M, phi):
    """Split M by coprime factors of phi's minimal polynomial, or None."""
    f = M.field
    m = _min_poly(phi, f)
    if len(m) <= 2:
        return None
    facs = _poly_factors(m, f)
    if len(facs) < 2:
        return None
    q = facs[0]
    rest = _poly_div(m, q, f)
    K1 = la.kernel(_eval_poly(q, phi, f), f, M.dim)
    K2 = la.kernel(_eval_poly(rest, phi, f), f, M.dim)
    return submodule_basis(M, K1), submodule_basis(M, K2)


def endo_radical(M, endos=None):
    """Basis of rad End(M) if End(M) is local, else None.

    End(M) is local (split) when every basis endomorphism has a single
    eigenvalue and the shifted elements span a nilpotent subalgebra.
    """
    from .algebra import single_eigenvalue
    f = M.field
    if endos is None:
        endos = hom_matrices(M, M)
    n = M.dim
    if n == 0:
        return None
    shifted = []
    for h in endos:
        lam = single_eigenvalue(h, f)
        if lam is None:
            return None
        shifted.append([[f(h[i][j] - (lam if i == j else 0)) for j in range(n)] for i in range(n)])
    J = la.rref([sum(s, []) for s in shifted], f, n * n)[0]
    basis = [[row[i * n:(i + 1) * n] for i in range(n)] for row in J]
    # nilpotent subalgebra: powers of J must reach zero
    cur = basis
    for _ in range(n + 1):
        if not cur:
            return basis
        prods = [sum(la.matmul(x, y, f), []) for x in cur for y in basis]
        R = la.rref(prods, f, n * n)[0]
        cur = [[row[i * n:(i + 1) * n] for i in range(n)] for row in R]
    return None


def is_indecomposable(M):
    return M.dim > 0 and endo_radical(M) is not None


def _candidates(endos, rng, f, budget):
    for h in endos:
        yield h
    n = len(endos[0])
    for attempt in range(budget):
        coeffs = [f.random(rng) for _ in endos]
        x = la.zeros(n, n, f)
        for c, h in zip(coeffs, endos):
            if c:
                x = la.add(x, la.scale(h, c, f), f)
        if attempt >= budget // 2:
            # later attempts multiply two random elements
            coeffs = [f.random(rng) for _ in endos]
            y = la.zeros(n, n, f)
            for c, h in zip(coeffs, endos):
                if c:
                    y = la.add(y, la.scale(h, c, f), f)
            x = la.matmul(x, y, f)
        yield x


RETRY_BUDGET = 32


def decompose(M, seed=0):
    """Indecomposable summands as a list of (module, inclusion, projection).

    inclusion is dim M x dim X and projection dim X x dim M; the summands
    give an internal direct sum decomposition of M.
    """
    f = M.field
    if M.dim == 0:
        return []
    rng = random.Random(seed)
    pieces = []  # bases (vectors in M) of indecomposable summands
    stack = [[la.identity(M.dim, f)[k] for k in range(M.dim)]]
    while stack:
        basis = stack.pop()
        X = module_on_basis(M, basis)
        endos = hom_matrices(X, X)
        if endo_radical(X, endos) is not None:
            pieces.append(basis)
            continue
        split = None
        for phi in _candidates(endos, rng, f, RETRY_BUDGET):
            split = _fitting_split(X, phi)
            if split is not None:
                break
        if split is None:
            raise DecompositionError("no splitting endomorphism found within the retry budget")
        for part in split:
            # express in M coordinates
            vecs = [la.vcomb(x, basis, f, M.dim) for x in part]
            stack.append(vecs)
    pieces.sort(key=lambda b: (len(b), [_vertex_of_vector(M, x) for x in b]))
    allvecs = [x for b in pieces for x in b]
    coords = la.Coordinates(allvecs, f, M.dim)
    # projection rows: coordinates of standard vectors
    coord_cols = [coords(la.identity(M.dim, f)[k]) for k in range(M.dim)]
    out = []
    off = 0
    for b in pieces:
        X = module_on_basis(M, b)
        inc = la.transpose(b, M.dim)
        proj = [[coord_cols[k][off + r] for k in range(M.dim)] for r in range(len(b))]
        out.append((X, inc, proj))
        off += len(b)
    return out


def indecomposable_summands(M, seed=0):
    return [X for X, _, _ in decompose(M, seed)]


def _nilpotent(mat, f):
    n = len(mat)
    P = mat
    k = 1
    while k < n:
        P = la.matmul(P, P, f)
        k *= 2
    return la.is_zero_matrix(P)


def indecomposables_isomorphic(X, Y):
    """Isomorphism test for indecomposable modules.

    X and Y are isomorphic exactly when some composite X -> Y -> X of
    basis homs is not nilpotent.
    """
    if X.dim != Y.dim or X.dim_vector() != Y.dim_vector():
        return False
    if X.dim == 0:
        return True
    f = X.field
    F = hom_matrices(X, Y)
    if not F:
        return False
    G = hom_matrices(Y, X)
    for a in F:
        for b in G:
            if not _nilpotent(la.matmul(b, a, f), f):
                return True
    # a sum of nilpotent composites can still be invertible only if
    # End(X) is not local, which cannot happen for indecomposables
    return False


def indecomposable_isomorphism(X, Y):
    """An invertible hom X -> Y between indecomposables, or None."""
    if X.dim != Y.dim or X.dim_vector() != Y.dim_vector():
        return None
    f = X.field
    F = hom_matrices(X, Y)
    G = hom_matrices(Y, X)
    for a in F:
        for b in G:
            if not _nilpotent(la.matmul(b, a, f), f):
                return a
    return None


def iso_classes(mods):
    """Group indecomposables into isomorphism classes: list of (rep, count)."""
    classes = []
    for X in mods:
        for k, (R, c) in enumerate(classes):
            if indecomposables_isomorphic(X, R):
                classes[k] = (R, c + 1)
                break
        else:
            classes.append((X, 1))
    return classes


def is_isomorphic(M, N, seed=0):
    if M.algebra is not N.algebra:
        raise ModuleError("modules over different algebras")
    if M.dim_vector() != N.dim_vector():
        return False
    if M.dim == 0:
        return True
    XM = indecomposable_summands(M, seed)
    XN = indecomposable_summands(N, seed)
    if len(XM) != len(XN):
        return False
    used = [False] * len(XN)
    for X in XM:
        for k, Y in enumerate(XN):
            if not used[k] and indecomposables_isomorphic(X, Y):
                used[k] = True
                break
        else:
            return False
    return True


def same_add(M, N, seed=0):
    """add(M) = add(N): same indecomposable summands up to multiplicity."""
    cm = [R for R, _ in iso_classes(indecomposable_summands(M, seed))]
    cn = [R for R, _ in iso_classes(indecomposable_summands(N, seed))]
    if len(cm) != len(cn):
        return False
    return all(any(indecomposables_isomorphic(X, Y) for Y in cn) for X in cm)


def in_add(X, M, seed=0):
    """Every indecomposable summand of X is a summand of M."""
    cm = [R for R, _ in iso_classes(indecomposable_summands(M, seed))]
    for Y in indecomposable_summands(X, seed):
        if not any(indecomposables_isomorphic(Y, R) for R in cm):
            return False
    return True


# approximations


def min_right_approximation(target, X, seed=0):
    """Minimal right add(X)-approximation X' -> target.

    For each indecomposable summand X_i of X (one per isomorphism class)
    the chosen maps X_i -> target form a basis of Hom(X_i, target) modulo
    the maps that factor through radical maps X_i -> X_j.  The result is
    then checked for the approximation property and for right minimality
    by discarding summands.
    Returns (Xprime, hom, summands) where summands lists the indecomposable
    pieces of Xprime in order.
    """
    f = target.field
    A = target.algebra
    reps = [R for R, _ in iso_classes(indecomposable_summands(X, seed))] if X.dim else []
    homs = {i: hom_matrices(R, target) for i, R in enumerate(reps)}
    chosen = []
    for i, R in enumerate(reps):
        H = homs[i]
        if not H:
            continue
        radmaps = []
        for j, S in enumerate(reps):
            if not homs[j]:
                continue
            if i == j:
                rad = endo_radical(R)
            else:
                rad = hom_matrices(R, S)
            for h in rad:
                for g in homs[j]:
                    radmaps.append(sum(la.matmul(g, h, f), []))
        flat = [sum(h, []) for h in H]
        keep = la.complement_basis(radmaps, flat, f, target.dim * R.dim)
        for x in keep:
            chosen.append((R, [x[r * R.dim:(r + 1) * R.dim] for r in range(target.dim)]))
    if not chosen:
        Z = zero_module(A)
        return Z, ModuleHom(Z, target, la.zeros(target.dim, 0, f)), []
    Xp, _, _ = direct_sum([R for R, _ in chosen])
    mat = [sum((m[r] for _, m in chosen), []) for r in range(target.dim)]
    phi = ModuleHom(Xp, target, mat)
    summands = [R for R, _ in chosen]
    if not _is_approximation(summands, [m for _, m in chosen], reps, target):
        raise ModuleError("approximation property failed")
    for k in range(len(chosen)):
        rest = [c for n, c in enumerate(chosen) if n != k]
        if _is_approximation([R for R, _ in rest], [m for _, m in rest], reps, target):
            raise ModuleError("approximation is not right minimal")
    return Xp, phi, summands


def _is_approximation(summands, maps, reps, target):
    f = target.field
    for R in reps:
        need = hom_matrices(R, target)
        if not need:
            continue
        got = []
        for S, m in zip(summands, maps):
            for h in hom_matrices(R, S):
                got.append(sum(la.matmul(m, h, f), []))
        if not got or la.rank(got, f) < la.rank(got + [sum(x, []) for x in need], f):
            return False
    return True


# nu-stable part and ideals


def projective_injective_map(A, seed=0):
    """For each vertex v, the vertex w with nu P_v = I_v isomorphic to P_w (or None)."""
    key = ("nuperm", seed)
    if key in A._cache:
        return A._cache[key]
    out = []
    for v in range(A.num_vertices):
        I = injective_module(A, v)
        w = next((w for w in range(A.num_vertices)
                  if indecomposables_isomorphic(I, projective_module(A, w))), None)
        out.append(w)
    A._cache[key] = out
    return out


def max_nu_stable(A, seed=0):
    """Direct sum of the P_v with nu^i P_v projective-injective for all i >= 0."""
    pi = projective_injective_map(A, seed)
    injective_proj = set(w for w in pi if w is not None)
    stable = []
    for v in range(A.num_vertices):
        if v not in injective_proj:
            continue
        seen = set()
        w = v
        ok = True
        while w not in seen:
            seen.add(w)
            w = pi[w]
            if w is None:
                ok = False
                break
        if ok:
            stable.append(v)
    E = projective_sum(A, stable)
    E.name = "E"
    return E


def nabla_ideal(A, e):
    """{a in A : e A a = 0} for e the sum of the given vertex idempotents."""
    f = A.field
    verts = sorted(set(e))
    rows = []
    for b, (i, j) in enumerate(A.corners):
        if i in verts:
            rows.extend(A.left_matrix(A.basis_vector(b)))
    basis = la.kernel(rows, f, A.dim) if rows else [A.basis_vector(b) for b in range(A.dim)]
    I = AlgebraIdeal(A, basis)
    return I


def nabla_right_check(A, e, I):
    """I e = 0."""
    for x in I.basis:
        for v in e:
            if any(A.mul(x, A.idempotents[v])):
                return False
    return True


def socle_ideal(A, vertices):
    """soc(P) for P = sum of A e_v, as a subspace of A; must be a two-sided ideal."""
    f = A.field
    out = []
    for v in vertices:
        P = projective_module(A, v)
        soc = socle_radical_top(P)
        inc = soc["socle_inclusion"]
        for col in la.transpose(inc, P.dim) if soc["socle"].dim else []:
            x = A.zero()
            for k, b in enumerate(P.basis_in_algebra):
                x[b] = col[k]
            out.append(x)
    try:
        return AlgebraIdeal(A, out)
    except AlgebraError:
        raise ModuleError("socle of this projective is not a two-sided ideal") from None


def module_from_representation(A, dims, arrow_maps, name=None):
    """Module of a presented algebra from vector spaces at vertices and arrow matrices.

    arrow_maps[label] for an arrow i -> j is a (dims[i] x dims[j]) matrix,
    the action of the arrow from the space at j to the space at i.
    """
    f = A.field
    paths = getattr(A, "basis_paths", None)
    if paths is None:
        raise ModuleError("algebra has no path basis")
    n = A.num_vertices
    if len(dims) != n or any(d < 0 for d in dims):
        raise ModuleError("one nonnegative dimension per vertex is needed")
    offs = [sum(dims[:v]) for v in range(n)]
    total = sum(dims)
    vertex_of = [v for v in range(n) for _ in range(dims[v])]
    quiver = A.presentation.quiver
    full = {}
    for label, s, t in quiver.arrows:
        m = arrow_maps.get(label)
        big = la.zeros(total, total, f)
        if m is not None and dims[s] and dims[t]:
            if len(m) != dims[s] or any(len(row) != dims[t] for row in m):
                raise ModuleError(f"matrix of {label} must be {dims[s]} x {dims[t]}")
            for r in range(dims[s]):
                for c in range(dims[t]):
                    big[offs[s] + r][offs[t] + c] = f(m[r][c])
        full[label] = big
    extra = set(arrow_maps) - set(full)
    if extra:
        raise ModuleError(f"unknown arrows {sorted(extra)}")
    basis_act = []
    for v, arr in paths:
        if not arr:
            m = la.zeros(total, total, f)
            for k in range(offs[v], offs[v] + dims[v]):
                m[k][k] = f.one()
        else:
            m = full[arr[0]]
            for l in arr[1:]:
                m = la.matmul(m, full[l], f)
        basis_act.append(m)
    acts = []
    for g in A.generators():
        m = la.zeros(total, total, f)
        for b, c in enumerate(g):
            if c:
                m = la.add(m, la.scale(basis_act[b], c, f), f)
        acts.append(m)
    M = FDModule(A, vertex_of, acts, name=name)
    M.check()
    return M
