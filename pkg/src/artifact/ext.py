"""Minimal projective resolutions, Ext groups and Yoneda products.

A class in Ext^i(X, Y) is represented by a cocycle P_i -> Y on the
minimal resolution P of X.  Products follow the "first then second"
order: for f in Ext^i(X, Y) and g in Ext^j(Y, Z) the product f*g lies in
Ext^{i+j}(X, Z) and is computed by lifting f to a chain map of
resolutions and composing with g.
"""

from . import linalg as la
from . import modcat as mc


class ExtError(ValueError):
    pass


class ProjResolution:
    """P_k -> ... -> P_0 -> M, built from iterated projective covers.

    kernels[k] is (K_k, inclusion K_k -> P_{k-1}) for k >= 1 and
    covers[k] is the epi P_k -> K_k (K_0 = M).  diffs[k] is P_k -> P_{k-1}.
    """

    def __init__(self, module):
        self.module = module
        self.field = module.field
        self.terms = []
        self.covers = []
        self.kernels = [(module, None)]
        self.diffs = [None]
        self.terminated_at = None

    @property
    def cap(self):
        return len(self.terms) - 1

    @property
    def augmentation(self):
        return self.covers[0]

    def extend(self, cap):
        f = self.field
        A = self.module.algebra
        while len(self.terms) <= cap:
            k = len(self.terms)
            K, inc = self.kernels[k]
            P, epi = mc.projective_cover(K)
            self.terms.append(P)
            self.covers.append(epi.matrix)
            if k >= 1:
                self.diffs.append(la.matmul(inc, epi.matrix, f, K.dim) if P.dim and K.dim
                                  else la.zeros(self.terms[k - 1].dim, P.dim, f))
            if P.dim == 0:
                K2, inc2 = mc.zero_module(A), la.zeros(0, 0, f)
                if self.terminated_at is None:
                    self.terminated_at = k
            else:
                K2, inc2 = mc.kernel_module(epi)
            self.kernels.append((K2, inc2))
        return self

    def projective_dimension(self):
        """Length of the resolution if it stopped within the computed range."""
        if self.terminated_at is None:
            return None
        return max(self.terminated_at - 1, 0)

    def tail(self, shift=1):
        """The resolution of K_shift obtained by dropping the first terms."""
        K, _ = self.kernels[shift]
        key = ("tailof", id(self), shift)
        if ("res",) in K._cache:
            return K._cache[("res",)]
        R = ProjResolution(K)
        R.terms = self.terms[shift:]
        R.covers = self.covers[shift:]
        R.kernels = [(K, None)] + self.kernels[shift + 1:]
        R.diffs = [None] + self.diffs[shift + 1:]
        R.parent = (self, shift)
        if self.terminated_at is not None:
            R.terminated_at = max(self.terminated_at - shift, 0)
        K._cache[("res",)] = R
        R._tail_key = key
        return R

    def __repr__(self):
        return f"ProjResolution(dims={[P.dim for P in self.terms]})"


def min_proj_resolution(M, cap):
    """Minimal projective resolution of M with terms P_0..P_cap (cached on M)."""
    res = M._cache.get(("res",))
    if res is None:
        res = ProjResolution(M)
        M._cache[("res",)] = res
    parent = getattr(res, "parent", None)
    if parent is not None and res.cap < cap:
        base, shift = parent
        base.extend(cap + shift)
        res.terms = base.terms[shift:]
        res.covers = base.covers[shift:]
        res.kernels = [(M, None)] + base.kernels[shift + 1:]
        res.diffs = [None] + base.diffs[shift + 1:]
        if base.terminated_at is not None:
            res.terminated_at = max(base.terminated_at - shift, 0)
        return res
    return res.extend(cap)


def summand_generators(P):
    """(vertex, generator vector) for each indecomposable summand of a projective sum."""
    A = P.algebra
    f = P.field
    out = []
    off = 0
    for v in P.summand_vertices:
        Pv = mc.projective_module(A, v)
        g = [f.zero()] * P.dim
        e = A.idempotents[v]
        for k, b in enumerate(Pv.basis_in_algebra):
            g[off + k] = e[b]
        out.append((v, g, off, Pv))
        off += Pv.dim
    return out


def lift_from_projective(P, target, phi, psi):
    """Hom F: P -> target with phi F = psi.

    phi is a matrix target -> N and psi a matrix P -> N.  Raises ExtError
    when no lift exists.
    """
    f = P.field
    blocks = []
    for v, g, off, Pv in summand_generators(P):
        rhs = la.matvec(psi, g, f) if psi else []
        cols = target.at(v)
        if not cols:
            if any(rhs):
                raise ExtError("no lift exists")
            x = [f.zero()] * target.dim
        else:
            sub = [[row[c] for c in cols] for row in phi] if phi else []
            if not sub:
                x = [f.zero()] * target.dim
            else:
                sol = la.solve_linear(sub, rhs, f, len(cols))
                if not sol.consistent:
                    raise ExtError("no lift exists")
                x = [f.zero()] * target.dim
                for c, val in zip(cols, sol.particular):
                    x[c] = val
        blocks.append(mc.map_from_projective(Pv, target, x))
    if target.dim == 0:
        return []
    return [sum((blk[r] for blk in blocks), []) for r in range(target.dim)]


class ExtSpace:
    """Ext^i(M, N) with reduced-echelon cocycle representatives."""

    def __init__(self, M, N, i, res):
        self.source, self.target, self.degree, self.resolution = M, N, i, res
        f = M.field
        self.field = f
        P = res.terms[i] if i < len(res.terms) else mc.zero_module(M.algebra)
        self.P = P
        self.width = N.dim * P.dim
        H = mc.hom_matrices(P, N) if P.dim and N.dim else []
        K, inc = res.kernels[i + 1]
        cocycles = []
        if H:
            if K.dim:
                # cocycles vanish on the image of the next differential
                rows = []
                for h in H:
                    rows.append(sum(la.matmul(h, inc, f), []))
                coeffs = la.kernel(la.transpose(rows, N.dim * K.dim), f, len(H))
                cocycles = [la.vcomb(c, [sum(h, []) for h in H], f, self.width) for c in coeffs]
            else:
                cocycles = [sum(h, []) for h in H]
        bounds = []
        if i >= 1 and H:
            Pprev = res.terms[i - 1]
            d = res.diffs[i]
            for h in mc.hom_matrices(Pprev, N):
                bounds.append(sum(la.matmul(h, d, f, Pprev.dim), []))
        self.B, self.Bpiv = la.rref(bounds, f, self.width) if bounds else ([], [])
        reduced = [la.reduce_mod(c, self.B, self.Bpiv, f) for c in cocycles]
        self.reps, self.rpiv = la.rref(reduced, f, self.width) if reduced else ([], [])

    @property
    def dim(self):
        return len(self.reps)

    def matrix(self, flat):
        n = self.P.dim
        return [flat[r * n:(r + 1) * n] for r in range(self.target.dim)]

    def coordinates(self, cocycle):
        f = self.field
        flat = sum(cocycle, []) if cocycle and isinstance(cocycle[0], list) else list(cocycle)
        if not flat:
            return []
        r = la.reduce_mod(flat, self.B, self.Bpiv, f)
        c = [r[p] for p in self.rpiv]
        if any(f(a - b) for a, b in zip(r, la.vcomb(c, self.reps, f, self.width))):
            raise ExtError("not a cocycle")
        return c

    def basis(self):
        return [ExtClass(self, [self.field.one() if k == j else self.field.zero()
                                for k in range(self.dim)]) for j in range(self.dim)]

    def element(self, coords):
        return ExtClass(self, list(coords))


class ExtClass:
    def __init__(self, space, coordinates):
        self.space = space
        self.coordinates = coordinates

    @property
    def degree(self):
        return self.space.degree

    @property
    def source(self):
        return self.space.source

    @property
    def target(self):
        return self.space.target

    @property
    def cocycle(self):
        s = self.space
        flat = la.vcomb(self.coordinates, s.reps, s.field, s.width)
        return s.matrix(flat)

    def is_zero(self):
        return not any(self.coordinates)

    def __repr__(self):
        return f"ExtClass(deg={self.degree}, coords={self.coordinates})"


def ext_space(M, N, i, cap=None):
    cap = i if cap is None else cap
    if i > cap:
        raise ExtError("degree exceeds the resolution cap")
    res = min_proj_resolution(M, cap)
    key = ("ext", id(N), i)
    cached = M._cache.get(key)
    if cached is not None and cached.target is N:
        return cached
    S = ExtSpace(M, N, i, res)
    M._cache[key] = S
    return S


def ext_group(M, N, i, cap=None):
    """Basis of Ext^i(M, N) as ExtClass objects."""
    return ext_space(M, N, i, cap).basis()


def lift_chain_map(f_class, length):
    """Comparison maps S_0..S_length with S_k: P_{i+k} -> Q_k.

    P resolves f's source and Q its target; S_0 lifts the cocycle through
    Q_0 -> Y and d S_k = S_{k-1} d for k >= 1.
    """
    i = f_class.degree
    X, Y = f_class.source, f_class.target
    fld = X.field
    rP = min_proj_resolution(X, i + length)
    rQ = min_proj_resolution(Y, length)
    maps = []
    Pi = rP.terms[i]
    S = lift_from_projective(Pi, rQ.terms[0], rQ.augmentation, f_class.cocycle) if Pi.dim else []
    maps.append(S)
    for k in range(1, length + 1):
        Pk = rP.terms[i + k]
        Qk = rQ.terms[k]
        if Pk.dim == 0:
            maps.append([[] for _ in range(Qk.dim)])
            continue
        prev = maps[-1]
        psi = la.matmul(prev, rP.diffs[i + k], fld, rP.terms[i + k - 1].dim) if prev and prev[0] else \
            la.zeros(rQ.terms[k - 1].dim, Pk.dim, fld)
        if Qk.dim == 0:
            if any(any(r) for r in psi):
                raise ExtError("comparison map does not lift")
            maps.append([])
            continue
        maps.append(lift_from_projective(Pk, Qk, rQ.diffs[k], psi))
    return maps


def yoneda_product(f_class, g_class, sign=True):
    """f*g in Ext^{i+j}(X, Z) for f in Ext^i(X, Y), g in Ext^j(Y, Z).

    With sign=True the result carries the factor (-1)^{ij} coming from
    the shift of g by i.
    """
    if f_class.target is not g_class.source:
        raise ExtError("classes are not composable")
    i, j = f_class.degree, g_class.degree
    X, Z = f_class.source, g_class.target
    fld = X.field
    space = ext_space(X, Z, i + j, i + j)
    if space.P.dim == 0 or Z.dim == 0:
        return ExtClass(space, [fld.zero()] * space.dim)
    maps = lift_chain_map(f_class, j)
    Sj = maps[j]
    Qj = min_proj_resolution(f_class.target, j).terms[j]
    if Qj.dim == 0 or not Sj or not Sj[0]:
        return ExtClass(space, [fld.zero()] * space.dim)
    prod = la.matmul(g_class.cocycle, Sj, fld, Qj.dim)
    if sign and (i * j) % 2:
        prod = la.scale(prod, fld(-1), fld)
    return ExtClass(space, space.coordinates(prod))


def transport_sign(k):
    """Sign attached to the degree-k syzygy transport."""
    return -1 if k % 2 else 1


def syzygy_transport(f_class, check_selfinjective=True):
    """Image of f in Ext^k(X, X) under Ext^k(X, X) -> Ext^k(OmegaX, OmegaX).

    The class is lifted to a comparison map of the resolution of X and the
    degree-one component is pushed down to Omega X along P_1 -> Omega X.
    The resolution of Omega X is the tail of that of X.
    """
    from .algebra import is_selfinjective
    k = f_class.degree
    X = f_class.source
    if k < 1:
        raise ExtError("transport is only defined in positive degrees")
    if f_class.target is not X:
        raise ExtError("transport needs a self-extension")
    A = X.algebra
    if check_selfinjective and not is_selfinjective(A):
        raise ExtError("algebra is not self-injective")
    fld = X.field
    res = min_proj_resolution(X, k + 1)
    tail = res.tail(1)
    OX = tail.module
    space = ext_space(OX, OX, k, k)
    maps = lift_chain_map(f_class, 1)
    S1 = maps[1]
    P1 = res.terms[1]
    if not S1 or not S1[0] or OX.dim == 0:
        return ExtClass(space, [fld.zero()] * space.dim)
    coc = la.matmul(res.covers[1], S1, fld, P1.dim)
    if transport_sign(k) < 0:
        coc = la.scale(coc, fld(-1), fld)
    return ExtClass(space, space.coordinates(coc))


def omega_module(X, cap=1):
    """Omega X as the first kernel of the cached resolution of X."""
    res = min_proj_resolution(X, cap)
    return res.tail(1).module
