"""Finite-dimensional algebras given by structure constants.

Paths compose left to right: for arrows a: i -> j and b: j -> k the
product a*b is the path i -> j -> k.  Under this convention the vertex
idempotent e_i satisfies e_i * p = p exactly when p starts at i, and the
indecomposable projective left module A e_i is spanned by paths ending
at i.
"""

import itertools
import warnings

from . import linalg as la
from .linalg import Field


class AlgebraError(ValueError):
    pass


class NonSplitWarning(UserWarning):
    pass


class Quiver:
    def __init__(self, vertex_count, arrows):
        self.vertex_count = vertex_count
        self.arrows = [(str(l), int(s), int(t)) for l, s, t in arrows]
        labels = [a[0] for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise AlgebraError("arrow labels must be unique")
        for l, s, t in self.arrows:
            if not (0 <= s < vertex_count and 0 <= t < vertex_count):
                raise AlgebraError(f"arrow {l} has an endpoint out of range")
        self.index = {a[0]: n for n, a in enumerate(self.arrows)}

    def __repr__(self):
        return f"Quiver({self.vertex_count}, {self.arrows})"


class PathPresentation:
    """Quiver with relations.

    Each relation is a list of (coefficient, path) pairs and each path is a
    sequence of arrow labels read left to right.  Vertices are numbered
    from 0; vertex_names gives the labels shown to users.
    """

    def __init__(self, quiver, relations, field, nilpotency_cap, vertex_names=None):
        self.quiver = quiver
        self.relations = [[(field(c), tuple(p)) for c, p in rel] for rel in relations]
        self.field = field
        self.nilpotency_cap = nilpotency_cap
        self.vertex_names = list(vertex_names) if vertex_names else [
            str(i + 1) for i in range(quiver.vertex_count)]

    def __repr__(self):
        return (f"PathPresentation({self.quiver.vertex_count} vertices, "
                f"{len(self.quiver.arrows)} arrows, {len(self.relations)} relations)")


def _sparse(vec):
    return tuple((k, x) for k, x in enumerate(vec) if x)


class FDAlgebra:
    """Algebra with a basis, structure constants and (optionally) vertices.

    table[a][b] is the sparse coordinate tuple of basis[a] * basis[b].
    When idempotents are present the basis is adapted: every basis element
    lies in a single corner e_i A e_j, recorded in `corners`.
    """

    def __init__(self, field, labels, table, unit, idempotents=None, radical=None,
                 name=None, vertex_names=None, check=True):
        self.field = field
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.table = table
        self.unit = list(unit)
        self.idempotents = [list(e) for e in idempotents] if idempotents is not None else None
        self.name = name
        self.vertex_names = vertex_names
        self._radical = [list(r) for r in radical] if radical is not None else None
        self.corners = None
        self.arrows = None
        self.path_weights = None
        self._cache = {}
        if self.idempotents is not None:
            self.corners = self._find_corners()
            if self.vertex_names is None:
                self.vertex_names = [str(i + 1) for i in range(len(self.idempotents))]
        if check:
            self.check()

    # arithmetic

    def basis_vector(self, i):
        v = [self.field.zero()] * self.dim
        v[i] = self.field.one()
        return v

    def zero(self):
        return [self.field.zero()] * self.dim

    def mul(self, x, y):
        f = self.field
        out = [f.zero()] * self.dim
        xs = [(a, c) for a, c in enumerate(x) if c]
        ys = [(b, c) for b, c in enumerate(y) if c]
        corners = self.corners
        for a, ca in xs:
            row = self.table[a]
            for b, cb in ys:
                if corners is not None and corners[a][1] != corners[b][0]:
                    continue
                prod = row[b]
                if prod:
                    c = ca * cb
                    for k, v in prod:
                        out[k] += c * v
        if f.p is not None:
            out = [v % f.p for v in out]
        return out

    def add(self, x, y):
        return la.vadd(x, y, self.field)

    def sub(self, x, y):
        f = self.field
        return [f(a - b) for a, b in zip(x, y)]

    def scale(self, x, c):
        return la.vscale(x, c, self.field)

    def left_matrix(self, x):
        """Matrix (acting on column coordinates) of y -> x*y."""
        cols = [self.mul(x, self.basis_vector(b)) for b in range(self.dim)]
        return la.transpose(cols, self.dim)

    def right_matrix(self, x):
        cols = [self.mul(self.basis_vector(b), x) for b in range(self.dim)]
        return la.transpose(cols, self.dim)

    def left_action_matrices(self):
        """Left regular action: one matrix per basis element."""
        if "lam" not in self._cache:
            f = self.field
            mats = []
            for a in range(self.dim):
                m = la.zeros(self.dim, self.dim, f)
                for b in range(self.dim):
                    for k, v in self.table[a][b]:
                        m[k][b] = v
                mats.append(m)
            self._cache["lam"] = mats
        return self._cache["lam"]

    # structure

    @property
    def num_vertices(self):
        return len(self.idempotents) if self.idempotents is not None else None

    def _find_corners(self):
        corners = []
        es = self.idempotents
        for b in range(self.dim):
            v = self.basis_vector(b)
            found = None
            for i, ei in enumerate(es):
                left = self.mul(ei, v)
                if left != v:
                    continue
                for j, ej in enumerate(es):
                    if self.mul(v, ej) == v:
                        found = (i, j)
                        break
                break
            if found is None:
                raise AlgebraError(f"basis element {self.labels[b]} is not in a single corner")
            corners.append(found)
        return corners

    def corner_basis(self, i, j):
        """Indices of basis elements lying in e_i A e_j."""
        key = ("corner", i, j)
        if key not in self._cache:
            self._cache[key] = [b for b, c in enumerate(self.corners) if c == (i, j)]
        return self._cache[key]

    def check(self):
        """Unit, associativity and idempotent laws on basis elements."""
        f = self.field
        for b in range(self.dim):
            v = self.basis_vector(b)
            if self.mul(self.unit, v) != v or self.mul(v, self.unit) != v:
                raise AlgebraError("unit is not a two-sided identity")
        for a, b, c in itertools.product(range(self.dim), repeat=3):
            if self.corners is not None and (self.corners[a][1] != self.corners[b][0]
                                             or self.corners[b][1] != self.corners[c][0]):
                continue
            x, y, z = (self.basis_vector(i) for i in (a, b, c))
            if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)):
                raise AlgebraError(f"not associative on ({a},{b},{c})")
        if self.idempotents is not None:
            total = self.zero()
            for i, e in enumerate(self.idempotents):
                if self.mul(e, e) != e:
                    raise AlgebraError("idempotent is not idempotent")
                for j, g in enumerate(self.idempotents):
                    if i != j and any(self.mul(e, g)):
                        raise AlgebraError("idempotents are not orthogonal")
                total = self.add(total, e)
            if [f(x) for x in total] != [f(x) for x in self.unit]:
                raise AlgebraError("idempotents do not sum to the unit")

    def is_associative_witness(self):
        for a, b, c in itertools.product(range(self.dim), repeat=3):
            x, y, z = (self.basis_vector(i) for i in (a, b, c))
            if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)):
                return (a, b, c)
        return None

    def opposite(self):
        if "op" not in self._cache:
            table = [[self.table[b][a] for b in range(self.dim)] for a in range(self.dim)]
            op = FDAlgebra(self.field, self.labels, table, self.unit, self.idempotents,
                           self._radical, name=(self.name or "A") + "^op",
                           vertex_names=self.vertex_names, check=False)
            op._cache["op"] = self
            # keep generator order aligned so dual modules can reuse actions
            op._cache["gens"] = self.generators()
            self._cache["op"] = op
        return self._cache["op"]

    # radical

    def radical_basis(self):
        if self._radical is None:
            if self.idempotents is not None:
                self._radical = _radical_from_idempotents(self)
            else:
                self._radical = _radical_trace_form(self)
        return self._radical

    def radical_space(self):
        if "radrref" not in self._cache:
            self._cache["radrref"] = la.rref(self.radical_basis(), self.field, self.dim)
        return self._cache["radrref"]

    def in_radical(self, x):
        R, piv = self.radical_space()
        return not any(la.reduce_mod(x, R, piv, self.field))

    def radical_power(self, k):
        """RREF basis of rad^k (k >= 1)."""
        key = ("radpow", k)
        if key in self._cache:
            return self._cache[key]
        if k == 1:
            res = self.radical_space()[0]
        else:
            prev = self.radical_power(k - 1)
            rad = self.radical_basis()
            prods = [self.mul(x, y) for x in prev for y in rad]
            res = la.rref(prods, self.field, self.dim)[0]
        self._cache[key] = res
        return res

    def loewy_length(self):
        k = 1
        while self.radical_power(k):
            k += 1
            if k > self.dim + 1:
                raise AlgebraError("radical is not nilpotent")
        return k

    def generators(self):
        """Idempotents plus corner elements of rad spanning rad/rad^2.

        Returns a list of coordinate vectors generating the algebra.
        """
        if "gens" in self._cache:
            return self._cache["gens"]
        if self.idempotents is None:
            gens = [self.basis_vector(b) for b in range(self.dim)]
        else:
            gens = [list(e) for e in self.idempotents]
            for r in self.arrow_elements():
                gens.append(r)
        self._cache["gens"] = gens
        return gens

    def word_data(self):
        """Words in the generators whose products span the algebra.

        Returns (words, coords) where coords(x) expresses x in the word
        products.  Words are tuples of generator indices.
        """
        if "words" in self._cache:
            return self._cache["words"]
        f = self.field
        gens = self.generators()
        n0 = self.num_vertices or 0
        words, vecs = [], []
        R, piv = [], []
        frontier = []
        for k in range(n0 if n0 else len(gens)):
            words.append((k,))
            vecs.append(gens[k])
            frontier.append(((k,), gens[k]))
        R, piv = la.rref(vecs, f, self.dim)
        while frontier and len(R) < self.dim:
            nxt = []
            for w, v in frontier:
                for g in range(n0, len(gens)):
                    u = self.mul(v, gens[g])
                    if not any(la.reduce_mod(u, R, piv, f)):
                        continue
                    words.append(w + (g,))
                    vecs.append(u)
                    R, piv = la.rref(R + [u], f, self.dim)
                    nxt.append((w + (g,), u))
            frontier = nxt
        if len(R) < self.dim:
            raise AlgebraError("generators do not generate the algebra")
        coords = la.Coordinates(vecs, f, self.dim)
        self._cache["words"] = (words, coords)
        return self._cache["words"]

    def arrow_elements(self):
        """Corner-adapted radical elements whose classes form a basis of rad/rad^2."""
        if "arrowel" in self._cache:
            return self._cache["arrowel"]
        f = self.field
        rad2 = self.radical_power(2)
        out = []
        n = self.num_vertices
        for i in range(n):
            for j in range(n):
                corner_rad = self.corner_radical(i, j)
                out.extend(la.complement_basis(rad2, corner_rad, f, self.dim)
                           if rad2 else corner_rad)
        self._cache["arrowel"] = out
        return out

    def corner_radical(self, i, j):
        """Basis of e_i rad(A) e_j."""
        key = ("crad", i, j)
        if key not in self._cache:
            ei, ej = self.idempotents[i], self.idempotents[j]
            vecs = [self.mul(self.mul(ei, r), ej) for r in self.radical_basis()]
            self._cache[key] = la.rref(vecs, self.field, self.dim)[0]
        return self._cache[key]

    def corner_dim(self, i, j):
        return len(self.corner_basis(i, j))

    def split_check(self):
        """True when every e_i A e_i / e_i rad e_i is one-dimensional."""
        for i in range(self.num_vertices):
            if self.corner_dim(i, i) - len(self.corner_radical(i, i)) != 1:
                return False
        return True

    def center_dim(self):
        f = self.field
        gens = self.generators()
        rows = []
        for g in gens:
            L = self.left_matrix(g)
            R = self.right_matrix(g)
            rows.extend([f(a - b) for a, b in zip(r1, r2)] for r1, r2 in zip(L, R))
        return self.dim - la.rank(rows, f)

    def element_label(self, x):
        terms = []
        for k, c in enumerate(x):
            if c:
                terms.append(f"{c}*{self.labels[k]}" if c != 1 else self.labels[k])
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        nm = self.name or "FDAlgebra"
        return f"<{nm} dim={self.dim} over {self.field!r}>"


def single_eigenvalue(M, field):
    """The unique eigenvalue of M if M - lambda*I is nilpotent, else None."""
    n = len(M)
    if n == 0:
        return None
    v = [field.zero()] * n
    v[0] = field.one()
    krylov = [v]
    while True:
        w = la.matvec(M, krylov[-1], field)
        sol = la.solve_linear(la.transpose(krylov, n), w, field)
        if sol.consistent:
            c = sol.particular
            break
        krylov.append(w)
    r = len(krylov)
    if field.p is None or r % field.p:
        lam = field(c[r - 1] * field.inv(field(r)))
        candidates = [lam]
    else:
        candidates = list(range(field.p))
    for lam in candidates:
        N = [[field(M[i][j] - (lam if i == j else 0)) for j in range(n)] for i in range(n)]
        P = N
        k = 1
        while k < n:
            P = la.matmul(P, P, field)
            k *= 2
        if la.is_zero_matrix(P):
            return lam
    return None


def _radical_from_idempotents(A):
    """Radical of a basic split algebra with a complete set of primitive idempotents."""
    f = A.field
    rad = []
    for i in range(A.num_vertices):
        for j in range(A.num_vertices):
            idx = A.corner_basis(i, j)
            if i != j:
                rad.extend(A.basis_vector(b) for b in idx)
                continue
            # local corner algebra: radical is the kernel of its character
            chi = []
            for b in idx:
                cols = [A.mul(A.basis_vector(b), A.basis_vector(c)) for c in idx]
                Mb = [[col[r] for col in cols] for r in idx]
                lam = single_eigenvalue(Mb, f)
                if lam is None:
                    raise AlgebraError(f"corner e_{i}Ae_{i} is not local (idempotent not primitive)")
                chi.append(lam)
            for kv in la.kernel([chi], f, len(idx)):
                x = A.zero()
                for b, c in zip(idx, kv):
                    x[b] = c
                rad.append(x)
    rad = la.rref(rad, f, A.dim)[0]
    # basic: products across distinct vertices must stay radical
    R, piv = la.rref(rad, f, A.dim)
    for i in range(A.num_vertices):
        for j in range(A.num_vertices):
            if i == j:
                continue
            for a in A.corner_basis(i, j):
                for b in A.corner_basis(j, i):
                    prod = A.mul(A.basis_vector(a), A.basis_vector(b))
                    if any(la.reduce_mod(prod, R, piv, f)):
                        raise AlgebraError("algebra is not basic: two vertices are isomorphic")
    _check_nilpotent(A, rad)
    return rad


def _check_nilpotent(A, rad):
    cur = rad
    for _ in range(A.dim + 1):
        if not cur:
            return
        prods = [A.mul(x, y) for x in cur for y in rad]
        cur = la.rref(prods, A.field, A.dim)[0]
    raise AlgebraError("computed radical is not nilpotent")


def _radical_trace_form(A):
    f = A.field
    if f.p is not None and f.p <= A.dim:
        raise AlgebraError("radical of raw structure constants needs characteristic 0 or p > dim")
    mats = A.left_action_matrices()
    n = A.dim
    # Gram matrix of (x, y) -> trace(L_{xy})
    traces = [sum((mats[a][i][i] for i in range(n)), f.zero()) for a in range(n)]
    G = []
    for a in range(n):
        row = []
        for b in range(n):
            row.append(f(sum((c * traces[k] for k, c in A.table[a][b]), f.zero())))
        G.append(row)
    rad = la.kernel(G, f, n)
    _check_nilpotent(A, rad)
    return rad


class AlgebraIdeal:
    """A two-sided ideal given by a basis of coordinate vectors."""

    def __init__(self, parent, basis, check=True):
        self.parent = parent
        self.basis = la.rref(basis, parent.field, parent.dim)[0] if basis else []
        if check:
            self.check()

    @property
    def dim(self):
        return len(self.basis)

    def check(self):
        A = self.parent
        R, piv = la.rref(self.basis, A.field, A.dim)
        for x in self.basis:
            for b in range(A.dim):
                v = A.basis_vector(b)
                for y in (A.mul(v, x), A.mul(x, v)):
                    if any(la.reduce_mod(y, R, piv, A.field)):
                        raise AlgebraError("basis does not span a two-sided ideal")

    def contains(self, x):
        R, piv = la.rref(self.basis, self.parent.field, self.parent.dim)
        return not any(la.reduce_mod(x, R, piv, self.parent.field))

    def __eq__(self, other):
        return (isinstance(other, AlgebraIdeal) and self.parent is other.parent
                and self.basis == other.basis)

    def __repr__(self):
        return f"AlgebraIdeal(dim={self.dim})"


def ideal_generated_by(A, elements):
    """Two-sided ideal generated by the given elements."""
    f = A.field
    gens = A.generators()
    cur = la.rref([list(x) for x in elements], f, A.dim)[0]
    while True:
        new = list(cur)
        for x in cur:
            for g in gens:
                new.append(A.mul(g, x))
                new.append(A.mul(x, g))
        R = la.rref(new, f, A.dim)[0]
        if len(R) == len(cur):
            return AlgebraIdeal(A, R)
        cur = R


# construction from quivers with relations


class _PathSpace:
    """All paths of length <= top, indexed so that longer paths come later."""

    def __init__(self, quiver, top):
        self.quiver = quiver
        self.paths = []  # (src, tgt, arrows)
        for v in range(quiver.vertex_count):
            self.paths.append((v, v, ()))
        layer = [(s, t, (n,)) for n, (l, s, t) in enumerate(quiver.arrows)]
        length = 1
        while layer and length <= top:
            self.paths.extend(layer)
            if length == top:
                break
            nxt = []
            for s, t, arr in layer:
                for n, (l, s2, t2) in enumerate(quiver.arrows):
                    if s2 == t:
                        nxt.append((s, t2, arr + (n,)))
            layer = nxt
            length += 1
        self.index = {p[2] if p[2] else ("e", p[0]): i for i, p in enumerate(self.paths)}

    def key(self, i):
        s, t, arr = self.paths[i]
        return arr if arr else ("e", s)

    def length(self, i):
        return len(self.paths[i][2])

    def concat(self, i, j):
        """Index of path_i * path_j, or None when zero or too long."""
        s1, t1, a1 = self.paths[i]
        s2, t2, a2 = self.paths[j]
        if t1 != s2:
            return None
        if not a1:
            return j
        if not a2:
            return i
        return self.index.get(a1 + a2)

    def label(self, i):
        s, t, arr = self.paths[i]
        if not arr:
            return f"e{s + 1}"
        return ".".join(self.quiver.arrows[n][0] for n in arr)


class _Ideal:
    """Echelon family of sparse vectors with leading term = largest index."""

    def __init__(self, field):
        self.field = field
        self.rows = {}

    def reduce(self, v):
        f = self.field
        v = dict(v)
        out = {}
        while v:
            k = max(v)
            c = v.pop(k)
            if not c:
                continue
            row = self.rows.get(k)
            if row is None:
                out[k] = c
                continue
            for kk, cc in row.items():
                if kk == k:
                    continue
                nv = f(v.get(kk, 0) - c * cc)
                if nv:
                    v[kk] = nv
                else:
                    v.pop(kk, None)
        return out

    def insert(self, v):
        r = self.reduce(v)
        if not r:
            return None
        k = max(r)
        inv = self.field.inv(r[k])
        r = {kk: self.field(cc * inv) for kk, cc in r.items()}
        self.rows[k] = r
        return r


def from_presentation(p, weights=None):
    """Quotient of the path algebra by the ideal generated by the relations.

    The ideal must contain every path of length p.nilpotency_cap; this is
    checked modulo paths of length cap + 1.
    """
    f = p.field
    Q = p.quiver
    cap = p.nilpotency_cap
    if cap < 1:
        raise AlgebraError("nilpotency cap must be positive")
    space = _PathSpace(Q, cap)
    ideal = _Ideal(f)
    queue = []
    for rel in p.relations:
        vec = {}
        ends = set()
        for c, path in rel:
            if len(path) < 2:
                raise AlgebraError(f"relation component {'.'.join(path) or '()'} has length < 2")
            try:
                arr = tuple(Q.index[l] for l in path)
            except KeyError as e:
                raise AlgebraError(f"unknown arrow {e.args[0]}") from None
            for a, b in zip(arr, arr[1:]):
                if Q.arrows[a][2] != Q.arrows[b][1]:
                    raise AlgebraError(f"path {'.'.join(path)} is not composable")
            ends.add((Q.arrows[arr[0]][1], Q.arrows[arr[-1]][2]))
            if len(arr) > cap:
                continue
            i = space.index[arr]
            vec[i] = f(vec.get(i, 0) + c)
        if len(ends) > 1:
            raise AlgebraError("relation mixes paths with different endpoints")
        vec = {k: v for k, v in vec.items() if v}
        if vec:
            queue.append(vec)
    arrows = list(range(Q.vertex_count, Q.vertex_count + len(Q.arrows)))
    while queue:
        v = queue.pop()
        r = ideal.insert(v)
        if r is None:
            continue
        for a in arrows:
            left, right = {}, {}
            for k, c in r.items():
                kl = space.concat(a, k)
                if kl is not None:
                    left[kl] = c
                kr = space.concat(k, a)
                if kr is not None:
                    right[kr] = c
            if left:
                queue.append(left)
            if right:
                queue.append(right)
    for i in range(len(space.paths)):
        if space.length(i) == cap and ideal.reduce({i: f.one()}):
            raise AlgebraError(f"relations do not kill paths of length {cap}; raise the cap")
    normal = [i for i in range(len(space.paths)) if i not in ideal.rows]
    pos = {i: n for n, i in enumerate(normal)}
    n = len(normal)
    table = []
    for i in normal:
        row = []
        for j in normal:
            k = space.concat(i, j)
            if k is None:
                row.append(())
                continue
            red = ideal.reduce({k: f.one()})
            row.append(tuple(sorted((pos[kk], cc) for kk, cc in red.items())))
        table.append(row)
    unit = [f.zero()] * n
    idems = []
    for v in range(Q.vertex_count):
        e = [f.zero()] * n
        e[pos[v]] = f.one()
        unit[pos[v]] = f.one()
        idems.append(e)
    rad = []
    for i in normal:
        if space.length(i) >= 1:
            x = [f.zero()] * n
            x[pos[i]] = f.one()
            rad.append(x)
    labels = [space.label(i) for i in normal]
    A = FDAlgebra(f, labels, table, unit, idems, rad, vertex_names=p.vertex_names, check=False)
    A.presentation = p
    A.arrows = {}
    for a_idx, (l, s, t) in enumerate(Q.arrows):
        k = Q.vertex_count + a_idx
        A.arrows[l] = ideal_reduce_to_vector(ideal, k, pos, n, f)
    A.path_lengths = [space.length(i) for i in normal]
    A.basis_paths = [(space.paths[i][0], tuple(Q.arrows[a][0] for a in space.paths[i][2]))
                     for i in normal]
    if weights is not None:
        A.path_weights = _path_weights(space, normal, weights, Q, p, f)
    return A


def ideal_reduce_to_vector(ideal, k, pos, n, f):
    red = ideal.reduce({k: f.one()})
    x = [f.zero()] * n
    for kk, cc in red.items():
        x[pos[kk]] = cc
    return x


def _path_weights(space, normal, weights, Q, p, f):
    w = [weights[l] for l, s, t in Q.arrows]
    for rel in p.relations:
        degs = {sum(weights[l] for l in path) for c, path in rel}
        if len(degs) > 1:
            raise AlgebraError("relations are not homogeneous for the given weights")
    return [sum(w[a] for a in space.paths[i][2]) for i in normal]


def graded_dims(A):
    """Dimensions per weight for an algebra built with arrow weights."""
    if A.path_weights is None:
        raise AlgebraError("algebra has no weights")
    out = {}
    for w in A.path_weights:
        out[w] = out.get(w, 0) + 1
    return dict(sorted(out.items()))


def evaluate_path(A, path):
    """Product of arrow elements along a path of labels."""
    x = None
    for l in path:
        y = A.arrows[l]
        x = y if x is None else A.mul(x, y)
    return x


# invariants


def cartan_matrix(A):
    if A.idempotents is None:
        raise AlgebraError("cartan matrix needs idempotents")
    n = A.num_vertices
    return [[A.corner_dim(i, j) for j in range(n)] for i in range(n)]


def quotient_by_ideal(A, I):
    """A/I on a complement basis of standard basis vectors."""
    f = A.field
    if not isinstance(I, AlgebraIdeal):
        I = AlgebraIdeal(A, I)
    std = [A.basis_vector(b) for b in range(A.dim)]
    comp = la.complement_basis(I.basis, std, f, A.dim)
    keep = [next(k for k, x in enumerate(v) if x) for v in comp]
    coords = la.Coordinates(list(I.basis) + comp, f, A.dim)
    m = len(I.basis)
    n = len(comp)

    def project(x):
        return coords(x)[m:]

    table = []
    for a in keep:
        row = []
        for b in keep:
            prod = A.mul(A.basis_vector(a), A.basis_vector(b))
            row.append(_sparse(project(prod)))
        table.append(row)
    unit = project(A.unit)
    idems = None
    vnames = None
    vmap = None
    if A.idempotents is not None:
        idems, vnames, vmap = [], [], {}
        for i, e in enumerate(A.idempotents):
            pe = project(e)
            if any(pe):
                vmap[i] = len(idems)
                idems.append(pe)
                vnames.append(A.vertex_names[i])
    rad = None
    if A._radical is not None or A.idempotents is not None:
        rad = la.rref([project(r) for r in A.radical_basis()], f, n)[0]
    Q = FDAlgebra(f, [A.labels[k] for k in keep], table, unit, idems, rad,
                  name=(A.name or "A") + "/I", vertex_names=vnames)
    Q.parent = A
    Q.project = project
    Q.section = [A.basis_vector(k) for k in keep]
    Q.vertex_map = vmap
    if A.arrows is not None:
        Q.arrows = {l: project(v) for l, v in A.arrows.items()}
    return Q


def invariant_report(A):
    if not A.split_check():
        warnings.warn("non-split simple module: cartan data withheld", NonSplitWarning)
        raise AlgebraError("non-split simple module")
    C = cartan_matrix(A)
    diag, _, _ = la.smith_normal_form(C)
    return InvariantReport(A.num_vertices, C, diag, A.dim, A.center_dim(), A.loewy_length())


class InvariantReport:
    def __init__(self, num_simples, cartan, cartan_snf, dim_algebra, dim_center, loewy_length):
        self.num_simples = num_simples
        self.cartan = cartan
        self.cartan_snf = list(cartan_snf)
        self.dim_algebra = dim_algebra
        self.dim_center = dim_center
        self.loewy_length = loewy_length

    def as_dict(self):
        return {
            "num_simples": self.num_simples,
            "cartan": self.cartan,
            "cartan_snf": self.cartan_snf,
            "dim_algebra": self.dim_algebra,
            "dim_center": self.dim_center,
            "loewy_length": self.loewy_length,
        }

    def __repr__(self):
        return f"InvariantReport({self.as_dict()})"


def compare_reports(r1, r2):
    details = {}
    for key in ("num_simples", "cartan_snf", "dim_algebra", "dim_center", "loewy_length"):
        a, b = getattr(r1, key), getattr(r2, key)
        details[key] = {"left": a, "right": b, "equal": a == b}
    consistent = details["num_simples"]["equal"] and details["cartan_snf"]["equal"]
    return {"consistent": consistent, "details": details}


def global_dimension(A, cap):
    """Max projective dimension of the simples, or the string '>=cap'."""
    from . import modcat
    if cap < 1:
        raise AlgebraError("cap must be at least 1")
    if not A.split_check():
        warnings.warn("non-split simple module", NonSplitWarning)
    best = 0
    for v in range(A.num_vertices):
        M = modcat.simple_module(A, v)
        k = 0
        while True:
            if modcat.is_projective(M):
                best = max(best, k)
                break
            if k + 1 >= cap + 1 or k >= cap:
                return f">={cap}"
            M = modcat.syzygy(M)
            k += 1
    return best


def is_selfinjective(A):
    from . import modcat
    projs = [modcat.projective_module(A, v) for v in range(A.num_vertices)]
    for v in range(A.num_vertices):
        inj = modcat.injective_module(A, v)
        if not any(modcat.is_isomorphic(inj, P) for P in projs):
            return False
    return True


def presentation_of(A, cap=None):
    """Quiver with relations for a basic split algebra.

    Arrows i -> j are corner-adapted lifts of a basis of e_i (rad/rad^2) e_j;
    relations are a basis of the kernel of the path map on paths of
    length 2..cap.
    """
    f = A.field
    if A.idempotents is None:
        raise AlgebraError("presentation needs idempotents")
    if not A.split_check():
        raise AlgebraError("algebra is not split basic")
    if cap is None:
        cap = A.loewy_length()
    n = A.num_vertices
    arrows = []
    elems = {}
    rad2 = A.radical_power(2)
    for i in range(n):
        for j in range(n):
            cr = A.corner_radical(i, j)
            lifts = la.complement_basis(rad2, cr, f, A.dim) if rad2 else cr
            for k, x in enumerate(lifts):
                label = f"a{i + 1}_{j + 1}" + (f"_{k + 1}" if len(lifts) > 1 else "")
                arrows.append((label, i, j))
                elems[label] = x
    Q = Quiver(n, arrows)
    space = _PathSpace(Q, cap)
    relations = []
    by_corner = {}
    for idx, (s, t, arr) in enumerate(space.paths):
        if len(arr) >= 2:
            by_corner.setdefault((s, t), []).append(idx)
    # a kernel basis per corner, then only the relations not generated by earlier ones
    npaths = len(space.paths)
    candidates = []
    for (s, t), idxs in sorted(by_corner.items()):
        images = []
        for idx in idxs:
            x = None
            for a in space.paths[idx][2]:
                y = elems[Q.arrows[a][0]]
                x = y if x is None else A.mul(x, y)
            images.append(x)
        K = la.kernel(la.transpose(images, A.dim), f, len(idxs))
        for kv in K:
            vec = [f.zero()] * npaths
            for c, idx in zip(kv, idxs):
                vec[idx] = c
            candidates.append(vec)
    candidates.sort(key=lambda v: (min(space.length(i) for i, c in enumerate(v) if c),
                                   [space.length(i) for i, c in enumerate(v) if c]))
    arrow_idx = list(range(n, n + len(arrows)))
    gen_rows, gen_piv = [], []
    for vec in candidates:
        if gen_rows and not any(la.reduce_mod(vec, gen_rows, gen_piv, f)):
            continue
        relations.append([(c, tuple(Q.arrows[a][0] for a in space.paths[i][2]))
                          for i, c in enumerate(vec) if c])
        frontier = [vec]
        new_rows = [vec]
        while frontier:
            nxt = []
            for v in frontier:
                for a in arrow_idx:
                    for side in (0, 1):
                        w = [f.zero()] * npaths
                        for i, c in enumerate(v):
                            if c:
                                k = space.concat(a, i) if side == 0 else space.concat(i, a)
                                if k is not None:
                                    w[k] = f(w[k] + c)
                        if any(w):
                            nxt.append(w)
            new_rows.extend(nxt)
            frontier = nxt
        gen_rows, gen_piv = la.rref(gen_rows + new_rows, f, npaths)
    P = PathPresentation(Q, relations, f, cap, vertex_names=A.vertex_names)
    P.arrow_elements = elems
    return P
