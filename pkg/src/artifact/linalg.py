"""Exact dense linear algebra over a prime field or the rationals.

Vectors are plain lists and matrices are lists of rows.  Every routine
takes the field explicitly; nothing here ever touches floating point.
"""

from fractions import Fraction


class FieldError(ValueError):
    pass


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Field:
    """Either the prime field F_p (p < 2**31) or the rationals."""

    def __init__(self, p=None):
        if p is not None:
            if not isinstance(p, int) or not _is_prime(p) or p >= 2 ** 31:
                raise FieldError(f"not a supported prime: {p!r}")
        self.p = p

    @classmethod
    def prime(cls, p=2):
        return cls(p)

    @classmethod
    def rational(cls):
        return cls(None)

    @classmethod
    def parse(cls, text):
        """Accept 'p=5', '5', 'rational' or 'Q'."""
        t = text.strip().lower()
        if t in ("rational", "rationals", "q"):
            return cls.rational()
        if t.startswith("p="):
            t = t[2:]
        try:
            return cls.prime(int(t))
        except ValueError:
            raise FieldError(f"unknown field: {text!r}") from None

    @property
    def kind(self):
        return "rationals" if self.p is None else "prime-field"

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Field(Q)" if self.p is None else f"Field(F_{self.p})"

    def describe(self):
        return "rational" if self.p is None else f"p={self.p}"

    # scalar arithmetic

    def __call__(self, x):
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator == 1:
                return x.numerator % self.p
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / x
        return pow(x, -1, self.p)

    def random(self, rng, spread=3):
        if self.p is None:
            return Fraction(rng.randint(-spread, spread))
        return rng.randrange(self.p)

    def to_json(self, x):
        if self.p is None:
            return str(x) if x.denominator != 1 else x.numerator
        return int(x)


# basic matrix helpers


def zeros(r, c, field):
    z = field.zero()
    return [[z] * c for _ in range(r)]


def identity(n, field):
    m = zeros(n, n, field)
    for i in range(n):
        m[i][i] = field.one()
    return m


def coerce(M, field):
    return [[field(x) for x in row] for row in M]


def transpose(M, cols=None):
    if not M:
        return [[] for _ in range(cols or 0)]
    return [list(r) for r in zip(*M)]


def matmul(A, B, field, inner=None):
    """Product of an r x n and an n x c matrix."""
    if not A:
        return []
    n = len(A[0]) if inner is None else inner
    if n == 0:
        c = len(B[0]) if B else 0
        return zeros(len(A), c, field)
    c = len(B[0])
    p = field.p
    Bt = list(zip(*B))
    out = []
    for row in A:
        nz = [(k, a) for k, a in enumerate(row) if a]
        if not nz:
            out.append([field.zero()] * c)
            continue
        if p is None:
            out.append([sum((a * col[k] for k, a in nz), Fraction(0)) for col in Bt])
        else:
            out.append([sum(a * col[k] for k, a in nz) % p for col in Bt])
    return out


def matvec(A, v, field):
    p = field.p
    nz = [(k, x) for k, x in enumerate(v) if x]
    if p is None:
        return [sum((row[k] * x for k, x in nz), Fraction(0)) for row in A]
    return [sum(row[k] * x for k, x in nz) % p for row in A]


def add(A, B, field):
    p = field.p
    if p is None:
        return [[a + b for a, b in zip(r, s)] for r, s in zip(A, B)]
    return [[(a + b) % p for a, b in zip(r, s)] for r, s in zip(A, B)]


def scale(A, c, field):
    p = field.p
    if p is None:
        return [[c * a for a in r] for r in A]
    return [[c * a % p for a in r] for r in A]


def vadd(u, v, field):
    p = field.p
    if p is None:
        return [a + b for a, b in zip(u, v)]
    return [(a + b) % p for a, b in zip(u, v)]


def vscale(u, c, field):
    p = field.p
    if p is None:
        return [c * a for a in u]
    return [c * a % p for a in u]


def vcomb(coeffs, vectors, field, length):
    """Linear combination sum coeffs[i] * vectors[i]."""
    p = field.p
    out = [field.zero()] * length
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for k, x in enumerate(v):
            if x:
                out[k] += c * x
    if p is not None:
        out = [x % p for x in out]
    return out


def is_zero_matrix(M):
    return all(not x for row in M for x in row)


# row reduction


def rref(M, field, ncols=None):
    """Reduced row echelon form with first-nonzero pivoting.

    Returns (rows, pivots) where rows are the nonzero rows only.
    """
    p = field.p
    rows = [list(r) for r in M if any(r)]
    if not rows:
        return [], []
    n = len(rows[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = field.inv(prow[c])
        if p is None:
            prow = [x * inv for x in prow]
        else:
            prow = [x * inv % p for x in prow]
        rows[r] = prow
        nzc = [k for k in range(c, n) if prow[k]]
        for i in range(len(rows)):
            if i == r:
                continue
            f = rows[i][c]
            if not f:
                continue
            ri = rows[i]
            if p is None:
                for k in nzc:
                    ri[k] -= f * prow[k]
            else:
                for k in nzc:
                    ri[k] = (ri[k] - f * prow[k]) % p
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(M, field):
    return len(rref(M, field)[0])


def kernel(M, field, ncols=None):
    """Basis of {x : M x = 0} as a list of column vectors (lists)."""
    n = ncols if ncols is not None else (len(M[0]) if M else 0)
    R, piv = rref(M, field, n)
    free = [c for c in range(n) if c not in set(piv)]
    basis = []
    for f in free:
        x = [field.zero()] * n
        x[f] = field.one()
        for row, pc in zip(R, piv):
            if row[f]:
                x[pc] = field(-row[f])
        basis.append(x)
    return basis


def row_space(vectors, field, length=None):
    """RREF basis of the span of the given vectors."""
    return rref(vectors, field, length)


class SolveResult:
    def __init__(self, particular, kernel_basis):
        self.particular = particular
        self.kernel_basis = kernel_basis

    @property
    def consistent(self):
        return self.particular is not None

    def __repr__(self):
        return f"SolveResult(particular={self.particular}, kernel_dim={len(self.kernel_basis)})"


def _check_field(M, field):
    if field.p is not None:
        for row in M:
            for x in row:
                if isinstance(x, Fraction) and x.denominator % field.p == 0:
                    raise FieldError("entry not representable in the prime field")


def solve_linear(A, b, field, ncols=None):
    """Solve A x = b exactly.  A is r x n, b has length r."""
    if len(A) != len(b):
        raise ValueError("dimension mismatch between A and b")
    _check_field(A, field)
    _check_field([b], field)
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    A = coerce(A, field)
    b = [field(x) for x in b]
    aug = [row + [bi] for row, bi in zip(A, b)]
    R, piv = rref(aug, field, n + 1)
    kb = kernel(A, field, n)
    if n in piv:
        return SolveResult(None, kb)
    x = [field.zero()] * n
    for row, pc in zip(R, piv):
        x[pc] = row[n]
    return SolveResult(x, kb)


def inverse(M, field):
    n = len(M)
    aug = [list(row) + e for row, e in zip(M, identity(n, field))]
    R, piv = rref(aug, field, 2 * n)
    if piv[:n] != list(range(n)) or len(R) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in R[:n]]


def det(M, field):
    n = len(M)
    A = [list(r) for r in M]
    d = field.one()
    p = field.p
    for c in range(n):
        piv = next((i for i in range(c, n) if A[i][c]), None)
        if piv is None:
            return field.zero()
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            d = field(-d)
        d = field(d * A[c][c])
        inv = field.inv(A[c][c])
        for i in range(c + 1, n):
            f = A[i][c] * inv
            if f:
                A[i] = [field(x - f * y) for x, y in zip(A[i], A[c])]
    return d if p is None else d % p


class Coordinates:
    """Coordinates of vectors with respect to a fixed independent family.

    Rows of `basis` must be linearly independent.
    """

    def __init__(self, basis, field, length):
        self.field = field
        self.length = length
        self.k = len(basis)
        aug = [list(v) + e for v, e in zip(basis, identity(self.k, field))]
        R, piv = rref(aug, field, length + self.k)
        if len(piv) < self.k or any(c >= length for c in piv[: self.k]):
            raise ValueError("basis vectors are dependent")
        self.pivots = piv[: self.k]
        self.R = [r[:length] for r in R[: self.k]]
        self.C = [r[length:] for r in R[: self.k]]

    def __call__(self, v, strict=True):
        f = self.field
        c = [v[pc] for pc in self.pivots]
        if strict:
            w = vcomb(c, self.R, f, self.length)
            if any(f(a - b) for a, b in zip(v, w)):
                raise ValueError("vector not in span")
        return vcomb(c, self.C, f, self.k)

    def contains(self, v):
        f = self.field
        c = [v[pc] for pc in self.pivots]
        w = vcomb(c, self.R, f, self.length)
        return not any(f(a - b) for a, b in zip(v, w))


def complement_basis(sub, whole, field, length):
    """Vectors from `whole` extending an RREF basis of `sub` to span(sub+whole).

    Picks the earliest vectors of `whole` that are new, so results are
    reproducible.
    """
    cur_rows, cur_piv = rref(sub, field, length) if sub else ([], [])
    chosen = []
    for v in whole:
        test = cur_rows + [list(v)]
        R, piv = rref(test, field, length)
        if len(R) > len(cur_rows):
            chosen.append(list(v))
            cur_rows, cur_piv = R, piv
    return chosen


def reduce_mod(v, rows, pivots, field):
    """Reduce v against an RREF family, zeroing its pivot entries."""
    p = field.p
    v = list(v)
    for row, pc in zip(rows, pivots):
        f = v[pc]
        if f:
            if p is None:
                v = [a - f * b for a, b in zip(v, row)]
            else:
                v = [(a - f * b) % p for a, b in zip(v, row)]
    return v


# integer Smith normal form


def smith_normal_form(M):
    """Return (diag, left, right) with left * M * right diagonal.

    Entries on the diagonal are nonnegative and each divides the next.
    left and right are unimodular integer matrices.
    """
    r = len(M)
    c = len(M[0]) if r else 0
    A = [[int(x) for x in row] for row in M]
    L = [[int(i == j) for j in range(r)] for i in range(r)]
    R = [[int(i == j) for j in range(c)] for i in range(c)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        L[i], L[j] = L[j], L[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in R:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):
        # row dst += k * row src
        A[dst] = [a + k * b for a, b in zip(A[dst], A[src])]
        L[dst] = [a + k * b for a, b in zip(L[dst], L[src])]

    def add_col(src, dst, k):
        for row in A:
            row[dst] += k * row[src]
        for row in R:
            row[dst] += k * row[src]

    def neg_row(i):
        A[i] = [-a for a in A[i]]
        L[i] = [-a for a in L[i]]

    t = 0
    while t < min(r, c):
        nz = [(abs(A[i][j]), i, j) for i in range(t, r) for j in range(t, c) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, r):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(t, i, -q)
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, c):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(t, j, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, r) for j in range(t + 1, c)
                        if A[i][j] % A[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if A[t][t] < 0:
            neg_row(t)
        t += 1
    diag = [A[i][i] for i in range(min(r, c))]
    return diag, L, R


def int_matmul(A, B):
    if not A:
        return []
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def int_det(M):
    """Exact integer determinant via Fractions."""
    n = len(M)
    if n == 0:
        return 1
    return int(det([[Fraction(x) for x in row] for row in M], Field.rational()))


def int_rank(M):
    if not M:
        return 0
    return rank([[Fraction(x) for x in row] for row in M], Field.rational())
