"""Admissible degree sets: recognition, the Phi(n, m) family and closure operations."""

import math


class DegreeSet:
    """A finite strictly increasing set of naturals, optionally with a cap."""

    def __init__(self, elements, cap=None):
        els = sorted(set(int(x) for x in elements))
        if els and els[0] < 0:
            raise ValueError("degree sets contain naturals only")
        if cap is not None and els and els[-1] > cap:
            raise ValueError("element above cap")
        self.elements = tuple(els)
        self.cap = cap

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._set

    @property
    def _set(self):
        s = self.__dict__.get("_s")
        if s is None:
            s = frozenset(self.elements)
            self.__dict__["_s"] = s
        return s

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if isinstance(other, DegreeSet):
            return self.elements == other.elements
        try:
            return self.elements == tuple(sorted(other))
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"

    def max(self):
        return self.elements[-1] if self.elements else None


def as_degree_set(S):
    return S if isinstance(S, DegreeSet) else DegreeSet(S)


def parse_degree_set(text):
    """Parse '0,3,4' into a DegreeSet."""
    parts = [t for t in text.replace(" ", "").split(",") if t]
    try:
        return DegreeSet(int(t) for t in parts)
    except ValueError:
        raise ValueError(f"bad degree set: {text!r}") from None


class AdmissibleReport:
    def __init__(self, admissible, witness=None):
        self.admissible = admissible
        self.witness = witness

    def __bool__(self):
        return self.admissible

    def __repr__(self):
        return f"AdmissibleReport({self.admissible}, witness={self.witness})"


def is_admissible(S):
    """Exhaustive test of the admissibility condition.

    The witness is the first violating triple in lexicographic order of
    (i, j, k), or the string 'missing-zero'.
    """
    S = as_degree_set(S)
    if 0 not in S:
        return AdmissibleReport(False, "missing-zero")
    els = S.elements
    for i in els:
        for j in els:
            for k in els:
                if i + j + k not in S:
                    continue
                if (i + j in S) != (j + k in S):
                    return AdmissibleReport(False, (i, j, k))
    return AdmissibleReport(True)


def phi_family(n, m, cap=None):
    """{x*n : 0 <= x <= m}, cut at cap.  m may be math.inf."""
    if n <= 0:
        raise ValueError("n must be positive")
    if m is None or m == math.inf:
        if cap is None:
            raise ValueError("infinite family needs a cap")
        top = cap // n
    else:
        if m < 0:
            raise ValueError("m must be a natural")
        top = m if cap is None else min(m, cap // n)
    return DegreeSet((x * n for x in range(top + 1)), cap=cap)


class SetOpResult:
    def __init__(self, result, admissible_report):
        self.result = result
        self.admissible_report = admissible_report

    def __repr__(self):
        return f"SetOpResult({self.result}, admissible={self.admissible_report})"


def set_ops(S1, S2=None, op="intersect", m=None):
    """op is 'scale', 'intersect' or 'power'."""
    S1 = as_degree_set(S1)
    if op == "scale":
        if m is None or m < 0:
            raise ValueError("scale needs a natural m")
        res = DegreeSet(m * x for x in S1)
    elif op == "intersect":
        if S2 is None:
            raise ValueError("intersect needs two sets")
        S2 = as_degree_set(S2)
        res = DegreeSet(x for x in S1 if x in S2)
    elif op == "power":
        if m is None or m < 1:
            raise ValueError("power needs m >= 1")
        res = DegreeSet(x ** m for x in S1)
    else:
        raise ValueError(f"unknown operation {op!r}")
    return SetOpResult(res, is_admissible(res).admissible)
