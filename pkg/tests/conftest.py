from pathlib import Path

import pytest

from artifact.algebra import PathPresentation, Quiver, from_presentation
from artifact.linalg import Field

DATA = Path(__file__).resolve().parent.parent / "data"

F2 = Field.prime(2)
F3 = Field.prime(3)
QQ = Field.rational()
FIELDS = [F2, QQ]


def truncated_poly(field, m):
    """k[t]/(t^m)."""
    Q = Quiver(1, [("t", 0, 0)])
    return from_presentation(PathPresentation(Q, [[(1, ("t",) * m)]], field, m + 1))


def two_point(field):
    """Path algebra of 1 <- 2: the arrow a goes from vertex 2 to vertex 1.

    With left-to-right paths this makes P1 = k e1 + k a, so S1 has
    projective resolution 0 -> P2 -> P1.
    """
    Q = Quiver(2, [("a", 1, 0)])
    return from_presentation(PathPresentation(Q, [], field, 2))


def a3_linear(field):
    """Path algebra of 1 -> 2 -> 3."""
    Q = Quiver(3, [("a", 0, 1), ("b", 1, 2)])
    return from_presentation(PathPresentation(Q, [], field, 3))


def semisimple(field, n=2):
    return from_presentation(PathPresentation(Quiver(n, []), [], field, 1))


def cyclic_three(field):
    """Three vertices, a_i: i -> i+1, b_i: i -> i-1, mixed commutativity and zero relations."""
    arrows = []
    for i in range(3):
        arrows.append((f"a{i + 1}", i, (i + 1) % 3))
        arrows.append((f"b{i + 1}", i, (i - 1) % 3))
    Q = Quiver(3, arrows)

    def n(k):
        return (k - 1) % 3 + 1

    rels = []
    for i in range(1, 4):
        rels.append([(1, (f"a{i}", f"b{n(i + 1)}")), (-1, (f"b{i}", f"a{n(i + 2)}"))])
        rels.append([(1, (f"a{i}", f"a{n(i + 1)}"))])
        rels.append([(1, (f"b{i}", f"b{n(i - 1)}"))])
    return from_presentation(PathPresentation(Q, rels, field, 4))


def presented_b(field):
    """1 <-> 2 <-> 3 with al.de = ga.be = de.al.be.ga - be.ga.de.al = 0."""
    Q = Quiver(3, [("al", 0, 1), ("de", 1, 0), ("be", 1, 2), ("ga", 2, 1)])
    rels = [[(1, ("al", "de"))], [(1, ("ga", "be"))],
            [(1, ("de", "al", "be", "ga")), (-1, ("be", "ga", "de", "al"))]]
    return from_presentation(PathPresentation(Q, rels, field, 6))


def path_count_dim(p):
    """dim kQ/I by brute force: all paths below the cap modulo the span of u*r*v.

    Uses its own sparse elimination so that it shares no code with the
    algebra construction it is checked against.
    """
    Q = p.quiver
    f = p.field
    cap = p.nilpotency_cap
    paths = [(v, v, ()) for v in range(Q.vertex_count)]
    frontier = [(s, t, (l,)) for l, s, t in Q.arrows]
    while frontier:
        paths.extend(frontier)
        nxt = []
        for s, t, w in frontier:
            if len(w) + 1 >= cap:
                continue
            for l, a, b in Q.arrows:
                if a == t:
                    nxt.append((s, b, w + (l,)))
        frontier = nxt
    index = {(s, t, w): k for k, (s, t, w) in enumerate(paths)}
    ends = {l: (s, t) for l, s, t in Q.arrows}
    pivots = []

    def insert(row):
        for col, prow in pivots:
            c = row.get(col)
            if c:
                for k, v in prow.items():
                    x = f(row.get(k, f.zero()) - c * v)
                    if x:
                        row[k] = x
                    else:
                        row.pop(k, None)
        if row:
            col = min(row)
            inv = f.inv(row[col])
            pivots.append((col, {k: f(v * inv) for k, v in row.items()}))

    for rel in p.relations:
        s, t = ends[rel[0][1][0]][0], ends[rel[0][1][-1]][1]
        room = cap - 1 - min(len(w) for _, w in rel)
        left = [q for q in paths if q[1] == s and len(q[2]) <= room]
        right = [q for q in paths if q[0] == t and len(q[2]) <= room]
        for u in left:
            for v in right:
                if len(u[2]) + len(v[2]) > room:
                    continue
                row = {}
                for c, w in rel:
                    key = (u[0], v[1], u[2] + tuple(w) + v[2])
                    if key in index:
                        k = index[key]
                        x = f(row.get(k, f.zero()) + c)
                        if x:
                            row[k] = x
                        else:
                            row.pop(k, None)
                if row:
                    insert(row)
    return len(paths) - len(pivots)


# acceptance verdicts, filled in by test_acceptance.py and echoed at the end of the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(f"criterion {n}: {ACCEPTANCE[n]}")


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session", params=FIELDS, ids=lambda f: f.describe())
def field(request):
    return request.param
