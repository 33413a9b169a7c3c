"""Derived equivalences between quotient algebras.

Given a tilting complex T over A with B = End(T) and an ideal I of A, the
quotient complex Tbar = T/IT over A/I is checked for the Hom-vanishing
conditions, and the matching ideal J_I of B (endomorphisms factoring
through IT -> T) is extracted.  Two families of ideals are supported:
socles of projective summands and the ideals nabla(e) = {a : eAa = 0}.
"""

from . import homotopy as ho
from . import linalg as la
from . import modcat as mc
from .algebra import (AlgebraIdeal, AlgebraError, quotient_by_ideal, invariant_report,
                      compare_reports, is_selfinjective)


class QuotientError(ValueError):
    pass


class QuotientPairReport:
    def __init__(self, A_quotient, B_algebra, J_ideal, B_quotient, conditions, tbar,
                 tbar_tilting=None, end_tbar=None, fingerprints=None, extra=None):
        self.A_quotient = A_quotient
        self.B_algebra = B_algebra
        self.J_ideal = J_ideal
        self.B_quotient = B_quotient
        self.conditions = conditions
        self.tbar = tbar
        self.tbar_tilting = tbar_tilting
        self.end_tbar = end_tbar
        self.fingerprints = fingerprints
        self.extra = extra or {}

    @property
    def verdict(self):
        return all(self.conditions.values())

    def as_dict(self):
        out = {
            "conditions": dict(self.conditions),
            "verdict": self.verdict,
            "dim_A_quotient": self.A_quotient.dim,
            "dim_B": self.B_algebra.dim,
            "dim_J": self.J_ideal.dim,
            "dim_B_quotient": self.B_quotient.dim if self.B_quotient is not None else None,
            "tbar_tilting": self.tbar_tilting.as_dict() if self.tbar_tilting else None,
            "dim_End_tbar": self.end_tbar.dim if self.end_tbar is not None else None,
        }
        if self.fingerprints is not None:
            a, b, cmp = self.fingerprints
            out["fingerprints"] = {"A_quotient": a.as_dict() if a else None,
                                   "B_quotient": b.as_dict() if b else None,
                                   "comparison": cmp}
        out.update(self.extra)
        return out


# the tilting complex attached to an idempotent


def _check_idempotent_condition(A, e, seed=0):
    pi = mc.projective_injective_map(A, seed)
    for v in e:
        if pi[v] is None or pi[v] not in e:
            name = A.vertex_names[v]
            raise QuotientError(f"add(Ae) != add(D(eA)): D(eA) has summand I_{name} "
                                f"not in add(Ae)")


def idempotent_tilting(A, e, seed=0):
    """T = Ae[1] + (Q_1 -> A) with Q_1 -> A a minimal right add(Ae)-approximation.

    Summand k of the result belongs to vertex k: P_v[1] for v in e and the
    two-term complex approximating P_w for w outside e.
    """
    e = sorted(set(e))
    if not e or any(v < 0 or v >= A.num_vertices for v in e):
        raise QuotientError("idempotent must be a nonempty set of vertices")
    _check_idempotent_condition(A, e, seed)
    X = mc.projective_sum(A, e)
    parts = []
    for w in range(A.num_vertices):
        if w in e:
            parts.append(ho.ProjComplex(A, {-1: [w]}, {}))
            continue
        Pw = mc.projective_module(A, w)
        Xp, phi, summands = mc.min_right_approximation(Pw, X, seed)
        src, entries = [], []
        off = 0
        for R in summands:
            v = _top_vertex(R)
            Pv = mc.projective_module(A, v)
            iso = mc.indecomposable_isomorphism(Pv, R)
            if iso is None:
                raise QuotientError("approximation summand is not projective")
            block = [row[off:off + R.dim] for row in phi.matrix]
            gen = [A.idempotents[v][b] for b in Pv.basis_in_algebra]
            y = la.matvec(block, la.matvec(iso, gen, A.field), A.field)
            src.append(v)
            entries.append([ho.vector_to_elements(A, [w], y)[0]])
            off += R.dim
        parts.append(ho.ProjComplex(A, {-1: src, 0: [w]}, {-1: entries}))
    T = ho.normalize_radical(ho.direct_sum_complexes(parts, name=f"T(e={[v + 1 for v in e]})"))
    T.check()
    T.provenance = "by-construction"
    T.idempotent = e
    return T


def _top_vertex(R):
    tops = mc.top_multiplicities(R)
    vs = [v for v, m in enumerate(tops) if m]
    if len(vs) != 1 or tops[vs[0]] != 1:
        raise QuotientError("summand does not have a simple top")
    return vs[0]


# Hom-vanishing conditions and J_I


def _quotient_module_complex(T, IT):
    """T/IT as a complex of A-modules, with the projections from the terms of T."""
    A = T.algebra
    f = A.field
    MC = T.module_complex()
    terms, projs = {}, {}
    for d, M in MC.terms.items():
        Q, P = mc.quotient_module(M, IT.bases.get(d, []))
        terms[d] = Q
        projs[d] = P
    diffs = {}
    for d, dm in MC.diffs.items():
        Q0, Q1 = terms[d], terms[d + 1]
        if not Q0.dim or not Q1.dim:
            continue
        # lift each basis vector of Q0 to M, apply d, project
        cols = []
        P0 = projs[d]
        for k in range(Q0.dim):
            target = [f.one() if j == k else f.zero() for j in range(Q0.dim)]
            sol = la.solve_linear(P0, target, f, MC.terms[d].dim)
            x = sol.particular
            cols.append(la.matvec(projs[d + 1], la.matvec(dm, x, f), f))
        diffs[d] = la.transpose(cols, Q1.dim)
    return ho.ModuleComplex(A, terms, diffs), projs


def _hom_vanishing(T, IT):
    """Shifts i != 0 with Hom_K(T, IT[i]) nonzero."""
    if not IT.terms or not T.terms:
        return []
    lo = min(IT.terms) - max(T.terms)
    hi = max(IT.terms) - min(T.terms)
    bad = []
    for n in range(lo, hi + 1):
        if n == 0:
            continue
        H = ho.HomK(T, IT, n)
        if H.dim:
            bad.append({"shift": n, "dim": H.dim})
    return bad


def j_ideal(T, ideal, B=None):
    """J_I in B = End(T): endomorphisms killed by composing with T -> T/IT."""
    A = T.algebra
    f = A.field
    B = B or ho.end_algebra_of_complex(T)
    parts = B.parts
    quots = []
    for P in parts:
        _, ITp = ho.quotient_complex(P, ideal)
        quots.append(_quotient_module_complex(P, ITp))
    kernel_vectors = []
    for (a, b), H in B.hom_spaces.items():
        Yq, projs = quots[b]
        Hq = ho.HomK(parts[a], Yq, 0)
        keys = [k for k in B.basis_index if k[:2] == (a, b)]
        if not keys:
            continue
        images = []
        for key in keys:
            comps = B.basis_maps[key].components
            vec = [f.zero()] * Hq.fdim
            for (d, s), (off, cols) in Hq.flay.items():
                F = comps.get(d)
                if F is None:
                    continue
                y = ho.elements_to_vector(A, parts[b].terms[d], F[s])
                q = la.matvec(projs[d], y, f)
                for k, c in enumerate(cols):
                    vec[off + k] = q[c]
            images.append(Hq.coordinates(vec) if Hq.dim else [])
        if Hq.dim:
            ker = la.kernel(la.transpose(images, Hq.dim), f, len(keys))
        else:
            ker = [la.identity(len(keys), f)[k] for k in range(len(keys))]
        pos = [B.basis_index.index(k) for k in keys]
        for c in ker:
            x = B.zero()
            for p, v in zip(pos, c):
                x[p] = v
            kernel_vectors.append(x)
    return AlgebraIdeal(B, kernel_vectors)


def _fingerprint(Alg):
    try:
        return invariant_report(Alg)
    except (AlgebraError, mc.ModuleError, ValueError):
        return None


def quotient_pair_check(A, T, ideal, B=None):
    """Hom-vanishing conditions for T/IT and the induced quotient of End(T)."""
    if not isinstance(ideal, AlgebraIdeal):
        ideal = AlgebraIdeal(A, ideal)
    Aq = quotient_by_ideal(A, ideal)
    Tbar, IT = ho.quotient_complex(T, ideal, Aq)
    bad = _hom_vanishing(T, IT)
    neg = ho.HomK(Tbar, Tbar, -1).dim if Tbar.terms else 0
    conditions = {"hom_T_IT_off_zero_vanishes": not bad, "hom_Tbar_Tbar_minus1_vanishes": neg == 0}
    B = B or ho.end_algebra_of_complex(T)
    J = j_ideal(T, ideal, B)
    Bq = quotient_by_ideal(B, J)
    tilt = ho.tilting_report(Tbar)
    try:
        End_bar = ho.end_algebra_of_complex(Tbar)
    except (AlgebraError, ValueError):
        End_bar = None
    fa, fb = _fingerprint(Aq), _fingerprint(Bq)
    cmp = compare_reports(fa, fb) if fa and fb else {"consistent": None, "details": "fingerprint unavailable"}
    extra = {"failing_shifts": bad, "dim_hom_Tbar_Tbar_minus1": neg,
             "end_matches_quotient": End_bar is not None and End_bar.dim == Bq.dim}
    return QuotientPairReport(Aq, B, J, Bq, conditions, Tbar, tilt, End_bar, (fa, fb, cmp), extra)


# socle quotients


def socle_transfer_vertex(T, v, seed=0):
    """Vertex of End(T) for the projective nu_B Hom(T, T_P), or None.

    P = P_v must not lie in add(nu T^i) for i != 0 and must occur exactly
    once in nu T^0.
    """
    A = T.algebra
    pi = mc.projective_injective_map(A, seed)
    for d, vs in T.terms.items():
        if any(pi[w] is None for w in vs):
            raise QuotientError("terms are not projective-injective")
    for d, vs in T.terms.items():
        if d != 0 and any(pi[w] == v for w in vs):
            return None
    hits = [s for s, w in enumerate(T.terms.get(0, [])) if pi[w] == v]
    if len(hits) != 1:
        return None
    s = hits[0]
    a = next(k for k, S in enumerate(T.summands) if s in S.get(0, []))
    B = getattr(T, "_end", None)
    if B is None:
        B = ho.end_algebra_of_complex(T)
        T._end = B
    piB = mc.projective_injective_map(B, seed)
    return piB[a]


def socle_quotient_pair(A, T, vertices, seed=0):
    """The pair (A/soc(P), B/soc(P')) for P = sum of P_v over the given vertices."""
    if not is_selfinjective(A):
        raise QuotientError("algebra is not self-injective")
    bars = []
    for v in vertices:
        w = socle_transfer_vertex(T, v, seed)
        if w is None:
            raise QuotientError(f"summand P_{A.vertex_names[v]}: socle criterion fails; "
                                "derived equivalence of the quotients is unknown")
        bars.append(w)
    B = T._end
    if not is_selfinjective(B):
        raise QuotientError("End(T) is not self-injective")
    I = mc.socle_ideal(A, vertices)
    rep = quotient_pair_check(A, T, I, B)
    Jsoc = mc.socle_ideal(B, bars)
    rep.extra["Pbar_vertices"] = bars
    rep.extra["J_equals_socle"] = rep.J_ideal == Jsoc
    return rep


# nabla quotients


def nabla_quotient_pair(A, e, seed=0):
    """The pair (A/nabla(e), B/nabla(e~)) with B = End of the idempotent tilting complex."""
    e = sorted(set(e))
    T = idempotent_tilting(A, e, seed)
    I = mc.nabla_ideal(A, e)
    rep = quotient_pair_check(A, T, I)
    B = rep.B_algebra
    # summand k of T belongs to vertex k, so e~ uses the same indices
    Jn = mc.nabla_ideal(B, e)
    rep.extra["J_equals_nabla"] = rep.J_ideal == Jn
    rep.extra["e_tilde_kills_J"] = all(not any(B.mul(B.idempotents[v], x))
                                       for v in e for x in rep.J_ideal.basis)
    rep.T = T
    return rep
