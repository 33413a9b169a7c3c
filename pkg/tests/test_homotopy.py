import pytest

from artifact import homotopy as ho
from artifact import modcat as mc
from artifact.algebra import AlgebraIdeal, cartan_matrix, evaluate_path, quotient_by_ideal
from artifact.ayoneda import evaluate_relation, generated_dim
from artifact.quotients import idempotent_tilting
from conftest import (F2, QQ, a3_linear, cyclic_three, presented_b, semisimple, truncated_poly,
                      two_point)


def cone_of_identity(A, v):
    return ho.ProjComplex(A, {-1: [v], 0: [v]}, {-1: [[A.idempotents[v]]]})


def times_t(A):
    return ho.ProjComplex(A, {-1: [0], 0: [0]}, {-1: [[A.arrows["t"]]]})


def sample_complexes(field):
    """A few complexes over k[t]/(t^3) and the three-vertex algebra, some not radical."""
    A = truncated_poly(field, 3)
    B = cyclic_three(field)
    out = [
        ho.regular_stalk(A),
        times_t(A),
        ho.direct_sum_complexes([times_t(A), cone_of_identity(A, 0)]),
        ho.direct_sum_complexes([ho.regular_stalk(A, -1), cone_of_identity(A, 0)]),
        idempotent_tilting(B, [1]),
        ho.direct_sum_complexes([idempotent_tilting(B, [0, 2]), cone_of_identity(B, 1)]),
    ]
    return out


def test_normalize_examples(field):
    A = truncated_poly(field, 3)
    assert ho.normalize_radical(cone_of_identity(A, 0)).is_zero()
    S = ho.regular_stalk(A)
    N = ho.normalize_radical(S)
    assert N.terms == S.terms
    X = times_t(A)
    N = ho.normalize_radical(X)
    assert N.terms == X.terms and N.diffs == X.diffs and N.is_radical()
    assert not cone_of_identity(A, 0).is_radical()


def test_normalize_is_idempotent_and_radical(field):
    for X in sample_complexes(field):
        N = ho.normalize_radical(X)
        N.check()
        assert N.is_radical()
        N2 = ho.normalize_radical(N)
        assert N2.terms == N.terms and N2.diffs == N.diffs


def test_hom_of_stalks(field):
    A = cyclic_three(field)
    S = ho.regular_stalk(A)
    assert ho.hom_dim_K(S, S, 0) == A.dim
    for n in (-2, -1, 1, 2):
        assert ho.hom_dim_K(S, S, n) == 0


def test_cross_term_identity(field):
    A = truncated_poly(field, 3)
    X = ho.direct_sum_complexes([ho.regular_stalk(A), ho.regular_stalk(A, -1)])
    H = ho.HomK(X, X, -1)
    assert H.dim == 3
    for m in H.basis_maps():
        m.check()
    r = ho.tilting_report(X)
    assert not r.self_orthogonal and r.failing["shift"] == -1 and not r.verdict


def test_idempotent_complex_is_self_orthogonal(field):
    A = cyclic_three(field)
    for e in ([1], [0, 2]):
        T = idempotent_tilting(A, e)
        for n in ho.shift_window(T, T):
            if n:
                assert ho.hom_dim_K(T, T, n) == 0
        r = ho.tilting_report(T, T.provenance)
        assert r.verdict and r.generation == "by-construction"


def test_hom_is_homotopy_invariant(field):
    cx = sample_complexes(field)
    for X in cx:
        NX = ho.normalize_radical(X)
        for Y in cx:
            if Y.algebra is not X.algebra:
                continue
            NY = ho.normalize_radical(Y)
            for n in (-1, 0, 1):
                d = ho.hom_dim_K(X, Y, n)
                assert d == ho.hom_dim_K(NX, Y, n) == ho.hom_dim_K(X, NY, n) == ho.hom_dim_K(NX, NY, n)


def test_end_of_stalk_and_shift(field):
    for A in (truncated_poly(field, 3), cyclic_three(field), two_point(field), a3_linear(field),
              semisimple(field), presented_b(field)):
        E = ho.end_algebra_of_complex(ho.regular_stalk(A))
        assert E.dim == A.dim and cartan_matrix(E) == cartan_matrix(A)
    A = cyclic_three(field)
    E = ho.end_algebra_of_complex(ho.regular_stalk(A, -1))
    assert E.dim == A.dim and cartan_matrix(E) == cartan_matrix(A)


def test_end_of_idempotent_complex_satisfies_b_relations(field):
    A = cyclic_three(field)
    T = idempotent_tilting(A, [0, 2])
    E = ho.end_algebra_of_complex(T)
    Bp = presented_b(field)
    assert E.dim == Bp.dim == 18
    assert cartan_matrix(E) == cartan_matrix(Bp)

    def arrow(i, j):
        found = [x for x in E.arrow_elements()
                 if E.corners[next(k for k, c in enumerate(x) if c)] == (i, j)]
        assert len(found) == 1
        return found[0]

    gens = {"al": arrow(0, 1), "de": arrow(1, 0), "be": arrow(1, 2), "ga": arrow(2, 1)}
    for rel in Bp.presentation.relations:
        assert not any(evaluate_relation(E, gens, rel))
    assert generated_dim(E, list(gens.values())) == E.dim


def test_tilting_report_stalk(field):
    A = cyclic_three(field)
    r = ho.tilting_report(ho.regular_stalk(A), "by-construction")
    assert r.verdict and r.generation == "by-construction"
    r = ho.tilting_report(ho.stalk(A, [0, 1]))
    assert r.self_orthogonal and not r.k0_rank_full and r.generation == "necessary-only"


def test_almost_nu_stable(field):
    A = truncated_poly(field, 3)
    assert ho.is_almost_nu_stable(ho.regular_stalk(A, -1), ho.regular_stalk(A, 1))
    assert ho.is_almost_nu_stable(ho.regular_stalk(A), ho.regular_stalk(A))
    H = a3_linear(field)
    b = H.arrows["b"]
    T = ho.direct_sum_complexes([ho.stalk(H, [0]), ho.stalk(H, [2]),
                                 ho.ProjComplex(H, {-1: [1], 0: [2]}, {-1: [[b]]})])
    assert ho.tilting_report(T).verdict
    E = ho.end_algebra_of_complex(T)
    assert E.dim == 5
    assert not ho.is_almost_nu_stable(T, ho.regular_stalk(E))
    with pytest.raises(ho.ComplexError):
        ho.is_almost_nu_stable(ho.regular_stalk(A, 1), ho.regular_stalk(A))


def test_nakayama_complex(field):
    A = cyclic_three(field)
    T = idempotent_tilting(A, [1])
    N = ho.nakayama_complex(T)
    N.check()
    pi = mc.projective_injective_map(A)
    assert {d: sorted(vs) for d, vs in N.terms.items()} == \
        {d: sorted(pi[v] for v in vs) for d, vs in T.terms.items()}
    assert ho.hom_dim_K(N, N, 0) == ho.hom_dim_K(T, T, 0)


def test_quotient_complex(field):
    A = truncated_poly(field, 3)
    S = ho.regular_stalk(A)
    Tbar, IT = ho.quotient_complex(S, AlgebraIdeal(A, []))
    assert Tbar.algebra.dim == 3 and Tbar.terms == S.terms
    soc = mc.socle_ideal(A, [0])
    Tbar, IT = ho.quotient_complex(S, soc)
    assert Tbar.algebra.dim == 2 and Tbar.terms == {0: [0]}
    assert {d: M.dim for d, M in IT.terms.items()} == {0: 1}
    B = cyclic_three(field)
    T = idempotent_tilting(B, [1])
    for v in (0, 2):
        _, IT = ho.quotient_complex(T, mc.socle_ideal(B, [v]))
        dims = {d: M.dim for d, M in IT.terms.items() if M.dim}
        assert dims == {0: 1}
        Pv = mc.projective_module(B, v)
        soc = mc.socle_radical_top(Pv)["socle"]
        assert mc.is_isomorphic(IT.terms[0], soc)


def test_shift_and_truncations(field):
    A = truncated_poly(field, 3)
    S = ho.shift_truncate(ho.regular_stalk(A), 1)
    assert S.terms == {-1: [0]}
    X = times_t(A)
    assert ho.shift_truncate(X, mode="sigma_geq", i=1).is_zero()
    Y = ho.shift_truncate(X, -1)
    assert Y.degrees() == [0, 1]
    assert ho.shift_truncate(Y, mode="sigma_lt", i=0).is_zero()
    assert ho.shift_truncate(Y, mode="sigma_geq", i=1).terms == {1: [0]}
    Z = ho.shift_truncate(ho.shift_truncate(X, 1), -1)
    assert Z.terms == X.terms and Z.diffs == X.diffs


def test_square_zero_checked():
    A = truncated_poly(F2, 2)
    t = A.arrows["t"]
    ok = ho.ProjComplex(A, {-1: [0], 0: [0], 1: [0]}, {-1: [[t]], 0: [[t]]})
    ok.check()
    B = truncated_poly(QQ, 3)
    t = B.arrows["t"]
    bad = ho.ProjComplex(B, {-1: [0], 0: [0], 1: [0]}, {-1: [[t]], 0: [[t]]})
    with pytest.raises(ho.ComplexError):
        bad.check()


def test_differentials_square_to_zero(field):
    for X in sample_complexes(field):
        X.check()
        MC = X.module_complex()
        MC.check()
