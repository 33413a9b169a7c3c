"""The nine acceptance criteria, each checked exactly and reported as PASS or FAIL.

Run with ``pytest tests/test_acceptance.py -v``; the verdict lines are printed
in the terminal summary and, with ``-s``, as each criterion finishes.
"""

import itertools
import json
import random

import pytest

from artifact import ayoneda as ay
from artifact import cli
from artifact import ext as ex
from artifact import homotopy as ho
from artifact import modcat as mc
from artifact import quotients as q
from artifact.admissible import is_admissible, phi_family, set_ops
from artifact.algebra import (cartan_matrix, compare_reports, evaluate_path, from_presentation,
                              global_dimension, graded_dims, ideal_generated_by, invariant_report,
                              is_selfinjective, quotient_by_ideal)
from conftest import (ACCEPTANCE, DATA, F2, QQ, cyclic_three, path_count_dim, presented_b,
                      truncated_poly)
from test_ext import perturbed_product
from test_homotopy import sample_complexes


def record(n, ok):
    ACCEPTANCE[n] = "PASS" if ok else "FAIL"
    print(f"criterion {n}: {ACCEPTANCE[n]}")
    assert ok


def criterion_1():
    fixed = is_admissible({0, 3, 4}).admissible and is_admissible({0, 1, 2, 3, 4}).admissible
    family = all(is_admissible(phi_family(n, m)).admissible
                 for n in range(1, 5) for m in range(0, 7))
    sq = set_ops({0, 3, 4, 5, 12, 13}, op="power", m=2)
    S = set(sq.result)
    r = is_admissible(S)
    valid = False
    if not r.admissible and isinstance(r.witness, tuple):
        i, j, k = r.witness
        valid = {i, j, k} <= S and i + j + k in S and ((i + j in S) != (j + k in S))
    return (fixed and family and S == {0, 9, 16, 25, 144, 169} and not sq.admissible_report
            and valid)


def criterion_2():
    A = truncated_poly(F2, 2)
    k = mc.simple_module(A, 0)
    count = 0
    for c in range(9):
        for rest in itertools.combinations(range(1, 9), c):
            phi = (0,) + rest
            E = ay.build_ay_algebra(A, [k], phi, 8)
            if ay.check_associativity(E)["associative"] != is_admissible(phi).admissible:
                return False
            count += 1
    return count == 256


def criterion_3():
    for fld, m, n, omega in itertools.product((F2, QQ), (3, 4), range(1, 5), (False, True)):
        A = truncated_poly(fld, m)
        k = mc.simple_module(A, 0)
        X = ex.omega_module(k) if omega else k
        E = ay.build_ay_algebra(A, [mc.projective_module(A, 0), X], phi_family(1, n))
        p, w = ay.truncated_local_presentation(fld, m, n, omega)
        B = from_presentation(p, w)
        if B.dim != path_count_dim(p) or graded_dims(B) != E.degree_dims():
            return False
        EA = E.algebra()
        gens = ay.truncated_local_generators(E, omega)
        if any(any(ay.evaluate_relation(EA, gens, rel)) for rel in p.relations):
            return False
        if ay.generated_dim(EA, list(gens.values())) != EA.dim:
            return False
    return True


def criterion_4():
    A = truncated_poly(F2, 3)
    r = ay.verify_shift_instance(A, mc.simple_module(A, 0), [0, 1])
    d = r.as_dict()
    fa, fb = r.fingerprints
    return (r.verdict and r.tilting.self_orthogonal and r.tilting.k0_rank_full
            and r.tilting.generation == "by-construction"
            and r.end_dim == r.ay_dim == 7
            and fa.num_simples == fb.num_simples == 2
            and fa.cartan_snf == fb.cartan_snf == [1, 5]
            and d["cartan_M"] == [[3, 1], [1, 2]] and d["cartan_N"] == [[3, 2], [2, 3]])


def criterion_5():
    for fld in (F2, QQ):
        A = cyclic_three(fld)
        if A.dim != path_count_dim(A.presentation) or A.dim != 12:
            return False
        if cartan_matrix(A) != [[2, 1, 1], [1, 2, 1], [1, 1, 2]] or not is_selfinjective(A):
            return False
        Bp = presented_b(fld)
        # the idempotent of the two outer vertices, complementary to vertex 2
        e = [0, 2]
        T = q.idempotent_tilting(A, e)
        End = ho.end_algebra_of_complex(T)
        if End.dim != Bp.dim or Bp.dim != path_count_dim(Bp.presentation):
            return False
        if cartan_matrix(End) != cartan_matrix(Bp):
            return False
        corner = {}
        for x in End.arrow_elements():
            key = End.corners[next(i for i, c in enumerate(x) if c)]
            corner.setdefault(key, []).append(x)
        if sorted(corner) != [(0, 1), (1, 0), (1, 2), (2, 1)]:
            return False
        if any(len(v) != 1 for v in corner.values()):
            return False
        gens = {"al": corner[(0, 1)][0], "de": corner[(1, 0)][0],
                "be": corner[(1, 2)][0], "ga": corner[(2, 1)][0]}
        if any(any(ay.evaluate_relation(End, gens, rel)) for rel in Bp.presentation.relations):
            return False
        r = q.nabla_quotient_pair(A, e)
        IA = ideal_generated_by(A, [evaluate_path(A, ("a2", "b3"))])
        IB = ideal_generated_by(Bp, [evaluate_path(Bp, ("be", "ga", "de", "al"))])
        QA, QB = quotient_by_ideal(A, IA), quotient_by_ideal(Bp, IB)
        if not (r.verdict and r.extra["J_equals_nabla"]):
            return False
        if r.A_quotient.dim != QA.dim or r.B_quotient.dim != QB.dim:
            return False
        fa, fb = invariant_report(r.A_quotient), invariant_report(r.B_quotient)
        if not (compare_reports(fa, invariant_report(QA))["consistent"]
                and compare_reports(fb, invariant_report(QB))["consistent"]
                and compare_reports(fa, fb)["consistent"]):
            return False
    return True


def criterion_6():
    for fld, m in itertools.product((F2, QQ), (3, 4)):
        A = truncated_poly(fld, m)
        R = mc.regular_module(A)
        mods = [mc.projective_module(A, 0)]
        mods += [mc.quotient_module(R, A.radical_power(i))[0] for i in range(1, m)]
        E = ay.build_ay_algebra(A, mods, [0]).algebra()
        g = global_dimension(E, 2 * m)
        if g != 2 or g > m:
            return False
    return True


def criterion_7():
    for fld in (F2, QQ):
        A = cyclic_three(fld)
        T = q.idempotent_tilting(A, [1])
        good = q.quotient_pair_check(A, T, mc.socle_ideal(A, [0, 2]))
        if not (good.verdict and good.tbar_tilting.verdict):
            return False
        if good.end_tbar.dim != good.B_algebra.dim - good.J_ideal.dim:
            return False
        bad = q.quotient_pair_check(A, T, mc.socle_ideal(A, [1]))
        if bad.verdict or bad.tbar_tilting.verdict:
            return False
    return True


def criterion_8():
    for fld in (F2, QQ):
        for A in (truncated_poly(fld, 3), cyclic_three(fld)):
            n = A.num_vertices
            mods = [mc.projective_module(A, v) for v in range(n)] + [mc.simple_module(A, 0)]
            for phi in ([0], [0, 1], [0, 2], [0, 1, 2], [0, 3, 4]):
                E = ay.build_ay_algebra(A, mods, phi)
                # over a self-injective algebra the projective summands are the injective ones
                for a, b in itertools.product(range(n + 1), repeat=2):
                    if a < n or b < n:
                        left, right = ay.yoneda_hom_dims(E, a, b)
                        if left != right:
                            return False
                if any(ay.nu_compatibility(E, a) != (True, True) for a in range(n)):
                    return False
    return True


def report_bytes(argv):
    code, doc, _ = cli.execute(argv)
    return json.dumps(doc, sort_keys=True).encode()


def criterion_9():
    # differentials square to zero and Hom in K is invariant under radical normalization
    for fld in (F2, QQ):
        cx = sample_complexes(fld)
        for X in cx:
            X.check()
            X.module_complex().check()
        for X, Y in itertools.product(cx, repeat=2):
            if X.algebra is not Y.algebra:
                continue
            NX, NY = ho.normalize_radical(X), ho.normalize_radical(Y)
            for n in (-1, 0, 1):
                if ho.hom_dim_K(X, Y, n) != ho.hom_dim_K(NX, NY, n):
                    return False
    # Yoneda products do not depend on the chosen comparison lift
    rng = random.Random(0)
    for A in (truncated_poly(QQ, 3), cyclic_three(F2)):
        mods = [mc.simple_module(A, v) for v in range(A.num_vertices)]
        for X, Y, Z in itertools.product(mods, repeat=3):
            for i, j in ((1, 1), (1, 2), (2, 1)):
                for f in ex.ext_group(X, Y, i, 4):
                    for g in ex.ext_group(Y, Z, j, 4):
                        if perturbed_product(f, g, rng) != ex.yoneda_product(f, g).coordinates:
                            return False
    # second syzygy of the simple module over k[t]/(t^3)
    for fld in (F2, QQ):
        A = truncated_poly(fld, 3)
        k = mc.simple_module(A, 0)
        if not mc.is_isomorphic(mc.syzygy(mc.syzygy(k)), k):
            return False
    # seeded operations give byte-identical reports
    ex1, t3 = str(DATA / "ex1.alg"), str(DATA / "t3.alg")
    runs = [
        ["module", "decompose", "--algebra", t3, "--module", "A+k+U+k", "--seed", "11"],
        ["module", "nustable", "--algebra", ex1, "--seed", "3"],
        ["tilt", "idem", "--algebra", ex1, "--e", "2", "--seed", "7"],
        ["quot", "nabla", "--algebra", ex1, "--e", "1,3", "--seed", "5"],
        ["quot", "check", "--algebra", ex1, "--complex", "idem:2", "--ideal", "socle:1,3"],
        ["verify", "shift-instance", "--algebra", t3, "--module", "k", "--phi", "0,1", "--seed", "2"],
    ]
    for argv in runs:
        if report_bytes(argv) != report_bytes(argv):
            return False
    return True


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("n", range(1, 10))
def test_criterion(n):
    record(n, CRITERIA[n - 1]())
