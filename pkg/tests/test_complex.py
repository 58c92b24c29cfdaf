import pytest

from thom.action import chain_set, validate_action
from thom.alphabet import cliques, permuted, validate_alphabet
from thom.complex import (
    ChainComplex,
    direct_sum,
    dump_matrices,
    kset_complex,
    simplicial_chain_complex,
    verify_dd_zero,
)
from thom.errors import CommutationViolation
from thom.intlinalg import FinAbGroup, IntMatrix, group_sum, homology
from thom.simplicial import builtin, clique_complex, make_complex

A1 = validate_alphabet(["a", "b"], [("a", "b")])
A2 = validate_alphabet(["a", "b"])


def test_kset_d1_on_two_free_generators():
    cc = kset_complex(chain_set(A2, 0), kmax=2)
    assert cc.dims() == [2, 4, 0]
    assert cc.bases[1] == (("x0", ("a",)), ("x0", ("b",)), ("*", ("a",)), ("*", ("b",)))
    # d(x0,{e}) = (-1)^1 [(x0.e) - (x0)] = (x0) - (*)
    assert cc.boundary(1).to_dense() == [[1, 1, 0, 0], [-1, -1, 0, 0]]
    assert homology(cc)[:2] == [FinAbGroup(1), FinAbGroup(3)]


def test_kset_d2_on_commuting_pair():
    cc = kset_complex(chain_set(A1, 0))
    assert cc.bases[2] == (("x0", ("a", "b")), ("*", ("a", "b")))
    # d(x0,{a,b}) = (*,a) - (*,b) - (x0,a) + (x0,b);  d(*,{a,b}) = 0
    rows = [lab for lab in cc.bases[1]]
    col = {lab: cc.boundary(2)[i, 0] for i, lab in enumerate(rows)}
    assert col == {("x0", ("a",)): -1, ("x0", ("b",)): 1, ("*", ("a",)): 1, ("*", ("b",)): -1}
    assert all(cc.boundary(2)[i, 1] == 0 for i in range(len(rows)))


def test_point_has_zero_differentials(battery):
    for alpha in battery.values():
        cc = kset_complex(chain_set(alpha, -1))
        assert all(cc.boundary(n).is_zero() for n in range(1, cc.top_degree + 1))
        assert [g.rank for g in homology(cc)] == [len(cliques(alpha, k)) for k in cc.degrees()]


def test_reduced_x0_is_augmented_clique_complex(battery):
    for alpha in battery.values():
        red = homology(kset_complex(chain_set(alpha, 0), variant="reduced"))
        aug = homology(simplicial_chain_complex(clique_complex(alpha), augmented=True))
        assert red == aug  # degree n of one is degree n-1 of the other


def test_unreduced_is_reduced_plus_cliques(battery):
    for alpha in battery.values():
        for m in (-1, 0, 1, 2):
            act = chain_set(alpha, m)
            un = homology(kset_complex(act))
            red = homology(kset_complex(act, variant="reduced"))
            for k, g in enumerate(un):
                assert g == group_sum(red[k], FinAbGroup(len(cliques(alpha, k))))


def test_dd_zero_on_valid_complexes(battery):
    for alpha in battery.values():
        for m in (-1, 0, 1, 2):
            for variant in ("unreduced", "reduced"):
                assert verify_dd_zero(kset_complex(chain_set(alpha, m), variant=variant)).passed
    for name in ("delta2", "hollow_triangle", "cycle4", "two_points", "rp2_min"):
        for aug in (False, True):
            assert verify_dd_zero(simplicial_chain_complex(builtin(name), aug)).passed


def _broken_action():
    entries = [("x0", "a", "x1"), ("x0", "b", "x1"), ("x1", "a", "x1"), ("x1", "b", "*")]
    return validate_action(A1, ["x0", "x1", "*"], "*", entries, check_laws=False)


def test_dd_fails_on_commutation_violation():
    rep = verify_dd_zero(kset_complex(_broken_action()))
    assert not rep.passed
    assert rep.degree == 1 and rep.value != 0


def test_dd_iff_coherent(rng):
    # random pointed tables over a commuting pair: d o d = 0 exactly when coherent
    seen = {True: 0, False: 0}
    for _ in range(300):
        elems = ["p", "q", "r", "*"]
        entries = [(x, e, rng.choice(elems)) for x in elems[:-1] for e in "ab"]
        act = validate_action(A1, elems, "*", entries, check_laws=False)
        try:
            validate_action(A1, elems, "*", entries)
            coherent = True
        except CommutationViolation:
            coherent = False
        seen[coherent] += 1
        for variant in ("unreduced", "reduced"):
            assert verify_dd_zero(kset_complex(act, variant=variant)).passed == coherent
    assert seen[True] and seen[False]


def test_corrupted_matrix_reports_witness():
    cc = simplicial_chain_complex(builtin("delta2"))
    d2 = cc.boundary(2).to_dense()
    d2[1][0] += 1
    bad = ChainComplex(cc.bases, {1: cc.boundary(1), 2: IntMatrix.from_dense(d2)})
    rep = verify_dd_zero(bad)
    assert not rep.passed
    assert (rep.degree, rep.col) == (1, 0)
    assert "FAIL" in str(rep)


def test_simplicial_chain_complex():
    hollow = simplicial_chain_complex(builtin("hollow_triangle"))
    d1 = hollow.boundary(1).to_dense()
    assert sorted(sorted(col) for col in zip(*d1)) == [[-1, 0, 1]] * 3
    assert homology(hollow) == [FinAbGroup(1), FinAbGroup(1)]
    assert homology(simplicial_chain_complex(make_complex("a"), augmented=True)) == [FinAbGroup()] * 2
    edge = simplicial_chain_complex(make_complex("ab", ["ab"]), augmented=True)
    assert homology(edge)[1] == FinAbGroup()


def test_direct_sum(battery):
    zero = ChainComplex({0: ()})
    cc = kset_complex(chain_set(A1, 0))
    s = direct_sum(cc, zero)
    assert s.dims() == cc.dims() and homology(s) == homology(cc)
    pieces = [kset_complex(chain_set(a, 1)) for a in battery.values()]
    pieces.append(simplicial_chain_complex(builtin("rp2_min"), augmented=True))
    for x in pieces:
        for y in pieces[-3:]:
            s = direct_sum(x, y)
            assert verify_dd_zero(s).passed
            lo = s.bottom_degree
            hx = dict(zip(x.degrees(), homology(x)))
            hy = dict(zip(y.degrees(), homology(y)))
            for n, g in zip(s.degrees(), homology(s)):
                assert g == group_sum(hx.get(n, FinAbGroup()), hy.get(n, FinAbGroup()))
            assert [s.dim(n) for n in s.degrees()] == [x.dim(n) + y.dim(n) for n in range(lo, s.top_degree + 1)]


def test_generator_order_does_not_change_homology(battery, rng):
    for alpha in battery.values():
        order = list(alpha.generators)
        rng.shuffle(order)
        beta = permuted(alpha, order)
        for m in (-1, 0, 1):
            for variant in ("unreduced", "reduced"):
                assert homology(kset_complex(chain_set(alpha, m), variant=variant)) == \
                    homology(kset_complex(chain_set(beta, m), variant=variant))


def test_dump_format():
    text = dump_matrices(kset_complex(chain_set(A2, 0)))
    assert text.splitlines() == ["degree 1 rows 2 cols 4", "1 1 0 0", "-1 -1 0 0"]


def test_euler_characteristic(battery):
    for alpha in battery.values():
        cc = kset_complex(chain_set(alpha, 1))
        assert cc.euler_characteristic() == sum((-1) ** n * g.rank for n, g in zip(cc.degrees(), homology(cc)))
