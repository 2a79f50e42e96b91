from fractions import Fraction
from math import ceil, log2

import pytest

from grpverify.construct import (
    Action, Alt, Cyc, Dih, ElemAb, PGroup, Prod, ProjGL, ProjSL, Semi, SwapSq,
    Sym, build,
)
from grpverify.lattice import (
    Sub,
    all_subgroups,
    conjugates_of,
    is_isomorphic,
    j_analysis,
    normal_subgroups,
    quotient,
    sub_materialized,
    subgroup_classes,
    sweep_bound,
)
from grpverify.smallgroup import CapExceeded, bits


def mat(expr):
    return build(expr).materialized()


# -- oracles -----------------------------------------------------------------


def powerset_subgroups(m):
    """Literal power-set oracle: every subset closed under the operation."""
    full = list(range(m.n))
    table = [[m.mul(i, j) for j in full] for i in full]
    out = []
    for mask in range(1, 1 << m.n, 2):  # identity (bit 0) required
        members = [i for i in full if mask >> i & 1]
        ok = True
        for a in members:
            row = table[a]
            for b in members:
                if not mask >> row[b] & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(mask)
    return sorted(out)


def generated_subgroups(m):
    """Bounded-generator oracle: closures of every subset of size <= log2 n."""
    from itertools import combinations

    k = max(1, ceil(log2(m.n)))
    out = {1}
    elems = list(range(1, m.n))
    for size in range(1, k + 1):
        for combo in combinations(elems, size):
            out.add(m.close(list(combo)))
    return sorted(out)


def test_all_subgroups_matches_power_set_oracle_small():
    for expr in [Cyc(12), Dih(4), ElemAb(2, 3), Alt(4), Sym(3), Dih(2)]:
        m = mat(expr)
        assert m.n <= 16
        got = sorted(s.mask for s in all_subgroups(m))
        assert got == powerset_subgroups(m)


def test_all_subgroups_matches_generator_oracle_s4():
    m = mat(Sym(4))
    got = sorted(s.mask for s in all_subgroups(m))
    assert got == generated_subgroups(m)
    assert len(got) == 30


def test_mu2_mu2_has_five_subgroups():
    assert len(all_subgroups(mat(Dih(2)))) == 5


def test_s4_classes():
    assert len(subgroup_classes(mat(Sym(4)))) == 11


def test_a5_known_subgroup_counts():
    # 1, mu_2 (15), mu_3 (10), V_4 (5), mu_5 (6), S_3 (10), D_10 (6),
    # A_4 (5), A_5: 59 subgroups in 9 classes
    m = mat(Alt(5))
    assert len(subgroup_classes(m)) == 9
    assert len(all_subgroups(m)) == 59


def test_s5_class_count_matches_full_list():
    m = mat(Sym(5))
    classes = subgroup_classes(m)
    assert len(classes) == 19
    # internal consistency oracle: expanding class orbits gives the full list
    expanded = set()
    for sub in classes:
        expanded.update(conjugates_of(m, sub.mask))
    assert expanded == {s.mask for s in all_subgroups(m)}


def test_class_expansion_matches_full_list_more_groups():
    from grpverify.construct import PSL32

    for expr in [Dih(6), Alt(4), Semi(Cyc(5), Cyc(4), Action("explicit")),
                 Prod(Sym(3), Cyc(2)), PSL32()]:
        m = mat(expr)
        expanded = set()
        for sub in subgroup_classes(m):
            expanded.update(conjugates_of(m, sub.mask))
        assert expanded == {s.mask for s in all_subgroups(m)}


def test_psl32_known_subgroup_counts():
    from grpverify.construct import PSL32

    m = mat(PSL32())
    assert len(subgroup_classes(m)) == 15
    assert len(all_subgroups(m)) == 179


def test_every_subgroup_is_a_subgroup():
    m = mat(Sym(4))
    for sub in all_subgroups(m):
        assert m.is_subgroup_mask(sub.mask)
        assert m.close(list(sub.gens) or [0]) == sub.mask


# -- normal subgroups ----------------------------------------------------------


def test_normal_subgroups_s4():
    m = mat(Sym(4))
    orders = [s.order for s in normal_subgroups(m)]
    assert orders == [1, 4, 12, 24]


def test_normal_subgroups_psl27_simple():
    m = mat(ProjSL(7))
    assert [s.order for s in normal_subgroups(m)] == [1, 168]


def test_normal_subgroups_match_filtered_all_subgroups():
    for expr in [Sym(4), Dih(6), Semi(Cyc(7), Cyc(3), Action("explicit")),
                 Alt(4), ElemAb(2, 3), SwapSq(Sym(3))]:
        m = mat(expr)
        fast = {s.mask for s in normal_subgroups(m)}
        slow = {s.mask for s in all_subgroups(m)
                if m.is_normal_mask(s.mask, s.gens or None)}
        assert fast == slow


def test_normal_subgroups_closed_under_meet_and_are_class_unions():
    m = mat(Sym(4))
    ns = normal_subgroups(m)
    masks = {s.mask for s in ns}
    for a in ns:
        for b in ns:
            assert a.mask & b.mask in masks
        # each normal subgroup is a union of conjugacy classes
        for cls in m.conjugacy_classes():
            inside = [x for x in cls if a.mask >> x & 1]
            assert len(inside) in (0, len(cls))


def test_swapsq_a5_has_no_nontrivial_normal_abelian():
    m = mat(SwapSq(Alt(5)))
    for s in normal_subgroups(m):
        if s.order > 1:
            assert not m.is_abelian_set(s.gens)


# -- j analysis -----------------------------------------------------------------


def test_j_analysis_a5():
    m = mat(Alt(5))
    assert j_analysis(m, 5).j_ratio == Fraction(12, 25)
    assert j_analysis(m, 5).min_index == 60
    assert j_analysis(m, 3).j_ratio == Fraction(20, 9)
    assert j_analysis(m, 2).j_ratio == Fraction(15, 16)
    assert j_analysis(m, 7).j_ratio == 60


def test_j_analysis_s4_p3():
    ja = j_analysis(mat(Sym(4)), 3)
    assert ja.min_index == 6
    assert ja.witness.order == 4
    assert ja.j_ratio == Fraction(2, 9)


def test_j_analysis_mu2_times_mu7mu3():
    m = mat(Prod(Cyc(2), Semi(Cyc(7), Cyc(3), Action("explicit"))))
    ja = j_analysis(m, 2)
    assert ja.min_index == 6
    assert ja.witness.order == 7
    assert ja.j_ratio == Fraction(3, 4)


def test_j_analysis_c12_p3():
    # brute force over the six subgroups of C12: coprime-to-3 abelian
    # subgroups are 1, mu2, mu4; the best index is 3
    m = mat(Cyc(12))
    ja = j_analysis(m, 3)
    assert ja.min_index == 3
    assert ja.witness.order == 4
    assert ja.j_ratio == Fraction(3, 27)


def test_j_analysis_d10_sharpness_group():
    m = mat(Semi(ElemAb(2, 4), PGroup(5, ("(1 2 3 4 5)", "(2 5)(3 4)")),
                 Action("evenperm")))
    assert m.n == 160
    ja = j_analysis(m, 3)
    assert ja.min_index == 10
    assert ja.witness.order == 16


def test_j_analysis_witness_invariants():
    for expr, p in [(Sym(4), 3), (Alt(5), 2), (Cyc(12), 2), (SwapSq(Sym(3)), 3)]:
        m = mat(expr)
        ja = j_analysis(m, p)
        assert ja.min_index * ja.witness.order == m.n
        assert ja.witness.order % p != 0
        assert m.is_abelian_set(ja.witness.gens)
        assert m.is_normal_mask(ja.witness.mask, ja.witness.gens or None)


def test_j_ratio_isomorphism_invariant():
    a = mat(ProjSL(4))
    b = mat(Alt(5))
    c = mat(ProjSL(5))
    for p in (2, 3, 5, 7):
        assert j_analysis(a, p).j_ratio == j_analysis(b, p).j_ratio == j_analysis(c, p).j_ratio


def test_j_analysis_matches_all_subgroup_filter():
    # oracle: minimize over all subgroups filtered for normality
    for expr, p in [(Sym(4), 3), (Dih(6), 2),
                    (Semi(Cyc(7), Cyc(3), Action("explicit")), 2),
                    (Prod(Alt(4), Cyc(2)), 3)]:
        m = mat(expr)
        best = m.n
        for s in all_subgroups(m):
            if s.order % p and m.is_abelian_set(s.gens) \
                    and m.is_normal_mask(s.mask, s.gens or None):
                best = min(best, m.n // s.order)
        assert j_analysis(m, p).min_index == best


# -- sweeps ----------------------------------------------------------------------


def test_sweep_s5_exceptions():
    m = mat(Sym(5))
    rep = sweep_bound(m, 3, Fraction(10))
    assert rep.violation_orders() == [20]
    assert not rep.bound_violations  # normal mu5 of index 4 rescues
    f20 = rep.order_violations[0]
    assert is_isomorphic(sub_materialized(m, f20.sub),
                         mat(Semi(Cyc(5), Cyc(4), Action("explicit"))))
    rep2 = sweep_bound(m, 2, Fraction(3))
    assert rep2.violation_orders() == [5]
    assert not rep2.bound_violations


def test_sweep_trivial_bound():
    m = mat(Sym(4))
    rep = sweep_bound(m, 5, Fraction(24))
    assert not rep.order_violations


# -- quotients and isomorphism ------------------------------------------------------


def test_quotient_s4_v4_is_s3():
    m = mat(Sym(4))
    v4 = next(s for s in normal_subgroups(m) if s.order == 4)
    q = quotient(m, v4)
    assert q.n == 6 and not q.is_abelian()
    # brute-force coset multiplication oracle
    cosets = {}
    for x in range(m.n):
        key = frozenset(m.mul(nn, x) for nn in bits(v4.mask))
        cosets.setdefault(key, len(cosets))
    assert len(cosets) == 6
    assert is_isomorphic(q, mat(Sym(3)))


def test_quotient_requires_normal():
    m = mat(Sym(4))
    sub = next(s for s in all_subgroups(m)
               if s.order == 2 and not m.is_normal_mask(s.mask, s.gens))
    with pytest.raises(ValueError):
        quotient(m, sub)


def test_exceptional_isomorphisms():
    assert is_isomorphic(mat(ProjGL(3)), mat(Sym(4)))
    assert is_isomorphic(mat(ProjSL(4)), mat(Alt(5)))
    assert is_isomorphic(mat(ProjSL(9)), mat(Alt(6)))


def test_not_isomorphic():
    assert not is_isomorphic(mat(Dih(6)), mat(Alt(4)))
    assert not is_isomorphic(mat(Cyc(4)), mat(Dih(2)))
    assert not is_isomorphic(mat(Sym(4)), mat(Alt(5)))


def test_isomorphism_cap():
    with pytest.raises(CapExceeded):
        is_isomorphic(mat(SwapSq(Alt(5))), mat(SwapSq(Alt(5))), cap=2000)
