import pytest

from grpverify import gf
from grpverify.construct import (
    Action,
    ActionError,
    Alt,
    BuildError,
    Cyc,
    Dih,
    ElemAb,
    H3,
    Hess,
    Hsl23,
    MatGL,
    MatSL,
    PGroup,
    PSL32,
    Prod,
    ProjGL,
    ProjSL,
    Semi,
    SwapSq,
    Sym,
    WeylD,
    build,
    matrix_to_projective_perm,
    projective_line_action,
    to_src,
)
from grpverify.smallgroup import CapExceeded


CATALOG = [
    (Cyc(12), 12),
    (Dih(2), 4),
    (Dih(6), 12),
    (Sym(4), 24),
    (Sym(6), 720),
    (Alt(4), 12),
    (Alt(5), 60),
    (ElemAb(2, 4), 16),
    (ElemAb(3, 3), 27),
    (H3(), 27),
    (MatGL(3), 48),
    (MatSL(3), 24),
    (ProjGL(2), 6),
    (ProjGL(3), 24),
    (ProjGL(9), 720),
    (ProjSL(4), 60),
    (ProjSL(5), 60),
    (ProjSL(7), 168),
    (ProjSL(9), 360),
    (PSL32(), 168),
    (WeylD(5), 1920),
    (Prod(Alt(5), Alt(5)), 3600),
    (SwapSq(Sym(4)), 1152),
]


@pytest.mark.parametrize("expr,order", CATALOG)
def test_catalog_orders(expr, order):
    assert build(expr).order == order


def test_d4_is_klein_four():
    m = build(Dih(2)).materialized()
    assert m.n == 4 and m.is_abelian()
    assert all(m.element_order(i) <= 2 for i in range(4))


def test_h3_nonabelian_exponent_three():
    m = build(H3()).materialized()
    assert m.n == 27 and not m.is_abelian()
    assert all(m.element_order(i) in (1, 3) for i in range(27))


def test_mu7_mu3_default_action():
    h = build(Semi(Cyc(7), Cyc(3), Action("explicit")))
    assert h.order == 21
    assert not h.materialized().is_abelian()


def test_wd5_atom_matches_semi_form():
    from grpverify.lattice import is_isomorphic

    a = build(WeylD(5)).materialized()
    b = build(Semi(ElemAb(2, 4), Sym(5), Action("evenperm"))).materialized()
    assert a.n == b.n == 1920
    assert is_isomorphic(a, b, cap=2000)


def test_hess_order_and_normal_part():
    h = build(Hess())
    assert h.order == 216
    nmask = h.mask_of(h.parts["normal_gens"])
    assert nmask.bit_count() == 9


def test_hsl23():
    h = build(Hsl23())
    assert h.order == 648
    m = h.materialized()
    assert m.center().bit_count() == 3


def test_hsl23_matches_cocycle_construction():
    """Independent oracle: SL2(F3) acts on Heisenberg triples explicitly via
    (x,y,z) -> (ax+by, cx+dy, z + 2ac x^2 + 2bd y^2 + bc xy)."""
    from grpverify.lattice import is_isomorphic
    from grpverify.perm import PermGroup

    def triple_index(x, y, z):
        return 9 * x + 3 * y + z

    def translation(g):
        gx, gy, gz = g
        return tuple(
            triple_index((x + gx) % 3, (y + gy) % 3, (z + gz + x * gy) % 3)
            for x in range(3) for y in range(3) for z in range(3)
        )

    def cocycle_aut(a, b, c, d):
        assert (a * d - b * c) % 3 == 1
        return tuple(
            triple_index(
                (a * x + b * y) % 3,
                (c * x + d * y) % 3,
                (z + 2 * a * c * x * x + 2 * b * d * y * y + b * c * x * y) % 3,
            )
            for x in range(3) for y in range(3) for z in range(3)
        )

    gens = [translation((1, 0, 0)), translation((0, 1, 0)),
            cocycle_aut(1, 1, 0, 1), cocycle_aut(1, 0, 1, 1)]
    oracle = PermGroup(gens, 27)
    assert oracle.order() == 648
    from grpverify.smallgroup import materialize

    assert is_isomorphic(materialize(oracle), build(Hsl23()).materialized())


def test_semi_contains_normal_part_with_right_quotient():
    from grpverify.lattice import Sub, is_isomorphic, quotient

    cases = [
        (Semi(Cyc(7), Cyc(3), Action("explicit")), Cyc(7), Cyc(3)),
        (Semi(ElemAb(3, 3), Sym(4), Action("quotperm")), ElemAb(3, 3), Sym(4)),
        (Semi(ElemAb(2, 4), PGroup(5, ("(1 2 3 4 5)", "(2 5)(3 4)")),
              Action("evenperm")), ElemAb(2, 4), None),
        (Semi(Cyc(9), Cyc(2), Action("inv")), Cyc(9), Cyc(2)),
        (Semi(ElemAb(3, 2), Cyc(8), Action("explicit", (0, 1, 1, 1))),
         ElemAb(3, 2), Cyc(8)),
        (Semi(ElemAb(2, 3), Cyc(7),
              Action("explicit", (0, 0, 1, 1, 0, 1, 0, 1, 0))), ElemAb(2, 3), Cyc(7)),
        (Semi(ElemAb(5, 2), Sym(2), Action("natperm")), ElemAb(5, 2), Sym(2)),
    ]
    for expr, n_expr, h_expr in cases:
        h = build(expr)
        n_want = build(n_expr)
        assert h.order == n_want.order * build(expr.h).order
        m = h.materialized()
        nmask = h.mask_of(h.parts["normal_gens"])
        assert nmask.bit_count() == n_want.order
        gens = tuple(m.index[p] for p in h.parts["normal_gens"])
        assert m.is_normal_mask(nmask, gens)
        from grpverify.lattice import sub_materialized

        assert is_isomorphic(sub_materialized(m, Sub(nmask, gens)),
                             n_want.materialized())
        if h_expr is not None:
            q = quotient(m, Sub(nmask, gens))
            assert is_isomorphic(q, build(h_expr).materialized())


def test_swapsq_contains_index_two_product():
    h = build(SwapSq(Sym(3)))
    assert h.order == 72
    inner = h.mask_of(h.parts["inner_gens"])
    assert inner.bit_count() == 36


def test_swap_action_is_swapsq():
    h = build(Semi(Prod(Sym(3), Sym(3)), Cyc(2), Action("swap")))
    assert h.order == 72
    with pytest.raises(BuildError):
        build(Semi(Prod(Sym(3), Sym(4)), Cyc(2), Action("swap")))


def test_action_not_homomorphism_rejected():
    # x -> x^2 is not invertible on C(6); order-3 matrix on C(4)-size mismatch
    with pytest.raises(BuildError):
        build(Semi(Cyc(6), Cyc(2), Action("explicit", (2,))))
    # inversion of C(5) has order 2, not dividing |C(3)|
    with pytest.raises(ActionError):
        build(Semi(Cyc(5), Cyc(3), Action("inv")))


def test_no_nontrivial_action_rejected():
    with pytest.raises(BuildError):
        build(Semi(Cyc(2), Cyc(3), Action("explicit")))


def test_order_cap():
    with pytest.raises(CapExceeded):
        build(SwapSq(Alt(5)), max_order=5000)


def test_unsupported_parameters():
    with pytest.raises(BuildError):
        build(Dih(1))
    with pytest.raises(BuildError):
        build(ElemAb(4, 2))
    with pytest.raises(ValueError):
        build(ProjGL(6))
    with pytest.raises(BuildError):
        build(MatGL(9))


def test_projective_line_action_gf3():
    F = gf.field_new(3, 1)
    points, to_perm = projective_line_action(F)
    assert len(points) == 4
    perms = set()
    mats = [((a, b), (c, d)) for a in range(3) for b in range(3)
            for c in range(3) for d in range(3) if (a * d - b * c) % 3]
    for M in mats:
        perms.add(to_perm(M))
    assert len(perms) == 24  # PGL2(F3) = S4 on 4 points
    # kernel of the action is exactly the scalars
    scalars = [M for M in mats if to_perm(M) == tuple(range(4))]
    assert sorted(scalars) == [((1, 0), (0, 1)), ((2, 0), (0, 2))]


def test_singular_matrix_rejected():
    F = gf.field_new(3, 1)
    with pytest.raises(ValueError):
        matrix_to_projective_perm(F, ((1, 2), (2, 1)))


def test_gf2_pgl_is_s3():
    from grpverify.lattice import is_isomorphic

    assert is_isomorphic(build(ProjGL(2)).materialized(),
                         build(Sym(3)).materialized())


def test_to_src_round_trip_via_equality():
    exprs = [e for e, _ in CATALOG] + [
        Semi(ElemAb(2, 4), PGroup(5, ("(1 2 3 4 5)", "(2 5)(3 4)")), Action("evenperm")),
        Semi(Cyc(7), Cyc(3), Action("explicit")),
        Semi(ElemAb(3, 2), Cyc(8), Action("explicit", (0, 1, 1, 1))),
    ]
    seen = {}
    for e in exprs:
        src = to_src(e)
        assert seen.setdefault(src, e) == e
