"""Hopf axiom verifiers, builtins, integrals, quotients, duals."""

import pytest

from hopfgalois.scalars import Rationals, Cyclotomic, root_of_unity, QQ
from hopfgalois.findim import LinMap, zero_mat
from hopfgalois.hopf import (
    HopfData, hopf_make, hopf_check, check_bialgebra, check_antipode,
    builtin_hopf, builtin_names, standard_builtins, group_algebra,
    dual_group_algebra, dual_hopf, tensor_hopf, taft, sweedler, circle,
    cyclic_group, symmetric_group_3, antipode_order, integrals,
    is_grouplike, is_skew_primitive, quotient_hopf,
)
from hopfgalois.catalog import catalog
from hopfgalois.genhopf import GenHopfSpec, check_hopf_on_generators
from hopfgalois.skewpbw import normal_form

RAT = Rationals()


def test_builtin_axiom_suite_sample():
    for name in ("kZ3", "kS3", "dual_kZ4", "sweedler", "circle", "taft9",
                 "kZ2_x_kZ2"):
        h = builtin_hopf(name)
        rep = hopf_check(h)
        assert rep.ok, (name, rep.failures())


def test_corrupted_delta_fails_counit():
    h = builtin_hopf("kZ2")
    # replace Delta(g) with g@1
    rows = [list(r) for r in h.delta.rows]
    n = h.dim
    for i in range(n * n):
        rows[i][1] = RAT.zero()
    rows[1 * n + 0][1] = RAT.one()
    bad_delta = LinMap(h.delta.dom, h.delta.cod, rows, RAT)
    bad = HopfData(h.alg, bad_delta, h.counit, h.antipode, name="bad")
    rep = check_bialgebra(bad)
    assert not rep.ok
    names = [c.name for c in rep.failures()]
    assert "counit_left" in names


def test_sweedler_identity_antipode_fails_on_x():
    h = builtin_hopf("sweedler")
    n = h.dim
    ident = [[RAT.one() if i == j else RAT.zero() for j in range(n)]
             for i in range(n)]
    bad = HopfData(h.alg, h.delta, h.counit,
                   LinMap(h.antipode.dom, h.antipode.cod, ident, RAT))
    rep = check_antipode(bad)
    bad_checks = rep.failures()
    assert bad_checks
    assert bad_checks[0].witness == "x"


def test_hopf_make_rejects_broken_structure():
    h = builtin_hopf("kZ3")
    rows = [list(r) for r in h.antipode.rows]
    rows[0], rows[1] = rows[1], rows[0]
    with pytest.raises(ValueError):
        hopf_make(h.alg, h.delta, h.counit,
                  LinMap(h.antipode.dom, h.antipode.cod, rows, RAT))


def test_antipode_orders():
    assert antipode_order(builtin_hopf("kZ2")) == 1
    assert antipode_order(builtin_hopf("kZ3")) == 2
    assert antipode_order(builtin_hopf("sweedler")) == 4
    assert antipode_order(builtin_hopf("taft9")) == 6
    assert antipode_order(builtin_hopf("circle")) == 2


def test_integrals_group_algebra():
    ir = integrals(builtin_hopf("kZ3"))
    assert ir.report.ok
    assert len(ir.left) == 1 and len(ir.right) == 1
    assert ir.left[0] == [QQ(1), QQ(1), QQ(1)]
    assert ir.unimodular and ir.semisimple


def test_integrals_sweedler():
    ir = integrals(builtin_hopf("sweedler"))
    assert ir.report.ok
    # basis order 1, x, g, gx: left integral x + gx, right gx - x
    assert len(ir.left) == 1
    assert ir.left[0] == [QQ(0), QQ(1), QQ(0), QQ(1)]
    assert len(ir.right) == 1
    assert ir.right[0][1] == -ir.right[0][3] and ir.right[0][3] != 0
    assert not ir.unimodular
    assert not ir.semisimple


def test_integrals_dual_group_algebra():
    ir = integrals(builtin_hopf("dual_kZ2"))
    assert ir.report.ok
    # integral p_e has eps(p_e) = 1
    assert ir.unimodular and ir.semisimple


def test_integral_spaces_one_dimensional_everywhere():
    for name, h in standard_builtins():
        ir = integrals(h)
        assert ir.report.ok, name
        assert len(ir.left) == 1 and len(ir.right) == 1, name


def test_grouplike_membership():
    h = builtin_hopf("taft9")
    assert is_grouplike(h, "g")
    assert is_grouplike(h, "g2")
    assert is_grouplike(h, "1")
    assert not is_grouplike(h, "1 + g")
    assert not is_grouplike(h, "x")
    with pytest.raises(ValueError):
        is_grouplike(h, "0*g")


def test_grouplikes_of_group_algebra_are_the_group():
    h = builtin_hopf("kS3")
    for lab in h.alg.labels:
        assert is_grouplike(h, lab)


def test_skew_primitive_taft():
    h = builtin_hopf("taft9")
    # Delta(x) = x@1 + g@x
    assert is_skew_primitive(h, "x", "1", "g")
    assert not is_skew_primitive(h, "x", "g", "1")
    with pytest.raises(ValueError):
        is_skew_primitive(h, "x", "1 + g", "g")


def test_taft_multiplication_and_nilpotence():
    field = Cyclotomic(3)
    om = root_of_unity(field, 3)
    h = taft(3, om, field=field)
    alg = h.alg
    x = alg.index["x"]
    g = alg.index["g"]
    gx = alg.index["gx"]
    # xg = omega gx
    assert alg.mult_vec(alg.basis_vec(x), alg.basis_vec(g)) == {gx: om}
    # x^3 = 0
    x2 = alg.mult_vec(alg.basis_vec(x), alg.basis_vec(x))
    assert alg.mult_vec(x2, alg.basis_vec(x)) == {}
    # g^3 = 1
    g2 = alg.mult_vec(alg.basis_vec(g), alg.basis_vec(g))
    assert alg.mult_vec(g2, alg.basis_vec(g)) == alg.unit_vec()


def test_taft_rejects_non_primitive_root():
    field = Cyclotomic(4)
    with pytest.raises(ValueError):
        taft(4, field.from_int(-1), field=field)
    with pytest.raises(ValueError):
        taft(3, Cyclotomic(3).one(), field=Cyclotomic(3))


def test_circle_comultiplication():
    h = circle()
    alg = h.alg
    c = alg.index["c"]
    s = alg.index["s"]
    n = alg.dim
    col = [h.delta.rows[i][c] for i in range(n * n)]
    expect = [RAT.zero()] * (n * n)
    expect[c * n + c] = RAT.one()
    expect[s * n + s] = RAT.from_int(-1)
    assert col == expect
    assert alg.is_commutative()


def test_dual_of_group_algebra_matches_function_algebra():
    h = dual_hopf(builtin_hopf("kZ3"))
    f = builtin_hopf("dual_kZ3")
    assert h.alg.mult == f.alg.mult
    assert h.alg.unit == f.alg.unit
    assert h.delta.rows == f.delta.rows
    assert h.antipode.rows == f.antipode.rows


def test_double_dual_restores_structure():
    for name in ("sweedler", "kS3", "taft9"):
        h = builtin_hopf(name)
        dd = dual_hopf(dual_hopf(h))
        assert dd.alg.mult == h.alg.mult
        assert dd.alg.unit == h.alg.unit
        assert dd.delta.rows == h.delta.rows
        assert dd.counit.rows == h.counit.rows
        assert dd.antipode.rows == h.antipode.rows


def test_tensor_hopf_structure():
    h = builtin_hopf("kZ2_x_kZ2")
    assert h.dim == 4
    assert h.alg.is_commutative()
    assert antipode_order(h) == 1
    # mixed tensor: sweedler @ kZ2 is a valid dim-8 Hopf algebra
    mixed = tensor_hopf(builtin_hopf("sweedler"), builtin_hopf("kZ2"))
    assert mixed.dim == 8


def test_quotient_by_zero_ideal():
    h = builtin_hopf("sweedler")
    q = quotient_hopf(h, [])
    assert q.dim == h.dim


def test_quotient_kZ4_to_kZ2():
    h = builtin_hopf("kZ4")
    q = quotient_hopf(h, ["g2 - e", "g3 - g"])
    assert q.dim == 2
    assert antipode_order(q) in (1, 2)
    assert q.alg.is_commutative()


def test_quotient_sweedler_to_kZ2():
    h = builtin_hopf("sweedler")
    q = quotient_hopf(h, ["x", "gx"])
    assert q.dim == 2
    assert sorted(q.alg.labels) == ["1", "g"]
    assert is_grouplike(q, "g")


def test_quotient_rejects_non_ideal():
    h = builtin_hopf("kZ4")
    with pytest.raises(ValueError):
        quotient_hopf(h, ["g2 - e"])


def test_builtin_registry():
    names = builtin_names()
    assert "sweedler" in names and "kS3" in names
    with pytest.raises(ValueError):
        builtin_hopf("nosuch")
    dims = {name: h.dim for name, h in standard_builtins()}
    assert dims["taft9"] == 9
    assert all(d <= 9 for d in dims.values())


def test_genhopf_u_sl2_passes_degree_4():
    pres = catalog("u_sl2")
    spec = GenHopfSpec(
        pres,
        delta={v: "%s@1 + 1@%s" % (v, v) for v in pres.vars},
        epsilon={v: 0 for v in pres.vars},
        antipode={v: "-%s" % v for v in pres.vars},
    )
    rep = check_hopf_on_generators(spec, degree=4)
    assert rep.ok, rep.failures()


def test_genhopf_uq_sl2_passes_degree_3():
    pres = catalog("uq_sl2")
    spec = GenHopfSpec(
        pres,
        delta={"k": "k@k", "e": "1@e + e@k", "f": "k^-1@f + f@1"},
        epsilon={"k": 1, "e": 0, "f": 0},
        antipode={"k": "k^-1", "e": "-e*k^-1", "f": "-k*f"},
    )
    rep = check_hopf_on_generators(spec, degree=3)
    assert rep.ok, rep.failures()


def test_genhopf_uq_sl2_commutation_normal_form():
    pres = catalog("uq_sl2")
    lhs = normal_form(pres, "e*f")
    rhs = pres.parse("f*e + (k - k^-1) / (q - q^-1)")
    assert lhs == rhs


def test_genhopf_bad_antipode_witnessed_on_x():
    pres = catalog("u_sl2")
    spec = GenHopfSpec(
        pres,
        delta={v: "%s@1 + 1@%s" % (v, v) for v in pres.vars},
        epsilon={v: 0 for v in pres.vars},
        antipode={"x": "x", "y": "-y", "h": "-h"},
    )
    rep = check_hopf_on_generators(spec, degree=2)
    bad = {c.name: c.witness for c in rep.failures()}
    assert bad.get("antipode_left_identity") == "x"


def test_genhopf_missing_generator_data():
    pres = catalog("u_sl2")
    with pytest.raises(ValueError):
        GenHopfSpec(pres, delta={"x": "x@1 + 1@x"}, epsilon={"x": 0},
                    antipode={"x": "-x"})


def test_genhopf_epsilon_on_laurent_coefficients():
    pres = catalog("uq_sl2")
    spec = GenHopfSpec(
        pres,
        delta={"k": "k@k", "e": "1@e + e@k", "f": "k^-1@f + f@1"},
        epsilon={"k": 1, "e": 0, "f": 0},
        antipode={"k": "k^-1", "e": "-e*k^-1", "f": "-k*f"},
    )
    val = spec.eps(pres.parse("k^-1 + 3*e"))
    assert val == pres.ring.field.one()
