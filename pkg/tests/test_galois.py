"""Comodule algebras, coinvariants, Galois maps, smash and crossed
products, cleft maps, induced coactions on skew polynomial truncations."""

import pytest

from hopfgalois.scalars import Rationals
from hopfgalois.findim import (
    LinMap, zero_mat, identity_map, zero_map, identity_mat, mat_mul,
    mat_inverse, algebra_make, tensor_alg,
)
from hopfgalois.hopf import (
    builtin_hopf, standard_builtins, sweedler, cyclic_group,
)
from hopfgalois.galois import (
    ComoduleAlgebra, ActionSpec, OreData, CocycleError, RelTensor,
    check_comodule_algebra, self_coaction, trivial_coaction, coinvariants,
    rel_tensor, galois_check, galois_object_inverse, grading_to_comodule,
    strongly_graded_check, check_module_algebra, invariants, trivial_action,
    dual_correspondence, dual_correspondence_back, smash_product,
    smash_galois_inverse, trivial_cocycle, cocycle_from_table,
    crossed_product, cleft_check, induced_ore_coaction,
    truncated_galois_check, quartic_field, quartic_circle_action,
    quartic_classical_report, _same_span,
)

RAT = Rationals()
ONE = RAT.one()
NEG = RAT.neg(ONE)


def dual_numbers():
    """k[s]/(s^2)."""
    return algebra_make(
        RAT, ["1", "s"],
        {(0, 0): {0: ONE}, (0, 1): {1: ONE}, (1, 0): {1: ONE}, (1, 1): {}},
        {0: ONE}, name="R")


def sign_action():
    """kZ2 acting on the dual numbers by s -> -s."""
    r = dual_numbers()
    h = builtin_hopf("kZ2")
    rows = zero_mat(RAT, 2, 4)
    rows[0][0] = ONE
    rows[1][1] = ONE
    rows[0][2] = ONE
    rows[1][3] = NEG
    act = LinMap((h.space(), r.space()), (r.space(),), rows, RAT)
    return ActionSpec(h, r, act)


def two_points():
    """k x k on orthogonal idempotents."""
    return algebra_make(
        RAT, ["p", "q"],
        {(0, 0): {0: ONE}, (1, 1): {1: ONE}, (0, 1): {}, (1, 0): {}},
        {0: ONE, 1: ONE}, name="kxk")


# ---------------------------------------------------------------------------
# comodule algebras and coinvariants

def test_self_coaction_is_comodule_algebra():
    for name, h in standard_builtins(9):
        rep = self_coaction(h).validate()
        assert rep.ok, (name, rep.failures())


def test_trivial_coaction_is_comodule_algebra():
    h = builtin_hopf("sweedler")
    rep = trivial_coaction(builtin_hopf("kS3").alg, h).validate()
    assert rep.ok


def test_swapped_coaction_fails_counit_and_coassociativity():
    # rho(e) = e@e, rho(g) = e@g: linear, multiplicative, but not a coaction
    h = builtin_hopf("kZ2")
    rows = zero_mat(RAT, 4, 2)
    rows[0][0] = ONE
    rows[1][1] = ONE
    rho = LinMap((h.space(),), (h.space(), h.space()), rows, RAT)
    rep = check_comodule_algebra(h.alg, h, rho)
    assert not rep.ok
    bad = {c.name for c in rep.failures()}
    assert "counit_law" in bad and "coassociativity" in bad
    assert {c.name for c in rep.checks} - bad == {"multiplicative", "unit"}


def test_non_multiplicative_coaction_caught():
    # on kZ3, rho(g) = 1@g but rho(g2) = 1@1 breaks rho(g g) = rho(g)^2
    h = builtin_hopf("kZ3")
    rows = zero_mat(RAT, 9, 3)
    rows[0][0] = ONE
    rows[1][1] = ONE
    rows[0][2] = ONE
    rho = LinMap((h.space(),), (h.space(), h.space()), rows, RAT)
    rep = check_comodule_algebra(h.alg, h, rho)
    mult = [c for c in rep.checks if c.name == "multiplicative"][0]
    assert not mult.ok
    assert mult.witness == "(g, g)"


def test_coinvariants_of_self_coaction_are_scalars():
    for name in ("kZ4", "sweedler", "circle", "kS3", "taft9"):
        h = builtin_hopf(name)
        basis = coinvariants(self_coaction(h))
        assert len(basis) == 1, name
        assert _same_span(h.field, basis, [h.alg.dense(h.alg.unit_vec())])


def test_coinvariants_of_trivial_coaction_are_everything():
    h = builtin_hopf("kZ2")
    a = builtin_hopf("kS3").alg
    assert len(coinvariants(trivial_coaction(a, h))) == a.dim


def test_coinvariants_of_grading_are_identity_component():
    h = builtin_hopf("kZ2")
    com = grading_to_comodule(h.alg, cyclic_group(2), [0, 1])
    basis = coinvariants(com)
    assert len(basis) == 1
    assert _same_span(RAT, basis, [h.alg.dense({0: ONE})])


# ---------------------------------------------------------------------------
# relative tensor products

def test_rel_tensor_over_scalars_is_full_tensor_square():
    h = builtin_hopf("kZ3")
    rel = rel_tensor(h.alg, [h.alg.dense(h.alg.unit_vec())])
    assert rel.dim == 9
    assert rel.rank == 0


def test_rel_tensor_over_whole_algebra_collapses_to_algebra():
    for name in ("kZ3", "sweedler"):
        alg = builtin_hopf(name).alg
        full = [alg.dense(alg.basis_vec(i)) for i in range(alg.dim)]
        rel = rel_tensor(alg, full)
        assert rel.dim == alg.dim, name


def test_rel_tensor_requires_unit_in_span():
    alg = builtin_hopf("kZ3").alg
    with pytest.raises(ValueError):
        rel_tensor(alg, [alg.dense(alg.basis_vec(1))])


def test_rel_tensor_requires_closure():
    alg = builtin_hopf("kZ4").alg
    span = [alg.dense(alg.basis_vec(0)), alg.dense(alg.basis_vec(1))]
    with pytest.raises(ValueError):
        rel_tensor(alg, span)


def test_rel_tensor_projection_section_identity():
    alg = sweedler().alg
    full = [alg.dense(alg.basis_vec(i)) for i in range(alg.dim)]
    rel = rel_tensor(alg, full)
    comp = mat_mul(RAT, rel.projection.rows, rel.section.rows)
    assert comp == identity_mat(RAT, rel.dim)


# ---------------------------------------------------------------------------
# galois checks

def test_hopf_algebras_are_galois_over_scalars():
    for name, h in standard_builtins(9):
        gr = galois_check(self_coaction(h))
        assert gr.bijective and gr.bijective_prime, name
        assert gr.report.ok, (name, gr.report.failures())
        assert len(gr.coinvariants) == 1


def test_closed_form_inverse_matches_matrix_inverse():
    for name, h in standard_builtins(9):
        gr = galois_check(self_coaction(h))
        closed = galois_object_inverse(h)
        lifted = mat_mul(h.field, gr.rel.projection.rows, closed.rows)
        assert lifted == mat_inverse(h.field, gr.beta.rows), name


def test_trivial_coaction_is_not_galois():
    h = sweedler()
    gr = galois_check(trivial_coaction(h.alg, h))
    assert not gr.bijective
    assert not gr.report.ok
    check = [c for c in gr.report.checks if c.name == "beta_bijective"][0]
    assert "rank" in check.witness
    assert check.data["domain"] == 4 and check.data["codomain"] == 16


def test_conjugation_ties_both_galois_maps():
    gr = galois_check(self_coaction(builtin_hopf("taft4")))
    names = {c.name for c in gr.report.checks}
    assert {"conjugation_invertible", "conjugation_identity",
            "bijectivity_agreement"} <= names
    assert gr.report.ok


# ---------------------------------------------------------------------------
# gradings

def test_group_algebra_natural_grading_is_strongly_graded():
    h = builtin_hopf("kZ3")
    rep = strongly_graded_check(h.alg, cyclic_group(3), [0, 1, 2])
    assert rep.ok
    com = grading_to_comodule(h.alg, cyclic_group(3), [0, 1, 2])
    assert com.rho.rows == h.delta.rows
    assert galois_check(com).bijective


def test_zero_component_grading_fails_with_deficit():
    alg = two_points()
    rep = strongly_graded_check(alg, cyclic_group(2), [0, 0])
    assert not rep.ok
    comp = [c for c in rep.checks if c.name == "component_g"][0]
    assert not comp.ok
    assert comp.data["deficit"] == 2
    assert comp.witness == "rank deficit 2"
    agree = [c for c in rep.checks if c.name == "matches_galois"][0]
    assert agree.ok and agree.data["bijective"] is False


def test_nilpotent_generator_grading_not_strongly_graded():
    alg = dual_numbers()
    rep = strongly_graded_check(alg, cyclic_group(2), {"1": "e", "s": "g"})
    assert not rep.ok
    comp = [c for c in rep.checks if c.name == "component_g"][0]
    assert comp.data["deficit"] == 1
    assert [c for c in rep.checks if c.name == "matches_galois"][0].ok


def test_grading_violation_rejected_with_witness():
    alg = two_points()
    with pytest.raises(ValueError) as exc:
        grading_to_comodule(alg, cyclic_group(2), [0, 1])
    assert "q * q" in str(exc.value)


# ---------------------------------------------------------------------------
# module algebra duality

def test_dual_action_and_round_trip():
    for name in ("kZ3", "sweedler", "circle", "kS3"):
        h = builtin_hopf(name)
        com = self_coaction(h)
        spec = dual_correspondence(com)
        assert check_module_algebra(spec).ok, name
        assert _same_span(RAT, invariants(spec), coinvariants(com))
        back = dual_correspondence_back(spec, hopf=h)
        assert back.rho.rows == com.rho.rows, name


def test_dual_of_trivial_coaction_acts_by_counit():
    h = builtin_hopf("kZ2")
    a = dual_numbers()
    spec = dual_correspondence(trivial_coaction(a, h))
    want = trivial_action(spec.hopf, a)
    assert spec.action.rows == want.action.rows


def test_trivial_action_is_module_algebra():
    rep = check_module_algebra(trivial_action(sweedler(), dual_numbers()))
    assert rep.ok


def test_broken_action_witnessed():
    # s -> s under g is not compatible with eps on products? use g.s = 1
    r = dual_numbers()
    h = builtin_hopf("kZ2")
    rows = zero_mat(RAT, 2, 4)
    rows[0][0] = ONE
    rows[1][1] = ONE
    rows[0][2] = ONE
    rows[0][3] = ONE  # g . s = 1
    spec = ActionSpec(h, r, LinMap((h.space(), r.space()), (r.space(),),
                                   rows, RAT))
    rep = check_module_algebra(spec)
    assert not rep.ok
    names = [c.name for c in rep.failures()]
    assert "measuring" in names


# ---------------------------------------------------------------------------
# quartic field example

def test_quartic_action_is_module_algebra():
    spec = quartic_circle_action()
    rep = check_module_algebra(spec)
    assert rep.ok, rep.failures()
    assert len(invariants(spec)) == 1


def test_quartic_coaction_is_galois_with_rank_sixteen():
    com = dual_correspondence_back(quartic_circle_action())
    assert com.validate().ok
    assert len(coinvariants(com)) == 1
    gr = galois_check(com)
    assert gr.bijective
    assert gr.rank == 16 and gr.rel.dim == 16


def test_quartic_classically_not_galois():
    rep = quartic_classical_report()
    assert rep.ok, rep.failures()
    fixed = [c for c in rep.checks if c.name == "fixed_subfield"][0]
    assert fixed.data["dim"] == 2


# ---------------------------------------------------------------------------
# smash products

def test_smash_product_structure():
    com = smash_product(sign_action())
    assert com.alg.dim == 4
    assert com.validate().ok
    # (s#e)(1#g) = s#g while (1#g)(s#e) = -s#g
    a = com.alg
    left = a.mult_vec(a.basis_vec(2), a.basis_vec(1))
    right = a.mult_vec(a.basis_vec(1), a.basis_vec(2))
    assert left == {3: ONE}
    assert right == {3: NEG}


def test_smash_coinvariants_recover_coefficients():
    spec = sign_action()
    com = smash_product(spec)
    basis = coinvariants(com)
    expect = []
    for i in range(2):
        vec = [RAT.zero()] * 4
        vec[i * 2] = ONE  # r # e
        expect.append(vec)
    assert len(basis) == 2
    assert _same_span(RAT, basis, expect)


def test_smash_is_galois_and_closed_inverse_matches():
    spec = sign_action()
    com = smash_product(spec)
    gr = galois_check(com)
    assert gr.bijective and gr.report.ok
    closed = smash_galois_inverse(spec, com)
    lifted = mat_mul(RAT, gr.rel.projection.rows, closed.rows)
    assert lifted == mat_inverse(RAT, gr.beta.rows)


def test_smash_with_trivial_action_is_tensor_algebra():
    r = dual_numbers()
    h = builtin_hopf("kZ2")
    com = smash_product(trivial_action(h, r))
    t = tensor_alg(r, h.alg)
    assert all(com.alg.mult[i][j] == t.mult[i][j]
               for i in range(4) for j in range(4))
    assert com.alg.unit == t.unit


def test_smash_rejects_invalid_action():
    r = dual_numbers()
    h = builtin_hopf("kZ2")
    rows = zero_mat(RAT, 2, 4)
    rows[0][0] = ONE
    rows[1][1] = ONE
    rows[0][2] = ONE
    rows[0][3] = ONE
    spec = ActionSpec(h, r, LinMap((h.space(), r.space()), (r.space(),),
                                   rows, RAT))
    with pytest.raises(ValueError):
        smash_product(spec)


# ---------------------------------------------------------------------------
# crossed products and cocycles

def test_trivial_cocycle_gives_smash():
    spec = sign_action()
    com, rep = crossed_product(spec, trivial_cocycle(spec.hopf, spec.alg))
    assert rep.ok
    smash = smash_product(spec)
    assert all(com.alg.mult[i][j] == smash.alg.mult[i][j]
               for i in range(4) for j in range(4))


def test_sign_cocycle_twists_the_square():
    spec = sign_action()
    tw = cocycle_from_table(spec.hopf, spec.alg,
                            {("e", "e"): 1, ("e", "g"): 1,
                             ("g", "e"): 1, ("g", "g"): -1})
    com, rep = crossed_product(spec, tw)
    assert rep.ok
    # (1#g)^2 = sigma(g, g) # e = -1
    sq = com.alg.mult_vec(com.alg.basis_vec(1), com.alg.basis_vec(1))
    assert sq == {0: NEG}
    assert len(coinvariants(com)) == 2
    assert galois_check(com).bijective


def test_broken_cocycle_rejected_with_witness_triple():
    spec = sign_action()
    # invertible entries, but the twisted value breaks the cocycle law
    bad = cocycle_from_table(spec.hopf, spec.alg,
                             {("e", "e"): 1, ("e", "g"): 1,
                              ("g", "e"): 1, ("g", "g"): "1 + s"})
    with pytest.raises(CocycleError) as exc:
        crossed_product(spec, bad)
    assert exc.value.witness == ("g", "g", "g")


def test_non_invertible_cocycle_rejected_at_construction():
    spec = sign_action()
    with pytest.raises(ValueError):
        cocycle_from_table(spec.hopf, spec.alg,
                           {("e", "e"): 1, ("e", "g"): 1,
                            ("g", "e"): 1, ("g", "g"): "s"})


def test_unnormalized_cocycle_rejected():
    spec = sign_action()
    bad = cocycle_from_table(spec.hopf, spec.alg,
                             {("e", "e"): 2, ("e", "g"): 1,
                              ("g", "e"): 1, ("g", "g"): 1})
    with pytest.raises(CocycleError):
        crossed_product(spec, bad)


def test_crossed_product_coinvariants_and_coaction():
    spec = sign_action()
    tw = cocycle_from_table(spec.hopf, spec.alg,
                            {("e", "e"): 1, ("e", "g"): 1,
                             ("g", "e"): 1, ("g", "g"): -1})
    com, rep = crossed_product(spec, tw)
    co = [c for c in rep.checks if c.name == "coinvariants_match_base"][0]
    assert co.ok and co.data["dim"] == 2
    graded = strongly_graded_check(com.alg, cyclic_group(2), [0, 1, 0, 1])
    assert graded.ok


# ---------------------------------------------------------------------------
# cleft maps

def test_identity_is_cleft_for_self_coaction():
    h = sweedler()
    rep = cleft_check(self_coaction(h), identity_map(RAT, (h.space(),)))
    assert rep.ok


def test_smash_section_is_cleft():
    spec = sign_action()
    com = smash_product(spec)
    rows = zero_mat(RAT, 4, 2)
    rows[0][0] = ONE  # 1#e
    rows[1][1] = ONE  # 1#g
    gamma = LinMap((spec.hopf.space(),), (com.alg.space(),), rows, RAT)
    assert cleft_check(com, gamma).ok


def test_counit_section_is_not_a_comodule_map():
    h = sweedler()
    rep = cleft_check(self_coaction(h), h.uepsilon())
    assert not rep.ok
    bad = [c for c in rep.failures()]
    assert bad[0].name == "comodule_map"
    assert bad[0].witness == "x"


def test_scaled_section_is_normalized_first():
    h = builtin_hopf("kZ3")
    ident = identity_map(RAT, (h.space(),))
    doubled = LinMap(ident.dom, ident.cod,
                     [[RAT.mul(RAT.from_int(2), x) for x in row]
                      for row in ident.rows], RAT)
    rep = cleft_check(self_coaction(h), doubled)
    assert rep.ok
    norm = [c for c in rep.checks if c.name == "normalized"][0]
    assert norm.witness == "rescaled by gamma(1)^-1"


# ---------------------------------------------------------------------------
# induced coactions on skew polynomial truncations

def test_induced_coaction_group_like_coefficients():
    h = builtin_hopf("kZ2")
    com = self_coaction(h)
    ore = OreData(identity_map(RAT, (h.space(),)))
    trunc, rep = induced_ore_coaction(com, ore, 4)
    assert rep.ok, rep.failures()
    co = [c for c in rep.checks if c.name == "coinvariants_match"][0]
    assert co.data["dim"] == 5


def test_induced_coaction_trivial_coefficients():
    h = builtin_hopf("kZ2")
    com = trivial_coaction(h.alg, h)
    ore = OreData(identity_map(RAT, (h.space(),)))
    trunc, rep = induced_ore_coaction(com, ore, 3)
    assert rep.ok
    co = [c for c in rep.checks if c.name == "coinvariants_match"][0]
    assert co.data["dim"] == trunc.dim


def test_induced_coaction_with_twisting_endomorphism():
    # sigma(g) = -g is colinear for the self-coaction of kZ2
    h = builtin_hopf("kZ2")
    com = self_coaction(h)
    sig = LinMap((h.space(),), (h.space(),),
                 [[ONE, RAT.zero()], [RAT.zero(), NEG]], RAT)
    trunc, rep = induced_ore_coaction(com, OreData(sig), 3)
    assert rep.ok, rep.failures()


def test_induced_coaction_rejects_non_colinear_derivation():
    h = builtin_hopf("kZ2")
    com = self_coaction(h)
    sig = LinMap((h.space(),), (h.space(),),
                 [[ONE, RAT.zero()], [RAT.zero(), NEG]], RAT)
    # delta(e) = 0, delta(g) = e: a sigma-derivation, not a comodule map
    delta = LinMap((h.space(),), (h.space(),),
                   [[RAT.zero(), ONE], [RAT.zero(), RAT.zero()]], RAT)
    with pytest.raises(ValueError) as exc:
        induced_ore_coaction(com, OreData(sig, delta), 2)
    assert "comodule map" in str(exc.value)


def test_induced_coaction_rejects_non_endomorphism():
    h = builtin_hopf("kZ2")
    com = self_coaction(h)
    swap = LinMap((h.space(),), (h.space(),),
                  [[RAT.zero(), ONE], [ONE, RAT.zero()]], RAT)
    with pytest.raises(ValueError):
        induced_ore_coaction(com, OreData(swap), 2)


def test_truncated_galois_group_like():
    h = builtin_hopf("kZ2")
    rep = truncated_galois_check(self_coaction(h),
                                 identity_map(RAT, (h.space(),)), 3)
    assert rep.ok, rep.failures()
    names = [c.name for c in rep.checks]
    assert "preimage_identity" in names and "injective" in names


def test_truncated_galois_sweedler():
    h = sweedler()
    for d in (2, 3):
        rep = truncated_galois_check(self_coaction(h),
                                     identity_map(RAT, (h.space(),)), d)
        assert rep.ok, (d, rep.failures())


def test_truncated_galois_rejects_zero_sigma():
    h = builtin_hopf("kZ2")
    with pytest.raises(ValueError):
        truncated_galois_check(self_coaction(h),
                               zero_map(RAT, (h.space(),), (h.space(),)), 2)


def test_truncated_galois_needs_galois_coefficients():
    h = builtin_hopf("kZ2")
    com = trivial_coaction(h.alg, h)
    with pytest.raises(ValueError):
        truncated_galois_check(com, identity_map(RAT, (h.space(),)), 2)
