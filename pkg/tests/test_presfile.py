import pytest

from hopfgalois import presfile as pf
from hopfgalois.catalog import (catalog, lie_heisenberg, sridharan,
                                sridharan_table1)
from hopfgalois.galois import galois_check, strongly_graded_check
from hopfgalois.genhopf import check_hopf_on_generators
from hopfgalois.hgs import GenHGS, HGSData, check_hgs
from hopfgalois.hopf import builtin_hopf, hopf_check, standard_builtins
from hopfgalois.scalars import Rationals
from hopfgalois.coeffring import DerivSpec, EndoSpec, ring_make
from hopfgalois.skewpbw import Presentation
from hopfgalois.torsor import check_torsor, hopf_to_torsor, \
    no_character_torsor

RAT = Rationals()

ZERO_ARG_ENTRIES = [
    "weyl", "shift", "mixed", "discrete_linear", "quantum_plane",
    "quantum_affine", "additive_weyl", "multiplicative_weyl",
    "q_heisenberg", "hayashi", "dispin", "u_sl2", "uq_sl2", "uq_so3",
    "diffusion", "threedim",
]


@pytest.mark.parametrize("name", ZERO_ARG_ENTRIES)
def test_presentation_round_trip(name):
    pres = catalog(name)
    back = pf.parse_text(pf.dumps(pf.presentation_doc(pres)))
    assert back.kind == "presentation"
    assert pf.presentation_equal(pres, back.pres)


def test_parametrized_presentation_round_trips():
    for pres in (catalog("weyl", 2), sridharan(lie_heisenberg()),
                 sridharan_table1(7), sridharan_table1(10, alpha=3)):
        back = pf.parse_text(pf.dumps(pf.presentation_doc(pres)))
        assert pf.presentation_equal(pres, back.pres)


@pytest.mark.parametrize("name,h", standard_builtins(9))
def test_hopf_round_trip(name, h):
    back = pf.parse_text(pf.dumps(pf.hopf_doc(h)))
    assert back.kind == "algebra"
    assert pf.hopf_equal(h, back.hopf)
    assert hopf_check(back.hopf).ok


def test_torsor_round_trip():
    t = hopf_to_torsor(builtin_hopf("sweedler"))
    back = pf.parse_text(pf.dumps(pf.torsor_doc(t)))
    assert back.torsor.mu.rows == t.mu.rows
    assert check_torsor(back.torsor).ok

    nc = no_character_torsor(2, 1, 1, -1)
    back = pf.parse_text(pf.dumps(pf.torsor_doc(nc)))
    assert back.torsor.mu.rows == nc.mu.rows


def test_torsor_generator_images_form():
    # mu(g) = g @ g @ g extended to the group basis agrees with the
    # coproduct-antipode torsor of kZ2
    doc = pf.algebra_doc(builtin_hopf("kZ2").alg)
    text = pf.dumps(doc) + """
[torsor.images]
e = "e@e@e"
g = "g@g@g"
"""
    back = pf.parse_text(text)
    expected = hopf_to_torsor(builtin_hopf("kZ2"))
    assert back.torsor.mu.rows == expected.mu.rows


def test_torsor_section_needs_exactly_one_form():
    doc = pf.dumps(pf.algebra_doc(builtin_hopf("kZ2").alg))
    with pytest.raises(pf.PresFileError):
        pf.parse_text(doc + "\n[torsor]\n")
    t = hopf_to_torsor(builtin_hopf("kZ2"))
    both = pf.torsor_doc(t)
    both["torsor"]["images"] = {"e": "e@e@e", "g": "g@g@g"}
    with pytest.raises(pf.PresFileError):
        pf.parse_text(pf.dumps(both))


def test_torsor_images_must_cover_basis():
    doc = pf.dumps(pf.algebra_doc(builtin_hopf("kZ2").alg))
    with pytest.raises(pf.PresFileError, match="missing basis element"):
        pf.parse_text(doc + '\n[torsor.images]\ne = "e@e@e"\n')


GENHOPF_TEXT = """
[field]
kind = "rational_functions"
var = "q"

[coefficients]
gens = ["k"]
laurent = ["k"]

[variables]
names = ["e", "f"]

[sigma.e]
k = "q^2*k"

[sigma.f]
k = "q^-2*k"

[relation."f*e"]
const = "(k^-1 - k)/(q - q^-1)"

[hopf]
[hopf.delta]
k = "k@k"
e = "1@e + e@k"
f = "k^-1@f + f@1"
[hopf.epsilon]
k = "1"
e = "0"
f = "0"
[hopf.antipode]
k = "k^-1"
e = "-e*k^-1"
f = "-k*f"
"""


def test_generator_level_hopf_section():
    back = pf.parse_text(GENHOPF_TEXT)
    assert back.genhopf is not None
    assert check_hopf_on_generators(back.genhopf, degree=2).ok


def test_hopf_section_must_cover_all_generators():
    text = GENHOPF_TEXT.replace('k = "k@k"\n', "")
    with pytest.raises(pf.PresFileError, match="hopf"):
        pf.parse_text(text)


def test_coaction_self_form():
    h = builtin_hopf("kZ3")
    text = pf.dumps(pf.hopf_doc(h)) + "\n[coaction]\n"
    back = pf.parse_text(text)
    assert back.comodule is not None
    assert back.comodule.rho.rows == h.delta.rows
    assert galois_check(back.comodule).bijective


def test_coaction_named_hopf_with_matrix():
    h = builtin_hopf("kZ2")
    doc = pf.algebra_doc(h.alg)
    doc["coaction"] = {"hopf": "kZ2",
                       "matrix": pf._show_matrix(h.field, h.delta.rows)}
    back = pf.parse_text(pf.dumps(doc))
    assert back.hopf is None
    assert galois_check(back.comodule).bijective


def test_coaction_grading_form():
    h = builtin_hopf("kZ3")
    text = pf.dumps(pf.algebra_doc(h.alg)) + """
[coaction]
group = "Z3"
degrees = ["e", "g", "g2"]
"""
    back = pf.parse_text(text)
    assert back.grading == ("Z3", ["e", "g", "g2"])
    from hopfgalois.hopf import cyclic_group
    assert strongly_graded_check(back.alg, cyclic_group(3),
                                 ["e", "g", "g2"]).ok


def test_coaction_grading_violation_is_structural():
    # g*g lands in the g2 slot, which this labeling puts in degree g
    # instead of g*g
    text = pf.dumps(pf.algebra_doc(builtin_hopf("kZ3").alg)) + """
[coaction]
group = "Z3"
degrees = ["e", "g", "g"]
"""
    with pytest.raises(pf.StructureError, match="grading violated"):
        pf.parse_text(text)


def test_coaction_errors():
    base = pf.dumps(pf.algebra_doc(builtin_hopf("kZ2").alg))
    with pytest.raises(pf.PresFileError, match="needs a hopf key"):
        pf.parse_text(base + "\n[coaction]\nmatrix = []\n")
    with pytest.raises(pf.PresFileError, match="not a group element"):
        pf.parse_text(base + '\n[coaction]\ngroup = "Z2"\n'
                      'degrees = ["e", "h"]\n')
    with pytest.raises(pf.PresFileError, match="unknown group"):
        pf.parse_text(base + '\n[coaction]\ngroup = "Q8"\ndegrees = []\n')
    with pytest.raises(pf.PresFileError, match="unknown builtin"):
        pf.parse_text(base + '\n[coaction]\nhopf = "nosuch"\n')


DIAGONAL_HGS = """
[field]
kind = "rationals"

[hgs]
a = "sweedler"
b = "sweedler"
z = "sweedler"
t = "sweedler"
alpha = "delta"
beta = "delta"
gamma = "delta"
delta = "delta"
smap = "antipode"
"""


def test_hgs_named_form():
    back = pf.parse_text(DIAGONAL_HGS)
    assert back.kind == "hgs"
    assert isinstance(back.hgs, HGSData)
    assert check_hgs(back.hgs).ok


def test_hgs_named_form_matrix_map():
    h = builtin_hopf("sweedler")
    doc = pf._toml.loads(DIAGONAL_HGS.replace('smap = "antipode"', ""))
    doc["hgs"]["smap"] = pf._show_matrix(h.field, h.antipode.rows)
    back = pf.parse_text(pf.dumps(doc))
    assert check_hgs(back.hgs).ok


def test_hgs_sridharan_form():
    text = """
[field]
kind = "rationals"

[hgs]
kind = "sridharan"
generators = ["x1", "x2"]

[hgs.cocycle]
"x1*x2" = "1"
"""
    back = pf.parse_text(text)
    assert isinstance(back.hgs, GenHGS)
    assert check_hgs(back.hgs, degree=3).ok


def test_hgs_sridharan_bracket_keys():
    text = """
[field]
kind = "rationals"

[hgs]
kind = "sridharan"
generators = ["x", "y", "z"]

[hgs.bracket]
"x*y" = ["0", "0", "1"]

[hgs.cocycle]
"x*z" = "1"
"""
    back = pf.parse_text(text)
    assert check_hgs(back.hgs, degree=3).ok


def test_hgs_errors():
    with pytest.raises(pf.PresFileError, match="unknown builtin"):
        pf.parse_text(DIAGONAL_HGS.replace('a = "sweedler"',
                                           'a = "nosuch"'))
    with pytest.raises(pf.PresFileError, match="delta.*antipode.*matrix"):
        pf.parse_text(DIAGONAL_HGS.replace('smap = "antipode"',
                                           'smap = "counit"'))
    with pytest.raises(pf.PresFileError, match="different field"):
        pf.parse_text(DIAGONAL_HGS.replace('z = "sweedler"',
                                           'z = "taft9"'))
    bad = """
[field]
kind = "rationals"

[hgs]
kind = "sridharan"
generators = ["x", "y"]

[hgs.bracket]
"y*x" = ["0", "0"]
"""
    with pytest.raises(pf.PresFileError, match="earlier generator first"):
        pf.parse_text(bad)


def test_file_shape_errors():
    with pytest.raises(pf.PresFileError, match="missing the 'kind'"):
        pf.parse_text("[field]\norder = 3\n")
    with pytest.raises(pf.PresFileError, match="unknown key"):
        pf.parse_text('[field]\nkind = "rationals"\nextra = 1\n')
    with pytest.raises(pf.PresFileError, match="no subject"):
        pf.parse_text('[field]\nkind = "rationals"\n')
    with pytest.raises(pf.PresFileError, match="not both"):
        pf.parse_text('[field]\nkind = "rationals"\n'
                      '[variables]\nnames = ["x"]\n'
                      '[algebra]\nbasis = ["1"]\nunit = ["1"]\n'
                      'mult = [["1"]]\n')
    with pytest.raises(pf.PresFileError, match="TOML parse error"):
        pf.parse_text("[field\n")
    with pytest.raises(pf.PresFileError, match="algebra.*file"):
        pf.parse_text('[field]\nkind = "rationals"\n'
                      '[variables]\nnames = ["x"]\n'
                      '[torsor]\nmu = []\n')


def test_relation_key_errors():
    base = ('[field]\nkind = "rationals"\n'
            '[variables]\nnames = ["x", "y"]\n')
    with pytest.raises(pf.PresFileError, match="later variable first"):
        pf.parse_text(base + '[relation."x*y"]\nconst = "1"\n')
    with pytest.raises(pf.PresFileError, match="declared variables"):
        pf.parse_text(base + '[relation."z*x"]\nconst = "1"\n')
    with pytest.raises(pf.PresFileError, match="unknown variable"):
        pf.parse_text(base + '[relation."y*x"]\nlinear.z = "1"\n')
    with pytest.raises(pf.PresFileError, match="expression"):
        pf.parse_text(base + '[relation."y*x"]\nconst = "))"\n')


def test_algebra_table_errors():
    with pytest.raises(pf.PresFileError, match="row 0 must have"):
        pf.parse_text('[field]\nkind = "rationals"\n[algebra]\n'
                      'basis = ["1"]\nunit = ["1"]\nmult = [["1", "0"]]\n')
    # a table violating the unit law is structural, not syntactic
    text = ('[field]\nkind = "rationals"\n[algebra]\n'
            'basis = ["1", "u"]\nunit = ["1", "0"]\n'
            'mult = [["1", "0", "0", "0"], ["0", "1", "0", "1"]]\n')
    with pytest.raises(pf.StructureError) as err:
        pf.parse_text(text)
    assert not err.value.report.ok


def test_sigma_twist_restriction_on_write():
    ring = ring_make(RAT, ["t"])
    other = EndoSpec(ring, {"t": ring.parse("2*t")})
    pres = Presentation(
        ring, ["x"],
        delta={"x": DerivSpec(ring, {"t": ring.one()}, twist=other)})
    with pytest.raises(ValueError, match="twist"):
        pf.presentation_doc(pres)


def test_structural_equality_is_sharp():
    w1, w2 = catalog("weyl"), catalog("weyl")
    assert pf.presentation_equal(w1, w2)
    assert not pf.presentation_equal(w1, catalog("shift"))

    h1, h2 = builtin_hopf("sweedler"), builtin_hopf("sweedler")
    assert pf.hopf_equal(h1, h2)
    assert not pf.hopf_equal(h1, builtin_hopf("taft4"))


def test_cyclotomic_field_section():
    h = builtin_hopf("taft9")
    doc = pf.hopf_doc(h)
    assert doc["field"]["kind"] == "cyclotomic"
    assert doc["field"]["order"] == 3
    back = pf.parse_text(pf.dumps(doc))
    assert back.field == h.field
