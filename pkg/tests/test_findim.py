"""Structure-constant algebras, exact linear maps, convolution."""

import random

import pytest

from hopfgalois.reports import Report
from hopfgalois.scalars import QQ, Rationals
from hopfgalois.findim import (
    Space, LinMap, algebra_make, algebra_validate, tensor_alg, opposite,
    convolution, convolution_inverse, subspace_solve, parse_element,
    identity_map, zero_map, twist_map, word_dim,
    identity_mat, zero_mat, mat_mul, mat_rank, mat_inverse, kernel_basis,
    solve, kron_mat, rref,
)

RAT = Rationals()


def cyclic_group_alg(n, name=None, gen="g", unit_label="e"):
    """Group algebra of Z_n: labels e, g, g2, ..."""
    labels = [unit_label] + [gen if i == 1 else "%s%d" % (gen, i)
                             for i in range(1, n)]
    mult = {}
    for i in range(n):
        for j in range(n):
            mult[(i, j)] = {(i + j) % n: QQ(1)}
    return algebra_make(RAT, labels, mult, {0: QQ(1)}, name=name or "kZ%d" % n)


def grouplike_delta(alg):
    rows = zero_mat(RAT, alg.dim ** 2, alg.dim)
    for j in range(alg.dim):
        rows[j * alg.dim + j][j] = QQ(1)
    sp = alg.space()
    return LinMap((sp,), (sp, sp), rows, RAT)


def grouplike_counit(alg):
    rows = [[QQ(1)] * alg.dim]
    return LinMap((alg.space(),), (), rows, RAT)


def four_dim_field_ext():
    """Q adjoined a fourth root of 2, presented by its Cayley table on
    1, w, w2, w3 with w^4 = 2."""
    mult = {}
    for i in range(4):
        for j in range(4):
            k = i + j
            mult[(i, j)] = {k: QQ(1)} if k < 4 else {k - 4: QQ(2)}
    return algebra_make(RAT, ["one", "w", "w2", "w3"], mult, {0: QQ(1)},
                        name="E")


def sweedler_alg():
    """Four-dimensional algebra on 1, g, x, gx with g2 = 1, x2 = 0,
    xg = -gx."""
    labels = ["u", "g", "x", "gx"]
    one = QQ(1)
    m = {
        (0, 0): {0: one}, (0, 1): {1: one}, (0, 2): {2: one}, (0, 3): {3: one},
        (1, 0): {1: one}, (1, 1): {0: one}, (1, 2): {3: one}, (1, 3): {2: one},
        (2, 0): {2: one}, (2, 1): {3: -one}, (2, 2): {}, (2, 3): {},
        (3, 0): {3: one}, (3, 1): {2: -one}, (3, 2): {}, (3, 3): {},
    }
    return algebra_make(RAT, labels, m, {0: one}, name="H4")


def sweedler_delta(alg):
    """Comultiplication 1->1@1, g->g@g, x->x@1+g@x, gx->gx@g+1@gx."""
    d = alg.dim
    rows = zero_mat(RAT, d * d, d)
    pairs = {0: [(0, 0)], 1: [(1, 1)], 2: [(2, 0), (1, 2)], 3: [(3, 1), (0, 3)]}
    for j, terms in pairs.items():
        for a, b in terms:
            rows[a * d + b][j] = QQ(1)
    sp = alg.space()
    return LinMap((sp,), (sp, sp), rows, RAT)


def sweedler_counit(alg):
    rows = [[QQ(1), QQ(1), QQ(0), QQ(0)]]
    return LinMap((alg.space(),), (), rows, RAT)


def test_cyclic_table_validates():
    alg = cyclic_group_alg(2)
    assert not isinstance(alg, Report)
    assert alg.dim == 2
    g = alg.basis_vec(1)
    assert alg.mult_vec(g, g) == alg.unit_vec()
    assert alg.is_commutative()


def test_associator_witness():
    # e unit; a*a = b, a*b = 0, b*a = a breaks associativity at (a,a,a)
    one = QQ(1)
    mult = {(0, 0): {0: one}, (0, 1): {1: one}, (0, 2): {2: one},
            (1, 0): {1: one}, (2, 0): {2: one},
            (1, 1): {2: one}, (1, 2): {}, (2, 1): {1: one}, (2, 2): {}}
    res = algebra_make(RAT, ["e", "a", "b"], mult, {0: one})
    assert isinstance(res, Report)
    bad = [c for c in res.checks if not c.ok]
    assert bad[0].name == "associativity"
    assert bad[0].witness == "(a,a,a)"


def test_unit_witness():
    one = QQ(1)
    mult = {(0, 0): {0: one}, (0, 1): {1: one}, (1, 0): {}, (1, 1): {0: one}}
    res = algebra_make(RAT, ["e", "a"], mult, {0: one})
    assert isinstance(res, Report)
    names = [c.name for c in res.checks if not c.ok]
    assert "unit" in names


def test_quartic_extension_table():
    alg = four_dim_field_ext()
    assert not isinstance(alg, Report)
    w = alg.basis_vec(1)
    w2 = alg.mult_vec(w, w)
    assert w2 == alg.basis_vec(2)
    w4 = alg.mult_vec(w2, w2)
    assert w4 == {0: QQ(2)}
    assert alg.is_commutative()


def test_opposite_swaps_products():
    alg = sweedler_alg()
    op = opposite(alg)
    x, g = alg.basis_vec(2), alg.basis_vec(1)
    # in A: x*g = -gx; in A^op: x*g = g*x = gx
    assert alg.mult_vec(x, g) == {3: QQ(-1)}
    assert op.mult_vec(x, g) == {3: QQ(1)}
    opop = opposite(op)
    assert all(opop.mult[i][j] == alg.mult[i][j]
               for i in range(4) for j in range(4))
    assert algebra_validate(op).ok


def test_mult_map_matches_mult_vec():
    alg = sweedler_alg()
    m = alg.mult_map()
    for i in range(alg.dim):
        for j in range(alg.dim):
            vec = [QQ(0)] * 16
            vec[i * 4 + j] = QQ(1)
            out = m.apply(vec)
            assert alg.sparse(out) == alg.mult_vec(alg.basis_vec(i),
                                                   alg.basis_vec(j))
    u = alg.unit_map()
    assert alg.sparse(u.apply([QQ(1)])) == alg.unit_vec()


def test_twist_map_swaps_factors():
    v = Space("V", 2)
    w = Space("W", 3)
    t = twist_map(RAT, v, w)
    for a in range(2):
        for b in range(3):
            vec = [QQ(0)] * 6
            vec[a * 3 + b] = QQ(1)
            out = t.apply(vec)
            assert out[b * 2 + a] == QQ(1)
            assert sum(1 for x in out if x != 0) == 1
    back = twist_map(RAT, w, v)
    assert back.compose(t) == identity_map(RAT, (v, w))


def test_kron_flat_indexing():
    a = [[QQ(1), QQ(2)], [QQ(3), QQ(4)]]
    b = [[QQ(0), QQ(1)], [QQ(1), QQ(0)]]
    k = kron_mat(RAT, a, b)
    # entry ((i1,i2),(j1,j2)) = a[i1][j1] b[i2][j2] at flat i1*2+i2
    assert k[0][1] == QQ(1)
    assert k[2 * 1 + 0][2 * 1 + 1] == a[1][1] * b[0][1]
    assert len(k) == 4 and len(k[0]) == 4


def test_rref_and_rank():
    m = [[QQ(2), QQ(4)], [QQ(1), QQ(2)]]
    r, pivots = rref(RAT, m)
    assert pivots == [0]
    assert r[0] == [QQ(1), QQ(2)]
    assert mat_rank(RAT, m) == 1
    assert mat_rank(RAT, identity_mat(RAT, 5)) == 5


def test_kernel_solve_inverse():
    m = [[QQ(1), QQ(2), QQ(3)], [QQ(2), QQ(4), QQ(6)]]
    ker = kernel_basis(RAT, m)
    assert len(ker) == 2
    for v in ker:
        assert v[0] + QQ(2) * v[1] + QQ(3) * v[2] == 0
    assert solve(RAT, m, [QQ(6), QQ(12)]) is not None
    assert solve(RAT, m, [QQ(6), QQ(13)]) is None
    sq = [[QQ(1), QQ(1)], [QQ(0), QQ(1)]]
    inv = mat_inverse(RAT, sq)
    assert mat_mul(RAT, sq, inv) == identity_mat(RAT, 2)
    assert mat_inverse(RAT, [[QQ(1), QQ(1)], [QQ(2), QQ(2)]]) is None


def test_identity_kernel_trivial_zero_kernel_full():
    sp = Space("V", 3)
    idm = identity_map(RAT, (sp,))
    basis, rank = subspace_solve(idm)
    assert basis == [] and rank == 3
    zm = zero_map(RAT, (sp,), (sp,))
    basis, rank = subspace_solve(zm)
    assert len(basis) == 3 and rank == 0


def test_subspace_solve_with_targets():
    # x with Mx in span{(1,0)}: M = diag(1,1): solutions = x-axis
    m = LinMap((Space("V", 2),), (Space("V", 2),), identity_mat(RAT, 2), RAT)
    basis, rank = subspace_solve(m, [[QQ(1), QQ(0)]])
    assert rank == 2
    assert len(basis) == 1
    assert basis[0][1] == QQ(0) and basis[0][0] != QQ(0)


def test_rank_is_basis_independent():
    rng = random.Random(11)

    def rand_mat(r, c):
        return [[QQ(rng.randint(-4, 4)) for _ in range(c)] for _ in range(r)]

    def rand_invertible(n):
        while True:
            p = rand_mat(n, n)
            if mat_inverse(RAT, p) is not None:
                return p

    m = rand_mat(4, 5)
    base = mat_rank(RAT, m)
    for _ in range(3):
        p = rand_invertible(4)
        q = rand_invertible(5)
        assert mat_rank(RAT, mat_mul(RAT, p, mat_mul(RAT, m, q))) == base


def test_compose_checks_words():
    v, w = Space("V", 2), Space("W", 3)
    f = zero_map(RAT, (v,), (w,))
    g = zero_map(RAT, (w,), (v,))
    assert g.compose(f).dom == (v,)
    with pytest.raises(ValueError):
        f.compose(f)


def test_dimension_guard():
    big = Space("B", 70)
    with pytest.raises(ValueError):
        word_dim((big, big))
    with pytest.raises(ValueError):
        identity_map(RAT, (big, big))


def test_tensor_alg_structure():
    a = cyclic_group_alg(2, name="A")
    b = cyclic_group_alg(3, name="B")
    t = tensor_alg(a, b)
    assert t.dim == 6
    assert t.labels[1] == "e@g"
    # (g@g) * (g@g2) = e@e
    u = {1 * 3 + 1: QQ(1)}
    v = {1 * 3 + 2: QQ(1)}
    assert t.mult_vec(u, v) == {0: QQ(1)}
    assert algebra_validate(t).ok


def test_tensor_alg_associative_up_to_flat_indexing():
    a = cyclic_group_alg(2, name="A")
    b = cyclic_group_alg(2, name="B")
    c = cyclic_group_alg(3, name="C")
    left = tensor_alg(tensor_alg(a, b), c)
    right = tensor_alg(a, tensor_alg(b, c))
    assert left.dim == right.dim
    assert left.unit == right.unit
    assert all(left.mult[i][j] == right.mult[i][j]
               for i in range(left.dim) for j in range(left.dim))


def test_convolution_antipode_identity_on_group_algebra():
    alg = cyclic_group_alg(3)
    sp = alg.space()
    delta = grouplike_delta(alg)
    eps = grouplike_counit(alg)
    # S permutes g^i to g^-i
    srows = zero_mat(RAT, 3, 3)
    srows[0][0] = QQ(1)
    srows[2][1] = QQ(1)
    srows[1][2] = QQ(1)
    s = LinMap((sp,), (sp,), srows, RAT)
    idm = identity_map(RAT, (sp,))
    ue = alg.unit_map().compose(eps)
    assert convolution(idm, s, delta, alg.mult_map()) == ue
    assert convolution(s, idm, delta, alg.mult_map()) == ue


def test_convolution_inverse_of_identity_is_antipode():
    alg = cyclic_group_alg(3)
    delta = grouplike_delta(alg)
    eps = grouplike_counit(alg)
    ue = alg.unit_map().compose(eps)
    idm = identity_map(RAT, (alg.space(),))
    s = convolution_inverse(idm, delta, alg.mult_map(), ue)
    assert s is not None
    assert s.rows[2][1] == QQ(1) and s.rows[1][2] == QQ(1)
    assert s.rows[0][0] == QQ(1)
    assert convolution(idm, s, delta, alg.mult_map()) == ue


def test_convolution_inverse_edge_cases():
    alg = cyclic_group_alg(2)
    delta = grouplike_delta(alg)
    eps = grouplike_counit(alg)
    ue = alg.unit_map().compose(eps)
    # unit of the convolution monoid is its own inverse
    g = convolution_inverse(ue, delta, alg.mult_map(), ue)
    assert g == ue
    # the zero map has no convolution inverse
    z = zero_map(RAT, (alg.space(),), (alg.space(),))
    assert convolution_inverse(z, delta, alg.mult_map(), ue) is None


def test_convolution_monoid_on_noncocommutative_coalgebra():
    alg = sweedler_alg()
    assert not isinstance(alg, Report)
    delta = sweedler_delta(alg)
    eps = sweedler_counit(alg)
    ue = alg.unit_map().compose(eps)
    m = alg.mult_map()
    rng = random.Random(23)

    def rand_map():
        rows = [[QQ(rng.randint(-2, 2)) for _ in range(4)] for _ in range(4)]
        return LinMap((alg.space(),), (alg.space(),), rows, RAT)

    for _ in range(5):
        f, g, h = rand_map(), rand_map(), rand_map()
        left = convolution(convolution(f, g, delta, m), h, delta, m)
        right = convolution(f, convolution(g, h, delta, m), delta, m)
        assert left == right
        assert convolution(f, ue, delta, m) == f
        assert convolution(ue, f, delta, m) == f


def test_parse_element_single_algebra():
    alg = cyclic_group_alg(3)
    v = parse_element([alg], "e + 2*g - g2")
    assert v == {0: QQ(1), 1: QQ(2), 2: QQ(-1)}
    assert parse_element([alg], "g * g") == {2: QQ(1)}
    assert parse_element([alg], "g^3") == {0: QQ(1)}
    assert parse_element([alg], "3") == {0: QQ(3)}


def test_parse_element_tensor_words():
    a = cyclic_group_alg(2, name="A")
    h = cyclic_group_alg(3, name="H", gen="k", unit_label="uh")
    v = parse_element([a, h], "e@k")
    assert v == {1: QQ(1)}
    v = parse_element([a, h], "1@k")
    assert v == {1: QQ(1)}
    v = parse_element([a, h], "(e + g)@k2")
    assert v == {2: QQ(1), 5: QQ(1)}
    v = parse_element([a, h], "g@k * g@k")
    assert v == {0 * 3 + 2: QQ(1)}
    v = parse_element([a, h], "2")
    assert v == {0: QQ(2)}


def test_parse_element_same_factor_twice():
    t = cyclic_group_alg(2, name="T")
    v = parse_element([t, t, t], "g@g@g + 1@e@g")
    assert v == {7: QQ(1), 1: QQ(1)}


def test_parse_element_errors():
    a = cyclic_group_alg(2, name="A")
    h = cyclic_group_alg(3, name="H", gen="k", unit_label="uh")
    with pytest.raises(Exception):
        parse_element([a], "nosuch")
    with pytest.raises(Exception):
        parse_element([a, h], "e@k@k")
    with pytest.raises(Exception):
        parse_element([a, h], "e + k2")  # words differ


def test_show_vec():
    alg = cyclic_group_alg(3)
    s = alg.show_vec({0: QQ(1), 1: QQ(-2), 2: QQ(1, 2)})
    assert s == "e - 2*g + 1/2*g2"
    assert alg.show_vec({}) == "0"


def test_left_mult_matrix():
    alg = sweedler_alg()
    g = alg.basis_vec(1)
    lg = alg.left_mult_matrix(g)
    # g * x = gx: column 2 has 1 in row 3
    assert lg[3][2] == QQ(1)
    assert mat_rank(RAT, lg) == 4
