import numpy as np
import pytest

from fdalg import presets
from fdalg.algebra import (
    Quiver,
    QuiverPresentation,
    StructureAlgebra,
    algebra_isomorphic,
    build_path_algebra_quotient,
    is_split_basic,
    opposite_algebra,
    primitive_idempotents,
    radical_basis,
    tensor_algebra,
    tensor_swap_matches,
)
from fdalg.errors import ContractViolation, GuardError, NonAdmissibleError
from fdalg.exactla import DTYPE


def semisimple_two_copies(p=101):
    """F_p x F_p on the idempotent basis."""
    sc = np.zeros((2, 2, 2), dtype=DTYPE)
    sc[0, 0, 0] = 1
    sc[1, 1, 1] = 1
    return StructureAlgebra(sc, [1, 1], p=p)


def f4_over_f2():
    """F_4 as a 2-dimensional F_2-algebra with basis {1, w}, w^2 = w + 1."""
    sc = np.zeros((2, 2, 2), dtype=DTYPE)
    sc[0, 0, 0] = 1
    sc[0, 1, 1] = 1
    sc[1, 0, 1] = 1
    sc[1, 1, 0] = 1
    sc[1, 1, 1] = 1
    return StructureAlgebra(sc, [1, 0], p=2)


# -- path algebra quotients ------------------------------------------------


def test_nak2_presentation():
    alg = presets.nak2()
    assert alg.dim == 2
    assert alg.labels == ("e1", "a")
    a = alg.basis_vector(1)
    assert not alg.mul(a, a).any()  # a^2 = 0


def test_a2_presentation():
    alg = presets.a2()
    assert alg.dim == 3
    assert set(alg.labels) == {"e1", "e2", "a1"}


def test_aus2_presentation_hand_enumeration():
    alg = presets.aus2()
    assert alg.dim == 5
    # surviving paths: two trivial, two arrows, and the 2 -> 1 -> 2 loop
    assert alg.labels == ("e1", "e2", "u", "v", "v*u")
    u = alg.basis_vector(2)
    v = alg.basis_vector(3)
    assert not alg.mul(u, v).any()  # the 1 -> 2 -> 1 path is dead
    assert alg.mul(v, u).any()  # the 2 -> 1 -> 2 path survives


def test_non_admissible_quotient_rejected():
    loop = Quiver(1, ((0, 0, "a"),))
    pres = QuiverPresentation(loop, (), nilpotency_bound=3)
    with pytest.raises(NonAdmissibleError):
        build_path_algebra_quotient(pres)


def test_invalid_relation_rejected():
    quiver = Quiver(2, ((0, 1, "a"),))
    with pytest.raises(ContractViolation):
        build_path_algebra_quotient(
            QuiverPresentation(quiver, (((1, (0, 0)),),), nilpotency_bound=2)
        )


# -- radical ----------------------------------------------------------------


def test_radical_nak2():
    alg = presets.nak2()
    ideal = radical_basis(alg)
    assert ideal.basis.cols == 1
    assert ideal.verify()


def test_radical_semisimple_is_zero():
    assert radical_basis(semisimple_two_copies()).basis.cols == 0


def test_radical_aus2_hand_enumeration():
    alg = presets.aus2()
    assert radical_basis(alg).basis.cols == 3


def test_radical_guard_small_prime():
    alg = presets.aus2(p=5)  # dim 5, p = 5
    with pytest.raises(GuardError):
        radical_basis(alg)


def test_radical_of_semisimple_quotient_is_zero():
    alg = presets.aus2()
    s_alg, _, _ = alg.semisimple_quotient
    assert radical_basis(s_alg).basis.cols == 0


# -- idempotents ------------------------------------------------------------


def check_idempotent_set(alg, idems):
    total = np.zeros(alg.dim, dtype=DTYPE)
    for e in idems:
        assert (alg.mul(e, e) == e).all()
        total = (total + e) % alg.p
    assert (total == alg.unit).all()
    for i, e in enumerate(idems):
        for j, f in enumerate(idems):
            if i != j:
                assert not alg.mul(e, f).any()


def test_idempotents_nak2_local():
    alg = presets.nak2()
    idems = primitive_idempotents(alg)
    assert len(idems) == 1
    check_idempotent_set(alg, idems)


def test_idempotents_a2():
    alg = presets.a2()
    idems = primitive_idempotents(alg)
    assert len(idems) == 2
    check_idempotent_set(alg, idems)


def test_idempotents_matrix_algebra():
    alg = presets.matrix_algebra(2)
    idems = primitive_idempotents(alg)
    assert len(idems) == 2
    check_idempotent_set(alg, idems)


def test_idempotent_count_matches_center_of_quotient():
    # independent oracle: for basic algebras the number of primitive
    # idempotents equals the dimension of the semisimple quotient
    for alg in (presets.nak2(), presets.a2(), presets.aus2(), presets.a3()):
        s_alg, _, _ = alg.semisimple_quotient
        assert len(primitive_idempotents(alg)) == s_alg.dim


# -- split/basic flags -------------------------------------------------------


def test_split_basic_flags():
    assert is_split_basic(presets.nak2()) == (True, True)
    assert is_split_basic(presets.matrix_algebra(2)) == (True, False)


def test_f4_over_f2_guard_fires():
    with pytest.raises(GuardError):
        is_split_basic(f4_over_f2())


# -- opposite and tensor ------------------------------------------------------


def test_opposite_commutative_identical():
    alg = presets.nak2()
    op = opposite_algebra(alg)
    assert (op.sc == alg.sc).all()


def test_opposite_reverses_products():
    alg = presets.a2()
    op = opposite_algebra(alg)
    x, y = alg.basis_vector(0), alg.basis_vector(2)
    assert (op.mul(x, y) == alg.mul(y, x)).all()


def test_opposite_involution_bit_exact():
    alg = presets.aus2()
    assert opposite_algebra(opposite_algebra(alg)) is alg


def test_tensor_with_ground_field():
    alg = presets.a2()
    one = StructureAlgebra(np.ones((1, 1, 1), dtype=DTYPE), [1])
    t = tensor_algebra(alg, one)
    assert t.dim == alg.dim
    assert (t.sc == alg.sc).all()


def test_tensor_dimension_and_associativity():
    t = tensor_algebra(presets.a2(), presets.nak2())
    assert t.dim == 6
    StructureAlgebra(t.sc, t.unit, p=t.p)  # re-validates on all triples
    t2 = tensor_algebra(presets.kronecker(), presets.nak2())
    assert t2.dim == 8
    StructureAlgebra(t2.sc, t2.unit, p=t2.p)


def test_tensor_swap_isomorphism():
    assert tensor_swap_matches(presets.a2(), presets.nak2())
    assert tensor_swap_matches(presets.kronecker(), presets.nak2())


# -- algebra isomorphism search ----------------------------------------------


def test_algebra_isomorphic_reflexive():
    assert algebra_isomorphic(presets.aus2(), presets.aus2()) is not None


def test_algebra_isomorphic_rebuilt_copy():
    a = presets.aus2()
    b = presets.aus2()
    phi = algebra_isomorphic(a, b)
    assert phi is not None
    # certificate re-check: phi is multiplicative
    lhs = np.einsum("ijk,lk->ijl", a.sc, phi.arr) % a.p
    rhs = np.einsum("ki,lj,kln->ijn", phi.arr, phi.arr, b.sc) % a.p
    assert (lhs == rhs).all()


def test_algebra_isomorphic_distinguishes():
    assert algebra_isomorphic(presets.nak2(), semisimple_two_copies()) is None
    assert algebra_isomorphic(presets.a2(), presets.nak2()) is None


def test_unit_law_validated():
    sc = np.zeros((2, 2, 2), dtype=DTYPE)
    with pytest.raises(ContractViolation):
        StructureAlgebra(sc, [1, 0])


def test_associativity_error_names_triple():
    # basis {1, x, y} with x*y = 1, y*x = 0: (x*y)*x = x but x*(y*x) = 0
    sc = np.zeros((3, 3, 3), dtype=DTYPE)
    sc[0, 0, 0] = 1
    sc[0, 1, 1] = sc[1, 0, 1] = 1
    sc[0, 2, 2] = sc[2, 0, 2] = 1
    sc[1, 2, 0] = 1
    with pytest.raises(ContractViolation, match="triple"):
        StructureAlgebra(sc, [1, 0, 0])


def test_opposite_of_a2_is_reversed_quiver_algebra():
    reversed_quiver = Quiver(2, ((1, 0, "a1"),))
    reversed_alg = build_path_algebra_quotient(
        QuiverPresentation(reversed_quiver, (), nilpotency_bound=2))
    assert algebra_isomorphic(opposite_algebra(presets.a2()),
                              reversed_alg) is not None
