import numpy as np
import pytest

from fdalg import presets
from fdalg.algebra import Quiver, tensor_algebra
from fdalg.errors import HypothesisError
from fdalg.homological import flags
from fdalg.repmod import is_isomorphic, regular_module, rep_context
from fdalg.tensorlab import (
    is_dynkin,
    nakayama_permutation,
    tensor_module,
    translate_orbit,
    verify_injective_cogenerator,
    verify_tensor_duality,
    verify_tensor_dynkin,
    verify_translate_tensor_formula,
)


@pytest.fixture(scope="module")
def nak2():
    return presets.nak2()


def test_is_dynkin_families():
    assert is_dynkin(presets.linear_quiver(2)) == (True, "A2")
    assert is_dynkin(presets.linear_quiver(7)) == (True, "A7")
    assert is_dynkin(presets.d4_quiver()) == (True, "D4")
    assert is_dynkin(presets.kronecker_quiver())[0] is False
    assert is_dynkin(presets.triple_quiver())[0] is False
    # E6: one branch vertex with arms 1, 2, 2
    e6 = Quiver(6, ((0, 1, "a"), (1, 2, "b"), (3, 2, "c"), (4, 3, "d"),
                    (2, 5, "e")))
    assert is_dynkin(e6) == (True, "E6")
    # not a tree: commutative square
    square = Quiver(4, ((0, 1, "a"), (0, 2, "b"), (1, 3, "c"), (2, 3, "d")))
    assert is_dynkin(square)[0] is False


def test_is_dynkin_guards():
    disconnected = Quiver(3, ((0, 1, "a"),))
    with pytest.raises(HypothesisError):
        is_dynkin(disconnected)
    loop = Quiver(1, ((0, 0, "a"),))
    with pytest.raises(HypothesisError):
        is_dynkin(loop)


def test_orbit_of_projective_closes_immediately(nak2):
    gamma = tensor_algebra(presets.a2(), nak2)
    trace = translate_orbit(regular_module(gamma), 5)
    assert trace.outcome == ("closed", 0)


def test_orbits_of_a2_injectives(nak2):
    # over the path algebra itself the injective orbits close within two
    # translates
    a2 = presets.a2()
    ctx = rep_context(a2)
    lengths = []
    for i in range(2):
        trace = translate_orbit(ctx.injective(i), 10)
        assert trace.closed
        lengths.append(trace.outcome[1])
    assert sorted(lengths) == [0, 1]


def test_kronecker_orbit_exceeds():
    kron = presets.kronecker()
    ctx = rep_context(kron)
    trace = translate_orbit(ctx.injective(1), 25)
    assert trace.outcome == ("bound_exceeded", "step bound")
    dims = [s["dim"] for s in trace.to_dict()["steps"]]
    assert dims == sorted(dims)  # unbounded growth


def test_orbit_stability_under_basis_permutation(nak2):
    # conjugating the start module by a permutation yields isomorphic
    # orbit steps
    from fdalg.repmod import Module

    a2 = presets.a2()
    gamma = tensor_algebra(a2, nak2)
    start = tensor_module(gamma, rep_context(a2).injective(0),
                          rep_context(nak2).regular)
    rng = np.random.default_rng(3)
    perm = rng.permutation(start.dim)
    pmat = np.eye(start.dim, dtype=np.int64)[perm]
    acts = np.array([pmat @ act @ pmat.T % gamma.p for act in start.actions])
    shuffled = Module(gamma, acts)
    t1 = translate_orbit(start, 10)
    t2 = translate_orbit(shuffled, 10)
    assert t1.outcome == t2.outcome
    for (m1, _), (m2, _) in zip(t1.steps, t2.steps):
        assert is_isomorphic(m1, m2)


def test_nakayama_permutation_nak2(nak2):
    assert nakayama_permutation(nak2) == (0,)


def test_translate_tensor_formula_a2(nak2):
    a2 = presets.a2()
    gamma = tensor_algebra(a2, nak2)
    ctx = rep_context(a2)
    for i in range(2):
        report = verify_translate_tensor_formula(a2, nak2, ctx.injective(i),
                                                 0, 3, gamma)
        assert report.passed


def test_translate_tensor_formula_orbit_length(nak2):
    # orbit length over the tensor algebra equals the orbit length over
    # the path algebra
    a2 = presets.a2()
    gamma = tensor_algebra(a2, nak2)
    ctx = rep_context(a2)
    reg_nak = rep_context(nak2).regular
    for i in range(2):
        base_trace = translate_orbit(ctx.injective(i), 10)
        tensor_trace = translate_orbit(
            tensor_module(gamma, ctx.injective(i), reg_nak), 10)
        assert base_trace.closed and tensor_trace.closed
        assert base_trace.outcome == tensor_trace.outcome


def test_tensor_dynkin_a2_and_a3(nak2):
    for quiver in (presets.linear_quiver(2), presets.linear_quiver(3)):
        report = verify_tensor_dynkin(quiver, nak2)
        assert report.passed
        assert report.witnesses["dynkin"] is True
        assert report.witnesses["certificates"] == {
            "gen_cogen": True, "orthogonal": True, "translate_closed": True}


def test_tensor_dynkin_kronecker(nak2):
    report = verify_tensor_dynkin(presets.kronecker_quiver(), nak2, bound=25)
    assert report.passed
    assert report.witnesses["dynkin"] is False
    outcomes = [o["outcome"] for o in report.witnesses["orbits"]]
    assert any(o[0] == "bound_exceeded" for o in outcomes)


def test_tensor_dynkin_family_matches_classification(nak2):
    cases = [
        (presets.linear_quiver(2), True),
        (presets.linear_quiver(3), True),
        (presets.d4_quiver(), True),
        (presets.kronecker_quiver(), False),
        (presets.triple_quiver(), False),
    ]
    for quiver, expected in cases:
        report = verify_tensor_dynkin(quiver, nak2, bound=25)
        assert report.passed
        assert report.witnesses["dynkin"] is expected


def test_tensor_dynkin_small_bound_is_inconclusive(nak2):
    report = verify_tensor_dynkin(presets.linear_quiver(3), nak2, bound=1)
    assert report.verdict == "skipped"
    assert "budget" in report.reason


def test_tensor_dynkin_requires_selfinjective():
    with pytest.raises(HypothesisError):
        verify_tensor_dynkin(presets.linear_quiver(2), presets.a2())


def test_tensor_duality_field_case(nak2):
    one = rep_context(nak2).simple(0)
    report = verify_tensor_duality(one, one)
    assert report.passed
    assert report.witnesses["dim"] == 1


def test_tensor_duality_random_pairs(nak2):
    from fdalg.repmod import random_module

    a2 = presets.a2()
    rng = np.random.default_rng(11)
    for _ in range(10):
        m = random_module(a2, rng)
        n = random_module(nak2, rng)
        report = verify_tensor_duality(m, n)
        assert report.passed
        assert report.witnesses["dim"] == m.dim * n.dim


def test_injective_cogenerator(nak2):
    report = verify_injective_cogenerator(presets.a2(), nak2)
    assert report.passed
    assert report.witnesses["candidate_dim"] == 6


def test_tensor_module_validates(nak2):
    a2 = presets.a2()
    gamma = tensor_algebra(a2, nak2)
    mod = tensor_module(gamma, rep_context(a2).injective(0),
                        rep_context(nak2).regular)
    mod.validate()
    assert flags(mod)[1]
