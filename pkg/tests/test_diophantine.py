import itertools

import pytest
from hypothesis import given
import hypothesis.strategies as st

from src.models.errors import PreconditionError
from src.models.linear import minimal_antichain, vec_leq
from src.services.diophantine_service import DiophantineService


@pytest.mark.parametrize("A, esperado", [
    ([[1, -1]], ((1, 1),)),
    ([[2, -3]], ((3, 2),)),
    ([[1, 1, -1]], ((0, 1, 1), (1, 0, 1))),
    ([[0, 0]], ((0, 1), (1, 0))),
])
def test_hilbert_examples(A, esperado):
    assert DiophantineService.hilbert_homogeneous(A).minimals == esperado


def test_hilbert_without_solutions():
    assert not DiophantineService.hilbert_homogeneous([[1, 2]]).feasible


@pytest.mark.parametrize("A, b, esperado", [
    ([[1]], (3,), ((3,),)),
    ([[2]], (3,), ()),
    ([[1, 1]], (2,), ((0, 2), (1, 1), (2, 0))),
])
def test_inhomogeneous_examples(A, b, esperado):
    assert DiophantineService.minimal_inhomogeneous(A, b).minimals == esperado


def test_inhomogeneous_carries_homogeneous_part():
    base = DiophantineService.minimal_inhomogeneous([[1, -1]], (1,))
    assert base.minimals == ((1, 0),)
    assert base.homogeneous == ((1, 1),)


def test_inhomogeneous_without_equations():
    base = DiophantineService.minimal_inhomogeneous([], (), cols=2)
    assert base.minimals == ((0, 0),)
    assert base.homogeneous == ((0, 1), (1, 0))


def test_minimal_at_least():
    assert DiophantineService.minimal_at_least([[2]], (3,)) == ((2,),)
    assert DiophantineService.minimal_at_least([[1, 2]], (2,)) == ((0, 1), (2, 0))


def test_ragged_matrix_is_rejected():
    with pytest.raises(PreconditionError):
        DiophantineService.hilbert_homogeneous([[1, 2], [1]])
    with pytest.raises(PreconditionError):
        DiophantineService.minimal_inhomogeneous([[1, 2]], (1, 2))


def test_pottier_bound():
    assert DiophantineService.pottier_bound(((1, -2), (0, 3))) == 16
    assert DiophantineService.pottier_bound(()) == 1


linha = st.lists(st.integers(min_value=-2, max_value=2), min_size=3, max_size=3)


@given(st.lists(linha, min_size=1, max_size=2))
def test_hilbert_is_sound_minimal_and_complete_in_box(A):
    base = DiophantineService.hilbert_homogeneous(A).minimals
    for z in base:
        assert any(z)
        assert DiophantineService.solves(A, z)
    for z1, z2 in itertools.permutations(base, 2):
        assert not vec_leq(z1, z2)
    caixa = [
        z for z in itertools.product(range(4), repeat=3)
        if any(z) and DiophantineService.solves(A, z)
    ]
    for z in minimal_antichain(caixa):
        assert z in base


@given(linha, st.integers(min_value=-3, max_value=3))
def test_inhomogeneous_matches_enumeration(a, b):
    base = DiophantineService.minimal_inhomogeneous([a], (b,))
    for z in base.minimals:
        assert DiophantineService.solves([a], z, (b,))
    caixa = [z for z in itertools.product(range(5), repeat=3) if DiophantineService.solves([a], z, (b,))]
    for z in minimal_antichain(caixa):
        assert z in base.minimals
