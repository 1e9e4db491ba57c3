import itertools

import pytest
import sympy

from src.models.binomial import Binomial, MonomialOrder
from src.models.errors import NonBinomialError, PreconditionError
from src.services.groebner_service import GroebnerService

GRLEX2 = MonomialOrder.grlex(2)
CRUZADO = [((2, 0), (0, 1)), ((0, 2), (1, 0))]


def test_orientation_and_zero_binomial():
    assert Binomial.oriented((0, 1), (1, 0), MonomialOrder.lex(2)) == Binomial((1, 0), (0, 1))
    assert Binomial.oriented((0, 2), (1, 0), GRLEX2) == Binomial((0, 2), (1, 0))
    assert Binomial.oriented((1, 1), (1, 1), GRLEX2) is None
    with pytest.raises(ValueError):
        MonomialOrder.block(2, ())


def test_single_binomial_is_reduced_basis():
    base = GroebnerService.buchberger([((1, 0), (0, 1))], MonomialOrder.lex(2))
    assert base == (Binomial((1, 0), (0, 1)),)
    assert GroebnerService.is_groebner(base, MonomialOrder.lex(2))


def test_normal_form_examples():
    ordem = MonomialOrder.grlex(1)
    base = GroebnerService.buchberger([((2,), (0,))], ordem)
    assert GroebnerService.normal_form((5,), base, ordem) == (1,)
    assert GroebnerService.normal_form((4,), base, ordem) == (0,)
    lex = MonomialOrder.lex(2)
    assert GroebnerService.normal_form((2, 0), [Binomial((1, 0), (0, 1))], lex) == (0, 2)
    assert GroebnerService.normal_form(Binomial((2, 0), (1, 1)), [Binomial((1, 0), (0, 1))], lex) is None


def test_is_groebner_detects_missing_s_binomial():
    lex = MonomialOrder.lex(3)
    incompleta = [Binomial((1, 0, 0), (0, 1, 0)), Binomial((1, 0, 0), (0, 0, 1))]
    assert not GroebnerService.is_groebner(incompleta, lex)
    assert GroebnerService.is_groebner(GroebnerService.buchberger(incompleta, lex), lex)


def test_congruence_member_examples():
    R = [((1,), (2,))]
    assert GroebnerService.congruence_member(R, (3,), (5,))
    assert not GroebnerService.congruence_member(R, (0,), (1,))
    assert GroebnerService.congruence_member(R, (0,), (0,))
    with pytest.raises(PreconditionError):
        GroebnerService.congruence_member(R, (0,), (0, 1))


def test_membership_agrees_with_sympy():
    x, y = sympy.symbols("x y")
    G = sympy.groebner([x ** 2 - y, y ** 2 - x], x, y, order="grlex")
    monomios = [m for m in itertools.product(range(5), repeat=2) if sum(m) <= 4]
    for s, t in itertools.combinations(monomios, 2):
        esperado = G.contains(x ** s[0] * y ** s[1] - x ** t[0] * y ** t[1])
        assert GroebnerService.congruence_member(CRUZADO, s, t) == esperado, (s, t)


def test_membership_contains_rewrite_closure():
    base = GroebnerService.congruence_basis(CRUZADO, 2)
    assert GroebnerService.is_groebner(base, GRLEX2)
    for s in [(1, 0), (2, 1), (0, 3)]:
        for t in GroebnerService.rewrite_closure(CRUZADO, s, 8):
            assert GroebnerService.congruence_member(CRUZADO, s, t)


def test_eliminate_keeps_only_remaining_variables():
    gens = [((1, 0, 0), (0, 1, 0)), ((0, 1, 0), (0, 0, 1))]
    assert GroebnerService.eliminate(gens, (0, 2), 3) == (Binomial((1, 0, 0), (0, 0, 1)),)
    assert GroebnerService.eliminate(gens, (), 3) == ()


@pytest.mark.parametrize("gens, b, esperado", [
    ([((2, 1), (2, 0))], (2, 0), (Binomial((0, 1), (0, 0)),)),
    ([((1, 0), (0, 1))], (1, 0), (Binomial((1, 0), (0, 1)),)),
    ([((1, 0), (0, 1))], (0, 0), (Binomial((1, 0), (0, 1)),)),
])
def test_quotient_by_monomial(gens, b, esperado):
    assert GroebnerService.quotient_by_monomial(gens, b, 2) == esperado


def test_misoriented_binomial_is_reported():
    with pytest.raises(NonBinomialError):
        GroebnerService._conferir(Binomial((0, 1), (1, 0)), MonomialOrder.lex(2))


def test_generators_must_match_variable_count():
    with pytest.raises(PreconditionError):
        GroebnerService.buchberger([((1,), (0,))], GRLEX2)
