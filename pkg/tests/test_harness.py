import itertools

import pytest

from src.controllers.saturation_controller import SaturationController
from src.models.explorer import Bounds, Verdict
from src.services.generator_service import GeneratorService
from src.services.groebner_service import GroebnerService
from src.services.harness_service import HarnessService


def test_onedim_family_agrees_with_explorer():
    resultado = HarnessService.run_family(range(3), bounds=Bounds(10, 5, 50_000), states=2, transitions=3)
    assert resultado.instances == 3
    assert resultado.checked == 3 * 4 * 3
    assert resultado.ok, resultado.disagreements


def test_pvas_family_agrees_with_explorer():
    resultado = HarnessService.run_pvas_family(range(3), max_value=2, bounds=Bounds(10, 6, 50_000))
    assert resultado.checked == 3 * 9
    assert resultado.ok, resultado.disagreements


def test_targets_come_from_one_exploration_per_source(descida):
    exatos, cobertos = HarnessService._alvos(descida, "q", Bounds(4, 2, 1_000))
    assert exatos == {"q"}
    assert cobertos == {"p", "q"}
    assert HarnessService._alvos(descida, "p", Bounds(4, 2, 1_000)) == ({"p"}, {"p"})
    assert HarnessService._alvos(descida, "p", Bounds(4, 2, 1_000).in_int_mode())[0] == {"p"}


def test_negative_decision_is_checked_with_doubled_bounds():
    pedidos = []

    def explorar(bounds):
        pedidos.append(bounds)
        return Verdict(reached=bounds.counter_max > 4)

    assert HarnessService._confrontar(False, explorar, Bounds(4, 2, 100)) == (True, False)
    assert pedidos[1] == Bounds(4, 2, 100).doubled()
    assert HarnessService._confrontar(True, lambda b: Verdict(reached=False), Bounds()) == (False, False)
    assert HarnessService._confrontar(True, lambda b: Verdict(reached=True), Bounds()) == (True, True)


# ==================== VARREDURAS COMPLETAS ====================

@pytest.mark.slow
def test_onedim_sweep_over_all_small_shapes():
    """Até 3 estados, 5 transições antes do fecho, |Γ| <= 2, efeitos em [-2, 2]"""
    instancias = 0
    formatos = itertools.product((1, 2, 3), (1, 2, 3, 4, 5), (0, 1, 2))
    for estados, transicoes, simbolos in formatos:
        resultado = HarnessService.run_family(
            range(12), bounds=Bounds(32, 10, 200_000),
            states=estados, transitions=transicoes, symbols=simbolos, max_effect=2
        )
        assert resultado.ok, (estados, transicoes, simbolos, resultado.disagreements)
        instancias += resultado.instances
    assert instancias >= 500


@pytest.mark.slow
def test_pvas_sweep():
    """Dimensão 1 e 2, até 3 pares antes do fecho, |Γ| <= 2"""
    instancias = 0
    formatos = [
        (1, 1, 1, 2, range(90)),
        (1, 2, 1, 2, range(90)),
        (1, 3, 1, 2, range(90)),
        (1, 2, 2, 2, range(90)),
        (1, 3, 2, 2, range(90)),
        (2, 1, 1, 1, range(40)),
        (2, 2, 1, 1, range(40)),
    ]
    for dimension, pairs, symbols, max_value, seeds in formatos:
        resultado = HarnessService.run_pvas_family(
            seeds, dimension=dimension, symbols=symbols, pairs=pairs,
            max_value=max_value, bounds=Bounds(12, 8, 200_000)
        )
        assert resultado.ok, (dimension, pairs, symbols, resultado.disagreements)
        instancias += resultado.instances
    assert instancias >= 500


@pytest.mark.slow
def test_chain_pairs_are_new_at_each_level():
    controller = SaturationController()
    for seed in range(30):
        p = GeneratorService.gen_random_pvas(seed, dimension=1, symbols=2, pairs=3, max_effect=2)
        estado = controller.initial_state(p)
        while True:
            proximo = controller.step(estado, p)
            par = proximo.chain[-1].distinguishing_pair
            if par is None:
                break
            assert not GroebnerService.congruence_member(estado.basis.oriented(), *par)
            assert GroebnerService.congruence_member(proximo.basis.oriented(), *par)
            assert len(proximo.basis) >= len(estado.basis)
            estado = proximo
        assert controller.saturate(p).level == estado.level
