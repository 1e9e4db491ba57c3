import itertools

import pytest

from config import SENTINELS
from src.controllers.onedim_controller import OneDimController
from src.managers.level_manager import LevelManager
from src.models.command import GenSpec
from src.models.errors import IterationCapError, PreconditionError
from src.models.explorer import Bounds, INT, NAT, TargetPredicate
from src.models.machine import Configuration
from src.models.summary import BOTTOM, Coset, LayerGraph, OMEGA, SummaryValue
from src.services.explorer_service import ExplorerService
from src.services.generator_service import GeneratorService
from src.services.normalization_service import NormalizationService
from src.validators.machine_validators import MachineValidator
from tests.fabrica import maquina


@pytest.fixture
def controller():
    return OneDimController(level_manager=LevelManager())


def _familia(seed):
    return GeneratorService.gen_random(GenSpec(seed=seed, states=3, symbols=2, transitions=5, max_effect=2))


# ==================== COSETS ====================

@pytest.mark.parametrize("c1, c2, esperado", [
    (Coset.single(2), Coset.single(5), Coset(2, 3)),
    (Coset.nothing(), Coset(1, 4), Coset(1, 4)),
    (Coset(0, 4), Coset(2, 4), Coset(0, 2)),
    (Coset.single(3), Coset.single(3), Coset.single(3)),
])
def test_coset_join(c1, c2, esperado):
    assert OneDimController.coset_join(c1, c2) == esperado
    assert OneDimController.coset_join(c2, c1) == esperado


def test_coset_normalization_and_membership():
    c = Coset(7, 3)
    assert (c.offset, c.modulus) == (1, 3)
    assert OneDimController.coset_contains(c, -2)
    assert not OneDimController.coset_contains(c, 0)
    assert OneDimController.coset_add(Coset.single(2), Coset(1, 4)) == Coset(3, 4)
    assert OneDimController.coset_add(Coset.nothing(), Coset.single(0)).empty
    assert str(Coset.nothing()) == "EMPTY"


def test_empty_coset_text_comes_from_sentinels(monkeypatch):
    monkeypatch.setitem(SENTINELS, "empty_coset", "VAZIO")
    assert str(Coset.nothing()) == "VAZIO"
    assert LayerGraph.bottom("p")[-1] == SENTINELS["bottom"]


# ==================== GRAFOS EM CAMADAS ====================

def test_layer_graph_without_stack_transitions(controller, descida):
    g0 = OneDimController.build_layer_graph(descida)
    assert {n[2] for n in g0.graph.nodes} == {"⊥"}
    tabela = controller.saturate_summaries(descida)
    g1 = OneDimController.build_layer_graph(descida, tabela)
    for (s, t, _) in g1.graph.edges:
        assert s[-1] == t[-1]


def test_layer_graph_of_m1(controller, m1):
    niveis = controller._historico(m1)
    g1 = OneDimController.build_layer_graph(m1, niveis[0])
    q_s, gadget = LayerGraph.layer_node("q", "s"), LayerGraph.gamma_node("q", "q", "s")
    assert g1.weight_between(q_s, gadget) == [0]
    assert g1.weight_between(gadget, q_s) == [0]
    assert sorted(g1.weight_between(LayerGraph.bottom("q"), LayerGraph.bottom("q"))) == [-1, 1]
    assert g1.weight_between(LayerGraph.bottom("p"), q_s) == [0]
    assert g1.weight_between(q_s, LayerGraph.bottom("p")) == [0]
    # delta(p) = -inf no nível 0
    assert g1.weight_between(LayerGraph.layer_node("p", "s"), LayerGraph.delta_node("p", "s")) is None
    assert g1.graph.components_strongly_connected()


def test_layer_graph_rejects_mixed_transitions():
    m = maquina([("p", 1, "push a", "q")])
    with pytest.raises(PreconditionError):
        OneDimController.build_layer_graph(m)


# ==================== SATURAÇÃO ====================

def test_saturate_m1(controller, m1):
    tabela = controller.saturate_summaries(m1)
    assert tabela.gamma_of("p", "p") == SummaryValue(0, OMEGA)
    assert tabela.delta_of("p") == 0
    assert tabela.gamma_of("p", "q") == BOTTOM
    assert tabela.level <= 2
    assert controller.level_manager.is_monotone()


def test_saturate_without_stack_converges_at_level_one(controller, descida):
    tabela = controller.saturate_summaries(descida)
    assert tabela.level == 1
    assert tabela.gamma_of("p", "q") == SummaryValue(-1, -1)
    assert tabela.gamma_of("q", "p") == SummaryValue(0, 1)


def test_saturation_cap_is_explicit(m1):
    controller = OneDimController(max_iterations=0)
    with pytest.raises(IterationCapError) as erro:
        controller.saturate_summaries(m1)
    assert len(erro.value.history) == 1


def test_table_invariants_on_random_family(controller):
    for seed in range(6):
        m = controller._preparar(_familia(seed), "q0")
        for tabela in controller._historico(m):
            for p in m.states:
                assert tabela.gamma_of(p, p).a == 0
                for q in m.states:
                    v = tabela.gamma_of(p, q)
                    assert v.is_bottom == tabela.gamma_of(q, p).is_bottom
                    if not v.is_bottom:
                        assert v.a > tabela.delta_of(p) or (v.a == tabela.delta_of(p) and v.is_omega)
        assert controller.level_manager.is_monotone()


# ==================== DECISÕES ====================

def test_cover_examples(controller, m1, descida):
    assert controller.cover(m1, "p", "p")
    assert not controller.cover(m1, "p", "q")
    assert not controller.cover(descida, "p", "q")
    com_laco = maquina([("p", -1, None, "q"), ("p", 1, None, "p")])
    assert controller.cover(com_laco, "p", "q")
    assert controller.minimal_cover_level(com_laco, "p", "q") == 0
    assert controller.minimal_cover_level(descida, "p", "q") == -1


def test_zreach_examples(controller, salto_dois):
    assert controller.zreach(salto_dois, "p", "p")
    assert controller.zreach_cosets(salto_dois)[("p", "q")] == Coset.single(2)
    assert not controller.zreach(salto_dois, "p", "q")
    com_laco = maquina([("p", 2, None, "q"), ("p", 1, None, "p")])
    assert controller.zreach_cosets(com_laco)[("p", "q")] == Coset(0, 1)
    assert controller.zreach(com_laco, "p", "q")


def test_zreach_through_stack(controller):
    m = maquina([("p", 0, "push a", "r"), ("r", 3, None, "r2"), ("r2", 0, "pop a", "q")])
    assert controller.zreach_cosets(m)[("p", "q")] == Coset.single(3)
    assert not controller.zreach(m, "p", "q")


def test_reach1d_examples(controller, m1):
    assert controller.reach1d(m1, "p", "p")
    assert not controller.reach1d(m1, "p", "q")
    # as duas coberturas valem, mas os pesos de p a q são 2 + 4Z
    m = maquina([("p", 2, None, "q"), ("p", 4, None, "p"), ("q", 4, None, "q")])
    partes = controller.conjuncts(m, "p", "q")
    assert partes == {'cover_forward': True, 'cover_backward': True, 'zreach': False}
    assert not controller.reach1d(m, "p", "q")
    assert ExplorerService.reach(m, "p", "q", Bounds(16, 2, 50_000)).exhausted


def test_reach1d_requires_dimension_one(controller):
    m = maquina([("p", (1, 0), None, "q")], dimension=2)
    with pytest.raises(PreconditionError):
        controller.reach1d(m, "p", "q")


def test_reach1d_requires_bidirected(controller):
    m = maquina([("p", 1, None, "q")], closure=False)
    with pytest.raises(PreconditionError):
        controller.cover(m, "p", "q")


def test_coset_soundness_against_int_explorer(controller):
    for seed in range(3):
        m = _familia(seed)
        cosets = controller.zreach_cosets(m)
        for p, q in itertools.product(m.states, repeat=2):
            for alvo in range(-3, 4):
                veredito = ExplorerService.bounded_reach(
                    m, Configuration(p, (0,)), TargetPredicate(q, counters=(alvo,)), Bounds(4, 3, 5_000, INT)
                )
                if veredito.reached:
                    assert cosets[(p, q)].contains(alvo)


def test_decisions_go_through_the_onedim_normal_form(controller, monkeypatch):
    chamadas = []
    original = NormalizationService.normalize_for_onedim

    def espiar(m):
        chamadas.append(m)
        return original(m)

    monkeypatch.setattr(NormalizationService, "normalize_for_onedim", staticmethod(espiar))
    m = maquina([("p", 1, "push a", "q"), ("q", -1, "pop a", "r")])
    assert controller.reach1d(m, "p", "r")
    assert chamadas[0] == m
    assert not MachineValidator.check_separated(chamadas[-1])


# ==================== CONJUNÇÕES ISOLADAS ====================

LIMITES_CONJUNCOES = Bounds(16, 4, 50_000)


@pytest.mark.parametrize("origem, destino, falha", [
    ("p", "q", "cover_forward"),
    ("q", "p", "cover_backward"),
])
def test_single_cover_failure_matches_explorer(controller, origem, destino, falha):
    # só dá para descer de p com saldo, mas o laço em q acerta o peso em Z
    raso = maquina([("p", -1, None, "q"), ("q", 1, None, "q")])
    partes = controller.conjuncts(raso, origem, destino)
    assert [nome for nome, valor in partes.items() if not valor] == [falha]
    assert not controller.reach1d(raso, origem, destino)
    assert ExplorerService.cover(raso, origem, destino, LIMITES_CONJUNCOES).reached is partes["cover_forward"]
    assert ExplorerService.cover(raso, destino, origem, LIMITES_CONJUNCOES).reached is partes["cover_backward"]
    assert ExplorerService.zreach(raso, origem, destino, LIMITES_CONJUNCOES).reached
    assert ExplorerService.reach(raso, origem, destino, LIMITES_CONJUNCOES.doubled()).exhausted


def test_single_zreach_failure_matches_explorer(controller):
    m = maquina([("p", 2, None, "q"), ("p", 4, None, "p"), ("q", 4, None, "q")])
    partes = controller.conjuncts(m, "p", "q")
    assert partes == {'cover_forward': True, 'cover_backward': True, 'zreach': False}
    assert ExplorerService.cover(m, "p", "q", LIMITES_CONJUNCOES).reached
    assert ExplorerService.cover(m, "q", "p", LIMITES_CONJUNCOES).reached
    assert ExplorerService.zreach(m, "p", "q", LIMITES_CONJUNCOES.doubled()).exhausted
    assert ExplorerService.reach(m, "p", "q", LIMITES_CONJUNCOES.doubled()).exhausted


def _altura_maxima(m, witness):
    movimentos = {mv.label: mv for mv in ExplorerService.moves_of(m)}
    atual = Configuration("p", (0,))
    maior = 0
    for rotulo in witness:
        atual = ExplorerService.apply(movimentos[rotulo], atual, NAT)
        maior = max(maior, atual.height)
    return maior


@pytest.mark.slow
def test_valley_levels_and_stack_height_grow_with_bits(controller):
    niveis, alturas = [], []
    for bits in (1, 2, 3):
        m = GeneratorService.gen_valley(bits)
        assert controller.reach1d(m, "p", "q")
        niveis.append(controller.minimal_cover_level(m, "p", "q"))
        limites = Bounds(2 ** bits + 2, 2 ** bits + 2 * bits + 2, 2_000_000)
        veredito = ExplorerService.reach(m, "p", "q", limites)
        assert veredito.reached
        alturas.append(_altura_maxima(m, veredito.witness))
        assert alturas[-1] >= 2 ** bits
    assert niveis[0] < niveis[1] < niveis[2]
    assert alturas[0] < alturas[1] < alturas[2]
