import itertools
import logging
from functools import lru_cache
from typing import Callable, FrozenSet, Iterable, List, Optional, Tuple

from src.controllers.onedim_controller import OneDimController
from src.controllers.saturation_controller import SaturationController
from src.models.command import GenSpec
from src.models.explorer import Bounds, Disagreement, HarnessResult, Verdict
from src.models.machine import Configuration, Machine, PVAS_STATE, Pvas, Vector
from src.services.explorer_service import ExplorerService
from src.services.generator_service import GeneratorService

logger = logging.getLogger(__name__)


class HarnessService:
    """Varreduras de regressão: procedimentos de decisão contra o explorador"""

    @staticmethod
    def _confrontar(decidido: bool, explorar: Callable[[Bounds], Verdict], bounds: Bounds) -> Tuple[Optional[bool], bool]:
        """(resultado do explorador, confirmado?)

        Positivo do explorador é definitivo. Decisão negativa é confrontada
        também com limites dobrados; decisão positiva sem testemunha fica
        apenas não confirmada.
        """
        veredito = explorar(bounds)
        if veredito.reached:
            return True, True
        if not decidido:
            dobrado = explorar(bounds.doubled())
            return dobrado.reached, not dobrado.reached
        return False, False

    @staticmethod
    def onedim_family(seeds: Iterable[int], states: int = 3, transitions: int = 5,
                      symbols: int = 2, max_effect: int = 2) -> List[Tuple[int, Machine]]:
        """Máquinas 1-dimensionais aleatórias, uma por semente"""
        return [
            (seed, GeneratorService.gen_random(GenSpec(
                seed=seed, states=states, symbols=symbols, transitions=transitions, max_effect=max_effect
            )))
            for seed in seeds
        ]

    @staticmethod
    @lru_cache(maxsize=64)
    def _alvos(m: Machine, p: str, bounds: Bounds) -> Tuple[FrozenSet[str], FrozenSet[str]]:
        """Estados q com (q, 0, ε) e com (q, j, ε) alcançáveis a partir de (p, 0, ε)"""
        vistos, _ = ExplorerService.reachable_set(m, Configuration(p, m.zero()), bounds)
        vazias = [c for c in vistos if not c.stack]
        exatos = frozenset(c.state for c in vazias if not any(c.counters))
        cobertos = frozenset(c.state for c in vazias if all(x >= 0 for x in c.counters))
        return exatos, cobertos

    @staticmethod
    def run_family(seeds: Iterable[int], bounds: Bounds = Bounds(32, 10, 200_000),
                   controller: Optional[OneDimController] = None, **familia) -> HarnessResult:
        """Compara reach1d, cover e zreach com o explorador em uma família aleatória 1-dimensional.

        Cada origem é explorada uma vez por limite; todos os destinos saem do mesmo conjunto.
        """
        controller = controller or OneDimController()
        alvos = HarnessService._alvos
        divergencias: List[Disagreement] = []
        instancias = checados = nao_confirmados = 0
        for seed, m in HarnessService.onedim_family(seeds, **familia):
            instancias += 1
            for p, q in itertools.product(m.states, repeat=2):
                alcanca = controller.reach1d(m, p, q)
                partes = controller.conjuncts(m, p, q)
                if all(partes.values()) != alcanca:
                    divergencias.append(Disagreement("onedim", seed, "conjuncts", (p, q), alcanca, not alcanca))
                    logger.warning("seed=%d: reach1d(%s, %s)=%s contradiz %s", seed, p, q, alcanca, partes)
                consultas = (
                    ("reach1d", alcanca, lambda b: Verdict(q in alvos(m, p, b)[0])),
                    ("cover", partes['cover_forward'], lambda b: Verdict(q in alvos(m, p, b)[1])),
                    ("zreach", partes['zreach'], lambda b: Verdict(q in alvos(m, p, b.in_int_mode())[0])),
                )
                for nome, decidido, explorar in consultas:
                    checados += 1
                    explorado, confirmado = HarnessService._confrontar(decidido, explorar, bounds)
                    if explorado != decidido:
                        if decidido and not confirmado:
                            nao_confirmados += 1
                            continue
                        divergencias.append(Disagreement("onedim", seed, nome, (p, q), decidido, explorado))
                        logger.warning("divergência seed=%d %s(%s, %s): decidido=%s explorador=%s",
                                       seed, nome, p, q, decidido, explorado)
        HarnessService._alvos.cache_clear()
        return HarnessResult("onedim", instancias, checados, nao_confirmados, tuple(divergencias))

    @staticmethod
    @lru_cache(maxsize=64)
    def _alvos_pvas(p: Pvas, s: Vector, bounds: Bounds) -> FrozenSet[Vector]:
        """Contadores alcançáveis com pilha vazia a partir de (s, ε)"""
        vistos, _ = ExplorerService.reachable_set(p, Configuration(PVAS_STATE, s), bounds)
        return frozenset(c.counters for c in vistos if not c.stack)

    @staticmethod
    def run_pvas_family(seeds: Iterable[int], dimension: int = 1, symbols: int = 1, pairs: int = 2,
                        max_effect: int = 2, max_value: int = 2,
                        bounds: Bounds = Bounds(12, 8, 200_000),
                        controller: Optional[SaturationController] = None) -> HarnessResult:
        """Compara decide_reach com o explorador em PVAS aleatórios"""
        controller = controller or SaturationController()
        vetores = [v for v in itertools.product(range(max_value + 1), repeat=dimension)]
        divergencias: List[Disagreement] = []
        instancias = checados = nao_confirmados = 0
        for seed in seeds:
            p = GeneratorService.gen_random_pvas(seed, dimension, symbols, pairs, max_effect)
            instancias += 1
            for s, t in itertools.product(vetores, repeat=2):
                checados += 1
                decidido = controller.decide_reach(p, s, t)
                explorado, confirmado = HarnessService._confrontar(
                    decidido, lambda b: Verdict(t in HarnessService._alvos_pvas(p, s, b)), bounds
                )
                if explorado != decidido:
                    if decidido and not confirmado:
                        nao_confirmados += 1
                        continue
                    divergencias.append(Disagreement("pvas", seed, "reach", (s, t), decidido, explorado))
                    logger.warning("divergência seed=%d reach(%s, %s): decidido=%s explorador=%s",
                                   seed, s, t, decidido, explorado)
        HarnessService._alvos_pvas.cache_clear()
        return HarnessResult("pvas", instancias, checados, nao_confirmados, tuple(divergencias))
