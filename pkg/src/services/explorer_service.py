import logging
from collections import deque
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from src.models.errors import GuardViolationError, PreconditionError
from src.models.explorer import Bounds, Move, NAT, TargetPredicate, Verdict
from src.models.machine import Configuration, Machine, POP, PUSH, PVAS_STATE, Pvas
from src.services.normalization_service import NormalizationService
from src.validators.machine_validators import BoundsValidator

logger = logging.getLogger(__name__)

System = Union[Machine, Pvas]


class ExplorerService:
    """Exploração em largura limitada do espaço de configurações"""

    @staticmethod
    def moves_of(system: System) -> List[Move]:
        """Passos normalizados do sistema, PVASS ou PVAS"""
        if isinstance(system, Pvas):
            return NormalizationService.pvas_to_moves(system)
        return NormalizationService.machine_to_moves(system)

    @staticmethod
    def apply(move: Move, config: Configuration, mode: str) -> Optional[Configuration]:
        """Um passo; None se o passo não está habilitado (sem aplicar limites)"""
        if config.state != move.source:
            return None
        if mode == NAT and any(c < n for c, n in zip(config.counters, move.need)):
            return None
        pilha = config.stack
        if move.op.kind == PUSH:
            pilha = pilha + (move.op.symbol,)
        elif move.op.kind == POP:
            if not pilha or pilha[-1] != move.op.symbol:
                return None
            pilha = pilha[:-1]
        contadores = tuple(c + d for c, d in zip(config.counters, move.delta))
        return Configuration(move.target, contadores, pilha)

    @staticmethod
    def _validar(source: Configuration, bounds: Bounds):
        """Rejeita limites negativos e origem fora dos limites"""
        erros = BoundsValidator.validar_limites(bounds)
        if erros:
            raise PreconditionError(erros[0], erros[1:])
        if not bounds.admits(source):
            raise PreconditionError(f"configuração inicial fora dos limites: {source}")

    @staticmethod
    def _busca(system: System, source: Configuration, bounds: Bounds,
               target: Optional[TargetPredicate] = None) -> Tuple[Dict, Optional[Configuration], int, bool]:
        """Laço da BFS: (pais, alvo achado, podados, limite de nós atingido); sem alvo, esgota os limites"""
        por_estado: Dict[str, List[Move]] = {}
        for mv in ExplorerService.moves_of(system):
            por_estado.setdefault(mv.source, []).append(mv)

        pais: Dict[Configuration, Optional[Tuple[Configuration, Move]]] = {source: None}
        fila = deque([source])
        podados = 0
        while fila:
            atual = fila.popleft()
            if target is not None and target.matches(atual):
                return pais, atual, podados, False
            for mv in por_estado.get(atual.state, ()):
                nova = ExplorerService.apply(mv, atual, bounds.mode)
                if nova is None or nova in pais:
                    continue
                if not bounds.admits(nova):
                    podados += 1
                    continue
                if len(pais) >= bounds.node_max:
                    return pais, None, podados, True
                pais[nova] = (atual, mv)
                fila.append(nova)
        return pais, None, podados, False

    @staticmethod
    def bounded_reach(system: System, source: Configuration, target: TargetPredicate,
                      bounds: Bounds = Bounds()) -> Verdict:
        """BFS: testemunha mais curta primeiro, ordem canônica das transições"""
        ExplorerService._validar(source, bounds)
        pais, achado, podados, estourou = ExplorerService._busca(system, source, bounds, target)
        if achado is not None:
            witness = ExplorerService._rebuild(pais, achado)
            logger.debug("alcançado em %d passos, %d configurações", len(witness), len(pais))
            return Verdict(True, witness, achado, {'visited': len(pais), 'pruned': podados})

        estatisticas = {
            'visited': len(pais),
            'pruned': podados,
            'node_limit_hit': int(estourou)
        }
        logger.debug("exploração esgotada: %s", estatisticas)
        return Verdict(False, (), None, estatisticas)

    @staticmethod
    def reachable_set(system: System, source: Configuration,
                      bounds: Bounds = Bounds()) -> Tuple[FrozenSet[Configuration], bool]:
        """Configurações alcançáveis dentro dos limites e se o limite de nós cortou a busca"""
        ExplorerService._validar(source, bounds)
        pais, _, _, estourou = ExplorerService._busca(system, source, bounds)
        if estourou:
            logger.debug("limite de %d nós atingido a partir de %s", bounds.node_max, source)
        return frozenset(pais), estourou

    @staticmethod
    def _rebuild(pais, final: Configuration) -> Tuple:
        """Rótulos do caminho da origem até final, pelos ponteiros de pai"""
        passos = []
        atual = final
        while pais[atual] is not None:
            anterior, mv = pais[atual]
            passos.append(mv.label)
            atual = anterior
        return tuple(reversed(passos))

    @staticmethod
    def replay_witness(system: System, source: Configuration, witness: Sequence,
                       mode: str = NAT) -> Configuration:
        """Reexecuta a testemunha; erro se algum passo não estiver habilitado"""
        por_rotulo = {mv.label: mv for mv in ExplorerService.moves_of(system)}
        atual = source
        for i, rotulo in enumerate(witness):
            mv = por_rotulo.get(rotulo)
            nova = None if mv is None else ExplorerService.apply(mv, atual, mode)
            if nova is None:
                raise GuardViolationError(f"passo {i} ({rotulo}) não habilitado em {atual}")
            atual = nova
        return atual

    @staticmethod
    def reach(m: Machine, p: str, q: str, bounds: Bounds = Bounds()) -> Verdict:
        """(p, 0, ε) ->* (q, 0, ε)"""
        zero = m.zero()
        return ExplorerService.bounded_reach(m, Configuration(p, zero), TargetPredicate(q, counters=zero), bounds)

    @staticmethod
    def cover(m: Machine, p: str, q: str, bounds: Bounds = Bounds()) -> Verdict:
        """(p, 0, ε) ->* (q, j, ε) para algum j >= 0"""
        zero = m.zero()
        return ExplorerService.bounded_reach(m, Configuration(p, zero), TargetPredicate(q, at_least=zero), bounds)

    @staticmethod
    def zreach(m: Machine, p: str, q: str, bounds: Bounds = Bounds()) -> Verdict:
        """Alcançabilidade com contadores em Z"""
        zero = m.zero()
        return ExplorerService.bounded_reach(
            m, Configuration(p, zero), TargetPredicate(q, counters=zero), bounds.in_int_mode()
        )

    @staticmethod
    def pvas_reach(p: Pvas, s, t, bounds: Bounds = Bounds()) -> Verdict:
        """(s, ε) ->* (t, ε) no PVAS"""
        return ExplorerService.bounded_reach(
            p, Configuration(PVAS_STATE, tuple(s)), TargetPredicate(PVAS_STATE, counters=tuple(t)), bounds
        )
