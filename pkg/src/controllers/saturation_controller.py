import logging
from typing import Dict, List, Optional, Sequence, Tuple

from config import MENSAGENS, SATURATION_CONFIG
from src.managers.level_manager import LevelManager
from src.models.congruence import ChainEntry, CongruenceBasis, SaturationState
from src.models.errors import IterationCapError, PreconditionError
from src.models.linear import Vector, vec_sub
from src.models.machine import Machine, Pvas, PvasTransition
from src.services.congruence_service import CongruenceService
from src.services.groebner_service import GroebnerService
from src.services.normalization_service import NormalizationService
from src.services.semilinear_service import SemilinearService
from src.validators.machine_validators import MachineValidator

logger = logging.getLogger(__name__)

PairVec = Tuple[Vector, Vector]


class SaturationController:
    """Saturação de congruências R_0 ⊆ R_1 ⊆ ... para PVAS bidirecionados"""

    def __init__(self, level_manager: Optional[LevelManager] = None,
                 max_level: int = SATURATION_CONFIG["max_level"]):
        self.level_manager = level_manager or LevelManager()
        self.max_level = max_level
        self._finais: Dict[Pvas, SaturationState] = {}

    @staticmethod
    def _exigir(p: Pvas):
        """PVAS bidirecionado com vetores de mesma dimensão"""
        erros = MachineValidator.check_bidirected(p)
        if erros:
            raise PreconditionError(erros[0], erros[1:])

    @staticmethod
    def _pares_casados(p: Pvas) -> List[Tuple[PvasTransition, PvasTransition]]:
        """(push a, pop a) em ordem canônica"""
        pares = [
            (e, s) for e in p.push_transitions()
            for s in p.pop_transitions() if s.op.symbol == e.op.symbol
        ]
        for e in p.push_transitions():
            if e.reverse() not in p.transitions:
                raise PreconditionError(MENSAGENS['nao_bidirecionado'], [f"sem inversa: {e}"])
        return pares

    # ==================== NÍVEIS ====================

    def initial_state(self, p: Pvas) -> SaturationState:
        """R_0 = Cong das transições internas"""
        self._exigir(p)
        base = CongruenceBasis(p.dimension, tuple((t.u, t.v) for t in p.internal_transitions()))
        semilinear = CongruenceService.cong_to_semilinear(base)
        entrada = ChainEntry(0, len(base))
        return SaturationState(0, base, semilinear, (entrada,))

    @staticmethod
    def step_generators(state: SaturationState, p: Pvas) -> Tuple[PairVec, ...]:
        """Geradores de Step para cada push (u, u', a) e pop (v', v, ā)"""
        geradores = set()
        for (empilha, desempilha) in SaturationController._pares_casados(p):
            dentro = empilha.v + desempilha.u
            fora = empilha.u + desempilha.v
            recorte = SemilinearService.intersect_upset(state.semilinear, dentro)
            if recorte.is_empty:
                continue
            passo = SemilinearService.translate(recorte, vec_sub(fora, dentro))
            geradores.update(SemilinearService.to_congruence_basis(passo))
        return tuple(sorted(geradores))

    def step(self, state: SaturationState, p: Pvas) -> SaturationState:
        """R_i = Cong(R_{i-1} ∪ Step)"""
        novos = self.step_generators(state, p)
        base = state.basis.union(novos)
        anteriores = state.basis.oriented()
        fora = [
            par for par in base.oriented()
            if not GroebnerService.congruence_member(anteriores, par[0], par[1])
        ]
        # mesma congruência: a representação anterior continua exata
        semilinear = CongruenceService.cong_to_semilinear(base) if fora else state.semilinear
        entrada = ChainEntry(state.level + 1, len(base), fora[0] if fora else None)
        return SaturationState(state.level + 1, base, semilinear, state.chain + (entrada,))

    def saturate(self, p: Pvas) -> SaturationState:
        """Itera step até nenhum gerador novo sair da congruência anterior"""
        if p in self._finais:
            return self._finais[p]
        self.level_manager.limpar()
        estado = self.initial_state(p)
        self.level_manager.record_chain(estado.chain[-1])
        for _ in range(self.max_level):
            proximo = self.step(estado, p)
            self.level_manager.record_chain(proximo.chain[-1])
            if proximo.chain[-1].distinguishing_pair is None:
                logger.info("ponto fixo no nível %d com %d geradores", estado.level, len(estado.basis))
                final = SaturationState(estado.level, estado.basis, estado.semilinear, proximo.chain)
                self._finais[p] = final
                return final
            estado = proximo
        raise IterationCapError(
            MENSAGENS['limite_niveis'].format(limite=self.max_level),
            history=list(self.level_manager.chain)
        )

    # ==================== DECISÃO ====================

    def decide_reach(self, p: Pvas, s: Sequence[int], t: Sequence[int]) -> bool:
        """(s, ε) ->* (t, ε) sse s ~ t na congruência saturada"""
        s, t = tuple(s), tuple(t)
        if len(s) != p.dimension or len(t) != p.dimension:
            raise PreconditionError.from_key('dimensao_errada', esperada=p.dimension, recebida=len(s))
        estado = self.saturate(p)
        return GroebnerService.congruence_member(estado.basis.oriented(), s, t)

    def decide_machine_reach(self, m: Machine, origem: str, destino: str) -> bool:
        """PVASS: fecho bidirecionado e codificação dos estados nos contadores"""
        fechada = NormalizationService.bidirected_closure(m)
        p, s, t = NormalizationService.pvass_to_pvas(fechada, origem, destino)
        return self.decide_reach(p, s, t)

    @staticmethod
    def level_relation_member(state: SaturationState, x: Sequence[int], y: Sequence[int]) -> bool:
        """(x, y) ∈ R_i pela representação semilinear do nível"""
        return SemilinearService.member(state.semilinear, tuple(x) + tuple(y))
