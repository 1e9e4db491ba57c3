import logging
from typing import Dict, List, Optional, Tuple

from config import MENSAGENS, SATURATION_CONFIG
from src.managers.level_manager import LevelManager
from src.models.errors import IterationCapError, PreconditionError
from src.models.machine import Machine, POP, PUSH
from src.models.summary import (
    BOTTOM_SYMBOL, Coset, LayerGraph, NEG_INF, SummaryTable, WeightedGraph
)
from src.services.graph_summary_service import GraphSummaryService
from src.services.normalization_service import NormalizationService
from src.validators.machine_validators import MachineValidator

logger = logging.getLogger(__name__)


class OneDimController:
    """Decisão de cobertura, Z-alcançabilidade e alcançabilidade em PVASS 1-dimensionais"""

    def __init__(self, level_manager: Optional[LevelManager] = None,
                 max_iterations: int = SATURATION_CONFIG["max_iterations"]):
        self.level_manager = level_manager or LevelManager()
        self.max_iterations = max_iterations
        self._tabelas: Dict[Machine, List[SummaryTable]] = {}
        self._cosets: Dict[Machine, Dict[Tuple[str, str], Coset]] = {}

    # ==================== PRÉ-CONDIÇÕES ====================

    @staticmethod
    def _exigir(m: Machine, separada: bool = True):
        """Dimensão 1, bidirecionada e, se pedido, separada"""
        erros = MachineValidator.check_dimension(m, 1) + MachineValidator.check_bidirected(m)
        if separada:
            erros += MachineValidator.check_separated(m)
        if erros:
            raise PreconditionError(erros[0], erros[1:])

    def _preparar(self, m: Machine, *estados: str) -> Machine:
        """Exige dimensão 1 e bidirecionalidade; devolve a forma normal separada"""
        self._exigir(m, separada=False)
        erros = MachineValidator.check_states(m, *estados)
        if erros:
            raise PreconditionError(erros[0], erros[1:])
        return NormalizationService.normalize_for_onedim(m)

    # ==================== GRAFOS EM CAMADAS ====================

    @staticmethod
    def build_layer_graph(m: Machine, prev: Optional[SummaryTable] = None) -> LayerGraph:
        """G_0 (prev None) ou G_k construído a partir da tabela do nível anterior"""
        OneDimController._exigir(m)
        nos = [LayerGraph.bottom(p) for p in m.states]
        arestas = [
            (LayerGraph.bottom(t.source), LayerGraph.bottom(t.target), t.effect[0])
            for t in m.internal_transitions()
        ]
        if prev is None:
            return LayerGraph(0, WeightedGraph(tuple(nos), tuple(arestas)))

        for sigma in (BOTTOM_SYMBOL,) + m.alphabet:
            for p in m.states:
                no_p = LayerGraph.layer_node(p, sigma)
                nos.append(no_p)
                nos.append(LayerGraph.delta_node(p, sigma))
                c = prev.delta_of(p)
                if c > NEG_INF:
                    c = int(c)
                    arestas.append((no_p, LayerGraph.delta_node(p, sigma), c))
                    arestas.append((LayerGraph.delta_node(p, sigma), no_p, -c + 1))
                for q in m.states:
                    valor = prev.gamma_of(p, q)
                    if valor.is_bottom:
                        continue
                    a = int(valor.a)
                    b_linha = 0 if valor.is_omega else int(valor.b)
                    gadget = LayerGraph.gamma_node(p, q, sigma)
                    arestas.append((no_p, gadget, a))
                    arestas.append((gadget, LayerGraph.layer_node(q, sigma), -a + b_linha))

        for t in m.push_transitions():
            arestas.append((LayerGraph.bottom(t.source), LayerGraph.layer_node(t.target, t.op.symbol), 0))
        for t in m.pop_transitions():
            arestas.append((LayerGraph.layer_node(t.source, t.op.symbol), LayerGraph.bottom(t.target), 0))
        return LayerGraph(prev.level + 1, WeightedGraph(tuple(nos), tuple(arestas)))

    @staticmethod
    def _table_from(m: Machine, layer: LayerGraph) -> SummaryTable:
        """Tabela de resumos de um grafo em camadas"""
        origens = [LayerGraph.bottom(p) for p in m.states]
        resumos = GraphSummaryService.all_summaries(layer.graph, origens)
        gamma, delta = {}, {}
        for p in m.states:
            linha, d = resumos[LayerGraph.bottom(p)]
            delta[p] = d
            for q in m.states:
                gamma[(p, q)] = linha[LayerGraph.bottom(q)]
        return SummaryTable(layer.level, gamma, delta)

    # ==================== SATURAÇÃO ====================

    def saturate_summaries(self, m: Machine) -> SummaryTable:
        """Itera G_k até gamma_k e delta_k estabilizarem"""
        return self._historico(m)[-1]

    def _historico(self, m: Machine) -> List[SummaryTable]:
        """Tabelas de todos os níveis até a estabilização, em cache"""
        if m in self._tabelas:
            return self._tabelas[m]
        self._exigir(m)
        self.level_manager.limpar()

        tabela = self._table_from(m, self.build_layer_graph(m))
        self.level_manager.record_table(tabela)
        for _ in range(self.max_iterations):
            nova = self._table_from(m, self.build_layer_graph(m, tabela))
            self.level_manager.record_table(nova)
            if nova.same_values(tabela):
                self._registrar_limites(m, nova)
                self._tabelas[m] = list(self.level_manager.tables)
                return self._tabelas[m]
            tabela = nova
        raise IterationCapError(
            MENSAGENS['limite_iteracoes'].format(limite=self.max_iterations),
            history=list(self.level_manager.tables)
        )

    @staticmethod
    def _registrar_limites(m: Machine, tabela: SummaryTable):
        """Loga o nível final e a cota de sanidade"""
        maior_peso = max((abs(t.effect[0]) for t in m.transitions), default=0)
        cota = -(tabela.level + 1) * m.n_states * maior_peso
        finitos = [v.a for v in tabela.gamma.values() if not v.is_bottom]
        logger.info("saturação convergiu no nível %d", tabela.level)
        logger.debug("menor a finito %s, cota de sanidade %d", min(finitos, default=0), cota)

    def minimal_cover_level(self, m: Machine, p: str, q: str) -> int:
        """Menor nível k com gamma_k(p, q).a == 0; -1 se nunca"""
        m = self._preparar(m, p, q)
        for tabela in self._historico(m):
            if tabela.gamma_of(p, q).a == 0:
                return tabela.level
        return -1

    def cover(self, m: Machine, p: str, q: str) -> bool:
        """(p, 0, ε) ->* (q, j, ε) para algum j >= 0"""
        m = self._preparar(m, p, q)
        return self.saturate_summaries(m).gamma_of(p, q).a == 0

    # ==================== Z-ALCANÇABILIDADE ====================

    @staticmethod
    def coset_join(c1: Coset, c2: Coset) -> Coset:
        """Menor coset que contém os dois"""
        return c1.join(c2)

    @staticmethod
    def coset_add(c1: Coset, c2: Coset) -> Coset:
        """Soma de Minkowski"""
        return c1.add(c2)

    @staticmethod
    def coset_contains(c: Coset, valor: int) -> bool:
        return c.contains(valor)

    def zreach_cosets(self, m: Machine) -> Dict[Tuple[str, str], Coset]:
        """W(p, q): pesos de caminhos em Z com pilha vazia nas pontas, como cosets"""
        if m in self._cosets:
            return self._cosets[m]
        self._exigir(m, separada=False)

        w = {(p, q): Coset.nothing() for p in m.states for q in m.states}
        for p in m.states:
            w[(p, p)] = Coset.single(0)
        for t in m.internal_transitions():
            w[(t.source, t.target)] = w[(t.source, t.target)].join(Coset.single(t.effect[0]))
        pares = [
            (e, s) for e in m.transitions if e.op.kind == PUSH
            for s in m.transitions if s.op.kind == POP and s.op.symbol == e.op.symbol
        ]

        mudou = True
        rodadas = 0
        while mudou:
            mudou = False
            rodadas += 1
            for (e, s) in pares:
                dentro = w[(e.target, s.source)]
                if dentro.empty:
                    continue
                candidato = Coset.single(e.effect[0]).add(dentro).add(Coset.single(s.effect[0]))
                unido = w[(e.source, s.target)].join(candidato)
                if unido != w[(e.source, s.target)]:
                    w[(e.source, s.target)] = unido
                    mudou = True
            for p in m.states:
                for q in m.states:
                    if w[(p, q)].empty:
                        continue
                    for r in m.states:
                        if w[(q, r)].empty:
                            continue
                        unido = w[(p, r)].join(w[(p, q)].add(w[(q, r)]))
                        if unido != w[(p, r)]:
                            w[(p, r)] = unido
                            mudou = True
        logger.debug("cosets estabilizaram em %d rodadas", rodadas)
        self._cosets[m] = w
        return w

    def zreach(self, m: Machine, p: str, q: str) -> bool:
        """0 ∈ W(p, q)"""
        self._exigir(m, separada=False)
        erros = MachineValidator.check_states(m, p, q)
        if erros:
            raise PreconditionError(erros[0], erros[1:])
        return self.zreach_cosets(m)[(p, q)].contains(0)

    # ==================== ALCANÇABILIDADE ====================

    def reach1d(self, m: Machine, p: str, q: str) -> bool:
        """p alcança q sse p cobre q, q cobre p e p Z-alcança q"""
        m = self._preparar(m, p, q)
        return self.cover(m, p, q) and self.cover(m, q, p) and self.zreach(m, p, q)

    def conjuncts(self, m: Machine, p: str, q: str) -> Dict[str, bool]:
        """As três condições separadas, para relatórios"""
        m = self._preparar(m, p, q)
        return {
            'cover_forward': self.cover(m, p, q),
            'cover_backward': self.cover(m, q, p),
            'zreach': self.zreach(m, p, q)
        }
