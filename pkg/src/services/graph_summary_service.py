import logging
from typing import Dict, List, Optional, Tuple

from config import MENSAGENS
from src.models.errors import PreconditionError
from src.models.summary import (
    Frontier, NEG_INF, Node, OMEGA, Pair, SummaryValue, WeightedGraph
)

logger = logging.getLogger(__name__)


class GraphSummaryService:
    """Resumos (mínimo, peso) de caminhos em grafos finitos com pesos inteiros"""

    @staticmethod
    def extend(par: Pair, c: int) -> Pair:
        """(a, b) ⊙ c = (min(a, b + c), b + c); (-inf, -inf) é absorvente"""
        a, b = par
        if a == NEG_INF:
            return (NEG_INF, NEG_INF)
        return (min(a, b + c), b + c)

    @staticmethod
    def find_positive_cycle(g: WeightedGraph) -> Optional[List[Tuple[Node, int]]]:
        """Bellman-Ford maximizante com todas as distâncias em 0.

        Devolve o ciclo como lista de (nó, peso da aresta que sai dele), na ordem
        de percurso, ou None se não há ciclo positivo.
        """
        n = len(g.nodes)
        if n == 0:
            return None
        dist = {v: 0 for v in g.nodes}
        pred: Dict[Node, Tuple[Node, int]] = {}
        rodada = 0
        while True:
            rodada += 1
            mudou = False
            for (s, t, w) in g.edges:
                if dist[s] + w > dist[t]:
                    dist[t] = dist[s] + w
                    pred[t] = (s, w)
                    mudou = True
            if not mudou:
                return None
            if rodada >= n:
                ciclo = GraphSummaryService._cycle_in_predecessors(pred)
                if ciclo is not None:
                    return ciclo

    @staticmethod
    def _cycle_in_predecessors(pred: Dict[Node, Tuple[Node, int]]) -> Optional[List[Tuple[Node, int]]]:
        """Ciclo no grafo de predecessores, se houver"""
        estado: Dict[Node, int] = {}
        for inicio in sorted(pred):
            caminho = []
            v = inicio
            while v in pred and v not in estado:
                estado[v] = 1
                caminho.append(v)
                v = pred[v][0]
            if v in caminho:
                voltas = caminho[caminho.index(v):]
                # voltas segue predecessores; o percurso é o inverso
                ordem = list(reversed(voltas))
                ciclo = []
                for i, x in enumerate(ordem):
                    seguinte = ordem[(i + 1) % len(ordem)]
                    ciclo.append((x, pred[seguinte][1]))
                if sum(w for _, w in ciclo) > 0:
                    return ciclo
            for x in caminho:
                estado[x] = 2
        return None

    @staticmethod
    def critical_node(ciclo: List[Tuple[Node, int]]) -> Node:
        """Primeiro nó que atinge o menor prefixo; a rotação a partir dele nunca desce de 0"""
        soma = 0
        melhor, indice = 0, 0
        for i, (_, w) in enumerate(ciclo):
            if soma < melhor:
                melhor, indice = soma, i
            soma += w
        return ciclo[indice][0]

    @staticmethod
    def strip_positive_cycles(g: WeightedGraph) -> Tuple[WeightedGraph, Tuple[Node, ...]]:
        """Remove as arestas de saída de nós críticos até não restar ciclo positivo"""
        atual = g
        criticos: List[Node] = []
        while True:
            ciclo = GraphSummaryService.find_positive_cycle(atual)
            if ciclo is None:
                break
            x = GraphSummaryService.critical_node(ciclo)
            logger.debug("ciclo positivo %s, nó crítico %s", [v for v, _ in ciclo], x)
            criticos.append(x)
            atual = atual.without_out_edges(x)
        return atual, tuple(sorted(criticos))

    @staticmethod
    def relax_frontiers(g: WeightedGraph, u: Node) -> Dict[Node, Frontier]:
        """Fronteiras de Pareto dos caminhos u -> v em g (sem ciclos positivos)"""
        fronteiras = {v: Frontier() for v in g.nodes}
        fronteiras.setdefault(u, Frontier()).add((0, 0))
        for _ in range(max(len(g.nodes) - 1, 0)):
            mudou = False
            for (s, t, w) in g.edges:
                for par in fronteiras[s].pairs:
                    if fronteiras[t].add(GraphSummaryService.extend(par, w)):
                        mudou = True
            if not mudou:
                break
        if logger.isEnabledFor(logging.DEBUG):
            for v in g.nodes:
                if fronteiras[v]:
                    logger.debug("fronteira %s -> %s: %s", u, v, list(fronteiras[v].pairs))
        return fronteiras

    @staticmethod
    def summaries(g: WeightedGraph, u: Node) -> Tuple[Dict[Node, SummaryValue], float]:
        """gamma^G(u, .) e delta^G(u)"""
        if not g.components_strongly_connected():
            raise PreconditionError(MENSAGENS['nao_fortemente_conexo'])
        sem_ciclos, criticos = GraphSummaryService.strip_positive_cycles(g)
        return GraphSummaryService._summaries_from(g, sem_ciclos, criticos, u)

    @staticmethod
    def all_summaries(g: WeightedGraph, origens) -> Dict[Node, Tuple[Dict[Node, SummaryValue], float]]:
        """Resumos para várias origens reaproveitando a remoção de ciclos"""
        if not g.components_strongly_connected():
            raise PreconditionError(MENSAGENS['nao_fortemente_conexo'])
        sem_ciclos, criticos = GraphSummaryService.strip_positive_cycles(g)
        return {u: GraphSummaryService._summaries_from(g, sem_ciclos, criticos, u) for u in origens}

    @staticmethod
    def _summaries_from(g: WeightedGraph, sem_ciclos: WeightedGraph, criticos, u: Node):
        """gamma de u para cada nó e delta de u, sem ciclos positivos"""
        fronteiras = GraphSummaryService.relax_frontiers(sem_ciclos, u)
        delta = max((fronteiras[x].best()[0] for x in criticos if fronteiras[x]), default=NEG_INF)

        componente = g.components[u]
        linha: Dict[Node, SummaryValue] = {}
        for v in g.nodes:
            if g.components[v] != componente:
                linha[v] = SummaryValue()
                continue
            a, b = fronteiras[v].best()
            if delta > NEG_INF and a <= delta:
                linha[v] = SummaryValue(delta, OMEGA)
            else:
                linha[v] = SummaryValue(a, b)
        return linha, delta
