import itertools
import random
from collections import deque

import pytest

from src.models.errors import PreconditionError
from src.models.summary import BOTTOM, Frontier, NEG_INF, OMEGA, SummaryValue, WeightedGraph
from src.services.graph_summary_service import GraphSummaryService

TETO = 16
PISO = -25


def oraculo(g, u):
    """(a, b) por nó a partir de u, por busca sobre (nó, mínimo, peso) com peso saturado em TETO"""
    grande = TETO + 1
    vistos = {(u, 0, 0)}
    fila = deque(vistos)
    while fila:
        v, m, w = fila.popleft()
        for (t, c) in g.successors[v]:
            if w == grande:
                novo = (t, m, grande)
            else:
                w2 = w + c
                m2 = min(m, w2)
                if m2 < PISO:
                    continue
                novo = (t, m2, grande if w2 > TETO else w2)
            if novo not in vistos:
                vistos.add(novo)
                fila.append(novo)
    linha = {}
    for v in g.nodes:
        pares = [(m, w) for (x, m, w) in vistos if x == v]
        if not pares:
            linha[v] = BOTTOM
            continue
        a = max(m for m, _ in pares)
        pesos = [w for m, w in pares if m == a]
        linha[v] = SummaryValue(a, OMEGA if grande in pesos else max(pesos))
    return linha


def grafo_aleatorio(rng, n, extras):
    """Anel com pesos aleatórios mais arestas extras: uma componente fortemente conexa"""
    arestas = [(i, (i + 1) % n, rng.randint(-2, 2)) for i in range(n)] if n > 1 else []
    for _ in range(extras):
        arestas.append((rng.randrange(n), rng.randrange(n), rng.randint(-2, 2)))
    return WeightedGraph(tuple(range(n)), tuple(arestas))


@pytest.mark.parametrize("par, c, esperado", [
    ((0, 0), -3, (-3, -3)),
    ((-1, 2), 1, (-1, 3)),
    ((NEG_INF, NEG_INF), 5, (NEG_INF, NEG_INF)),
])
def test_extend(par, c, esperado):
    assert GraphSummaryService.extend(par, c) == esperado


def test_summary_value_invariants():
    with pytest.raises(ValueError):
        SummaryValue(NEG_INF, 0)
    with pytest.raises(ValueError):
        SummaryValue(-1, -2)
    with pytest.raises(ValueError):
        SummaryValue(1, 1)
    assert SummaryValue(-2, OMEGA).is_omega
    assert BOTTOM.leq(SummaryValue(-1, -1))


def test_frontier_keeps_incomparable_pairs():
    f = Frontier([(-1, -1), (-3, 1), (-3, 0), (-2, -2)])
    assert f.pairs == ((-3, 1), (-1, -1))
    assert f.best() == (-1, -1)
    assert not f.add((-3, -1))
    assert Frontier().best() == (NEG_INF, NEG_INF)
    with pytest.raises(ValueError):
        f.add((0, -1))


def test_strip_two_cycle():
    g = WeightedGraph(("u", "v"), (("u", "v", 2), ("v", "u", -1)))
    sem_ciclos, criticos = GraphSummaryService.strip_positive_cycles(g)
    assert criticos == ("u",)
    assert sem_ciclos.edges == (("v", "u", -1),)


def test_strip_without_positive_cycle():
    g = WeightedGraph(("u", "v"), (("u", "v", -1), ("v", "u", 1)))
    assert GraphSummaryService.strip_positive_cycles(g) == (g, ())


def test_strip_self_loop():
    g = WeightedGraph(("u",), (("u", "u", 1),))
    sem_ciclos, criticos = GraphSummaryService.strip_positive_cycles(g)
    assert criticos == ("u",)
    assert sem_ciclos.edges == ()


def test_critical_node_rotation_never_drops_below_zero():
    ciclo = [("a", -2), ("b", 1), ("c", 3), ("d", -1)]
    assert GraphSummaryService.critical_node(ciclo) == "b"


def test_relax_frontiers_examples():
    isolado = GraphSummaryService.relax_frontiers(WeightedGraph(("u", "v")), "u")
    assert isolado["u"].pairs == ((0, 0),)
    assert not isolado["v"]

    aresta = GraphSummaryService.relax_frontiers(WeightedGraph(("u", "v"), (("u", "v", -1),)), "u")
    assert aresta["v"].pairs == ((-1, -1),)

    g = WeightedGraph(("u", "v", "x"), (("u", "v", -1), ("u", "x", -3), ("x", "v", 4)))
    assert GraphSummaryService.relax_frontiers(g, "u")["v"].pairs == ((-3, 1), (-1, -1))


def test_summaries_examples():
    linha, delta = GraphSummaryService.summaries(WeightedGraph(("u", "v"), (("u", "v", 2), ("v", "u", -1))), "u")
    assert delta == 0
    assert linha["v"] == SummaryValue(0, OMEGA)

    linha, delta = GraphSummaryService.summaries(WeightedGraph(("u",)), "u")
    assert linha["u"] == SummaryValue(0, 0)
    assert delta == NEG_INF

    linha, delta = GraphSummaryService.summaries(WeightedGraph(("u", "v"), (("u", "v", -1), ("v", "u", 1))), "u")
    assert linha["v"] == SummaryValue(-1, -1)
    assert delta == NEG_INF


def test_summaries_bottom_outside_component():
    g = WeightedGraph(("u", "v", "w"), (("u", "v", -1), ("v", "u", 1)))
    linha, _ = GraphSummaryService.summaries(g, "u")
    assert linha["w"] == BOTTOM


def test_summaries_rejects_one_way_edges():
    with pytest.raises(PreconditionError):
        GraphSummaryService.summaries(WeightedGraph(("u", "v"), (("u", "v", 1),)), "u")


def test_stripping_hits_every_simple_positive_cycle():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 6)
        arestas = tuple(
            (rng.randrange(n), rng.randrange(n), rng.randint(-3, 3)) for _ in range(rng.randint(0, 10))
        )
        g = WeightedGraph(tuple(range(n)), arestas)
        sem_ciclos, criticos = GraphSummaryService.strip_positive_cycles(g)
        assert GraphSummaryService.find_positive_cycle(sem_ciclos) is None
        pesos = {}
        for (s, t, w) in g.edges:
            pesos[(s, t)] = max(w, pesos.get((s, t), w))
        for k in range(1, n + 1):
            for ciclo in itertools.permutations(range(n), k):
                if ciclo[0] != min(ciclo):
                    continue
                passos = list(zip(ciclo, ciclo[1:] + ciclo[:1]))
                if all(p in pesos for p in passos) and sum(pesos[p] for p in passos) > 0:
                    assert set(ciclo) & set(criticos)


def test_summaries_match_path_oracle():
    rng = random.Random(5)
    for _ in range(150):
        g = grafo_aleatorio(rng, rng.randint(1, 5), rng.randint(0, 4))
        for u in g.nodes:
            linha, delta = GraphSummaryService.summaries(g, u)
            assert linha == oraculo(g, u), (g.edges, u)
            assert linha[u].a == 0 and linha[u].b >= 0
            for valor in linha.values():
                if not valor.is_bottom:
                    assert valor.a > delta or (valor.a == delta and valor.is_omega)


def test_all_summaries_agrees_with_single_source():
    g = WeightedGraph((0, 1, 2), ((0, 1, -1), (1, 2, 2), (2, 0, -1), (1, 0, 1)))
    todos = GraphSummaryService.all_summaries(g, g.nodes)
    for u in g.nodes:
        assert todos[u] == GraphSummaryService.summaries(g, u)
