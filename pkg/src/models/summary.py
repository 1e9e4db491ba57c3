from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Dict, Hashable, Iterable, List, Optional, Tuple

from config import SENTINELS

NEG_INF = float('-inf')
OMEGA = float('inf')

Node = Hashable
Edge = Tuple[Node, Node, int]
Pair = Tuple[float, float]


@dataclass(frozen=True)
class SummaryValue:
    """Par (a, b): melhor mínimo e melhor peso nesse mínimo"""
    a: float = NEG_INF
    b: float = NEG_INF

    def __post_init__(self):
        if (self.a == NEG_INF) != (self.b == NEG_INF):
            raise ValueError(f"a = -inf se e somente se b = -inf: ({self.a}, {self.b})")
        if self.a != NEG_INF and (self.a > 0 or self.b < self.a):
            raise ValueError(f"valor de resumo inválido: ({self.a}, {self.b})")

    @property
    def is_bottom(self) -> bool:
        return self.a == NEG_INF

    @property
    def is_omega(self) -> bool:
        return self.b == OMEGA

    def leq(self, other: "SummaryValue") -> bool:
        """Ordem componente a componente com -inf < Z < omega"""
        return self.a <= other.a and self.b <= other.b

    def as_pair(self) -> Pair:
        return (self.a, self.b)


BOTTOM = SummaryValue()


class Frontier:
    """Anticadeia de pares (m, w) maximais na ordem componente a componente"""

    def __init__(self, pairs: Iterable[Tuple[int, int]] = ()):
        self._pairs: List[Tuple[int, int]] = []
        for par in pairs:
            self.add(par)

    def add(self, par: Tuple[int, int]) -> bool:
        """Insere o par; devolve True se a fronteira mudou"""
        m, w = par
        if w < m:
            raise ValueError(f"par de caminho com peso abaixo do mínimo: {par}")
        for (m2, w2) in self._pairs:
            if m2 >= m and w2 >= w:
                return False
        self._pairs = [(m2, w2) for (m2, w2) in self._pairs if not (m >= m2 and w >= w2)]
        self._pairs.append((m, w))
        return True

    @property
    def pairs(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(sorted(self._pairs))

    def best(self) -> Pair:
        """Par de maior m e, empatado, maior w; (-inf, -inf) se vazia"""
        if not self._pairs:
            return (NEG_INF, NEG_INF)
        return max(self._pairs)

    def __bool__(self) -> bool:
        return bool(self._pairs)

    def __len__(self) -> int:
        return len(self._pairs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Frontier) and self.pairs == other.pairs

    def __repr__(self) -> str:
        return f"Frontier({list(self.pairs)})"


@dataclass(frozen=True)
class Coset:
    """Conjunto r + gZ (g = 0 é o unitário {r}) ou vazio"""
    offset: int = 0
    modulus: int = 0
    empty: bool = False

    def __post_init__(self):
        if self.modulus < 0:
            raise ValueError("módulo negativo")
        if self.empty:
            object.__setattr__(self, 'offset', 0)
            object.__setattr__(self, 'modulus', 0)
        elif self.modulus > 0:
            object.__setattr__(self, 'offset', self.offset % self.modulus)

    @classmethod
    def nothing(cls) -> "Coset":
        return cls(empty=True)

    @classmethod
    def single(cls, valor: int) -> "Coset":
        return cls(valor, 0)

    def join(self, other: "Coset") -> "Coset":
        """Menor coset que contém os dois"""
        if self.empty:
            return other
        if other.empty:
            return self
        g = gcd(gcd(self.modulus, other.modulus), abs(self.offset - other.offset))
        if g == 0:
            return self
        return Coset(self.offset, g)

    def add(self, other: "Coset") -> "Coset":
        """Soma de Minkowski"""
        if self.empty or other.empty:
            return Coset.nothing()
        return Coset(self.offset + other.offset, gcd(self.modulus, other.modulus))

    def contains(self, valor: int) -> bool:
        if self.empty:
            return False
        if self.modulus == 0:
            return valor == self.offset
        return (valor - self.offset) % self.modulus == 0

    def __str__(self) -> str:
        if self.empty:
            return SENTINELS["empty_coset"]
        if self.modulus == 0:
            return f"{{{self.offset}}}"
        return f"{self.offset}+{self.modulus}Z"


@dataclass(frozen=True)
class SummaryTable:
    """Tabela gamma/delta de um nível k"""
    level: int
    gamma: Dict[Tuple[str, str], SummaryValue] = field(default_factory=dict)
    delta: Dict[str, float] = field(default_factory=dict)

    def gamma_of(self, p: str, q: str) -> SummaryValue:
        return self.gamma.get((p, q), BOTTOM)

    def delta_of(self, p: str) -> float:
        return self.delta.get(p, NEG_INF)

    def same_values(self, other: "SummaryTable") -> bool:
        """Compara apenas os valores (ignora o nível)"""
        chaves = set(self.gamma) | set(other.gamma)
        estados = set(self.delta) | set(other.delta)
        return (all(self.gamma_of(*c) == other.gamma_of(*c) for c in chaves)
                and all(self.delta_of(p) == other.delta_of(p) for p in estados))

    def leq(self, other: "SummaryTable") -> bool:
        chaves = set(self.gamma) | set(other.gamma)
        estados = set(self.delta) | set(other.delta)
        return (all(self.gamma_of(*c).leq(other.gamma_of(*c)) for c in chaves)
                and all(self.delta_of(p) <= other.delta_of(p) for p in estados))

    def rows(self) -> List[Tuple[str, str, float, float]]:
        return [(p, q, v.a, v.b) for (p, q), v in sorted(self.gamma.items())]


def _edge_key(edge: Edge):
    return (edge[0], edge[1], edge[2])


@dataclass(frozen=True)
class WeightedGraph:
    """Grafo dirigido com pesos inteiros; nós precisam ser comparáveis entre si"""
    nodes: Tuple[Node, ...] = ()
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        todos = set(self.nodes)
        for (s, t, _) in self.edges:
            todos.add(s)
            todos.add(t)
        object.__setattr__(self, 'nodes', tuple(sorted(todos)))
        object.__setattr__(self, 'edges', tuple(sorted(set((s, t, int(w)) for (s, t, w) in self.edges), key=_edge_key)))

    @cached_property
    def successors(self) -> Dict[Node, List[Tuple[Node, int]]]:
        adj: Dict[Node, List[Tuple[Node, int]]] = {v: [] for v in self.nodes}
        for (s, t, w) in self.edges:
            adj[s].append((t, w))
        return adj

    @cached_property
    def components(self) -> Dict[Node, int]:
        """Componente fracamente conexa de cada nó (índice do menor nó)"""
        pai = {v: v for v in self.nodes}

        def raiz(v):
            while pai[v] != v:
                pai[v] = pai[pai[v]]
                v = pai[v]
            return v

        for (s, t, _) in self.edges:
            rs, rt = raiz(s), raiz(t)
            if rs != rt:
                pai[max(rs, rt)] = min(rs, rt)
        indice = {v: i for i, v in enumerate(self.nodes)}
        return {v: indice[raiz(v)] for v in self.nodes}

    def reachable_from(self, origem: Node) -> set:
        """Nós alcançáveis a partir da origem"""
        vistos = {origem}
        pilha = [origem]
        while pilha:
            v = pilha.pop()
            for (t, _) in self.successors.get(v, ()):
                if t not in vistos:
                    vistos.add(t)
                    pilha.append(t)
        return vistos

    def components_strongly_connected(self) -> bool:
        """Cada componente fracamente conexa é fortemente conexa"""
        comp = self.components
        for v in self.nodes:
            alcance = self.reachable_from(v)
            if any(comp[u] == comp[v] and u not in alcance for u in self.nodes):
                return False
        return True

    def without_out_edges(self, node: Node) -> "WeightedGraph":
        return WeightedGraph(self.nodes, tuple(e for e in self.edges if e[0] != node))


BOTTOM_SYMBOL = SENTINELS["bottom"]


@dataclass(frozen=True)
class LayerGraph:
    """Grafo G_k: camadas <p, σ> para σ em Γ ∪ {⊥} mais nós de gadget"""
    level: int
    graph: WeightedGraph

    @staticmethod
    def layer_node(p: str, sigma: str) -> Tuple[str, ...]:
        return ("s", p, sigma)

    @staticmethod
    def delta_node(p: str, sigma: str) -> Tuple[str, ...]:
        return ("d", p, sigma)

    @staticmethod
    def gamma_node(p: str, q: str, sigma: str) -> Tuple[str, ...]:
        return ("g", p, q, sigma)

    @classmethod
    def bottom(cls, p: str) -> Tuple[str, ...]:
        return cls.layer_node(p, BOTTOM_SYMBOL)

    def weight_between(self, s: Node, t: Node) -> Optional[List[int]]:
        """Pesos das arestas de s para t"""
        pesos = [w for (a, b, w) in self.graph.edges if a == s and b == t]
        return pesos or None
