from dataclasses import dataclass, field
from typing import Iterable, List, Tuple

Vector = Tuple[int, ...]


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_leq(u: Vector, v: Vector) -> bool:
    """Ordem componente a componente"""
    return all(a <= b for a, b in zip(u, v))


def vec_norm(u: Vector) -> int:
    return sum(abs(a) for a in u)


def unit(k: int, i: int) -> Vector:
    """i-ésimo vetor unitário de N^k"""
    return tuple(1 if j == i else 0 for j in range(k))


def minimal_antichain(vectors: Iterable[Vector]) -> List[Vector]:
    """Elementos minimais (ordem componente a componente), em ordem canônica"""
    unicos = sorted(set(vectors), key=lambda v: (sum(v), v))
    minimais: List[Vector] = []
    for v in unicos:
        if not any(vec_leq(m, v) for m in minimais):
            minimais.append(v)
    return sorted(minimais)


@dataclass(frozen=True)
class LinearSet:
    """Conjunto linear base + periods*"""
    base: Vector
    periods: Tuple[Vector, ...] = ()

    def __post_init__(self):
        base = tuple(int(x) for x in self.base)
        periodos = {tuple(int(x) for x in p) for p in self.periods}
        periodos.discard(tuple(0 for _ in base))
        for p in periodos:
            if len(p) != len(base):
                raise ValueError(f"período {p} com aridade diferente da base {base}")
            if any(x < 0 for x in p):
                raise ValueError(f"período com entrada negativa: {p}")
        object.__setattr__(self, 'base', base)
        object.__setattr__(self, 'periods', tuple(sorted(periodos)))

    @property
    def arity(self) -> int:
        return len(self.base)

    @property
    def is_singleton(self) -> bool:
        return not self.periods


@dataclass(frozen=True)
class SemilinearSet:
    """União finita de conjuntos lineares de mesma aridade"""
    arity: int
    components: Tuple[LinearSet, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for c in self.components:
            if c.arity != self.arity:
                raise ValueError(f"componente de aridade {c.arity} em conjunto de aridade {self.arity}")
        object.__setattr__(self, 'components', tuple(sorted(set(self.components),
                                                            key=lambda c: (c.base, c.periods))))

    @classmethod
    def empty(cls, arity: int) -> "SemilinearSet":
        return cls(arity, ())

    @classmethod
    def of(cls, *components: LinearSet) -> "SemilinearSet":
        if not components:
            raise ValueError("use SemilinearSet.empty para o conjunto vazio")
        return cls(components[0].arity, tuple(components))

    @property
    def is_empty(self) -> bool:
        return not self.components

    def size(self) -> int:
        """Tamanho serializado ‖S‖ (soma das entradas de bases e períodos)"""
        return sum(sum(c.base) + sum(sum(p) for p in c.periods) for c in self.components)

    def __len__(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class SolutionBasis:
    """Soluções minimais de um sistema linear sobre N (mais a parte homogênea, se houver)"""
    minimals: Tuple[Vector, ...] = ()
    homogeneous: Tuple[Vector, ...] = ()

    @property
    def feasible(self) -> bool:
        return bool(self.minimals)
