from dataclasses import dataclass, field
from typing import Iterable, Optional, Tuple

from src.models.linear import SemilinearSet, Vector

PairVec = Tuple[Vector, Vector]


@dataclass(frozen=True)
class CongruenceBasis:
    """Geradores de Cong(R) sobre N^d, guardados simetrizados e sem pares triviais"""
    dimension: int
    pairs: Tuple[PairVec, ...] = ()

    def __post_init__(self):
        simetrico = set()
        for (u, v) in self.pairs:
            u, v = tuple(int(x) for x in u), tuple(int(x) for x in v)
            if len(u) != self.dimension or len(v) != self.dimension:
                raise ValueError(f"par ({u}, {v}) fora da dimensão {self.dimension}")
            if any(x < 0 for x in u + v):
                raise ValueError(f"par com entrada negativa: ({u}, {v})")
            if u != v:
                simetrico.add((u, v))
                simetrico.add((v, u))
        object.__setattr__(self, 'pairs', tuple(sorted(simetrico)))

    @classmethod
    def of(cls, dimension: int, pairs: Iterable[PairVec]) -> "CongruenceBasis":
        return cls(dimension, tuple(pairs))

    def union(self, pairs: Iterable[PairVec]) -> "CongruenceBasis":
        return CongruenceBasis(self.dimension, self.pairs + tuple(pairs))

    def oriented(self) -> Tuple[PairVec, ...]:
        """Um representante por par simétrico"""
        return tuple(p for p in self.pairs if p[0] < p[1])

    def __len__(self) -> int:
        return len(self.oriented())


@dataclass(frozen=True)
class Region:
    """Conjunto linear base + {e_i : i em axes}*"""
    base: Vector
    axes: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'base', tuple(self.base))
        object.__setattr__(self, 'axes', tuple(sorted(set(self.axes))))
        if any(not 0 <= i < len(self.base) for i in self.axes):
            raise ValueError(f"eixo fora da dimensão: {self.axes}")

    @property
    def dimension(self) -> int:
        return len(self.base)

    def contains(self, x: Vector) -> bool:
        return all(
            x[i] >= self.base[i] if i in self.axes else x[i] == self.base[i]
            for i in range(self.dimension)
        )

    def project(self, x: Vector) -> Vector:
        """Coordenadas em axes de x - base"""
        return tuple(x[i] - self.base[i] for i in self.axes)

    def embed(self, y: Vector) -> Vector:
        """Inverso de project sem somar a base"""
        x = [0] * self.dimension
        for valor, i in zip(y, self.axes):
            x[i] = valor
        return tuple(x)


@dataclass(frozen=True)
class ChainEntry:
    """Registro de um nível da cadeia R_0 ⊆ R_1 ⊆ ..."""
    level: int
    generators: int
    distinguishing_pair: Optional[PairVec] = None


@dataclass(frozen=True)
class SaturationState:
    """Estado do algoritmo de saturação no nível i"""
    level: int
    basis: CongruenceBasis
    semilinear: SemilinearSet
    chain: Tuple[ChainEntry, ...] = field(default_factory=tuple)
