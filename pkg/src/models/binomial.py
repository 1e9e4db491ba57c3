from dataclasses import dataclass
from typing import Optional, Tuple

from src.models.linear import Vector

LEX = "lex"
GRLEX = "grlex"
BLOCK = "block"


@dataclass(frozen=True)
class MonomialOrder:
    """Ordem monomial admissível sobre n variáveis.

    `block` compara primeiro as variáveis de `eliminated` (grlex) e, empatando,
    as restantes (grlex). `permutation` reordena as variáveis antes da comparação.
    """
    kind: str
    n_vars: int
    eliminated: Tuple[int, ...] = ()
    permutation: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in (LEX, GRLEX, BLOCK):
            raise ValueError(f"ordem desconhecida: {self.kind}")
        if self.kind == BLOCK and not self.eliminated:
            raise ValueError("ordem de bloco exige variáveis eliminadas")
        if any(not 0 <= i < self.n_vars for i in self.eliminated):
            raise ValueError(f"variável eliminada fora do intervalo: {self.eliminated}")
        object.__setattr__(self, 'eliminated', tuple(sorted(set(self.eliminated))))

    @classmethod
    def grlex(cls, n_vars: int) -> "MonomialOrder":
        return cls(GRLEX, n_vars)

    @classmethod
    def lex(cls, n_vars: int) -> "MonomialOrder":
        return cls(LEX, n_vars)

    @classmethod
    def block(cls, n_vars: int, eliminated) -> "MonomialOrder":
        return cls(BLOCK, n_vars, tuple(eliminated))

    @property
    def kept(self) -> Tuple[int, ...]:
        return tuple(i for i in range(self.n_vars) if i not in self.eliminated)

    def key(self, u: Vector):
        if self.permutation is not None:
            u = tuple(u[i] for i in self.permutation)
        if self.kind == LEX:
            return tuple(u)
        if self.kind == GRLEX:
            return (sum(u), tuple(u))
        fora = tuple(u[i] for i in self.eliminated)
        resto = tuple(u[i] for i in self.kept)
        return (sum(fora), fora, sum(resto), resto)

    def greater(self, u: Vector, v: Vector) -> bool:
        return self.key(u) > self.key(v)


@dataclass(frozen=True)
class Binomial:
    """Binômio puro x^lead - x^trail com lead > trail na ordem de contexto"""
    lead: Vector
    trail: Vector

    def __post_init__(self):
        if len(self.lead) != len(self.trail):
            raise ValueError("monômios de aridades diferentes")
        if self.lead == self.trail:
            raise ValueError("binômio nulo deve ser representado por None")

    @classmethod
    def oriented(cls, u: Vector, v: Vector, order: MonomialOrder) -> Optional["Binomial"]:
        """x^u - x^v orientado pela ordem; None quando u == v (o binômio Zero)"""
        u, v = tuple(u), tuple(v)
        if u == v:
            return None
        if order.greater(u, v):
            return cls(u, v)
        return cls(v, u)

    @property
    def arity(self) -> int:
        return len(self.lead)

    def as_pair(self) -> Tuple[Vector, Vector]:
        return (self.lead, self.trail)

    def __str__(self) -> str:
        return f"x^{list(self.lead)} - x^{list(self.trail)}"
