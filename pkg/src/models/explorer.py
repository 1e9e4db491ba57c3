from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from config import DEFAULT_BOUNDS
from src.models.machine import Configuration, StackOp, Vector

NAT = "nat"
INT = "int"


@dataclass(frozen=True)
class Bounds:
    """Limites da exploração em largura"""
    counter_max: int = DEFAULT_BOUNDS["counter_max"]
    stack_max: int = DEFAULT_BOUNDS["stack_max"]
    node_max: int = DEFAULT_BOUNDS["node_max"]
    mode: str = NAT

    def doubled(self) -> "Bounds":
        return Bounds(2 * self.counter_max, 2 * self.stack_max, 2 * self.node_max, self.mode)

    def in_int_mode(self) -> "Bounds":
        return Bounds(self.counter_max, self.stack_max, self.node_max, INT)

    def admits(self, config: Configuration) -> bool:
        if len(config.stack) > self.stack_max:
            return False
        if self.mode == NAT:
            return all(0 <= c <= self.counter_max for c in config.counters)
        return all(abs(c) <= self.counter_max for c in config.counters)


@dataclass(frozen=True)
class Move:
    """Passo normalizado: exige counters >= need (modo N), soma delta, aplica op"""
    source: str
    need: Vector
    delta: Vector
    op: StackOp
    target: str
    label: object = None


@dataclass(frozen=True)
class TargetPredicate:
    """Alvo: estado, contadores exatos ou cota inferior, pilha vazia opcional"""
    state: str
    counters: Optional[Vector] = None
    at_least: Optional[Vector] = None
    empty_stack: bool = True

    def matches(self, config: Configuration) -> bool:
        if config.state != self.state:
            return False
        if self.empty_stack and config.stack:
            return False
        if self.counters is not None and tuple(config.counters) != tuple(self.counters):
            return False
        if self.at_least is not None and any(c < m for c, m in zip(config.counters, self.at_least)):
            return False
        return True


@dataclass(frozen=True)
class Verdict:
    """Reached(witness) ou ExhaustedWithinBounds(statistics)"""
    reached: bool
    witness: Tuple = ()
    final: Optional[Configuration] = None
    statistics: Dict[str, int] = field(default_factory=dict)

    @property
    def exhausted(self) -> bool:
        return not self.reached


@dataclass(frozen=True)
class Disagreement:
    """Caso em que um procedimento de decisão contradiz o explorador"""
    family: str
    seed: int
    procedure: str
    query: Tuple
    decided: bool
    explored: bool


@dataclass(frozen=True)
class HarnessResult:
    """Resumo de uma varredura de regressão"""
    family: str
    instances: int
    checked: int
    unconfirmed: int
    disagreements: Tuple[Disagreement, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.disagreements
