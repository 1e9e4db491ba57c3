from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

Vector = Tuple[int, ...]

INTERNAL = "internal"
PUSH = "push"
POP = "pop"


@dataclass(frozen=True, order=True)
class StackOp:
    """Operação de pilha: push σ, pop σ ou interna"""
    kind: str = INTERNAL
    symbol: Optional[str] = None

    def __post_init__(self):
        if self.kind not in (INTERNAL, PUSH, POP):
            raise ValueError(f"operação de pilha desconhecida: {self.kind}")
        if (self.kind == INTERNAL) != (self.symbol is None):
            raise ValueError("push/pop exigem símbolo; interna não aceita símbolo")

    @classmethod
    def push(cls, symbol: str) -> "StackOp":
        return cls(PUSH, symbol)

    @classmethod
    def pop(cls, symbol: str) -> "StackOp":
        return cls(POP, symbol)

    @property
    def is_internal(self) -> bool:
        return self.kind == INTERNAL

    def inverse(self) -> "StackOp":
        """push σ <-> pop σ; interna é auto-inversa"""
        if self.kind == PUSH:
            return StackOp(POP, self.symbol)
        if self.kind == POP:
            return StackOp(PUSH, self.symbol)
        return self

    def sort_key(self) -> Tuple[int, str]:
        return ({INTERNAL: 0, PUSH: 1, POP: 2}[self.kind], self.symbol or "")

    def to_dict(self):
        if self.kind == INTERNAL:
            return INTERNAL
        return {self.kind: self.symbol}

    @classmethod
    def from_dict(cls, dados) -> "StackOp":
        if dados == INTERNAL:
            return cls()
        if isinstance(dados, dict) and len(dados) == 1:
            (kind, symbol), = dados.items()
            if kind in (PUSH, POP) and isinstance(symbol, str):
                return cls(kind, symbol)
        raise ValueError(f"operação de pilha inválida: {dados!r}")

    def __str__(self) -> str:
        if self.kind == INTERNAL:
            return "ε"
        return f"{self.kind} {self.symbol}"


@dataclass(frozen=True)
class Transition:
    """Transição (origem, efeito, operação de pilha, destino)"""
    source: str
    effect: Vector
    op: StackOp
    target: str

    def reverse(self) -> "Transition":
        """Transição inversa"""
        return Transition(self.target, tuple(-x for x in self.effect), self.op.inverse(), self.source)

    @property
    def is_internal(self) -> bool:
        return self.op.is_internal

    @property
    def is_silent(self) -> bool:
        """Efeito nulo no contador"""
        return not any(self.effect)

    def sort_key(self):
        return (self.source, self.target, self.op.sort_key(), self.effect)

    def to_dict(self) -> Dict:
        return {
            'from': self.source,
            'effect': list(self.effect),
            'op': self.op.to_dict(),
            'to': self.target
        }

    def __str__(self) -> str:
        return f"{self.source} --{list(self.effect)}/{self.op}--> {self.target}"


@dataclass(frozen=True)
class Machine:
    """PVASS d-dimensional; estados, alfabeto e transições em ordem canônica"""
    dimension: int
    states: Tuple[str, ...]
    alphabet: Tuple[str, ...]
    transitions: Tuple[Transition, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, 'states', tuple(sorted(set(self.states))))
        object.__setattr__(self, 'alphabet', tuple(sorted(set(self.alphabet))))
        ts = {Transition(t.source, tuple(int(x) for x in t.effect), t.op, t.target) for t in self.transitions}
        object.__setattr__(self, 'transitions', tuple(sorted(ts, key=Transition.sort_key)))

    @property
    def n_states(self) -> int:
        return len(self.states)

    def index_of(self, state: str) -> int:
        """Índice 1..n do estado na ordem canônica"""
        return self.states.index(state) + 1

    def internal_transitions(self) -> List[Transition]:
        return [t for t in self.transitions if t.is_internal]

    def push_transitions(self) -> List[Transition]:
        return [t for t in self.transitions if t.op.kind == PUSH]

    def pop_transitions(self) -> List[Transition]:
        return [t for t in self.transitions if t.op.kind == POP]

    def with_transitions(self, transitions: Iterable[Transition],
                         states: Iterable[str] = (), alphabet: Optional[Iterable[str]] = None) -> "Machine":
        """Cópia com novas transições (e estados/alfabeto extras)"""
        return Machine(
            self.dimension,
            tuple(self.states) + tuple(states),
            tuple(self.alphabet if alphabet is None else alphabet),
            tuple(transitions)
        )

    def zero(self) -> Vector:
        return (0,) * self.dimension

    def to_dict(self) -> Dict:
        return {
            'dimension': self.dimension,
            'states': list(self.states),
            'alphabet': list(self.alphabet),
            'transitions': [t.to_dict() for t in self.transitions]
        }

    @classmethod
    def from_dict(cls, dados: Dict) -> "Machine":
        """Cria a máquina a partir do dicionário já validado"""
        transicoes = [
            Transition(
                source=t['from'],
                effect=tuple(t['effect']),
                op=StackOp.from_dict(t['op']),
                target=t['to']
            ) for t in dados.get('transitions', [])
        ]
        return cls(
            dimension=int(dados['dimension']),
            states=tuple(dados['states']),
            alphabet=tuple(dados['alphabet']),
            transitions=tuple(transicoes)
        )


@dataclass(frozen=True)
class PvasTransition:
    """Transição de PVAS: subtrai u, soma v e aplica a operação de pilha"""
    u: Vector
    v: Vector
    op: StackOp

    def __post_init__(self):
        if any(x < 0 for x in self.u) or any(x < 0 for x in self.v):
            raise ValueError("u e v devem ser não negativos")

    def reverse(self) -> "PvasTransition":
        return PvasTransition(self.v, self.u, self.op.inverse())

    def sort_key(self):
        return (self.op.sort_key(), self.u, self.v)

    def __str__(self) -> str:
        return f"-{list(self.u)} +{list(self.v)} / {self.op}"


@dataclass(frozen=True)
class Pvas:
    """PVAS de um único estado"""
    dimension: int
    alphabet: Tuple[str, ...]
    transitions: Tuple[PvasTransition, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, 'alphabet', tuple(sorted(set(self.alphabet))))
        ts = set(self.transitions)
        object.__setattr__(self, 'transitions', tuple(sorted(ts, key=PvasTransition.sort_key)))

    def internal_transitions(self) -> List[PvasTransition]:
        return [t for t in self.transitions if t.op.is_internal]

    def push_transitions(self) -> List[PvasTransition]:
        return [t for t in self.transitions if t.op.kind == PUSH]

    def pop_transitions(self) -> List[PvasTransition]:
        return [t for t in self.transitions if t.op.kind == POP]


@dataclass(frozen=True)
class Configuration:
    """Configuração (estado, contadores, pilha com topo à direita)"""
    state: str
    counters: Vector
    stack: Tuple[str, ...] = ()

    @property
    def height(self) -> int:
        return len(self.stack)

    def __str__(self) -> str:
        return f"({self.state}, {list(self.counters)}, {''.join(self.stack) or 'ε'})"


PVAS_STATE = "•"
