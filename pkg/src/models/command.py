from dataclasses import dataclass, field
from typing import Optional

from config import DEFAULT_BOUNDS, GENERATOR_CONFIG, SATURATION_CONFIG
from src.models.explorer import Bounds

COMMANDS = ("reach1d", "cover", "zreach", "reach", "cong", "oracle", "gen", "info")
FAMILIES = ("valley", "random")


@dataclass(frozen=True)
class GenSpec:
    """Parâmetros de geração de instância"""
    family: str = "random"
    m_bits: int = GENERATOR_CONFIG["m_bits"]
    seed: int = GENERATOR_CONFIG["seed"]
    states: int = GENERATOR_CONFIG["states"]
    symbols: int = GENERATOR_CONFIG["symbols"]
    transitions: int = GENERATOR_CONFIG["transitions"]
    max_effect: int = GENERATOR_CONFIG["max_effect"]
    dimension: int = 1
    output: Optional[str] = None


@dataclass(frozen=True)
class Command:
    """Um comando da linha de comando com todos os parâmetros já lidos"""
    name: str
    input: Optional[str] = None
    source: Optional[str] = None
    target: Optional[str] = None
    max_level: int = SATURATION_CONFIG["max_level"]
    counter_max: int = DEFAULT_BOUNDS["counter_max"]
    stack_max: int = DEFAULT_BOUNDS["stack_max"]
    node_max: int = DEFAULT_BOUNDS["node_max"]
    trace: bool = False
    basis: Optional[str] = None
    member: Optional[str] = None
    semilinear: bool = False
    oracle: bool = False
    gen: GenSpec = field(default_factory=GenSpec)

    @property
    def bounds(self) -> Bounds:
        return Bounds(self.counter_max, self.stack_max, self.node_max)

    @property
    def needs_instance(self) -> bool:
        return self.name in ("reach1d", "cover", "zreach", "reach", "oracle", "info")

    @property
    def needs_states(self) -> bool:
        return self.name in ("reach1d", "cover", "zreach", "reach", "oracle")
