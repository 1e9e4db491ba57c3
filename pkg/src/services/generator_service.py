import logging
import random
from typing import List

from config import GENERATOR_CONFIG
from src.models.command import GenSpec
from src.models.congruence import CongruenceBasis
from src.models.errors import PreconditionError
from src.models.machine import Machine, Pvas, PvasTransition, StackOp, Transition
from src.services.normalization_service import NormalizationService

logger = logging.getLogger(__name__)


class GeneratorService:
    """Famílias de instâncias: vale exponencial e aleatórias com semente"""

    @staticmethod
    def _contador_binario(prefixo: str, m_bits: int, peso: int) -> List[Transition]:
        """Gadget que aplica peso 2^m_bits vezes usando a pilha como contador binário.

        O nível i chama o nível i-1 duas vezes; o símbolo empilhado guarda o
        ponto de retorno (primeira ou segunda chamada).
        """
        def entrada(i): return f"{prefixo}_in{i}"

        def saida(i): return f"{prefixo}_out{i}"

        def meio(i): return f"{prefixo}_mid{i}"

        transicoes = [Transition(entrada(0), (peso,), StackOp(), saida(0))]
        for i in range(1, m_bits + 1):
            primeira, segunda = f"{prefixo}{i}a", f"{prefixo}{i}b"
            transicoes += [
                Transition(entrada(i), (0,), StackOp.push(primeira), entrada(i - 1)),
                Transition(saida(i - 1), (0,), StackOp.pop(primeira), meio(i)),
                Transition(meio(i), (0,), StackOp.push(segunda), entrada(i - 1)),
                Transition(saida(i - 1), (0,), StackOp.pop(segunda), saida(i)),
            ]
        return transicoes

    @staticmethod
    def gen_valley(m_bits: int) -> Machine:
        """Máquina 1-dimensional em que p alcança q descendo e subindo 2^m_bits"""
        if m_bits < 1:
            raise PreconditionError.from_key('comando_invalido', comando=f"gen valley m_bits={m_bits}")
        transicoes = [
            # bombeia em p e desconta em q, empilhando s a cada unidade
            Transition("p", (0,), StackOp.push("s"), "p'"),
            Transition("p'", (1,), StackOp(), "p"),
            Transition("q", (0,), StackOp.push("s"), "q'"),
            Transition("q'", (1,), StackOp(), "q"),
        ]
        transicoes += GeneratorService._contador_binario("d", m_bits, -1)
        transicoes += GeneratorService._contador_binario("i", m_bits, 1)
        transicoes += [
            Transition("p", (0,), StackOp(), f"d_in{m_bits}"),
            Transition(f"d_out{m_bits}", (0,), StackOp(), f"i_in{m_bits}"),
            Transition(f"i_out{m_bits}", (0,), StackOp(), "q"),
        ]
        estados = {t.source for t in transicoes} | {t.target for t in transicoes}
        alfabeto = {t.op.symbol for t in transicoes if not t.is_internal}
        m = Machine(1, tuple(estados), tuple(alfabeto), tuple(transicoes))
        fechada = NormalizationService.bidirected_closure(m)
        logger.info("vale m=%d: %d estados, %d transições", m_bits, fechada.n_states, len(fechada.transitions))
        return fechada

    @staticmethod
    def _operacao(rng: random.Random, simbolos: List[str]) -> StackOp:
        """Operação de pilha sorteada"""
        tipo = rng.choice(("internal", "push", "pop")) if simbolos else "internal"
        if tipo == "internal":
            return StackOp()
        return StackOp(tipo, rng.choice(simbolos))

    @staticmethod
    def gen_random(parametros: GenSpec) -> Machine:
        """PVASS bidirecionado aleatório, determinístico pela semente"""
        rng = random.Random(parametros.seed)
        estados = [f"q{i}" for i in range(parametros.states)]
        simbolos = [f"s{i}" for i in range(parametros.symbols)]
        transicoes = []
        for _ in range(parametros.transitions):
            origem, destino = rng.choice(estados), rng.choice(estados)
            efeito = tuple(
                rng.randint(-parametros.max_effect, parametros.max_effect) for _ in range(parametros.dimension)
            )
            transicoes.append(Transition(origem, efeito, GeneratorService._operacao(rng, simbolos), destino))
        m = Machine(parametros.dimension, tuple(estados), tuple(simbolos), tuple(transicoes))
        return NormalizationService.bidirected_closure(m)

    @staticmethod
    def gen_random_pvas(seed: int, dimension: int = 1, symbols: int = 1, pairs: int = 2,
                        max_effect: int = GENERATOR_CONFIG["max_effect"]) -> Pvas:
        """PVAS bidirecionado aleatório com `pairs` transições e suas inversas"""
        rng = random.Random(seed)
        simbolos = [f"s{i}" for i in range(symbols)]
        transicoes = []
        for _ in range(pairs):
            u = tuple(rng.randint(0, max_effect) for _ in range(dimension))
            v = tuple(rng.randint(0, max_effect) for _ in range(dimension))
            transicoes.append(PvasTransition(u, v, GeneratorService._operacao(rng, simbolos)))
        return NormalizationService.pvas_closure(Pvas(dimension, tuple(simbolos), tuple(transicoes)))

    @staticmethod
    def gen_random_basis(seed: int, dimension: int = 1, pairs: int = 2, max_entry: int = 3) -> CongruenceBasis:
        """Base de congruência aleatória; pares triviais somem na normalização"""
        rng = random.Random(seed)
        pares = [
            (tuple(rng.randint(0, max_entry) for _ in range(dimension)),
             tuple(rng.randint(0, max_entry) for _ in range(dimension)))
            for _ in range(pairs)
        ]
        return CongruenceBasis(dimension, tuple(pares))

    @staticmethod
    def generate(parametros: GenSpec) -> Machine:
        """Despacha pela família"""
        if parametros.family == "valley":
            return GeneratorService.gen_valley(parametros.m_bits)
        return GeneratorService.gen_random(parametros)
