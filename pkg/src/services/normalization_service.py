import logging
from typing import Callable, List, Set, Tuple

from src.models.errors import PreconditionError
from src.models.explorer import Move
from src.models.machine import (
    Machine, PVAS_STATE, Pvas, PvasTransition, StackOp, Transition, Vector
)
from src.validators.machine_validators import MachineValidator

logger = logging.getLogger(__name__)


class NormalizationService:
    """Formas normais de máquinas e a codificação PVASS -> PVAS"""

    @staticmethod
    def bidirected_closure(m: Machine) -> Machine:
        """Menor máquina bidirecionada que contém as transições de m"""
        return m.with_transitions(m.transitions + tuple(t.reverse() for t in m.transitions))

    @staticmethod
    def _fresh_namer(m: Machine) -> Callable[[str, str], str]:
        """Gera nomes de estado ainda não usados"""
        usados: Set[str] = set(m.states)
        contador = [0]

        def novo(origem: str, destino: str) -> str:
            while True:
                contador[0] += 1
                nome = f"{origem}~{destino}#{contador[0]}"
                if nome not in usados:
                    usados.add(nome)
                    return nome
        return novo

    @staticmethod
    def _rewrite(m: Machine, precisa: Callable[[Transition], bool],
                 cadeia: Callable[[Transition, Callable[[str, str], str]], List[Transition]],
                 alfabeto=None) -> Machine:
        """Substitui cada transição marcada por uma cadeia; a reversa ganha a cadeia invertida"""
        novo = NormalizationService._fresh_namer(m)
        presentes = set(m.transitions)
        feitas: Set[Transition] = set()
        saida: List[Transition] = []
        estados: List[str] = []
        for t in m.transitions:
            if not precisa(t):
                saida.append(t)
                continue
            if t in feitas:
                continue
            passos = cadeia(t, novo)
            saida.extend(passos)
            estados.extend(p.target for p in passos[:-1])
            feitas.add(t)
            if t.reverse() in presentes:
                feitas.add(t.reverse())
                saida.extend(p.reverse() for p in passos)
        return m.with_transitions(saida, states=estados, alphabet=alfabeto)

    @staticmethod
    def separate_counter_stack(m: Machine) -> Machine:
        """Divide transições que mexem no contador e na pilha em duas, por um estado novo"""
        def cadeia(t: Transition, novo) -> List[Transition]:
            meio = novo(t.source, t.target)
            return [
                Transition(t.source, t.effect, StackOp(), meio),
                Transition(meio, m.zero(), t.op, t.target),
            ]

        resultado = NormalizationService._rewrite(
            m, lambda t: not t.is_internal and not t.is_silent, cadeia
        )
        logger.debug("separação: %d -> %d transições", len(m.transitions), len(resultado.transitions))
        return resultado

    @staticmethod
    def code_word(indice: int, k: int) -> str:
        """Palavra a b^i a b^(k-i) a do i-ésimo símbolo (1..k)"""
        return "a" + "b" * indice + "a" + "b" * (k - indice) + "a"

    @staticmethod
    def binarize_alphabet(m: Machine) -> Machine:
        """Reescreve a pilha sobre {a, b}; identidade quando |Γ| <= 2"""
        k = len(m.alphabet)
        if k <= 2:
            return m
        codigo = {s: NormalizationService.code_word(i + 1, k) for i, s in enumerate(m.alphabet)}

        def cadeia(t: Transition, novo) -> List[Transition]:
            palavra = codigo[t.op.symbol]
            letras = palavra if t.op.kind == "push" else palavra[::-1]
            passos = []
            atual = t.source
            for j, letra in enumerate(letras):
                proximo = t.target if j == len(letras) - 1 else novo(t.source, t.target)
                efeito = t.effect if j == 0 else m.zero()
                passos.append(Transition(atual, efeito, StackOp(t.op.kind, letra), proximo))
                atual = proximo
            return passos

        return NormalizationService._rewrite(m, lambda t: not t.is_internal, cadeia, alfabeto=("a", "b"))

    @staticmethod
    def normalize_for_onedim(m: Machine) -> Machine:
        """Fecho bidirecionado seguido de separação contador/pilha"""
        return NormalizationService.separate_counter_stack(NormalizationService.bidirected_closure(m))

    @staticmethod
    def state_vector(m: Machine, estado: str) -> Vector:
        """(i, n - i) para o i-ésimo estado"""
        i = m.index_of(estado)
        return (i, m.n_states - i)

    @staticmethod
    def pvass_to_pvas(m: Machine, s: str, t: str) -> Tuple[Pvas, Vector, Vector]:
        """Codifica o estado q_i nos contadores extras (i, n - i)"""
        erros = MachineValidator.check_bidirected(m) + MachineValidator.check_states(m, s, t)
        if erros:
            raise PreconditionError(erros[0], erros[1:])
        transicoes = []
        for tr in m.transitions:
            u = tuple(max(-w, 0) for w in tr.effect) + NormalizationService.state_vector(m, tr.source)
            v = tuple(max(w, 0) for w in tr.effect) + NormalizationService.state_vector(m, tr.target)
            transicoes.append(PvasTransition(u, v, tr.op))
        pvas = Pvas(m.dimension + 2, m.alphabet, tuple(transicoes))
        origem = m.zero() + NormalizationService.state_vector(m, s)
        alvo = m.zero() + NormalizationService.state_vector(m, t)
        return pvas, origem, alvo

    @staticmethod
    def machine_to_moves(m: Machine) -> List[Move]:
        """Passos com guarda para o explorador"""
        return [
            Move(t.source, tuple(max(-w, 0) for w in t.effect), t.effect, t.op, t.target, t)
            for t in m.transitions
        ]

    @staticmethod
    def pvas_to_moves(p: Pvas) -> List[Move]:
        """Subtrai u primeiro (guarda x >= u) e depois soma v"""
        return [
            Move(PVAS_STATE, t.u, tuple(b - a for a, b in zip(t.u, t.v)), t.op, PVAS_STATE, t)
            for t in p.transitions
        ]

    @staticmethod
    def pvas_closure(p: Pvas) -> Pvas:
        """Acrescenta a inversa de cada transição"""
        return Pvas(p.dimension, p.alphabet, p.transitions + tuple(t.reverse() for t in p.transitions))
