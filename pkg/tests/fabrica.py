from src.models.machine import Machine, Pvas, PvasTransition, StackOp, Transition
from src.services.normalization_service import NormalizationService


def _op(texto):
    if texto is None:
        return StackOp()
    kind, simbolo = texto.split()
    return StackOp(kind, simbolo)


def maquina(transicoes, dimension=1, closure=True, estados=()):
    """Máquina a partir de (origem, efeito, op, destino); op é None, 'push x' ou 'pop x'"""
    lista = []
    for (origem, efeito, op, destino) in transicoes:
        efeito = efeito if isinstance(efeito, tuple) else (efeito,)
        lista.append(Transition(origem, efeito, _op(op), destino))
    todos = {t.source for t in lista} | {t.target for t in lista} | set(estados)
    alfabeto = {t.op.symbol for t in lista if not t.is_internal}
    m = Machine(dimension, tuple(todos), tuple(alfabeto), tuple(lista))
    return NormalizationService.bidirected_closure(m) if closure else m


def pvas(transicoes, dimension=1):
    """PVAS bidirecionado a partir de (u, v, op)"""
    lista = [PvasTransition(tuple(u), tuple(v), _op(op)) for (u, v, op) in transicoes]
    alfabeto = {t.op.symbol for t in lista if not t.op.is_internal}
    return NormalizationService.pvas_closure(Pvas(dimension, tuple(alfabeto), tuple(lista)))
