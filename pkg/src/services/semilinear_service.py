import logging
import re
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from config import CONGRUENCE_CONFIG, MENSAGENS, REGEX_PATTERNS
from src.models.errors import GuardViolationError, InstanceFormatError, PreconditionError
from src.models.linear import (
    LinearSet, SemilinearSet, Vector, unit, vec_add, vec_leq, vec_norm, vec_sub
)
from src.services.diophantine_service import DiophantineService

logger = logging.getLogger(__name__)

PairVec = Tuple[Vector, Vector]


def _combine(periodos: Sequence[Vector], coeficientes: Sequence[int], k: int) -> Vector:
    total = [0] * k
    for p, c in zip(periodos, coeficientes):
        if c:
            for i in range(k):
                total[i] += c * p[i]
    return tuple(total)


class SemilinearService:
    """Álgebra de conjuntos semilineares usada pela saturação de congruências"""

    @staticmethod
    def identity(d: int) -> SemilinearSet:
        """Δ = (0, 0) + {(e_i, e_i)}*"""
        return SemilinearSet(2 * d, (LinearSet((0,) * (2 * d), tuple(unit(d, i) * 2 for i in range(d))),))

    @staticmethod
    def _check_arity(S: SemilinearSet, k: int):
        """Erro se a aridade não bate"""
        if S.arity != k:
            raise PreconditionError.from_key('aridade_incompativel', esquerda=S.arity, direita=k)

    # ==================== PERTINÊNCIA ====================

    @staticmethod
    def _caixa(alvo: Vector, limite: int) -> int:
        """Número de vetores em [0, alvo], parando ao passar de limite"""
        total = 1
        for x in alvo:
            total *= x + 1
            if total > limite:
                break
        return total

    @staticmethod
    def _alcanca(alvo: Vector, periodos: Tuple[Vector, ...]) -> bool:
        """Busca em profundidade por somas de períodos dentro da caixa [0, alvo]"""
        zero = (0,) * len(alvo)
        vistos = {zero}
        pilha = [zero]
        while pilha:
            v = pilha.pop()
            for p in periodos:
                w = vec_add(v, p)
                if w == alvo:
                    return True
                if w not in vistos and vec_leq(w, alvo):
                    vistos.add(w)
                    pilha.append(w)
        return False

    @staticmethod
    @lru_cache(maxsize=65536)
    def _member_linear(base: Vector, periodos: Tuple[Vector, ...], v: Vector) -> bool:
        """Pertinência em um conjunto linear, em cache"""
        diferenca = vec_sub(v, base)
        if any(x < 0 for x in diferenca):
            return False
        if not any(diferenca):
            return True
        # períodos são não negativos: só entram os que cabem na diferença
        uteis = tuple(p for p in periodos if vec_leq(p, diferenca))
        if not uteis:
            return False
        if any(x and not any(p[i] for p in uteis) for i, x in enumerate(diferenca)):
            return False
        limite = CONGRUENCE_CONFIG["member_box_max"]
        if SemilinearService._caixa(diferenca, limite) <= limite:
            return SemilinearService._alcanca(diferenca, uteis)
        linhas, alvo = [], []
        for i, x in enumerate(diferenca):
            linha = tuple(p[i] for p in uteis)
            if any(linha):
                linhas.append(linha)
                alvo.append(x)
        return DiophantineService.minimal_inhomogeneous(linhas, alvo, cols=len(uteis)).feasible

    @staticmethod
    def member_linear(L: LinearSet, v: Sequence[int]) -> bool:
        """v ∈ L"""
        return SemilinearService._member_linear(L.base, L.periods, tuple(v))

    @staticmethod
    def member(S: SemilinearSet, v: Sequence[int]) -> bool:
        """v ∈ base + periods* para algum componente"""
        v = tuple(v)
        if len(v) != S.arity:
            raise PreconditionError.from_key('aridade_incompativel', esquerda=S.arity, direita=len(v))
        return any(SemilinearService._member_linear(c.base, c.periods, v) for c in S.components)

    # ==================== OPERAÇÕES DA SATURAÇÃO ====================

    @staticmethod
    def intersect_upset(S: SemilinearSet, c: Sequence[int]) -> SemilinearSet:
        """S ∩ (c + N^k)"""
        c = tuple(c)
        SemilinearService._check_arity(S, len(c))
        componentes: List[LinearSet] = []
        for comp in S.components:
            deficit = vec_sub(c, comp.base)
            indices = [i for i, x in enumerate(deficit) if x > 0]
            if not indices:
                componentes.append(comp)
                continue
            if comp.is_singleton:
                continue
            A = [[p[i] for p in comp.periods] for i in indices]
            lambdas = DiophantineService.minimal_at_least(A, [deficit[i] for i in indices], cols=len(comp.periods))
            for lam in lambdas:
                base = vec_add(comp.base, _combine(comp.periods, lam, S.arity))
                componentes.append(LinearSet(base, comp.periods))
        return SemilinearSet(S.arity, tuple(componentes))

    @staticmethod
    def translate(S: SemilinearSet, delta: Sequence[int], guard_non_neg: bool = True) -> SemilinearSet:
        """Desloca todas as bases por delta; com guarda, base negativa é erro"""
        delta = tuple(delta)
        SemilinearService._check_arity(S, len(delta))
        componentes = []
        for comp in S.components:
            base = vec_add(comp.base, delta)
            if guard_non_neg and any(x < 0 for x in base):
                raise GuardViolationError.from_key('guarda_translacao', base=base)
            componentes.append(LinearSet(base, comp.periods))
        return SemilinearSet(S.arity, tuple(componentes))

    @staticmethod
    def compose(S1: SemilinearSet, S2: SemilinearSet) -> SemilinearSet:
        """{(x, z) : ∃y (x, y) ∈ S1 e (y, z) ∈ S2}"""
        if S1.arity != S2.arity or S1.arity % 2:
            raise PreconditionError.from_key('aridade_incompativel', esquerda=S1.arity, direita=S2.arity)
        componentes: List[LinearSet] = []
        for c1 in S1.components:
            for c2 in S2.components:
                componentes.extend(SemilinearService._compose_linear(c1, c2, S1.arity // 2))
        return SemilinearSet(S1.arity, tuple(componentes))

    @staticmethod
    @lru_cache(maxsize=16384)
    def _compose_linear(c1: LinearSet, c2: LinearSet, d: int) -> Tuple[LinearSet, ...]:
        """Composição de dois conjuntos lineares pelas coordenadas do meio"""
        m1, m2 = len(c1.periods), len(c2.periods)
        # [P1_y | -P2_y] (λ, μ) = b2_y - b1_y
        A = [
            tuple(p[d + i] for p in c1.periods) + tuple(-p[i] for p in c2.periods)
            for i in range(d)
        ]
        rhs = vec_sub(c2.base[:d], c1.base[d:])
        if m1 + m2 == 0:
            if any(rhs):
                return ()
            return (LinearSet(c1.base[:d] + c2.base[d:]),)
        solucao = DiophantineService.minimal_inhomogeneous(A, rhs, cols=m1 + m2)
        if not solucao.feasible:
            return ()

        def imagem(z: Vector) -> Vector:
            x = _combine([p[:d] for p in c1.periods], z[:m1], d)
            w = _combine([p[d:] for p in c2.periods], z[m1:], d)
            return x + w

        brutos = LinearSet((0,) * (2 * d), tuple(imagem(h) for h in solucao.homogeneous))
        periodos = SemilinearService._reduzir(brutos.periods)
        return tuple(
            LinearSet(vec_add(c1.base[:d] + c2.base[d:], imagem(z)), periodos)
            for z in solucao.minimals
        )

    @staticmethod
    def to_congruence_basis(S: SemilinearSet) -> Tuple[PairVec, ...]:
        """F_L = {b, b + p | p ∈ P} de cada componente, lido como pares"""
        d = S.arity // 2
        pares = set()
        for comp in S.components:
            for v in (comp.base,) + tuple(vec_add(comp.base, p) for p in comp.periods):
                pares.add((v[:d], v[d:]))
        return tuple(sorted(pares))

    # ==================== UNIÃO E PODA ====================

    @staticmethod
    def union(*conjuntos: SemilinearSet) -> SemilinearSet:
        """União sem poda"""
        aridades = {S.arity for S in conjuntos}
        if len(aridades) != 1:
            raise PreconditionError.from_key('aridade_incompativel', esquerda=min(aridades), direita=max(aridades))
        return SemilinearSet(aridades.pop(), tuple(c for S in conjuntos for c in S.components))

    @staticmethod
    def is_subsumed(L1: LinearSet, L2: LinearSet) -> bool:
        """Inclusão sintática segura: base de L1 em L2 e períodos de L1 em P2*"""
        if not SemilinearService._member_linear(L2.base, L2.periods, L1.base):
            return False
        zero = (0,) * L2.arity
        return all(SemilinearService._member_linear(zero, L2.periods, p) for p in L1.periods)

    @staticmethod
    @lru_cache(maxsize=16384)
    def _reduzir(periodos: Tuple[Vector, ...]) -> Tuple[Vector, ...]:
        """Remove períodos gerados pelos demais"""
        # p só pode ser soma de períodos de norma menor
        restantes = list(periodos)
        for p in sorted(periodos, key=lambda q: (-vec_norm(q), q)):
            outros = tuple(q for q in restantes if q != p)
            if outros and SemilinearService._member_linear((0,) * len(p), outros, p):
                restantes.remove(p)
        return tuple(restantes)

    @staticmethod
    def reduce_periods(L: LinearSet) -> LinearSet:
        """Mesmo conjunto linear, sem períodos que são combinações em N dos demais"""
        return LinearSet(L.base, SemilinearService._reduzir(L.periods))

    @staticmethod
    def prune(S: SemilinearSet) -> SemilinearSet:
        """Interreduz os períodos e remove componentes contidos em outro componente"""
        S = SemilinearSet(S.arity, tuple(SemilinearService.reduce_periods(c) for c in S.components))
        restantes = list(S.components)
        for comp in S.components:
            if any(outro != comp and SemilinearService.is_subsumed(comp, outro) for outro in restantes):
                restantes.remove(comp)
        return SemilinearSet(S.arity, tuple(restantes))

    @staticmethod
    def enumerate_members(S: SemilinearSet, max_norm: int) -> Tuple[Vector, ...]:
        """Todos os membros com norma-1 até max_norm"""
        membros = set()
        for comp in S.components:
            if any(x < 0 for x in comp.base) or vec_norm(comp.base) > max_norm:
                continue
            pilha = [comp.base]
            vistos = {comp.base}
            while pilha:
                v = pilha.pop()
                membros.add(v)
                for p in comp.periods:
                    w = vec_add(v, p)
                    if w not in vistos and vec_norm(w) <= max_norm:
                        vistos.add(w)
                        pilha.append(w)
        return tuple(sorted(membros))

    # ==================== TEXTO ====================

    @staticmethod
    def _format_vector(v: Vector) -> str:
        """Vetor como inteiros separados por vírgula"""
        return ",".join(str(x) for x in v) if v else "()"

    @staticmethod
    def format_semilinear(S: SemilinearSet) -> str:
        """Uma linha por componente: `base | p1 ; p2 ; ...`"""
        linhas = []
        for comp in S.components:
            periodos = " ; ".join(SemilinearService._format_vector(p) for p in comp.periods)
            linhas.append(f"{SemilinearService._format_vector(comp.base)} | {periodos}".rstrip())
        return "\n".join(linhas)

    @staticmethod
    def _parse_vector(texto: str, linha: int) -> Vector:
        """Inverso de _format_vector; erro aponta a linha"""
        texto = texto.strip()
        if texto == "()":
            return ()
        if not re.match(REGEX_PATTERNS["vector"], texto):
            raise InstanceFormatError(MENSAGENS['json_invalido'] + f": vetor '{texto}'", position=(linha, 1))
        return tuple(int(x) for x in texto.split(","))

    @staticmethod
    def parse_semilinear(texto: str, arity: Optional[int] = None) -> SemilinearSet:
        """Inverso de format_semilinear; linhas em branco são ignoradas"""
        componentes = []
        for n, linha in enumerate(texto.splitlines(), start=1):
            if not linha.strip():
                continue
            if "|" not in linha:
                raise InstanceFormatError(MENSAGENS['json_invalido'] + ": falta '|'", position=(n, 1))
            base_txt, periodos_txt = linha.split("|", 1)
            base = SemilinearService._parse_vector(base_txt, n)
            periodos = tuple(
                SemilinearService._parse_vector(p, n) for p in periodos_txt.split(";") if p.strip()
            )
            componentes.append(LinearSet(base, periodos))
        if not componentes:
            if arity is None:
                raise InstanceFormatError(MENSAGENS['json_invalido'] + ": conjunto vazio sem aridade", position=(1, 1))
            return SemilinearSet.empty(arity)
        aridade = componentes[0].arity if arity is None else arity
        return SemilinearSet(aridade, tuple(componentes))
