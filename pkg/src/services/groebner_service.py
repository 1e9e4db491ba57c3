import logging
from collections import deque
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from src.models.binomial import Binomial, MonomialOrder
from src.models.errors import NonBinomialError, PreconditionError
from src.models.linear import Vector, vec_add, vec_leq, vec_norm, vec_sub

logger = logging.getLogger(__name__)

PairVec = Tuple[Vector, Vector]
Generator = Union[Binomial, PairVec]


class GroebnerService:
    """Bases de Gröbner de ideais gerados por binômios puros x^u - x^v.

    Todos os coeficientes líderes são ±1, então S-binômios e reduções
    continuam sendo diferenças de monômios; nenhum coeficiente é guardado.
    """

    @staticmethod
    def _as_binomials(gens: Iterable[Generator], order: MonomialOrder) -> List[Binomial]:
        """Pares ou binômios orientados pela ordem"""
        binomios = []
        for g in gens:
            u, v = g.as_pair() if isinstance(g, Binomial) else g
            if len(u) != order.n_vars or len(v) != order.n_vars:
                raise PreconditionError.from_key('aridade_incompativel', esquerda=len(u), direita=order.n_vars)
            b = Binomial.oriented(u, v, order)
            if b is not None:
                binomios.append(b)
        return binomios

    @staticmethod
    def _sorted(basis: Iterable[Binomial], order: MonomialOrder) -> Tuple[Binomial, ...]:
        """Ordem canônica da base"""
        return tuple(sorted(set(basis), key=lambda g: (order.key(g.lead), order.key(g.trail))))

    @staticmethod
    def _conferir(g: Binomial, order: MonomialOrder) -> Binomial:
        """Garante binômio puro, líder maior que a cauda"""
        if not order.greater(g.lead, g.trail):
            raise NonBinomialError.from_key('binomio_invalido', detalhe=str(g))
        return g

    # ==================== REDUÇÃO ====================

    @staticmethod
    def reduce_monomial(w: Sequence[int], basis: Sequence[Binomial]) -> Vector:
        """Reescreve x^w com o primeiro líder que divide, até não haver nenhum.

        Cada passo aplica o binômio quantas vezes o líder divide w de uma vez,
        o que importa para os expoentes enormes do big_vector.
        """
        w = tuple(w)
        mudou = True
        while mudou:
            mudou = False
            for g in basis:
                if vec_leq(g.lead, w):
                    k = min(x // a for x, a in zip(w, g.lead) if a > 0)
                    w = tuple(x - k * a + k * c for x, a, c in zip(w, g.lead, g.trail))
                    mudou = True
                    break
        return w

    @staticmethod
    def normal_form(t: Union[Sequence[int], Binomial], basis: Sequence[Binomial],
                    order: MonomialOrder) -> Union[Vector, Optional[Binomial]]:
        """Forma normal de um monômio (vetor) ou de um binômio (None = Zero)"""
        base = GroebnerService._sorted(basis, order)
        if isinstance(t, Binomial):
            u = GroebnerService.reduce_monomial(t.lead, base)
            v = GroebnerService.reduce_monomial(t.trail, base)
            return Binomial.oriented(u, v, order)
        return GroebnerService.reduce_monomial(t, base)

    @staticmethod
    def s_binomial(g1: Binomial, g2: Binomial, order: MonomialOrder) -> Optional[Binomial]:
        """S-binômio de g1 e g2; None quando se anula"""
        mmc = tuple(max(a, b) for a, b in zip(g1.lead, g2.lead))
        u = vec_add(vec_sub(mmc, g1.lead), g1.trail)
        v = vec_add(vec_sub(mmc, g2.lead), g2.trail)
        return Binomial.oriented(u, v, order)

    @staticmethod
    def _coprimos(u: Vector, v: Vector) -> bool:
        """Líderes sem variável em comum"""
        return all(a == 0 or b == 0 for a, b in zip(u, v))

    # ==================== BUCHBERGER ====================

    @staticmethod
    def buchberger(gens: Iterable[Generator], order: MonomialOrder) -> Tuple[Binomial, ...]:
        """Base de Gröbner reduzida do ideal gerado por gens"""
        base = GroebnerService._as_binomials(gens, order)
        pares = deque((i, j) for j in range(len(base)) for i in range(j))
        s_pares = 0
        while pares:
            i, j = pares.popleft()
            g1, g2 = base[i], base[j]
            if GroebnerService._coprimos(g1.lead, g2.lead):
                continue
            s = GroebnerService.s_binomial(g1, g2, order)
            s_pares += 1
            if s is None:
                continue
            h = GroebnerService.normal_form(s, base, order)
            if h is None:
                continue
            base.append(GroebnerService._conferir(h, order))
            pares.extend((k, len(base) - 1) for k in range(len(base) - 1))

        reduzida = GroebnerService._reduce_basis(base, order)
        logger.debug("Buchberger (%s, %d variáveis): %d S-pares, base com %d binômios",
                     order.kind, order.n_vars, s_pares, len(reduzida))
        return reduzida

    @staticmethod
    def _reduce_basis(base: List[Binomial], order: MonomialOrder) -> Tuple[Binomial, ...]:
        """Minimaliza e depois reduz cada elemento pelos demais"""
        # minimal: nenhum líder divide outro
        candidatos = sorted(set(base), key=lambda g: (order.key(g.lead), order.key(g.trail)))
        minimal: List[Binomial] = []
        for g in candidatos:
            if not any(vec_leq(h.lead, g.lead) for h in minimal):
                minimal.append(g)
        reduzida = []
        for g in minimal:
            cauda = GroebnerService.reduce_monomial(g.trail, minimal)
            reduzida.append(GroebnerService._conferir(Binomial(g.lead, cauda), order))
        return GroebnerService._sorted(reduzida, order)

    @staticmethod
    def is_groebner(basis: Sequence[Binomial], order: MonomialOrder) -> bool:
        """Critério de Buchberger: todo S-binômio reduz a Zero"""
        base = GroebnerService._sorted(basis, order)
        for i, g1 in enumerate(base):
            for g2 in base[i + 1:]:
                s = GroebnerService.s_binomial(g1, g2, order)
                if s is not None and GroebnerService.normal_form(s, base, order) is not None:
                    return False
        return True

    # ==================== CONGRUÊNCIAS ====================

    @staticmethod
    @lru_cache(maxsize=1024)
    def _basis_for(pairs: Tuple[PairVec, ...], n_vars: int) -> Tuple[Binomial, ...]:
        """Base reduzida em cache pelos pares"""
        return GroebnerService.buchberger(pairs, MonomialOrder.grlex(n_vars))

    @staticmethod
    def congruence_basis(R: Iterable[PairVec], n_vars: int) -> Tuple[Binomial, ...]:
        """Base reduzida grlex de Cong(R)"""
        pares = tuple(sorted({(tuple(u), tuple(v)) for (u, v) in R}))
        return GroebnerService._basis_for(pares, n_vars)

    @staticmethod
    def congruence_member(R: Iterable[PairVec], s: Sequence[int], t: Sequence[int]) -> bool:
        """s ~ t em Cong(R) sse NF(x^s) = NF(x^t)"""
        s, t = tuple(s), tuple(t)
        if len(s) != len(t):
            raise PreconditionError.from_key('aridade_incompativel', esquerda=len(s), direita=len(t))
        if s == t:
            return True
        base = GroebnerService.congruence_basis(R, len(s))
        return GroebnerService.reduce_monomial(s, base) == GroebnerService.reduce_monomial(t, base)

    @staticmethod
    def eliminate(basis: Iterable[Generator], keep: Iterable[int], n_vars: int) -> Tuple[Binomial, ...]:
        """Sub-base de I ∩ Z[keep], calculada numa ordem de bloco que elimina o resto"""
        mantidas = set(keep)
        fora = tuple(i for i in range(n_vars) if i not in mantidas)
        if not fora:
            return GroebnerService._sorted(GroebnerService._as_binomials(basis, MonomialOrder.grlex(n_vars)),
                                           MonomialOrder.grlex(n_vars))
        ordem = MonomialOrder.block(n_vars, fora)
        completa = GroebnerService.buchberger(basis, ordem)
        return tuple(
            g for g in completa
            if all(g.lead[i] == 0 and g.trail[i] == 0 for i in fora)
        )

    @staticmethod
    def quotient_by_monomial(gens: Iterable[Generator], b: Sequence[int], n_vars: int) -> Tuple[Binomial, ...]:
        """Base de I : x^b via I ∩ (x^b) com variável marcadora t"""
        b = tuple(b)
        if not any(b):
            return GroebnerService.buchberger(gens, MonomialOrder.grlex(n_vars))
        marcados: List[PairVec] = []
        for g in gens:
            u, v = g.as_pair() if isinstance(g, Binomial) else g
            marcados.append((tuple(u) + (1,), tuple(v) + (1,)))
        marcados.append((b + (0,), b + (1,)))
        intersecao = GroebnerService.eliminate(marcados, range(n_vars), n_vars + 1)

        divididos: List[PairVec] = []
        for g in intersecao:
            u, v = vec_sub(g.lead[:n_vars], b), vec_sub(g.trail[:n_vars], b)
            if any(x < 0 for x in u + v):
                raise NonBinomialError.from_key('binomio_invalido', detalhe=f"{g} não é divisível por x^{list(b)}")
            divididos.append((u, v))
        return GroebnerService.buchberger(divididos, MonomialOrder.grlex(n_vars))

    # ==================== ORÁCULO ====================

    @staticmethod
    def rewrite_closure(R: Iterable[PairVec], s: Sequence[int], max_norm: int) -> FrozenSet[Vector]:
        """Vetores alcançáveis a partir de s aplicando os pares nos dois sentidos, norma <= max_norm"""
        regras = set()
        for (u, v) in R:
            regras.add((tuple(u), tuple(v)))
            regras.add((tuple(v), tuple(u)))
        inicio = tuple(s)
        vistos = {inicio}
        fila = deque([inicio])
        while fila:
            w = fila.popleft()
            for (u, v) in regras:
                if vec_leq(u, w):
                    x = vec_add(vec_sub(w, u), v)
                    if x not in vistos and vec_norm(x) <= max_norm:
                        vistos.add(x)
                        fila.append(x)
        return frozenset(vistos)
