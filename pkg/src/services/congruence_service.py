import logging
from functools import lru_cache
from typing import List, Optional, Tuple

from config import CONGRUENCE_CONFIG
from src.models.congruence import CongruenceBasis, Region
from src.models.linear import (
    LinearSet, SemilinearSet, Vector, minimal_antichain, unit, vec_add, vec_norm
)
from src.services.diophantine_service import DiophantineService
from src.services.groebner_service import GroebnerService
from src.services.semilinear_service import SemilinearService

logger = logging.getLogger(__name__)

PairVec = Tuple[Vector, Vector]


class CongruenceService:
    """Conversão de congruências finitamente geradas em conjuntos semilineares"""

    @staticmethod
    def generating_vectors(R: CongruenceBasis) -> List[Vector]:
        """V = sym(R) ∪ {(e_i, e_i)} como vetores de N^{2d}"""
        d = R.dimension
        return [u + v for (u, v) in R.pairs] + [unit(d, i) * 2 for i in range(d)]

    @staticmethod
    def big_vector(R: CongruenceBasis) -> Tuple[Vector, Tuple[PairVec, ...]]:
        """(b, M) com Q_{b↑} = M*.

        M são os minimais não nulos de ⟨V⟩ ∩ N^{2d}. Como V contém a diagonal,
        (x, y) ∈ ⟨V⟩ sse y - x pertence ao reticulado gerado pelas diferenças
        v - u dos pares de R; o sistema resolvido é y - x = W(α - β).
        """
        d = R.dimension
        diferencas = [tuple(b - a for a, b in zip(u, v)) for (u, v) in R.oriented()]
        k = len(diferencas)
        # colunas: x (d), y (d), α (k), β (k)
        A = [
            tuple(-1 if j == i else 0 for j in range(d))
            + tuple(1 if j == i else 0 for j in range(d))
            + tuple(-w[i] for w in diferencas)
            + tuple(w[i] for w in diferencas)
            for i in range(d)
        ]
        hilbert = DiophantineService.hilbert_homogeneous(A, cols=2 * d + 2 * k)
        projecoes = [z[:2 * d] for z in hilbert.minimals if any(z[:2 * d])]
        M = tuple((z[:d], z[d:]) for z in minimal_antichain(projecoes))

        geradores = CongruenceService.generating_vectors(R)
        norma = max((vec_norm(v) for v in geradores), default=0)
        lam = (1 + norma) ** (2 * d)
        soma = [0] * (2 * d)
        for v in geradores:
            soma = [a + b for a, b in zip(soma, v)]
        b = tuple(lam * x for x in soma[:d])
        logger.debug("big_vector: λ=%d, b=%s, |M|=%d", lam, b, len(M))
        return b, M

    @staticmethod
    def _contem_M(R: CongruenceBasis, c: Vector, M: Tuple[PairVec, ...]) -> bool:
        """M ⊆ Q_{c↑}, conferido pela base de Gröbner"""
        pares = R.oriented()
        return all(GroebnerService.congruence_member(pares, vec_add(c, s), vec_add(c, t)) for (s, t) in M)

    @staticmethod
    def tighten_big_vector(R: CongruenceBasis, b: Vector, M: Tuple[PairVec, ...]) -> Vector:
        """Menor b' <= b, coordenada a coordenada, com M ⊆ Q_{b'↑}"""
        atual = list(b)
        for i in range(len(atual)):
            baixo, alto = 0, atual[i]
            while baixo < alto:
                meio = (baixo + alto) // 2
                teste = tuple(atual[:i] + [meio] + atual[i + 1:])
                if CongruenceService._contem_M(R, teste, M):
                    alto = meio
                else:
                    baixo = meio + 1
            atual[i] = baixo
        logger.debug("big_vector reduzido de %s para %s", b, tuple(atual))
        return tuple(atual)

    @staticmethod
    def decompose_complement(b: Vector) -> List[Region]:
        """Regiões L_j de dimensão d-1 que particionam N^d \\ b↑"""
        d = len(b)
        regioes = []
        c = [0] * d
        for i in range(d):
            for _ in range(b[i]):
                regioes.append(Region(tuple(c), tuple(k for k in range(d) if k != i)))
                c[i] += 1
        return regioes

    @staticmethod
    @lru_cache(maxsize=1024)
    def restrict_region(R: CongruenceBasis, L: Region) -> CongruenceBasis:
        """Base de Q_L nas coordenadas dos eixos de L"""
        d = R.dimension
        quociente = GroebnerService.quotient_by_monomial(R.oriented(), L.base, d)
        eliminada = GroebnerService.eliminate(quociente, L.axes, d)
        pares = [(tuple(g.lead[i] for i in L.axes), tuple(g.trail[i] for i in L.axes)) for g in eliminada]
        return CongruenceBasis(len(L.axes), tuple(pares))

    @staticmethod
    def _embed_piece(S: SemilinearSet, L: Region) -> List[LinearSet]:
        """Leva a peça de Q_L para N^{2d} pela base e pelos eixos da região"""
        k = len(L.axes)
        componentes = []
        for comp in S.components:
            base = vec_add(L.base, L.embed(comp.base[:k])) + vec_add(L.base, L.embed(comp.base[k:]))
            periodos = tuple(L.embed(p[:k]) + L.embed(p[k:]) for p in comp.periods)
            componentes.append(LinearSet(base, periodos))
        return componentes

    @staticmethod
    def step_relation(R: CongruenceBasis) -> SemilinearSet:
        """Um passo de geradores: ⋃ (u, v) + {(e_i, e_i)}* sobre V"""
        d = R.dimension
        diagonal = tuple(unit(d, i) * 2 for i in range(d))
        return SemilinearSet(2 * d, tuple(LinearSet(v, diagonal) for v in CongruenceService.generating_vectors(R)))

    @staticmethod
    def cong_to_semilinear(R: CongruenceBasis, tighten: Optional[bool] = None,
                           max_compositions: Optional[int] = None) -> SemilinearSet:
        """Representação semilinear de Cong(R) sobre N^{2d}"""
        if tighten is None:
            tighten = CONGRUENCE_CONFIG["tighten_big_vector"]
        if max_compositions is None:
            max_compositions = CONGRUENCE_CONFIG["max_compositions"]
        return CongruenceService._semilinear(R, tighten, max_compositions)

    @staticmethod
    @lru_cache(maxsize=256)
    def _semilinear(R: CongruenceBasis, tighten: bool, max_compositions: Optional[int]) -> SemilinearSet:
        """Compõe as peças das regiões até estabilizar"""
        d = R.dimension
        if d == 0:
            return SemilinearSet(0, (LinearSet(()),))

        b, M = CongruenceService.big_vector(R)
        if tighten:
            b = CongruenceService.tighten_big_vector(R, b, M)
        pecas = [LinearSet(b + b, tuple(s + t for (s, t) in M))]
        regioes = CongruenceService.decompose_complement(b)
        for L in regioes:
            restrita = CongruenceService.restrict_region(R, L)
            pecas.extend(CongruenceService._embed_piece(
                CongruenceService._semilinear(restrita, tighten, max_compositions), L))

        passos = SemilinearService.union(
            SemilinearSet(2 * d, tuple(pecas)),
            CongruenceService.step_relation(R),
            SemilinearService.identity(d)
        )
        uniao = SemilinearService.prune(passos)
        limite = max_compositions if max_compositions is not None else 2 * (len(regioes) + 1)
        atual = uniao
        for rodada in range(limite):
            novos = SemilinearService.compose(atual, uniao)
            fora = [
                c for c in novos.components
                if not any(SemilinearService.is_subsumed(c, o) for o in atual.components)
            ]
            if not fora:
                logger.debug("composições estabilizaram após %d rodadas (d=%d)", rodada, d)
                break
            atual = SemilinearService.prune(SemilinearService.union(atual, SemilinearSet(2 * d, tuple(fora))))
        logger.info("Cong(R) em d=%d: b=%s, %d regiões, %d componentes", d, b, len(regioes), len(atual))
        return atual
