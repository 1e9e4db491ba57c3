import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import MENSAGENS
from src.models.errors import PdvassError, PreconditionError
from src.models.linear import SolutionBasis, Vector, minimal_antichain, vec_leq

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[int, ...], ...]


class DiophantineService:
    """Soluções minimais de sistemas lineares diofantinos sobre N"""

    @staticmethod
    def as_matrix(A, cols: Optional[int] = None) -> Matrix:
        """Normaliza para tupla de linhas; rejeita matrizes não retangulares"""
        linhas = tuple(tuple(int(x) for x in linha) for linha in A)
        larguras = {len(linha) for linha in linhas}
        if len(larguras) > 1 or (cols is not None and larguras and larguras != {cols}):
            raise PreconditionError.from_key('matriz_irregular')
        return linhas

    @staticmethod
    def _numpy(A: Matrix, cols: int) -> np.ndarray:
        """Matriz int64; vazia vira 0 x cols"""
        if not A:
            return np.zeros((0, cols), dtype=np.int64)
        return np.array(A, dtype=np.int64)

    @staticmethod
    def _completion(A: np.ndarray, limitada: Optional[int] = None) -> List[Vector]:
        """Completamento de Contejean-Devie.

        Parte dos vetores unitários e estende x por e_j apenas quando
        <Ax, Ae_j> < 0; candidatos acima de uma solução já achada são podados.
        Com `limitada`, a coordenada indicada nunca passa de 1.
        """
        _, cols = A.shape
        colunas = [A[:, j] for j in range(cols)]
        achadas: List[Vector] = []
        candidatos: Dict[Vector, np.ndarray] = {
            tuple(1 if i == j else 0 for i in range(cols)): colunas[j].copy() for j in range(cols)
        }
        while candidatos:
            abertos = []
            for x in sorted(candidatos):
                if not candidatos[x].any():
                    achadas.append(x)
                else:
                    abertos.append(x)
            proximos: Dict[Vector, np.ndarray] = {}
            for x in abertos:
                ax = candidatos[x]
                for j in range(cols):
                    if limitada is not None and j == limitada and x[j] >= 1:
                        continue
                    if int(ax @ colunas[j]) >= 0:
                        continue
                    y = x[:j] + (x[j] + 1,) + x[j + 1:]
                    if y in proximos or any(vec_leq(s, y) for s in achadas):
                        continue
                    proximos[y] = ax + colunas[j]
            candidatos = proximos
        return sorted(achadas)

    @staticmethod
    def pottier_bound(A: Matrix) -> int:
        """(1 + maior norma-1 de linha)^(número de equações)"""
        maior = max((sum(abs(x) for x in linha) for linha in A), default=0)
        return (1 + maior) ** len(A)

    @staticmethod
    def hilbert_homogeneous(A: Sequence[Sequence[int]], cols: Optional[int] = None) -> SolutionBasis:
        """Soluções minimais não nulas de Az = 0"""
        matriz = DiophantineService.as_matrix(A, cols)
        if cols is None:
            cols = len(matriz[0]) if matriz else 0
        return DiophantineService._hilbert(matriz, cols)

    @staticmethod
    @lru_cache(maxsize=4096)
    def _hilbert(A: Matrix, cols: int) -> SolutionBasis:
        """Base de Hilbert de Az = 0, em cache"""
        if cols == 0:
            return SolutionBasis()
        solucoes = DiophantineService._completion(DiophantineService._numpy(A, cols))
        limite = DiophantineService.pottier_bound(A)
        for z in solucoes:
            if sum(z) > limite:
                raise PdvassError.from_key('limite_pottier', solucao=z, limite=limite)
        logger.debug("base de Hilbert %dx%d: %d soluções", len(A), cols, len(solucoes))
        return SolutionBasis(tuple(solucoes))

    @staticmethod
    def minimal_inhomogeneous(A: Sequence[Sequence[int]], b: Sequence[int],
                              cols: Optional[int] = None) -> SolutionBasis:
        """Soluções minimais de Az = b e a base homogênea de Az = 0"""
        matriz = DiophantineService.as_matrix(A, cols)
        if cols is None:
            cols = len(matriz[0]) if matriz else 0
        alvo = tuple(int(x) for x in b)
        if len(alvo) != len(matriz):
            raise PreconditionError.from_key('matriz_irregular')
        return DiophantineService._inhomogeneous(matriz, alvo, cols)

    @staticmethod
    @lru_cache(maxsize=16384)
    def _inhomogeneous(A: Matrix, b: Vector, cols: int) -> SolutionBasis:
        """Soluções minimais de Az = b, em cache"""
        if not A:
            return SolutionBasis(((0,) * cols,), DiophantineService._hilbert(A, cols).minimals)
        aumentada = tuple(linha + (-bi,) for linha, bi in zip(A, b))
        solucoes = DiophantineService._completion(DiophantineService._numpy(aumentada, cols + 1), limitada=cols)
        minimais = tuple(sorted(z[:-1] for z in solucoes if z[-1] == 1))
        homogeneas = tuple(sorted(z[:-1] for z in solucoes if z[-1] == 0))
        return SolutionBasis(minimais, homogeneas)

    @staticmethod
    def minimal_at_least(A: Sequence[Sequence[int]], b: Sequence[int],
                         cols: Optional[int] = None) -> Tuple[Vector, ...]:
        """z minimais com Az >= b, via colunas de folga"""
        matriz = DiophantineService.as_matrix(A, cols)
        if cols is None:
            cols = len(matriz[0]) if matriz else 0
        alvo = tuple(int(x) for x in b)
        if len(alvo) != len(matriz):
            raise PreconditionError.from_key('matriz_irregular')
        r = len(matriz)
        folgas = tuple(
            linha + tuple(-1 if i == k else 0 for k in range(r)) for i, linha in enumerate(matriz)
        )
        base = DiophantineService._inhomogeneous(folgas, alvo, cols + r)
        return tuple(minimal_antichain(z[:cols] for z in base.minimals))

    @staticmethod
    def solves(A: Sequence[Sequence[int]], z: Sequence[int], b: Optional[Sequence[int]] = None) -> bool:
        """Az == b (b = 0 por omissão)"""
        matriz = DiophantineService.as_matrix(A)
        alvo = tuple(b) if b is not None else (0,) * len(matriz)
        return all(sum(a * x for a, x in zip(linha, z)) == bi for linha, bi in zip(matriz, alvo))
