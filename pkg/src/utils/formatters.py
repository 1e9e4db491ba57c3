import re
from typing import Dict, Iterable, List, Sequence, Tuple

from config import REGEX_PATTERNS, SENTINELS
from src.models.summary import NEG_INF, OMEGA, SummaryValue


class VectorFormatter:
    """Formatação e leitura de vetores e pares de vetores"""

    @staticmethod
    def formatar_vetor(v: Sequence[int]) -> str:
        """(1, 2, 3) -> 1,2,3"""
        return ",".join(str(x) for x in v) if len(v) else "()"

    @staticmethod
    def formatar_par(par: Tuple[Sequence[int], Sequence[int]]) -> str:
        """((1,0),(0,1)) -> 1,0:0,1"""
        return f"{VectorFormatter.formatar_vetor(par[0])}:{VectorFormatter.formatar_vetor(par[1])}"

    @staticmethod
    def ler_vetor(texto: str) -> Tuple[int, ...]:
        """Lê '1,-2' como (1, -2)"""
        texto = texto.strip()
        if not re.match(REGEX_PATTERNS["vector"], texto):
            raise ValueError(f"vetor inválido: '{texto}'")
        return tuple(int(x) for x in texto.split(","))

    @staticmethod
    def ler_par(texto: str) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """1,0:0,1 -> ((1,0),(0,1))"""
        texto = texto.strip()
        if not re.match(REGEX_PATTERNS["pair"], texto):
            raise ValueError(f"par inválido: '{texto}'")
        esquerda, direita = texto.split(":")
        return VectorFormatter.ler_vetor(esquerda), VectorFormatter.ler_vetor(direita)

    @staticmethod
    def ler_pares(texto: str) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        """Pares separados por ';' ou espaço"""
        return [VectorFormatter.ler_par(p) for p in re.split(r"[;\s]+", texto.strip()) if p]


class SentinelFormatter:
    """Valores com infinito: INF para -∞, OMEGA para ω"""

    @staticmethod
    def formatar_numero(x: float) -> str:
        """Inteiro, ou o sentinela de -∞ ou de ω"""
        if x == NEG_INF:
            return SENTINELS["neg_inf"]
        if x == OMEGA:
            return SENTINELS["omega"]
        return str(int(x))

    @staticmethod
    def formatar_resumo(valor: SummaryValue) -> Tuple[str, str]:
        """(a, b) de um resumo como texto"""
        return SentinelFormatter.formatar_numero(valor.a), SentinelFormatter.formatar_numero(valor.b)


class ReportFormatter:
    """Linhas key=value e TSV"""

    @staticmethod
    def formatar_valor(valor) -> str:
        """Valor de relatório como texto"""
        if isinstance(valor, bool):
            return "true" if valor else "false"
        if isinstance(valor, (list, tuple)):
            return VectorFormatter.formatar_vetor(valor)
        if valor is None:
            return "-"
        return str(valor)

    @staticmethod
    def chave_valor(campos: Dict) -> List[str]:
        """Uma linha por campo, na ordem de inserção"""
        return [f"{k}={ReportFormatter.formatar_valor(v)}" for k, v in campos.items()]

    @staticmethod
    def linha_tsv(celulas: Iterable) -> str:
        """Células separadas por tabulação"""
        return "\t".join(ReportFormatter.formatar_valor(c) for c in celulas)
