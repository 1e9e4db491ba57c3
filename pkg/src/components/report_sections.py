import logging
from pathlib import Path
from typing import Dict, List, Sequence

from jinja2 import Template

from src.models.congruence import ChainEntry
from src.models.machine import Machine
from src.models.summary import SummaryTable
from src.utils.formatters import ReportFormatter, SentinelFormatter, VectorFormatter

logger = logging.getLogger(__name__)

TEMPLATES_DIR = Path(__file__).resolve().parents[2] / "templates"


class ReportSectionRenderer:
    """Renderização dos relatórios de saída com templates jinja2"""

    @staticmethod
    def _render(nome: str, **dados) -> str:
        """Renderiza o template da seção"""
        with open(TEMPLATES_DIR / nome, "r", encoding="utf-8") as f:
            template = Template(f.read())
        texto = template.render(**dados)
        return texto.rstrip("\n") + "\n"

    @staticmethod
    def render_verdict(verdict: str, campos: Dict) -> str:
        """verdict=... seguido de linhas key=value"""
        return ReportSectionRenderer._render(
            "verdict.txt.j2", verdict=verdict, linhas=ReportFormatter.chave_valor(campos)
        )

    @staticmethod
    def info_fields(m: Machine) -> Dict:
        """Campos do relatório info"""
        return {
            'dimension': m.dimension,
            'states': m.n_states,
            'alphabet': len(m.alphabet),
            'transitions': len(m.transitions),
            'internal': len(m.internal_transitions()),
            'push': len(m.push_transitions()),
            'pop': len(m.pop_transitions())
        }

    @staticmethod
    def render_levels(tabelas: Sequence[SummaryTable]) -> str:
        """TSV nível / p / q / a / b, com INF e OMEGA"""
        linhas: List[str] = []
        for tabela in tabelas:
            for (p, q, _, _) in tabela.rows():
                a, b = SentinelFormatter.formatar_resumo(tabela.gamma_of(p, q))
                linhas.append(ReportFormatter.linha_tsv((tabela.level, p, q, a, b)))
        return ReportSectionRenderer._render("levels.tsv.j2", linhas=linhas)

    @staticmethod
    def render_chain(cadeia: Sequence[ChainEntry]) -> str:
        """Cadeia R_0 ⊆ R_1 ⊆ ... em texto"""
        linhas = [
            ReportFormatter.linha_tsv((
                e.level, e.generators,
                "-" if e.distinguishing_pair is None else VectorFormatter.formatar_par(e.distinguishing_pair)
            ))
            for e in cadeia
        ]
        return ReportSectionRenderer._render("chain.tsv.j2", linhas=linhas)
