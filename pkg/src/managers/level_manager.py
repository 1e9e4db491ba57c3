import logging
from typing import List, Optional

from src.models.congruence import ChainEntry
from src.models.summary import SummaryTable

logger = logging.getLogger(__name__)


class LevelManager:
    """Histórico por nível de uma execução de ponto fixo (tabelas gamma/delta ou cadeia R_i)"""

    def __init__(self):
        self.tables: List[SummaryTable] = []
        self.chain: List[ChainEntry] = []

    def limpar(self):
        """Descarta o histórico antes de uma nova execução"""
        self.tables = []
        self.chain = []

    def record_table(self, table: SummaryTable):
        """Guarda a tabela do nível"""
        self.tables.append(table)
        logger.debug("nível %d: %d pares com resumo finito", table.level,
                     sum(1 for v in table.gamma.values() if not v.is_bottom))

    def record_chain(self, entry: ChainEntry):
        """Guarda uma entrada da cadeia"""
        self.chain.append(entry)
        logger.info("nível %d: %d geradores%s", entry.level, entry.generators,
                    "" if entry.distinguishing_pair is None else f", novo par {entry.distinguishing_pair}")

    def last_table(self) -> Optional[SummaryTable]:
        return self.tables[-1] if self.tables else None

    def is_monotone(self) -> bool:
        """Tabelas consecutivas crescem ponto a ponto"""
        return all(a.leq(b) for a, b in zip(self.tables, self.tables[1:]))
