from typing import List, Optional, Sequence, Tuple

from config import MENSAGENS


class PdvassError(Exception):
    """Erro base: mensagem do catálogo MENSAGENS mais detalhes opcionais"""

    chave = "erro_interno"

    def __init__(self, mensagem: str, detalhes: Optional[Sequence[str]] = None):
        super().__init__(mensagem)
        self.mensagem = mensagem
        self.detalhes: List[str] = list(detalhes or [])

    @classmethod
    def from_key(cls, chave: str, detalhes: Optional[Sequence[str]] = None, **valores) -> "PdvassError":
        """Cria o erro a partir de uma chave de MENSAGENS"""
        erro = cls(MENSAGENS[chave].format(**valores), detalhes=detalhes)
        erro.chave = chave
        return erro

    def __str__(self) -> str:
        if not self.detalhes:
            return self.mensagem
        return self.mensagem + "".join(f"\n  - {d}" for d in self.detalhes)


class InstanceFormatError(PdvassError):
    """Erro de leitura de instância, com posição (linha, coluna) e caminho JSON"""

    def __init__(self, mensagem: str, position: Optional[Tuple[int, int]] = None,
                 path: str = "", detalhes: Optional[Sequence[str]] = None):
        super().__init__(mensagem, detalhes)
        self.position = position
        self.path = path

    def __str__(self) -> str:
        onde = ""
        if self.position is not None:
            onde = f" (linha {self.position[0]}, coluna {self.position[1]})"
        if self.path:
            onde += f" em {self.path}"
        return super().__str__().replace(self.mensagem, self.mensagem + onde, 1)


class PreconditionError(PdvassError):
    """Máquina ou grafo fora das hipóteses da operação"""


class GuardViolationError(PdvassError):
    """Translação que sairia de N^k"""


class IterationCapError(PdvassError):
    """Ponto fixo não atingido dentro do limite configurado"""

    def __init__(self, mensagem: str, history: Sequence = (), detalhes: Optional[Sequence[str]] = None):
        super().__init__(mensagem, detalhes)
        self.history = tuple(history)


class NonBinomialError(PdvassError):
    """O motor de Gröbner produziu algo que não é diferença pura de monômios"""
