import json
import logging
import re
from pathlib import Path
from typing import Optional, Tuple

from config import INSTANCE_FIELDS, MENSAGENS, TRANSITION_FIELDS
from src.models.errors import InstanceFormatError
from src.models.machine import Machine
from src.services.normalization_service import NormalizationService
from src.validators.machine_validators import InstanceValidator

logger = logging.getLogger(__name__)


class InstanceService:
    """Leitura e escrita de arquivos de instância (documento JSON)"""

    @staticmethod
    def _posicao(texto: str, indice: int) -> Tuple[int, int]:
        """(linha, coluna) de um índice do texto, a partir de 1"""
        linha = texto.count("\n", 0, indice) + 1
        coluna = indice - texto.rfind("\n", 0, indice)
        return linha, coluna

    @staticmethod
    def _localizar_campo(texto: str, dados) -> Optional[Tuple[int, int]]:
        """Posição da primeira chave desconhecida no texto"""
        desconhecidos = [c for c in dados if c not in INSTANCE_FIELDS]
        for t in dados.get('transitions', []) if isinstance(dados.get('transitions'), list) else []:
            if isinstance(t, dict):
                desconhecidos += [c for c in t if c not in TRANSITION_FIELDS]
        for campo in desconhecidos:
            achado = re.search(r'"' + re.escape(campo) + r'"\s*:', texto)
            if achado:
                return InstanceService._posicao(texto, achado.start())
        return None

    @staticmethod
    def parse(texto: str, path: str = "") -> Machine:
        """Lê, valida e (se `bidirected: true`) fecha a máquina"""
        try:
            dados = json.loads(texto)
        except json.JSONDecodeError as e:
            raise InstanceFormatError(f"{MENSAGENS['json_invalido']}: {e.msg}", position=(e.lineno, e.colno), path=path)

        erros = InstanceValidator.validar_instancia(dados)
        if erros:
            posicao = InstanceService._localizar_campo(texto, dados) if isinstance(dados, dict) else None
            raise InstanceFormatError(erros[0], position=posicao, path=path, detalhes=erros[1:])

        m = Machine.from_dict(dados)
        if dados.get('bidirected', False):
            m = NormalizationService.bidirected_closure(m)
        logger.debug("instância %s: %d estados, %d transições", path or "<texto>", m.n_states, len(m.transitions))
        return m

    @staticmethod
    def serialize(m: Machine) -> str:
        """Forma canônica: chaves e transições ordenadas"""
        return json.dumps(m.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @staticmethod
    def load(path: str) -> Machine:
        """Lê e valida a instância do arquivo"""
        try:
            texto = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise InstanceFormatError(f"{MENSAGENS['json_invalido']}: {e.strerror}", path=path)
        return InstanceService.parse(texto, path=path)

    @staticmethod
    def save(m: Machine, path: str):
        """Grava a forma canônica"""
        Path(path).write_text(InstanceService.serialize(m), encoding="utf-8")
        logger.info("instância gravada em %s", path)
