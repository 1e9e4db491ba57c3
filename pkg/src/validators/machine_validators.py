import re
from typing import Dict, List, Union

from config import INSTANCE_FIELDS, MENSAGENS, REGEX_PATTERNS, REQUIRED_INSTANCE_FIELDS, TRANSITION_FIELDS
from src.models.command import COMMANDS, FAMILIES, Command
from src.models.explorer import Bounds, INT, NAT
from src.models.machine import Machine, Pvas, StackOp


class MachineValidator:
    """Validações estruturais de máquinas já construídas"""

    @staticmethod
    def check_bidirected(m: Union[Machine, Pvas]) -> List[str]:
        """Lista as transições sem a reversa; vazia = bidirecionada"""
        presentes = set(m.transitions)
        return [
            f"{MENSAGENS['nao_bidirecionado']}: falta a reversa de {t}"
            for t in m.transitions if t.reverse() not in presentes
        ]

    @staticmethod
    def check_separated(m: Machine) -> List[str]:
        """Lista as transições que mexem no contador e na pilha ao mesmo tempo"""
        return [
            f"{MENSAGENS['nao_separado']}: {t}"
            for t in m.transitions if not t.is_internal and not t.is_silent
        ]

    @staticmethod
    def check_dimension(m: Union[Machine, Pvas], esperada: int) -> List[str]:
        """Erro se a dimensão difere da esperada"""
        if m.dimension != esperada:
            return [MENSAGENS['dimensao_errada'].format(esperada=esperada, recebida=m.dimension)]
        return []

    @staticmethod
    def check_states(m: Machine, *estados: str) -> List[str]:
        """Erro para cada estado desconhecido"""
        return [MENSAGENS['estado_desconhecido'].format(nome=e) for e in estados if e not in m.states]


class InstanceValidator:
    """Validação do dicionário lido de um arquivo de instância"""

    @staticmethod
    def validar_identificador(nome) -> bool:
        """Nome de estado ou símbolo"""
        return isinstance(nome, str) and bool(re.match(REGEX_PATTERNS["identifier"], nome))

    @staticmethod
    def validar_operacao(op) -> bool:
        """Operação de pilha bem formada"""
        try:
            StackOp.from_dict(op)
            return True
        except (ValueError, TypeError):
            return False

    @classmethod
    def validar_instancia(cls, dados: Dict) -> List[str]:
        """Valida a instância completa e retorna lista de erros"""
        if not isinstance(dados, dict):
            return [MENSAGENS['json_invalido']]
        erros = []

        for campo in dados:
            if campo not in INSTANCE_FIELDS:
                erros.append(MENSAGENS['campo_desconhecido'].format(campo=campo))
        for campo in REQUIRED_INSTANCE_FIELDS:
            if campo not in dados:
                erros.append(MENSAGENS['campo_obrigatorio'].format(campo=campo))
        if erros:
            return erros

        dimensao = dados['dimension']
        if not isinstance(dimensao, int) or isinstance(dimensao, bool) or dimensao < 0:
            erros.append(MENSAGENS['limite_negativo'].format(campo='dimension'))
            dimensao = None

        estados = dados['states'] if isinstance(dados['states'], list) else []
        alfabeto = dados['alphabet'] if isinstance(dados['alphabet'], list) else []
        for nome in estados + alfabeto:
            if not cls.validar_identificador(nome):
                erros.append(MENSAGENS['identificador_invalido'].format(nome=nome))

        transicoes = dados['transitions'] if isinstance(dados['transitions'], list) else []
        for i, t in enumerate(transicoes):
            erros.extend(f"transitions[{i}]: {e}" for e in cls._validar_transicao(t, estados, alfabeto, dimensao))

        if 'bidirected' in dados and not isinstance(dados['bidirected'], bool):
            erros.append(MENSAGENS['campo_desconhecido'].format(campo=f"bidirected={dados['bidirected']!r}"))
        return erros

    @classmethod
    def _validar_transicao(cls, t, estados, alfabeto, dimensao) -> List[str]:
        """Erros de uma transição"""
        if not isinstance(t, dict):
            return [MENSAGENS['json_invalido']]
        erros = [MENSAGENS['campo_desconhecido'].format(campo=c) for c in t if c not in TRANSITION_FIELDS]
        erros += [MENSAGENS['campo_obrigatorio'].format(campo=c) for c in TRANSITION_FIELDS if c not in t]
        if erros:
            return erros

        for chave in ('from', 'to'):
            if t[chave] not in estados:
                erros.append(MENSAGENS['estado_desconhecido'].format(nome=t[chave]))

        efeito = t['effect']
        if (not isinstance(efeito, list)
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in efeito)
                or (dimensao is not None and len(efeito) != dimensao)):
            erros.append(MENSAGENS['efeito_dimensao'].format(efeito=efeito, dimensao=dimensao))

        if not cls.validar_operacao(t['op']):
            erros.append(MENSAGENS['operacao_invalida'].format(op=t['op']))
        elif isinstance(t['op'], dict):
            simbolo = next(iter(t['op'].values()))
            if simbolo not in alfabeto:
                erros.append(MENSAGENS['simbolo_desconhecido'].format(nome=simbolo))
        return erros


class BoundsValidator:
    """Validação dos limites do explorador"""

    @staticmethod
    def validar_limites(bounds: Bounds) -> List[str]:
        """Limites não negativos e modo conhecido"""
        erros = []
        for campo in ('counter_max', 'stack_max', 'node_max'):
            if getattr(bounds, campo) < 0:
                erros.append(MENSAGENS['limite_negativo'].format(campo=campo))
        if bounds.mode not in (NAT, INT):
            erros.append(MENSAGENS['comando_invalido'].format(comando=f"mode={bounds.mode}"))
        return erros


class CommandValidator:
    """Validação dos parâmetros de um comando antes de qualquer trabalho"""

    @staticmethod
    def validar_comando(cmd: Command) -> List[str]:
        """Retorna todos os problemas encontrados"""
        erros = []
        invalido = MENSAGENS['comando_invalido'].format(comando=cmd.name)
        if cmd.name not in COMMANDS:
            return [invalido]

        if cmd.needs_instance and not cmd.input:
            erros.append(f"{invalido}: --input é obrigatório")
        if cmd.needs_states:
            for flag, valor in (('--from', cmd.source), ('--to', cmd.target)):
                if not valor:
                    erros.append(f"{invalido}: {flag} é obrigatório")
                elif not InstanceValidator.validar_identificador(valor):
                    erros.append(MENSAGENS['identificador_invalido'].format(nome=valor))

        erros += BoundsValidator.validar_limites(cmd.bounds)
        if cmd.max_level < 1:
            erros.append(MENSAGENS['limite_negativo'].format(campo='max_level'))

        if cmd.name == "cong":
            if cmd.basis is None:
                erros.append(f"{invalido}: --basis é obrigatório")
            else:
                for par in re.split(r"[;\s]+", cmd.basis.strip()):
                    if par and not re.match(REGEX_PATTERNS["pair"], par):
                        erros.append(f"{invalido}: par inválido '{par}'")
            if cmd.member is not None and not re.match(REGEX_PATTERNS["pair"], cmd.member.strip()):
                erros.append(f"{invalido}: par inválido '{cmd.member}'")

        if cmd.name == "gen":
            g = cmd.gen
            if g.family not in FAMILIES:
                erros.append(f"{invalido}: família desconhecida '{g.family}'")
            for campo in ('m_bits', 'states', 'dimension'):
                if getattr(g, campo) < 1:
                    erros.append(MENSAGENS['limite_negativo'].format(campo=campo))
            for campo in ('symbols', 'transitions', 'max_effect'):
                if getattr(g, campo) < 0:
                    erros.append(MENSAGENS['limite_negativo'].format(campo=campo))
        return erros
