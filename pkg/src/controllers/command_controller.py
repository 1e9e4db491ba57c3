import logging
from typing import Dict, List, Tuple

from config import EXIT_CODES
from src.components.report_sections import ReportSectionRenderer
from src.controllers.onedim_controller import OneDimController
from src.controllers.saturation_controller import SaturationController
from src.managers.level_manager import LevelManager
from src.models.command import Command
from src.models.congruence import CongruenceBasis
from src.models.errors import (
    InstanceFormatError, IterationCapError, PdvassError, PreconditionError
)
from src.models.linear import vec_norm
from src.models.machine import Configuration, Machine
from src.services.congruence_service import CongruenceService
from src.services.explorer_service import ExplorerService
from src.services.generator_service import GeneratorService
from src.services.groebner_service import GroebnerService
from src.services.instance_service import InstanceService
from src.services.semilinear_service import SemilinearService
from src.utils.formatters import VectorFormatter
from src.validators.machine_validators import CommandValidator, MachineValidator

logger = logging.getLogger(__name__)


class CommandController:
    """Executa um comando validado e monta o relatório de saída"""

    def __init__(self):
        self.level_manager = LevelManager()

    def run(self, cmd: Command) -> Tuple[int, str]:
        """(código de saída, relatório); erros viram códigos, nunca exceções"""
        try:
            erros = CommandValidator.validar_comando(cmd)
            if erros:
                raise PreconditionError(erros[0], erros[1:])
            return EXIT_CODES["ok"], self._executar(cmd)
        except (InstanceFormatError, PreconditionError, ValueError) as e:
            logger.error("%s", e)
            return EXIT_CODES["input"], ReportSectionRenderer.render_verdict("ERROR", {'kind': 'input'})
        except IterationCapError as e:
            logger.error("%s", e)
            relatorio = ReportSectionRenderer.render_verdict("ERROR", {'kind': 'cap', 'levels': len(e.history)})
            if cmd.trace:
                relatorio += self._trace_do_historico(e.history)
            return EXIT_CODES["cap"], relatorio
        except PdvassError as e:
            logger.error("%s", e)
            return EXIT_CODES["internal"], ReportSectionRenderer.render_verdict("ERROR", {'kind': 'internal'})

    @staticmethod
    def _trace_do_historico(historico) -> str:
        """Tabela TSV dos níveis já calculados"""
        if historico and hasattr(historico[0], 'gamma'):
            return ReportSectionRenderer.render_levels(historico)
        return ReportSectionRenderer.render_chain(historico)

    def _executar(self, cmd: Command) -> str:
        """Despacha o comando para o controlador certo"""
        if cmd.name == "gen":
            return self._gerar(cmd)
        if cmd.name == "cong":
            return self._congruencia(cmd)
        m = InstanceService.load(cmd.input)
        if cmd.needs_states:
            erros = MachineValidator.check_states(m, cmd.source, cmd.target)
            if erros:
                raise PreconditionError(erros[0], erros[1:])
        acao = {
            "reach1d": self._reach1d,
            "cover": self._cover,
            "zreach": self._zreach,
            "reach": self._reach,
            "oracle": self._oracle,
            "info": self._info,
        }[cmd.name]
        return acao(cmd, m)

    # ==================== 1-DIMENSIONAL ====================

    def _onedim(self) -> OneDimController:
        """Controlador 1-dimensional novo por comando"""
        return OneDimController(level_manager=self.level_manager)

    def _com_trace(self, cmd: Command, relatorio: str) -> str:
        """Acrescenta o histórico quando o comando pede trace"""
        if cmd.trace and self.level_manager.tables:
            relatorio += ReportSectionRenderer.render_levels(self.level_manager.tables)
        return relatorio

    def _reach1d(self, cmd: Command, m: Machine) -> str:
        """Relatório de reach1d com as três condições"""
        controller = self._onedim()
        partes = controller.conjuncts(m, cmd.source, cmd.target)
        alcanca = all(partes.values())
        campos: Dict = {'from': cmd.source, 'to': cmd.target}
        campos.update(partes)
        campos['level'] = self.level_manager.last_table().level
        return self._com_trace(cmd, ReportSectionRenderer.render_verdict("REACH" if alcanca else "NONREACH", campos))

    def _cover(self, cmd: Command, m: Machine) -> str:
        """Relatório de cobertura e nível mínimo"""
        controller = self._onedim()
        cobre = controller.cover(m, cmd.source, cmd.target)
        campos = {
            'from': cmd.source,
            'to': cmd.target,
            'min_level': controller.minimal_cover_level(m, cmd.source, cmd.target),
            'level': self.level_manager.last_table().level
        }
        return self._com_trace(cmd, ReportSectionRenderer.render_verdict("COVER" if cobre else "NONCOVER", campos))

    def _zreach(self, cmd: Command, m: Machine) -> str:
        """Relatório de Z-alcançabilidade e do coset W(p, q)"""
        controller = self._onedim()
        alcanca = controller.zreach(m, cmd.source, cmd.target)
        coset = controller.zreach_cosets(m)[(cmd.source, cmd.target)]
        campos = {'from': cmd.source, 'to': cmd.target, 'weights': str(coset)}
        return ReportSectionRenderer.render_verdict("ZREACH" if alcanca else "NONZREACH", campos)

    # ==================== DIMENSÃO GERAL ====================

    def _reach(self, cmd: Command, m: Machine) -> str:
        """Relatório do explorador limitado"""
        controller = SaturationController(level_manager=self.level_manager, max_level=cmd.max_level)
        alcanca = controller.decide_machine_reach(m, cmd.source, cmd.target)
        cadeia = self.level_manager.chain
        campos = {
            'from': cmd.source,
            'to': cmd.target,
            'dimension': m.dimension,
            'levels': max(len(cadeia) - 1, 0),
            'generators': cadeia[-1].generators if cadeia else 0
        }
        relatorio = ReportSectionRenderer.render_verdict("REACH" if alcanca else "NONREACH", campos)
        if cmd.trace:
            relatorio += ReportSectionRenderer.render_chain(cadeia)
        return relatorio

    def _congruencia(self, cmd: Command) -> str:
        """Comandos sobre bases de congruência"""
        pares = VectorFormatter.ler_pares(cmd.basis)
        consulta = VectorFormatter.ler_par(cmd.member) if cmd.member is not None else None
        if pares:
            dimensao = len(pares[0][0])
        else:
            dimensao = len(consulta[0]) if consulta else 0
        R = CongruenceBasis(dimensao, tuple(pares))
        base_gb = GroebnerService.congruence_basis(R.oriented(), dimensao)
        campos: Dict = {'dimension': dimensao, 'generators': len(R), 'groebner': len(base_gb)}
        linhas: List[str] = []

        if consulta is not None:
            s, t = consulta
            membro = GroebnerService.congruence_member(R.oriented(), s, t)
            veredito = "MEMBER" if membro else "NONMEMBER"
            if cmd.oracle:
                limite = 2 * (max(vec_norm(s), vec_norm(t)) + max((vec_norm(u + v) for u, v in R.pairs), default=0))
                campos['oracle'] = t in GroebnerService.rewrite_closure(R.oriented(), s, limite)
                campos['oracle_norm'] = limite
        else:
            veredito = "BASIS"
            linhas = [f"gb={VectorFormatter.formatar_par(g.as_pair())}" for g in base_gb]

        relatorio = ReportSectionRenderer.render_verdict(veredito, campos)
        if linhas:
            relatorio += "\n".join(linhas) + "\n"
        if cmd.semilinear:
            S = CongruenceService.cong_to_semilinear(R)
            relatorio += SemilinearService.format_semilinear(S) + "\n"
        return relatorio

    # ==================== AUXILIARES ====================

    def _oracle(self, cmd: Command, m: Machine) -> str:
        """Confronta o procedimento com o explorador"""
        veredito = ExplorerService.reach(m, cmd.source, cmd.target, cmd.bounds)
        campos = dict(veredito.statistics)
        campos['witness_length'] = len(veredito.witness)
        if veredito.reached:
            final = ExplorerService.replay_witness(m, Configuration(cmd.source, m.zero()), veredito.witness)
            campos['final'] = str(final)
        return ReportSectionRenderer.render_verdict("REACHED" if veredito.reached else "EXHAUSTED", campos)

    def _info(self, cmd: Command, m: Machine) -> str:
        """Resumo da instância"""
        campos = ReportSectionRenderer.info_fields(m)
        campos['bidirected'] = not MachineValidator.check_bidirected(m)
        campos['separated'] = not MachineValidator.check_separated(m)
        return ReportSectionRenderer.render_verdict("INFO", campos)

    def _gerar(self, cmd: Command) -> str:
        """Gera a instância e a devolve em forma canônica"""
        m = GeneratorService.generate(cmd.gen)
        if cmd.gen.output is None:
            return InstanceService.serialize(m)
        InstanceService.save(m, cmd.gen.output)
        campos = {'family': cmd.gen.family, 'output': cmd.gen.output}
        campos.update(ReportSectionRenderer.info_fields(m))
        return ReportSectionRenderer.render_verdict("GENERATED", campos)
