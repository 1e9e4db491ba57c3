"""
pdvass - decisão de alcançabilidade em PVASS bidirecionados
Linha de comando
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

# Adicionar diretório src ao path
sys.path.append(os.path.join(os.path.dirname(__file__), 'src'))

from config import DEFAULT_BOUNDS, GENERATOR_CONFIG, LOG_CONFIG, SATURATION_CONFIG
from src.controllers.command_controller import CommandController
from src.models.command import COMMANDS, FAMILIES, Command, GenSpec


class PdvassApp:
    """Aplicação de linha de comando: lê argumentos, executa e imprime o relatório"""

    def __init__(self):
        self.controller = CommandController()
        self.parser = self._criar_parser()

    @staticmethod
    def _criar_parser() -> argparse.ArgumentParser:
        """Parser da linha de comando"""
        ap = argparse.ArgumentParser(prog="pdvass", description="Alcançabilidade em PVASS bidirecionados.")
        ap.add_argument("command", choices=COMMANDS)
        ap.add_argument("--input", help="Arquivo de instância (JSON).")
        ap.add_argument("--from", dest="source", help="Estado de origem.")
        ap.add_argument("--to", dest="target", help="Estado de destino.")
        ap.add_argument("--max-level", type=int, default=SATURATION_CONFIG["max_level"])
        ap.add_argument("--counter-max", type=int, default=DEFAULT_BOUNDS["counter_max"])
        ap.add_argument("--stack-max", type=int, default=DEFAULT_BOUNDS["stack_max"])
        ap.add_argument("--node-max", type=int, default=DEFAULT_BOUNDS["node_max"])
        ap.add_argument("--trace", action="store_true", help="Anexa o traço TSV por nível.")
        ap.add_argument("--verbose", action="store_true", help="Log em nível DEBUG.")

        grupo = ap.add_argument_group("cong")
        grupo.add_argument("--basis", help="Pares 'u:v' separados por ';', ex.: '1:2;0,1:1,0'.")
        grupo.add_argument("--member", help="Par 's:t' a testar.")
        grupo.add_argument("--semilinear", action="store_true", help="Imprime a representação semilinear.")
        grupo.add_argument("--oracle", action="store_true", help="Confere com o fecho por reescrita.")

        gen = ap.add_argument_group("gen")
        gen.add_argument("--family", choices=FAMILIES, default="random")
        gen.add_argument("--m-bits", type=int, default=GENERATOR_CONFIG["m_bits"])
        gen.add_argument("--seed", type=int, default=GENERATOR_CONFIG["seed"])
        gen.add_argument("--states", type=int, default=GENERATOR_CONFIG["states"])
        gen.add_argument("--symbols", type=int, default=GENERATOR_CONFIG["symbols"])
        gen.add_argument("--transitions", type=int, default=GENERATOR_CONFIG["transitions"])
        gen.add_argument("--max-effect", type=int, default=GENERATOR_CONFIG["max_effect"])
        gen.add_argument("--dimension", type=int, default=1)
        gen.add_argument("--output", help="Arquivo de saída da instância gerada.")
        return ap

    @staticmethod
    def configurar_log(verbose: bool):
        """Nível de log pela flag verbose"""
        logging.basicConfig(
            stream=sys.stderr,
            format=LOG_CONFIG["format"],
            level=LOG_CONFIG["verbose_level"] if verbose else LOG_CONFIG["level"],
            force=True
        )

    def comando_de(self, argv: Optional[List[str]] = None) -> Command:
        """Converte os argumentos em Command"""
        args = self.parser.parse_args(argv)
        self.configurar_log(args.verbose)
        gen = GenSpec(
            family=args.family,
            m_bits=args.m_bits,
            seed=args.seed,
            states=args.states,
            symbols=args.symbols,
            transitions=args.transitions,
            max_effect=args.max_effect,
            dimension=args.dimension,
            output=args.output
        )
        return Command(
            name=args.command,
            input=args.input,
            source=args.source,
            target=args.target,
            max_level=args.max_level,
            counter_max=args.counter_max,
            stack_max=args.stack_max,
            node_max=args.node_max,
            trace=args.trace,
            basis=args.basis,
            member=args.member,
            semilinear=args.semilinear,
            oracle=args.oracle,
            gen=gen
        )

    def executar(self, argv: Optional[List[str]] = None) -> int:
        """Roda o comando e devolve o código de saída"""
        codigo, relatorio = self.controller.run(self.comando_de(argv))
        sys.stdout.write(relatorio)
        return codigo


def main(argv: Optional[List[str]] = None) -> int:
    """Função principal"""
    app = PdvassApp()
    return app.executar(argv)


if __name__ == "__main__":
    sys.exit(main())
