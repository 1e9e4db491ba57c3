import pytest

from src.components.report_sections import ReportSectionRenderer
from src.models.congruence import ChainEntry
from src.models.summary import NEG_INF, OMEGA, SummaryValue
from src.utils.formatters import ReportFormatter, SentinelFormatter, VectorFormatter


def test_vectors_and_pairs():
    assert VectorFormatter.formatar_vetor((1, 2, 3)) == "1,2,3"
    assert VectorFormatter.formatar_vetor(()) == "()"
    assert VectorFormatter.formatar_par(((1, 0), (0, 1))) == "1,0:0,1"
    assert VectorFormatter.ler_par(" 1,0:0,1 ") == ((1, 0), (0, 1))
    assert VectorFormatter.ler_pares("1:2; 0,1:1,0  3:3") == [((1,), (2,)), ((0, 1), (1, 0)), ((3,), (3,))]
    assert VectorFormatter.ler_pares("") == []


@pytest.mark.parametrize("texto", ["1:", "a:1", "1;2", "-1:2"])
def test_bad_pairs(texto):
    with pytest.raises(ValueError):
        VectorFormatter.ler_par(texto)


def test_sentinels():
    assert SentinelFormatter.formatar_numero(NEG_INF) == "INF"
    assert SentinelFormatter.formatar_numero(OMEGA) == "OMEGA"
    assert SentinelFormatter.formatar_numero(-3) == "-3"
    assert SentinelFormatter.formatar_resumo(SummaryValue(NEG_INF, NEG_INF)) == ("INF", "INF")
    assert SentinelFormatter.formatar_resumo(SummaryValue(-1, OMEGA)) == ("-1", "OMEGA")


def test_report_values():
    assert ReportFormatter.chave_valor({'b': True, 'a': None, 'v': (1, 2)}) == ["b=true", "a=-", "v=1,2"]
    assert ReportFormatter.linha_tsv((0, "p", False)) == "0\tp\tfalse"


def test_render_verdict_and_chain():
    assert ReportSectionRenderer.render_verdict("X", {'a': 1}) == "verdict=X\na=1\n"
    cadeia = [ChainEntry(0, 1), ChainEntry(1, 2, ((1,), (3,)))]
    linhas = ReportSectionRenderer.render_chain(cadeia).splitlines()
    assert linhas == ["level\tgenerators\tdistinguishing_pair", "0\t1\t-", "1\t2\t1:3"]
