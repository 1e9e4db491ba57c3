"""
Configurações do pdvass - decisão de alcançabilidade em PVASS bidirecionados
"""

# ==================== LIMITES DO EXPLORADOR ====================

DEFAULT_BOUNDS = {
    "counter_max": 8,
    "stack_max": 6,
    "node_max": 200_000
}

# ==================== SATURAÇÃO ====================

SATURATION_CONFIG = {
    "max_iterations": 2 ** 16,   # níveis de gamma/delta (caso 1-dimensional)
    "max_level": 64              # níveis R_i do algoritmo de congruências
}

CONGRUENCE_CONFIG = {
    "tighten_big_vector": True,
    "max_compositions": None,    # None = 2 * (regiões + 1) rodadas de composição
    "member_box_max": 250_000     # acima disso a pertinência vai para o solver diofantino
}

# ==================== GERADORES ====================

GENERATOR_CONFIG = {
    "states": 3,
    "symbols": 2,
    "transitions": 4,
    "max_effect": 2,
    "seed": 0,
    "m_bits": 1
}

# ==================== REGEX PATTERNS ====================

REGEX_PATTERNS = {
    "identifier": r"^[A-Za-z_][A-Za-z0-9_'~#.]*$",
    "vector": r"^-?\d+(,-?\d+)*$",
    "pair": r"^\d+(,\d+)*:\d+(,\d+)*$"
}

# ==================== FORMATO DE INSTÂNCIA ====================

INSTANCE_FIELDS = ("dimension", "states", "alphabet", "transitions", "bidirected")
TRANSITION_FIELDS = ("from", "effect", "op", "to")
REQUIRED_INSTANCE_FIELDS = ("dimension", "states", "alphabet", "transitions")

# ==================== SAÍDA ====================

SENTINELS = {
    "neg_inf": "INF",
    "omega": "OMEGA",
    "bottom": "⊥",
    "empty_coset": "EMPTY"
}

EXIT_CODES = {
    "ok": 0,
    "input": 2,
    "cap": 3,
    "internal": 4
}

LOG_CONFIG = {
    "format": "%(levelname)s %(name)s: %(message)s",
    "level": "INFO",
    "verbose_level": "DEBUG"
}

# ==================== MENSAGENS ====================

MENSAGENS = {
    "json_invalido": "Instância não é um JSON válido",
    "campo_desconhecido": "Campo desconhecido '{campo}'",
    "campo_obrigatorio": "Campo obrigatório ausente: '{campo}'",
    "identificador_invalido": "Identificador inválido: '{nome}'",
    "estado_desconhecido": "Transição referencia estado não declarado: '{nome}'",
    "simbolo_desconhecido": "Transição referencia símbolo não declarado: '{nome}'",
    "efeito_dimensao": "Efeito {efeito} não tem comprimento {dimensao}",
    "operacao_invalida": "Operação de pilha inválida: {op}",
    "nao_bidirecionado": "Máquina não é bidirecionada",
    "nao_separado": "Máquina mistura efeito no contador e operação de pilha",
    "dimensao_errada": "Operação exige dimensão {esperada}, recebida {recebida}",
    "nao_fortemente_conexo": "Componente conexa do grafo não é fortemente conexa",
    "guarda_translacao": "Translação produz base negativa: {base}",
    "limite_iteracoes": "Limite de {limite} iterações excedido sem convergência",
    "limite_niveis": "Limite de {limite} níveis excedido sem ponto fixo",
    "binomio_invalido": "Polinômio não binomial produzido: {detalhe}",
    "aridade_incompativel": "Aridades incompatíveis: {esquerda} e {direita}",
    "matriz_irregular": "Matriz não retangular",
    "limite_negativo": "Limite '{campo}' deve ser não negativo",
    "comando_invalido": "Parâmetros inválidos para '{comando}'",
    "limite_pottier": "Solução {solucao} viola o limite de norma {limite}"
}
