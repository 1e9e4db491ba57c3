# Utilitários de formatação
