# Histórico de níveis das saturações
