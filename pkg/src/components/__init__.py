# Renderização dos relatórios
