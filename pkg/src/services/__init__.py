# Serviços de exploração, álgebra e geração
