# Validadores de máquinas e instâncias
