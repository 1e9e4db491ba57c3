# Modelos de máquinas, resumos e congruências
