# Controladores dos procedimentos de decisão
