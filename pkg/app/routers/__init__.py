# Routers da API boqc
