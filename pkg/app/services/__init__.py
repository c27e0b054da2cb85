# Serviços: codificação, álgebra, Hamiltonianos, compilador, simulador, oráculo
