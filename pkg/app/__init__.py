"""boqc: compilador de Hamiltonianos bosônicos em circuitos de qubits."""
