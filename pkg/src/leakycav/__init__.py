"""Two qubits in independent lossy cavities: exact dynamics and entanglement."""

__version__ = "0.1.0"
