"""Group-theoretic criteria for PSC moduli of topological spherical space forms."""

__version__ = "0.1.0"
