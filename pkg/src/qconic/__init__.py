"""qconic: exact invariants of noncommutative conics in quantum projective planes."""

__version__ = "0.1.0"
