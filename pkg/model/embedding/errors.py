"""Exceptions raised by the embedding lab."""
import numpy as np


class EmbeddingError(Exception):
    """Base class for embedding-lab errors."""
    pass


class GridMismatchError(EmbeddingError):
    """Raised when states live on different grids or carry different hbar."""
    pass


class EntangledStateError(EmbeddingError):
    """Raised when a Q factor is requested from a state that is not a product."""

    def __init__(self, spectrum: np.ndarray, threshold: float):
        head = ", ".join(f"{s:.3e}" for s in spectrum[:4])
        super().__init__(f"State is entangled: second Schmidt value {spectrum[1]:.3e} exceeds {threshold:.0e} "
                         f"(spectrum starts {head})")
        self.spectrum = spectrum
        self.threshold = threshold
