"""Compatible uniform quantizer family.

All bitwidths share one dynamic-range scale ``l_limit``; the step at
bitwidth ``b`` is ``l_limit / 2**(b-1)`` and saturation happens at
``l_limit - step``.  Level sets are symmetric, contain zero, and are
nested: every level of a ``b``-bit quantizer is also a level of the
``(b+1)``-bit one, so widening a message costs nothing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "QuantizerSpec",
    "alpha_of_b",
    "b_of_alpha",
    "clip_limit",
    "levels",
    "quantize_fixed",
]


def alpha_of_b(b: int, l_limit: float) -> float:
    """Quantization step size for an integer bitwidth ``b >= 1``."""
    if b < 1:
        raise ValueError(f"bitwidth {b} has no step size (level set is {{0}})")
    return l_limit / 2.0 ** (b - 1)


def clip_limit(b: int, l_limit: float) -> float:
    """Largest representable magnitude at bitwidth ``b``."""
    return l_limit - alpha_of_b(b, l_limit)


def b_of_alpha(alpha: float, l_limit: float) -> int:
    """Bitwidth corresponding to a (real-valued) step size.

    Rounds ``log2(l_limit/alpha) + 1`` to the closest integer (half up)
    and clamps below at 0; bitwidths 0 and 1 both denote a forced-zero
    message.
    """
    if alpha <= 0:
        raise ValueError(f"step size must be positive, got {alpha}")
    b = math.floor(math.log2(l_limit / alpha) + 1.5)
    return max(b, 0)


def levels(b: int, l_limit: float) -> np.ndarray:
    """Ordered level set: the ``2**b - 1`` representable values."""
    if b < 1:
        raise ValueError(f"bitwidth {b} has no level set")
    a = alpha_of_b(b, l_limit)
    k_max = 2 ** (b - 1) - 1
    return np.arange(-k_max, k_max + 1) * a


def quantize_fixed(x, b: int, l_limit: float):
    """Quantize ``x`` (scalar or array) to the ``b``-bit grid.

    Clips to the saturation level first, then rounds to the nearest
    multiple of the step; ties round away from zero so the map stays
    odd-symmetric.  Bitwidths 0 and 1 force the output to zero.
    """
    arr = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValueError("quantizer input must be finite")
    if b <= 1:
        out = np.zeros_like(arr)
        return out if arr.ndim else 0.0
    a = alpha_of_b(b, l_limit)
    y = np.clip(arr, -(l_limit - a), l_limit - a)
    out = np.sign(y) * np.floor(np.abs(y) / a + 0.5) * a
    return out if arr.ndim else float(out)


@dataclass(frozen=True)
class QuantizerSpec:
    """One quantizer site: dynamic range plus integer bitwidth."""

    l_limit: float
    b: int

    def __post_init__(self):
        if self.l_limit <= 0:
            raise ValueError("l_limit must be positive")
        if self.b < 0:
            raise ValueError("bitwidth must be non-negative")

    @property
    def alpha(self) -> float:
        return alpha_of_b(self.b, self.l_limit)

    @property
    def clip(self) -> float:
        return clip_limit(self.b, self.l_limit)

    @property
    def n_levels(self) -> int:
        return 2**self.b - 1 if self.b >= 1 else 1

    def levels(self) -> np.ndarray:
        return levels(self.b, self.l_limit)

    def __call__(self, x):
        return quantize_fixed(x, self.b, self.l_limit)
