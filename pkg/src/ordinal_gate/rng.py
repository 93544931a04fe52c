"""Mersenne Twister stream compatible with numpy's legacy ``RandomState``.

Seeding uses the scalar (Knuth) initializer, uniforms use the 53-bit
two-draw construction and Gaussians use the Marsaglia polar method with
a cached spare deviate. Together these reproduce ``np.random.seed(s)``
followed by ``np.random.normal(...)`` draw for draw.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

N = 624
M = 397
MATRIX_A = 0x9908B0DF
UPPER_MASK = 0x80000000
LOWER_MASK = 0x7FFFFFFF
MASK_32 = 0xFFFFFFFF


@dataclass
class TwisterState:
    words: list[int] = field(default_factory=lambda: [0] * N)
    index: int = N
    gauss_spare: float | None = None

    def copy(self) -> TwisterState:
        return TwisterState(list(self.words), self.index, self.gauss_spare)


def seed_scalar(seed: int) -> TwisterState:
    if not 0 <= seed <= MASK_32:
        raise ValueError(f"seed must be a 32-bit unsigned integer, got {seed}")
    mt = [0] * N
    mt[0] = seed
    for i in range(1, N):
        prev = mt[i - 1]
        mt[i] = (1812433253 * (prev ^ (prev >> 30)) + i) & MASK_32
    return TwisterState(mt, N, None)


def _twist(mt: list[int]) -> None:
    for kk in range(N - M):
        y = (mt[kk] & UPPER_MASK) | (mt[kk + 1] & LOWER_MASK)
        mt[kk] = mt[kk + M] ^ (y >> 1) ^ (MATRIX_A if y & 1 else 0)
    for kk in range(N - M, N - 1):
        y = (mt[kk] & UPPER_MASK) | (mt[kk + 1] & LOWER_MASK)
        mt[kk] = mt[kk + M - N] ^ (y >> 1) ^ (MATRIX_A if y & 1 else 0)
    y = (mt[N - 1] & UPPER_MASK) | (mt[0] & LOWER_MASK)
    mt[N - 1] = mt[M - 1] ^ (y >> 1) ^ (MATRIX_A if y & 1 else 0)


def next_u32(state: TwisterState) -> int:
    if state.index >= N:
        _twist(state.words)
        state.index = 0
    y = state.words[state.index]
    state.index += 1
    y ^= y >> 11
    y ^= (y << 7) & 0x9D2C5680
    y ^= (y << 15) & 0xEFC60000
    y ^= y >> 18
    return y


def next_double53(state: TwisterState) -> float:
    """Uniform double in [0, 1) built from two 32-bit draws (27 + 26 bits)."""
    a = next_u32(state) >> 5
    b = next_u32(state) >> 6
    return (a * 67108864.0 + b) / 9007199254740992.0


def next_gauss(state: TwisterState) -> float:
    if state.gauss_spare is not None:
        spare = state.gauss_spare
        state.gauss_spare = None
        return spare
    while True:
        x1 = 2.0 * next_double53(state) - 1.0
        x2 = 2.0 * next_double53(state) - 1.0
        r2 = x1 * x1 + x2 * x2
        if 0.0 < r2 < 1.0:
            break
    f = math.sqrt(-2.0 * math.log(r2) / r2)
    state.gauss_spare = f * x1
    return f * x2


def next_normal(state: TwisterState, mean: float, std: float) -> float:
    if std < 0:
        raise ValueError(f"std must be non-negative, got {std}")
    return mean + std * next_gauss(state)


def normals(state: TwisterState, mean: float, std: float, n: int) -> list[float]:
    """Draw ``n`` normal deviates in stream order."""
    if std < 0:
        raise ValueError(f"std must be non-negative, got {std}")
    return [mean + std * next_gauss(state) for _ in range(n)]
