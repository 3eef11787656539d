"""GL(n)/SL(n) classical coordinate layer.

Conversions among the s-variables, the spectral v-variables, the z-variables
attached to a parabolic, and Langlands parameter vectors.  Everything is
LinearForm-valued so conversions compose exactly with the symbolic engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Sequence

from .errors import DimensionMismatch
from .symalg import LinearForm, Symbol

__all__ = [
    "GLParameters",
    "GLPartition",
    "b_coefficient",
    "alpha_from_s",
    "s_from_alpha",
    "rho_P",
    "z_symbols",
    "eisenstein_parameters",
    "power_function_exponents",
]

MAX_N = 12  # CLI guard; tables and tests only need n <= 4


@dataclass(frozen=True)
class GLParameters:
    """Langlands parameters (alpha_1, ..., alpha_n), summing to zero."""

    n: int
    alpha: tuple[LinearForm, ...]

    def __post_init__(self):
        if len(self.alpha) != self.n:
            raise DimensionMismatch(f"{len(self.alpha)} parameters for n={self.n}")
        total = LinearForm()
        for a in self.alpha:
            total = total + a
        if total != LinearForm():
            raise ValueError("Langlands parameters must sum to zero")

    def difference_coords(self) -> tuple[LinearForm, ...]:
        """Weight-basis coordinates alpha_i - alpha_{i+1} of the A_{n-1} weight."""
        return tuple(self.alpha[i] - self.alpha[i + 1] for i in range(self.n - 1))


@dataclass(frozen=True)
class GLPartition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(p < 1 for p in self.parts):
            raise ValueError(f"invalid partition {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    def boundaries(self) -> tuple[int, ...]:
        """Indices n_1, n_1+n_2, ... of the simple roots outside the Levi."""
        acc, out = 0, []
        for p in self.parts[:-1]:
            acc += p
            out.append(acc)
        return tuple(out)


def b_coefficient(n: int, i: int, j: int) -> int:
    return i * j if i + j <= n else (n - i) * (n - j)


def alpha_from_s(n: int, s: Sequence[LinearForm]) -> GLParameters:
    """Recover the Langlands parameters from the s-variables."""
    if len(s) != n - 1:
        raise DimensionMismatch(f"need {n - 1} s-variables, got {len(s)}")
    shifted = [si - Q(1, n) for si in s]

    def B(j: int) -> LinearForm:
        out = LinearForm()
        for i in range(1, n):
            out = out + shifted[i - 1] * b_coefficient(n, i, j)
        return out

    alpha = [B(n - 1)]
    for i in range(2, n):
        alpha.append(B(n - i) - B(n - i + 1))
    alpha.append(-B(1))
    return GLParameters(n, tuple(alpha))


def s_from_alpha(params: GLParameters) -> tuple[LinearForm, ...]:
    """Forward map s_i = (alpha_i - alpha_{i+1} + 1)/n."""
    n = params.n
    return tuple(
        (params.alpha[i] - params.alpha[i + 1] + 1) * Q(1, n) for i in range(n - 1)
    )


def rho_P(partition: GLPartition) -> tuple[Q, ...]:
    """Exponents of the parabolic character: rho_P(1) = (n-n_1)/2 and
    rho_P(j) = (n-n_j)/2 - n_1 - ... - n_{j-1} for j >= 2."""
    n = partition.n
    out = []
    consumed = 0
    for j, nj in enumerate(partition.parts, start=1):
        if j == 1:
            out.append(Q(n - nj, 2))
        else:
            out.append(Q(n - nj, 2) - consumed)
        consumed += nj
    assert sum(nj * r for nj, r in zip(partition.parts, out)) == 0
    return tuple(out)


def z_symbols(partition: GLPartition) -> tuple[LinearForm, ...]:
    """z-variables z_1..z_r with sum(n_i z_i) = 0; the last one is eliminated."""
    r = partition.r
    forms = [
        LinearForm.build(0, {Symbol(f"z{i}", kind="s_variable"): 1}) for i in range(1, r)
    ]
    last = LinearForm()
    for ni, zi in zip(partition.parts[:-1], forms):
        last = last - zi * ni
    forms.append(last * Q(1, partition.parts[-1]))
    return tuple(forms)


def eisenstein_parameters(
    partition: GLPartition,
    s: Sequence[LinearForm],
    levi_alphas: Sequence[GLParameters | None],
) -> GLParameters:
    """Langlands parameters of the Eisenstein series attached to the partition:
    block i contributes alpha_{i,k} + s_i - rho_P(i)."""
    if len(s) != partition.r or len(levi_alphas) != partition.r:
        raise DimensionMismatch("one s-variable and one parameter block per part")
    constraint = LinearForm()
    for ni, si in zip(partition.parts, s):
        constraint = constraint + si * ni
    if constraint != LinearForm():
        raise ValueError("s-variables must satisfy sum(n_i s_i) = 0")
    rho = rho_P(partition)
    out: list[LinearForm] = []
    for ni, si, ri, block in zip(partition.parts, s, rho, levi_alphas):
        if block is None:
            if ni != 1:
                raise DimensionMismatch(f"block of size {ni} needs cusp-form parameters")
            out.append(si - ri)
            continue
        if block.n != ni:
            raise DimensionMismatch(f"block parameters have n={block.n}, expected {ni}")
        for a in block.alpha:
            out.append(a + si - ri)
    return GLParameters(partition.n, tuple(out))


def power_function_exponents(n: int, params: GLParameters) -> tuple[LinearForm, ...]:
    """Exponent of y_i in the power function: alpha_1+...+alpha_{n-i} plus
    rho_1+...+rho_{n-i} with rho_k = (n+1)/2 - k.  Index i runs 1..n-1."""
    out = []
    for i in range(1, n):
        top = n - i
        acc = LinearForm()
        for k in range(1, top + 1):
            acc = acc + params.alpha[k - 1] + (Q(n + 1, 2) - k)
        out.append(acc)
    return tuple(out)
