"""Involutive commutative semirings and their dense matrix kernels.

Three instances ship with the package: complex numbers with conjugation
(``fdhilb``), the boolean semiring with OR/AND (``rel``), and the nonnegative
reals with the identity involution (``weights``).  A semiring carries both the
scalar operations (used to spot-check the laws) and vectorized numpy kernels
(used for all matrix work): matmul, kron, elementwise scaling, conjugation and
a scale-aware approximate equality.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Any, Callable

import numpy as np

from .errors import SemiringLawViolation

ABS_TOL = 1e-12
REL_TOL = 1e-9


def max_abs(arr: np.ndarray) -> float:
    return 0.0 if arr.size == 0 else float(np.max(np.abs(arr)))


@dataclass(frozen=True)
class InvolutiveSemiring:
    """Scalar laws plus matrix kernels for one coefficient semiring."""

    name: str
    dtype: Any
    zero: Any
    one: Any
    add: Callable[[Any, Any], Any]
    mul: Callable[[Any, Any], Any]
    involution: Callable[[Any], Any]          # works elementwise on arrays too
    matmul: Callable[[np.ndarray, np.ndarray], np.ndarray]
    kron: Callable[[np.ndarray, np.ndarray], np.ndarray]
    scale: Callable[[Any, np.ndarray], np.ndarray]
    sample: Callable[[np.random.Generator, tuple[int, ...]], np.ndarray]
    exact: bool = False                       # exact equality instead of tolerances
    approx_equal: Callable[..., bool] = field(default=None)  # set in __post_init__

    def __post_init__(self) -> None:
        if self.approx_equal is None:
            fn = _exact_equal if self.exact else _tolerant_equal
            object.__setattr__(self, "approx_equal", fn)


def _tolerant_equal(a: np.ndarray, b: np.ndarray, rel: float | None = None) -> bool:
    if a.shape != b.shape:
        return False
    if a.size == 0:
        return True
    scale = max(max_abs(a), max_abs(b))
    return max_abs(a - b) <= max(ABS_TOL, (REL_TOL if rel is None else rel) * scale)


def _exact_equal(a: np.ndarray, b: np.ndarray, rel: float | None = None) -> bool:
    return a.shape == b.shape and bool(np.array_equal(a, b))


def _bool_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a.astype(np.uint8) @ b.astype(np.uint8)) > 0


def _bool_kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(a.astype(np.uint8), b.astype(np.uint8)) > 0


COMPLEX = InvolutiveSemiring(
    name="complex",
    dtype=np.complex128,
    zero=complex(0),
    one=complex(1),
    add=lambda x, y: x + y,
    mul=lambda x, y: x * y,
    involution=np.conjugate,
    matmul=np.matmul,
    kron=np.kron,
    scale=lambda c, arr: c * arr,
    sample=lambda rng, shape: rng.standard_normal(shape) + 1j * rng.standard_normal(shape),
)

BOOLEAN = InvolutiveSemiring(
    name="boolean",
    dtype=np.bool_,
    zero=False,
    one=True,
    add=lambda x, y: bool(x) or bool(y),
    mul=lambda x, y: bool(x) and bool(y),
    involution=lambda x: x,
    matmul=_bool_matmul,
    kron=_bool_kron,
    scale=lambda c, arr: np.logical_and(bool(c), arr),
    sample=lambda rng, shape: rng.random(shape) < 0.5,
    exact=True,
)

NONNEG = InvolutiveSemiring(
    name="nonneg",
    dtype=np.float64,
    zero=0.0,
    one=1.0,
    add=lambda x, y: x + y,
    mul=lambda x, y: x * y,
    involution=lambda x: x,
    matmul=np.matmul,
    kron=np.kron,
    scale=lambda c, arr: c * arr,
    sample=lambda rng, shape: rng.random(shape),
)


def corrupted_complex() -> InvolutiveSemiring:
    """Complex semiring with the involution deliberately broken (identity).

    The scalar laws still hold, so this passes ``check_semiring_laws`` but
    breaks adjoint-dependent coherence; used as a negative control.
    """
    return replace(COMPLEX, name="complex-corrupted-involution", involution=lambda x: +x,
                   approx_equal=COMPLEX.approx_equal)


def check_semiring_laws(s: InvolutiveSemiring, rng: np.random.Generator, samples: int = 24) -> None:
    """Spot-check the semiring laws on sampled elements; raise on violation."""
    elems = list(s.sample(rng, (samples,))) + [s.zero, s.one]

    def eq(x, y) -> bool:
        return s.approx_equal(np.asarray([x], dtype=s.dtype), np.asarray([y], dtype=s.dtype))

    def law(ok: bool, text: str, *wit) -> None:
        if not ok:
            raise SemiringLawViolation(f"{text}; witnesses {wit!r}")

    for i, x in enumerate(elems):
        law(eq(s.add(x, s.zero), x), "x + 0 = x", x)
        law(eq(s.mul(x, s.one), x), "x * 1 = x", x)
        law(eq(s.mul(x, s.zero), s.zero), "x * 0 = 0", x)
        law(eq(s.involution(s.involution(x)), x), "involution is involutive", x)
        for j, y in enumerate(elems):
            law(eq(s.add(x, y), s.add(y, x)), "+ commutes", x, y)
            law(eq(s.mul(x, y), s.mul(y, x)), "* commutes", x, y)
            law(eq(s.involution(s.add(x, y)), s.add(s.involution(x), s.involution(y))),
                "involution preserves +", x, y)
            law(eq(s.involution(s.mul(x, y)), s.mul(s.involution(x), s.involution(y))),
                "involution preserves *", x, y)
            if i < 8 and j < 8:
                for z in elems[:8]:
                    law(eq(s.add(s.add(x, y), z), s.add(x, s.add(y, z))), "+ associates", x, y, z)
                    law(eq(s.mul(s.mul(x, y), z), s.mul(x, s.mul(y, z))), "* associates", x, y, z)
                    law(eq(s.mul(x, s.add(y, z)), s.add(s.mul(x, y), s.mul(x, z))),
                        "* distributes over +", x, y, z)
