"""Typed dense matrices over an involutive semiring.

A morphism f: A -> B is stored as a dim(B) x dim(A) array over its semiring.
Basis conventions, fixed once and used everywhere:

* tensor bases are ordered lexicographically with the left factor major, so
  the matrix of f (x) g is the Kronecker product kron(f, g);
* direct-sum bases list the left block first, then the right block;
* vectors are columns, effects are rows, scalars are 1 x 1.

Objects attached to a morphism are always kept in normal form, so a dual
appears only as a flagged generator and type equality is plain structural
equality of the stored expressions.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import TypeMismatch
from .objects import ObjectExpr, Oplus, UNIT, dim, normalize, format_object
from .semirings import InvolutiveSemiring, max_abs


@dataclass(frozen=True, eq=False)
class Morphism:
    dom: ObjectExpr
    cod: ObjectExpr
    array: np.ndarray
    semiring: InvolutiveSemiring

    def __post_init__(self) -> None:
        object.__setattr__(self, "dom", normalize(self.dom))
        object.__setattr__(self, "cod", normalize(self.cod))
        arr = np.array(self.array, dtype=self.semiring.dtype)
        expected = (dim(self.cod), dim(self.dom))
        if arr.shape != expected:
            raise TypeMismatch(
                f"array shape {arr.shape} does not match cod x dom {expected}")
        arr.setflags(write=False)
        object.__setattr__(self, "array", arr)

    def __repr__(self) -> str:
        return (f"Morphism({format_object(self.dom)} -> {format_object(self.cod)}, "
                f"{self.semiring.name})")

    @property
    def is_scalar(self) -> bool:
        return self.array.shape == (1, 1)


def morphism(dom: ObjectExpr, cod: ObjectExpr, array, semiring: InvolutiveSemiring) -> Morphism:
    return Morphism(dom, cod, array, semiring)


def identity(a: ObjectExpr, s: InvolutiveSemiring) -> Morphism:
    return Morphism(a, a, np.eye(dim(a), dtype=s.dtype), s)


def zeros(a: ObjectExpr, b: ObjectExpr, s: InvolutiveSemiring) -> Morphism:
    """The all-zeros morphism a -> b (plain constructor, no diagram)."""
    return Morphism(a, b, np.zeros((dim(b), dim(a)), dtype=s.dtype), s)


def scalar(value, s: InvolutiveSemiring) -> Morphism:
    return Morphism(UNIT, UNIT, np.asarray([[value]], dtype=s.dtype), s)


def scalar_value(f: Morphism):
    """The single entry of a scalar, as a python value."""
    if not f.is_scalar:
        raise TypeMismatch(f"not a scalar: {f!r}")
    return f.array[0, 0].item()


def equal(f: Morphism, g: Morphism, rel: float | None = None) -> bool:
    """Typed equality: same normal-form ends and entrywise agreement.

    The numeric threshold is max(1e-12, rel * largest entry magnitude) with
    rel defaulting to 1e-9; the boolean model compares exactly.
    """
    if f.dom != g.dom or f.cod != g.cod:
        return False
    return f.semiring.approx_equal(f.array, g.array, rel)


def distance(f: Morphism, g: Morphism) -> float:
    """Largest entrywise deviation (inf if the types differ)."""
    if f.dom != g.dom or f.cod != g.cod:
        return float("inf")
    if f.array.size == 0:
        return 0.0
    a = f.array.astype(np.complex128) if f.semiring.exact else f.array
    b = g.array.astype(np.complex128) if g.semiring.exact else g.array
    return max_abs(a - b)


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g after f."""
    if f.semiring is not g.semiring:
        raise TypeMismatch("cannot compose morphisms over different semirings")
    if f.cod != g.dom:
        raise TypeMismatch(
            f"cannot compose: {format_object(f.cod)} != {format_object(g.dom)}")
    return Morphism(f.dom, g.cod, g.semiring.matmul(g.array, f.array), f.semiring)


def tensor(f: Morphism, g: Morphism) -> Morphism:
    if f.semiring is not g.semiring:
        raise TypeMismatch("cannot tensor morphisms over different semirings")
    from .objects import Tensor as TensorObj
    return Morphism(TensorObj(f.dom, g.dom), TensorObj(f.cod, g.cod),
                    f.semiring.kron(f.array, g.array), f.semiring)


def dagger(f: Morphism) -> Morphism:
    """Adjoint: conjugate transpose, swapping the ends."""
    return Morphism(f.cod, f.dom, f.semiring.involution(f.array.T), f.semiring)


def star(f: Morphism) -> Morphism:
    """Contravariant transpose f*: B* -> A* (no conjugation)."""
    from .objects import Dual
    return Morphism(Dual(f.cod), Dual(f.dom), f.array.T.copy(), f.semiring)


def lower_star(f: Morphism) -> Morphism:
    """Covariant entrywise conjugate f_*: A* -> B*."""
    from .objects import Dual
    return Morphism(Dual(f.dom), Dual(f.cod), f.semiring.involution(f.array), f.semiring)


def duals(f: Morphism) -> tuple[Morphism, Morphism]:
    """(f*, f_*); the adjoint factors as dagger(f) = lower_star(star(f)) = star(lower_star(f))."""
    return star(f), lower_star(f)


def direct_sum(f: Morphism, g: Morphism) -> Morphism:
    """Block-diagonal sum f (+) g; zero-dimensional blocks are fine."""
    if f.semiring is not g.semiring:
        raise TypeMismatch("cannot direct-sum morphisms over different semirings")
    s = f.semiring
    fa, ga = f.array, g.array
    arr = np.zeros((fa.shape[0] + ga.shape[0], fa.shape[1] + ga.shape[1]), dtype=s.dtype)
    arr[: fa.shape[0], : fa.shape[1]] = fa
    arr[fa.shape[0]:, fa.shape[1]:] = ga
    return Morphism(Oplus(f.dom, g.dom), Oplus(f.cod, g.cod), arr, s)
