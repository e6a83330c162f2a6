"""Concrete matrix models and seeded sampling.

A ``ModelHandle`` bundles a semiring with the operations the verification
suites need, so the same checker code can also run against the phase quotient
(which exposes the identical surface).  Three models ship: ``fdhilb`` (complex
matrices), ``rel`` (boolean matrices, i.e. relations) and ``weights``
(nonnegative reals, a phase-free toy model).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DegenerateSample, TypeMismatch
from .morphisms import (Morphism, compose, dagger, direct_sum, equal, identity,
                        morphism, scalar, scalar_value, tensor, zeros)
from .objects import Gen, ObjectExpr, UNIT, ZERO, dim
from .semirings import (BOOLEAN, COMPLEX, NONNEG, InvolutiveSemiring,
                        check_semiring_laws)
from . import core, ortho


@dataclass(frozen=True)
class ModelHandle:
    """A named semiring model with biproduct structure."""

    name: str
    semiring: InvolutiveSemiring
    has_biproducts: bool = True

    # -- constructors --------------------------------------------------------

    def identity(self, a: ObjectExpr) -> Morphism:
        return identity(a, self.semiring)

    def zero(self, a: ObjectExpr, b: ObjectExpr) -> Morphism:
        return zeros(a, b, self.semiring)

    def morphism(self, dom: ObjectExpr, cod: ObjectExpr, array) -> Morphism:
        return morphism(dom, cod, array, self.semiring)

    def scalar(self, value) -> Morphism:
        return scalar(value, self.semiring)

    # -- structural operations (plain model: direct delegation) ---------------

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        return compose(g, f)

    def tensor(self, f: Morphism, g: Morphism) -> Morphism:
        return tensor(f, g)

    def dagger(self, f: Morphism) -> Morphism:
        return dagger(f)

    def oplus(self, f: Morphism, g: Morphism) -> Morphism:
        return direct_sum(f, g)

    def trace(self, f: Morphism) -> Morphism:
        return core.trace(f)

    def norm_sq(self, f: Morphism) -> Morphism:
        return core.hs_norm_sq(f)

    def equal(self, f: Morphism, g: Morphism, rel: float | None = None) -> bool:
        return equal(f, g, rel)

    def scalar_value(self, s: Morphism):
        return scalar_value(s)

    def scalar_power(self, s: Morphism, exponent) -> Morphism:
        """s raised to a rational power; needs a nonneg real value unless the
        exponent is an integer or the semiring is idempotent (boolean)."""
        from .errors import RootUnavailable
        v = scalar_value(s)
        if self.semiring is BOOLEAN:
            # x*x = x, so every positive power of a boolean scalar is itself
            return s if float(exponent) != 0 else self.scalar(self.semiring.one)
        q = float(exponent)
        if q == int(q):
            return self.scalar(v ** int(q))
        if abs(complex(v).imag) > 1e-9 or complex(v).real < -1e-9:
            raise RootUnavailable(
                f"cannot take power {exponent} of non-positive scalar {v}")
        return self.scalar(max(complex(v).real, 0.0) ** q)

    def projection(self, decomp: ortho.OplusDecomposition, i: int) -> Morphism:
        return ortho.pseudo_projection(decomp, i, self.semiring)

    def injection(self, decomp: ortho.OplusDecomposition, i: int) -> Morphism:
        return ortho.pseudo_injection(decomp, i, self.semiring)

    def derived_sum(self, f: Morphism, g: Morphism) -> Morphism:
        return ortho.derived_sum(f, g)

    # -- sampling -------------------------------------------------------------

    def sample_morphism(self, rng: np.random.Generator, dom: ObjectExpr,
                        cod: ObjectExpr) -> Morphism:
        arr = self.semiring.sample(rng, (dim(cod), dim(dom)))
        return Morphism(dom, cod, arr, self.semiring)

    def sample_state(self, rng: np.random.Generator, a: ObjectExpr,
                     normalized: bool = False) -> Morphism:
        psi = self.sample_morphism(rng, UNIT, a)
        if normalized:
            if self.semiring is not COMPLEX:
                raise TypeMismatch("normalization is only meaningful in fdhilb")
            n = np.linalg.norm(psi.array)
            if n < 1e-12:
                raise DegenerateSample("sampled a near-zero state")
            psi = Morphism(UNIT, a, psi.array / n, self.semiring)
        return psi

    def sample_positive(self, rng: np.random.Generator, a: ObjectExpr) -> Morphism:
        """A positive endomorphism h = f(dagger) o f of a."""
        f = self.sample_morphism(rng, a, a)
        return compose(dagger(f), f)

    def sample_unit_scalar(self, rng: np.random.Generator) -> Morphism:
        """A scalar u with u o u(dagger) = 1 (a phase when the model has them)."""
        if self.semiring is COMPLEX:
            return self.scalar(np.exp(2j * np.pi * rng.random()))
        return self.scalar(self.semiring.one)

    def lift(self, f: Morphism) -> Morphism:
        """Plain models are their own quotient-free home; identity."""
        return f


@lru_cache(maxsize=None)
def fdhilb() -> ModelHandle:
    """Complex matrices with conjugate-transpose adjoint."""
    check_semiring_laws(COMPLEX, np.random.default_rng(7))
    return ModelHandle("fdhilb", COMPLEX)


@lru_cache(maxsize=None)
def rel_model() -> ModelHandle:
    """Boolean matrices: relations with relational converse as adjoint."""
    check_semiring_laws(BOOLEAN, np.random.default_rng(7))
    return ModelHandle("rel", BOOLEAN)


@lru_cache(maxsize=None)
def weight_model() -> ModelHandle:
    """Nonnegative real matrices: a phase-free model with identity involution."""
    check_semiring_laws(NONNEG, np.random.default_rng(7))
    return ModelHandle("weights", NONNEG)


def semiring_model(s: InvolutiveSemiring, name: str | None = None) -> ModelHandle:
    """Wrap an arbitrary involutive semiring after spot-checking its laws."""
    check_semiring_laws(s, np.random.default_rng(7))
    return ModelHandle(name or s.name, s)


def resolve_model(selector: str):
    """Map a CLI selector (fdhilb, rel, weights, wproj:<base>) to a handle."""
    if selector.startswith("wproj:"):
        from .wproj import WProjModel
        return WProjModel(resolve_model(selector[len("wproj:"):]))
    try:
        return {"fdhilb": fdhilb, "rel": rel_model, "weights": weight_model}[selector]()
    except KeyError:
        raise ValueError(f"unknown model {selector!r}; "
                         "expected fdhilb, rel, weights or wproj:<base>") from None


# -- random unitaries ---------------------------------------------------------

def _modified_gram_schmidt(m: np.ndarray) -> np.ndarray | None:
    """Orthonormalize columns; None when a column degenerates."""
    q = m.astype(np.complex128).copy()
    n = q.shape[1]
    for k in range(n):
        v = q[:, k]
        for j in range(k):
            v = v - np.vdot(q[:, j], v) * q[:, j]
        norm = np.linalg.norm(v)
        if norm < 1e-8:
            return None
        q[:, k] = v / norm
    return q


def random_unitary(m: ModelHandle, dims, seed, dom: ObjectExpr | None = None) -> Morphism:
    """A seeded Haar-ish unitary dom -> (+)_i A_i with dim(A_i) = dims[i].

    Built by orthonormalizing a seeded complex sample; resamples up to 8 times
    before giving up with ``DegenerateSample``.  Only defined over fdhilb.
    """
    if m.semiring is not COMPLEX:
        raise TypeMismatch("random unitaries are sampled in fdhilb only")
    dims = list(dims)
    total = sum(dims)
    if total < 1 or any(d < 0 for d in dims):
        raise TypeMismatch(f"bad block dimensions {dims}")
    rng = np.random.default_rng(seed)
    q = None
    for _ in range(8):
        q = _modified_gram_schmidt(m.semiring.sample(rng, (total, total)))
        if q is not None:
            break
    if q is None:
        raise DegenerateSample("orthonormalization kept degenerating")
    parts = [ZERO if d == 0 else (UNIT if d == 1 else Gen(f"A{i}", d))
             for i, d in enumerate(dims)]
    cod = ortho.OplusDecomposition.from_parts(parts).whole
    if dom is None:
        dom = UNIT if total == 1 else Gen("A", total)
    if dim(dom) != total:
        raise TypeMismatch("domain dimension does not match the blocks")
    return Morphism(dom, cod, q, m.semiring)


# -- biproduct pairing --------------------------------------------------------

def pairing(fs) -> Morphism:
    """<f_1, ..., f_n>: C -> (+)_i A_i, stacking the blocks."""
    fs = list(fs)
    if not fs:
        raise TypeMismatch("pairing needs at least one component")
    dom = fs[0].dom
    s = fs[0].semiring
    for f in fs:
        if f.dom != dom or f.semiring is not s:
            raise TypeMismatch("pairing components must share their domain")
    cod = ortho.OplusDecomposition.from_parts([f.cod for f in fs]).whole
    return Morphism(dom, cod, np.vstack([f.array for f in fs]), s)


def copairing(fs) -> Morphism:
    """[f_1, ..., f_n]: (+)_i A_i -> C, the dagger-dual of pairing."""
    fs = list(fs)
    if not fs:
        raise TypeMismatch("copairing needs at least one component")
    cod = fs[0].cod
    s = fs[0].semiring
    for f in fs:
        if f.cod != cod or f.semiring is not s:
            raise TypeMismatch("copairing components must share their codomain")
    dom = ortho.OplusDecomposition.from_parts([f.dom for f in fs]).whole
    return Morphism(dom, cod, np.hstack([f.array for f in fs]), s)


def verify_model_axioms(m: ModelHandle, max_dim: int = 6, trials: int = 50,
                        seed: int = 0):
    """Run the full structural axiom suite against a model; returns the report."""
    from .suites import run_suite
    return run_suite("sccc", m, trials=trials, seed=seed, max_dim=max_dim)
