"""Strongly compact closed structure over the matrix models.

Everything here is defined by the categorical composites themselves: units and
counits, names, scalar action, the two trace forms, the Hilbert-Schmidt inner
product, doubling, and the phase witnesses.  Structural isomorphisms are
explicit morphisms (never syntactic identities), so every law check genuinely
exercises them:

* lam(A): A -> I @ A and rho(A): A -> A @ I are identity matrices with
  retyped ends,
* alpha(A,B,C): A @ (B @ C) -> (A @ B) @ C is the identity matrix (the
  lexicographic basis order is associative),
* sigma(A,B): A @ B -> B @ A is the transposition permutation,
* the dual of the unit is realized strictly by object normalization.
"""
from __future__ import annotations

import numpy as np

from .errors import (AbsorptionMismatch, InvariantViolation, NotProjector,
                     TypeMismatch)
from .morphisms import (Morphism, compose, dagger, duals, equal, identity,
                        scalar_value, tensor)
from .objects import ObjectExpr, Tensor, UNIT, dim, dual, format_object, normalize
from .semirings import InvolutiveSemiring


def lam(a: ObjectExpr, s: InvolutiveSemiring) -> Morphism:
    """Left unitor A -> I @ A."""
    return Morphism(a, Tensor(UNIT, a), np.eye(dim(a), dtype=s.dtype), s)


def rho(a: ObjectExpr, s: InvolutiveSemiring) -> Morphism:
    """Right unitor A -> A @ I."""
    return Morphism(a, Tensor(a, UNIT), np.eye(dim(a), dtype=s.dtype), s)


def alpha(a: ObjectExpr, b: ObjectExpr, c: ObjectExpr, s: InvolutiveSemiring) -> Morphism:
    """Associator A @ (B @ C) -> (A @ B) @ C."""
    n = dim(a) * dim(b) * dim(c)
    return Morphism(Tensor(a, Tensor(b, c)), Tensor(Tensor(a, b), c),
                    np.eye(n, dtype=s.dtype), s)


def sigma(a: ObjectExpr, b: ObjectExpr, s: InvolutiveSemiring) -> Morphism:
    """Symmetry A @ B -> B @ A, as the basis transposition permutation."""
    da, db = dim(a), dim(b)
    arr = np.zeros((da * db, da * db), dtype=s.dtype)
    cols = np.arange(da * db)
    i, j = divmod(cols, db)
    arr[j * da + i, cols] = s.one
    return Morphism(Tensor(a, b), Tensor(b, a), arr, s)


def unit(a: ObjectExpr, s: InvolutiveSemiring) -> Morphism:
    """The unit eta_A: I -> A* @ A, the column vector of the identity.

    For a zero-dimensional object this is the empty column.
    """
    d = dim(a)
    arr = np.zeros((d * d, 1), dtype=s.dtype)
    idx = np.arange(d)
    arr[idx * d + idx, 0] = s.one
    return Morphism(UNIT, Tensor(dual(a), a), arr, s)


def name(f: Morphism) -> Morphism:
    """The name of f: I -> A* @ B, i.e. (1 (x) f) o eta_A.

    With the fixed basis conventions this is the column-stacking vectorization
    of the matrix of f.  The absorption unfolding (f* (x) 1) o eta_B is
    computed independently every call and must agree within tolerance.
    """
    s = f.semiring
    via_dom = compose(tensor(identity(dual(f.dom), s), f), unit(f.dom, s))
    f_star, _ = duals(f)
    via_cod = compose(tensor(f_star, identity(f.cod, s)), unit(f.cod, s))
    if not equal(via_dom, via_cod):
        raise AbsorptionMismatch(
            f"name unfoldings disagree for {f!r}")
    return via_dom


def coname(f: Morphism) -> Morphism:
    """The coname A @ B* -> I, the dagger of the name of f_*.

    For f = 1_A this is the counit eta_{A*}(dagger): A @ A* -> I.
    """
    _, f_lower = duals(f)
    return dagger(name(f_lower))


def scalar_mult(s_mor: Morphism, f: Morphism) -> Morphism:
    """Scalar action s . f := lam_B(dagger) o (s (x) f) o lam_A."""
    if not s_mor.is_scalar:
        raise TypeMismatch("scalar action needs a scalar on the left")
    return compose(dagger(lam(f.cod, f.semiring)),
                   compose(tensor(s_mor, f), lam(f.dom, f.semiring)))


def bipartite_projector(f: Morphism) -> Morphism:
    """P_f := name(f) o name(f)(dagger), an endomorphism of A* @ B."""
    n = name(f)
    return compose(n, dagger(n))


def double(f: Morphism) -> Morphism:
    """The doubled form f (x) f(dagger): A @ B -> B @ A."""
    return tensor(f, dagger(f))


def trace(f: Morphism) -> Morphism:
    """Categorical trace of an endomorphism: eta(dagger) o (1 (x) f) o eta."""
    if f.dom != f.cod:
        raise TypeMismatch(f"trace needs an endomorphism, got {f!r}")
    s = f.semiring
    e = unit(f.dom, s)
    return compose(dagger(e), compose(tensor(identity(dual(f.dom), s), f), e))


def partial_trace(f: Morphism, traced: ObjectExpr) -> Morphism:
    """Trace out a leading tensor factor of f: traced @ B -> traced @ C.

    Executes the composite lam(dagger) o (eta(dagger) (x) 1) o (1 (x) f) o
    (eta (x) 1) o lam with explicit associators.  For B = C = I this is the
    matrix trace as a scalar.
    """
    a = normalize(traced)
    s = f.semiring
    if not (isinstance(f.dom, Tensor) and isinstance(f.cod, Tensor)
            and f.dom.left == a and f.cod.left == a):
        raise TypeMismatch(
            f"partial trace over {format_object(a)} needs matching leading factors, got {f!r}")
    b, c = f.dom.right, f.cod.right
    e = unit(a, s)
    down = compose(tensor(e, identity(b, s)), lam(b, s))            # B -> (A* @ A) @ B
    down = compose(dagger(alpha(dual(a), a, b, s)), down)           # -> A* @ (A @ B)
    mid = compose(tensor(identity(dual(a), s), f), down)            # -> A* @ (A @ C)
    up = compose(alpha(dual(a), a, c, s), mid)                      # -> (A* @ A) @ C
    up = compose(tensor(dagger(e), identity(c, s)), up)             # -> I @ C
    return compose(dagger(lam(c, s)), up)                           # -> C


def hs_inner(f: Morphism, g: Morphism) -> Morphism:
    """Hilbert-Schmidt inner product <f|g> := name(f)(dagger) o name(g)."""
    if f.dom != g.dom or f.cod != g.cod:
        raise TypeMismatch("inner product needs parallel morphisms")
    return compose(dagger(name(f)), name(g))


def hs_norm_sq(f: Morphism) -> Morphism:
    """The squared Hilbert-Schmidt norm ||f|| := name(f)(dagger) o name(f)."""
    return hs_inner(f, f)


def phase_witnesses(f: Morphism, g: Morphism) -> tuple[Morphism, Morphism]:
    """Scalars (s, t) with s . f = t . g and s o s(dagger) = t o t(dagger).

    Defined whenever the doubled forms of f and g agree: s := <f|f>,
    t := <g|f>.  Both guarantees are re-checked numerically before returning.
    """
    if not equal(double(f), double(g)):
        raise NotPhaseEquivalent("doubled forms differ; no phase witnesses exist")
    s = hs_norm_sq(f)
    t = compose(dagger(name(g)), name(f))
    if not equal(scalar_mult(s, f), scalar_mult(t, g)):
        raise InvariantViolation("phase witnesses failed s . f = t . g")
    if not equal(compose(s, dagger(s)), compose(t, dagger(t))):
        raise InvariantViolation("phase witnesses failed s s(dagger) = t t(dagger)")
    return s, t


def born_prob(psi: Morphism, p: Morphism) -> Morphism:
    """The probability loop psi(dagger) o P o psi for a projector P.

    P must be idempotent and self-adjoint within tolerance.  The loop value is
    cross-checked against Tr(P o rho) with rho = psi o psi(dagger); a mismatch
    means the model is broken and raises.
    """
    if psi.dom != UNIT:
        raise TypeMismatch("states are morphisms out of I")
    if p.dom != p.cod or p.dom != psi.cod:
        raise TypeMismatch("projector must be an endomorphism of the state space")
    if not equal(compose(p, p), p) or not equal(dagger(p), p):
        raise NotProjector(f"not an idempotent self-adjoint map: {p!r}")
    prob = compose(dagger(psi), compose(p, psi))
    rho_state = compose(psi, dagger(psi))
    via_trace = trace(compose(p, rho_state))
    if not equal(prob, via_trace):
        raise InvariantViolation("probability loop disagrees with Tr(P o rho)")
    return prob


def state_density_identity_holds(psi: Morphism, rel: float | None = None) -> bool:
    """Check psi o psi(dagger) = rho(dagger) o (psi (x) psi(dagger)) o lam."""
    s = psi.semiring
    lhs = compose(psi, dagger(psi))
    rhs = compose(dagger(rho(psi.cod, s)),
                  compose(tensor(psi, dagger(psi)), lam(psi.cod, s)))
    return equal(lhs, rhs, rel)


def yanking_composite(a: ObjectExpr, s: InvolutiveSemiring) -> Morphism:
    """lam(dagger) o (eta_{A*}(dagger) (x) 1) o alpha o (1 (x) eta_A) o rho: A -> A.

    The yanking axiom says this equals the identity on A.
    """
    e = unit(a, s)
    e_dual = unit(dual(a), s)
    m = compose(tensor(identity(a, s), e), rho(a, s))        # A -> A @ (A* @ A)
    m = compose(alpha(a, dual(a), a, s), m)                  # -> (A @ A*) @ A
    m = compose(tensor(dagger(e_dual), identity(a, s)), m)   # -> I @ A
    return compose(dagger(lam(a, s)), m)                     # -> A


def born_probability_value(psi: Morphism, p: Morphism) -> float:
    """Convenience: the loop value as a nonnegative float (complex model)."""
    v = scalar_value(born_prob(psi, p))
    return float(np.real(v))
