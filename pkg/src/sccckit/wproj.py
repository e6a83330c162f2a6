"""Global-phase quotient of a matrix model.

Arrows of the quotient are morphisms taken up to a unit-modulus scalar
factor.  Concretely a ``WMorphism`` keeps a representative together with its
doubled form f(x)f(dagger); the doubled form is the semantic identity of the
arrow, the representative is bookkeeping.  Equality is decided three ways at
once and the answers must agree or we refuse to answer.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import core, ortho
from .errors import CriterionDisagreement, TypeMismatch
from .models import ModelHandle
from .morphisms import (Morphism, compose, dagger, direct_sum, equal,
                        identity, lower_star, scalar, scalar_value, tensor,
                        zeros)
from .objects import ObjectExpr, UNIT
from .semirings import COMPLEX


@dataclass(frozen=True, eq=False)
class WMorphism:
    """A phase class: representative plus cached doubled form.

    Constructors keep ``doubled == tensor(rep, dagger(rep))``; the field is
    stored rather than recomputed so that a corrupted pipeline shows up as a
    criterion disagreement instead of being silently repaired.
    """

    rep: Morphism
    doubled: Morphism

    @property
    def dom(self) -> ObjectExpr:
        return self.rep.dom

    @property
    def cod(self) -> ObjectExpr:
        return self.rep.cod

    @property
    def is_scalar(self) -> bool:
        return self.rep.is_scalar

    def __repr__(self) -> str:
        return f"WMorphism({self.rep!r})"


def lift(f: Morphism) -> WMorphism:
    """Send a morphism to its phase class."""
    return WMorphism(f, core.double(f))


def wcompose(g: WMorphism, f: WMorphism) -> WMorphism:
    return lift(compose(g.rep, f.rep))


def wtensor(f: WMorphism, g: WMorphism) -> WMorphism:
    return lift(tensor(f.rep, g.rep))


def wdagger(f: WMorphism) -> WMorphism:
    return lift(dagger(f.rep))


def woplus(f: WMorphism, g: WMorphism) -> WMorphism:
    """Block sum on representatives.

    This is NOT well defined on phase classes (the choice of representatives
    leaks into the answer); it is exposed because block sums of canonical
    positive representatives are well defined and the Born checks need them.
    """
    return lift(direct_sum(f.rep, g.rep))


@dataclass(frozen=True)
class WEqualResult:
    """Per-criterion breakdown of a phase-class equality test."""

    by_double: bool
    by_lower: bool
    by_projector: bool

    @property
    def equal(self) -> bool:
        return self.by_double

    @property
    def agree(self) -> bool:
        return self.by_double == self.by_lower == self.by_projector


def wequal(a: WMorphism, b: WMorphism, rel: float | None = None) -> WEqualResult:
    """Decide a = b three independent ways; the answers must coincide.

    Criterion 1 compares the cached doubled forms, criterion 2 compares
    f(x)f(lower-star), criterion 3 compares the bipartite projectors; all are
    recomputed from the representatives except the first, so a tampered cache
    surfaces as a disagreement.
    """
    if a.dom != b.dom or a.cod != b.cod:
        raise TypeMismatch(f"cannot compare {a.dom}->{a.cod} with {b.dom}->{b.cod}")
    by_double = equal(a.doubled, b.doubled, rel)
    by_lower = equal(tensor(a.rep, lower_star(a.rep)),
                     tensor(b.rep, lower_star(b.rep)), rel)
    by_projector = equal(core.bipartite_projector(a.rep),
                         core.bipartite_projector(b.rep), rel)
    result = WEqualResult(by_double, by_lower, by_projector)
    if not result.agree:
        raise CriterionDisagreement(
            f"equality criteria disagree: doubled={by_double} "
            f"lower={by_lower} projector={by_projector}")
    return result


def canonical_rep(f: Morphism) -> Morphism:
    """Rotate f by a unit scalar so its largest-modulus entry is real >= 0.

    Ties break at the lowest row-major index; the zero morphism is returned
    unchanged.  Models without phases (identity involution, booleans) are
    already canonical.
    """
    if f.semiring is not COMPLEX or f.array.size == 0:
        return f
    flat = np.abs(f.array).ravel(order="C")
    idx = int(np.argmax(flat))
    top = f.array.ravel(order="C")[idx]
    if abs(top) <= 1e-300:
        return f
    phase = top / abs(top)
    return Morphism(f.dom, f.cod, f.array * np.conjugate(phase), f.semiring)


class WProjModel:
    """The quotient of a base model, presented with the same surface as
    ``ModelHandle`` so every suite can run on either.

    Scalars of the quotient are the doubled values (nonnegative reals over
    the complex base); scalar constructors pick the canonical nonnegative
    representative, the square root of the value.
    """

    has_biproducts = False

    def __init__(self, base: ModelHandle):
        self.base = base
        self.name = f"wproj:{base.name}"
        self.semiring = base.semiring

    # -- constructors --------------------------------------------------------

    def identity(self, a: ObjectExpr) -> WMorphism:
        return lift(identity(a, self.semiring))

    def zero(self, a: ObjectExpr, b: ObjectExpr) -> WMorphism:
        return lift(zeros(a, b, self.semiring))

    def morphism(self, dom: ObjectExpr, cod: ObjectExpr, array) -> WMorphism:
        return lift(self.base.morphism(dom, cod, array))

    def scalar(self, value) -> WMorphism:
        v = complex(value)
        if abs(v.imag) > 1e-9 or v.real < -1e-9:
            raise TypeMismatch(f"quotient scalars are nonnegative reals, got {value}")
        root = np.sqrt(max(v.real, 0.0))
        if self.semiring.dtype == np.bool_:
            root = 1 if v.real > 0 else 0
        return lift(scalar(root, self.semiring))

    # -- structural operations on representatives -----------------------------

    def compose(self, g: WMorphism, f: WMorphism) -> WMorphism:
        return wcompose(g, f)

    def tensor(self, f: WMorphism, g: WMorphism) -> WMorphism:
        return wtensor(f, g)

    def dagger(self, f: WMorphism) -> WMorphism:
        return wdagger(f)

    def oplus(self, f: WMorphism, g: WMorphism) -> WMorphism:
        return woplus(f, g)

    def trace(self, f: WMorphism) -> WMorphism:
        return lift(core.trace(f.rep))

    def norm_sq(self, f: WMorphism) -> WMorphism:
        return lift(core.hs_norm_sq(f.rep))

    def equal(self, f: WMorphism, g: WMorphism, rel: float | None = None) -> bool:
        return wequal(f, g, rel).equal

    def scalar_value(self, s: WMorphism):
        v = scalar_value(s.doubled)
        if np.issubdtype(type(v), np.complexfloating) or isinstance(v, complex):
            if abs(v.imag) > 1e-9:
                raise TypeMismatch(f"doubled scalar came out non-real: {v}")
            return float(v.real)
        return v

    def scalar_power(self, s: WMorphism, exponent) -> WMorphism:
        if self.semiring.dtype == np.bool_:
            return s if float(exponent) != 0 else self.scalar(1)
        v = float(self.scalar_value(s))
        return self.scalar(v ** float(exponent))

    def projection(self, decomp: ortho.OplusDecomposition, i: int) -> WMorphism:
        return lift(ortho.pseudo_projection(decomp, i, self.semiring))

    def injection(self, decomp: ortho.OplusDecomposition, i: int) -> WMorphism:
        return lift(ortho.pseudo_injection(decomp, i, self.semiring))

    def derived_sum(self, f: WMorphism, g: WMorphism) -> WMorphism:
        return lift(ortho.derived_sum(f.rep, g.rep))

    # -- sampling (delegates to the base model, then lifts) --------------------

    def sample_morphism(self, rng, dom, cod) -> WMorphism:
        return lift(self.base.sample_morphism(rng, dom, cod))

    def sample_state(self, rng, a, normalized: bool = False) -> WMorphism:
        return lift(self.base.sample_state(rng, a, normalized))

    def sample_positive(self, rng, a) -> WMorphism:
        return lift(self.base.sample_positive(rng, a))

    def sample_unit_scalar(self, rng) -> WMorphism:
        # every unit-modulus scalar collapses to the class of 1
        return lift(self.base.sample_unit_scalar(rng))

    def lift(self, f: Morphism) -> WMorphism:
        return lift(f)

    def canonical(self, f: WMorphism) -> Morphism:
        return canonical_rep(f.rep)


def check_prep_state(model, trials: int = 100, seed: int = 0,
                     tolerance: float | None = None):
    """Test whether equal doubled forms force equal morphisms, three ways.

    Over complex matrices the answer is no (any nontrivial phase is a
    witness) and the report records that as an expected failure.  On the
    quotient the implication must hold.  Phase-free models are checked both
    on random samples and, at small dimensions, by exhaustive enumeration.
    """
    from .report import CheckResult, VerificationReport, serialize_morphism
    from .objects import Gen

    results: list[CheckResult] = []
    is_quotient = isinstance(model, WProjModel)
    is_complex_plain = (not is_quotient) and model.semiring is COMPLEX

    def rep_of(x):
        return x.rep if isinstance(x, WMorphism) else x

    def witness_pair(f, g, extra=None):
        w = {"f": serialize_morphism(rep_of(f)), "g": serialize_morphism(rep_of(g))}
        if extra:
            w.update(extra)
        return w

    a = Gen("A", 2)
    formulations = [
        ("doubles-determine-morphisms",
         "f(x)f(dagger) = g(x)g(dagger)  =>  f = g",
         lambda m, f, g: (m.equal(m.tensor(f, m.dagger(f)), m.tensor(g, m.dagger(g))),
                          m.equal(f, g))),
        ("projectors-determine-names",
         "P_f = P_g  =>  name(f) = name(g)",
         lambda m, f, g: (_projector_equal(m, f, g), _name_equal(m, f, g))),
        ("densities-determine-states",
         "psi o psi(dagger) = phi o phi(dagger)  =>  psi = phi",
         lambda m, f, g: (m.equal(m.compose(f, m.dagger(f)), m.compose(g, m.dagger(g))),
                          m.equal(f, g))),
    ]

    for check_idx, (check_name, law, run) in enumerate(formulations):
        states_only = check_name == "densities-determine-states"
        violation = None
        held = 0
        for trial in range(trials):
            rng = np.random.default_rng([seed, check_idx, trial])
            f = (model.sample_state(rng, a) if states_only
                 else model.sample_morphism(rng, a, a))
            u = model.sample_unit_scalar(rng)
            g = _scale(model, u, f)
            antecedent, consequent = run(model, f, g)
            if not antecedent:
                continue
            held += 1
            if not consequent:
                violation = witness_pair(f, g)
                break
        if is_complex_plain:
            # the axiom must be violated here; exhibit the canonical witness
            f = model.morphism(UNIT if states_only else a,
                               a, _unit_witness_array(states_only))
            g = _scale(model, model.scalar(1j), f)
            antecedent, consequent = run(model, f, g)
            if antecedent and not consequent:
                results.append(CheckResult(
                    check_name, law, "expected-fail",
                    witness_pair(f, g, {"phase": "i"})))
            else:
                results.append(CheckResult(
                    check_name, law, "fail",
                    witness_pair(f, g, {"note": "axiom unexpectedly held"})))
        elif violation is not None:
            results.append(CheckResult(check_name, law, "fail", violation))
        else:
            results.append(CheckResult(
                check_name, law, "pass", {"antecedent_pairs": held}))

    if (not is_quotient) and model.semiring is not COMPLEX:
        results.append(_grid_check(model))

    return VerificationReport(
        suite="prep-state", model=model.name, seed=seed,
        tolerance=tolerance if tolerance is not None else 1e-9,
        trials=trials, results=results)


def _scale(model, u, f):
    """u-scaled f inside whatever model we were handed."""
    if isinstance(f, WMorphism):
        return lift(core.scalar_mult(u.rep, f.rep))
    return core.scalar_mult(u, f)


def _unit_witness_array(states_only: bool):
    if states_only:
        return np.array([[1.0], [1.0]]) / np.sqrt(2)
    return np.array([[1.0, 2.0], [3.0, 4.0]])


def _projector_equal(m, f, g) -> bool:
    pf, pg = core.bipartite_projector(_rep(f)), core.bipartite_projector(_rep(g))
    if isinstance(f, WMorphism):
        return m.equal(lift(pf), lift(pg))
    return m.equal(pf, pg)


def _name_equal(m, f, g) -> bool:
    nf, ng = core.name(_rep(f)), core.name(_rep(g))
    if isinstance(f, WMorphism):
        return m.equal(lift(nf), lift(ng))
    return m.equal(nf, ng)


def _rep(x) -> Morphism:
    return x.rep if isinstance(x, WMorphism) else x


def _grid_check(model):
    """Exhaustively confirm the implication on small matrices.

    Every matrix over the entry grid is paired with every other of the same
    shape; any pair with equal doubled forms must be equal.
    """
    from itertools import product
    from .report import CheckResult, serialize_morphism
    from .objects import Gen

    entries = [0, 1] if model.semiring.dtype == np.bool_ else [0.0, 1.0, 2.0]
    shapes = [(1, 1), (1, 2), (2, 1), (2, 2)]
    checked = 0
    for rows, cols in shapes:
        dom = UNIT if cols == 1 else Gen("A", cols)
        cod = UNIT if rows == 1 else Gen("B", rows)
        cells = rows * cols
        mats = [model.morphism(dom, cod, np.array(v).reshape(rows, cols))
                for v in product(entries, repeat=cells)]
        doubles = [core.double(f) for f in mats]
        for i, f in enumerate(mats):
            for j, g in enumerate(mats):
                if equal(doubles[i], doubles[j]) and not equal(f, g):
                    return CheckResult(
                        "doubles-determine-morphisms-exhaustive",
                        "f(x)f(dagger) = g(x)g(dagger)  =>  f = g  (grid)",
                        "fail",
                        {"f": serialize_morphism(f), "g": serialize_morphism(g)})
                checked += 1
    return CheckResult(
        "doubles-determine-morphisms-exhaustive",
        "f(x)f(dagger) = g(x)g(dagger)  =>  f = g  (grid)",
        "pass", {"pairs_checked": checked})
