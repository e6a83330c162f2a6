"""Randomized law suites over the concrete models.

Each suite turns a family of categorical laws into seeded property checks
against a model facade and folds the outcomes into a VerificationReport.
Check order is load-bearing: the per-check random stream is seeded with
(seed, check_index, trial), so inserting a check in the middle of a suite
shifts every stream after it.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce

import numpy as np

from . import born, core, ortho
from .errors import SccckitError
from .models import ModelHandle, copairing, pairing, random_unitary
from .morphisms import (compose, dagger, direct_sum, distance, equal,
                        identity, lower_star, morphism, scalar, scalar_value,
                        star, tensor)
from .objects import Gen, Oplus, Tensor, UNIT, dim, dual, format_object
from .report import CheckResult, VerificationReport, serialize_morphism
from .semirings import COMPLEX
from .wproj import (WProjModel, canonical_rep, check_prep_state, lift,
                    wcompose, wdagger, wequal, wtensor)


SUITE_NAMES = ("sccc", "wproj", "prep-state", "ortho", "born", "equivalence")


def run_suite(suite: str, model, trials: int = 100, seed: int = 0,
              tolerance: float | None = None, max_dim: int = 4,
              nu=Fraction(1)) -> VerificationReport:
    """Run one named suite against a model and return its report."""
    if suite == "prep-state":
        return check_prep_state(model, trials=trials, seed=seed,
                                tolerance=tolerance)
    if suite == "wproj":
        w = model if isinstance(model, WProjModel) else WProjModel(model)
        results = _wproj_results(w, trials, seed, tolerance, max_dim)
        return _report(suite, w, seed, tolerance, trials, results)
    if suite in ("sccc", "ortho"):
        if isinstance(model, WProjModel):
            raise ValueError(
                f"the {suite} suite runs on plain matrix models; "
                "use the wproj suite for the quotient")
        fn = _sccc_results if suite == "sccc" else _ortho_results
        results = fn(model, trials, seed, tolerance, max_dim)
        return _report(suite, model, seed, tolerance, trials, results)
    if suite == "born":
        results = _born_results(model, trials, seed, tolerance, Fraction(nu))
        return _report(suite, model, seed, tolerance, trials, results)
    if suite == "equivalence":
        results = born.check_theorem_equivalence(model, trials=min(trials, 30),
                                                 seed=seed)
        return _report(suite, model, seed, tolerance, trials, results)
    raise ValueError(f"unknown suite {suite!r}; choose one of {SUITE_NAMES}")


def _report(suite, model, seed, tolerance, trials, results):
    return VerificationReport(suite=suite, model=model.name, seed=seed,
                              tolerance=tolerance, trials=trials,
                              results=list(results))


class _Recorder:
    """Collects check results and hands out the per-check random streams."""

    def __init__(self, trials: int, seed: int):
        self.trials = trials
        self.seed = seed
        self.results: list[CheckResult] = []

    def per_trial(self, name: str, law: str, fn, trials: int | None = None) -> None:
        """fn(rng) -> witness dict on failure, None on success; first hit wins."""
        idx = len(self.results)
        failure = None
        for t in range(trials if trials is not None else self.trials):
            rng = np.random.default_rng([self.seed, idx, t])
            try:
                failure = fn(rng)
            except SccckitError as exc:
                failure = {"error": str(exc)}
            if failure is not None:
                failure.setdefault("trial", t)
                break
        status = "pass" if failure is None else "fail"
        self.results.append(CheckResult(name, law, status, failure))

    def whole(self, name: str, law: str, fn) -> None:
        """fn(rng) runs once over a deterministic sweep."""
        rng = np.random.default_rng([self.seed, len(self.results), 0])
        try:
            failure = fn(rng)
        except SccckitError as exc:
            failure = {"error": str(exc)}
        self.results.append(CheckResult(
            name, law, "pass" if failure is None else "fail", failure))

    def expected_fail(self, name: str, law: str, fn) -> None:
        """fn(rng) -> (violated, witness); violation is the healthy outcome."""
        rng = np.random.default_rng([self.seed, len(self.results), 0])
        violated, witness = fn(rng)
        status = "expected-fail" if violated else "fail"
        if not violated:
            witness = dict(witness or {})
            witness.setdefault("note", "the law unexpectedly held")
        self.results.append(CheckResult(name, law, status, witness))


def _gen(rng, label: str, hi: int) -> Gen:
    return Gen(label, int(rng.integers(1, hi + 1)))


def _structured_object(rng, max_dim: int, label: str = "A"):
    """A small random object mixing leaves, duals, sums and tensors."""
    hi = max(1, min(3, max_dim))
    roll = int(rng.integers(0, 6))
    if roll == 0:
        return UNIT
    if roll == 1:
        return dual(_gen(rng, label, hi))
    if roll == 2:
        return Oplus(_gen(rng, label, hi), _gen(rng, label + "2", hi))
    if roll == 3:
        return Tensor(_gen(rng, label, 2), _gen(rng, label + "2", 2))
    return _gen(rng, label, max(1, min(max_dim, 4)))


def _yanking_objects(max_dim: int):
    objs = [Gen("A", d) for d in range(1, max_dim + 1)]
    objs.append(Oplus(Gen("A", 2), UNIT))
    objs.append(Tensor(Gen("A", 2), Gen("B", 2)))
    objs.append(dual(Gen("A", min(3, max_dim))))
    return objs


def _obj_witness(a) -> dict:
    return {"object": format_object(a)}


# -- the sccc suite ------------------------------------------------------------

def _sccc_results(model: ModelHandle, trials, seed, tol, max_dim):
    s = model.semiring
    rec = _Recorder(trials, seed)
    eq = lambda f, g: equal(f, g, rel=tol)

    def yanking(rng):
        for a in _yanking_objects(max_dim):
            if not eq(core.yanking_composite(a, s), identity(a, s)):
                return _obj_witness(a)
        return None

    rec.whole("yanking",
              "lam(dagger) o (eta*(dagger) (x) 1) o assoc o (1 (x) eta) o rho = 1",
              yanking)

    def unit_coherence(rng):
        for a in _yanking_objects(max_dim):
            lhs = core.unit(dual(a), s)
            rhs = compose(core.sigma(dual(a), a, s), core.unit(a, s))
            if not eq(lhs, rhs):
                return _obj_witness(a)
        return None

    rec.whole("unit-coherence", "eta_{A*} = swap o eta_A", unit_coherence)

    def isos_unitary(rng):
        a = _structured_object(rng, max_dim, "A")
        b = _structured_object(rng, max_dim, "B")
        c = _gen(rng, "C", 2)
        for tag, iso in (("lam", core.lam(a, s)), ("rho", core.rho(a, s)),
                         ("alpha", core.alpha(a, b, c, s)),
                         ("sigma", core.sigma(a, b, s))):
            if not eq(compose(dagger(iso), iso), identity(iso.dom, s)):
                return {"iso": tag, "object": format_object(a)}
            if not eq(compose(iso, dagger(iso)), identity(iso.cod, s)):
                return {"iso": tag, "object": format_object(a)}
        return None

    rec.per_trial("structural-isos-unitary",
                  "lam, rho, alpha and sigma are unitary", isos_unitary)

    def name_unfoldings(rng):
        a, b = _gen(rng, "A", 3), _gen(rng, "B", 3)
        core.name(model.sample_morphism(rng, a, b))  # raises on disagreement
        return None

    rec.per_trial("name-unfoldings-agree",
                  "(1 (x) f) o eta_A = (f* (x) 1) o eta_B", name_unfoldings)

    def name_identity(rng):
        for d in range(1, max_dim + 1):
            a = Gen("A", d)
            if not eq(core.name(identity(a, s)), core.unit(a, s)):
                return _obj_witness(a)
        return None

    rec.whole("name-of-identity", "name(1_A) = eta_A", name_identity)

    def scalars(rng):
        return (model.sample_morphism(rng, UNIT, UNIT),
                model.sample_morphism(rng, UNIT, UNIT))

    def scalar_compose(rng):
        u, v = scalars(rng)
        a, b, c = _gen(rng, "A", 3), _gen(rng, "B", 3), _gen(rng, "C", 3)
        f = model.sample_morphism(rng, b, c)
        g = model.sample_morphism(rng, a, b)
        lhs = compose(core.scalar_mult(u, f), core.scalar_mult(v, g))
        rhs = core.scalar_mult(compose(u, v), compose(f, g))
        if not eq(lhs, rhs):
            return {"distance": distance(lhs, rhs)}
        return None

    rec.per_trial("scalar-through-compose",
                  "(s . f) o (t . g) = (s o t) . (f o g)", scalar_compose)

    def scalar_tensor(rng):
        u, v = scalars(rng)
        f = model.sample_morphism(rng, _gen(rng, "A", 3), _gen(rng, "B", 3))
        g = model.sample_morphism(rng, _gen(rng, "C", 3), _gen(rng, "D", 3))
        lhs = tensor(core.scalar_mult(u, f), core.scalar_mult(v, g))
        rhs = core.scalar_mult(compose(u, v), tensor(f, g))
        if not eq(lhs, rhs):
            return {"distance": distance(lhs, rhs)}
        return None

    rec.per_trial("scalar-through-tensor",
                  "(s . f) (x) (t . g) = (s o t) . (f (x) g)", scalar_tensor)

    def interchange(rng):
        a, b, c = _gen(rng, "A", 3), _gen(rng, "B", 3), _gen(rng, "C", 3)
        d, e, x = _gen(rng, "D", 3), _gen(rng, "E", 3), _gen(rng, "F", 3)
        f = model.sample_morphism(rng, b, c)
        h = model.sample_morphism(rng, a, b)
        g = model.sample_morphism(rng, e, x)
        k = model.sample_morphism(rng, d, e)
        lhs = compose(tensor(f, g), tensor(h, k))
        rhs = tensor(compose(f, h), compose(g, k))
        if not eq(lhs, rhs):
            return {"distance": distance(lhs, rhs)}
        return None

    rec.per_trial("tensor-interchange",
                  "(f (x) g) o (h (x) k) = (f o h) (x) (g o k)", interchange)

    def dagger_laws(rng):
        a, b, c = _gen(rng, "A", 3), _gen(rng, "B", 3), _gen(rng, "C", 3)
        f = model.sample_morphism(rng, a, b)
        g = model.sample_morphism(rng, b, c)
        if not eq(dagger(dagger(f)), f):
            return {"law": "involution"}
        if not eq(dagger(compose(g, f)), compose(dagger(f), dagger(g))):
            return {"law": "contravariance"}
        return None

    rec.per_trial("dagger-involutive-contravariant",
                  "f(dagger)(dagger) = f and (g o f)(dagger) = f(dagger) o g(dagger)",
                  dagger_laws)

    def dagger_factors(rng):
        f = model.sample_morphism(rng, _gen(rng, "A", 3), _gen(rng, "B", 3))
        if not eq(dagger(f), star(lower_star(f))):
            return {"route": "star o lower_star"}
        if not eq(dagger(f), lower_star(star(f))):
            return {"route": "lower_star o star"}
        return None

    rec.per_trial("dagger-factorization",
                  "f(dagger) = (f_*)* = (f*)_*", dagger_factors)

    def sigma_natural(rng):
        a, b = _gen(rng, "A", 3), _gen(rng, "B", 3)
        c, d = _gen(rng, "C", 3), _gen(rng, "D", 3)
        f = model.sample_morphism(rng, a, b)
        g = model.sample_morphism(rng, c, d)
        lhs = compose(core.sigma(b, d, s), tensor(f, g))
        rhs = compose(tensor(g, f), core.sigma(a, c, s))
        if not eq(lhs, rhs):
            return {"distance": distance(lhs, rhs)}
        return None

    rec.per_trial("swap-naturality",
                  "sigma o (f (x) g) = (g (x) f) o sigma", sigma_natural)

    def scalar_comm(rng):
        u, v = scalars(rng)
        if not eq(compose(u, v), compose(v, u)):
            return {"s": serialize_morphism(u), "t": serialize_morphism(v)}
        return None

    rec.per_trial("scalar-commutativity", "s o t = t o s", scalar_comm)

    def hs_two_routes(rng):
        a, b = _gen(rng, "A", 3), _gen(rng, "B", 3)
        f = model.sample_morphism(rng, a, b)
        g = model.sample_morphism(rng, a, b)
        lhs = core.hs_inner(f, g)
        rhs = core.trace(compose(dagger(f), g))
        if not eq(lhs, rhs):
            return {"lhs": serialize_morphism(lhs), "rhs": serialize_morphism(rhs)}
        return None

    rec.per_trial("inner-product-two-routes",
                  "name(f)(dagger) o name(g) = Tr(f(dagger) o g)", hs_two_routes)

    def hs_norm_positive(rng):
        f = model.sample_morphism(rng, _gen(rng, "A", 3), _gen(rng, "B", 3))
        v = complex(scalar_value(core.hs_norm_sq(f)))
        if abs(v.imag) > 1e-9 or v.real < -1e-9:
            return {"value": v}
        return None

    rec.per_trial("norm-scalar-positive",
                  "||f|| is a nonnegative real scalar", hs_norm_positive)

    def hs_states(rng):
        a = _gen(rng, "A", 4)
        psi = model.sample_state(rng, a)
        phi = model.sample_state(rng, a)
        if not eq(core.hs_inner(psi, phi), compose(dagger(psi), phi)):
            return {"psi": serialize_morphism(psi)}
        return None

    rec.per_trial("inner-product-on-states",
                  "<psi|phi> = psi(dagger) o phi", hs_states)

    if s is COMPLEX:
        def double_phase(rng):
            f = model.sample_morphism(rng, _gen(rng, "A", 3), _gen(rng, "B", 3))
            u = model.sample_unit_scalar(rng)
            lhs = core.double(core.scalar_mult(u, f))
            if not eq(lhs, core.double(f)):
                return {"unit": serialize_morphism(u)}
            return None

        rec.per_trial("double-ignores-phase",
                      "(u . f) (x) (u . f)(dagger) = f (x) f(dagger) for unit u",
                      double_phase)

        def witnesses(rng):
            f = model.sample_morphism(rng, _gen(rng, "A", 3), _gen(rng, "B", 3))
            u = model.sample_unit_scalar(rng)
            g = core.scalar_mult(u, f)
            sw, tw = core.phase_witnesses(f, g)
            if not eq(core.scalar_mult(sw, f), core.scalar_mult(tw, g)):
                return {"s": serialize_morphism(sw), "t": serialize_morphism(tw)}
            if not eq(compose(sw, dagger(sw)), compose(tw, dagger(tw))):
                return {"s": serialize_morphism(sw), "t": serialize_morphism(tw)}
            return None

        rec.per_trial("phase-witnesses",
                      "equal doubles yield scalars with s . f = t . g and "
                      "s o s(dagger) = t o t(dagger)", witnesses)

    def density(rng):
        psi = model.sample_state(rng, _gen(rng, "A", 4))
        if not core.state_density_identity_holds(psi, rel=tol):
            return {"psi": serialize_morphism(psi)}
        return None

    rec.per_trial("state-density-identity",
                  "psi o psi(dagger) = rho(dagger) o (psi (x) psi(dagger)) o lam",
                  density)

    def born_loop(rng):
        parts = [_gen(rng, "A1", 2), _gen(rng, "A2", 2)]
        decomp = ortho.OplusDecomposition.from_parts(parts)
        i = int(rng.integers(0, 2))
        p = compose(ortho.pseudo_injection(decomp, i, s),
                    ortho.pseudo_projection(decomp, i, s))
        psi = model.sample_state(rng, decomp.whole)
        prob = core.born_prob(psi, p)  # cross-checks the trace route itself
        if s is COMPLEX and complex(scalar_value(prob)).real < -1e-9:
            return {"probability": scalar_value(prob)}
        return None

    rec.per_trial("born-probability-loop",
                  "psi(dagger) o P o psi = Tr(P o psi o psi(dagger))", born_loop)

    def trace_swap(rng):
        for d in range(1, min(3, max_dim) + 1):
            a = Gen("A", d)
            if not eq(core.partial_trace(core.sigma(a, a, s), a), identity(a, s)):
                return _obj_witness(a)
        return None

    rec.whole("partial-trace-of-swap", "Tr_A(sigma_{A,A}) = 1_A", trace_swap)

    def trace_dim(rng):
        for d in range(1, max_dim + 1):
            a = Gen("A", d)
            acc = s.zero
            for _ in range(d):
                acc = s.add(acc, s.one)
            if not eq(core.trace(identity(a, s)), scalar(acc, s)):
                return _obj_witness(a)
        return None

    rec.whole("trace-counts-dimension",
              "Tr(1_A) = 1 + ... + 1, dim(A) summands", trace_dim)

    def traced_factor(rng):
        a = _gen(rng, "A", 3)
        g = model.sample_morphism(rng, _gen(rng, "B", 3), _gen(rng, "C", 3))
        acc = s.zero
        for _ in range(dim(a)):
            acc = s.add(acc, s.one)
        lhs = core.partial_trace(tensor(identity(a, s), g), a)
        if not eq(lhs, core.scalar_mult(scalar(acc, s), g)):
            return _obj_witness(a)
        return None

    rec.per_trial("partial-trace-splits-identity",
                  "Tr_A(1_A (x) g) = dim(A) . g", traced_factor)

    return rec.results


# -- the wproj suite -----------------------------------------------------------

def _wproj_results(w: WProjModel, trials, seed, tol, max_dim):
    base = w.base
    s = base.semiring
    boolean = s.dtype == np.bool_
    rec = _Recorder(trials, seed)

    def sample(rng, a=None, b=None):
        a = a if a is not None else _gen(rng, "A", 3)
        b = b if b is not None else _gen(rng, "B", 3)
        return base.sample_morphism(rng, a, b)

    def criteria(rng):
        f = sample(rng)
        g = base.sample_morphism(rng, f.dom, f.cod)
        u = base.sample_unit_scalar(rng)
        rotated = core.scalar_mult(u, f)
        # any CriterionDisagreement surfaces through the recorder
        r1 = wequal(lift(f), lift(rotated), tol)
        if not (r1.agree and r1.equal):
            return {"pair": "phase-rotated",
                    "verdicts": [r1.by_double, r1.by_lower, r1.by_projector]}
        r2 = wequal(lift(f), lift(g), tol)
        if not r2.agree:
            return {"pair": "independent",
                    "verdicts": [r2.by_double, r2.by_lower, r2.by_projector]}
        if not boolean:
            if float(np.max(np.abs(np.asarray(f.array, dtype=complex)))) < 1e-6:
                return None  # degenerate draw, nothing to separate
            doubled_weight = core.scalar_mult(scalar(s.one + s.one, s), f)
            r3 = wequal(lift(f), lift(doubled_weight), tol)
            if r3.equal:
                return {"pair": "weight-doubled", "note": "classes collapsed"}
        return None

    rec.per_trial("equality-criteria-agree",
                  "doubled forms, f (x) f_* and the name projectors give one "
                  "verdict", criteria)

    def compose_functorial(rng):
        a, b, c = _gen(rng, "A", 3), _gen(rng, "B", 3), _gen(rng, "C", 3)
        f = sample(rng, a, b)
        g = sample(rng, b, c)
        u = base.sample_unit_scalar(rng)
        v = base.sample_unit_scalar(rng)
        lhs = wcompose(lift(core.scalar_mult(u, g)), lift(core.scalar_mult(v, f)))
        if not wequal(lhs, lift(compose(g, f)), tol).equal:
            return {"f": serialize_morphism(f), "g": serialize_morphism(g)}
        return None

    rec.per_trial("quotient-respects-compose",
                  "[g] o [f] = [g o f] whatever the representatives", compose_functorial)

    def tensor_functorial(rng):
        f, g = sample(rng), sample(rng, _gen(rng, "C", 3), _gen(rng, "D", 3))
        u = base.sample_unit_scalar(rng)
        v = base.sample_unit_scalar(rng)
        lhs = wtensor(lift(core.scalar_mult(u, f)), lift(core.scalar_mult(v, g)))
        if not wequal(lhs, lift(tensor(f, g)), tol).equal:
            return {"f": serialize_morphism(f), "g": serialize_morphism(g)}
        return None

    rec.per_trial("quotient-respects-tensor",
                  "[f] (x) [g] = [f (x) g] whatever the representatives",
                  tensor_functorial)

    def dagger_involution(rng):
        fw = lift(sample(rng))
        if not wequal(wdagger(wdagger(fw)), fw, tol).equal:
            return {"f": serialize_morphism(fw)}
        return None

    rec.per_trial("quotient-dagger-involutive",
                  "[f](dagger)(dagger) = [f]", dagger_involution)

    def lifted_yanking(rng):
        for d in range(1, min(4, max_dim) + 1):
            a = Gen("A", d)
            e = core.unit(a, s)
            e_dual = core.unit(dual(a), s)
            m = wcompose(lift(tensor(identity(a, s), e)), lift(core.rho(a, s)))
            m = wcompose(lift(core.alpha(a, dual(a), a, s)), m)
            m = wcompose(lift(tensor(dagger(e_dual), identity(a, s))), m)
            m = wcompose(lift(dagger(core.lam(a, s))), m)
            if not wequal(m, w.identity(a), tol).equal:
                return _obj_witness(a)
        return None

    rec.whole("quotient-yanking",
              "the yanking composite is the identity class", lifted_yanking)

    def interchange(rng):
        a, b, c = _gen(rng, "A", 2), _gen(rng, "B", 2), _gen(rng, "C", 2)
        d, e, x = _gen(rng, "D", 2), _gen(rng, "E", 2), _gen(rng, "F", 2)
        u = base.sample_unit_scalar(rng)
        f, h = sample(rng, b, c), sample(rng, a, b)
        g, k = sample(rng, e, x), sample(rng, d, e)
        lhs = wcompose(wtensor(lift(core.scalar_mult(u, f)), lift(g)),
                       wtensor(lift(h), lift(k)))
        rhs = wtensor(wcompose(lift(f), lift(h)), wcompose(lift(g), lift(k)))
        if not wequal(lhs, rhs, tol).equal:
            return {"distance": distance(lhs.rep, rhs.rep)}
        return None

    rec.per_trial("quotient-interchange",
                  "([f] (x) [g]) o ([h] (x) [k]) = ([f] o [h]) (x) ([g] o [k])",
                  interchange)

    def canon_idempotent(rng):
        f = sample(rng)
        c1 = canonical_rep(f)
        if not equal(canonical_rep(c1), c1, rel=tol):
            return {"f": serialize_morphism(f)}
        return None

    rec.per_trial("canonical-representative-idempotent",
                  "canonicalizing twice changes nothing", canon_idempotent)

    def canon_phase(rng):
        f = sample(rng)
        u = base.sample_unit_scalar(rng)
        if not equal(canonical_rep(core.scalar_mult(u, f)), canonical_rep(f),
                     rel=max(tol or 0.0, 1e-9)):
            return {"unit": serialize_morphism(u)}
        return None

    rec.per_trial("canonical-representative-phase-free",
                  "every representative of a class canonicalizes the same way",
                  canon_phase)

    def canon_in_class(rng):
        f = sample(rng)
        if not wequal(lift(canonical_rep(f)), lift(f), tol).equal:
            return {"f": serialize_morphism(f)}
        return None

    rec.per_trial("canonical-representative-in-class",
                  "[canonical(f)] = [f]", canon_in_class)

    def doubled_scalar(rng):
        c = base.sample_morphism(rng, UNIT, UNIT)
        v = w.scalar_value(lift(c))
        if float(v) < -1e-9:
            return {"value": float(v)}
        return None

    rec.per_trial("quotient-scalars-nonnegative",
                  "a quotient scalar is c o c(dagger), a nonnegative real",
                  doubled_scalar)

    if not boolean:
        def separates(rng):
            f = sample(rng)
            if float(np.max(np.abs(np.asarray(f.array, dtype=complex)))) < 1e-6:
                return None
            heavier = core.scalar_mult(scalar(s.one + s.one, s), f)
            if wequal(lift(f), lift(heavier), tol).equal:
                return {"note": "weights were identified"}
            u = base.sample_unit_scalar(rng)
            if not wequal(lift(f), lift(core.scalar_mult(u, f)), tol).equal:
                return {"note": "phases were separated"}
            return None

        rec.per_trial("quotient-separates-weight-from-phase",
                      "scaling by 2 leaves the class, a unit phase does not",
                      separates)

    return rec.results


# -- the ortho suite -----------------------------------------------------------

def _ortho_results(model: ModelHandle, trials, seed, tol, max_dim):
    s = model.semiring
    rec = _Recorder(trials, seed)
    eq = lambda f, g: equal(f, g, rel=tol)

    def zero_diagram(rng):
        for da in range(1, min(3, max_dim) + 1):
            for db in range(1, min(3, max_dim) + 1):
                a, b = Gen("A", da), Gen("B", db)
                z = ortho.zero_morphism(a, b, s)
                if z.array.shape != (db, da) or np.count_nonzero(z.array) != 0:
                    return {"object": f"{format_object(a)} -> {format_object(b)}"}
        return None

    rec.whole("zero-through-zero-object",
              "the composite through 0 is the zero matrix, exactly", zero_diagram)

    def annihilation(rng):
        a, b, c = _gen(rng, "A", 3), _gen(rng, "B", 3), _gen(rng, "C", 3)
        f = model.sample_morphism(rng, b, c)
        if not eq(compose(f, ortho.zero_morphism(a, b, s)),
                  ortho.zero_morphism(a, c, s)):
            return {"side": "post"}
        if not eq(compose(ortho.zero_morphism(c, a, s), f),
                  ortho.zero_morphism(b, a, s)):
            return {"side": "pre"}
        return None

    rec.per_trial("zero-annihilates", "f o 0 = 0 and 0 o f = 0", annihilation)

    def oplus_dagger(rng):
        f = model.sample_morphism(rng, _gen(rng, "A", 3), _gen(rng, "B", 3))
        g = model.sample_morphism(rng, _gen(rng, "C", 3), _gen(rng, "D", 3))
        if not eq(dagger(direct_sum(f, g)), direct_sum(dagger(f), dagger(g))):
            return {"f": serialize_morphism(f)}
        return None

    rec.per_trial("block-sum-commutes-with-dagger",
                  "(f (+) g)(dagger) = f(dagger) (+) g(dagger)", oplus_dagger)

    def oplus_functorial(rng):
        a, b, c = _gen(rng, "A", 3), _gen(rng, "B", 3), _gen(rng, "C", 3)
        d, e, x = _gen(rng, "D", 3), _gen(rng, "E", 3), _gen(rng, "F", 3)
        f, h = model.sample_morphism(rng, b, c), model.sample_morphism(rng, a, b)
        g, k = model.sample_morphism(rng, e, x), model.sample_morphism(rng, d, e)
        lhs = compose(direct_sum(f, g), direct_sum(h, k))
        if not eq(lhs, direct_sum(compose(f, h), compose(g, k))):
            return {"distance": distance(lhs, direct_sum(compose(f, h), compose(g, k)))}
        return None

    rec.per_trial("block-sum-functorial",
                  "(f (+) g) o (h (+) k) = (f o h) (+) (g o k)", oplus_functorial)

    def oplus_isos(rng):
        a, b, c = _gen(rng, "A", 3), _gen(rng, "B", 3), _gen(rng, "C", 3)
        for tag, iso in (("l", ortho.l_unitor(a, s)), ("r", ortho.r_unitor(a, s)),
                         ("s", ortho.oplus_symmetry(a, b, s)),
                         ("a", ortho.oplus_assoc(a, b, c, s)),
                         ("dist-left", ortho.dist_left(a, b, c, s)),
                         ("dist-right", ortho.dist_right(b, c, a, s))):
            if not eq(compose(dagger(iso), iso), identity(iso.dom, s)):
                return {"iso": tag}
            if not eq(compose(iso, dagger(iso)), identity(iso.cod, s)):
                return {"iso": tag}
        return None

    rec.per_trial("additive-isos-unitary",
                  "unitors, symmetry, associator and DIST are unitary", oplus_isos)

    def dist_natural(rng):
        a, b, c = _gen(rng, "A", 2), _gen(rng, "B", 2), _gen(rng, "C", 2)
        a2, b2, c2 = _gen(rng, "A2", 2), _gen(rng, "B2", 2), _gen(rng, "C2", 2)
        h = model.sample_morphism(rng, a, a2)
        f = model.sample_morphism(rng, b, b2)
        g = model.sample_morphism(rng, c, c2)
        lhs = compose(ortho.dist_left(a2, b2, c2, s),
                      tensor(h, direct_sum(f, g)))
        rhs = compose(direct_sum(tensor(h, f), tensor(h, g)),
                      ortho.dist_left(a, b, c, s))
        if not eq(lhs, rhs):
            return {"distance": distance(lhs, rhs)}
        return None

    rec.per_trial("distributivity-natural",
                  "DIST o (h (x) (f (+) g)) = ((h (x) f) (+) (h (x) g)) o DIST",
                  dist_natural)

    def _decomp(rng, n):
        return ortho.OplusDecomposition.from_parts(
            [_gen(rng, f"A{i + 1}", 2) for i in range(n)])

    def pseudo_orthogonality(rng):
        decomp = _decomp(rng, int(rng.integers(2, 4)))
        for i in range(len(decomp)):
            for j in range(len(decomp)):
                got = compose(ortho.pseudo_projection(decomp, i, s),
                              ortho.pseudo_injection(decomp, j, s))
                want = (identity(decomp.parts[i], s) if i == j else
                        ortho.zero_morphism(decomp.parts[j], decomp.parts[i], s))
                if not eq(got, want):
                    return {"i": i, "j": j}
        return None

    rec.per_trial("pseudo-maps-orthonormal",
                  "p_i o q_i = 1 and p_i o q_j = 0 for i /= j", pseudo_orthogonality)

    def pseudo_dagger(rng):
        decomp = _decomp(rng, int(rng.integers(2, 4)))
        for i in range(len(decomp)):
            if not eq(dagger(ortho.pseudo_injection(decomp, i, s)),
                      ortho.pseudo_projection(decomp, i, s)):
                return {"i": i}
        return None

    rec.per_trial("pseudo-injection-adjoint",
                  "q_i(dagger) = p_i even though both are built separately",
                  pseudo_dagger)

    def pseudo_symmetry(rng):
        a, b = _gen(rng, "A", 3), _gen(rng, "B", 3)
        left = ortho.OplusDecomposition.from_parts([a, b])
        right = ortho.OplusDecomposition.from_parts([b, a])
        lhs = ortho.pseudo_projection(left, 0, s)
        rhs = compose(ortho.pseudo_projection(right, 1, s),
                      ortho.oplus_symmetry(a, b, s))
        if not eq(lhs, rhs):
            return {"a": format_object(a), "b": format_object(b)}
        return None

    rec.per_trial("pseudo-projection-swaps",
                  "p over A equals p after the block swap", pseudo_symmetry)

    def pseudo_natural(rng):
        a, b = _gen(rng, "A", 3), _gen(rng, "B", 3)
        c, d = _gen(rng, "C", 3), _gen(rng, "D", 3)
        f = model.sample_morphism(rng, a, b)
        g = model.sample_morphism(rng, c, d)
        cod = ortho.OplusDecomposition.from_parts([b, d])
        dom = ortho.OplusDecomposition.from_parts([a, c])
        lhs = compose(ortho.pseudo_projection(cod, 0, s), direct_sum(f, g))
        rhs = compose(f, ortho.pseudo_projection(dom, 0, s))
        if not eq(lhs, rhs):
            return {"distance": distance(lhs, rhs)}
        return None

    rec.per_trial("pseudo-projection-natural",
                  "p o (f (+) g) = f o p", pseudo_natural)

    def pseudo_assoc(rng):
        a, b, c = _gen(rng, "A", 2), _gen(rng, "B", 2), _gen(rng, "C", 2)
        bc = ortho.OplusDecomposition.from_parts([b, c])
        ab_c = ortho.OplusDecomposition.from_parts([Oplus(a, b), c])
        lhs = direct_sum(identity(a, s), ortho.pseudo_projection(bc, 0, s))
        rhs = compose(ortho.pseudo_projection(ab_c, 0, s),
                      ortho.oplus_assoc(a, b, c, s))
        if not eq(lhs, rhs):
            return {"law": "1 (+) p = p o assoc"}
        ab = ortho.OplusDecomposition.from_parts([a, b])
        a_bc = ortho.OplusDecomposition.from_parts([a, Oplus(b, c)])
        lhs2 = compose(ortho.pseudo_projection(ab, 0, s),
                       ortho.pseudo_projection(ab_c, 0, s))
        rhs2 = compose(ortho.pseudo_projection(a_bc, 0, s),
                       dagger(ortho.oplus_assoc(a, b, c, s)))
        if not eq(lhs2, rhs2):
            return {"law": "p o p = p o assoc(dagger)"}
        return None

    rec.per_trial("pseudo-projection-reassociates",
                  "nested projections agree across the additive associator",
                  pseudo_assoc)

    if s is COMPLEX:
        def components(rng):
            dims = [int(rng.integers(1, 3)) for _ in range(2)]
            u = random_unitary(model, dims, rng)
            parts = [UNIT if d == 1 else Gen(f"A{i}", d)
                     for i, d in enumerate(dims)]
            decomp = ortho.OplusDecomposition.from_parts(parts)
            pis = [compose(ortho.pseudo_projection(decomp, i, s), u)
                   for i in range(2)]
            for i in range(2):
                for j in range(2):
                    got = compose(pis[j], dagger(pis[i]))
                    want = (identity(parts[i], s) if i == j else
                            ortho.zero_morphism(parts[i], parts[j], s))
                    if not eq(got, want):
                        return {"kind": "conormal", "i": i, "j": j}
            v = dagger(u)
            psis = [compose(v, ortho.pseudo_injection(decomp, i, s))
                    for i in range(2)]
            for i in range(2):
                for j in range(2):
                    got = compose(dagger(psis[j]), psis[i])
                    want = (identity(parts[i], s) if i == j else
                            ortho.zero_morphism(parts[i], parts[j], s))
                    if not eq(got, want):
                        return {"kind": "normal", "i": i, "j": j}
            return None

        rec.per_trial("unitary-components-orthonormal",
                      "p_i o U conormalized and coorthogonal; U o q_i "
                      "normalized and orthogonal", components)

    def reassembly(rng):
        dom = _decomp(rng, 2)
        cod = _decomp(rng, 2)
        f = model.sample_morphism(rng, dom.whole, cod.whole)
        terms = []
        for i in range(2):
            for j in range(2):
                fij = ortho.pseudo_component(f, dom, cod, i, j)
                terms.append(compose(ortho.pseudo_injection(cod, j, s),
                                     compose(fij, ortho.pseudo_projection(dom, i, s))))
        total = reduce(ortho.derived_sum, terms)
        if not eq(total, f):
            return {"distance": distance(total, f)}
        return None

    rec.per_trial("blocks-reassemble",
                  "summing q_j o f_ij o p_i over all blocks returns f", reassembly)

    def entrywise(rng):
        a, b = _gen(rng, "A", 3), _gen(rng, "B", 3)
        f = model.sample_morphism(rng, a, b)
        g = model.sample_morphism(rng, a, b)
        got = ortho.derived_sum(f, g)
        want_arr = (np.maximum(f.array, g.array) if s.dtype == np.bool_
                    else f.array + g.array)
        if not eq(got, morphism(a, b, want_arr, s)):
            return {"distance": distance(got, morphism(a, b, want_arr, s))}
        return None

    rec.per_trial("derived-sum-is-entrywise",
                  "the composite through 2 = I (+) I adds matrices entrywise",
                  entrywise)

    def biproduct_route(rng):
        a, b = _gen(rng, "A", 3), _gen(rng, "B", 3)
        f = model.sample_morphism(rng, a, b)
        g = model.sample_morphism(rng, a, b)
        codiag = copairing([identity(b, s), identity(b, s)])
        diag = pairing([identity(a, s), identity(a, s)])
        via_biproduct = compose(codiag, compose(direct_sum(f, g), diag))
        if not eq(ortho.derived_sum(f, g), via_biproduct):
            return {"distance": distance(ortho.derived_sum(f, g), via_biproduct)}
        return None

    rec.per_trial("derived-sum-matches-biproduct-sum",
                  "the unit-object route agrees with codiagonal o (f (+) g) o "
                  "diagonal", biproduct_route)

    def cmon(rng):
        a, b = _gen(rng, "A", 3), _gen(rng, "B", 3)
        f = model.sample_morphism(rng, a, b)
        g = model.sample_morphism(rng, a, b)
        h = model.sample_morphism(rng, a, b)
        if not eq(ortho.derived_sum(f, g), ortho.derived_sum(g, f)):
            return {"law": "commutativity"}
        if not eq(ortho.derived_sum(ortho.derived_sum(f, g), h),
                  ortho.derived_sum(f, ortho.derived_sum(g, h))):
            return {"law": "associativity"}
        if not eq(ortho.derived_sum(f, ortho.zero_morphism(a, b, s)), f):
            return {"law": "unit"}
        return None

    rec.per_trial("derived-sum-commutative-monoid",
                  "the derived sum is associative and commutative with unit 0",
                  cmon)

    if s is COMPLEX:
        def no_go(rng):
            hot = ortho.oplus_illdefined_witness(np.pi / 2)
            cold = ortho.oplus_illdefined_witness(0.0)
            violated = (hot["pairing_gap"] > 0.25 and hot["oplus_gap"] > 0.25
                        and cold["pairing_gap"] <= 1e-9
                        and cold["oplus_gap"] <= 1e-9)
            witness = {"rotated": {"theta": hot["theta"],
                                   "pairing_gap": hot["pairing_gap"],
                                   "oplus_gap": hot["oplus_gap"]},
                       "aligned": {"theta": cold["theta"],
                                   "pairing_gap": cold["pairing_gap"],
                                   "oplus_gap": cold["oplus_gap"]}}
            return violated, witness

        rec.expected_fail("block-sum-on-phase-classes",
                          "extending (+) to phase classes of morphisms is "
                          "inconsistent", no_go)

    return rec.results


# -- the born suite ------------------------------------------------------------

def _born_results(model, trials, seed, tol, nu: Fraction):
    boolean = model.semiring.dtype == np.bool_
    quotient = isinstance(model, WProjModel)
    rec = _Recorder(trials, seed)
    zeta = Fraction(1, 2) / nu

    def sample(rng, a=None, b=None):
        a = a if a is not None else Gen("A", int(rng.integers(1, 4)))
        b = b if b is not None else Gen("B", int(rng.integers(1, 4)))
        return model.sample_morphism(rng, a, b)

    def val(f):
        return born.valuation_norm(model, f, nu)

    def meq(x, y):
        return model.equal(x, y, tol)

    def binary(rng):
        a, decomp = born._sample_split(model, rng, 2)
        f = model.sample_morphism(rng, a, decomp.whole)
        if not born.check_born_decomposition(model, f, decomp, nu):
            return {"f": serialize_morphism(f)}
        return None

    rec.per_trial("valuation-splits-binary",
                  "|f| = |f_1| + |f_2| against a two-block codomain", binary)

    def ternary(rng):
        a, decomp = born._sample_split(model, rng, 3)
        f = model.sample_morphism(rng, a, decomp.whole)
        if not born.check_born_decomposition(model, f, decomp, nu):
            return {"f": serialize_morphism(f)}
        return None

    rec.per_trial("valuation-splits-ternary",
                  "|f| = |f_1| + |f_2| + |f_3| by folding the binary rule",
                  ternary)

    def dagger_invariant(rng):
        f = sample(rng)
        if not meq(val(f), val(model.dagger(f))):
            return {"f": serialize_morphism(f)}
        return None

    rec.per_trial("valuation-fixed-by-dagger", "|f(dagger)| = |f|",
                  dagger_invariant)

    def zero_val(rng):
        a, b = Gen("A", int(rng.integers(1, 4))), Gen("B", int(rng.integers(1, 4)))
        z = model.zero(a, b)
        if not meq(val(z), model.scalar(0)):
            return {"value": model.scalar_value(val(z))}
        return None

    rec.per_trial("valuation-kills-zero", "|0| = 0", zero_val)

    def oplus_additive(rng):
        f, g = sample(rng), sample(rng, Gen("C", int(rng.integers(1, 4))),
                                   Gen("D", int(rng.integers(1, 4))))
        lhs = val(model.oplus(f, g))
        rhs = born.scalar_sum(model, val(f), val(g), nu)
        if not meq(lhs, rhs):
            return {"lhs": model.scalar_value(lhs), "rhs": model.scalar_value(rhs)}
        return None

    rec.per_trial("valuation-additive-on-blocks",
                  "|f (+) g| = |f| + |g|", oplus_additive)

    def assoc(rng):
        vals = [val(sample(rng)) for _ in range(3)]
        lhs = born.scalar_sum(model, born.scalar_sum(model, vals[0], vals[1], nu),
                              vals[2], nu)
        rhs = born.scalar_sum(model, vals[0],
                              born.scalar_sum(model, vals[1], vals[2], nu), nu)
        if not meq(lhs, rhs):
            return {"lhs": model.scalar_value(lhs), "rhs": model.scalar_value(rhs)}
        return None

    rec.per_trial("scalar-sum-associative", "(s + t) + u = s + (t + u)", assoc)

    def comm(rng):
        sv, tv = val(sample(rng)), val(sample(rng))
        if not meq(born.scalar_sum(model, sv, tv, nu),
                           born.scalar_sum(model, tv, sv, nu)):
            return {"s": model.scalar_value(sv), "t": model.scalar_value(tv)}
        return None

    rec.per_trial("scalar-sum-commutative", "s + t = t + s", comm)

    def distributive(rng):
        c = val(model.sample_morphism(rng, UNIT, UNIT))
        sv, tv = val(sample(rng)), val(sample(rng))
        lhs = model.compose(c, born.scalar_sum(model, sv, tv, nu))
        rhs = born.scalar_sum(model, model.compose(c, sv),
                              model.compose(c, tv), nu)
        if not meq(lhs, rhs):
            return {"lhs": model.scalar_value(lhs), "rhs": model.scalar_value(rhs)}
        return None

    rec.per_trial("scalar-sum-distributive",
                  "|c| o (s + t) = (|c| o s) + (|c| o t)", distributive)

    def zeta_roundtrip(rng):
        sv = val(sample(rng))
        root = model.scalar_power(sv, zeta)
        if not meq(val(root), sv):
            return {"s": model.scalar_value(sv)}
        return None

    rec.per_trial("valuation-root-roundtrip",
                  "|s^zeta| = s for zeta = 1/(2 nu)", zeta_roundtrip)

    def oplus_route(rng):
        sv, tv = val(sample(rng)), val(sample(rng))
        via_sum = born.scalar_sum(model, sv, tv, nu)
        via_val = val(model.oplus(model.scalar_power(sv, zeta),
                                  model.scalar_power(tv, zeta)))
        if not meq(via_sum, via_val):
            return {"sum": model.scalar_value(via_sum),
                    "valuation": model.scalar_value(via_val)}
        return None

    rec.per_trial("scalar-sum-as-block-valuation",
                  "s + t = |s^zeta (+) t^zeta|", oplus_route)

    rec.results.extend(born.check_diagonal_axiom(model, trials=trials, seed=seed))
    rec.results.extend(born.check_trace_linearity(model, trials=trials, seed=seed))
    rec.results.extend(born.check_ortho_bornian(model, trials=trials, seed=seed))

    def two(rng):
        one = model.scalar(1)
        got = complex(model.scalar_value(born.scalar_sum(model, one, one, nu)))
        if boolean:
            want = 1.0
        elif quotient:
            want = 4.0 ** float(nu)
        else:
            want = 2.0 ** float(nu)
        if abs(got.imag) > 1e-9 or abs(got.real - want) > 1e-9:
            return {"got": [got.real, got.imag], "want": want}
        return None

    rec.whole("one-plus-one",
              "1 + 1 = (Tr(1^(1/nu) (+) 1^(1/nu)))^nu lands on the model's 2",
              two)

    def sqrt_decomposition(rng):
        f = sample(rng)
        norm = model.norm_sq(f)
        root = model.scalar_power(norm, Fraction(1, 2))
        if not meq(model.compose(root, model.dagger(root)), norm):
            return {"norm": model.scalar_value(norm)}
        return None

    rec.per_trial("norm-scalar-has-positive-root",
                  "||f|| = x o x(dagger) for the nonnegative root x",
                  sqrt_decomposition)

    return rec.results
