"""Measurement semantics and teleportation.

Classical branching is a freely added product: a tuple of morphisms out of a
common domain, one per outcome.  Measurements come from unitaries into block
sums; teleportation composes a Bell state, a four-outcome destructive
measurement and per-branch unitary corrections, and is checked end to end
against the literal matrix pipeline.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from . import core, ortho
from .errors import NotUnitary, TypeMismatch
from .models import pairing
from .morphisms import (Morphism, compose, dagger, direct_sum, equal,
                        identity, scalar, tensor)
from .objects import ObjectExpr, Oplus, UNIT
from .report import CheckResult, VerificationReport, serialize_morphism
from .semirings import COMPLEX
from .wproj import WProjModel, lift, wequal


@dataclass(frozen=True)
class BranchTuple:
    """Classical outcomes: an ordered tuple of morphisms out of one domain."""

    branches: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "branches", tuple(self.branches))
        if not self.branches:
            raise TypeMismatch("a branch tuple needs at least one branch")
        dom = self.branches[0].dom
        for b in self.branches:
            if b.dom != dom:
                raise TypeMismatch("branches must share their domain")

    @property
    def dom(self) -> ObjectExpr:
        return self.branches[0].dom

    def project(self, i: int) -> Morphism:
        return self.branches[i]

    def __len__(self) -> int:
        return len(self.branches)

    def __iter__(self):
        return iter(self.branches)


def branch_pairing(fs) -> BranchTuple:
    return BranchTuple(tuple(fs))


@dataclass(frozen=True)
class MeasurementSpec:
    """A unitary u: A -> (+)_i A_i with its block decomposition."""

    u: Morphism
    decomp: ortho.OplusDecomposition

    @staticmethod
    def from_unitary(u: Morphism, decomp: ortho.OplusDecomposition,
                     rel: float | None = None) -> "MeasurementSpec":
        if u.cod != decomp.whole:
            raise TypeMismatch("unitary codomain does not match the decomposition")
        one_dom = identity(u.dom, u.semiring)
        one_cod = identity(u.cod, u.semiring)
        if not (equal(compose(dagger(u), u), one_dom, rel)
                and equal(compose(u, dagger(u)), one_cod, rel)):
            raise NotUnitary("u(dagger) o u and u o u(dagger) must both be identities")
        return MeasurementSpec(u, decomp)

    def branch_map(self, i: int) -> Morphism:
        """pi_i = p_i o u, the i-th outcome arm."""
        p = ortho.pseudo_projection(self.decomp, i, self.u.semiring)
        return compose(p, self.u)

    def projector(self, i: int) -> Morphism:
        """P_i = pi_i(dagger) o pi_i."""
        pi = self.branch_map(i)
        return compose(dagger(pi), pi)

    def __len__(self) -> int:
        return len(self.decomp)


def nondestructive_measurement(spec: MeasurementSpec, psi: Morphism) -> BranchTuple:
    """Branch i holds P_i o psi; probabilities come from the Born loop."""
    return BranchTuple(tuple(compose(spec.projector(i), psi)
                             for i in range(len(spec))))


def measurement_probabilities(spec: MeasurementSpec, psi: Morphism) -> list[float]:
    return [core.born_probability_value(psi, spec.projector(i))
            for i in range(len(spec))]


def measurement_oplus_style(spec: MeasurementSpec) -> Morphism:
    """((+)_i u(dagger)) o ((+)_i q_i) o u, typed A -> (+)_i A.

    With biproducts around, this coincides with stacking the projectors
    <P_1, ..., P_n>, which is checked by the suites rather than assumed.
    """
    s = spec.u.semiring
    qs = [ortho.pseudo_injection(spec.decomp, i, s) for i in range(len(spec))]
    u_daggers = [dagger(spec.u)] * len(spec)
    return compose(reduce(direct_sum, u_daggers),
                   compose(reduce(direct_sum, qs), spec.u))


def projector_pairing(spec: MeasurementSpec) -> Morphism:
    """<P_1, ..., P_n>: A -> (+)_i A, the biproduct route."""
    return pairing([spec.projector(i) for i in range(len(spec))])


def cc_map(a: ObjectExpr, bt: BranchTuple) -> BranchTuple:
    """Distribute a quantum factor over classical branches.

    Sends each branch t_i: D -> B_i to 1_a (x) t_i, so the whole tuple maps
    a (x) D into the branches (a (x) B_1, ..., a (x) B_n).  The map discards
    nothing per branch yet has no tuple-level inverse; distributing classical
    data is irreversible without erasure.
    """
    s = bt.branches[0].semiring
    one = identity(a, s)
    return BranchTuple(tuple(tensor(one, t) for t in bt.branches))


def weighted_bit_collapse_witness() -> dict:
    """Two distinct states of I(+)I whose measured branch probabilities agree.

    The destructive measurement of the identity unitary reads off the two
    scalar components; their squared moduli cannot see relative phase, so
    the map from states to probability tuples is not injective and the block
    sum of units is not isomorphic to a classical pair of weights.
    """
    two = ortho.decomposition(UNIT, UNIT)
    psi = Morphism(UNIT, two.whole, np.array([[1.0], [1.0]]) / np.sqrt(2), COMPLEX)
    phi = Morphism(UNIT, two.whole, np.array([[1.0], [1.0j]]) / np.sqrt(2), COMPLEX)
    ps = [ortho.pseudo_projection(two, i, COMPLEX) for i in range(2)]
    probs_psi = [abs(complex(compose(p, psi).array[0, 0])) ** 2 for p in ps]
    probs_phi = [abs(complex(compose(p, phi).array[0, 0])) ** 2 for p in ps]
    return {
        "psi": serialize_morphism(psi),
        "phi": serialize_morphism(phi),
        "probabilities_psi": probs_psi,
        "probabilities_phi": probs_phi,
        "probabilities_agree": bool(np.allclose(probs_psi, probs_phi)),
        "states_equal": equal(psi, phi),
        "states_phase_equivalent": wequal(lift(psi), lift(phi)).equal,
    }


def qubit() -> ObjectExpr:
    return Oplus(UNIT, UNIT)


def bell_teleportation_setup() -> tuple[Morphism, list[Morphism]]:
    """The four-outcome measurement unitary T and the correction unitaries.

    The corrections are 1, X, Z, XZ; row i of T is the conjugated
    vectorization of correction i scaled by 1/sqrt(2), which makes T unitary
    and T(dagger) o q_i equal to (1/sqrt(2)) name(beta_i).
    """
    q = qubit()
    x = np.array([[0.0, 1.0], [1.0, 0.0]])
    z = np.array([[1.0, 0.0], [0.0, -1.0]])
    mats = [np.eye(2), x, z, x @ z]
    betas = [Morphism(q, q, m, COMPLEX) for m in mats]
    rows = [core.name(b).array[:, 0].conj() / np.sqrt(2) for b in betas]
    four = ortho.decomposition(UNIT, UNIT, UNIT, UNIT)
    t = Morphism(q @ q, four.whole, np.vstack(rows), COMPLEX)
    if not equal(compose(dagger(t), t), identity(q @ q, COMPLEX)):
        raise NotUnitary("teleportation measurement rows failed to be orthonormal")
    return t, betas


def _teleport_branches(psi: Morphism) -> tuple[list[Morphism], Morphism]:
    """Run the pipeline; returns raw branch states and the Bell state used.

    Pipeline: pair the input with a normalized Bell state, reassociate,
    swap the receiving factor to the front, distribute it over the four
    measurement outcomes with the classical-communication map, and strip
    the scalar leg with a unitor.
    """
    q = qubit()
    s = COMPLEX
    t, _ = bell_teleportation_setup()
    bell = core.scalar_mult(scalar(1 / np.sqrt(2), s),
                            core.name(identity(q, s)))
    four = ortho.decomposition(UNIT, UNIT, UNIT, UNIT)
    paired = compose(tensor(psi, bell), core.lam(UNIT, s))
    joint = compose(core.sigma(q @ q, q, s),
                    compose(core.alpha(q, q, q, s), paired))
    meas = BranchTuple(tuple(
        compose(ortho.pseudo_projection(four, i, s), t) for i in range(4)))
    distributed = cc_map(q, meas)
    rho_back = dagger(core.rho(q, s))
    outs = [compose(rho_back, compose(m, joint)) for m in distributed]
    return outs, bell


def run_teleportation(psi: Morphism | None = None,
                      model=None, seed: int = 0) -> VerificationReport:
    """Teleport a state and certify every branch, including phase classes.

    Each corrected branch must equal the input scaled by 1/2 (the two
    1/sqrt(2) normalizations), each branch probability must be a quarter of
    the input weight, the probabilities must sum to that weight, and a
    phase-rotated input must land in the same phase class per branch.
    """
    if model is None:
        from .models import fdhilb
        model = fdhilb()
    base = model.base if isinstance(model, WProjModel) else model
    if base.semiring is not COMPLEX:
        raise TypeMismatch("teleportation runs over the complex model")
    if psi is None:
        psi = Morphism(UNIT, qubit(), np.array([[1.0], [0.0]]), COMPLEX)
    if psi.dom != UNIT or psi.cod != qubit():
        raise TypeMismatch("the input must be a state of I(+)I")

    _, betas = bell_teleportation_setup()
    outs, _ = _teleport_branches(psi)
    shifted_outs, _ = _teleport_branches(
        core.scalar_mult(scalar(1.0j, COMPLEX), psi))
    target = core.scalar_mult(scalar(0.5, COMPLEX), psi)
    total = float(core.hs_norm_sq(psi).array[0, 0].real)

    results = []
    probs = []
    for i, out in enumerate(outs):
        corrected = compose(dagger(betas[i]), out)
        prob = float(core.hs_norm_sq(out).array[0, 0].real)
        probs.append(prob)
        ok = equal(corrected, target)
        phase_ok = wequal(lift(compose(dagger(betas[i]), shifted_outs[i])),
                          lift(target)).equal
        status = "pass" if (ok and phase_ok) else "fail"
        results.append(CheckResult(
            f"branch-{i}",
            "corrected branch = (1/2) . input, robust to input phase",
            status,
            {"output": serialize_morphism(out),
             "corrected": serialize_morphism(corrected),
             "probability": prob,
             "phase_class_stable": phase_ok}))
    quarter_ok = all(abs(p - total / 4) <= 1e-9 * max(1.0, total) for p in probs)
    conserve_ok = abs(sum(probs) - total) <= 1e-9 * max(1.0, total)
    results.append(CheckResult(
        "probability-conservation",
        "each branch weighs ||psi||/4 and the four weigh ||psi|| together",
        "pass" if (quarter_ok and conserve_ok) else "fail",
        {"probabilities": probs, "total": total}))
    results.append(CheckResult(
        "weighted-bit-collapse",
        "branch probabilities cannot distinguish relative phase",
        "expected-fail", weighted_bit_collapse_witness()))
    return VerificationReport(
        suite="teleport", model=model.name, seed=seed, tolerance=1e-9,
        trials=1, results=results)
