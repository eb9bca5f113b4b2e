"""Real / pseudo-real classification of rational maps.

A map is real when its symmetry group contains a reflection (an
antiholomorphic involution with fixed points), pseudo-real when it has
antiholomorphic symmetries but none of them is a reflection, and plain
otherwise.  The decision comes from the computed group; two exact
certificates cross-check it where available:

* the coefficient criterion for the antipodal map -1/conj(z): the map
  commutes with it iff the degree d is odd and some unimodular factor
  links the coefficient lists by b_k = (-1)^k * c * conj(a_(d-k));
* for maps in the rotation normal form z * psi(z^n): solvability of
  psi(z) = psi-bar(c z) (which forces a reflection) and of
  psi(z) * psi-bar(beta / z) = 1 for a unimodular beta != 1 (which gives
  an orientation-reversing symmetry swapping 0 and infinity).

Disagreement between the certificates and the group computation raises
ConsistencyViolationError: it indicates a bug, never an expected state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .autgrp import (
    AutGroupReport,
    CanonicalCyclicForm,
    SearchOptions,
    aut_group_report,
    canonicalize_cyclic,
    recognize_cyclo_candidates,
)
from .cyclotomic import CycloNum, common_order
from .errors import (
    BadDegreeError,
    ConsistencyViolationError,
    NotCertifiedError,
    NotCanonicalError,
)
from .moebius import ExtendedMoebius
from .polyring import Poly, roots_numeric
from .ratmap import RationalMap

REAL = "real"
PSEUDO_REAL = "pseudo_real"
NO_ANTIHOLOMORPHIC = "no_antiholomorphic"


# -- coefficient criterion for the antipodal involution ------------------------


def antipodal_witness(phi: RationalMap) -> CycloNum | None:
    """The unimodular factor c = e^(i theta) with
    b_k = (-1)^k * c * conj(a_(d-k)) for all k, when one exists.

    Such a factor exists iff -1/conj(z) commutes with the map; it requires
    odd degree.  Coefficient lists are taken at formal degree d."""
    d = phi.degree
    if d % 2 == 0:
        return None
    a = phi.numer.padded(d + 1)
    b = phi.denom.padded(d + 1)
    c = None
    for k in range(d + 1):
        ref = a[d - k].conj()
        if not ref.is_zero():
            cand = b[k] / ref
            if k % 2 == 1:
                cand = -cand
            c = cand
            break
    if c is None or c.is_zero():
        return None
    for k in range(d + 1):
        expected = a[d - k].conj() * c
        if k % 2 == 1:
            expected = -expected
        if b[k] != expected:
            return None
    if not c.is_unimodular():
        return None
    return c


def solve_scalar_identity(lhs, rhs, unimodular_only: bool = True) -> list[CycloNum]:
    """All scalars c with lhs_k = c * rhs_k for every k.

    At most one solution exists when some rhs_k is nonzero; an
    inconsistent system yields the empty list."""
    lhs = [CycloNum._coerce(v) for v in lhs]
    rhs = [CycloNum._coerce(v) for v in rhs]
    if len(lhs) != len(rhs):
        raise ValueError("sequences must have equal length")
    if all(v.is_zero() for v in rhs):
        if all(v.is_zero() for v in lhs):
            raise ValueError("both sequences are zero; every scalar works")
        return []
    j = next(k for k, v in enumerate(rhs) if not v.is_zero())
    c = lhs[j] / rhs[j]
    for x, y in zip(lhs, rhs):
        if x != c * y:
            return []
    if unimodular_only and not c.is_unimodular():
        return []
    return [c]


# -- the rotation-normal-form criteria ----------------------------------------


@dataclass
class RotationFormCheck:
    """Outcome of the two reality conditions on z * psi(z^n)."""

    n: int
    condition_a_holds: bool              # no unimodular c with psi(z) = psi-bar(c z)
    rotation_factor: complex | None      # a numeric c when condition (a) fails
    admissible_betas: list[CycloNum]     # exact unimodular solutions of the inversion identity
    includes_beta_one: bool
    unresolved_betas: list[complex]      # numeric unimodular roots that resisted lifting
    verdict: str
    beta: CycloNum | None = None
    alpha_exact: CycloNum | None = None
    alpha_numeric: complex | None = None
    notes: list[str] = field(default_factory=list)


def _rotation_conjugate_solvable(psi: RationalMap):
    """Existence of a unimodular c with psi(z) = psi-bar(c z).

    Reduced fractions force conj(x_k) c^k = mu x_k coefficient-wise with
    one scalar mu shared by numerator and denominator; eliminating mu
    leaves relations c^delta = (known unimodular value), solvable on the
    unit circle iff they are consistent."""
    items: list[tuple[int, CycloNum]] = []
    m = psi.field_order
    for poly in (psi.numer, psi.denom):
        for k, coeff in enumerate(poly.rebase(m).coeffs):
            if not coeff.is_zero():
                items.append((k, coeff.conj() / coeff))
    # merge duplicate exponents; inconsistent duplicates are unsolvable
    by_k: dict[int, CycloNum] = {}
    for k, w in items:
        if k in by_k:
            if by_k[k] != w:
                return False, None
        else:
            by_k[k] = w
    ks = sorted(by_k)
    k0 = ks[0]
    w0 = by_k[k0]
    relations = [(k - k0, w0 / by_k[k]) for k in ks[1:]]  # c^delta = value
    if not relations:
        return True, 1.0 + 0j  # only one exponent class: any unimodular c works
    g, val = relations[0]
    for delta, value in relations[1:]:
        new_g = math.gcd(g, delta)
        x, y = _bezout(g, delta, new_g)
        val = (val ** x) * (value ** y)
        g = new_g
    for delta, value in relations:
        if val ** (delta // g) != value:
            return False, None
    c_num = val.to_complex() ** (1.0 / g)
    return True, c_num


def _bezout(a: int, b: int, g: int):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    assert old_r == g
    return old_s, old_t


def _inversion_identity_polynomials(psi: RationalMap) -> list[Poly]:
    """For each power of z, the polynomial in beta whose vanishing encodes
    psi(z) * psi-bar(beta/z) = 1 (cross-multiplied)."""
    m = common_order(psi.field_order, 4)
    r = max(psi.numer.degree, psi.denom.degree)
    p = [c.rebase(m) for c in psi.numer.padded(r + 1)]
    q = [c.rebase(m) for c in psi.denom.padded(r + 1)]
    zero = CycloNum.zero(m)
    out = []
    for j in range(2 * r + 1):
        coeffs = [zero] * (r + 1)
        for k in range(r + 1):
            i = j - r + k
            if 0 <= i <= r:
                coeffs[k] = coeffs[k] + (p[i] * p[k].conj() - q[i] * q[k].conj())
        poly = Poly(coeffs, m)
        if not poly.is_zero():
            out.append(poly)
    return out


def _admissible_inversion_factors(psi: RationalMap):
    """(exact unimodular betas, includes_one, unresolved numeric betas)."""
    from .polyring import poly_gcd

    eqs = _inversion_identity_polynomials(psi)
    if not eqs:
        # identity holds for every beta; beta = 1 included
        return [], True, []
    g = eqs[0]
    for e in eqs[1:]:
        if g.degree == 0:
            break
        g = poly_gcd(g, e)
    one = CycloNum.one(g.order)
    includes_one = all(e.evaluate(one).is_zero() for e in eqs)
    exact: list[CycloNum] = []
    unresolved: list[complex] = []
    if g.degree >= 1:
        for root, _ in roots_numeric(g):
            if abs(abs(root) - 1.0) > 1e-6:
                continue
            if abs(root - 1.0) <= 1e-9:
                continue  # handled exactly above
            lifted = None
            for order in {common_order(g.order, 4), common_order(g.order, 8), common_order(g.order, 12)}:
                for cand in recognize_cyclo_candidates(root, order):
                    if cand.is_unimodular() and g.evaluate(cand.rebase(common_order(cand.order, g.order))).is_zero():
                        lifted = cand
                        break
                if lifted is not None:
                    break
            if lifted is not None:
                exact.append(lifted)
            else:
                unresolved.append(root)
    return exact, includes_one, unresolved


def _root_of_unity_power(beta: CycloNum) -> tuple[int, int] | None:
    """(L, j) with beta = zeta_L^j, or None when beta is not a root of unity."""
    bound = int(math.lcm(2, beta.order))
    acc = beta
    for k in range(1, bound + 1):
        if acc.is_one():
            # beta^k = 1; locate the exponent by matching phases exactly
            phase = beta.to_complex()
            for j in range(k):
                if beta == CycloNum.zeta(k, j):
                    return (k, j)
            return None
        acc = acc * beta
    return None


def rotation_form_check(form: CanonicalCyclicForm) -> RotationFormCheck:
    """Decide reality for a map in rotation normal form z * psi(z^n).

    Condition (a): no unimodular c satisfies psi(z) = psi-bar(c z); its
    failure produces a reflection fixing 0 and infinity.  Condition (b):
    some unimodular beta = alpha^n solves psi(z) * psi-bar(beta/z) = 1;
    the symmetry alpha/conj(z) it produces avoids being a reflection
    exactly when beta != 1.  Pseudo-real iff (a) holds and such a beta
    exists while beta = 1 is not admissible."""
    if form.n < 2:
        raise NotCanonicalError("rotation normal form needs order n >= 2")
    psi = form.psi
    solvable, c_num = _rotation_conjugate_solvable(psi)
    betas, includes_one, unresolved = _admissible_inversion_factors(psi)
    notes: list[str] = []
    if not solvable:
        if includes_one:
            verdict = REAL
            notes.append("beta = 1 admissible: a reflection 1/conj(z)-type symmetry exists")
        elif betas:
            verdict = PSEUDO_REAL
        elif unresolved:
            verdict = "unresolved"
            notes.append("unimodular candidates resisted exact lifting")
        else:
            verdict = NO_ANTIHOLOMORPHIC
    else:
        verdict = REAL
        notes.append("psi(z) = psi-bar(c z) solvable: rotation-axis reflection exists")
    check = RotationFormCheck(
        n=form.n,
        condition_a_holds=not solvable,
        rotation_factor=c_num if solvable else None,
        admissible_betas=betas,
        includes_beta_one=includes_one,
        unresolved_betas=unresolved,
        verdict=verdict,
        notes=notes,
    )
    if verdict == PSEUDO_REAL:
        beta = betas[0]
        check.beta = beta
        ru = _root_of_unity_power(beta)
        if ru is not None:
            order, j = ru
            check.alpha_exact = CycloNum.zeta(order * form.n, j)
        check.alpha_numeric = beta.to_complex() ** (1.0 / form.n)
    return check


# -- the full pipeline -------------------------------------------------------------


@dataclass
class Classification:
    verdict: str
    degree: int
    holo_kind: str
    holo_n: int | None
    theta: CycloNum | None
    alpha: CycloNum | None
    alpha_numeric: complex | None
    beta: CycloNum | None
    reflection_witness: ExtendedMoebius | None
    imaginary_witness: ExtendedMoebius | None
    mode: str
    certified: bool
    consistency_notes: list[str]
    report: AutGroupReport

    def holo_label(self) -> str:
        if self.holo_kind in ("Cyclic", "Dihedral"):
            return f"{self.holo_kind}({self.holo_n})"
        return self.holo_kind


def classify_map(phi: RationalMap, opts: SearchOptions | None = None) -> Classification:
    """Compute the symmetry group and decide real / pseudo-real status."""
    if phi.degree < 2:
        raise BadDegreeError("classification needs degree >= 2")
    opts = opts or SearchOptions()
    report = aut_group_report(phi, opts)
    notes = list(report.notes)
    antis = report.antiholo_elements
    bound = 2 * (phi.degree + 1)

    reflection = None
    imaginary = None
    for g in antis:
        k = g.order(bound, tol=1e-6)
        if k == 2:
            kind = g.classify_involution(tol=1e-6)
            if kind == "reflection" and reflection is None:
                reflection = g
            elif kind == "imaginary_reflection" and imaginary is None:
                imaginary = g

    if not antis:
        verdict = NO_ANTIHOLOMORPHIC
    elif reflection is not None:
        verdict = REAL
    else:
        verdict = PSEUDO_REAL

    theta = antipodal_witness(phi)
    if theta is not None:
        notes.append("antipodal coefficient identity holds (exact)")

    alpha = None
    alpha_numeric = None
    beta = None
    certified = report.certified
    if report.holo_kind == "Trivial" and antis:
        notes.append("trivial symmetry group: classified by involution type")
    if report.holo_kind == "Cyclic":
        exact_gens = [
            g
            for g in report.holo_elements
            if g.exact and g.order(bound) == report.holo_n
        ]
        if exact_gens:
            form = None
            for gen in exact_gens:
                try:
                    form = canonicalize_cyclic(phi, gen)
                    break
                except NotCertifiedError:
                    continue
            if form is not None:
                check = rotation_form_check(form)
                if check.verdict == "unresolved":
                    certified = False
                    notes.append("rotation-form certificate inconclusive")
                elif check.verdict != verdict:
                    raise ConsistencyViolationError(
                        f"rotation-form certificate says {check.verdict}, "
                        f"group computation says {verdict}"
                    )
                else:
                    notes.append("rotation-form certificate agrees (exact)")
                    alpha = check.alpha_exact
                    alpha_numeric = check.alpha_numeric
                    beta = check.beta
            else:
                certified = False
                notes.append("cyclic generator not liftable; no exact rotation-form certificate")
        else:
            certified = False
            notes.append("no exact cyclic generator available")

    if verdict == PSEUDO_REAL:
        if phi.degree % 2 == 0 or phi.degree < 3:
            raise ConsistencyViolationError(
                f"pseudo-real verdict at degree {phi.degree}; odd degree >= 3 required"
            )
        if report.holo_kind not in ("Trivial", "Cyclic"):
            raise ConsistencyViolationError(
                f"pseudo-real verdict with {report.holo_kind} symmetry group"
            )
        if phi.is_polynomial_like():
            raise ConsistencyViolationError(
                "pseudo-real verdict on a polynomial-like map"
            )
        notes.append("pseudo-real necessary conditions verified: odd degree, "
                     "not polynomial-like, trivial-or-cyclic symmetries")

    return Classification(
        verdict=verdict,
        degree=phi.degree,
        holo_kind=report.holo_kind,
        holo_n=report.holo_n,
        theta=theta,
        alpha=alpha,
        alpha_numeric=alpha_numeric,
        beta=beta,
        reflection_witness=reflection,
        imaginary_witness=imaginary,
        mode=report.mode,
        certified=certified,
        consistency_notes=notes,
        report=report,
    )


def is_conjugate_to_conjugate(phi: RationalMap, opts: SearchOptions | None = None) -> bool:
    """True iff phi is Moebius-conjugate to the coefficient-conjugated map.

    T o phi o T^(-1) = phi-bar holds for some Moebius T iff J o T is an
    antiholomorphic symmetry of phi, so this is exactly the existence of
    an antiholomorphic element in the computed group."""
    return classify_map(phi, opts).verdict != NO_ANTIHOLOMORPHIC
