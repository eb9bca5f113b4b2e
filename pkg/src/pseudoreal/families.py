"""Constructors for explicit pseudo-real maps and the quotient construction.

* silverman(d): i * ((z-1)/(z+1))^d for odd d >= 3; admits the antipodal
  involution -1/conj(z) and no reflection.
* cyclic_pseudo_real_family: z * psi(z^n) with the denominator of psi built
  from the numerator by b_k = (-1)^k * e^(i theta) * conj(a_(r-k)); under
  the stated coefficient inequalities the map is pseudo-real with
  symmetry group exactly the order-n rotations.
* quotient_map: for a map in rotation normal form, the degree-preserving
  quotient under z -> z^n, which trades the rotation symmetry for the
  antipodal involution on the quotient sphere.
"""

from __future__ import annotations

from .autgrp import CanonicalCyclicForm
from .classify import _rotation_conjugate_solvable
from .cyclotomic import CycloNum, common_order
from .errors import BadDegreeError, ConditionViolationError, NotCanonicalError
from .polyring import Poly
from .ratmap import RationalMap


def silverman(d: int) -> RationalMap:
    """i * ((z-1)/(z+1))^d, expanded exactly over Q(i); d odd, d >= 3."""
    if d < 3 or d % 2 == 0:
        raise BadDegreeError("the family needs odd degree d >= 3")
    i = CycloNum.i()
    z = Poly.x(4)
    one = Poly.one(4)
    return RationalMap.reduce(Poly.constant(i) * (z - one) ** d, (z + one) ** d)


def _build_psi(theta: CycloNum, coeffs: list[CycloNum]) -> RationalMap:
    r = len(coeffs) - 1
    denom = []
    for k in range(r + 1):
        term = theta * coeffs[r - k].conj()
        if k % 2 == 1:
            term = -term
        denom.append(term)
    return RationalMap.reduce(Poly(coeffs), Poly(denom))


def _support_in_residue_class(psi: RationalMap, modulus: int) -> bool:
    for poly in (psi.numer, psi.denom):
        for k, c in enumerate(poly.coeffs):
            if not c.is_zero() and k % modulus != 0:
                return False
    return True


def cyclic_pseudo_real_family(
    n: int, r: int, theta: CycloNum, coeffs
) -> RationalMap:
    """z * psi(z^n) with denominator b_k = (-1)^k e^(i theta) conj(a_(r-k)).

    Requires n >= 6, even r >= 2, unimodular e^(i theta), a_1 a_r != 0 and
    a_0 a_r != e^(2 i theta) conj(a_0 a_r).  The construction hypotheses
    are re-verified, including the exact inversion identity
    psi-bar(z) = 1 / psi(-1/z); the result has degree 1 + n r, is
    pseudo-real, and its holomorphic symmetries are exactly the order-n
    rotations."""
    coeffs = [CycloNum._coerce(c) for c in coeffs]
    if n < 6:
        raise ConditionViolationError("rotation order n must be at least 6")
    if r < 2 or r % 2 == 1:
        raise ConditionViolationError("psi degree r must be even and at least 2")
    if len(coeffs) != r + 1:
        raise ConditionViolationError(f"need r + 1 = {r + 1} coefficients")
    theta = CycloNum._coerce(theta)
    if not theta.is_unimodular():
        raise ConditionViolationError("theta parameter must be unimodular")
    if coeffs[1].is_zero() or coeffs[r].is_zero():
        raise ConditionViolationError("a_1 * a_r must be nonzero")
    prod = coeffs[0] * coeffs[r]
    if prod == theta * theta * prod.conj():
        raise ConditionViolationError(
            "a_0 * a_r = e^(2 i theta) * conj(a_0 * a_r): the inversion flip "
            "z -> s/z would be a symmetry"
        )
    psi = _build_psi(theta, coeffs)
    if psi.degree != r:
        raise ConditionViolationError("psi degenerated under reduction")
    # support condition: psi must not be a rational function of z^m
    for mod in range(2, r + 1):
        if _support_in_residue_class(psi, mod):
            raise ConditionViolationError(
                f"psi is a function of z^{mod}; rotation group would be larger"
            )
    # exact inversion identity: conj(P) * rev(P) == conj(Q) * rev(Q) encodes
    # psi-bar(z) * psi(-1/z) = 1
    minus_one = CycloNum.from_rational(-1)
    p, q = psi.numer, psi.denom
    lhs = p.conj() * p.reversed_twisted(minus_one, r)
    rhs = q.conj() * q.reversed_twisted(minus_one, r)
    if lhs != rhs:
        raise ConditionViolationError("inversion identity psi-bar(z) = 1/psi(-1/z) failed")
    # safety: the rotation-axis reflection must not exist
    solvable, _ = _rotation_conjugate_solvable(psi)
    if solvable:
        raise ConditionViolationError("psi(z) = psi-bar(c z) solvable; map would be real")
    z = Poly.x(psi.field_order)
    return RationalMap.reduce(
        z * psi.numer.substitute_power(n), psi.denom.substitute_power(n)
    )


def sample_degree13() -> RationalMap:
    """The built-in degree-13 sample: z (1 + z^6 + i z^12)/(-i - z^6 + z^12),
    pseudo-real with symmetry group the order-6 rotations."""
    i = CycloNum.i()
    return cyclic_pseudo_real_family(
        6, 2, CycloNum.one(4), [CycloNum.one(4), CycloNum.one(4), i]
    )


def sample_degree3_order4() -> RationalMap:
    """(1 + i z^2)/(z - i z^3): a degree-3 pseudo-real map whose holomorphic
    symmetries are exactly {z, -z} and whose antiholomorphic symmetries
    i/conj(z) and -i/conj(z) have order four, so no reflection exists.

    This witnesses an order-4 antiholomorphic symmetry in degree 3 (the
    tests pin the full certificate)."""
    i = CycloNum.i()
    z = Poly.x(4)
    one = Poly.one(4)
    return RationalMap.reduce(
        one + Poly.constant(i) * z * z, z - Poly.constant(i) * z ** 3
    )


def quotient_map(form: CanonicalCyclicForm) -> RationalMap:
    """The quotient of z * psi(z^n) under the branched cover w = z^n:
    w -> w * psi(w)^n, reduced."""
    if form.n < 2:
        raise NotCanonicalError("quotient needs rotation order n >= 2")
    psi = form.psi
    w = Poly.x(psi.field_order)
    return RationalMap.reduce(w * psi.numer ** form.n, psi.denom ** form.n)


def verify_semiconjugacy(phi: RationalMap, quotient: RationalMap, n: int) -> bool:
    """Exact check of (z^n) o phi = quotient o (z^n), i.e.
    phi(z)^n = quotient(z^n) as rational functions."""
    if n < 2:
        raise ValueError("cover degree n must be at least 2")
    m = common_order(phi.field_order, quotient.field_order)
    lhs_num = phi.numer.rebase(m) ** n
    lhs_den = phi.denom.rebase(m) ** n
    rhs_num = quotient.numer.rebase(m).substitute_power(n)
    rhs_den = quotient.denom.rebase(m).substitute_power(n)
    return lhs_num * rhs_den == rhs_num * lhs_den
