"""Rational maps P/Q on the Riemann sphere as dynamical objects.

A RationalMap is stored reduced (gcd(P, Q) = 1) with a canonical
projective scale, so two maps are equal as rational functions iff their
coefficient tuples agree.  The degree is max(deg P, deg Q); membership in
the degree-d family (nonvanishing formal resultant) follows from
reducedness plus one of the polynomials attaining degree d.

Conjugation by extended Moebius transformations g computes g o phi o
g^(-1) exactly; for antiholomorphic g this first conjugates the
coefficients (phi-bar) and then applies the matrix substitution, matching
the conjugate-first orientation convention of the moebius module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CycloNum, common_order
from .errors import BadDegreeError, DegenerateSetError, ZeroMapError
from .moebius import ExtendedMoebius
from .polyring import Poly, poly_gcd, roots_numeric
from .sphere import INF, chordal, is_inf


class RationalMap:
    """A reduced rational map of degree >= 0."""

    __slots__ = ("numer", "denom", "degree")

    def __init__(self, numer: Poly, denom: Poly, _reduced: bool = False):
        if not _reduced:
            raise TypeError("use RationalMap.reduce to construct maps")
        self.numer = numer
        self.denom = denom
        self.degree = max(numer.degree, denom.degree)

    @classmethod
    def reduce(cls, numer: Poly, denom: Poly) -> "RationalMap":
        """Cancel the gcd and normalize the projective scale."""
        if numer.is_zero() and denom.is_zero():
            raise ZeroMapError("numerator and denominator are both zero")
        m = common_order(numer.order, denom.order)
        numer, denom = numer.rebase(m), denom.rebase(m)
        if not numer.is_zero() and not denom.is_zero():
            g = poly_gcd(numer, denom)
            if g.degree > 0:
                numer = numer // g
                denom = denom // g
        pivot = denom.lead() if not denom.is_zero() else numer.lead()
        inv = pivot.inv()
        return cls(numer.scale(inv), denom.scale(inv), _reduced=True)

    @classmethod
    def from_expr_pair(cls, numer_coeffs, denom_coeffs) -> "RationalMap":
        return cls.reduce(Poly(numer_coeffs), Poly(denom_coeffs))

    @property
    def field_order(self) -> int:
        return common_order(self.numer.order, self.denom.order)

    # -- evaluation --------------------------------------------------------

    def evaluate(self, z):
        """Value at an exact sphere point (total on the sphere)."""
        if is_inf(z):
            dp, dq = self.numer.degree, self.denom.degree
            if dp > dq:
                return INF
            if dp < dq:
                return CycloNum.zero(self.field_order)
            return self.numer.lead() / self.denom.lead()
        z = CycloNum._coerce(z)
        num = self.numer.evaluate(z)
        den = self.denom.evaluate(z)
        if den.is_zero():
            return INF
        return num / den

    def evaluate_numeric(self, z):
        if is_inf(z):
            dp, dq = self.numer.degree, self.denom.degree
            if dp > dq:
                return INF
            if dp < dq:
                return 0j
            return self.numer.lead().to_complex() / self.denom.lead().to_complex()
        num = self.numer.evaluate_complex(z)
        den = self.denom.evaluate_complex(z)
        if den == 0:
            return INF
        return num / den

    def orbit(self, z, length: int) -> list:
        out = [z]
        for _ in range(length):
            out.append(self.evaluate(out[-1]))
        return out

    # -- algebraic views -----------------------------------------------------

    def conj_map(self) -> "RationalMap":
        """phi-bar: the map with conjugated coefficients."""
        return RationalMap(self.numer.conj(), self.denom.conj(), _reduced=True)

    def compose(self, other: "RationalMap") -> "RationalMap":
        """self o other as a rational map."""
        d = max(self.numer.degree, self.denom.degree)
        num = _substitute_fraction(self.numer, other.numer, other.denom, d)
        den = _substitute_fraction(self.denom, other.numer, other.denom, d)
        return RationalMap.reduce(num, den)

    def conjugate_by(self, g: ExtendedMoebius) -> "RationalMap":
        """g o self o g^(-1), exact; a group action on maps."""
        base = self.conj_map() if g.antiholo else self
        a, b, c, d = g.a, g.b, g.c, g.d
        if not g.exact:
            raise TypeError("exact conjugation needs exact matrix entries")
        deg = max(base.numer.degree, base.denom.degree)
        # substitute the inverse (adjugate) first: z -> (d z - b) / (-c z + a)
        u = Poly([-b, d])
        v = Poly([a, -c])
        p_sub = _homogeneous_substitute(base.numer, u, v, deg)
        q_sub = _homogeneous_substitute(base.denom, u, v, deg)
        new_num = p_sub.scale(a) + q_sub.scale(b)
        new_den = p_sub.scale(c) + q_sub.scale(d)
        result = RationalMap.reduce(new_num, new_den)
        if result.degree != self.degree:
            raise ArithmeticError("conjugation changed the degree; matrix is singular")
        return result

    def equals_projective(self, other: "RationalMap") -> bool:
        """Same rational function: equal coefficients up to one scalar."""
        if self.degree != other.degree:
            return False
        return self.numer * other.denom == other.numer * self.denom

    def __eq__(self, other):
        if not isinstance(other, RationalMap):
            return NotImplemented
        return self.equals_projective(other)

    __hash__ = None

    # -- distinguished finite data ----------------------------------------------

    def fixed_point_polynomial(self) -> Poly:
        """P(z) - z Q(z); its roots are the finite fixed points."""
        return self.numer - Poly.x(self.field_order) * self.denom

    def infinity_fixed_multiplicity(self) -> int:
        if self.numer.degree <= self.denom.degree:
            return 0
        f = self.fixed_point_polynomial()
        return (self.degree + 1) - f.degree

    def critical_polynomial(self) -> Poly:
        """Wronskian P'Q - PQ'; roots are the finite critical points."""
        return self.numer.derivative() * self.denom - self.numer * self.denom.derivative()

    def infinity_critical_multiplicity(self) -> int:
        w = self.critical_polynomial()
        target = 2 * self.degree - 2
        return target - w.degree if w.degree < target else 0

    def distinguished_points(self, tol: float = 1e-12) -> list["LabeledPoint"]:
        """Numeric Fix u Crit with (fixed, critical) multiplicity labels.

        Extended with critical values if fewer than three points remain,
        which does not happen for genuine degree >= 2 maps.
        """
        if self.degree < 2:
            raise BadDegreeError("distinguished set needs degree >= 2")
        merged: list[list] = []  # [point, fixed_mult, crit_mult, extended]

        def add(point, fixed_mult=0, crit_mult=0, extended=False):
            for entry in merged:
                if chordal(entry[0], point) <= 1e-8:
                    entry[1] += fixed_mult
                    entry[2] += crit_mult
                    entry[3] = entry[3] and extended
                    return
            merged.append([point, fixed_mult, crit_mult, extended])

        fixed_poly = self.fixed_point_polynomial()
        if fixed_poly.degree >= 1:
            for root, mult in roots_numeric(fixed_poly, tol):
                add(root, fixed_mult=mult)
        inf_fix = self.infinity_fixed_multiplicity()
        if inf_fix:
            add(INF, fixed_mult=inf_fix)
        crit_poly = self.critical_polynomial()
        if crit_poly.degree >= 1:
            for root, mult in roots_numeric(crit_poly, tol):
                add(root, crit_mult=mult)
        inf_crit = self.infinity_critical_multiplicity()
        if inf_crit:
            add(INF, crit_mult=inf_crit)
        if len(merged) < 3:
            crit_points = [e[0] for e in merged if e[2] > 0]
            for c in crit_points:
                add(self.evaluate_numeric(c), extended=True)
        if len(merged) < 3:
            raise DegenerateSetError(
                f"distinguished set has only {len(merged)} points after extension"
            )
        return [LabeledPoint(e[0], e[1], e[2], e[3]) for e in merged]

    def is_polynomial_like(self) -> bool:
        """True iff some fixed point is totally invariant, i.e. the map is
        Moebius-conjugate to a polynomial."""
        if self.degree < 2:
            raise BadDegreeError("polynomial test needs degree >= 2")
        if self.denom.degree <= 0:
            return True  # infinity is totally invariant
        d = self.degree
        fixed_poly = self.fixed_point_polynomial()
        if fixed_poly.degree < 1:
            return False  # every fixed point is at infinity, which is not totally invariant here
        p = self.numer.to_complex_coeffs(d + 1)
        q = self.denom.to_complex_coeffs(d + 1)
        for root, _ in roots_numeric(fixed_poly):
            # totally invariant at w  <=>  P - wQ is proportional to (z-w)^d
            shifted = [pc - root * qc for pc, qc in zip(p, q)]
            target = [1.0 + 0j]
            for _ in range(d):
                target = [0j] + target
                for k in range(len(target) - 1):
                    target[k] += -root * target[k + 1]
            scale = shifted[-1]
            if abs(scale) < 1e-9 * max(abs(x) for x in shifted):
                continue
            diff = max(
                abs(s - scale * t) for s, t in zip(shifted, target)
            )
            if diff <= 1e-6 * max(1.0, abs(scale)) * max(abs(x) for x in target):
                return True
        return False

    # -- serialization -----------------------------------------------------------

    def to_coeff_json(self) -> dict:
        m = self.field_order
        d = self.degree

        def encode(poly: Poly):
            return [
                [str(q) for q in coeff.coords] for coeff in poly.rebase(m).padded(d + 1)
            ]

        return {
            "field_order": m,
            "numer": encode(self.numer),
            "denom": encode(self.denom),
        }

    @classmethod
    def from_coeff_json(cls, data: dict) -> "RationalMap":
        m = int(data["field_order"])

        def decode(rows):
            return Poly(
                [CycloNum(m, [Fraction(s) for s in row]) for row in rows], m
            )

        return cls.reduce(decode(data["numer"]), decode(data["denom"]))

    def to_expr(self) -> str:
        num = _poly_expr(self.numer)
        den = _poly_expr(self.denom)
        if self.denom.degree == 0 and self.denom.lead().is_one():
            return num
        return f"({num})/({den})"

    def __repr__(self):
        return f"RationalMap({self.to_expr()}, degree={self.degree})"


@dataclass(frozen=True)
class LabeledPoint:
    """A distinguished point with conjugation-invariant labels."""

    point: object  # complex or INF
    fixed_mult: int
    crit_mult: int
    extended: bool = False

    @property
    def label(self) -> tuple:
        return (self.fixed_mult, self.crit_mult, self.extended)

    @property
    def is_fixed(self) -> bool:
        return self.fixed_mult > 0

    @property
    def is_critical(self) -> bool:
        return self.crit_mult > 0


def _homogeneous_substitute(p: Poly, u: Poly, v: Poly, formal_degree: int) -> Poly:
    """sum_k p_k u^k v^(D-k), i.e. v^D * p(u/v) at formal degree D."""
    m = common_order(p.order, u.order, v.order)
    coeffs = p.rebase(m).padded(formal_degree + 1)
    acc = Poly.constant(coeffs[formal_degree], m)
    v_pow = Poly.one(m)
    for k in range(formal_degree - 1, -1, -1):
        v_pow = v_pow * v
        acc = acc * u
        if not coeffs[k].is_zero():
            acc = acc + v_pow.scale(coeffs[k])
    return acc


def _substitute_fraction(p: Poly, num: Poly, den: Poly, formal_degree: int) -> Poly:
    return _homogeneous_substitute(p, num, den, formal_degree)


def _poly_expr(p: Poly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        txt = c.to_expr()
        needs_paren = ("+" in txt[1:]) or ("-" in txt[1:])
        if k == 0:
            parts.append(f"({txt})" if needs_paren else txt)
            continue
        z = "z" if k == 1 else f"z^{k}"
        if c.is_one():
            parts.append(z)
        elif (-c).is_one() if isinstance(c, CycloNum) else False:
            parts.append(f"-{z}")
        else:
            coeff_txt = f"({txt})" if (needs_paren or txt.startswith("-")) else txt
            parts.append(f"{coeff_txt}*{z}")
    text = parts[0]
    for t in parts[1:]:
        text += t if t.startswith("-") else "+" + t
    return text
