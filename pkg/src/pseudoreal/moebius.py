"""Holomorphic and antiholomorphic automorphisms of the Riemann sphere.

An ExtendedMoebius is a projective 2x2 matrix M together with an
orientation flag: the action is z -> M.z for holomorphic elements and
z -> M.(conj z) for antiholomorphic ones (conjugate first, then apply the
matrix).  Entries are CycloNum in exact mode or complex in numeric mode;
the two modes share all group operations.

Composition follows (M, s) * (N, t) = (M . s(N), s xor t) where s(N)
conjugates the entries of N when s is antiholomorphic; this matches
pointwise composition g(h(z)) and is pinned by unit tests.
"""

from __future__ import annotations

import math

from .cyclotomic import CycloNum, common_order
from .errors import (
    DegenerateTripleError,
    NotAnInvolutionError,
    TooManyCoincidencesError,
)
from .sphere import INF, conj_point, is_inf


def _is_exact(value) -> bool:
    return isinstance(value, CycloNum)


class ExtendedMoebius:
    """z -> M.z or z -> M.(conj z), as a projective matrix plus flag."""

    __slots__ = ("a", "b", "c", "d", "antiholo")

    def __init__(self, a, b, c, d, antiholo: bool = False):
        entries = (a, b, c, d)
        if any(_is_exact(e) for e in entries):
            m = common_order(*(e.order for e in entries if _is_exact(e)))
            a, b, c, d = (
                e.rebase(m) if _is_exact(e) else CycloNum.from_rational(e).rebase(m)
                for e in entries
            )
            if (a * d - b * c).is_zero():
                raise ValueError("Moebius matrix must be invertible")
        else:
            a, b, c, d = (complex(e) for e in entries)
            if a * d - b * c == 0:
                raise ValueError("Moebius matrix must be invertible")
        self.a, self.b, self.c, self.d = a, b, c, d
        self.antiholo = bool(antiholo)

    # -- basic structure ---------------------------------------------------

    @property
    def exact(self) -> bool:
        return _is_exact(self.a)

    def matrix(self):
        return ((self.a, self.b), (self.c, self.d))

    def det(self):
        return self.a * self.d - self.b * self.c

    def entry_conj(self, value):
        return value.conj() if self.exact else value.conjugate()

    def conj_entries(self) -> "ExtendedMoebius":
        return ExtendedMoebius(
            self.entry_conj(self.a),
            self.entry_conj(self.b),
            self.entry_conj(self.c),
            self.entry_conj(self.d),
            self.antiholo,
        )

    def to_numeric(self) -> "ExtendedMoebius":
        if not self.exact:
            return self
        return ExtendedMoebius(
            self.a.to_complex(),
            self.b.to_complex(),
            self.c.to_complex(),
            self.d.to_complex(),
            self.antiholo,
        )

    def normalized(self) -> "ExtendedMoebius":
        """Canonical projective representative.

        Exact mode scales the first nonzero entry in row-major order to 1.
        Numeric mode scales to unit Frobenius norm and rotates the first
        significant entry to positive real phase.
        """
        entries = (self.a, self.b, self.c, self.d)
        if self.exact:
            pivot = next(e for e in entries if not e.is_zero())
            inv = pivot.inv()
            return ExtendedMoebius(*(e * inv for e in entries), self.antiholo)
        norm = math.sqrt(sum(abs(e) ** 2 for e in entries))
        top = max(abs(e) for e in entries)
        pivot = next(e for e in entries if abs(e) > 0.5 * top)
        phase = pivot / abs(pivot)
        scale = 1.0 / (norm * phase)
        return ExtendedMoebius(*(e * scale for e in entries), self.antiholo)

    # -- group operations ----------------------------------------------------

    def compose(self, other: "ExtendedMoebius") -> "ExtendedMoebius":
        """self o other, acting as self(other(z))."""
        o = other.conj_entries() if self.antiholo else other
        return ExtendedMoebius(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
            self.antiholo != other.antiholo,
        )

    def __matmul__(self, other):
        return self.compose(other)

    def inverse(self) -> "ExtendedMoebius":
        adj = ExtendedMoebius(self.d, -self.b, -self.c, self.a, self.antiholo)
        return adj.conj_entries() if self.antiholo else adj

    def apply(self, point):
        """Image of a sphere point (exact or numeric, matching the mode)."""
        z = conj_point(point) if self.antiholo else point
        if is_inf(z):
            if self.exact:
                return INF if self.c.is_zero() else self.a / self.c
            return INF if self.c == 0 else self.a / self.c
        num = self.a * z + self.b
        den = self.c * z + self.d
        if self.exact:
            return INF if den.is_zero() else num / den
        return INF if den == 0 else num / den

    def __call__(self, point):
        return self.apply(point)

    def is_identity(self, tol: float = 1e-9) -> bool:
        if self.antiholo:
            return False
        if self.exact:
            return self.b.is_zero() and self.c.is_zero() and self.a == self.d
        scale = max(abs(self.a), abs(self.d))
        return (
            abs(self.b) <= tol * scale
            and abs(self.c) <= tol * scale
            and abs(self.a - self.d) <= tol * scale
        )

    def order(self, bound: int, tol: float = 1e-9) -> int | None:
        """Least k <= bound with self^k projectively the identity, else None."""
        if bound < 1:
            raise ValueError("order bound must be positive")
        acc = self
        for k in range(1, bound + 1):
            if acc.is_identity(tol):
                return k
            acc = acc.compose(self)
            if not acc.exact:
                acc = acc.normalized()  # keep float powers well-scaled
        return None

    def projectively_equal(self, other: "ExtendedMoebius", tol: float = 1e-9) -> bool:
        if self.antiholo != other.antiholo:
            return False
        if self.exact and other.exact:
            # M ~ N iff all 2x2 minors of the stacked 2x4 matrix vanish
            m = [self.a, self.b, self.c, self.d]
            n = [other.a, other.b, other.c, other.d]
            for i in range(4):
                for j in range(i + 1, 4):
                    if not (m[i] * n[j] - m[j] * n[i]).is_zero():
                        return False
            return True
        return proj_distance(self, other) <= tol

    def classify_involution(self, tol: float = 1e-9) -> str:
        """'reflection' (has fixed points) or 'imaginary_reflection' (none).

        For an antiholomorphic involution, M . conj(M) = lam * I with lam
        real; rescaling M multiplies lam by a positive number, so its sign
        is projective: positive means conjugate to conj(z), negative to
        -1/conj(z).
        """
        if not self.antiholo:
            raise NotAnInvolutionError("classification needs an antiholomorphic element")
        square = self.compose(self)
        if not square.is_identity(tol):
            raise NotAnInvolutionError("element does not have order two")
        conj_m = self.conj_entries()
        k00 = self.a * conj_m.a + self.b * conj_m.c
        if self.exact:
            lam = complex(k00.to_complex())
        else:
            lam = complex(k00)
        if abs(lam.imag) > tol * max(1.0, abs(lam)) or lam == 0:
            raise NotAnInvolutionError("degenerate involution normal form")
        return "reflection" if lam.real > 0 else "imaginary_reflection"

    # -- constructors ----------------------------------------------------------

    @classmethod
    def identity(cls, order: int = 1) -> "ExtendedMoebius":
        one = CycloNum.one(order)
        zero = CycloNum.zero(order)
        return cls(one, zero, zero, one)

    @classmethod
    def from_matrix(cls, rows, antiholo: bool = False) -> "ExtendedMoebius":
        (a, b), (c, d) = rows
        return cls(a, b, c, d, antiholo)

    @classmethod
    def rotation(cls, m: int, k: int = 1) -> "ExtendedMoebius":
        """z -> zeta_m^k z."""
        zero = CycloNum.zero(m)
        return cls(CycloNum.zeta(m, k), zero, zero, CycloNum.one(m))

    @classmethod
    def scaling(cls, factor) -> "ExtendedMoebius":
        f = CycloNum._coerce(factor)
        zero = CycloNum.zero(f.order)
        return cls(f, zero, zero, CycloNum.one(f.order))

    @classmethod
    def inversion(cls) -> "ExtendedMoebius":
        """A(z) = 1/z."""
        one = CycloNum.one()
        zero = CycloNum.zero()
        return cls(zero, one, one, zero)

    @classmethod
    def conjugation(cls) -> "ExtendedMoebius":
        """J(z) = conj(z)."""
        one = CycloNum.one()
        zero = CycloNum.zero()
        return cls(one, zero, zero, one, antiholo=True)

    @classmethod
    def antipodal(cls) -> "ExtendedMoebius":
        """tau(z) = -1/conj(z), the fixed-point-free involution."""
        one = CycloNum.one()
        zero = CycloNum.zero()
        return cls(zero, -one, one, zero, antiholo=True)

    @classmethod
    def inversion_rotation(cls, n: int) -> "ExtendedMoebius":
        """z -> zeta_2n / conj(z); an antiholomorphic element of order 2n."""
        m = 2 * n
        zero = CycloNum.zero(m)
        return cls(zero, CycloNum.zeta(m, 1), CycloNum.one(m), zero, antiholo=True)

    @classmethod
    def from_three_points(cls, sources, targets, antiholo: bool = False) -> "ExtendedMoebius":
        """The unique element with the given orientation mapping each
        source point to the matching target point."""
        if len(sources) != 3 or len(targets) != 3:
            raise DegenerateTripleError("exactly three source and target points required")
        for triple in (sources, targets):
            for i in range(3):
                for j in range(i + 1, 3):
                    if _points_equal(triple[i], triple[j]):
                        raise DegenerateTripleError("triple points must be pairwise distinct")
        src = [conj_point(p) for p in sources] if antiholo else list(sources)
        gs = _three_point_rows(src)
        gt = _three_point_rows(list(targets))
        # T = adj(G_t) . G_s maps sources through (0,1,INF) to targets
        (a1, b1), (c1, d1) = gt
        adj = ((d1, -b1), (-c1, a1))
        rows = (
            (
                adj[0][0] * gs[0][0] + adj[0][1] * gs[1][0],
                adj[0][0] * gs[0][1] + adj[0][1] * gs[1][1],
            ),
            (
                adj[1][0] * gs[0][0] + adj[1][1] * gs[1][0],
                adj[1][0] * gs[0][1] + adj[1][1] * gs[1][1],
            ),
        )
        return cls(rows[0][0], rows[0][1], rows[1][0], rows[1][1], antiholo)

    # -- named finite-subgroup generators ---------------------------------------

    @classmethod
    def generator_T(cls, n: int) -> "ExtendedMoebius":
        return cls.rotation(n, 1)

    @classmethod
    def generator_A(cls) -> "ExtendedMoebius":
        return cls.inversion()

    @classmethod
    def generator_B(cls) -> "ExtendedMoebius":
        # sqrt(3) = zeta_12 + zeta_12^-1
        s3 = CycloNum.zeta(12, 1) + CycloNum.zeta(12, 11)
        u = s3 - 1
        return cls(u, u * u, CycloNum.from_rational(2, 12), -u)

    @classmethod
    def generator_C(cls) -> "ExtendedMoebius":
        # sqrt(2) = zeta_8 + zeta_8^-1
        s2 = CycloNum.zeta(8, 1) + CycloNum.zeta(8, 7)
        u = s2 + 1
        return cls(-u, u * u, CycloNum.one(8), u)

    @classmethod
    def generator_D(cls) -> "ExtendedMoebius":
        # sqrt(2 - w5 - w5^4) = 2 sin(pi/5) = zeta_20^3 - zeta_20^7
        s = CycloNum.zeta(20, 3) - CycloNum.zeta(20, 7)
        u = CycloNum.one(20) + s
        w5 = CycloNum.zeta(20, 4)
        low = CycloNum.one(20) - w5 - CycloNum.zeta(20, 16)
        return cls(-u, u * u, low, u)

    def __repr__(self):
        kind = "antiholo" if self.antiholo else "holo"
        if self.exact:
            ent = [e.to_expr() for e in (self.a, self.b, self.c, self.d)]
        else:
            ent = [f"{e:.6g}" for e in (self.a, self.b, self.c, self.d)]
        return f"ExtendedMoebius([[{ent[0]}, {ent[1]}], [{ent[2]}, {ent[3]}]], {kind})"


def named_generator(which: str, n: int | None = None) -> ExtendedMoebius:
    """Exact generators of the finite rotation groups: 'T' needs n."""
    if which == "T":
        if n is None or n < 1:
            raise ValueError("generator T needs a positive order n")
        return ExtendedMoebius.generator_T(n)
    table = {
        "A": ExtendedMoebius.generator_A,
        "B": ExtendedMoebius.generator_B,
        "C": ExtendedMoebius.generator_C,
        "D": ExtendedMoebius.generator_D,
    }
    if which not in table:
        raise ValueError(f"unknown generator {which!r}")
    return table[which]()


def _points_equal(p, q) -> bool:
    if is_inf(p) or is_inf(q):
        return is_inf(p) and is_inf(q)
    if isinstance(p, CycloNum) or isinstance(q, CycloNum):
        return CycloNum._coerce(p) == CycloNum._coerce(q)
    return complex(p) == complex(q)


def _three_point_rows(points):
    """Rows of the matrix sending the three points to (0, 1, INF)."""
    exact = any(isinstance(p, CycloNum) for p in points if not is_inf(p))
    if exact:
        one = CycloNum.one()
        zero = CycloNum.zero()
        pairs = [
            (one, zero) if is_inf(p) else (CycloNum._coerce(p), one) for p in points
        ]
    else:
        pairs = [(1.0 + 0j, 0j) if is_inf(p) else (complex(p), 1.0 + 0j) for p in points]

    def cross(u, v):
        return u[0] * v[1] - v[0] * u[1]

    p, q, r = pairs
    qr = cross(q, r)
    qp = cross(q, p)
    return ((qr * p[1], -(qr * p[0])), (qp * r[1], -(qp * r[0])))


def proj_distance(g: ExtendedMoebius, h: ExtendedMoebius) -> float:
    """Sine of the projective angle between two numeric matrices."""
    m = [complex(x) for x in (g.a, g.b, g.c, g.d)] if not g.exact else [
        x.to_complex() for x in (g.a, g.b, g.c, g.d)
    ]
    n = [complex(x) for x in (h.a, h.b, h.c, h.d)] if not h.exact else [
        x.to_complex() for x in (h.a, h.b, h.c, h.d)
    ]
    nm = math.sqrt(sum(abs(x) ** 2 for x in m))
    nn = math.sqrt(sum(abs(x) ** 2 for x in n))
    inner = abs(sum(x * y.conjugate() for x, y in zip(m, n)))
    cos2 = min(1.0, (inner / (nm * nn)) ** 2)
    return math.sqrt(max(0.0, 1.0 - cos2))


def cross_ratio(z1, z2, z3, z4):
    """(z1-z3)(z2-z4) / ((z1-z4)(z2-z3)) with INF limits.

    Exactly real iff the four points lie on a common circle or line.
    """
    pts = [z1, z2, z3, z4]
    distinct = []
    for p in pts:
        if not any(_points_equal(p, q) for q in distinct):
            distinct.append(p)
    if len(distinct) < 3:
        raise TooManyCoincidencesError("cross-ratio needs at least three distinct points")
    exact = any(isinstance(p, CycloNum) for p in pts if not is_inf(p))
    if exact or all(is_inf(p) or isinstance(p, (int,)) for p in pts):
        one = CycloNum.one()
        zero = CycloNum.zero()
        pairs = [
            (one, zero) if is_inf(p) else (CycloNum._coerce(p), one) for p in pts
        ]
    else:
        pairs = [(1.0 + 0j, 0j) if is_inf(p) else (complex(p), 1.0 + 0j) for p in pts]

    def cross(u, v):
        return u[0] * v[1] - v[0] * u[1]

    p1, p2, p3, p4 = pairs
    num = cross(p1, p3) * cross(p2, p4)
    den = cross(p1, p4) * cross(p2, p3)
    if isinstance(num, CycloNum):
        return INF if den.is_zero() else num / den
    return INF if den == 0 else num / den
