"""Automorphism groups of rational maps and the cyclic normal form.

The search works on the distinguished set S = Fix(phi) u Crit(phi): every
(anti)holomorphic automorphism permutes S and preserves the multiplicity
labels, so fixing one source triple in S and enumerating label-compatible
ordered target triples is a complete candidate generator.  Candidates are
filtered by whether they map all of S into S (vectorized over numpy), and
the few survivors are confirmed by projective comparison of the
conjugated coefficient vector.

Confirmed numeric elements can then be certified: entries are lifted into
a cyclotomic field by bounded-denominator recognition and the commutation
identity is re-verified in exact arithmetic.  A failed lift leaves the
element numeric and the report uncertified; it never produces a wrong
exact claim, since acceptance always rests on the exact re-verification.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .cyclotomic import CycloNum, common_order
from .errors import (
    NotAGroupError,
    NotAnAutomorphismError,
    NotCertifiedError,
    OrderMismatchError,
    SearchBoundExceededError,
)
from .moebius import ExtendedMoebius, proj_distance
from .polyring import Poly
from .ratmap import RationalMap
from .sphere import INF, conj_point, homog, is_inf


@dataclass
class SearchOptions:
    root_tol: float = 1e-12
    match_tol: float = 1e-8
    dedup_tol: float = 1e-7
    probe_tol: float = 1e-6
    search_cap: int = 200
    certify: bool = True
    denom_bound: int = 10**6

    def tolerances(self) -> dict:
        return {
            "root": self.root_tol,
            "match": self.match_tol,
            "dedup": self.dedup_tol,
            "probe": self.probe_tol,
        }


@dataclass
class AutGroupReport:
    """Holomorphic and antiholomorphic automorphisms plus group structure."""

    elements: list[ExtendedMoebius]
    holo_kind: str          # Trivial | Cyclic | Dihedral | A4 | S4 | A5
    holo_n: int | None      # the n of Cyclic(n) / Dihedral(n)
    mode: str               # "exact" when every element certified, else "numeric"
    tolerances: dict
    certified: bool
    notes: list[str] = field(default_factory=list)

    @property
    def holo_elements(self) -> list[ExtendedMoebius]:
        return [g for g in self.elements if not g.antiholo]

    @property
    def antiholo_elements(self) -> list[ExtendedMoebius]:
        return [g for g in self.elements if g.antiholo]

    @property
    def holo_order(self) -> int:
        return len(self.holo_elements)

    def holo_label(self) -> str:
        if self.holo_kind in ("Cyclic", "Dihedral"):
            return f"{self.holo_kind}({self.holo_n})"
        return self.holo_kind


# -- numeric search ---------------------------------------------------------


def _numeric_conjugated_coeffs(p, q, mat, antiholo, formal_deg):
    """Coefficient vectors of g o phi o g^(-1) from complex data."""
    if antiholo:
        p = [x.conjugate() for x in p]
        q = [x.conjugate() for x in q]
    a, b, c, d = mat

    def mul_linear(coeffs, e0, e1):
        out = [0j] * (len(coeffs) + 1)
        for k, x in enumerate(coeffs):
            out[k] += x * e0
            out[k + 1] += x * e1
        return out

    acc_p = [p[formal_deg]]
    acc_q = [q[formal_deg]]
    v_pow = [1.0 + 0j]
    for k in range(formal_deg - 1, -1, -1):
        v_pow = mul_linear(v_pow, a, -c)
        acc_p = mul_linear(acc_p, -b, d)
        acc_q = mul_linear(acc_q, -b, d)
        for idx, vc in enumerate(v_pow):
            acc_p[idx] += p[k] * vc
            acc_q[idx] += q[k] * vc
    new_p = [a * x + b * y for x, y in zip(acc_p, acc_q)]
    new_q = [c * x + d * y for x, y in zip(acc_p, acc_q)]
    return new_p, new_q


def _projective_residual(vec_new, vec_old) -> float:
    """Relative distance between coefficient vectors up to one scalar."""
    num = sum(x * y.conjugate() for x, y in zip(vec_new, vec_old))
    den = sum(abs(y) ** 2 for y in vec_old)
    s = num / den
    err = math.sqrt(sum(abs(x - s * y) ** 2 for x, y in zip(vec_new, vec_old)))
    norm = math.sqrt(sum(abs(x) ** 2 for x in vec_new))
    return err / norm if norm else 0.0


def _search_orientation(phi: RationalMap, antiholo: bool, opts: SearchOptions):
    pts = phi.distinguished_points(opts.root_tol)
    if len(pts) > opts.search_cap:
        raise SearchBoundExceededError(
            f"distinguished set has {len(pts)} points, cap is {opts.search_cap}"
        )

    def sort_key(lp):
        if is_inf(lp.point):
            return (1, 0.0, 0.0)
        return (0, round(lp.point.real, 9), round(lp.point.imag, 9))

    pts = sorted(pts, key=sort_key)
    n_pts = len(pts)
    H = np.array([homog(lp.point) for lp in pts], dtype=complex)  # (N, 2)
    labels = [lp.label for lp in pts]
    classes: dict[tuple, list[int]] = {}
    for idx, lab in enumerate(labels):
        classes.setdefault(lab, []).append(idx)

    sources = pts[:3]
    src_points = [conj_point(lp.point) for lp in sources] if antiholo else [
        lp.point for lp in sources
    ]
    gs = _rows_to_01inf(src_points)

    # ordered target triples compatible with the source labels
    sets = [np.array(classes[lp.label], dtype=int) for lp in sources]
    ii, jj, kk = np.meshgrid(sets[0], sets[1], sets[2], indexing="ij")
    tri = np.stack([ii.ravel(), jj.ravel(), kk.ravel()], axis=1)
    distinct = (
        (tri[:, 0] != tri[:, 1]) & (tri[:, 0] != tri[:, 2]) & (tri[:, 1] != tri[:, 2])
    )
    tri = tri[distinct]

    p, q, r = H[tri[:, 0]], H[tri[:, 1]], H[tri[:, 2]]
    cr_qr = q[:, 0] * r[:, 1] - r[:, 0] * q[:, 1]
    cr_qp = q[:, 0] * p[:, 1] - p[:, 0] * q[:, 1]
    g00 = cr_qr * p[:, 1]
    g01 = -cr_qr * p[:, 0]
    g10 = cr_qp * r[:, 1]
    g11 = -cr_qp * r[:, 0]
    # candidate = adj(G_target) . G_source
    cand = np.stack(
        [
            g11 * gs[0][0] - g01 * gs[1][0],
            g11 * gs[0][1] - g01 * gs[1][1],
            -g10 * gs[0][0] + g00 * gs[1][0],
            -g10 * gs[0][1] + g00 * gs[1][1],
        ],
        axis=1,
    )
    norms = np.sqrt((np.abs(cand) ** 2).sum(axis=1))
    good = norms > 0
    cand = cand[good] / norms[good, None]
    dets = cand[:, 0] * cand[:, 3] - cand[:, 1] * cand[:, 2]
    cand = cand[np.abs(dets) > 1e-12]

    alive = np.arange(len(cand))
    for probe_idx in range(3, n_pts):
        if len(alive) == 0:
            break
        lp = pts[probe_idx]
        vec = homog(conj_point(lp.point) if antiholo else lp.point)
        sub = cand[alive]
        x = sub[:, 0] * vec[0] + sub[:, 1] * vec[1]
        y = sub[:, 2] * vec[0] + sub[:, 3] * vec[1]
        scale = np.sqrt(np.abs(x) ** 2 + np.abs(y) ** 2)
        scale[scale == 0] = 1.0
        x, y = x / scale, y / scale
        cls = H[np.array(classes[lp.label], dtype=int)]
        dist = np.abs(x[:, None] * cls[None, :, 1] - y[:, None] * cls[None, :, 0])
        alive = alive[dist.min(axis=1) <= opts.probe_tol]

    # confirm survivors on the coefficient vector
    d = phi.degree
    p_c = phi.numer.to_complex_coeffs(d + 1)
    q_c = phi.denom.to_complex_coeffs(d + 1)
    vec_old = p_c + q_c
    found: list[ExtendedMoebius] = []
    for row in cand[alive]:
        mat = tuple(complex(v) for v in row)
        new_p, new_q = _numeric_conjugated_coeffs(p_c, q_c, mat, antiholo, d)
        if _projective_residual(new_p + new_q, vec_old) <= opts.match_tol:
            g = ExtendedMoebius(*mat, antiholo=antiholo).normalized()
            if not any(proj_distance(g, h) <= opts.dedup_tol for h in found):
                found.append(g)
    return found


def _rows_to_01inf(points):
    pairs = [(1.0 + 0j, 0j) if is_inf(pt) else (complex(pt), 1.0 + 0j) for pt in points]

    def cross(u, v):
        return u[0] * v[1] - v[0] * u[1]

    p, q, r = pairs
    qr = cross(q, r)
    qp = cross(q, p)
    return ((qr * p[1], -qr * p[0]), (qp * r[1], -qp * r[0]))


def holomorphic_automorphisms(
    phi: RationalMap, tol: float = 1e-8, opts: SearchOptions | None = None
) -> list[ExtendedMoebius]:
    """All Moebius transformations commuting with phi (numeric mode)."""
    opts = opts or SearchOptions(match_tol=tol)
    out = _search_orientation(phi, antiholo=False, opts=opts)
    if not any(g.is_identity(1e-6) for g in out):
        out.insert(0, ExtendedMoebius(1 + 0j, 0j, 0j, 1 + 0j))
    return out


def antiholomorphic_automorphisms(
    phi: RationalMap, tol: float = 1e-8, opts: SearchOptions | None = None
) -> list[ExtendedMoebius]:
    """All antiholomorphic transformations commuting with phi (numeric mode)."""
    opts = opts or SearchOptions(match_tol=tol)
    return _search_orientation(phi, antiholo=True, opts=opts)


# -- group structure ---------------------------------------------------------


def classify_group_type(elements: list[ExtendedMoebius], tol: float = 1e-7):
    """(kind, n) for the holomorphic part: Trivial, Cyclic(n), Dihedral(n),
    A4, S4 or A5, decided by the element-order multiset."""
    holo = [g for g in elements if not g.antiholo]
    n = len(holo)
    if n == 0:
        raise NotAGroupError("empty element list")
    if n == 1:
        return ("Trivial", None)
    orders = []
    for g in holo:
        k = g.order(bound=2 * n + 1, tol=tol)
        if k is None:
            raise NotAGroupError("element order exceeds the group-order bound")
        orders.append(k)
    top = max(orders)
    if top == n:
        return ("Cyclic", n)
    multiset = {k: orders.count(k) for k in set(orders)}
    if n == 12 and multiset == {1: 1, 2: 3, 3: 8}:
        return ("A4", None)
    if n == 24 and multiset == {1: 1, 2: 9, 3: 8, 4: 6}:
        return ("S4", None)
    if n == 60 and multiset == {1: 1, 2: 15, 3: 20, 5: 24}:
        return ("A5", None)
    if n % 2 == 0 and top == n // 2:
        return ("Dihedral", n // 2)
    raise NotAGroupError(f"order multiset {multiset} matches no finite rotation group")


def closure_defect(elements: list[ExtendedMoebius], tol: float = 1e-6) -> float:
    """Worst distance from any pairwise product to the element list."""
    worst = 0.0
    for g in elements:
        for h in elements:
            prod = g.compose(h).normalized()
            best = min(proj_distance(prod, e) for e in elements)
            worst = max(worst, best)
    return worst


def verify_automorphism_exact(phi: RationalMap, g: ExtendedMoebius) -> bool:
    """Exact check that g o phi o g^(-1) = phi by symbolic expansion."""
    if not g.exact:
        raise TypeError("exact verification needs exact matrix entries")
    return phi.conjugate_by(g).equals_projective(phi)


# -- exact lifting ------------------------------------------------------------


def recognize_cyclo_candidates(
    value: complex, order: int, denom_bound: int = 10**6, tol: float = 1e-7
) -> list[CycloNum]:
    """Candidate lifts of a float into Q(zeta_order), most structured first:
    0, a rational, q * zeta^j, then a Gaussian rational.

    These are embedding-close guesses only; callers must validate them
    against an exact identity (squaring, commutation, ...)."""
    out: list[CycloNum] = []
    scale = max(1.0, abs(value))
    if abs(value) <= tol:
        return [CycloNum.zero(order)]
    if abs(value.imag) <= tol * scale:
        q = Fraction(value.real).limit_denominator(denom_bound)
        if abs(value - complex(q)) <= tol * scale:
            out.append(CycloNum.from_rational(q, order))
    for j in range(1, order):
        w = value * complex(
            math.cos(2 * math.pi * j / order), -math.sin(2 * math.pi * j / order)
        )
        if abs(w.imag) <= tol * scale:
            q = Fraction(w.real).limit_denominator(denom_bound)
            if q != 0 and abs(w - complex(q)) <= tol * scale:
                out.append(CycloNum.zeta(order, j) * CycloNum.from_rational(q, order))
    if order % 4 == 0 and abs(value.imag) > tol * scale:
        qr = Fraction(value.real).limit_denominator(denom_bound)
        qi = Fraction(value.imag).limit_denominator(denom_bound)
        if abs(value - complex(float(qr), float(qi))) <= tol * scale:
            out.append(CycloNum.gaussian(qr, qi).rebase(order))
    return out


def recognize_cyclo(
    value: complex, order: int, denom_bound: int = 10**6, tol: float = 1e-7
) -> CycloNum | None:
    """Best-ranked candidate lift, or None; see recognize_cyclo_candidates."""
    cands = recognize_cyclo_candidates(value, order, denom_bound, tol)
    return cands[0] if cands else None


def _lift_field_candidates(phi: RationalMap, g: ExtendedMoebius, bound: int) -> list[int]:
    base = common_order(phi.field_order, 4)
    k = g.order(bound=bound, tol=1e-6)
    cands = [base]
    if k:
        cands += [common_order(base, k), common_order(base, 2 * k)]
    else:
        cands += [common_order(base, 8), common_order(base, 12), common_order(base, 24)]
    out = []
    for m in sorted(set(cands)):
        if m not in out and len(out) < 6:
            out.append(m)
    return out


def lift_matrix_candidates(
    phi: RationalMap, g: ExtendedMoebius, opts: SearchOptions | None = None
):
    """Yield exact-entry candidates for a numeric element, one per candidate
    field whose bounded-denominator recognition covers all four entries.

    Candidates are only embedding-close guesses; callers must accept them
    through verify_automorphism_exact (a wrong guess fails there)."""
    if g.exact:
        yield g
        return
    opts = opts or SearchOptions()
    entries = [g.a, g.b, g.c, g.d]
    top = max(abs(e) for e in entries)
    pivot = next(e for e in entries if abs(e) > 0.5 * top)
    entries = [e / pivot for e in entries]
    bound = 2 * (phi.degree + 1)
    for m in _lift_field_candidates(phi, g, bound):
        per_entry = [recognize_cyclo_candidates(e, m, opts.denom_bound) for e in entries]
        if any(not options for options in per_entry):
            continue
        combos = [[]]
        for options in per_entry:
            combos = [prefix + [v] for prefix in combos for v in options]
            if len(combos) > 16:
                combos = combos[:16]
        for lifted in combos:
            ok = all(
                abs(v.to_complex() - e) <= 1e-6 * max(1.0, abs(e))
                for v, e in zip(lifted, entries)
            )
            if not ok:
                continue
            try:
                yield ExtendedMoebius(*lifted, antiholo=g.antiholo)
            except ValueError:
                continue
    if not g.antiholo and not g.is_identity(1e-9):
        yield from _lift_holo_via_fixed_points(phi, g, opts)


def _numeric_fixed_points(g: ExtendedMoebius):
    a, b, c, d = g.a, g.b, g.c, g.d
    if abs(c) < 1e-13:
        if abs(b) < 1e-13:
            return 0j, INF
        if abs(d - a) < 1e-13:
            return INF, INF
        return b / (d - a), INF
    disc = (d - a) ** 2 + 4 * b * c
    s = disc ** 0.5
    return ((a - d) + s) / (2 * c), ((a - d) - s) / (2 * c)


def _lift_holo_via_fixed_points(phi: RationalMap, g: ExtendedMoebius, opts: SearchOptions):
    """Candidates for an elliptic holomorphic element, rebuilt from its
    fixed-point pair and rotation multiplier.

    A finite-order element is conjugate to z -> zeta z; its matrix entries
    may be arbitrary field elements, but the fixed points are often simple
    (images of 0 and infinity under the scrambling map) and the multiplier
    is exactly a root of unity, so lifting those suffices."""
    k = g.order(2 * (phi.degree + 1), tol=1e-6)
    if k is None or k < 2:
        return
    p_num, q_num = _numeric_fixed_points(g)
    if q_num is INF and p_num is INF:
        return
    # multiplier at the first fixed point: (ad - bc) / (c z0 + d)^2
    det = g.a * g.d - g.b * g.c
    if p_num is INF:
        p_num, q_num = q_num, p_num
    mu = det / (g.c * p_num + g.d) ** 2
    if abs(abs(mu) - 1.0) > 1e-6:
        return
    j = round(k * (cmath.phase(mu) / (2 * math.pi))) % k
    if abs(mu - cmath.exp(2 * math.pi * 1j * j / k)) > 1e-6:
        return
    base = common_order(phi.field_order, 4)
    for m in (base, common_order(base, k)):
        p_opts = recognize_cyclo_candidates(p_num, m, opts.denom_bound)
        q_opts = (
            [INF] if q_num is INF else recognize_cyclo_candidates(q_num, m, opts.denom_bound)
        )
        rot_order = common_order(m, k)
        rot = ExtendedMoebius.rotation(rot_order, j * (rot_order // k))
        for p_exact in p_opts:
            for q_exact in q_opts:
                if q_exact is not INF and p_exact == q_exact:
                    continue
                conj = _conjugator_to_zero_inf(p_exact, q_exact)
                cand = conj.inverse().compose(rot).compose(conj)
                if proj_distance(cand.to_numeric(), g) <= 1e-6:
                    yield cand


def lift_matrix_exact(
    phi: RationalMap, g: ExtendedMoebius, opts: SearchOptions | None = None
) -> ExtendedMoebius | None:
    """First lift candidate, unverified; prefer certify_element."""
    return next(lift_matrix_candidates(phi, g, opts), None)


def certify_element(
    phi: RationalMap, g: ExtendedMoebius, opts: SearchOptions | None = None
) -> ExtendedMoebius | None:
    """Exact element verified to commute with phi, or None."""
    for lifted in lift_matrix_candidates(phi, g, opts):
        if verify_automorphism_exact(phi, lifted):
            return lifted
    return None


# -- the full report -----------------------------------------------------------


def _sort_elements(elements: list[ExtendedMoebius]) -> list[ExtendedMoebius]:
    def key(g):
        num = g.to_numeric().normalized()
        k = g.order(bound=200, tol=1e-6) or 10**6
        ent = tuple(
            (round(v.real, 7) + 0.0, round(v.imag, 7) + 0.0)
            for v in (num.a, num.b, num.c, num.d)
        )
        return (g.antiholo, k, ent)

    return sorted(elements, key=key)


def aut_group_report(phi: RationalMap, opts: SearchOptions | None = None) -> AutGroupReport:
    """Compute Aut(phi) and the antiholomorphic part, classify and certify."""
    opts = opts or SearchOptions()
    holos = holomorphic_automorphisms(phi, opts=opts)
    antis = antiholomorphic_automorphisms(phi, opts=opts)
    elements = holos + antis
    notes: list[str] = []
    defect = closure_defect(elements, opts.dedup_tol)
    if defect > 10 * opts.dedup_tol:
        raise NotAGroupError(f"element list not closed under composition ({defect:.2e})")
    if antis and len(antis) != len(holos):
        raise NotAGroupError(
            f"antiholomorphic coset has size {len(antis)} against {len(holos)}"
        )
    kind, n = classify_group_type(holos)
    certified = False
    if opts.certify:
        exact_elements = []
        failed = 0
        for g in elements:
            e = certify_element(phi, g, opts)
            if e is None:
                failed += 1
                exact_elements.append(g)
            else:
                exact_elements.append(e)
        if failed == 0:
            certified = True
        else:
            notes.append(f"{failed} element(s) kept numeric; exact lift failed")
        elements = exact_elements
    return AutGroupReport(
        elements=_sort_elements(elements),
        holo_kind=kind,
        holo_n=n,
        mode="exact" if certified else "numeric",
        tolerances=opts.tolerances(),
        certified=certified,
        notes=notes,
    )


# -- cyclic canonical form -------------------------------------------------------


@dataclass
class CanonicalCyclicForm:
    """phi conjugated to z * psi(z^n), with the conjugator that got there."""

    n: int
    psi: RationalMap
    case_tag: str            # 'a': d = nr+1, 'b': d = nr, 'c': d = nr-1
    conjugator: ExtendedMoebius
    degree: int

    @property
    def r(self) -> int:
        return self.psi.degree

    def canonical_map(self) -> RationalMap:
        """z * psi(z^n) as a rational map."""
        num = Poly.x(self.psi.field_order) * self.psi.numer.substitute_power(self.n)
        den = self.psi.denom.substitute_power(self.n)
        return RationalMap.reduce(num, den)


def _exact_sqrt(value: CycloNum, denom_bound: int = 10**6) -> CycloNum | None:
    """A y with y*y == value, found by lifting the numeric square root."""
    target = value.to_complex()
    root = target ** 0.5
    for m in sorted({common_order(value.order, 4), common_order(value.order, 8)}):
        for num in (root, -root):
            for y in recognize_cyclo_candidates(num, m, denom_bound):
                if (y * y) == value.rebase(common_order(m, value.order)):
                    return y
    return None


def _fixed_points_exact(t: ExtendedMoebius):
    a, b, c, d = t.a, t.b, t.c, t.d
    if c.is_zero() and b.is_zero():
        return (CycloNum.zero(a.order), INF)
    if c.is_zero():
        return (b / (d - a), INF)
    if b.is_zero():
        return (CycloNum.zero(a.order), (a - d) / c)
    disc = (d - a) * (d - a) + 4 * b * c
    if disc.is_zero():
        raise OrderMismatchError("parabolic element has a single fixed point")
    # lift the numeric roots of c z^2 + (d - a) z - b and verify exactly
    num = t.to_numeric()
    r1, r2 = _numeric_fixed_points(num)
    base = common_order(a.order, 4)
    roots = []
    for r_num in (r1, r2):
        found = None
        for m in (base, common_order(base, 8), common_order(base, 12)):
            for cand in recognize_cyclo_candidates(r_num, m):
                cr = cand.rebase(common_order(cand.order, a.order))
                if (c * cr * cr + (d - a) * cr - b).is_zero():
                    found = cr
                    break
            if found is not None:
                break
        if found is None:
            break
        roots.append(found)
    if len(roots) == 2 and roots[0] != roots[1]:
        return (roots[0], roots[1])
    # fallback: an exact square root of the discriminant
    s = _exact_sqrt(disc)
    if s is None:
        raise NotCertifiedError("fixed points of the symmetry are not liftable")
    two_c = (c + c).inv()
    return (((a - d) + s) * two_c, ((a - d) - s) * two_c)


def _conjugator_to_zero_inf(p, q) -> ExtendedMoebius:
    one = CycloNum.one()
    zero = CycloNum.zero()
    if is_inf(p):
        return ExtendedMoebius(zero, one, one, -q)
    if is_inf(q):
        return ExtendedMoebius(one, -p, zero, one)
    return ExtendedMoebius(one, -p, one, -q)


def _extract_power_form(phi: RationalMap, n: int):
    """(P, Q) with phi(z) = z P(z^n)/Q(z^n), or None when unsupported."""
    rho_num = phi.numer
    rho_den = Poly.x(phi.field_order) * phi.denom
    rho = RationalMap.reduce(rho_num, rho_den)
    u, v = rho.numer, rho.denom
    if any(
        k % n != 0 for k, cc in enumerate(u.coeffs) if not cc.is_zero()
    ) or any(k % n != 0 for k, cc in enumerate(v.coeffs) if not cc.is_zero()):
        return None
    m = common_order(u.order, v.order)
    p = Poly([u.coeff(k * n) for k in range(u.degree // n + 1)] if not u.is_zero() else [], m)
    q = Poly([v.coeff(k * n) for k in range(v.degree // n + 1)] if not v.is_zero() else [], m)
    return p, q


def canonicalize_cyclic(phi: RationalMap, t: ExtendedMoebius) -> CanonicalCyclicForm:
    """Bring phi to z * psi(z^n) using an order-n symmetry t of phi.

    The conjugator sends the fixed points of t to 0 and infinity; the case
    with phi(0) = 0 = phi(infinity) is folded into case 'b' by an extra
    1/z flip.
    """
    if not t.exact:
        raise NotCertifiedError("canonicalization needs an exact symmetry")
    if t.antiholo:
        raise NotAnAutomorphismError("the symmetry must be holomorphic")
    bound = 2 * (phi.degree + 1)
    n = t.order(bound)
    if n is None or n < 2:
        raise OrderMismatchError("symmetry must have finite order at least 2")
    if not verify_automorphism_exact(phi, t):
        raise NotAnAutomorphismError("the transformation does not commute with the map")
    p_fix, q_fix = _fixed_points_exact(t)
    conj = _conjugator_to_zero_inf(p_fix, q_fix)
    work = phi.conjugate_by(conj)
    extracted = _extract_power_form(work, n)
    if extracted is None:
        # wrong fixed-point orientation should not happen; try the swap
        conj = _conjugator_to_zero_inf(q_fix, p_fix)
        work = phi.conjugate_by(conj)
        extracted = _extract_power_form(work, n)
        if extracted is None:
            raise NotAnAutomorphismError("map is not rotation-symmetric of this order")
    p, q = extracted
    psi = RationalMap.reduce(p, q)
    r = psi.degree
    a_r = psi.numer.coeff(r)
    b_0 = psi.denom.coeff(0)
    if a_r.is_zero() and not b_0.is_zero():
        # phi(0) = 0 = phi(inf): flip by 1/z into the b-case
        flip = ExtendedMoebius.inversion()
        conj = flip.compose(conj)
        work = phi.conjugate_by(conj)
        p, q = _extract_power_form(work, n)
        psi = RationalMap.reduce(p, q)
        r = psi.degree
        a_r = psi.numer.coeff(r)
        b_0 = psi.denom.coeff(0)
    d = phi.degree
    if not a_r.is_zero() and not b_0.is_zero():
        case, expected = "a", n * r + 1
    elif not a_r.is_zero():
        case, expected = "b", n * r
    else:
        case, expected = "c", n * r - 1
    if d != expected:
        raise NotAnAutomorphismError(
            f"degree {d} inconsistent with case {case} at (n, r) = ({n}, {r})"
        )
    form = CanonicalCyclicForm(n=n, psi=psi, case_tag=case, conjugator=conj, degree=d)
    if not form.canonical_map().equals_projective(work):
        raise NotAnAutomorphismError("canonical reconstruction mismatch")
    return form


# -- the normalizer action on the psi parameter -----------------------------------


def _arg_scaled(poly: Poly, t: CycloNum, formal: int) -> Poly:
    """Coefficients c_k * t^(formal - k); the poly side of psi(u/t)."""
    out = []
    power = CycloNum.one(t.order)
    coeffs = poly.padded(formal + 1)
    for k in range(formal, -1, -1):
        out.append(coeffs[k] * power)
        power = power * t
    return Poly(list(reversed(out)))


def _flip_psi(psi: RationalMap) -> RationalMap:
    """1/psi(1/u)."""
    r = max(psi.numer.degree, psi.denom.degree)
    rev_num = Poly(list(reversed(psi.denom.padded(r + 1))))
    rev_den = Poly(list(reversed(psi.numer.padded(r + 1))))
    return RationalMap.reduce(rev_num, rev_den)


def normalizer_action(psi: RationalMap, t, flip: bool) -> RationalMap:
    """The induced action on psi of the maps normalizing the rotation group:
    scaling z by lambda sends psi(u) to psi(u/t) with t = lambda^n, and the
    1/z flip sends psi(u) to 1/psi(1/u)."""
    t = CycloNum._coerce(t)
    if t.is_zero():
        raise ValueError("scale parameter must be nonzero")
    r = max(psi.numer.degree, psi.denom.degree)
    scaled = RationalMap.reduce(
        _arg_scaled(psi.numer, t, r), _arg_scaled(psi.denom, t, r)
    )
    return _flip_psi(scaled) if flip else scaled


def solve_normalizer_orbit(psi1: RationalMap, psi2: RationalMap):
    """(t, flip) with normalizer_action(psi1, t, flip) == psi2, or None."""
    for flip in (False, True):
        target = _flip_psi(psi2) if flip else psi2
        t = _solve_argument_scale(psi1, target)
        if t is not None and normalizer_action(psi1, t, flip).equals_projective(psi2):
            return t, flip
    return None


def _solve_argument_scale(psi_a: RationalMap, psi_b: RationalMap):
    """Exact t with psi_a(u/t) == psi_b (projectively), or None."""
    if psi_a.degree != psi_b.degree:
        return None
    r = max(
        psi_a.numer.degree, psi_a.denom.degree, psi_b.numer.degree, psi_b.denom.degree
    )
    m = common_order(psi_a.field_order, psi_b.field_order)
    va = psi_a.numer.rebase(m).padded(r + 1) + psi_a.denom.rebase(m).padded(r + 1)
    vb = psi_b.numer.rebase(m).padded(r + 1) + psi_b.denom.rebase(m).padded(r + 1)
    support = [k for k in range(len(va)) if not va[k].is_zero()]
    if [k for k in range(len(vb)) if not vb[k].is_zero()] != support:
        return None
    # the relation vb = s * va * t^(r - exponent) uses the power of u the
    # coefficient belongs to, not its index in the concatenated vector
    exponent = [k if k <= r else k - (r + 1) for k in support]
    k0 = support[0]
    e0 = exponent[0]
    w0 = vb[k0] / va[k0]
    relations = []
    for k, e in zip(support[1:], exponent[1:]):
        relations.append((e - e0, (vb[k] / va[k]) / w0))  # t^(e0-e) = ratio
    if not relations:
        return CycloNum.one(m) if psi_a.equals_projective(psi_b) else None
    # accumulate t^g = val with g = gcd of exponents, via Bezout
    g, val = relations[0][0], relations[0][1].inv()
    if g < 0:
        g, val = -g, val.inv()
    for delta, ratio in relations[1:]:
        # currently t^g = val, want to fold in t^delta = ratio^-1
        new_g = math.gcd(g, delta)
        if new_g == 0:
            continue
        x, y = _bezout(g, delta, new_g)
        val = (val ** x) * (ratio.inv() ** y)
        g = new_g
    if g == 0:
        # every exponent difference vanished: any nonzero t works iff the
        # ratios are all trivial
        one = CycloNum.one(m)
        if all(ratio.is_one() for _, ratio in relations):
            return one
        return None
    for delta, ratio in relations:
        if (val ** (delta // g)) != ratio.inv():
            return None
    if g == 1:
        return val
    # need an exact g-th root of val
    base = val.to_complex() ** (1.0 / g)
    for ell in range(g):
        cand_num = base * complex(
            math.cos(2 * math.pi * ell / g), math.sin(2 * math.pi * ell / g)
        )
        for order in {common_order(m, 4), common_order(m, 4 * g)}:
            cand = recognize_cyclo(cand_num, order)
            if cand is not None and (cand ** g) == val:
                return cand
    return None


def _bezout(a: int, b: int, g: int):
    """x, y with a x + b y = g (g = gcd(a, b))."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    assert old_r == g
    return old_s, old_t
