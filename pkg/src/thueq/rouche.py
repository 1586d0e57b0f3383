"""Uniform root-enclosure certificates for the quartic family
f_t(X) = X^4 - tX^3 - 6X^2 + tX + 1.

A certificate states: for every complex t with |t| >= tmin, f_t has a root
within radius_c/|t|^radius_exp of center(1/t).  The proof is a Rouche
argument made uniform structurally: after expanding f(center+z) in powers
of z, each term is majorized by a monomial in w = 1/|t| with nonnegative
coefficient, so each bound is decreasing in |t| and may be evaluated once
at w = 1/tmin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import Rat, sqrt_lower, sqrt_upper
from .series import GaussRat, Series, alpha3_series, newton_alpha_series

# f_t coefficients: entry m holds (constant part, multiple of t) of coeff of X^m
_F_COEFFS = [
    (Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(1)),
    (Fraction(-6), Fraction(0)),
    (Fraction(0), Fraction(-1)),
    (Fraction(1), Fraction(0)),
]


class CertificationError(ArithmeticError):
    pass


@dataclass(frozen=True)
class EnclosureCert:
    center: dict          # Laurent coefficients {power of t: GaussRat}
    radius_c: Rat
    radius_exp: int
    tmin: Rat
    verified: bool
    margin: Rat


Laurent = dict  # {int power of t: GaussRat}


def _lmul(x: Laurent, y: Laurent) -> Laurent:
    out: Laurent = {}
    for p, c in x.items():
        for q, e in y.items():
            k = p + q
            v = out.get(k, GaussRat.of(0)) + c * e
            if v:
                out[k] = v
            elif k in out:
                del out[k]
    return out


def _lscale(x: Laurent, c: GaussRat) -> Laurent:
    return {p: v * c for p, v in x.items() if v * c}


def _ladd(x: Laurent, y: Laurent) -> Laurent:
    out = dict(x)
    for p, c in y.items():
        v = out.get(p, GaussRat.of(0)) + c
        if v:
            out[p] = v
        elif p in out:
            del out[p]
    return out


def _h_coeffs(center: Laurent) -> list[Laurent]:
    """h_j as Laurent polynomials in t, where h(z) = f(center + z)."""
    # powers of the center
    cpow = [{0: GaussRat.of(1)}]
    for _ in range(4):
        cpow.append(_lmul(cpow[-1], center))
    binom = [[1], [1, 1], [1, 2, 1], [1, 3, 3, 1], [1, 4, 6, 4, 1]]
    h = [{} for _ in range(5)]
    for m in range(5):
        const, tmul = _F_COEFFS[m]
        fm: Laurent = {}
        if const:
            fm[0] = GaussRat.of(const)
        if tmul:
            fm = _ladd(fm, {1: GaussRat.of(tmul)})
        for j in range(m + 1):
            term = _lscale(_lmul(fm, cpow[m - j]), GaussRat.of(binom[m][j]))
            h[j] = _ladd(h[j], term)
    return h


def certify_enclosure(center: Laurent, radius_c: Rat, radius_exp: int,
                      tmin: Rat) -> EnclosureCert:
    """Certify a root of f_t within radius_c/|t|^radius_exp of center(1/t)
    for all |t| >= tmin."""
    radius_c, tmin = Fraction(radius_c), Fraction(tmin)
    if tmin < 1:
        raise CertificationError("tmin must be >= 1")
    h = _h_coeffs(center)
    # every monomial c * t^p * z^j contributes |c| radius_c^j w^(j*radius_exp - p)
    terms = []  # (j, p, coeff)
    for j in range(1, 5):
        for p, c in h[j].items():
            terms.append((j, p, c))
    for p, c in h[0].items():
        terms.append((0, p, c))
    if not any(j == 1 for j, _, _ in terms):
        raise CertificationError("no linear term at the center (degenerate)")
    # dominant: the j=1 monomial with minimal exponent
    lin = [(1 * radius_exp - p, p, c) for j, p, c in terms if j == 1]
    e0 = min(e for e, _, _ in lin)
    dominants = [(e, p, c) for e, p, c in lin if e == e0]
    if len(dominants) != 1:
        raise CertificationError("dominant linear term not unique")
    _, p0, c0 = dominants[0]
    A = sqrt_lower(c0.abs_sq()) * radius_c
    w = 1 / tmin
    rest = Fraction(0)
    ok = True
    for j, p, c in terms:
        if j == 1 and p == p0:
            continue
        e = j * radius_exp - p
        if e < e0:
            # a non-dominant term decays slower than the dominant one:
            # no uniform certificate from this split
            ok = False
            break
        mag = sqrt_upper(c.abs_sq()) * radius_c ** j
        rest += mag * w ** (e - e0)
    if not ok:
        return EnclosureCert(center, radius_c, radius_exp, tmin, False, Fraction(-1))
    margin = A - rest
    return EnclosureCert(center, radius_c, radius_exp, tmin, margin > 0, margin)


# the four low-order root centers of the quartic
CENTER_ALPHA0: Laurent = {-1: GaussRat.of(-1)}
CENTER_ALPHA1: Laurent = {0: GaussRat.of(-1)}
CENTER_ALPHA3: Laurent = {0: GaussRat.of(1)}
CENTER_ALPHA2: Laurent = {1: GaussRat.of(1)}

BASE_CERT_PARAMS = [
    ("alpha0", CENTER_ALPHA0, Fraction("5.01"), 3),
    ("alpha2", CENTER_ALPHA2, Fraction("5.02"), 1),
    ("alpha1", CENTER_ALPHA1, Fraction("2.16"), 1),
    ("alpha3", CENTER_ALPHA3, Fraction("2.16"), 1),
]


def base_certificates(tmin: Rat = Fraction(100)) -> dict[str, EnclosureCert]:
    return {
        name: certify_enclosure(center, c, k, tmin)
        for name, center, c, k in BASE_CERT_PARAMS
    }


def _series_center(s: Series) -> Laurent:
    return {-k: c for k, c in enumerate(s.coeffs) if c}


HIGH_ORDER_PARAMS = {
    "B": (Fraction(271) * 10 ** 14, 31),
    "B3": (Fraction(984) * 10 ** 13, 30),
}


def certify_high_order(which: str, tmin: Rat = Fraction(100),
                       radius_scale: Rat = Fraction(1)) -> EnclosureCert:
    """The two long-center certificates: B (root near 0, truncation 31)
    and B3 (root near 1, truncation 30)."""
    if which not in HIGH_ORDER_PARAMS:
        raise ValueError("which must be 'B' or 'B3'")
    alpha = newton_alpha_series(31)
    s = alpha if which == "B" else alpha3_series(alpha).truncated(30)
    radius_c, radius_exp = HIGH_ORDER_PARAMS[which]
    return certify_enclosure(_series_center(s), radius_c * Fraction(radius_scale),
                             radius_exp, tmin)


def root_separation(tmin: Rat = Fraction(100)) -> dict:
    """Certified distance bounds among the enclosed roots at |t| >= tmin:
    pairwise separation of the three small roots, distance from the large
    root to the others, and a lower bound on the root near 0."""
    tmin = Fraction(tmin)
    certs = base_certificates(tmin)
    if not all(c.verified for c in certs.values()):
        raise CertificationError("base certificates unavailable")
    r0 = Fraction("5.01") / tmin ** 3
    r1 = Fraction("2.16") / tmin
    # |alpha0| >= | -1/t | - r0, so scaled by |t|: >= 1/t * (1 - 5.01/t^2)*...
    alpha0_lower_coeff = 1 - Fraction("5.01") / tmin ** 2
    # centers: -1/t, -1, +1; pairwise distances minus radii, at |t| = tmin
    d01 = 1 - 1 / tmin - r0 - r1
    d03 = 1 - 1 / tmin - r0 - r1  # |1 - (-1/t)| >= 1 - 1/tmin
    d13 = 2 - 2 * r1
    min_pairwise = min(d01, d03, d13)
    # distance from alpha2 (center t) to the small centers, in units of |t|:
    # |t - c| >= |t|(1 - (1 + r)/tmin) for |c| <= 1 + small
    worst_small = 1 + 1 / tmin + max(r0, r1)
    min_to_alpha2 = 1 - worst_small / tmin - Fraction("5.02") / tmin ** 2
    return {
        "min_pairwise": min_pairwise,
        "min_to_alpha2_coeff": min_to_alpha2,
        "alpha0_lower_coeff": alpha0_lower_coeff,
    }
