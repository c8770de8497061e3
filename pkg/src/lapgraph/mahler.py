"""Logarithmic Mahler measure of integer Laurent polynomials.

One variable: Jensen's formula, m(f) = log|lead| + sum of log|root| over the
roots outside the unit circle.  Roots come from an Aberth simultaneous
iteration started on a perturbed circle, with a Newton refinement pass and
residual/coefficient-identity validation.  Factors of (x - 1) and (x + 1) are
deflated exactly first, so the cyclotomic part common to graph polynomials
contributes an exact zero.

Two variables: fiberwise Jensen.  For each midpoint node theta of an N-point
grid the variable x is pinned to exp(2 pi i theta) and the exact one-variable
measure in y (complex coefficients) is taken; the node average converges to
the torus integral, with the inner log-singularities absorbed exactly.  The
error estimate compares the N- and N/2-point grids.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .laurent import LaurentPoly

UNIT_CIRCLE_TOL = 1e-10  # |root| this close to 1 counts as on the circle
RESIDUAL_GATE = 1e-9


@dataclass(frozen=True)
class MahlerResult:
    value: float
    method: str
    error_estimate: float
    samples: int | None = None


class RootFindingError(ArithmeticError):
    pass


# -- polynomial helpers (dense complex coefficient lists, low degree first) -----


def _poly_eval(coeffs: list[complex], z: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _poly_deriv(coeffs: list[complex]) -> list[complex]:
    return [k * c for k, c in enumerate(coeffs)][1:]


def _refine_exact(int_coeffs: list[int], roots: list[complex]) -> list[complex]:
    """Sharpen roots by Newton on u = p/p' with exact rational evaluation.

    u has only simple roots, so multiple roots of p are refined at the same
    quadratic rate.  Exact Gaussian-rational Horner evaluation sidesteps the
    cancellation that defeats double-precision refinement near multiple roots;
    iterates are rounded back to floats to keep the fractions small.
    """
    d1 = [k * c for k, c in enumerate(int_coeffs)][1:]
    d2 = [k * c for k, c in enumerate(d1)][1:]

    def horner(cs, zr, zi):
        ar = Fraction(0)
        ai = Fraction(0)
        for c in reversed(cs):
            ar, ai = ar * zr - ai * zi + c, ar * zi + ai * zr
        return ar, ai

    def cdiv(ar, ai, br, bi):
        den = br * br + bi * bi
        return (ar * br + ai * bi) / den, (ai * br - ar * bi) / den

    out = []
    for z in roots:
        for _ in range(3):
            zr, zi = Fraction(z.real), Fraction(z.imag)
            pr, pi = horner(int_coeffs, zr, zi)
            if pr == 0 and pi == 0:
                break
            dr, di = horner(d1, zr, zi)
            if dr == 0 and di == 0:
                break
            ur, ui = cdiv(pr, pi, dr, di)
            sr, si = horner(d2, zr, zi)
            qr, qi = cdiv(pr * sr - pi * si, pr * si + pi * sr, dr * dr - di * di, 2 * dr * di)
            den_r, den_i = 1 - qr, -qi
            if den_r == 0 and den_i == 0:
                break
            tr, ti = cdiv(ur, ui, den_r, den_i)
            step = complex(float(tr), float(ti))
            if abs(step) > 0.5 * max(1.0, abs(z)):
                break
            z = complex(float(zr - tr), float(zi - ti))
            if abs(step) < 1e-16 * max(1.0, abs(z)):
                break
        out.append(z)
    return out


def _aberth_roots(
    coeffs: list[complex], max_iter: int = 400, exact_coeffs: list[int] | None = None
) -> list[complex]:
    """All roots of a polynomial with nonzero first and last coefficient.

    When the integer coefficient list is supplied the final refinement runs in
    exact rational arithmetic, which keeps multiple roots at full precision.
    """
    s = len(coeffs) - 1
    if s < 1:
        return []
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    deriv = _poly_deriv(monic)
    radius = max(1e-3, abs(monic[0]) ** (1.0 / s))
    roots = [
        radius * cmath.exp(2j * math.pi * (k + 0.35) / s) * (1 + 0.02 * (k % 5))
        for k in range(s)
    ]
    for _ in range(max_iter):
        shift = 0.0
        new_roots = list(roots)
        for k, z in enumerate(roots):
            pv = _poly_eval(monic, z)
            dv = _poly_eval(deriv, z)
            if pv == 0:
                continue
            if dv == 0:
                new_roots[k] = z * (1 + 1e-8) + 1e-8
                shift = 1.0
                continue
            w = pv / dv
            rep = sum(1 / (z - zj) for j, zj in enumerate(roots) if j != k)
            denom = 1 - w * rep
            if denom == 0:
                new_roots[k] = z * (1 + 1e-8)
                shift = 1.0
                continue
            corr = w / denom
            new_roots[k] = z - corr
            shift = max(shift, abs(corr) / max(1.0, abs(z)))
        roots = new_roots
        if shift < 1e-14:
            break
    if exact_coeffs is not None:
        roots = _refine_exact(exact_coeffs, roots)
    else:
        # double-precision refinement: Newton on u = p/p' (simple roots only
        # limits the attainable accuracy near multiple roots, which the
        # complex-coefficient fiber path tolerates)
        second = _poly_deriv(deriv)
        for k, z in enumerate(roots):
            for _ in range(4):
                pv = _poly_eval(monic, z)
                if pv == 0:
                    break
                dv = _poly_eval(deriv, z)
                if dv == 0:
                    break
                u = pv / dv
                du = 1 - pv * _poly_eval(second, z) / (dv * dv)
                if du == 0:
                    break
                step = u / du
                if abs(step) > 0.5 * max(1.0, abs(z)):
                    break
                z = z - step
            roots[k] = z
    _validate_roots(coeffs, roots)
    return roots


def _validate_roots(coeffs: list[complex], roots: list[complex]):
    s = len(coeffs) - 1
    scale = max(abs(c) for c in coeffs)
    for z in roots:
        bound = RESIDUAL_GATE * scale * max(1.0, abs(z)) ** s * (s + 1)
        if abs(_poly_eval(coeffs, z)) > bound:
            raise RootFindingError("root residual exceeds tolerance")
    # coefficient identities: sum and product of roots
    sum_expect = -coeffs[-2] / coeffs[-1] if s >= 1 else 0
    sum_got = sum(roots)
    if abs(sum_got - sum_expect) > 1e-6 * (1 + abs(sum_expect)):
        raise RootFindingError("root sum disagrees with coefficients")
    prod_expect = coeffs[0] / coeffs[-1] * (-1) ** s
    prod_got = 1 + 0j
    for z in roots:
        prod_got *= z
    if abs(prod_got - prod_expect) > 1e-6 * (1 + abs(prod_expect)):
        raise RootFindingError("root product disagrees with coefficients")


def _jensen_from_coeffs(coeffs: list[complex], exact_coeffs: list[int] | None = None) -> float:
    """log|lead| plus log|root| over roots outside the unit circle.

    Expects a dense list with nonzero ends (monomial factors already stripped;
    they do not move the measure).
    """
    s = len(coeffs) - 1
    if s == 0:
        return math.log(abs(coeffs[0]))
    value = math.log(abs(coeffs[-1]))
    for z in _aberth_roots(coeffs, exact_coeffs=exact_coeffs):
        r = abs(z)
        if r > 1 + UNIT_CIRCLE_TOL:
            value += math.log(r)
    return value


def _strip_complex(coeffs: list[complex], rel_tol: float = 1e-13) -> list[complex]:
    big = max(abs(c) for c in coeffs) if coeffs else 0.0
    if big == 0.0:
        return []
    out = [0 if abs(c) <= rel_tol * big else c for c in coeffs]
    lo = 0
    while lo < len(out) and out[lo] == 0:
        lo += 1
    hi = len(out)
    while hi > lo and out[hi - 1] == 0:
        hi -= 1
    return out[lo:hi]


# -- one variable ----------------------------------------------------------------


def _int_coeff_list(f: LaurentPoly) -> tuple[list[int], float]:
    """Integer dense coefficients of a 1-variable poly and a log offset.

    Fractions are cleared by a common positive factor c, so
    m(f) = m(c f) - log c.
    """
    coeffs = f.coefficient_list()
    if any(isinstance(c, Fraction) for c in coeffs):
        denom = lcm(*(Fraction(c).denominator for c in coeffs))
        ints = [int(Fraction(c) * denom) for c in coeffs]
        return ints, math.log(denom)
    return [int(c) for c in coeffs], 0.0


def _deflate_root(coeffs: list[int], r: int) -> list[int] | None:
    """Exact synthetic division by (x - r); None if r is not a root."""
    acc = 0
    out = []
    for c in reversed(coeffs):
        acc = acc * r + c
        out.append(acc)
    if out[-1] != 0:
        return None
    out.pop()
    return list(reversed(out))


def mahler_1var(f: LaurentPoly) -> MahlerResult:
    """Logarithmic Mahler measure of a nonzero one-variable Laurent polynomial."""
    if f.nvars != 1:
        raise ValueError("mahler_1var needs a one-variable polynomial")
    if f.is_zero():
        raise ValueError("Mahler measure of the zero polynomial is undefined")
    coeffs, offset = _int_coeff_list(f)
    # exact deflation of roots at +-1 (they sit on the circle and contribute 0)
    for r in (1, -1):
        while len(coeffs) > 1:
            reduced = _deflate_root(coeffs, r)
            if reduced is None:
                break
            coeffs = reduced
    value = _jensen_from_coeffs([complex(c) for c in coeffs], exact_coeffs=coeffs) - offset
    return MahlerResult(value=value, method="jensen-roots", error_estimate=1e-11)


# -- two variables ----------------------------------------------------------------


def _fiber_coeffs(f: LaurentPoly, theta: float) -> list[complex]:
    """Dense y-coefficients of f with x pinned to exp(2 pi i theta)."""
    x = cmath.exp(2j * math.pi * theta)
    lo = min(b for (_, b) in f.coeffs)
    hi = max(b for (_, b) in f.coeffs)
    out = [0j] * (hi - lo + 1)
    for (a, b), c in f.coeffs.items():
        out[b - lo] += c * x**a
    return out


def _fiber_measure(f: LaurentPoly, theta: float, step: float) -> float:
    coeffs = _strip_complex(_fiber_coeffs(f, theta))
    if not coeffs:
        coeffs = _strip_complex(_fiber_coeffs(f, theta + 0.5 * step))
        if not coeffs:
            raise ArithmeticError(f"fiber polynomial vanished at node {theta}")
    return _jensen_from_coeffs(coeffs)


def _pairwise_sum(values: list[float]) -> float:
    """Summation over a fixed binary tree; order independent of chunking."""
    n = len(values)
    if n == 0:
        return 0.0
    if n == 1:
        return values[0]
    mid = n // 2
    return _pairwise_sum(values[:mid]) + _pairwise_sum(values[mid:])


def _grid_average(f: LaurentPoly, n: int) -> float:
    step = 1.0 / n
    vals = [_fiber_measure(f, (j + 0.5) * step, step) for j in range(n)]
    return _pairwise_sum(vals) / n


def mahler_2var(f: LaurentPoly, fibers: int = 1024) -> MahlerResult:
    """Fiberwise-Jensen Mahler measure of a nonzero two-variable polynomial.

    The error estimate is the difference against the half-resolution grid.
    """
    if f.nvars != 2:
        raise ValueError("mahler_2var needs a two-variable polynomial")
    if f.is_zero():
        raise ValueError("Mahler measure of the zero polynomial is undefined")
    if fibers < 4:
        raise ValueError("need at least 4 fibers")
    value = _grid_average(f, fibers)
    coarse = _grid_average(f, fibers // 2)
    return MahlerResult(
        value=value,
        method="fiberwise",
        error_estimate=abs(value - coarse),
        samples=fibers,
    )


def mahler_limit_check(
    f: LaurentPoly, s: int, fibers: int = 1024
) -> tuple[MahlerResult, MahlerResult]:
    """Compare m(f(x, x^s)) with m(f(x, y)); they converge as s grows."""
    if f.nvars != 2:
        raise ValueError("mahler_limit_check needs a two-variable polynomial")
    if s < 1:
        raise ValueError("substitution exponent must be positive")
    g = f.substitute_power(s)
    return mahler_1var(g), mahler_2var(f, fibers)


def mahler(f: LaurentPoly, fibers: int = 1024) -> MahlerResult:
    """Dispatch on the variable count."""
    if f.nvars == 1:
        return mahler_1var(f)
    return mahler_2var(f, fibers)
