"""Nonsymmetric Jack polynomials and their symmetrizations.

For a composition alpha, zeta_alpha is the unique x-monic joint eigenfunction
of the Cherednik operators U_1..U_N with eigenvalues xi_i(alpha); its support
below the leading monomial is strictly smaller in the dominance order.  The
construction solves the triangular joint eigenproblem degree by degree in the
canonical monomial order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import combin
from .exact import ParamContext, Rat
from .ops import cherednik_a
from .poly import SparsePoly, x_frame


@dataclass(frozen=True)
class NsjpRecord:
    """One nonsymmetric Jack polynomial with its spectral data."""

    label: tuple[int, ...]
    poly: SparsePoly
    spectral: tuple[Rat, ...]
    norm: Rat


_RECORD_CACHE: dict = {}
_MATRIX_CACHE: dict = {}


def _cherednik_matrix(i: int, degree: int, nvars: int, ctx: ParamContext):
    """Rows of U_i on the degree-graded monomial basis, canonically ordered.

    Returns (monomials, rows) where rows[r][c] is the coefficient of
    monomial r in U_i applied to monomial c; lower-triangular by dominance.
    """
    key = (i, degree, nvars, ctx.kappa)
    cached = _MATRIX_CACHE.get(key)
    if cached is not None:
        return cached
    monos = combin.compositions_of_weight(degree, nvars)
    index = {m: pos for pos, m in enumerate(monos)}
    rows: list[dict[int, Fraction]] = [{} for _ in monos]
    for col, m in enumerate(monos):
        image = cherednik_a(i, SparsePoly.monomial(m, x_frame(nvars)), ctx)
        for exp, coef in image.terms.items():
            rows[index[exp]][col] = coef
    result = (monos, rows)
    _MATRIX_CACHE[key] = result
    return result


def nsjp(alpha, ctx: ParamContext) -> NsjpRecord:
    """Construct zeta_alpha by back-substitution in the canonical order.

    The solve runs on the eigen-equation of U_1 and, whenever a lower
    monomial shares the same U_1 eigenvalue, falls back to the first U_i
    that separates it (the joint spectrum is simple for kappa > 0).
    """
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise ValueError("composition parts must be nonnegative")
    if len(alpha) != ctx.nvars_a:
        raise ValueError(f"composition length {len(alpha)} != context nvars {ctx.nvars_a}")
    if ctx.kappa <= 0:
        raise ValueError("nonsymmetric Jack construction requires kappa > 0")
    key = (alpha, ctx.kappa)
    cached = _RECORD_CACHE.get(key)
    if cached is not None:
        return cached

    nvars = len(alpha)
    degree = combin.weight(alpha)
    xi_alpha = combin.spectral_vector(alpha, ctx)
    monos, rows1 = _cherednik_matrix(1, degree, nvars, ctx)
    pos = monos.index(alpha)
    spectra = [combin.spectral_vector(m, ctx) for m in monos]

    coeffs: list[Fraction] = [Fraction(0)] * len(monos)
    coeffs[pos] = Fraction(1)
    for k in range(pos + 1, len(monos)):
        sel = None
        for i in range(nvars):
            if spectra[k][i] != xi_alpha[i]:
                sel = i + 1
                break
        if sel is None:
            raise ArithmeticError(f"spectral vectors of {alpha} and {monos[k]} collide")
        rows = rows1 if sel == 1 else _cherednik_matrix(sel, degree, nvars, ctx)[1]
        acc = Fraction(0)
        for col, entry in rows[k].items():
            if pos <= col < k and coeffs[col]:
                acc += entry * coeffs[col]
        coeffs[k] = acc / (xi_alpha[sel - 1] - spectra[k][sel - 1])

    poly = SparsePoly(
        nvars,
        x_frame(nvars),
        {m: c for m, c in zip(monos, coeffs) if c},
    )
    record = NsjpRecord(alpha, poly, xi_alpha, nsjp_norm(alpha, ctx))
    _RECORD_CACHE[key] = record
    return record


def nsjp_norm(alpha, ctx: ParamContext) -> Rat:
    """<zeta_alpha, zeta_alpha>_kappa = (N kappa + 1)_{alpha+} h(alpha, 1) / h(alpha, kappa + 1)."""
    n = len(alpha)
    plus, _ = combin.sort_to_partition(alpha)
    top = combin.gen_pochhammer(plus, n * ctx.kappa + 1, ctx)
    return top * combin.hook_product(alpha, 1, ctx) / combin.hook_product(alpha, ctx.kappa + 1, ctx)


def nsjp_eval_ones(alpha, ctx: ParamContext) -> Rat:
    """zeta_alpha(1, ..., 1) = (N kappa + 1)_{alpha+} / h(alpha, kappa + 1)."""
    n = len(alpha)
    plus, _ = combin.sort_to_partition(alpha)
    top = combin.gen_pochhammer(plus, n * ctx.kappa + 1, ctx)
    return top / combin.hook_product(alpha, ctx.kappa + 1, ctx)


def symmetric_jack(lam, ctx: ParamContext) -> SparsePoly:
    """j_lambda = sum over rearrangements alpha of lambda of E_{-1}(alpha) zeta_alpha;
    symmetric with leading monomial x^lambda."""
    lam = tuple(int(a) for a in lam)
    if not combin.is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    out = SparsePoly.zero(len(lam), x_frame(len(lam)))
    for alpha in combin.rearrangements(lam):
        out = out + combin.e_epsilon(alpha, -1, ctx) * nsjp(alpha, ctx).poly
    return out


def jack_norm(lam, ctx: ParamContext) -> Rat:
    """<j_lambda, j_lambda>_kappa in closed form:
    #{alpha: alpha+ = lambda} (N kappa + 1)_lambda h(lambda, 1)
    / (E_1(lambda reversed) h(lambda, kappa + 1))."""
    lam = tuple(int(a) for a in lam)
    if not combin.is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    n = len(lam)
    reverse = lam[::-1]
    value = combin.orbit_count(lam) * combin.gen_pochhammer(lam, n * ctx.kappa + 1, ctx)
    value *= combin.hook_product(lam, 1, ctx)
    value /= combin.e_epsilon(reverse, 1, ctx) * combin.hook_product(lam, ctx.kappa + 1, ctx)
    return value
