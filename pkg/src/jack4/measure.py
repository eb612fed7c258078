"""Floating-point verification against the Gaussian-type weight measure.

The probability measure on R^4 is

    dmu(x) = c * prod_{i<j} |x_i - x_j|^{2 kappa} * |y_0|^{2 kappa'} dm(x),

with dm the standard Gaussian, y_0 = (x_1 + x_2 + x_3 + x_4)/2, and c the
closed-form normalization constant.  This module is the only place floating
point is allowed: it supplies the constant, its Selberg-product reduction,
and seeded Monte Carlo estimates of integrals of polynomial products.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exact import format_rational
from .poly import SparsePoly, to_x

_BATCH = 1 << 17


@dataclass(frozen=True)
class McConfig:
    """Monte Carlo run parameters; estimates are a pure function of these."""

    samples: int
    seed: int
    kappa: float
    kappa_prime: float

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("need at least one sample")
        if self.kappa < 0 or self.kappa_prime < 0:
            raise ValueError("parameters must be nonnegative")


def normalization_constant(kappa: float, kappa_prime: float) -> float:
    """c with 1/c = 2^{kappa'} G(kappa'+1/2) G(2k+1) G(3k+1) G(4k+1) / (G(1/2) G(k+1)^3),
    evaluated through log-gamma for stability."""
    log_inv = (
        kappa_prime * math.log(2.0)
        + math.lgamma(kappa_prime + 0.5)
        + math.lgamma(2 * kappa + 1)
        + math.lgamma(3 * kappa + 1)
        + math.lgamma(4 * kappa + 1)
        - math.lgamma(0.5)
        - 3 * math.lgamma(kappa + 1)
    )
    return math.exp(-log_inv)


def selberg_product(nvars: int, kappa: float) -> float:
    """prod_{j=2..N} Gamma(j kappa + 1) / Gamma(kappa + 1): the Gaussian
    Vandermonde integral from the Macdonald-Mehta-Selberg formula."""
    if nvars < 2:
        raise ValueError("need at least two variables")
    log_val = sum(math.lgamma(j * kappa + 1) for j in range(2, nvars + 1))
    log_val -= (nvars - 1) * math.lgamma(kappa + 1)
    return math.exp(log_val)


def _as_x_frame(f: SparsePoly) -> SparsePoly:
    if f.frame == "x4":
        return f
    if f.frame == "y4":
        return to_x(f)
    raise ValueError(f"expected an x4 or y4 polynomial, got frame {f.frame!r}")


def _compile(f: SparsePoly):
    exps = np.array(list(f.terms.keys()), dtype=np.int64)
    coefs = np.array([float(c) for c in f.terms.values()])
    return exps, coefs


def _eval_compiled(compiled, x: np.ndarray) -> np.ndarray:
    exps, coefs = compiled
    out = np.zeros(x.shape[0])
    for exp, coef in zip(exps, coefs):
        term = np.full(x.shape[0], coef)
        for v in range(4):
            if exp[v]:
                term *= x[:, v] ** exp[v]
        out += term
    return out


def mc_inner_product(f: SparsePoly, g: SparsePoly, cfg: McConfig) -> tuple[float, float]:
    """Monte Carlo estimate of the integral of f*g against dmu.

    Samples x from the standard Gaussian and reweights by c * h(x)^2; returns
    (estimate, standard_error).  Batches use seeds derived from (seed, batch
    index), so the result is reproducible and independent of scheduling.
    """
    cf = _compile(_as_x_frame(f))
    cg = _compile(_as_x_frame(g))
    c = normalization_constant(cfg.kappa, cfg.kappa_prime)
    pairs = [(i, j) for i in range(4) for j in range(i + 1, 4)]

    total = 0.0
    total_sq = 0.0
    done = 0
    batch_index = 0
    while done < cfg.samples:
        m = min(_BATCH, cfg.samples - done)
        rng = np.random.default_rng(
            np.random.SeedSequence(entropy=cfg.seed, spawn_key=(batch_index,))
        )
        x = rng.standard_normal((m, 4))
        weight = np.full(m, c)
        if cfg.kappa:
            for i, j in pairs:
                weight *= np.abs(x[:, i] - x[:, j]) ** (2 * cfg.kappa)
        if cfg.kappa_prime:
            weight *= np.abs(0.5 * x.sum(axis=1)) ** (2 * cfg.kappa_prime)
        vals = weight * _eval_compiled(cf, x) * _eval_compiled(cg, x)
        total += float(vals.sum())
        total_sq += float((vals * vals).sum())
        done += m
        batch_index += 1

    n = cfg.samples
    mean = total / n
    if n > 1:
        variance = max(0.0, (total_sq - n * mean * mean) / (n - 1))
    else:
        variance = 0.0
    return mean, math.sqrt(variance / n)


def mc_report(labels: str, cfg: McConfig, estimate: float, stderr: float, exact) -> dict:
    """One check in the external JSON report shape."""
    return {
        "integrand": labels,
        "kappa": cfg.kappa,
        "kappa_prime": cfg.kappa_prime,
        "samples": cfg.samples,
        "seed": cfg.seed,
        "estimate": estimate,
        "stderr": stderr,
        "exact": None if exact is None else format_rational(exact),
    }
