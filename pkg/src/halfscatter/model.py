"""Model parameters, the hyperbolic-well potential, and the integer-pair reduction."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ParityError

__all__ = ["ModelParams", "BetaClass", "potential", "reduce_group_indices", "classify_beta"]

#: |beta - round(beta)| below this counts as an exact integer; user-supplied
#: parameters must honor exact integers without float-noise misclassification.
BETA_INT_TOL = 1e-12


@dataclass(frozen=True)
class ModelParams:
    """Parameter pair (mu, nu) >= 0 with the derived exponents alpha, beta."""

    mu: float
    nu: float

    def __post_init__(self):
        if self.mu < 0 or self.nu < 0:
            raise DomainError(f"parameters must satisfy mu, nu >= 0, got ({self.mu}, {self.nu})")

    @property
    def alpha(self) -> float:
        return (1.0 + self.mu + self.nu) / 2.0

    @property
    def beta(self) -> float:
        return (1.0 + self.mu - self.nu) / 2.0


@dataclass(frozen=True)
class BetaClass:
    """Arithmetic type of beta: positive, -n, or -n+eps with n in N, eps in (0,1)."""

    kind: str  # "positive" | "negative_integer" | "negative_noninteger"
    n: int | None = None
    epsilon: float | None = None

    def __str__(self) -> str:
        if self.kind == "positive":
            return "positive"
        if self.kind == "negative_integer":
            return f"negative_integer({self.n})"
        return f"negative_noninteger({self.n},{self.epsilon:.12g})"


def classify_beta(params: ModelParams, tol: float = BETA_INT_TOL) -> BetaClass:
    """Classify beta = (1+mu-nu)/2; the integer test wins within tol."""
    beta = params.beta
    r = round(beta)
    if abs(beta - r) < tol and r <= 0:
        return BetaClass("negative_integer", n=-r)
    if beta > 0:
        return BetaClass("positive")
    n = math.ceil(-beta)
    return BetaClass("negative_noninteger", n=n, epsilon=beta + n)


def potential(params: ModelParams, x):
    """Potential value (mu^2-1/4)/(sinh^2 x cosh^2 x) + (mu^2-nu^2)/cosh^2 x."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("potential requires x > 0")
    sh, ch = np.sinh(x), np.cosh(x)
    out = (params.mu**2 - 0.25) / (sh * ch) ** 2 + (params.mu**2 - params.nu**2) / ch**2
    return float(out) if out.ndim == 0 else out


def reduce_group_indices(m: int, n: int) -> ModelParams:
    """Map an even-difference integer pair (m, n) to (mu, nu) = (|m-n|/2, |m+n|/2)."""
    if (m - n) % 2 != 0:
        raise ParityError(f"(m, n) = ({m}, {n}) has odd difference; subspace is trivial")
    return ModelParams(mu=abs(m - n) / 2.0, nu=abs(m + n) / 2.0)
