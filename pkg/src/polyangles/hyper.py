"""The algebra H_n in its isotropic basis, exponential form, exponential bingles."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import (
    DimensionMismatchError,
    DomainError,
    NonPositiveComponentError,
    UnsupportedError,
    ZeroDivisorError,
)
from .metric import bm3


@dataclass(frozen=True)
class HyperNumber:
    """Element a1*i1 + ... + an*in of H_n with i_k * i_l = delta_kl * i_k."""

    components: tuple[float, ...]

    def __post_init__(self):
        comps = tuple(float(x) for x in self.components)
        if not comps:
            raise ValueError("a hypernumber needs at least one component")
        object.__setattr__(self, "components", comps)

    @classmethod
    def one(cls, n: int = 3) -> "HyperNumber":
        return cls((1.0,) * n)

    @property
    def n(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return self.n

    def __getitem__(self, k):
        return self.components[k]

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return HyperNumber(tuple(x * other for x in self.components))
        return hc_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return hc_div(self, other)

    def __abs__(self):
        return hc_norm(self)


def _hyper(a) -> HyperNumber:
    return a if isinstance(a, HyperNumber) else HyperNumber(tuple(a))


def _same_dim(a: HyperNumber, b: HyperNumber):
    if a.n != b.n:
        raise DimensionMismatchError(f"H_{a.n} and H_{b.n} elements cannot be combined")


def hc_mul(a, b) -> HyperNumber:
    a, b = _hyper(a), _hyper(b)
    _same_dim(a, b)
    return HyperNumber(tuple(x * y for x, y in zip(a, b)))


def hc_div(a, b) -> HyperNumber:
    a, b = _hyper(a), _hyper(b)
    _same_dim(a, b)
    if any(y == 0.0 for y in b):
        raise ZeroDivisorError(f"{b.components} has a vanishing component")
    return HyperNumber(tuple(x / y for x, y in zip(a, b)))


def hc_norm(a) -> float:
    """|a| = |a1 * ... * an|^(1/n); zero exactly for isotropic elements."""
    a = _hyper(a)
    return abs(math.prod(a.components)) ** (1.0 / a.n)


def hc_apply(f: Callable[[float], float], a) -> HyperNumber:
    """f(a) = f(a1) i1 + ... + f(an) in."""
    a = _hyper(a)
    out = []
    for x in a:
        try:
            y = float(f(x))
        except (ValueError, ZeroDivisionError, OverflowError) as exc:
            raise DomainError(f"{x!r} is outside the domain of {f!r}") from exc
        if math.isnan(y) and not math.isnan(x):
            raise DomainError(f"{x!r} is outside the domain of {f!r}")
        out.append(y)
    return HyperNumber(tuple(out))


@dataclass(frozen=True)
class ExponentialForm:
    """a = norm * exp(angles[0]*e1 + angles[1]*e2 + ...), with e_k = i1 - i_{k+1}."""

    norm: float
    angles: tuple[float, ...]

    def to_hyper(self) -> HyperNumber:
        # exp(sum alpha_k (i1 - i_{k+1})) = e^{sum alpha} i1 + sum_k e^{-alpha_k} i_{k+1}
        first = self.norm * math.exp(math.fsum(self.angles))
        rest = tuple(self.norm * math.exp(-t) for t in self.angles)
        return HyperNumber((first,) + rest)


def _positive3(a, name: str) -> HyperNumber:
    a = _hyper(a)
    if a.n != 3:
        raise UnsupportedError(f"exponential angles are only defined for H_3, got H_{a.n}")
    if any(not x > 0.0 for x in a):
        raise NonPositiveComponentError(f"{name} = {a.components} must have positive components")
    return a


def to_exponential(a) -> ExponentialForm:
    a1, a2, a3 = _positive3(a, "a")
    norm = (a1 * a2 * a3) ** (1.0 / 3.0)
    alpha1 = math.log(a1 * a3 / (a2 * a2)) / 3.0
    alpha2 = math.log(a1 * a2 / (a3 * a3)) / 3.0
    return ExponentialForm(norm, (alpha1, alpha2))


def from_exponential(form: ExponentialForm) -> HyperNumber:
    return form.to_hyper()


def exp_bingles(a, b) -> tuple[float, float]:
    """Exponential bingles (phi1, phi2) of two positive hypernumbers.

    Both are the exponential angles of a/b, hence additive for every
    intermediate c and blind to independent positive rescaling of a and b.
    """
    a1, a2, a3 = _positive3(a, "a")
    b1, b2, b3 = _positive3(b, "b")
    phi1 = math.log((a1 * a3 * b2 * b2) / (b1 * b3 * a2 * a2)) / 3.0
    phi2 = math.log((a1 * a2 * b3 * b3) / (b1 * b2 * a3 * a3)) / 3.0
    return phi1, phi2


_I1, _I2, _I3 = (1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)


def exp_bingles_metric_form(a, b) -> tuple[float, float]:
    """Same angles written through the trilinear form and the isotropic basis."""
    a = tuple(_positive3(a, "a"))
    b = tuple(_positive3(b, "b"))

    def angle(iso, j, k):
        num = bm3(a, a, iso) * bm3(j, k, b) ** 2
        den = bm3(b, b, iso) * bm3(j, k, a) ** 2
        if not (num > 0.0 and den > 0.0):
            raise DomainError("metric-form logarithm argument is not positive")
        return math.log(num / den) / 3.0

    return angle(_I2, _I1, _I3), angle(_I3, _I1, _I2)
