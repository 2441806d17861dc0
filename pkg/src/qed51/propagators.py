"""Momentum-space propagator kernels, Feynman-parameter formulas, and the
loop-integral primitives the radiative program reduces to.

Conventions: the photon kernel is 1/(k.k - i eps) and the electron kernel
(kslash + i m)/(k.k + m^2 - i eps); the overall -2i/(2 pi)^4 normalizations
live in the process formulas that cite them.  Wick-rotated loop integrals
over the contour C are pure closed forms here, each with a radial quadrature
oracle (4-sphere surface 2 pi^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .dirac import I4, slash
from .errors import DomainError, NumericError, PoleError
from .kinematics import FourVector

QUAD_TOL = 1e-10


@dataclass(frozen=True)
class IEpsilonPolicy:
    """Finite i-epsilon displacement, or exact-limit mode which raises on poles."""

    epsilon: float = 1e-9   # units of m^2
    exact: bool = False

    def __post_init__(self):
        if not self.exact and self.epsilon <= 0:
            raise DomainError("finite i-epsilon policy needs epsilon > 0")

    @classmethod
    def exact_limit(cls) -> "IEpsilonPolicy":
        return cls(epsilon=0.0, exact=True)


DEFAULT_POLICY = IEpsilonPolicy()


def photon_propagator(k: FourVector, policy: IEpsilonPolicy = DEFAULT_POLICY) -> complex:
    """Scalar kernel 1/(k.k - i eps)."""
    k2 = k.dot(k)
    if policy.exact:
        if k2 == 0.0:
            raise PoleError("photon propagator evaluated on the light cone in exact mode")
        return 1.0 / k2
    return 1.0 / (k2 - 1j * policy.epsilon)


def electron_propagator(k: FourVector, mass: float = 1.0,
                        policy: IEpsilonPolicy = DEFAULT_POLICY) -> np.ndarray:
    """(kslash + i m) / (k.k + m^2 - i eps), a 4x4 matrix."""
    denom = k.dot(k) + mass**2
    if policy.exact:
        if denom == 0.0:
            raise PoleError("electron propagator evaluated on shell in exact mode")
        denom_c = denom
    else:
        denom_c = denom - 1j * policy.epsilon
    return (slash(k) + 1j * mass * I4) / denom_c


def _quad_complex(f, a, b, **kw):
    re, re_err = integrate.quad(lambda t: f(t).real, a, b, **kw)
    im, im_err = integrate.quad(lambda t: f(t).imag, a, b, **kw)
    if max(re_err, im_err) > 1e-6 * max(1.0, abs(re), abs(im)):
        raise NumericError("quadrature failed to converge")
    return complex(re, im)


def feynman_combine2(a, b, policy: IEpsilonPolicy = DEFAULT_POLICY) -> complex:
    """int_0^1 dz [a z + b (1-z)]^-2, evaluated by adaptive quadrature.

    Equals 1/(a b) when the segment from b to a avoids the origin.
    """
    a, b = complex(a), complex(b)
    if policy.exact and a.imag == 0.0 and b.imag == 0.0:
        # segment a z + b (1-z) crosses zero iff the endpoints differ in sign
        if a.real == 0.0 or b.real == 0.0 or (a.real > 0) != (b.real > 0):
            raise PoleError("combination denominator crosses zero; supply an i-epsilon")
    shift = 0.0 if policy.exact else -1j * policy.epsilon
    return _quad_complex(lambda z: 1.0 / (a * z + b * (1.0 - z) + shift) ** 2,
                         0.0, 1.0, limit=200)


def feynman_combine3(a, b, c, policy: IEpsilonPolicy = DEFAULT_POLICY) -> complex:
    """2 int_0^1 dx int_0^1 x dy [a(1-x) + b x y + c x (1-y)]^-3 = 1/(a b c)."""
    a, b, c = complex(a), complex(b), complex(c)
    if policy.exact and all(v.imag == 0.0 for v in (a, b, c)):
        reals = [v.real for v in (a, b, c)]
        if any(v == 0.0 for v in reals) or (max(reals) > 0) != (min(reals) > 0):
            raise PoleError("combination denominator crosses zero; supply an i-epsilon")
    shift = 0.0 if policy.exact else -1j * policy.epsilon

    def inner(x):
        if x == 0.0:
            return 0.0 + 0.0j
        return _quad_complex(
            lambda y: x / (a * (1 - x) + b * x * y + c * x * (1 - y) + shift) ** 3,
            0.0, 1.0, limit=200)

    re, re_err = integrate.quad(lambda x: inner(x).real, 0.0, 1.0, limit=200)
    im, im_err = integrate.quad(lambda x: inner(x).imag, 0.0, 1.0, limit=200)
    if max(re_err, im_err) > 1e-6 * max(1.0, abs(re), abs(im)):
        raise NumericError("2-D quadrature failed to converge")
    return 2.0 * complex(re, im)


def loop_integral_I(lam: float) -> complex:
    """int_C dk (k^2 + Lambda)^-3 = pi^2 i / (2 Lambda)."""
    if lam <= 0:
        raise DomainError("Lambda must be positive")
    return 1j * math.pi**2 / (2.0 * lam)


def loop_integral_I_quadrature(lam: float) -> complex:
    """Radial oracle: 2 pi^2 i int_0^inf k^3 dk (k^2 + Lambda)^-3."""
    if lam <= 0:
        raise DomainError("Lambda must be positive")
    val, err = integrate.quad(lambda k: k**3 / (k**2 + lam) ** 3, 0.0, np.inf, limit=200)
    if err > 1e-8 * max(1.0, abs(val)):
        raise NumericError("radial loop quadrature failed to converge")
    return 2j * math.pi**2 * val


def loop_log_difference(lam: float, lam_prime: float) -> complex:
    """int_C dk [(k^2+Lambda)^-2 - (k^2+Lambda')^-2] = pi^2 i log(Lambda'/Lambda)."""
    if lam <= 0 or lam_prime <= 0:
        raise DomainError("Lambda values must be positive")
    return 1j * math.pi**2 * math.log(lam_prime / lam)


def loop_log_difference_quadrature(lam: float, lam_prime: float) -> complex:
    if lam <= 0 or lam_prime <= 0:
        raise DomainError("Lambda values must be positive")
    val, err = integrate.quad(
        lambda k: k**3 * (1.0 / (k**2 + lam) ** 2 - 1.0 / (k**2 + lam_prime) ** 2),
        0.0, np.inf, limit=200)
    if err > 1e-8 * max(1.0, abs(val)):
        raise NumericError("radial loop quadrature failed to converge")
    return 2j * math.pi**2 * val


@dataclass
class CutoffQuantity:
    """A value of the form finite + log_coeff * log(cutoff), kept symbolic.

    Addition combines like-labeled terms only; evaluation requires an
    explicit cutoff value.  log_coeff may be complex (the divergent photon
    integral carries 2 pi^2 i per unit log).
    """

    finite: complex
    log_coeff: complex
    cutoff: str

    def __add__(self, other):
        if isinstance(other, CutoffQuantity):
            if other.cutoff != self.cutoff:
                raise DomainError(
                    f"cannot add cutoff quantities with labels {self.cutoff!r} and {other.cutoff!r}")
            return CutoffQuantity(self.finite + other.finite,
                                  self.log_coeff + other.log_coeff, self.cutoff)
        return CutoffQuantity(self.finite + other, self.log_coeff, self.cutoff)

    __radd__ = __add__

    def __mul__(self, c):
        return CutoffQuantity(self.finite * c, self.log_coeff * c, self.cutoff)

    __rmul__ = __mul__

    def evaluate(self, cutoff_value: float) -> complex:
        if cutoff_value <= 0:
            raise DomainError("cutoff value must be positive")
        return self.finite + self.log_coeff * math.log(cutoff_value)


def divergent_photon_integral() -> CutoffQuantity:
    """int_C dk (k^2 + m^2)^-2 = 2 pi^2 i log(k_max/m), never a float."""
    return CutoffQuantity(finite=0.0, log_coeff=2j * math.pi**2, cutoff="k_max")


def principal_value(f, a: float, b: float, pole: float,
                    half_width: float = 1e-6) -> float:
    """Cauchy principal value of int_a^b f by symmetric excision around the
    pole, with a Richardson consistency check at half the excision width."""
    if not a < pole < b:
        raise DomainError("pole must lie strictly inside the interval")

    def excised(h):
        left, lerr = integrate.quad(f, a, pole - h, limit=400)
        right, rerr = integrate.quad(f, pole + h, b, limit=400)
        if max(lerr, rerr) > 1e-7 * max(1.0, abs(left) + abs(right)):
            raise NumericError("principal-value quadrature failed to converge")
        return left + right

    v1 = excised(half_width)
    v2 = excised(half_width / 2.0)
    if abs(v2 - v1) > 1e-5 * max(1.0, abs(v2)):
        raise NumericError("principal value did not stabilize under excision refinement")
    return v2
