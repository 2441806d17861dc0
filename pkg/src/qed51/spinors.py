"""Plane-wave Dirac spinors, adjoints, charge conjugation, projection
operators, and the spin-sum machinery that turns amplitude products into
spurs.

Normalization: u* u = |E|/m and ubar u = +1 for positive-energy (electron)
states, -1 for negative-energy (positron-representing) states.  The two
positive solutions are the columns of the standard elementary solutions
scaled by sqrt((E+m)/2m); the negative pair is built the same way from the
E -> -E branch so that (pslash + i m) v = 0 with the same on-shell p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dirac import BETA, I4, slash, spur
from .errors import DomainError
from .kinematics import ElectronState, FourVector

C_MATRIX = None  # set below; charge-conjugation matrix gamma2 = -i beta alpha2


def plane_wave_spinors(state: ElectronState, energy_sign: int = +1):
    """The two independent solutions at momentum p, for either energy sign.

    energy_sign=+1: (pslash - i m) u = 0;  energy_sign=-1: (pslash + i m) v = 0.
    """
    p, m = state.p, state.mass
    E = p.x0
    pp = p.x1 + 1j * p.x2
    pm = p.x1 - 1j * p.x2
    p3 = p.x3
    d = E + m
    n = math.sqrt(d / (2.0 * m))
    if energy_sign == +1:
        a = np.array([1.0, 0.0, p3 / d, pp / d], dtype=complex)
        b = np.array([0.0, 1.0, pm / d, -p3 / d], dtype=complex)
    elif energy_sign == -1:
        a = np.array([p3 / d, pp / d, 1.0, 0.0], dtype=complex)
        b = np.array([pm / d, -p3 / d, 0.0, 1.0], dtype=complex)
    else:
        raise DomainError("energy_sign must be +1 or -1")
    return n * a, n * b


def adjoint(u: np.ndarray) -> np.ndarray:
    """ubar = u-dagger beta, as a row vector."""
    return u.conj() @ BETA


def bar_sandwich(u_left: np.ndarray, mat: np.ndarray, u_right: np.ndarray) -> complex:
    """(ubar_left mat u_right)."""
    return complex(adjoint(u_left) @ mat @ u_right)


def charge_conjugate(u: np.ndarray) -> np.ndarray:
    """v = C u+ with C = -i beta alpha^2 = gamma2; an involution since C C* = I."""
    return C_MATRIX @ u.conj()


@dataclass
class SpinProjector:
    """Lambda_+- = (+-pslash + i m) / (2 i m); Lambda_+ - Lambda_- = I."""

    matrix: np.ndarray
    sign: int


def projector(state: ElectronState, sign: int) -> SpinProjector:
    """Lambda_+ = (pslash + i m)/(2 i m), Lambda_- = (pslash - i m)/(2 i m)."""
    if sign not in (+1, -1):
        raise DomainError("projector sign must be +1 or -1")
    m = state.mass
    mat = (slash(state.p) + sign * 1j * m * I4) / (2j * m)
    return SpinProjector(matrix=mat, sign=sign)


def spin_sum(O: np.ndarray, P: np.ndarray, state: ElectronState, sign: int,
             s: np.ndarray, r: np.ndarray) -> complex:
    """sum over the two spin states u of (sbar O u)(ubar P r), reduced to the
    projector form (sbar O Lambda_+- P r)."""
    lam = projector(state, sign).matrix
    return bar_sandwich(s, O @ lam @ P, r)


def spin_sum_direct(O: np.ndarray, P: np.ndarray, state: ElectronState, sign: int,
                    s: np.ndarray, r: np.ndarray) -> complex:
    """The same sum evaluated term by term over the two returned spinors."""
    ua, ub = plane_wave_spinors(state, sign)
    return sum(bar_sandwich(s, O, u) * bar_sandwich(u, P, r) for u in (ua, ub))


def spur_spin_sum(Q: np.ndarray) -> complex:
    """sum over all four states of eps (ubar Q u) = Spur Q."""
    return spur(Q)


def completeness_matrix(state: ElectronState) -> np.ndarray:
    """sum_4 eps (u ubar), reconstructed from the four explicit spinors."""
    out = np.zeros((4, 4), dtype=complex)
    for sign in (+1, -1):
        for u in plane_wave_spinors(state, sign):
            out += sign * np.outer(u, adjoint(u))
    return out


def mott_spin_factor(energy: float, theta: float, mass: float = 1.0) -> float:
    """(1/2) sum over spins of |u'* u|^2 for elastic scattering through theta:
    (E^2/m^2)(1 - beta^2 sin^2(theta/2))."""
    if energy < mass:
        raise DomainError("energy below rest mass")
    beta2 = 1.0 - (mass / energy) ** 2
    return (energy / mass) ** 2 * (1.0 - beta2 * math.sin(theta / 2.0) ** 2)


def mott_spin_factor_direct(energy: float, theta: float, mass: float = 1.0) -> float:
    """The same factor by explicit summation over the four spinor pairs."""
    sin_t, cos_t = math.sin(theta), math.cos(theta)
    st_in = ElectronState(_momentum(energy, (0.0, 0.0, 1.0), mass), mass)
    st_out = ElectronState(_momentum(energy, (sin_t, 0.0, cos_t), mass), mass)
    total = 0.0
    for u in plane_wave_spinors(st_in, +1):
        for up in plane_wave_spinors(st_out, +1):
            total += abs(np.vdot(up, u)) ** 2
    return total / 2.0


def _momentum(energy, direction, mass) -> FourVector:
    pmag = math.sqrt(energy**2 - mass**2)
    return FourVector(pmag * direction[0], pmag * direction[1],
                      pmag * direction[2], energy)


def probability_density(u: np.ndarray) -> float:
    """psi* psi for the constant spinor."""
    return float(np.vdot(u, u).real)


def current_density(u: np.ndarray) -> np.ndarray:
    """psi* alpha^k psi, the three flow components."""
    from .dirac import ALPHA
    return np.array([complex(u.conj() @ a @ u).real for a in ALPHA])


def _init():
    global C_MATRIX
    from .dirac import GAMMA
    C_MATRIX = GAMMA[1]  # gamma2


_init()
