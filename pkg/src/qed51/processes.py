"""Tree-level matrix elements and cross sections for the scattering,
annihilation, and emission processes worked out in full, each paired with a
brute-force spin/polarization-sum oracle.

Units: natural (hbar = c = mass = 1, e^2 = 4 pi alpha).  Differential cross
sections are returned per steradian in units of the squared classical
electron radius r0^2 = alpha^2, so the classical Thomson limit is cos^2 phi
and the total Thomson cross section is 8 pi / 3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .dirac import GAMMA, I4, slash, spur
from .errors import DomainError, PoleError
from .kinematics import (ElectronState, FourVector, compton_shift,
                         electron_at_rest, moller_cm_angle, moller_cm_momenta,
                         two_body_cross_section)
from .spinors import adjoint, plane_wave_spinors

TWO_PI = 2.0 * math.pi


@dataclass
class AngularDistribution:
    """Sampled differential cross section, values in r0^2 per steradian."""

    theta: np.ndarray
    value: np.ndarray

    def __post_init__(self):
        self.theta = np.asarray(self.theta, dtype=float)
        self.value = np.asarray(self.value, dtype=float)
        if self.theta.shape != self.value.shape:
            raise DomainError("theta and value grids must match")


def sample_distribution(func, thetas) -> AngularDistribution:
    """Tabulate a differential cross section over an angle grid."""
    thetas = np.asarray(thetas, dtype=float)
    return AngularDistribution(theta=thetas,
                               value=np.array([func(t) for t in thetas]))


@dataclass
class DecayResult:
    rate: float        # natural units (1/mc^2 time) unless stated otherwise
    lifetime: float
    notes: str = ""


# ---------------------------------------------------------------------------
# Moller scattering.

def moller_dcs(gamma: float, theta: float, alpha: float,
               spin_resolved: bool = True) -> float:
    """Differential cross section dsigma/dOmega* (CM solid angle) for
    electron-electron scattering, lab angle theta against a target at rest,
    in r0^2 units.  The spinless variant drops the ((gamma-1)/2gamma)^2 term.
    """
    if gamma <= 1.0:
        raise DomainError("need gamma > 1 (Coulomb divergence at zero velocity)")
    if not 0.0 < theta < math.pi / 2.0:
        raise DomainError("lab angle must lie strictly inside (0, pi/2)")
    x = moller_cm_angle(gamma, theta)
    beta2 = 1.0 - 1.0 / gamma**2
    one_m_x2 = 1.0 - x * x
    bracket = 4.0 / one_m_x2**2 - 3.0 / one_m_x2
    if spin_resolved:
        bracket += ((gamma - 1.0) / (2.0 * gamma)) ** 2 * (1.0 + 4.0 / one_m_x2)
    # (e_G^2 / m v^2)^2 = (alpha / beta^2)^2; dividing by r0^2 = alpha^2
    # leaves 1/beta^4.
    return 2.0 * (gamma + 1.0) / (gamma**2 * beta2**2) * bracket


def moller_amplitude(p1, u1, p2, u2, p1p, u1p, p2p, u2p, alpha: float) -> complex:
    """Invariant matrix element envelope K (direct minus exchange):
    -i e^2 sum_mu [(u1'bar g u1)(u2'bar g u2)/(p1-p1')^2 - exchange],
    Heaviside-Lorentz normalization e^2 = 4 pi alpha."""
    e2 = 4.0 * math.pi * alpha
    q_direct = p1 - p1p
    q_exch = p1 - p2p
    direct = exch = 0.0j
    for g in GAMMA:
        direct += (adjoint(u1p) @ g @ u1) * (adjoint(u2p) @ g @ u2)
        exch += (adjoint(u2p) @ g @ u1) * (adjoint(u1p) @ g @ u2)
    return -1j * e2 * (direct / q_direct.dot(q_direct)
                       - exch / q_exch.dot(q_exch))


def moller_dcs_brute(gamma: float, theta: float, alpha: float) -> float:
    """dsigma/dOmega* from the explicit sum over all 16 spin configurations
    of the matrix element, assembled through the general two-body
    cross-section formula.  Independent oracle for moller_dcs."""
    x = moller_cm_angle(gamma, theta)
    p1, p2, p1p, p2p = moller_cm_momenta(gamma, x)
    states = [ElectronState(p) for p in (p1, p2, p1p, p2p)]
    spinors = [plane_wave_spinors(s, +1) for s in states]
    total = 0.0
    for u1 in spinors[0]:
        for u2 in spinors[1]:
            for u1p in spinors[2]:
                for u2p in spinors[3]:
                    k = moller_amplitude(p1, u1, p2, u2, p1p, u1p, p2p, u2p, alpha)
                    total += abs(k) ** 2
    k_eff = math.sqrt(total / 4.0)   # average initial spins, sum final
    sigma_density = two_body_cross_section(k_eff, p1, p2, p1p, p2p)
    e_star = p1.x0
    p_star = p1.x3
    # d2p_perp = p*^2 |x| dOmega*; the |x| cancels against the outgoing flux
    # factor already inside sigma_density, leaving |K|^2 / (16 pi^2 E*^2).
    dcs = sigma_density * p_star**2 * abs(x)
    return dcs / alpha**2  # express in r0^2


def bhabha_amplitude(p_in: FourVector, u_in, q_in: FourVector, v_in,
                     p_out: FourVector, u_out, q_out: FourVector, v_out,
                     alpha: float) -> complex:
    """Electron-positron scattering amplitude: the electron-electron matrix
    element with negative-energy wave-function substitutions for the
    positron legs (amplitude level only; no closed-form cross section is
    claimed).

    (p_in, u_in) -> (p_out, u_out) is the electron; the positron of physical
    momentum q_in -> q_out is represented by the negative-energy spinors
    v_in, v_out (the sign = -1 pair at the physical momenta).  The exchange
    denominator becomes the virtual-annihilation channel (p_in + q_in)^2.
    """
    total = (p_in + q_in) - (p_out + q_out)
    if max(abs(total.x1), abs(total.x2), abs(total.x3), abs(total.x0)) > 1e-9:
        raise DomainError("momenta do not satisfy conservation")
    return moller_amplitude(p_in, u_in, -1.0 * q_out, v_out,
                            p_out, u_out, -1.0 * q_in, v_in, alpha)


# ---------------------------------------------------------------------------
# Compton scattering / Klein-Nishina.

def _compton_vertex(k, e, kp, ep) -> np.ndarray:
    return (slash(e) @ slash(kp) @ slash(ep) / kp.x0
            + slash(ep) @ slash(k) @ slash(e) / k.x0)


def compton_geometry(eps: float, theta: float):
    """(p, k, kp, pp) for a photon of energy eps (units m) hitting an
    electron at rest and scattering through theta in the 1-3 plane."""
    k0p = compton_shift(eps, theta)
    p = FourVector(0, 0, 0, 1.0)
    k = FourVector(0, 0, eps, eps)
    kp = FourVector(k0p * math.sin(theta), 0.0, k0p * math.cos(theta), k0p)
    pp = p + k - kp
    return p, k, kp, pp


def scattered_polarization_basis(theta: float):
    """Orthonormal polarizations for the scattered photon: in-plane and
    perpendicular-to-plane."""
    e_in = FourVector(math.cos(theta), 0.0, -math.sin(theta), 0.0)
    e_perp = FourVector(0.0, 1.0, 0.0, 0.0)
    return e_in, e_perp


def compton_amplitude(p: FourVector, k: FourVector, e: FourVector,
                      kp: FourVector, ep: FourVector,
                      u: np.ndarray, up: np.ndarray, alpha: float) -> complex:
    """The amplitude K = (e^2/2m) u'bar [eslash k'slash/k0' e'slash +
    e'slash kslash/k0 eslash] u for an electron initially at rest."""
    if max(abs(p.x1), abs(p.x2), abs(p.x3)) > 1e-12:
        raise DomainError("electron must be initially at rest")
    for photon_k, pol in ((k, e), (kp, ep)):
        if abs(pol.x0) > 1e-10 or abs(pol.dot(photon_k)) > 1e-9:
            raise DomainError("unphysical photon polarization")
    e2 = 4.0 * math.pi * alpha
    return complex(adjoint(up) @ _compton_vertex(k, e, kp, ep) @ u) * e2 / 2.0


def kn_spin_summed_ksq(eps: float, theta: float, e: FourVector, ep: FourVector,
                       alpha: float, route: str = "closed") -> float:
    """(1/2) sum over electron spins of |K|^2 for fixed photon polarizations.

    route = "closed":   e^4/(4) {(k0-k0')^2/(k0 k0') + 4 (e.e')^2}
    route = "trace":    the projector-spur expression
    route = "spinors":  explicit sum over the four spinor pairs
    """
    p, k, kp, pp = compton_geometry(eps, theta)
    e2 = 4.0 * math.pi * alpha
    if route == "closed":
        k0, k0p = k.x0, kp.x0
        return e2**2 / 4.0 * ((k0 - k0p) ** 2 / (k0 * k0p) + 4.0 * e.dot(ep) ** 2)
    ops = _compton_vertex(k, e, kp, ep)
    ops_rev = _compton_vertex(k, ep, kp, e)  # reversed factor order partner
    if route == "trace":
        lam = slash(p) + 1j * I4
        lam_p = slash(pp) + 1j * I4
        val = spur(lam @ ops_rev @ lam_p @ ops)
        return (e2**2 / 32.0) * val.real
    if route == "spinors":
        st, stp = electron_at_rest(), ElectronState(pp)
        total = 0.0
        for u in plane_wave_spinors(st, +1):
            for up in plane_wave_spinors(stp, +1):
                total += abs(complex(adjoint(up) @ ops @ u)) ** 2
        return (e2 / 2.0) ** 2 * total / 2.0
    raise DomainError(f"unknown route {route!r}")


def kn_dcs(eps: float, theta: float, phi: float | None = None,
           unpolarized: bool = False) -> float:
    """Klein-Nishina differential cross section, r0^2 per steradian.

    phi is the angle between the incident and scattered polarizations.  The
    unpolarized value sums the scattered and averages the incident
    polarizations over the two explicit orthonormal bases.
    """
    if eps < 0:
        raise DomainError("photon energy must be nonnegative")
    ratio = 1.0 + eps * (1.0 - math.cos(theta))
    if unpolarized:
        # incident basis {x, y} for k along z; cos phi = e . e'
        cos_th = math.cos(theta)
        cc = [cos_th, 0.0, 0.0, 1.0]  # e_x.e'_in, e_x.e'_perp, e_y.e'_in, e_y.e'_perp
        total = sum(_kn_polarized(eps, theta, c, ratio) for c in cc)
        return total / 2.0
    if phi is None:
        raise DomainError("give phi or request the unpolarized value")
    return _kn_polarized(eps, theta, math.cos(phi), ratio)


def _kn_polarized(eps, theta, cos_phi, ratio):
    num = (1.0 - math.cos(theta)) ** 2 * eps**2 / ratio + 4.0 * cos_phi**2
    return 0.25 * num / ratio**2


def thomson_total() -> float:
    """Total cross section in the zero-frequency limit: 8 pi / 3 (r0^2)."""
    return 8.0 * math.pi / 3.0


def thomson_total_numeric(eps: float = 0.0) -> float:
    """Numeric solid-angle integral of the unpolarized Klein-Nishina value."""
    val, err = integrate.quad(
        lambda th: kn_dcs(eps, th, unpolarized=True) * math.sin(th) * TWO_PI,
        0.0, math.pi, limit=200)
    return val


# ---------------------------------------------------------------------------
# Two-quantum annihilation.

def annihilation_vertex(k: FourVector, e: FourVector,
                        kp: FourVector, ep: FourVector) -> np.ndarray:
    """eslash k'slash e'slash + e'slash kslash eslash (rest-frame kinematics)."""
    return slash(e) @ slash(kp) @ slash(ep) + slash(ep) @ slash(k) @ slash(e)


def annihilation_amplitude(u: np.ndarray, u_neg: np.ndarray,
                           e: FourVector, ep: FourVector,
                           k: FourVector, kp: FourVector) -> complex:
    """Matrix element u_neg-bar (eslash k'slash e'slash + e'slash kslash
    eslash) u between a positive-energy electron spinor and the
    negative-energy spinor representing the positron."""
    return complex(adjoint(u_neg) @ annihilation_vertex(k, e, kp, ep) @ u)


def rest_annihilation_photons(mass: float = 1.0):
    """Back-to-back photons along axis 3 with perpendicular polarizations."""
    k = FourVector(0, 0, mass, mass)
    kp = FourVector(0, 0, -mass, mass)
    e = FourVector(1, 0, 0, 0)
    ep = FourVector(0, 1, 0, 0)
    return k, kp, e, ep


def annihilation_singlet_amplitude(parallel_polarizations: bool = False) -> complex:
    """Singlet-channel amplitude for electron and positron at rest; the
    magnitude is 2 m sqrt(2) for perpendicular polarizations and 0 for
    parallel.

    Charge conjugation maps the rest negative-energy spinors to positron
    spinors as v1 -> spin-down, v2 -> -(spin-up); with that phase the
    antisymmetric (singlet) positronium combination is the *sum* of the
    (u1, v1) and (u2, v2) matrix elements.
    """
    k, kp, e, ep = rest_annihilation_photons()
    if parallel_polarizations:
        ep = e
    rest = electron_at_rest()
    us = plane_wave_spinors(rest, +1)
    vs = plane_wave_spinors(rest, -1)
    a_updown = annihilation_amplitude(us[0], vs[0], e, ep, k, kp)
    a_downup = annihilation_amplitude(us[1], vs[1], e, ep, k, kp)
    return (a_updown + a_downup) / math.sqrt(2.0)


def annihilation_triplet_amplitudes(parallel_polarizations: bool = False):
    """The three triplet-channel amplitudes (m = +1, 0, -1), all zero: the
    two-photon decay of the spin-one state is forbidden."""
    k, kp, e, ep = rest_annihilation_photons()
    if parallel_polarizations:
        ep = e
    rest = electron_at_rest()
    us = plane_wave_spinors(rest, +1)
    vs = plane_wave_spinors(rest, -1)
    a = annihilation_amplitude
    return (
        a(us[0], vs[1], e, ep, k, kp),   # both spins up (v2 ~ -positron-up)
        (a(us[0], vs[0], e, ep, k, kp) - a(us[1], vs[1], e, ep, k, kp)) / math.sqrt(2.0),
        a(us[1], vs[0], e, ep, k, kp),
    )


def annihilation_rate(relative_density: float, alpha: float) -> DecayResult:
    """Singlet two-quantum annihilation rate w = 4 pi c r0^2 rho (natural
    units: 4 pi alpha^2 rho) and its lifetime."""
    if relative_density <= 0:
        raise DomainError("relative density must be positive")
    rate = 4.0 * math.pi * alpha**2 * relative_density
    return DecayResult(rate=rate, lifetime=1.0 / rate,
                       notes="singlet channel; triplet 2-photon decay forbidden")


def positronium_lifetime(constants) -> float:
    """Ground-state singlet lifetime in seconds:
    rho = 1/(8 pi a0^3) gives tau = 2 alpha^-5 hbar/mc^2."""
    alpha = constants.alpha
    a0 = 1.0 / alpha                       # Bohr radius, natural units
    rho = 1.0 / (8.0 * math.pi * a0**3)
    tau_natural = annihilation_rate(rho, alpha).lifetime
    return tau_natural * constants.hbar_over_mc2_s


def slow_annihilation_cross_section(v: float) -> float:
    """sigma = 4 pi (c/v) in r0^2 units, the 1/v law; valid for v << c."""
    if v <= 0:
        raise DomainError("relative velocity must be positive")
    return 4.0 * math.pi / v


# ---------------------------------------------------------------------------
# Mott scattering.

def coulomb_formfactor(q_mag: float, z_charge: float, alpha: float) -> float:
    """Fourier transform of the Coulomb potential energy, |V(q)| = Z e^2/q^2
    (Heaviside-Lorentz, e^2 = 4 pi alpha)."""
    if q_mag <= 0:
        raise DomainError("momentum transfer must be nonzero")
    return 4.0 * math.pi * z_charge * alpha / q_mag**2


def mott_dcs(energy: float, theta: float, z_charge: float, alpha: float) -> float:
    """Mott cross section (E/2pi)^2 (1 - beta^2 sin^2(theta/2)) |V(q)|^2,
    r0^2 per steradian."""
    if energy <= 1.0:
        raise DomainError("need E > m")
    if not 0.0 < theta <= math.pi:
        raise DomainError("theta = 0 diverges (Coulomb forward singularity)")
    pmag = math.sqrt(energy**2 - 1.0)
    beta2 = (pmag / energy) ** 2
    q = 2.0 * pmag * math.sin(theta / 2.0)
    vq = coulomb_formfactor(q, z_charge, alpha)
    sigma = (energy / TWO_PI) ** 2 * (1.0 - beta2 * math.sin(theta / 2.0) ** 2) * vq**2
    return sigma / alpha**2


def rutherford_dcs(energy: float, theta: float, z_charge: float, alpha: float) -> float:
    """Spinless beta -> 0 shape, for limit checks (r0^2 per steradian)."""
    pmag = math.sqrt(energy**2 - 1.0)
    q = 2.0 * pmag * math.sin(theta / 2.0)
    vq = coulomb_formfactor(q, z_charge, alpha)
    return (energy / TWO_PI) ** 2 * vq**2 / alpha**2


# ---------------------------------------------------------------------------
# Bremsstrahlung and pair creation (matrix elements only).

def _internal_line(k: FourVector, mass: float = 1.0) -> np.ndarray:
    """(kslash - i m)^-1 = (kslash + i m)/(k^2 + m^2); exact-mode pole check."""
    denom = k.dot(k) + mass**2
    if denom == 0.0:
        raise PoleError("internal electron line exactly on shell")
    return (slash(k) + 1j * mass * I4) / denom


def bremsstrahlung_me(p: FourVector, u: np.ndarray, pp: FourVector, up: np.ndarray,
                      kp: FourVector, ep: FourVector, formfactor,
                      alpha: float) -> complex:
    """Matrix element for photon emission in a static external potential:
    -e^2 f(q) u'bar { eslash (p-k')-line e'slash + e'slash (p'+k')-line
    eslash } u with the static vertex eslash = i gamma4 f(q), q = p'+k'-p."""
    e2 = 4.0 * math.pi * alpha
    q = pp + kp - p
    vertex_e = 1j * GAMMA[3]
    mid = (vertex_e @ _internal_line(p - kp) @ slash(ep)
           + slash(ep) @ _internal_line(pp + kp) @ vertex_e)
    return -e2 * formfactor(q) * complex(adjoint(up) @ mid @ u)


def paircreation_me(p: FourVector, u: np.ndarray, p_plus: FourVector,
                    u_plus: np.ndarray, kp: FourVector, ep: FourVector,
                    formfactor, alpha: float) -> complex:
    """Pair creation by a photon in a static potential; same two-propagator
    element with the legs relabeled (crossing): u-bar { eslash (k'-p+)-line
    e'slash + e'slash (p-k')-line eslash } u+."""
    e2 = 4.0 * math.pi * alpha
    q = p + p_plus - kp
    vertex_e = 1j * GAMMA[3]
    mid = (vertex_e @ _internal_line(kp - p_plus) @ slash(ep)
           + slash(ep) @ _internal_line(p - kp) @ vertex_e)
    return -e2 * formfactor(q) * complex(adjoint(u) @ mid @ u_plus)


def soft_photon_factor(p: FourVector, pp: FourVector, kp: FourVector,
                       ep: FourVector) -> float:
    """The eikonal factor p.e'/p.k' - p'.e'/p'.k' multiplying the elastic
    element in the k' -> 0 limit."""
    return p.dot(ep) / p.dot(kp) - pp.dot(ep) / pp.dot(kp)


def elastic_me(p: FourVector, u: np.ndarray, pp: FourVector, up: np.ndarray,
               formfactor, alpha: float) -> complex:
    """Born element e f(q) (u'bar i gamma4 u) the soft limit refers to,
    times e/(hbar c) so that soft_photon_factor * elastic_me has the
    normalization of bremsstrahlung_me."""
    e2 = 4.0 * math.pi * alpha
    q = pp - p
    return e2 * formfactor(q) * complex(adjoint(up) @ (1j * GAMMA[3]) @ u)


# ---------------------------------------------------------------------------
# O16 monopole pair emission (0 -> 0 transition), extreme-relativistic.

def o16_pair_spectrum(e1: float, theta: float, delta_e: float) -> float:
    """Unnormalized differential rate shape E1^2 E2^2 (1 + cos theta) sin
    theta with E2 = delta_e - E1 (extreme-relativistic)."""
    if delta_e <= 2.0:
        raise DomainError("excitation below the 2 mc^2 pair threshold")
    if not 0.0 <= e1 <= delta_e:
        raise DomainError("electron energy outside [0, delta_e]")
    e2 = delta_e - e1
    return e1**2 * e2**2 * (1.0 + math.cos(theta)) * math.sin(theta)


def o16_angular_integral() -> float:
    val, _ = integrate.quad(lambda th: (1.0 + math.cos(th)) * math.sin(th),
                            0.0, math.pi)
    return val


def o16_energy_angular_integral(delta_e: float) -> float:
    """The full double integral of the spectrum shape; equals delta_e^5/15."""
    val, _ = integrate.dblquad(lambda th, e1: o16_pair_spectrum(e1, th, delta_e),
                               0.0, delta_e, 0.0, math.pi)
    return val


def o16_total_rate(delta_e_mev: float, r0_cm: float, z_charge: float) -> float:
    """Total pair-emission rate (1/s) from the closed-form integral:
    w = (4/(375 pi)) (Z alpha)^2 (dE r0/hbar c)^4 (dE/hbar).

    This problem is worked in Gaussian-style units (Z e^2/hbar c = Z alpha).
    """
    if delta_e_mev <= 2 * 0.511:
        raise DomainError("excitation below the pair threshold")
    alpha_g = 1.0 / 137.0
    hbar_c_mev_cm = 1.97327e-11
    hbar_mev_s = 6.58212e-22
    z_alpha = z_charge * alpha_g
    x = delta_e_mev * r0_cm / hbar_c_mev_cm
    return (4.0 / (375.0 * math.pi)) * z_alpha**2 * x**4 * (delta_e_mev / hbar_mev_s)


def o16_lifetime(delta_e_mev: float = 6.0, r0_cm: float = 4e-13,
                 z_charge: float = 8.0, mode: str = "rounded") -> float:
    """Lifetime in seconds.  mode="rounded" follows the rounded order-of-
    magnitude chain
    (Z e^2/hbar c ~ 1/17, dE r0/hbar c ~ 1/10, tau = 10^10 r0/c);
    mode="exact" inverts the closed-form rate."""
    if mode == "rounded":
        c_cm_s = 2.99792458e10
        return 15.0 * 25.0 * math.pi * 1e5 * 17.0**2 * 0.25 * (r0_cm / c_cm_s)
    if mode == "exact":
        return 1.0 / o16_total_rate(delta_e_mev, r0_cm, z_charge)
    raise DomainError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# Dipole emission and the natural line shape.

def dipole_emission_rate(q_wavenumber: float, x12: float, alpha: float) -> float:
    """Total spontaneous-emission rate for a dipole matrix element of length
    x12: integrating e^2 q^3 |x12|^2 dOmega/(8 pi^2 hbar) over directions and
    polarizations gives (4/3) alpha q^3 |x12|^2."""
    if q_wavenumber < 0:
        raise DomainError("transition wavenumber must be nonnegative")
    return 4.0 * alpha * q_wavenumber**3 * x12**2 / 3.0


def dipole_emission_rate_quadrature(q_wavenumber: float, x12: float,
                                    alpha: float) -> float:
    """Direction/polarization sum done numerically: the dipole axis factor
    sum_pol |x_hat . e|^2 = 1 - cos^2(angle to k)."""
    e2 = 4.0 * math.pi * alpha

    def integrand(th):
        return (1.0 - math.cos(th) ** 2) * math.sin(th) * TWO_PI

    ang, _ = integrate.quad(integrand, 0.0, math.pi)
    return q_wavenumber / (8.0 * math.pi**2) * e2 * q_wavenumber**2 * x12**2 * ang


def line_shape(e0: float, en: float, de0: float, den: float,
               gamma0: float, gamma_n: float, k: float) -> float:
    """Natural line profile P(k) (Lorentzian), |Q|^2 set to 1:
    ((G0+Gn)/G0) / [(E0+dE0-En-dEn-k)^2 + (G0+Gn)^2/4]."""
    if gamma0 < 0 or gamma_n < 0:
        raise DomainError("level widths must be nonnegative")
    if gamma0 == 0:
        raise DomainError("upper level width must be nonzero for a stationary line")
    g = gamma0 + gamma_n
    detune = (e0 + de0) - (en + den) - k
    return (g / gamma0) / (detune**2 + 0.25 * g**2)


def line_shape_peak(e0: float, en: float, de0: float, den: float) -> float:
    """Maximum-intensity frequency: the level difference including shifts."""
    return (e0 + de0) - (en + den)


def line_shape_fwhm(gamma0: float, gamma_n: float) -> float:
    """Full width at half maximum: the sum of the two level widths."""
    return gamma0 + gamma_n
