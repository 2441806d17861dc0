"""Physical constants profiles and run configuration.

Internally everything is computed in natural units (hbar = c = 1, electron
mass = 1, Heaviside-Lorentz charge e^2 = 4*pi*alpha).  The profiles below
only matter when converting results to laboratory units: frequencies in
megacycles (Mc = MHz), lifetimes in seconds, cross sections in cm^2.

Two profiles are shipped:

* "modern"  -- alpha = 1/137.036; default for new work.
* "1951"    -- alpha = 1/137 with mc^2 tied to the Rydberg by
               mc^2 = 2 * 137^2 * Ry, which reproduces the golden numbers
               (136 Mc, 1040 Mc, 1051 Mc, 1600 Mc, -27 Mc).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

from .errors import DomainError

# Laboratory anchors (Hz).
RYDBERG_HZ = 3.289842e15
MC2_HZ_MODERN = 1.235590e20


@dataclass(frozen=True)
class Constants:
    """One set of conversion constants; physics in natural units needs only alpha."""

    name: str
    alpha: float
    rydberg_hz: float
    mc2_hz: float

    @property
    def ry_over_mc2(self) -> float:
        return self.rydberg_hz / self.mc2_hz

    @property
    def mc2_over_ry(self) -> float:
        return self.mc2_hz / self.rydberg_hz

    @property
    def hbar_over_mc2_s(self) -> float:
        """hbar/mc^2 in seconds: the natural time unit."""
        return 1.0 / (2.0 * math.pi * self.mc2_hz)

    @property
    def mc2_mev(self) -> float:
        """Electron rest energy in MeV (via h = 4.135667696e-15 eV s)."""
        return self.mc2_hz * 4.135667696e-21

    @property
    def r0_cm(self) -> float:
        """Classical electron radius alpha*hbar/(m c) in cm."""
        c_cm_s = 2.99792458e10
        return self.alpha * c_cm_s * self.hbar_over_mc2_s

    def frequency_mc(self, energy_natural: float) -> float:
        """Convert an energy in units of mc^2 to a frequency in megacycles."""
        return energy_natural * self.mc2_hz / 1e6

    def rydberg_natural(self) -> float:
        """The Rydberg energy in units of mc^2 (profile-consistent)."""
        return self.ry_over_mc2


MODERN = Constants(name="modern", alpha=1.0 / 137.036,
                   rydberg_hz=RYDBERG_HZ, mc2_hz=MC2_HZ_MODERN)

# mc^2 = 2 * 137^2 * Ry keeps the era arithmetic (R*K_H = alpha^2/8,
# K = mc^2) exact when reproducing the historical frequency values.
ERA_1951 = Constants(name="1951", alpha=1.0 / 137.0,
                     rydberg_hz=RYDBERG_HZ, mc2_hz=2.0 * 137.0**2 * RYDBERG_HZ)

PROFILES = {"modern": MODERN, "1951": ERA_1951}


def get_profile(name: str) -> Constants:
    try:
        return PROFILES[name]
    except KeyError:
        raise DomainError(f"unknown constants profile {name!r}; "
                          f"choose one of {sorted(PROFILES)}") from None


def default_profile() -> Constants:
    """Profile selection honoring the QED51_CONSTANTS environment variable."""
    return get_profile(os.environ.get("QED51_CONSTANTS", "modern"))


@dataclass
class RunConfig:
    """CLI run configuration."""

    constants: Constants = field(default_factory=default_profile)
    alpha_override: float | None = None
    output_format: str = "text"     # csv | json | text
    units: str = "natural"          # natural | SI | MeV | megacycles

    def __post_init__(self):
        alpha = self.alpha
        if not 0.0 < alpha < 0.1:
            raise DomainError(f"alpha = {alpha} outside (0, 0.1)")
        if self.output_format not in ("csv", "json", "text"):
            raise DomainError(f"unknown output format {self.output_format!r}")
        if self.units not in ("natural", "SI", "MeV", "megacycles"):
            raise DomainError(f"unknown unit system {self.units!r}")

    @property
    def alpha(self) -> float:
        return self.alpha_override if self.alpha_override is not None else self.constants.alpha
