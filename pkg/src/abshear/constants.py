"""
Physical constants used throughout the package.

Values are the CODATA 2018 recommended values (SI). They are fixed here on
purpose so that every number the package produces is reproducible bit for
bit; there is no mechanism for overriding them at runtime.
"""

from dataclasses import dataclass

__all__ = ["PhysicalConstants", "CONSTANTS"]


@dataclass(frozen=True)
class PhysicalConstants:
    """Elementary charge (C), electron mass (kg) and reduced Planck constant (J s)."""

    e: float = 1.602176634e-19
    m: float = 9.1093837015e-31
    hbar: float = 1.054571817e-34

    def __post_init__(self):
        for name in ("e", "m", "hbar"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be strictly positive")

    @property
    def charge_to_mass(self) -> float:
        return self.e / self.m


CONSTANTS = PhysicalConstants()
