"""SI inputs, physical constants, and the dimensionless reduction.

Every formula in this package collapses to four dimensionless groups,

    x    = omega0 * c / a        (atom transition frequency)
    y    = nu * c / a            (field mode frequency)
    zeta = a * z0 / c**2         (mirror / atom position)
    eps  = beta * hbar**2 * nu**2 / c**2   (GUP strength)

so SI quantities appear only at this boundary.  All downstream physics
consumes :class:`DimensionlessConfig`.

The first-order treatment of the GUP deformation is trusted only for
eps well below one; construction of a :class:`DimensionlessConfig`
enforces eps < 0.1.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "PhysicalConstants",
    "CODATA",
    "PhysicalConfig",
    "DimensionlessConfig",
    "to_dimensionless",
    "physical_from_dimensionless",
    "validate_physical",
    "EPS_GUARD",
]

# Hard validity guard on the dimensionless GUP strength: the wavenumber and
# the closed forms are first-order in eps and not trustworthy beyond this.
EPS_GUARD = 0.1


@dataclass(frozen=True)
class PhysicalConstants:
    """Fundamental constants in SI units (CODATA 2018 values).

    c           speed of light, m/s
    hbar        reduced Planck constant, J*s
    k_B         Boltzmann constant, J/K
    planck_mass Planck mass M_P, kg
    """

    c: float = 299792458.0
    hbar: float = 1.054571817e-34
    k_B: float = 1.380649e-23
    planck_mass: float = 2.176434e-8

    def __post_init__(self) -> None:
        for name in ("c", "hbar", "k_B", "planck_mass"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"constant {name} must be strictly positive")


#: Shared default constant set.
CODATA = PhysicalConstants()


@dataclass(frozen=True)
class PhysicalConfig:
    """System parameters in SI units.

    a       proper acceleration, m/s^2
    omega0  atomic transition angular frequency, rad/s
    nu      field mode angular frequency, rad/s
    z0      mirror (or atom) position coordinate, m
    g       atom-field coupling, 1/s
    beta    GUP parameter, (kg*m/s)^-2
    """

    a: float
    omega0: float
    nu: float
    z0: float
    g: float = 1.0
    beta: float = 0.0

    def __post_init__(self) -> None:
        # Hard invariants only; the case-specific wedge bound z0 < c^2/a is
        # reported by validate_physical and enforced where it applies.
        for name in ("a", "omega0", "nu", "z0", "g"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be strictly positive")
        if not self.beta >= 0.0:
            raise ValueError("beta must be nonnegative")


@dataclass(frozen=True)
class DimensionlessConfig:
    """The four dimensionless groups every probability formula reduces to."""

    x: float
    y: float
    zeta: float
    eps: float = 0.0

    def __post_init__(self) -> None:
        if not self.x > 0.0:
            raise ValueError("x must be strictly positive")
        if not self.y > 0.0:
            raise ValueError("y must be strictly positive")
        if not self.zeta > 0.0:
            raise ValueError("zeta must be strictly positive")
        if not 0.0 <= self.eps < EPS_GUARD:
            raise ValueError(
                f"eps={self.eps!r}: perturbative regime violated (need 0 <= eps < {EPS_GUARD})"
            )


def validate_physical(p: PhysicalConfig, k: PhysicalConstants = CODATA) -> list[str]:
    """Collect invariant violations of a physical configuration.

    Returns an empty list iff the configuration is valid.  Each entry names
    the offending field and the failed bound.  Total function: never raises.

    The bound z0 < c^2/a applies to the accelerating-mirror configuration,
    where the static atom must sit inside the right Rindler wedge of the
    mirror trajectory.
    """
    problems: list[str] = []
    for name in ("a", "omega0", "nu", "z0", "g"):
        value = getattr(p, name)
        if not value > 0.0:
            problems.append(f"{name}={value!r} violates {name} > 0")
    if not p.beta >= 0.0:
        problems.append(f"beta={p.beta!r} violates beta >= 0")
    if p.a > 0.0 and p.z0 > 0.0 and not p.z0 < k.c**2 / p.a:
        problems.append(
            f"z0={p.z0!r} violates z0 < c^2/a = {k.c**2 / p.a!r} (mirror-accelerating case)"
        )
    return problems


def to_dimensionless(p: PhysicalConfig, k: PhysicalConstants = CODATA) -> DimensionlessConfig:
    """Reduce SI parameters to the four dimensionless groups.

    Rejects nonpositive inputs; rejects eps >= 0.1 with a perturbative-regime
    error (raised by the DimensionlessConfig constructor).
    """
    for name in ("a", "omega0", "nu", "z0", "g"):
        if not getattr(p, name) > 0.0:
            raise ValueError(f"{name} must be strictly positive")
    if not p.beta >= 0.0:
        raise ValueError("beta must be nonnegative")
    return DimensionlessConfig(
        x=p.omega0 * k.c / p.a,
        y=p.nu * k.c / p.a,
        zeta=p.a * p.z0 / k.c**2,
        eps=p.beta * k.hbar**2 * p.nu**2 / k.c**2,
    )


def physical_from_dimensionless(
    d: DimensionlessConfig,
    reference_acceleration: float,
    k: PhysicalConstants = CODATA,
    g: float = 1.0,
) -> PhysicalConfig:
    """Instantiate SI parameters realizing the given dimensionless groups.

    The dimensionless groups fix the physics only up to one overall scale;
    `reference_acceleration` (m/s^2) pins it.  Round-trips with
    :func:`to_dimensionless` up to floating-point rounding.
    """
    if not reference_acceleration > 0.0:
        raise ValueError("reference_acceleration must be strictly positive")
    a = reference_acceleration
    nu = d.y * a / k.c
    beta = d.eps * k.c**2 / (k.hbar**2 * nu**2) if d.eps > 0.0 else 0.0
    return PhysicalConfig(
        a=a,
        omega0=d.x * a / k.c,
        nu=nu,
        z0=d.zeta * k.c**2 / a,
        g=g,
        beta=beta,
    )


def nu_tilde(d: DimensionlessConfig) -> float:
    """GUP-shifted mode frequency y*(1 - eps), in units of a/c."""
    return d.y * (1.0 - d.eps)


def nu_bar(d: DimensionlessConfig) -> float:
    """GUP-shifted photon frequency y*(1 - eps/2), in units of a/c."""
    return d.y * (1.0 - 0.5 * d.eps)
