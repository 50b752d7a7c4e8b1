"""Equivalence-violation diagnostics and the GUP-parameter bound.

At equal atom and photon frequencies (x = y) the two excitation
probabilities coincide exactly when eps = 0.  For eps > 0 their spatial
oscillations differ; the mismatch of the spatial parts is measured by

    Q(zeta, eps) = eps / (2 zeta^2) + (eps / (2 zeta)) ln(zeta)

and the ratio R = 1 + Q.  Q is strictly positive and strictly decreasing
in zeta for eps > 0 (the two terms never cancel: 1/zeta + ln zeta >= 1).

Requiring the damping correction eps y / (x zeta) to stay small bounds
the GUP parameter:  beta < eta0 * a z0 omega0 / (hbar^2 nu^3).  For
nu = omega0 = 2 pi x 1 GHz and a z0 = c^2 this lands at ~1e67 in
(M_P c)^-2 units; reading the gigahertz as an angular frequency instead
gives ~3e68, so both conventions are worth reporting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .closed_form import p1_closed, p2_closed
from .units import CODATA, DimensionlessConfig, PhysicalConstants

__all__ = [
    "ViolationReport",
    "BetaBound",
    "q_parameter",
    "violation_parameter",
    "beta_bound",
    "symmetry_defect_scan",
]


@dataclass(frozen=True)
class ViolationReport:
    """Mismatch diagnostics between the two probabilities at x = y.

    q_value        spatial-mismatch parameter Q
    ratio          R = 1 + Q
    phase_defect   raw phase difference of the two sin^2 arguments, rad
    damping_defect ratio of the two damping factors
    planck_defect  ratio of the two Planck factors
    eps            GUP strength the report was computed at

    The three factor defects need the accelerating-mirror closed form and
    are None when zeta >= 1 places the atom outside its domain.
    """

    q_value: float
    ratio: float
    eps: float
    phase_defect: float | None
    damping_defect: float | None
    planck_defect: float | None


@dataclass(frozen=True)
class BetaBound:
    """Upper bound on the GUP parameter.

    beta_max_si            bound in (kg m/s)^-2
    beta_max_planck_units  the same in (M_P c)^-2 units
    tolerance_factor       the "much less than" threshold eta0 applied
    """

    beta_max_si: float
    beta_max_planck_units: float
    tolerance_factor: float


def q_parameter(eps: float, zeta: float) -> float:
    """Spatial-mismatch parameter Q(zeta, eps); exactly linear in eps."""
    if not zeta > 0.0:
        raise ValueError("zeta must be strictly positive")
    if not eps >= 0.0:
        raise ValueError("eps must be nonnegative")
    return eps / (2.0 * zeta**2) + (eps / (2.0 * zeta)) * math.log(zeta)


def violation_parameter(d: DimensionlessConfig) -> ViolationReport:
    """Equivalence-violation report at equal frequencies.

    Rejects x != y: the comparison is defined at nu = omega0 only.
    """
    if d.x != d.y:
        raise ValueError("comparison defined at nu = omega0 only (need x == y)")
    q_value = q_parameter(d.eps, d.zeta)
    phase_defect = damping_defect = planck_defect = None
    if d.zeta < 1.0:
        one = p1_closed(d)
        two = p2_closed(d)
        phase_defect = two.phase_argument - one.phase_argument
        damping_defect = two.damping / one.damping
        planck_defect = two.planck / one.planck
    return ViolationReport(
        q_value=q_value,
        ratio=1.0 + q_value,
        eps=d.eps,
        phase_defect=phase_defect,
        damping_defect=damping_defect,
        planck_defect=planck_defect,
    )


def beta_bound(
    a: float,
    omega0: float,
    nu: float,
    z0: float,
    k: PhysicalConstants = CODATA,
    eta0: float = 1.0,
) -> BetaBound:
    """Bound beta_max = eta0 * a z0 omega0 / (hbar^2 nu^3).

    Keeps the GUP damping correction of the accelerating-mirror
    probability below eta0.  Frequencies are angular (rad/s); apply the
    2 pi conversion first when inputs are ordinary frequencies.
    """
    for name, value in (("a", a), ("omega0", omega0), ("nu", nu), ("z0", z0), ("eta0", eta0)):
        if not value > 0.0:
            raise ValueError(f"{name} must be strictly positive")
    beta_si = eta0 * a * z0 * omega0 / (k.hbar**2 * nu**3)
    return BetaBound(
        beta_max_si=beta_si,
        beta_max_planck_units=beta_si * (k.planck_mass * k.c) ** 2,
        tolerance_factor=eta0,
    )


def symmetry_defect_scan(
    base: DimensionlessConfig, eps_values: list[float]
) -> list[ViolationReport]:
    """Violation reports across a list of GUP strengths at fixed (x, y, zeta)."""
    if base.x != base.y:
        raise ValueError("comparison defined at nu = omega0 only (need x == y)")
    reports = []
    for eps in eps_values:
        d = DimensionlessConfig(x=base.x, y=base.y, zeta=base.zeta, eps=eps)
        reports.append(violation_parameter(d))
    return reports
