"""Core data model and direct evaluation of the Bessel beam field.

The field of a monochromatic zeroth-order Bessel beam with cone angle theta,
in units with c = 1, is

    Phi(rho, z, t) = exp(i*omega*cos(theta)*z - i*omega*t) * J_0(omega*sin(theta)*rho)

All wave vectors live on the cone k_z = omega*cos(theta),
k_rho = omega*sin(theta); sin(theta) is always the nonnegative root.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .specfun import bessel_j0

__all__ = [
    "FieldPoint",
    "SphericalView",
    "BeamParams",
    "DispersionModel",
    "vacuum",
    "constant",
    "cauchy",
    "to_spherical",
    "eval_direct",
    "eval_direct_dispersive",
]


@dataclass(frozen=True)
class FieldPoint:
    """Cylindrical space-time point: axial z, transverse rho >= 0, time t."""

    z: float
    rho: float
    t: float

    def __post_init__(self):
        if self.rho < 0:
            raise ValueError(f"rho must be nonnegative: {self.rho!r}")


@dataclass(frozen=True)
class SphericalView:
    """Spherical companions of a field point.

    r = sqrt(z^2 + rho^2), cos_eta = z/r, cos_gamma = t/r.  cos_gamma is
    deliberately unbounded (|t| > r is a real regime; support predicates
    deal with it).  At the origin r = 0 both cosines are set by convention
    and ``degenerate`` is raised.
    """

    r: float
    cos_eta: float
    cos_gamma: float
    degenerate: bool = False


@dataclass(frozen=True)
class BeamParams:
    """Angular frequency omega (sign allowed) and cone angle via cos_theta."""

    omega: float
    cos_theta: float

    def __post_init__(self):
        if not np.isfinite(self.omega):
            raise ValueError(f"omega must be finite: {self.omega!r}")
        if abs(self.cos_theta) > 1.0:
            raise ValueError(f"cos_theta outside [-1, 1]: {self.cos_theta!r}")

    @property
    def sin_theta(self) -> float:
        return float(np.sqrt(max(0.0, 1.0 - self.cos_theta * self.cos_theta)))

    @property
    def k_z(self) -> float:
        return self.omega * self.cos_theta

    @property
    def k_rho(self) -> float:
        return self.omega * self.sin_theta


class DispersionModel:
    """Map omega -> refractive index n(omega)."""

    def evaluate(self, omega: float) -> float:
        raise NotImplementedError


@dataclass(frozen=True)
class _Vacuum(DispersionModel):
    def evaluate(self, omega: float) -> float:
        return 1.0


@dataclass(frozen=True)
class _ConstantIndex(DispersionModel):
    n0: float

    def evaluate(self, omega: float) -> float:
        return self.n0


@dataclass(frozen=True)
class _CauchyIndex(DispersionModel):
    """n(omega) = a + b*omega^2, the Cauchy dispersion law written in
    frequency (b/lambda^2 with lambda ~ 1/omega at c = 1)."""

    a: float
    b: float

    def evaluate(self, omega: float) -> float:
        n = self.a + self.b * omega * omega
        if not np.isfinite(n) or n <= 0:
            raise ValueError(
                f"cauchy model left the physical range at omega={omega!r}: n={n!r}")
        return n


def vacuum() -> DispersionModel:
    return _Vacuum()


def constant(n0: float) -> DispersionModel:
    if not np.isfinite(n0) or n0 <= 0:
        raise ValueError(f"constant index must be positive: {n0!r}")
    return _ConstantIndex(n0=float(n0))


def cauchy(a: float, b: float) -> DispersionModel:
    if not np.isfinite(a) or a <= 0:
        raise ValueError(f"cauchy coefficient a must be positive: {a!r}")
    return _CauchyIndex(a=float(a), b=float(b))


def to_spherical(p: FieldPoint) -> SphericalView:
    """Spherical view of a field point; origin gets the (1, 0) convention."""
    r = float(np.hypot(p.z, p.rho))
    if r == 0.0:
        return SphericalView(r=0.0, cos_eta=1.0, cos_gamma=0.0, degenerate=True)
    return SphericalView(r=r, cos_eta=p.z / r, cos_gamma=p.t / r)


def eval_direct(b: BeamParams, p: FieldPoint) -> complex:
    """Direct (closed-form) beam field at one point; |result| <= 1."""
    phase = b.omega * b.cos_theta * p.z - b.omega * p.t
    return complex(np.exp(1j * phase) * bessel_j0(b.omega * b.sin_theta * p.rho))


def eval_direct_dispersive(b: BeamParams, m: DispersionModel,
                           p: FieldPoint) -> complex:
    """Direct field with refractive index: spatial wave numbers scale by
    n(omega), the time factor keeps the bare omega."""
    om_eff = m.evaluate(b.omega) * b.omega
    phase = om_eff * b.cos_theta * p.z - b.omega * p.t
    return complex(np.exp(1j * phase) * bessel_j0(om_eff * b.sin_theta * p.rho))
