"""Poincare-metric primitives on the unit disk.

The radial distance function is ``sigma(x) = log((1+x)/(1-x))`` with inverse
``tanh(t/2)``; ``sigma(|z|)`` is the Poincare distance from 0 to ``z``.  The
Kobayashi distance coincides with the Poincare distance on the disk, and on a
subdomain it dominates the ambient one, which is what the upper-estimate
helpers below exploit.

All functions are pure and operate on doubles.  The inverse-then-forward
identity ``sigma(sigma_inv(t)) = t`` is limited by conditioning: the rounding
of ``tanh(t/2)`` to a double costs about ``cosh(t/2)**2 * 2**-52`` in ``t``
(about 2e-8 at t = 20), so it holds to 1e-12 only for t up to roughly 10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .domains import PlanarFactor, PuncturedDisk, membership, punctures
from .errors import DomainError, UnsupportedGeometryError

# Poincare distances are plain nonnegative finite floats.
HyperbolicValue = float

_ONE_BELOW_1 = math.nextafter(1.0, 0.0)


def sigma(x: float) -> HyperbolicValue:
    """Poincare distance from 0 to a point at radius ``x``: log((1+x)/(1-x))."""
    x = float(x)
    if not (0.0 <= x < 1.0):
        raise DomainError(f"sigma requires 0 <= x < 1, got {x}")
    # log1p form keeps relative accuracy as x -> 1.
    return math.log1p(2.0 * x / (1.0 - x))


def sigma_inv(t: HyperbolicValue) -> float:
    """Radius at Poincare distance ``t`` from 0: tanh(t/2)."""
    t = float(t)
    if not (t >= 0.0) or math.isinf(t):
        raise DomainError(f"sigma_inv requires a finite t >= 0, got {t}")
    x = math.tanh(0.5 * t)
    # tanh rounds to 1.0 for t >= ~38.12; clamp to keep the codomain [0, 1).
    return x if x < 1.0 else _ONE_BELOW_1


@dataclass(frozen=True)
class MobiusAut:
    """Disk automorphism ``zeta -> e^{i theta} (zeta - a) / (1 - conj(a) zeta)``.

    ``a`` is the zero of the map.  Radial quantities are independent of
    ``theta``; it is carried so that witnesses are fully specified maps.
    """

    a: complex
    theta: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "theta", float(self.theta))
        if not abs(self.a) < 1:
            raise DomainError(f"Mobius parameter must satisfy |a| < 1, got {self.a}")
        if not math.isfinite(self.theta):
            raise DomainError("rotation angle must be finite")

    def __call__(self, zeta):
        return mobius_eval(self, zeta)

    def inverse(self) -> "MobiusAut":
        """Exact inverse automorphism: zero at ``-e^{i theta} a``, rotation ``-theta``."""
        phase = complex(math.cos(self.theta), math.sin(self.theta))
        return MobiusAut(-phase * self.a, -self.theta)


def mobius_eval(m: MobiusAut, zeta):
    """Evaluate the automorphism at ``zeta`` (scalar or ndarray, |zeta| <= 1)."""
    w = (zeta - m.a) / (1.0 - m.a.conjugate() * zeta)
    if m.theta != 0.0:
        w = complex(math.cos(m.theta), math.sin(m.theta)) * w
    return w


def _pseudo_hyperbolic(a: complex, b: complex) -> float:
    u = abs((b - a) / (1.0 - a.conjugate() * b))
    # Interior inputs give u < 1 mathematically; guard the last-ulp rounding.
    return u if u < 1.0 else _ONE_BELOW_1


def poincare_distance(a: complex, b: complex) -> HyperbolicValue:
    """Poincare distance between two points of the unit disk."""
    a, b = complex(a), complex(b)
    if not (abs(a) < 1 and abs(b) < 1):
        raise DomainError(f"poincare_distance requires both points inside the disk: {a}, {b}")
    return sigma(_pseudo_hyperbolic(a, b))


def kob_disk(a: complex, b: complex) -> HyperbolicValue:
    """Kobayashi distance on the unit disk (equals the Poincare distance)."""
    return poincare_distance(a, b)


def mobius_circle_min_modulus(a: complex, r: float) -> float:
    """Minimum of ``|mobius_eval((a, theta), zeta)|`` over the circle ``|zeta| = r``.

    The circle is a hyperbolic circle centered at 0, so the minimum is attained
    radially and equals ``||a| - r| / (1 - r |a|)``, independent of ``theta``.
    """
    a = complex(a)
    r = float(r)
    if not abs(a) < 1:
        raise DomainError(f"|a| < 1 required, got {a}")
    if not (0.0 < r < 1.0):
        raise DomainError(f"circle radius must lie in (0, 1), got {r}")
    return abs(abs(a) - r) / (1.0 - r * abs(a))


def kob_filled(factor: PlanarFactor, z: complex, puncture_index: int) -> HyperbolicValue:
    """Kobayashi distance from ``z`` to a puncture, measured in the filled factor.

    Exact only when restoring the selected puncture leaves the unit disk,
    i.e. for a single-puncture punctured disk.
    """
    ps = punctures(factor)
    if not ps:
        raise UnsupportedGeometryError(f"{type(factor).__name__} has no puncture to fill")
    if not (0 <= puncture_index < len(ps)):
        raise DomainError(f"puncture index {puncture_index} out of range")
    if len(ps) != 1:
        raise UnsupportedGeometryError(
            "filled domain is not the unit disk; use kob_upper_via_subdomain"
        )
    z = complex(z)
    if not membership(factor, z):
        raise DomainError(f"{z} is not a point of the factor")
    return kob_disk(z, ps[puncture_index])


def kob_upper_via_subdomain(factor: PlanarFactor, z: complex, p: complex) -> HyperbolicValue:
    """Upper estimate of the Kobayashi distance from ``z`` to ``p`` in the filled factor.

    Uses the largest catalog disk inside the filled domain that contains both
    points: the whole unit disk when ``p`` is the only puncture, otherwise the
    disk centered at ``p`` whose radius is limited by the remaining punctures
    and by the unit circle.  Inclusion of the disk makes the value an upper
    bound of the true distance.  ``z`` may equal ``p`` (distance 0).
    """
    z, p = complex(z), complex(p)
    ps = punctures(factor)
    if p not in ps:
        raise DomainError(f"{p} is not a puncture of the factor")
    if z != p and not membership(factor, z):
        raise DomainError(f"{z} is not a point of the factor")
    others = [q for q in ps if q != p]
    if not others:
        return kob_disk(z, p)
    rho = min(min(abs(q - p) for q in others), 1.0 - abs(p))
    if abs(z - p) >= rho:
        raise UnsupportedGeometryError(
            "no admissible subdomain disk contains both the point and the puncture"
        )
    return sigma(abs(z - p) / rho)
