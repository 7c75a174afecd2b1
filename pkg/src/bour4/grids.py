"""Uniform parameter grids for residual sweeps and meshes."""

from __future__ import annotations

from dataclasses import dataclass

from .families import HelicoidSpec

#: Fraction of the span trimmed from each end of a declared domain before
#: sweeping, so grids stay clear of endpoint singularities.
EDGE_SHRINK = 0.02


@dataclass(frozen=True)
class Grid:
    u0: float
    u1: float
    v0: float
    v1: float
    nu: int = 33
    nv: int = 33

    def us(self) -> list[float]:
        step = (self.u1 - self.u0) / (self.nu - 1)
        return [self.u0 + step * i for i in range(self.nu)]

    def vs(self) -> list[float]:
        step = (self.v1 - self.v0) / (self.nv - 1)
        return [self.v0 + step * j for j in range(self.nv)]

    def describe(self) -> dict:
        return {"u": [self.u0, self.u1], "v": [self.v0, self.v1],
                "nu": self.nu, "nv": self.nv}


def shrunk(a: float, b: float, fraction: float = EDGE_SHRINK) -> tuple[float, float]:
    pad = (b - a) * fraction
    return a + pad, b - pad


def grid_for(spec: HelicoidSpec, nu: int = 33, nv: int = 33,
             shrink: float = EDGE_SHRINK) -> Grid:
    u0, u1 = shrunk(*spec.domain, shrink)
    v0, v1 = shrunk(*spec.v_range, shrink)
    return Grid(u0, u1, v0, v1, nu, nv)
