"""Sampled surface grids and OBJ/CSV export.

Plots are out of scope; meshes carry the geometry to external viewers.  OBJ
needs a 3D projection of the 4D vertices: either drop one coordinate
explicitly (``drop-k``) or drop the one that is constant across the mesh
(``drop-constant``, available exactly for hyperplanar surfaces).  The
dropped coordinate and the per-vertex scalar channels ride along in comment
lines.  CSV keeps everything: u, v, x1..x4, K, H1, H2, W per row.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, TextIO

import numpy as np

from .errors import DegenerateSurfaceError, NotSpacelikeError, ValidationError
from .grids import Grid
from .lorentz import Vec4
from .surfaces import SurfaceJet, curvature_report

CHANNEL_NAMES = ("K", "H1", "H2", "Hsup", "W")


@dataclass
class MeshGrid:
    grid: Grid
    vertices: list[Vec4]
    faces: list[tuple[int, int, int, int]]
    channels: dict[str, list[float]] = field(default_factory=dict)

    @property
    def nu(self) -> int:
        return self.grid.nu

    @property
    def nv(self) -> int:
        return self.grid.nv


def sample_mesh(jet_at: Callable[[float, float], SurfaceJet], grid: Grid) -> MeshGrid:
    """Evaluate a surface over the grid; curvature channels are nan off the
    spacelike locus."""
    vertices = []
    channels = {name: [] for name in CHANNEL_NAMES}
    for u in grid.us():
        for v in grid.vs():
            jet = jet_at(u, v)
            vertices.append(jet.X)
            try:
                rep = curvature_report(jet)
                row = (rep.K, rep.H1, rep.H2, rep.H_sup, rep.first.W)
            except (NotSpacelikeError, DegenerateSurfaceError):
                row = (math.nan, math.nan, math.nan, math.nan, math.nan)
            for name, val in zip(CHANNEL_NAMES, row):
                channels[name].append(val)
    faces = []
    nv = grid.nv
    for i in range(grid.nu - 1):
        for j in range(grid.nv - 1):
            a = i * nv + j
            faces.append((a, a + 1, a + nv + 1, a + nv))
    return MeshGrid(grid, vertices, faces, channels)


def resolve_projection(mesh: MeshGrid, mode: str, tol: float = 1e-9) -> int:
    """Index (0..3) of the coordinate to drop for a 3D projection.

    ``drop-k`` for k in 1..4 drops that coordinate; ``drop-constant`` finds
    the coordinate whose range over the mesh vanishes (within tol, relative
    to its size) and fails when no coordinate is constant.
    """
    if mode.startswith("drop-") and mode[5:] in ("1", "2", "3", "4"):
        return int(mode[5:]) - 1
    if mode != "drop-constant":
        raise ValidationError(
            f"unknown projection {mode!r} (use drop-constant or drop-1..drop-4)")
    arr = np.asarray(mesh.vertices)
    spread = arr.max(axis=0) - arr.min(axis=0)
    scale = np.maximum(1.0, np.abs(arr).max(axis=0))
    flat = np.flatnonzero(spread <= tol * scale)
    if flat.size == 0:
        raise ValidationError(
            "drop-constant: no coordinate is constant across the mesh "
            f"(smallest spread {spread.min():.3g})")
    return int(flat[np.argmin(spread[flat])])


def _fmt(x: float) -> str:
    return repr(float(x))


def write_obj(mesh: MeshGrid, out: TextIO, projection: str = "drop-constant") -> int:
    """Write a quad OBJ; returns the index of the dropped coordinate.

    Each vertex line is followed by a comment carrying the dropped
    coordinate and the scalar channels.
    """
    drop = resolve_projection(mesh, projection)
    keep = [k for k in range(4) if k != drop]
    out.write(f"# parametric surface mesh, {mesh.nu} x {mesh.nv} samples\n")
    out.write(f"# projection: dropped coordinate x{drop + 1}\n")
    out.write(f"# per-vertex comments: vd x{drop + 1} " + " ".join(CHANNEL_NAMES) + "\n")
    for idx, p in enumerate(mesh.vertices):
        coords = [p[k] for k in keep]
        out.write("v " + " ".join(_fmt(c) for c in coords) + "\n")
        extras = " ".join(_fmt(mesh.channels[name][idx]) for name in CHANNEL_NAMES)
        out.write(f"# vd {_fmt(p[drop])} {extras}\n")
    for a, b, c, d in mesh.faces:
        out.write(f"f {a + 1} {b + 1} {c + 1} {d + 1}\n")
    return drop


def write_csv(mesh: MeshGrid, out: TextIO) -> int:
    """Write one row per sample: u,v,x1,x2,x3,x4,K,H1,H2,W.  Returns row count."""
    out.write("u,v,x1,x2,x3,x4,K,H1,H2,W\n")
    rows = 0
    us, vs = mesh.grid.us(), mesh.grid.vs()
    for i, u in enumerate(us):
        for j, v in enumerate(vs):
            idx = i * len(vs) + j
            p = mesh.vertices[idx]
            ch = mesh.channels
            out.write(",".join(_fmt(x) for x in (
                u, v, p.x1, p.x2, p.x3, p.x4,
                ch["K"][idx], ch["H1"][idx], ch["H2"][idx], ch["W"][idx])) + "\n")
            rows += 1
    return rows
