import io
import math

import pytest

from bour4.errors import ValidationError
from bour4.families import helicoid_jet, make_helicoid
from bour4.grids import Grid
from bour4.meshes import (CHANNEL_NAMES, resolve_projection, sample_mesh,
                          write_csv, write_obj)

SPEC = make_helicoid("I", 1.0, {"x": "u", "z": "c1", "w": "0"},
                     (1.5, 3.0), constants={"c1": 2.0})
GRID = Grid(1.55, 2.95, 0.0, 6.0, 7, 5)


def jet_at(u, v):
    return helicoid_jet(SPEC, u, v)


class TestSampleMesh:
    def test_counts_and_channels(self):
        mesh = sample_mesh(jet_at, GRID)
        assert len(mesh.vertices) == 7 * 5
        assert len(mesh.faces) == 6 * 4
        for name in CHANNEL_NAMES:
            assert len(mesh.channels[name]) == len(mesh.vertices)
        flat = [i for face in mesh.faces for i in face]
        assert min(flat) == 0 and max(flat) == len(mesh.vertices) - 1

    def test_channels_nan_off_spacelike_locus(self):
        bad = make_helicoid("II", 1.0, {"x": "0", "y": "0", "w": "u"}, (0.5, 2.0))
        mesh = sample_mesh(lambda u, v: helicoid_jet(bad, u, v),
                           Grid(0.6, 1.9, -0.3, 0.3, 3, 3))
        assert all(math.isnan(k) for k in mesh.channels["K"])


class TestProjection:
    def test_drop_constant_finds_frozen_coordinate(self):
        mesh = sample_mesh(jet_at, GRID)
        assert resolve_projection(mesh, "drop-constant") == 2  # z frozen at c1

    def test_drop_k(self):
        mesh = sample_mesh(jet_at, GRID)
        assert resolve_projection(mesh, "drop-4") == 3

    def test_unknown_mode(self):
        mesh = sample_mesh(jet_at, GRID)
        with pytest.raises(ValidationError):
            resolve_projection(mesh, "orthographic")


class TestWriters:
    def test_obj_structure(self):
        mesh = sample_mesh(jet_at, GRID)
        buf = io.StringIO()
        dropped = write_obj(mesh, buf, "drop-constant")
        assert dropped == 2
        lines = buf.getvalue().splitlines()
        assert sum(1 for l in lines if l.startswith("v ")) == 35
        assert sum(1 for l in lines if l.startswith("f ")) == 24
        assert sum(1 for l in lines if l.startswith("# vd ")) == 35

    def test_csv_row_count(self):
        mesh = sample_mesh(jet_at, GRID)
        buf = io.StringIO()
        assert write_csv(mesh, buf) == 35
        assert len(buf.getvalue().splitlines()) == 36
