from __future__ import annotations

from fractions import Fraction

import pytest

from cellmatch import (
    FileFormatError,
    HallCertificate,
    SubcomplexPair,
    betti_numbers,
    build_cw,
    complete_matching,
)
from cellmatch import io
from cellmatch.generators import circle, grid_square, torus7
from cellmatch.homology import Filtration
from cellmatch.subdivision import barycentric


def test_complex_roundtrip_simplicial(tmp_path):
    X = torus7()
    path = tmp_path / "t.json"
    io.save_complex(X, str(path))
    Y = io.load_complex(str(path))
    assert Y.cells() == X.cells()
    assert Y.kind == X.kind


def test_complex_roundtrip_with_coordinates(tmp_path):
    X = grid_square(2)
    path = tmp_path / "g.json"
    io.save_complex(X, str(path))
    Y = io.load_complex(str(path))
    assert Y.coordinates == X.coordinates
    assert Y.coordinates[4] == (Fraction(1), Fraction(1))


def test_complex_roundtrip_cw(tmp_path):
    X = build_cw([
        ("u", 0, []), ("v", 0, []),
        ("e", 1, ["u", "v"]), ("f", 1, ["u", "v"]),
        ("disk", 2, ["e", "f"]),
    ])
    path = tmp_path / "cw.json"
    io.save_complex(X, str(path))
    Y = io.load_complex(str(path))
    assert Y.cells() == X.cells()
    assert Y.hyperfaces("disk") == {"e", "f"}


def test_complex_roundtrip_subdivided(tmp_path):
    X2 = barycentric(circle(3)).subdivided
    path = tmp_path / "sd.json"
    io.save_complex(X2, str(path))
    Y = io.load_complex(str(path))
    assert Y.cells() == X2.cells()


def test_complex_rejects_floats():
    with pytest.raises(FileFormatError):
        io.decode_complex({
            "format": io.COMPLEX_FORMAT,
            "kind": "simplicial",
            "simplices": [[0, 1]],
            "coordinates": {"0": [0.5], "1": [1.5]},
        })


def test_complex_bad_format_tag():
    with pytest.raises(FileFormatError, match="format"):
        io.decode_complex({"format": "nope", "kind": "simplicial", "simplices": [[0]]})


def test_subcomplex_roundtrip(tmp_path):
    path = tmp_path / "sub.json"
    io.save_subcomplex(["0", "1", "0.1"], str(path), closure=False)
    cells, closure = io.load_subcomplex(str(path))
    assert set(cells) == {"0", "1", "0.1"}
    assert closure is False


def test_loop_roundtrip(tmp_path):
    from cellmatch import spanning_dual_loop

    X = circle(4)
    loop = spanning_dual_loop(X)
    path = tmp_path / "loop.json"
    io.save_loop(loop, str(path))
    back = io.load_loop(str(path))
    assert back.cells == loop.cells
    back.validate(X)


def test_matching_roundtrip_sorted(tmp_path):
    X = circle(4)
    m = complete_matching(SubcomplexPair(X))
    path = tmp_path / "m.json"
    io.save_matching(m, str(path))
    data = io.read_json(str(path))
    assert data["pairs"] == sorted(data["pairs"])
    back = io.load_matching(str(path))
    assert back == m


def test_certificate_roundtrip(tmp_path):
    cert = HallCertificate("even", frozenset({"a", "b"}), frozenset({"x"}), 1)
    path = tmp_path / "cert.json"
    io.save_certificate(cert, str(path))
    back = io.load_certificate(str(path))
    assert back == cert


def test_betti_roundtrip():
    bv = betti_numbers(SubcomplexPair(torus7()))
    back = io.decode_betti(io.encode_betti(bv))
    assert back == bv


def test_filtration_encode():
    filt = Filtration((frozenset(), frozenset({"0", "1", "0.1"})))
    obj = io.encode_filtration(filt)
    assert obj["stages"][1] == ["0", "0.1", "1"]
    assert io.decode_filtration(obj).stages[1] == filt.stages[1]


def test_subdivision_roundtrip(tmp_path):
    smap = barycentric(circle(3))
    obj = io.encode_subdivision(smap)
    back = io.decode_subdivision(obj, smap.source, smap.subdivided)
    assert back.carrier == smap.carrier


def test_atomic_write_leaves_no_temp(tmp_path):
    path = tmp_path / "out.json"
    io.write_json(str(path), {"x": 1})
    io.write_json(str(path), {"x": 2})
    assert io.read_json(str(path)) == {"x": 2}
    leftovers = [p for p in tmp_path.iterdir() if p.suffix == ".tmp"]
    assert not leftovers
