"""JSON file formats for complexes, subcomplexes, loops, matchings,
certificates, Betti vectors, filtrations, and subdivision maps.

Every format carries a "format" tag; writers emit deterministic, sorted
output and write atomically (temp file plus rename). Rational numbers are
serialized as "p/q" strings; floats are rejected on input.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction

from .complexes import (
    CW,
    SIMPLICIAL,
    CellComplex,
    DualLoop,
    build_cw,
    from_simplices,
)
from .errors import FileFormatError
from .homology import BettiVector, Filtration
from .matching import HallCertificate, Matching
from .subdivision import SubdivisionMap

COMPLEX_FORMAT = "cellmatch-complex-v1"
SUB_FORMAT = "cellmatch-sub-v1"
LOOP_FORMAT = "cellmatch-loop-v1"
MATCHING_FORMAT = "cellmatch-matching-v1"
CERTIFICATE_FORMAT = "cellmatch-certificate-v1"
BETTI_FORMAT = "cellmatch-betti-v1"
FILTRATION_FORMAT = "cellmatch-filtration-v1"
SUBDIV_FORMAT = "cellmatch-subdiv-v1"


def _require_format(obj, expected: str):
    if not isinstance(obj, dict):
        raise FileFormatError(f"expected a JSON object with format {expected!r}")
    found = obj.get("format")
    if found != expected:
        raise FileFormatError(f"expected format {expected!r}, found {found!r}")


def _fraction_text(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _parse_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise FileFormatError("floating-point numbers are rejected; use 'p/q' text")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise FileFormatError(f"bad rational {value!r}") from exc


def _parse_token(text: str):
    return int(text) if text.lstrip("-").isdigit() else text


def write_json(path: str, obj) -> None:
    """Serialize atomically: write to a temp file, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            json.dump(obj, handle, indent=2, sort_keys=True)
            handle.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_json(path: str):
    with open(path, encoding="utf-8") as handle:
        try:
            return json.load(handle)
        except json.JSONDecodeError as exc:
            raise FileFormatError(f"{path}: invalid JSON ({exc})") from exc


# -- complexes ------------------------------------------------------------


def encode_complex(complex: CellComplex) -> dict:
    obj: dict = {"format": COMPLEX_FORMAT, "kind": complex.kind}
    if complex.kind == SIMPLICIAL:
        maximal = [
            [_token_text(t) for t in complex.vertices(c)]
            for c in complex.cells()
            if not complex.cofaces(c)
        ]
        obj["simplices"] = sorted(maximal)
    else:
        obj["cells"] = [
            {
                "id": c,
                "dim": complex.dim_of(c),
                "faces": sorted(complex.hyperfaces(c)),
            }
            for c in sorted(complex.cells())
        ]
    if complex.coordinates is not None:
        obj["coordinates"] = {
            str(token): [_fraction_text(x) for x in point]
            for token, point in sorted(
                complex.coordinates.items(), key=lambda kv: str(kv[0])
            )
        }
    return obj


def _token_text(token):
    return token if isinstance(token, int) else str(token)


def decode_complex(obj) -> CellComplex:
    _require_format(obj, COMPLEX_FORMAT)
    kind = obj.get("kind")
    coordinates = None
    if "coordinates" in obj:
        coordinates = {
            _parse_token(key): tuple(_parse_fraction(x) for x in point)
            for key, point in obj["coordinates"].items()
        }
    if kind == SIMPLICIAL:
        simplices = obj.get("simplices")
        if not isinstance(simplices, list):
            raise FileFormatError("simplicial complex file needs a 'simplices' list")
        for simplex in simplices:
            for t in simplex:
                if isinstance(t, float) or not isinstance(t, (int, str)):
                    raise FileFormatError("vertex tokens must be integers or strings")
        return from_simplices(simplices, coordinates=coordinates)
    if kind == CW:
        cells = obj.get("cells")
        if not isinstance(cells, list):
            raise FileFormatError("cw complex file needs a 'cells' list")
        records = []
        for record in cells:
            try:
                records.append((record["id"], record["dim"], record["faces"]))
            except (TypeError, KeyError) as exc:
                raise FileFormatError(f"bad cell record {record!r}") from exc
        return build_cw(records, coordinates=coordinates)
    raise FileFormatError(f"unknown complex kind {kind!r}")


def save_complex(complex: CellComplex, path: str) -> None:
    write_json(path, encode_complex(complex))


def load_complex(path: str) -> CellComplex:
    return decode_complex(read_json(path))


# -- subcomplexes ----------------------------------------------------------


def encode_subcomplex(cells, closure: bool = False) -> dict:
    return {"format": SUB_FORMAT, "cells": sorted(cells), "closure": bool(closure)}


def decode_subcomplex(obj) -> tuple[list[str], bool]:
    _require_format(obj, SUB_FORMAT)
    cells = obj.get("cells")
    if not isinstance(cells, list):
        raise FileFormatError("subcomplex file needs a 'cells' list")
    return list(cells), bool(obj.get("closure", False))


def save_subcomplex(cells, path: str, closure: bool = False) -> None:
    write_json(path, encode_subcomplex(cells, closure))


def load_subcomplex(path: str) -> tuple[list[str], bool]:
    return decode_subcomplex(read_json(path))


# -- dual loops -------------------------------------------------------------


def encode_loop(loop: DualLoop) -> dict:
    return {"format": LOOP_FORMAT, "cells": list(loop.cells)}


def decode_loop(obj) -> DualLoop:
    _require_format(obj, LOOP_FORMAT)
    cells = obj.get("cells")
    if not isinstance(cells, list) or not all(isinstance(c, str) for c in cells):
        raise FileFormatError("loop file needs a 'cells' list of ids")
    return DualLoop(tuple(cells))


def save_loop(loop: DualLoop, path: str) -> None:
    write_json(path, encode_loop(loop))


def load_loop(path: str) -> DualLoop:
    return decode_loop(read_json(path))


# -- matchings and certificates ---------------------------------------------


def encode_matching(matching: Matching) -> dict:
    return {
        "format": MATCHING_FORMAT,
        "relative_to": sorted(matching.relative_to),
        "pairs": [list(p) for p in matching.sorted_pairs()],
    }


def decode_matching(obj) -> Matching:
    _require_format(obj, MATCHING_FORMAT)
    pairs = obj.get("pairs")
    if not isinstance(pairs, list):
        raise FileFormatError("matching file needs a 'pairs' list")
    for p in pairs:
        if not isinstance(p, list) or len(p) != 2:
            raise FileFormatError(f"bad matching pair {p!r}")
    return Matching(
        [tuple(p) for p in pairs], relative_to=obj.get("relative_to", ())
    )


def save_matching(matching: Matching, path: str) -> None:
    write_json(path, encode_matching(matching))


def load_matching(path: str) -> Matching:
    return decode_matching(read_json(path))


def encode_certificate(certificate: HallCertificate) -> dict:
    return {
        "format": CERTIFICATE_FORMAT,
        "side": certificate.side,
        "A": sorted(certificate.cells),
        "IA": sorted(certificate.neighborhood),
        "deficiency": certificate.deficiency,
    }


def decode_certificate(obj) -> HallCertificate:
    _require_format(obj, CERTIFICATE_FORMAT)
    try:
        return HallCertificate(
            obj["side"],
            frozenset(obj["A"]),
            frozenset(obj["IA"]),
            int(obj["deficiency"]),
        )
    except (TypeError, KeyError) as exc:
        raise FileFormatError("bad certificate file") from exc


def save_certificate(certificate: HallCertificate, path: str) -> None:
    write_json(path, encode_certificate(certificate))


def load_certificate(path: str) -> HallCertificate:
    return decode_certificate(read_json(path))


# -- homology artifacts -------------------------------------------------------


def encode_betti(betti: BettiVector) -> dict:
    return {"format": BETTI_FORMAT, "field": betti.field, "betti": list(betti.betti)}


def decode_betti(obj) -> BettiVector:
    _require_format(obj, BETTI_FORMAT)
    try:
        return BettiVector(tuple(int(b) for b in obj["betti"]), obj["field"])
    except (TypeError, KeyError) as exc:
        raise FileFormatError("bad betti file") from exc


def encode_filtration(filtration: Filtration) -> dict:
    return {
        "format": FILTRATION_FORMAT,
        "stages": [sorted(stage) for stage in filtration.stages],
    }


def decode_filtration(obj) -> Filtration:
    _require_format(obj, FILTRATION_FORMAT)
    stages = obj.get("stages")
    if not isinstance(stages, list):
        raise FileFormatError("filtration file needs a 'stages' list")
    return Filtration(tuple(frozenset(stage) for stage in stages))


# -- subdivision maps ---------------------------------------------------------


def encode_subdivision(smap: SubdivisionMap) -> dict:
    return {"format": SUBDIV_FORMAT, "carrier": dict(sorted(smap.carrier.items()))}


def decode_subdivision(obj, source: CellComplex, subdivided: CellComplex) -> SubdivisionMap:
    """Rebuild a subdivision map from its carrier table and the two
    complexes (stored in their own complex files); validates the result."""
    _require_format(obj, SUBDIV_FORMAT)
    carrier = obj.get("carrier")
    if not isinstance(carrier, dict):
        raise FileFormatError("subdivision file needs a 'carrier' object")
    smap = SubdivisionMap(source, subdivided, dict(carrier))
    smap.validate()
    return smap
