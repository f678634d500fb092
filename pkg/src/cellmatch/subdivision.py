"""Barycentric subdivision with carrier tracking, and propagation of a
matching to the subdivided pair.

The subdivision is the order complex of the face poset: one new vertex
"b<cellid>" per cell, one simplex per chain of nested cells. The carrier
of a subdivided cell is the largest original cell in its chain, i.e. the
smallest original cell containing it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import CellComplex, SubcomplexPair, cell_id, from_simplices
from .errors import InvalidMatchingError, InvalidSubdivisionError
from .homology import match_acyclic_pair
from .matching import Matching, compose_matchings, validate_matching


@dataclass(frozen=True)
class SubdivisionMap:
    source: CellComplex
    subdivided: CellComplex
    carrier: dict[str, str]

    def cells_over(self, source_cells) -> frozenset[str]:
        """Subdivided cells whose carrier lies in ``source_cells``."""
        wanted = set(source_cells)
        return frozenset(c for c, s in self.carrier.items() if s in wanted)

    def validate(self) -> None:
        source, sub = self.source, self.subdivided
        for c in sub.cells():
            if c not in self.carrier:
                raise InvalidSubdivisionError(f"no carrier recorded for {c}")
        for c, s in self.carrier.items():
            if c not in sub:
                raise InvalidSubdivisionError(f"carrier names unknown cell {c}")
            if s not in source:
                raise InvalidSubdivisionError(f"carrier of {c} names unknown cell {s}")
        # monotone: the carrier of a face is a face of the carrier
        for c in sub.cells():
            s = self.carrier[c]
            allowed = source.faces(s) | {s}
            for f in sub.hyperfaces(c):
                if self.carrier[f] not in allowed:
                    raise InvalidSubdivisionError(
                        f"carrier not monotone at {f} < {c}"
                    )
        # the open cells carried by a given cell triangulate its interior
        per_cell: dict[str, int] = {s: 0 for s in source.cells()}
        for c, s in self.carrier.items():
            per_cell[s] += (-1) ** sub.dim_of(c)
        for s, chi in per_cell.items():
            if chi != (-1) ** source.dim_of(s):
                raise InvalidSubdivisionError(
                    f"cells carried by {s} have interior Euler count {chi}, "
                    f"expected {(-1) ** source.dim_of(s)}"
                )


def barycentric(complex: CellComplex) -> SubdivisionMap:
    """First barycentric subdivision with its carrier map."""
    chains_by_cell: dict[str, list[tuple[str, ...]]] = {}

    def chains_ending(cid: str) -> list[tuple[str, ...]]:
        cached = chains_by_cell.get(cid)
        if cached is not None:
            return cached
        out: list[tuple[str, ...]] = [(cid,)]
        for f in sorted(complex.faces(cid), key=complex.sort_key):
            out.extend(ch + (cid,) for ch in chains_ending(f))
        chains_by_cell[cid] = out
        return out

    all_chains: list[tuple[str, ...]] = []
    for cid in complex.cells():
        all_chains.extend(chains_ending(cid))
    simplices = [tuple("b" + c for c in chain) for chain in all_chains]
    subdivided = from_simplices(simplices)
    carrier: dict[str, str] = {}
    for chain in all_chains:
        carrier[cell_id("b" + c for c in chain)] = chain[-1]
    return SubdivisionMap(complex, subdivided, carrier)


def propagate_matching(
    smap: SubdivisionMap, pair: SubcomplexPair, matching: Matching
) -> Matching:
    """Carry a matching on the source pair to the subdivided pair.

    Each matched pair (upper, lower hyperface) contributes the block of
    subdivided cells carried by the closed upper cell, relative to the
    closure of its other hyperfaces; each block is an acyclic pair and is
    matched constructively. The blocks compose to a complete matching
    relative to the subdivided base.
    """
    if set(pair.complex.cells()) != set(smap.source.cells()):
        raise InvalidSubdivisionError("subdivision map does not cover the pair's complex")
    smap.validate()
    report = validate_matching(pair, matching)
    if not report.ok:
        raise InvalidMatchingError("; ".join(report.violations[:5]))
    complex = pair.complex
    sub_base = smap.cells_over(pair.sub)
    parts = []
    for a, b in sorted(matching.pairs):
        if complex.dim_of(a) > complex.dim_of(b):
            upper, lower = a, b
        else:
            upper, lower = b, a
        closed = complex.faces(upper) | {upper}
        rim = closed - {upper, lower}
        inside = smap.cells_over(closed)
        rel = smap.cells_over(rim)
        block_complex = smap.subdivided.restrict(inside)
        block_pair = SubcomplexPair(block_complex, rel)
        parts.append(match_acyclic_pair(block_pair))
    result = compose_matchings(parts, relative_to=sub_base)
    target = SubcomplexPair(smap.subdivided, sub_base)
    final = validate_matching(target, result)
    assert final.ok, f"propagated matching failed validation: {final.violations[:3]}"
    return result
