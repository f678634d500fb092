"""Exact cellular chain complexes of pairs, Betti numbers, and the
constructive matching of acyclic pairs.

Coefficients are exact: arbitrary-precision rationals, or the two-element
field. Simplicial boundary signs come from the ascending-vertex
orientation (the i-th hyperface carries sign (-1)^i); cw-kind complexes
need caller-supplied signs for rational coefficients but work out of the
box over the two-element field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .complexes import CW, SIMPLICIAL, CellComplex, SubcomplexPair, cell_id
from .errors import HomologyNonzeroError, PreconditionError
from .matching import HallCertificate, Matching, complete_matching, compose_matchings, validate_matching


def _default_field(complex: CellComplex) -> str:
    return "q" if complex.kind == SIMPLICIAL else "f2"


class ChainComplex:
    """Boundary matrices of a subcomplex pair over an exact field.

    ``basis(n)`` lists the n-dimensional cells outside the subcomplex in id
    order; ``matrix(n)`` maps dimension n to n-1, rows indexed by
    ``basis(n-1)`` and columns by ``basis(n)``.
    """

    def __init__(self, pair: SubcomplexPair, field: str | None = None, signs=None):
        complex = pair.complex
        self.pair = pair
        self.field_name = field or _default_field(complex)
        self._field = linalg.field_by_name(self.field_name)
        if self.field_name == "q" and complex.kind == CW and signs is None:
            raise PreconditionError(
                "rational coefficients on a cw-kind complex require incidence signs"
            )
        self._bases: dict[int, tuple[str, ...]] = {
            d: pair.rel_cells_of_dim(d) for d in range(complex.dim + 1)
        }
        self._matrices: dict[int, list[list]] = {}
        for d in range(complex.dim + 1):
            self._matrices[d] = self._boundary_matrix(d, signs)
        self._ranks: dict[int, int] = {}
        self._check_boundary_squared()

    def _coefficient(self, cid: str, fid: str, position: int, signs):
        if self.field_name == "f2":
            return 1
        if self.pair.complex.kind == SIMPLICIAL:
            return Fraction(-1) ** position
        value = signs.get((cid, fid))
        if value not in (1, -1):
            raise PreconditionError(f"missing incidence sign for ({cid}, {fid})")
        return Fraction(value)

    def _boundary_matrix(self, d: int, signs):
        complex = self.pair.complex
        rows = self._bases.get(d - 1, ())
        cols = self._bases[d]
        row_index = {c: i for i, c in enumerate(rows)}
        matrix = linalg.zeros(len(rows), len(cols), self._field)
        for j, cid in enumerate(cols):
            if complex.kind == SIMPLICIAL:
                verts = complex.vertices(cid)
                faces = [
                    (cell_id(set(verts) - {v}), i) for i, v in enumerate(verts)
                ] if d >= 1 else []
            else:
                faces = [(f, 0) for f in sorted(complex.hyperfaces(cid))]
            for fid, position in faces:
                i = row_index.get(fid)
                if i is None:
                    continue  # face lies in the subcomplex
                coeff = self._coefficient(cid, fid, position, signs)
                matrix[i][j] = self._field.add(matrix[i][j], coeff)
        return matrix

    def _check_boundary_squared(self):
        for d in range(1, self.pair.complex.dim + 1):
            lower = self._matrices[d - 1]
            upper = self._matrices[d]
            if not lower or not upper:
                continue
            product = linalg.mat_mul(lower, upper, self._field)
            if not linalg.is_zero_matrix(product, self._field):
                raise PreconditionError(
                    f"boundary squared is nonzero in dimension {d}; "
                    "the complex is not a valid chain complex over this field"
                )

    def basis(self, d: int) -> tuple[str, ...]:
        return self._bases.get(d, ())

    def matrix(self, d: int) -> list[list]:
        return self._matrices.get(d, [])

    def rank(self, d: int) -> int:
        if d not in self._bases or not self._bases[d]:
            return 0
        if d not in self._ranks:
            self._ranks[d] = linalg.matrix_rank(self._matrices[d], self._field)
        return self._ranks[d]

    def kernel_dim(self, d: int) -> int:
        return len(self.basis(d)) - self.rank(d)

    def pivot_columns(self, d: int) -> tuple[int, ...]:
        rows = [list(r) for r in self._matrices[d]]
        rank, pivots = linalg.row_reduce(rows, self._field)
        self._ranks.setdefault(d, rank)
        return tuple(pivots)


def chain_complex(pair: SubcomplexPair, field: str | None = None, signs=None) -> ChainComplex:
    return ChainComplex(pair, field=field, signs=signs)


@dataclass(frozen=True)
class BettiVector:
    betti: tuple[int, ...]
    field: str

    def is_zero(self) -> bool:
        return all(b == 0 for b in self.betti)

    def alternating_sum(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.betti))


def betti_numbers(pair: SubcomplexPair, field: str | None = None, signs=None) -> BettiVector:
    cc = chain_complex(pair, field=field, signs=signs)
    top = pair.complex.dim
    betti = tuple(cc.kernel_dim(d) - cc.rank(d + 1) for d in range(top + 1))
    return BettiVector(betti, cc.field_name)


@dataclass(frozen=True)
class Filtration:
    """Nested subcomplex stages from the base to the whole complex; each
    consecutive difference holds equally many cells of two adjacent
    dimensions."""

    stages: tuple[frozenset[str], ...]

    def layers(self):
        for k in range(1, len(self.stages)):
            yield self.stages[k - 1], self.stages[k]


def acyclic_filtration(pair: SubcomplexPair, field: str | None = None, signs=None) -> Filtration:
    """Filtration realizing the acyclic-pair construction.

    Per dimension, elimination with leftmost-lowest pivoting selects cells
    whose boundary columns are independent; each stage adds the selected
    n-cells together with the (n-1)-cells left over from the stage below,
    and those two groups always have equal size when the pair is acyclic.
    """
    bv = betti_numbers(pair, field=field, signs=signs)
    if not bv.is_zero():
        raise HomologyNonzeroError(
            f"pair has nonzero homology {bv.betti}", betti=bv
        )
    complex = pair.complex
    cc = chain_complex(pair, field=field, signs=signs)
    top = complex.dim
    selected: dict[int, frozenset[str]] = {}
    for d in range(top + 1):
        basis = cc.basis(d)
        pivots = cc.pivot_columns(d) if basis else ()
        selected[d] = frozenset(basis[j] for j in pivots)
    stages = [pair.sub]
    current = pair.sub
    for d in range(1, top + 2):
        new_upper = selected.get(d, frozenset())
        lower_basis = cc.basis(d - 1)
        new_lower = frozenset(lower_basis) - selected.get(d - 1, frozenset())
        if not new_upper and not new_lower:
            continue
        if len(new_upper) != len(new_lower):
            raise AssertionError(
                f"stage {d}: selected {len(new_upper)} cells of dimension {d} "
                f"against {len(new_lower)} of dimension {d - 1}"
            )
        stage = frozenset(current | complex.skeleton(d - 1) | new_upper)
        _check_layer_injective(cc, d, new_upper, new_lower)
        stages.append(stage)
        current = stage
    if current != frozenset(complex.cells()):
        stages.append(frozenset(complex.cells()))
    return Filtration(tuple(stages))


def _check_layer_injective(cc: ChainComplex, d: int, upper, lower):
    """The layer boundary (selected d-cells into leftover (d-1)-cells) must
    have full column rank; this is the one-to-one hypothesis the layer
    matching relies on."""
    if not upper:
        return
    basis_up = [c for c in cc.basis(d) if c in upper]
    rows_keep = [i for i, c in enumerate(cc.basis(d - 1)) if c in lower]
    col_index = {c: j for j, c in enumerate(cc.basis(d))}
    full = cc.matrix(d)
    sub = [[full[i][col_index[c]] for c in basis_up] for i in rows_keep]
    rank = linalg.matrix_rank(sub, linalg.field_by_name(cc.field_name))
    if rank != len(basis_up):
        raise AssertionError(
            f"layer {d} boundary is not injective (rank {rank} of {len(basis_up)})"
        )


def match_acyclic_pair(pair: SubcomplexPair, field: str | None = None, signs=None) -> Matching:
    """Complete matching of an acyclic pair, layer by layer through the
    filtration; every layer is matchable, so a certificate from the layer
    matcher signals corrupt input and aborts."""
    filtration = acyclic_filtration(pair, field=field, signs=signs)
    complex = pair.complex
    parts = []
    for below, stage in filtration.layers():
        sub_complex = complex.restrict(stage)
        layer_pair = SubcomplexPair(sub_complex, below)
        outcome = complete_matching(layer_pair)
        if isinstance(outcome, HallCertificate):
            raise AssertionError(
                "layer matching returned a deficiency certificate "
                f"(side={outcome.side}, deficiency={outcome.deficiency}); "
                "this contradicts the acyclic-pair guarantee"
            )
        parts.append(outcome)
    result = compose_matchings(parts, relative_to=pair.sub)
    report = validate_matching(pair, result)
    assert report.ok, f"acyclic-pair matching failed validation: {report.violations[:3]}"
    return result
