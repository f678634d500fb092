"""Geometric simplicial complexes with exact rational coordinates and the
matching induced by a constant direction field transverse to the
triangulation.

All geometric tests are exact. For a top simplex with vertices p_0..p_n,
the directional derivatives of its barycentric coordinates along the field
v solve sum(c_i) = 0, sum(c_i p_i) = v; signs of the c_i decide
transversality, the boundary split, and the downstream/upstream simplex of
every face.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .complexes import SIMPLICIAL, CellComplex, SubcomplexPair, Token, cell_id
from .errors import InvalidComplexError, NotTransverseError, PreconditionError
from .matching import Matching, validate_matching


def direction(*components) -> tuple[Fraction, ...]:
    """Coerce components ('p/q' strings, ints, Fractions) to an exact
    nonzero direction vector."""
    out = []
    for value in components:
        if isinstance(value, float):
            raise InvalidComplexError("exact rational components required; got a float")
        out.append(Fraction(value))
    vec = tuple(out)
    if not vec or all(x == 0 for x in vec):
        raise InvalidComplexError("direction must be nonzero")
    return vec


class GeometricComplex:
    """A pure simplicial complex embedded by exact rational coordinates.

    Every top simplex must be non-degenerate and every codimension-1
    simplex must bound at most two top simplices.
    """

    def __init__(self, complex: CellComplex, coordinates=None, embedded: bool = True):
        if complex.kind != SIMPLICIAL:
            raise InvalidComplexError("geometric complexes must be simplicial")
        coords = coordinates if coordinates is not None else complex.coordinates
        if coords is None:
            raise InvalidComplexError("geometric complexes require coordinates")
        self.complex = complex
        self.embedded = embedded
        self.n = complex.dim
        tokens = complex.vertex_tokens()
        missing = [t for t in tokens if t not in coords]
        if missing:
            raise InvalidComplexError(f"missing coordinates for vertices {missing[:5]}")
        lengths = {len(coords[t]) for t in tokens}
        if len(lengths) != 1:
            raise InvalidComplexError("all coordinates must have the same length")
        self.ambient_dim = lengths.pop()
        if self.ambient_dim < self.n:
            raise InvalidComplexError(
                f"ambient dimension {self.ambient_dim} below complex dimension {self.n}"
            )
        self.coordinates = {
            t: tuple(Fraction(x) for x in coords[t]) for t in tokens
        }
        if not complex.is_pure():
            raise PreconditionError("geometric complexes must be pure-dimensional")
        for top in complex.top_cells():
            verts = complex.vertices(top)
            base = self.coordinates[verts[0]]
            rows = [
                [self.coordinates[v][i] - base[i] for i in range(self.ambient_dim)]
                for v in verts[1:]
            ]
            if linalg.matrix_rank(rows, linalg.RATIONALS) != self.n:
                raise InvalidComplexError(f"degenerate top simplex {top}")
        if self.n >= 1:
            for f in complex.cells_of_dim(self.n - 1):
                if len(complex.cofaces(f)) > 2:
                    raise InvalidComplexError(
                        f"codimension-1 simplex {f} bounds more than two top simplices"
                    )

    def point(self, token: Token) -> tuple[Fraction, ...]:
        return self.coordinates[token]


@dataclass(frozen=True)
class BoundarySplit:
    """Boundary hyperfaces split by the field direction, with closures."""

    exiting_hyperfaces: frozenset[str]
    entering_hyperfaces: frozenset[str]
    exiting: frozenset[str]  # closure; the relative base for flow matchings
    entering: frozenset[str]


def _derivatives(geom: GeometricComplex, field_vec) -> dict[str, dict[Token, Fraction]]:
    """Per top simplex, the derivative of each barycentric coordinate along
    the field."""
    v = direction(*field_vec)
    if len(v) != geom.ambient_dim:
        raise InvalidComplexError(
            f"field has {len(v)} components, ambient dimension is {geom.ambient_dim}"
        )
    out: dict[str, dict[Token, Fraction]] = {}
    for top in geom.complex.top_cells():
        verts = geom.complex.vertices(top)
        columns = [geom.point(u) for u in verts]
        rows = [[Fraction(1)] * len(verts)]
        rows.extend(
            [columns[j][i] for j in range(len(verts))]
            for i in range(geom.ambient_dim)
        )
        rhs = [Fraction(0)] + list(v)
        solution = linalg.solve_exact(rows, rhs)
        if solution is None:
            raise NotTransverseError(
                f"field is not tangent to top simplex {top}", simplices=(top,)
            )
        out[top] = dict(zip(verts, solution))
    return out


def check_transverse(geom: GeometricComplex, field_vec) -> BoundarySplit:
    """Exact transversality test; returns the boundary split or raises a
    degeneracy report naming every offending codimension-1 simplex."""
    split, _ = _split_and_derivatives(geom, field_vec)
    return split


def _split_and_derivatives(geom: GeometricComplex, field_vec):
    if geom.n < 1:
        raise PreconditionError("flow structures need dimension at least 1")
    derivs = _derivatives(geom, field_vec)
    complex = geom.complex
    n = geom.n
    degenerate = []
    exiting = set()
    entering = set()
    for f in complex.cells_of_dim(n - 1) if n >= 1 else ():
        face_verts = set(complex.vertices(f))
        cofs = sorted(complex.cofaces(f))
        opposite = {
            top: next(u for u in complex.vertices(top) if u not in face_verts)
            for top in cofs
        }
        if any(derivs[top][opposite[top]] == 0 for top in cofs):
            degenerate.append(f)
            continue
        if len(cofs) == 1:
            top = cofs[0]
            if derivs[top][opposite[top]] < 0:
                exiting.add(f)
            else:
                entering.add(f)
    if degenerate:
        raise NotTransverseError(
            "field lies in the span of codimension-1 simplices: "
            + ", ".join(sorted(degenerate)),
            simplices=sorted(degenerate),
        )
    split = BoundarySplit(
        frozenset(exiting),
        frozenset(entering),
        complex.closure(exiting),
        complex.closure(entering),
    )
    return split, derivs


@dataclass(frozen=True)
class FlowStructure:
    """Downstream/upstream structure of a transverse constant field.

    ``downstream[s]`` is the top simplex the field enters through the
    interior of s (defined off the exiting boundary closure); ``upstream``
    is the time-reversed counterpart. Per top simplex, ``stable`` and
    ``unstable`` list the faces it is downstream/upstream for,
    ``unstable_core`` is the common face of the unstable hyperfaces, and
    ``base_vertex`` the chosen vertex in it.
    """

    geometry: GeometricComplex
    field: tuple[Fraction, ...]
    split: BoundarySplit
    downstream: dict[str, str]
    upstream: dict[str, str]
    stable: dict[str, frozenset[str]]
    unstable: dict[str, frozenset[str]]
    unstable_core: dict[str, str]
    base_vertex: dict[str, Token]
    base_rule: str

    def rel_base(self) -> frozenset[str]:
        return self.split.exiting


def flow_structure(
    geom: GeometricComplex, field_vec, base_rule: str = "lowest", seed: int | None = None
) -> FlowStructure:
    """Compute downstream/upstream maps, stable/unstable faces, and base
    vertices for a transverse constant field."""
    if base_rule not in ("lowest", "random"):
        raise ValueError("base_rule must be 'lowest' or 'random'")
    if base_rule == "random" and seed is None:
        raise ValueError("base_rule 'random' requires a seed")
    split, derivs = _split_and_derivatives(geom, field_vec)
    complex = geom.complex
    n = geom.n

    top_cofaces: dict[str, tuple[str, ...]] = {}
    for c in complex.cells():
        if complex.dim_of(c) == n:
            top_cofaces[c] = (c,)
        else:
            top_cofaces[c] = tuple(
                sorted(t for t in complex.cofaces_all(c) if complex.dim_of(t) == n)
            )

    def resolve(cell: str, want_positive: bool) -> str:
        candidates = []
        cell_verts = set(complex.vertices(cell))
        for top in top_cofaces[cell]:
            values = derivs[top]
            others = (u for u in complex.vertices(top) if u not in cell_verts)
            if want_positive:
                ok = all(values[u] > 0 for u in others)
            else:
                ok = all(values[u] < 0 for u in others)
            if ok:
                candidates.append(top)
        if len(candidates) != 1:
            raise PreconditionError(
                f"degenerate configuration at {cell}: "
                f"{len(candidates)} candidate top simplices"
            )
        return candidates[0]

    downstream: dict[str, str] = {}
    upstream: dict[str, str] = {}
    for c in complex.cells():
        if complex.dim_of(c) == n:
            downstream[c] = c
            upstream[c] = c
            continue
        if c not in split.exiting:
            downstream[c] = resolve(c, want_positive=True)
        if c not in split.entering:
            upstream[c] = resolve(c, want_positive=False)

    stable: dict[str, set[str]] = {t: set() for t in complex.top_cells()}
    unstable: dict[str, set[str]] = {t: set() for t in complex.top_cells()}
    for c, t in downstream.items():
        stable[t].add(c)
    for c, t in upstream.items():
        unstable[t].add(c)

    unstable_core: dict[str, str] = {}
    for t in complex.top_cells():
        hyper = complex.hyperfaces(t)
        unstable_hyper = [f for f in hyper if f in unstable[t]]
        stable_hyper = [f for f in hyper if f in stable[t]]
        both = set(unstable_hyper) & set(stable_hyper)
        if both:
            raise AssertionError(f"hyperface of {t} classified both ways: {sorted(both)}")
        if len(stable_hyper) + len(unstable_hyper) != len(hyper):
            raise AssertionError(f"unclassified hyperface of {t}")
        if not stable_hyper or not unstable_hyper:
            raise AssertionError(f"{t} lacks a stable or an unstable hyperface")
        common = set(complex.vertices(unstable_hyper[0]))
        for f in unstable_hyper[1:]:
            common &= set(complex.vertices(f))
        if not common:
            raise AssertionError(f"unstable hyperfaces of {t} share no vertex")
        unstable_core[t] = cell_id(common)

    rng = random.Random(seed) if base_rule == "random" else None
    base_vertex: dict[str, Token] = {}
    for t in complex.top_cells():
        choices = complex.vertices(unstable_core[t])  # ascending token order
        base_vertex[t] = choices[0] if rng is None else rng.choice(choices)

    return FlowStructure(
        geometry=geom,
        field=direction(*field_vec),
        split=split,
        downstream=downstream,
        upstream=upstream,
        stable={t: frozenset(s) for t, s in stable.items()},
        unstable={t: frozenset(s) for t, s in unstable.items()},
        unstable_core=unstable_core,
        base_vertex=base_vertex,
        base_rule=base_rule,
    )


def flow_matching(fs: FlowStructure) -> Matching:
    """The matching induced by the flow structure, relative to the closure
    of the exiting boundary.

    The mate of a cell drops the base vertex of its downstream simplex when
    present, and joins it otherwise; mates always share the same downstream
    simplex.
    """
    complex = fs.geometry.complex
    pair = SubcomplexPair(complex, fs.split.exiting)
    mate: dict[str, str] = {}
    for c in pair.rel_cells:
        top = fs.downstream[c]
        base = fs.base_vertex[top]
        verts = set(complex.vertices(c))
        if base in verts:
            partner_verts = verts - {base}
        else:
            partner_verts = verts | {base}
        if not partner_verts:
            raise AssertionError(f"mate of {c} would be empty")
        partner = cell_id(partner_verts)
        if partner not in complex:
            raise AssertionError(f"mate {partner} of {c} is not a cell")
        if fs.downstream.get(partner) != top:
            raise AssertionError(
                f"mate {partner} of {c} has a different downstream simplex"
            )
        mate[c] = partner
    for c, m in mate.items():
        if mate.get(m) != c:
            raise AssertionError(f"mate rule is not an involution at {c}")
    pairs = {tuple(sorted((c, m))) for c, m in mate.items()}
    result = Matching(pairs, relative_to=fs.split.exiting)
    report = validate_matching(pair, result)
    assert report.ok, f"flow matching failed validation: {report.violations[:3]}"
    return result
