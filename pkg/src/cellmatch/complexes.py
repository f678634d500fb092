"""Finite polyhedral cell complexes, subcomplex pairs, and dual cycles.

The data model is purely combinatorial: a complex is a ranked poset of
cells given by codimension-1 (hyperface) lists; the full face relation is
the transitive closure. Simplicial cells use the canonical id built from
their vertex tokens in ascending order ("0.2.4"); general regular-CW cells
("cw" kind) carry caller-chosen ids and explicit hyperface lists. Optional
exact rational coordinates may ride along for geometric use.

Complexes and pairs are immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    InvalidComplexError,
    InvalidLoopError,
    InvalidSubcomplexError,
    PreconditionError,
)

Token = int | str

SIMPLICIAL = "simplicial"
CW = "cw"


def _token_key(token: Token):
    if isinstance(token, bool) or not isinstance(token, (int, str)):
        raise InvalidComplexError(f"bad vertex token {token!r}: expected int or str")
    if isinstance(token, int):
        return (0, token, "")
    return (1, 0, token)


def cell_id(tokens: Iterable[Token]) -> str:
    """Canonical simplicial id: distinct vertex tokens, ascending, dot-joined."""
    return ".".join(str(t) for t in sorted(set(tokens), key=_token_key))


def _coerce_coordinates(coordinates) -> dict[Token, tuple[Fraction, ...]] | None:
    if coordinates is None:
        return None
    out: dict[Token, tuple[Fraction, ...]] = {}
    for token, point in coordinates.items():
        coords = []
        for value in point:
            if isinstance(value, float):
                raise InvalidComplexError(
                    "exact rational coordinates required; got a float"
                )
            coords.append(Fraction(value))
        out[token] = tuple(coords)
    return out


class CellComplex:
    """Immutable face-poset model of a finite polyhedral complex.

    Use :func:`from_simplices` or :func:`build_cw` to construct one; the
    constructor validates the raw tables and is mostly internal.
    """

    def __init__(self, kind, dims, hyperfaces, verts=None, coordinates=None):
        if kind not in (SIMPLICIAL, CW):
            raise InvalidComplexError(f"unknown complex kind {kind!r}")
        if not dims:
            raise InvalidComplexError("empty complex")
        self.kind = kind
        self._dim = dict(dims)
        self._hyperfaces = {c: frozenset(fs) for c, fs in hyperfaces.items()}
        self._verts = None if verts is None else {c: tuple(v) for c, v in verts.items()}
        self.coordinates = _coerce_coordinates(coordinates)
        self._validate()
        cofaces: dict[str, set[str]] = {c: set() for c in self._dim}
        for c, fs in self._hyperfaces.items():
            for f in fs:
                cofaces[f].add(c)
        self._cofaces = {c: frozenset(s) for c, s in cofaces.items()}
        self.dim = max(self._dim.values())
        self._faces_cache: dict[str, frozenset[str]] = {}
        self._cofaces_cache: dict[str, frozenset[str]] = {}
        self._sorted_cells = tuple(sorted(self._dim, key=self.sort_key))

    def _validate(self):
        for c, d in self._dim.items():
            if not isinstance(c, str) or not c:
                raise InvalidComplexError(f"bad cell id {c!r}")
            if not isinstance(d, int) or d < 0:
                raise InvalidComplexError(f"cell {c}: bad dimension {d!r}")
            faces = self._hyperfaces.get(c)
            if faces is None:
                raise InvalidComplexError(f"cell {c}: missing hyperface record")
            for f in faces:
                if f not in self._dim:
                    raise InvalidComplexError(f"cell {c}: dangling hyperface {f!r}")
                if self._dim[f] != d - 1:
                    raise InvalidComplexError(
                        f"cell {c}: hyperface {f} has dimension {self._dim[f]}, "
                        f"expected {d - 1}"
                    )
            if d == 0 and faces:
                raise InvalidComplexError(f"vertex {c} must not have hyperfaces")
            if d == 1 and len(faces) != 2:
                raise InvalidComplexError(
                    f"1-cell {c} must have exactly 2 hyperfaces (regularity)"
                )
        if self.kind == SIMPLICIAL:
            if self._verts is None:
                raise InvalidComplexError("simplicial complex requires vertex data")
            for c, d in self._dim.items():
                verts = self._verts.get(c)
                if verts is None:
                    raise InvalidComplexError(f"cell {c}: missing vertex tuple")
                if len(set(verts)) != d + 1:
                    raise InvalidComplexError(f"cell {c}: needs {d + 1} distinct vertices")
                if cell_id(verts) != c:
                    raise InvalidComplexError(f"cell {c}: id not canonical for {verts}")
                if d >= 1:
                    expected = {cell_id(set(verts) - {v}) for v in verts}
                    if self._hyperfaces[c] != expected:
                        raise InvalidComplexError(
                            f"cell {c}: hyperfaces are not its codim-1 vertex subsets"
                        )

    # -- queries ---------------------------------------------------------

    def __contains__(self, cid: str) -> bool:
        return cid in self._dim

    def __len__(self) -> int:
        return len(self._dim)

    def cells(self) -> tuple[str, ...]:
        return self._sorted_cells

    def dim_of(self, cid: str) -> int:
        return self._dim[cid]

    def hyperfaces(self, cid: str) -> frozenset[str]:
        return self._hyperfaces[cid]

    def cofaces(self, cid: str) -> frozenset[str]:
        """Cells having ``cid`` as a hyperface."""
        return self._cofaces[cid]

    def vertices(self, cid: str) -> tuple[Token, ...]:
        if self._verts is None:
            raise InvalidComplexError("cw-kind cells carry no vertex tuples")
        return self._verts[cid]

    def vertex_tokens(self) -> tuple[Token, ...]:
        zero_cells = (c for c in self._sorted_cells if self._dim[c] == 0)
        if self._verts is not None:
            return tuple(self._verts[c][0] for c in zero_cells)
        return tuple(zero_cells)

    def sort_key(self, cid: str):
        if self._verts is not None:
            return (self._dim[cid], tuple(_token_key(t) for t in sorted(
                self._verts[cid], key=_token_key)))
        return (self._dim[cid], cid)

    def cells_of_dim(self, d: int) -> tuple[str, ...]:
        return tuple(c for c in self._sorted_cells if self._dim[c] == d)

    def top_cells(self) -> tuple[str, ...]:
        return self.cells_of_dim(self.dim)

    def faces(self, cid: str) -> frozenset[str]:
        """All proper faces of ``cid`` (transitive closure of hyperfaces)."""
        cached = self._faces_cache.get(cid)
        if cached is not None:
            return cached
        out: set[str] = set()
        stack = list(self._hyperfaces[cid])
        while stack:
            f = stack.pop()
            if f not in out:
                out.add(f)
                stack.extend(self._hyperfaces[f])
        result = frozenset(out)
        self._faces_cache[cid] = result
        return result

    def cofaces_all(self, cid: str) -> frozenset[str]:
        """All proper cofaces of ``cid`` (cells strictly containing it)."""
        cached = self._cofaces_cache.get(cid)
        if cached is not None:
            return cached
        out: set[str] = set()
        stack = list(self._cofaces[cid])
        while stack:
            c = stack.pop()
            if c not in out:
                out.add(c)
                stack.extend(self._cofaces[c])
        result = frozenset(out)
        self._cofaces_cache[cid] = result
        return result

    def closure(self, ids: Iterable[str]) -> frozenset[str]:
        out: set[str] = set()
        for cid in ids:
            if cid not in self._dim:
                raise InvalidSubcomplexError(f"unknown cell {cid!r}")
            out.add(cid)
            out.update(self.faces(cid))
        return frozenset(out)

    def is_closed(self, ids: Iterable[str]) -> bool:
        idset = set(ids)
        for c in idset:
            if c not in self._dim:
                raise InvalidSubcomplexError(f"unknown cell {c!r}")
        return all(self._hyperfaces[c] <= idset for c in idset)

    def is_pure(self) -> bool:
        covered = set(self.top_cells())
        for c in self.top_cells():
            covered.update(self.faces(c))
        return len(covered) == len(self._dim)

    def skeleton(self, d: int) -> frozenset[str]:
        return frozenset(c for c in self._dim if self._dim[c] <= d)

    def restrict(self, ids: Iterable[str]) -> "CellComplex":
        """The subcomplex on ``ids``, which must be nonempty and closed."""
        idset = set(ids)
        if not idset:
            raise InvalidSubcomplexError("cannot restrict to an empty cell set")
        for cid in idset:
            if cid not in self._dim:
                raise InvalidSubcomplexError(f"unknown cell {cid!r}")
        if not self.is_closed(idset):
            raise InvalidSubcomplexError("cell set is not closed under hyperfaces")
        dims = {c: self._dim[c] for c in idset}
        hyper = {c: self._hyperfaces[c] for c in idset}
        verts = None
        coords = None
        if self._verts is not None:
            verts = {c: self._verts[c] for c in idset}
            if self.coordinates is not None:
                tokens = {verts[c][0] for c in idset if dims[c] == 0}
                coords = {t: self.coordinates[t] for t in tokens if t in self.coordinates}
        return CellComplex(self.kind, dims, hyper, verts=verts, coordinates=coords)

    def __repr__(self):
        counts = {}
        for d in self._dim.values():
            counts[d] = counts.get(d, 0) + 1
        f_vec = tuple(counts.get(d, 0) for d in range(self.dim + 1))
        return f"CellComplex(kind={self.kind!r}, f={f_vec})"


def from_simplices(maximal_simplices, coordinates=None) -> CellComplex:
    """Build the simplicial complex spanned by the given simplices.

    Every face of every listed simplex is added, with canonical ids;
    duplicate input simplices are harmless.
    """
    simplices = [frozenset(s) for s in maximal_simplices]
    if not simplices:
        raise InvalidComplexError("empty complex")
    for s in simplices:
        if not s:
            raise InvalidComplexError("empty complex")
        for t in s:
            _token_key(t)
            if isinstance(t, int) and t < 0:
                raise InvalidComplexError(f"negative vertex index {t}")
    dims: dict[str, int] = {}
    hyper: dict[str, frozenset[str]] = {}
    verts: dict[str, tuple[Token, ...]] = {}
    seen: set[frozenset] = set()
    stack = list(simplices)
    while stack:
        s = stack.pop()
        if s in seen:
            continue
        seen.add(s)
        cid = cell_id(s)
        dims[cid] = len(s) - 1
        verts[cid] = tuple(sorted(s, key=_token_key))
        if len(s) == 1:
            hyper[cid] = frozenset()
        else:
            facets = [s - {v} for v in s]
            hyper[cid] = frozenset(cell_id(f) for f in facets)
            stack.extend(facets)
    return CellComplex(SIMPLICIAL, dims, hyper, verts=verts, coordinates=coordinates)


def build_cw(cell_records, coordinates=None) -> CellComplex:
    """Build a regular-CW-kind complex from (id, dim, hyperfaces) records."""
    records = list(cell_records)
    if not records:
        raise InvalidComplexError("empty complex")
    dims: dict[str, int] = {}
    hyper: dict[str, frozenset[str]] = {}
    for cid, d, faces in records:
        if cid in dims:
            raise InvalidComplexError(f"duplicate cell id {cid!r}")
        dims[cid] = d
        hyper[cid] = frozenset(faces)
    return CellComplex(CW, dims, hyper, coordinates=coordinates)


class SubcomplexPair:
    """A complex together with a distinguished subcomplex.

    The cells outside the subcomplex (``rel_cells``) are the ones a
    matching must cover; they split into even- and odd-dimensional parts.
    """

    def __init__(self, complex: CellComplex, sub: Iterable[str] = (), close: bool = False):
        self.complex = complex
        subset = set(sub)
        for cid in subset:
            if cid not in complex:
                raise InvalidSubcomplexError(f"unknown cell {cid!r}")
        if close:
            subset = set(complex.closure(subset))
        elif not complex.is_closed(subset):
            missing = sorted(
                f
                for c in subset
                for f in complex.hyperfaces(c)
                if f not in subset
            )
            raise InvalidSubcomplexError(
                f"subcomplex not closed under hyperfaces; missing {missing[:5]}"
            )
        self.sub = frozenset(subset)
        rel = [c for c in complex.cells() if c not in self.sub]
        self.rel_cells = tuple(rel)
        self.rel_even = tuple(c for c in rel if complex.dim_of(c) % 2 == 0)
        self.rel_odd = tuple(c for c in rel if complex.dim_of(c) % 2 == 1)

    def rel_cells_of_dim(self, d: int) -> tuple[str, ...]:
        return tuple(c for c in self.rel_cells if self.complex.dim_of(c) == d)

    def __repr__(self):
        return (
            f"SubcomplexPair(|X|={len(self.complex)}, |Y|={len(self.sub)}, "
            f"|rel|={len(self.rel_cells)})"
        )


def euler_characteristic(pair: SubcomplexPair) -> int:
    """Alternating cell count of the cells outside the subcomplex."""
    return sum((-1) ** pair.complex.dim_of(c) for c in pair.rel_cells)


@dataclass(frozen=True)
class DualLoop:
    """Alternating cyclic sequence c0, f0, c1, f1, ... of top cells and
    shared hyperfaces; fi is a hyperface of ci and of c(i+1)."""

    cells: tuple[str, ...]

    def __post_init__(self):
        if len(self.cells) < 4 or len(self.cells) % 2 != 0:
            raise InvalidLoopError(
                f"loop needs an alternating sequence of >= 4 cells, got {len(self.cells)}"
            )

    @property
    def k(self) -> int:
        return len(self.cells) // 2

    @property
    def top_cells(self) -> tuple[str, ...]:
        return self.cells[0::2]

    @property
    def link_cells(self) -> tuple[str, ...]:
        return self.cells[1::2]

    def validate(self, complex: CellComplex) -> None:
        n = complex.dim
        if len(set(self.cells)) != len(self.cells):
            dup = sorted({c for c in self.cells if self.cells.count(c) > 1})
            raise InvalidLoopError(f"not simple: repeated cell {dup[0]}")
        for cid in self.cells:
            if cid not in complex:
                raise InvalidLoopError(f"unknown cell {cid!r}")
        tops = self.top_cells
        links = self.link_cells
        for c in tops:
            if complex.dim_of(c) != n:
                raise InvalidLoopError(f"{c} is not a top-dimensional cell")
        for i, f in enumerate(links):
            if complex.dim_of(f) != n - 1:
                raise InvalidLoopError(f"{f} is not a codimension-1 cell")
            cofs = complex.cofaces(f)
            expected = {tops[i], tops[(i + 1) % self.k]}
            if cofs != expected:
                raise InvalidLoopError(
                    f"{f} must have exactly the two cofaces {sorted(expected)}, "
                    f"found {sorted(cofs)}"
                )


def complement_of_dual_loop(complex: CellComplex, loop: DualLoop) -> SubcomplexPair:
    """The pair whose subcomplex holds every cell not on the loop."""
    loop.validate(complex)
    loop_cells = set(loop.cells)
    rest = [c for c in complex.cells() if c not in loop_cells]
    if not complex.is_closed(rest):
        raise InvalidLoopError(
            "complement of the loop is not a subcomplex; loop data is corrupt"
        )
    return SubcomplexPair(complex, rest)


@dataclass(frozen=True)
class DualGraph:
    """1-skeleton of the dual cellulation: nodes are top cells, one edge per
    interior codimension-1 cell."""

    nodes: tuple[str, ...]
    edges: dict[str, tuple[str, str]]  # (n-1)-cell id -> its two cofaces
    boundary: frozenset[str]  # (n-1)-cells with a single coface
    non_manifold: frozenset[str]  # (n-1)-cells with three or more cofaces

    def neighbors(self, node: str) -> tuple[tuple[str, str], ...]:
        """Sorted (edge cell, other node) pairs at ``node``."""
        out = []
        for f, (a, b) in self.edges.items():
            if a == node:
                out.append((f, b))
            elif b == node:
                out.append((f, a))
        return tuple(sorted(out))

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def dual_graph(complex: CellComplex) -> DualGraph:
    """Dual 1-skeleton of a pure complex; flags boundary and non-manifold
    codimension-1 cells."""
    if not complex.is_pure():
        raise PreconditionError(
            "complex is not pure: some cell is not a face of a top-dimensional cell"
        )
    n = complex.dim
    nodes = complex.cells_of_dim(n)
    edges: dict[str, tuple[str, str]] = {}
    boundary = set()
    non_manifold = set()
    for f in complex.cells_of_dim(n - 1) if n >= 1 else ():
        cofs = sorted(complex.cofaces(f))
        if len(cofs) == 1:
            boundary.add(f)
        elif len(cofs) == 2:
            edges[f] = (cofs[0], cofs[1])
        elif len(cofs) >= 3:
            non_manifold.add(f)
    return DualGraph(nodes, edges, frozenset(boundary), frozenset(non_manifold))


def spanning_dual_loop(complex: CellComplex) -> DualLoop:
    """The dual loop through every top cell, for a complex whose dual graph
    is a single simple cycle (a cellulated circle, for instance)."""
    graph = dual_graph(complex)
    if graph.boundary or graph.non_manifold:
        raise InvalidLoopError("dual graph has boundary or non-manifold cells")
    if graph.edge_count != len(graph.nodes):
        raise InvalidLoopError("dual graph is not a single cycle")
    for node in graph.nodes:
        if len(graph.neighbors(node)) != 2:
            raise InvalidLoopError(f"dual graph is not a single cycle at {node}")
    start = graph.nodes[0]
    first_edge, nxt = graph.neighbors(start)[0]
    seq = [start, first_edge]
    prev_edge = first_edge
    node = nxt
    while node != start:
        seq.append(node)
        options = [(f, m) for f, m in graph.neighbors(node) if f != prev_edge]
        prev_edge, node = options[0]
        seq.append(prev_edge)
    if len(seq) != 2 * len(graph.nodes):
        raise InvalidLoopError("dual graph is not connected")
    loop = DualLoop(tuple(seq))
    loop.validate(complex)
    return loop


def star_cycle(complex: CellComplex, tau: str) -> DualLoop:
    """The alternating cycle of the cells strictly containing a
    codimension-2 cell, when its link is a single cycle."""
    n = complex.dim
    if tau not in complex:
        raise InvalidSubcomplexError(f"unknown cell {tau!r}")
    if complex.dim_of(tau) != n - 2:
        raise PreconditionError(
            f"{tau} has dimension {complex.dim_of(tau)}; expected {n - 2}"
        )
    star = complex.cofaces_all(tau)
    mids = sorted((c for c in star if complex.dim_of(c) == n - 1), key=complex.sort_key)
    tops = sorted((c for c in star if complex.dim_of(c) == n), key=complex.sort_key)
    if len(star) != len(mids) + len(tops) or not mids:
        raise PreconditionError(f"link of {tau} is not a single cycle")
    around: dict[str, list[str]] = {}
    for m in mids:
        cofs = sorted(complex.cofaces(m))
        if len(cofs) != 2:
            raise PreconditionError(
                f"link of {tau} is not a single cycle: {m} has {len(cofs)} cofaces"
            )
        around[m] = cofs
    start = tops[0]
    first_mid = min(m for m in mids if start in around[m])
    seq = [start, first_mid]
    prev_mid = first_mid
    node = next(c for c in around[first_mid] if c != start)
    while node != start:
        seq.append(node)
        nexts = sorted(m for m in mids if node in around[m] and m != prev_mid)
        if len(nexts) != 1:
            raise PreconditionError(f"link of {tau} is not a single cycle at {node}")
        prev_mid = nexts[0]
        seq.append(prev_mid)
        node = next(c for c in around[prev_mid] if c != node)
    if len(seq) != len(star):
        raise PreconditionError(f"link of {tau} is not a single cycle")
    loop = DualLoop(tuple(seq))
    loop.validate(complex)
    return loop
