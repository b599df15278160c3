"""Metric graphs over a sharp fs monoid.

A :class:`MetricGraph` is a finite connected multigraph (loops allowed)
whose edges carry nonzero lengths in a monoid M.  Each stored edge is
one chosen orientation; a cycle's coefficient on the reverse
orientation is the negation.  The module computes first homology via
spanning-tree fundamental cycles, the length-weighted intersection
pairing, subdivisions and edge contractions along monoid maps.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import NotACycleError, PreconditionError, ValidationError
from .monoid import MonoidHom, SharpFsMonoid, _as_vector


@dataclass(frozen=True)
class Edge:
    id: str
    tail: str
    head: str
    length: tuple

    def is_loop(self) -> bool:
        return self.tail == self.head


class Cycle:
    """Integer edge coefficients with zero boundary.

    Coefficients are kept sparse; a missing edge id means coefficient 0.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = {str(e): int(c) for e, c in dict(coeffs).items() if c}

    def coefficient(self, edge_id: str) -> int:
        return self.coeffs.get(edge_id, 0)

    def __eq__(self, other):
        return isinstance(other, Cycle) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __add__(self, other: "Cycle") -> "Cycle":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Cycle(out)

    def __neg__(self) -> "Cycle":
        return Cycle({e: -c for e, c in self.coeffs.items()})

    def scaled(self, k: int) -> "Cycle":
        return Cycle({e: k * c for e, c in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        items = ", ".join(f"{e}: {c}" for e, c in sorted(self.coeffs.items()))
        return f"Cycle({{{items}}})"

    def to_json(self) -> dict:
        return {"coefficients": {e: c for e, c in sorted(self.coeffs.items())}}

    @classmethod
    def from_json(cls, obj) -> "Cycle":
        if not isinstance(obj, dict) or "coefficients" not in obj:
            raise ValidationError('cycle schema must be {"coefficients": {...}}')
        return cls(obj["coefficients"])


@dataclass(frozen=True)
class HomologyData:
    """A lattice basis of H1 with the Gram matrix of the pairing.

    ``gram[i][j]`` is the lattice vector ``basis[i] . basis[j]`` in
    M^gp.  ``nontree_edges`` lists, per basis element, the non-tree edge
    generating it; a cycle's coordinates in this basis are exactly its
    coefficients on those edges.
    """

    basis: tuple
    gram: tuple
    nontree_edges: tuple

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, cycle: Cycle) -> tuple:
        return tuple(cycle.coefficient(e) for e in self.nontree_edges)


@dataclass(frozen=True)
class MetricGraph:
    """A connected graph metrized by a sharp fs monoid.

    Vertices and edges are stored sorted by id, so two graphs built from
    the same data in any order compare equal.
    """

    monoid: SharpFsMonoid
    vertices: tuple
    edges: tuple

    def __post_init__(self):
        verts = tuple(sorted(str(v) for v in self.vertices))
        object.__setattr__(self, "vertices", verts)
        if not verts:
            raise ValidationError("graph needs at least one vertex")
        if len(set(verts)) != len(verts):
            raise ValidationError("duplicate vertex id")
        vset = set(verts)
        norm = []
        for e in self.edges:
            if not isinstance(e, Edge):
                e = Edge(*e)
            length = _as_vector(e.length, self.monoid.rank,
                                f"length of edge {e.id!r}")
            if e.tail not in vset or e.head not in vset:
                raise ValidationError(f"edge {e.id!r} has an unknown endpoint")
            if not any(length):
                raise ValidationError(f"edge {e.id!r} has zero length")
            if not self.monoid.contains(length):
                raise ValidationError(
                    f"length of edge {e.id!r} lies outside the monoid")
            norm.append(Edge(str(e.id), str(e.tail), str(e.head), length))
        norm.sort(key=lambda e: e.id)
        ids = [e.id for e in norm]
        if len(set(ids)) != len(ids):
            raise ValidationError("duplicate edge id")
        object.__setattr__(self, "edges", tuple(norm))
        if not self._is_connected():
            raise ValidationError("graph not connected")

    def _is_connected(self) -> bool:
        adj = {v: [] for v in self.vertices}
        for e in self.edges:
            adj[e.tail].append(e.head)
            adj[e.head].append(e.tail)
        seen = {self.vertices[0]}
        queue = deque(seen)
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.vertices)

    def edge(self, edge_id: str) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise ValidationError(f"no edge with id {edge_id!r}")

    def betti1(self) -> int:
        """|E| - |V| + 1 on a connected graph."""
        return len(self.edges) - len(self.vertices) + 1

    # -- homology ---------------------------------------------------------

    def boundary(self, cycle: Cycle) -> dict:
        """Boundary vertex coefficients (head minus tail) of edge coefficients."""
        out = {v: 0 for v in self.vertices}
        known = {e.id for e in self.edges}
        for eid in cycle.coeffs:
            if eid not in known:
                raise ValidationError(f"cycle references unknown edge {eid!r}")
        for e in self.edges:
            c = cycle.coefficient(e.id)
            if c:
                out[e.head] += c
                out[e.tail] -= c
        return out

    def is_cycle(self, cycle: Cycle) -> bool:
        return all(c == 0 for c in self.boundary(cycle).values())

    def require_cycle(self, cycle: Cycle):
        for v, c in sorted(self.boundary(cycle).items()):
            if c:
                raise NotACycleError(v, c)

    def cycle_basis(self) -> HomologyData:
        """Fundamental cycles of a spanning tree, with their Gram matrix."""
        tree, nontree = _spanning_forest(self.vertices, self.edges)
        basis = tuple(_fundamental_cycle(tree, e) for e in nontree)
        gram = tuple(tuple(self.intersection_pairing(x, y) for y in basis)
                     for x in basis)
        return HomologyData(basis, gram, tuple(e.id for e in nontree))

    def intersection_pairing(self, x: Cycle, y: Cycle) -> tuple:
        """The lattice vector sum of x_e * y_e * length(e) over edges."""
        self.require_cycle(x)
        self.require_cycle(y)
        total = [0] * self.monoid.rank
        for e in self.edges:
            c = x.coefficient(e.id) * y.coefficient(e.id)
            if c:
                for i, li in enumerate(e.length):
                    total[i] += c * li
        return tuple(total)

    def cycle_length(self, x: Cycle) -> tuple:
        """The monoid element sum of |x_e| * length(e); lies in M."""
        self.require_cycle(x)
        total = [0] * self.monoid.rank
        for e in self.edges:
            c = abs(x.coefficient(e.id))
            if c:
                for i, li in enumerate(e.length):
                    total[i] += c * li
        return tuple(total)

    # -- transformations --------------------------------------------------

    def subdivide(self, edge_id: str, parts) -> "MetricGraph":
        """Replace an edge by a chain of fresh edges with the given lengths.

        Parts must be at least two nonzero monoid elements summing to
        the edge's length.  Fresh ids are derived from the edge id.
        """
        e = self.edge(edge_id)
        parts = [_as_vector(p, self.monoid.rank, "subdivision part") for p in parts]
        if len(parts) < 2:
            raise PreconditionError("subdivision needs at least two parts")
        for p in parts:
            if not any(p):
                raise PreconditionError("subdivision part is zero")
            if not self.monoid.contains(p):
                raise PreconditionError(
                    f"subdivision part {list(p)} lies outside the monoid")
        total = tuple(sum(c[i] for c in parts) for i in range(self.monoid.rank))
        if total != e.length:
            raise PreconditionError(
                f"subdivision parts sum to {list(total)}, expected {list(e.length)}")
        new_vertices = [f"{edge_id}.v{i}" for i in range(1, len(parts))]
        new_edge_ids = [f"{edge_id}.{i}" for i in range(len(parts))]
        used = set(self.vertices) | {x.id for x in self.edges}
        for name in new_vertices + new_edge_ids:
            if name in used:
                raise ValidationError(f"fresh id {name!r} collides with an existing id")
        chain_vertices = [e.tail] + new_vertices + [e.head]
        new_edges = [x for x in self.edges if x.id != edge_id]
        for i, eid in enumerate(new_edge_ids):
            new_edges.append(Edge(eid, chain_vertices[i], chain_vertices[i + 1],
                                  parts[i]))
        return MetricGraph(self.monoid,
                           self.vertices + tuple(new_vertices),
                           tuple(new_edges))

    def subdivision_cycle(self, cycle: Cycle, edge_id: str, nparts: int) -> Cycle:
        """Transport a cycle through :meth:`subdivide` of the named edge."""
        out = dict(cycle.coeffs)
        c = out.pop(edge_id, 0)
        if c:
            for i in range(nparts):
                out[f"{edge_id}.{i}"] = c
        return Cycle(out)

    def contract(self, hom: MonoidHom) -> tuple:
        """Push the graph forward along a monoid map.

        Lengths become their images; edges of zero new length are
        contracted as graph minors (a zero-length loop is deleted).
        Returns the contracted graph together with the induced
        :class:`CycleMap`.
        """
        if hom.source != self.monoid:
            raise ValidationError("hom source does not match the graph monoid")
        hom.require_valid()
        new_lengths = {e.id: hom.apply(e.length) for e in self.edges}
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e in self.edges:
            if not any(new_lengths[e.id]):
                a, b = find(e.tail), find(e.head)
                if a != b:
                    # Deterministic representative: lexicographic minimum.
                    lo, hi = sorted((a, b))
                    parent[hi] = lo
        classes = {}
        for v in self.vertices:
            classes.setdefault(find(v), []).append(v)
        vmap = {}
        for rep, members in classes.items():
            canon = min(members)
            for v in members:
                vmap[v] = canon
        surviving = []
        for e in self.edges:
            if any(new_lengths[e.id]):
                surviving.append(Edge(e.id, vmap[e.tail], vmap[e.head],
                                      new_lengths[e.id]))
        graph = MetricGraph(hom.target, tuple(sorted(set(vmap.values()))),
                            tuple(surviving))
        cmap = CycleMap(self, graph, vmap, tuple(e.id for e in surviving))
        return graph, cmap

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"monoid": self.monoid.to_json(),
                "vertices": list(self.vertices),
                "edges": [{"id": e.id, "tail": e.tail, "head": e.head,
                           "length": list(e.length)} for e in self.edges]}

    @classmethod
    def from_json(cls, obj) -> "MetricGraph":
        if not isinstance(obj, dict):
            raise ValidationError("graph schema must be a JSON object")
        try:
            monoid = SharpFsMonoid.from_json(obj["monoid"])
            vertices = [str(v) for v in obj["vertices"]]
            raw_edges = obj["edges"]
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"bad graph schema: {exc}") from exc
        edges = []
        for re in raw_edges:
            try:
                length = re["length"]
                if isinstance(length, int):
                    if monoid.rank != 1:
                        raise ValidationError(
                            "bare integer lengths need a rank-1 monoid")
                    length = (length,)
                edges.append(Edge(str(re["id"]), str(re["tail"]),
                                  str(re["head"]), tuple(length)))
            except (KeyError, TypeError) as exc:
                raise ValidationError(f"bad edge entry: {exc}") from exc
        return cls(monoid, tuple(vertices), tuple(edges))


@dataclass(frozen=True)
class CycleMap:
    """Restriction of cycles to the edges surviving a contraction."""

    source: MetricGraph
    target: MetricGraph
    vertex_map: dict = field(compare=False)
    surviving_edges: tuple = ()

    def push(self, cycle: Cycle) -> Cycle:
        self.source.require_cycle(cycle)
        keep = set(self.surviving_edges)
        return Cycle({e: c for e, c in cycle.coeffs.items() if e in keep})

    def induced_matrix(self, src: HomologyData, dst: HomologyData):
        """Matrix of H1(source) -> H1(target) in the two fundamental bases."""
        from .abgroup import IntMatrix
        cols = [dst.coordinates(self.push(gamma)) for gamma in src.basis]
        return IntMatrix.from_columns(cols, dst.rank)


def _spanning_forest(vertices, edges):
    """BFS spanning forest; returns (tree adjacency, non-tree edges).

    The adjacency maps each vertex to its parent link ``(parent, edge,
    forward)`` where ``forward`` records whether the edge points from
    parent to child.  Roots map to ``None``.
    """
    adj = {v: [] for v in vertices}
    for e in edges:
        if not e.is_loop():
            adj[e.tail].append((e.head, e, True))
            adj[e.head].append((e.tail, e, False))
    link = {}
    tree_edge_ids = set()
    for root in vertices:
        if root in link:
            continue
        link[root] = None
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w, e, forward in adj[v]:
                if w not in link:
                    link[w] = (v, e, forward)
                    tree_edge_ids.add(e.id)
                    queue.append(w)
    nontree = [e for e in edges if e.id not in tree_edge_ids]
    return link, nontree


def _tree_path(link, start, end):
    """Edge coefficients of the unique forest path from start to end."""
    def root_path(v):
        path = []
        while link[v] is not None:
            parent, e, forward = link[v]
            path.append((v, parent, e, forward))
            v = parent
        return path, v

    up_start, root_s = root_path(start)
    up_end, root_e = root_path(end)
    if root_s != root_e:
        raise ValueError("vertices lie in different forest components")
    seen = {start: 0}
    v = start
    for i, (_, parent, _, _) in enumerate(up_start):
        seen[parent] = i + 1
        v = parent
    # Find the meeting point of the two root paths.
    meet = end
    down = []
    for child, parent, e, forward in up_end:
        if meet in seen:
            break
        down.append((child, parent, e, forward))
        meet = parent
    coeffs = {}
    # start -> meet: walk upward, traversing each edge child->parent.
    for child, parent, e, forward in up_start[:seen.get(meet, 0)]:
        # forward=True means e points parent->child, so child->parent is -1.
        coeffs[e.id] = coeffs.get(e.id, 0) + (-1 if forward else 1)
    # meet -> end: reverse of end's upward walk, traversing parent->child.
    for child, parent, e, forward in reversed(down):
        coeffs[e.id] = coeffs.get(e.id, 0) + (1 if forward else -1)
    return coeffs


def _fundamental_cycle(link, e: Edge) -> Cycle:
    """The cycle of a non-tree edge: the edge plus the tree path closing it."""
    coeffs = {e.id: 1}
    if not e.is_loop():
        for eid, c in _tree_path(link, e.head, e.tail).items():
            coeffs[eid] = coeffs.get(eid, 0) + c
    return Cycle(coeffs)


def cycle_space_basis(graph: MetricGraph, edge_ids) -> list:
    """A basis of the cycle space of the subgraph on the given edges.

    The subgraph keeps all vertices and may be disconnected; the basis
    consists of fundamental cycles of a spanning forest, returned as
    cycles of the ambient graph.
    """
    keep = set(edge_ids)
    sub = [e for e in graph.edges if e.id in keep]
    link, nontree = _spanning_forest(graph.vertices, sub)
    return [_fundamental_cycle(link, e) for e in nontree]
