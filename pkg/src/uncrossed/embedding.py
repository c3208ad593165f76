"""Rotation systems and the faces they induce.

A rotation system assigns each vertex a cyclic order of its neighbors and
thereby a cellular embedding on an orientable surface.  Faces are traced
with the successor convention: after the directed edge (u -> v) the walk
continues with (v -> w) where w follows u in the cyclic order at v.
Embeddings are spherical; no face is distinguished as the outer one.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import SearchBudgetError
from .graphs import Graph

Dart = tuple[int, int]

ROTATION_BUDGET_DEFAULT = 10_000_000


def _rotate_to_min(seq: tuple[int, ...]) -> tuple[int, ...]:
    if len(seq) <= 1:
        return seq
    i = seq.index(min(seq))
    return seq[i:] + seq[:i]


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic neighbor orders, one per vertex, canonically rotated.

    Orders are stored starting at each vertex's smallest neighbor so that
    equal embeddings compare equal and serialize identically.
    """

    graph: Graph
    order: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.order) != self.graph.n:
            raise ValueError("need one cyclic order per vertex")
        adj = self.graph.adjacency()
        normalized = []
        for v, cyc in enumerate(self.order):
            if sorted(cyc) != adj[v]:
                raise ValueError(f"order at vertex {v} is not a permutation of its neighbors")
            normalized.append(_rotate_to_min(tuple(cyc)))
        object.__setattr__(self, "order", tuple(normalized))

    def successor(self, v: int, u: int) -> int:
        """Neighbor following u in the cyclic order at v."""
        cyc = self.order[v]
        return cyc[(cyc.index(u) + 1) % len(cyc)]

    def to_json_dict(self) -> dict:
        return {"n": self.graph.n, "order": [list(c) for c in self.order]}


@dataclass(frozen=True)
class Face:
    walk: tuple[Dart, ...]
    vertices: frozenset[int]

    def __len__(self) -> int:
        return len(self.walk)


@dataclass(frozen=True)
class FaceSet:
    graph: Graph
    faces: tuple[Face, ...]

    @property
    def f(self) -> int:
        return len(self.faces)


@dataclass(frozen=True)
class FaceProfile:
    """Counts s_l of faces by walk length l; f is the total face count."""

    s: dict[int, int]
    f: int


def trace_faces(r: RotationSystem) -> FaceSet:
    """Partition all directed edges into facial walks.

    Faces are emitted in lexicographic order of their smallest directed
    edge, and each walk starts at that edge.
    """
    g = r.graph
    darts = sorted(d for u, v in g.edges for d in ((u, v), (v, u)))
    succ = {}
    for v, cyc in enumerate(r.order):
        d = len(cyc)
        for i, u in enumerate(cyc):
            succ[(u, v)] = (v, cyc[(i + 1) % d])
    visited = set()
    faces = []
    for start in darts:
        if start in visited:
            continue
        walk = []
        cur = start
        while cur not in visited:
            visited.add(cur)
            walk.append(cur)
            cur = succ[cur]
        faces.append(Face(tuple(walk), frozenset(u for u, _ in walk)))
    return FaceSet(g, tuple(faces))


def genus(r: RotationSystem) -> int:
    """Orientable genus of the embedding, via n - m + f = 2 - 2g."""
    g = r.graph
    if not g.is_connected():
        raise ValueError("genus is only defined here for connected graphs")
    f = trace_faces(r).f if g.m > 0 else 1  # a lone vertex spans one face
    val = 2 - g.n + g.m - f
    if val % 2 != 0 or val < 0:
        raise AssertionError(f"impossible Euler count n={g.n} m={g.m} f={f}")
    return val // 2


def face_profile(fs: FaceSet) -> FaceProfile:
    s: dict[int, int] = {}
    for face in fs.faces:
        length = len(face)
        if length < 3:
            raise ValueError(f"face of length {length}: corrupt face set")
        s[length] = s.get(length, 0) + 1
    return FaceProfile(s=dict(sorted(s.items())), f=len(fs.faces))


def cofacial(fs: FaceSet, u: int, v: int) -> bool:
    """True iff some face is incident to both u and v."""
    if u == v:
        raise ValueError("cofacial needs two distinct vertices")
    return any(u in face.vertices and v in face.vertices for face in fs.faces)


def rotation_count(g: Graph) -> int:
    """Number of rotation systems with each vertex's first neighbor pinned."""
    total = 1
    for a in g.adjacency():
        total *= math.factorial(max(len(a) - 1, 0))
    return total


def enumerate_rotation_systems(g: Graph, budget: int = ROTATION_BUDGET_DEFAULT):
    """Yield every rotation system of g exactly once, lexicographically.

    The first neighbor of each vertex's cyclic order is pinned to quotient
    out cyclic rotations.  Raises SearchBudgetError when the count
    prod_v (deg(v)-1)! exceeds the budget.
    """
    if not g.is_connected():
        raise ValueError("rotation enumeration expects a connected graph")
    total = rotation_count(g)
    if total > budget:
        raise SearchBudgetError(
            f"{total} rotation systems exceed the budget of {budget}"
        )
    adj = g.adjacency()
    per_vertex = []
    for a in adj:
        if len(a) <= 1:
            per_vertex.append([tuple(a)])
        else:
            head = a[0]
            per_vertex.append([(head,) + rest for rest in itertools.permutations(a[1:])])
    for combo in itertools.product(*per_vertex):
        yield RotationSystem(g, combo)
