"""Exact maximum-uncrossed-subgraph and uncrossed-number search.

A subset H of edges is *feasible* when the spanning subgraph (V, H) has a
genus-0 rotation system in which every remaining edge has both endpoints
on a common face.  Feasible sets are exactly the uncrossed edge sets
realizable by some plane drawing: the embedding places H without
crossings, and each remaining edge can be drawn inside its assigned face
(crossings among the remaining edges are allowed).  For a connected host
graph a maximum uncrossed edge set can always be taken connected and
spanning, so the search ranges over such subsets only.  h(G) is the
maximum size of a feasible set, and unc(G) is the minimum number of
feasible sets covering all edges.

Everything here is deliberately brute force over rotation systems; it is
the independent check for the closed-form bounds, so it must not consult
them.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass

from .embedding import RotationSystem, trace_faces, genus
from .errors import MalformedCertificateError, SearchBudgetError
from .graphs import Edge, Graph

_FACT = [math.factorial(i) for i in range(64)]


@dataclass(frozen=True)
class SearchLimits:
    max_n: int = 8
    max_rotation_budget: int = 10_000_000
    time_budget: float | None = None  # seconds

    def __post_init__(self):
        if self.max_n < 1 or self.max_rotation_budget < 1:
            raise ValueError("limits must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time budget must be positive")


DEFAULT_LIMITS = SearchLimits()
DEFAULT_UNC_LIMITS = SearchLimits(max_n=6)


@dataclass(frozen=True)
class SubdrawingCertificate:
    """Machine-checkable witness that h(graph) >= len(uncrossed)."""

    graph: Graph
    uncrossed: tuple[Edge, ...]
    rotation: RotationSystem
    face_assignment: dict[Edge, int]

    def to_json_dict(self) -> dict:
        return {
            "n": self.graph.n,
            "uncrossed": [list(e) for e in self.uncrossed],
            "rotation": [list(c) for c in self.rotation.order],
            "assignment": {f"{u}-{v}": i for (u, v), i in sorted(self.face_assignment.items())},
        }

    @staticmethod
    def from_json_dict(data: dict, graph: Graph) -> "SubdrawingCertificate":
        try:
            uncrossed = tuple(sorted((min(u, v), max(u, v)) for u, v in data["uncrossed"]))
            rotation = RotationSystem(
                Graph(data["n"], uncrossed), tuple(tuple(c) for c in data["rotation"])
            )
            assignment = {}
            for key, idx in data["assignment"].items():
                u, v = (int(t) for t in key.split("-"))
                assignment[(min(u, v), max(u, v))] = int(idx)
        except (KeyError, ValueError, TypeError) as exc:
            raise MalformedCertificateError(f"bad certificate JSON: {exc}") from exc
        return SubdrawingCertificate(graph, uncrossed, rotation, assignment)


def verify_certificate(cert: SubdrawingCertificate) -> bool:
    """Check the four witness conditions independently.

    Structural garbage (edges outside the graph, dangling face indices,
    rotation over the wrong edge set) raises MalformedCertificateError;
    a well-formed but invalid witness returns False.
    """
    g = cert.graph
    edge_set = set(g.edges)
    hset = set(cert.uncrossed)
    if not hset <= edge_set:
        raise MalformedCertificateError("uncrossed contains an edge not in the graph")
    if cert.rotation.graph.n != g.n or set(cert.rotation.graph.edges) != hset:
        raise MalformedCertificateError("rotation is not over the uncrossed subgraph")
    missing = edge_set - hset
    if set(cert.face_assignment) != missing:
        raise MalformedCertificateError("assignment keys must be exactly the crossed edges")
    faces = trace_faces(cert.rotation)
    for e, idx in cert.face_assignment.items():
        if not isinstance(idx, int) or not 0 <= idx < faces.f:
            raise MalformedCertificateError(f"dangling face index {idx} for edge {e}")

    if not cert.rotation.graph.is_connected():  # connected and spanning
        return False
    if genus(cert.rotation) != 0:
        return False
    if g.n >= 3 and len(hset) > 3 * g.n - 6:
        return False
    for (u, v), idx in cert.face_assignment.items():
        verts = faces.faces[idx].vertices
        if u not in verts or v not in verts:
            return False
    return True


def _connected_spanning(n: int, edges) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps == 1


class _Deadline:
    def __init__(self, seconds: float | None):
        self.at = time.monotonic() + seconds if seconds else None

    def check(self):
        if self.at is not None and time.monotonic() > self.at:
            raise SearchBudgetError("time budget exceeded")


def _scan_embeddings(n: int, hedges: tuple[Edge, ...], missing, budget: int):
    """First genus-0 rotation system of (V, hedges) with all missing
    pairs co-facial, scanning systems in lexicographic order.

    Returns the per-vertex cyclic orders, or None.  The hot path: systems
    are visited with an odometer so only changed vertices are reapplied,
    and faces are counted as cycles of the next-dart permutation.
    """
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in hedges:
        adj[u].append(v)
        adj[v].append(u)
    total = 1
    for a in adj:
        a.sort()
        total *= _FACT[max(len(a) - 1, 0)]
    if total > budget:
        raise SearchBudgetError(f"{total} rotation systems exceed the budget of {budget}")

    darts = sorted(d for u, v in hedges for d in ((u, v), (v, u)))
    idx = {d: i for i, d in enumerate(darts)}
    nd = len(darts)
    target_f = 2 - n + len(hedges)  # face count of a genus-0 embedding

    # per-vertex arrangements with precomputed next-dart contributions
    contribs: list[list[tuple[tuple[int, ...], tuple[tuple[int, int], ...]]]] = []
    for v in range(n):
        a = adj[v]
        arrs = []
        if len(a) <= 1:
            pairs = ((idx[(a[0], v)], idx[(v, a[0])]),) if a else ()
            arrs.append((tuple(a), pairs))
        else:
            head, rest = a[0], a[1:]
            for perm in itertools.permutations(rest):
                order = (head,) + perm
                d = len(order)
                pairs = tuple(
                    (idx[(order[i], v)], idx[(v, order[(i + 1) % d])]) for i in range(d)
                )
                arrs.append((order, pairs))
        contribs.append(arrs)

    nxt = [0] * nd
    pos = [0] * n
    for v in range(n):
        for s, t in contribs[v][0][1]:
            nxt[s] = t
    varying = [v for v in range(n) if len(contribs[v]) > 1]
    seen = [0] * nd
    stamp = 0
    dart_range = range(nd)

    while True:
        stamp += 1
        f = 0
        for d0 in dart_range:
            if seen[d0] == stamp:
                continue
            f += 1
            w = d0
            while seen[w] != stamp:
                seen[w] = stamp
                w = nxt[w]
        if f == target_f:
            ok = True
            if missing:
                stamp += 1
                face_verts = []
                for d0 in dart_range:
                    if seen[d0] == stamp:
                        continue
                    verts = set()
                    w = d0
                    while seen[w] != stamp:
                        seen[w] = stamp
                        verts.add(darts[w][0])
                        w = nxt[w]
                    face_verts.append(verts)
                for u, v in missing:
                    if not any(u in fv and v in fv for fv in face_verts):
                        ok = False
                        break
            if ok:
                return tuple(contribs[v][pos[v]][0] for v in range(n))
        # odometer: advance the last vertex that has not wrapped
        i = len(varying) - 1
        while i >= 0:
            v = varying[i]
            p = pos[v] + 1
            if p < len(contribs[v]):
                pos[v] = p
                for s, t in contribs[v][p][1]:
                    nxt[s] = t
                break
            pos[v] = 0
            for s, t in contribs[v][0][1]:
                nxt[s] = t
            i -= 1
        else:
            return None


def _trivial_certificate(g: Graph) -> SubdrawingCertificate:
    return SubdrawingCertificate(
        g, g.edges, RotationSystem(g, tuple(tuple(a) for a in g.adjacency())), {}
    )


def _build_certificate(g: Graph, hedges: tuple[Edge, ...], orders) -> SubdrawingCertificate:
    rotation = RotationSystem(Graph(g.n, hedges), orders)
    faces = trace_faces(rotation)
    assignment = {}
    for e in sorted(set(g.edges) - set(hedges)):
        u, v = e
        for i, face in enumerate(faces.faces):
            if u in face.vertices and v in face.vertices:
                assignment[e] = i
                break
    return SubdrawingCertificate(g, tuple(sorted(hedges)), rotation, assignment)


def feasible(
    g: Graph, subset, limits: SearchLimits = DEFAULT_LIMITS
) -> SubdrawingCertificate | None:
    """Certificate for (V, subset) as an uncrossed edge set, or None."""
    if not g.is_connected():
        raise ValueError("feasibility search expects a connected graph")
    hedges = tuple(sorted(subset))
    if not set(hedges) <= set(g.edges):
        raise ValueError("subset contains an edge not in the graph")
    if g.n == 1:
        return _trivial_certificate(g)
    if not _connected_spanning(g.n, hedges):
        return None
    missing = tuple(sorted(set(g.edges) - set(hedges)))
    orders = _scan_embeddings(g.n, hedges, missing, limits.max_rotation_budget)
    if orders is None:
        return None
    return _build_certificate(g, hedges, orders)


def _size_cap(g: Graph) -> int:
    return g.m if g.n < 3 else min(g.m, 3 * g.n - 6)


def exact_h(
    g: Graph, limits: SearchLimits = DEFAULT_LIMITS
) -> tuple[int, SubdrawingCertificate]:
    """Maximum feasible-set size with a verifying witness.

    Candidate subsets are scanned by decreasing size, lexicographically
    within a size, so the returned witness is deterministic.  A spanning
    tree is always feasible, hence the search terminates at size n-1 at
    the latest.
    """
    if not g.is_connected():
        raise ValueError("h search expects a connected graph")
    if g.n > limits.max_n:
        raise SearchBudgetError(f"n={g.n} exceeds max_n={limits.max_n}")
    if g.n == 1:
        return 0, _trivial_certificate(g)
    deadline = _Deadline(limits.time_budget)
    missing_all = set(g.edges)
    for size in range(_size_cap(g), g.n - 2, -1):
        for hedges in itertools.combinations(g.edges, size):
            deadline.check()
            if not _connected_spanning(g.n, hedges):
                continue
            missing = tuple(sorted(missing_all - set(hedges)))
            orders = _scan_embeddings(g.n, hedges, missing, limits.max_rotation_budget)
            if orders is not None:
                return size, _build_certificate(g, hedges, orders)
    raise AssertionError("unreachable: a spanning tree is always feasible")


def maximal_feasible_sets(
    g: Graph, limits: SearchLimits = DEFAULT_UNC_LIMITS
) -> tuple[tuple[Edge, ...], ...]:
    """All inclusion-maximal feasible edge sets, largest first.

    Scanning sizes downward makes maximality checks local: a candidate
    is maximal iff it is feasible and not contained in a set already
    found (subsets of feasible sets stay feasible, so they are skipped
    without any embedding work).
    """
    if not g.is_connected():
        raise ValueError("expects a connected graph")
    if g.n > limits.max_n:
        raise SearchBudgetError(f"n={g.n} exceeds max_n={limits.max_n}")
    if g.n == 1 or g.m == 0:
        return (g.edges,)
    deadline = _Deadline(limits.time_budget)
    found: list[frozenset] = []
    result: list[tuple[Edge, ...]] = []
    missing_all = set(g.edges)
    for size in range(_size_cap(g), g.n - 2, -1):
        for hedges in itertools.combinations(g.edges, size):
            deadline.check()
            hset = frozenset(hedges)
            if any(hset <= m for m in found):
                continue
            if not _connected_spanning(g.n, hedges):
                continue
            missing = tuple(sorted(missing_all - hset))
            orders = _scan_embeddings(g.n, hedges, missing, limits.max_rotation_budget)
            if orders is not None:
                found.append(hset)
                result.append(hedges)
    return tuple(result)


def _find_cover(masks: list[int], full: int, k: int) -> list[int] | None:
    """First (in index order) cover of `full` using at most k masks."""
    max_bits = max(bin(m).count("1") for m in masks)

    def dfs(covered: int, chosen: list[int]) -> list[int] | None:
        if covered == full:
            return chosen
        if len(chosen) == k:
            return None
        missing = full & ~covered
        if bin(missing).count("1") > (k - len(chosen)) * max_bits:
            return None
        low = missing & -missing  # branch on the lowest uncovered edge
        for i, mask in enumerate(masks):
            if mask & low:
                got = dfs(covered | mask, chosen + [i])
                if got is not None:
                    return got
        return None

    return dfs(0, [])


def exact_unc(
    g: Graph, limits: SearchLimits = DEFAULT_UNC_LIMITS
) -> tuple[int, list[SubdrawingCertificate]]:
    """Minimum number of feasible sets covering all edges, with witnesses."""
    if not g.is_connected():
        raise ValueError("unc search expects a connected graph")
    if g.n > limits.max_n:
        raise SearchBudgetError(f"n={g.n} exceeds max_n={limits.max_n}")
    if g.m == 0:
        return 1, [_trivial_certificate(g)]
    sets = maximal_feasible_sets(g, limits)
    h = max(len(s) for s in sets)
    edge_index = {e: i for i, e in enumerate(g.edges)}
    masks = [sum(1 << edge_index[e] for e in s) for s in sets]
    full = (1 << g.m) - 1
    lower = max(1, -(-g.m // h))
    for k in range(lower, len(sets) + 1):
        picked = _find_cover(masks, full, k)
        if picked is not None:
            certs = [feasible(g, sets[i], limits) for i in picked]
            assert all(c is not None for c in certs)
            return k, certs
    raise AssertionError("unreachable: the union of maximal sets covers E")
