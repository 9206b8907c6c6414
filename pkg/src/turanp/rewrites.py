"""Degree-power-increasing rewrites of pendent structures.

A connected host C with a reference vertex v of maximum degree at least
ell+s-1 can have five kinds of pendent structures hanging off an anchor
x != v: a pendent edge, triangle, diamond, spindle (t >= 2 shared leaves
between x and a hub z), or spindle+ (same plus the xz edge).  Peripheral
vertices have no neighbours outside the structure.  Rewiring the
structure's vertices onto v preserves broom-freeness, keeps v of maximum
degree, and strictly increases e_p for every p >= 2 (p = 1 can decrease:
the triangle rewrite deletes a net edge).
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .graphs import Graph, iter_bits

KINDS = ("edge", "triangle", "diamond", "spindle", "spindle_plus")


class SiteError(ValueError):
    """Site is stale or violates its structural conditions."""


@dataclass(frozen=True)
class PendentSite:
    """A pendent structure at anchor x, relative to reference vertex v.

    vertices holds the peripherals: (y,) for edge; (y, y') for triangle;
    (z, y, y') for diamond; (z, y_1, ..., y_t) for spindle/spindle+."""

    kind: str
    x: int
    vertices: tuple[int, ...]
    v: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown site kind {self.kind!r}")

    def all_vertices(self) -> tuple[int, ...]:
        return (self.x,) + self.vertices

    def to_json(self) -> dict:
        return {"kind": self.kind, "x": self.x, "v": self.v,
                "vertices": list(self.vertices)}


def _exact_neighbors(g: Graph, v: int, expect: set[int]) -> bool:
    return set(iter_bits(g.rows[v])) == expect


def find_sites(g: Graph, v: int) -> list[PendentSite]:
    """All pendent sites of the connected graph g relative to v, in a
    deterministic order.  Complete: every structure matching one of the
    five definitions is listed."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if not g.is_connected():
        raise ValueError("host graph must be connected")
    sites: list[PendentSite] = []
    for x in range(g.n):
        if x == v:
            continue
        nx = list(iter_bits(g.rows[x]))
        # pendent edges: y's only neighbour is x
        for y in nx:
            if y != v and _exact_neighbors(g, y, {x}):
                sites.append(PendentSite("edge", x, (y,), v))
        # pendent triangles: x,y,y' mutually adjacent, y,y' closed off
        for i, y in enumerate(nx):
            for yp in nx[i + 1 :]:
                if v in (y, yp) or not g.has_edge(y, yp):
                    continue
                if _exact_neighbors(g, y, {x, yp}) and _exact_neighbors(g, yp, {x, y}):
                    sites.append(PendentSite("triangle", x, (y, yp), v))
        # pendent diamonds: hub z over the triangle's rim pair, xz absent
        for i, y in enumerate(nx):
            for yp in nx[i + 1 :]:
                if v in (y, yp) or not g.has_edge(y, yp):
                    continue
                common = g.rows[y] & g.rows[yp] & ~(1 << x) & ~(1 << v)
                for z in iter_bits(common):
                    if g.has_edge(x, z):
                        continue
                    if (_exact_neighbors(g, z, {y, yp})
                            and _exact_neighbors(g, y, {x, z, yp})
                            and _exact_neighbors(g, yp, {x, z, y})):
                        sites.append(PendentSite("diamond", x, (z, y, yp), v))
        # spindles: hub z sharing t >= 2 leaves with x; xz edge decides +
        for z in range(g.n):
            if z in (v, x):
                continue
            plus = g.has_edge(x, z)
            leaves = g.rows[z] & ~(1 << x)
            if leaves.bit_count() < 2 or leaves >> v & 1:
                continue
            if not _exact_neighbors(g, z, set(iter_bits(leaves)) | ({x} if plus else set())):
                continue
            ys = list(iter_bits(leaves))
            if all(_exact_neighbors(g, y, {x, z}) for y in ys):
                kind = "spindle_plus" if plus else "spindle"
                sites.append(PendentSite(kind, x, (z, *ys), v))
    rank = {k: i for i, k in enumerate(KINDS)}
    sites.sort(key=lambda s: (rank[s.kind], s.x, s.vertices))
    return sites


def _validate_site(g: Graph, v: int, site: PendentSite) -> None:
    x = site.x
    verts = site.all_vertices()
    if v in verts or len(set(verts)) != len(verts):
        raise SiteError("site vertices must be distinct and exclude v")
    if any(not 0 <= u < g.n for u in verts):
        raise SiteError("site vertex out of range")
    kind = site.kind
    ok = False
    if kind == "edge":
        (y,) = site.vertices
        ok = g.has_edge(x, y) and _exact_neighbors(g, y, {x})
    elif kind == "triangle":
        y, yp = site.vertices
        ok = (g.has_edge(x, y) and g.has_edge(x, yp) and g.has_edge(y, yp)
              and _exact_neighbors(g, y, {x, yp}) and _exact_neighbors(g, yp, {x, y}))
    elif kind == "diamond":
        z, y, yp = site.vertices
        ok = (g.has_edge(x, y) and g.has_edge(x, yp) and g.has_edge(y, yp)
              and g.has_edge(z, y) and g.has_edge(z, yp) and not g.has_edge(x, z)
              and _exact_neighbors(g, z, {y, yp})
              and _exact_neighbors(g, y, {x, z, yp})
              and _exact_neighbors(g, yp, {x, z, y}))
    else:
        z, *ys = site.vertices
        plus = kind == "spindle_plus"
        ok = (len(ys) >= 2
              and g.has_edge(x, z) == plus
              and all(g.has_edge(x, y) and g.has_edge(z, y) for y in ys)
              and _exact_neighbors(g, z, set(ys) | ({x} if plus else set()))
              and all(_exact_neighbors(g, y, {x, z}) for y in ys))
    if not ok:
        raise SiteError(f"stale or invalid {kind} site at x={x}")


def apply_rewrite(g: Graph, v: int, site: PendentSite, ell: int, s: int) -> Graph:
    """Rewire the site onto v: delete the structure's edges and connect
    its peripherals (and hub, where present) to v.  Requires v to have
    maximum degree at least ell+s-1; the result then stays B_{ell,s}-free
    whenever g was, keeps v at maximum degree, and has strictly larger
    e_p for every p >= 2."""
    if not g.is_connected():
        raise SiteError("host graph must be connected")
    _validate_site(g, v, site)
    dv = g.degree(v)
    if dv != g.max_degree():
        raise SiteError("v must have maximum degree")
    if dv < ell + s - 1:
        raise SiteError(f"need d(v) >= ell+s-1 = {ell + s - 1}, have {dv}")
    x = site.x
    kind = site.kind
    if kind == "edge":
        (y,) = site.vertices
        remove = [(x, y)]
        add = [(v, y)]
    elif kind == "triangle":
        y, yp = site.vertices
        remove = [(x, y), (x, yp), (y, yp)]
        add = [(v, y), (v, yp)]
    elif kind == "diamond":
        z, y, yp = site.vertices
        remove = [(x, y), (x, yp), (z, y), (z, yp), (y, yp)]
        add = [(v, z), (v, y), (v, yp)]
    else:
        z, *ys = site.vertices
        remove = [(x, y) for y in ys] + [(z, y) for y in ys]
        if kind == "spindle_plus":
            remove.append((x, z))
        add = [(v, z)] + [(v, y) for y in ys]
    rows = list(g.rows)
    for u, w in remove:
        rows[u] &= ~(1 << w)
        rows[w] &= ~(1 << u)
    for u, w in add:
        rows[u] |= 1 << w
        rows[w] |= 1 << u
    return Graph(g.n, tuple(rows))


def demo_instance(kind: str, ell: int, s: int,
                  rng: random.Random) -> tuple[Graph, int, PendentSite]:
    """Random host in the shape the rewrites are used on: a large star at
    v (guaranteeing the maximum-degree condition), one planted pendent
    structure at a neighbour x of v, and a few extra star leaves."""
    if kind not in KINDS:
        raise ValueError(f"unknown site kind {kind!r}")
    if ell < 5 or s < 0:
        raise ValueError("need ell >= 5 and s >= 0")
    base = max(ell + s - 1, 7) + rng.randint(0, 1)
    v = 0
    edges = [(v, i) for i in range(1, base + 1)]
    x = rng.randint(1, base)
    nxt = base + 1
    if kind == "edge":
        peripherals = (nxt,)
        edges.append((x, nxt))
        nxt += 1
    elif kind == "triangle":
        y, yp = nxt, nxt + 1
        peripherals = (y, yp)
        edges += [(x, y), (x, yp), (y, yp)]
        nxt += 2
    elif kind == "diamond":
        z, y, yp = nxt, nxt + 1, nxt + 2
        peripherals = (z, y, yp)
        edges += [(x, y), (x, yp), (z, y), (z, yp), (y, yp)]
        nxt += 3
    else:
        t = rng.randint(2, 3)
        z = nxt
        ys = tuple(range(nxt + 1, nxt + 1 + t))
        peripherals = (z, *ys)
        edges += [(x, y) for y in ys] + [(z, y) for y in ys]
        if kind == "spindle_plus":
            edges.append((x, z))
        nxt += 1 + t
    for _ in range(rng.randint(0, 2)):
        edges.append((v, nxt))
        nxt += 1
    g = Graph.from_edges(nxt, edges)
    return g, v, PendentSite(kind, x, peripherals, v)
