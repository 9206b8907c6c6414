"""Deterministic builders for the named extremal graph families.

Labelling convention: clique / universal vertices come first, then the
rest, so graph6 outputs are stable across runs.  All builders reject
parameters whose graph would exceed the vertex cap.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphCapError, VERTEX_CAP, disjoint_union, join


def _check_cap(n: int, what: str) -> None:
    if n > VERTEX_CAP:
        raise GraphCapError(f"{what} needs {n} vertices, cap is {VERTEX_CAP}")
    if n < 0:
        raise ValueError(f"{what}: negative vertex count {n}")


# ---------------------------------------------------------------------
# basic families
# ---------------------------------------------------------------------

def complete_graph(t: int) -> Graph:
    _check_cap(t, "complete graph")
    full = (1 << t) - 1
    return Graph(t, tuple(full ^ (1 << v) for v in range(t)))


def empty_graph(t: int) -> Graph:
    _check_cap(t, "empty graph")
    return Graph.empty(t)


def path_graph(t: int) -> Graph:
    _check_cap(t, "path")
    return Graph.from_edges(t, [(i, i + 1) for i in range(t - 1)])


def star_graph(r: int) -> Graph:
    """Star S_r: centre of degree r plus r leaves (r+1 vertices)."""
    _check_cap(r + 1, "star")
    if r < 0:
        raise ValueError("star degree must be >= 0")
    return Graph.from_edges(r + 1, [(0, i) for i in range(1, r + 1)])


def matching_graph(t: int) -> Graph:
    """M_t: t vertices carrying a maximum matching (floor(t/2) edges)."""
    _check_cap(t, "matching graph")
    return Graph.from_edges(t, [(2 * i, 2 * i + 1) for i in range(t // 2)])


def turan_graph(n: int, r: int) -> Graph:
    """Complete r-partite graph with part sizes as equal as possible."""
    _check_cap(n, "Turan graph")
    if r < 1:
        raise ValueError("Turan graph needs r >= 1")
    sizes = turan_part_sizes(n, r)
    rows = [0] * n
    full = (1 << n) - 1
    start = 0
    for size in sizes:
        part = ((1 << size) - 1) << start
        for v in range(start, start + size):
            rows[v] = full & ~part
        start += size
    return Graph(n, tuple(rows))


def turan_part_sizes(n: int, r: int) -> list[int]:
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


def friendship_graph(n: int) -> Graph:
    """F_n: star on n vertices plus a maximum matching on its leaves."""
    if n < 3 or n % 2 == 0:
        raise ValueError("friendship graph needs odd n >= 3")
    return join(complete_graph(1), matching_graph(n - 1))


def broom_graph(ell: int, s: int) -> Graph:
    """B_{ell,s}: path on ell vertices with s extra leaves at a penultimate
    vertex (the one adjacent to the highest-indexed end)."""
    if ell < 4 or s < 0:
        raise ValueError("broom needs ell >= 4 and s >= 0")
    _check_cap(ell + s, "broom")
    edges = [(i, i + 1) for i in range(ell - 1)]
    edges += [(ell - 2, ell + i) for i in range(s)]
    return Graph.from_edges(ell + s, edges)


# ---------------------------------------------------------------------
# near-regular graphs (Havel-Hakimi realization)
# ---------------------------------------------------------------------

def near_regular(n: int, d: int) -> Graph:
    """Graph on n vertices with every degree d, except one vertex of
    degree d-1 when d*n is odd.  Realized greedily (Havel-Hakimi), which
    always succeeds on these sequences and is deterministic."""
    _check_cap(n, "near-regular graph")
    if n == 0:
        if d != 0:
            raise ValueError("near-regular on 0 vertices needs d = 0")
        return Graph.empty(0)
    if not 0 <= d < n:
        raise ValueError(f"near-regular needs 0 <= d < n (got n={n}, d={d})")
    residual = [d] * n
    if n and d * n % 2 == 1:
        residual[-1] = d - 1
    target = sorted(residual, reverse=True)
    rows = [0] * n
    while True:
        order = sorted(range(n), key=lambda v: (-residual[v], v))
        v = order[0]
        if residual[v] == 0:
            break
        need = residual[v]
        residual[v] = 0
        for w in order[1 : need + 1]:
            if residual[w] == 0 or rows[v] >> w & 1:
                raise ValueError(f"sequence for n={n}, d={d} not realizable")
            rows[v] |= 1 << w
            rows[w] |= 1 << v
            residual[w] -= 1
    g = Graph(n, tuple(rows))
    assert sorted(g.degrees(), reverse=True) == target
    return g


# ---------------------------------------------------------------------
# extremal constructions
# ---------------------------------------------------------------------

def h_path(n: int, ell: int) -> Graph:
    """H(n,ell): K_b joined to E_{n-b} with b = floor(ell/2)-1, plus one
    edge inside the independent part iff ell is odd."""
    if ell < 4:
        raise ValueError("h_path needs ell >= 4")
    if n < ell:
        raise ValueError(f"h_path needs n >= ell (got n={n}, ell={ell})")
    return h_linear_forest(n, [ell])


def h_linear_forest(n: int, lengths: list[int]) -> Graph:
    """H(n,F) for the linear forest F with the given path orders:
    K_b + E_{n-b} with b = sum(floor(l_i/2)) - 1, plus one edge in the
    independent part iff every l_i is odd."""
    if not lengths or any(l < 2 for l in lengths):
        raise ValueError("lengths must be a nonempty list of integers >= 2")
    total = sum(lengths)
    if n < total:
        raise ValueError(f"need n >= {total} (got n={n})")
    _check_cap(n, "H(n,F)")
    b = sum(l // 2 for l in lengths) - 1
    g = join(complete_graph(b), empty_graph(n - b))
    if all(l % 2 == 1 for l in lengths):
        g = g.with_edge(b, b + 1)
    return g


def g_star_join(n: int, i: int, r: int) -> Graph:
    """G(n,i,r): K_{i-1} joined to a near (r-1)-regular graph on n-i+1
    vertices."""
    if i < 1 or r < 1:
        raise ValueError("g_star_join needs i >= 1 and r >= 1")
    if n - i + 1 <= r - 1:
        raise ValueError(f"g_star_join needs n-i+1 > r-1 (got n={n}, i={i}, r={r})")
    _check_cap(n, "G(n,i,r)")
    return join(complete_graph(i - 1), near_regular(n - i + 1, r - 1))


def k_join_matching(n: int, k: int) -> Graph:
    """K_{k-1} joined to M_{n-k+1}."""
    if k < 1 or n < k:
        raise ValueError(f"k_join_matching needs 1 <= k <= n (got n={n}, k={k})")
    _check_cap(n, "K_{k-1}+M_{n-k+1}")
    return join(complete_graph(k - 1), matching_graph(n - k + 1))


def unbalanced_bipartite(n: int) -> Graph:
    """Complete bipartite graph with part sizes floor(n/2)-1 and
    ceil(n/2)+1 (the e_4 counterexample to Turan-graph optimality)."""
    if n < 6:
        raise ValueError("unbalanced_bipartite needs n >= 6")
    _check_cap(n, "unbalanced bipartite graph")
    small = n // 2 - 1
    return join(empty_graph(small), empty_graph(n - small))


# ---------------------------------------------------------------------
# family spec grammar (CLI surface)
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: dict[str, object]

    def __str__(self) -> str:
        items = ",".join(
            f"{k}={'+'.join(map(str, v)) if isinstance(v, list) else v}"
            for k, v in self.params.items()
        )
        return f"{self.tag}:{items}"


_FAMILIES: dict[str, tuple[tuple[str, ...], object]] = {
    "complete": (("t",), lambda p: complete_graph(p["t"])),
    "empty": (("t",), lambda p: empty_graph(p["t"])),
    "path": (("t",), lambda p: path_graph(p["t"])),
    "star": (("r",), lambda p: star_graph(p["r"])),
    "matching": (("t",), lambda p: matching_graph(p["t"])),
    "turan": (("n", "r"), lambda p: turan_graph(p["n"], p["r"])),
    "friendship": (("n",), lambda p: friendship_graph(p["n"])),
    "broom": (("ell", "s"), lambda p: broom_graph(p["ell"], p["s"])),
    "near-regular": (("n", "d"), lambda p: near_regular(p["n"], p["d"])),
    "h-path": (("n", "ell"), lambda p: h_path(p["n"], p["ell"])),
    "h-forest": (("n", "lengths"), lambda p: h_linear_forest(p["n"], p["lengths"])),
    "g-star": (("n", "i", "r"), lambda p: g_star_join(p["n"], p["i"], p["r"])),
    "k-matching": (("n", "k"), lambda p: k_join_matching(p["n"], p["k"])),
    "unbalanced": (("n",), lambda p: unbalanced_bipartite(p["n"])),
}


def parse_family(text: str) -> FamilySpec:
    """Parse the family grammar, e.g. ``h-path:n=10,ell=6`` or
    ``h-forest:n=12,lengths=5+3``."""
    tag, sep, rest = text.partition(":")
    tag = tag.strip()
    if tag not in _FAMILIES:
        known = ", ".join(sorted(_FAMILIES))
        raise ValueError(f"unknown family {tag!r} (known: {known})")
    wanted, _ = _FAMILIES[tag]
    params: dict[str, object] = {}
    if sep and rest.strip():
        for item in rest.split(","):
            key, eq, val = item.partition("=")
            key = key.strip()
            if not eq or key not in wanted:
                raise ValueError(f"family {tag!r}: bad parameter {item!r}")
            try:
                if key == "lengths":
                    params[key] = [int(x) for x in val.split("+")]
                else:
                    params[key] = int(val)
            except ValueError as exc:
                raise ValueError(f"family {tag!r}: bad value {val!r} for {key}") from exc
    missing = [k for k in wanted if k not in params]
    if missing:
        raise ValueError(f"family {tag!r}: missing parameters {missing}")
    return FamilySpec(tag, params)


def build_family(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_family(spec)
    _, builder = _FAMILIES[spec.tag]
    return builder(spec.params)


def clique_union(a: int, clique: int, b: int) -> Graph:
    """a disjoint copies of K_clique plus one K_b (classical extremal shape)."""
    g = empty_graph(0)
    for _ in range(a):
        g = disjoint_union(g, complete_graph(clique))
    return disjoint_union(g, complete_graph(b))
