"""Exact vertex orbits under the full automorphism group.

The main route refines vertices by invariants (degree, sorted distance
multiset, then iterated neighbor-class multisets). Refinement never
over-splits (cells are unions of orbits) but may over-merge, so vertices
sharing a cell are only united after a backtracking search actually
exhibits an automorphism mapping one to the other. The brute-force oracle
enumerates all n! permutations and is the independent ground truth for
small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import CapacityError, DomainError
from .graph import Graph, distance_matrix

ORBIT_CAP = 64
BRUTE_FORCE_CAP = 8


@dataclass(frozen=True)
class OrbitPartition:
    """Vertex orbits, each sorted, ordered by (size, smallest member)."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise DomainError("empty orbit block")
            if set(block) & seen:
                raise DomainError("orbit blocks overlap")
            seen.update(block)
        if seen != set(range(len(seen))):
            raise DomainError("orbit blocks must cover 0..n-1")

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def total(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)


def _canonical_blocks(groups: dict[int, list[int]]) -> OrbitPartition:
    blocks = sorted(
        (tuple(sorted(members)) for members in groups.values()),
        key=lambda b: (len(b), b[0]),
    )
    return OrbitPartition(blocks=tuple(blocks))


class _DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra > rb:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def groups(self, n: int) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v in range(n):
            out.setdefault(self.find(v), []).append(v)
        return out


def _initial_colors(g: Graph) -> list[int]:
    d = distance_matrix(g)
    sigs = []
    for v in range(g.n):
        row = tuple(sorted(int(x) for i, x in enumerate(d.dist[v]) if i != v))
        sigs.append((g.degree(v), row))
    return _compress(sigs)


def _compress(sigs: list) -> list[int]:
    table: dict = {}
    out = []
    for s in sigs:
        if s not in table:
            table[s] = len(table)
        out.append(table[s])
    return out


def _refine(g: Graph, colors: list[int]) -> list[int]:
    """Iterate neighbor-class multiset refinement until stable."""
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in g.adjacency[v])))
            for v in range(g.n)
        ]
        new = _compress(sigs)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _find_automorphism(
    g: Graph, colors: list[int], src: int, dst: int
) -> list[int] | None:
    """Backtracking search for an automorphism with sigma(src) = dst.

    Candidate images are explored in ascending vertex order so discovered
    generators are reproducible. Consistency is tracked with adjacency
    bitmasks: a candidate c for vertex w is viable iff c's already-used
    neighbors are exactly the images of w's already-assigned neighbors.
    """
    n = g.n
    adjbits = [0] * n
    for u, v in g.edges:
        adjbits[u] |= 1 << v
        adjbits[v] |= 1 << u

    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    if colors[src] != colors[dst]:
        return None

    rest = sorted(
        (v for v in range(n) if v != src),
        key=lambda v: (len(cells[colors[v]]), v),
    )
    order = [src] + rest

    image = [-1] * n
    mapped_nbr_bits = [0] * n
    used_mask = 0

    def assign(w: int, c: int) -> None:
        nonlocal used_mask
        image[w] = c
        used_mask |= 1 << c
        for x in g.adjacency[w]:
            mapped_nbr_bits[x] |= 1 << c

    def unassign(w: int, c: int) -> None:
        nonlocal used_mask
        image[w] = -1
        used_mask &= ~(1 << c)
        for x in g.adjacency[w]:
            mapped_nbr_bits[x] &= ~(1 << c)

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        w = order[pos]
        want = mapped_nbr_bits[w]
        for c in cells[colors[w]]:
            if pos == 0 and c != dst:
                continue
            if used_mask >> c & 1:
                continue
            if adjbits[c] & used_mask != want:
                continue
            assign(w, c)
            if extend(pos + 1):
                return True
            unassign(w, c)
        return False

    if extend(0):
        return image
    return None


def vertex_orbits(g: Graph, cap: int = ORBIT_CAP) -> OrbitPartition:
    """Exact orbits of the automorphism group.

    Exactness is non-negotiable, so graphs beyond the cap (default 64
    vertices) raise CapacityError instead of degrading to the refinement
    cells alone.
    """
    if g.n < 1:
        raise DomainError("vertex orbits need n >= 1")
    if g.n > cap:
        raise CapacityError(
            f"exact orbit computation capped at n = {cap}, got {g.n}"
        )
    colors = _refine(g, _initial_colors(g))

    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(colors[v], []).append(v)

    dsu = _DisjointSet(g.n)
    for color in sorted(cells):
        members = sorted(cells[color])
        rep = members[0]
        for v in members[1:]:
            if dsu.find(v) == dsu.find(rep):
                continue
            sigma = _find_automorphism(g, colors, rep, v)
            if sigma is not None:
                for w, img in enumerate(sigma):
                    dsu.union(w, img)
    return _canonical_blocks(dsu.groups(g.n))


def brute_force_orbits(g: Graph) -> OrbitPartition:
    """Oracle: join vertices related by any of the n! candidate permutations."""
    if g.n < 1:
        raise DomainError("vertex orbits need n >= 1")
    if g.n > BRUTE_FORCE_CAP:
        raise CapacityError(
            f"brute-force orbits capped at n = {BRUTE_FORCE_CAP}, got {g.n}"
        )
    edges = g.edges
    dsu = _DisjointSet(g.n)
    for perm in permutations(range(g.n)):
        if all(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) in edges
            for u, v in edges
        ):
            for w in range(g.n):
                dsu.union(w, perm[w])
    return _canonical_blocks(dsu.groups(g.n))
