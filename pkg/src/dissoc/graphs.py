"""Immutable bit-packed graphs on up to 64 vertices.

A vertex set is a plain ``int`` bitmask (bit ``v`` set means vertex ``v``
belongs to the set), so adjacency rows, neighborhoods, and the sets handled
by the enumeration code are all single machine words and the inner loops
reduce to integer bit operations.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

MAX_ORDER = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vset(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex ids into a bitmask."""
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def bit_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


class Graph:
    """Simple undirected graph with bit-row adjacency.

    Instances are immutable value objects: every surgery operation returns a
    new graph, so graphs can be shared freely between worker processes.
    Construction validates symmetry, absence of self-loops, and that no row
    uses bit positions at or beyond the order.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        if not 1 <= n <= MAX_ORDER:
            raise ValueError(f"order must be in [1, {MAX_ORDER}], got {n}")
        rows = tuple(adj)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} uses vertices >= order {n}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = rows

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (i, j) pairs with i < j, sorted."""
        out = []
        for v, row in enumerate(self.adj):
            for u in iter_bits(row):
                if u > v:
                    out.append((v, u))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    def __getstate__(self):
        return (self.n, self.adj)

    def __setstate__(self, state):
        self.n, self.adj = state


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on vertices 0..n-1 with the given edges.

    Duplicate edges collapse; self-loops and out-of-range endpoints raise.
    """
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"order must be in [1, {MAX_ORDER}], got {n}")
    rows = [0] * n
    for i, j in edges:
        if i == j:
            raise ValueError(f"self-loop ({i},{i}) rejected")
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge ({i},{j}) out of range for order {n}")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, rows)


def path(n: int) -> Graph:
    """The path P_n on vertices 0..n-1 labeled along the path."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """The cycle C_n, closing the edge (n-1, 0)."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def delete_vertices(g: Graph, s: int) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on V minus ``s``, compactly relabeled.

    Surviving vertices are renumbered 0.. in their original order; the
    returned dict maps old labels to new ones. Removing every vertex is
    rejected (the empty graph is not representable).
    """
    if s & ~g.full_mask:
        raise ValueError("set contains vertices outside the graph")
    if s == g.full_mask:
        raise ValueError("cannot remove all vertices")
    keep = bit_list(g.full_mask & ~s)
    relabel = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        row = 0
        for u in iter_bits(g.adj[old] & ~s):
            row |= 1 << relabel[u]
        rows.append(row)
    return Graph(len(keep), rows), relabel


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Disjoint union, with h's vertices shifted up by g.n."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise ValueError(f"combined order {n} exceeds {MAX_ORDER}")
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(n, rows)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for order {g.n}")


def open_neighborhood(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.adj[v]


def closed_neighborhood(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.adj[v] | (1 << v)


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.adj[v].bit_count()


class Classification(NamedTuple):
    kind: str  # "tree" | "unicyclic" | "other"
    components: int


def classify(g: Graph) -> Classification:
    """Classify as tree, unicyclic, or other, with component count.

    A connected graph is a tree iff m = n-1 and unicyclic iff m = n.
    """
    seen = 0
    components = 0
    for v in range(g.n):
        if seen >> v & 1:
            continue
        components += 1
        frontier = 1 << v
        seen |= frontier
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~seen
            seen |= frontier
    m = g.edge_count
    if components == 1 and m == g.n - 1:
        kind = "tree"
    elif components == 1 and m == g.n:
        kind = "unicyclic"
    else:
        kind = "other"
    return Classification(kind, components)


def cycle_vertices(g: Graph) -> int:
    """Vertices of the unique cycle of a unicyclic graph, as a bitmask.

    Found by iteratively deleting degree-1 vertices until none remain.
    """
    if classify(g).kind != "unicyclic":
        raise ValueError("cycle_vertices requires a unicyclic graph")
    alive = g.full_mask
    changed = True
    while changed:
        changed = False
        for v in iter_bits(alive):
            if (g.adj[v] & alive).bit_count() == 1:
                alive &= ~(1 << v)
                changed = True
    return alive


def leaves(g: Graph) -> int:
    """Bitmask of degree-1 vertices."""
    return vset(v for v in range(g.n) if g.adj[v].bit_count() == 1)


def support_vertices(g: Graph) -> int:
    """Bitmask of vertices adjacent to at least one leaf."""
    out = 0
    for v in iter_bits(leaves(g)):
        out |= g.adj[v]
    return out


def is_caterpillar(g: Graph) -> bool:
    """True iff g is a tree whose non-leaf vertices induce a path.

    Removing the leaves of a tree keeps it connected, so the check reduces
    to a degree bound on the remaining vertices. Trees that shrink to
    nothing or to a single vertex count as caterpillars.
    """
    if classify(g).kind != "tree":
        return False
    rest = g.full_mask & ~leaves(g)
    return all((g.adj[v] & rest).bit_count() <= 2 for v in iter_bits(rest))


# --- graph6 serialization -------------------------------------------------
#
# Standard printable encoding: a size prefix (one byte n+63 for n <= 62,
# else 126 followed by three 6-bit digits), then the upper triangle of the
# adjacency matrix in column-major order, packed big-endian six bits per
# byte, each byte offset by 63. Encoding is label-sensitive by design.


def graph6_encode(g: Graph) -> bytes:
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    else:
        head = bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    out = bytearray(head)
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def graph6_decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ValueError("graph6 orders above 258047 are not supported")
        if len(data) < 4:
            raise ValueError("truncated graph6 size prefix")
        digits = [b - 63 for b in data[1:4]]
        if any(d < 0 or d > 63 for d in digits):
            raise ValueError("invalid graph6 size prefix byte")
        n = (digits[0] << 12) | (digits[1] << 6) | digits[2]
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"decoded order {n} outside [1, {MAX_ORDER}]")
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {expect}")
    bits = []
    for b in body:
        x = b - 63
        if x < 0 or x > 63:
            raise ValueError(f"invalid graph6 data byte {b}")
        bits.extend((x >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 data")
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, rows)
