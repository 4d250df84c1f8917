"""Independent oracles used to freeze expected values.

None of these share algorithms with the package code under test: labeled
trees come from Prufer sequences, isomorphism deduplication uses the
backtracking test, class counts are recomputed analytically from the
rooted-tree recurrence, and random connected graphs are built from a random
spanning tree.
"""

from __future__ import annotations

import heapq
import random
from fractions import Fraction
from itertools import combinations, product
from math import gcd

from dissoc import Graph, from_edges, is_isomorphic_bruteforce, iter_bits


def prufer_decode(seq: tuple[int, ...], n: int) -> Graph:
    if n == 1:
        return from_edges(1, [])
    if n == 2:
        return from_edges(2, [(0, 1)])
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return from_edges(n, edges)


def all_labeled_trees(n: int):
    if n <= 2:
        yield prufer_decode((), n)
        return
    for seq in product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def _signature(g: Graph) -> tuple:
    per_vertex = sorted(
        (
            g.adj[v].bit_count(),
            tuple(sorted(g.adj[u].bit_count() for u in iter_bits(g.adj[v]))),
        )
        for v in range(g.n)
    )
    return (g.n, g.edge_count, tuple(per_vertex))


class IsoClassRegistry:
    """Collect representatives up to isomorphism via signature buckets plus
    the brute-force test."""

    def __init__(self):
        self.buckets: dict[tuple, list[Graph]] = {}

    def add(self, g: Graph) -> bool:
        """Returns True iff g opened a new isomorphism class."""
        key = _signature(g)
        bucket = self.buckets.setdefault(key, [])
        for rep in bucket:
            if is_isomorphic_bruteforce(rep, g):
                return False
        bucket.append(g)
        return True

    @property
    def count(self) -> int:
        return sum(len(b) for b in self.buckets.values())

    def representatives(self) -> list[Graph]:
        return [g for bucket in self.buckets.values() for g in bucket]


def count_trees_bruteforce(n: int) -> int:
    """Unlabeled tree count: Prufer enumeration deduped by isomorphism."""
    reg = IsoClassRegistry()
    for g in all_labeled_trees(n):
        reg.add(g)
    return reg.count


def count_unicyclic_bruteforce(n: int, trees: list[Graph]) -> int:
    """Unlabeled unicyclic count: each tree plus one extra edge, deduped."""
    reg = IsoClassRegistry()
    for t in trees:
        assert t.n == n
        for i, j in combinations(range(n), 2):
            if t.adj[i] >> j & 1:
                continue
            reg.add(from_edges(n, t.edges() + [(i, j)]))
    return reg.count


# --- analytic class counts -------------------------------------------------
#
# Rooted trees satisfy r(n) = (1/(n-1)) * sum_{j<n} c(j) r(n-j) with
# c(j) = sum_{d|j} d*r(d); free trees follow from the generating-function
# identity t(x) = r(x) - (r(x)^2 - r(x^2))/2, and connected unicyclic counts
# from averaging rooted-forest necklaces over the dihedral groups.


def rooted_tree_counts(n_max: int) -> list[int]:
    r = [0] * (n_max + 1)
    r[1] = 1
    c = [0] * (n_max + 1)
    for n in range(1, n_max):
        c[n] = sum(d * r[d] for d in range(1, n + 1) if n % d == 0)
        total = sum(c[j] * r[n + 1 - j] for j in range(1, n + 1))
        assert total % n == 0
        r[n + 1] = total // n
    return r


def free_tree_counts(n_max: int) -> list[int]:
    r = rooted_tree_counts(n_max)
    t = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        conv = sum(r[i] * r[n - i] for i in range(1, n))
        twice = 2 * r[n] - conv + (r[n // 2] if n % 2 == 0 else 0)
        assert twice % 2 == 0
        t[n] = twice // 2
    return t


def _euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _poly_mul(a: list[int], b: list[int], n_max: int) -> list[int]:
    out = [0] * (n_max + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if i + j > n_max:
                break
            out[i + j] += ai * bj
    return out


def _poly_pow(base: list[int], k: int, n_max: int) -> list[int]:
    out = [0] * (n_max + 1)
    out[0] = 1
    for _ in range(k):
        out = _poly_mul(out, base, n_max)
    return out


def _substitute(poly: list[int], d: int, n_max: int) -> list[int]:
    out = [0] * (n_max + 1)
    for i, coeff in enumerate(poly):
        if i * d <= n_max:
            out[i * d] = coeff
    return out


def unicyclic_counts(n_max: int) -> list[int]:
    """Connected unicyclic graph counts via dihedral-necklace averaging of
    rooted trees around each cycle length."""
    r = rooted_tree_counts(n_max)
    rx = list(r)
    rx[0] = 0
    out = [Fraction(0)] * (n_max + 1)
    for length in range(3, n_max + 1):
        acc = [Fraction(0)] * (n_max + 1)
        for d in range(1, length + 1):
            if length % d:
                continue
            term = _poly_pow(_substitute(rx, d, n_max), length // d, n_max)
            w = Fraction(_euler_phi(d), 2 * length)
            for i in range(n_max + 1):
                acc[i] += w * term[i]
        rx2 = _substitute(rx, 2, n_max)
        if length % 2 == 1:
            refl = _poly_mul(rx, _poly_pow(rx2, (length - 1) // 2, n_max), n_max)
            for i in range(n_max + 1):
                acc[i] += Fraction(refl[i], 2)
        else:
            refl_a = _poly_pow(rx2, length // 2, n_max)
            refl_b = _poly_mul(_poly_mul(rx, rx, n_max), _poly_pow(rx2, (length - 2) // 2, n_max), n_max)
            for i in range(n_max + 1):
                acc[i] += Fraction(refl_a[i] + refl_b[i], 4)
        for i in range(n_max + 1):
            out[i] += acc[i]
    counts = []
    for value in out:
        assert value.denominator == 1
        counts.append(int(value))
    return counts


def random_connected_graph(rng: random.Random, n: int, extra_edge_prob: float = 0.25) -> Graph:
    """Random spanning tree plus random extra edges; connected by build."""
    if n == 1:
        return from_edges(1, [])
    if n == 2:
        seq: tuple[int, ...] = ()
    else:
        seq = tuple(rng.randrange(n) for _ in range(n - 2))
    tree = prufer_decode(seq, n)
    edges = tree.edges()
    for i, j in combinations(range(n), 2):
        if not tree.adj[i] >> j & 1 and rng.random() < extra_edge_prob:
            edges.append((i, j))
    return from_edges(n, edges)
