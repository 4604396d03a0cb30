"""Brute-force reference values for the Rust test suite.

Independent of the Rust code: permutations are dicts on 1-based labels,
every quantity is recomputed from orbit counts, and polynomials use sympy.
Run with `python3 tools/oracle.py`; the printed values are frozen into
crates/core/tests.
"""
from fractions import Fraction
from itertools import combinations

import sympy as sp

X, Y, Z, t = sp.symbols("X Y Z t")


def perm_from_cycles(cycles):
    p = {}
    for c in cycles:
        for i, a in enumerate(c):
            p[a] = c[(i + 1) % len(c)]
    return p


def orbits(domain, step):
    seen, out = set(), []
    for a in sorted(domain):
        if a in seen:
            continue
        orb, b = [], a
        while b not in seen:
            seen.add(b)
            orb.append(b)
            b = step(b)
        out.append(orb)
    return out


class Graph:
    def __init__(self, s0_cycles, pairs):
        self.s0 = perm_from_cycles(s0_cycles)
        self.s1 = {}
        for a, b in pairs:
            self.s1[a], self.s1[b] = b, a
        self.darts = sorted(self.s0)
        # s0 s1 s2 = 1 with s2 applied first: s2 = (s0 . s1)^-1
        comp = {i: self.s0[self.s1[i]] for i in self.darts}
        self.s2 = {v: k for k, v in comp.items()}
        self.edges = sorted((min(a, b), max(a, b)) for a, b in pairs)
        self.vertices = orbits(self.darts, lambda i: self.s0[i])

    def vertex_of(self, d):
        for k, v in enumerate(self.vertices):
            if d in v:
                return k

    def components(self, edge_ids):
        parent = list(range(len(self.vertices)))

        def find(a):
            while parent[a] != a:
                a = parent[a]
            return a

        for e in edge_ids:
            a, b = self.edges[e]
            parent[find(self.vertex_of(a))] = find(self.vertex_of(b))
        return len({find(v) for v in range(len(self.vertices))})

    def faces(self, edge_ids):
        """Faces of the standalone ribbon subgraph, isolated vertices included."""
        if not self.darts:
            return 1
        keep = {d for e in edge_ids for d in self.edges[e]}
        isolated = sum(1 for v in self.vertices if not keep.intersection(v))
        if not keep:
            return isolated
        # restrict s0 by skipping removed darts, s1 as is
        def r0(i):
            j = self.s0[i]
            while j not in keep:
                j = self.s0[j]
            return j

        comp = {i: r0(self.s1[i]) for i in keep}
        inv = {v: k for k, v in comp.items()}
        return len(orbits(keep, lambda i: inv[i])) + isolated

    def stats(self, edge_ids):
        v, e = len(self.vertices), len(edge_ids)
        k, f = self.components(edge_ids), self.faces(edge_ids)
        two_g = 2 * k - v + e - f
        assert two_g >= 0 and two_g % 2 == 0
        return k, k - v + e, two_g // 2

    def full(self):
        return list(range(len(self.edges)))

    def counts(self):
        k, n, g = self.stats(self.full())
        return len(self.vertices), len(self.edges), self.faces(self.full()), k, g, n

    def brt(self):
        k0 = self.components(self.full())
        total = 0
        m = len(self.edges)
        for r in range(m + 1):
            for H in combinations(range(m), r):
                k, n, g = self.stats(list(H))
                total += (X - 1) ** (k - k0) * Y**n * Z**g
        return sp.expand(total)

    def quasi_trees(self):
        m = len(self.edges)
        out = []
        for r in range(m + 1):
            for H in combinations(range(m), r):
                if self.components(list(H)) == 1 and self.faces(list(H)) == 1:
                    out.append((H, self.stats(list(H))[2]))
        return out

    def dual(self):
        cycles = orbits(self.darts, lambda i: self.s2[i])
        return Graph(cycles, self.edges)


def hist(qts):
    h = {}
    for _, g in qts:
        h[g] = h.get(g, 0) + 1
    return [h.get(i, 0) for i in range(max(h) + 1)]


def show(name, value):
    print(f"{name}: {value}")


EXAMPLE = Graph([[1, 3, 2, 5], [7, 9], [10, 4, 12, 8, 6, 11]],
                [(1, 2), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12)])
TWO_VERTEX_PLANAR = Graph([[1, 2, 3, 4], [5, 6]], [(1, 4), (2, 5), (3, 6)])
TWO_VERTEX_TORUS = Graph([[1, 2, 3, 4], [5, 6]], [(1, 3), (2, 6), (4, 5)])
TWO_LOOPS = Graph([[1, 3, 2, 4]], [(1, 2), (3, 4)])
LOOP = Graph([[1, 2]], [(1, 2)])

for name, g in [("example", EXAMPLE), ("two_vertex_planar", TWO_VERTEX_PLANAR), ("two_vertex_torus", TWO_VERTEX_TORUS),
                ("two_loops", TWO_LOOPS), ("loop", LOOP)]:
    c = g.brt()
    show(f"{name} counts (v,e,f,k,g,n)", g.counts())
    show(f"{name} C", c)
    show(f"{name} C(1,1,1)", c.subs({X: 1, Y: 1, Z: 1}))
    show(f"{name} quasi-tree histogram", hist(g.quasi_trees()))
    d = g.dual()
    show(f"{name} dual counts", d.counts())
    show(f"{name} dual histogram", hist(d.quasi_trees()))
    comp = sorted(tuple(sorted(set(g.full()) - set(H))) for H, _ in g.quasi_trees())
    show(f"{name} complement bijection", comp == sorted(H for H, _ in d.quasi_trees()))
    gg = g.counts()[4]
    cd = d.brt()
    for (x, y) in [(Fraction(2), Fraction(1)), (Fraction(3), Fraction(-1, 2))]:
        z = 1 / ((x - 1) * y)
        lhs = (x - 1) ** gg * c.subs({X: x, Y: y, Z: z})
        swapped = y**gg * cd.subs({X: y, Y: x, Z: z})
        shifted = y**gg * cd.subs({X: y + 1, Y: x - 1, Z: z})
        show(f"{name} identity at X={x},Y={y},Z={z} lhs/swapped/shifted", (lhs, swapped, shifted))

# deletion and contraction by splicing vertex cycles, then recounting
def cycles_of(g):
    return orbits(g.darts, lambda i: g.s0[i])


def delete(g, edge):
    a, b = edge
    cycles = [[d for d in c if d not in (a, b)] for c in cycles_of(g)]
    return Graph([c for c in cycles if c], [e for e in g.edges if e != edge])


def contract(g, edge):
    a, b = edge
    s0 = dict(g.s0)
    for x in g.darts:
        if g.s0[x] == a:
            s0[x] = g.s0[b]
        elif g.s0[x] == b:
            s0[x] = g.s0[a]
    del s0[a], s0[b]
    return Graph(orbits(sorted(s0), lambda i: s0[i]), [e for e in g.edges if e != edge])


show("example delete e6 counts", delete(EXAMPLE, (11, 12)).counts())
show("example contract e4 counts", contract(EXAMPLE, (7, 8)).counts())
show("two_vertex_torus delete {2,6} counts", delete(TWO_VERTEX_TORUS, (2, 6)).counts())
show("two_vertex_torus contract {2,6} counts", contract(TWO_VERTEX_TORUS, (2, 6)).counts())
show("two_vertex_torus contract {2,6} C", contract(TWO_VERTEX_TORUS, (2, 6)).brt())

# triangle Tutte polynomial by the subgraph expansion
x, y = sp.symbols("x y")
tri = [(0, 1), (1, 2), (0, 2)]


def k_of(edges, nv):
    parent = list(range(nv))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for a, b in edges:
        parent[find(a)] = find(b)
    return len({find(v) for v in range(nv)})


T = 0
for r in range(4):
    for W in combinations(tri, r):
        k = k_of(W, 3)
        T += (x - 1) ** (k - 1) * (y - 1) ** (k - 3 + len(W))
show("triangle Tutte", sp.expand(T))
