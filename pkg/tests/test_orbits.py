import numpy as np
import pytest

from graphent import (
    CapacityError,
    Graph,
    brute_force_orbits,
    distance_matrix,
    generate_graph,
    vertex_orbits,
)


class TestExamples:
    def test_star_two_orbits(self):
        part = vertex_orbits(generate_graph("star", 4))
        assert part.blocks == ((0,), (1, 2, 3))
        assert part.k == 2

    def test_path_6_pairs(self):
        part = vertex_orbits(generate_graph("path", 6))
        assert part.blocks == ((0, 5), (1, 4), (2, 3))

    def test_complete_single_block(self):
        part = vertex_orbits(generate_graph("complete", 4))
        assert part.blocks == ((0, 1, 2, 3),)

    def test_path_odd_center(self):
        part = vertex_orbits(generate_graph("path", 5))
        assert part.blocks == ((2,), (0, 4), (1, 3))

    def test_single_vertex(self):
        assert vertex_orbits(Graph.from_edges(1, [])).blocks == ((0,),)

    def test_capacity_cap(self):
        with pytest.raises(CapacityError):
            vertex_orbits(Graph.from_edges(65, []))


class TestBruteForce:
    def test_cycle_4_transitive(self):
        part = brute_force_orbits(generate_graph("cycle", 4))
        assert part.blocks == ((0, 1, 2, 3),)

    def test_path_4(self):
        part = brute_force_orbits(generate_graph("path", 4))
        assert part.blocks == ((0, 3), (1, 2))

    def test_single_vertex(self):
        assert brute_force_orbits(Graph.from_edges(1, [])).blocks == ((0,),)

    def test_cap(self):
        with pytest.raises(CapacityError):
            brute_force_orbits(Graph.from_edges(9, []))


class TestAgainstOracle:
    def test_battery(self):
        graphs = []
        for n in range(3, 8):
            graphs.append(generate_graph("star", n))
            graphs.append(generate_graph("path", n))
            graphs.append(generate_graph("cycle", n))
            if n >= 4:
                graphs.append(generate_graph("wheel", n))
            graphs.append(generate_graph("complete", n))
        for g in graphs:
            assert vertex_orbits(g).blocks == brute_force_orbits(g).blocks

    def test_random_connected(self):
        rng = np.random.default_rng(99)
        for i in range(40):
            n = int(rng.integers(3, 8))
            g = generate_graph("gnp", n, p=float(rng.uniform(0.3, 0.9)), seed=1000 + i)
            assert vertex_orbits(g).blocks == brute_force_orbits(g).blocks

    def test_disconnected(self):
        g = Graph.from_edges(4, [(0, 1)])
        assert vertex_orbits(g).blocks == brute_force_orbits(g).blocks

    def test_two_isolated_vertices_swap(self):
        assert vertex_orbits(Graph.from_edges(2, [])).blocks == ((0, 1),)


class TestProperties:
    def test_relabel_equivariance(self):
        rng = np.random.default_rng(7)
        g = generate_graph("gnp", 9, p=0.4, seed=21)
        base = vertex_orbits(g)
        for _ in range(5):
            perm = list(rng.permutation(g.n))
            mapped = sorted(
                tuple(sorted(perm[v] for v in block)) for block in base.blocks
            )
            got = sorted(vertex_orbits(g.relabel(perm)).blocks)
            assert got == mapped

    def test_wheel_orbit_profile(self):
        for n in range(5, 10):
            part = vertex_orbits(generate_graph("wheel", n))
            assert part.sizes == (1, n - 1)

    def test_wheel_4_collapses_to_k4(self):
        assert vertex_orbits(generate_graph("wheel", 4)).sizes == (4,)

    def test_blocks_share_degree_and_distance_multiset(self):
        for seed in range(6):
            g = generate_graph("gnp", 10, p=0.4, seed=seed)
            d = distance_matrix(g)
            for block in vertex_orbits(g).blocks:
                degs = {g.degree(v) for v in block}
                assert len(degs) == 1
                rows = {
                    tuple(sorted(int(x) for i, x in enumerate(d.dist[v]) if i != v))
                    for v in block
                }
                assert len(rows) == 1

    def test_blocks_cover_and_sorted(self):
        g = generate_graph("gnp", 12, p=0.3, seed=4)
        part = vertex_orbits(g)
        members = [v for block in part.blocks for v in block]
        assert sorted(members) == list(range(g.n))
        assert list(part.blocks) == sorted(
            part.blocks, key=lambda b: (len(b), b[0])
        )


class TestHardSymmetricGraphs:
    """Regular graphs where refinement alone cannot split anything, so the
    backtracking confirmation carries the whole answer."""

    def test_petersen_transitive(self):
        outer = [(i, (i + 1) % 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        spokes = [(i, 5 + i) for i in range(5)]
        g = Graph.from_edges(10, outer + inner + spokes)
        assert vertex_orbits(g).sizes == (10,)

    def test_rook_4x4_transitive(self):
        edges = []
        for r in range(4):
            for c in range(4):
                v = 4 * r + c
                edges += [(v, 4 * r + c2) for c2 in range(c + 1, 4)]
                edges += [(v, 4 * r2 + c) for r2 in range(r + 1, 4)]
        assert vertex_orbits(Graph.from_edges(16, edges)).sizes == (16,)

    def test_complete_bipartite(self):
        k44 = Graph.from_edges(8, [(i, 4 + j) for i in range(4) for j in range(4)])
        assert vertex_orbits(k44).blocks == brute_force_orbits(k44).blocks
        k35 = Graph.from_edges(8, [(i, 3 + j) for i in range(3) for j in range(5)])
        assert vertex_orbits(k35).sizes == (3, 5)

    def test_hypercube_q4_transitive(self):
        edges = [
            (u, u ^ (1 << b))
            for u in range(16)
            for b in range(4)
            if u < u ^ (1 << b)
        ]
        assert vertex_orbits(Graph.from_edges(16, edges)).sizes == (16,)

    def test_envelope_sizes(self):
        assert vertex_orbits(generate_graph("cycle", 64)).sizes == (64,)
        assert vertex_orbits(generate_graph("complete", 64)).sizes == (64,)
        assert vertex_orbits(generate_graph("wheel", 64)).sizes == (1, 63)
        assert vertex_orbits(generate_graph("path", 64)).k == 32
