import numpy as np
import pytest

from graph_family import bridgeless_family
from knotlattice.errors import BoundExceeded, NotACycle, NotConnected, NotInLattice, NotPositiveDefinite
from knotlattice.lattice import (
    Definiteness,
    definiteness,
    determinant,
    edge_count_recovery,
    face_products,
    flow_lattice,
    is_irreducible,
    is_oriented_cycle,
    is_oriented_eulerian,
    is_simple,
    norm_bound,
    short_vectors,
    signature,
    simple_pair_check,
)
from knotlattice.taitgraph import PlaneMultigraph, face_cycles


def graph(n, edges):
    return PlaneMultigraph.from_edges(n, edges)


TRIANGLE = graph(3, [(0, 1), (1, 2), (2, 0)])
DIPOLE = graph(2, [(0, 1), (0, 1), (0, 1)])
SQUARE = graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
BOWTIE = graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


class TestFlowLattice:
    def test_triangle(self):
        F = flow_lattice(TRIANGLE)
        assert F.rank == 1 and F.gram == ((3,),)

    def test_dipole(self):
        F = flow_lattice(DIPOLE)
        assert F.rank == 2
        assert determinant(F.gram) == 3 and signature(F.gram) == (2, 0, 0)
        assert sorted(F.gram[i][i] for i in range(2)) == [2, 2]

    def test_tree(self):
        F = flow_lattice(graph(3, [(0, 1), (1, 2)]))
        assert F.rank == 0 and F.gram == ()

    def test_disconnected(self):
        with pytest.raises(NotConnected):
            flow_lattice(graph(4, [(0, 1), (0, 1), (2, 3), (2, 3)]))

    def test_basis_in_kernel(self):
        for n, edges in bridgeless_family(6):
            G = graph(n, edges)
            F = flow_lattice(G)
            assert F.rank == G.n_edges - G.n_vertices + 1
            assert all(not any(G.boundary(b)) for b in F.basis)

    def test_weights(self):
        F = flow_lattice(DIPOLE, weights=[-1, -1, -1])
        assert definiteness(F.gram) is Definiteness.NEGATIVE

    def test_coords_rejects_non_flow(self):
        with pytest.raises(NotInLattice):
            flow_lattice(TRIANGLE).coords((1, 0, 0))


class TestSignature:
    @pytest.mark.parametrize("M, triple", [
        ([[2, -1], [-1, 2]], (2, 0, 0)),
        ([[0, 1], [1, 0]], (1, 1, 0)),
        ([[0]], (0, 0, 1)),
        ([], (0, 0, 0)),
        ([[0, 0, 1], [0, 0, 0], [1, 0, 0]], (1, 1, 1)),
    ])
    def test_examples(self, M, triple):
        assert signature(M) == triple

    def test_asymmetric_rejected(self):
        with pytest.raises(ValueError):
            signature([[1, 2], [3, 4]])

    @pytest.mark.parametrize("M, kind", [
        ([[3]], Definiteness.POSITIVE),
        ([[-2, 1], [1, -2]], Definiteness.NEGATIVE),
        ([[1, 2], [2, 1]], Definiteness.INDEFINITE),
        ([[1, 0], [0, 0]], Definiteness.DEGENERATE),
        ([], Definiteness.RANK_ZERO),
    ])
    def test_definiteness(self, M, kind):
        assert definiteness(M) is kind

    def test_agrees_with_eigenvalues(self):
        rng = np.random.default_rng(5)
        for _ in range(200):
            A = rng.integers(-3, 4, size=(4, 4))
            M = A + A.T
            eig = np.linalg.eigvalsh(M.astype(float))
            expected = (int((eig > 1e-9).sum()), int((eig < -1e-9).sum()), int((abs(eig) <= 1e-9).sum()))
            assert signature(M.tolist()) == expected


class TestIrreducibleSimple:
    def test_triangle_generator(self):
        F = flow_lattice(TRIANGLE)
        v = F.basis[0]
        assert is_irreducible(F, v) and is_simple(F, v)
        assert is_oriented_cycle(TRIANGLE, v) and is_oriented_eulerian(TRIANGLE, v)

    def test_zero(self):
        F = flow_lattice(TRIANGLE)
        assert is_simple(F, (0, 0, 0)) and not is_irreducible(F, (0, 0, 0))

    def test_doubled_cycle(self):
        F = flow_lattice(DIPOLE)
        w = F.basis[0]
        doubled = tuple(2 * x for x in w)
        assert not is_simple(F, doubled) and not is_irreducible(F, doubled)
        assert not is_oriented_cycle(DIPOLE, doubled) and not is_oriented_eulerian(DIPOLE, doubled)

    def test_bowtie(self):
        v = (1, 1, 1, 1, 1, 1)
        assert not any(BOWTIE.boundary(v))
        assert is_oriented_eulerian(BOWTIE, v) and not is_oriented_cycle(BOWTIE, v)
        F = flow_lattice(BOWTIE)
        assert is_simple(F, v) and not is_irreducible(F, v)

    def test_indefinite_rejected(self):
        F = flow_lattice(DIPOLE, weights=[1, -1, 1])
        with pytest.raises(NotPositiveDefinite):
            is_simple(F, F.basis[0])

    def test_norm_cap(self):
        F = flow_lattice(SQUARE)
        v = tuple(5 * x for x in F.basis[0])
        with pytest.raises(BoundExceeded):
            is_simple(F, v)
        assert not is_simple(F, v, cap=200)

    def test_env_norm_bound(self, monkeypatch):
        monkeypatch.setenv("KNOTLATTICE_NORM_BOUND", "3")
        assert norm_bound() == 3
        with pytest.raises(BoundExceeded):
            short_vectors(flow_lattice(SQUARE), 4)

    def test_single_route_matches_batch(self):
        """Per-vector definition checks against the batched kernel route, small graphs."""
        from knotlattice import kernels
        for n, edges in bridgeless_family(5):
            G = graph(n, edges)
            F = flow_lattice(G)
            if not F.rank:
                continue
            coords = short_vectors(F, 8)
            irr, simple = kernels.batch_flags(np.array(F.gram, dtype=np.int64), coords)
            for k, c in enumerate(coords):
                v = F.to_edges(tuple(int(x) for x in c))
                assert is_irreducible(F, v) == bool(irr[k])
                assert is_simple(F, v) == bool(simple[k])


class TestShortVectors:
    def test_square_lattice_count(self):
        F = flow_lattice(graph(1, [(0, 0), (0, 0)]))
        vecs = short_vectors(F, 2)
        assert len(vecs) == 8  # (+-1, 0), (0, +-1), (+-1, +-1)

    def test_matches_brute_force(self):
        F = flow_lattice(DIPOLE)
        brute = {(a, b) for a in range(-4, 5) for b in range(-4, 5)
                 if 0 < 2 * a * a + 2 * a * b * F.gram[0][1] + 2 * b * b <= 8}
        assert {tuple(map(int, v)) for v in short_vectors(F, 8)} == brute

    def test_requires_positive(self):
        with pytest.raises(NotPositiveDefinite):
            short_vectors([[1, 2], [2, 1]], 3)


class TestSimplePairs:
    def test_triangle_faces(self):
        c1, c2 = face_cycles(TRIANGLE)
        check = simple_pair_check(TRIANGLE, c1, c2)
        assert check == (True, True, True)
        assert -sum(a * b for a, b in zip(c1, c2)) == 3

    def test_dipole_bigons(self):
        c = face_cycles(DIPOLE)
        assert simple_pair_check(DIPOLE, c[0], c[1]) == (True, True, True)
        assert -sum(a * b for a, b in zip(c[0], c[1])) == 1

    def test_same_cycle(self):
        c1, _ = face_cycles(TRIANGLE)
        assert simple_pair_check(TRIANGLE, c1, c1) == (False, False, False)

    def test_not_a_cycle(self):
        with pytest.raises(NotACycle):
            simple_pair_check(DIPOLE, (1, 1, -2), (1, -1, 0))

    def test_all_cycle_pairs(self):
        """The three conditions agree on every pair of oriented cycles of small graphs."""
        from itertools import product
        for n, edges in bridgeless_family(5):
            G = graph(n, edges)
            cycles = [v for v in product((-1, 0, 1), repeat=G.n_edges)
                      if not any(G.boundary(v)) and is_oriented_cycle(G, v)]
            F = flow_lattice(G, [1] * G.n_edges)
            for a in cycles:
                for b in cycles:
                    simple_pair_check(G, a, b, lattice=F)


class TestEdgeCount:
    @pytest.mark.parametrize("G, count", [(TRIANGLE, 3), (DIPOLE, 3), (SQUARE, 4)])
    def test_examples(self, G, count):
        assert edge_count_recovery(face_products(face_cycles(G))) == count

    def test_face_cycles_span_lattice(self):
        for n, edges in bridgeless_family(6)[1:]:  # skip the edgeless vertex
            G = graph(n, edges)
            cycles = face_cycles(G)
            assert [sum(col) for col in zip(*cycles)] == [0] * G.n_edges
            F = flow_lattice(G)
            rank = np.linalg.matrix_rank(np.array(cycles, dtype=float))
            assert rank == F.rank == len(cycles) - 1
            for c in cycles:
                F.coords(c)
