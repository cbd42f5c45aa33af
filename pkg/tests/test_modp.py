"""Prime-field helpers backing the character table computation."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from torusquot import modp

P = 101


def det_mod(mat, p):
    """Gaussian-elimination determinant, used as an oracle for charpoly_mod."""
    a = [list(r) for r in mat]
    n = len(a)
    det = 1
    for c in range(n):
        pr = next((i for i in range(c, n) if a[i][c] % p), None)
        if pr is None:
            return 0
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            det = -det
        det = det * a[c][c] % p
        inv = modp.inv_mod(a[c][c], p)
        for i in range(c + 1, n):
            f = a[i][c] * inv % p
            a[i] = [(x - f * y) % p for x, y in zip(a[i], a[c])]
    return det % p


class TestCharpoly:
    @settings(max_examples=30, deadline=None)
    @given(st.lists(st.lists(st.integers(0, P - 1), min_size=4, max_size=4),
                    min_size=4, max_size=4),
           st.integers(0, P - 1))
    def test_matches_det_oracle(self, mat, x):
        f = modp.charpoly_mod(mat, P)
        shifted = [[(x * (i == j) - mat[i][j]) % P for j in range(4)] for i in range(4)]
        assert modp.poly_eval(f, x, P) == det_mod(shifted, P)

    def test_monic_and_degree(self):
        mat = [[1, 2], [3, 4]]
        f = modp.charpoly_mod(mat, P)
        assert len(f) == 3 and f[-1] == 1
        # x^2 - 5x - 2
        assert f == [(-2) % P, (-5) % P, 1]

    def test_empty(self):
        assert modp.charpoly_mod([], P) == [1]


class TestRoots:
    def test_known_roots(self):
        # (x-3)(x-7)^2 (x^2+1), p = 101: x^2+1 factors since -1 is a QR mod 101
        f = [1]
        for r in (3, 7, 7):
            f = modp.poly_mul_mod(f, [(-r) % P, 1], P)
        f = modp.poly_mul_mod(f, [1, 0, 1], P)
        roots = modp.roots_mod(f, P)
        assert 3 in roots and 7 in roots
        for r in roots:
            assert modp.poly_eval(f, r, P) == 0

    def test_zero_root(self):
        f = [0, 0, 1]  # x^2
        assert modp.roots_mod(f, P) == [0]

    def test_no_roots(self):
        # x^2 - 2 mod 3 has no roots
        assert modp.roots_mod([1, 0, 1], 3) == []

    @settings(max_examples=20, deadline=None)
    @given(st.sets(st.integers(0, P - 1), min_size=1, max_size=6))
    def test_product_of_linears(self, root_set):
        f = [1]
        for r in root_set:
            f = modp.poly_mul_mod(f, [(-r) % P, 1], P)
        assert modp.roots_mod(f, P) == sorted(root_set)


class TestLinear:
    def test_kernel(self):
        mat = [[1, 2, 3], [2, 4, 6]]
        basis = modp.kernel_mod(mat, P)
        assert len(basis) == 2
        for v in basis:
            assert all(sum(r * x for r, x in zip(row, v)) % P == 0 for row in mat)

    def test_solve_unique(self):
        rng = random.Random(3)
        a = [[rng.randrange(P) for _ in range(2)] for _ in range(4)]
        x_true = [[5, 6], [7, 8]]
        b = modp.mat_mul_mod(a, x_true, P)
        x = modp.solve_unique_mod(a, b, P)
        assert x == x_true

    def test_rref_pivots(self):
        rows, pivots = modp.rref_mod([[0, 1], [0, 2]], P)
        assert pivots == [1]
        assert rows[0] == [0, 1]


class TestPoly:
    def test_divmod(self):
        f = modp.poly_mul_mod([1, 1], [2, 3], P)
        q, r = modp.poly_divmod(f, [1, 1], P)
        assert q == [2, 3] and r == []

    def test_gcd(self):
        a = modp.poly_mul_mod([1, 1], [3, 1], P)
        b = modp.poly_mul_mod([1, 1], [5, 1], P)
        assert modp.poly_gcd_mod(a, b, P) == [1, 1]

    def test_powmod(self):
        base, mod = [1, 1], [2, 0, 1]
        naive = [1]
        for _ in range(9):
            naive = modp.poly_divmod(modp.poly_mul_mod(naive, base, P), mod, P)[1]
        assert modp.poly_powmod(base, 9, mod, P) == naive

    def test_element_of_order(self):
        w = modp.element_of_order(5, 11)
        assert pow(w, 5, 11) == 1 and all(pow(w, k, 11) != 1 for k in range(1, 5))
        assert modp.element_of_order(1, 11) == 1
