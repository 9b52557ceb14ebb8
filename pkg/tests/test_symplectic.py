"""Packed GF(2) linear algebra and symplectic form tests."""

import random

import pytest

from stabcat.concat import SymplecticVector
from stabcat.symplectic import (Rref, in_span, is_rref, row_reduce,
                                symplectic_product,
                                symplectic_product_packed, symplectic_weight,
                                verify_duality)


class TestSymplecticProduct:
    def test_self_product_zero(self):
        rng = random.Random(7)
        for _ in range(200):
            x = SymplecticVector(u=rng.getrandbits(20),
                                 v=rng.getrandbits(20), n=20)
            assert symplectic_product(x, x) == 0

    def test_single_overlap(self):
        x = SymplecticVector(u=1, v=0, n=4)
        y = SymplecticVector(u=0, v=1, n=4)
        assert symplectic_product(x, y) == 1

    def test_disjoint_support(self):
        x = SymplecticVector(u=1, v=0, n=4)
        y = SymplecticVector(u=0, v=2, n=4)
        assert symplectic_product(x, y) == 0

    def test_length_mismatch(self):
        x = SymplecticVector(u=1, v=0, n=4)
        y = SymplecticVector(u=1, v=0, n=5)
        with pytest.raises(ValueError):
            symplectic_product(x, y)

    def test_bilinear_and_alternating_randomized(self):
        rng = random.Random(11)
        n = 24
        for _ in range(10 ** 4):
            a = rng.getrandbits(2 * n)
            b = rng.getrandbits(2 * n)
            c = rng.getrandbits(2 * n)
            assert symplectic_product_packed(a, a, n) == 0
            assert symplectic_product_packed(a ^ b, c, n) == \
                symplectic_product_packed(a, c, n) ^ \
                symplectic_product_packed(b, c, n)
            # alternation implies symmetry in characteristic 2
            assert symplectic_product_packed(a, b, n) == \
                symplectic_product_packed(b, a, n)


class TestWeight:
    def test_trivials(self):
        assert symplectic_weight(SymplecticVector(u=0, v=0, n=8)) == 0
        assert symplectic_weight(SymplecticVector(u=4, v=4, n=8)) == 1
        assert symplectic_weight(SymplecticVector(u=255, v=0, n=8)) == 8

    def test_matches_quaternary_weight_randomized(self):
        from stabcat.concat import to_quaternary
        rng = random.Random(3)
        for _ in range(10 ** 4):
            x = SymplecticVector(u=rng.getrandbits(18),
                                 v=rng.getrandbits(18), n=18)
            assert symplectic_weight(x) == to_quaternary(x).weight()


class TestRowReduce:
    def test_zero_matrix(self):
        rank, rows = row_reduce([0, 0], 4)
        assert rank == 0 and rows == []

    def test_identity(self):
        rank, rows = row_reduce([1, 2, 4], 3)
        assert rank == 3 and rows == [1, 2, 4]

    def test_dependent_rows(self):
        # {110, 011, 101} as bit masks: third is the XOR of the others.
        rank, _ = row_reduce([0b110, 0b011, 0b101], 3)
        assert rank == 2

    def test_canonical_rref(self):
        rng = random.Random(5)
        for _ in range(100):
            rows = [rng.getrandbits(12) for _ in range(6)]
            rank, red = row_reduce(rows, 12)
            assert is_rref(red, 12)
            # pivots strictly increasing and unique in their columns
            pivs = [(r & -r).bit_length() - 1 for r in red]
            assert pivs == sorted(pivs)
            for i, r in enumerate(red):
                for j, p in enumerate(pivs):
                    assert ((r >> p) & 1) == (1 if i == j else 0)
            # re-reduction is a fixed point
            assert row_reduce(red, 12) == (rank, red)

    def test_rref_order_independent(self):
        rng = random.Random(6)
        rows = [rng.getrandbits(16) for _ in range(8)]
        _, red1 = row_reduce(rows, 16)
        rng.shuffle(rows)
        _, red2 = row_reduce(rows, 16)
        assert red1 == red2


class TestInSpan:
    def test_trivials(self):
        _, red = row_reduce([0b101, 0b011], 3)
        assert in_span(red, 0)
        assert in_span(red, 0b101)
        assert in_span(red, 0b110)
        assert not in_span(red, 0b1000 | 0b101)

    def test_outside_column_support(self):
        _, red = row_reduce([0b0011], 4)
        assert not in_span(red, 0b1000)

    def test_incremental_matches_batch(self):
        rng = random.Random(9)
        rows = [rng.getrandbits(20) for _ in range(10)]
        acc = Rref(20)
        for r in rows:
            acc.add(r)
        assert (acc.rank, acc.rows) == row_reduce(rows, 20)


class TestVerifyDuality:
    def test_m1_codes(self, code_m1k1, code_m1k0):
        for code, rank_s, rank_n in ((code_m1k1, 16, 20),
                                     (code_m1k0, 12, 24)):
            rep = verify_duality(code)
            assert rep.passed
            assert rep.rank_s == rank_s and rep.rank_n == rank_n
            assert rep.rank_s + rep.rank_n == 2 * code.n
        rep = verify_duality(code_m1k1)
        assert rep.n_products == 16 * 20

    def test_m2k3(self, code_m2k3):
        rep = verify_duality(code_m2k3)
        assert rep.passed
        assert rep.rank_s == 114 and rep.rank_n == 186

    def test_failure_enumerates_witnesses(self, code_m1k1):
        # Corrupt one stabilizer row; the report must name a bad pair.
        from dataclasses import replace
        bad_rows = list(code_m1k1.s_matrix)
        bad_rows[0] ^= 1 << (code_m1k1.n + 5)
        bad = replace(code_m1k1, s_matrix=tuple(bad_rows))
        rep = verify_duality(bad)
        assert not rep.passed
        assert any(f[0] == "orthogonality" for f in rep.failures)
