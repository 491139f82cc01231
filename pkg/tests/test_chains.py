"""Exact integer linear algebra: Smith normal form and homology."""

import random

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from operadix import chains
from operadix.chains import ChainComplex, InvalidComplex, LinComb


class TestLinComb:
    def test_arithmetic_and_cancellation(self):
        v = LinComb.unit("a") + LinComb.unit("b", 2)
        w = v - LinComb.unit("b", 2)
        assert dict(w) == {"a": 1}
        assert not (w - LinComb.unit("a"))
        assert 3 * v == v + v + v

    def test_repeated_keys_accumulate(self):
        v = LinComb([("a", 1), ("a", 2)])
        assert dict(v) == {"a": 3}


class TestSmithNormalForm:
    def test_known_matrix(self):
        mat = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
        d, left, right = chains.smith_normal_form(mat)
        assert chains.mat_mul(chains.mat_mul(left, mat), right) == d
        assert [d[i][i] for i in range(3)] == [2, 2, 156]

    def test_random_matrices_match_sympy(self):
        rng = random.Random(42)
        for _ in range(60):
            rows, cols = rng.randint(1, 5), rng.randint(1, 5)
            mat = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
            d, left, right = chains.smith_normal_form(mat)
            assert chains.mat_mul(chains.mat_mul(left, mat), right) == d
            ours = [abs(d[i][i]) for i in range(min(rows, cols)) if d[i][i]]
            ref = sympy_snf(sympy.Matrix(mat))
            theirs = [
                abs(ref[i, i]) for i in range(min(rows, cols)) if ref[i, i]
            ]
            assert ours == theirs

    def test_transforms_are_unimodular(self):
        rng = random.Random(1)
        for _ in range(20):
            n = rng.randint(1, 4)
            mat = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
            _, left, right = chains.smith_normal_form(mat)
            assert abs(sympy.Matrix(left).det()) == 1
            assert abs(sympy.Matrix(right).det()) == 1


def circle_complex():
    """Two vertices, two parallel edges: the circle."""
    return ChainComplex(
        bases={0: ["v0", "v1"], 1: ["a", "b"]},
        boundary={1: [[-1, -1], [1, 1]]},
    )


def projective_plane_complex():
    """Minimal CW model with a degree-2 attaching map."""
    return ChainComplex(
        bases={0: ["v"], 1: ["e"], 2: ["f"]},
        boundary={1: [[0]], 2: [[2]]},
    )


class TestHomology:
    def test_circle(self):
        cx = circle_complex()
        cx.validate()
        assert chains.homology(cx, 0) == (1, [])
        assert chains.homology(cx, 1) == (1, [])

    def test_torsion(self):
        cx = projective_plane_complex()
        cx.validate()
        assert chains.homology(cx, 0) == (1, [])
        assert chains.homology(cx, 1) == (0, [2])
        assert chains.homology(cx, 2) == (0, [])

    def test_invalid_complex_rejected(self):
        bad = ChainComplex(
            bases={0: ["v"], 1: ["e"], 2: ["f"]},
            boundary={1: [[1]], 2: [[1]]},
        )
        with pytest.raises(InvalidComplex):
            bad.validate()
