"""Cobar constructions: coalgebra layer, bialgebra layer, totalization ops."""

import random
from itertools import product as iproduct

import pytest

from operadix import cobar
from operadix.chains import LinComb, homology
from operadix.cobar import (
    Bialgebra,
    CobarTot,
    DGCoalgebra,
    DGComodule,
    NotOneReduced,
    cobar_algebra,
    diagonal_comodule,
    dg_map_check,
    dual_group_bialgebra,
    group_bialgebra,
    mb_compose,
    overline_fg,
    relative_cobar,
    relative_cobar_module,
    relative_twisting_check,
    rs2_experimental_report,
    twisting_check,
    universal_twisting,
    unreduced_cobar,
    unreduced_relative_cobar,
    z_coface,
)
from operadix.loops import FiniteMonoid

U = "1"


def sample_coalgebra(a=2, b=3, c=1, with_w=True, with_v=True):
    """A one-reduced dg-coalgebra: primitives x (deg a), z (deg b), w (deg
    b+1, dw = z), and v (deg a+b) with a single non-primitive coproduct term
    c * x (x) z."""
    degrees = {U: 0, "x": a, "z": b}
    differential = {}
    coproduct = {
        U: LinComb.unit((U, U)),
        "x": LinComb({("x", U): 1, (U, "x"): 1}),
        "z": LinComb({("z", U): 1, (U, "z"): 1}),
    }
    if with_w:
        degrees["w"] = b + 1
        differential["w"] = LinComb.unit("z")
        coproduct["w"] = LinComb({("w", U): 1, (U, "w"): 1})
    if with_v:
        degrees["v"] = a + b
        coproduct["v"] = LinComb({("v", U): 1, (U, "v"): 1, ("x", "z"): c})
    return DGCoalgebra(
        degrees=degrees,
        differential=differential,
        coproduct=coproduct,
        counit={U: 1},
        unit=U,
    )


def diagonal_dg_comodule(C: DGCoalgebra) -> DGComodule:
    return DGComodule(
        C, dict(C.degrees), dict(C.differential), dict(C.coproduct)
    )


def random_instance(rng: random.Random):
    a = rng.choice((2, 3))
    b = rng.choice((2, 3))
    c = rng.choice((-2, -1, 1, 2, 3))
    return sample_coalgebra(
        a, b, c, with_w=rng.random() < 0.8, with_v=rng.random() < 0.8
    )


class TestCoalgebraLayer:
    def test_sample_validates(self):
        C = sample_coalgebra()
        C.validate()
        C.check_one_reduced()
        diagonal_dg_comodule(C).validate()

    def test_degree_shifting_coproduct_rejected(self):
        bad = DGCoalgebra(
            degrees={U: 0, "x": 2},
            differential={},
            coproduct={
                U: LinComb.unit((U, U)),
                "x": LinComb({("x", U): 1, (U, "x"): 1, ("x", "x"): 1}),
            },
            counit={U: 1},
            unit=U,
        )
        with pytest.raises(ValueError):
            bad.validate()

    def test_not_one_reduced_detected(self):
        odd = DGCoalgebra(
            degrees={U: 0, "y": 1},
            differential={},
            coproduct={
                U: LinComb.unit((U, U)),
                "y": LinComb({("y", U): 1, (U, "y"): 1}),
            },
            counit={U: 1},
            unit=U,
        )
        odd.validate()
        with pytest.raises(NotOneReduced):
            odd.check_one_reduced()


class TestCobarComplexes:
    def test_random_instances(self):
        rng = random.Random(2024)
        for trial in range(100):
            C = random_instance(rng)
            C.validate()
            N = diagonal_dg_comodule(C)
            cob = cobar.cobar(C, truncation=5)
            cob.chain_complex().validate()
            rel = relative_cobar(C, N, truncation=5)
            rel.chain_complex().validate()

    def test_action_satisfies_leibniz(self):
        C = sample_coalgebra()
        N = diagonal_dg_comodule(C)
        cob = cobar.cobar(C, truncation=6)
        rel = relative_cobar(C, N, truncation=6)
        for da in range(3):
            for du in range(3):
                for wa in cob.words(da):
                    for wu in rel.words(du):
                        if da + du >= 6:
                            continue
                        a, u = LinComb.unit(wa), LinComb.unit(wu)
                        lhs = rel.action(cob.differential(a), u) + (
                            (-1) ** (da % 2)
                        ) * rel.action(a, rel.differential(u))
                        assert lhs == rel.differential(rel.action(a, u))


class TestTwisting:
    def test_equivalence_on_random_instances(self):
        rng = random.Random(7)
        for trial in range(100):
            C = random_instance(rng)
            N = diagonal_dg_comodule(C)
            # the window must cover every generator degree, otherwise a
            # violation above the truncation is invisible to the dg-map side
            window = max(C.degrees.values()) + 2
            cob = cobar.cobar(C, truncation=window)
            rel = relative_cobar(C, N, truncation=window)
            A = cobar_algebra(cob)
            M = relative_cobar_module(rel, A)
            f = universal_twisting(cob)
            g = {n: LinComb.unit(((), n)) for n in N.degrees}
            candidates = [(f, g)]
            f_bad = dict(f)
            name = rng.choice([n for n in C.degrees if n != C.unit])
            f_bad[name] = -f[name]
            candidates.append((f_bad, g))
            g_bad = dict(g)
            g_bad[name] = LinComb()
            candidates.append((f, g_bad))
            for fc, gc in candidates:
                twist = twisting_check(C, A, fc) and relative_twisting_check(
                    C, A, N, M, fc, gc
                )
                phi = overline_fg(rel, A, M, fc, gc)
                assert twist == dg_map_check(rel, M, phi)
            # the universal pair itself must pass
            assert twisting_check(C, A, f)
            assert relative_twisting_check(C, A, N, M, f, g)


Z2 = FiniteMonoid.cyclic(2)


class TestBialgebraLayer:
    def test_group_and_dual_bialgebras_validate(self):
        group_bialgebra(Z2).validate()
        dual_group_bialgebra(Z2).validate()
        group_bialgebra(FiniteMonoid.cyclic(3)).validate()

    def test_unreduced_cobar_d_squared(self):
        B = group_bialgebra(Z2)
        cx = unreduced_cobar(B, truncation=4)
        cx.validate()
        unreduced_relative_cobar(B, diagonal_comodule(B), truncation=4).validate()

    def test_mb_compose_operad_axioms_exhaustive(self):
        B = group_bialgebra(Z2)
        tuples = [
            t for l in range(1, 3) for t in iproduct(B.basis, repeat=l)
        ]
        unit = LinComb.unit((B.unit,))
        for a in tuples:
            k = len(a)
            for i in range(1, k + 1):
                assert mb_compose(B, LinComb.unit(a), i, unit) == LinComb.unit(a)
                for b in tuples:
                    l = len(b)
                    for j in range(1, l + 1):
                        for c in tuples:
                            lhs = mb_compose(
                                B,
                                mb_compose(B, LinComb.unit(a), i, LinComb.unit(b)),
                                i + j - 1,
                                LinComb.unit(c),
                            )
                            rhs = mb_compose(
                                B,
                                LinComb.unit(a),
                                i,
                                mb_compose(B, LinComb.unit(b), j, LinComb.unit(c)),
                            )
                            assert lhs == rhs
            assert mb_compose(B, unit, 1, LinComb.unit(a)) == LinComb.unit(a)

    def test_coface_identities_and_differential(self):
        B = group_bialgebra(Z2)
        CB = diagonal_comodule(B)
        for l in range(3):
            basis = [
                (t, c) for t in iproduct(B.basis, repeat=l) for c in CB.basis
            ]
            for e in basis:
                u = LinComb.unit(e)
                for j in range(l + 2):
                    for i in range(j + 1):
                        assert z_coface(B, CB, j + 1, z_coface(B, CB, i, u)) == \
                            z_coface(B, CB, i, z_coface(B, CB, j, u))
        cx = unreduced_relative_cobar(B, CB, truncation=4)
        for l in range(4):
            upper = {e: r for r, e in enumerate(cx.bases[-(l + 1)])}
            mat = cx.matrix(-l)
            for col, e in enumerate(cx.bases[-l]):
                alt = LinComb()
                for i in range(l + 2):
                    alt = alt + ((-1) ** (i % 2)) * z_coface(
                        B, CB, i, LinComb.unit(e)
                    )
                assert alt == LinComb(
                    {e2: mat[r][col] for e2, r in upper.items()}
                )


class TestTotalizationOps:
    def test_projector_and_differential(self):
        tot = CobarTot(group_bialgebra(Z2), truncation=4)
        for level in range(3):
            for e in tot.basis(level):
                v = LinComb.unit(e)
                assert not tot.differential(tot.differential(v))
                p = tot.conormal_project(v)
                assert tot.conormal_project(p) == p

    def test_experimental_relations_group_algebra(self):
        rep = rs2_experimental_report(
            group_bialgebra(Z2), truncation=4, max_level=2
        )
        assert all(holds for holds, _ in rep.values())
        assert all(cases > 0 for _, cases in rep.values())

    def test_experimental_relations_dual(self):
        rep = rs2_experimental_report(
            dual_group_bialgebra(Z2), truncation=4, max_level=2
        )
        assert all(holds for holds, _ in rep.values())
