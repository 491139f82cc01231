"""Finite-monoid loop model: cosimplicial structure, totalizations, products."""

from itertools import product as iproduct

import pytest

from operadix import loops
from operadix.chains import LinComb, homology
from operadix.loops import (
    FiniteMonoid,
    TotComplex,
    act_Tj,
    act_Tk,
    cup,
    gamma,
    homotopy_H,
    inc_tot,
    iota,
    omega,
    rho,
    sqcup,
    varsigma,
)

U = LinComb.unit


def raw_basis(tot, deg):
    if tot.kind == "closed":
        return list(iproduct(tot.M.elements, repeat=deg))
    return [
        (xs, y) for xs in iproduct(tot.M.elements, repeat=deg) for y in tot.N
    ]


def pbasis(tot, deg):
    out, seen = [], set()
    for b in raw_basis(tot, deg):
        p = tot.conormal_project(U(b))
        if p and p not in seen:
            seen.add(p)
            out.append(p)
    return out


Z2 = FiniteMonoid.cyclic(2)
Z3 = FiniteMonoid.cyclic(3)


class TestCosimplicial:
    def test_identities(self):
        omega(Z2, Z2.elements).check_identities(3)
        omega(Z3, (0,)).check_identities(3)

    def test_submonoid_enforced(self):
        with pytest.raises(ValueError):
            omega(Z3, (0, 1))


class TestTotalization:
    def test_d_squared_zero(self):
        for kind, sub in (("closed", (0,)), ("open", (0, 1))):
            tot = TotComplex(Z2, sub, truncation=4, kind=kind)
            for deg in range(3):
                for b in raw_basis(tot, deg):
                    assert not tot.differential(tot.differential(U(b)))

    def test_projector_idempotent_and_kills_degeneracies(self):
        tot = TotComplex(Z2, (0, 1), truncation=4, kind="open")
        for deg in range(1, 4):
            for b in raw_basis(tot, deg):
                p = tot.conormal_project(U(b))
                assert tot.conormal_project(p) == p

    def test_projector_commutes_with_differential(self):
        tot = TotComplex(Z2, (0, 1), truncation=4, kind="open")
        for deg in range(3):
            for b in raw_basis(tot, deg):
                assert tot.conormal_project(
                    tot.differential(U(b))
                ) == tot.differential(tot.conormal_project(U(b)))

    def test_homology_frozen(self):
        tot = TotComplex(Z2, Z2.elements, truncation=4, kind="open")
        hom = tot.homology()
        assert hom[0] == (1, [])
        assert hom[1] == (0, []) and hom[2] == (0, [])
        closed = TotComplex(Z2, Z2.elements, truncation=4, kind="closed")
        homc = closed.homology()
        assert homc[0] == (1, [])
        assert homc[1] == (0, []) and homc[2] == (0, [])

    def test_conormalized_matches_unnormalized(self):
        tot = TotComplex(Z2, (0,), truncation=4, kind="closed")
        hom = tot.homology()
        raw = tot.unnormalized_complex()
        for level in range(4):
            assert hom[level] == homology(raw, -level)


class TestProducts:
    def test_leibniz(self):
        totc = TotComplex(Z2, (0,), truncation=4, kind="closed")
        toto = TotComplex(Z2, (0, 1), truncation=4, kind="open")
        for df in range(2):
            for dg in range(2):
                for f in pbasis(totc, df):
                    for g in pbasis(totc, dg):
                        lhs = totc.differential(cup(totc, f, g))
                        rhs = cup(totc, totc.differential(f), g) + (
                            (-1) ** (df % 2)
                        ) * cup(totc, f, totc.differential(g))
                        assert lhs == rhs
                for u in pbasis(toto, df):
                    for v in pbasis(toto, dg):
                        lhs = toto.differential(sqcup(toto, u, v))
                        rhs = sqcup(toto, toto.differential(u), v) + (
                            (-1) ** (df % 2)
                        ) * sqcup(toto, u, toto.differential(v))
                        assert lhs == rhs

    def test_associativity(self):
        toto = TotComplex(Z2, (0, 1), truncation=4, kind="open")
        elems = [p for d in range(2) for p in pbasis(toto, d)]
        for u in elems:
            for v in elems:
                for w in elems:
                    assert sqcup(toto, sqcup(toto, u, v), w) == sqcup(
                        toto, u, sqcup(toto, v, w)
                    )

    def test_inclusion_is_a_chain_map(self):
        totc = TotComplex(Z2, (0,), truncation=4, kind="closed")
        toto = TotComplex(Z2, (0, 1), truncation=4, kind="open")
        for deg in range(3):
            for f in pbasis(totc, deg):
                assert inc_tot(toto, totc.differential(f)) == toto.differential(
                    inc_tot(toto, f)
                )


class TestHomotopies:
    def test_commutator_homotopy(self):
        totc = TotComplex(Z2, (0,), truncation=5, kind="closed")
        toto = TotComplex(Z2, (0, 1), truncation=5, kind="open")
        for df in range(1, 3):
            for du in range(2):
                for f in pbasis(totc, df):
                    for u in pbasis(toto, du):
                        lhs = (
                            toto.differential(homotopy_H(toto, f, u))
                            + homotopy_H(toto, totc.differential(f), u)
                            + ((-1) ** (df % 2))
                            * homotopy_H(toto, f, toto.differential(u))
                        )
                        rhs = sqcup(toto, inc_tot(toto, f), u) - (
                            (-1) ** ((df * du) % 2)
                        ) * sqcup(toto, u, inc_tot(toto, f))
                        assert lhs == rhs

    def test_closed_insertion_homotopy(self):
        totc = TotComplex(Z2, (0,), truncation=5, kind="closed")
        for df in range(1, 3):
            for dg in range(1, 3):
                for f in pbasis(totc, df):
                    for g in pbasis(totc, dg):
                        lhs = (
                            totc.differential(act_Tk(totc, f, [g]))
                            + act_Tk(totc, totc.differential(f), [g])
                            + ((-1) ** (df % 2))
                            * act_Tk(totc, f, [totc.differential(g)])
                        )
                        rhs = cup(totc, f, g) - (
                            (-1) ** ((df * dg) % 2)
                        ) * cup(totc, g, f)
                        assert lhs == rhs

    def test_single_open_insertion_matches_commutator_homotopy(self):
        totc = TotComplex(Z2, (0,), truncation=5, kind="closed")
        toto = TotComplex(Z2, (0, 1), truncation=5, kind="open")
        for df in range(1, 3):
            for du in range(2):
                for f in pbasis(totc, df):
                    for u in pbasis(toto, du):
                        assert homotopy_H(toto, f, u) == act_Tj(toto, f, [u])


class TestWideBimodule:
    def test_coherence_laws(self):
        M = Z3
        pool = [
            tuple(t) for l in range(3) for t in iproduct(M.elements, repeat=l)
        ]
        fs = [t for l in range(1, 3) for t in iproduct(M.elements, repeat=l)]
        for f in fs:
            k = len(f)
            for gs in iproduct(pool[:6], repeat=k):
                # right action commutes with the inclusion
                assert rho(M, iota(M, f), list(gs)) == iota(M, gamma(M, f, gs))
                # full interleaving with unit endpoints degenerates to gamma
                args = [(g, M.unit) for g in gs]
                assert varsigma(M, f, args) == iota(M, gamma(M, f, gs))
