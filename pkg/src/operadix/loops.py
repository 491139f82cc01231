"""Cosimplicial relative loop space for a finite monoid pair.

For monoids N <= M the cosimplicial abelian group has level-k basis
M^k x N; cofaces insert the unit, duplicate a coordinate, or duplicate via
the endpoint, and codegeneracies delete a coordinate.  The truncated
totalization uses the conormalized basis (first coordinate not the unit, no
adjacent equal coordinates) with the alternating coface differential.  On
top of it live the loop-space operations: concatenation products on the
closed and open parts, the inclusion, the commutator homotopy, and the
higher unit-insertion operations.

Sign conventions (verified mechanically on exhaustive small-monoid bases,
uniquely pinned over Z/3): the homotopy term at slot i carries
(-1)^{i + i|g| + |f||g|}; its defining identity reads
d(H(f,u)) + H(df,u) + (-1)^{|f|} H(f,du)
= inc(f) |_| u - (-1)^{|f||u|} u |_| inc(f).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from .chains import ChainComplex, LinComb, homology

__all__ = [
    "FiniteMonoid",
    "NotSubmonoid",
    "CosimplicialAbGroup",
    "omega",
    "gamma",
    "gamma_partial",
    "right_translate",
    "varsigma_prime",
    "varsigma_i",
    "varsigma",
    "iota",
    "rho",
    "TotComplex",
    "cup",
    "sqcup",
    "inc_tot",
    "homotopy_H",
    "act_Tk",
    "act_Tj",
    "monoid_to_json",
    "monoid_from_json",
]


class NotSubmonoid(ValueError):
    """The designated subset is not closed or misses the unit."""


class FiniteMonoid:
    """A finite associative monoid given by its multiplication table."""

    def __init__(self, elements, unit, table):
        self.elements = tuple(elements)
        self.unit = unit
        self.table = dict(table)
        if unit not in self.elements:
            raise ValueError("unit must be an element")
        for a, b in product(self.elements, repeat=2):
            if (a, b) not in self.table or self.table[(a, b)] not in self.elements:
                raise ValueError(f"multiplication undefined or escapes at {(a, b)}")
        for a in self.elements:
            if self.table[(self.unit, a)] != a or self.table[(a, self.unit)] != a:
                raise ValueError(f"unit law fails at {a}")
        for a, b, c in product(self.elements, repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise ValueError(f"associativity fails at {(a, b, c)}")

    def mul(self, a, b):
        return self.table[(a, b)]

    def check_submonoid(self, subset) -> tuple:
        sub = tuple(subset)
        if self.unit not in sub:
            raise NotSubmonoid("unit missing from the subset")
        for a, b in product(sub, repeat=2):
            if self.mul(a, b) not in sub:
                raise NotSubmonoid(f"subset not closed under product at {(a, b)}")
        return sub

    @classmethod
    def cyclic(cls, n: int) -> "FiniteMonoid":
        """The cyclic group of order n, written multiplicatively as 0..n-1."""
        elems = list(range(n))
        return cls(elems, 0, {(a, b): (a + b) % n for a in elems for b in elems})

    def __repr__(self) -> str:
        return f"FiniteMonoid({len(self.elements)} elements)"


def monoid_to_json(m: FiniteMonoid) -> dict:
    order = list(m.elements)
    return {
        "elements": order,
        "unit": m.unit,
        "table": [[m.mul(a, b) for b in order] for a in order],
    }


def monoid_from_json(data) -> FiniteMonoid:
    if isinstance(data, str):
        data = json.loads(data)
    elems = data["elements"]
    table = {
        (a, b): data["table"][i][j]
        for i, a in enumerate(elems)
        for j, b in enumerate(elems)
    }
    return FiniteMonoid(elems, data["unit"], table)


# ---------------------------------------------------------------------------
# cosimplicial structure


@dataclass
class CosimplicialAbGroup:
    """Levelwise bases M^k x N with the loop-space cofaces/codegeneracies."""

    M: FiniteMonoid
    N: tuple

    def level(self, k: int) -> list:
        """Basis of level k: (coordinates, endpoint) pairs."""
        out = []
        for xs in product(self.M.elements, repeat=k):
            for y in self.N:
                out.append((xs, y))
        return out

    def coface(self, i: int, elem):
        xs, y = elem
        k = len(xs)
        if not 0 <= i <= k + 1:
            raise ValueError(f"coface index {i} out of range at level {k}")
        if i == 0:
            return ((self.M.unit,) + xs, y)
        if i == k + 1:
            return (xs + (y,), y)
        return (xs[:i] + (xs[i - 1],) + xs[i:], y)

    def codegeneracy(self, i: int, elem):
        xs, y = elem
        k = len(xs)
        if not 0 <= i <= k - 1:
            raise ValueError(f"codegeneracy index {i} out of range at level {k}")
        return (xs[: i] + xs[i + 1 :], y)

    def check_identities(self, max_level: int) -> None:
        """Exhaustively verify the cosimplicial identities up to a level."""
        for k in range(max_level):
            for e in self.level(k):
                for i in range(k + 2):
                    for j in range(i + 1, k + 3):
                        lhs = self.coface(j, self.coface(i, e))
                        rhs = self.coface(i, self.coface(j - 1, e))
                        assert lhs == rhs, (i, j, e)
        for k in range(2, max_level + 2):
            for e in self.level(k):
                for j in range(k - 1):
                    for i in range(j + 1):
                        lhs = self.codegeneracy(j, self.codegeneracy(i, e))
                        rhs = self.codegeneracy(i, self.codegeneracy(j + 1, e))
                        assert lhs == rhs, (i, j, e)
        for k in range(max_level):
            for e in self.level(k):
                for i in range(k + 2):
                    for j in range(k + 1):
                        img = self.coface(i, e)
                        got = self.codegeneracy(j, img)
                        if i < j:
                            want = self.coface(i, self.codegeneracy(j - 1, e))
                        elif i in (j, j + 1):
                            want = e
                        else:
                            want = self.coface(i - 1, self.codegeneracy(j, e))
                        assert got == want, (i, j, e)


def omega(M: FiniteMonoid, N) -> CosimplicialAbGroup:
    """The cosimplicial relative loop space of the pair (M, N)."""
    return CosimplicialAbGroup(M, M.check_submonoid(N))


# ---------------------------------------------------------------------------
# the multiplicative operad and its relative module (tuple level)


def gamma(M: FiniteMonoid, f, gs):
    """gamma(f; g_1, ..., g_k): left-translate each block by its coordinate."""
    if len(gs) != len(f):
        raise ValueError("need one argument tuple per coordinate")
    out = []
    for x, g in zip(f, gs):
        out.extend(M.mul(x, y) for y in g)
    return tuple(out)


def gamma_partial(M: FiniteMonoid, f, i: int, g):
    """f o_i g = (x_1, ..., x_{i-1}, x_i y_1, ..., x_i y_l, x_{i+1}, ...)."""
    k = len(f)
    if not 1 <= i <= k:
        raise ValueError(f"slot {i} out of range for arity {k}")
    gs = [(M.unit,)] * k
    gs[i - 1] = tuple(g)
    return gamma(M, f, gs)


def right_translate(M: FiniteMonoid, g, n):
    """Diagonal right action g |> n = (x_1 n, ..., x_l n)."""
    return tuple(M.mul(x, n) for x in g)


def varsigma_prime(M: FiniteMonoid, beta, f, args):
    """Interleave relative arguments into the slots selected by beta.

    ``beta`` is a strictly increasing tuple of slot indices (1-based, length
    s <= k); slot beta(t) receives the t-th argument right-translated by the
    product of the earlier endpoints, and unselected slots receive singleton
    constants accumulating those endpoints.
    """
    k = len(f)
    s = len(beta)
    if len(args) != s:
        raise ValueError("one argument per selected slot")
    if list(beta) != sorted(set(beta)) or any(not 1 <= b <= k for b in beta):
        raise ValueError("selector must be strictly increasing within 1..k")
    acc = M.unit  # product n_t ... n_1 of the endpoints seen so far
    fill = [(M.unit,)] * k
    seen = 0
    for p in range(1, k + 1):
        if seen < s and beta[seen] == p:
            g, n = args[seen]
            fill[p - 1] = right_translate(M, tuple(g), acc)
            acc = M.mul(n, acc)
            seen += 1
        else:
            fill[p - 1] = (acc,)
    return (gamma(M, f, fill), acc)


def varsigma_i(M: FiniteMonoid, f, i: int, arg):
    """One relative argument in slot i (selector of size one)."""
    return varsigma_prime(M, (i,), f, [arg])


def varsigma(M: FiniteMonoid, f, args):
    """All slots selected (selector of full size)."""
    return varsigma_prime(M, tuple(range(1, len(f) + 1)), f, args)


def iota(M: FiniteMonoid, f):
    """Empty selector: the inclusion (f; 1)."""
    return (tuple(f), M.unit)


def rho(M: FiniteMonoid, u, gs):
    """Right action: ((f; n), g_1, ..., g_k) -> (gamma(f; g_1, ..., g_k); n)."""
    f, n = u
    return (gamma(M, f, gs), n)


# ---------------------------------------------------------------------------
# truncated totalizations


@dataclass
class TotComplex:
    """Truncated conormalized totalization of the closed or open part.

    ``kind`` is "closed" (basis: coordinate tuples) or "open" (basis:
    (coordinates, endpoint) pairs).  The cochain degree is the level; the
    differential is the alternating coface sum, which on the conormalized
    basis reduces to the signed endpoint-append.
    """

    M: FiniteMonoid
    N: tuple
    truncation: int = 4
    kind: str = "open"

    def __post_init__(self):
        self.N = self.M.check_submonoid(self.N)
        if self.kind not in ("closed", "open"):
            raise ValueError("kind is 'closed' or 'open'")

    def _normal(self, xs) -> bool:
        if xs and xs[0] == self.M.unit:
            return False
        return all(a != b for a, b in zip(xs, xs[1:]))

    def basis(self, degree: int) -> list:
        if degree < 0 or degree > self.truncation:
            return []
        tuples = [
            xs
            for xs in product(self.M.elements, repeat=degree)
            if self._normal(xs)
        ]
        if self.kind == "closed":
            return tuples
        return [(xs, y) for xs in tuples for y in self.N]

    def _split(self, b):
        return (b, self.M.unit) if self.kind == "closed" else b

    def _join(self, xs, y):
        return xs if self.kind == "closed" else (xs, y)

    def truncate(self, v: LinComb) -> LinComb:
        out = LinComb()
        for b, c in v:
            xs, _ = self._split(b)
            if len(xs) <= self.truncation:
                out = out + LinComb.unit(b, c)
        return out

    def degree_of(self, v: LinComb):
        degs = {len(self._split(b)[0]) for b, _ in v}
        if len(degs) > 1:
            raise ValueError("inhomogeneous combination")
        return degs.pop() if degs else None

    def differential(self, v: LinComb) -> LinComb:
        """Full alternating coface sum on raw combinations."""
        out = LinComb()
        for b, c in v:
            xs, y = self._split(b)
            k = len(xs)
            for i in range(k + 2):
                if i == 0:
                    img = (self.M.unit,) + xs
                elif i == k + 1:
                    img = xs + (y,)
                else:
                    img = xs[:i] + (xs[i - 1],) + xs[i:]
                out = out + LinComb.unit(self._join(img, y), (-1) ** (i % 2) * c)
        return self.truncate(out)

    def conormal_project(self, v: LinComb) -> LinComb:
        """Project onto the intersection of codegeneracy kernels along the
        span of the non-final coface images (the summand the totalization
        Hom-complex selects)."""
        out = LinComb()
        for b, c in v:
            piece = LinComb.unit(b, c)
            xs, _ = self._split(b)
            for i in range(len(xs) - 1, -1, -1):
                piece = piece - piece.map_basis(lambda e, i=i: self._dup(i, e))
            out = out + piece
        return out

    def _dup(self, i: int, b):
        """d^i s^i on a raw basis element: replace x_{i+1} by x_i (or the
        unit for i = 0)."""
        xs, y = self._split(b)
        value = self.M.unit if i == 0 else xs[i - 1]
        return self._join(xs[:i] + (value,) + xs[i + 1 :], y)

    def unnormalized_complex(self) -> ChainComplex:
        """The full (non-quotiented) truncated complex, for cross-checks.

        Degrees are negated so that the coface differential lowers the
        chain degree as the chain machinery expects.
        """
        om = CosimplicialAbGroup(self.M, self.N)

        def levels(k):
            if self.kind == "closed":
                return [(xs, self.M.unit) for xs in product(self.M.elements, repeat=k)]
            return om.level(k)

        bases = {-(k): levels(k) for k in range(self.truncation + 1)}
        boundary = {}
        for k in range(1, self.truncation + 1):
            lower, upper = levels(k - 1), levels(k)
            index = {e: r for r, e in enumerate(upper)}
            mat = [[0] * len(lower) for _ in upper]
            for col, e in enumerate(lower):
                for i in range(k + 1):
                    img = om.coface(i, e)
                    mat[index[img]][col] += (-1) ** (i % 2)
            boundary[-(k - 1)] = mat
        return ChainComplex(bases, boundary)

    def chain_complex(self) -> ChainComplex:
        """The conormalized truncated complex with negated degrees."""
        bases = {-(k): self.basis(k) for k in range(self.truncation + 1)}
        boundary = {}
        for k in range(1, self.truncation + 1):
            lower, upper = bases[-(k - 1)], bases[-k]
            index = {e: r for r, e in enumerate(upper)}
            mat = [[0] * len(lower) for _ in upper]
            for col, e in enumerate(lower):
                for img, coeff in self.differential(LinComb.unit(e)):
                    if img in index:  # degenerate images vanish in the quotient
                        mat[index[img]][col] += coeff
            boundary[-(k - 1)] = mat
        return ChainComplex(bases, boundary)

    def homology(self) -> dict[int, tuple[int, list[int]]]:
        """Cohomology per level, reliable strictly inside the window."""
        cx = self.chain_complex()
        return {-d: homology(cx, d) for d in cx.degrees()}


# ---------------------------------------------------------------------------
# operations on the totalizations


def _pairs(u: LinComb, v: LinComb):
    for a, ca in u:
        for b, cb in v:
            yield a, b, ca * cb


def cup(tot: TotComplex, f: LinComb, g: LinComb) -> LinComb:
    """Concatenation product on the closed part: (mu o_2 g) o_1 f."""
    out = LinComb()
    for a, b, c in _pairs(f, g):
        out = out + LinComb.unit(a + b, c)
    return tot.conormal_project(tot.truncate(out))


def sqcup(tot: TotComplex, u: LinComb, v: LinComb) -> LinComb:
    """Concatenation product on the open part: (f, g |> m; nm)."""
    M = tot.M
    out = LinComb()
    for (a, m), (b, n), c in _pairs(u, v):
        out = out + LinComb.unit(
            (a + right_translate(M, b, m), M.mul(n, m)), c
        )
    return tot.conormal_project(tot.truncate(out))


def inc_tot(tot: TotComplex, f: LinComb) -> LinComb:
    """The inclusion of the closed part: f -> (f; 1)."""
    out = LinComb()
    for a, c in f:
        out = out + LinComb.unit((a, tot.M.unit), c)
    return tot.conormal_project(tot.truncate(out))


def homotopy_H(tot: TotComplex, f: LinComb, u: LinComb) -> LinComb:
    """The commutator homotopy: signed unit-insertion sum.

    d(H(f,u)) + H(df,u) + (-1)^{|f|} H(f,du)
    = inc(f) |_| u - (-1)^{|f||u|} u |_| inc(f).
    """
    M = tot.M
    out = LinComb()
    for a, (b, n), c in _pairs(f, u):
        k, dg = len(a), len(b)
        for i in range(1, k + 1):
            sign = (-1) ** ((i + i * dg + k * dg) % 2)
            img, end = varsigma_i(M, a, i, (b, n))
            out = out + LinComb.unit((img, end), sign * c)
    return tot.conormal_project(tot.truncate(out))


def _insertion_sign(positions, arg_degrees, n):
    """Sign of one unit-insertion term: each argument at slot p of degree d
    contributes p + p*d, plus the cross terms n*d and pairwise products."""
    total = 0
    for p, d in zip(positions, arg_degrees):
        total += p + p * d + n * d
    for s in range(len(arg_degrees)):
        for t in range(s + 1, len(arg_degrees)):
            total += arg_degrees[s] * arg_degrees[t]
    return (-1) ** (total % 2)


def act_Tk(tot: TotComplex, f: LinComb, gs: list[LinComb]) -> LinComb:
    """Unit-insertion sum placing closed arguments between coordinates of f."""
    M = tot.M
    out = LinComb()
    for a, cf in f:
        n = len(a)
        for combo in _selections(n, len(gs)):
            for term, csign in _expand_terms(gs):
                degs = [len(b) for b in term]
                fill = [(M.unit,)] * n
                for p, b in zip(combo, term):
                    fill[p - 1] = b
                img = gamma(M, a, fill)
                sign = _insertion_sign(combo, degs, n)
                out = out + LinComb.unit(img, sign * cf * csign)
    return tot.conormal_project(tot.truncate(out))


def act_Tj(tot: TotComplex, f: LinComb, hs: list[LinComb]) -> LinComb:
    """Unit-insertion sum placing open arguments, endpoints accumulated."""
    M = tot.M
    out = LinComb()
    for a, cf in f:
        n = len(a)
        for combo in _selections(n, len(hs)):
            for term, csign in _expand_terms(hs):
                degs = [len(b[0]) for b in term]
                img, end = varsigma_prime(M, combo, a, list(term))
                sign = _insertion_sign(combo, degs, n)
                out = out + LinComb.unit((img, end), sign * cf * csign)
    return tot.conormal_project(tot.truncate(out))


def _selections(n: int, s: int):
    """Strictly increasing slot tuples of length s within 1..n."""
    from itertools import combinations

    return combinations(range(1, n + 1), s)


def _expand_terms(factors: list[LinComb]):
    """Cartesian expansion of a list of combinations into (basis tuple, coeff)."""
    terms = [()]
    coeffs = [1]
    for f in factors:
        terms, coeffs = (
            [t + (b,) for t in terms for b, _ in f],
            [c * cb for c in coeffs for _, cb in f],
        )
    return zip(terms, coeffs)
