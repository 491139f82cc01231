"""Coloured integer-string operad.

Elements are strings of letters (closed ``3`` or open ``u3``) and vertical
bars, with a closed/open output tag.  The label ``i`` occurring ``n_i + 1``
times encodes an input of cosimplicial colour ``n_i``; the number of bars is
the output colour.  The module provides parsing/printing of the canonical
text form, operadic composition by segment substitution, the left symmetric
action, per-pair complexity counters with the induced filtrations, the
duality between unary strings and monotone maps, and exhaustive enumeration
of fixed-colour components.

Token encoding: each token is an ``int`` — ``0`` is a bar, ``+i`` a closed
letter with label ``i``, ``-i`` an open letter with label ``i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

BAR = 0

__all__ = [
    "BAR",
    "Colour",
    "IntegerString",
    "MonotoneMap",
    "StringError",
    "UnknownToken",
    "MixedDecoration",
    "MissingLabel",
    "ClosedOutputWithOpenLetter",
    "ColourMismatch",
    "LabelOutOfRange",
    "parse",
    "text",
    "colours",
    "arity",
    "occurrences",
    "compose",
    "sym_act",
    "block_perm",
    "c_count",
    "c_prime",
    "c_dbl_prime",
    "in_filtration",
    "identity_string",
    "empty_string",
    "joyal_to_string",
    "string_to_joyal",
    "enumerate_strings",
    "multiset_permutations",
]


class StringError(ValueError):
    """Base class for integer-string validation and parse errors."""


class UnknownToken(StringError):
    """The text contains a character outside the grammar."""


class MixedDecoration(StringError):
    """Some label occurs both as an open and as a closed letter."""


class MissingLabel(StringError):
    """The labels present are not exactly 1..k."""


class ClosedOutputWithOpenLetter(StringError):
    """A closed-output string may not contain open letters."""


class ColourMismatch(StringError):
    """Composition slot colour does not match the output colour plugged in."""


class LabelOutOfRange(StringError):
    """A label argument does not name an input slot of the string."""


class Colour(NamedTuple):
    """A cosimplicial colour: a level ``index`` plus a closed/open flag."""

    index: int
    open: bool

    def __str__(self) -> str:
        return ("u" if self.open else "") + str(self.index)


@dataclass(frozen=True)
class IntegerString:
    """An integer-string: a token tuple plus the output open/closed tag."""

    tokens: tuple[int, ...]
    output_open: bool

    def __post_init__(self) -> None:
        _validate(self.tokens, self.output_open)

    def __str__(self) -> str:
        return text(self)

    @property
    def arity(self) -> int:
        return arity(self)


def _validate(tokens: Sequence[int], output_open: bool) -> None:
    seen_open: dict[int, bool] = {}
    for t in tokens:
        if t == BAR:
            continue
        label, opn = abs(t), t < 0
        if label in seen_open:
            if seen_open[label] != opn:
                raise MixedDecoration(f"label {label} is both open and closed")
        else:
            seen_open[label] = opn
    labels = sorted(seen_open)
    if labels != list(range(1, len(labels) + 1)):
        raise MissingLabel(f"labels {labels} are not exactly 1..k")
    if not output_open and any(seen_open.values()):
        raise ClosedOutputWithOpenLetter(
            "closed output is incompatible with open letters"
        )


_SHELL = re.compile(r"^\((?P<body>[^()]*)\)\^(?P<tag>[co])$")


def parse(source: str) -> IntegerString:
    """Parse canonical text like ``"(1u2|u211||u21)^o"`` (whitespace ignored).

    Labels in text form are single digits 1-9; larger labels only exist as
    in-memory values.
    """
    compact = "".join(source.split())
    match = _SHELL.match(compact)
    if match is None:
        raise UnknownToken(f"not of the form '(...)^c' or '(...)^o': {source!r}")
    tokens: list[int] = []
    body = match.group("body")
    pos = 0
    while pos < len(body):
        ch = body[pos]
        if ch == "|":
            tokens.append(BAR)
            pos += 1
        elif ch == "u":
            if pos + 1 >= len(body) or not body[pos + 1].isdigit():
                raise UnknownToken(f"'u' not followed by a digit at {pos}")
            label = int(body[pos + 1])
            if label == 0:
                raise UnknownToken("label 0 is not allowed")
            tokens.append(-label)
            pos += 2
        elif ch.isdigit():
            label = int(ch)
            if label == 0:
                raise UnknownToken("label 0 is not allowed")
            tokens.append(label)
            pos += 1
        else:
            raise UnknownToken(f"unexpected character {ch!r} at {pos}")
    return IntegerString(tuple(tokens), match.group("tag") == "o")


def text(x: IntegerString) -> str:
    """Canonical text of ``x``; inverse of :func:`parse`."""
    parts: list[str] = []
    for t in x.tokens:
        if t == BAR:
            parts.append("|")
        else:
            if abs(t) > 9:
                raise ValueError("canonical text only covers labels 1..9")
            parts.append(("u" if t < 0 else "") + str(abs(t)))
    return "(" + "".join(parts) + ")^" + ("o" if x.output_open else "c")


@lru_cache(maxsize=1 << 18)
def arity(x: IntegerString) -> int:
    return len({abs(t) for t in x.tokens if t != BAR})


def occurrences(x: IntegerString, i: int) -> int:
    return sum(1 for t in x.tokens if t != BAR and abs(t) == i)


@lru_cache(maxsize=1 << 18)
def colours(x: IntegerString) -> tuple[tuple[Colour, ...], Colour]:
    """Input colours (occurrences minus one, per label) and output colour."""
    counts: dict[int, int] = {}
    opens: dict[int, bool] = {}
    bars = 0
    for t in x.tokens:
        if t == BAR:
            bars += 1
        else:
            label = abs(t)
            counts[label] = counts.get(label, 0) + 1
            opens[label] = t < 0
    inputs = tuple(
        Colour(counts[i] - 1, opens[i]) for i in range(1, len(counts) + 1)
    )
    return inputs, Colour(bars, x.output_open)


def _segments(tokens: Sequence[int]) -> list[list[int]]:
    """Split a token sequence at its bars (bars are not kept)."""
    out: list[list[int]] = [[]]
    for t in tokens:
        if t == BAR:
            out.append([])
        else:
            out[-1].append(t)
    return out


def _shift(token: int, threshold: int, amount: int) -> int:
    if token == BAR or abs(token) <= threshold:
        return token
    return token + amount if token > 0 else token - amount


def _unchecked(tokens: tuple[int, ...], output_open: bool) -> IntegerString:
    """Build an IntegerString without re-running validation.

    Only for internal use on token tuples that are valid by construction."""
    s = object.__new__(IntegerString)
    object.__setattr__(s, "tokens", tokens)
    object.__setattr__(s, "output_open", output_open)
    return s


def compose(f: IntegerString, i: int, g: IntegerString) -> IntegerString:
    """Operadic composition ``f o_i g`` by segment substitution.

    The bars of ``g`` cut its letters into segments; the r-th segment
    replaces the r-th occurrence of letter ``i`` in ``f``, after the usual
    relabelling of both factors.
    """
    k = arity(f)
    if not 1 <= i <= k:
        raise LabelOutOfRange(f"slot {i} not in 1..{k}")
    slot_occ = 0
    slot_open = False
    for t in f.tokens:
        if t != BAR and (t == i or t == -i):
            slot_occ += 1
            slot_open = t < 0
    _, g_out = colours(g)
    if g_out.index != slot_occ - 1 or g_out.open != slot_open:
        raise ColourMismatch(
            f"slot {i} has colour {Colour(slot_occ - 1, slot_open)}, "
            f"got output colour {g_out}"
        )
    lg = arity(g)
    up = i - 1
    segs: list[list[int]] = [[]]
    for t in g.tokens:
        if t == BAR:
            segs.append([])
        else:
            segs[-1].append(t + up if t > 0 else t - up)
    down = lg - 1
    result: list[int] = []
    r = 0
    for t in f.tokens:
        if -i <= t <= i:
            if t == i or t == -i:
                result.extend(segs[r])
                r += 1
            else:
                result.append(t)
        else:
            result.append(t + down if t > 0 else t - down)
    return _unchecked(tuple(result), f.output_open)


def sym_act(sigma: Sequence[int], x: IntegerString) -> IntegerString:
    """Left symmetric action: relabel letter ``i`` to ``sigma[i-1]``.

    Token order and openness flags are unchanged.
    """
    k = arity(x)
    if len(sigma) != k or sorted(sigma) != list(range(1, k + 1)):
        raise StringError(f"{sigma!r} is not a permutation of 1..{k}")
    relabel = {i + 1: s for i, s in enumerate(sigma)}
    tokens = tuple(
        t if t == BAR else (relabel[t] if t > 0 else -relabel[-t])
        for t in x.tokens
    )
    return _unchecked(tokens, x.output_open)


def block_perm(sigma: Sequence[int], i: int, l: int) -> list[int]:
    """Permutation of ``1..k+l-1`` induced by ``sigma`` on ``1..k`` when the
    letter ``i`` is replaced by a block of ``l`` consecutive letters.

    Satisfies the equivariance law

    ``sym_act(block_perm(sigma, i, l), compose(f, i, g))
      == compose(sym_act(sigma, f), sigma[i-1], g)``

    for ``f`` of arity ``k`` and ``g`` of arity ``l``.
    """
    k = len(sigma)
    if sorted(sigma) != list(range(1, k + 1)):
        raise StringError(f"{sigma!r} is not a permutation of 1..{k}")
    if not 1 <= i <= k:
        raise StringError(f"slot {i} out of range for arity {k}")
    si = sigma[i - 1]
    tau = [0] * (k + l - 1)
    for a in range(1, k + 1):
        if a == i:
            continue
        src = a if a < i else a + l - 1
        tgt = sigma[a - 1] if sigma[a - 1] < si else sigma[a - 1] + l - 1
        tau[src - 1] = tgt
    for b in range(1, l + 1):
        tau[i + b - 2] = si + b - 1
    return tau


def _require_labels(x: IntegerString, i: int, j: int) -> None:
    if not (1 <= i < j <= arity(x)):
        raise LabelOutOfRange(f"need labels i < j of the string, got {i},{j}")


def c_count(x: IntegerString, i: int, j: int) -> int:
    """Direction changes of the {i,j}-projection (blocks minus one)."""
    _require_labels(x, i, j)
    blocks = 0
    prev = None
    for t in x.tokens:
        if t == BAR or abs(t) not in (i, j):
            continue
        if abs(t) != prev:
            blocks += 1
            prev = abs(t)
    return blocks - 1


def _first_occurrence(x: IntegerString, i: int) -> int:
    for pos, t in enumerate(x.tokens):
        if t != BAR and abs(t) == i:
            return pos
    raise LabelOutOfRange(f"label {i} absent")


def _is_open(x: IntegerString, i: int) -> bool:
    for t in x.tokens:
        if t != BAR and abs(t) == i:
            return t < 0
    raise LabelOutOfRange(f"label {i} absent")


def c_prime(x: IntegerString, i: int, j: int) -> int:
    """Mixed-pair complexity: ``c`` adjusted by the first-occurrence case.

    For a same-openness pair this coincides with :func:`c_count`.
    """
    _require_labels(x, i, j)
    base = c_count(x, i, j)
    oi, oj = _is_open(x, i), _is_open(x, j)
    if oi == oj:
        return base
    i_first = _first_occurrence(x, i) < _first_occurrence(x, j)
    if not oi and oj:  # pair (i, uj)
        return base if i_first else base + 1
    return base + 1 if i_first else base  # pair (ui, j)


def c_dbl_prime(x: IntegerString, i: int, j: int) -> int:
    """Variant mixed-pair complexity with the two first-occurrence cases swapped."""
    _require_labels(x, i, j)
    base = c_count(x, i, j)
    oi, oj = _is_open(x, i), _is_open(x, j)
    if oi == oj:
        return base
    i_first = _first_occurrence(x, i) < _first_occurrence(x, j)
    if not oi and oj:  # pair (i, uj)
        return base + 1 if i_first else base
    return base if i_first else base + 1  # pair (ui, j)


def in_filtration(x: IntegerString, m: int, variant: str = "standard") -> bool:
    """Membership in the m-th filtration stage.

    Closed pairs need complexity <= m, open pairs <= m-1, and mixed pairs
    use the adjusted counter (``variant="primed-variant"`` picks the
    swapped-case counter) with bound m.
    """
    if m < 1:
        raise ValueError("filtration level m must be >= 1")
    if variant not in ("standard", "primed-variant"):
        raise ValueError(f"unknown filtration variant {variant!r}")
    mixed = c_prime if variant == "standard" else c_dbl_prime
    k = arity(x)
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            oi, oj = _is_open(x, i), _is_open(x, j)
            if oi and oj:
                if c_count(x, i, j) > m - 1:
                    return False
            elif oi != oj:
                if mixed(x, i, j) > m:
                    return False
            else:
                if c_count(x, i, j) > m:
                    return False
    return True


def identity_string(colour: Colour) -> IntegerString:
    """The identity of a colour: the alternating unary string ``1|1|...|1``."""
    letter = -1 if colour.open else 1
    tokens: list[int] = [letter]
    for _ in range(colour.index):
        tokens.extend((BAR, letter))
    return IntegerString(tuple(tokens), colour.open)


def empty_string() -> IntegerString:
    """The nullary element ``()^c``."""
    return IntegerString((), False)


@dataclass(frozen=True)
class MonotoneMap:
    """A weakly monotone map [n] -> [m], given by its n+1 values."""

    n: int
    m: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.n + 1:
            raise ValueError("need n+1 values")
        if any(not 0 <= v <= self.m for v in self.values):
            raise ValueError("values out of range")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise ValueError("values not weakly increasing")


def joyal_to_string(
    psi: MonotoneMap, input_open: bool = False, output_open: bool = False
) -> IntegerString:
    """The unary string of colour pair (n; m) dual to ``psi: [n] -> [m]``.

    The t-th bar is placed after ``#{s : psi(s) < t}`` letters.
    """
    if input_open and not output_open:
        raise ClosedOutputWithOpenLetter("no unary strings from open to closed")
    letter = -1 if input_open else 1
    tokens: list[int] = []
    letters_done = 0
    for t in range(1, psi.m + 1):
        cut = sum(1 for v in psi.values if v < t)
        tokens.extend([letter] * (cut - letters_done))
        tokens.append(BAR)
        letters_done = cut
    tokens.extend([letter] * (psi.n + 1 - letters_done))
    return IntegerString(tuple(tokens), output_open)


def string_to_joyal(x: IntegerString) -> MonotoneMap:
    """Inverse of :func:`joyal_to_string` on unary strings."""
    if arity(x) != 1:
        raise LabelOutOfRange("duality applies to unary strings only")
    n = occurrences(x, 1) - 1
    m = sum(1 for t in x.tokens if t == BAR)
    # phi(t) = number of letters before the t-th bar; phi(m+1) = n+1.
    phi = [0]
    letters = 0
    for t in x.tokens:
        if t == BAR:
            phi.append(letters)
        else:
            letters += 1
    phi.append(n + 1)
    values = []
    for i in range(n + 1):
        values.append(min(t for t, p in enumerate(phi) if p > i) - 1)
    return MonotoneMap(n, m, tuple(values))


def multiset_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All distinct orderings of a multiset of tokens."""
    counts = {}
    for it in items:
        counts[it] = counts.get(it, 0) + 1
    keys = sorted(counts)
    total = len(items)
    current: list[int] = []

    def rec() -> Iterator[tuple[int, ...]]:
        if len(current) == total:
            yield tuple(current)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                current.append(key)
                yield from rec()
                current.pop()
                counts[key] += 1

    return rec()


def enumerate_strings(
    input_colours: Sequence[Colour],
    output_colour: Colour,
    m: int,
    variant: str = "standard",
) -> list[IntegerString]:
    """All filtration-m strings with the given colours, in canonical text order."""
    if not output_colour.open and any(c.open for c in input_colours):
        return []
    items: list[int] = [BAR] * output_colour.index
    for label, col in enumerate(input_colours, start=1):
        items.extend([-label if col.open else label] * (col.index + 1))
    found = []
    for tokens in multiset_permutations(items):
        x = IntegerString(tokens, output_colour.open)
        if in_filtration(x, m, variant):
            found.append(x)
    found.sort(key=text)
    return found
