"""Shared enumeration helpers for the test suite."""

from itertools import product as iproduct

from operadix import strings


def small_strings(max_tokens: int, max_labels: int, m: int = 2):
    """All filtration-``m`` strings with at most ``max_tokens`` tokens and
    ``max_labels`` labels, over every admissible colour signature."""
    out = []
    for k in range(1, max_labels + 1):
        for idxs in iproduct(range(max_tokens), repeat=k):
            occ = k + sum(idxs)
            if occ > max_tokens:
                continue
            for bars in range(max_tokens - occ + 1):
                for opens in iproduct((False, True), repeat=k):
                    for out_open in (False, True):
                        if any(opens) and not out_open:
                            continue
                        ins = [strings.Colour(i, o) for i, o in zip(idxs, opens)]
                        out.extend(
                            strings.enumerate_strings(
                                ins, strings.Colour(bars, out_open), m
                            )
                        )
    return out


def by_output(elems):
    """Group elements by output colour for composability lookups."""
    table = {}
    for g in elems:
        _, out = strings.colours(g)
        table.setdefault(out, []).append(g)
    return table
