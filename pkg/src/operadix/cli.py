"""Command-line front end.

Subcommands cover parsing and printing of integer strings, operadic
composition and symmetric actions, filtration membership, the forgetful map
to decorated complete graphs, basis enumeration, ASCII tree views, exact
homology of surjection components, rational cube configurations and their
cells, the finite-monoid loop-model homology, the cobar experimental
reports, and per-module verification suites.

Exit codes: 0 success, 1 verification failure, 2 usage error.  ``--json``
switches every report to machine-readable JSON; the environment variable
``OPERADIX_SEED`` supplies a default seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from random import Random

from . import chains, cobar, geometry, graphs, loops, strings, surjections, trees
from .chains import LinComb

__all__ = ["main"]


def _seed_default() -> int:
    env = os.environ.get("OPERADIX_SEED")
    return int(env) if env else 0


def _emit(report: dict, as_json: bool, lines=None) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True))
    else:
        for line in lines if lines is not None else _human_lines(report):
            print(line)


def _human_lines(report: dict):
    for key in sorted(report):
        yield f"{key}: {report[key]}"


def _parse_component(spec: str):
    """'c,o:o' -> ([False, True], True)."""
    try:
        ins, out = spec.split(":")
        flags = [s.strip() for s in ins.split(",") if s.strip()]
        if any(f not in ("c", "o") for f in flags) or out.strip() not in ("c", "o"):
            raise ValueError
        return [f == "o" for f in flags], out.strip() == "o"
    except ValueError:
        raise ValueError(f"bad component spec {spec!r}; expected like 'c,o:o'")


def _parse_colours(spec: str):
    """'c0,c1:o2' -> ([Colour(0,False), Colour(1,False)], Colour(2,True))."""
    try:
        ins, out = spec.split(":")

        def one(tok: str) -> strings.Colour:
            tok = tok.strip()
            if tok[0] not in ("c", "o") or not tok[1:].isdigit():
                raise ValueError
            return strings.Colour(int(tok[1:]), tok[0] == "o")

        return [one(t) for t in ins.split(",") if t.strip()], one(out)
    except (ValueError, IndexError):
        raise ValueError(f"bad colours spec {spec!r}; expected like 'c0,c1:o2'")


def _slot_of(f: strings.IntegerString, token: str) -> int:
    """Resolve a ``--at`` token: a slot number, optionally in letter form
    ('u2' for the open letter 2)."""
    label = token[1:] if token.startswith("u") else token
    if not label.isdigit() or int(label) < 1:
        raise ValueError(f"bad slot token {token!r}")
    i = int(label)
    if i > strings.arity(f):
        raise ValueError(f"slot {i} out of range for arity {strings.arity(f)}")
    if token.startswith("u") and not any(t == -i for t in f.tokens):
        raise ValueError(f"letter {i} is not open in {strings.text(f)}")
    return i


def _string_report(x: strings.IntegerString) -> dict:
    ins, out = strings.colours(x)
    return {
        "text": strings.text(x),
        "arity": strings.arity(x),
        "inputColours": [[c.index, "o" if c.open else "c"] for c in ins],
        "outputColour": [out.index, "o" if out.open else "c"],
    }


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_parse(args) -> int:
    x = strings.parse(args.string)
    _emit(_string_report(x), args.json)
    return 0


def _cmd_compose(args) -> int:
    f = strings.parse(args.f)
    g = strings.parse(args.g)
    out = strings.compose(f, _slot_of(f, args.at), g)
    _emit({"result": strings.text(out)}, args.json, [strings.text(out)])
    return 0


def _cmd_act(args) -> int:
    x = strings.parse(args.string)
    sigma = [int(s) for s in args.perm.split(",")]
    out = strings.sym_act(sigma, x)
    _emit({"result": strings.text(out)}, args.json, [strings.text(out)])
    return 0


def _cmd_filtration(args) -> int:
    x = strings.parse(args.string)
    inside = strings.in_filtration(x, args.m, args.variant)
    report = {"m": args.m, "variant": args.variant, "inFiltration": inside}
    pairs = {}
    labels = sorted({abs(t) for t in x.tokens if t != strings.BAR})
    for a in range(len(labels)):
        for b in range(a + 1, len(labels)):
            i, j = labels[a], labels[b]
            pairs[f"{i},{j}"] = {
                "c": strings.c_count(x, i, j),
                "cPrime": strings.c_prime(x, i, j),
                "cDblPrime": strings.c_dbl_prime(x, i, j),
            }
    report["pairs"] = pairs
    _emit(report, args.json)
    return 0


def _cmd_q(args) -> int:
    x = strings.parse(args.string)
    alpha = graphs.q(x)
    edges = {
        f"{i},{j}": [mu, orient]
        for (i, j), (mu, orient) in sorted(alpha.edge_dict().items())
    }
    report = {
        "vertexOpen": list(alpha.vertex_open),
        "outputOpen": alpha.output_open,
        "edges": edges,
    }
    lines = [
        f"{i}->{j} level {mu}" if orient == 1 else f"{j}->{i} level {mu}"
        for (i, j), (mu, orient) in sorted(alpha.edge_dict().items())
    ]
    _emit(report, args.json, lines)
    return 0


def _cmd_enumerate(args) -> int:
    if args.kind == "component":
        ins, out = _parse_component(args.component)
        basis = surjections.enumerate_component(ins, out, args.m, args.variant)
        texts = [strings.text(b.underlying) for b in basis]
    elif args.kind == "graphs":
        ins, out = _parse_component(args.component)
        basis = graphs.enumerate_graphs(ins, out, args.m)
        texts = [
            json.dumps(
                {f"{i},{j}": list(d) for (i, j), d in sorted(a.edge_dict().items())},
                sort_keys=True,
            )
            for a in basis
        ]
    else:
        ins, out = _parse_colours(args.colours)
        basis = strings.enumerate_strings(ins, out, args.m, args.variant)
        texts = [strings.text(b) for b in basis]
    _emit({"count": len(texts), "basis": texts}, args.json, texts)
    return 0


def _cmd_tree(args) -> int:
    x = strings.parse(args.string)
    t = trees.tree_view(x)
    print(trees.render_tree(t))
    return 0


def _cmd_homology(args) -> int:
    ins, out = _parse_component(args.component)
    hom = surjections.component_homology(ins, out, args.m, args.variant)
    report = {
        str(d): {"rank": rank, "torsion": torsion}
        for d, (rank, torsion) in sorted(hom.items())
    }
    lines = [
        f"H_{d} = rank {rank}"
        + (f", torsion {torsion}" if torsion else "")
        for d, (rank, torsion) in sorted(hom.items())
    ]
    _emit(report, args.json, lines)
    return 0


def _cmd_cells(args) -> int:
    if args.config:
        with open(args.config) as fh:
            cfg = geometry.config_from_json(json.load(fh))
    else:
        cfg = geometry.random_config(
            args.m, args.closed, args.open, seed=args.seed, denominator=args.denominator
        )
    alpha = geometry.cell_index(cfg)
    report = {
        "config": geometry.config_to_json(cfg),
        "cell": {
            f"{i},{j}": list(d) for (i, j), d in sorted(alpha.edge_dict().items())
        },
    }
    _emit(report, args.json)
    return 0


def _cmd_loops(args) -> int:
    M = loops.FiniteMonoid.cyclic(args.order)
    sub = (
        tuple(int(s) for s in args.sub.split(","))
        if args.sub
        else tuple(M.elements)
    )
    tot = loops.TotComplex(M, sub, args.truncate, args.kind)
    hom = tot.homology()
    report = {
        str(level): {"rank": rank, "torsion": torsion}
        for level, (rank, torsion) in sorted(hom.items())
    }
    _emit(report, args.json)
    return 0


def _cmd_cobar(args) -> int:
    M = loops.FiniteMonoid.cyclic(args.order)
    B = cobar.dual_group_bialgebra(M) if args.dual else cobar.group_bialgebra(M)
    rep = cobar.rs2_experimental_report(
        B, truncation=args.truncate, max_level=args.max_level
    )
    report = {
        name: {"holds": ok, "cases": cases} for name, (ok, cases) in rep.items()
    }
    _emit(report, args.json)
    return 0 if all(ok for ok, _ in rep.values()) else 1


# ---------------------------------------------------------------------------
# verification suites


def _small_strings(max_tokens: int, max_labels: int, m: int):
    """All filtration-m strings with bounded token count and label count."""
    from itertools import product as iproduct

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
                        ins = [
                            strings.Colour(i, o) for i, o in zip(idxs, opens)
                        ]
                        out.extend(
                            strings.enumerate_strings(
                                ins, strings.Colour(bars, out_open), m
                            )
                        )
    return out


def _suite_rl_operad(args) -> tuple[bool, dict]:
    rng = Random(args.seed)
    elems = _small_strings(args.max_tokens, 3, args.m)
    failures = 0
    unit_cases = 0
    for x in elems[: args.samples * 4]:
        ins, out = strings.colours(x)
        for i, col in enumerate(ins, start=1):
            if strings.compose(x, i, strings.identity_string(col)) != x:
                failures += 1
            unit_cases += 1
        if strings.compose(strings.identity_string(out), 1, x) != x:
            failures += 1
        unit_cases += 1

    by_out = _by_output(elems)
    assoc_cases = 0
    for _ in range(args.samples):
        pick = _sample_pair(rng, elems, by_out)
        if pick is None:
            continue
        f, i, g = pick
        gi, _ = strings.colours(g)
        if not gi:
            continue
        j = rng.randrange(len(gi)) + 1
        hs = [h for h in by_out.get(gi[j - 1], []) if len(h.tokens) <= 5]
        if not hs:
            continue
        h = rng.choice(hs)
        lhs = strings.compose(strings.compose(f, i, g), i + j - 1, h)
        rhs = strings.compose(f, i, strings.compose(g, j, h))
        if lhs != rhs:
            failures += 1
        assoc_cases += 1
    equi_cases = 0
    for _ in range(args.samples):
        pick = _sample_pair(rng, elems, by_out)
        if pick is None:
            continue
        f, i, g = pick
        k = strings.arity(f)
        sigma = list(range(1, k + 1))
        rng.shuffle(sigma)
        tau = strings.block_perm(sigma, i, strings.arity(g))
        lhs = strings.sym_act(tau, strings.compose(f, i, g))
        rhs = strings.compose(strings.sym_act(sigma, f), sigma[i - 1], g)
        if lhs != rhs:
            failures += 1
        equi_cases += 1
    for _ in range(args.samples):
        x = rng.choice(elems)
        k = strings.arity(x)
        s = list(range(1, k + 1))
        rng.shuffle(s)
        t = list(range(1, k + 1))
        rng.shuffle(t)
        st = [s[t[j] - 1] for j in range(k)]
        if strings.sym_act(s, strings.sym_act(t, x)) != strings.sym_act(st, x):
            failures += 1
        if strings.sym_act(list(range(1, k + 1)), x) != x:
            failures += 1
        equi_cases += 2
    return failures == 0, {
        "elements": len(elems),
        "unitCases": unit_cases,
        "assocCases": assoc_cases,
        "equivarianceCases": equi_cases,
        "failures": failures,
    }


def _by_output(elems):
    by_out = {}
    for g in elems:
        _, out = strings.colours(g)
        by_out.setdefault(out, []).append(g)
    return by_out


def _sample_pair(rng, elems, by_out):
    """Random composable triple (f, slot, g), or None if the draw has none."""
    f = rng.choice(elems)
    ins, _ = strings.colours(f)
    if not ins:
        return None
    i = rng.randrange(len(ins)) + 1
    gs = by_out.get(ins[i - 1], [])
    if not gs:
        return None
    return f, i, rng.choice(gs)


def _suite_graph_operad(args) -> tuple[bool, dict]:
    rng = Random(args.seed)
    elems = _small_strings(args.max_tokens, 3, args.m)
    failures = 0
    filt_cases = lax_cases = 0
    by_out = _by_output(elems)
    for _ in range(args.samples):
        pick = _sample_pair(rng, elems, by_out)
        if pick is None:
            continue
        f, i, g = pick
        fg = strings.compose(f, i, g)
        if not strings.in_filtration(fg, args.m):
            failures += 1
        filt_cases += 1
        if strings.arity(fg) and strings.arity(f) and strings.arity(g):
            qf, qg, qfg = graphs.q(f), graphs.q(g), graphs.q(fg)
            composed = _graph_compose_at(qf, i, qg)
            if not graphs.leq(qfg, composed):
                failures += 1
            lax_cases += 1
    return failures == 0, {
        "filtrationClosureCases": filt_cases,
        "laxMorphismCases": lax_cases,
        "failures": failures,
    }


def _graph_compose_at(alpha: graphs.GraphElement, i: int, beta: graphs.GraphElement):
    """Blockwise composition substituting beta into vertex i of alpha."""
    betas = []
    for v in range(1, alpha.n + 1):
        if v == i:
            betas.append(beta)
        else:
            out_open = alpha.vertex_open[v - 1]
            betas.append(graphs.GraphElement((out_open,), {}, out_open))
    return graphs.compose(alpha, betas)


def _suite_chain_core(args) -> tuple[bool, dict]:
    rng = Random(args.seed)
    failures = 0
    for _ in range(args.samples):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        mat = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        d, left, right = chains.smith_normal_form(mat)
        if chains.mat_mul(chains.mat_mul(left, mat), right) != d:
            failures += 1
        diag = [d[i][i] for i in range(min(rows, cols))]
        for a, b in zip(diag, diag[1:]):
            if b and (not a or b % a):
                failures += 1
    return failures == 0, {"snfSamples": args.samples, "failures": failures}


def _suite_rs_operad(args) -> tuple[bool, dict]:
    rng = Random(args.seed)
    failures = 0
    comps = [
        ([False], False),
        ([False], True),
        ([True], True),
        ([False, False], False),
        ([False, True], True),
        ([True, True], True),
    ]
    basis = []
    for ins, out in comps:
        basis.extend(surjections.enumerate_component(ins, out, args.m))
    failures += sum(1 for s in basis if _diff_lin(surjections.differential(s)))
    by_out = {}
    for g in basis:
        by_out.setdefault(strings.colours(g.underlying)[1], []).append(g)
    leibniz_cases = 0
    for _ in range(args.samples):
        f = rng.choice(basis)
        ins, _ = strings.colours(f.underlying)
        if not ins:
            continue
        i = rng.randrange(len(ins)) + 1
        gs = by_out.get(ins[i - 1], [])
        if not gs:
            continue
        g = rng.choice(gs)
        lhs = _diff_lin(surjections.rs_compose(f, i, g))
        rhs = surjections._compose_linear(
            surjections.differential(f), i, LinComb.unit(g)
        ) + ((-1) ** (f.degree % 2)) * surjections._compose_linear(
            LinComb.unit(f), i, surjections.differential(g)
        )
        if lhs != rhs:
            failures += 1
        leibniz_cases += 1
    return failures == 0, {
        "basisElements": len(basis),
        "leibnizCases": leibniz_cases,
        "failures": failures,
    }


def _diff_lin(v: LinComb) -> LinComb:
    """Differential extended linearly over a combination of basis elements."""
    out = LinComb()
    for b, c in v:
        out = out + c * surjections.differential(b)
    return out


def _suite_sc_geometry(args) -> tuple[bool, dict]:
    rng = Random(args.seed)
    failures = 0
    for trial in range(args.samples):
        n_open = rng.randint(0, 2)
        n_closed = rng.randint(1 if not n_open else 0, 2)
        cfg = geometry.random_config(args.m, n_closed, n_open, seed=rng)
        alpha = geometry.cell_index(cfg)
        if not geometry.cell_contains(alpha, cfg):
            failures += 1
        for (i, j), (mu, orient) in alpha.edge_dict().items():
            weaker = dict(alpha.edge_dict())
            if mu > 1:
                weaker[(i, j)] = (mu - 1, orient)
                smaller = graphs.GraphElement(
                    alpha.vertex_open, weaker, alpha.output_open
                )
                if graphs.validate(smaller) and geometry.cell_contains(smaller, cfg):
                    failures += 1  # minimality broken
    return failures == 0, {"configs": args.samples, "failures": failures}


def _suite_loop_model(args) -> tuple[bool, dict]:
    M = loops.FiniteMonoid.cyclic(2)
    om = loops.omega(M, M.elements)
    om.check_identities(3)
    tot = loops.TotComplex(M, M.elements, 4, "open")
    closed = loops.TotComplex(M, M.elements, 4, "closed")
    rng = Random(args.seed)
    failures = cases = 0
    for _ in range(args.samples // 4 or 1):
        df, du = rng.randint(1, 2), rng.randint(0, 1)
        f = closed.conormal_project(LinComb.unit(rng.choice(closed.basis(df))))
        u = tot.conormal_project(LinComb.unit(rng.choice(tot.basis(du))))
        lhs = (
            tot.differential(loops.homotopy_H(tot, f, u))
            + loops.homotopy_H(tot, closed.differential(f), u)
            + ((-1) ** (df % 2)) * loops.homotopy_H(tot, f, tot.differential(u))
        )
        rhs = loops.sqcup(tot, loops.inc_tot(tot, f), u) - (
            (-1) ** ((df * du) % 2)
        ) * loops.sqcup(tot, u, loops.inc_tot(tot, f))
        if tot.conormal_project(lhs - rhs):
            failures += 1
        cases += 1
    return failures == 0, {"homotopyCases": cases, "failures": failures}


def _suite_cobar(args) -> tuple[bool, dict]:
    M = loops.FiniteMonoid.cyclic(2)
    B = cobar.group_bialgebra(M)
    rep = cobar.rs2_experimental_report(B, truncation=4, max_level=2)
    ok = all(holds for holds, _ in rep.values())
    details = {name: holds for name, (holds, _) in rep.items()}
    cx = cobar.unreduced_cobar(B, 4)
    try:
        cx.validate()
    except chains.InvalidComplex:
        ok = False
        details["unreducedDSquared"] = False
    else:
        details["unreducedDSquared"] = True
    return ok, details


_SUITES = {
    "rl-operad": _suite_rl_operad,
    "graph-operad": _suite_graph_operad,
    "chain-core": _suite_chain_core,
    "rs-operad": _suite_rs_operad,
    "sc-geometry": _suite_sc_geometry,
    "loop-model": _suite_loop_model,
    "cobar": _suite_cobar,
}


def _cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    overall = True
    report = {}
    for name in names:
        ok, details = _SUITES[name](args)
        overall = overall and ok
        report[name] = {"ok": ok, **details}
    lines = [
        f"{name}: {'ok' if info['ok'] else 'FAIL'} "
        + " ".join(f"{k}={v}" for k, v in info.items() if k != "ok")
        for name, info in report.items()
    ]
    _emit(report, args.json, lines)
    return 0 if overall else 1


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="operadix",
        description="Exact-arithmetic workbench for lattice-path operads.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--m", type=int, default=2, help="filtration level")
        p.add_argument(
            "--seed", type=int, default=_seed_default(), help="random seed"
        )
        p.add_argument(
            "--variant",
            choices=("standard", "primed-variant"),
            default="standard",
            help="filtration variant",
        )
        return p

    p = common(sub.add_parser("parse", help="parse and echo an integer string"))
    p.add_argument("string")
    p.set_defaults(func=_cmd_parse)

    p = common(sub.add_parser("compose", help="operadic composition f o_i g"))
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--at", required=True, help="slot number or letter token like u2")
    p.set_defaults(func=_cmd_compose)

    p = common(sub.add_parser("act", help="symmetric group action"))
    p.add_argument("perm", help="comma-separated permutation like 2,1,3")
    p.add_argument("string")
    p.set_defaults(func=_cmd_act)

    p = common(sub.add_parser("filtration", help="filtration membership and complexities"))
    p.add_argument("string")
    p.set_defaults(func=_cmd_filtration)

    p = common(sub.add_parser("q", help="forgetful map to a decorated complete graph"))
    p.add_argument("string")
    p.set_defaults(func=_cmd_q)

    p = common(sub.add_parser("enumerate", help="enumerate a component basis"))
    p.add_argument(
        "--kind", choices=("component", "graphs", "strings"), default="component"
    )
    p.add_argument("--component", default="c:c", help="like 'c,o:o'")
    p.add_argument("--colours", default="c0:c0", help="like 'c0,c1:o2'")
    p.set_defaults(func=_cmd_enumerate)

    p = common(sub.add_parser("tree", help="ASCII tree view of a filtration-2 string"))
    p.add_argument("string")
    p.set_defaults(func=_cmd_tree)

    p = common(sub.add_parser("homology", help="integral homology of a component"))
    p.add_argument("--component", required=True, help="like 'c,c:c'")
    p.set_defaults(func=_cmd_homology)

    p = common(sub.add_parser("cells", help="cube configurations and cell indices"))
    p.add_argument("--closed", type=int, default=2)
    p.add_argument("--open", type=int, default=0)
    p.add_argument("--denominator", type=int, default=16)
    p.add_argument("--config", help="JSON configuration file")
    p.set_defaults(func=_cmd_cells)

    p = common(sub.add_parser("loops", help="loop-model totalization homology"))
    p.add_argument("--order", type=int, default=2, help="cyclic monoid order")
    p.add_argument("--sub", help="comma-separated submonoid, default all")
    p.add_argument("--truncate", type=int, default=4)
    p.add_argument("--kind", choices=("closed", "open"), default="open")
    p.set_defaults(func=_cmd_loops)

    p = common(sub.add_parser("cobar", help="cobar experimental relation report"))
    p.add_argument("--order", type=int, default=2, help="cyclic group order")
    p.add_argument("--dual", action="store_true", help="use the dual bialgebra")
    p.add_argument("--truncate", type=int, default=4)
    p.add_argument("--max-level", type=int, default=1)
    p.set_defaults(func=_cmd_cobar)

    p = common(sub.add_parser("verify", help="run a module invariant suite"))
    p.add_argument("--suite", choices=tuple(_SUITES) + ("all",), required=True)
    p.add_argument("--max-tokens", type=int, default=5)
    p.add_argument("--samples", type=int, default=100)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (strings.StringError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
