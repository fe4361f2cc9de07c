"""Command-line front end: ``onelap <subcommand> [options]``.

Exit status is 0 on success, 1 when the computation rejects its input (not an
eigenvalue, disconnected graph, infeasible composition, ...) and 2 for usage
errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cheeger, compose, eigen, multiplicity, nodal
from .spectrum import census, max_distinct, spectrum, spectrum_closed_form
from .eigen import format_rational as fr
from .graph import FAMILIES, NAMED_GRAPHS, GraphFormatError, generate, load_graph


class UsageError(Exception):
    pass


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _rational(text):
    try:
        return eigen.parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _graph(args):
    sources = [args.graph is not None, args.name is not None, args.family is not None]
    if sum(sources) != 1:
        raise UsageError("give exactly one graph source: --graph FILE, --name NAME or --family F --n N")
    if args.graph is not None:
        return load_graph(_read(args.graph))
    if args.name is not None:
        return generate("named", args.name)
    if args.n is None:
        raise UsageError("--family needs --n")
    return generate(args.family, args.n)


def _sets(sets):
    return [sorted(s) for s in sets]


def _set_text(s):
    return "{" + ",".join(map(str, sorted(s))) + "}"


def _vec_text(x):
    return "(" + ", ".join(fr(t) for t in x) + ")"


# -- subcommands -------------------------------------------------------------

def cmd_spectrum(args, out):
    G = _graph(args)
    rep = spectrum(G, cap=args.cap)
    if args.json:
        return {"n": rep.n, "vol": rep.vol,
                "spectrum": [{"mu": fr(mu), "supports": _sets(sups)} for mu, sups in rep.entries]}
    out.append(f"n = {rep.n}, vol = {rep.vol}, {len(rep.entries)} distinct eigenvalues")
    for mu, sups in rep.entries:
        out.append(f"{fr(mu):>6}  " + " ".join(_set_text(s) for s in sups))


def cmd_cheeger(args, out):
    G = _graph(args)
    if args.k is None:
        h = cheeger.cheeger_h(G, cap=args.cap)
        if args.json:
            return {"h": fr(h)}
        out.append(f"h = {fr(h)}")
    else:
        h = cheeger.k_way_cheeger(G, args.k, cap=args.cap)
        if args.json:
            return {"k": args.k, "h_k": fr(h)}
        out.append(f"h_{args.k} = {fr(h)}")


def cmd_cut(args, out):
    G = _graph(args)
    rep = cheeger.optimal_cheeger_cut(G, cap=args.cap)
    full = frozenset(G.vertices)
    if args.json:
        return {"h": fr(rep.h_value), "delta0": rep.delta_zero,
                "cuts": [{"support": sorted(A), "delta0": d} for A, d in rep.cuts],
                "optimal": [{"support": sorted(A), "null_set": sorted(full - A)} for A in rep.optimal]}
    out.append(f"h = {fr(rep.h_value)}")
    out.append("cheeger cuts (support, delta0):")
    for A, d in rep.cuts:
        out.append(f"  {_set_text(A)}  {d}")
    out.append(f"optimal (delta0 = {rep.delta_zero}):")
    for A in rep.optimal:
        out.append(f"  {_set_text(A)}  null set {_set_text(full - A)}")


def cmd_nu(args, out):
    G = _graph(args)
    cap = args.cap if args.cap is not None else nodal.NU_CAP
    count, x = nodal.nu(G, args.mu, cap=cap, method=args.method)
    if args.json:
        return {"mu": fr(args.mu), "nu": count, "witness": [fr(t) for t in x]}
    out.append(f"nu({fr(args.mu)}) = {count}")
    out.append("witness:")
    out.append(eigen.dump_vertex_function(x).rstrip("\n"))


def cmd_am(args, out):
    G = _graph(args)
    am, system = multiplicity.algebraic_multiplicity(G, args.mu)
    if args.json:
        return {"mu": fr(args.mu), "am": am, "system": _sets(system.members)}
    out.append(f"am({fr(args.mu)}) = {am}")
    out.append("system: " + " ".join(_set_text(s) for s in system.members))


def cmd_verify(args, out):
    G = _graph(args)
    x = eigen.load_vertex_function(_read(args.vector), G.n)
    cert = eigen.is_eigenpair(G, args.mu, x)
    if args.json:
        res = {"mu": fr(args.mu), "eigenpair": cert is not None}
        if cert:
            res["witness"] = [{"edge": list(e), "z": fr(z)} for e, z in sorted(cert.witness.items())]
        return res
    if cert is None:
        out.append(f"not an eigenpair at mu = {fr(args.mu)}")
        return
    out.append(f"eigenpair at mu = {fr(args.mu)}; witness z:")
    for (i, j), z in sorted(cert.witness.items()):
        out.append(f"  z_{i},{j} = {fr(z)}")


def load_basis(text, n):
    """One basis vector per line: n entries, each an integer, p/q or a decimal."""
    basis = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.replace(",", " ").split()
        if len(parts) != n:
            raise ValueError(f"line {lineno}: expected {n} entries, got {len(parts)}")
        try:
            basis.append(tuple(eigen.parse_rational(t) for t in parts))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    return basis


def cmd_minI(args, out):
    G = _graph(args)
    basis = []
    for path in args.basis:
        basis += load_basis(_read(path), G.n)
    val = cheeger.min_I_on_subspace(G, basis)
    if args.json:
        return {"dim": len(basis), "min_I": fr(val), "approx": float(val)}
    out.append(f"min I over span (dim {len(basis)}) = {fr(val)} ~ {float(val):.6f}")


def _pairs(text, sep):
    pairs = []
    for item in text.split(","):
        a, s, b = item.strip().partition(sep)
        if not s:
            raise UsageError(f"expected items like 'a{sep}b', got {item!r}")
        try:
            pairs.append((int(a), int(b)))
        except ValueError:
            raise UsageError(f"non-integer entry in {item!r}") from None
    return pairs


def _ints(text):
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"expected integers, got {text!r}") from None


def _closed_eigenpair(m):
    # a socketless module is an eigenpair of its own graph
    return not m.socket and m.H.is_connected and eigen.is_eigenpair(m.H, m.mu, m.phi) is not None


def cmd_compose(args, out):
    modules = [compose.load_module(_read(p)) for p in args.modules]
    for k in args.negate or []:
        if not 0 <= k < len(modules):
            raise UsageError(f"--negate {k} does not name a module position")
        modules[k] = modules[k].negated()
    tech = args.technique
    if tech == "extend":
        if len(modules) != 1:
            raise UsageError("extend takes exactly one module")
        G = _graph(args)
        emb = dict(_pairs(args.embedding, ":")) if args.embedding else {v: v for v in modules[0].H.vertices}
        x = compose.extend(G, modules[0], emb)
        if args.json:
            return {"technique": tech, "mu": fr(modules[0].mu),
                    "vector": [fr(t) for t in eigen.normalize(G, x)]}
        out.append(f"eigenvector of the target graph at mu = {fr(modules[0].mu)}:")
        out.append(eigen.dump_vertex_function(eigen.normalize(G, x)).rstrip("\n"))
        return
    if tech == "join":
        if args.chosen is None:
            raise UsageError("join needs --chosen")
        edges = _pairs(args.join_edges, "-") if args.join_edges else []
        m = compose.join(modules, compose.JoinSpec(tuple(_ints(args.chosen)), tuple(edges)))
    elif tech == "paste":
        if args.chosen is None:
            raise UsageError("paste needs --chosen")
        m = compose.paste(modules, _ints(args.chosen))
    else:
        if len(modules) != 2 or not args.match:
            raise UsageError("plug takes two modules and --match")
        m = compose.plug(modules[0], modules[1], _pairs(args.match, ":"))
    vec = eigen.normalize(m.H, m.phi) if any(m.phi) else m.phi
    if args.json:
        return {"technique": tech, "mu": fr(m.mu), "n": m.H.n,
                "edges": [list(e) for e in m.H.sorted_edges],
                "core": sorted(m.core), "socket": sorted(m.socket),
                "phi": [fr(t) for t in m.phi], "normalized": [fr(t) for t in vec],
                "eigenpair": _closed_eigenpair(m)}
    out.append(compose.dump_module(m).rstrip("\n"))
    out.append(f"# normalized: {_vec_text(vec)}")


def cmd_census(args, out):
    data = census(args.max_n)
    if args.json:
        return {"orders": [{"n": n, "max_distinct": max_distinct(cls),
                            "classes": [{"edges": [list(e) for e in c.graph.sorted_edges],
                                         "spectrum": [fr(m) for m in c.spectrum]} for c in cls]}
                           for n, cls in data.items()]}
    for n, cls in data.items():
        out.append(f"order {n}: {len(cls)} connected graphs")
        for c in cls:
            edges = " ".join(f"{i}{j}" if n < 10 else f"{i}-{j}" for i, j in c.graph.sorted_edges)
            out.append(f"  [{edges or '-'}]  " + " < ".join(fr(m) for m in c.spectrum))
    for n, cls in data.items():
        out.append(f"#{n} = {max_distinct(cls)}")


def cmd_families(args, out):
    if args.family not in ("path", "cycle", "complete") or args.n is None:
        raise UsageError("families needs --family path|cycle|complete and --n")
    sigma = sorted(spectrum_closed_form(args.family, args.n))
    rows = [(mu, nodal.nu_closed_form(args.family, args.n, mu)) for mu in sigma]
    check = None
    if args.check:
        G = generate(args.family, args.n)
        check = set(spectrum(G, cap=args.cap).values) == set(sigma)
    if args.json:
        res = {"family": args.family, "n": args.n,
               "spectrum": [{"mu": fr(mu), "nu": k} for mu, k in rows]}
        if check is not None:
            res["matches_enumeration"] = check
        return res
    out.append(f"{args.family} n = {args.n}")
    for mu, k in rows:
        out.append(f"{fr(mu):>6}  nu = {k}")
    if check is not None:
        out.append("matches enumeration: " + ("yes" if check else "NO"))


# -- parser ------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--cap", type=int, default=None, help="vertex cap for exponential searches")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--graph", metavar="FILE", help="edge-list file ('-' for stdin)")
    source.add_argument("--name", choices=NAMED_GRAPHS)
    source.add_argument("--family", choices=[f for f in FAMILIES if f != "named"])
    source.add_argument("--n", type=int)

    p = argparse.ArgumentParser(prog="onelap", description="Exact 1-Laplacian spectra and Cheeger cuts.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, parents, help):
        sp = sub.add_parser(name, parents=parents, help=help)
        sp.set_defaults(func=fn)
        return sp

    add("spectrum", cmd_spectrum, [common, source], "all eigenvalues with binary supports")
    sp = add("cheeger", cmd_cheeger, [common, source], "Cheeger constant or k-way constant")
    sp.add_argument("-k", type=int)
    add("cut", cmd_cut, [common, source], "optimal Cheeger cuts")
    sp = add("nu", cmd_nu, [common, source], "maximal nodal count at mu")
    sp.add_argument("--mu", type=_rational, required=True)
    sp.add_argument("--method", choices=["supports", "exhaustive"], default="supports")
    sp = add("am", cmd_am, [common, source], "algebraic multiplicity at mu")
    sp.add_argument("--mu", type=_rational, required=True)
    sp = add("verify", cmd_verify, [common, source], "check an eigenpair")
    sp.add_argument("--mu", type=_rational, required=True)
    sp.add_argument("--vector", metavar="FILE", required=True)
    sp = add("minI", cmd_minI, [common, source], "infimum of I over a subspace")
    sp.add_argument("--basis", metavar="FILE", action="append", required=True,
                    help="one vector per line; repeat to add files")
    sp = add("compose", cmd_compose, [common, source], "assemble modules")
    sp.add_argument("--technique", choices=["extend", "join", "paste", "plug"], required=True)
    sp.add_argument("modules", nargs="+", metavar="MODULE")
    sp.add_argument("--chosen", help="socket vertex per module, e.g. '3,1'")
    sp.add_argument("--join-edges", help="module index pairs, e.g. '0-1,1-2'")
    sp.add_argument("--match", help="plug socket pairs, e.g. '3:1'")
    sp.add_argument("--embedding", help="extend map H->G, e.g. '1:1,2:2'")
    sp.add_argument("--negate", type=int, action="append", metavar="INDEX",
                    help="negate the module at this position first")
    sp = add("census", cmd_census, [common], "all connected graphs up to order max-n")
    sp.add_argument("--max-n", type=int, required=True)
    sp = add("families", cmd_families, [common], "closed-form spectra and nu")
    sp.add_argument("--family", choices=["path", "cycle", "complete"], required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--check", action="store_true", help="compare with enumeration")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = []
    try:
        res = args.func(args, out)
    except UsageError as exc:
        parser.error(str(exc))
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(res, indent=2))
    else:
        print("\n".join(out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
