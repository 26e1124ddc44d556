"""
``tridom`` command line.

Reports mix prose with machine-readable lines of the form
``#R key=value key=value``. Exit status: 0 success (and certificate
verified), 1 a property or verification failed, 2 invalid input or usage.
Every ``solve`` and ``oracle`` report carries a ``certificate=`` field that
comes from re-running an independent checker, never from the solver.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Callable

from . import gallai, generators, oracles, solvers
from .core import find_cyclic_triangle, to_mask
from .errors import BudgetExceeded, InternalContradiction, PreconditionError, ValidationError
from .io import parse_ecg, parse_mpd, serialize_ecg, serialize_mpd
from .oracles import DominationCertificate, Violation

OK, FAILED, INVALID = 0, 1, 2


class Report:
    def __init__(self, command: str, out=None):
        self.command = command
        self.out = out or sys.stdout
        self.started = time.perf_counter()
        self.fields: dict[str, object] = {"command": command}

    def say(self, text: str) -> None:
        print(text, file=self.out)

    def set(self, **fields) -> None:
        self.fields.update(fields)

    def emit(self) -> None:
        self.fields["elapsed"] = f"{time.perf_counter() - self.started:.4f}"
        self.say("#R " + " ".join(f"{k}={_fmt(v)}" for k, v in self.fields.items()))


def _fmt(value) -> str:
    if isinstance(value, (list, tuple, set, frozenset)):
        return ",".join(str(x) for x in sorted(value)) or "-"
    if value is None:
        return "none"
    return str(value)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(",", " ").split()]


def _cover_arg(text: str) -> list[list[int]]:
    return [_int_list(group) for group in text.split(";") if group.strip()]


def _status(cert) -> str:
    return "verified" if isinstance(cert, DominationCertificate) else "failed"


# ---------------------------------------------------------------------------
# gen


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "pentagon":
        text = serialize_mpd(generators.gen_pentagons(args.t))
    elif kind == "dk":
        text = serialize_mpd(generators.gen_Dk(args.k))
    elif kind == "random-mpd":
        text = serialize_mpd(
            generators.gen_random_multipartite_trianglefree(
                args.t, args.class_size, args.completeness, args.seed
            )
        )
    elif kind == "random-gallai":
        sample = generators.gen_random_gallai(args.n, args.alpha, args.colors, args.seed)
        text = f"# independence number {sample.alpha}\n" + serialize_ecg(sample.graph)
    elif kind == "random-bipartite":
        text = serialize_mpd(generators.gen_random_bipartite_tournament(args.n, args.seed))
    else:
        text = serialize_mpd(generators.gen_random_digraph(args.n, args.p, args.seed))
    _write(args.output, text)
    return OK


# ---------------------------------------------------------------------------
# oracle


def _independent_ok(D, W, transversal: bool) -> bool:
    W = list(W)
    for i, u in enumerate(W):
        for v in W[i + 1:]:
            if D.adj_mask(u) >> v & 1:
                return False
            if transversal and D.class_of[u] == D.class_of[v]:
                return False
    return True


def cmd_oracle(args) -> int:
    D = parse_mpd(_read(args.file))
    rep = Report(f"oracle.{args.kind}")
    rep.set(n=D.num_vertices, t=D.num_classes)
    verified = True
    if args.kind in ("beta", "alpha"):
        transversal = args.kind == "beta"
        W = oracles.beta_witness(D) if transversal else oracles.alpha_witness(D)
        verified = _independent_ok(D, W, transversal)
        rep.set(**{args.kind: len(W)}, witness=W)
        rep.say(f"{args.kind} = {len(W)}, witness {list(W)}")
    elif args.kind in ("k", "gamma"):
        value, cert = oracles.k_exact(D) if args.kind == "k" else oracles.gamma_exact(D)
        verified = isinstance(oracles.recheck(D, cert), DominationCertificate)
        rep.set(**{args.kind: value}, chosen=cert.chosen)
        rep.say(f"{args.kind} = {value}, chosen {list(cert.chosen)}")
    else:
        res = oracles.gamma0_exact(D)
        for side, name in ((0, "A"), (1, "B")):
            W = oracles.one_sided_domination(D, side)
            if W is not None and oracles.covers_other_side(D, side, W) is not None:
                verified = False
            rep.say(f"gamma_{name} = {_fmt(None if W is None else len(W))}, witness {_fmt(W)}")
        rep.set(gamma_A=res.gamma_a, gamma_B=res.gamma_b, gamma0=res.gamma0)
        rep.say(f"gamma0 = {_fmt(res.gamma0)}")
    rep.set(certificate="verified" if verified else "failed")
    rep.emit()
    return OK if verified else FAILED


# ---------------------------------------------------------------------------
# solve


def cmd_solve(args) -> int:
    D = parse_mpd(_read(args.file))
    rep = Report(f"solve.{args.kind}")
    rep.set(n=D.num_vertices, t=D.num_classes)
    if args.kind == "classes":
        beta = oracles.beta_exact(D)
        classes, cert = solvers.dominate_general(D, args.mode)
        if args.mode == "strict":
            bound = solvers.recursion_bound(beta)
        else:
            bound = solvers.bound_tables(max(beta, 1)).h[max(beta, 1)]
        audit = oracles.recheck(D, cert)
        rep.set(beta=beta, mode=args.mode, size=len(classes), bound=bound, chosen=classes)
        if cert.core_vertices is not None:
            rep.set(core=len(cert.core_vertices), extra_exceptional=len(solvers.extra_exceptional(D, cert)))
        rep.say(f"{len(classes)} dominating classes (bound h({beta}) = {bound}): {list(classes)}")
    else:
        alpha = oracles.alpha_exact(D)
        if args.kind == "vertices":
            chosen, cert = solvers.dominate_clique_acyclic(D)
            bound = solvers.bound_tables(max(alpha, 1)).f[max(alpha, 1)]
        elif args.kind == "alpha2":
            chosen, cert = solvers.dominate_alpha2(D)
            bound = 3
        elif args.kind == "acyclic":
            chosen, cert = solvers.dominate_acyclic_orientation(D)
            bound = alpha
        else:
            cover = _cover_arg(args.cover) if args.cover else oracles.min_clique_cover(D)
            chosen, cert = solvers.dominate_via_clique_cover(D, cover)
            bound = len(cover)
            rep.set(cover=";".join(",".join(map(str, c)) for c in cover))
        audit = oracles.check_vertex_domination(D, chosen)
        rep.set(alpha=alpha, size=len(chosen), bound=bound, chosen=chosen)
        rep.say(f"{len(chosen)} dominating vertices (bound {bound}): {sorted(chosen)}")
    ok = isinstance(audit, DominationCertificate) and rep.fields["size"] <= rep.fields["bound"]
    rep.set(certificate=_status(audit))
    rep.emit()
    return OK if ok else FAILED


# ---------------------------------------------------------------------------
# check


def cmd_check(args) -> int:
    rep = Report(f"check.{args.kind}")
    ok = True
    if args.kind in ("gallai", "largecomp"):
        G = parse_ecg(_read(args.file))
        rep.set(n=G.num_vertices, edges=len(G.color))
        if args.kind == "gallai":
            tri = gallai.check_gallai(G)
            ok = tri is None
            rep.set(rainbow=tri)
            rep.say("no rainbow triangle" if ok else f"rainbow triangle {list(tri)}")
        else:
            res = gallai.check_largecomp_bound(G)
            ok = res.holds
            rep.set(largest=res.largest, threshold=f"{res.threshold:.4f}", holds=res.holds)
            rep.say(f"largest monochromatic component {res.largest}, threshold {res.threshold:.4f}")
    else:
        D = parse_mpd(_read(args.file))
        rep.set(n=D.num_vertices, t=D.num_classes)
        if args.kind == "triangle":
            tri = find_cyclic_triangle(D)
            ok = tri is None
            rep.set(triangle=tri)
            rep.say("no cyclic triangle" if ok else f"cyclic triangle {list(tri)}")
        else:
            chosen = _int_list(args.set or "")
            if args.kind == "class-domination":
                res = oracles.check_class_domination(D, chosen)
            else:
                res = oracles.check_vertex_domination(D, chosen)
            ok = isinstance(res, DominationCertificate)
            rep.set(chosen=chosen, undominated=None if ok else res.vertex)
            rep.say("dominating" if ok else res.reason)
    rep.set(status="ok" if ok else "violated")
    rep.emit()
    return OK if ok else FAILED


# ---------------------------------------------------------------------------
# gallai cover


def cmd_gallai(args) -> int:
    G = parse_ecg(_read(args.file))
    rep = Report("gallai.cover")
    parts = gallai.cover_by_mono_components(G)
    alpha = gallai.alpha_of(G)
    limit = solvers.bound_tables(max(alpha, 1)).g[max(alpha, 1)]
    for color, vertices in parts:
        rep.say(f"color {color}: {sorted(vertices)}")
    problem = gallai.check_cover(G, parts)
    rep.set(n=G.num_vertices, alpha=alpha, parts=len(parts), bound=limit,
            certificate="verified" if problem is None else "failed")
    rep.emit()
    return OK if problem is None and len(parts) <= limit else FAILED


# ---------------------------------------------------------------------------
# bench


def _bench_cases(seeds: int) -> list[tuple[str, Callable[[], bool]]]:
    tables = solvers.bound_tables(4)

    def pentagon():
        P = generators.gen_pentagons(1)
        chosen, _ = solvers.dominate_alpha2(P)
        return oracles.alpha_exact(P) == 2 and oracles.gamma_exact(P)[0] == 3 and len(chosen) == 3

    def dk():
        return all(oracles.gamma0_exact(generators.gen_Dk(k)).gamma0 > k for k in (1, 2, 3))

    def beta_family(beta, t, size, p, check):
        def run():
            done = 0
            for seed in range(10 * seeds):
                D = generators.gen_random_multipartite_trianglefree(t, size, p, seed)
                if oracles.beta_exact(D) != beta:
                    continue
                if not check(D):
                    return False
                done += 1
                if done == seeds:
                    break
            return done > 0
        return run

    def semi():
        for seed in range(seeds):
            D = generators.gen_random_digraph(40, 0.3, seed).to_multipartite()
            U = solvers.semi_kernel(D)
            reach = to_mask(U)
            for u in U:
                reach |= D.out_mask[u]
            two = reach
            for v in range(D.num_vertices):
                if reach >> v & 1:
                    two |= D.out_mask[v]
            if two != D.all_mask:
                return False
        return True

    return [
        ("pentagon", pentagon),
        ("dk", dk),
        ("beta1", beta_family(1, 5, 3, 1.0, lambda D: len(solvers.dominate_general(D)[0]) == 1)),
        ("beta2", beta_family(2, 7, 3, 0.9, lambda D: len(solvers.dominate_beta2(D)[0]) <= 4)),
        ("beta3", beta_family(3, 9, 4, 0.92, lambda D: len(solvers.dominate_general(D)[0]) <= tables.h[3])),
        ("semi_kernel", semi),
    ]


def cmd_bench(args) -> int:
    failures = 0
    for name, case in _bench_cases(args.seeds):
        rep = Report(f"bench.{name}")
        ok = case()
        failures += not ok
        rep.set(status="ok" if ok else "failed")
        rep.emit()
    return OK if failures == 0 else FAILED


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tridom", description=__doc__.split("\n\n")[0])
    parser.add_argument("--threads", type=int, default=1,
                        help="worker threads for oracle searches (searches currently run sequentially)")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an instance")
    gsub = gen.add_subparsers(dest="kind", required=True)
    g = gsub.add_parser("pentagon")
    g.add_argument("--t", type=int, default=1)
    g = gsub.add_parser("dk")
    g.add_argument("--k", type=int, required=True)
    g = gsub.add_parser("random-mpd")
    g.add_argument("--t", type=int, required=True)
    g.add_argument("--class-size", type=int, default=2)
    g.add_argument("--completeness", type=float, default=0.9)
    g.add_argument("--seed", type=int, default=0)
    g = gsub.add_parser("random-gallai")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--alpha", type=int, default=2)
    g.add_argument("--colors", type=int, default=3)
    g.add_argument("--seed", type=int, default=0)
    g = gsub.add_parser("random-bipartite")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g = gsub.add_parser("random-digraph")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--p", type=float, default=0.3)
    g.add_argument("--seed", type=int, default=0)
    for p in gsub.choices.values():
        p.add_argument("-o", "--output", default="-")
    gen.set_defaults(func=cmd_gen)

    orc = sub.add_parser("oracle", help="exact parameter of an mpd instance")
    orc.add_argument("kind", choices=["beta", "alpha", "k", "gamma", "gamma0"])
    orc.add_argument("file")
    orc.set_defaults(func=cmd_oracle)

    sol = sub.add_parser("solve", help="run a constructive solver")
    sol.add_argument("kind", choices=["classes", "vertices", "alpha2", "acyclic", "clique-cover"])
    sol.add_argument("file")
    sol.add_argument("--mode", choices=["dispatch", "strict"], default="dispatch")
    sol.add_argument("--cover", help="cliques as '0 1;2 3;4' (default: a minimum cover by search)")
    sol.set_defaults(func=cmd_solve)

    chk = sub.add_parser("check", help="check a property")
    chk.add_argument("kind", choices=["triangle", "gallai", "class-domination", "vertex-domination", "largecomp"])
    chk.add_argument("file")
    chk.add_argument("--set", help="class or vertex ids, comma or space separated")
    chk.set_defaults(func=cmd_check)

    gal = sub.add_parser("gallai", help="Gallai-colouring tools")
    gal.add_argument("action", choices=["cover"])
    gal.add_argument("file")
    gal.set_defaults(func=cmd_gallai)

    ben = sub.add_parser("bench", help="timed self-check suite")
    ben.add_argument("suite", choices=["suite"])
    ben.add_argument("--seeds", type=int, default=5)
    ben.set_defaults(func=cmd_bench)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, PreconditionError, BudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"#R command={args.command} status=invalid error={type(exc).__name__}")
        return INVALID
    except InternalContradiction as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        print(f"#R command={args.command} status=failed error=InternalContradiction")
        return FAILED


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
