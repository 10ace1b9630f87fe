"""Command-line surface: homology pipelines, pairings, products, verification.

Operand files are JSON.  A chain operand is

    {"space": "delta:1", "degree": 1,
     "terms": [{"simplex": [1, "0.1"], "exps": [0], "wedge": [1],
                "coeff": "1/1"}]}

where ``space`` is a builder expression (``delta:n | boundary:n | sphere:k
| product:(a,b) | quotient:(a,sub) | file:path``), ``simplex`` is the
``[dimension, id]`` reference of a nondegenerate simplex, ``exps`` the
monomial exponents in the simplex coordinates ``t_1..t_n``, and ``wedge``
the strictly increasing dual-wedge index subset.  A form operand gives a
polynomial form on every nondegenerate simplex:

    {"space": "delta:1", "degree": 1,
     "values": [{"simplex": [1, "0.1"],
                 "terms": [{"exps": [0], "wedge": [1], "coeff": "1/1"}]}]}

with ``wedge`` now indexing ``ds`` factors.  Simplices omitted from
``values`` carry the zero form.  All rationals are ``"p/q"`` strings;
floats never appear in any input or output.  Reports are emitted with
sorted keys so byte-identical runs are reproducible for a fixed seed.
"""

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction as Q

from .rationals import qstr, qparse
from .polyforms import FormElt
from .phiglobal import (PhiChain, CochainForm, global_pair, validate_cochain,
                        homology_report)
from .monoidal import mu_phi
from .sset import build, product
from .verify import REGISTRY, run_suite, DEFAULT_SEED


@dataclass
class RunConfig:
    command: str
    space: str = ""
    D: int = 3
    degrees: str = ""
    suites: tuple = ()
    cases: int = 0
    seed: int = DEFAULT_SEED
    out: str = ""
    chain: str = ""
    form: str = ""
    left: str = ""
    right: str = ""
    threads: int = field(default_factory=lambda: max(
        1, int(os.environ.get("SIMPLICIAL_DERHAM_THREADS", "1"))))


def _emit(report, config):
    text = json.dumps(report, indent=2, sort_keys=True)
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(text + "\n")
    print(text)


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def _parse_chain(doc, X=None):
    if X is None:
        X = build(doc["space"])
    d = int(doc["degree"])
    terms = {}
    for t in doc["terms"]:
        dim, cid = t["simplex"]
        key = ((int(dim), str(cid)), (tuple(int(e) for e in t["exps"]),
                                      tuple(int(i) for i in t["wedge"])))
        terms[key] = terms.get(key, Q(0)) + qparse(t["coeff"])
    return doc["space"], PhiChain(X, d, {k: c for k, c in terms.items() if c})


def _parse_form(doc, X=None):
    if X is None:
        X = build(doc["space"])
    d = int(doc["degree"])
    values = {}
    for v in doc["values"]:
        dim, cid = v["simplex"]
        ref = (int(dim), str(cid))
        n = ref[0]
        elt = values.get(ref, FormElt.zero(n))
        for t in v["terms"]:
            elt = elt + FormElt.monomial(n, tuple(int(e) for e in t["exps"]),
                                         tuple(int(i) for i in t["wedge"]),
                                         qparse(t["coeff"]))
        values[ref] = elt
    return doc["space"], CochainForm(X, d, values)


def _chain_terms_jsonable(chain):
    out = []
    for (ref, (e, S)), q in chain.sorted_terms():
        out.append({"simplex": [ref[0], ref[1]], "exps": list(e),
                    "wedge": list(S), "coeff": qstr(q)})
    return out


def _degree_slice(spec_str, dims):
    if not spec_str:
        return dims
    lo, _, hi = spec_str.partition(":")
    lo = int(lo) if lo else 0
    hi = int(hi) if hi else len(dims) - 1
    return dims[lo:hi + 1]


def cmd_homology(config):
    try:
        rep = homology_report(build(config.space), config.D, name=config.space)
    except RuntimeError as err:
        return {"complex": config.space, "D": config.D, "error": str(err),
                "matches_N": False}, 1
    if config.degrees:
        rep["dims_GD"] = _degree_slice(config.degrees, rep["dims_GD"])
        rep["stable_image_dims"] = _degree_slice(config.degrees,
                                                 rep["stable_image_dims"])
    return rep, 0 if rep["matches_N"] else 1


def _run_suites(config):
    names = list(config.suites)
    kwargs = {"seed": config.seed}
    if config.cases:
        kwargs["cases"] = config.cases
    if config.threads > 1 and len(names) > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            return list(pool.map(lambda n: run_suite(n, **kwargs), names))
    return [run_suite(n, **kwargs) for n in names]


def cmd_verify(config):
    reports = _run_suites(config)
    ok = all(r["pass"] for r in reports)
    body = {"command": "verify", "seed": config.seed, "pass": ok,
            "suites": reports}
    return body, 0 if ok else 1


def cmd_pair(config):
    cdoc = _load_json(config.chain)
    fdoc = _load_json(config.form)
    if cdoc["space"] != fdoc["space"]:
        raise SystemExit("operands live on different spaces: %r vs %r"
                         % (cdoc["space"], fdoc["space"]))
    X = build(cdoc["space"])
    cspace, chain = _parse_chain(cdoc, X)
    _, form = _parse_form(fdoc, X)
    violation = validate_cochain(form)
    value = global_pair(chain, form)
    rep = {"command": "pair", "space": cspace, "chain_degree": chain.d,
           "form_degree": form.d, "value": qstr(value),
           "cochain_valid": violation is None}
    if violation is not None:
        rep["cochain_violation"] = {"simplex": list(violation[0]),
                                    "face": violation[1]}
    return rep, 0


def cmd_product(config):
    lspace, left = _parse_chain(_load_json(config.left))
    rspace, right = _parse_chain(_load_json(config.right))
    P = product(left.X, right.X)
    out = mu_phi(P, left, right)
    rep = {"command": "product",
           "space": "product:(%s,%s)" % (lspace, rspace),
           "degree": out.d, "terms": _chain_terms_jsonable(out)}
    return rep, 0


def cmd_bench(config):
    rows = []
    ok = True
    for name in config.suites:
        t0 = time.perf_counter()
        rep = run_suite(name, seed=config.seed)
        ms = int(round((time.perf_counter() - t0) * 1000))
        ok = ok and rep["pass"]
        rows.append({"suite": name, "pass": rep["pass"], "cases": rep["cases"],
                     "elapsed_ms": ms})
    return {"command": "bench", "seed": config.seed, "pass": ok,
            "suites": rows}, 0 if ok else 1


def _build_parser():
    p = argparse.ArgumentParser(
        prog="simplicial-derham",
        description="Exact rational de Rham chains on finite simplicial sets.")
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("homology", help="stabilized dual-form homology vs "
                                        "simplicial homology")
    h.add_argument("--space", required=True, help="builder expression")
    h.add_argument("--D", type=int, default=3, help="weight truncation bound")
    h.add_argument("--degrees", default="", help="optional a:b degree slice")
    h.add_argument("--out", default="")

    v = sub.add_parser("verify", help="run named identity suites")
    v.add_argument("--suite", action="append", required=True,
                   help="suite name or 'all' (repeatable)")
    v.add_argument("--cases", type=int, default=0)
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--out", default="")

    pr = sub.add_parser("pair", help="pair a chain operand against a form "
                                     "operand")
    pr.add_argument("--chain", required=True)
    pr.add_argument("--form", required=True)
    pr.add_argument("--out", default="")

    pd = sub.add_parser("product", help="product of two chain operands on "
                                        "the product space")
    pd.add_argument("--left", required=True)
    pd.add_argument("--right", required=True)
    pd.add_argument("--out", default="")

    b = sub.add_parser("bench", help="time the verification suites")
    b.add_argument("--suite", action="append", default=None,
                   help="suite names (default: all)")
    b.add_argument("--seed", type=int, default=DEFAULT_SEED)
    b.add_argument("--out", default="")
    return p


def _expand_suites(names):
    if names is None:
        return tuple(sorted(REGISTRY))
    out = []
    for n in names:
        if n == "all":
            out.extend(sorted(REGISTRY))
        else:
            out.append(n)
    for n in out:
        if n not in REGISTRY:
            raise SystemExit("unknown suite %r; known: %s"
                             % (n, ", ".join(sorted(REGISTRY))))
    return tuple(out)


def main(argv=None):
    args = _build_parser().parse_args(argv)
    cfg = RunConfig(command=args.command, out=getattr(args, "out", ""))
    try:
        if args.command == "homology":
            cfg.space, cfg.D, cfg.degrees = args.space, args.D, args.degrees
            rep, code = cmd_homology(cfg)
        elif args.command == "verify":
            cfg.suites = _expand_suites(args.suite)
            cfg.cases, cfg.seed = args.cases, args.seed
            rep, code = cmd_verify(cfg)
        elif args.command == "pair":
            cfg.chain, cfg.form = args.chain, args.form
            rep, code = cmd_pair(cfg)
        elif args.command == "product":
            cfg.left, cfg.right = args.left, args.right
            rep, code = cmd_product(cfg)
        else:
            cfg.suites = _expand_suites(args.suite)
            cfg.seed = args.seed
            rep, code = cmd_bench(cfg)
    except (ValueError, OSError, KeyError) as exc:
        # bad operands and bad expressions get a message, not a traceback
        raise SystemExit("%s: %s" % (args.command, exc))
    _emit(rep, cfg)
    return code


if __name__ == "__main__":
    sys.exit(main())
