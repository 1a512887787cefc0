"""Command-line front end; every subcommand prints one canonical JSON document."""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import random
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

from . import __version__
from .algebra import (AlgebraElement, Flavor, apply_epsilon, check_central,
                      check_presentation, decompose_on, one)
from .annular import enumerate_annular, involution_to_json
from .diagram import (Diagram, compose, diagram_to_json, epsilon_sign, generator_e,
                      generator_u)
from .expr import ExprEvalError, ExprSyntaxError, evaluate
from .scalars import Ring

log = logging.getLogger("affinetl")

CACHE_ENV = "AFFINETL_CACHE"
# flags that change presentation only, never the result
_PRESENTATION = {"pretty", "out", "cache", "func", "command", "max_n"}


class UsageError(ValueError):
    pass


def _alpha(text: str | None):
    if text is None or text == "symbolic":
        return None
    try:
        a = Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise UsageError(f"bad alpha {text!r}; use P/Q or 'symbolic'") from err
    if a == 0:
        raise UsageError("alpha must be nonzero")
    return a


def _rational_alpha(text: str | None) -> Fraction:
    a = _alpha(text)
    if a is None:
        raise UsageError("this subcommand needs a rational --alpha")
    return a


def _ring(text: str) -> Ring:
    try:
        return Ring.parse(text)
    except ValueError as err:
        raise UsageError(str(err)) from err


# ---------------------------------------------------------------------------
# subcommands: each returns (payload, ok)

def cmd_normalize(a):
    x = evaluate(a.expr, a.n, _ring(a.ring))
    return x.to_json(), True


def cmd_mul(a):
    ring = _ring(a.ring)
    x = evaluate(a.lhs, a.n, ring) * evaluate(a.rhs, a.n, ring)
    return x.to_json(), True


def cmd_relcheck(a):
    rep = check_presentation(a.n)
    central = check_central(a.n)
    return {"n": a.n, "presentation": rep.to_json(), "central": central,
            "ok": rep.ok and central}, rep.ok and central


def cmd_enumerate(a):
    if a.t < 0 or a.t > a.n or (a.n - a.t) % 2:
        rows = []
    else:
        rows = enumerate_annular(a.n, a.t)
    return {"n": a.n, "t": a.t, "count": len(rows),
            "involutions": [involution_to_json(S) for S in rows]}, True


def cmd_jones_basis(a):
    from .cells.jones import jones_basis, strata
    basis = jones_basis(a.n)
    out = []
    for tau in reversed(strata(a.n)):
        part = [D for D in basis if D.t == tau]
        out.append({"tau": tau, "window": tau if a.n % 2 else tau // 2,
                    "involutions": len(enumerate_annular(a.n, tau)),
                    "count": len(part),
                    "basis": [diagram_to_json(D) for D in part]})
    return {"n": a.n, "parity": "odd" if a.n % 2 else "even",
            "total": len(basis), "strata": out}, True


def cmd_cellcheck(a):
    from .cells.datum import verify_cellularity
    rep = verify_cellularity(a.n, _rational_alpha(a.alpha), max_n=a.max_n, base=a.base)
    return rep.to_json(), rep.ok


def cmd_repmat(a):
    from .cells.modules import CellModule, check_module_relations
    try:
        mod = CellModule(a.n, a.tau, Flavor(a.flavor), _alpha(a.alpha))
    except ValueError as err:
        raise UsageError(str(err)) from err
    out = mod.to_json()
    rep = check_module_relations(mod)
    out["relations_ok"] = rep.ok
    return out, rep.ok


def cmd_gram(a):
    from .cells.gram import gram_matrix
    try:
        g = gram_matrix(a.n, a.tau, _alpha(a.alpha), check_aux=a.check_aux)
    except ValueError as err:
        raise UsageError(str(err)) from err
    return g.to_json(), True


def cmd_simples(a):
    from .cells.classify import classify_simples
    try:
        return classify_simples(a.n, Flavor(a.flavor)), True
    except ValueError as err:
        raise UsageError(str(err)) from err


def _random_diagram(rng: random.Random, n: int) -> Diagram:
    word = [generator_e(n, rng.randint(1, n)) if rng.random() < 0.7
            else generator_u(n, rng.choice((-1, 1))) for _ in range(rng.randint(1, 6))]
    x = one(n)
    for D in word:
        x = x * AlgebraElement.from_diagram(D)
    (D, _), = x.terms.items()
    return D


def cmd_propcheck(a):
    """Randomized parity/epsilon checks; reproducible under ``--seed``."""
    rng = random.Random(a.seed)
    n = a.n
    fails = {"parity": 0, "epsilon": 0, "decompose": 0}
    for _ in range(a.samples):
        A, B = _random_diagram(rng, n), _random_diagram(rng, n)
        _, C = compose(A, B)
        if epsilon_sign(C) != epsilon_sign(A) * epsilon_sign(B):
            fails["parity"] += 1
        x, y = AlgebraElement.from_diagram(A), AlgebraElement.from_diagram(B)
        if apply_epsilon(x * y) != apply_epsilon(x) * apply_epsilon(y):
            fails["epsilon"] += 1
        s = x + y
        p, q = decompose_on(s)
        if p + AlgebraElement.from_diagram(generator_u(n, 1)) * q != s:
            fails["decompose"] += 1
    ok = not any(fails.values())
    return {"n": n, "seed": a.seed, "samples": a.samples, "failures": fails, "ok": ok}, ok


COMMANDS = {
    "normalize": cmd_normalize, "mul": cmd_mul, "relcheck": cmd_relcheck,
    "enumerate": cmd_enumerate, "jones-basis": cmd_jones_basis,
    "cellcheck": cmd_cellcheck, "repmat": cmd_repmat, "gram": cmd_gram,
    "simples": cmd_simples, "propcheck": cmd_propcheck,
}


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false",
                     help="compact canonical JSON (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="indented JSON")
    common.set_defaults(pretty=False)
    common.add_argument("--out", help="also write the output to FILE")
    common.add_argument("--cache", help=f"cache directory (default: ${CACHE_ENV})")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--max-n", type=int, default=8, help="refuse ranks above this")

    p = argparse.ArgumentParser(prog="affinetl", description=__doc__)
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("--n", type=int, required=True, help="rank")
        return sp

    sp = add("normalize", "evaluate an expression to normal form")
    sp.add_argument("--expr", required=True)
    sp.add_argument("--ring", default="ZZ[v]")
    sp = add("mul", "multiply two expressions")
    sp.add_argument("--lhs", required=True)
    sp.add_argument("--rhs", required=True)
    sp.add_argument("--ring", default="ZZ[v]")
    add("relcheck", "check the defining relations and centrality of u^n")
    sp = add("enumerate", "list annular involutions with t fixed points")
    sp.add_argument("--t", type=int, required=True)
    add("jones-basis", "stratified root-position basis of the q-Jones algebra")
    sp = add("cellcheck", "verify the cellular axioms at rational alpha")
    sp.add_argument("--alpha", default="2")
    sp.add_argument("--base", choices=("additive", "window"), default="additive",
                    help="base winding of the even-rank datum")
    for name, help_ in (("repmat", "cell-module generator matrices"),
                        ("gram", "Gram matrix and its rank")):
        sp = add(name, help_)
        sp.add_argument("--tau", type=int, required=True)
        sp.add_argument("--alpha", default="symbolic")
        if name == "repmat":
            sp.add_argument("--flavor", choices=[f.value for f in Flavor], default="dn")
        else:
            sp.add_argument("--check-aux", action="store_true",
                            help="re-extract with every auxiliary pair")
    sp = add("simples", "classification table of simple modules")
    sp.add_argument("--flavor", choices=[f.value for f in Flavor], required=True)
    sp = add("propcheck", "randomized parity and epsilon checks")
    sp.add_argument("--samples", type=int, default=200)
    return p


def render(payload, pretty: bool) -> str:
    if pretty:
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def cache_key(args: argparse.Namespace) -> str:
    material = {k: v for k, v in sorted(vars(args).items()) if k not in _PRESENTATION}
    if args.command != "propcheck":
        material.pop("seed", None)
    blob = json.dumps({"command": args.command, "args": material, "version": __version__},
                      sort_keys=True, default=str)
    return hashlib.sha256(blob.encode()).hexdigest()


def _cache_read(path: Path):
    try:
        text = path.read_text(encoding="utf-8")
        obj = json.loads(text)
        if not isinstance(obj, dict) or set(obj) != {"ok", "result"}:
            raise ValueError("unexpected cache layout")
        return obj["result"], bool(obj["ok"])
    except FileNotFoundError:
        return None
    except (ValueError, OSError) as err:
        log.warning("ignoring corrupt cache entry %s (%s); recomputing", path.name, err)
        return None


def _atomic_write(path: Path, data: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def run(args: argparse.Namespace) -> tuple[object, bool]:
    cache_dir = args.cache or os.environ.get(CACHE_ENV)
    path = Path(cache_dir) / f"{cache_key(args)}.json" if cache_dir else None
    if path is not None:
        hit = _cache_read(path)
        if hit is not None:
            return hit
    payload, ok = COMMANDS[args.command](args)
    if path is not None:
        _atomic_write(path, render({"ok": ok, "result": payload}, False))
    return payload, ok


def main(argv=None) -> int:
    logging.basicConfig(format="affinetl: %(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.n > args.max_n:
        print(f"affinetl: error: n={args.n} exceeds --max-n {args.max_n}", file=sys.stderr)
        return 2
    try:
        payload, ok = run(args)
    except (UsageError, ExprSyntaxError, ExprEvalError, ValueError) as err:
        print(f"affinetl: error: {err}", file=sys.stderr)
        return 2
    text = render(payload, args.pretty)
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
