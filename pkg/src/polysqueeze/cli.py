"""Command-line surface: domain-spec ingestion, CSV emission, verification runner.

Exit codes are a stable contract: 0 success, 2 usage or parse error,
3 domain violation (a point outside its domain), 4 verification failure.
CSV output uses '.' decimals, 17 significant digits (lossless for doubles)
and always emits a header row.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import re
import sys
from contextlib import contextmanager

from .domains import Annulus, BallFactor, ProductDomain, PuncturedDisk, UnitDisk, factor_dim
from .embeddings import Inclusion, MapExpr, ProductMap, Reflection
from .errors import DomainError, SqueezeError, UnsupportedGeometryError
from .hyperbolic import MobiusAut
from .search import FamilySpec, SearchOptions, search_lower_bound
from .squeezing import (
    BoundsOptions,
    annulus_clearance_bound,
    boundary_limit_profile,
    default_limit_path,
    exact_squeeze,
    single_annulus_index,
    squeeze_bounds,
)
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_VERIFY = 4

DEFAULT_SAMPLES = 4096


class UsageError(SqueezeError):
    """Malformed input file, point string or flag combination."""


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _default_samples() -> int:
    raw = os.environ.get("SQUEEZE_SAMPLES")
    if raw is None:
        return DEFAULT_SAMPLES
    try:
        return int(raw)
    except ValueError as e:
        raise UsageError(f"SQUEEZE_SAMPLES must be an integer, got {raw!r}") from e


# ---------------------------------------------------------------- spec files

def load_domain_spec(path: str) -> ProductDomain:
    """Parse a JSON domain-spec file into a ProductDomain.

    Schema: {"factors": [{"kind": "disk"} | {"kind": "punctured_disk",
    "punctures": [[re, im], ...]} | {"kind": "annulus", "r": x} |
    {"kind": "ball", "n": k}, ...]}.
    """
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as e:
        raise UsageError(f"cannot read spec file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise UsageError(f"{path}: invalid JSON: {e}") from e
    if not isinstance(data, dict) or "factors" not in data:
        raise UsageError(f"{path}: top level must be an object with a 'factors' list")
    raw = data["factors"]
    if not isinstance(raw, list) or not raw:
        raise UsageError(f"{path}: 'factors' must be a nonempty list")
    factors = []
    for i, item in enumerate(raw):
        where = f"{path}: factors[{i}]"
        if not isinstance(item, dict) or "kind" not in item:
            raise UsageError(f"{where}: each factor needs a 'kind'")
        kind = item["kind"]
        try:
            if kind == "disk":
                factors.append(UnitDisk())
            elif kind == "punctured_disk":
                ps = item.get("punctures")
                if not isinstance(ps, list) or not ps:
                    raise UsageError(f"{where}.punctures: need a nonempty list of [re, im] pairs")
                pts = []
                for j, p in enumerate(ps):
                    if not (isinstance(p, list) and len(p) == 2):
                        raise UsageError(f"{where}.punctures[{j}]: expected [re, im]")
                    pts.append(complex(float(p[0]), float(p[1])))
                factors.append(PuncturedDisk(tuple(pts)))
            elif kind == "annulus":
                if "r" not in item:
                    raise UsageError(f"{where}.r: missing inner radius")
                factors.append(Annulus(float(item["r"])))
            elif kind == "ball":
                if "n" not in item:
                    raise UsageError(f"{where}.n: missing dimension")
                factors.append(BallFactor(int(item["n"])))
            else:
                raise UsageError(f"{where}.kind: unknown kind {kind!r}")
        except DomainError as e:
            raise UsageError(f"{where}: {e}") from e
    return ProductDomain(tuple(factors))


def parse_point(text: str, domain: ProductDomain):
    """Parse 're,im;re,im;...' into a validated point; ball factors consume n pairs."""
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise UsageError(f"empty coordinate in point string {text!r}")
        parts = chunk.split(",")
        if len(parts) > 2:
            raise UsageError(f"coordinate {chunk!r} is not 're' or 're,im'")
        try:
            re_part = float(parts[0])
            im_part = float(parts[1]) if len(parts) == 2 else 0.0
        except ValueError as e:
            raise UsageError(f"coordinate {chunk!r}: {e}") from e
        pairs.append(complex(re_part, im_part))
    if len(pairs) != domain.dim:
        raise UsageError(
            f"point has {len(pairs)} coordinates, domain has complex dimension {domain.dim}"
        )
    coords = []
    k = 0
    for f in domain.factors:
        n = factor_dim(f)
        coords.append(tuple(pairs[k:k + n]) if isinstance(f, BallFactor) else pairs[k])
        k += n
    return domain.point(coords)


# ------------------------------------------------------------- witness format

def format_map_expr(e: MapExpr) -> str:
    out = []
    for step in e.steps:
        if isinstance(step, MobiusAut):
            out.append(f"mobius({_fmt(step.a.real)},{_fmt(step.a.imag)},{_fmt(step.theta)})")
        elif isinstance(step, Reflection):
            out.append(f"reflect({_fmt(step.r)})")
        elif isinstance(step, Inclusion):
            out.append("include")
        else:
            raise SqueezeError(f"unknown primitive {type(step).__name__}")
    return "|".join(out)


def format_product_map(pm: ProductMap) -> str:
    return ";".join(format_map_expr(e) for e in pm.components)


_STEP_RE = re.compile(r"^(mobius|reflect)\(([^)]*)\)$")


def parse_map_expr(text: str) -> MapExpr:
    steps = []
    for token in text.split("|"):
        token = token.strip()
        if token == "include":
            steps.append(Inclusion())
            continue
        m = _STEP_RE.match(token)
        if m is None:
            raise UsageError(f"cannot parse map step {token!r}")
        args = [float(v) for v in m.group(2).split(",")]
        if m.group(1) == "mobius":
            if len(args) != 3:
                raise UsageError(f"mobius step needs 3 numbers, got {token!r}")
            steps.append(MobiusAut(complex(args[0], args[1]), args[2]))
        else:
            if len(args) != 1:
                raise UsageError(f"reflect step needs 1 number, got {token!r}")
            steps.append(Reflection(args[0]))
    return MapExpr(tuple(steps))


def parse_product_map(text: str) -> ProductMap:
    return ProductMap(tuple(parse_map_expr(part) for part in text.split(";")))


# ------------------------------------------------------------------ commands

@contextmanager
def _open_out(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _writer(out):
    return csv.writer(out, lineterminator="\n")


def cmd_eval(args, out) -> int:
    domain = load_domain_spec(args.spec)
    z = parse_point(args.point, domain)
    search_opts = SearchOptions(samples=args.samples)
    family = FamilySpec.named(domain, args.family) if args.family else None
    rep = squeeze_bounds(
        domain, z,
        BoundsOptions(search=not args.no_search, family=family, search_options=search_opts),
    )
    w = _writer(out)
    w.writerow(["lower", "upper", "exact", "methods", "witness"])
    w.writerow([
        _fmt(rep.lower),
        _fmt(rep.upper),
        _fmt(rep.exact) if rep.exact is not None else "",
        ";".join(rep.methods),
        format_product_map(rep.witnesses[0]) if rep.witnesses else "",
    ])
    return EXIT_OK


def cmd_profile(args, out) -> int:
    domain = load_domain_spec(args.spec)
    base = parse_point(args.point, domain)
    if not (0 <= args.axis < domain.arity):
        raise UsageError(f"axis {args.axis} out of range for {domain.arity} factors")
    if isinstance(domain.factors[args.axis], BallFactor):
        raise UsageError("profiles sweep planar factors only")
    try:
        lo, hi = (float(v) for v in args.range.split(":"))
    except ValueError as e:
        raise UsageError(f"range must be 'lo:hi', got {args.range!r}") from e
    if args.steps < 1:
        raise UsageError("steps must be positive")
    params = [lo] if args.steps == 1 else [
        lo + k * (hi - lo) / (args.steps - 1) for k in range(args.steps)
    ]
    c0 = base.planar(args.axis)
    direction = c0 / abs(c0) if c0 != 0 else complex(1.0)
    ann = single_annulus_index(domain)
    w = _writer(out)
    w.writerow(["param", "lower", "upper", "exact", "clearance_lower"])
    for param in params:
        coords = list(base.coords)
        coords[args.axis] = param * direction
        z = domain.point(coords)
        rep = squeeze_bounds(domain, z, BoundsOptions(search=False))
        clearance = ""
        if ann is not None:
            clearance = _fmt(annulus_clearance_bound(domain.factors[ann].r, z.planar(ann)))
        w.writerow([
            _fmt(param),
            _fmt(rep.lower),
            _fmt(rep.upper),
            _fmt(rep.exact) if rep.exact is not None else "",
            clearance,
        ])
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        checks = run_suite(args.suite, seed=args.seed)
    except KeyError:
        raise UsageError(
            f"unknown suite {args.suite!r}; known: {', '.join(sorted(SUITES))}, all"
        ) from None
    w = _writer(out)
    w.writerow(["status", "check", "detail"])
    for c in checks:
        w.writerow(["PASS" if c.passed else "FAIL", c.name, c.detail])
    passed = sum(c.passed for c in checks)
    out.write(f"# {passed}/{len(checks)} checks passed\n")
    return EXIT_OK if passed == len(checks) else EXIT_VERIFY


def cmd_limit(args, out) -> int:
    if not (0.0 < args.r < 1.0) or not math.isfinite(args.r):
        raise UsageError(f"inner radius must lie in (0, 1), got {args.r}")
    if args.side not in ("outer", "inner"):
        raise UsageError(f"side must be 'outer' or 'inner', got {args.side!r}")
    if args.steps < 1:
        raise UsageError("steps must be positive")
    path = default_limit_path(args.r, args.side, args.steps)
    profile = boundary_limit_profile(args.r, path, include_exact=False)
    w = _writer(out)
    w.writerow(["param", "bound"])
    for param, bound in profile.entries:
        w.writerow([_fmt(param), _fmt(bound)])
    return EXIT_OK


def cmd_search(args, out) -> int:
    if args.budget <= 0:
        raise UsageError(f"search budget must be positive, got {args.budget}")
    domain = load_domain_spec(args.spec)
    z = parse_point(args.point, domain)
    family = FamilySpec.named(domain, args.family)
    seeds = max(2, min(64, args.budget // 2))
    iters = max(0, args.budget - seeds)
    sr = search_lower_bound(
        domain, z, family, SearchOptions(seeds=seeds, iters=iters, samples=args.samples)
    )
    exact = None
    try:
        exact = exact_squeeze(domain, z).exact
    except UnsupportedGeometryError:
        pass
    w = _writer(out)
    w.writerow(["value", "evaluations", "converged", "exact", "gap", "witness"])
    w.writerow([
        _fmt(sr.value),
        str(sr.evaluations),
        str(sr.converged).lower(),
        _fmt(exact) if exact is not None else "",
        _fmt(exact - sr.value) if exact is not None else "",
        format_product_map(sr.witness),
    ])
    return EXIT_OK


# -------------------------------------------------------------------- driver

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="polysqueeze",
        description="Squeezing values of product domains relative to the polydisk.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, spec=False, point=False):
        if spec:
            sp.add_argument("--spec", required=True, help="domain spec JSON file")
        if point:
            sp.add_argument("--point", required=True, help="point as 're,im;re,im;...'")
        sp.add_argument("--out", default=None, help="output path (default: stdout)")
        sp.add_argument("--samples", type=int, default=_default_samples(),
                        help="boundary samples per circle (env SQUEEZE_SAMPLES overrides default)")
        sp.add_argument("--seed", type=int, default=0, help="seed for randomized suites")

    sp = sub.add_parser("eval", help="bounds and exact value at one point")
    add_common(sp, spec=True, point=True)
    sp.add_argument("--family", default=None, choices=["auto", "inclusion", "reflection"])
    sp.add_argument("--no-search", action="store_true", help="skip the witness-family search")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("profile", help="sweep one coordinate modulus, CSV table")
    add_common(sp, spec=True, point=True)
    sp.add_argument("--axis", type=int, default=0, help="factor index to sweep")
    sp.add_argument("--range", required=True, help="modulus range 'lo:hi'")
    sp.add_argument("--steps", type=int, default=256)
    sp.set_defaults(func=cmd_profile)

    sp = sub.add_parser("verify", help="run a verification suite")
    add_common(sp)
    sp.add_argument("--suite", default="all",
                    help=f"suite name: {', '.join(sorted(SUITES))}, or all")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("limit", help="boundary-limit profile for an annulus product")
    add_common(sp)
    sp.add_argument("--r", type=float, required=True, help="annulus inner radius")
    sp.add_argument("--side", default="outer", help="'outer' or 'inner'")
    sp.add_argument("--steps", type=int, default=256)
    sp.set_defaults(func=cmd_limit)

    sp = sub.add_parser("search", help="witness-family lower bound at one point")
    add_common(sp, spec=True, point=True)
    sp.add_argument("--family", default="auto", choices=["auto", "inclusion", "reflection"])
    sp.add_argument("--budget", type=int, default=124,
                    help="objective evaluations per 1-D search")
    sp.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    try:
        parser = build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return EXIT_USAGE if e.code else EXIT_OK
        if getattr(args, "samples", None) is not None and args.samples < 8:
            raise UsageError(f"--samples must be at least 8, got {args.samples}")
        with _open_out(args.out) as out:
            return args.func(args, out)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, UnsupportedGeometryError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
