"""Command-line interface: compute Chern-class coefficient polynomials,
Stirling coefficients of rising products, orbit enumerations and enumerative
invariants, with JSON/text rendering and a persistent interpolation cache.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
import tempfile
from fractions import Fraction

from . import chern, enumgeo, orbits, rising
from .exactcore import TruncationPolicy, UniPoly, rat_to_str

CACHE_ENV = "CHERNPOL_CACHE_DIR"

EXIT_USAGE = 2
EXIT_DOMAIN = 3

BASIS_NAMES = {"m": "monomial", "e": "elementary", "s": "schur",
               "monomial": "monomial", "elementary": "elementary",
               "schur": "schur", "power": "power", "p": "power"}

DOMAIN_ERRORS = (chern.OutOfDomainError, rising.OutOfDomainError,
                 enumgeo.EmptyFanoError, enumgeo.UnsupportedDegreeError,
                 enumgeo.UnsupportedMethodError)


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# cache
# ---------------------------------------------------------------------------

def default_cache_dir() -> str:
    env = os.environ.get(CACHE_ENV)
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "chernpol")


def _cache_path(cache_dir: str, n: int, k: int) -> str:
    return os.path.join(cache_dir, f"chern_n{n}_k{k}.json")


def _checksum(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()


def cache_get_or_compute(n: int, k: int, cache_dir: str | None = None,
                         no_cache: bool = False) -> chern.ChernPolynomial:
    """Monomial-basis ChernPolynomial for (n, k), through the JSON cache.

    Corrupt or stale files are recomputed and overwritten (with a warning);
    writes are atomic (write-temp-then-rename).
    """
    if no_cache:
        return chern.chern_interpolated(n, k, "monomial")
    cache_dir = cache_dir or default_cache_dir()
    path = _cache_path(cache_dir, n, k)
    if os.path.exists(path):
        try:
            with open(path) as fh:
                doc = json.load(fh)
            payload = doc["payload"]
            if doc.get("checksum") != _checksum(payload):
                raise ValueError("checksum mismatch")
            return chern.ChernPolynomial.from_json(payload)
        except (ValueError, KeyError, json.JSONDecodeError) as exc:
            print(f"warning: recomputing corrupt/stale cache entry {path}: {exc}",
                  file=sys.stderr)
    result = chern.chern_interpolated(n, k, "monomial")
    payload = result.to_json()
    doc = {"checksum": _checksum(payload), "payload": payload}
    os.makedirs(cache_dir, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return result


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _divisors(n: int) -> list:
    n = abs(n)
    return [i for i in range(1, n + 1) if n % i == 0]


def _rational_root(p: UniPoly):
    """Some rational root of p (nonzero constant term assumed), or None."""
    denom = 1
    for c in p.coeffs.values():
        denom = denom * c.denominator // math.gcd(denom, c.denominator)
    ip = {e: int(c * denom) for e, c in p.coeffs.items()}
    for num in _divisors(ip.get(0, 0)):
        for den in _divisors(ip[max(ip)]):
            for sign in (1, -1):
                cand = Fraction(sign * num, den)
                if p(cand) == 0:
                    return cand
    return None


def factored_str(p: UniPoly) -> str:
    """Display form with rational roots pulled out as linear factors."""
    if p.is_zero():
        return "0"
    var = p.var
    factors = []

    def record(root):
        for i, (r0, mult) in enumerate(factors):
            if r0 == root:
                factors[i] = (r0, mult + 1)
                return
        factors.append((root, 1))

    rest = p
    low = min(rest.coeffs)
    for _ in range(low):
        record(Fraction(0))
    rest = UniPoly({e - low: c for e, c in rest.coeffs.items()}, var=var)
    while rest.degree() not in (None, 0):
        root = _rational_root(rest)
        if root is None:
            break
        record(root)
        rest = rest.exact_div(UniPoly({1: Fraction(1), 0: -root}, var=var))
    parts = []
    for root, mult in factors:
        if root == 0:
            base = var
        elif root > 0:
            base = f"({var}-{rat_to_str(root)})"
        else:
            base = f"({var}+{rat_to_str(-root)})"
        parts.append(base if mult == 1 else f"{base}^{mult}")
    if rest.degree() in (None, 0) and not parts:
        return repr(rest)
    tail = "" if rest == 1 else f"({rest!r})"
    return "*".join(parts + ([tail] if tail else [])) or "1"


def _partition_label(lam, basis: str) -> str:
    letter = {"monomial": "m", "elementary": "e", "schur": "s",
              "power": "p"}[basis]
    return f"{letter}[{','.join(map(str, lam)) or ''}]"


def render_chern(cp: chern.ChernPolynomial, fmt: str, factored: bool) -> str:
    if fmt == "json":
        return json.dumps(cp.to_json(), indent=2)
    lines = [f"c_{cp.k}(Pol^d(C^{cp.n})) in {cp.basis} basis:"]
    for lam, p in sorted(cp.terms.items()):
        shown = factored_str(p) if factored else repr(p)
        lines.append(f"  {_partition_label(lam, cp.basis)}: {shown}")
    if len(lines) == 1:
        lines.append("  0")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _parse_vector(s: str) -> tuple:
    try:
        return tuple(int(x) for x in s.split(",") if x != "")
    except ValueError:
        raise UsageError(f"not a comma-separated integer vector: {s!r}")


def _require(args, names):
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"--{name} is required for this command")


def _get_chern(args) -> chern.ChernPolynomial:
    cp = cache_get_or_compute(args.n, args.k, args.cache_dir, args.no_cache)
    return cp.in_basis(BASIS_NAMES[args.basis])


def cmd_chern(args) -> str:
    _require(args, ["n", "k"])
    return render_chern(_get_chern(args), args.format, args.factored)


def cmd_chern_eval(args) -> str:
    _require(args, ["n", "k", "d"])
    cp = _get_chern(args)
    values = {lam: p(Fraction(args.d)) for lam, p in cp.terms.items()}
    if args.format == "json":
        return json.dumps({"n": cp.n, "k": cp.k, "basis": cp.basis,
                           "d": args.d,
                           "terms": [[list(lam), rat_to_str(v)]
                                     for lam, v in sorted(values.items())]},
                          indent=2)
    lines = [f"c_{cp.k}(Pol^{args.d}(C^{cp.n})) in {cp.basis} basis:"]
    for lam, v in sorted(values.items()):
        if v:
            lines.append(f"  {_partition_label(lam, cp.basis)}: {rat_to_str(v)}")
    if len(lines) == 1:
        lines.append("  0")
    return "\n".join(lines)


def cmd_stirling_coeff(args) -> str:
    _require(args, ["spec_file", "type"])
    with open(args.spec_file) as fh:
        spec = rising.RisingProductSpec.from_json(json.load(fh))
    H = _parse_vector(args.type)
    if len(H) != spec.nx:
        raise UsageError(f"exponent vector must have length {spec.nx}")
    poly = spec._unipoly(rising.stirling_coefficient(spec, H))
    if args.format == "json":
        return json.dumps({"H": list(H), "coefficient": poly.to_json()},
                          indent=2)
    return factored_str(poly) if args.factored else repr(poly)


def cmd_orbits(args) -> str:
    _require(args, ["n", "d"])
    if args.type is not None:
        u = _parse_vector(args.type)
        if sum(u) != args.n or any(x < 1 for x in u):
            raise UsageError(f"--type must be a composition of n={args.n}")
        data = {u: orbits.enumerate_orbit(u, args.d)}
    else:
        data = {u: orbits.enumerate_orbit(u, args.d)
                for u in orbits.orbit_types(args.n)}
    if args.format == "json":
        return json.dumps({"n": args.n, "d": args.d,
                           "orbits": [[list(u), [list(v) for v in vs]]
                                      for u, vs in data.items()]}, indent=2)
    lines = []
    for u, vs in data.items():
        label = ",".join(map(str, u))
        body = " ".join("(" + ",".join(map(str, v)) + ")" for v in vs) or "empty"
        lines.append(f"type ({label}): {body}")
    return "\n".join(lines)


def cmd_sigma_degree(args) -> str:
    _require(args, ["m", "r"])
    if args.d is not None:
        val = enumgeo.sigma_degree(args.d, args.m, args.r)
        warnings = enumgeo.sigma_validity_warnings(args.d, args.m, args.r)
        if args.format == "json":
            return json.dumps({"d": args.d, "m": args.m, "r": args.r,
                               "degree": rat_to_str(val),
                               "warnings": warnings}, indent=2)
        out = rat_to_str(val)
        for w in warnings:
            out += f"\nwarning: {w}"
        return out
    poly = enumgeo.sigma_degree_symbolic(args.m, args.r)
    if args.format == "json":
        return json.dumps({"m": args.m, "r": args.r,
                           "degree_polynomial": poly.to_json()}, indent=2)
    return factored_str(poly) if args.factored else repr(poly)


def cmd_fano_degree(args) -> str:
    _require(args, ["d", "m"])
    methods = (["closed", "integral"] if args.method == "both"
               else [args.method])
    vals = {meth: enumgeo.fano_degree_lines(args.d, args.m, meth)
            for meth in methods}
    if len(set(vals.values())) != 1:
        raise RuntimeError(f"method disagreement: {vals}")
    val = next(iter(vals.values()))
    if args.format == "json":
        return json.dumps({"d": args.d, "m": args.m, "degree": val,
                           "methods": methods}, indent=2)
    return str(val)


def cmd_fano_chi(args) -> str:
    _require(args, ["d", "m"])
    methods = (["closed", "integral"] if args.method == "both"
               else [args.method])
    vals = {meth: enumgeo.fano_chi_lines(args.d, args.m, meth)
            for meth in methods}
    if len(set(vals.values())) != 1:
        raise RuntimeError(f"method disagreement: {vals}")
    val = next(iter(vals.values()))
    if args.format == "json":
        return json.dumps({"d": args.d, "m": args.m, "chi": val,
                           "methods": methods}, indent=2)
    return str(val)


def cmd_verify(args) -> str:
    checks = []

    def check(name, fn):
        try:
            ok = bool(fn())
            detail = ""
        except Exception as exc:          # report, don't crash the suite
            ok = False
            detail = f" ({exc})"
        checks.append((name, ok, detail))

    def interp_vs_direct():
        cp = chern.chern_interpolated(2, 3, "monomial")
        for d in (7, 8):
            direct = chern.chern_direct(2, d, TruncationPolicy(3))
            from .symfunc import expand_in_basis
            mono = expand_in_basis(direct.homogeneous_component(3), "monomial")
            if cp.evaluate(d) != {lam: mono.get(lam, Fraction(0))
                                  for lam in cp.terms}:
                return False
        return True

    check("interpolation matches direct product (n=2, k=3)", interp_vs_direct)
    check("Euler closed formula matches direct product (d=4)",
          lambda: dict(chern.euler_c2_closed(4)) == {
              j: v for (j, v) in _euler_oracle(4)})
    check("Fano degree methods agree (d=3, m=3)",
          lambda: enumgeo.fano_degree_lines(3, 3, "closed")
          == enumgeo.fano_degree_lines(3, 3, "integral") == 27)
    check("Fano chi closed = integral (delta=1, m=4)",
          lambda: enumgeo.fano_chi_lines(4, 4, "closed")
          == enumgeo.fano_chi_lines(4, 4, "integral"))
    check("orbit factorization (n=3, d=6, trunc 3)",
          lambda: orbits.orbit_factorization_check(3, 6, TruncationPolicy(3)))
    lines = []
    all_ok = True
    for name, ok, detail in checks:
        lines.append(f"{'PASS' if ok else 'FAIL'}: {name}{detail}")
        all_ok = all_ok and ok
    lines.append("all checks passed" if all_ok else "some checks FAILED")
    if not all_ok:
        raise RuntimeError("\n".join(lines))
    return "\n".join(lines)


def _euler_oracle(d):
    from .symfunc import expand_in_basis
    top = chern.chern_direct(2, d, TruncationPolicy(d + 1)).homogeneous_component(d + 1)
    schur = expand_in_basis(top, "schur")
    out = []
    for j in range((d + 1) // 2 + 1):
        lam = (d + 1 - j, j) if j else (d + 1,)
        out.append((j, int(schur.get(lam, Fraction(0)))))
    return out


# ---------------------------------------------------------------------------
# argument parsing / dispatch
# ---------------------------------------------------------------------------

COMMANDS = {
    "chern": cmd_chern,
    "chern-eval": cmd_chern_eval,
    "stirling-coeff": cmd_stirling_coeff,
    "orbits": cmd_orbits,
    "sigma-degree": cmd_sigma_degree,
    "fano-degree": cmd_fano_degree,
    "fano-chi": cmd_fano_chi,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chernpol",
        description="Exact Chern-class computations for spaces of forms, "
                    "rising products, and enumerative invariants.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--n", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--d", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--r", type=int)
        p.add_argument("--basis", choices=sorted(BASIS_NAMES), default="m")
        p.add_argument("--type", help="comma-separated integer vector")
        p.add_argument("--format", choices=["json", "text"], default="text")
        p.add_argument("--cache-dir")
        p.add_argument("--no-cache", action="store_true")
        p.add_argument("--method", choices=["closed", "integral", "both"],
                       default="both" if name.startswith("fano") else "closed")
        p.add_argument("--spec-file")
        p.add_argument("--factored", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        out = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DOMAIN_ERRORS as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(err) if args.format == "json" else
              f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
