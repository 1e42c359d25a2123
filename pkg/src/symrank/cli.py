"""Command-line front end.

Exit codes: 0 success (certificate valid or found), 1 error, 2 definitive
nonexistence, 3 budget exhausted, 4 reproduction mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

import numpy as np

from . import decomp, symcodes
from .errors import SymRankError
from .field import DEFAULT_CAP, load_field, prime_power
from .multtensor import Certificate, first_failure
from .reference import TABLE2, known, leading_term_str
from .reproduce import TARGETS, cmd_reproduce

EXIT_OK, EXIT_ERROR, EXIT_NONE, EXIT_BUDGET, EXIT_MISMATCH = 0, 1, 2, 3, 4

log = logging.getLogger("symrank")


class Out:
    """Collects text lines or a JSON document, depending on ``--json``."""

    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout
        self.doc = {}

    def line(self, text=""):
        if not self.as_json:
            print(text, file=self.stream)

    def set(self, **kw):
        self.doc.update(kw)

    def flush(self):
        if self.as_json:
            print(json.dumps(self.doc, indent=2, sort_keys=True), file=self.stream)


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
        if not text.endswith("\n"):
            fh.write("\n")


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _mat_rows(M):
    return ["".join(str(int(x)) for x in row) if np.max(M, initial=0) < 10
            else " ".join(str(int(x)) for x in row) for row in np.asarray(M)]


def _emit_cert(out, cert, path):
    if path:
        _write(path, cert.to_json())
        out.line(f"certificate written to {path}")
    out.set(certificate=cert.to_dict())
    if not path:
        out.line(cert.to_json())


# -- subcommands -------------------------------------------------------------

def cmd_construct(args, out):
    field = load_field(args.poly) if args.poly else None
    if field is not None and (field.q, field.m) != (args.q, args.m):
        raise SymRankError(f"field file describes q={field.q}, m={field.m}")
    if args.m == 1:
        cert = decomp.m1_construct(field) if field else decomp.construct(args.q, 1)
    elif args.m == 2:
        cert = decomp.m2_construct(field, q=args.q)
    elif args.m == 3:
        cert = decomp.m3_construct(field, q=args.q)
    elif args.m == 4:
        if field is not None and field != decomp.table4_field(args.q):
            raise SymRankError("m=4 constructions use the tabulated field only")
        cert = decomp.m4_construct(args.q)
    else:
        cert = decomp.construct(args.q, args.m)
    iv = known(args.q, args.m)
    out.line(f"q={args.q} m={args.m} R={cert.R} ({cert.meta.get('construction')}); "
             f"known interval {iv}")
    out.set(q=args.q, m=args.m, R=cert.R, known=str(iv))
    _emit_cert(out, cert, args.out)
    return EXIT_OK


def cmd_search(args, out):
    field = load_field(args.poly) if args.poly else None
    seeds = [int(x) for x in args.seed_exponents.split(",")] if args.seed_exponents else None
    res = decomp.search(args.q, args.m, args.R, strategy=args.strategy,
                        budget=args.budget, seed=args.seed, workers=args.workers,
                        field=field, seed_exponents=seeds)
    out.set(status=res.status, examined=res.examined, index=res.index)
    out.line(f"status={res.status} examined={res.examined}")
    if res.found:
        _emit_cert(out, res.certificate, args.out)
        return EXIT_OK
    return EXIT_NONE if res.status == "exhausted" else EXIT_BUDGET


def cmd_verify(args, out):
    cert = Certificate.from_json(_read(args.cert))
    bad = first_failure(cert)
    out.set(valid=bad is None, R=cert.R, q=cert.field.q, m=cert.m, failure=bad)
    if bad is None:
        out.line(f"valid: q={cert.field.q} m={cert.m} R={cert.R}")
        return EXIT_OK
    where = "structure" if bad < 0 else f"generator xi^{bad} x"
    out.line(f"invalid: fails at {where}")
    return EXIT_ERROR


def _prime_powers(lo, hi):
    out = []
    for q in range(lo, hi + 1):
        try:
            prime_power(q)
            out.append(q)
        except ValueError:
            pass
    return out


def cmd_ftable(args, out):
    if args.m != 3:
        raise SymRankError("ftable is defined for m = 3 only")
    rows = []
    for q in _prime_powers(2, args.qmax):
        P = decomp.reduce_mod_field_poly(decomp.m3_fT(q), q, 3)
        lead = P.leading_term()
        ref = leading_term_str(*TABLE2[q]) if q in TABLE2 else None
        rows.append({"q": q, "degree": P.degree, "leading": lead, "reference": ref,
                     "match": None if ref is None else lead == ref})
    out.set(m=3, rows=rows)
    out.line(f"{'q':>3}  {'leading term':>14}  {'reference':>14}  status")
    for r in rows:
        status = "-" if r["match"] is None else ("PASS" if r["match"] else "FAIL")
        out.line(f"{r['q']:>3}  {r['leading']:>14}  {r['reference'] or '-':>14}  {status}")
    if any(r["match"] is False for r in rows):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_export(args, out):
    cert = Certificate.from_json(_read(args.cert))
    if args.format == "json":
        out.set(certificate=cert.to_dict())
        out.line(cert.to_json())
        return EXIT_OK
    grams = cert.grams()
    out.set(matrices=[_mat_rows(G) for G in grams])
    for j, G in enumerate(grams):
        out.line(f"# A_{j + 1}  alpha={cert.field.format(cert.alphas[j])}")
        for row in _mat_rows(G):
            out.line(row)
    return EXIT_OK


def cmd_known(args, out):
    iv = known(args.q, args.m)
    hi = None if iv.hi == float("inf") else int(iv.hi)
    out.set(q=args.q, m=args.m, lo=iv.lo, hi=hi, rules=list(iv.rules))
    out.line(f"mu_sym(q={args.q}, m={args.m}) in {iv}")
    for r in iv.rules:
        out.line(f"  - {r}")
    return EXIT_OK


def cmd_reproduce_cli(args, out):
    report = cmd_reproduce(args.target)
    out.set(**report.to_dict())
    for line in report.lines():
        out.line(line)
    out.line(f"{args.target}: {'PASS' if report.ok else 'FAIL'}")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _load_code(path):
    return symcodes.SymCode.from_json(_read(path))


def cmd_code_build(args, out):
    code = symcodes.build_sqmd(args.q, args.m, args.d)
    out.set(code=code.to_dict(), k=code.k)
    if args.out:
        _write(args.out, code.to_json())
        out.line(f"S_(q={args.q},m={args.m},d={args.d}): dimension {code.k}, "
                 f"written to {args.out}")
    else:
        out.line(code.to_json())
    return EXIT_OK


def cmd_code_mindist(args, out):
    code = _load_code(args.code)
    d = symcodes.min_distance(code, cap=args.cap)
    out.set(m=code.m, k=code.k, d=d)
    out.line(f"[m={code.m}, k={code.k}, d={d}]_{code.q}")
    return EXIT_OK


def cmd_code_mrd(args, out):
    code = _load_code(args.code)
    d = symcodes.min_distance(code, cap=args.cap)
    bound = symcodes.singleton_bound(code.m, d)
    mrd = code.k == bound
    out.set(m=code.m, k=code.k, d=d, bound=bound, mrd=mrd)
    out.line(f"k={code.k} d={d} bound={bound} mrd={'yes' if mrd else 'no'}")
    return EXIT_OK


def cmd_code_strk(args, out):
    code = _load_code(args.code)
    res = symcodes.strk_exact(code, args.rmax, budget=args.budget)
    out.set(value=res.value, lower=res.lower, indeterminate=res.indeterminate,
            witness=[_mat_rows(A) for A in res.witness])
    if res.value is not None:
        out.line(f"strk = {res.value}")
        for j, A in enumerate(res.witness):
            out.line(f"# W_{j + 1}")
            for row in _mat_rows(A):
                out.line(row)
        return EXIT_OK
    if res.indeterminate:
        out.line(f"indeterminate: budget exhausted, strk >= {res.lower}")
        return EXIT_BUDGET
    out.line(f"no cover with at most {args.rmax} elements: strk >= {res.lower}")
    return EXIT_NONE


# -- parser ------------------------------------------------------------------

def _globals(defaults: bool) -> argparse.ArgumentParser:
    """Global flags, accepted before or after the subcommand."""
    g = argparse.ArgumentParser(add_help=False)
    sup = argparse.SUPPRESS
    g.add_argument("--json", action="store_true", default=False if defaults else sup,
                   help="emit a single JSON document")
    g.add_argument("--workers", type=int, default=(os.cpu_count() or 1) if defaults else sup,
                   help="worker processes for searches")
    g.add_argument("--cap", type=int, default=DEFAULT_CAP if defaults else sup,
                   help="enumeration cap (elements)")
    g.add_argument("--seed", type=int, default=0 if defaults else sup,
                   help="seed for randomized strategies")
    g.add_argument("-v", "--verbose", action="store_true", default=False if defaults else sup)
    return g


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="symrank", parents=[_globals(True)],
        description="Symmetric decompositions of finite-field multiplication "
                    "and symmetric rank-metric codes.")
    sub = p.add_subparsers(dest="command", required=True)
    common = [_globals(False)]

    c = sub.add_parser("construct", parents=common, help="closed-form decomposition")
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--m", type=int, required=True)
    c.add_argument("--poly", help="field spec JSON file")
    c.add_argument("--out", help="write the certificate here")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("search", parents=common, help="search for a decomposition")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--R", type=int, required=True)
    s.add_argument("--strategy", choices=decomp.STRATEGIES, default="exhaustive")
    s.add_argument("--budget", type=int)
    s.add_argument("--seed-exponents", help="comma-separated exponents tried first")
    s.add_argument("--poly", help="field spec JSON file")
    s.add_argument("--out", help="write the certificate here")
    s.set_defaults(func=cmd_search)

    v = sub.add_parser("verify", parents=common, help="check a certificate")
    v.add_argument("cert")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("ftable", parents=common, help="leading terms of f(T) for m=3")
    f.add_argument("--m", type=int, default=3)
    f.add_argument("--qmax", type=int, default=17)
    f.set_defaults(func=cmd_ftable)

    e = sub.add_parser("export", parents=common, help="export a certificate")
    e.add_argument("cert")
    e.add_argument("--format", choices=("json", "matrices"), default="json")
    e.set_defaults(func=cmd_export)

    k = sub.add_parser("known", parents=common, help="known interval for mu_sym")
    k.add_argument("--q", type=int, required=True)
    k.add_argument("--m", type=int, required=True)
    k.set_defaults(func=cmd_known)

    r = sub.add_parser("reproduce", parents=common, help="recompute reference data")
    r.add_argument("target", choices=TARGETS)
    r.set_defaults(func=cmd_reproduce_cli)

    code = sub.add_parser("code", parents=common, help="symmetric rank-metric codes")
    csub = code.add_subparsers(dest="code_command", required=True)
    b = csub.add_parser("build-sqmd", parents=common)
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--m", type=int, required=True)
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--out")
    b.set_defaults(func=cmd_code_build)
    for name, fn in (("mindist", cmd_code_mindist), ("mrd", cmd_code_mrd)):
        x = csub.add_parser(name, parents=common)
        x.add_argument("code")
        x.set_defaults(func=fn)
    st = csub.add_parser("strk", parents=common)
    st.add_argument("code")
    st.add_argument("--rmax", type=int, required=True)
    st.add_argument("--budget", type=int, default=symcodes.STRK_BUDGET)
    st.set_defaults(func=cmd_code_strk)
    return p


def _check_config(args):
    if getattr(args, "q", None) is not None:
        prime_power(args.q)
    if getattr(args, "m", None) is not None and args.m < 1:
        raise ValueError("m must be at least 1")
    if args.workers < 1:
        raise ValueError("--workers must be at least 1")
    if args.cap < 1:
        raise ValueError("--cap must be positive")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    out = Out(args.json)
    try:
        _check_config(args)
        code = args.func(args, out)
    except (SymRankError, ValueError, OSError) as exc:
        out.set(error=f"{type(exc).__name__}: {exc}")
        if not args.json:
            print(f"error: {exc}", file=sys.stderr)
        out.flush()
        return EXIT_ERROR
    out.flush()
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
