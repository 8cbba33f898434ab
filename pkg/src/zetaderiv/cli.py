"""Command-line front end: evaluation, region queries, zero enumeration,
verification suites, plot emission, and an append-only results cache."""
from __future__ import annotations

import argparse
import datetime as _dt
import hashlib
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

from . import continuation, plots, verify
from .geometry import ComplexPoint, TWO_PI, count_strips, strip, wedge
from .scaled import ScaledComplex
from .series import DELTA_MIN, eval_deriv, series_is_practical
from .zeros import ZeroRecord, locate_zero

_LN10 = math.log(10.0)
DEFAULT_CACHE = "zeta-cache.jsonl"


@dataclass(frozen=True)
class RunRecord:
    command: str
    parameters: dict
    timestamp: str
    results_digest: str


def _digest(obj) -> str:
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def _decimal_parts(v: ScaledComplex) -> tuple[complex, int]:
    """Mantissa with modulus in [1, 10) and a base-10 exponent."""
    if v.is_zero():
        return 0j, 0
    d = v.log_abs() / _LN10
    e10 = math.floor(d)
    unit = v.mantissa / abs(v.mantissa)
    return unit * 10.0 ** (d - e10), e10


def _fmt_scaled(v: ScaledComplex, digits: int = 15) -> str:
    m, e = _decimal_parts(v)
    return (f"({m.real:+.{digits}f}{m.imag:+.{digits}f}j) x 10^{e}")


# ---------------------------------------------------------------------------
# commands: each returns (json-serializable results, printable lines)


def cmd_eval(args) -> tuple[dict, list[str]]:
    s = ComplexPoint(args.sigma, args.t)
    eps = args.eps if args.eps is not None else 10.0 ** -args.precision_digits
    if args.sigma > 1.0 + DELTA_MIN and series_is_practical(
            args.k, args.sigma, eps):
        res = eval_deriv(s, args.k, eps)
        route = "series"
    elif args.sigma <= 0.0:
        raise SystemExit("sigma must be positive; the implemented "
                         "continuation covers 0 < sigma <= "
                         f"{1.0 + DELTA_MIN} and the series the rest")
    elif args.k == 0:
        res = continuation.eval_zeta_em(s, eps)
        route = "euler-maclaurin"
    else:
        res = continuation.eval_deriv_cauchy(s, args.k, eps)
        route = "cauchy-circle"
    m, e = _decimal_parts(res.value)
    results = {
        "route": route,
        "value_mantissa": [m.real, m.imag],
        "value_exp10": e,
        "abs_error_bound_log10": (res.abs_error_bound.log_abs() / _LN10
                                  if not res.abs_error_bound.is_zero()
                                  else -math.inf),
        "terms_used": res.terms_used,
    }
    lines = [
        f"value      = {_fmt_scaled(res.value)}   [{route}]",
        f"|error| <= 10^{results['abs_error_bound_log10']:.2f}",
        f"terms used = {res.terms_used}",
    ]
    return results, lines


def cmd_regions(args) -> tuple[dict, list[str]]:
    if args.k < 3:
        raise SystemExit(f"regions needs k >= 3, got {args.k}")
    k = args.k
    lines = [f"order k = {k}"]
    wedges = []
    strips = []
    M = 2
    while True:
        w = wedge(M)
        if k < w.tip_k:
            if M > 2:
                break
            M += 1
            continue
        right = w.sigma_right(k)
        wedges.append({"M": M, "sigma_left": w.sigma_left(k),
                       "sigma_right": right, "tip_k": w.tip_k})
        r = "inf" if right is None else f"{right:.4f}"
        lines.append(f"wedge  M={M:>2}: {w.sigma_left(k):.4f} <= sigma"
                     f" <= {r}  (tip k = {w.tip_k:.2f})")
        M += 1
    for M2 in range(2, M + 2):
        sp = strip(M2, k)
        if sp.exists:
            strips.append({"M": M2, "center": sp.center_sigma,
                           "half_width": sp.half_width,
                           "period": sp.period})
            lines.append(
                f"strip  S_{M2}: center {sp.center_sigma:.4f}, half-width "
                f"{sp.half_width:.4f}, period {sp.period:.4f}")
    count, lo, hi = count_strips(k)
    lines.append(f"strip count c({k}) = {count}, bounds ({lo:.3f}, {hi:.3f})")
    return ({"wedges": wedges, "strips": strips, "count": count,
             "count_bounds": [lo, hi]}, lines)


def _record_json(r: ZeroRecord) -> dict:
    d = asdict(r)
    d["location"] = {"sigma": r.location.sigma, "t": r.location.t}
    d["predicted"] = {"sigma": r.predicted.sigma, "t": r.predicted.t}
    return d


def _locate_cell(job: tuple[int, int, int]) -> ZeroRecord:
    return locate_zero(*job)


def _enumerate(M: int, k: int, T: float, workers: int) -> list[ZeroRecord]:
    delta = strip(M, k).delta
    j_max = math.ceil(T * delta / TWO_PI)
    jobs = [(M, k, j) for j in range(j_max)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_locate_cell, jobs))
    else:
        records = [_locate_cell(job) for job in jobs]
    return [r for r in records if r.location.t <= T]


def cmd_zeros(args) -> tuple[dict, list[str]]:
    sp = strip(args.M, args.k)
    if not sp.exists:
        raise SystemExit(f"strip S_{args.M} does not exist at k={args.k}")
    if args.count_at is not None:
        T = TWO_PI * args.count_at / sp.delta
    elif args.T is not None:
        T = args.T
    else:
        raise SystemExit("pass either --T or --count-at")
    records = _enumerate(args.M, args.k, T, args.parallel)
    lines = [json.dumps(_record_json(r), sort_keys=True) for r in records]
    lines.append(f"N = {len(records)} zeros up to T = {T:.6f}")
    results = {"records": [_record_json(r) for r in records],
               "N": len(records), "T": T}
    if args.count_at is not None and len(records) != args.count_at:
        lines.append(f"FAIL: expected exactly {args.count_at} zeros at the "
                     f"sanctioned height, found {len(records)}")
        results["expected"] = args.count_at
        return results, lines
    return results, lines


def cmd_verify(args) -> tuple[dict, list[str]]:
    checks = verify.run_suite(args.suite)
    lines = []
    for c in checks:
        status = "pass" if c.passed else "FAIL"
        lines.append(f"[{status}] {c.name}: computed {c.computed:.6g} "
                     f"{c.relation} claimed {c.claimed:.6g}")
    n_fail = sum(not c.passed for c in checks)
    lines.append(f"{len(checks) - n_fail}/{len(checks)} checks passed")
    return ({"checks": [asdict(c) for c in checks], "failures": n_fail},
            lines)


def cmd_plot(args) -> tuple[dict, list[str]]:
    if args.kind == "regions":
        paths = plots.plot_regions(args.k, args.out)
    elif args.kind == "zeros":
        if args.T is None:
            raise SystemExit("plot zeros needs --T")
        paths = plots.plot_zeros(args.M, args.k, args.T, args.out)
    elif args.kind == "figure2":
        paths = plots.plot_figure2(args.out)
    elif args.kind == "figure4":
        paths = plots.plot_figure4(args.out)
    else:
        raise SystemExit(f"unknown plot kind {args.kind!r}")
    return ({"files": [str(p) for p in paths]},
            [f"wrote {p}" for p in paths])


def cmd_berndt(args) -> tuple[dict, list[str]]:
    if args.k > 3:
        raise SystemExit("the heuristic continuation is only trusted for "
                         f"k <= 3, got k={args.k}")
    if args.T > 200:
        raise SystemExit(f"T <= 200 supported, got {args.T}")
    n_k = continuation.count_zeros_halfplane(args.k, args.T, 0.05)
    n_0 = continuation.count_zeros_halfplane(0, args.T, 0.05)
    main_term = n_0 - (args.T / TWO_PI * math.log(2.0) if args.k else 0.0)
    disc = n_k - main_term
    lines = [
        f"N_{args.k}({args.T}) = {n_k}",
        f"N({args.T})   = {n_0}",
        f"main term  = {main_term:.4f}",
        f"discrepancy = {disc:+.4f}  (2 log T = {2 * math.log(args.T):.4f})",
    ]
    return ({"N_k": n_k, "N": n_0, "main_term": main_term,
             "discrepancy": disc}, lines)


# ---------------------------------------------------------------------------
# dispatcher and cache


def _cache_lookup(path: Path, key: str) -> dict | None:
    if not path.exists():
        return None
    with path.open() as fh:
        for raw in fh:
            raw = raw.strip()
            if not raw:
                continue
            rec = json.loads(raw)
            if rec.get("key") == key:
                return rec
    return None


def _cache_append(path: Path, entry: dict) -> None:
    with path.open("a") as fh:
        fh.write(json.dumps(entry, sort_keys=True) + "\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eps", type=float, default=None,
                        help="target relative accuracy (overrides "
                             "--precision-digits)")
    common.add_argument("--precision-digits", type=int, default=12)
    common.add_argument("--parallel", type=int, default=1, metavar="N",
                        help="worker processes for zero enumeration")
    common.add_argument("--cache", default=None, metavar="PATH",
                        help=f"append-only results cache (default "
                             f"{DEFAULT_CACHE} when --use-cache is set)")
    common.add_argument("--use-cache", action="store_true",
                        help="return cached results for identical "
                             "invocations")

    p = argparse.ArgumentParser(
        prog="zetaderiv",
        description="Zero-free regions, critical strips, and zeros of "
                    "derivatives of the Riemann zeta function.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    sp = add("eval", help="evaluate the k-th derivative at s")
    sp.add_argument("--sigma", type=float, required=True)
    sp.add_argument("--t", type=float, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=cmd_eval)

    sp = add("regions", help="wedges and strips at order k")
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=cmd_regions)

    sp = add("zeros", help="enumerate strip zeros")
    sp.add_argument("--M", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--T", type=float, default=None)
    sp.add_argument("--count-at", type=int, default=None, metavar="J",
                    help="evaluate at the sanctioned height T_J and check "
                         "the count equals J")
    sp.set_defaults(func=cmd_zeros)

    sp = add("verify", help="run constant-verification suites")
    sp.add_argument("suite", choices=sorted(verify.SUITES) + ["all"])
    sp.set_defaults(func=cmd_verify)

    sp = add("plot", help="emit CSV + SVG plot data")
    sp.add_argument("kind", choices=["zeros", "regions", "figure2",
                                     "figure4"])
    sp.add_argument("--out", required=True, help="output path prefix")
    sp.add_argument("--M", type=int, default=2)
    sp.add_argument("--k", type=int, default=38)
    sp.add_argument("--T", type=float, default=None)
    sp.set_defaults(func=cmd_plot)

    sp = add("berndt", help="compare N_k(T) with its main term")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--T", type=float, required=True)
    sp.set_defaults(func=cmd_berndt)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    params = {k: v for k, v in sorted(vars(args).items())
              if k not in ("func", "cache", "use_cache") and v is not None}
    key = _digest({"command": args.command, "parameters": params})

    cache_path = None
    if args.use_cache or args.cache is not None:
        cache_path = Path(args.cache or DEFAULT_CACHE)
    if args.use_cache and cache_path is not None:
        hit = _cache_lookup(cache_path, key)
        if hit is not None:
            for line in hit["lines"]:
                print(line)
            print(f"(cached: {hit['record']['timestamp']})")
            return hit.get("exit_code", 0)

    results, lines = args.func(args)
    for line in lines:
        print(line)

    exit_code = 0
    if args.command == "verify" and results["failures"]:
        exit_code = 1
    if args.command == "zeros" and "expected" in results:
        exit_code = 1

    if cache_path is not None:
        record = RunRecord(
            command=args.command, parameters=params,
            timestamp=_dt.datetime.now(_dt.timezone.utc).isoformat(),
            results_digest=_digest(results))
        _cache_append(cache_path, {"key": key, "record": asdict(record),
                                   "results": results, "lines": lines,
                                   "exit_code": exit_code})
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
