"""
pn: command-line front end for pnheights.

Usage:
    pn coeff --primes 5,11,23 --k 71
    pn height --primes 5,7,11,13 --method region
    pn construct height1 --n 4 --out cert.json
    pn verify cert.json
"""

import argparse
import random
import sys
import time
from itertools import permutations
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .arithmetic.prime_tuple import PrimeTuple
from .constructions.amplify import amplify_chain
from .constructions.bounds import bounds_report
from .constructions.cache import CertificateCache, cache_key
from .constructions.certificate import Certificate
from .constructions.height_one import construct_height1
from .constructions.verification import verify_certificate
from .core_utils.config_manager import ConfigManager, PNConfig
from .core_utils.file_handler import FileHandler
from .core_utils.logger import Logger
from .core_utils.validator import (
    BudgetExceededError,
    ConsistencyError,
    ConstructionError,
    PNError,
    UnsupportedError,
    ValidationError,
)
from .engine.orientation import OrientationSet
from .engine.pointwise import coeff_at
from .engine.profile import ResidueProfile
from .engine.regions import RegionModel
from .engine.rendering import region_csv, region_svg
from .engine.triples import classify_pqr, table_pqr
from .oracle.expansion import expand_pn, height_dense, working_length
from .oracle.identities import verify_identity
from .recursion.providers import RecursiveProvider

logger = Logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class PNCLI:
    """One method per subcommand; each returns (exit status, text for stdout)."""

    def __init__(self, config: PNConfig, output: str = "text"):
        self.config = config
        self.output = output
        self.files = FileHandler()

    def _emit(self, text_line: str, data: Dict[str, Any]) -> str:
        return FileHandler.json_text(data) if self.output == "json" else text_line + "\n"

    def _write_or_return(self, text: str, out: Optional[str]) -> str:
        if out is None:
            return text
        if not self.files.save_text(text, out):
            raise ValidationError(f"Could not write {out}")
        return ""

    def _orientation(self, name: Optional[str], n: int) -> OrientationSet:
        return OrientationSet.named(name or self.config.engine.orientation, n)

    def _model(self, t: PrimeTuple, orientation: Optional[OrientationSet] = None) -> RegionModel:
        return RegionModel(t, orientation, max_scan_regions=self.config.engine.max_scan_regions,
                           threads=self.config.engine.threads)

    # coefficients

    def coefficient(self, t: PrimeTuple, k: int, method: str, orientation: Optional[str] = None):
        """(value, reduced) by the named method."""
        if method == "closed":
            value = coeff_at(t, k, self._orientation(orientation, t.n))
            return value, not ResidueProfile(t).deg_lt_N
        if method == "recursive":
            if k < 0:
                raise ValidationError(f"k={k} must be nonnegative")
            return RecursiveProvider(t)(k), False
        if k < 0:
            raise ValidationError(f"k={k} must be nonnegative")
        return expand_pn(t, degree_cap=self.config.oracle.degree_cap).at(k), False

    def coeff(self, args) -> str:
        t = PrimeTuple.parse(args.primes)
        method = args.method or self.config.recursion.provider
        value, reduced = self.coefficient(t, args.k, method, args.orientation)
        return self._emit(str(value), {
            "primes": t.to_strings(),
            "k": str(args.k),
            "value": str(value),
            "method": method,
            "reduced": reduced,
        })

    def poly(self, args) -> str:
        t = PrimeTuple.parse(args.primes)
        vector = expand_pn(t, reduced=args.reduced, degree_cap=self.config.oracle.degree_cap)
        if args.file_format == "csv":
            text = FileHandler.csv_text(["index", "coefficient"], vector.csv_rows())
        else:
            text = FileHandler.json_text({
                "primes": t.to_strings(),
                "N": str(t.N),
                "reduced": vector.reduced,
                "coefficients": vector.to_json(),
            })
        return self._write_or_return(text, args.out)

    # heights and tables

    def height(self, args) -> str:
        t = PrimeTuple.parse(args.primes)
        if args.method == "dense":
            height, witness = height_dense(expand_pn(t, degree_cap=self.config.oracle.degree_cap))
            return self._emit(f"height={height} witness={witness}", {
                "primes": t.to_strings(), "method": "dense",
                "height": str(height), "witness": str(witness),
            })

        model = self._model(t)
        result = model.scan(self.config.engine.witness_scan_limit)
        if args.regions_out and not self.files.save_text(region_csv(model), args.regions_out):
            raise ValidationError(f"Could not write {args.regions_out}")
        return self._emit(f"height={result.height} witness={result.witness} regions={result.regions}", {
            "primes": t.to_strings(), "method": "region",
            "height": str(result.height), "witness": str(result.witness), "regions": str(result.regions),
        })

    def classify3(self, args) -> str:
        t = PrimeTuple.parse(args.primes)
        if t.n != 3:
            raise ValidationError(f"classify3 takes three primes, got {t.n}")
        case, perm = classify_pqr(*t.primes)
        return self._emit(f"case={case} permutation={','.join(str(i) for i in perm)}", {
            "primes": t.to_strings(), "case": case, "permutation": list(perm),
        })

    def table3(self, args) -> str:
        t = PrimeTuple.parse(args.primes)
        if t.n != 3:
            raise ValidationError(f"table3 takes three primes, got {t.n}")
        model = self._model(t)
        table = table_pqr(*t.primes)
        mismatched = [x for x, value in table.items() if model.value(x) != value]
        if mismatched:
            raise ConsistencyError(f"Case table of {t} disagrees with the closed form at {mismatched}")
        text = region_svg(model) if args.file_format == "svg" else region_csv(model)
        return self._write_or_return(text, args.out)

    # constructions

    def _cached(self, key: str, build) -> Certificate:
        cache_dir = self.config.construction.cache_dir
        cache = CertificateCache(cache_dir) if cache_dir else None
        if cache is not None:
            cached = cache.get(key)
            if cached is not None:
                return cached
        certificate = build()
        if cache is not None:
            cache.put(key, certificate)
        return certificate

    def construct(self, args) -> str:
        budget = self.config.construction.ap_budget
        seed = self.config.construction.seed
        if args.kind == "height1":
            if args.n is None:
                raise ValidationError("construct height1 needs --n")
            key = cache_key("height1", args.n, budget, seed)
            certificate = self._cached(key, lambda: construct_height1(args.n, self.config))
        else:
            if args.primes is None:
                raise ValidationError("construct amplify needs --primes")
            t = PrimeTuple.parse(args.primes)
            key = cache_key(f"amplified{args.steps}", t.n, budget, seed, t.primes)
            certificate = self._cached(
                key, lambda: amplify_chain(t, args.steps, self.config)[-1].certificate,
            )
        return self._write_or_return(FileHandler.json_text(certificate.to_dict()), args.out)

    def bounds(self, args) -> str:
        report = bounds_report(args.n)
        return self._emit(f"upper={report.upper} lower={report.lower} maclaurin={report.maclaurin}",
                          report.to_dict())

    # verification

    def verify(self, args) -> Tuple[int, str]:
        if args.identities:
            return self._verify_identities(args)
        if args.certificate is None:
            raise ValidationError("verify needs a certificate file or --identities")
        text = self.files.load_text(args.certificate)
        if text is None:
            raise ValidationError(f"Cannot read certificate {args.certificate}")
        logger.info("Verifying certificate", path=args.certificate,
                    sha256=self.files.get_file_hash(args.certificate))
        report = verify_certificate(Certificate.from_json(text), self.config)
        lines = [f"{c.name}: {'ok' if c.holds else 'FAILED'}" for c in report.conditions]
        lines += [f"problem: {p}" for p in report.problems]
        lines.append(f"verified={'true' if report.ok else 'false'}")
        status = EXIT_OK if report.ok else EXIT_FAILED
        return status, self._emit("\n".join(lines), report.to_dict())

    def _verify_identities(self, args) -> Tuple[int, str]:
        if args.primes is None:
            raise ValidationError("verify --identities needs --primes")
        t = PrimeTuple.parse(args.primes)
        cap = self.config.oracle.degree_cap
        if t.n <= 4:
            orientations = list(OrientationSet.all_sets(t.n))
        else:
            rng = random.Random(self.config.construction.seed)
            orientations = [OrientationSet.sample(t.n, rng) for _ in range(8)]

        results: List[Dict[str, Any]] = []
        for S in orientations:
            label = ";".join(f"{i}>{j}" for i, j in sorted(S.pairs))
            results.append({"identity": "orientation", "case": label,
                            "holds": verify_identity(t, "orientation", orientation=S, degree_cap=cap)})
        if t.n >= 3:
            for i, j in permutations(range(t.n), 2):
                results.append({"identity": "pair-split", "case": f"{i},{j}",
                                "holds": verify_identity(t, "pair-split", pair=(i, j), degree_cap=cap)})

        ok = all(r["holds"] for r in results)
        lines = [f"{r['identity']} {r['case']}: {'ok' if r['holds'] else 'FAILED'}" for r in results]
        lines.append(f"verified={'true' if ok else 'false'}")
        return (EXIT_OK if ok else EXIT_FAILED), self._emit("\n".join(lines), {
            "primes": t.to_strings(), "ok": ok, "results": results,
        })

    def bench(self, args) -> Tuple[int, str]:
        """Time every applicable method on the same deterministic exponents."""
        t = PrimeTuple.parse(args.primes)
        profile = ResidueProfile(t)
        stop = min(t.N, profile.degree + 1)
        rng = random.Random(self.config.construction.seed)
        ks = sorted(rng.randrange(stop) for _ in range(args.samples))

        methods = ["recursive"]
        if profile.deg_lt_N:
            methods.insert(0, "closed")
        if working_length(t) <= self.config.oracle.degree_cap:
            methods.append("oracle")

        rows, reference = [], None
        for method in methods:
            start = time.perf_counter()
            values = [self.coefficient(t, k, method)[0] for k in ks]
            elapsed = time.perf_counter() - start
            reference = values if reference is None else reference
            rows.append({"method": method, "seconds": f"{elapsed:.6f}", "agree": values == reference})

        ok = all(r["agree"] for r in rows)
        lines = [f"method={r['method']} seconds={r['seconds']} agree={str(r['agree']).lower()}" for r in rows]
        return (EXIT_OK if ok else EXIT_FAILED), self._emit("\n".join(lines), {
            "primes": t.to_strings(), "samples": len(ks), "methods": rows,
        })


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pn",
        description="Coefficients, heights and extremal constructions for inclusion-exclusion polynomials",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  pn coeff --primes 5,11,23 --k 71
  pn height --primes 5,7,11,13 --method region
  pn table3 --primes 5,11,23 --format svg --out table.svg
  pn construct height1 --n 4 --out cert.json
        """,
    )
    parser.add_argument("--config", help="YAML, JSON or section.key=value file")
    parser.add_argument("--threads", type=int, help="Region-scan threads")
    parser.add_argument("--degree-cap", type=int, help="Largest dense expansion, in coefficients")
    parser.add_argument("--ap-budget", type=int, help="Candidates per arithmetic-progression prime search")
    parser.add_argument("--seed", type=int, help="Construction seed")
    parser.add_argument("--cache-dir", help="Certificate cache directory")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--log-dir", help="Directory for detailed and structured logs")
    parser.add_argument("--format", dest="output", choices=["text", "json"], default="text",
                        help="Output style for results")

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    coeff = subparsers.add_parser("coeff", help="One coefficient")
    coeff.add_argument("--primes", required=True)
    coeff.add_argument("--k", type=int, required=True)
    coeff.add_argument("--method", choices=["closed", "recursive", "oracle"])
    coeff.add_argument("--orientation", choices=["descending", "ascending"])

    poly = subparsers.add_parser("poly", help="Dense expansion")
    poly.add_argument("--primes", required=True)
    poly.add_argument("--reduced", action="store_true", help="Reduce modulo 1 - x^N")
    poly.add_argument("--format", dest="file_format", choices=["csv", "json"], default="csv")
    poly.add_argument("--out")

    height = subparsers.add_parser("height", help="Height and smallest witness")
    height.add_argument("--primes", required=True)
    height.add_argument("--method", choices=["dense", "region"], default="region")
    height.add_argument("--regions-out", help="Write the region table as CSV")

    classify = subparsers.add_parser("classify3", help="Ordering case of three primes")
    classify.add_argument("--primes", required=True)

    table = subparsers.add_parser("table3", help="The 64 region coefficients of three primes")
    table.add_argument("--primes", required=True)
    table.add_argument("--format", dest="file_format", choices=["csv", "svg"], default="csv")
    table.add_argument("--out")

    construct = subparsers.add_parser("construct", help="Build a certified tuple")
    construct.add_argument("kind", choices=["height1", "amplify"])
    construct.add_argument("--n", type=int)
    construct.add_argument("--primes")
    construct.add_argument("--steps", type=int, default=1)
    construct.add_argument("--out")

    bounds = subparsers.add_parser("bounds", help="Known bounds on the largest height")
    bounds.add_argument("--n", type=int, required=True)

    verify = subparsers.add_parser("verify", help="Re-check a certificate or the identities")
    verify.add_argument("certificate", nargs="?")
    verify.add_argument("--identities", action="store_true")
    verify.add_argument("--primes")

    bench = subparsers.add_parser("bench", help="Time the coefficient methods")
    bench.add_argument("--primes", required=True)
    bench.add_argument("--samples", type=int, default=200)

    return parser


def load_config(args) -> PNConfig:
    manager = ConfigManager(args.config)
    manager.apply_overrides({
        "engine.threads": args.threads,
        "oracle.degree_cap": args.degree_cap,
        "construction.ap_budget": args.ap_budget,
        "construction.seed": args.seed,
        "construction.cache_dir": args.cache_dir,
        "system.log_level": args.log_level,
        "system.log_dir": args.log_dir,
    })
    return manager.get_config()


def run(args) -> int:
    config = load_config(args)
    Logger.configure(config.system.log_level, config.system.log_dir)
    cli = PNCLI(config, args.output)

    logger.push_context({"command": args.command, "primes": getattr(args, "primes", None)})
    try:
        result = getattr(cli, args.command)(args)
    finally:
        logger.pop_context()

    status, text = result if isinstance(result, tuple) else (EXIT_OK, result)
    if text:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return status


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        return run(args)
    except (ValidationError, UnsupportedError) as e:
        logger.error(str(e))
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except BudgetExceededError as e:
        logger.error(str(e), required=e.required, limit=e.limit, last_candidate=e.last_candidate)
        sys.stderr.write(f"budget exceeded: {e}\n")
        return EXIT_BUDGET
    except (ConsistencyError, ConstructionError) as e:
        logger.critical(str(e))
        sys.stderr.write(f"failed: {e}\n")
        return EXIT_FAILED
    except PNError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
