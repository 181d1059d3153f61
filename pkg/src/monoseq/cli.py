"""Command-line front end: generate, verify, bench, stats.

Exit codes: 0 success, 2 usage error, 1 verification or benchmark failure.
All configuration is flags; there are no config files or environment
variables, so every invocation is reproducible from its command line.
"""

import argparse
import sys
from itertools import islice

from . import bench, ulam
from .ulam import count_representations


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monoseq",
        description="Integer sequence generators (Hamming, Ulam, primes) "
        "with cross-verification and benchmarking.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    gen = sub.add_parser("generate", help="print the first n terms of a sequence")
    gen.add_argument("--algorithm", required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--factors", type=int, nargs="+")
    gen.add_argument("--output")

    ver = sub.add_parser("verify", help="run oracle cross-checks to depth n")
    ver.add_argument("--n", type=int, required=True)

    ben = sub.add_parser("bench", help="time algorithms over a geometric grid")
    ben.add_argument("--algorithm", required=True)
    ben.add_argument("--n", type=int, required=True)
    ben.add_argument("--output")
    ben.add_argument("--repetitions", type=int, default=3)

    st = sub.add_parser("stats", help="density statistics at term count n")
    st.add_argument("--n", type=int, required=True)
    return parser


def _open_sink(path):
    if path is None:
        return sys.stdout, False
    return open(path, "w", encoding="ascii"), True


def run_generate(args, parser) -> int:
    if args.n < 1:
        parser.error("--n must be >= 1")
    is_hamming = args.algorithm in bench.HAMMING_FAMILY
    if is_hamming and not args.factors:
        parser.error(f"--factors is required for {args.algorithm}")
    if not is_hamming and args.factors:
        parser.error("--factors only applies to hamming algorithms")
    try:
        if is_hamming:
            factory = bench.hamming_algorithms(args.factors)[args.algorithm]
        else:
            factory = bench.resolve(args.algorithm)
    except (KeyError, ValueError) as exc:
        print(f"monoseq: {exc}", file=sys.stderr)
        return 2
    sink, owned = _open_sink(args.output)
    try:
        for v in islice(factory(), args.n):
            sink.write(f"{v}\n")
    finally:
        if owned:
            sink.close()
    return 0


def cross_verify(n: int, tamper=None) -> tuple[bool, list[str]]:
    """Oracle cross-checks to depth n.

    Pairwise prefix equality of all Ulam generators, then soundness (every
    accepted term has exactly one representation) and completeness (every
    skipped integer has a representation count other than one) against the
    brute-force oracle.  ``tamper`` is a test hook that may corrupt the
    reference prefix before checking.
    """
    lines = []
    prefixes = {
        name: list(islice(factory(), n))
        for name, factory in ulam.ulam_generators().items()
    }
    reference_name = "ulam_optimized_filter"
    reference = prefixes[reference_name]
    if tamper is not None:
        reference = tamper(list(reference))
    ok = True
    for name, terms in prefixes.items():
        for idx, (a, b) in enumerate(zip(reference, terms)):
            if a != b:
                lines.append(
                    f"FAIL prefix equality: {name} diverges from "
                    f"{reference_name} at index {idx}: {b} != {a}"
                )
                ok = False
                break
        else:
            lines.append(f"ok   prefix equality: {name} ({n} terms)")
    for idx in range(2, len(reference)):
        z = reference[idx]
        c = count_representations(z, reference[:idx])
        if c != 1:
            lines.append(
                f"FAIL soundness: term index {idx} value {z} has {c} representations"
            )
            ok = False
            break
    else:
        lines.append(f"ok   soundness: representation count 1 for terms 3..{n}")
    members = set(reference)
    complete = True
    for z in range(3, reference[-1]):
        if z in members:
            continue
        c = count_representations(z, [t for t in reference if t < z])
        if c == 1:
            lines.append(
                f"FAIL completeness: skipped value {z} has exactly one representation"
            )
            ok = False
            complete = False
            break
    if complete:
        lines.append(f"ok   completeness: no skipped value below {reference[-1]} qualifies")
    return ok, lines


def run_verify(args, parser, tamper=None) -> int:
    if args.n < 3:
        parser.error("--n must be >= 3 (Ulam checks need the seed terms)")
    ok, lines = cross_verify(args.n, tamper=tamper)
    for line in lines:
        print(line)
    print("verify: PASS" if ok else "verify: FAIL")
    return 0 if ok else 1


GRID_MIN = 16


def run_bench(args, parser) -> int:
    if args.n < GRID_MIN:
        parser.error(f"--n must be >= {GRID_MIN} (grid spans n/8 .. n)")
    if args.repetitions < 1:
        parser.error("--repetitions must be >= 1")
    if args.algorithm == "all":
        names = list(bench.ULAM_FAMILY)
    else:
        try:
            bench.resolve(args.algorithm)
        except ValueError as exc:
            print(f"monoseq: {exc}", file=sys.stderr)
            return 2
        names = [bench.ALIASES.get(args.algorithm, args.algorithm)]
    grid = [args.n // 8, args.n // 4, args.n // 2, args.n]
    samples = []
    try:
        for name in names:
            for n in grid:
                samples.append(bench.time_algorithm(name, n, args.repetitions))
        sink, owned = _open_sink(args.output)
        try:
            bench.export_csv(samples, sink)
        finally:
            if owned:
                sink.close()
        for name in names:
            own = [s for s in samples if s.algorithm == name]
            try:
                exponent = bench.growth_exponent(own)
                print(f"{name}: fitted exponent {exponent:.3f}", file=sys.stderr)
            except ValueError:
                print(f"{name}: too fast to fit (all points under 10 ms)", file=sys.stderr)
    except OSError as exc:
        print(f"monoseq: {exc}", file=sys.stderr)
        return 1
    return 0


def run_stats(args, parser) -> int:
    if args.n < 2:
        parser.error("--n must be >= 2")
    st = bench.density_stats(args.n)
    print(f"n={st.n} u_n={st.u_n} ratio={st.ratio:.4f} nonsum_count={st.nonsum_count}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "generate": run_generate,
        "verify": run_verify,
        "bench": run_bench,
        "stats": run_stats,
    }
    return handlers[args.subcommand](args, parser)


if __name__ == "__main__":
    sys.exit(main())
