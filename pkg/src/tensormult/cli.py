"""Command-line surface: single multiplicity queries, bulk tables, restriction
tables, occupancy dumps, cross-validation suites, and a backend benchmark.

Exit codes: 0 success, 2 usage error, 3 cross-check or suite failure.  Big
integers are emitted as decimal strings; table entries are sorted by weight
vector so repeated runs are byte-identical.
"""

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import diffformula, occupancy, oracle, verify
from .errors import TensormultError
from .partitions import (
    format_partition,
    hook_from_super_m,
    lambda_from_m,
    m_from_lambda,
    parse_partition,
    super_m_from_hook,
)
from .weyl import (
    SuperRootSubset,
    close_root_subset,
    parse_roots,
    weyl_denominator_ar,
    weyl_denominator_subalgebra,
    weyl_denominator_super,
    weyl_denominator_super_subalgebra,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3


def _parse_algebra(text: str) -> int:
    text = text.strip().upper()
    if not text.startswith("A") or not text[1:].isdigit() or int(text[1:]) < 1:
        raise ValueError(f"algebra must look like A2, got {text!r}")
    return int(text[1:])


def _parse_shape(text: str) -> tuple[int, int]:
    parts = [int(t) for t in text.split(",")]
    if len(parts) != 2 or parts[0] < 1 or parts[1] < 1:
        raise ValueError(f"shape must be m,n with m,n >= 1, got {text!r}")
    return (parts[0], parts[1])


def _parse_spins(two_s_text: str, nsites) -> tuple[int, ...]:
    values = [int(t) for t in two_s_text.split(",")]
    if any(v < 0 for v in values):
        raise ValueError("site degrees must be nonnegative")
    if len(values) == 1:
        if nsites is None:
            raise ValueError("--L is required with a single --twoS value")
        return tuple(values) * nsites
    if nsites is not None and nsites != len(values):
        raise ValueError(f"--L {nsites} disagrees with {len(values)} --twoS values")
    return tuple(values)


def _default_jobs() -> int:
    return int(os.environ.get("TENSORMULT_JOBS", "1"))


def _map_jobs(worker, items, jobs):
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [worker(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, items, chunksize=max(1, len(items) // jobs)))


def _mult_worker(args):
    m_vec, spins, backend = args
    return str(diffformula.multiplicity_from_m(m_vec, spins, backend))


def _branch_worker(args):
    m_vec, spec, spins, backend = args
    return str(diffformula.branching_multiplicity_from_m(m_vec, spec, spins, backend))


def _super_worker(args):
    m_vec, two_s, nsites, shape, backend = args
    return str(
        diffformula.super_multiplicity_from_m(m_vec, two_s, nsites, shape, backend)
    )


def _super_branch_worker(args):
    m_vec, sub, two_s, nsites, backend = args
    return str(
        diffformula.super_branching_multiplicity_from_m(
            m_vec, sub, two_s, nsites, backend
        )
    )


def _emit(doc: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        return
    entries = doc.get("entries")
    if entries is None:
        row = {k: v for k, v in doc.items() if not isinstance(v, (dict, list))}
        out.write("\t".join(str(v) for v in row.values()) + "\n")
        return
    if entries:
        header = list(entries[0])
        out.write("\t".join(header) + "\n")
        for entry in entries:
            out.write(
                "\t".join(
                    ",".join(str(x) for x in v) if isinstance(v, (list, tuple)) else str(v)
                    for v in entry.values()
                )
                + "\n"
            )


def _backends(choice: str):
    return ("dp", "poly") if choice == "both" else (choice,)


def cmd_multiplicity(args, out) -> int:
    rank = _parse_algebra(args.algebra)
    spins = _parse_spins(args.twoS, args.L)
    total = sum(spins)
    query = {"algebra": f"A{rank}", "twoS": list(spins), "L": len(spins)}
    if args.table:
        rows = []
        for m_vec in occupancy.standard_m_vectors(rank, total):
            try:
                lam = lambda_from_m(m_vec, total)
            except TensormultError:
                continue
            rows.append((m_vec, lam))
        values = {}
        for backend in _backends(args.backend):
            work = [(m, spins, backend) for m, _ in rows]
            values[backend] = _map_jobs(_mult_worker, work, args.jobs)
        picked = values[_backends(args.backend)[0]]
        if len(values) == 2 and values["dp"] != values["poly"]:
            print("backend mismatch in multiplicity table", file=sys.stderr)
            return EXIT_MISMATCH
        entries = []
        oracle_values = (
            oracle.schur_expansion(spins, rank) if args.check else None
        )
        status = EXIT_OK
        for (m_vec, lam), mu in zip(rows, picked):
            if mu == "0":
                continue
            entry = {"M": list(m_vec), "lambda": list(lam), "mu": mu}
            if oracle_values is not None:
                want = str(oracle_values.get(lam, 0))
                entry["oracle"] = want
                if want != mu:
                    status = EXIT_MISMATCH
            entries.append(entry)
        _emit({"query": query, "entries": entries}, args.format, out)
        return status
    if getattr(args, "lambda") is None:
        raise ValueError("need --lambda or --table")
    lam = parse_partition(getattr(args, "lambda"))
    m_vec = m_from_lambda(lam, rank, total)
    results = {
        backend: str(diffformula.multiplicity_from_m(m_vec, spins, backend))
        for backend in _backends(args.backend)
    }
    if len(set(results.values())) > 1:
        print(f"backend mismatch: {results}", file=sys.stderr)
        return EXIT_MISMATCH
    mu = next(iter(results.values()))
    doc = {
        "query": {**query, "lambda": list(lam)},
        "mu": mu,
        "witness": {
            "M": list(m_vec),
            "terms": len(weyl_denominator_ar(rank)),
        },
    }
    status = EXIT_OK
    if args.check:
        want = str(oracle.schur_expansion(spins, rank).get(lam, 0))
        doc["oracle"] = want
        if want != mu:
            status = EXIT_MISMATCH
    _emit(doc, args.format, out)
    return status


def cmd_branch(args, out) -> int:
    rank = _parse_algebra(args.algebra)
    spins = _parse_spins(args.twoS, args.L)
    total = sum(spins)
    roots = parse_roots(args.roots)
    spec = close_root_subset(roots, rank)
    query = {
        "algebra": f"A{rank}",
        "twoS": list(spins),
        "L": len(spins),
        "roots": [f"L{i}-L{j}" for i, j in roots],
        "components": [list(c) for c in spec.components],
        "abelian": list(spec.abelian),
    }
    if args.table:
        rows = []
        for m_vec in occupancy.standard_m_vectors(rank, total):
            label = diffformula.branching_weight_from_m(m_vec, spec, total)
            if label is not None:
                rows.append((m_vec, label))
        work = [(m, spec, spins, args.backend) for m, _ in rows]
        mus = _map_jobs(_branch_worker, work, args.jobs)
        entries = []
        for (m_vec, (diagrams, charges)), mu in zip(rows, mus):
            if mu == "0":
                continue
            entries.append(
                {
                    "M": list(m_vec),
                    "diagrams": [format_partition(d) for d in diagrams],
                    "charges": list(charges),
                    "mu": mu,
                }
            )
        _emit({"query": query, "entries": entries}, args.format, out)
        return EXIT_OK
    if args.rows is None:
        raise ValueError("need --rows or --table")
    rows = [int(t) for t in args.rows.split(",")]
    m_vec = diffformula.ambient_rows_to_m(rows, rank, total)
    mu = diffformula.branching_multiplicity_from_m(m_vec, spec, spins, args.backend)
    doc = {
        "query": {**query, "rows": rows},
        "mu": str(mu),
        "witness": {
            "M": list(m_vec),
            "terms": len(weyl_denominator_subalgebra(spec)),
        },
    }
    _emit(doc, args.format, out)
    return EXIT_OK


def cmd_super(args, out) -> int:
    shape = _parse_shape(args.shape)
    m, n = shape
    rank = m + n - 1
    spins = _parse_spins(args.twoS, args.L)
    if len(set(spins)) != 1:
        raise ValueError("hook queries use one repeated degree")
    two_s, nsites = spins[0], len(spins)
    total = two_s * nsites
    query = {"shape": list(shape), "twoS": two_s, "L": nsites}
    sub = None
    if args.roots:
        sub = SuperRootSubset(shape, parse_roots(args.roots, shape))
        query["roots"] = [list(r) for r in sub.roots]
    if args.table:
        if sub is None:
            rows = []
            for m_vec in occupancy.standard_m_vectors(rank, total):
                try:
                    lam = hook_from_super_m(m_vec, total, shape)
                except TensormultError:
                    continue
                rows.append((m_vec, lam))
            work = [(mv, two_s, nsites, shape, args.backend) for mv, _ in rows]
            mus = _map_jobs(_super_worker, work, args.jobs)
            oracle_values = (
                oracle.hook_schur_expansion(two_s, nsites, shape)
                if args.check
                else None
            )
            status = EXIT_OK
            entries = []
            for (m_vec, lam), mu in zip(rows, mus):
                if mu == "0":
                    continue
                entry = {"M": list(m_vec), "lambda": list(lam), "mu": mu}
                if oracle_values is not None:
                    want = str(oracle_values.get(lam, 0))
                    entry["oracle"] = want
                    if want != mu:
                        status = EXIT_MISMATCH
                entries.append(entry)
            _emit({"query": query, "entries": entries}, args.format, out)
            return status
        rows = []
        for m_vec in occupancy.standard_m_vectors(rank, total):
            label = diffformula.super_branching_weight_from_m(m_vec, sub, two_s, nsites)
            if label is not None:
                rows.append((m_vec, label))
        work = [(mv, sub, two_s, nsites, args.backend) for mv, _ in rows]
        mus = _map_jobs(_super_branch_worker, work, args.jobs)
        entries = []
        for (m_vec, (diagrams, charges)), mu in zip(rows, mus):
            if mu == "0":
                continue
            entries.append(
                {
                    "M": list(m_vec),
                    "diagrams": [
                        f"{','.join(map(str, labels))}:{format_partition(lam)}"
                        for labels, lam in diagrams
                    ],
                    "charges": [f"{label}:{value}" for label, value in charges],
                    "mu": mu,
                }
            )
        _emit({"query": query, "entries": entries}, args.format, out)
        return EXIT_OK
    if args.M:
        m_vec = tuple(int(t) for t in args.M.split(","))
    elif getattr(args, "lambda") is not None:
        lam = parse_partition(getattr(args, "lambda"))
        m_vec = super_m_from_hook(lam, total, shape)
    else:
        raise ValueError("need --lambda, --M, or --table")
    clipped = tuple(max(x, 0) for x in m_vec)
    if sub is None:
        mu = diffformula.super_multiplicity_from_m(
            m_vec, two_s, nsites, shape, args.backend
        )
        nterms = len(weyl_denominator_super(shape, clipped))
    else:
        mu = diffformula.super_branching_multiplicity_from_m(
            m_vec, sub, two_s, nsites, args.backend
        )
        nterms = len(weyl_denominator_super_subalgebra(sub, clipped))
    doc = {
        "query": {**query, "M": list(m_vec)},
        "mu": str(mu),
        "witness": {"M": list(m_vec), "terms": nterms},
    }
    status = EXIT_OK
    if args.check and sub is None:
        try:
            lam = hook_from_super_m(m_vec, total, shape)
            want = str(
                oracle.hook_schur_expansion(two_s, nsites, shape).get(lam, 0)
            )
            doc["oracle"] = want
            if want != str(mu):
                status = EXIT_MISMATCH
        except TensormultError:
            doc["oracle"] = "unlabeled"
    _emit(doc, args.format, out)
    return status


def cmd_occupancy(args, out) -> int:
    rank = _parse_algebra(args.algebra)
    spins = _parse_spins(args.twoS, args.L)
    if args.table:
        tables = {
            backend: occupancy.occupancy_table(spins, rank, backend)
            for backend in _backends(args.backend)
        }
        first = _backends(args.backend)[0]
        if len(tables) == 2 and tables["dp"] != tables["poly"]:
            print("backend mismatch in occupancy table", file=sys.stderr)
            return EXIT_MISMATCH
        doc = {
            "r": rank,
            "twoS": list(spins),
            "L": len(spins),
            "entries": [
                {"M": list(m_vec), "c": str(tables[first][m_vec])}
                for m_vec in sorted(tables[first])
            ],
        }
        _emit(doc, args.format, out)
        return EXIT_OK
    if args.M is None:
        raise ValueError("need --M or --table")
    m_vec = tuple(int(t) for t in args.M.split(","))
    values = {
        backend: occupancy.occupancy_coefficient(m_vec, spins, backend)
        for backend in _backends(args.backend)
    }
    if len(set(values.values())) > 1:
        print(f"backend mismatch: {values}", file=sys.stderr)
        return EXIT_MISMATCH
    doc = {
        "r": rank,
        "twoS": list(spins),
        "L": len(spins),
        "M": list(m_vec),
        "c": str(next(iter(values.values()))),
    }
    _emit(doc, args.format, out)
    return EXIT_OK


# per-suite names of the grid caps settable from the command line
_SUITE_PARAMS = {
    "backends": {"r": "rank_max", "twoS": "two_s_max", "L": "nsites_max"},
    "symmetry": {"r": "rank_max", "twoS": "two_s_max", "L": "nsites_max"},
    "rank-one": {"twoS": "two_s_max", "L": "nsites_max"},
    "tensor": {"r": "ranks", "twoS": "two_s_values", "L": "nsites_values"},
    "pieri": {"r": "rank_max", "twoS": "two_s_prime_max"},
    "hooklength": {"r": "rank_max", "L": "nsites_max"},
    "super": {"twoS": "two_s_values", "L": "nsites_max"},
    "kostka": {"r": "rank_max", "twoS": "two_s_max", "L": "nsites_max"},
}

_GRID_PARAMS = {"ranks", "two_s_values", "nsites_values"}


def _suite_overrides(name, args):
    overrides = {}
    for cli_key, param in _SUITE_PARAMS[name].items():
        value = getattr(args, cli_key)
        if value is None:
            continue
        overrides[param] = (
            tuple(range(1, value + 1)) if param in _GRID_PARAMS else value
        )
    return overrides


def cmd_verify(args, out) -> int:
    names = sorted(verify.SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        violations = verify.run_suite(name, **_suite_overrides(name, args))
        out.write(f"{name}: {len(violations)} violations\n")
        if violations:
            out.write(f"first witness: {json.dumps(violations[0], sort_keys=True)}\n")
            failed = True
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_bench(args, out) -> int:
    ranks = [int(t) for t in args.r.split(",")]
    degrees = [int(t) for t in args.twoS.split(",")]
    site_counts = [int(t) for t in args.L.split(",")]
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["r", "twoS", "L", "backend", "queries", "seconds"])
    for rank in ranks:
        for two_s in degrees:
            for nsites in site_counts:
                spins = (two_s,) * nsites
                queries = list(occupancy.standard_m_vectors(rank, two_s * nsites))
                for backend in ("dp", "poly"):
                    best = None
                    for _ in range(args.repeat):
                        occupancy.clear_caches()
                        start = time.perf_counter()
                        for m_vec in queries:
                            occupancy.occupancy_coefficient(m_vec, spins, backend)
                        elapsed = time.perf_counter() - start
                        best = elapsed if best is None else min(best, elapsed)
                    writer.writerow(
                        [rank, two_s, nsites, backend, len(queries), f"{best:.6f}"]
                    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tensormult",
        description="Exact tensor-power multiplicities via shift operators on occupancy counts",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, table=True):
        p.add_argument("--twoS", required=True, help="degree 2s, or a comma list per factor")
        p.add_argument("--L", type=int, help="number of tensor factors")
        p.add_argument("--backend", choices=("dp", "poly", "both"), default="poly")
        p.add_argument("--format", choices=("json", "tsv"), default="json")
        p.add_argument("--output", help="write to this path instead of stdout")
        p.add_argument("--jobs", type=int, default=_default_jobs())
        if table:
            p.add_argument("--table", action="store_true", help="emit the full table")

    p = sub.add_parser("multiplicity", help="irreducible multiplicities in a tensor power")
    p.add_argument("--algebra", required=True, help="ambient algebra, e.g. A2")
    p.add_argument("--lambda", dest="lambda", help='target diagram, e.g. "3,2,1"')
    p.add_argument("--check", action="store_true", help="cross-check against the oracle")
    common(p)
    p.set_defaults(func=cmd_multiplicity)

    p = sub.add_parser("branch", help="restriction multiplicities to a subalgebra")
    p.add_argument("--algebra", required=True)
    p.add_argument("--roots", required=True, help='e.g. "L1-L3,L3-L4" or "a1+a2,a3"')
    p.add_argument("--rows", help="ambient row sequence of the target, e.g. 5,0,1")
    common(p)
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("super", help="hook-algebra multiplicities and restrictions")
    p.add_argument("--shape", required=True, help="hook shape m,n")
    p.add_argument("--lambda", dest="lambda", help="target hook diagram")
    p.add_argument("--M", help="target weight vector, e.g. 3,1")
    p.add_argument("--roots", help="restrict to this closed root subset")
    p.add_argument("--check", action="store_true")
    common(p)
    p.set_defaults(func=cmd_super)

    p = sub.add_parser("occupancy", help="restricted occupancy counts")
    p.add_argument("--algebra", required=True)
    p.add_argument("--M", help="weight vector, e.g. 3,1")
    common(p)
    p.set_defaults(func=cmd_occupancy)

    p = sub.add_parser("verify", help="run cross-validation suites")
    p.add_argument("--suite", default="all", choices=sorted(verify.SUITES) + ["all"])
    p.add_argument("--r", type=int, help="cap the rank grid")
    p.add_argument("--twoS", type=int, help="cap the degree grid")
    p.add_argument("--L", type=int, help="cap the factor-count grid")
    p.add_argument("--output", help="write to this path instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the lattice and polynomial backends")
    p.add_argument("--r", default="1,2,3")
    p.add_argument("--twoS", default="1,2")
    p.add_argument("--L", default="4,6")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--output", help="write CSV to this path instead of stdout")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    buffer = io.StringIO()
    try:
        status = args.func(args, buffer)
    except (TensormultError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = buffer.getvalue()
    if getattr(args, "output", None):
        with open(args.output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
