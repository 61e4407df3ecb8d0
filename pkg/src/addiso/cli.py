"""Command-line entry point.

Exit codes: 0 success, 1 a verification failed (counterexample on stderr),
2 invalid input, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import itertools
import os
import random
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence

from .characters import (
    coordinate_weight_identity,
    diagram_commutes,
    weight_representation_check,
)
from .codes import (
    GenMatrix,
    check_dim_sum,
    codewords,
    space_tuple,
    weight_distribution,
)
from .errors import AddisoError, BudgetExceededError, TooLargeError, VerificationError
from .gf_tower import FieldPair, format_field, make_field_pair, parse_field
from .isometry import (
    image_space_tuple,
    is_extendible_bruteforce,
    is_extendible_tuples,
    is_isometry_criterion,
    is_isometry_direct,
)
from .kspace import all_vectors, full_space, rank
from .solutions import (
    build_counterexample,
    check_covering_bound,
    classify_min_coverings,
    search_nontrivial,
    sweep_theorem,
)
from .textio import format_map, format_report, parse_code, parse_map

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    args: argparse.Namespace
    machine: bool
    threads: int


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise _ArgError(message)


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def _tuple_lines(name: str, T) -> list[str]:
    return [f"  {name}_{i + 1} = {V}   (dim {V.dim})" for i, V in enumerate(T)]


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


# --- subcommands -----------------------------------------------------------------

def cmd_field_info(cfg: RunConfig) -> str:
    fp = parse_field(cfg.args.field)
    K, L = fp.K, fp.L
    out = [f"field {format_field(fp)}", f"p {fp.p}", f"d {fp.d}", f"q {fp.q}", f"n {fp.n}",
           f"size_L {L.size}",
           "modulus_g " + ",".join(map(str, K.modulus)),
           "modulus_h " + ",".join(map(str, L.modulus))]
    if L.size <= 64:
        for a in L.elements():
            out.append(f"element {a} [{','.join(map(str, fp.coords(a)))}]")
    return "\n".join(out) + "\n"


def cmd_analyze_code(cfg: RunConfig) -> str:
    A = parse_code(_read(cfg.args.file))
    V = space_tuple(A)
    dist = weight_distribution(A)
    dim_ok = check_dim_sum(A)
    if not dim_ok:
        raise VerificationError("dim C != dim(sum of column spaces)")
    if cfg.machine:
        lines = [f"field {format_field(A.fields)}", f"k {A.k}", f"m {A.m}",
                 f"codewords {len(codewords(A))}",
                 "weight_distribution " + " ".join(map(str, dist)),
                 f"dim_sum_check {_yes(dim_ok)}"]
        lines += [f"space {i + 1} {S}" for i, S in enumerate(V)]
        return "\n".join(lines) + "\n"
    lines = [f"code over {format_field(A.fields)}: k = {A.k}, m = {A.m}, {len(codewords(A))} codewords",
             "tuple of spaces:"] + _tuple_lines("V", V)
    lines.append("weight distribution: " + ", ".join(f"{w}:{c}" for w, c in enumerate(dist) if c))
    lines.append(f"dim C = dim(V_1 + ... + V_m): {_yes(dim_ok)}")
    return "\n".join(lines) + "\n"


def cmd_check_map(cfg: RunConfig) -> str:
    f = parse_map(_read(cfg.args.file))
    direct = is_isometry_direct(f)
    crit = is_isometry_criterion(f)
    tuples = is_extendible_tuples(f)
    witness = is_extendible_bruteforce(f)
    if direct != crit or tuples != (witness is not None):
        raise VerificationError("the two methods disagree", format_map(f))
    V, U = space_tuple(f.source), image_space_tuple(f)
    if cfg.machine:
        lines = [f"isometry_direct {_yes(direct)}", f"isometry_criterion {_yes(crit)}",
                 f"extendible_tuples {_yes(tuples)}",
                 f"extendible_bruteforce {_yes(witness is not None)}"]
        lines += [f"V {i + 1} {S}" for i, S in enumerate(V)]
        lines += [f"U {i + 1} {S}" for i, S in enumerate(U)]
        if witness is not None:
            lines.append("witness_perm " + " ".join(str(j + 1) for j in witness.perm))
            for i, g in enumerate(witness.maps):
                lines.append(f"witness_g {i + 1} " + ";".join(",".join(map(str, r)) for r in g))
        return "\n".join(lines) + "\n"
    lines = ["tuple of spaces of A:"] + _tuple_lines("V", V)
    lines += ["tuple of spaces of A':"] + _tuple_lines("U", U)
    lines.append(f"isometry (weights): {_yes(direct)}")
    lines.append(f"isometry (indicator sums): {_yes(crit)}")
    lines.append(f"extendible (tuples equivalent): {_yes(tuples)}")
    lines.append(f"extendible (monomial search): {_yes(witness is not None)}")
    if witness is not None:
        lines.append("witness: perm = (" + " ".join(str(j + 1) for j in witness.perm) + ")")
        for i, g in enumerate(witness.maps):
            lines.append(f"  g_{i + 1} = {[list(r) for r in g]}")
    lines.append(f"isometry: {_yes(direct)}; extendible: {_yes(tuples)}")
    return "\n".join(lines) + "\n"


def _character_fields() -> list[FieldPair]:
    """Every field pair with |L| <= 64 and p <= 13."""
    out = []
    for p in (2, 3, 5, 7, 11, 13):
        for d in range(1, 7):
            for n in range(1, 7):
                if p ** (d * n) <= 64:
                    out.append(make_field_pair(p, d, n))
    return out


def random_gen_matrix(fp: FieldPair, k: int, m: int, rng: random.Random) -> GenMatrix:
    while True:
        rows = [[rng.randrange(fp.L.size) for _ in range(m)] for _ in range(k)]
        flat = [[c for a in r for c in fp.coords(a)] for r in rows]
        if rank(flat, fp.K, fp.n * m) == k:
            return GenMatrix.from_rows(fp, rows, m)


def cmd_verify_characters(cfg: RunConfig) -> str:
    rng = random.Random(cfg.args.seed)
    results: dict[str, list[int]] = {}
    failures = []

    def record(name: str, ok: bool, what: Callable[[], str]) -> None:
        tally = results.setdefault(name, [0, 0])
        tally[0 if ok else 1] += 1
        if not ok and len(failures) < 5:
            failures.append(f"{name}: {what()}")

    for fp in _character_fields():
        for a in fp.L.elements():
            record("coordinate_weight", coordinate_weight_identity(a, fp),
                   lambda: f"{format_field(fp)} a={a}")
    fp4 = make_field_pair(2, 1, 2)
    ex2 = GenMatrix.from_rows(fp4, [(1, 1, 0), (2, 2, 0), (1, 0, 1)])
    for u in all_vectors(3, 2):
        record("weight_representation_example", weight_representation_check(ex2, u),
               lambda: f"u={u}")
    grid = [make_field_pair(2, 1, 2), make_field_pair(3, 1, 2)]
    for _ in range(cfg.args.samples):
        fp = rng.choice(grid)
        k, m = rng.randint(1, 3), rng.randint(1, 4)
        k = min(k, fp.n * m)
        A = random_gen_matrix(fp, k, m, rng)
        u = tuple(rng.randrange(fp.q) for _ in range(k))
        record("weight_representation_random", weight_representation_check(A, u),
               lambda: f"A={A.rows} u={u}")
    fp16 = make_field_pair(2, 2, 2)
    for _ in range(max(1, cfg.args.samples // 10)):
        A = random_gen_matrix(fp16, rng.randint(1, 2), rng.randint(1, 3), rng)
        u = tuple(rng.randrange(4) for _ in range(A.k))
        record("weight_representation_alt_character",
               weight_representation_check(A, u, scale=fp16.K.generator),
               lambda: f"A={A.rows} u={u}")
    for fp in (make_field_pair(2, 1, 1), make_field_pair(2, 1, 2)):
        for k in (1, 2):
            for M in itertools.product(list(all_vectors(fp.n, 2)), repeat=k):
                record("diagram", diagram_commutes(M, fp), lambda: f"M={M}")
    lines = [f"{name} pass {ok} fail {bad}" for name, (ok, bad) in results.items()]
    text = "\n".join(lines) + "\n"
    if any(bad for _, bad in results.values()):
        raise VerificationError("character identity failed", text + "\n".join(failures))
    return text


def cmd_counterexample(cfg: RunConfig) -> str:
    fp = parse_field(cfg.args.field)
    return format_map(build_counterexample(fp, cfg.args.m))


def cmd_coverings(cfg: RunConfig) -> str:
    from .gf_tower import field_of_order

    K = field_of_order(cfg.args.q)
    k = cfg.args.dim
    bound = check_covering_bound(k, K)
    lines = [f"q {K.size}", f"dim {k}",
             f"no_cover_by_q_proper_subspaces {_yes(bound.holds)}",
             f"multisets_checked {bound.checked}"]
    if not bound.holds:
        raise VerificationError("K^k is covered by q proper subspaces",
                                " ".join(str(W) for W in bound.cover or ()))
    if k >= 2:
        covers = classify_min_coverings(full_space(K, k))
        lines.append(f"minimal_coverings {len(covers)}")
        for c in covers:
            lines.append(f"covering S={c.S} : " + " ".join(str(W) for W in c.spaces))
    return "\n".join(lines) + "\n"


def cmd_solutions(cfg: RunConfig) -> str:
    a = cfg.args
    pairs = search_nontrivial(a.k, a.m, a.q, dim_hypothesis=a.dim_hypothesis)
    lines = [f"q {a.q}", f"k {a.k}", f"m {a.m}", f"dim_hypothesis {_yes(a.dim_hypothesis)}",
             f"nontrivial {len(pairs)}"]
    for P in pairs:
        lines.append("solution U: " + " ".join(str(W) for W in P.U.multiset())
                     + " | V: " + " ".join(str(W) for W in P.V.multiset()))
    return "\n".join(lines) + "\n"


def cmd_sweep(cfg: RunConfig) -> str:
    a = cfg.args
    fp = parse_field(a.field)
    report = sweep_theorem(fp, a.m, a.max_k, sample_oracle=a.sample_oracle, seed=a.seed,
                           dedupe=a.dedupe, budget=a.budget, workers=cfg.threads,
                           witness_cap=a.witnesses)
    return format_report(report)


COMMANDS: dict[str, Callable[[RunConfig], str]] = {
    "field-info": cmd_field_info,
    "analyze-code": cmd_analyze_code,
    "check-map": cmd_check_map,
    "verify-characters": cmd_verify_characters,
    "counterexample": cmd_counterexample,
    "coverings": cmd_coverings,
    "solutions": cmd_solutions,
    "sweep": cmd_sweep,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="addiso", description="Additive code isometries and their extendibility.")
    parser.add_argument("--format", choices=("human", "machine"), default="human")
    parser.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("field-info", help="describe a field pair")
    p.add_argument("--field", required=True, help="descriptor such as GF(2)^2")

    p = sub.add_parser("analyze-code", help="tuple of spaces and weights of a code file")
    p.add_argument("file", help="code file, or - for stdin")

    p = sub.add_parser("check-map", help="isometry and extendibility of a map file")
    p.add_argument("file", help="map file, or - for stdin")

    p = sub.add_parser("verify-characters", help="check the character-sum identities")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    p = sub.add_parser("counterexample", help="emit an unextendible isometry as a map file")
    p.add_argument("--field", required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("coverings", help="covering bound and minimal coverings of K^dim")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--dim", type=int, required=True)

    p = sub.add_parser("solutions", help="exhaustive search for nontrivial solutions")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--dim-hypothesis", action="store_true")

    p = sub.add_parser("sweep", help="classify every isometry of every code")
    p.add_argument("--field", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--sample-oracle", type=int, default=0)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p.add_argument("--dedupe", action="store_true")
    p.add_argument("--budget", type=int, default=10 ** 9)
    p.add_argument("--witnesses", type=int, default=20, help="witnesses kept in the report")
    return parser


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Parse ``argv`` and dispatch; returns the exit code and the text to print."""
    try:
        args = build_parser().parse_args(list(argv))
    except _ArgError as e:
        return EXIT_INPUT, f"error: {e}\n"
    threads = max(1, int(os.environ.get("ADDISO_THREADS", "1") or 1))
    cfg = RunConfig(args.command, args, args.format == "machine", threads)
    try:
        return EXIT_OK, COMMANDS[cfg.command](cfg)
    except VerificationError as e:
        return EXIT_VERIFY, f"verification failed: {e}\n{e.dump}\n"
    except (BudgetExceededError, TooLargeError) as e:
        return EXIT_BUDGET, f"budget exceeded: {e}\n"
    except (AddisoError, OSError, ValueError) as e:
        return EXIT_INPUT, f"error: {e}\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    (sys.stdout if code == EXIT_OK else sys.stderr).write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
