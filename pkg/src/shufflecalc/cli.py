"""Command-line surface: verification suites, enumeration dumps, exports.

Every run ends with a CommandReport serialized as JSON.  Reports go to
stdout, except for stream commands writing their data to stdout (no --out),
which print the report on stderr.  Exit codes: 0 ok, 3 mismatch, 4 error
(argparse itself uses 2 for usage problems).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass

from . import bibrick as bb
from . import operators as ops
from . import parking as pk
from .macdonald import macdonald as macdonald_poly
from .macdonald import nabla
from .partitions import format_parts, parse_composition, parse_partition
from .rings import PolyQT
from .symfunc import SymFunc, convert, fqsym_to_sym

EXIT_OK = 0
EXIT_MISMATCH = 3
EXIT_ERROR = 4


@dataclass
class CommandReport:
    command: str
    status: str                   # ok | mismatch | error
    witness: object = None        # difference SymFunc JSON or message
    elapsed: float = 0.0

    def to_json(self):
        out = {"command": self.command, "status": self.status,
               "elapsed_seconds": round(self.elapsed, 3)}
        if self.status == "mismatch" and self.witness is None:
            raise ValueError("mismatch reports need a witness")
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _diff_witness(diff: SymFunc):
    return diff.to_json()


# ---------------------------------------------------------------------------
# verify subcommands
# ---------------------------------------------------------------------------

def cmd_verify_hook(n, k, guard=None):
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    rhs = ops.theorem_rhs(n, k, guard=guard)
    target = convert(SymFunc.single("m", (n,) + (1,) * k), "s", guard=guard)
    target = target.as_laurent()
    if (n - 1) % 2:
        target = -target
    diff = rhs - target
    return diff.is_zero(), None if diff.is_zero() else _diff_witness(diff)


def cmd_verify_corollary(n, k, guard=None):
    if n < 2 or k < 1:
        raise ValueError("need n >= 2 and k >= 1")
    limit = 7 if guard is None else guard
    if n + k > limit:
        raise ValueError(f"n+k = {n + k} exceeds guard {limit}")
    lhs = pk.corollary_rhs(n, k, guard=limit).as_qt()
    rhs = convert(nabla(SymFunc.single("m", (n,) + (1,) * k), guard=limit), "s")
    if (n - 1) % 2:
        rhs = -rhs
    diff = lhs - rhs.as_qt()
    return diff.is_zero(), None if diff.is_zero() else _diff_witness(diff)


def cmd_verify_shuffle(alpha, guard=None):
    alpha = tuple(alpha)
    limit = 6 if guard is None else guard
    if sum(alpha) > limit:
        raise ValueError(f"|alpha| = {sum(alpha)} exceeds guard {limit}")
    lhs = convert(nabla(ops.c_alpha_one(alpha), guard=limit), "m").as_qt()
    rhs = fqsym_to_sym(pk.shuffle_sum(alpha, guard=limit)).as_qt()
    diff = lhs - rhs
    return diff.is_zero(), None if diff.is_zero() else _diff_witness(diff)


def cmd_verify_en(n, guard=None):
    v = ops.en_identity(n, guard=guard)
    return v.ok, None if v.ok else _diff_witness(v.witness)


def cmd_verify_pn(n, reading, guard=None):
    v = ops.pn_identity(n, reading, guard=guard)
    return v.ok, None if v.ok else _diff_witness(v.witness)


def cmd_bibrick_verify_q1(mu, guard=None):
    is_hook = len(mu) <= 1 or all(p == 1 for p in mu[1:])
    limit = (8 if is_hook else 7) if guard is None else guard
    if sum(mu) > limit:
        raise ValueError(f"|mu| = {sum(mu)} exceeds guard {limit}")
    v = bb.verify_q1(mu, guard=limit)
    return v.ok, None if v.ok else _diff_witness(v.witness)


# ---------------------------------------------------------------------------
# compute subcommands
# ---------------------------------------------------------------------------

def cmd_nabla_m(mu, basis, guard=None):
    """nabla(m_mu) plus the uniform-sign probe on its Schur coefficients."""
    limit = 7 if guard is None else guard
    if sum(mu) > limit:
        raise ValueError(f"|mu| = {sum(mu)} exceeds guard {limit}")
    f = nabla(SymFunc.single("m", mu), guard=limit)
    schur = convert(f, "s")
    flip = (sum(mu) - len(mu)) % 2 == 1
    uniform = True
    for coeff in schur.terms.values():
        if isinstance(coeff, PolyQT):
            values = coeff.terms.values()
        elif isinstance(coeff, int):
            values = [coeff]
        else:                      # non-polynomial coefficient
            uniform = False
            continue
        if any((-c if flip else c) < 0 for c in values):
            uniform = False
    out = convert(f, basis) if basis != "m" else f
    payload = {"nabla_m": out.to_json(),
               "sign": -1 if flip else 1,
               "uniform_sign": uniform}
    return True, payload


def cmd_c_alpha(alpha, guard=None):
    from .config import check_degree
    check_degree(sum(alpha), guard)
    return True, {"c_alpha_one": ops.c_alpha_one(tuple(alpha)).to_json()}


def cmd_macdonald(mu, guard=None):
    limit = 7 if guard is None else guard
    if sum(mu) > limit:
        raise ValueError(f"|mu| = {sum(mu)} exceeds guard {limit}")
    return True, {"macdonald": macdonald_poly(tuple(mu)).to_json()}


# ---------------------------------------------------------------------------
# streams
# ---------------------------------------------------------------------------

PF_COLUMNS = ["n", "area_word", "cars", "area", "dinv", "sigma", "ides", "comp"]
BIBRICK_COLUMNS = ["mu", "alpha", "words", "stat"]


def _pf_row(pf):
    st = pk.statistics(pf)
    return {
        "n": pf.size,
        "area_word": " ".join(map(str, pf.path.area_word)),
        "cars": " ".join(map(str, pf.cars)),
        "area": st.area,
        "dinv": st.dinv,
        "sigma": " ".join(map(str, st.word)),
        "ides": " ".join(map(str, sorted(st.ides))),
        "comp": " ".join(map(str, st.comp)),
    }


def _bibrick_row(pi, stat=None):
    return {
        "mu": format_parts(pi.mu()),
        "alpha": format_parts(bb.alpha_of(pi)),
        "words": pi.text(),
        "stat": "" if stat is None else stat,
    }


def stream_pf_enumerate(n, guard=None):
    limit = 8 if guard is None else guard
    return [_pf_row(pf) for pf in pk.enumerate_pf(n, guard=limit)]


def stream_bibrick_enumerate(mu, alpha_filter=None, guard=None):
    limit = 8 if guard is None else guard
    rows = []
    for pi in bb.enumerate_bibrick(mu, guard=limit):
        if alpha_filter is not None and bb.alpha_of(pi) != alpha_filter:
            continue
        rows.append(_bibrick_row(pi))
    return rows


def stream_hook_construct(n, k, alpha):
    return [_bibrick_row(pi, stat) for pi, stat in bb.hook_construct(n, k, alpha)]


def _emit_stream(rows, columns, fmt, out_path):
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        data = buf.getvalue()
    else:
        data = json.dumps(rows, sort_keys=True, indent=None,
                          separators=(",", ":")) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(data)
        return False
    sys.stdout.write(data)
    return True


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"),
                        default=argparse.SUPPRESS)
    common.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS)
    common.add_argument("--guard", type=int, default=argparse.SUPPRESS,
                        help="degree guard override")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="seed for randomized suites (reserved)")

    parser = argparse.ArgumentParser(
        prog="shufflecalc",
        parents=[common],
        description="Exact checks for shuffle operators, nabla images, "
                    "parking functions and bi-brick permutations.")
    parser.set_defaults(format="json", out=None, guard=None, seed=None)
    top = parser.add_subparsers(dest="group", required=True)

    def leaf(group, name):
        return group.add_parser(name, parents=[common])

    verify = top.add_parser("verify").add_subparsers(dest="cmd", required=True)
    p = leaf(verify, "hook-theorem")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = leaf(verify, "corollary")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = leaf(verify, "shuffle")
    p.add_argument("--alpha", required=True)
    p = leaf(verify, "en")
    p.add_argument("--n", type=int, required=True)
    p = leaf(verify, "pn")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--reading", choices=("first-part", "last-part"),
                   default="first-part")

    compute = top.add_parser("compute").add_subparsers(dest="cmd", required=True)
    p = leaf(compute, "nabla-m")
    p.add_argument("--mu", required=True)
    p.add_argument("--basis", choices=("m", "h", "e", "s"), default="s")
    p = leaf(compute, "c-alpha")
    p.add_argument("--alpha", required=True)
    p = leaf(compute, "macdonald")
    p.add_argument("--mu", required=True)

    pf = top.add_parser("pf").add_subparsers(dest="cmd", required=True)
    p = leaf(pf, "enumerate")
    p.add_argument("--n", type=int, required=True)
    p = leaf(pf, "stats")
    p.add_argument("--pf", required=True, metavar="TEXT",
                   help='text form, e.g. "a=0,1,1;c=1,3,2"')

    bib = top.add_parser("bibrick").add_subparsers(dest="cmd", required=True)
    p = leaf(bib, "enumerate")
    p.add_argument("--mu", required=True)
    p.add_argument("--alpha", default=None, help="optional alpha filter")
    p = leaf(bib, "verify-q1")
    p.add_argument("--mu", required=True)
    p = leaf(bib, "hook-construct")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alpha", required=True)

    return parser


def _run(args):
    """Returns (status, witness, stream_to_stdout)."""
    guard = args.guard
    if args.group == "verify":
        if args.cmd == "hook-theorem":
            ok, witness = cmd_verify_hook(args.n, args.k, guard)
        elif args.cmd == "corollary":
            ok, witness = cmd_verify_corollary(args.n, args.k, guard)
        elif args.cmd == "shuffle":
            ok, witness = cmd_verify_shuffle(parse_composition(args.alpha), guard)
        elif args.cmd == "en":
            ok, witness = cmd_verify_en(args.n, guard)
        else:
            ok, witness = cmd_verify_pn(args.n, args.reading, guard)
        return ("ok" if ok else "mismatch"), witness, False
    if args.group == "compute":
        if args.cmd == "nabla-m":
            ok, payload = cmd_nabla_m(parse_partition(args.mu), args.basis, guard)
        elif args.cmd == "c-alpha":
            ok, payload = cmd_c_alpha(parse_composition(args.alpha), guard)
        else:
            ok, payload = cmd_macdonald(parse_partition(args.mu), guard)
        to_stdout = _emit_stream([payload], None, "json", args.out)
        return "ok", None, to_stdout
    if args.group == "pf":
        if args.cmd == "enumerate":
            rows = stream_pf_enumerate(args.n, guard)
        else:
            rows = [_pf_row(pk.ParkingFunction.from_text(args.pf))]
        to_stdout = _emit_stream(rows, PF_COLUMNS, args.format, args.out)
        return "ok", None, to_stdout
    # bibrick
    if args.cmd == "verify-q1":
        ok, witness = cmd_bibrick_verify_q1(parse_partition(args.mu), guard)
        return ("ok" if ok else "mismatch"), witness, False
    if args.cmd == "enumerate":
        alpha = parse_composition(args.alpha) if args.alpha else None
        rows = stream_bibrick_enumerate(parse_partition(args.mu), alpha, guard)
    else:
        rows = stream_hook_construct(args.n, args.k, parse_composition(args.alpha))
    to_stdout = _emit_stream(rows, BIBRICK_COLUMNS, args.format, args.out)
    return "ok", None, to_stdout


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    name = f"{args.group} {args.cmd}"
    started = time.monotonic()
    try:
        status, witness, stream_on_stdout = _run(args)
    except Exception as exc:   # precondition, guard, parse failures
        report = CommandReport(name, "error", f"{type(exc).__name__}: {exc}",
                               time.monotonic() - started)
        print(json.dumps(report.to_json(), sort_keys=True))
        return EXIT_ERROR
    report = CommandReport(name, status, witness, time.monotonic() - started)
    target = sys.stderr if stream_on_stdout else sys.stdout
    print(json.dumps(report.to_json(), sort_keys=True), file=target)
    return EXIT_OK if status == "ok" else EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
