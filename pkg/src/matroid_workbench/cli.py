"""Command-line interface.

One executable, nine subcommands, JSON on stdout. Diagnostics go to stderr
and errors map to fixed exit codes:

    2  bad input (parse failure, invalid descriptor/field/degree, loops
       where a loopless matroid is required)
    3  computation refused: budget exceeded
    4  internal invariant violation (always a bug in this package)
    1  verify-corpus found a failing check (not an error of the tool)

Output is deterministic for fixed input and flags; --jobs only changes the
schedule, never the bytes.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile

from . import corpus, localization, orlik_solomon, tutte, white
from .errors import (
    InternalInvariantViolation,
    InvalidField,
    InvalidInput,
    LooplessRequired,
    TooLarge,
    WorkbenchError,
)
from .fields import field_from_name
from .matroids import from_descriptor
from .polynomials import BivariatePoly


def _read_descriptor(path):
    if path == "-":
        raw = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise InvalidInput(f"cannot read {path}: {exc}") from exc
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"input is not valid JSON: {exc}") from exc
    return from_descriptor(obj)


def _emit(obj):
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


class FileTutteCache(tutte.TutteCache):
    """Tutte memo table persisted as one JSON file per canonical key.

    Filenames are content-addressed (sha256 of the key), so unrelated
    matroids never collide and warm runs are byte-identical to cold ones.
    """

    def __init__(self, directory):
        super().__init__()
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    def _path(self, key):
        return os.path.join(self.directory, hashlib.sha256(key).hexdigest() + ".json")

    def get(self, key):
        hit = super().get(key)
        if hit is not None:
            return hit
        path = self._path(key)
        if not os.path.exists(path):
            return None
        with open(path, "r", encoding="utf-8") as fh:
            poly = BivariatePoly.from_json(json.load(fh))
        super().put(key, poly)
        return poly

    def put(self, key, poly):
        super().put(key, poly)
        path = self._path(key)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(poly.to_json(), fh)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def _cmd_tutte(args):
    M = _read_descriptor(args.input)
    cache = FileTutteCache(args.cache) if args.cache else None
    poly = tutte.tutte_dc(M, cache)
    _emit(poly.to_json())


def _cmd_charpoly(args):
    M = _read_descriptor(args.input)
    t = tutte.tutte_sum(M)
    _emit(
        {
            "charpoly": tutte.char_poly(M, t).to_json(),
            "reduced_charpoly": tutte.reduced_char_poly(M, t).to_json(),
        }
    )


def _cmd_hlv(args):
    M = _read_descriptor(args.input)
    _emit(tutte.h_polynomial(M).to_json(xname="u", yname="v"))


def _cmd_os_dims(args):
    M = _read_descriptor(args.input)
    field = field_from_name(args.field)
    _emit(orlik_solomon.os_dimensions(M, field))


def _cmd_os_basis(args):
    M = _read_descriptor(args.input)
    field = field_from_name(args.field)
    space = orlik_solomon.os_space(M, args.degree, field)
    _emit(
        {
            "degree": space.degree,
            "field": field.name,
            "dimension": space.dimension,
            "nbc": [list(s) for s in space.nbc],
        }
    )


def _cmd_reduced_os_basis(args):
    M = _read_descriptor(args.input)
    field = field_from_name(args.field)
    basis = orlik_solomon.reduced_nbc_basis(M, args.degree, field)
    _emit(
        {
            "degree": basis.degree,
            "field": field.name,
            "dimension": basis.dimension,
            "index_sets": [list(s) for s in basis.index_sets],
        }
    )


def _cmd_euler_table(args):
    M = _read_descriptor(args.input)
    budget = args.budget if args.budget else localization.DEFAULT_MAX_POINTS
    table = localization.euler_table(M, max_points=budget, jobs=args.jobs)
    matches = tutte.h_matrix(M) == table
    if not matches:
        raise InternalInvariantViolation(
            "euler table disagrees with the h polynomial"
        )
    _emit({"table": table, "matches_h_polynomial": matches})


def _cmd_white_check(args):
    M = _read_descriptor(args.input)
    budget = args.budget if args.budget else white.DEFAULT_BUDGET
    report = white.check_degree(M, args.degree, budget=budget, jobs=args.jobs)
    _emit(report)


def _cmd_verify_corpus(args):
    report = corpus.verify_corpus(jobs=args.jobs)
    _emit(report)
    return 0 if report["all_pass"] else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="matroid-workbench",
        description="Exact matroid invariants: Tutte/characteristic/h "
        "polynomials, Orlik-Solomon bases, Euler tables by fixed-point "
        "localization, and toric quadric-generation checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, helptext, degree=None, field=False, cache=False):
        p = sub.add_parser(name, help=helptext)
        p.set_defaults(fn=fn)
        if name != "verify-corpus":
            p.add_argument(
                "--input",
                default="-",
                help="matroid descriptor JSON file, or - for stdin (default)",
            )
        if field:
            p.add_argument("--field", default="Q", help="Q or GF(p) (default Q)")
        if degree == "required":
            p.add_argument("--degree", type=int, required=True, help="degree k")
        elif isinstance(degree, int):
            p.add_argument(
                "--degree", type=int, default=degree,
                help=f"degree (default {degree})",
            )
        if cache:
            p.add_argument("--cache", help="directory for persistent memo tables")
        p.add_argument(
            "--budget",
            type=int,
            default=0,
            help="override the computation budget (fixed points / monomials)",
        )
        p.add_argument(
            "--jobs", type=int, default=1, help="worker threads (output-stable)"
        )
        return p

    add("tutte", _cmd_tutte, "Tutte polynomial by deletion-contraction", cache=True)
    add("charpoly", _cmd_charpoly, "characteristic polynomial and its reduction")
    add("hlv", _cmd_hlv, "two-variable h polynomial")
    add("os-dims", _cmd_os_dims, "Orlik-Solomon dimensions by degree", field=True)
    add("os-basis", _cmd_os_basis, "nbc monomial basis in one degree",
        degree="required", field=True)
    add("reduced-os-basis", _cmd_reduced_os_basis,
        "reduced nbc basis in one degree", degree="required", field=True)
    add("euler-table", _cmd_euler_table,
        "Euler characteristic table by fixed-point localization")
    add("white-check", _cmd_white_check,
        "toric fiber connectivity in one degree", degree=3)
    add("verify-corpus", _cmd_verify_corpus,
        "recompute every corpus expected block and report pass/fail")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rc = args.fn(args)
        return 0 if rc is None else rc
    except (InvalidInput, InvalidField, LooplessRequired) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TooLarge as exc:
        print(f"too large: {exc}", file=sys.stderr)
        return 3
    except InternalInvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 4
    except WorkbenchError as exc:  # future error kinds default to bad input
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main(argv=sys.argv[1:]))
