"""Command-line front end.

Commands read one JSON spec document from a file (or - for stdin):

    {"family": "double", "p": 3, "n": 4, "nPrime": 2,
     "g": [1, 1, 1], "gPrime": [-1, 1], "m": 4}

Coefficient arrays are lowest degree first; negative integers are reduced
mod p on load.  An optional "extension" key (modulus coefficients) makes
the base field GF(p^k), in which case coefficients may be ints or
coefficient arrays.  Unknown keys are rejected.

Exit codes: 0 success, 1 invalid input, 2 internal disagreement (a formula
contradicting the elimination oracle, which would be a library bug).
"""

from __future__ import annotations

import argparse
import json
import sys

from .circulant import CirculantSpec, DoubleCirculantSpec, MultiCirculantSpec
from .codes import (
    CyclicCodeSpec,
    DoubleCyclicSpec,
    QC15Spec,
    cyclic_generator,
    double_cyclic_generator,
    qc15_generator,
)
from .errors import CircrankError, InternalCheckError, SpecError
from .field import ExtField, PrimeField
from .poly import Poly
from .rank import rank_circulant, rank_double, rank_multiple
from .selftest import run_selftest
from .spectra import (
    kernel_basis,
    verify_diagonalization,
    verify_double_eigen_identity,
    verify_eigen_identity,
)

_KEYS = {
    "circulant": {"family", "p", "extension", "n", "g", "m"},
    "double": {"family", "p", "extension", "n", "nPrime", "g", "gPrime", "m"},
    "multiple": {"family", "p", "extension", "blocks", "m"},
    "cyclic": {"family", "p", "extension", "n", "g"},
    "qc15": {"family", "p", "extension", "n", "g", "gPrime"},
    "doubleCyclic": {"family", "p", "extension", "n", "nPrime", "g", "gPrime"},
}

_REQUIRED = {
    "circulant": {"n", "g"},
    "double": {"n", "nPrime", "g", "gPrime"},
    "multiple": {"blocks"},
    "cyclic": {"n", "g"},
    "qc15": {"n", "g", "gPrime"},
    "doubleCyclic": {"n", "nPrime", "g", "gPrime"},
}


def _load_doc(path: str) -> dict:
    try:
        if path == "-":
            doc = json.load(sys.stdin)
        else:
            with open(path, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SpecError(f"cannot read spec document: {exc}") from exc
    if not isinstance(doc, dict):
        raise SpecError("spec document must be a JSON object")
    return doc


def _field_of(doc: dict):
    p = doc.get("p")
    if not isinstance(p, int):
        raise SpecError("'p' must be an integer prime")
    try:
        base = PrimeField(p)
    except ValueError as exc:
        raise SpecError(str(exc)) from exc
    ext = doc.get("extension")
    if ext is None:
        return base
    if not isinstance(ext, list) or not all(isinstance(c, int) for c in ext):
        raise SpecError("'extension' must be a list of modulus coefficients")
    try:
        return ExtField(base, ext)
    except ValueError as exc:
        raise SpecError(str(exc)) from exc


def _poly_of(ctx, value, key: str) -> Poly:
    if not isinstance(value, list):
        raise SpecError(f"'{key}' must be a coefficient array")
    try:
        if ctx.is_prime_field:
            if not all(isinstance(c, int) for c in value):
                raise SpecError(f"'{key}' must hold integers")
            return Poly.from_ints(ctx, value)
        return Poly.from_elems(ctx, [ctx.elem_from_json(c) for c in value])
    except (ValueError, SpecError) as exc:
        raise SpecError(f"bad '{key}': {exc}") from exc


def _int_of(doc: dict, key: str) -> int:
    v = doc.get(key)
    if not isinstance(v, int):
        raise SpecError(f"'{key}' must be an integer")
    return v


def _validate_keys(doc: dict, allowed_families) -> str:
    family = doc.get("family")
    if family not in allowed_families:
        raise SpecError(f"'family' must be one of {sorted(allowed_families)}")
    unknown = set(doc) - _KEYS[family]
    if unknown:
        raise SpecError(f"unknown keys for family {family}: {sorted(unknown)}")
    missing = _REQUIRED[family] - set(doc)
    if missing:
        raise SpecError(f"missing keys for family {family}: {sorted(missing)}")
    return family


def _wrap_spec(build):
    try:
        return build()
    except CircrankError:
        raise
    except (TypeError, ValueError) as exc:
        raise SpecError(str(exc)) from exc


def _dump(obj) -> None:
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_rank(args) -> int:
    doc = _load_doc(args.spec)
    family = _validate_keys(doc, ("circulant", "double", "multiple"))
    ctx = _field_of(doc)
    with_oracle = not args.no_oracle
    if family == "circulant":
        n = _int_of(doc, "n")
        m = doc.get("m", n)
        spec = _wrap_spec(lambda: CirculantSpec(_poly_of(ctx, doc["g"], "g"), n, _as_m(m)))
        report = rank_circulant(spec, with_oracle=with_oracle)
    elif family == "double":
        n, n_p = _int_of(doc, "n"), _int_of(doc, "nPrime")
        m = doc.get("m", n + n_p)
        spec = _wrap_spec(
            lambda: DoubleCirculantSpec(
                _poly_of(ctx, doc["g"], "g"), n,
                _poly_of(ctx, doc["gPrime"], "gPrime"), n_p, _as_m(m),
            )
        )
        report = rank_double(spec, with_oracle=with_oracle)
    else:
        blocks = doc.get("blocks")
        if not isinstance(blocks, list) or not blocks:
            raise SpecError("'blocks' must be a nonempty list of {g, n} objects")
        parsed = []
        for i, blk in enumerate(blocks):
            if not isinstance(blk, dict) or set(blk) != {"g", "n"}:
                raise SpecError(f"block {i} must be an object with exactly 'g' and 'n'")
            parsed.append((_poly_of(ctx, blk["g"], f"blocks[{i}].g"), _int_of(blk, "n")))
        m = doc.get("m", sum(n for _, n in parsed))
        spec = _wrap_spec(lambda: MultiCirculantSpec(tuple(parsed), _as_m(m)))
        report = rank_multiple(spec, with_oracle=with_oracle)
    _dump(report.to_json_dict(timings=args.timings))
    return 0 if report.agrees in (True, None) else 2


def _as_m(m) -> int:
    if not isinstance(m, int):
        raise SpecError("'m' must be an integer")
    return m


def cmd_genmat(args) -> int:
    doc = _load_doc(args.spec)
    family = _validate_keys(doc, ("cyclic", "qc15", "doubleCyclic"))
    ctx = _field_of(doc)
    n = _int_of(doc, "n")
    g = _poly_of(ctx, doc["g"], "g")
    n_p = None
    gp = None
    if family == "cyclic":
        gen = _wrap_spec(lambda: cyclic_generator(CyclicCodeSpec(g, n)))
    elif family == "qc15":
        gp = _poly_of(ctx, doc["gPrime"], "gPrime")
        gen = _wrap_spec(lambda: qc15_generator(QC15Spec(g, n, gp)))
        n_p = n // 2
    else:
        n_p = _int_of(doc, "nPrime")
        gp = _poly_of(ctx, doc["gPrime"], "gPrime")
        gen = _wrap_spec(lambda: double_cyclic_generator(DoubleCyclicSpec(g, n, gp, n_p)))
    if args.pretty:
        sys.stdout.write(_aligned(gen.matrix) + "\n")
        return 0
    out = {
        "family": family,
        "p": ctx.char,
        "n": n,
        "nPrime": n_p,
        "g": g.to_json(),
        "gPrime": gp.to_json() if gp is not None else None,
        "r": gen.dimension,
        "generator": gen.matrix.to_json(),
    }
    if not ctx.is_prime_field:
        out["extension"] = list(ctx.mod_coeffs)
    _dump(out)
    return 0


def _aligned(matrix) -> str:
    cells = [[str(matrix.entry(i, j)) for j in range(matrix.cols)] for i in range(matrix.rows)]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def cmd_kernel(args) -> int:
    doc = _load_doc(args.spec)
    _validate_keys(doc, ("double",))
    ctx = _field_of(doc)
    n, n_p = _int_of(doc, "n"), _int_of(doc, "nPrime")
    m = doc.get("m", n + n_p)
    spec = _wrap_spec(
        lambda: DoubleCirculantSpec(
            _poly_of(ctx, doc["g"], "g"), n,
            _poly_of(ctx, doc["gPrime"], "gPrime"), n_p, _as_m(m),
        )
    )
    basis = kernel_basis(spec)
    _dump(basis.to_json_dict())
    return 0


def cmd_verify(args) -> int:
    doc = _load_doc(args.spec)
    family = _validate_keys(doc, ("circulant", "double"))
    ctx = _field_of(doc)
    if family == "circulant":
        n = _int_of(doc, "n")
        m = doc.get("m", n)
        spec = _wrap_spec(lambda: CirculantSpec(_poly_of(ctx, doc["g"], "g"), n, _as_m(m)))
        eigen = verify_eigen_identity(spec)
    else:
        n, n_p = _int_of(doc, "n"), _int_of(doc, "nPrime")
        m = doc.get("m", n + n_p)
        spec = _wrap_spec(
            lambda: DoubleCirculantSpec(
                _poly_of(ctx, doc["g"], "g"), n,
                _poly_of(ctx, doc["gPrime"], "gPrime"), n_p, _as_m(m),
            )
        )
        eigen = verify_double_eigen_identity(spec)
    diag = verify_diagonalization(spec)
    _dump({"family": family, "eigenIdentity": eigen, "diagonalization": diag})
    return 0 if (eigen and diag) else 2


def cmd_selftest(args) -> int:
    return run_selftest(args.scale)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circrank",
        description="Exact circulant-matrix ranks, kernels and code generator "
        "matrices over finite fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rank = sub.add_parser("rank", help="closed-form rank with elimination cross-check")
    p_rank.add_argument("spec", help="JSON spec file, or - for stdin")
    p_rank.add_argument("--no-oracle", action="store_true", help="skip the elimination oracle")
    p_rank.add_argument("--timings", action="store_true", help="include formula/oracle timings")
    p_rank.set_defaults(func=cmd_rank)

    p_gen = sub.add_parser("genmat", help="generator matrix for a code family")
    p_gen.add_argument("spec", help="JSON spec file, or - for stdin")
    p_gen.add_argument("--pretty", action="store_true", help="aligned text matrix instead of JSON")
    p_gen.set_defaults(func=cmd_genmat)

    p_ker = sub.add_parser("kernel", help="tagged null-space basis of the square double circulant")
    p_ker.add_argument("spec", help="JSON spec file, or - for stdin")
    p_ker.set_defaults(func=cmd_kernel)

    p_ver = sub.add_parser("verify", help="eigen-identity and diagonalization checks")
    p_ver.add_argument("spec", help="JSON spec file, or - for stdin")
    p_ver.set_defaults(func=cmd_verify)

    p_self = sub.add_parser("selftest", help="run the bundled verification sweeps")
    p_self.add_argument("--scale", choices=("small", "full"), default="small")
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 2
    except CircrankError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
