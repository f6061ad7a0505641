"""Command-line front end: parse an instance file, run one operation, report.

An instance is a single self-describing TOML file; the fixtures/
directory holds worked examples of both finite-group encodings.
Reports go to stdout in text or json form, diagnostics to stderr, and
failures map onto stable exit codes:

    0  success
    1  internal failure, or verify/oracle-compare found a failing check
    2  parse or validation error
    3  mixed center, unsupported by the standard-subgroup format
    4  undetermined limit stage
    5  precondition violation (e.g. fitting on a disconnected instance)

File schema (all matrices are row lists):

    char = 0                      # 0 or a prime
    [lattice]
    rank = 1
    torsion = [4]                 # invariant factors, optional
    [finite]
    elements = ["e", "s"]         # with `table`, n x n of names
    table = [["e","s"],["s","e"]]
    # or instead: permutations = [[1,0,2], ...] acting on {0..m-1};
    # generator j is then addressed as "g<j>" in the action maps
    [action_on_lattice]
    s = [[-1]]                    # generator name -> integer matrix
    [lie]                         # optional; absent means L = 0
    dim = 3
    brackets = [[0, 1, 2, 1]]     # [i, j, k, c]: [e_i, e_j] = c e_k + ...
    weights = [[0], [0], [0]]     # one lattice vector per basis element
    [lie.action]                  # optional; generator name -> rational matrix
    s = [["1", "0", "0"], ...]

    faithful_dim = 3              # optional: declared faithful matrix degree

Rationals may be written as integers, exact floats, or "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

try:
    import tomllib as tomli
except ImportError:  # python < 3.11
    import tomli

from hypercenter.agmodel.bridge import to_finite
from hypercenter.agmodel.center import center, center_s
from hypercenter.agmodel.fitting import fitting, rad_u
from hypercenter.agmodel.lie import NilpotentLie
from hypercenter.agmodel.model import AlgGroupModel, StdSubgroup
from hypercenter.agmodel.series import (
    MIXED_CENTER,
    TERMINATED,
    UNDETERMINED_LIMIT,
    hypercenter,
    nilpotency_class,
    ucs,
    z_omega,
)
from hypercenter.errors import (
    HypercenterError,
    InputFormatError,
    MixedCenterUnsupported,
    NotConnected,
    PreconditionViolated,
    UndeterminedLimit,
)
from hypercenter.finitegrp.group import FiniteGroup
from hypercenter.verify.suites import CheckResult, bridge_compare, run_suite
from hypercenter.zlattice.fga import FgAbelian, Hom
from hypercenter.zlattice.ratlin import identity_rat, mat_product

_OPS = [
    "validate",
    "center",
    "ucs",
    "zomega",
    "hypercenter",
    "fitting",
    "rads",
    "center-s",
    "nilclass",
    "verify",
    "oracle-compare",
]


# -- input parsing -------------------------------------------------------------


def _need(doc: dict, key: str, where: str):
    if key not in doc:
        raise InputFormatError(f"{where}: missing key {key!r}")
    return doc[key]


def _as_frac(v, where: str) -> Fraction:
    if isinstance(v, bool):
        raise InputFormatError(f"{where}: expected a rational, got a boolean")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except (ValueError, ZeroDivisionError):
            raise InputFormatError(f"{where}: cannot read rational {v!r}") from None
    raise InputFormatError(f"{where}: cannot read rational {v!r}")


def _int_matrix(v, size: int, where: str) -> list[list[int]]:
    if not isinstance(v, list) or len(v) != size:
        raise InputFormatError(f"{where}: expected a {size}x{size} integer matrix")
    out = []
    for r, row in enumerate(v):
        if not isinstance(row, list) or len(row) != size:
            raise InputFormatError(f"{where}: row {r} must have {size} entries")
        for c in row:
            if not isinstance(c, int) or isinstance(c, bool):
                raise InputFormatError(f"{where}: row {r} holds a non-integer entry")
        out.append([int(c) for c in row])
    return out


def _rat_matrix(v, size: int, where: str) -> list[list[Fraction]]:
    if not isinstance(v, list) or len(v) != size:
        raise InputFormatError(f"{where}: expected a {size}x{size} rational matrix")
    out = []
    for r, row in enumerate(v):
        if not isinstance(row, list) or len(row) != size:
            raise InputFormatError(f"{where}: row {r} must have {size} entries")
        out.append([_as_frac(c, f"{where} row {r}") for c in row])
    return out


def _compose_perms(p: list[int], q: list[int]) -> tuple[int, ...]:
    return tuple(p[q[i]] for i in range(len(p)))


def _group_from_permutations(perms, where: str) -> tuple[FiniteGroup, dict[str, int]]:
    if not isinstance(perms, list) or not perms:
        raise InputFormatError(f"{where}: permutations must be a nonempty list")
    m = len(perms[0]) if isinstance(perms[0], list) else 0
    gens: list[list[int]] = []
    for j, p in enumerate(perms):
        if not isinstance(p, list) or sorted(p) != list(range(m)):
            raise InputFormatError(
                f"{where}: permutations[{j}] is not a permutation of 0..{m - 1}"
            )
        gens.append([int(i) for i in p])

    ident = tuple(range(m))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                prod = _compose_perms(list(e), g)
                if prod not in index:
                    index[prod] = len(elems)
                    elems.append(prod)
                    nxt.append(prod)
        frontier = nxt

    n = len(elems)
    table = [[index[_compose_perms(list(a), list(b))] for b in elems] for a in elems]
    grp = FiniteGroup(table, names=[f"p{i}" for i in range(n)])
    aliases = {f"g{j}": index[tuple(g)] for j, g in enumerate(gens)}
    return grp, aliases


def _group_from_table(tbl: dict, where: str) -> tuple[FiniteGroup, dict[str, int]]:
    names = _need(tbl, "elements", where)
    raw = _need(tbl, "table", where)
    if not isinstance(names, list) or not all(isinstance(s, str) for s in names):
        raise InputFormatError(f"{where}.elements: expected a list of names")
    idx = {s: i for i, s in enumerate(names)}
    if len(idx) != len(names):
        raise InputFormatError(f"{where}.elements: names must be distinct")
    n = len(names)
    if not isinstance(raw, list) or len(raw) != n:
        raise InputFormatError(f"{where}.table: expected {n} rows")
    table = []
    for r, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != n:
            raise InputFormatError(f"{where}.table: row {r} must have {n} entries")
        try:
            table.append([idx[s] for s in row])
        except KeyError as e:
            raise InputFormatError(f"{where}.table: row {r} names unknown element {e}") from None
    return FiniteGroup(table, names=list(names)), {}


def _close_action(grp: FiniteGroup, named: dict[int, object], compose, ident, kind: str):
    """Extend generator images to the whole group along the Cayley table."""
    if not named:
        # empty map: every element acts trivially
        return [ident for _ in range(grp.n)]
    acts = {int(grp.identity): ident}
    frontier = [int(grp.identity)]
    while frontier:
        nxt = []
        for g in frontier:
            for h, mh in named.items():
                c = int(grp.table[g, h])
                if c not in acts:
                    acts[c] = compose(acts[g], mh)
                    nxt.append(c)
        frontier = nxt
    if len(acts) != grp.n:
        raise InputFormatError(f"{kind}: the named generators do not generate the group")
    return [acts[i] for i in range(grp.n)]


def _resolve_names(keys, grp: FiniteGroup, aliases: dict[str, int], where: str) -> dict:
    idx = {s: i for i, s in enumerate(grp.names)}
    idx.update(aliases)
    out = {}
    for k in keys:
        if k not in idx:
            raise InputFormatError(f"{where}: unknown generator name {k!r}")
        out[k] = idx[k]
    return out


def parse_instance(doc: dict) -> tuple[AlgGroupModel, int | None]:
    """Build a validated model from a parsed instance document.

    Returns the model and the optional declared faithful matrix degree.
    """
    if not isinstance(doc, dict):
        raise InputFormatError("instance: top level must be a table")
    char = _need(doc, "char", "instance")
    if not isinstance(char, int) or isinstance(char, bool) or char < 0:
        raise InputFormatError("char: must be 0 or a prime")

    lat = _need(doc, "lattice", "instance")
    rank = _need(lat, "rank", "lattice")
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 0:
        raise InputFormatError("lattice.rank: must be a nonnegative integer")
    torsion = lat.get("torsion", [])
    if not isinstance(torsion, list) or not all(
        isinstance(d, int) and not isinstance(d, bool) and d >= 2 for d in torsion
    ):
        raise InputFormatError("lattice.torsion: invariant factors must be integers >= 2")
    x = FgAbelian(rank, tuple(torsion))

    fin = _need(doc, "finite", "instance")
    if not isinstance(fin, dict):
        raise InputFormatError("finite: expected a table")
    if "permutations" in fin:
        grp, aliases = _group_from_permutations(fin["permutations"], "finite")
    else:
        grp, aliases = _group_from_table(fin, "finite")

    raw_act = doc.get("action_on_lattice", {})
    if not isinstance(raw_act, dict):
        raise InputFormatError("action_on_lattice: expected a table of matrices")
    name_to_idx = _resolve_names(raw_act.keys(), grp, aliases, "action_on_lattice")
    named_homs = {
        name_to_idx[k]: Hom(x, x, _int_matrix(v, x.width, f"action_on_lattice.{k}"))
        for k, v in raw_act.items()
    }
    idn = int(grp.identity)
    if idn in named_homs and not named_homs[idn].is_identity():
        raise InputFormatError("action_on_lattice: the identity element must act trivially")
    action_x = _close_action(
        grp, named_homs, lambda a, b: a.compose(b), Hom.identity(x), "action_on_lattice"
    )

    lie_doc = doc.get("lie")
    if lie_doc is None:
        lie = NilpotentLie(0, [])
        weights: list[list[int]] = []
        faction = [[] for _ in range(grp.n)]
    else:
        if not isinstance(lie_doc, dict):
            raise InputFormatError("lie: expected a table")
        dim = _need(lie_doc, "dim", "lie")
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
            raise InputFormatError("lie.dim: must be a nonnegative integer")
        brackets = []
        for t, item in enumerate(lie_doc.get("brackets", [])):
            if not isinstance(item, list) or len(item) != 4:
                raise InputFormatError(f"lie.brackets[{t}]: expected [i, j, k, c]")
            i, j, k = item[0], item[1], item[2]
            for v in (i, j, k):
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < dim:
                    raise InputFormatError(f"lie.brackets[{t}]: index out of range")
            brackets.append((i, j, k, _as_frac(item[3], f"lie.brackets[{t}]")))
        lie = NilpotentLie(dim, brackets)
        raw_w = _need(lie_doc, "weights", "lie") if dim else lie_doc.get("weights", [])
        if not isinstance(raw_w, list) or len(raw_w) != dim:
            raise InputFormatError("lie.weights: need one lattice vector per basis element")
        weights = []
        for t, w in enumerate(raw_w):
            if (
                not isinstance(w, list)
                or len(w) != x.width
                or not all(isinstance(c, int) and not isinstance(c, bool) for c in w)
            ):
                raise InputFormatError(f"lie.weights[{t}]: expected {x.width} integers")
            weights.append([int(c) for c in w])
        raw_fa = lie_doc.get("action", {})
        if not isinstance(raw_fa, dict):
            raise InputFormatError("lie.action: expected a table of matrices")
        fa_idx = _resolve_names(raw_fa.keys(), grp, aliases, "lie.action")
        named_mats = {
            fa_idx[k]: _rat_matrix(v, dim, f"lie.action.{k}") for k, v in raw_fa.items()
        }
        faction = _close_action(grp, named_mats, mat_product, identity_rat(dim), "lie.action")

    model = AlgGroupModel(char, x, grp, action_x, lie, weights, faction)

    fd = doc.get("faithful_dim")
    if fd is not None and (not isinstance(fd, int) or isinstance(fd, bool) or fd < 1):
        raise InputFormatError("faithful_dim: must be a positive integer")
    return model, fd


def load_instance(path: str) -> tuple[AlgGroupModel, int | None]:
    try:
        with open(path, "rb") as fh:
            doc = tomli.load(fh)
    except OSError as e:
        raise InputFormatError(f"cannot read {path}: {e}") from None
    except tomli.TOMLDecodeError as e:
        raise InputFormatError(f"{path}: {e}") from None
    return parse_instance(doc)


# -- report payloads ------------------------------------------------------------


def subgroup_payload(s: StdSubgroup) -> dict:
    return {
        "M": [[str(c) for c in row] for row in s.m],
        "Y": [[int(c) for c in row] for row in s.y.basis],
        "K": [s.k.group.names[i] for i in s.k.indices],
    }


def _cert_payload(c) -> dict:
    return {
        "kind": c.kind,
        "depth": c.depth,
        "unit_factors": list(c.unit_factors),
        "nonunit_factors": list(c.nonunit_factors),
    }


def _series_payload(rep) -> dict:
    return {
        "series_status": rep.status,
        "stages": [
            {"ordinal": str(st.ordinal), "subgroup": subgroup_payload(st.subgroup)}
            for st in rep.stages
        ],
        "terminal": str(rep.lam) if rep.lam is not None else None,
        "hypercenter": subgroup_payload(rep.hypercenter) if rep.hypercenter else None,
        "certificates": [_cert_payload(c) for c in rep.chain_certificates],
    }


def _check_payload(rs: list[CheckResult]) -> dict:
    counts = {"pass": 0, "fail": 0, "skip": 0}
    for r in rs:
        counts[r.verdict] += 1
    return {
        "checks": [
            {
                "check": r.check,
                "instance": r.instance,
                "verdict": r.verdict,
                "claim": r.claim,
                "witness": r.witness,
            }
            for r in rs
        ],
        "counts": counts,
    }


def _sub_text(p: dict) -> str:
    mdim = len(p["M"])
    y = p["Y"] if p["Y"] else "0"
    k = "{" + ", ".join(p["K"]) + "}"
    return f"M dim {mdim}; Y = {y}; K = {k}"


def _render_text(report: dict) -> list[str]:
    lines = [f"operation: {report['operation']}", f"status: {report['status']}"]
    res = report["result"]
    for key in ("char", "lattice", "finite_order", "lie_dim", "faithful_dim"):
        if key in res:
            lines.append(f"{key}: {res[key]}")
    for key in ("center", "split_center", "z_omega", "fitting", "unipotent_radical",
                "solvable_radical"):
        if key in res:
            lines.append(f"{key}: {_sub_text(res[key])}")
    if "stages" in res:
        for st in res["stages"]:
            lines.append(f"Z[{st['ordinal']}]: {_sub_text(st['subgroup'])}")
    if res.get("terminal") is not None:
        lines.append(f"terminal: {res['terminal']}")
    if "hypercenter" in res and res["hypercenter"] is not None:
        lines.append(f"hypercenter: {_sub_text(res['hypercenter'])}")
    for c in res.get("certificates", []):
        lines.append(
            f"certificate: {c['kind']} depth {c['depth']} nonunit {c['nonunit_factors']}"
        )
    if "nilpotency_class" in res:
        lines.append(f"nilpotent: {res['nilpotent']}")
        lines.append(f"nilpotency_class: {res['nilpotency_class']}")
        if "class_bound" in res:
            lines.append(f"class_bound: {res['class_bound']} (faithful_dim {res['faithful_dim']})")
    if "checks" in res:
        lines.append(f"suite: {res.get('suite', 'oracle-compare')} seed={res.get('seed', '-')}")
        for c in res["checks"]:
            mark = c["verdict"].upper()
            extra = f"  [{c['witness']}]" if c["witness"] else ""
            lines.append(f"{mark} {c['check']} @ {c['instance']}{extra}")
        cnt = res["counts"]
        lines.append(f"passed {cnt['pass']}, failed {cnt['fail']}, skipped {cnt['skip']}")
    lines.append(f"timing: {report['timing']:.3f}s")
    return lines


def emit_report(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print("\n".join(_render_text(report)))


# -- dispatch -------------------------------------------------------------------


def _run_op(args) -> tuple[dict, int]:
    t0 = time.perf_counter()

    if args.op == "verify":
        if not args.suite:
            raise InputFormatError("--op verify requires --suite NAME")
        try:
            results = run_suite(args.suite, seed=args.seed, count=args.count)
        except KeyError as e:
            raise InputFormatError(str(e.args[0])) from None
        payload = _check_payload(results)
        payload["suite"] = args.suite
        payload["seed"] = args.seed
        failed = payload["counts"]["fail"]
        report = {
            "operation": "verify",
            "status": "ok" if failed == 0 else "failures",
            "result": payload,
            "timing": time.perf_counter() - t0,
        }
        return report, 0 if failed == 0 else 1

    if not args.input:
        raise InputFormatError(f"--op {args.op} requires --input FILE")
    model, faithful_dim = load_instance(args.input)
    kw = {
        "max_finite_steps": args.max_finite_steps,
        "max_limit_stages": args.max_limit_stages,
        "chain_depth": args.chain_depth,
    }

    if args.op == "validate":
        result = {
            "char": model.char,
            "lattice": {"rank": model.x.rank, "torsion": list(model.x.invariants)},
            "finite_order": model.f.n,
            "lie_dim": model.lie.dim,
        }
        if faithful_dim is not None:
            result["faithful_dim"] = faithful_dim
    elif args.op == "center":
        result = {"center": subgroup_payload(center(model))}
    elif args.op == "center-s":
        result = {"split_center": subgroup_payload(center_s(model))}
    elif args.op == "ucs":
        rep = ucs(model, **kw)
        if rep.status == MIXED_CENTER:
            raise MixedCenterUnsupported(rep.message)
        if rep.status == UNDETERMINED_LIMIT:
            raise UndeterminedLimit(rep.message)
        result = _series_payload(rep)
    elif args.op == "zomega":
        result = {"z_omega": subgroup_payload(z_omega(model, **kw))}
    elif args.op == "hypercenter":
        s, lam, _ = hypercenter(model, **kw)
        result = {"hypercenter": subgroup_payload(s), "terminal": str(lam)}
    elif args.op == "fitting":
        result = {"fitting": subgroup_payload(fitting(model))}
    elif args.op == "rads":
        ru = rad_u(model)
        full = StdSubgroup(
            model, model.lie.full_subspace(), model.x.trivial_subgroup(),
            model.f.full_subgroup(),
        )
        result = {
            "unipotent_radical": subgroup_payload(ru),
            "solvable_radical": subgroup_payload(full),
        }
    elif args.op == "nilclass":
        cls = nilpotency_class(model, **kw)
        result = {"nilpotency_class": cls, "nilpotent": cls is not None}
        if faithful_dim is not None:
            result["faithful_dim"] = faithful_dim
            result["class_bound"] = faithful_dim * (faithful_dim - 1) // 2 + 1
    elif args.op == "oracle-compare":
        results = _check_payload(bridge_compare(model, args.input))
        failed = results["counts"]["fail"]
        report = {
            "operation": "oracle-compare",
            "status": "ok" if failed == 0 else "failures",
            "result": results,
            "timing": time.perf_counter() - t0,
        }
        return report, 0 if failed == 0 else 1
    else:  # pragma: no cover - argparse restricts choices
        raise InputFormatError(f"unknown operation {args.op!r}")

    report = {
        "operation": args.op,
        "status": "ok",
        "result": result,
        "timing": time.perf_counter() - t0,
    }
    return report, 0


def main(argv: list[str] | None = None) -> int:
    p = argparse.ArgumentParser(
        prog="hypercenter",
        description="Centers, central series, hypercenters and Fitting subgroups "
        "of unipotent-by-diagonalizable-by-finite group models.",
    )
    p.add_argument("--input", metavar="FILE", help="instance file (TOML)")
    p.add_argument("--op", required=True, choices=_OPS)
    p.add_argument("--max-finite-steps", type=int, default=64)
    p.add_argument("--max-limit-stages", type=int, default=8)
    p.add_argument("--chain-depth", type=int, default=32)
    p.add_argument("--suite", help="check suite name (verify)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--format", dest="fmt", choices=["json", "text"], default="text")
    args = p.parse_args(argv)

    try:
        report, code = _run_op(args)
    except InputFormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except MixedCenterUnsupported as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except UndeterminedLimit as e:
        print(f"error: {e}", file=sys.stderr)
        return 4
    except NotConnected:
        print("error: requires connected group", file=sys.stderr)
        return 5
    except PreconditionViolated as e:
        print(f"error: {e}", file=sys.stderr)
        return 5
    except HypercenterError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    emit_report(report, args.fmt)
    return code


if __name__ == "__main__":
    sys.exit(main())
