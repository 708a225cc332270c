"""Command-line interface.

Exit codes: 0 success, 1 invalid input or failed check, 2 internal
certification failure (inconsistent system or non-integer pairing).
"""

from __future__ import annotations

import argparse
import random
import sys

from . import __version__
from .cochains import Cochain, coboundary_matrix
from .complex import (
    build_complex,
    check_closed,
    check_connected,
    compute_fundamental_cycle,
    _normalize,
)
from .engine import HopfOptions, compute_hopf, consistency_suite
from .errors import CertificationError, HopfError, ValidationError
from .fixtures import (
    barycentric_subdivision,
    boundary_sphere,
    constant_labeling,
    cyclic_polygon,
    hopf_fixture,
    join,
    random_valid_labeling,
)
from .instance import emit_instance, parse_instance, parse_raw
from .linsolve import derived_nullity, printed_nullity, rank
from .pullback import Labeling, validate_labeling


def _err(*args):
    print(*args, file=sys.stderr)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_hopf(args) -> int:
    inst = parse_instance(_read(args.instance))
    sigma_bar = tuple(args.sigma_bar) if args.sigma_bar else None
    if sigma_bar is not None and len(sigma_bar) != inst.n + 1:
        raise ValidationError(f"--sigma-bar needs {inst.n + 1} labels for n={inst.n}")
    opts = HopfOptions(
        sigma_bar=sigma_bar,
        gauge_seed=args.gauge_seed,
        reverse_source_orientation=args.reverse_orientation,
        odd_n_shortcut=not args.no_odd_shortcut,
        vertex_order=args.vertex_order,
    )
    res = compute_hopf(inst.complex, inst.labeling, opts)
    print(res.hopf)
    if args.stats:
        stats = dict(res.stats)
        stats["f_vector"] = ",".join(map(str, stats["f_vector"]))
        stats["raw_pairing"] = str(res.raw_pairing)
        for key in sorted(stats):
            _err(f"{key}={stats[key]}")
    return 0


def cmd_validate(args) -> int:
    results = []

    def record(name, fn):
        if any(status != "PASS" for _, status, _ in results):
            results.append((name, "SKIP", "earlier check failed"))
            return None
        try:
            value = fn()
        except HopfError as exc:
            results.append((name, "FAIL", str(exc)))
            return None
        results.append((name, "PASS", ""))
        return value

    text = _read(args.instance)
    raw = record("syntax", lambda: parse_raw(text))
    normalized = record("purity", lambda: _normalize(raw.facets)[0])
    incidence = record("closedness", lambda: check_closed(normalized) if len(normalized[0]) > 1 else {})
    record("connectivity", lambda: check_connected(normalized, incidence) if incidence else None)
    c = record("orientability", lambda: _orientable(raw.facets))

    def labeling_check():
        lab = Labeling.from_mapping(c, raw.labels)
        rep = validate_labeling(c, lab, raw.n)
        if not rep.valid:
            names = [tuple(c.original_ids[v] for v in f) for f in rep.offending]
            shown = "; ".join(map(str, names[:5]))
            raise ValidationError(f"{len(names)} facet(s) carry all {raw.n + 2} labels: {shown}")

    record("labeling", labeling_check)
    for name, status, detail in results:
        print(f"{name}: {status}" + (f" ({detail})" if detail else ""))
    failed = [r for r in results if r[1] == "FAIL"]
    if failed:
        _err(f"first failing check: {failed[0][0]}: {failed[0][2]}")
        return 1
    return 0


def _orientable(facets):
    c = build_complex(facets)
    compute_fundamental_cycle(c)
    return c


def cmd_rank_check(args) -> int:
    inst = parse_instance(_read(args.instance))
    c, n = inst.complex, inst.n
    k = n - 1 if args.degree is None else args.degree
    if not 0 <= k < c.dim:
        raise ValidationError(f"degree {k} outside 0..{c.dim - 1}")
    mat = coboundary_matrix(c, k)
    r = rank(mat)
    nullity = mat.n_cols - r
    derived = derived_nullity(c.f_vector, k + 1)
    print(f"f_vector={','.join(map(str, c.f_vector))}")
    print(f"degree={k}")
    print(f"rank={r}")
    print(f"nullity={nullity}")
    print(f"derived_formula={derived} {'agree' if derived == nullity else 'MISMATCH'}")
    if k == n - 1:
        printed = printed_nullity(c.f_vector, n)
        print(f"printed_formula={printed} {'agree' if printed == nullity else 'MISMATCH'}")
    return 0 if derived == nullity else 1


def _fault_hook(seed):
    rng = random.Random(seed)

    def hook(theta: Cochain) -> Cochain:
        faces = theta.complex.faces[theta.degree]
        noise = {s: rng.randint(-2, 2) for s in faces}
        return theta + Cochain(theta.complex, theta.degree, noise)

    return hook


def cmd_consistency(args) -> int:
    inst = parse_instance(_read(args.instance))
    hook = _fault_hook(args.seed) if args.inject_fault else None
    rep = consistency_suite(inst.complex, inst.labeling, args.trials, args.seed, theta_hook=hook)
    for line in rep.lines():
        print(line)
    if rep.passed:
        print(f"PASS value={rep.value}")
        return 0
    values = sorted({h for _, h in rep.values})
    print(f"FAIL distinct values={values} reversed={rep.reversed_value}")
    return 1


def cmd_generate(args) -> int:
    labeling = None
    if args.kind == "hopf":
        c, labeling = hopf_fixture()
    elif args.kind == "boundary-sphere":
        c = boundary_sphere(_one_param(args, "dimension"))
    elif args.kind == "polygon":
        c = cyclic_polygon(_one_param(args, "vertex count"))
    elif args.kind == "join-polygons":
        if len(args.params) != 2:
            raise ValidationError("join-polygons needs two vertex counts")
        c = join(cyclic_polygon(args.params[0]), cyclic_polygon(args.params[1]))
    else:  # argparse restricts choices
        raise ValidationError(f"unknown fixture {args.kind}")
    if (c.dim + 1) % 2:
        raise ValidationError(f"dimension {c.dim} is not odd; no instance format for it")
    n = (c.dim + 1) // 2
    if args.constant_label is not None:
        if not 1 <= args.constant_label <= n + 2:
            raise ValidationError(f"label {args.constant_label} outside 1..{n + 2}")
        labeling = constant_labeling(c, args.constant_label)
    elif args.random_labels is not None:
        labeling = random_valid_labeling(c, n, args.random_labels)
    elif labeling is None:
        labeling = constant_labeling(c, 1)
    for _ in range(args.subdivide):
        c, labeling = barycentric_subdivision(c, labeling)
    comment = [f"generated: {args.kind} {' '.join(map(str, args.params))}".rstrip()]
    if args.subdivide:
        comment.append(f"barycentric subdivisions: {args.subdivide}")
    sys.stdout.write(emit_instance(n, c, labeling, comment))
    return 0


def _one_param(args, what):
    if len(args.params) != 1:
        raise ValidationError(f"{args.kind} needs one {what}")
    return args.params[0]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="simphopf", description="Hopf invariant of labeled simplicial spheres."
    )
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hopf", help="compute H(f)")
    h.add_argument("instance")
    h.add_argument("--sigma-bar", type=int, nargs="+", metavar="LABEL")
    h.add_argument("--gauge-seed", type=int)
    h.add_argument("--reverse-orientation", action="store_true")
    h.add_argument("--no-odd-shortcut", action="store_true")
    h.add_argument("--vertex-order", choices=("label", "index"), default="label")
    h.add_argument("--stats", action="store_true", help="key=value statistics on stderr")
    h.set_defaults(func=cmd_hopf)

    v = sub.add_parser("validate", help="structural and labeling checks")
    v.add_argument("instance")
    v.set_defaults(func=cmd_validate)

    r = sub.add_parser("rank-check", help="kernel dimension of the coboundary system")
    r.add_argument("instance")
    r.add_argument("--degree", type=int)
    r.set_defaults(func=cmd_rank_check)

    cs = sub.add_parser("consistency", help="recompute H over all free choices")
    cs.add_argument("instance")
    cs.add_argument("--trials", type=int, default=10)
    cs.add_argument("--seed", type=int, default=0)
    cs.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    cs.set_defaults(func=cmd_consistency)

    g = sub.add_parser("generate", help="emit a fixture instance")
    g.add_argument("kind", choices=("hopf", "boundary-sphere", "polygon", "join-polygons"))
    g.add_argument("params", type=int, nargs="*")
    g.add_argument("--constant-label", type=int)
    g.add_argument("--random-labels", type=int, metavar="SEED")
    g.add_argument("--subdivide", type=int, default=0)
    g.set_defaults(func=cmd_generate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CertificationError as exc:
        _err(f"certification failure: {type(exc).__name__}: {exc}")
        return 2
    except (HopfError, OSError) as exc:
        _err(f"error: {type(exc).__name__}: {exc}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
