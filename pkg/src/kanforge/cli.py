"""Command-line front end.

Every subcommand reads JSON artifacts, runs one operation, and prints a
line-oriented, deterministically ordered report ending in OK or FAIL.
Exit codes: 0 success, 1 mathematical failure, 2 input error, 3 budget
exceeded.
"""

import argparse
import re
import sys

import numpy as np

from . import io as kio
from .bundles import (
    covering_check,
    principal_check,
    nerve_truncated,
    tcp_build,
    w_truncated,
)
from .chains import Cochain, cohomology, cup_product, homology
from .charclass import characteristic_class
from .groups import cyclic
from .homotopy import pi1_presentation
from .kan import fibrant_approx_bounded, kan_report
from .limits import BudgetError
from . import smooth
from .spaces import boundary_delta, circle, cycle, delta, horn, product
from .words import word_token


class MathFailure(Exception):
    """Report printed; the run is a mathematical FAIL (exit 1)."""


def _coeff(text):
    m = re.fullmatch(r"z(\d+)?", text.lower())
    if not m:
        raise argparse.ArgumentTypeError(f"coefficient spec {text!r}; use z or zN")
    return int(m.group(1)) if m.group(1) else 0


def _coeff_name(modulus):
    return "Z" if modulus == 0 else f"Z/{modulus}"


def _load_complex(path):
    return kio.parse_complex(path)


def _print_report(lines, ok=True):
    for line in lines:
        print(line)
    print("OK" if ok else "FAIL")
    if not ok:
        raise MathFailure()


# -- subcommand bodies ---------------------------------------------------------


def cmd_validate(args):
    K = _load_complex(args.complex)
    problems = K.validate()
    lines = [f"cells: {sum(K.n_cells(d) for d in K.dims())}"]
    lines += problems
    _print_report(lines, ok=not problems)


def cmd_homology(args):
    K = _load_complex(args.complex)
    top = args.max_dim if args.max_dim is not None else K.top_dim
    groups = homology(K, coefficients=args.coeff, max_dim=top)
    lines = []
    for n in range(top + 1):
        G = groups[n]
        suffix = "" if G.reliable else " (unreliable: truncated)"
        lines.append(f"H{n}={G.group}{suffix}")
    _print_report(lines)


def cmd_cohomology(args):
    K = _load_complex(args.complex)
    top = args.max_dim if args.max_dim is not None else K.top_dim
    groups = cohomology(K, coefficients=args.coeff, max_dim=top)
    lines = []
    for n in range(top + 1):
        G = groups[n]
        suffix = "" if G.reliable else " (unreliable: truncated)"
        lines.append(f"H^{n}={G.group}{suffix}")
    _print_report(lines)


def cmd_cup(args):
    K = _load_complex(args.complex)
    p, q = args.deg
    top = max(p + q, K.top_dim)
    groups = cohomology(K, coefficients=args.coeff, max_dim=top)
    HP, HQ, HPQ = groups[p], groups[q], groups[p + q]
    lines = [
        f"H^{p}={HP.group}",
        f"H^{q}={HQ.group}",
        f"H^{p + q}={HPQ.group}",
    ]
    for i, a in enumerate(HP.representatives()):
        for j, b in enumerate(HQ.representatives()):
            ca = Cochain(K, p, a, modulus=args.coeff)
            cb = Cochain(K, q, b, modulus=args.coeff)
            coords = HPQ.coords(cup_product(ca, cb).vector)
            lines.append(f"cup[{i}][{j}] = {list(coords)}")
    _print_report(lines)


def cmd_pi1(args):
    K = _load_complex(args.complex)
    pres = pi1_presentation(K, basepoint=args.basepoint)
    lines = [f"generators: {' '.join(pres.generators) if pres.generators else '(none)'}"]
    if pres.relators:
        for rel in pres.relators:
            text = "*".join(g if e == 1 else f"{g}^-1" for g, e in rel)
            lines.append(f"relator: {text}")
    else:
        lines.append("relators: (none)")
    ab, _ = pres.abelianization()
    lines.append(f"abelianization: {ab}")
    _print_report(lines)


def cmd_kan(args):
    K = _load_complex(args.complex)
    missing = kan_report(K, max_dim=args.max_dim)
    lines = [f"horn search through dim {args.max_dim}"]
    for h in missing:
        faces = ",".join(word_token(h.faces[i]) for i in sorted(h.faces))
        lines.append(f"missing p={h.p} k={h.k} faces={faces}")
    _print_report(lines, ok=not missing)


def cmd_fibrant(args):
    K = _load_complex(args.complex)
    result = fibrant_approx_bounded(K, max_dim=args.max_dim, stages=args.stages)
    lines = []
    for stage, attached in enumerate(result.attached_per_stage, start=1):
        lines.append(f"stage {stage}: attached {len(attached)}")
    lines.append(f"residual missing horns: {len(result.residual)}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(kio.serialize_complex(result.complex))
        lines.append(f"wrote {args.out}")
    _print_report(lines)


def cmd_emit(args):
    target = args.target
    if target == "delta":
        K = delta(args.p)
    elif target == "boundary":
        K = boundary_delta(args.p)
    elif target == "horn":
        K = horn(args.p, args.k)
    elif target == "circle":
        K = circle()
    elif target == "cycle":
        K = cycle(args.n)
    elif target == "product":
        if not args.left or not args.right:
            raise kio.FormatError("emit product needs two complex files")
        left = _load_complex(args.left)
        right = _load_complex(args.right)
        K = product(left, right, max_dim=args.max_dim)
    elif target == "wbar":
        K = nerve_truncated(cyclic(args.cyclic), max_dim=args.max_dim or 4)
    elif target == "w":
        K = w_truncated(cyclic(args.cyclic), max_dim=args.max_dim or 4).total
    else:
        raise kio.FormatError(f"unknown emit target {target!r}")
    text = kio.serialize_complex(K)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        _print_report([f"wrote {args.out}"])
    else:
        sys.stdout.write(text)


def cmd_bundle(args):
    if args.action != "check":
        raise kio.FormatError(f"unknown bundle action {args.action!r}")
    base = _load_complex(args.base)
    twist = kio.parse_twist(args.twist, base)
    bundle = tcp_build(twist)
    problems = principal_check(bundle)
    lines = [
        f"fiber: {twist.group.name}",
        f"total cells: {sum(bundle.total.n_cells(d) for d in bundle.total.dims())}",
    ]
    lines += problems
    _print_report(lines, ok=not problems)


def cmd_cover(args):
    if args.action != "check":
        raise kio.FormatError(f"unknown cover action {args.action!r}")
    f = kio.parse_map(args.mapfile)
    ok, problems = covering_check(f, args.sheets)
    lines = [f"sheets: {args.sheets}"]
    lines += problems
    _print_report(lines, ok=ok)


def cmd_charclass(args):
    base = _load_complex(args.base)
    twist = kio.parse_twist(args.twist, base)
    cocycle = kio.parse_cocycle(args.cocycle, twist.group)
    cls = characteristic_class(twist, cocycle)
    _print_report([cls.describe()])


def cmd_smooth(args):
    sub = args.check
    grid = args.grid
    eps = args.eps
    lines = []
    ok = True
    if sub == "mu":
        t = np.linspace(0.0, 1.0, grid + 1)
        v = smooth.bump_mu(t)
        mono = np.all(np.diff(v) >= 0.0)
        lo = np.max(np.abs(v[t <= smooth.MU_WINDOW[0]]))
        hi = np.max(np.abs(v[t >= smooth.MU_WINDOW[1]] - 1.0))
        lines += [
            f"monotone: {bool(mono)}",
            f"left plateau error: {lo:.3e}",
            f"right plateau error: {hi:.3e}",
        ]
        ok = bool(mono) and lo == 0.0 and hi == 0.0
    elif sub == "F":
        pts = smooth.barycentric_grid(grid)
        image = smooth.map_F(pts)
        sums = np.max(np.abs(image.sum(axis=1) - 1.0))
        neg = max(0.0, float(np.max(-image)))
        t = np.linspace(0.0, 1.0, grid + 1)
        e0 = np.max(np.abs(smooth.map_F(smooth.coface(0, t)) - smooth.coface(0, t)))
        e2 = np.max(np.abs(smooth.map_F(smooth.coface(2, t)) - smooth.coface(2, t)))
        mid = smooth.map_F(smooth.coface(1, t))
        e1 = np.max(np.abs(mid - smooth.coface(1, smooth.bump_mu(t))))
        lines += [
            f"stays in triangle: {sums:.3e} / {neg:.3e}",
            f"edge 0 identity error: {e0:.3e}",
            f"edge 1 reparam error: {e1:.3e}",
            f"edge 2 identity error: {e2:.3e}",
        ]
        ok = sums < 1e-12 and neg <= 1e-12 and e0 == 0.0 and e1 < 1e-12 and e2 == 0.0
    elif sub == "r":
        pts = smooth.barycentric_grid(grid)
        image = smooth.retraction_r(pts, eps)
        member = float(np.max(smooth.horn_membership_error(image)))
        twice = smooth.retraction_r(image, eps)
        idem = float(np.max(np.abs(twice - image)))
        lines += [
            f"horn membership error: {member:.3e}",
            f"idempotence error: {idem:.3e}",
        ]
        ok = member == 0.0 and idem <= 1e-10
    elif sub == "psi2":
        pts = smooth.barycentric_grid(grid)
        image = smooth.psi2(pts, eps)
        worst_vertex = 0.0
        for i in range(3):
            zone = smooth.vertex_zone(pts, i, eps / 2.0)
            if np.any(zone):
                vertex = np.zeros(3)
                vertex[i] = 1.0
                worst_vertex = max(worst_vertex, float(np.max(np.abs(image[zone] - vertex))))
        outside = smooth.outside_all_supports(pts, eps)
        ident = float(np.max(np.abs(image[outside] - pts[outside]))) if np.any(outside) else 0.0
        lines += [
            f"vertex collapse error: {worst_vertex:.3e}",
            f"identity-outside error: {ident:.3e}",
        ]
        ok = worst_vertex == 0.0 and ident == 0.0
    elif sub == "tame":
        def sigma(t):
            t = np.asarray(t, dtype=float)
            return np.stack([np.cos(2 * np.pi * t), np.sin(2 * np.pi * t)], axis=-1)

        comp = smooth.taming_composite(sigma)
        t = np.linspace(0.0, 1.0, grid + 1)
        delta = smooth.MU_WINDOW[0]
        tame1 = smooth.tameness_check(t, comp(smooth.coface(1, t)), delta)
        const0 = float(np.max(np.abs(comp(smooth.coface(0, t)) - sigma(1.0))))
        orig2 = float(np.max(np.abs(comp(smooth.coface(2, t)) - sigma(t))))
        lines += [
            f"edge 1 tame: {tame1}",
            f"edge 0 constancy error: {const0:.3e}",
            f"edge 2 identity error: {orig2:.3e}",
        ]
        ok = tame1 and const0 < 1e-12 and orig2 < 1e-12
    elif sub == "extend":
        def sigma(x):
            return smooth.psi2(np.asarray(x, dtype=float), eps)[:2]

        ext = smooth.sigma_extension(sigma, eps0=eps)
        agree = 0.0
        for x in smooth.barycentric_grid(max(grid // 10, 8)):
            agree = max(agree, float(np.max(np.abs(ext(x) - sigma(x)))))
        wedge = 0.0
        for i in range(3):
            vertex = np.zeros(3)
            vertex[i] = 1.0
            others = [m for m in range(3) if m != i]
            for a in np.linspace(0.1, 2.0, 7):
                for b in np.linspace(0.1, 2.0, 7):
                    z = np.array(vertex)
                    z[others[0]] = -a
                    z[others[1]] = -b
                    z[i] = 1.0 + a + b
                    wedge = max(wedge, float(np.max(np.abs(ext(z) - sigma(vertex)))))
        lines += [
            f"agreement on triangle: {agree:.3e}",
            f"wedge constancy error: {wedge:.3e}",
        ]
        ok = agree == 0.0 and wedge < 1e-12
    else:
        raise kio.FormatError(f"unknown smooth check {sub!r}")
    _print_report(lines, ok=ok)


# -- parser ---------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="kanforge",
        description="finite simplicial presentations: homology, horns, bundles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check simplicial identities")
    p.add_argument("complex")
    p.set_defaults(func=cmd_validate)

    for name, func in (("homology", cmd_homology), ("cohomology", cmd_cohomology)):
        p = sub.add_parser(name)
        p.add_argument("complex")
        p.add_argument("--coeff", type=_coeff, default=0, help="z or zN")
        p.add_argument("--max-dim", type=int, default=None)
        p.set_defaults(func=func)

    p = sub.add_parser("cup", help="cup products of cohomology generators")
    p.add_argument("complex")
    p.add_argument("--deg", type=int, nargs=2, required=True, metavar=("P", "Q"))
    p.add_argument("--coeff", type=_coeff, default=0)
    p.set_defaults(func=cmd_cup)

    p = sub.add_parser("pi1", help="edge-path group presentation")
    p.add_argument("complex")
    p.add_argument("--basepoint", default=None)
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("kan", help="search for unfillable horns")
    p.add_argument("complex")
    p.add_argument("--max-dim", type=int, required=True)
    p.set_defaults(func=cmd_kan)

    p = sub.add_parser("fibrant", help="bounded horn-filling approximation")
    p.add_argument("complex")
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("--stages", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_fibrant)

    p = sub.add_parser("emit", help="write a standard complex as JSON")
    p.add_argument("target", choices=["delta", "boundary", "horn", "circle", "cycle", "product", "wbar", "w"])
    p.add_argument("left", nargs="?", default=None, help="left factor (product)")
    p.add_argument("right", nargs="?", default=None, help="right factor (product)")
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--cyclic", type=int, default=2)
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_emit)

    p = sub.add_parser("bundle", help="twisted product checks")
    p.add_argument("action", choices=["check"])
    p.add_argument("base")
    p.add_argument("twist")
    p.set_defaults(func=cmd_bundle)

    p = sub.add_parser("cover", help="covering space checks")
    p.add_argument("action", choices=["check"])
    p.add_argument("mapfile")
    p.add_argument("--sheets", type=int, required=True)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("charclass", help="characteristic class of a twisting")
    p.add_argument("base")
    p.add_argument("twist")
    p.add_argument("--cocycle", required=True)
    p.set_defaults(func=cmd_charclass)

    p = sub.add_parser("smooth", help="grid checks of the explicit formulas")
    p.add_argument("check", choices=["mu", "F", "r", "psi2", "tame", "extend"])
    p.add_argument("--eps", type=float, default=smooth.EPS0_DEFAULT)
    p.add_argument("--grid", type=int, default=smooth.GRID_DEFAULT)
    p.set_defaults(func=cmd_smooth)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except MathFailure:
        return 1
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (kio.FormatError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
