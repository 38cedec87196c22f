"""Command-line surface: scene in, CSV/JSON/SVG artifacts out.

    fuzgeo <command> --scene scene.json --out results/
           [--alpha-levels N] [--resolution N] [--t v1,v2,...]
           [--format csv|json|svg]

Commands: distance, metric-curve, hausdorff, midset, classify, invariance.
Exit status: 0 success, 1 validation or I/O error, 2 internal numeric
failure.  All floating-point output is formatted to 9 significant digits,
so identical scenes and flags produce byte-identical files.

The environment variable FUZGEO_SEED fixes the seed used by randomized
test sampling helpers; the CLI commands themselves are deterministic.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .distance import fuzzy_distance
from .hausdorff import fuzzy_hausdorff
from .metric import metric_md
from .midset import (Branch, active_branches, alpha_thresholds, classify_conic,
                     compute_midset, conic_coefficients, invariance_check,
                     overlap_case, support_bbox)
from .scene import Scene, SceneError, load_scene
from .svgout import render_midset_svg

DEFAULT_INVARIANCE_T = (0.5, 1.0, 10.0)


def _fmt(x) -> str:
    return format(float(x), ".9g")


def _jsonify(obj):
    """Round floats to the fixed output precision for stable serialization."""
    if isinstance(obj, float):
        return float(_fmt(obj))
    if isinstance(obj, (np.floating, np.integer)):
        return _jsonify(obj.item())
    if isinstance(obj, dict):
        return {k: _jsonify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(v) for v in obj]
    return obj


def _write_json(path: str, payload) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(_jsonify(payload), fh, indent=2)
        fh.write("\n")


def _write_csv(path: str, header: list[str], rows) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) if isinstance(v, (int, float, np.floating))
                              else str(v) for v in row) + "\n")


def _alphas(levels: int) -> np.ndarray:
    return np.linspace(0.0, 1.0, levels)


def _triple(summary) -> list[float]:
    return [summary.l, summary.m, summary.u]


def cmd_distance(scene: Scene, args, out: str) -> None:
    for name_a, name_b in scene.pairs:
        a, b = scene.pair_points((name_a, name_b))
        dist = fuzzy_distance(a, b)
        _write_json(os.path.join(out, f"{name_a}_{name_b}_distance.json"), {
            "pair": [name_a, name_b],
            "summary": _triple(dist.summary),
            "argmin_theta": dist.argmin_theta,
            "argmax_theta": dist.argmax_theta,
            "refined": dist.refined,
        })
        rows = []
        for alpha in _alphas(args.alpha_levels or scene.grids.alpha_levels):
            lo, hi = dist.cut(float(alpha))
            rows.append((alpha, lo, dist.params.dc, hi))
        _write_csv(os.path.join(out, f"{name_a}_{name_b}_distance.csv"),
                   ["alpha", "lo", "mid", "hi"], rows)


def cmd_metric_curve(scene: Scene, args, out: str) -> None:
    if args.t_values:
        ts = args.t_values
    elif scene.t_values:
        ts = scene.t_values
    else:
        ts = np.geomspace(1e-2, 1e2, 81)
    for name_a, name_b in scene.pairs:
        a, b = scene.pair_points((name_a, name_b))
        rows = []
        for t in ts:
            value = metric_md(a, b, float(t)).value
            lo, hi = value.cut(0.0)
            rows.append((t, lo, value.summary.m, hi, hi - lo))
        _write_csv(os.path.join(out, f"{name_a}_{name_b}_metric_curve.csv"),
                   ["t", "lo", "mid", "hi", "spread"], rows)


def cmd_hausdorff(scene: Scene, args, out: str) -> None:
    for name_a, name_b in scene.pairs:
        a, b = scene.pair_points((name_a, name_b))
        res = fuzzy_hausdorff(a, b)
        line = res.line
        _write_json(os.path.join(out, f"{name_a}_{name_b}_hausdorff.json"), {
            "pair": [name_a, name_b],
            "summary": _triple(res.summary),
            "projected": {
                name_a: _triple(res.projected_a.summary),
                name_b: _triple(res.projected_b.summary),
            },
            "line": {"a": line.a, "b": line.b, "c": line.c, "theta": line.theta},
        })


def cmd_midset(scene: Scene, args, out: str) -> None:
    levels = args.alpha_levels or scene.grids.alpha_levels
    resolution = args.resolution or scene.grids.resolution
    for name_a, name_b in scene.pairs:
        a, b = scene.pair_points((name_a, name_b))
        bbox = scene.grids.bbox or support_bbox(a, b)
        result = compute_midset(a, b, alphas=_alphas(levels), bbox=bbox,
                                resolution=resolution)
        by_alpha: dict = {}
        for entry in result.entries:
            by_alpha.setdefault(entry.alpha, []).append(entry)
        for alpha, entries in by_alpha.items():
            rows = []
            for entry in entries:
                for pi, polyline in enumerate(entry.polylines):
                    for x, y in polyline:
                        rows.append((entry.branch.value, pi, x, y))
            _write_csv(
                os.path.join(out, f"{name_a}_{name_b}_midset_a{alpha:.4f}.csv"),
                ["branch", "polyline", "x", "y"], rows)
        if args.format == "svg":
            svg = render_midset_svg(a, b, result)
            with open(os.path.join(out, f"{name_a}_{name_b}_midset.svg"),
                      "w", encoding="utf-8") as fh:
                fh.write(svg)


def cmd_classify(scene: Scene, args, out: str) -> None:
    for name_a, name_b in scene.pairs:
        a, b = scene.pair_points((name_a, name_b))
        th = alpha_thresholds(a, b)
        edges = sorted({0.0, 1.0} | {
            v for v in (th.n1, th.n2) if v is not None and 0.0 < v < 1.0})
        bands = []
        for lo, hi in zip(edges[:-1], edges[1:]):
            mid = 0.5 * (lo + hi)
            case = overlap_case(a, b, mid)
            classes = {
                branch.value: classify_conic(conic_coefficients(a, b, mid, branch))
                for branch in active_branches(case)}
            bands.append({"alpha_lo": lo, "alpha_hi": hi,
                          "case": case.value, "classes": classes})
        _write_json(os.path.join(out, f"{name_a}_{name_b}_classify.json"), {
            "pair": [name_a, name_b],
            "thresholds": {"n": th.n, "n1": th.n1, "n2": th.n2},
            "case_at_support": overlap_case(a, b, 0.0).value,
            "bands": bands,
        })


def cmd_invariance(scene: Scene, args, out: str) -> None:
    ts = args.t_values or scene.t_values or DEFAULT_INVARIANCE_T
    resolution = args.resolution or scene.grids.resolution
    for name_a, name_b in scene.pairs:
        a, b = scene.pair_points((name_a, name_b))
        report = invariance_check(a, b, ts, bbox=scene.grids.bbox,
                                  resolution=resolution)
        _write_json(os.path.join(out, f"{name_a}_{name_b}_invariance.json"), {
            "pair": [name_a, name_b],
            "t": list(ts),
            "checked": report.checked,
            "disagreements": report.disagreements,
            "pole_points": report.pole_points,
            "agreed": report.passed,
        })


_COMMANDS = {
    "distance": cmd_distance,
    "metric-curve": cmd_metric_curve,
    "hausdorff": cmd_hausdorff,
    "midset": cmd_midset,
    "classify": cmd_classify,
    "invariance": cmd_invariance,
}


def _parse_t_list(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid t list {text!r}") from None
    if not values or any(v <= 0 for v in values):
        raise argparse.ArgumentTypeError("t values must be positive")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzgeo",
        description="fuzzy-geometry analyses of scene files")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--scene", required=True, help="scene JSON file")
        p.add_argument("--out", required=True, help="output directory")
        p.add_argument("--alpha-levels", type=int, dest="alpha_levels")
        p.add_argument("--resolution", type=int)
        p.add_argument("--t", type=_parse_t_list, dest="t_values")
        p.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        scene = load_scene(args.scene)
        if args.alpha_levels is not None and args.alpha_levels < 2:
            raise SceneError("--alpha-levels must be at least 2")
        if args.resolution is not None and args.resolution < 16:
            raise SceneError("--resolution must be at least 16")
        out = args.out
        try:
            os.makedirs(out, exist_ok=True)
        except OSError as exc:
            raise SceneError(f"cannot create output directory {out}: {exc}") from None
        if not os.access(out, os.W_OK):
            raise SceneError(f"output directory {out} is not writable")
        _COMMANDS[args.command](scene, args, out)
    except (SceneError, ValueError, OSError) as exc:
        print(f"fuzgeo: error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # numeric or internal failure
        print(f"fuzgeo: internal error: {exc!r}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())
