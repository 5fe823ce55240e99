"""Command-line entry points: forecast, allocate, sensitivity, simulate,
and the JSON service launcher.

Exit codes: 0 success, 1 domain error (structured JSON error payload on
stdout), 2 usage error (message on stderr). The JSON emitted here is the
same byte stream the HTTP service returns for equivalent requests.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import io_config, payloads
from .errors import GreyAllocError
from .sensitivity import ALLOCATION_KINDS, PerturbationSpec, perturb_allocation, perturb_forecast

DEFAULT_PORT_ENV = "GREYALLOC_PORT"


class UsageError(Exception):
    pass


def _require_file(path, what: str) -> Path:
    if path is None:
        raise UsageError(f"missing required {what} file")
    path = Path(path)
    if not path.is_file():
        raise UsageError(f"{what} file not found: {path}")
    return path


def _parse_directions(pairs) -> dict[str, str]:
    directions = {}
    for pair in pairs or []:
        if "=" not in pair:
            raise UsageError(f"--direction expects NAME=benefit|cost, got {pair!r}")
        name, _, value = pair.partition("=")
        directions[name.strip()] = value.strip()
    return directions


def _parse_betas(raw) -> list[float] | None:
    if raw is None:
        return None
    try:
        return [float(v) for v in raw.split(",")]
    except ValueError:
        raise UsageError(f"--betas expects comma-separated numbers, got {raw!r}") from None


def _load_cfg(args) -> io_config.ProjectConfig:
    if getattr(args, "config", None):
        return io_config.load_config(_require_file(args.config, "config"))
    return io_config.ProjectConfig()


# -- table rendering ---------------------------------------------------------


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, float):
        return format(x, ".6g")
    return str(x)


def _print_table(rows: list[dict], columns: list[str]) -> None:
    cells = [[_fmt(row.get(col, "")) for col in columns] for row in rows]
    widths = [max(len(col), *(len(r[i]) for r in cells)) if cells else len(col)
              for i, col in enumerate(columns)]
    print("  ".join(col.ljust(w) for col, w in zip(columns, widths)))
    for r in cells:
        print("  ".join(v.ljust(w) for v, w in zip(r, widths)))


def _render_forecast(p: dict) -> None:
    print(f"model: {p['model']}")
    print("params: " + "  ".join(f"{k}={_fmt(v)}" for k, v in p["params"].items()))
    if p["model"] == "verhulst":
        acc = p["accuracy"]
        print(f"accuracy: q={_fmt(acc['q'])}  c={_fmt(acc['c'])}  p={_fmt(acc['p'])}  grade={acc['grade']}")
        if p["saturation"]:
            print(f"saturation: value={_fmt(p['saturation']['value'])} at period {p['saturation']['time']}")
        else:
            print("saturation: none (model diverges)")
    else:
        q = p["quality"]
        print(f"quality: r2={_fmt(q['r2'])}  rss={_fmt(q['rss'])}  converged={_fmt(q['converged'])}")
    rows = [
        {"period": label, "observed": obs, "fitted": fitv}
        for label, obs, fitv in zip(p["series"]["periods"], p["series"]["values"], p["fitted"])
    ]
    _print_table(rows, ["period", "observed", "fitted"])
    if p["forecast"]:
        print("forecast: " + ", ".join(_fmt(v) for v in p["forecast"]))


def _render_allocation(p: dict) -> None:
    if "weights" in p:
        w = p["weights"]
        _print_table(
            [{"criterion": lab, "weight": wt} for lab, wt in zip(w["labels"], w["weights"])],
            ["criterion", "weight"],
        )
        print(f"lambda_max={_fmt(w['lambda_max'])}  ci={_fmt(w['ci'])}  cr={_fmt(w['cr'])}  "
              f"consistent={_fmt(w['consistent'])}")
    cols = ["rank", "entity", "score", "proportion"]
    if p["ranking"] and "capped_proportion" in p["ranking"][0]:
        cols.append("capped_proportion")
    _print_table(p["ranking"], cols)


def _render_sensitivity(p: dict) -> None:
    print(f"spec: {p['spec']}")
    rows = [{"output": k, "relative_delta": v} for k, v in sorted(p["deltas"].items())]
    _print_table(rows, ["output", "relative_delta"])
    if p["rank_shifts"]:
        _print_table(list(p["rank_shifts"]), ["entity", "old_rank", "new_rank"])


def _render_simulate(p: dict) -> None:
    for period in p["periods"]:
        print(f"period {period['period']} (inflow {_fmt(period['inflow'])}):")
        _print_table(period["ranking"], ["rank", "entity", "score", "proportion"])


_RENDERERS = {
    "forecast": _render_forecast,
    "allocate": _render_allocation,
    "sensitivity": _render_sensitivity,
    "simulate": _render_simulate,
}


def _emit(args, payload: dict, kind: str) -> int:
    if args.format == "table":
        _RENDERERS[kind](payload)
    else:
        sys.stdout.write(payloads.dump_payload(payload))
    return 0


# -- subcommands ---------------------------------------------------------------


def cmd_forecast(args) -> int:
    cfg = _load_cfg(args)
    series = io_config.load_series(_require_file(args.series or cfg.series, "series"))
    eps = args.eps if args.eps is not None else cfg.forecast_eps
    payload = payloads.forecast_payload(series, model=args.model, eps=eps, horizon=args.horizon)
    return _emit(args, payload, "forecast")


def _load_allocation_inputs(args, cfg, need_matrix: bool):
    matrix = None
    if need_matrix:
        matrix = io_config.load_matrix(_require_file(args.matrix or cfg.matrix, "matrix"))
    directions = dict(cfg.directions)
    directions.update(_parse_directions(args.direction))
    normalized = args.normalized or cfg.indicators_normalized
    table = io_config.load_indicators(
        _require_file(args.indicators or cfg.indicators, "indicators"),
        directions=directions or None,
        normalized=normalized,
    )
    return matrix, table


def cmd_allocate(args) -> int:
    cfg = _load_cfg(args)
    betas = _parse_betas(args.betas)
    if args.method == "factor" and betas is None:
        raise UsageError("--method factor requires --betas")
    matrix, table = _load_allocation_inputs(args, cfg, need_matrix=args.method == "ahp")
    payload = payloads.allocate_payload(
        table, matrix=matrix, method=args.method, betas=betas,
        max_share=cfg.max_share or None, tol=cfg.ahp_tol,
    )
    return _emit(args, payload, "allocate")


def _parse_spec(args) -> PerturbationSpec:
    given = [
        ("remove_point", args.remove_point),
        ("set_point", args.set_point),
        ("scale_matrix_entry", args.scale_matrix_entry),
        ("scale_indicator", args.scale_indicator),
    ]
    chosen = [(kind, raw) for kind, raw in given if raw is not None]
    if len(chosen) != 1:
        raise UsageError("exactly one perturbation flag is required "
                         "(--remove-point, --set-point, --scale-matrix-entry, --scale-indicator)")
    kind, raw = chosen[0]
    try:
        if kind == "remove_point":
            return PerturbationSpec(kind, int(raw))
        if kind == "set_point":
            target, _, value = raw.partition("=")
            return PerturbationSpec(kind, int(target), float(value))
        target, _, value = raw.partition("=")
        if "=" not in raw:
            raise ValueError("missing '=FACTOR'")
        if kind == "scale_matrix_entry":
            i, j = (int(v) for v in target.split(","))
            return PerturbationSpec(kind, (i, j), float(value))
        entity, _, criterion = target.partition(",")
        return PerturbationSpec(kind, (entity.strip(), criterion.strip()), float(value))
    except ValueError as exc:
        raise UsageError(f"bad perturbation flag {raw!r}: {exc}") from None


def cmd_sensitivity(args) -> int:
    cfg = _load_cfg(args)
    spec = _parse_spec(args)
    if spec.kind in ALLOCATION_KINDS:
        matrix, table = _load_allocation_inputs(args, cfg, need_matrix=True)
        report = perturb_allocation(matrix, table, spec)
    else:
        series = io_config.load_series(_require_file(args.series or cfg.series, "series"))
        report = perturb_forecast(series, spec)
    return _emit(args, payloads.sensitivity_payload(report), "sensitivity")


def cmd_simulate(args) -> int:
    cfg = _load_cfg(args)
    if not getattr(args, "config", None):
        raise UsageError("simulate requires --config")
    if not cfg.inflows:
        raise UsageError("config must set simulate.inflows")
    if not cfg.gamma:
        raise UsageError("config must set gamma.<criterion> entries")
    matrix = io_config.load_matrix(_require_file(cfg.matrix, "matrix"))
    table = io_config.load_indicators(
        _require_file(cfg.indicators, "indicators"),
        directions=cfg.directions or None,
        normalized=cfg.indicators_normalized,
    )
    payload = payloads.simulate_payload(
        table, cfg.inflows, matrix, cfg.gamma,
        max_share=cfg.max_share or None, tol=cfg.ahp_tol,
    )
    return _emit(args, payload, "simulate")


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    port = args.port if args.port is not None else int(os.environ.get(DEFAULT_PORT_ENV, "8000"))
    app = create_app(static_dir=args.static)
    uvicorn.run(app, host=args.host, port=port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="greyalloc",
        description="Saturation forecasting and AHP allocation toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="json")
    common.add_argument("--config", help="flat key=value config file")

    p = sub.add_parser("forecast", parents=[common], help="fit a saturation model to a series CSV")
    p.add_argument("--series", help="series CSV (period,value)")
    p.add_argument("--model", choices=["verhulst", "logistic"], default="verhulst")
    p.add_argument("--eps", type=float, default=None, help="saturation settle tolerance")
    p.add_argument("--horizon", type=int, default=0, help="extra periods to forecast")
    p.set_defaults(func=cmd_forecast)

    p = sub.add_parser("allocate", parents=[common], help="score entities and emit allocation shares")
    p.add_argument("--matrix", help="pairwise judgment matrix CSV")
    p.add_argument("--indicators", help="entity x criterion CSV")
    p.add_argument("--direction", action="append", metavar="NAME=benefit|cost")
    p.add_argument("--normalized", action="store_true",
                   help="indicator values are already normalized to [0,1]")
    p.add_argument("--method", choices=["ahp", "factor"], default="ahp")
    p.add_argument("--betas", help="comma-separated factor betas, intercept first")
    p.set_defaults(func=cmd_allocate)

    p = sub.add_parser("sensitivity", parents=[common], help="one-at-a-time perturbation study")
    p.add_argument("--series")
    p.add_argument("--matrix")
    p.add_argument("--indicators")
    p.add_argument("--direction", action="append", metavar="NAME=benefit|cost")
    p.add_argument("--normalized", action="store_true")
    p.add_argument("--remove-point", metavar="K")
    p.add_argument("--set-point", metavar="K=VALUE")
    p.add_argument("--scale-matrix-entry", metavar="I,J=FACTOR")
    p.add_argument("--scale-indicator", metavar="ENTITY,CRITERION=FACTOR")
    p.set_defaults(func=cmd_sensitivity)

    p = sub.add_parser("simulate", parents=[common], help="run the inflow-feedback dynamics")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("serve", help="serve the JSON API and UI assets")
    p.add_argument("--port", type=int, default=None,
                   help=f"default from ${DEFAULT_PORT_ENV} or 8000")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", help="directory of UI static assets")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GreyAllocError as exc:
        sys.stdout.write(payloads.dump_payload(payloads.error_payload(exc)))
        return 1


if __name__ == "__main__":
    sys.exit(main())
