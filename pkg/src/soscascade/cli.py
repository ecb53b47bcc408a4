"""Command-line interface: run, compare, analyze, requirements.

All commands are deterministic: identical inputs produce byte-identical
output files.  Exit codes: 0 success, 1 validation error, 2 I/O error;
diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import data as shipped
from .analysis import compare_strategies, vulnerability_ranking
from .catalog import controls_for, generate_requirement, load_catalog
from .errors import ValidationError
from .graph import load_topology
from .propagation import affected_nodes, load_scenario, run_scenario, total_impact, write_trace_csv
from .strategy import apply_strategy, load_strategy

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2

_FALLBACK_RATIONALE = "support its secure operation"


def _write_json(path: Path, doc: object) -> None:
    path.write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")


def _scenario_dict(scenario) -> dict:
    return {
        "source": scenario.source,
        "initial_impact": scenario.initial_impact,
        "epsilon": scenario.epsilon,
        "max_steps": scenario.max_steps,
        "affected_threshold": scenario.affected_threshold,
    }


def _cmd_run(args: argparse.Namespace) -> int:
    graph = load_topology(args.topology)
    scenario = load_scenario(args.scenario)
    strategy = load_strategy(args.strategy) if args.strategy else scenario.strategy
    if strategy is None:
        raise ValidationError("no strategy given: pass --strategy or embed one in the scenario file")

    trace = run_scenario(scenario, graph, apply_strategy(strategy, graph))
    final = trace.final
    affected = sorted(affected_nodes(final, scenario.affected_threshold))

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_trace_csv(trace, out / "trace.csv")
    _write_json(
        out / "summary.json",
        {
            "scenario": _scenario_dict(scenario),
            "strategy": strategy.name,
            "converged": trace.converged,
            "steps_taken": trace.steps_taken,
            "affected_count": len(affected),
            "affected": affected,
            "total_impact": total_impact(final),
        },
    )
    return EXIT_OK


def _cmd_compare(args: argparse.Namespace) -> int:
    strategies = args.strategy or []
    if len(strategies) != 2:
        raise ValidationError(
            f"compare needs exactly two --strategy files (baseline, alternative); got {len(strategies)}"
        )
    graph = load_topology(args.topology)
    scenario = load_scenario(args.scenario)
    baseline = load_strategy(strategies[0])
    alternative = load_strategy(strategies[1])
    out = Path(args.out)

    if args.sweep_alpha:
        points = _parse_sweep(args.sweep_alpha)
        rows = []
        for alpha in points:
            report = compare_strategies(
                graph,
                scenario,
                replace(baseline, protected_alpha=alpha),
                replace(alternative, protected_alpha=alpha),
            )
            rows.append(
                {
                    "alpha": alpha,
                    "baseline_affected": report.baseline.affected_count,
                    "alternative_affected": report.alternative.affected_count,
                    "baseline_total_impact": report.baseline.total_impact,
                    "alternative_total_impact": report.alternative.total_impact,
                    "affected_increase_pct": report.affected_increase_pct,
                    "impact_reduction_pct": report.impact_reduction_pct,
                }
            )
        out.mkdir(parents=True, exist_ok=True)
        _write_json(
            out / "comparison.json",
            {
                "scenario": _scenario_dict(scenario),
                "baseline_strategy": baseline.name,
                "alternative_strategy": alternative.name,
                "sweep": rows,
            },
        )
        header = (
            "alpha,baseline_affected,alternative_affected,baseline_total_impact,"
            "alternative_total_impact,affected_increase_pct,impact_reduction_pct"
        )
        lines = [header]
        for row in rows:
            lines.append(
                f"{row['alpha']},{row['baseline_affected']},{row['alternative_affected']},"
                f"{row['baseline_total_impact']!r},{row['alternative_total_impact']!r},"
                f"{row['affected_increase_pct']},{row['impact_reduction_pct']}"
            )
        (out / "sweep.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")
        return EXIT_OK

    report = compare_strategies(graph, scenario, baseline, alternative)
    out.mkdir(parents=True, exist_ok=True)
    write_trace_csv(report.baseline.trace, out / "trace_baseline.csv")
    write_trace_csv(report.alternative.trace, out / "trace_alternative.csv")
    doc = {"scenario": _scenario_dict(scenario)}
    doc.update(report.to_dict())
    _write_json(out / "comparison.json", doc)
    return EXIT_OK


def _cmd_analyze(args: argparse.Namespace) -> int:
    graph = load_topology(args.topology)
    ranking = vulnerability_ranking(graph)
    by_node = sorted(ranking.entries, key=lambda r: r.node)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    _write_json(
        out / "vulnerability.json",
        {
            "ranking": ranking.to_list(),
            "articulation_points": sorted(r.node for r in ranking.entries if r.is_articulation),
            "betweenness": {r.node: r.betweenness for r in by_node},
            "weighted_degree": {r.node: r.weighted_degree for r in by_node},
        },
    )
    return EXIT_OK


def _cmd_requirements(args: argparse.Namespace) -> int:
    catalog = load_catalog(args.catalog)
    if catalog.find_component(args.component) is None:
        raise ValidationError(f"UnknownComponent: component {args.component!r} not in catalog")
    if args.control:
        control = catalog.countermeasure_by_id.get(args.control)
        if control is None:
            raise ValidationError(f"unknown control id {args.control!r}")
        controls = [control]
    else:
        controls = controls_for(catalog, args.component, args.system)
    for control in controls:
        clause = control.rationale or _FALLBACK_RATIONALE
        print(generate_requirement(args.component, control, clause).text)
    return EXIT_OK


def _parse_sweep(spec: str) -> list[float]:
    try:
        start_s, stop_s, step_s = spec.split(":")
        start, stop, step = float(start_s), float(stop_s), float(step_s)
    except ValueError as exc:
        raise ValidationError(f"--sweep-alpha expects start:stop:step, got {spec!r}") from exc
    if step <= 0.0 or not 0.0 <= start <= stop <= 1.0:
        raise ValidationError(f"--sweep-alpha range invalid: {spec!r}")
    count = int((stop - start) / step + 1e-9) + 1
    return [round(start + k * step, 10) for k in range(count)]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="soscascade",
        description="Cascading-failure propagation and security-strategy analysis "
        "over system-of-systems graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_topology(p):
        p.add_argument(
            "--topology",
            default=str(shipped.default_topology_path()),
            help="topology JSON file (default: shipped station topology)",
        )

    def add_out(p):
        p.add_argument("-o", "--out", required=True, help="output directory")

    run_p = sub.add_parser("run", help="simulate one scenario; writes trace.csv and summary.json")
    add_topology(run_p)
    run_p.add_argument("--scenario", required=True, help="scenario JSON file")
    run_p.add_argument("--strategy", help="strategy JSON file (overrides the scenario's inline strategy)")
    add_out(run_p)
    run_p.set_defaults(func=_cmd_run)

    cmp_p = sub.add_parser(
        "compare",
        help="run a baseline and an alternative strategy; writes both traces and comparison.json",
    )
    add_topology(cmp_p)
    cmp_p.add_argument("--scenario", required=True, help="scenario JSON file")
    cmp_p.add_argument(
        "--strategy",
        action="append",
        help="strategy JSON file; give twice: baseline first, alternative second",
    )
    cmp_p.add_argument(
        "--sweep-alpha",
        metavar="START:STOP:STEP",
        help="repeat the comparison for each protected diffusion factor in the range; "
        "writes sweep.csv and a sweep array instead of traces",
    )
    add_out(cmp_p)
    cmp_p.set_defaults(func=_cmd_compare)

    ana_p = sub.add_parser(
        "analyze", help="structural vulnerability analysis; writes vulnerability.json"
    )
    add_topology(ana_p)
    add_out(ana_p)
    ana_p.set_defaults(func=_cmd_analyze)

    req_p = sub.add_parser(
        "requirements", help="print SHALL-style security requirements for a component"
    )
    req_p.add_argument(
        "--catalog",
        default=str(shipped.default_catalog_path()),
        help="catalog JSON file (default: shipped catalog)",
    )
    req_p.add_argument("--component", required=True, help="component name from the catalog")
    req_p.add_argument("--system", choices=["OMCV", "PPE"], help="only controls critical for this system")
    req_p.add_argument("--control", help="render a single requirement for this control id")
    req_p.set_defaults(func=_cmd_requirements)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed a usage message
        code = exc.code if isinstance(exc.code, int) else 0
        return EXIT_VALIDATION if code != 0 else EXIT_OK
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
