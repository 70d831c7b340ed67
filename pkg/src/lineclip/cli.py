"""Command line interface: ``clip``, ``verify`` and ``bench`` subcommands.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input or
configuration.  All randomness flows from ``--seed``; nothing is read
from the environment.
"""

import sys

import click

from .bench import DEFAULT_WINDOW, BenchConfig, render_report, run_bench
from .clippers import ALGORITHMS, Algorithm, CLIPPERS
from .errors import AxisParallelNotSupported, ConfigError, DegenerateLine
from .geometry import ClipWindow, Line, Point
from .verify import clip_oracle, verify_batch
from .workload import SCENARIOS, ScenarioId, parse_record
from . import batch as _batch

_ALGO_CHOICES = [a.value for a in ALGORITHMS]
_BACKENDS = ["auto", "compiled", "python"]


def _parse_window(text: str) -> ClipWindow:
    parts = text.split(",")
    if len(parts) != 4:
        raise click.BadParameter("expected XMIN,YMIN,XMAX,YMAX")
    try:
        xmin, ymin, xmax, ymax = (float(p) for p in parts)
    except ValueError:
        raise click.BadParameter("window fields must be decimal numbers") from None
    try:
        return ClipWindow(xmin, ymin, xmax, ymax)
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None


def _parse_scenarios(text: str) -> tuple[ScenarioId, ...]:
    try:
        return tuple(ScenarioId.parse(item) for item in text.split(","))
    except ValueError as exc:
        raise click.BadParameter(str(exc)) from None


def _parse_algos(text: str) -> tuple[Algorithm, ...]:
    out = []
    for item in text.split(","):
        item = item.strip().lower()
        try:
            out.append(Algorithm(item))
        except ValueError:
            raise click.BadParameter(f"unknown algorithm {item!r}") from None
    return tuple(out)


@click.group()
def main():
    """Clip infinite 2D lines against an axis-aligned window."""


@main.command()
@click.option("--window", "window_text", default="-1,-1,1,1", show_default=True,
              help="Window as XMIN,YMIN,XMAX,YMAX.")
@click.option("--algo", type=click.Choice(_ALGO_CHOICES + ["oracle"]), required=True,
              help="Clipper to run (or the brute-force oracle).")
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Record file; stdin when omitted.")
def clip(window_text, algo, input_path):
    """Clip records of ``x_a y_a x_b y_b``, one outcome line per record.

    Accepted lines print ``ACCEPT x1 y1 x2 y2``; rejected ones ``REJECT``.
    Blank lines and ``#`` comments are skipped.
    """
    win = _parse_window(window_text)
    fn = clip_oracle if algo == "oracle" else CLIPPERS[Algorithm(algo)]
    stream = open(input_path, "r") if input_path else sys.stdin
    try:
        for lineno, raw in enumerate(stream, start=1):
            try:
                rec = parse_record(raw)
            except ValueError as exc:
                click.echo(f"error: line {lineno}: {exc}", err=True)
                sys.exit(2)
            if rec is None:
                continue
            xa, ya, xb, yb = rec
            try:
                outcome = fn(Line(Point(xa, ya), Point(xb, yb)), win)
            except (DegenerateLine, AxisParallelNotSupported, ValueError) as exc:
                click.echo(f"error: line {lineno}: {exc}", err=True)
                sys.exit(2)
            if outcome.accepted:
                click.echo(f"ACCEPT {outcome.p.x!r} {outcome.p.y!r} "
                           f"{outcome.q.x!r} {outcome.q.y!r}")
            else:
                click.echo("REJECT")
    finally:
        if input_path:
            stream.close()


@main.command()
@click.option("--scenarios", "scenarios_text",
              default=",".join(s.name for s in SCENARIOS), show_default=True,
              help="Comma-separated scenario list.")
@click.option("--n", default=10_000, show_default=True, help="Lines per scenario.")
@click.option("--seed", default=1, show_default=True)
@click.option("--window", "window_text", default="-1,-1,1,1", show_default=True)
@click.option("--backend", type=click.Choice(_BACKENDS), default="auto", show_default=True)
def verify(scenarios_text, n, seed, window_text, backend):
    """Check every algorithm against the brute-force oracle.

    Exits 1 if any (line, algorithm) attempt disagrees with the oracle.
    """
    win = _parse_window(window_text)
    scenarios = _parse_scenarios(scenarios_text)
    if n < 1:
        raise click.BadParameter("--n must be >= 1")
    failed = False
    for scenario in scenarios:
        report = verify_batch(scenario, seed, n, win, backend=backend)
        status = "ok" if report.mismatches == 0 else "MISMATCH"
        click.echo(
            f"{scenario.name}: {status} attempts={report.total} "
            f"matches={report.matches} mismatches={report.mismatches} "
            f"skips={report.degenerate_skips} "
            f"max_dev={report.max_endpoint_deviation:.3e}"
        )
        for rec in report.first_failures:
            line = rec.line
            click.echo(
                f"  {rec.algorithm.value} line#{rec.index} "
                f"A=({line.a_pt.x!r}, {line.a_pt.y!r}) "
                f"B=({line.b_pt.x!r}, {line.b_pt.y!r}) "
                f"expected={_show(rec.expected)} got={_show(rec.got)}",
                err=True,
            )
        failed = failed or report.mismatches > 0
    sys.exit(1 if failed else 0)


def _show(outcome) -> str:
    if not outcome.accepted:
        return "REJECT"
    return (f"ACCEPT({outcome.p.x!r},{outcome.p.y!r},"
            f"{outcome.q.x!r},{outcome.q.y!r})")


@main.command()
@click.option("--scenarios", "scenarios_text",
              default=",".join(s.name for s in SCENARIOS), show_default=True)
@click.option("--algos", "algos_text",
              default=",".join(a.value for a in ALGORITHMS), show_default=True)
@click.option("--n", default=100_000, show_default=True, help="Lines per scenario.")
@click.option("--reps", default=5, show_default=True, help="Timed passes per algorithm.")
@click.option("--seed", default=1, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "md"]), default="md",
              show_default=True)
@click.option("--window", "window_text", default="-1,-1,1,1", show_default=True)
@click.option("--backend", type=click.Choice(_BACKENDS + ["both"]), default="auto",
              show_default=True)
@click.option("--force-msf1", is_flag=True,
              help="Run MSF1 on axis-parallel scenarios (errors by contract).")
def bench(scenarios_text, algos_text, n, reps, seed, fmt, window_text, backend, force_msf1):
    """Time the clippers and print the scenario/algorithm table."""
    win = _parse_window(window_text)
    backends = ["compiled", "python"] if backend == "both" else [backend]
    try:
        for i, which in enumerate(backends):
            config = BenchConfig(
                scenarios=_parse_scenarios(scenarios_text),
                algorithms=_parse_algos(algos_text),
                n=n, repetitions=reps, seed=seed, window=win, format=fmt,
                backend=which, force_msf1=force_msf1,
            )
            report = run_bench(config)
            if len(backends) > 1:
                if i:
                    click.echo()
                click.echo(f"# backend: {which}")
            click.echo(render_report(report), nl=False)
    except (ConfigError, RuntimeError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except AxisParallelNotSupported as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)


if __name__ == "__main__":
    main()
