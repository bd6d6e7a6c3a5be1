from __future__ import annotations
import argparse
import logging
import sys
from concurrent import futures
from typing import Optional, Sequence
from rich.console import Console
from kmk.artifacts import CheckArtifact, ErrorArtifact
from kmk.cli.formatters import envelope, to_csv, to_json, to_latex
from kmk.config import JobConfig, OutputFormat, load_job_config
from kmk.errors import ConfigError, KmkError
from kmk.events import FinishCheckEvent
from kmk.lie import CartanDatum, Weight
from kmk.structures import Pipeline
from kmk.tasks import BaseTask, HallLittlewoodTask, KostkaTask, StringTask, VerifyTask

JOB_KEYS = (
    "command", "algebra", "matrix", "kind", "checks", "weight", "delta", "floor", "floor_delta", "depth", "order",
    "t_degree", "t_value", "level", "extra_radius", "function", "output_format", "parallel", "verbose"
)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", help="catalog name such as A2, G2, A1~ or D4~")
    common.add_argument("--matrix", help="explicit Cartan matrix, rows separated by ';' (e.g. '2,-2;-2,2')")
    common.add_argument("--kind", choices=["finite", "untwisted_affine"], help="expected type of --matrix")
    common.add_argument("--config", help="YAML file with default values for any option")
    common.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat])
    common.add_argument("--parallel", action="store_true", default=None, help="fill tables on a thread pool")
    common.add_argument("--verbose", action="store_true", default=None, help="log progress to stderr")

    weight = argparse.ArgumentParser(add_help=False)
    weight.add_argument("--weight", help="comma-separated labels <weight, alpha_i^vee>")
    weight.add_argument("--delta", type=int, help="coefficient of delta in the weight")

    parser = argparse.ArgumentParser(
        prog="kmk",
        description="Kostka-Foulkes polynomials, Hall-Littlewood functions and affine t-string functions."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    kostka = commands.add_parser("kostka", parents=[common, weight], help="Kostka-Foulkes table below a weight")
    kostka.add_argument("--depth", type=int)

    hl = commands.add_parser("hl", parents=[common, weight], help="Hall-Littlewood coefficients or function")
    hl.add_argument("--depth", type=int)
    hl.add_argument("--function", action="store_true", default=None, help="print P_weight(t) instead of c")
    hl.add_argument("--t-value", type=int, help="specialize t")

    string = commands.add_parser("string", parents=[common, weight], help="t-string function through a floor")
    string.add_argument("--order", type=int)
    string.add_argument("--floor", help="maximal weight the string starts from (defaults to the weight)")
    string.add_argument("--floor-delta", type=int)

    verify = commands.add_parser("verify", parents=[common, weight], help="check a named identity")
    verify.add_argument(
        "checks", nargs="+", choices=VerifyTask.CHECKS, metavar="check", help="one or more of: %(choices)s"
    )
    verify.add_argument("--depth", type=int)
    verify.add_argument("--order", type=int)
    verify.add_argument("--t-degree", type=int)
    verify.add_argument("--t-value", type=int)
    verify.add_argument("--level", type=int)
    verify.add_argument("--extra-radius", type=int)

    return parser


def build_tasks(job: JobConfig, datum: CartanDatum) -> list[BaseTask]:
    weight = _dominant(job.make_weight(datum, job.weight, job.delta), "weight")

    if job.command == "kostka":
        return [KostkaTask(weight=_require(weight, "weight"), depth=_require(job.depth, "depth"))]
    elif job.command == "hl":
        return [
            HallLittlewoodTask(
                weight=_require(weight, "weight"),
                depth=_require(job.depth, "depth"),
                function=job.function,
                t_value=job.t_value
            )
        ]
    elif job.command == "string":
        return [
            StringTask(
                order=_require(job.order, "order"),
                weight=weight,
                floor=_dominant(job.make_weight(datum, job.floor, job.floor_delta), "floor")
            )
        ]
    else:
        return [
            VerifyTask(
                check=check,
                weight=weight,
                depth=job.depth,
                order=job.order,
                t_degree=job.t_degree,
                t_value=job.t_value,
                level=job.level,
                extra_radius=job.extra_radius
            )
            for check in job.checks
        ]


def _dominant(weight: Optional[Weight], name: str) -> Optional[Weight]:
    if weight is not None and not weight.is_dominant():
        raise ConfigError(f"--{name} {weight} is not dominant")

    return weight


def _require(value, name: str):
    if value is None:
        raise ConfigError(f"--{name.replace('_', '-')} is required")

    return value


def render(job: JobConfig, datum: CartanDatum, artifacts: list) -> str:
    if job.output_format == OutputFormat.CSV:
        return to_csv(artifacts)
    elif job.output_format == OutputFormat.LATEX:
        return to_latex(datum, job.command, artifacts)
    else:
        return to_json(envelope(datum, job.command, artifacts))


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    console = Console(stderr=True, highlight=False)
    args = build_parser().parse_args(argv)
    arguments = {key: getattr(args, key, None) for key in JOB_KEYS}

    try:
        job = load_job_config(arguments, args.config)
        datum = job.datum()
        job.guard(datum)
        tasks = build_tasks(job, datum)
    except KmkError as e:
        console.print(f"kmk: {e}", markup=False)

        return e.exit_code

    executor = futures.ThreadPoolExecutor() if job.parallel else None
    pipeline = Pipeline(
        datum=datum,
        futures_executor=executor,
        logger_level=logging.DEBUG if job.verbose else logging.WARNING
    )

    if job.verbose:
        pipeline.event_listeners = {
            FinishCheckEvent: [lambda event: pipeline.logger.info(event.check.to_text())]
        }

    try:
        pipeline.add_tasks(*tasks)
        pipeline.run()
    finally:
        if executor is not None:
            executor.shutdown()

    outputs = pipeline.outputs()
    error = next((output for output in outputs if isinstance(output, ErrorArtifact)), None)

    if error is not None:
        console.print(f"kmk: {error.value}", markup=False)

        return error.exit_code

    try:
        document = render(job, datum, outputs)
    except Exception as e:
        console.print(f"kmk: cannot render the results: {e}", markup=False)

        return e.exit_code if isinstance(e, KmkError) else 1

    stdout.write(document)

    return 1 if any(isinstance(output, CheckArtifact) and not output.passed for output in outputs) else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
