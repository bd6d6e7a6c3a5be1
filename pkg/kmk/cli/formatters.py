from __future__ import annotations
import csv
import io
import json
from kmk.artifacts import BaseArtifact, CheckArtifact, SeriesArtifact, TableArtifact
from kmk.lie import CartanDatum, Weight
from kmk.utils import J2, OutputValidator, SCHEMA_VERSION


def envelope(datum: CartanDatum, command: str, artifacts: list[BaseArtifact]) -> dict:
    return OutputValidator().validate({
        "schema_version": SCHEMA_VERSION,
        "algebra": datum.label,
        "command": command,
        "results": [artifact.to_result() for artifact in artifacts]
    })


def to_json(document: dict) -> str:
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def to_csv(artifacts: list[BaseArtifact]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    header = None

    def start(columns: list[str]) -> None:
        nonlocal header

        if columns != header:
            writer.writerow(columns)
            header = columns

    for artifact in artifacts:
        if isinstance(artifact, TableArtifact):
            start(["name", "labels", "delta", "offset", "coefficients"])
            for row in artifact.value:
                writer.writerow([
                    artifact.name,
                    " ".join(str(v) for v in row.weight.labels),
                    str(row.weight.delta),
                    " ".join(str(v) for v in row.offset),
                    " ".join(str(c) for c in row.value.to_list())
                ])
        elif isinstance(artifact, SeriesArtifact):
            start(["name", "q_order", "coefficients"])
            for k, c in enumerate(artifact.value.coefficients):
                writer.writerow([artifact.name, k, " ".join(str(v) for v in c.to_list())])
        elif isinstance(artifact, CheckArtifact):
            start(["name", "passed", "mismatch"])
            writer.writerow([artifact.name, str(artifact.passed).lower(), str(artifact.mismatch or "")])

    return buffer.getvalue()


def latex_weight(datum: CartanDatum, weight: Weight) -> str:
    symbol = r"\Lambda" if datum.is_affine else r"\omega"
    first = 0 if datum.is_affine else 1
    parts = []

    for i, label in enumerate(weight.labels):
        if label == 0:
            continue
        body = f"{symbol}_{{{i + first}}}"
        coefficient = "" if abs(label) == 1 else f"{abs(label)}"
        sign = "-" if label < 0 else "+"
        parts.append((sign, f"{coefficient}{body}"))

    if weight.delta != 0:
        coefficient = "" if abs(weight.delta) == 1 else f"{abs(weight.delta)}"
        parts.append(("-" if weight.delta < 0 else "+", rf"{coefficient}\delta"))

    if not parts:
        return "0"

    text = " ".join(f"{sign} {body}" for sign, body in parts)

    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def to_latex(datum: CartanDatum, command: str, artifacts: list[BaseArtifact]) -> str:
    blocks = [_latex_block(datum, artifact) for artifact in artifacts]

    return J2("latex/document.j2").render(command=command, algebra=datum.label, blocks=blocks)


def _latex_block(datum: CartanDatum, artifact: BaseArtifact) -> str:
    if isinstance(artifact, TableArtifact):
        symbol = {"kostka": "K", "c_expansion": "c", "hl_function": "P"}.get(artifact.name, artifact.name)
        header = f"{symbol}_{{{latex_weight(datum, artifact.weight)}, \\mu}}(t)"
        rows = [(latex_weight(datum, row.weight), row.value.render(latex=True)) for row in artifact.value]

        return J2("latex/table.j2").render(header=header, rows=rows).rstrip("\n")
    elif isinstance(artifact, SeriesArtifact):
        if artifact.weight is None:
            header = r"\mathrm{ct}(\tilde\Delta)"
        else:
            header = f"a^{{{latex_weight(datum, artifact.weight)}}}_{{{latex_weight(datum, artifact.floor)}}}(t)"
        terms = []
        for k, c in enumerate(artifact.value.coefficients):
            if c.is_zero():
                continue
            power = "" if k == 0 else ("q" if k == 1 else f"q^{{{k}}}")
            value = c.render(latex=True)
            terms.append(value if k == 0 else f"({value}){power}")

        return J2("latex/series.j2").render(
            header=header, body=" + ".join(terms) or "0", order=artifact.order
        ).rstrip("\n")
    elif isinstance(artifact, CheckArtifact):
        mismatch = artifact.mismatch

        return J2("latex/check.j2").render(
            name=artifact.name,
            passed=artifact.passed,
            mismatch=mismatch,
            expected=mismatch.expected.render(latex=True) if mismatch else None,
            actual=mismatch.actual.render(latex=True) if mismatch else None
        ).rstrip("\n")
    else:
        raise ValueError(f"cannot render {artifact.type} as LaTeX")
