from __future__ import annotations
import re
from kmk.errors import UnsupportedTypeError
from kmk.lie.cartan_datum import CartanDatum, validate

NAME_PATTERN = re.compile(r"^([A-G])(\d+)(~?)$")


def _chain(rank: int) -> list[list[int]]:
    matrix = [[0] * rank for _ in range(rank)]

    for i in range(rank):
        matrix[i][i] = 2
        if i + 1 < rank:
            matrix[i][i + 1] = matrix[i + 1][i] = -1

    return matrix


def finite_cartan_matrix(series: str, rank: int) -> list[list[int]]:
    """Bourbaki numbering; ``matrix[i][j] = <alpha_j, alpha_i^vee>``."""
    if series == "A" and rank >= 1:
        return _chain(rank)

    if series == "B" and rank >= 2:
        matrix = _chain(rank)
        matrix[rank - 1][rank - 2] = -2
        return matrix

    if series == "C" and rank >= 2:
        matrix = _chain(rank)
        matrix[rank - 2][rank - 1] = -2
        return matrix

    if series == "D" and rank >= 4:
        matrix = _chain(rank)
        matrix[rank - 2][rank - 1] = matrix[rank - 1][rank - 2] = 0
        matrix[rank - 3][rank - 1] = matrix[rank - 1][rank - 3] = -1
        return matrix

    if series == "E" and rank in (6, 7, 8):
        matrix = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(k, k + 1) for k in range(4, rank - 1)]
        for i, j in edges:
            matrix[i][j] = matrix[j][i] = -1
        return matrix

    if series == "F" and rank == 4:
        matrix = _chain(4)
        matrix[2][1] = -2
        return matrix

    if series == "G" and rank == 2:
        return [[2, -3], [-1, 2]]

    raise UnsupportedTypeError(f"no Cartan type {series}{rank}")


def affine_extension(finite: CartanDatum) -> list[list[int]]:
    """Untwisted affine matrix with the new node at index 0 attached through -theta."""
    theta = finite.highest_root()
    theta_labels = finite.weight_of(theta).labels
    rank = finite.rank
    matrix = [[2] + [0] * rank] + [[0] + list(row) for row in finite.matrix]

    for j in range(rank):
        # <alpha_j, theta^vee> = (alpha_j, theta) because theta is long
        matrix[0][j + 1] = -int(finite.epsilon[j] * theta_labels[j])
        matrix[j + 1][0] = -int(theta_labels[j])

    return matrix


def from_name(name: str) -> CartanDatum:
    """Build a datum from a name such as ``A2``, ``G2``, ``A1~`` or ``D4~``."""
    match = NAME_PATTERN.match(name.strip())

    if match is None:
        raise UnsupportedTypeError(f"unrecognized algebra name {name!r}")

    series, rank, affine = match.group(1), int(match.group(2)), bool(match.group(3))
    finite = validate(finite_cartan_matrix(series, rank), kind_hint="finite", name=f"{series}{rank}")

    if not affine:
        return finite

    return validate(affine_extension(finite), kind_hint="untwisted_affine", name=f"{series}{rank}~")
