"""Symmetric group bookkeeping: stabilizers, classes, induction, signs.

Permutations are 0-indexed image tuples.  Induction to the full
symmetric group uses the classical averaged-conjugation formula, and
class functions turn into power-sum expansions through the cycle-type
map.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import permutations
from typing import Iterable, Sequence

from ..partitions import Partition, SetPartition
from ..symfunc import POWER, SymmetricFunction
from ..symfunc.characters import zee

Perm = tuple[int, ...]


@cache
def symmetric_group(n: int) -> tuple[Perm, ...]:
    return tuple(permutations(range(n)))


def compose(a: Perm, b: Perm) -> Perm:
    """a after b."""
    return tuple(a[x] for x in b)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def cycle_type(a: Perm) -> Partition:
    seen = [False] * len(a)
    lengths = []
    for start in range(len(a)):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = a[x]
            length += 1
        lengths.append(length)
    return Partition(sorted(lengths, reverse=True))


@cache
def class_representative(mu: Partition) -> Perm:
    """Canonical permutation with the given cycle type."""
    out, start = [], 0
    for part in mu:
        out.extend(list(range(start + 1, start + part)) + [start])
        start += part
    return tuple(out)


def stabilizer(pi: SetPartition) -> list[Perm]:
    """All permutations fixing the set partition blockwise-setwise."""
    return [g for g in symmetric_group(pi.n) if pi.apply(g) == pi]


def conjugacy_classes(group: Sequence[Perm]) -> list[list[Perm]]:
    """Conjugacy classes of a subgroup, each sorted, ordered by least rep."""
    members = set(group)
    classes = []
    seen: set[Perm] = set()
    for g in sorted(members):
        if g in seen:
            continue
        orbit = {compose(compose(x, g), inverse(x)) for x in members}
        if not orbit <= members:
            raise ValueError("conjugation left the subgroup: not closed")
        seen |= orbit
        classes.append(sorted(orbit))
    return classes


def orientation_sign(pi: SetPartition, d: int, g: Perm) -> int:
    """Determinant sign of g acting on the orthogonal complement of the
    diagonal subspace of pi inside R^(d*n).

    The complement is spanned blockwise by difference vectors; the
    permutation matrix restricted to that basis has an integer
    determinant of absolute value 1.
    """
    if pi.apply(g) != pi:
        raise ValueError(f"{g!r} does not stabilize {pi!r}")
    basis_index: dict[tuple[int, int, int], int] = {}
    for block in pi.blocks:
        anchor = block[0]
        for member in block[1:]:
            for s in range(d):
                basis_index[(anchor, member, s)] = len(basis_index)
    size = len(basis_index)
    if size == 0:
        return 1
    block_of_image = {}
    for block in pi.blocks:
        image = tuple(sorted(g[x - 1] + 1 for x in block))
        for x in image:
            block_of_image[x] = image
    cols: list[dict[int, int]] = []
    for block in pi.blocks:
        anchor = block[0]
        for member in block[1:]:
            ga, gm = g[anchor - 1] + 1, g[member - 1] + 1
            target = block_of_image[ga]
            t_anchor = target[0]
            for s in range(d):
                col: dict[int, int] = {}
                if gm != t_anchor:
                    col[basis_index[(t_anchor, gm, s)]] = 1
                if ga != t_anchor:
                    col[basis_index[(t_anchor, ga, s)]] = -1
                cols.append(col)
    mat = [[Fraction(col.get(r, 0)) for col in cols] for r in range(size)]
    det = Fraction(1)
    for step in range(size):
        pivot_row = next((r for r in range(step, size) if mat[r][step]), None)
        if pivot_row is None:
            raise AssertionError("singular orientation matrix")
        if pivot_row != step:
            mat[step], mat[pivot_row] = mat[pivot_row], mat[step]
            det = -det
        piv = mat[step][step]
        det *= piv
        for r in range(step + 1, size):
            if mat[r][step]:
                factor = mat[r][step] / piv
                for c in range(step, size):
                    mat[r][c] -= factor * mat[step][c]
    return 1 if det > 0 else -1


def induced_character(
    n: int, subgroup: Sequence[Perm], values: dict[Perm, Fraction | int]
) -> dict[Partition, Fraction]:
    """Induce a subgroup class function up to the symmetric group.

    Evaluates (1/|H|) * sum over x with x g x^-1 in H of the subgroup
    value, once per cycle type of the big group.
    """
    members = set(subgroup)
    order = len(members)
    big = symmetric_group(n)
    out: dict[Partition, Fraction] = {}
    for mu in _all_types(n):
        g = class_representative(mu)
        total = 0
        for x in big:
            conj = compose(compose(x, g), inverse(x))
            if conj in members:
                total += values[conj]
        out[mu] = Fraction(total, order)
    return out


@cache
def _all_types(n: int) -> tuple[Partition, ...]:
    from ..partitions import partitions_of

    return tuple(partitions_of(n))


def class_function_to_characteristic(
    n: int, class_values: dict[Partition, Fraction | int]
) -> SymmetricFunction:
    """Frobenius characteristic: sum of chi(mu)/z_mu p_mu."""
    terms = {
        mu: Fraction(val) / zee(tuple(mu))
        for mu, val in class_values.items()
        if val
    }
    return SymmetricFunction(POWER, terms)
