"""Symmetric group characters via the Murnaghan-Nakayama rule.

Characters are computed on beta-numbers (first-column hook coordinates):
removing a border strip of length m from lambda corresponds to lowering
one beta-number by m, and the strip height is the number of beta-numbers
jumped over.  Values are memoized keyed by (lambda, remaining classes).
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache, lru_cache

from ..partitions import Partition, partitions_of


# bounded: high-degree runs touch millions of (shape, class-suffix) pairs
@lru_cache(maxsize=1 << 21)
def sn_character(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Irreducible character chi^lam evaluated at the class mu."""
    if not lam:
        return 1 if not mu else 0
    if not mu:
        return 0
    m, rest = mu[0], mu[1:]
    length = len(lam)
    beta = [lam[i] + (length - 1 - i) for i in range(length)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        c = b - m
        if c < 0 or c in beta_set:
            continue
        height = sum(1 for x in beta if c < x < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(c)
        new_beta.sort(reverse=True)
        new_lam = tuple(
            nb - (length - 1 - i) for i, nb in enumerate(new_beta)
        )
        while new_lam and new_lam[-1] == 0:
            new_lam = new_lam[:-1]
        sub = sn_character(new_lam, rest)
        total += sub if height % 2 == 0 else -sub
    return total


@cache
def zee(mu: tuple[int, ...]) -> int:
    """Centralizer order of the class mu: product of i^m_i * m_i!."""
    out = 1
    run_val, run_len = None, 0
    for part in list(mu) + [0]:
        if part == run_val:
            run_len += 1
            out *= part * run_len
        else:
            run_val, run_len = part, 1
            if part:
                out *= part
    return out


@cache
def schur_to_power_row(lam: Partition) -> tuple[tuple[Partition, Fraction], ...]:
    """Expansion s_lam = sum over mu of (chi^lam(mu)/z_mu) p_mu."""
    n = sum(lam)
    row = []
    for mu in partitions_of(n):
        chi = sn_character(tuple(lam), tuple(mu))
        if chi:
            row.append((mu, Fraction(chi, zee(tuple(mu)))))
    return tuple(row)


@cache
def power_to_schur_row(mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """Expansion p_mu = sum over lam of chi^lam(mu) s_lam."""
    n = sum(mu)
    row = []
    for lam in partitions_of(n):
        chi = sn_character(tuple(lam), tuple(mu))
        if chi:
            row.append((lam, chi))
    return tuple(row)
