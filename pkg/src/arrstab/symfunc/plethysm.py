"""Plethysm of symmetric functions.

The power sums act as Adams operations: p_m applied to a power-basis
expansion multiplies every part of every key by m and passes rational
coefficients through unchanged (p_m[c*g] = c*p_m[g]).  The action
extends multiplicatively over keys and linearly over the expansion of
the outer function, so inhomogeneous and virtual arguments are allowed.
"""

from __future__ import annotations

from fractions import Fraction

from ..partitions import Partition
from .core import POWER, Coeff, SymmetricFunction, _norm, to_power, to_schur


def _adams(
    gp: dict[Partition, Coeff], m: int, max_degree: int | None
) -> dict[Partition, Coeff]:
    out = {}
    for key, c in gp.items():
        if max_degree is not None and key.size * m > max_degree:
            continue
        out[Partition(x * m for x in key)] = c
    return out


def _pmul(
    a: dict[Partition, Coeff], b: dict[Partition, Coeff], max_degree: int | None
) -> dict[Partition, Coeff]:
    out: dict[Partition, Coeff] = {}
    b_items = [(key, key.size, c) for key, c in b.items()]
    for k1, c1 in a.items():
        s1 = k1.size
        for k2, s2, c2 in b_items:
            if max_degree is not None and s1 + s2 > max_degree:
                continue
            key = Partition(sorted(k1 + k2, reverse=True))
            s = _norm(out.get(key, 0) + c1 * c2)
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
    return out


def plethysm(
    f: SymmetricFunction, g: SymmetricFunction, max_degree: int | None = None
) -> SymmetricFunction:
    """Plethysm f[g], optionally truncated above ``max_degree``.

    The truncation is applied while multiplying, so series arguments
    stay cheap; the result is expressed in the basis of ``f``.
    """
    fp = to_power(f)
    gp = dict(to_power(g).items())
    g_min = min((k.size for k in gp), default=0)
    out: dict[Partition, Coeff] = {}
    for mu, c in fp.items():
        if max_degree is not None and gp and mu.size * g_min > max_degree:
            continue
        term: dict[Partition, Coeff] = {Partition(): 1}
        for m in mu:
            term = _pmul(term, _adams(gp, m, max_degree), max_degree)
            if not term:
                break
        for key, tc in term.items():
            s = _norm(out.get(key, 0) + c * tc)
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
    result = SymmetricFunction._raw(POWER, out)
    return to_schur(result) if f.basis is not POWER else result
