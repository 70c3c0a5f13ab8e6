"""Stabilization pipelines for k-equal arrangement cohomology.

The degree-i characteristic at n points is assembled as a finite sum of
summands psi(n, q, r, t); each summand is a parity-dependent plethysm of
a Lie-series piece into a hook series, restricted in degree and padded
by a one-row factor.  Stabilization of the resulting sequence is
detected by the add-a-box comparison and certified against the proven
rational bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .partitions import LambdaSet, Partition
from .symfunc import (
    SCHUR,
    SymmetricFunction,
    e,
    h,
    from_text,
    hook_series,
    lie_series,
    mul,
    omega,
    plethysm,
    signed_homology_series,
    to_schur,
    zero,
)

Progress = Callable[[str], None] | None


@dataclass(frozen=True)
class PsiParams:
    """Index of one summand; the cohomological degree is derived."""

    n: int
    q: int
    r: int
    t: int
    d: int
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.q < 0:
            raise ValueError("q must be nonnegative")
        if self.r < 1 or self.t < 1:
            raise ValueError("r and t must be at least 1")
        if self.d < 2:
            raise ValueError("d must be at least 2")
        if self.k < self.d + 1:
            raise ValueError("k must be at least d+1")

    @property
    def i(self) -> int:
        return (self.d - 1) * (self.n - self.r - self.q) + self.t * (self.k - 2)


def _inner_piece(d: int, k: int, r: int, t: int) -> SymmetricFunction:
    """Degree-t inner factor, before composing with the hook series."""
    if d % 2 == 0:
        base = plethysm(e(r), lie_series(t), max_degree=t)
        if k % 2 == 1:
            base = omega(base)
    elif k % 2 == 0:
        base = plethysm(h(r), lie_series(t), max_degree=t)
    else:
        base = plethysm(h(r), signed_homology_series(t), max_degree=t)
        if t % 2 == 1:
            base = -base
    return base.homogeneous_part(t)


_core_cache: dict[tuple[int, int, int, int, int], tuple[int, SymmetricFunction]] = {}


def _core_series(d: int, k: int, r: int, t: int, horizon: int) -> SymmetricFunction:
    """Inner piece composed into the hook series, truncated at ``horizon``.

    Cached per (parities, r, t, k); a larger horizon replaces the cached
    entry, so table runs warm the cache once at their final horizon.
    """
    key = (d % 2, k % 2, r, t, k)
    cached = _core_cache.get(key)
    if cached is not None and cached[0] >= horizon:
        return cached[1]
    inner = _inner_piece(d, k, r, t)
    series = plethysm(inner, hook_series(k, horizon), max_degree=horizon)
    _core_cache[key] = (horizon, series)
    return series


def psi_degree_part(params: PsiParams, min_horizon: int = 0) -> SymmetricFunction:
    """The degree-(n-q) Schur factor of the summand (before the h_q pad)."""
    n, q, r, t, d, k = params.n, params.q, params.r, params.t, params.d, params.k
    target = n - q
    if target < t * k:
        return zero(SCHUR)
    series = _core_series(d, k, r, t, max(target, min_horizon))
    piece = series.homogeneous_part(target)
    if d % 2 == 0:
        piece = omega(piece)
    return to_schur(piece)


def psi(params: PsiParams, min_horizon: int = 0) -> SymmetricFunction:
    """One summand of the k-equal characteristic (Schur basis)."""
    part = psi_degree_part(params, min_horizon)
    if not part:
        return part
    return mul(part, h(params.q))


def _check_character(f: SymmetricFunction, degree: int, context: str) -> None:
    if not f:
        return
    if f.degrees() != [degree]:
        raise AssertionError(f"{context}: expected homogeneous degree {degree}, got {f.degrees()}")
    if not f.is_nonnegative_integral():
        raise AssertionError(f"{context}: coefficients are not nonnegative integers: {f}")


_kequal_cache: dict[tuple[int, int, int, int], SymmetricFunction] = {}


def kequal_summands(n: int, i: int, d: int, k: int) -> list[PsiParams]:
    """Admissible (r, t, q) triples for the degree-i sum at n points.

    t ranges over 1..n//k and r over 1..t (larger values vanish), q is
    solved from the degree equation and kept when it is a nonnegative
    integer leaving room for the minimal hook degree t*k.
    """
    out = []
    for t in range(1, n // k + 1):
        rem = i - t * (k - 2)
        if rem % (d - 1) != 0:
            continue
        for r in range(1, t + 1):
            q = n - r - rem // (d - 1)
            if q < 0 or n - q < t * k:
                continue
            out.append(PsiParams(n=n, q=q, r=r, t=t, d=d, k=k))
    return out


def kequal_char(
    n: int, i: int, d: int, k: int, min_horizon: int = 0
) -> SymmetricFunction:
    """Characteristic of the degree-i cohomology of the k-equal complement.

    Exact, homogeneous of degree n, and checked to have nonnegative
    integer Schur coefficients.
    """
    if d < 2 or k < d + 1:
        raise ValueError("need d >= 2 and k >= d+1")
    if n < 1:
        raise ValueError("n must be at least 1")
    if i < 0:
        raise ValueError("i must be nonnegative")
    cache_key = (n, i, d, k)
    cached = _kequal_cache.get(cache_key)
    if cached is not None:
        return cached
    total = zero(SCHUR)
    for params in kequal_summands(n, i, d, k):
        total = total + psi(params, min_horizon)
    _check_character(total, n, f"kequal_char(n={n}, i={i}, d={d}, k={k})")
    _kequal_cache[cache_key] = total
    return total


def is_stable_step(v_n: SymmetricFunction, v_prev: SymmetricFunction) -> bool:
    """Whether v_n equals v_prev with a box added to every key."""
    v_n, v_prev = to_schur(v_n), to_schur(v_prev)
    if not v_prev:
        return not v_n
    if not v_n:
        return False
    if not (v_n.is_homogeneous() and v_prev.is_homogeneous()):
        raise ValueError("stability step needs homogeneous inputs")
    if v_n.degree() != v_prev.degree() + 1:
        raise ValueError(
            f"degree mismatch: {v_n.degree()} vs {v_prev.degree()} + 1"
        )
    return v_n == v_prev.add_box()


def theorem_bounds(d: int, k: int, i: int) -> set[Fraction]:
    """Proven stabilization bounds for the k-equal sequence at degree i.

    Always contains 2i/(d-1); for even d and k >= d+2 the second bound
    ki/(k-d-1) applies as well.  "Stabilizes at m" means the add-a-box
    step holds for every n > m.
    """
    if d < 2 or k < d + 1:
        raise ValueError("need d >= 2 and k >= d+1")
    if i < 0:
        raise ValueError("i must be nonnegative")
    bounds = {Fraction(2 * i, d - 1)}
    if d % 2 == 0 and k >= d + 2:
        bounds.add(Fraction(k * i, k - d - 1))
    return bounds


def general_bound(lam: LambdaSet, i: int, d: int) -> Fraction:
    """Stabilization bound 4(i+1-rank)/(d-1) for a padded base set."""
    if d < 2:
        raise ValueError("d must be at least 2")
    return Fraction(4 * (i + 1 - lam.rank), d - 1)


@dataclass
class StabilityReport:
    """Computed characteristics over a range of n with certification."""

    d: int
    k: int
    i: int
    horizon: int
    bounds: tuple[Fraction, ...]
    chars: dict[int, SymmetricFunction]
    stable_steps: dict[int, bool]
    sharp_bound: int | None
    vacuous: bool
    certified: bool

    def bound_text(self) -> str:
        if not self.certified:
            return "horizon-limited"
        if self.vacuous:
            return "vacuous"
        return str(self.sharp_bound)

    def to_json_obj(self) -> dict:
        if not self.certified:
            sharp = "horizon-limited"
        elif self.vacuous:
            sharp = "vacuous"
        else:
            sharp = self.sharp_bound
        return {
            "d": self.d,
            "k": self.k,
            "i": self.i,
            "horizon": self.horizon,
            "bounds": [str(b) for b in self.bounds],
            "chars": {str(n): self.chars[n].to_text() for n in sorted(self.chars)},
            "stable_steps": {str(n): self.stable_steps[n] for n in sorted(self.stable_steps)},
            "sharp_bound": sharp,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "StabilityReport":
        sharp = obj["sharp_bound"]
        vacuous = sharp == "vacuous"
        certified = sharp != "horizon-limited"
        return cls(
            d=obj["d"],
            k=obj["k"],
            i=obj["i"],
            horizon=obj["horizon"],
            bounds=tuple(Fraction(b) for b in obj["bounds"]),
            chars={int(n): from_text(text) for n, text in obj["chars"].items()},
            stable_steps={int(n): bool(v) for n, v in obj["stable_steps"].items()},
            sharp_bound=sharp if isinstance(sharp, int) else None,
            vacuous=vacuous,
            certified=certified,
        )

    def csv_row(self) -> str:
        return f"{self.k},{self.i},{self.bound_text()}"


def sharp_bound_certified(
    d: int,
    k: int,
    i: int,
    horizon: int | None = None,
    progress: Progress = None,
) -> StabilityReport:
    """Compute the sequence up to the theorem horizon and certify the
    sharp stabilization point.

    The horizon defaults to floor of the least proven bound; stability
    beyond it is guaranteed, so the largest failing step inside the
    window is the sharp bound.  A lower override gives an uncertified
    report; an identically zero window is reported as vacuous.
    """
    bounds = tuple(sorted(theorem_bounds(d, k, i)))
    theorem_horizon = math.floor(min(bounds))
    window = theorem_horizon if horizon is None else horizon
    certified = window >= theorem_horizon

    for t in range(1, window // k + 1):
        for r in range(1, t + 1):
            _core_series(d, k, r, t, window)

    chars: dict[int, SymmetricFunction] = {}
    for n in range(1, window + 1):
        chars[n] = kequal_char(n, i, d, k, min_horizon=window)
        if progress is not None:
            progress(f"n={n} support={len(chars[n])}")
    stable_steps = {
        n: is_stable_step(chars[n], chars[n - 1]) for n in range(2, window + 1)
    }
    failing = [n for n, ok in stable_steps.items() if not ok]
    if any(chars.values()):
        if not failing:
            raise AssertionError(
                f"nonzero sequence with no failing step up to {window} (d={d}, k={k}, i={i})"
            )
        sharp, vacuous = max(failing), False
    else:
        sharp, vacuous = None, True
    return StabilityReport(
        d=d,
        k=k,
        i=i,
        horizon=window,
        bounds=bounds,
        chars=chars,
        stable_steps=stable_steps,
        sharp_bound=sharp,
        vacuous=vacuous,
        certified=certified,
    )


def lambda_char_smalln(
    n: int, d: int, lam: LambdaSet, i: int, limit: int | None = None
) -> SymmetricFunction:
    """Characteristic for a general padded base set, from the lattice
    homology model (small n only)."""
    from .oracle import sw_complement_char

    return sw_complement_char(n, d, lam.extended(n), i, limit=limit)
