"""Exact symmetric function arithmetic in the Schur and power-sum bases.

Coefficients are exact rationals (`int` where integral, `fractions.Fraction`
otherwise).  Basis changes go through the symmetric-group character table
computed by the Murnaghan-Nakayama rule and are mutually inverse; Schur
products use Littlewood-Richardson expansion, power products concatenate
keys.
"""

from __future__ import annotations

import re
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from ..partitions import Partition
from . import characters, lr

Coeff = int | Fraction


class Basis(Enum):
    SCHUR = "s"
    POWER = "p"


SCHUR = Basis.SCHUR
POWER = Basis.POWER


def _norm(c: Coeff) -> Coeff:
    """Collapse integral fractions to plain ints."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class SymmetricFunction:
    """Finitely supported linear combination of basis elements.

    Values are immutable once constructed; all operations return new
    objects, so instances are safe to share, hash and cache.
    """

    __slots__ = ("basis", "_terms", "_hash")

    def __init__(
        self,
        basis: Basis,
        terms: Mapping[Iterable[int], Coeff] | Iterable[tuple[Iterable[int], Coeff]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Partition, Coeff] = {}
        for key, coeff in items:
            coeff = _norm(coeff if isinstance(coeff, (int, Fraction)) else Fraction(coeff))
            if coeff == 0:
                continue
            key = key if type(key) is Partition else Partition(key)
            clean[key] = _norm(clean.get(key, 0) + coeff) if key in clean else coeff
            if clean[key] == 0:
                del clean[key]
        self.basis = basis
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, basis: Basis, terms: dict[Partition, Coeff]) -> "SymmetricFunction":
        """Internal fast path; ``terms`` must be normalized and is adopted."""
        obj = object.__new__(cls)
        obj.basis = basis
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection ---------------------------------------------------

    def items(self) -> Iterator[tuple[Partition, Coeff]]:
        return iter(self._terms.items())

    def support(self) -> list[Partition]:
        return sorted(self._terms)

    def coefficient(self, key: Iterable[int]) -> Coeff:
        return self._terms.get(Partition(key), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degrees(self) -> list[int]:
        return sorted({k.size for k in self._terms})

    def degree(self) -> int | None:
        """Largest degree present, or None for the zero function."""
        return max((k.size for k in self._terms), default=None)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def is_nonnegative_integral(self) -> bool:
        return all(isinstance(c, int) and c >= 0 for c in self._terms.values())

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    # -- ring structure -----------------------------------------------

    def _coerced(self, other: "SymmetricFunction") -> "SymmetricFunction":
        if other.basis is self.basis or not other._terms:
            return other
        return to_schur(other) if self.basis is SCHUR else to_power(other)

    def __add__(self, other: "SymmetricFunction") -> "SymmetricFunction":
        if not isinstance(other, SymmetricFunction):
            return NotImplemented
        if not self._terms:
            return other
        other = self._coerced(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = _norm(out.get(key, 0) + c)
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
        return SymmetricFunction._raw(self.basis, out)

    def __neg__(self) -> "SymmetricFunction":
        return SymmetricFunction._raw(self.basis, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "SymmetricFunction") -> "SymmetricFunction":
        return self + (-other)

    def scale(self, c: Coeff) -> "SymmetricFunction":
        c = _norm(c if isinstance(c, (int, Fraction)) else Fraction(c))
        if c == 0:
            return SymmetricFunction._raw(self.basis, {})
        return SymmetricFunction._raw(
            self.basis, {k: _norm(v * c) for k, v in self._terms.items()}
        )

    def __rmul__(self, c: Coeff) -> "SymmetricFunction":
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other) -> "SymmetricFunction":
        if isinstance(other, SymmetricFunction):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    # -- graded pieces ------------------------------------------------

    def homogeneous_part(self, t: int) -> "SymmetricFunction":
        """Terms of degree exactly ``t``."""
        if t < 0:
            return SymmetricFunction._raw(self.basis, {})
        return SymmetricFunction._raw(
            self.basis, {k: c for k, c in self._terms.items() if k.size == t}
        )

    def truncate(self, max_degree: int) -> "SymmetricFunction":
        """Drop all terms of degree above ``max_degree``."""
        return SymmetricFunction._raw(
            self.basis, {k: c for k, c in self._terms.items() if k.size <= max_degree}
        )

    def add_box(self) -> "SymmetricFunction":
        """Replace every Schur key by key+box; input must be homogeneous."""
        if self.basis is not SCHUR:
            raise ValueError("add_box requires the Schur basis")
        if not self.is_homogeneous():
            raise ValueError("add_box requires a homogeneous function")
        return SymmetricFunction._raw(
            SCHUR, {k.add_box(): c for k, c in self._terms.items()}
        )

    # -- equality -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymmetricFunction):
            return NotImplemented
        if self._terms != other._terms:
            return False
        return not self._terms or self.basis is other.basis

    def __hash__(self) -> int:
        if self._hash is None:
            basis = self.basis if self._terms else None
            self._hash = hash((basis, frozenset(self._terms.items())))
        return self._hash

    # -- rendering ----------------------------------------------------

    def to_text(self) -> str:
        """Human-readable expansion, e.g. ``3*s[4,1] + s[3,2]``."""
        if not self._terms:
            return "0"
        letter = self.basis.value
        pieces = []
        for key in sorted(self._terms, reverse=True):
            c = self._terms[key]
            body = f"{letter}{key.text()}"
            mag = abs(c)
            term = body if mag == 1 else f"{mag}*{body}"
            pieces.append(("-" if c < 0 else "+", term))
        sign, first = pieces[0]
        out = ("-" if sign == "-" else "") + first
        for sign, term in pieces[1:]:
            out += f" {sign} {term}"
        return out

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"<SymmetricFunction {self.to_text()}>"

    def to_json_obj(self) -> dict[str, str]:
        """JSON mapping from partition text to rational string."""
        return {k.text(): str(self._terms[k]) for k in sorted(self._terms)}

    @classmethod
    def from_json_obj(cls, obj: Mapping[str, str], basis: Basis = SCHUR) -> "SymmetricFunction":
        return cls(basis, ((Partition.parse(k), Fraction(v)) for k, v in obj.items()))


_TERM_RE = re.compile(r"(?:(\d+(?:/\d+)?)\*)?([sp])(\[[^\]]*\])")


def from_text(text: str, expect_basis: Basis | None = None) -> SymmetricFunction:
    """Parse the ``to_text`` rendering back into a function."""
    text = text.strip()
    if text == "0":
        return SymmetricFunction(expect_basis or SCHUR)
    terms: list[tuple[Partition, Coeff]] = []
    basis_seen: set[str] = set()
    pos, sign = 0, 1
    while pos < len(text):
        ch = text[pos]
        if ch in "+- ":
            if ch == "-":
                sign = -1
            elif ch == "+":
                sign = 1
            pos += 1
            continue
        m = _TERM_RE.match(text, pos)
        if m is None:
            raise ValueError(f"cannot parse symmetric function text: {text!r}")
        coeff = Fraction(m.group(1)) if m.group(1) else 1
        basis_seen.add(m.group(2))
        terms.append((Partition.parse(m.group(3)), sign * coeff))
        sign = 1
        pos = m.end()
    if len(basis_seen) != 1:
        raise ValueError(f"mixed bases in {text!r}")
    basis = SCHUR if basis_seen.pop() == "s" else POWER
    if expect_basis is not None and basis is not expect_basis:
        raise ValueError(f"expected {expect_basis} terms in {text!r}")
    return SymmetricFunction(basis, terms)


# -- constructors ------------------------------------------------------


def zero(basis: Basis = SCHUR) -> SymmetricFunction:
    return SymmetricFunction._raw(basis, {})


def one(basis: Basis = SCHUR) -> SymmetricFunction:
    return SymmetricFunction._raw(basis, {Partition(): 1})


def schur(key: Iterable[int]) -> SymmetricFunction:
    """The Schur function s_key."""
    return SymmetricFunction._raw(SCHUR, {Partition(key): 1})


def h(n: int) -> SymmetricFunction:
    """Complete homogeneous h_n = s_(n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return schur((n,)) if n else one(SCHUR)


def e(n: int) -> SymmetricFunction:
    """Elementary e_n = s_(1^n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return schur((1,) * n)


def p(key: Iterable[int]) -> SymmetricFunction:
    """The power sum p_key."""
    return SymmetricFunction._raw(POWER, {Partition(key): 1})


# -- products ----------------------------------------------------------


def _merge_keys(a: Partition, b: Partition) -> Partition:
    return Partition(sorted(a + b, reverse=True))


# Schur key pairs whose smaller side exceeds this size route through the
# power basis; direct tableau stacking wins below it.
LR_WEIGHT_LIMIT = 14


def mul(
    f: SymmetricFunction, g: SymmetricFunction, max_degree: int | None = None
) -> SymmetricFunction:
    """Exact product; result is expressed in the basis of ``f``.

    Schur-basis pairs expand through Littlewood-Richardson coefficients
    (the smaller key acts as the tableau weight) unless both keys are
    large; anything involving the power basis multiplies by key
    concatenation.
    """
    if not f._terms or not g._terms:
        return zero(f.basis)
    if f.basis is SCHUR and g.basis is SCHUR:
        out: dict[Partition, Coeff] = {}
        deferred: list[tuple[Partition, Partition, Coeff]] = []
        for lam, c1 in f._terms.items():
            for mu, c2 in g._terms.items():
                if max_degree is not None and lam.size + mu.size > max_degree:
                    continue
                base, weight = (lam, mu) if lam.size >= mu.size else (mu, lam)
                c = c1 * c2
                if weight.size > LR_WEIGHT_LIMIT:
                    deferred.append((base, weight, c))
                    continue
                for nu, m in lr.lr_expand(base, weight):
                    s = _norm(out.get(nu, 0) + c * m)
                    if s == 0:
                        out.pop(nu, None)
                    else:
                        out[nu] = s
        result = SymmetricFunction._raw(SCHUR, out)
        for base, weight, c in deferred:
            product = mul(to_power(schur(base)), to_power(schur(weight)))
            result = result + to_schur(product).scale(c)
        return result
    fp, gp = to_power(f), to_power(g)
    out = {}
    gsizes = [(key, key.size, c) for key, c in gp._terms.items()]
    for k1, c1 in fp._terms.items():
        s1 = k1.size
        for k2, s2, c2 in gsizes:
            if max_degree is not None and s1 + s2 > max_degree:
                continue
            key = _merge_keys(k1, k2)
            s = _norm(out.get(key, 0) + c1 * c2)
            if s == 0:
                out.pop(key, None)
            else:
                out[key] = s
    result = SymmetricFunction._raw(POWER, out)
    return to_schur(result) if f.basis is SCHUR else result


# -- involution and basis change ---------------------------------------


def omega(f: SymmetricFunction) -> SymmetricFunction:
    """The involution sending h_n to e_n.

    Conjugates Schur keys; on power sums multiplies p_mu by
    (-1)^(|mu| - length(mu)).
    """
    if f.basis is SCHUR:
        return SymmetricFunction._raw(
            SCHUR, {k.conjugate(): c for k, c in f._terms.items()}
        )
    return SymmetricFunction._raw(
        POWER,
        {k: (c if (k.size - len(k)) % 2 == 0 else -c) for k, c in f._terms.items()},
    )


def to_power(f: SymmetricFunction) -> SymmetricFunction:
    """Exact expansion in the power-sum basis."""
    if f.basis is POWER:
        return f
    out: dict[Partition, Coeff] = {}
    for lam, c in f._terms.items():
        for mu, x in characters.schur_to_power_row(lam):
            s = _norm(out.get(mu, 0) + c * x)
            if s == 0:
                out.pop(mu, None)
            else:
                out[mu] = s
    return SymmetricFunction._raw(POWER, out)


def to_schur(f: SymmetricFunction) -> SymmetricFunction:
    """Exact expansion in the Schur basis."""
    if f.basis is SCHUR:
        return f
    out: dict[Partition, Coeff] = {}
    for mu, c in f._terms.items():
        for lam, x in characters.power_to_schur_row(mu):
            s = _norm(out.get(lam, 0) + c * x)
            if s == 0:
                out.pop(lam, None)
            else:
                out[lam] = s
    return SymmetricFunction._raw(SCHUR, out)


def homogeneous_part(f: SymmetricFunction, t: int) -> SymmetricFunction:
    return f.homogeneous_part(t)


def add_box(f: SymmetricFunction) -> SymmetricFunction:
    return f.add_box()
