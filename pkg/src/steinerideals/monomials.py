"""Exact arithmetic on monomials and squarefree-or-not monomial ideals.

Monomials are integer exponent vectors over a fixed variable count.
A MonomialIdeal is stored by its unique minimal generating set in a
canonical order: degree ascending, then exponent tuple descending, so
within one degree the generator with the largest power of x1 comes
first.  That order makes first-reported witnesses deterministic.

Kernels work on numpy int64 exponent rows.  Inputs are capped at
EXPONENT_LIMIT per exponent and the operation entry points bound degree
growth, which provably keeps every intermediate far below int64 range.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, TextIO

import numpy as np

from .errors import FormatError, MixedAmbient

# Exponents up to 2^20 and at most 2^20 fold steps keep any sum below
# 2^41, far inside int64.
EXPONENT_LIMIT = 1 << 20
_FOLD_LIMIT = 1 << 20


@dataclass(frozen=True, order=True)
class Monomial:
    """An exponent vector; the monomial x1^e1 * ... * xk^ek."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        for e in exps:
            if e < 0:
                raise ValueError(f"negative exponent in {exps}")
            if e > EXPONENT_LIMIT:
                raise OverflowError(f"exponent {e} exceeds limit {EXPONENT_LIMIT}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def one(cls, variable_count: int) -> "Monomial":
        return cls((0,) * variable_count)

    @property
    def variable_count(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_one(self) -> bool:
        return self.degree == 0

    def _check_ambient(self, other: "Monomial") -> None:
        if len(self.exponents) != len(other.exponents):
            raise MixedAmbient(len(self.exponents), len(other.exponents))

    def divides(self, other: "Monomial") -> bool:
        self._check_ambient(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def times(self, other: "Monomial") -> "Monomial":
        self._check_ambient(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check_ambient(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def exponent_string(self) -> str:
        """Space-separated exponents, the plain-text exchange form."""
        return " ".join(str(e) for e in self.exponents)

    def __str__(self) -> str:
        if self.is_one:
            return "1"
        parts = []
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts)


def _canonical_order(rows: np.ndarray) -> np.ndarray:
    """Indices sorting rows by degree ascending, then tuple descending."""
    if len(rows) == 0:
        return np.arange(0)
    deg = rows.sum(axis=1)
    neg = -rows
    keys = tuple(neg[:, j] for j in range(rows.shape[1] - 1, -1, -1)) + (deg,)
    return np.lexsort(keys)


def _minimal_rows(rows: np.ndarray) -> np.ndarray:
    """Minimal rows under componentwise <=, canonically ordered.

    Works degree group by degree group: a row can only be dominated by a
    row of strictly smaller degree (equal degree and <= means equal, and
    duplicates were removed), so each group is tested against the kept
    set in chunks.
    """
    if len(rows) == 0:
        return rows.reshape(0, rows.shape[1])
    rows = np.unique(rows, axis=0)
    deg = rows.sum(axis=1)
    order = np.argsort(deg, kind="stable")
    rows, deg = rows[order], deg[order]
    kept = []
    start = 0
    while start < len(rows):
        stop = start
        while stop < len(rows) and deg[stop] == deg[start]:
            stop += 1
        group = rows[start:stop]
        if kept:
            K = np.vstack(kept)
            keep_mask = np.ones(len(group), dtype=bool)
            for lo in range(0, len(group), 256):
                chunk = group[lo : lo + 256]
                dominated = (K[None, :, :] <= chunk[:, None, :]).all(axis=2).any(axis=1)
                keep_mask[lo : lo + len(chunk)] &= ~dominated
            group = group[keep_mask]
        if len(group):
            kept.append(group)
        start = stop
    if not kept:
        return rows.reshape(0, rows.shape[1])
    out = np.vstack(kept)
    return out[_canonical_order(out)]


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, stored by its canonical minimal generating set.

    Build instances with minimalize / from_rows (or zero / unit); the
    constructor trusts its input to already be a canonical antichain.
    """

    variable_count: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.variable_count != self.variable_count:
                raise MixedAmbient(self.variable_count, g.variable_count)

    @classmethod
    def zero(cls, variable_count: int) -> "MonomialIdeal":
        return cls(variable_count, ())

    @classmethod
    def unit(cls, variable_count: int) -> "MonomialIdeal":
        return cls(variable_count, (Monomial.one(variable_count),))

    @classmethod
    def from_rows(cls, variable_count: int, rows: np.ndarray) -> "MonomialIdeal":
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, variable_count)
        rows = _minimal_rows(rows)
        gens = tuple(Monomial(tuple(int(x) for x in r)) for r in rows)
        return cls(variable_count, gens)

    @cached_property
    def _rows(self) -> np.ndarray:
        if not self.generators:
            return np.zeros((0, self.variable_count), dtype=np.int64)
        return np.array([g.exponents for g in self.generators], dtype=np.int64)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_one

    @property
    def generator_count(self) -> int:
        return len(self.generators)

    def min_degree(self) -> int | None:
        """Initial degree (least generator degree); None for the zero ideal."""
        return self.generators[0].degree if self.generators else None

    def max_degree(self) -> int | None:
        """Largest minimal-generator degree; None for the zero ideal."""
        return self.generators[-1].degree if self.generators else None

    def contains(self, w: Monomial) -> bool:
        if w.variable_count != self.variable_count:
            raise MixedAmbient(self.variable_count, w.variable_count)
        return any(g.divides(w) for g in self.generators)


def minimalize(
    gens: Iterable[Monomial], variable_count: int | None = None
) -> MonomialIdeal:
    """Unique minimal generating set of the ideal generated by gens.

    variable_count is required when gens is empty (the zero ideal has no
    generator to read the ambient ring from).
    """
    gens = tuple(gens)
    if not gens:
        if variable_count is None:
            raise ValueError("variable_count required for an empty generating set")
        return MonomialIdeal.zero(variable_count)
    nv = gens[0].variable_count
    for g in gens[1:]:
        if g.variable_count != nv:
            raise MixedAmbient(nv, g.variable_count)
    if variable_count is not None and variable_count != nv:
        raise MixedAmbient(variable_count, nv)
    rows = np.array([g.exponents for g in gens], dtype=np.int64)
    return MonomialIdeal.from_rows(nv, rows)


def _check_same_ring(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.variable_count != J.variable_count:
        raise MixedAmbient(I.variable_count, J.variable_count)


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Intersection; generated by pairwise lcms of the two generating sets."""
    _check_same_ring(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(I.variable_count)
    if I.is_unit:
        return J
    if J.is_unit:
        return I
    A, B = I._rows, J._rows
    chunks = []
    for lo in range(0, len(A), 128):
        part = np.maximum(A[lo : lo + 128, None, :], B[None, :, :])
        chunks.append(part.reshape(-1, I.variable_count))
    return MonomialIdeal.from_rows(I.variable_count, np.vstack(chunks))


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """Product ideal; generated by pairwise products."""
    _check_same_ring(I, J)
    if I.is_zero or J.is_zero:
        return MonomialIdeal.zero(I.variable_count)
    if I.is_unit:
        return J
    if J.is_unit:
        return I
    A, B = I._rows, J._rows
    if int(A.max()) + int(B.max()) > EXPONENT_LIMIT * _FOLD_LIMIT:
        raise OverflowError("product exponents exceed supported range")
    chunks = []
    for lo in range(0, len(A), 128):
        part = A[lo : lo + 128, None, :] + B[None, :, :]
        chunks.append(part.reshape(-1, I.variable_count))
    return MonomialIdeal.from_rows(I.variable_count, np.vstack(chunks))


def power(I: MonomialIdeal, r: int) -> MonomialIdeal:
    """r-th power of the ideal; power(I, 0) is the unit ideal."""
    if r < 0:
        raise ValueError("power exponent must be >= 0")
    if r > _FOLD_LIMIT:
        raise OverflowError(f"power exponent {r} exceeds limit {_FOLD_LIMIT}")
    if r == 0:
        return MonomialIdeal.unit(I.variable_count)
    out = I
    for _ in range(r - 1):
        out = multiply(out, I)
    return out


def member_of_power(w: Monomial, I: MonomialIdeal, r: int, slack: int = 0) -> bool:
    """Decide w in M^slack * I^r, M the irrelevant (all-variables) ideal.

    Equivalent to: some multiset of r generators has product dividing w
    with deg(w) - deg(product) >= slack.  Exact depth-first search over
    nonincreasing generator indices with degree pruning and memoized
    failure states; no power ideal is materialized.
    """
    if w.variable_count != I.variable_count:
        raise MixedAmbient(I.variable_count, w.variable_count)
    if r < 0 or slack < 0:
        raise ValueError("r and slack must be >= 0")
    if r == 0:
        return w.degree >= slack
    if I.is_zero:
        return False
    rows = I._rows
    deg = rows.sum(axis=1)
    order = np.argsort(deg, kind="stable")[::-1]  # try big generators first
    rows, deg = rows[order], deg[order]
    min_deg = int(deg.min())
    target = np.array(w.exponents, dtype=np.int64)
    if w.degree < r * min_deg + slack:
        return False
    failed: set[tuple] = set()

    def dfs(residual: np.ndarray, rem: int, start: int) -> bool:
        if rem == 0:
            return int(residual.sum()) >= slack
        if int(residual.sum()) < rem * min_deg + slack:
            return False
        key = (residual.tobytes(), rem, start)
        if key in failed:
            return False
        for gi in range(start, len(rows)):
            g = rows[gi]
            if (g <= residual).all():
                if dfs(residual - g, rem - 1, gi):
                    return True
        failed.add(key)
        return False

    return dfs(target, r, 0)


# Plain-text monomial exchange format: a "vars: k" header line followed
# by one space-separated exponent vector per line.  Blank lines and lines
# starting with '#' are ignored.


def dump_monomials(target: str | TextIO, monomials: Sequence[Monomial] | MonomialIdeal) -> None:
    if isinstance(monomials, MonomialIdeal):
        nv, items = monomials.variable_count, monomials.generators
    else:
        items = tuple(monomials)
        if not items:
            raise ValueError("cannot dump an empty monomial list (no variable count)")
        nv = items[0].variable_count
    lines = [f"vars: {nv}"] + [m.exponent_string() for m in items]
    text = "\n".join(lines) + "\n"
    if hasattr(target, "write"):
        target.write(text)
    else:
        with open(target, "w") as fh:
            fh.write(text)


def load_monomials(source: str | TextIO) -> tuple[int, tuple[Monomial, ...]]:
    """Read the plain-text format; returns (variable_count, monomials)."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = open(source).read()
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("vars:"):
        raise FormatError("monomial file must start with a 'vars: k' header")
    try:
        nv = int(lines[0].split(":", 1)[1])
    except ValueError as exc:
        raise FormatError(f"bad vars header: {lines[0]!r}") from exc
    if nv < 1:
        raise FormatError("variable count must be >= 1")
    out = []
    for ln in lines[1:]:
        try:
            exps = tuple(int(tok) for tok in ln.split())
        except ValueError as exc:
            raise FormatError(f"bad exponent line: {ln!r}") from exc
        if len(exps) != nv:
            raise FormatError(f"exponent line {ln!r} has {len(exps)} entries, expected {nv}")
        try:
            out.append(Monomial(exps))
        except (ValueError, OverflowError) as exc:
            raise FormatError(f"bad exponent line: {ln!r} ({exc})") from exc
    return nv, tuple(out)
