"""Containment decisions I^(m) <= M^slack * I^r and conjecture scans.

The central question: given a squarefree decomposition presenting I, an
ordinary power exponent r, a symbolic exponent m and a degree slack,
does every element of the symbolic power I^(m) lie in M^slack * I^r,
where M is the ideal of all variables?  For monomial data it suffices to
test the minimal generators of I^(m), and each test asks for a multiset
of r generators of I whose product divides the candidate with at least
``slack`` degrees to spare.

Fast paths, both re-verified where they produce witnesses:

* degree obstruction: if alpha(I^(m)) < r * alpha(I) + slack, the
  containment fails on degree grounds alone and a least-degree generator
  of I^(m) is the canonical witness;
* regularity threshold (Steiner complements, slack 0): the containment
  I^(m) <= I^r is guaranteed once alpha(I^(m)) >= r * (v - n + 1), the
  right side being r times the regularity of the complement ideal.

Every reported failure witness is independently confirmed: membership in
the symbolic power by the linear support predicate, non-membership in
M^slack * I^r by exhaustive multiset enumeration when the search space
is small enough.  Exact rational arithmetic throughout; no floats.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations_with_replacement
from math import ceil, comb
from typing import Iterator

from .errors import (
    DegenerateRegion,
    InternalInconsistency,
    ResourceLimit,
)
from .monomials import Monomial, MonomialIdeal, member_of_power, power
from .symbolic import (
    DEFAULT_GENERATOR_CAP,
    PrimeDecomposition,
    initial_degree,
    member_of_symbolic,
    min_degree_generators,
    symbolic_power,
)

_NAIVE_RECHECK_CAP = 250_000  # multiset count below which the brute recheck runs


@dataclass(frozen=True)
class ContainmentQuery:
    """Parameters of one containment question I^(m) <= M^slack * I^r."""

    decomposition: PrimeDecomposition
    m: int
    r: int
    slack: int = 0

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if self.r < 1:
            raise ValueError("r must be >= 1")
        if self.slack < 0:
            raise ValueError("slack must be >= 0")


@dataclass(frozen=True)
class ContainmentReport:
    """Outcome of one containment check.

    holds=False implies a witness: a minimal generator of I^(m) outside
    M^slack * I^r, the canonically first one the scan encountered.
    ``method`` records which path decided the question.  elapsed_ms is
    wall time and is the only non-deterministic field.
    """

    m: int
    r: int
    slack: int
    holds: bool
    witness: Monomial | None
    alpha_m: int
    alpha_r: int
    omega_r: int
    method: str
    elapsed_ms: float

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "r": self.r,
            "slack": self.slack,
            "holds": self.holds,
            "witness": None if self.witness is None else self.witness.exponent_string(),
            "alpha_m": self.alpha_m,
            "alpha_r": self.alpha_r,
            "omega_r": self.omega_r,
            "method": self.method,
            "elapsed_ms": self.elapsed_ms,
        }


class Conjecture(str, Enum):
    HARBOURNE_HUNEKE_1 = "harbourne-huneke-1"
    HARBOURNE_HUNEKE_2 = "harbourne-huneke-2"
    STABLE_HARBOURNE = "stable-harbourne"
    CHUDNOVSKY = "chudnovsky"
    DEMAILLY = "demailly"
    ELS = "els"


@dataclass(frozen=True)
class ConjectureInstance:
    """One checked instance: its parameters and whether it held."""

    params: dict
    holds: bool
    witness: Monomial | None = None

    def to_dict(self) -> dict:
        out = {"params": dict(self.params), "holds": self.holds}
        if self.witness is not None:
            out["witness"] = self.witness.exponent_string()
        return out


@dataclass(frozen=True)
class ConjectureVerdict:
    """All instances of one conjecture over a scan range."""

    name: Conjecture
    instances: tuple[ConjectureInstance, ...]
    all_hold: bool
    threshold: Fraction | None = None  # analytic guarantee bound, where known

    def to_dict(self) -> dict:
        out = {
            "conjecture": self.name.value,
            "all_hold": self.all_hold,
            "instances": [inst.to_dict() for inst in self.instances],
        }
        if self.threshold is not None:
            out["threshold"] = str(self.threshold)
        return out


class ContainmentEngine:
    """Shared state for repeated containment checks on one decomposition.

    Caches symbolic powers, initial degrees and the base ideal behind a
    lock, so scans and thread pools reuse instead of recomputing.  The
    generator cap and optional wall-clock budget apply to every symbolic
    power the engine materializes.
    """

    def __init__(
        self,
        decomposition: PrimeDecomposition,
        *,
        generator_cap: int = DEFAULT_GENERATOR_CAP,
        time_budget: float | None = None,
        progress=None,
    ):
        self.decomposition = decomposition
        self.generator_cap = generator_cap
        self.deadline = None if time_budget is None else time.monotonic() + time_budget
        self.progress = progress
        self._lock = threading.Lock()
        self._symbolic: dict[int, MonomialIdeal] = {}
        self._alpha: dict[int, int] = {}
        self._ordinary: dict[int, MonomialIdeal] = {}

    # cached building blocks

    def symbolic(self, m: int) -> MonomialIdeal:
        with self._lock:
            hit = self._symbolic.get(m)
        if hit is not None:
            return hit
        ideal = symbolic_power(
            self.decomposition,
            m,
            generator_cap=self.generator_cap,
            deadline=self.deadline,
            progress=self.progress,
        )
        alpha = self.alpha(m)
        got = ideal.min_degree()
        if got != alpha:
            raise InternalInconsistency(
                f"symbolic power m={m}: min generator degree {got} "
                f"!= bound-and-search alpha {alpha}"
            )
        with self._lock:
            self._symbolic.setdefault(m, ideal)
        return ideal

    def base_ideal(self) -> MonomialIdeal:
        return self.symbolic(1)

    def alpha(self, m: int) -> int:
        with self._lock:
            hit = self._alpha.get(m)
        if hit is not None:
            return hit
        val = initial_degree(self.decomposition, m)
        with self._lock:
            self._alpha.setdefault(m, val)
        return val

    def ordinary_power(self, r: int) -> MonomialIdeal:
        with self._lock:
            hit = self._ordinary.get(r)
        if hit is not None:
            return hit
        val = power(self.base_ideal(), r)
        with self._lock:
            self._ordinary.setdefault(r, val)
        return val

    def omega_r(self, r: int, audit: bool = False) -> int:
        """Largest minimal-generator degree of I^r.

        For Steiner complements the closed form r * (v - n) applies (all
        generators of I have degree v - n and powers stay equigenerated);
        audit=True forces materializing I^r and cross-checks the formula.
        """
        P = self.decomposition
        if P.steiner is not None:
            _, n, v = P.steiner
            formula = r * (v - n)
            if not audit:
                return formula
            got = self.ordinary_power(r).max_degree()
            if got != formula:
                raise InternalInconsistency(
                    f"omega(I^{r}) = {got} disagrees with closed form {formula}"
                )
            return formula
        got = self.ordinary_power(r).max_degree()
        if got is None:
            raise InternalInconsistency("ordinary power of a nonzero ideal is zero")
        return got

    # witness confirmation, deliberately on independent code paths

    def _confirm_witness(self, w: Monomial, m: int, r: int, slack: int) -> None:
        P = self.decomposition
        if not member_of_symbolic(w, P, m):
            raise InternalInconsistency(
                f"witness {w} is not in the symbolic power m={m}"
            )
        base = self.base_ideal()
        k = base.generator_count
        if comb(k + r - 1, r) <= _NAIVE_RECHECK_CAP:
            for combo in combinations_with_replacement(base.generators, r):
                prod = combo[0]
                for g in combo[1:]:
                    prod = prod.times(g)
                if prod.divides(w) and w.degree - prod.degree >= slack:
                    raise InternalInconsistency(
                        f"witness {w} is divisible by a generator product; "
                        f"membership search disagrees with enumeration"
                    )

    # the main decision procedure

    def check(self, m: int, r: int, slack: int = 0, *, audit: bool = False) -> ContainmentReport:
        """Decide I^(m) <= M^slack * I^r and report with witness on failure.

        audit=True disables the true-result shortcut and the omega closed
        form, forcing the generator-by-generator membership scan; used by
        sanity checks that exist to exercise the real engine.
        """
        if m < 1 or r < 1 or slack < 0:
            raise ValueError("need m >= 1, r >= 1, slack >= 0")
        t0 = time.perf_counter()
        P = self.decomposition
        alpha_1 = self.alpha(1)
        alpha_m = self.alpha(m)
        alpha_r = r * alpha_1  # alpha is additive on ordinary powers of monomial ideals
        omega_r = self.omega_r(r, audit=audit)

        def report(holds: bool, witness: Monomial | None, method: str) -> ContainmentReport:
            elapsed = (time.perf_counter() - t0) * 1000.0
            return ContainmentReport(
                m, r, slack, holds, witness, alpha_m, alpha_r, omega_r, method, elapsed
            )

        # degree obstruction: too little degree to lie in M^slack * I^r
        if alpha_m < alpha_r + slack:
            witness = min_degree_generators(P, m)[0]
            self._confirm_witness(witness, m, r, slack)
            return report(False, witness, "degree-obstruction")

        if not audit:
            # symbolic powers shrink as m grows, so r = 1 with no slack
            # is containment in I^(1) itself
            if r == 1 and slack == 0:
                return report(True, None, "symbolic-descent")
            # Steiner regularity threshold: alpha(I^(m)) >= r * reg(I)
            # forces the containment, reg(I) = v - n + 1
            if slack == 0 and P.steiner is not None:
                _, n, v = P.steiner
                if alpha_m >= r * (v - n + 1):
                    return report(True, None, "regularity-threshold")

        sym = self.symbolic(m)
        base = self.base_ideal()
        for idx, g in enumerate(sym.generators):
            if self.deadline is not None and time.monotonic() > self.deadline:
                raise ResourceLimit(
                    "membership-scan",
                    f"time budget exhausted at generator {idx} of {sym.generator_count}",
                    {
                        "m": m,
                        "r": r,
                        "slack": slack,
                        "generators_checked": idx,
                        "generators_total": sym.generator_count,
                        "holds_so_far": True,
                    },
                )
            if not member_of_power(g, base, r, slack):
                self._confirm_witness(g, m, r, slack)
                return report(False, g, "generator-scan")
        return report(True, None, "generator-scan")


def check_containment(
    query: ContainmentQuery,
    *,
    engine: ContainmentEngine | None = None,
    audit: bool = False,
    generator_cap: int = DEFAULT_GENERATOR_CAP,
    time_budget: float | None = None,
) -> ContainmentReport:
    """Decide the query; convenience wrapper around ContainmentEngine."""
    if engine is None:
        engine = ContainmentEngine(
            query.decomposition, generator_cap=generator_cap, time_budget=time_budget
        )
    elif engine.decomposition != query.decomposition:
        raise ValueError("engine was built for a different decomposition")
    return engine.check(query.m, query.r, query.slack, audit=audit)


def check_els(
    P: PrimeDecomposition,
    r: int,
    *,
    engine: ContainmentEngine | None = None,
    generator_cap: int = DEFAULT_GENERATOR_CAP,
    time_budget: float | None = None,
) -> ContainmentReport:
    """Sanity check I^(h*r) <= I^r, h the big height; always a theorem.

    Runs in audit mode so the real membership machinery is exercised; a
    False outcome is impossible mathematics and raises
    InternalInconsistency to flag the implementation bug.
    """
    if engine is None:
        engine = ContainmentEngine(P, generator_cap=generator_cap, time_budget=time_budget)
    report = engine.check(P.big_height * r, r, 0, audit=True)
    if not report.holds:
        raise InternalInconsistency(
            f"ELS containment I^({P.big_height * r}) <= I^{r} reported false; "
            f"witness {report.witness}"
        )
    return report


def stable_harbourne_scan(
    P: PrimeDecomposition,
    r_lo: int,
    r_hi: int,
    *,
    engine: ContainmentEngine | None = None,
    generator_cap: int = DEFAULT_GENERATOR_CAP,
    time_budget: float | None = None,
) -> ConjectureVerdict:
    """Check I^(h*r - h + 1) <= I^r for r in [r_lo, r_hi].

    For Steiner complements the verdict carries the analytic threshold
    v / (n - 1): every r at or above it is guaranteed by the regularity
    bound, so scans beyond the threshold only confirm.
    """
    if not (1 <= r_lo <= r_hi):
        raise ValueError("need 1 <= r_lo <= r_hi")
    if engine is None:
        engine = ContainmentEngine(P, generator_cap=generator_cap, time_budget=time_budget)
    h = P.big_height
    instances = []
    for r in range(r_lo, r_hi + 1):
        m = h * r - h + 1
        rep = engine.check(m, r, 0)
        instances.append(
            ConjectureInstance({"r": r, "m": m, "slack": 0}, rep.holds, rep.witness)
        )
    threshold = None
    if P.steiner is not None:
        _, n, v = P.steiner
        if n >= 2:
            threshold = Fraction(v, n - 1)
    return ConjectureVerdict(
        Conjecture.STABLE_HARBOURNE,
        tuple(instances),
        all(i.holds for i in instances),
        threshold,
    )


def harbourne_huneke_scan(
    P: PrimeDecomposition,
    r_lo: int,
    r_hi: int,
    form: int,
    *,
    engine: ContainmentEngine | None = None,
    generator_cap: int = DEFAULT_GENERATOR_CAP,
    time_budget: float | None = None,
) -> ConjectureVerdict:
    """Slack containments of Harbourne-Huneke type over an r range.

    form 1: I^(h*r) <= M^(r*(h-1)) * I^r
    form 2: I^(h*r - h + 1) <= M^((r-1)*(h-1)) * I^r
    """
    if form not in (1, 2):
        raise ValueError("form must be 1 or 2")
    if not (1 <= r_lo <= r_hi):
        raise ValueError("need 1 <= r_lo <= r_hi")
    if engine is None:
        engine = ContainmentEngine(P, generator_cap=generator_cap, time_budget=time_budget)
    h = P.big_height
    instances = []
    for r in range(r_lo, r_hi + 1):
        if form == 1:
            m, slack = h * r, r * (h - 1)
        else:
            m, slack = h * r - h + 1, (r - 1) * (h - 1)
        rep = engine.check(m, r, slack)
        instances.append(
            ConjectureInstance({"r": r, "m": m, "slack": slack}, rep.holds, rep.witness)
        )
    name = Conjecture.HARBOURNE_HUNEKE_1 if form == 1 else Conjecture.HARBOURNE_HUNEKE_2
    return ConjectureVerdict(name, tuple(instances), all(i.holds for i in instances))


def chudnovsky_check(
    P: PrimeDecomposition,
    h_max: int,
    ambient_dim: int | None = None,
    *,
    engine: ContainmentEngine | None = None,
) -> ConjectureVerdict:
    """Chudnovsky-type bound alpha(I^(h))/h >= (alpha(I) + N - 1)/N.

    N is the ambient dimension: the block size for Steiner complements,
    otherwise it must be passed explicitly.  Exact rationals throughout.
    """
    N = _resolve_ambient(P, ambient_dim)
    if h_max < 1:
        raise ValueError("h_max must be >= 1")
    if engine is None:
        engine = ContainmentEngine(P)
    rhs = Fraction(engine.alpha(1) + N - 1, N)
    instances = []
    for h in range(1, h_max + 1):
        lhs = Fraction(engine.alpha(h), h)
        instances.append(
            ConjectureInstance(
                {"h": h, "lhs": str(lhs), "rhs": str(rhs), "ambient_dim": N},
                lhs >= rhs,
            )
        )
    return ConjectureVerdict(
        Conjecture.CHUDNOVSKY, tuple(instances), all(i.holds for i in instances)
    )


def demailly_check(
    P: PrimeDecomposition,
    m: int,
    h_max: int,
    ambient_dim: int | None = None,
    *,
    engine: ContainmentEngine | None = None,
) -> ConjectureVerdict:
    """Demailly-type bound alpha(I^(h))/h >= (alpha(I^(m)) + N - 1)/(m + N - 1).

    m = 1 recovers the Chudnovsky bound.  For Steiner complements the
    right-hand side is cross-checked against its closed form derived from
    the alpha formula (three cases by m mod n); a mismatch raises
    InternalInconsistency.
    """
    N = _resolve_ambient(P, ambient_dim)
    if h_max < 1 or m < 1:
        raise ValueError("h_max and m must be >= 1")
    if engine is None:
        engine = ContainmentEngine(P)
    rhs = Fraction(engine.alpha(m) + N - 1, m + N - 1)
    if P.steiner is not None:
        _, n, v = P.steiner
        p, q = divmod(m, n)
        if q == 0:
            expect = Fraction(p * v + n - 1, p * n + n - 1)
        elif q == 1:
            expect = Fraction((p + 1) * v - 1, (p + 1) * n)
        else:
            expect = Fraction((p + 1) * v + q - 1, (p + 1) * n + q - 1)
        if rhs != expect:
            raise InternalInconsistency(
                f"Demailly right side {rhs} disagrees with closed form {expect} at m={m}"
            )
    instances = []
    for h in range(1, h_max + 1):
        lhs = Fraction(engine.alpha(h), h)
        instances.append(
            ConjectureInstance(
                {"h": h, "m": m, "lhs": str(lhs), "rhs": str(rhs), "ambient_dim": N},
                lhs >= rhs,
            )
        )
    return ConjectureVerdict(
        Conjecture.DEMAILLY, tuple(instances), all(i.holds for i in instances)
    )


def _resolve_ambient(P: PrimeDecomposition, ambient_dim: int | None) -> int:
    if ambient_dim is not None:
        if ambient_dim < 1:
            raise ValueError("ambient_dim must be >= 1")
        return ambient_dim
    if P.steiner is not None:
        return P.steiner[1]  # block size
    raise ValueError(
        "ambient_dim is required for decompositions without Steiner provenance"
    )


@dataclass(frozen=True)
class ResurgenceRegion:
    """Search region for resurgence witnesses derived from one failure.

    Given big height h, ambient dimension N, a resurgence lower bound
    r1 > 1 in the sense rho >= asymptotic value h*(1 - 1/r1), and one
    failing ratio s0/r0 > h*(1 - 1/r1), any further failing pair (s, r)
    with s/r >= s0/r0 must satisfy r <= r_max and s <= s_max(r):

        r_max = ceil(N / (ratio/(h*(1 - 1/r1)) - 1)),
        s_max(r) = (r + N) * h * (1 - 1/r1).
    """

    big_height: int
    ambient_dim: int
    r1: Fraction
    failing_ratio: Fraction
    asymptotic: Fraction
    r_max: int

    def s_max(self, r: int) -> Fraction:
        return (r + self.ambient_dim) * self.asymptotic

    def to_dict(self) -> dict:
        return {
            "big_height": self.big_height,
            "ambient_dim": self.ambient_dim,
            "r1": str(self.r1),
            "failing_ratio": str(self.failing_ratio),
            "asymptotic_resurgence": str(self.asymptotic),
            "r_max": self.r_max,
            "s_max_slope": str(self.asymptotic),
            "s_max_intercept": str(self.ambient_dim * self.asymptotic),
        }


def resurgence_region(
    big_height: int,
    ambient_dim: int,
    r1: Fraction | int,
    failing_ratio: Fraction | int,
) -> ResurgenceRegion:
    """Bound the search region for resurgence-attaining failures.

    Raises DegenerateRegion when failing_ratio <= h*(1 - 1/r1); then the
    hypothesis of the bounding argument fails and no finite region is
    implied.  r1 must exceed 1.
    """
    if big_height < 1 or ambient_dim < 1:
        raise ValueError("big_height and ambient_dim must be >= 1")
    r1 = Fraction(r1)
    ratio = Fraction(failing_ratio)
    if r1 <= 1:
        raise ValueError("r1 must be > 1")
    asymptotic = big_height * (1 - Fraction(1, r1))
    if ratio <= asymptotic:
        raise DegenerateRegion(
            f"failing ratio {ratio} does not exceed the asymptotic value {asymptotic}"
        )
    excess = ratio / asymptotic - 1
    r_max = ceil(Fraction(ambient_dim) / excess)
    return ResurgenceRegion(big_height, ambient_dim, r1, ratio, asymptotic, r_max)


@dataclass(frozen=True)
class ResurgenceScan:
    """Failures found in the box 1 <= r <= r_max, r < m <= m_max.

    Cells with m <= r are skipped: such ratios m/r <= 1 never improve a
    resurgence lower bound (rho >= 1 always), and symbolic-over-ordinary
    failures there carry no region information.  max_ratio is the best
    m/r over failures, None when everything held.
    """

    m_max: int
    r_max: int
    failures: tuple[ContainmentReport, ...]
    max_ratio: Fraction | None

    def to_dict(self) -> dict:
        return {
            "m_max": self.m_max,
            "r_max": self.r_max,
            "failures": [f.to_dict() for f in self.failures],
            "max_ratio": None if self.max_ratio is None else str(self.max_ratio),
        }


def iter_resurgence_cells(
    P: PrimeDecomposition,
    m_max: int,
    r_max: int,
    *,
    engine: ContainmentEngine | None = None,
    generator_cap: int = DEFAULT_GENERATOR_CAP,
    time_budget: float | None = None,
) -> Iterator[ContainmentReport]:
    """Yield per-cell reports over the scan box, smallest r first.

    Within one r column, reports arrive with m ascending; cached symbolic
    powers are shared across columns through the engine.
    """
    if m_max < 1 or r_max < 1:
        raise ValueError("m_max and r_max must be >= 1")
    if engine is None:
        engine = ContainmentEngine(P, generator_cap=generator_cap, time_budget=time_budget)
    for r in range(1, r_max + 1):
        seen_hold = False
        for m in range(r + 1, m_max + 1):
            rep = engine.check(m, r, 0)
            # symbolic powers shrink with m, so failures in one column
            # must precede the first hold; anything else is an engine bug
            if rep.holds:
                seen_hold = True
            elif seen_hold:
                raise InternalInconsistency(
                    f"containment failed at m={m}, r={r} after holding at smaller m"
                )
            yield rep


def resurgence_search(
    P: PrimeDecomposition,
    m_max: int,
    r_max: int,
    *,
    engine: ContainmentEngine | None = None,
    generator_cap: int = DEFAULT_GENERATOR_CAP,
    time_budget: float | None = None,
) -> ResurgenceScan:
    """Collect all failures in the scan box; see iter_resurgence_cells."""
    failures = [
        rep
        for rep in iter_resurgence_cells(
            P,
            m_max,
            r_max,
            engine=engine,
            generator_cap=generator_cap,
            time_budget=time_budget,
        )
        if not rep.holds
    ]
    best = max((Fraction(f.m, f.r) for f in failures), default=None)
    return ResurgenceScan(m_max, r_max, tuple(failures), best)
