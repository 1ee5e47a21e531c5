"""Penner-style twist words on a pair of filling multicurves.

A word in positive twists along one multicurve and negative twists along a
second, with every curve used at least once, is pseudo-Anosov whenever the
two multicurves jointly fill the surface.  This module validates the word
conditions, checks the filling conditions that are decidable from
intersection data (plus an optional region certificate), and builds the
chain systems used by the rest of the package.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Tuple

from .homology import Family, HomologyClass, SymplecticSpace, TwistGenerator, TwistWord


class FillingStatus(enum.Enum):
    VERIFIED = "verified"
    NECESSARY_ONLY = "necessary-conditions-only"
    FAILED = "failed"


@dataclass(frozen=True)
class Region:
    """One complementary region of the union of the curves."""

    disk: bool
    label: str = ""


@dataclass(frozen=True)
class CurveSystem:
    """Two multicurves on a genus-g surface with pairwise intersection counts.

    `geo_int` is the symmetric matrix of geometric intersection numbers in
    the order of `curves`.  Curves within one family must be disjoint
    (that is what makes each family a multicurve).  `regions` is an
    optional certificate describing the complementary regions.
    """

    genus: int
    curves: Tuple[TwistGenerator, ...]
    geo_int: Tuple[Tuple[int, ...], ...]
    regions: Optional[Tuple[Region, ...]] = None

    def __post_init__(self):
        n = len(self.curves)
        if len(self.geo_int) != n or any(len(row) != n for row in self.geo_int):
            raise ValueError("geo_int must be square of size len(curves)")
        for i in range(n):
            if self.geo_int[i][i] != 0:
                raise ValueError("geo_int diagonal must be zero")
            for j in range(n):
                e = self.geo_int[i][j]
                if isinstance(e, bool) or not isinstance(e, int) or e < 0:
                    raise ValueError("geo_int entries must be nonnegative integers")
                if e != self.geo_int[j][i]:
                    raise ValueError("geo_int must be symmetric")
        seen = set()
        for c in self.curves:
            if c.label in seen:
                raise ValueError(f"duplicate curve label {c.label!r}")
            seen.add(c.label)
        for i in range(n):
            for j in range(i + 1, n):
                if self.curves[i].family == self.curves[j].family and self.geo_int[i][j] != 0:
                    raise ValueError(
                        f"curves {self.curves[i].label!r} and {self.curves[j].label!r} are in "
                        "the same family but intersect"
                    )

    def index_of(self, label: str) -> int:
        for i, c in enumerate(self.curves):
            if c.label == label:
                return i
        raise ValueError(f"unknown curve label {label!r}")

    @property
    def total_intersections(self) -> int:
        n = len(self.curves)
        return sum(self.geo_int[i][j] for i in range(n) for j in range(i + 1, n))

    @property
    def space(self) -> SymplecticSpace:
        return SymplecticSpace(self.genus)

    def generator_map(self):
        return {c.label: c for c in self.curves}


@dataclass(frozen=True)
class PennerReport:
    """Validation outcome; word fields are None when only filling was assessed."""

    word_valid: Optional[bool]
    all_curves_used: Optional[bool]
    sign_discipline: Optional[bool]
    filling_status: FillingStatus
    messages: Tuple[str, ...] = ()


def filling_check(sys: CurveSystem) -> PennerReport:
    """Check the filling conditions decidable from the given data.

    Necessary conditions: the intersection graph is connected, and every
    curve meets the opposite family.  With a region certificate (every
    complementary region flagged as a disk or not), filling is decided:
    all-disk regions whose count matches the Euler count chi + I verify
    filling; anything else fails.
    """
    n = len(sys.curves)
    messages = []
    ok = True

    for i, c in enumerate(sys.curves):
        hits_opposite = any(
            sys.geo_int[i][j] > 0 and sys.curves[j].family != c.family for j in range(n)
        )
        if not hits_opposite:
            ok = False
            messages.append(f"curve {c.label!r} does not meet the opposite family")

    # connectivity of the intersection graph
    if n > 0:
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j not in seen and sys.geo_int[i][j] > 0:
                    seen.add(j)
                    stack.append(j)
        if len(seen) != n:
            ok = False
            isolated = [sys.curves[i].label for i in range(n) if i not in seen]
            messages.append(f"intersection graph is disconnected (unreached: {isolated})")

    if not ok:
        status = FillingStatus.FAILED
    elif sys.regions is None:
        status = FillingStatus.NECESSARY_ONLY
        messages.append("no region certificate supplied; filling not fully verified")
    else:
        non_disks = [r for r in sys.regions if not r.disk]
        chi = 2 - 2 * sys.genus
        expected = chi + sys.total_intersections
        if non_disks:
            status = FillingStatus.FAILED
            messages.append(f"{len(non_disks)} complementary region(s) are not disks")
        elif len(sys.regions) != expected:
            status = FillingStatus.FAILED
            messages.append(
                f"region certificate inconsistent: {len(sys.regions)} regions, "
                f"Euler count requires {expected}"
            )
        else:
            status = FillingStatus.VERIFIED
    return PennerReport(None, None, None, status, tuple(messages))


def validate_word(word: TwistWord, sys: CurveSystem) -> PennerReport:
    """Validate the word conditions against the curve system.

    Sign discipline: one family appears only with positive exponents and
    the other only with negative ones (either orientation).  All curves of
    both families must occur.  The filling assessment of the system is
    included in the report.
    """
    table = sys.generator_map()
    used = set()
    signs = {Family.A: set(), Family.B: set()}
    messages = []
    for label, exp in word:
        if label not in table:
            raise ValueError(f"word uses unknown curve label {label!r}")
        used.add(label)
        signs[table[label].family].add(1 if exp > 0 else -1)

    all_used = used == set(table)
    if not all_used:
        missing = sorted(set(table) - used)
        messages.append(f"unused curves: {missing}")

    pure = all(len(s) <= 1 for s in signs.values())
    opposite = signs[Family.A] != signs[Family.B] or (
        not signs[Family.A] and not signs[Family.B]
    )
    sign_ok = pure and opposite
    if not sign_ok:
        messages.append("twist signs are not one family positive, the other negative")

    filling = filling_check(sys)
    return PennerReport(
        word_valid=all_used and sign_ok,
        all_curves_used=all_used,
        sign_discipline=sign_ok,
        filling_status=filling.filling_status,
        messages=tuple(messages) + filling.messages,
    )


# -- chain systems -------------------------------------------------------------
#
# The curve systems are chains a_1, b_1, a_2, b_2, ..., b_g, a_{g+1} in which
# consecutive curves meet once and all other pairs are disjoint.  Homology
# classes consistent with that pattern: a_i = r_{i-1} + r_i (with r_0 and
# r_{g+1} read as zero) and b_i = s_i.


def _chain_system(genus: int) -> CurveSystem:
    space = SymplecticSpace(genus)

    def r(i: int) -> HomologyClass:
        return space.basis_r(i) if 1 <= i <= genus else space.zero()

    curves = []
    for i in range(1, genus + 2):
        curves.append(TwistGenerator(f"a{i}", r(i - 1) + r(i), Family.A))
    for i in range(1, genus + 1):
        curves.append(TwistGenerator(f"b{i}", space.basis_s(i), Family.B))

    # chain order: a_1, b_1, a_2, b_2, ..., b_g, a_{g+1}
    order = []
    for i in range(1, genus + 1):
        order.append(f"a{i}")
        order.append(f"b{i}")
    order.append(f"a{genus + 1}")
    by_label = {c.label: c for c in curves}
    chained = tuple(by_label[lbl] for lbl in order)

    n = len(chained)
    geo = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        geo[i][i + 1] = geo[i + 1][i] = 1
    return CurveSystem(genus, chained, tuple(tuple(row) for row in geo))


def _chain_word(genus: int) -> TwistWord:
    """Three-phase word: negative twists along the a-curves except a_2, a_3;
    then positive twists along the b-curves except b_2; then a_3, a_2
    negative and b_2 positive.  At genus 3 this is the word
    b2 a2^- a3^- b1 b3 a1^- a4^- (outermost letter first)."""
    applied = []  # in application order, first applied first
    for i in range(genus + 1, 3, -1):
        applied.append((f"a{i}", -1))
    applied.append(("a1", -1))
    for i in range(genus, 2, -1):
        applied.append((f"b{i}", 1))
    applied.append(("b1", 1))
    applied.append(("a3", -1))
    applied.append(("a2", -1))
    applied.append(("b2", 1))
    return TwistWord(tuple(reversed(applied)))


def genus3_system() -> Tuple[CurveSystem, TwistWord]:
    """The 7-curve genus-3 chain system and its twist word."""
    return _chain_system(3), _chain_word(3)


def extend_to_genus(genus: int) -> Tuple[CurveSystem, TwistWord]:
    """The (2g+1)-curve chain system and three-phase word for genus >= 6."""
    if not isinstance(genus, int) or genus < 6:
        raise ValueError("extension is defined for genus >= 6")
    return _chain_system(genus), _chain_word(genus)


def genus3_marked_classes() -> Tuple[HomologyClass, HomologyClass, HomologyClass]:
    """Classes (alpha, beta, gamma) with beta = alpha - gamma carried to beta
    by the genus-3 word action."""
    space = SymplecticSpace(3)
    alpha = space.cls([0, 0, 0, 1, 0, 0])
    gamma = space.cls([-1, 0, -2, -2, -1, 0])
    return alpha, alpha - gamma, gamma
