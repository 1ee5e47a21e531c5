"""Symplectic homology of a closed surface and Dehn-twist actions.

A closed orientable surface of genus g has first homology Z^{2g}.  We work
in the ordered basis r_1, s_1, ..., r_g, s_g in which the intersection form
is block diagonal with g blocks [[0, 1], [-1, 0]]; in particular
<r_i, s_i> = 1.

A Dehn twist along a simple closed curve c acts on homology as the
transvection x |-> x + <x, c> c (for the right-handed twist; the inverse
twist flips the sign).  Products of twists are encoded as words and their
actions computed as exact integer matrices.

Convention: matrices computed here act on coordinate column vectors, so
column k holds the image of the k-th basis vector.  The two recorded
action matrices (`genus3_action_matrix`, `extended_action_matrix`) are
fixture data reproduced verbatim; all checks run against them
(determinants, kernel ranks) are transpose-invariant.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

from .matrices import IntMatrix


class Family(enum.Enum):
    """Which multicurve a twist generator belongs to."""

    A = "A"
    B = "B"


@dataclass(frozen=True)
class SymplecticSpace:
    """H_1 of a closed genus-g surface with its intersection form."""

    genus: int

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 1:
            raise ValueError("genus must be a positive integer")

    @property
    def dimension(self) -> int:
        return 2 * self.genus

    def intersection_matrix(self) -> IntMatrix:
        return _intersection_matrix(self.genus)

    def cls(self, coords: Sequence[int]) -> "HomologyClass":
        return HomologyClass(self, tuple(int(c) for c in coords))

    def zero(self) -> "HomologyClass":
        return self.cls([0] * self.dimension)

    def basis_r(self, i: int) -> "HomologyClass":
        """The class r_i, 1-based."""
        return self._basis(2 * i - 2)

    def basis_s(self, i: int) -> "HomologyClass":
        """The class s_i, 1-based."""
        return self._basis(2 * i - 1)

    def _basis(self, index: int) -> "HomologyClass":
        if not 0 <= index < self.dimension:
            raise ValueError("basis index out of range")
        coords = [0] * self.dimension
        coords[index] = 1
        return self.cls(coords)


@lru_cache(maxsize=None)
def _intersection_matrix(genus: int) -> IntMatrix:
    n = 2 * genus
    m = [[0] * n for _ in range(n)]
    for i in range(genus):
        m[2 * i][2 * i + 1] = 1
        m[2 * i + 1][2 * i] = -1
    return IntMatrix(m)


@dataclass(frozen=True)
class HomologyClass:
    """Integer homology class in the symplectic basis of its space."""

    space: SymplecticSpace
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.space.dimension:
            raise ValueError("coordinate length must equal 2*genus")
        if any(isinstance(c, bool) or not isinstance(c, int) for c in self.coords):
            raise ValueError("coordinates must be integers")

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        self._require_same_space(other)
        return HomologyClass(self.space, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "HomologyClass") -> "HomologyClass":
        self._require_same_space(other)
        return HomologyClass(self.space, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(self.space, tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> "HomologyClass":
        if isinstance(k, bool) or not isinstance(k, int):
            raise ValueError("scalar must be an integer")
        return HomologyClass(self.space, tuple(k * a for a in self.coords))

    def _require_same_space(self, other: "HomologyClass"):
        if self.space != other.space:
            raise ValueError("classes live in different spaces")

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    @property
    def is_primitive(self) -> bool:
        g = 0
        for c in self.coords:
            g = gcd(g, c)
        return g == 1


def algebraic_intersection(x: HomologyClass, y: HomologyClass) -> int:
    """Symplectic pairing <x, y> = x^T J y."""
    if x.space != y.space:
        raise ValueError("classes live in different spaces")
    total = 0
    coords_x, coords_y = x.coords, y.coords
    for i in range(x.space.genus):
        total += coords_x[2 * i] * coords_y[2 * i + 1] - coords_x[2 * i + 1] * coords_y[2 * i]
    return total


@dataclass(frozen=True)
class TwistGenerator:
    """A simple closed curve we twist along, together with its class.

    The class of a simple closed curve is primitive or zero; zero means the
    curve is null-homologous (separating) and its twist acts trivially on
    homology.  Anything else is rejected.
    """

    label: str
    cls: HomologyClass
    family: Family

    def __post_init__(self):
        if not self.cls.is_zero and not self.cls.is_primitive:
            raise ValueError(
                f"curve {self.label!r}: class must be primitive or zero, got {self.cls.coords}"
            )

    @property
    def null_homologous(self) -> bool:
        return self.cls.is_zero


@dataclass(frozen=True)
class TwistWord:
    """Word in the twist generators; the rightmost letter is applied first."""

    letters: tuple

    def __post_init__(self):
        for letter in self.letters:
            label, exp = letter
            if not isinstance(label, str):
                raise ValueError("letter labels must be strings")
            if isinstance(exp, bool) or not isinstance(exp, int) or exp == 0:
                raise ValueError(f"letter {label!r}: exponent must be a nonzero integer")

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def concat(self, other: "TwistWord") -> "TwistWord":
        return TwistWord(self.letters + other.letters)

    @classmethod
    def of(cls, *letters) -> "TwistWord":
        return cls(tuple((label, exp) for label, exp in letters))


def _twist_power(space: SymplecticSpace, coords: Sequence[int], amount: int) -> IntMatrix:
    """Matrix of x |-> x + amount * <x, c> c, i.e. the amount-th twist power."""
    n = space.dimension
    # row vector c^T J in the block basis
    ctj = [0] * n
    for i in range(space.genus):
        ctj[2 * i + 1] = coords[2 * i]
        ctj[2 * i] = -coords[2 * i + 1]
    return IntMatrix(
        [
            [(1 if i == j else 0) - amount * coords[i] * ctj[j] for j in range(n)]
            for i in range(n)
        ]
    )


def transvection_matrix(c: TwistGenerator, sign: int = 1) -> IntMatrix:
    """Homology action of the sign-handed Dehn twist along c.

    The result fixes c, has determinant 1, and does not change if c is
    replaced by -c.  A null-homologous curve gives the identity.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return _twist_power(c.cls.space, c.cls.coords, sign)


GeneratorSet = Union[Mapping[str, TwistGenerator], Iterable[TwistGenerator]]


def _as_generator_map(gens: GeneratorSet) -> Mapping[str, TwistGenerator]:
    if isinstance(gens, Mapping):
        return gens
    out = {}
    for g in gens:
        if g.label in out:
            raise ValueError(f"duplicate generator label {g.label!r}")
        out[g.label] = g
    return out

def word_action(word: TwistWord, gens: GeneratorSet) -> IntMatrix:
    """Product of transvection matrices in the word's composition order.

    Letters are written outermost first, so the matrix is the product of the
    letter matrices in written order (the rightmost letter acts first on
    column vectors).
    """
    table = _as_generator_map(gens)
    space = None
    for g in table.values():
        space = g.cls.space
        break
    if space is None:
        raise ValueError("empty generator set")
    result = IntMatrix.identity(space.dimension)
    for label, exp in word:
        if label not in table:
            raise ValueError(f"unknown twist label {label!r}")
        gen = table[label]
        result = result @ _twist_power(space, gen.cls.coords, exp)
    return result


# -- recorded action matrices ------------------------------------------------

_GENUS3_ACTION_ROWS = (
    (0, 1, 2, -1, -2, 1),
    (-1, 2, 1, 0, 0, 0),
    (-2, 4, 4, -2, -2, 1),
    (1, -2, -2, 2, 2, -2),
    (0, 0, 0, 1, 2, -3),
    (0, 0, 0, 0, -1, 2),
)

_CORE_ROWS = (
    (0, 1, 2, -1, -2, 2, 1, -1),
    (-1, 2, 1, 0, 0, 0, 0, 0),
    (-2, 4, 4, -2, -2, 2, 1, -1),
    (1, -2, -2, 2, 2, -2, -1, 1),
    (0, 0, 0, 1, 2, -2, -1, 1),
    (0, 0, 0, 0, -1, 2, 1, -1),
)


def genus3_action_matrix() -> IntMatrix:
    """Recorded 6x6 homology action of the genus-3 twist word."""
    return IntMatrix(_GENUS3_ACTION_ROWS)


def extended_action_matrix(genus: int) -> IntMatrix:
    """Recorded 2g x 2g homology action of the genus-g twist word, g >= 6.

    Layout (1-based; r_i is row/column 2i-1, s_i is 2i):
      * rows 1..6 are an explicit genus-3 core block in columns 1..8;
      * rows r_i, s_i for 4 <= i <= g-1 follow the repeating band
        r_i -> s_{i-1} + r_i - s_i,
        s_i -> -s_{i-1} - r_i + 3 s_i + r_{i+1} - s_{i+1};
      * the last handle truncates the band:
        r_g -> s_{g-1} + r_g - s_g,  s_g -> -s_{g-1} - r_g + 3 s_g;
      * every r_i row carries an extra -1 in the s_g column.

    |det(M - Id)| = genus + 1 for every genus >= 6.
    """
    if not isinstance(genus, int) or genus < 6:
        raise ValueError("extended action matrix is defined for genus >= 6")
    n = 2 * genus
    m = [[0] * n for _ in range(n)]
    for i, row in enumerate(_CORE_ROWS):
        for j, e in enumerate(row):
            m[i][j] = e
    for i in range(4, genus):
        r, s = 2 * i - 2, 2 * i - 1
        m[r][2 * i - 3] += 1      # s_{i-1}
        m[r][2 * i - 2] += 1      # r_i
        m[r][2 * i - 1] += -1     # s_i
        m[s][2 * i - 3] += -1
        m[s][2 * i - 2] += -1
        m[s][2 * i - 1] += 3
        m[s][2 * i] += 1          # r_{i+1}
        m[s][2 * i + 1] += -1     # s_{i+1}
    rg, sg = n - 2, n - 1
    m[rg][2 * genus - 3] += 1
    m[rg][rg] += 1
    m[rg][sg] += -1
    m[sg][2 * genus - 3] += -1
    m[sg][rg] += -1
    m[sg][sg] += 3
    for i in range(genus):
        m[2 * i][sg] += -1
    return IntMatrix(m)


# -- mapping-torus homology checks --------------------------------------------


def mapping_torus_b2(f_star: IntMatrix) -> int:
    """Rank of H_2 of the mapping torus of a map acting as f_star on H_1.

    Equals 1 + dim ker(f_star - Id), computed exactly over the rationals.
    """
    if not f_star.is_square:
        raise ValueError("matrix must be square")
    return 1 + f_star.minus_identity().nullity()


def fixed_homology_trivial(f_star: IntMatrix) -> bool:
    """True iff f_star - Id is invertible, i.e. no nonzero fixed class."""
    if not f_star.is_square:
        raise ValueError("matrix must be square")
    return f_star.minus_identity().det() != 0


@dataclass(frozen=True)
class ImageCheck:
    """Outcome of checking f_star(alpha) = beta.

    `sends_to_target` is the check itself; `targets_distinct` reports
    whether alpha and beta differ as classes.
    """

    sends_to_target: bool
    targets_distinct: bool

    def __bool__(self) -> bool:
        return self.sends_to_target


def image_check(f_star: IntMatrix, alpha: HomologyClass, beta: HomologyClass) -> ImageCheck:
    """Check that f_star maps alpha to beta, and whether alpha != beta."""
    if alpha.space != beta.space:
        raise ValueError("classes live in different spaces")
    if f_star.n_cols != alpha.space.dimension:
        raise ValueError("matrix size does not match the space")
    image = f_star.apply(alpha.coords)
    return ImageCheck(
        sends_to_target=(image == beta.coords),
        targets_distinct=not (alpha - beta).is_zero,
    )
