"""Two-chart Cech model for line bundles on the projective line.

Everything is written against the standard affine cover by the two
coordinate charts.  A cohomology class in degree k is a Laurent polynomial
in the chart variables, recorded here by its exponent pair (a, b) with
a + b = k:

* level 0 (global sections): a >= 0 and b >= 0, so h0 = max(0, k + 1);
* level 1: a <= -1 and b <= -1, so h1 = max(0, -k - 1).

Multiplication by an honest polynomial keeps level-0 monomials inside the
level-0 region, while at level 1 a product is truncated to zero as soon as
either exponent escapes the strictly-negative region.  Because the
truncation only ever discards monomials that can never return (multiplying
by nonnegative powers is monotone in each exponent), the truncated product
is still functorial: mult(p*q) == mult(p) after mult(q) on the nose, which
the tests pin down.

Bases are ordered by descending first exponent, so e.g. basis(0, 2) is
[(2, 0), (1, 1), (0, 2)] and basis(1, -4) is [(-1, -3), (-2, -2), (-3, -1)].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

from .linalg import RationalMatrix, vstack
from .polynomials import Polynomial

Scalar = Union[int, Fraction]
Monomial = tuple[int, int]


def h_dim(i: int, k: int) -> int:
    """Dimension of the level-i cohomology of O(k) on the line."""
    if i == 0:
        return max(0, k + 1)
    if i == 1:
        return max(0, -k - 1)
    raise ValueError(f"cohomology level must be 0 or 1, got {i}")


def basis(i: int, k: int) -> list[Monomial]:
    """Monomial basis of level i in degree k, descending first exponent."""
    if i == 0:
        return [(a, k - a) for a in range(k, -1, -1)]
    if i == 1:
        # a runs from -1 down to k + 1 (so that b = k - a is also <= -1)
        return [(a, k - a) for a in range(-1, k, -1)]
    raise ValueError(f"cohomology level must be 0 or 1, got {i}")


def _in_region(i: int, mono: Monomial) -> bool:
    a, b = mono
    if i == 0:
        return a >= 0 and b >= 0
    return a <= -1 and b <= -1


@dataclass
class CechClass:
    """A cohomology class: a finite Laurent combination at a fixed degree
    and level.  Coefficients on monomials outside the level's region are
    rejected rather than silently truncated."""

    level: int
    degree: int
    coeffs: dict[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.level not in (0, 1):
            raise ValueError("level must be 0 or 1")
        clean: dict[Monomial, Fraction] = {}
        for mono, c in self.coeffs.items():
            a, b = mono
            if a + b != self.degree:
                raise ValueError(f"monomial {mono} does not have degree {self.degree}")
            if not _in_region(self.level, mono):
                raise ValueError(f"monomial {mono} lies outside the level-{self.level} region")
            c = Fraction(c)
            if c != 0:
                clean[mono] = c
        self.coeffs = clean

    def as_vector(self) -> list[Fraction]:
        return [self.coeffs.get(m, Fraction(0)) for m in basis(self.level, self.degree)]

    def is_zero(self) -> bool:
        return not self.coeffs


def mult_matrix(p: Polynomial, i: int, k: int) -> RationalMatrix:
    """Matrix of multiplication by the homogeneous polynomial p, from level-i
    degree k to level-i degree k + deg(p), in the ordered monomial bases.

    At level 1 any product monomial leaving the strictly-negative region is
    truncated to zero."""
    if p.nvars != 2:
        raise ValueError("expected a polynomial in the two chart variables")
    if p.is_zero():
        raise ValueError("multiplication by the zero polynomial has no degree")
    if not p.is_homogeneous():
        raise ValueError("multiplier must be homogeneous")
    for exps in p.terms:
        if exps[0] < 0 or exps[1] < 0:
            raise ValueError("multiplier must be an honest polynomial, not Laurent")
    e = p.homogeneous_degree()
    src = basis(i, k)
    dst = basis(i, k + e)
    index = {mono: row for row, mono in enumerate(dst)}
    out = RationalMatrix.zero(len(dst), len(src))
    for col, (a, b) in enumerate(src):
        for (da, db), coeff in p.terms.items():
            target = (a + da, b + db)
            if not _in_region(i, target):
                continue  # truncated away (only possible at level 1)
            out.data[index[target]][col] += coeff
    return out


def _curve_monomial(d: int, j: int) -> Polynomial:
    """The j-th degree-d parametrizing monomial x0^(d-j) * x1^j."""
    return Polynomial.monomial(2, (d - j, j))


def euler_h1_block(d: int, m: int) -> RationalMatrix:
    """Connecting data for the restricted Euler sequence in weight m: the
    stacked multiplication map from level-1 degree m*d into the d+1 copies
    of level-1 degree m*d + d, one block per parametrizing monomial."""
    if d < 1:
        raise ValueError("the curve degree d must be at least 1")
    return vstack([mult_matrix(_curve_monomial(d, j), 1, m * d) for j in range(d + 1)])


def euler_restricted_h0(d: int, m: int) -> int:
    """h^0 of the weight-m restricted tangent bundle of the degree-d
    rational normal curve, computed by an exact Euler-sequence chase with
    the connecting rank actually evaluated."""
    block = euler_h1_block(d, m)
    return (d + 1) * h_dim(0, m * d + d) - h_dim(0, m * d) + block.kernel_dim()


def euler_restricted_h1(d: int, m: int) -> int:
    """h^1 companion of :func:`euler_restricted_h0`: the cokernel of the
    same stacked multiplication map."""
    return euler_h1_block(d, m).cokernel_dim()
