"""Determinantal presentation of the degree-d rational normal curve and
the graded calculus attached to its affine cone.

The curve sits in d-space via the degree-d parametrization; its ideal is
generated by the 2x2 minors q_{ij} = z_i z_{j+1} - z_{i+1} z_j of the
standard 2 x d array, listed in lexicographic (i, j) order.  The cone's
coordinate ring is identified grade by grade with binary forms: the k-th
graded piece is spanned by the monomials of degree d*k in the two
parameters, and the normal-form map substitutes z_i -> x0^(d-i) x1^i.

Two independent routes to the weight-m deformation count are provided:

* an algebraic one, the graded piece of the Jacobian map from coordinate
  derivations to the ideal's graded pieces (assembled exactly, with rank
  and kernel computed by elimination rather than assumed);
* a geometric one through the normal bundle, whose splitting type makes
  the section count a closed form, corrected by the tangent-sequence
  terms computed by the Cech chase on the line.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import p1
from .linalg import RationalMatrix
from .polynomials import Polynomial

Monomial2 = tuple[int, int]


def _check_degree(d: int) -> None:
    if d < 2:
        raise ValueError("the presentation needs curve degree d >= 2 (d = 1 is a line with no equations)")


@dataclass(frozen=True)
class Presentation:
    """Generators of the ideal of the degree-d curve in the z-variables."""

    d: int
    pairs: tuple[tuple[int, int], ...]
    generators: tuple[Polynomial, ...]

    @property
    def nvars(self) -> int:
        return self.d + 1

    @property
    def var_names(self) -> tuple[str, ...]:
        return tuple(f"z{i}" for i in range(self.d + 1))


def build_presentation(d: int) -> Presentation:
    """All 2x2-minor generators q_{ij} = z_i z_{j+1} - z_{i+1} z_j for
    0 <= i < j <= d-1, in lexicographic order of (i, j)."""
    _check_degree(d)
    nvars = d + 1
    z = [Polynomial.variable(nvars, t) for t in range(nvars)]
    pairs: list[tuple[int, int]] = []
    gens: list[Polynomial] = []
    for i in range(d):
        for j in range(i + 1, d):
            gens.append(z[i] * z[j + 1] - z[i + 1] * z[j])
            pairs.append((i, j))
    return Presentation(d, tuple(pairs), tuple(gens))


@dataclass(frozen=True)
class PolyMatrix:
    """A matrix of polynomials (used for the Jacobian of the generators)."""

    nrows: int
    ncols: int
    entries: tuple[tuple[Polynomial, ...], ...]
    var_names: tuple[str, ...]

    def to_strings(self) -> list[list[str]]:
        return [[p.to_string(self.var_names) for p in row] for row in self.entries]


def jacobian_matrix(d: int) -> PolyMatrix:
    """Partial derivatives of the generators: one row per generator (in
    presentation order), one column per variable z_0..z_d."""
    pres = build_presentation(d)
    rows = tuple(
        tuple(g.derivative(i) for i in range(pres.nvars)) for g in pres.generators
    )
    return PolyMatrix(len(pres.generators), pres.nvars, rows, pres.var_names)


# ----------------------------------------------------------------------
# The cone's coordinate ring, grade by grade
# ----------------------------------------------------------------------


def s_basis(d: int, k: int) -> list[Monomial2]:
    """Monomial basis of the k-th graded piece of the cone's coordinate
    ring: binary monomials of degree d*k (empty for k < 0)."""
    if d < 1:
        raise ValueError("curve degree d must be at least 1")
    if k < 0:
        return []
    return p1.basis(0, d * k)


def substitution_images(d: int) -> list[Polynomial]:
    """The parametrization z_i -> x0^(d-i) x1^i as binary monomials."""
    return [Polynomial.monomial(2, (d - i, i)) for i in range(d + 1)]


def normal_form(d: int, p: Polynomial) -> Polynomial:
    """Image of a z-polynomial in the cone's coordinate ring, written as a
    binary form via the parametrizing substitution."""
    if p.nvars != d + 1:
        raise ValueError(f"expected a polynomial in the {d + 1} cone variables")
    if p.is_zero():
        return Polynomial.zero(2)
    return p.substitute(substitution_images(d))


def coefficients_in_grade(d: int, q: Polynomial, k: int) -> list[Fraction]:
    """Coordinates of a binary form on s_basis(d, k).  The form must be
    supported in degree d*k (the zero form is fine in any grade)."""
    mons = s_basis(d, k)
    index = {m: i for i, m in enumerate(mons)}
    out = [Fraction(0)] * len(mons)
    for exps, coeff in q.terms.items():
        if exps not in index:
            raise ValueError(f"monomial {exps} is not in the grade-{k} piece")
        out[index[exps]] = coeff
    return out


# ----------------------------------------------------------------------
# Route 1: the graded Jacobian map
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class GradedJacobian:
    """The weight-m graded piece of the Jacobian pairing: derivations with
    components in grade m+1 mapping into one grade-(m+2) block per
    generator.  Source blocks are ordered by variable, target blocks by
    generator."""

    d: int
    m: int
    matrix: RationalMatrix
    source_block_dim: int
    target_block_dim: int

    @property
    def source_dim(self) -> int:
        return self.matrix.ncols

    @property
    def target_dim(self) -> int:
        return self.matrix.nrows

    def rank(self) -> int:
        return self.matrix.rank()


def graded_jacobian_map(d: int, m: int) -> GradedJacobian:
    _check_degree(d)
    pres = build_presentation(d)
    src_mons = s_basis(d, m + 1)
    dst_mons = s_basis(d, m + 2)
    n_src_blocks = d + 1
    n_dst_blocks = len(pres.generators)
    matrix = RationalMatrix.zero(n_dst_blocks * len(dst_mons), n_src_blocks * len(src_mons))
    # image of the i-th partial of each generator, as a binary form
    partial_forms = [
        [normal_form(d, g.derivative(i)) for i in range(d + 1)] for g in pres.generators
    ]
    for i in range(n_src_blocks):
        for s_idx, s in enumerate(src_mons):
            col = i * len(src_mons) + s_idx
            s_poly = Polynomial.monomial(2, s)
            for g_idx in range(n_dst_blocks):
                image = partial_forms[g_idx][i] * s_poly
                coeffs = coefficients_in_grade(d, image, m + 2)
                for r_idx, c in enumerate(coeffs):
                    if c != 0:
                        matrix.data[g_idx * len(dst_mons) + r_idx][col] = c
    return GradedJacobian(d, m, matrix, len(src_mons), len(dst_mons))


def euler_derivation_vector(d: int, m: int = 0) -> list[Fraction]:
    """The coordinate vector of the weight-0 derivation sending each z_i to
    itself, in the source ordering of graded_jacobian_map(d, 0).  Only
    weight 0 carries it."""
    if m != 0:
        raise ValueError("the scaling derivation lives in weight 0 only")
    src_mons = s_basis(d, 1)
    vec = [Fraction(0)] * ((d + 1) * len(src_mons))
    for i in range(d + 1):
        mono = (d - i, i)
        vec[i * len(src_mons) + src_mons.index(mono)] = Fraction(1)
    return vec


# ----------------------------------------------------------------------
# Route 2: through the normal bundle
# ----------------------------------------------------------------------


def normal_bundle_h0(d: int, m: int) -> int:
    """h^0 of the weight-m twist of the curve's normal bundle, from its
    balanced splitting into d-1 line bundles of degree d+2."""
    _check_degree(d)
    return (d - 1) * p1.h_dim(0, d + 2 + m * d)


@dataclass(frozen=True)
class NormalRoute:
    """Normal-bundle computation of the weight-m deformation count, with
    the exactness certificate for the sequence chase."""

    d: int
    m: int
    normal_h0: int
    restricted_tangent_h0: int
    curve_tangent_h0: int
    value: int
    exact: bool


def t1_via_normal(d: int, m: int) -> NormalRoute:
    """Weight-m first deformation count through the normal bundle:
    h^0(N(m)) - h^0(T_ambient|_C(m)) + h^0(T_C(m)), valid exactly when the
    restricted-tangent chase reports a vanishing level-1 cokernel."""
    _check_degree(d)
    n_h0 = normal_bundle_h0(d, m)
    rt_h0 = p1.euler_restricted_h0(d, m)
    ct_h0 = p1.h_dim(0, 2 + d * m)
    value = n_h0 - rt_h0 + ct_h0
    exact = p1.euler_restricted_h1(d, m) == 0
    return NormalRoute(d, m, n_h0, rt_h0, ct_h0, value, exact)
