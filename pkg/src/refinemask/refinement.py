"""The two-scale refinement calculus for polynomials.

A polynomial p is refined by a mask m when

    p(t) = 2 * sum_j m_j * p(2t - j)

holds identically.  Everything below is exact: conversions between masks
and the polynomials they refine, the coset of all masks refining a given
polynomial, and a cascade iteration whose iterates stay rational, so each
claim can be checked by literal equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Matrix, as_rational, solve_upper_triangular, solve_vandermonde_dual
from .exceptions import NotRefinableError
from .mask import Mask, difference_power, reduce_mod_difference, refined_degree
from .polynomial import Polynomial


def refine_apply(m: Mask, p: Polynomial) -> Polynomial:
    """Right-hand side of the refinement relation: 2 * sum_j m_j * p(2t - j)."""
    total = Polynomial.zero()
    for j, c in m.items():
        if c == 0:
            continue
        total = total + p.translate(j).scale(c)
    return total.shrink(2).scale(2)


def verify_refines(m: Mask, p: Polynomial) -> bool:
    """Exact check that p is a fixed point of the refinement operator of m."""
    return refine_apply(m, p) == p


def poly_from_mask(m: Mask) -> Polynomial:
    """The monic polynomial refined by m.

    The mask sum fixes the degree n (it must be 2**-(n+1)).  For n = 0 the
    answer is the constant 1.  Otherwise the doubled mask refines the
    derivative, which is known monic of degree n-1 by induction; its
    antiderivative Q pins down every coefficient of the answer after monic
    rescaling, and the constant coefficient falls out of the refinement
    relation itself:

        p_0 = 2 / (Q_n * (1 - 2**-n)) * sum_j m_j * Q(-j)
    """
    n = refined_degree(m)
    if n == 0:
        return Polynomial.one()
    q = poly_from_mask(m.scale(2))
    big_q = q.antiderivative()
    lead = big_q.coefficient(n)
    shift_sum = sum((c * big_q(-j) for j, c in m.items()), Fraction(0))
    constant = 2 / (lead * (1 - Fraction(1, 2 ** n))) * shift_sum
    coeffs = [constant] + [big_q.coefficient(k) / lead for k in range(1, n + 1)]
    return Polynomial(coeffs)


def _padded(p: Polynomial, size: int) -> list:
    out = list(p.coeffs) + [Fraction(0)] * (size - len(p.coeffs))
    return out[:size]


def mask_from_poly(p: Polynomial) -> Mask:
    """The unique mask supported in {0..n} refining p, n = degree(p).

    Solves p = 2 * shrink_2(P m) where P has columns p(t - i), i = 0..n,
    without ever forming P: the columns of iterated finite differences of
    p give an anti-triangular system solved by back-substitution, and the
    change of basis back to shifted copies of p is n passes of adjacent
    differences.  The zero polynomial is refined by every mask and is
    rejected.
    """
    if p.is_zero:
        raise ValueError("zero polynomial: every mask refines it")
    n = p.degree
    diffs = [p]
    for _ in range(n):
        diffs.append(diffs[-1].finite_difference())
    # columns reversed so back-substitution sees a genuine upper triangle
    u = Matrix.from_columns([_padded(diffs[n - k], n + 1) for k in range(n + 1)])
    b = [c / 2 for c in _padded(p.shrink(Fraction(1, 2)), n + 1)]
    y = list(reversed(solve_upper_triangular(u, b)))
    for j in range(n, 0, -1):
        for i in range(j - 1, n):
            y[i] -= y[i + 1]
    return Mask(0, y)


def mask_from_poly_at_nodes(p: Polynomial, nodes: Sequence[int]) -> Mask:
    """The unique mask supported on the given integer nodes refining p.

    Needs exactly degree(p)+1 distinct integers.  The shifted-column
    matrix restricted to these nodes factors into a Taylor-coefficient
    triangle times a Vandermonde matrix in the negated nodes, so the
    system splits into one back-substitution and one interpolation-style
    Vandermonde solve.
    """
    if p.is_zero:
        raise ValueError("zero polynomial: every mask refines it")
    n = p.degree
    pts = list(nodes)
    for x in pts:
        if not isinstance(x, int) or isinstance(x, bool):
            raise ValueError(f"nodes must be integers, got {x!r}")
    if len(pts) != n + 1:
        raise ValueError(f"need {n + 1} nodes for degree {n}, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise ValueError("nodes must be distinct")
    b = [c / 2 for c in _padded(p.shrink(Fraction(1, 2)), n + 1)]
    # taylor[i][j] = C(i+j, i) * p_{i+j}, anti-triangular with its leading
    # diagonal built from the top coefficient of p
    taylor_cols = [
        [math.comb(i + j, i) * p.coefficient(i + j) for i in range(n + 1)]
        for j in range(n + 1)
    ]
    a = Matrix.from_columns(list(reversed(taylor_cols)))
    z = list(reversed(solve_upper_triangular(a, b)))
    weights = solve_vandermonde_dual([Fraction(-x) for x in pts], z)
    lo = min(pts)
    out = [Fraction(0)] * (max(pts) - lo + 1)
    for x, w in zip(pts, weights):
        out[x - lo] = w
    return Mask(lo, out)


# ----------------------------------------------------------------------
# the admissible integration constant


@dataclass(frozen=True)
class IntegrationConstant:
    """Outcome of asking which constant makes an antiderivative refinable.

    kind is one of "unique", "arbitrary", "none"; value is set only for
    the unique case.
    """

    kind: str
    value: Fraction | None = None

    @classmethod
    def unique(cls, value) -> "IntegrationConstant":
        return cls("unique", as_rational(value))

    @classmethod
    def arbitrary(cls) -> "IntegrationConstant":
        return cls("arbitrary")

    @classmethod
    def none(cls) -> "IntegrationConstant":
        return cls("none")

    @property
    def is_unique(self) -> bool:
        return self.kind == "unique"

    @property
    def is_arbitrary(self) -> bool:
        return self.kind == "arbitrary"


def antiderivative_constant(m: Mask, phi: Polynomial) -> IntegrationConstant:
    """The constant c for which antiderivative(phi) + c is refined by m/2.

    With s = sum of m and F the antiderivative of phi (constant term 0),
    the refinement relation for F + c collapses to

        c * (1 - s) = sum_j m_j * F(-j).

    s != 1 gives a unique c.  s = 1 leaves c free when the right side
    vanishes and admits no c otherwise; those two branches are decided by
    the equation alone, since no nonzero polynomial is refined by a mask
    of sum 1.  For s != 1 the pair (m, phi) must itself be refinable.
    """
    s = m.sum()
    big_f = phi.antiderivative()
    shift_sum = sum((c * big_f(-j) for j, c in m.items()), Fraction(0))
    if s == 1:
        if shift_sum == 0:
            return IntegrationConstant.arbitrary()
        return IntegrationConstant.none()
    if not verify_refines(m, phi):
        raise NotRefinableError("mask does not refine the given polynomial")
    return IntegrationConstant.unique(shift_sum / (1 - s))


# ----------------------------------------------------------------------
# verified pairs


@dataclass(frozen=True)
class RefinablePair:
    """A mask and a nonzero polynomial, checked to refine at construction."""

    mask: Mask
    poly: Polynomial

    def __post_init__(self) -> None:
        if self.poly.is_zero:
            raise NotRefinableError("zero polynomial is refined by every mask")
        if not verify_refines(self.mask, self.poly):
            raise NotRefinableError(
                f"mask {self.mask} does not refine polynomial {self.poly}"
            )

    def derivative(self) -> "RefinablePair":
        """Differentiate the polynomial; the mask doubles."""
        if self.poly.degree == 0:
            raise ValueError("constant polynomial: the derivative pair degenerates")
        return RefinablePair(self.mask.scale(2), self.poly.derivative())

    def antiderivative(self) -> "RefinablePair":
        """Integrate the polynomial; the mask halves.

        The integration constant comes from antiderivative_constant; when
        it is arbitrary the choice made here is 0.
        """
        choice = antiderivative_constant(self.mask, self.poly)
        if choice.kind == "none":
            raise NotRefinableError("no integration constant makes the pair refinable")
        c = choice.value if choice.is_unique else Fraction(0)
        shifted = self.poly.antiderivative() + Polynomial((c,))
        return RefinablePair(self.mask.scale(Fraction(1, 2)), shifted)


# ----------------------------------------------------------------------
# the coset of all masks refining one polynomial


def extend_mask(m: Mask, v: Mask, n: int) -> Mask:
    """m + v * (1,-1)**(n+1): stays in the same refining class mod degree n."""
    return m + v.convolve(difference_power(n + 1))


def equivalence_witness(a: Mask, b: Mask) -> Mask | None:
    """A mask v with a == b + v*(1,-1)**(n+1), or None when there is none.

    Exists exactly when both masks have sum 2**-(n+1) for the same n and
    equal canonical remainders.
    """
    try:
        n = refined_degree(a)
        if refined_degree(b) != n:
            return None
    except NotRefinableError:
        return None
    ra, qa = reduce_mod_difference(a, n)
    rb, qb = reduce_mod_difference(b, n)
    if ra != rb:
        return None
    return qa - qb


def masks_equivalent(a: Mask, b: Mask) -> bool:
    """Do a and b refine the same polynomial (same degree, same class)?"""
    return equivalence_witness(a, b) is not None


# ----------------------------------------------------------------------
# the refinement operator as a matrix, and the cascade iteration


def refinement_matrix(m: Mask, n: int) -> Matrix:
    """Matrix of p -> 2 * sum_j m_j * p(2t - j) on degree-<=n coefficients.

    Upper triangular; diagonal entry j equals 2**(j+1) times the mask sum,
    so a mask of sum 2**-(n+1) puts the eigenvalues at 2**-n, ..., 1/2, 1.
    """
    if n < 0:
        raise ValueError(f"degree bound must be nonnegative, got {n}")
    size = n + 1
    entries = []
    for j in range(size):
        for k in range(size):
            if j > k:
                entries.append(Fraction(0))
                continue
            acc = Fraction(0)
            for i, c in m.items():
                if c == 0:
                    continue
                acc += c * Fraction(-i) ** (k - j)
            entries.append(Fraction(2) ** (j + 1) * math.comb(k, j) * acc)
    return Matrix(size, size, entries)


@dataclass(frozen=True)
class CascadeReport:
    """Result of a cascade run.

    final_delta is the sup-norm coefficient change of the last step taken;
    converged records whether that change dropped below the tolerance
    within the iteration budget.
    """

    result: Polynomial
    iterations: int
    final_delta: Fraction
    converged: bool


def cascade(m: Mask, p0: Polynomial, max_iter: int = 200,
            tol=Fraction(1, 2 ** 40)) -> CascadeReport:
    """Iterate the refinement operator from p0 until the step size is < tol.

    All iterates are exact rationals.  The operator fixes the top
    coefficient, and every other eigenvalue has modulus <= 1/2, so for a
    start with a nonzero top coefficient the iterates close in on the
    refined polynomial at a factor-of-two rate.  A start polynomial of
    degree above the mask's refined degree is rejected; lower-degree
    starts are padded (they can only sink toward zero).
    """
    n = refined_degree(m)
    tol = as_rational(tol)
    if max_iter < 1:
        raise ValueError(f"max_iter must be positive, got {max_iter}")
    if p0.degree is not None and p0.degree > n:
        raise ValueError(f"start polynomial degree {p0.degree} exceeds mask degree {n}")
    operator = refinement_matrix(m, n)
    current = tuple(_padded(p0, n + 1))
    delta = Fraction(0)
    for step in range(1, max_iter + 1):
        nxt = operator.apply(current)
        delta = max(abs(a - b) for a, b in zip(nxt, current))
        current = nxt
        if delta < tol:
            return CascadeReport(Polynomial(current), step, delta, True)
    return CascadeReport(Polynomial(current), max_iter, delta, False)


# ----------------------------------------------------------------------
# experimental: polynomial convolution pulled back through masks


def poly_convolve_via_masks(p: Polynomial, q: Polynomial) -> Polynomial:
    """Convolve the canonical masks of p and q, then read the result back.

    Experimental composition: mask convolution corresponds to function
    convolution of the refinable functions, not to any polynomial product,
    and the degree comes out as degree(p) + degree(q) + 1.  The result is
    monic like every poly_from_mask output.
    """
    return poly_from_mask(mask_from_poly(p).convolve(mask_from_poly(q)))
