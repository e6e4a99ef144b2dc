"""Seeded random generators shared by the test modules."""

import random
from fractions import Fraction

from refinemask import Mask, Matrix, Polynomial


def rand_fraction(rng: random.Random, max_num: int = 100, max_den: int = 100,
                  nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        if value != 0 or not nonzero:
            return value


def rand_poly(rng: random.Random, degree: int, max_num: int = 100,
              max_den: int = 100) -> Polynomial:
    coeffs = [rand_fraction(rng, max_num, max_den) for _ in range(degree)]
    coeffs.append(rand_fraction(rng, max_num, max_den, nonzero=True))
    return Polynomial(coeffs)


def rand_monic_poly(rng: random.Random, max_degree: int = 6) -> Polynomial:
    degree = rng.randint(0, max_degree)
    coeffs = [rand_fraction(rng) for _ in range(degree)] + [Fraction(1)]
    return Polynomial(coeffs)


def rand_valid_mask(rng: random.Random, max_degree: int = 5,
                    max_width: int = 9) -> Mask:
    """A mask whose sum is 2**-(n+1) for a random n, boundary coefficients nonzero."""
    n = rng.randint(0, max_degree)
    width = rng.randint(1, max_width)
    offset = rng.randint(-4, 4)
    target = Fraction(1, 2 ** (n + 1))
    if width == 1:
        return Mask(offset, (target,))
    while True:
        coeffs = [rand_fraction(rng, 20, 20) for _ in range(width - 1)]
        last = target - sum(coeffs)
        if coeffs[0] != 0 and last != 0:
            return Mask(offset, coeffs + [last])


def rand_mask(rng: random.Random, max_width: int = 4, max_num: int = 20,
              max_den: int = 20) -> Mask:
    """Any finitely supported mask, possibly zero."""
    width = rng.randint(0, max_width)
    offset = rng.randint(-3, 3)
    return Mask(offset, [rand_fraction(rng, max_num, max_den) for _ in range(width)])


def rand_matrix(rng: random.Random, rows: int, cols: int) -> Matrix:
    return Matrix(rows, cols,
                  [rand_fraction(rng, 10, 10) for _ in range(rows * cols)])
