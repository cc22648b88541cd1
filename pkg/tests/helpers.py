"""Float evaluation of exact elements, used as an independent numeric check."""

import cmath
import math


def evaluate(x) -> complex:
    n = x.conductor
    return sum(float(c) * cmath.exp(2j * math.pi * i / n) for i, c in enumerate(x.coeffs))


def poly_eval(coeffs, value) -> complex:
    return sum(float(c) * value**i for i, c in enumerate(coeffs))
