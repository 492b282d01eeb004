"""Exact Laurent-polynomial arithmetic and the polynomial invariants.

The wriggle and affine-index engines are deliberately separate code
paths: one smooths each crossing and takes linking-number differences,
the other reads arc labels.  A third engine goes through the chord
intersection sets.  They must agree on every input; definitions_agree is
their differential check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Mapping

from .gauss import GaussCode, Parity, ensure_valid, parity, writhe
from .labeling import weight_table
from .linkdiag import chord_weight, smooth, wriggle_number

__all__ = [
    "LaurentPoly",
    "wriggle_polynomial",
    "affine_index_polynomial",
    "chord_formula_polynomial",
    "odd_wriggle_polynomial",
    "vassiliev",
    "vassiliev_from_series",
    "EngineAgreement",
    "definitions_agree",
]


@dataclass(frozen=True)
class LaurentPoly:
    """Finite map from integer exponents to nonzero integer coefficients."""

    _terms: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> "LaurentPoly":
        return cls(tuple(sorted((e, c) for e, c in coeffs.items() if c != 0)))

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def term(cls, exponent: int, coefficient: int = 1) -> "LaurentPoly":
        return cls.from_dict({exponent: coefficient})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._terms)

    def __getitem__(self, exponent: int) -> int:
        return self.coeffs.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = self.coeffs
        for e, c in other._terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly.from_dict(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def scale(self, k: int) -> "LaurentPoly":
        return LaurentPoly.from_dict({e: k * c for e, c in self._terms})

    def invert_variable(self) -> "LaurentPoly":
        """Substitute t -> 1/t (negate every exponent)."""
        return LaurentPoly.from_dict({-e: c for e, c in self._terms})

    def eval_at_one(self) -> int:
        return sum(c for _, c in self._terms)

    def to_text(self) -> str:
        """Render with exponents ascending, e.g. ``t^-1 - 2 + t``."""
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms:
            if e == 0:
                body = str(abs(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                body = var if abs(c) == 1 else f"{abs(c)}{var}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"{'-' if c < 0 else '+'} {body}")
        return " ".join(parts)

    def to_json(self) -> str:
        import json

        return json.dumps({str(e): c for e, c in self._terms})

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        import json

        return cls.from_dict({int(e): int(c) for e, c in json.loads(text).items()})


def _polynomial_from_weights(code: GaussCode, weights: Mapping[str, int],
                             subtract_writhe: bool = True) -> LaurentPoly:
    coeffs: dict[int, int] = {}
    for c in code.crossings():
        w = weights[c]
        coeffs[w] = coeffs.get(w, 0) + code.sign_of(c)
    if subtract_writhe:
        coeffs[0] = coeffs.get(0, 0) - writhe(code)
    return LaurentPoly.from_dict(coeffs)


def wriggle_polynomial(code: GaussCode) -> LaurentPoly:
    """Sum of sign(c) * t^(wriggle number of the smoothing at c), minus writhe."""
    ensure_valid(code)
    weights = {c: wriggle_number(smooth(code, c)) for c in code.crossings()}
    return _polynomial_from_weights(code, weights)


def affine_index_polynomial(code: GaussCode) -> LaurentPoly:
    """Same invariant computed through arc labels; equal to
    wriggle_polynomial on every input."""
    ensure_valid(code)
    return _polynomial_from_weights(code, weight_table(code))


def chord_formula_polynomial(code: GaussCode) -> LaurentPoly:
    """Third engine: weights from the chord intersection sets."""
    ensure_valid(code)
    weights = {c: chord_weight(code, c) for c in code.crossings()}
    return _polynomial_from_weights(code, weights)


def odd_wriggle_polynomial(code: GaussCode) -> LaurentPoly:
    """Restriction of the sum to odd crossings; no writhe normalization."""
    ensure_valid(code)
    coeffs: dict[int, int] = {}
    for c in code.crossings():
        if parity(code, c) is Parity.ODD:
            w = wriggle_number(smooth(code, c))
            coeffs[w] = coeffs.get(w, 0) + code.sign_of(c)
    return LaurentPoly.from_dict(coeffs)


def vassiliev(code: GaussCode, n: int) -> Fraction:
    """(1/n!) * sum over crossings of sign(c) * weight(c)^n, exactly.

    n = 0 is rejected: it degenerates to bookkeeping about the writhe
    normalization and is excluded to avoid convention disputes.
    """
    if n < 1:
        raise ValueError("vassiliev order must be a positive integer")
    ensure_valid(code)
    weights = {c: wriggle_number(smooth(code, c)) for c in code.crossings()}
    total = sum(code.sign_of(c) * weights[c] ** n for c in code.crossings())
    return Fraction(total, factorial(n))


def vassiliev_from_series(poly: LaurentPoly, n: int) -> Fraction:
    """Coefficient of x^n in poly(e^x), via exact truncated exponentials.

    Independent oracle: reads only the assembled polynomial.  Each term
    a * t^k contributes a * k^j / j! at order j.
    """
    if n < 1:
        raise ValueError("series order must be a positive integer")
    total = Fraction(0)
    for k, a in poly.coeffs.items():
        # x^n coefficient of e^(k x), built up order by order
        coeff = Fraction(1)
        for j in range(1, n + 1):
            coeff = coeff * k / j
        total += a * coeff
    return total


@dataclass(frozen=True)
class EngineAgreement:
    agree: bool
    crossing: str | None = None
    weights: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        return self.agree

    @property
    def message(self) -> str:
        if self.agree:
            return "all engines agree"
        w1, w2, w3 = self.weights
        return (
            f"crossing {self.crossing}: wriggle={w1}, "
            f"algebraic={w2}, chord={w3}"
        )


def definitions_agree(code: GaussCode) -> EngineAgreement:
    """Differential check that all three weight engines coincide.

    Reports the first crossing where the smoothing, arc-label, and
    chord-set weights disagree, with the three values.
    """
    ensure_valid(code)
    algebraic = weight_table(code)
    for c in code.crossings():
        w1 = wriggle_number(smooth(code, c))
        w2 = algebraic[c]
        w3 = chord_weight(code, c)
        if not (w1 == w2 == w3):
            return EngineAgreement(False, c, (w1, w2, w3))
    if wriggle_polynomial(code) != affine_index_polynomial(code):
        return EngineAgreement(False, None, None)
    return EngineAgreement(True)
