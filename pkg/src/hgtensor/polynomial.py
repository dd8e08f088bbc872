"""Multivariate polynomials with exact rational coefficients.

Terms are stored as exponent vectors over a fixed variable universe
(z^1..z^n followed by y^1..y^{k_max-1}); only what the homogenisation
recursion needs is implemented.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class Polynomial:
    nvars: int
    terms: dict[tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, coeff in self.terms.items():
            exps = tuple(exps)
            if len(exps) != self.nvars:
                raise ValueError(
                    f"exponent vector {exps} has length {len(exps)}, "
                    f"expected {self.nvars}"
                )
            if any(e < 0 or not isinstance(e, int) for e in exps):
                raise ValueError(f"exponents must be non-negative integers: {exps}")
            coeff = Fraction(coeff)
            if coeff != 0:
                clean[exps] = coeff
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, nvars: int) -> Polynomial:
        return cls(nvars, {})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: Polynomial) -> Polynomial:
        if self.nvars != other.nvars:
            raise ValueError("cannot add polynomials over different universes")
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return Polynomial(self.nvars, terms)

    def scaled(self, c: Fraction | int) -> Polynomial:
        c = Fraction(c)
        return Polynomial(self.nvars, {e: c * v for e, v in self.terms.items()})

    def times_var(self, var: int) -> Polynomial:
        """Multiply by the variable with 1-based index ``var``."""
        if var < 1 or var > self.nvars:
            raise ValueError(f"variable index {var} outside 1..{self.nvars}")
        i = var - 1
        terms = {
            e[:i] + (e[i] + 1,) + e[i + 1:]: v for e, v in self.terms.items()
        }
        return Polynomial(self.nvars, terms)

    def with_nvars(self, nvars: int) -> Polynomial:
        """Embed into a larger variable universe (pad exponents with zeros)."""
        if nvars < self.nvars:
            raise ValueError("cannot shrink the variable universe")
        pad = (0,) * (nvars - self.nvars)
        return Polynomial(nvars, {e + pad: v for e, v in self.terms.items()})

    def is_homogeneous(self, degree: int) -> bool:
        """True when every monomial has the given total degree (vacuous if zero)."""
        return all(sum(e) == degree for e in self.terms)

    def coefficient(self, exps: tuple[int, ...]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))
