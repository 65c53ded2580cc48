"""Generalized progressions: base + Pol(n_1) x_1 + ... + Pol(n_d) x_d."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import ResourceLimitError
from .field import Field
from .poly import Poly, pol_elements
from .sets import PolySet
from .spaces import Subspace

DEFAULT_ENUM_CAP = 1_000_000


class Term(NamedTuple):
    width: int
    gen: Poly


@dataclass(frozen=True)
class Progression:
    field: Field
    base: Poly
    terms: tuple[Term, ...]

    def __post_init__(self):
        if self.base.field != self.field:
            raise ValueError("base field mismatch")
        for term in self.terms:
            if term.width < 1:
                raise ValueError("term width must be at least 1")
            if term.gen.field != self.field or term.gen.is_zero():
                raise ValueError("term generator must be a nonzero polynomial "
                                 "over the progression field")

    @property
    def rank(self) -> int:
        return len(self.terms)

    @property
    def nominal_size(self) -> int:
        """q ** sum(widths): the size when the progression is proper."""
        return self.field.q ** sum(term.width for term in self.terms)

    def support_space(self) -> Subspace:
        """Span of all coefficient shifts; membership reduces to this space."""
        gens = [term.gen.shift(j) for term in self.terms for j in range(term.width)]
        return Subspace.span(self.field, gens)

    def member(self, x: Poly) -> bool:
        if x.field != self.field:
            return False
        return self.support_space().contains(x - self.base)

    def enumerate_elements(self, cap: int = DEFAULT_ENUM_CAP) -> PolySet:
        if self.nominal_size > cap:
            raise ResourceLimitError(
                f"progression spans {self.nominal_size} tuples, above the cap of {cap}")
        elems = [self.base]
        for term in self.terms:
            images = [a * term.gen for a in pol_elements(self.field, term.width)]
            elems = [e + img for e in elems for img in images]
        return PolySet(self.field, elems)

    def is_proper(self, cap: int = DEFAULT_ENUM_CAP) -> bool:
        return len(self.enumerate_elements(cap)) == self.nominal_size
