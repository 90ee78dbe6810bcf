"""Graded dimension counts and the one-variable shadow of a series.

For a quotient of a free monoid by an ideal, the words of each length
that survive the quotient form a basis of the corresponding graded piece
of the contracted algebra, so counting them degree by degree is the
Hilbert function.  The counts obey an exact complement rule against the
full power of the alphabet, which :func:`check_hilbert_relation` verifies
by computing every quantity along its own route.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SpecError
from .monoid import FreeMonoid, Report, ZeroMonoid
from .quotient_maps import QuotientContext
from .series import Series


@dataclass(frozen=True)
class HilbertPrefix:
    """Counts of nonzero elements by order, degrees 0 through T."""

    counts: tuple

    @property
    def terms(self) -> int:
        return len(self.counts) - 1

    def text(self, var: str = "t") -> str:
        return poly_text(self.counts, var)

    def to_json(self) -> dict:
        return {"counts": list(self.counts)}

    def __str__(self):
        return self.text()


def hilbert_prefix(m: ZeroMonoid, terms: int) -> HilbertPrefix:
    """Count nonzero elements of each order from 0 up to ``terms``."""
    if terms < 0:
        raise ValueError(f"terms must be nonnegative, got {terms}")
    counts = tuple(sum(1 for _ in m.iter_order(n)) for n in range(terms + 1))
    return HilbertPrefix(counts)


def check_hilbert_relation(ctx: QuotientContext, terms: int) -> Report:
    """Quotient count plus ideal count must equal the full alphabet power.

    Demands a free base so the total at degree n is k**n analytically;
    the ideal side is enumerated by the membership predicate and the
    quotient side by its own grade iterator, making three independent
    routes per degree.
    """
    if terms < 0:
        raise ValueError(f"terms must be nonnegative, got {terms}")
    if not isinstance(ctx.base, FreeMonoid):
        raise SpecError(
            "the complement rule needs a free base monoid, got "
            f"{ctx.base.describe()}")
    k = len(ctx.base.alphabet())
    contains = ctx.ideal.contains
    violations = []
    quotient_counts = []
    for n in range(terms + 1):
        total = k ** n
        in_ideal = sum(1 for w in ctx.base.iter_order(n) if contains(w))
        survive = sum(1 for _ in ctx.quotient.iter_order(n))
        quotient_counts.append(survive)
        if survive + in_ideal != total:
            violations.append(
                f"degree {n}: {survive} survivors + {in_ideal} in the ideal "
                f"!= {total} words")
    notes = (f"quotient counts: {quotient_counts}",)
    return Report("hilbert-relation", tuple(violations), notes)


def evaluation_map(f: Series, terms: int) -> list:
    """Collapse a free-monoid series to one variable: every word of
    length n contributes its coefficient to the t**n slot.

    Returns ring values indexed 0..min(terms, truncation); higher slots
    are unknown under the truncation, so they are not reported.
    """
    if terms < 0:
        raise ValueError(f"terms must be nonnegative, got {terms}")
    if not isinstance(f.monoid, FreeMonoid):
        raise SpecError(
            "evaluation to one variable needs a series over a free monoid, "
            f"got one over {f.monoid.describe()}")
    ring = f.ring
    top = min(terms, f.truncation)
    slots = [ring.zero] * (top + 1)
    for word, coeff in f.terms.items():
        n = len(word)
        if n <= top:
            slots[n] = ring.add(slots[n], coeff)
    return slots


def poly_text(coeffs, var: str = "t") -> str:
    """Render integer-like coefficients as a polynomial in one variable."""
    out = []
    for n, c in enumerate(coeffs):
        if c == 0:
            continue
        negative = c < 0
        magnitude = -c if negative else c
        if n == 0:
            body = str(magnitude)
        else:
            head = "" if magnitude == 1 else str(magnitude)
            body = head + (var if n == 1 else f"{var}^{n}")
        if not out:
            out.append(("-" if negative else "") + body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out) or "0"
