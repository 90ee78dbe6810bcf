"""Two-sided ideal membership predicates over a base monoid.

An ideal here is a decidable predicate on the words of a base monoid,
closed under multiplication by arbitrary words on either side.  The
predicates are the data from which quotients with an absorbing zero are
built; nothing in this module touches series.

Closure is a promise of the predicate, not something the constructors can
see, so :func:`validate_ideal` exists to probe it (and properness) over a
finite range of orders and produce a report.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Iterable

from .errors import SpecError
from .monoid import (
    FreeCommutativeMonoid,
    Report,
    Word,
    ZERO,
    ZeroMonoid,
    commutative_image,
)


class IdealSpec(ABC):
    """Membership predicate for a two-sided ideal of ``base``.

    ``contains`` assumes its argument is a valid word of the base monoid;
    it sits inside the quotient's multiplication loop and does not
    re-validate.
    """

    kind: str

    def __init__(self, base: ZeroMonoid):
        self.base = base

    @abstractmethod
    def contains(self, word: Word) -> bool:
        raise NotImplementedError

    def describe(self) -> str:
        return f"{self.kind} ideal"

    def _key(self):
        return (self.kind, self.base)

    def __eq__(self, other):
        return isinstance(other, IdealSpec) and other._key() == self._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"<{type(self).__name__} over {self.base.describe()}>"


def _require_sequence_base(base: ZeroMonoid, kind: str):
    if base.word_kind != "sequence":
        raise SpecError(
            f"{kind} ideal needs a monoid whose words are letter sequences, "
            f"got {base.describe()}")


class RepeatedLetterIdeal(IdealSpec):
    """Words in which some letter occurs at least twice."""

    kind = "repeated-letter"

    def __init__(self, base: ZeroMonoid):
        _require_sequence_base(base, self.kind)
        super().__init__(base)

    def contains(self, word: Word) -> bool:
        return len(set(word)) < len(word)


class MinLengthIdeal(IdealSpec):
    """Words of length at least a fixed bound n."""

    kind = "min-length"

    def __init__(self, base: ZeroMonoid, n: int):
        _require_sequence_base(base, self.kind)
        if n < 1:
            raise SpecError(f"min-length bound must be at least 1, got {n}")
        super().__init__(base)
        self.n = n

    def contains(self, word: Word) -> bool:
        return len(word) >= self.n

    def describe(self) -> str:
        return f"min-length({self.n}) ideal"

    def _key(self):
        return (self.kind, self.base, self.n)


class GeneratedIdeal(IdealSpec):
    """Words containing some generator as a contiguous factor."""

    kind = "generated"

    def __init__(self, base: ZeroMonoid, words: Iterable[Word]):
        _require_sequence_base(base, self.kind)
        super().__init__(base)
        generators = []
        for w in words:
            w = tuple(w)
            if not base.contains(w):
                raise SpecError(f"generator {w!r} is not a word of "
                                f"{base.describe()}")
            generators.append(w)
        if not generators:
            raise SpecError("generated ideal needs at least one generator")
        # dedupe; keep a canonical order so equal generator sets compare equal
        self.generators = tuple(sorted(set(generators), key=lambda w: (len(w), w)))

    def contains(self, word: Word) -> bool:
        for g in self.generators:
            k = len(g)
            if k == 0:
                return True
            if any(word[i:i + k] == g for i in range(len(word) - k + 1)):
                return True
        return False

    def describe(self) -> str:
        shown = ", ".join(self.base.render_word(g) for g in self.generators)
        return f"generated({shown}) ideal"

    def _key(self):
        return (self.kind, self.base, self.generators)


class DegreeAtLeastIdeal(IdealSpec):
    """Exponent vectors of total degree at least a fixed bound d."""

    kind = "degree-at-least"

    def __init__(self, base: ZeroMonoid, d: int):
        if base.word_kind != "vector":
            raise SpecError(
                f"degree-at-least ideal needs a monoid whose words are "
                f"exponent vectors, got {base.describe()}")
        if d < 1:
            raise SpecError(f"degree bound must be at least 1, got {d}")
        super().__init__(base)
        self.d = d

    def contains(self, word: Word) -> bool:
        return sum(word) >= self.d

    def describe(self) -> str:
        return f"degree-at-least({self.d}) ideal"

    def _key(self):
        return (self.kind, self.base, self.d)


class EvPreimageIdeal(IdealSpec):
    """Pullback of a commutative-side ideal along letter-count abelianization.

    A word belongs exactly when its exponent vector lies in the inner
    ideal.  Closure is inherited: the count map is multiplicative.
    """

    kind = "ev-preimage"

    def __init__(self, base: ZeroMonoid, inner: IdealSpec):
        _require_sequence_base(base, self.kind)
        if not isinstance(inner.base, FreeCommutativeMonoid):
            raise SpecError(
                "ev-preimage needs an inner ideal over a free commutative "
                f"monoid, got one over {inner.base.describe()}")
        if inner.base.alphabet() != base.alphabet():
            raise SpecError(
                "ev-preimage inner ideal must share the base alphabet: "
                f"{base.alphabet()!r} vs {inner.base.alphabet()!r}")
        super().__init__(base)
        self.inner = inner
        self._size = len(base.alphabet())

    def contains(self, word: Word) -> bool:
        return self.inner.contains(commutative_image(word, self._size))

    def describe(self) -> str:
        return f"ev-preimage({self.inner.describe()})"

    def _key(self):
        return (self.kind, self.base, self.inner)


def validate_ideal(spec: IdealSpec, max_order: int) -> Report:
    """Probe a predicate for ideal-hood over a finite range of orders.

    Checks that the identity is excluded (properness) and that membership
    absorbs multiplication on both sides for every pair of words whose
    orders sum to at most max_order.  A clean report is evidence, not
    proof; the bound says how far the search went.
    """
    if max_order < 1:
        raise ValueError(f"max_order must be at least 1, got {max_order}")
    base = spec.base
    violations = []
    if spec.contains(base.identity()):
        violations.append("identity belongs to the ideal (not proper)")
    grades = [list(base.iter_order(n)) for n in range(max_order + 1)]
    members = [[w for w in grade if spec.contains(w)] for grade in grades]
    for i in range(max_order + 1):
        for u in members[i]:
            for j in range(max_order + 1 - i):
                for v in grades[j]:
                    left = base._mul(v, u)
                    if left is not ZERO and not spec.contains(left):
                        violations.append(
                            f"not left-absorbing: "
                            f"{base.render_word(v)}*{base.render_word(u)} "
                            f"escapes the ideal")
                    right = base._mul(u, v)
                    if right is not ZERO and not spec.contains(right):
                        violations.append(
                            f"not right-absorbing: "
                            f"{base.render_word(u)}*{base.render_word(v)} "
                            f"escapes the ideal")
                    if len(violations) >= 5:
                        return Report(f"ideal({spec.describe()})",
                                      tuple(violations))
    notes = (f"checked all products with order sum at most {max_order}",)
    return Report(f"ideal({spec.describe()})", tuple(violations), notes)
