"""Locally finite monoids with zero, realized over finite alphabets.

Every monoid element other than the absorbing zero is encoded as a *word*:
a tuple of letter indices for free-monoid-like structures, or a tuple of
letter exponents for commutative ones.  Equal elements always have equal
encodings, so words can be dict keys and compared bitwise.  The absorbing
element is never encoded as a word; products that hit it return the
``ZERO`` sentinel instead.

Built-in realizations:

* :class:`FreeMonoid` -- words under concatenation, no reachable zero;
* :class:`FreeCommutativeMonoid` -- exponent vectors under addition;
* :class:`AdjoinedZero` -- any realization with a fresh (unreachable) zero;
* :class:`ReesQuotient` -- a base monoid with a proper two-sided ideal
  collapsed to zero.

A monoid without zero is served by the same interface; its ``ZERO`` is
simply never returned by any product.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .errors import InfiniteGradeError, MembershipError, SpecError

Word = tuple  # tuple[int, ...]; letter indices or letter exponents

DEFAULT_TRUNCATION = 8


class Zero:
    """Singleton marker for the absorbing element of a monoid product."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"


ZERO = Zero()

MonoidValue = Union[Zero, Word]


class Alphabet:
    """Ordered list of distinct letter names; fixes all lexicographic orders."""

    def __init__(self, letters: Iterable[str]):
        self.letters = tuple(letters)
        if not self.letters:
            raise SpecError("alphabet must contain at least one letter")
        for name in self.letters:
            if not isinstance(name, str) or not name:
                raise SpecError(f"letter names must be nonempty strings, got {name!r}")
        if len(set(self.letters)) != len(self.letters):
            raise SpecError(f"alphabet letters must be distinct: {self.letters}")
        self._index = {name: i for i, name in enumerate(self.letters)}
        self._single_char = all(len(name) == 1 for name in self.letters)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise SpecError(f"unknown letter {name!r}; alphabet is {list(self.letters)}") from None

    def join(self, names: Iterable[str]) -> str:
        # single-char alphabets render words as plain strings; otherwise use
        # an explicit separator so "x1 x2" stays unambiguous
        sep = "" if self._single_char else "*"
        return sep.join(names)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i: int) -> str:
        return self.letters[i]

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"Alphabet({list(self.letters)})"


@dataclass(frozen=True)
class Report:
    """Outcome of a verification run: named check, violations, side notes."""

    check: str
    violations: tuple = ()
    notes: tuple = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def counterexample(self):
        return self.violations[0] if self.violations else None

    def to_json(self) -> dict:
        data = {"check": self.check, "pass": self.passed}
        if self.violations:
            data["counterexample"] = self.violations[0]
        if self.notes:
            data["notes"] = list(self.notes)
        return data

    def __str__(self):
        if self.passed:
            return f"PASS {self.check}"
        return f"FAIL {self.check}: {self.violations[0]}"


def commutative_image(word: Word, size: int) -> Word:
    """Letter-multiplicity vector of a sequence word."""
    counts = [0] * size
    for i in word:
        counts[i] += 1
    return tuple(counts)


class ZeroMonoid(ABC):
    """A monoid with (possibly unreachable) zero, graded by its order function.

    Subclasses provide the raw operations on canonical words; the public
    ``product``/``order``/``factorizations`` wrappers add membership checks
    and raise :class:`MembershipError` on foreign words.
    """

    # "sequence" words are letter-index tuples, "vector" words are exponent
    # tuples; ideals use this to check they apply to a compatible base
    word_kind: str

    @abstractmethod
    def alphabet(self) -> Alphabet:
        ...

    @abstractmethod
    def identity(self) -> Word:
        ...

    @abstractmethod
    def contains(self, word: Word) -> bool:
        ...

    @abstractmethod
    def _mul(self, x: Word, y: Word) -> MonoidValue:
        """Product of two member words, without membership checks."""

    @abstractmethod
    def _order(self, word: Word) -> int:
        ...

    def describe(self) -> str:
        return repr(self)

    def _require(self, word: Word):
        if not self.contains(word):
            raise MembershipError(
                f"{word!r} is not an element of {self.describe()}")

    def product(self, x: Word, y: Word) -> MonoidValue:
        """xy, or ``ZERO`` when the product is the absorbing element."""
        self._require(x)
        self._require(y)
        return self._mul(x, y)

    def order(self, word: Word) -> int:
        """Largest n such that the word splits into n non-identity factors."""
        self._require(word)
        return self._order(word)

    def iter_order(self, n: int) -> Iterator[Word]:
        """Lazily enumerate the nonzero elements of order n (any order)."""
        raise InfiniteGradeError(
            f"{self.describe()} cannot enumerate elements of order {n}")

    def elements_of_order(self, n: int) -> list:
        """All nonzero elements of order n, sorted by display order."""
        if n < 0:
            raise ValueError(f"order must be nonnegative, got {n}")
        return sorted(self.iter_order(n), key=self.sort_key)

    def _splits(self, x: Word) -> Iterable:
        raise InfiniteGradeError(
            f"{self.describe()} cannot enumerate factorizations")

    def factorizations(self, x: Word) -> list:
        """All pairs (y, z) with yz = x, sorted by the left factor."""
        self._require(x)
        pairs = list(self._splits(x))
        pairs.sort(key=lambda p: (self._order(p[0]), self.sort_key(p[0])))
        return pairs

    def sort_key(self, word: Word) -> Word:
        """Key realizing (order, lexicographic) comparison of words."""
        return word

    def word_letters(self, word: Word) -> list:
        """Word as a list of letter names (vector words are expanded)."""
        alpha = self.alphabet()
        return [alpha[i] for i in self.sort_key(word)]

    def word_from_letters(self, names: Iterable[str]) -> Word:
        alpha = self.alphabet()
        return tuple(alpha.index(name) for name in names)

    def render_word(self, word: Word) -> str:
        if word == self.identity():
            return "1"
        return self.alphabet().join(self.word_letters(word))


class FreeMonoid(ZeroMonoid):
    """Words over a finite alphabet under concatenation.

    Has no reachable zero; exposing it through the zero-monoid interface
    lets series over an ordinary free monoid share all the machinery.
    """

    word_kind = "sequence"

    def __init__(self, alphabet: Alphabet):
        self._alphabet = alphabet
        self._size = len(alphabet)

    def alphabet(self) -> Alphabet:
        return self._alphabet

    def identity(self) -> Word:
        return ()

    def contains(self, word) -> bool:
        return (isinstance(word, tuple)
                and all(isinstance(i, int) and 0 <= i < self._size for i in word))

    def _mul(self, x, y):
        return x + y

    def _order(self, word) -> int:
        return len(word)

    def iter_order(self, n: int) -> Iterator[Word]:
        return itertools.product(range(self._size), repeat=n)

    def _splits(self, x):
        return [(x[:i], x[i:]) for i in range(len(x) + 1)]

    def describe(self) -> str:
        return f"free monoid on {{{', '.join(self._alphabet)}}}"

    def __repr__(self):
        return f"FreeMonoid({list(self._alphabet)})"

    def __eq__(self, other):
        return type(other) is FreeMonoid and other._alphabet == self._alphabet

    def __hash__(self):
        return hash(("free", self._alphabet))


class FreeCommutativeMonoid(ZeroMonoid):
    """Exponent vectors over a finite alphabet under componentwise addition."""

    word_kind = "vector"

    def __init__(self, alphabet: Alphabet):
        self._alphabet = alphabet
        self._size = len(alphabet)

    def alphabet(self) -> Alphabet:
        return self._alphabet

    def identity(self) -> Word:
        return (0,) * self._size

    def contains(self, word) -> bool:
        return (isinstance(word, tuple) and len(word) == self._size
                and all(isinstance(e, int) and e >= 0 for e in word))

    def _mul(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def _order(self, word) -> int:
        return sum(word)

    def iter_order(self, n: int) -> Iterator[Word]:
        # nondecreasing index sequences of length n = vectors of total degree n,
        # generated in display order
        for combo in itertools.combinations_with_replacement(range(self._size), n):
            yield commutative_image(combo, self._size)

    def _splits(self, x):
        pairs = []
        for sub in itertools.product(*(range(e + 1) for e in x)):
            pairs.append((sub, tuple(a - b for a, b in zip(x, sub))))
        return pairs

    def sort_key(self, word):
        # expanded letter sequence: (2, 1) over {a, b} sorts and prints as "aab"
        return tuple(i for i, e in enumerate(word) for _ in range(e))

    def word_from_letters(self, names):
        alpha = self.alphabet()
        return commutative_image(tuple(alpha.index(n) for n in names),
                                 self._size)

    def describe(self) -> str:
        return f"free commutative monoid on {{{', '.join(self._alphabet)}}}"

    def __repr__(self):
        return f"FreeCommutativeMonoid({list(self._alphabet)})"

    def __eq__(self, other):
        return (type(other) is FreeCommutativeMonoid
                and other._alphabet == self._alphabet)

    def __hash__(self):
        return hash(("free-commutative", self._alphabet))


class AdjoinedZero(ZeroMonoid):
    """A base monoid with a fresh absorbing zero adjoined.

    The zero absorbs but is never the product of two nonzero elements, so
    every word-level operation delegates to the base realization.
    """

    def __init__(self, base: ZeroMonoid):
        self.base = base
        self.word_kind = base.word_kind

    def alphabet(self):
        return self.base.alphabet()

    def identity(self):
        return self.base.identity()

    def contains(self, word):
        return self.base.contains(word)

    def _mul(self, x, y):
        return self.base._mul(x, y)

    def _order(self, word):
        return self.base._order(word)

    def iter_order(self, n):
        return self.base.iter_order(n)

    def _splits(self, x):
        return self.base._splits(x)

    def sort_key(self, word):
        return self.base.sort_key(word)

    def word_from_letters(self, names):
        return self.base.word_from_letters(names)

    def describe(self):
        return f"{self.base.describe()} with adjoined zero"

    def __repr__(self):
        return f"AdjoinedZero({self.base!r})"

    def __eq__(self, other):
        return type(other) is AdjoinedZero and other.base == self.base

    def __hash__(self):
        return hash(("adjoin-zero", self.base))


class ReesQuotient(ZeroMonoid):
    """Quotient of a base monoid by a proper two-sided ideal collapsed to zero.

    Elements are the base words outside the ideal; a product falls to
    ``ZERO`` exactly when the base product lands in the ideal.  The order
    function is inherited from the base.
    """

    def __init__(self, base: ZeroMonoid, ideal):
        if ideal.base != base:
            raise SpecError(
                f"ideal is declared over {ideal.base.describe()}, "
                f"not over {base.describe()}")
        if ideal.contains(base.identity()):
            raise SpecError(
                f"{ideal.describe()} is not proper: it contains the identity")
        self.base = base
        self.ideal = ideal
        self.word_kind = base.word_kind

    def alphabet(self):
        return self.base.alphabet()

    def identity(self):
        return self.base.identity()

    def contains(self, word):
        return self.base.contains(word) and not self.ideal.contains(word)

    def _mul(self, x, y):
        z = self.base._mul(x, y)
        if z is ZERO or self.ideal.contains(z):
            return ZERO
        return z

    def _order(self, word):
        return self.base._order(word)

    def iter_order(self, n):
        for word in self.base.iter_order(n):
            if not self.ideal.contains(word):
                yield word

    def _splits(self, x):
        return [(y, z) for y, z in self.base._splits(x)
                if self.contains(y) and self.contains(z)]

    def sort_key(self, word):
        return self.base.sort_key(word)

    def word_from_letters(self, names):
        return self.base.word_from_letters(names)

    def describe(self):
        return (f"Rees quotient of {self.base.describe()} "
                f"by {self.ideal.describe()}")

    def __repr__(self):
        return f"ReesQuotient({self.base!r}, {self.ideal!r})"

    def __eq__(self, other):
        return (type(other) is ReesQuotient and other.base == self.base
                and other.ideal == self.ideal)

    def __hash__(self):
        return hash(("rees", self.base, self.ideal))


def validate_locally_finite(m: ZeroMonoid, max_order: int) -> Report:
    """Sample-bounded check that m behaves like a locally finite monoid.

    Scans all elements of order at most max_order and reports every
    non-identity idempotent, every nonzero product whose order drops below
    the sum of the factor orders, and every product that returns one of its
    own non-trivial factors (which forces unboundedly many factorizations).
    An empty report means no violation was found below the bound; it is not
    a proof for infinite realizations.
    """
    if max_order < 1:
        raise ValueError(f"max_order must be at least 1, got {max_order}")
    grades = [m.elements_of_order(n) for n in range(max_order + 1)]
    one = m.identity()
    violations = []

    for n in range(1, max_order + 1):
        for x in grades[n]:
            if m._mul(x, x) == x:
                violations.append(
                    f"non-identity idempotent: {m.render_word(x)}")

    for i in range(max_order + 1):
        for j in range(max_order + 1 - i):
            for x in grades[i]:
                for y in grades[j]:
                    z = m._mul(x, y)
                    if z is ZERO:
                        continue
                    if m._order(z) < i + j:
                        violations.append(
                            f"order of {m.render_word(x)}*{m.render_word(y)} "
                            f"is {m._order(z)} < {i} + {j}")
                    if x != y:
                        if x != one and z == y:
                            violations.append(
                                f"{m.render_word(x)}*{m.render_word(y)} = "
                                f"{m.render_word(y)}: unboundedly many factorizations")
                        elif y != one and z == x:
                            violations.append(
                                f"{m.render_word(x)}*{m.render_word(y)} = "
                                f"{m.render_word(x)}: unboundedly many factorizations")

    return Report("locally-finite", tuple(violations))
