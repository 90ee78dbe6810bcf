"""Truncated series over a monoid with zero: the contracted algebra layer.

A :class:`Series` is a finite, normalized coefficient map over the nonzero
elements of a monoid, carried modulo all terms of order above a fixed
truncation bound N.  Every operation is exact: results are the true series
of the contracted algebra reduced modulo the order filtration at N + 1.
The absorbing element never appears as a key; term pairs whose product
falls onto it are simply discarded by the Cauchy product, which is what
"contracted" means concretely.

Coefficients live in a pluggable commutative ring.  The default is exact
arbitrary-precision integers; rationals and integers mod m are provided
as well.
"""

from __future__ import annotations

import math
import operator
from fractions import Fraction
from typing import Optional

from .errors import MonoidMismatchError, ProperError, TruncationError
from .monoid import DEFAULT_TRUNCATION, Report, Word, ZERO, ZeroMonoid


class Ring:
    """Commutative ring with unit, operating on raw coefficient values."""

    name = "ring"
    zero = None
    one = None

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def from_int(self, n: int):
        raise NotImplementedError

    def is_negative(self, a) -> bool:
        return False

    def abs(self, a):
        return a

    def render(self, a) -> str:
        return str(a)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return type(other) is type(self)

    def __hash__(self):
        return hash(type(self))


class IntegerRing(Ring):
    name = "integers"
    zero = 0
    one = 1
    add = staticmethod(operator.add)
    neg = staticmethod(operator.neg)
    mul = staticmethod(operator.mul)

    def from_int(self, n):
        return int(n)

    def is_negative(self, a):
        return a < 0

    def abs(self, a):
        return -a if a < 0 else a


class RationalRing(Ring):
    name = "rationals"
    zero = Fraction(0)
    one = Fraction(1)
    add = staticmethod(operator.add)
    neg = staticmethod(operator.neg)
    mul = staticmethod(operator.mul)

    def from_int(self, n):
        return Fraction(n)

    def is_negative(self, a):
        return a < 0

    def abs(self, a):
        return -a if a < 0 else a


class IntegerModRing(Ring):
    """Integers modulo m, stored as canonical residues 0..m-1."""

    def __init__(self, modulus: int):
        if modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {modulus}")
        self.modulus = modulus
        self.name = f"integers mod {modulus}"
        self.zero = 0
        self.one = 1 % modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def from_int(self, n):
        return n % self.modulus

    def __eq__(self, other):
        return type(other) is IntegerModRing and other.modulus == self.modulus

    def __hash__(self):
        return hash(("mod", self.modulus))


INTEGERS = IntegerRing()
RATIONALS = RationalRing()


class Series:
    """Element of the total contracted algebra, truncated at a fixed order.

    ``terms`` maps canonical words to nonzero ring values; keys of order
    above the truncation are projected away on construction, which is the
    quotient map onto the algebra modulo the order filtration.  Instances
    are immutable by convention: no operation mutates its inputs.
    """

    __slots__ = ("monoid", "ring", "truncation", "terms")

    def __init__(self, monoid: ZeroMonoid, truncation: int, terms=None,
                 ring: Ring = INTEGERS, _normalized: bool = False):
        if truncation < 0:
            raise ValueError(f"truncation must be nonnegative, got {truncation}")
        self.monoid = monoid
        self.ring = ring
        self.truncation = truncation
        if _normalized:
            self.terms = terms
            return
        clean = {}
        for word, coeff in dict(terms or {}).items():
            monoid._require(word)
            if coeff == ring.zero:
                continue
            if monoid._order(word) > truncation:
                continue
            clean[word] = coeff
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, monoid, truncation=DEFAULT_TRUNCATION, ring=INTEGERS):
        return cls(monoid, truncation, {}, ring, _normalized=True)

    @classmethod
    def one(cls, monoid, truncation=DEFAULT_TRUNCATION, ring=INTEGERS):
        return cls(monoid, truncation, {monoid.identity(): ring.one}, ring,
                   _normalized=True)

    @classmethod
    def monomial(cls, monoid, truncation, word, coeff=None, ring=INTEGERS):
        if coeff is None:
            coeff = ring.one
        return cls(monoid, truncation, {word: coeff}, ring)

    # -- queries -----------------------------------------------------------

    def coefficient(self, word: Word):
        """Coefficient at a word; only determined up to the truncation."""
        self.monoid._require(word)
        if self.monoid._order(word) > self.truncation:
            raise TruncationError(
                f"coefficient at order {self.monoid._order(word)} is not "
                f"determined by a series truncated at {self.truncation}")
        return self.terms.get(word, self.ring.zero)

    def augmentation(self):
        """Coefficient at the identity."""
        return self.terms.get(self.monoid.identity(), self.ring.zero)

    def is_zero(self) -> bool:
        return not self.terms

    def is_proper(self) -> bool:
        return self.augmentation() == self.ring.zero

    def min_order(self):
        """Least order in the support; infinity for the zero series."""
        if not self.terms:
            return math.inf
        return min(self.monoid._order(w) for w in self.terms)

    def support(self) -> list:
        return [w for w, _ in self.items_sorted()]

    def items_sorted(self) -> list:
        m = self.monoid
        return sorted(self.terms.items(),
                      key=lambda kv: (m._order(kv[0]), m.sort_key(kv[0])))

    def truncated(self, truncation: int) -> "Series":
        """Project to a lower truncation order."""
        if truncation > self.truncation:
            raise TruncationError(
                f"cannot extend a series truncated at {self.truncation} "
                f"to order {truncation}")
        if truncation == self.truncation:
            return self
        m = self.monoid
        terms = {w: c for w, c in self.terms.items()
                 if m._order(w) <= truncation}
        return Series(m, truncation, terms, self.ring, _normalized=True)

    # -- rendering ---------------------------------------------------------

    def render(self) -> str:
        """Text form: terms by (order, lex), unit coefficients suppressed."""
        items = self.items_sorted()
        if not items:
            return "0"
        ring = self.ring
        identity = self.monoid.identity()
        out = []
        for word, coeff in items:
            negative = ring.is_negative(coeff)
            magnitude = ring.abs(coeff)
            if word == identity:
                body = ring.render(magnitude)
            elif magnitude == ring.one:
                body = self.monoid.render_word(word)
            else:
                body = ring.render(magnitude) + self.monoid.render_word(word)
            if not out:
                out.append(("-" if negative else "") + body)
            else:
                out.append((" - " if negative else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"<Series N={self.truncation} {self.render()}>"

    # -- arithmetic (delegates to the module-level operations) -------------

    def __eq__(self, other):
        return (isinstance(other, Series)
                and other.monoid == self.monoid
                and other.ring == self.ring
                and other.truncation == self.truncation
                and other.terms == self.terms)

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scalar_mul(self.ring.neg(self.ring.one), other))

    def __neg__(self):
        return scalar_mul(self.ring.neg(self.ring.one), self)

    def __mul__(self, other):
        if isinstance(other, Series):
            return cauchy_product(self, other)
        return scalar_mul(other, self)

    def __rmul__(self, other):
        return scalar_mul(other, self)

    def star(self, **kwargs):
        return star(self, **kwargs)

    def power(self, k):
        return power(self, k)


def _check_compatible(f: Series, g: Series):
    if f.monoid != g.monoid:
        raise MonoidMismatchError(
            f"series over {f.monoid.describe()} combined with series over "
            f"{g.monoid.describe()}")
    if f.ring != g.ring:
        raise MonoidMismatchError(
            f"series over ring {f.ring!r} combined with series over {g.ring!r}")


def add(f: Series, g: Series) -> Series:
    """Coefficientwise sum at truncation min(f.N, g.N)."""
    _check_compatible(f, g)
    ring = f.ring
    cap = min(f.truncation, g.truncation)
    order = f.monoid._order
    terms = {w: c for w, c in f.terms.items() if order(w) <= cap}
    for w, c in g.terms.items():
        if order(w) > cap:
            continue
        total = ring.add(terms.get(w, ring.zero), c)
        if total == ring.zero:
            terms.pop(w, None)
        else:
            terms[w] = total
    return Series(f.monoid, cap, terms, ring, _normalized=True)


def scalar_mul(alpha, f: Series) -> Series:
    """Left scalar multiple; plain ints are coerced into the ring."""
    ring = f.ring
    if isinstance(alpha, int) and not isinstance(ring, IntegerRing):
        alpha = ring.from_int(alpha)
    terms = {}
    for w, c in f.terms.items():
        v = ring.mul(alpha, c)
        if v != ring.zero:
            terms[w] = v
    return Series(f.monoid, f.truncation, terms, ring, _normalized=True)


def cauchy_product(f: Series, g: Series) -> Series:
    """Convolution over all term pairs; products hitting zero are dropped.

    Pairs whose factor orders already sum beyond the truncation cannot
    contribute (the order of a product dominates the sum), so they are
    pruned before multiplying.
    """
    _check_compatible(f, g)
    m = f.monoid
    ring = f.ring
    cap = min(f.truncation, g.truncation)
    by_order = {}
    for w, c in g.terms.items():
        by_order.setdefault(m._order(w), []).append((w, c))
    g_orders = sorted(by_order)
    radd, rmul = ring.add, ring.mul
    mul, order = m._mul, m._order
    acc = {}
    for x, a in f.terms.items():
        ox = order(x)
        for og in g_orders:
            if ox + og > cap:
                break
            for y, b in by_order[og]:
                z = mul(x, y)
                if z is ZERO or order(z) > cap:
                    continue
                prev = acc.get(z)
                acc[z] = rmul(a, b) if prev is None else radd(prev, rmul(a, b))
    terms = {w: c for w, c in acc.items() if c != ring.zero}
    return Series(m, cap, terms, ring, _normalized=True)


def convolve_oracle(f: Series, g: Series) -> Series:
    """Same product, evaluated the dual way: for every element up to the
    truncation, sum the coefficient products over its factorizations.

    Kept deliberately independent of :func:`cauchy_product` so the two can
    be checked against each other; requires an enumerable monoid.
    """
    _check_compatible(f, g)
    m = f.monoid
    ring = f.ring
    cap = min(f.truncation, g.truncation)
    terms = {}
    for n in range(cap + 1):
        for x in m.iter_order(n):
            total = ring.zero
            for y, z in m._splits(x):
                a = f.terms.get(y)
                if a is None:
                    continue
                b = g.terms.get(z)
                if b is None:
                    continue
                total = ring.add(total, ring.mul(a, b))
            if total != ring.zero:
                terms[x] = total
    return Series(m, cap, terms, ring, _normalized=True)


def power(f: Series, k: int) -> Series:
    """k-th Cauchy power; the zeroth power is the unit series."""
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    result = Series.one(f.monoid, f.truncation, f.ring)
    for _ in range(k):
        result = cauchy_product(result, f)
        if result.is_zero():
            break
    return result


def augmentation(f: Series):
    """Coefficient at the identity; a ring morphism onto the coefficients."""
    return f.augmentation()


def coefficient(f: Series, word: Word):
    return f.coefficient(word)


def star(f: Series, return_power_count: bool = False):
    """Sum of all powers of a proper series: the inverse of (1 - f).

    Each power raises the minimal support order, so powers beyond the
    truncation vanish and the sum is finite and exact.  The loop stops as
    soon as a power vanishes outright, which happens for every proper
    series over a finite monoid (nilpotency).  With ``return_power_count``
    the number of nonzero powers summed (including the zeroth) is returned
    alongside the series.
    """
    if not f.is_proper():
        raise ProperError(
            f"star requires a proper series; coefficient at the identity "
            f"is {f.ring.render(f.augmentation())}")
    ring = f.ring
    total = Series.one(f.monoid, f.truncation, ring)
    p = total
    count = 1
    for _ in range(f.truncation):
        p = cauchy_product(p, f)
        if p.is_zero():
            break
        total = add(total, p)
        count += 1
    if return_power_count:
        return total, count
    return total


def characteristic_series(m: ZeroMonoid, truncation: int = DEFAULT_TRUNCATION,
                          ring: Ring = INTEGERS) -> Series:
    """Sum of every nonzero element up to the truncation, coefficient one."""
    terms = {}
    for n in range(truncation + 1):
        for x in m.iter_order(n):
            terms[x] = ring.one
    return Series(m, truncation, terms, ring, _normalized=True)


def proper_part(f: Series) -> Series:
    """f minus its coefficient at the identity."""
    terms = dict(f.terms)
    terms.pop(f.monoid.identity(), None)
    return Series(f.monoid, f.truncation, terms, f.ring, _normalized=True)


def mobius_series(m: ZeroMonoid, truncation: int = DEFAULT_TRUNCATION,
                  ring: Ring = INTEGERS) -> Series:
    """Inverse of the characteristic series, via the star of its negated
    proper part."""
    zeta = characteristic_series(m, truncation, ring)
    return star(-proper_part(zeta))


def zeta_transform_left(f: Series) -> Series:
    """Multiply by the characteristic series on the left."""
    zeta = characteristic_series(f.monoid, f.truncation, f.ring)
    return cauchy_product(zeta, f)


def zeta_transform_right(f: Series) -> Series:
    zeta = characteristic_series(f.monoid, f.truncation, f.ring)
    return cauchy_product(f, zeta)


def mobius_invert_left(g: Series) -> Series:
    """Undo a left zeta transform by multiplying with the Mobius series."""
    mu = mobius_series(g.monoid, g.truncation, g.ring)
    return cauchy_product(mu, g)


def mobius_invert_right(g: Series) -> Series:
    mu = mobius_series(g.monoid, g.truncation, g.ring)
    return cauchy_product(g, mu)


def first_difference(f: Series, g: Series) -> Optional[str]:
    """Rendered description of the first term where two series differ."""
    _check_compatible(f, g)
    m = f.monoid
    ring = f.ring
    words = set(f.terms) | set(g.terms)
    for w in sorted(words, key=lambda w: (m._order(w), m.sort_key(w))):
        a = f.terms.get(w, ring.zero)
        b = g.terms.get(w, ring.zero)
        if a != b:
            return (f"at {m.render_word(w)}: "
                    f"{ring.render(a)} != {ring.render(b)}")
    return None


def random_series(rng, m: ZeroMonoid, truncation: int,
                  max_support_order: int = 3, coeff_lo: int = -3,
                  coeff_hi: int = 3, proper: bool = False,
                  ring: Ring = INTEGERS) -> Series:
    """Deterministic random series driven by a seeded ``random.Random``.

    Support is drawn from the elements of order at most max_support_order
    (order at least 1 when proper); coefficients are uniform integers in
    [coeff_lo, coeff_hi], coerced into the ring.  Zero draws are dropped.
    """
    pool = []
    for n in range(1 if proper else 0, min(max_support_order, truncation) + 1):
        pool.extend(m.elements_of_order(n))
    if not pool:
        return Series.zero(m, truncation, ring)
    size = rng.randint(1, min(8, len(pool)))
    terms = {}
    for word in rng.sample(pool, size):
        coeff = rng.randint(coeff_lo, coeff_hi)
        if coeff != 0:
            terms[word] = ring.from_int(coeff)
    return Series(m, truncation, terms, ring, _normalized=True)


def check_unit_inverse(m: ZeroMonoid, truncation: int = DEFAULT_TRUNCATION,
                       ring: Ring = INTEGERS) -> Report:
    """Verify that the Mobius series inverts the characteristic series on
    both sides at the given truncation."""
    zeta = characteristic_series(m, truncation, ring)
    mu = mobius_series(m, truncation, ring)
    one = Series.one(m, truncation, ring)
    violations = []
    left = cauchy_product(mu, zeta)
    if left != one:
        violations.append(
            f"mobius*zeta != 1 ({first_difference(left, one)})")
    right = cauchy_product(zeta, mu)
    if right != one:
        violations.append(
            f"zeta*mobius != 1 ({first_difference(right, one)})")
    return Report("unit-inverse", tuple(violations))


def check_oracle_equivalence(m: ZeroMonoid, truncation: int = 6,
                             ring: Ring = INTEGERS, samples: int = 20,
                             seed: int = 0) -> Report:
    """Compare the pair-loop product against the factorization-based one
    on seeded random series pairs."""
    import random

    rng = random.Random(seed)
    violations = []
    for i in range(samples):
        f = random_series(rng, m, truncation, ring=ring)
        g = random_series(rng, m, truncation, ring=ring)
        fast = cauchy_product(f, g)
        slow = convolve_oracle(f, g)
        if fast != slow:
            violations.append(
                f"pair {i}: products disagree ({first_difference(fast, slow)})")
            break
    return Report("oracle-equivalence", tuple(violations))
