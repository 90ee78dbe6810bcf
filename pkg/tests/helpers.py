"""Shared builders and independent oracles for the test suite.

The oracles here deliberately avoid the code paths they are used to
check: the Mobius oracle inverts the characteristic series by a
grade-by-grade linear solve over factorizations instead of the star
route, and the falling-factorial counter predicts no-repeat word counts
arithmetically instead of by enumeration.
"""

from mobzero import (
    AdjoinedZero,
    Alphabet,
    DegreeAtLeastIdeal,
    EvPreimageIdeal,
    FreeCommutativeMonoid,
    FreeMonoid,
    GeneratedIdeal,
    INTEGERS,
    MinLengthIdeal,
    ReesQuotient,
    RepeatedLetterIdeal,
    Series,
)

LETTERS = ("a", "b", "c", "d")


def alphabet(k):
    return Alphabet(LETTERS[:k])


def free(k):
    return FreeMonoid(alphabet(k))


def commutative(k):
    return FreeCommutativeMonoid(alphabet(k))


def standard_words(k=3):
    base = free(k)
    return ReesQuotient(base, RepeatedLetterIdeal(base))


def builtin_monoids(k):
    """One representative of every built-in realization over k letters."""
    f = free(k)
    c = commutative(k)
    return [
        f,
        c,
        AdjoinedZero(f),
        AdjoinedZero(c),
        ReesQuotient(f, RepeatedLetterIdeal(f)),
        ReesQuotient(f, MinLengthIdeal(f, 3)),
        ReesQuotient(c, DegreeAtLeastIdeal(c, 3)),
    ]


def builtin_free_ideals(base):
    """Every built-in ideal kind applicable to a free base."""
    inner_base = FreeCommutativeMonoid(base.alphabet())
    last_letter = (len(base.alphabet()) - 1,)
    return [
        RepeatedLetterIdeal(base),
        MinLengthIdeal(base, 3),
        GeneratedIdeal(base, [last_letter]),
        EvPreimageIdeal(base, DegreeAtLeastIdeal(inner_base, 2)),
    ]


def mobius_by_triangular_solve(m, truncation, ring=INTEGERS):
    """Invert the characteristic series grade by grade.

    mu*zeta = 1 forces, for every x other than the identity,
    sum of mu(y) over all pairs (y, z) with yz = x to vanish; the pair
    (x, identity) isolates the unknown, every other pair has a left
    factor of strictly lower order.  No star operation involved.
    """
    identity = m.identity()
    mu = {identity: ring.one}
    for n in range(1, truncation + 1):
        for x in m.iter_order(n):
            total = ring.zero
            for y, z in m.factorizations(x):
                if z == identity:
                    continue
                known = mu.get(y)
                if known is not None:
                    total = ring.add(total, known)
            value = ring.neg(total)
            if value != ring.zero:
                mu[x] = value
    return Series(m, truncation, mu, ring)


def falling_factorial(k, n):
    """Number of length-n words over k letters with no letter repeated."""
    value = 1
    for i in range(n):
        value *= k - i
    return value


def series_from_letterlists(m, truncation, pairs, ring=INTEGERS):
    """Build a series from (coefficient, "letters") string shorthand."""
    terms = {}
    for coeff, text in pairs:
        word = m.word_from_letters(list(text))
        terms[word] = ring.from_int(coeff)
    return Series(m, truncation, terms, ring)
