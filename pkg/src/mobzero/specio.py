"""JSON descriptions of monoids, ideals, and series, and their parsers.

The wire formats are deliberately small:

monoid      {"type": "free", "alphabet": ["a", "b"]}
            {"type": "free-commutative", "alphabet": ["a", "b"]}
            {"type": "adjoin-zero", "base": {...}}
            {"type": "rees", "base": {...}, "ideal": {...}}
ideal       {"kind": "repeated-letter"}
            {"kind": "min-length", "n": 3}
            {"kind": "generated", "words": [["c"], ["a", "b"]]}
            {"kind": "degree-at-least", "d": 2}
            {"kind": "ev-preimage", "inner": {...}}
series      {"truncation": 8, "terms": [["1", []], ["-1", ["a"]]]}

Series coefficients travel as decimal strings so arbitrary-precision
integers survive any JSON implementation.  Words travel as letter-name
lists; for commutative monoids the list is the sorted letter multiset.
Parsers raise :class:`SpecError` on malformed descriptions and
:class:`MembershipError` on words that fail to belong.
"""

from __future__ import annotations

import json
import os

from .errors import SpecError
from .ideals import (
    DegreeAtLeastIdeal,
    EvPreimageIdeal,
    GeneratedIdeal,
    IdealSpec,
    MinLengthIdeal,
    RepeatedLetterIdeal,
)
from .monoid import (
    AdjoinedZero,
    Alphabet,
    FreeCommutativeMonoid,
    FreeMonoid,
    ReesQuotient,
    ZeroMonoid,
)
from .series import INTEGERS, Ring, Series


def read_json_source(source: str) -> dict:
    """Load a JSON object from inline text or a file path.

    Anything that starts with ``{`` is treated as inline JSON; everything
    else is a path.
    """
    text = source
    if not source.lstrip().startswith("{"):
        if not os.path.exists(source):
            raise SpecError(f"no such file: {source}")
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON in {source!r}: {exc}") from None
    if not isinstance(obj, dict):
        raise SpecError(f"expected a JSON object, got {type(obj).__name__}")
    return obj


def _field(obj: dict, name: str, what: str):
    if name not in obj:
        raise SpecError(f"{what} description is missing {name!r}: {obj!r}")
    return obj[name]


def parse_monoid(obj: dict) -> ZeroMonoid:
    kind = _field(obj, "type", "monoid")
    if kind == "free":
        return FreeMonoid(Alphabet(_field(obj, "alphabet", "monoid")))
    if kind == "free-commutative":
        return FreeCommutativeMonoid(Alphabet(_field(obj, "alphabet", "monoid")))
    if kind == "adjoin-zero":
        return AdjoinedZero(parse_monoid(_field(obj, "base", "monoid")))
    if kind == "rees":
        base = parse_monoid(_field(obj, "base", "monoid"))
        ideal = parse_ideal(_field(obj, "ideal", "monoid"), base)
        return ReesQuotient(base, ideal)
    raise SpecError(f"unknown monoid type {kind!r}")


def monoid_to_json(m: ZeroMonoid) -> dict:
    if isinstance(m, FreeMonoid):
        return {"type": "free", "alphabet": list(m.alphabet())}
    if isinstance(m, FreeCommutativeMonoid):
        return {"type": "free-commutative", "alphabet": list(m.alphabet())}
    if isinstance(m, AdjoinedZero):
        return {"type": "adjoin-zero", "base": monoid_to_json(m.base)}
    if isinstance(m, ReesQuotient):
        return {"type": "rees", "base": monoid_to_json(m.base),
                "ideal": ideal_to_json(m.ideal)}
    raise SpecError(f"cannot serialize {m.describe()}")


def parse_ideal(obj: dict, base: ZeroMonoid) -> IdealSpec:
    kind = _field(obj, "kind", "ideal")
    if kind == "repeated-letter":
        return RepeatedLetterIdeal(base)
    if kind == "min-length":
        n = _field(obj, "n", "min-length ideal")
        if not isinstance(n, int):
            raise SpecError(f"min-length bound must be an integer, got {n!r}")
        return MinLengthIdeal(base, n)
    if kind == "generated":
        raw = _field(obj, "words", "generated ideal")
        if not isinstance(raw, list):
            raise SpecError(f"generator list must be a list, got {raw!r}")
        words = [base.word_from_letters(entry) for entry in raw]
        return GeneratedIdeal(base, words)
    if kind == "degree-at-least":
        d = _field(obj, "d", "degree-at-least ideal")
        if not isinstance(d, int):
            raise SpecError(f"degree bound must be an integer, got {d!r}")
        return DegreeAtLeastIdeal(base, d)
    if kind == "ev-preimage":
        inner_obj = _field(obj, "inner", "ev-preimage ideal")
        inner_base = FreeCommutativeMonoid(base.alphabet())
        return EvPreimageIdeal(base, parse_ideal(inner_obj, inner_base))
    raise SpecError(f"unknown ideal kind {kind!r}")


def ideal_to_json(spec: IdealSpec) -> dict:
    if isinstance(spec, RepeatedLetterIdeal):
        return {"kind": "repeated-letter"}
    if isinstance(spec, MinLengthIdeal):
        return {"kind": "min-length", "n": spec.n}
    if isinstance(spec, GeneratedIdeal):
        return {"kind": "generated",
                "words": [spec.base.word_letters(g) for g in spec.generators]}
    if isinstance(spec, DegreeAtLeastIdeal):
        return {"kind": "degree-at-least", "d": spec.d}
    if isinstance(spec, EvPreimageIdeal):
        return {"kind": "ev-preimage", "inner": ideal_to_json(spec.inner)}
    raise SpecError(f"cannot serialize {spec.describe()}")


def parse_series(obj: dict, monoid: ZeroMonoid, ring: Ring = INTEGERS,
                 expected_truncation: int = None) -> Series:
    truncation = _field(obj, "truncation", "series")
    if not isinstance(truncation, int) or truncation < 0:
        raise SpecError(
            f"series truncation must be a nonnegative integer, got {truncation!r}")
    if expected_truncation is not None and truncation != expected_truncation:
        raise SpecError(
            f"series is truncated at {truncation}, but order "
            f"{expected_truncation} was requested; re-export the series at "
            f"the requested order")
    raw_terms = _field(obj, "terms", "series")
    if not isinstance(raw_terms, list):
        raise SpecError(f"series terms must be a list, got {raw_terms!r}")
    terms = {}
    for entry in raw_terms:
        if not (isinstance(entry, list) and len(entry) == 2):
            raise SpecError(f"each term must be [coefficient, letters], "
                            f"got {entry!r}")
        coeff_text, letters = entry
        try:
            coeff = ring.from_int(int(coeff_text))
        except (TypeError, ValueError):
            raise SpecError(
                f"coefficient must be a decimal string, got {coeff_text!r}"
            ) from None
        word = monoid.word_from_letters(letters)
        monoid._require(word)
        if monoid._order(word) > truncation:
            raise SpecError(
                f"term {letters!r} has order {monoid._order(word)}, beyond "
                f"the stated truncation {truncation}")
        if word in terms:
            raise SpecError(f"duplicate term for word {letters!r}")
        if coeff != ring.zero:
            terms[word] = coeff
    return Series(monoid, truncation, terms, ring, _normalized=True)


def series_to_json(f: Series) -> dict:
    terms = [[f.ring.render(coeff), f.monoid.word_letters(word)]
             for word, coeff in f.items_sorted()]
    return {"truncation": f.truncation, "terms": terms}
