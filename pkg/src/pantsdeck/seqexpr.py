"""Tiny expression language for index sequences, used by the CLI.

Grammar: one or more terms joined by '+'.  Terms:

    const:c   -> c
    exp:r     -> e^(r*n)
    pow:p     -> n^p
    sqrt      -> sqrt(n)

so e.g. ``exp:-1`` is the sequence e^{-n} and ``sqrt+const:1`` is
sqrt(n) + 1.  Indices n are 1-based.
"""

from __future__ import annotations

import math
from typing import Callable

from .errors import BadParameter

__all__ = ["parse_sequence"]


def _parse_term(term: str) -> Callable[[int], float]:
    term = term.strip()
    if term == "sqrt":
        return lambda n: math.sqrt(n)
    name, sep, arg = term.partition(":")
    if not sep:
        raise BadParameter(f"sequence term {term!r} needs a ':' argument")
    try:
        value = float(arg)
    except ValueError as exc:
        raise BadParameter(f"bad numeric argument in term {term!r}") from exc
    if name == "const":
        return lambda n: value
    if name == "exp":
        return lambda n: math.exp(value * n)
    if name == "pow":
        return lambda n: float(n) ** value
    raise BadParameter(f"unknown sequence term {name!r}")


def parse_sequence(text: str) -> Callable[[int], float]:
    """Compile a sequence expression to a 1-based index function."""
    if not text or not text.strip():
        raise BadParameter("empty sequence expression")
    terms = [_parse_term(t) for t in text.split("+")]
    if len(terms) == 1:
        return terms[0]
    return lambda n: sum(t(n) for t in terms)
