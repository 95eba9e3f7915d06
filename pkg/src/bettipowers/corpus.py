"""Built-in corpus of fixture ideals exercised by the test suite and CLI docs.

Each fixture is a parseable ideal description plus the facts the suite
relies on (variable count, Artinian flag, generator count).  The profile
corpus is the subset cheap enough to run through the full power series.
"""
from __future__ import annotations

from dataclasses import dataclass

from .monomial_core import MonomialIdeal, parse_ideal


@dataclass(frozen=True)
class Fixture:
    name: str
    text: str
    artinian: bool
    description: str

    def ideal(self) -> MonomialIdeal:
        return parse_ideal(self.text)


_FIXTURES = [
    Fixture(
        "maximal2",
        "vars: x y; gens: x, y",
        True,
        "maximal ideal in two variables",
    ),
    Fixture(
        "principal",
        "vars: x y; gens: x^2*y",
        False,
        "principal ideal; every power has the two-step resolution",
    ),
    Fixture(
        "purepowers2",
        "vars: x y; gens: x^2, y^3",
        True,
        "regular sequence of pure powers, n=2",
    ),
    Fixture(
        "msquare2",
        "vars: x y; gens: x^2, x*y, y^2",
        True,
        "square of the maximal ideal in two variables; single degree 2",
    ),
    Fixture(
        "purepowers3",
        "vars: x y z; gens: x^2, y^3, z^4",
        True,
        "regular sequence of pure powers, n=3",
    ),
    Fixture(
        "maximal3",
        "vars: x y z; gens: x, y, z",
        True,
        "maximal ideal in three variables",
    ),
    Fixture(
        "mixed6",
        "vars: x1 x2 x3 x4 x5 x6; "
        "gens: x1^6, x1^5*x2, x1*x2^5, x2^6, x1^4*x2^4*x3, x1^4*x2^4*x4, "
        "x1^4*x5^2*x6^3",
        False,
        "seven-generator showcase ideal in six variables with quadratic "
        "Kodiyalam polynomials",
    ),
    Fixture(
        "edges5",
        "vars: v w x y z; gens: x*y, v*w, x*z",
        False,
        "three quadratic edge monomials in five variables; stabilizes at k=1",
    ),
    Fixture(
        "rp2",
        "vars: a b c d e f; gens: a*b*e, a*b*f, a*c*d, a*c*f, a*d*e, "
        "b*c*d, b*c*e, b*d*f, c*e*f, d*e*f",
        False,
        "Stanley-Reisner ideal of the 6-vertex projective plane; Betti "
        "numbers depend on the field characteristic",
    ),
]

FIXTURES: dict[str, Fixture] = {f.name: f for f in _FIXTURES}

# Fixtures cheap enough for the full power series up to the default kmax.
PROFILE_CORPUS = (
    "maximal2",
    "principal",
    "purepowers2",
    "msquare2",
    "purepowers3",
    "maximal3",
    "mixed6",
    "edges5",
)

ARTINIAN_CORPUS = tuple(f.name for f in _FIXTURES if f.artinian)


def fixture_ideal(name: str) -> MonomialIdeal:
    return FIXTURES[name].ideal()
