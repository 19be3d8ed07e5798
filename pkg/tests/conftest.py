"""Shared fixtures: parsed presentation files, built algebras, the standard
coefficient bimodules of each extension family, and cached verifier reports.

Everything heavy is session-scoped so the suite builds each object once.
"""

from itertools import combinations

import pytest

from relext import bimod, extensions, qdsl
from relext.algebra import build
from relext.fixtures import fixture_text

FIXTURES = ("ex1", "ex2")


@pytest.fixture(scope="session")
def files():
    return {n: qdsl.parse(fixture_text(n + ".quiv")) for n in FIXTURES}


@pytest.fixture(scope="session")
def algebras(files):
    out = {}
    for n, pf in files.items():
        for b in pf.blocks:
            out[(n, b.name)] = build(b)
    return out


@pytest.fixture(scope="session")
def presentations(algebras, files):
    """Per fixture: the three split presentations of the family
    C -> B -> Ctilde, sharing the session algebra objects."""
    out = {}
    for n in FIXTURES:
        c = algebras[(n, "C")]
        b = algebras[(n, "B")]
        ct = algebras[(n, "Ctilde")]
        sub = tuple(files[n].block("B").new_arrows)
        comp = tuple(
            a for a in files[n].block("Ctilde").new_arrows if a not in sub
        )
        out[n] = {
            "CB": extensions.split_presentation(c, b, sub),
            "BCt": extensions.split_presentation(b, ct, comp),
            "CCt": extensions.split_presentation(
                c, ct, tuple(files[n].block("Ctilde").new_arrows)
            ),
        }
    return out


@pytest.fixture(scope="session")
def corpus_pairs(algebras, presentations):
    """Every (algebra, coefficient bimodule) pair the dual-method oracle and
    complex identities must cover, with readable tags."""
    pairs = []
    for n in FIXTURES:
        c = algebras[(n, "C")]
        b = algebras[(n, "B")]
        ct = algebras[(n, "Ctilde")]
        sp = presentations[n]
        pairs += [
            (n + ":C,C", c, extensions.regular_bimodule_of(c)),
            (n + ":B,B", b, extensions.regular_bimodule_of(b)),
            (n + ":Ct,Ct", ct, extensions.regular_bimodule_of(ct)),
            (n + ":B,E'", b, sp["CB"].ext),
            (n + ":C,E'", c, sp["CB"].ext_over_base),
            (n + ":Ct,E''", ct, sp["BCt"].ext),
            (n + ":B,E''", b, sp["BCt"].ext_over_base),
            (n + ":Ct,E", ct, sp["CCt"].ext),
        ]
    return pairs


@pytest.fixture(scope="session")
def reports(files):
    """TheoremReport for every subset of the new arrows, both fixtures."""
    out = {}
    for n in FIXTURES:
        base = files[n].block("C")
        full = files[n].block("Ctilde")
        arrows = tuple(full.new_arrows)
        for r in range(len(arrows) + 1):
            for combo in combinations(arrows, r):
                out[(n, combo)] = extensions.verify_theorem(base, full, combo)
    return out


@pytest.fixture(scope="session")
def posets(files):
    return {
        n: extensions.poset(files[n].block("C"), files[n].block("Ctilde"))
        for n in FIXTURES
    }
