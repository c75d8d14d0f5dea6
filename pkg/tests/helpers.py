from __future__ import annotations

from fuzzyimpl.algebra import Chain
from fuzzyimpl.fuzzyset import Universe, parse_set
from fuzzyimpl.implications import Implication, Theory, parse_implication


def make_theory(chain: Chain, names: str, *rules: str) -> Theory:
    universe = Universe(names.split())
    return Theory((parse_implication(r, universe, chain) for r in rules), universe, chain)


def make_set(theory: Theory, text: str):
    return parse_set(text, theory.universe, theory.chain)


def make_rule(theory: Theory, text: str) -> Implication:
    return parse_implication(text, theory.universe, theory.chain)
