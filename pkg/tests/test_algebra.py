from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fuzzyimpl.algebra import Chain, format_value, parse_algebra, parse_value, validate
from fuzzyimpl.errors import ChainMismatchError, InvalidHedgeError, ParseError


def value_tensor(a: Fraction, b: Fraction, idem: list[Fraction]) -> Fraction:
    """Ordinal-sum tensor evaluated on rational values."""
    for lo, up in zip(idem, idem[1:]):
        if lo < a <= up and lo < b <= up and a != up and b != up:
            return max(lo, a + b - up)
    return min(a, b)


def residuum_by_search(chain: Chain, a: int, b: int) -> int:
    return max(c for c in range(chain.n + 1) if chain._t[a][c] <= b)


def idempotent_subsets(n: int):
    for k in range(n):
        for inner in itertools.combinations(range(1, n), k):
            yield (0, *inner, n)


class TestTensor:
    def test_lukasiewicz_half_times_half(self):
        c = Chain.lukasiewicz(2)
        assert c.tensor(c.degree(1), c.degree(1)) == c.bottom

    def test_unit(self):
        for c in (Chain.lukasiewicz(5), Chain.goedel(5), Chain.bl(6, (0, 2, 6))):
            for d in c.degrees():
                assert c.tensor(d, c.top) == d

    def test_bl_component(self):
        c = Chain.bl(4, (0, 2, 4))
        assert str(c.tensor(c.degree(3), c.degree(3))) == "0.5"

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 7])
    def test_matches_value_formula(self, n):
        for idem in idempotent_subsets(n):
            c = Chain.bl(n, idem)
            vals = [Fraction(i, n) for i in idem]
            for a, b in itertools.product(range(n + 1), repeat=2):
                assert Fraction(c._t[a][b], n) == value_tensor(Fraction(a, n), Fraction(b, n), vals)

    def test_goedel_and_lukasiewicz_are_extreme_ordinal_sums(self):
        n = 10
        assert Chain.bl(n, range(n + 1))._t == Chain.goedel(n)._t
        assert Chain.bl(n, (0, n))._r == Chain.lukasiewicz(n)._r
        g = Chain.goedel(n)
        assert all(g._t[a][b] == min(a, b) for a in range(n + 1) for b in range(n + 1))

    def test_chain_mismatch(self):
        a, b = Chain.lukasiewicz(2), Chain.lukasiewicz(4)
        with pytest.raises(ChainMismatchError):
            a.tensor(a.top, b.top)


class TestResiduum:
    def test_lukasiewicz(self):
        c = Chain.lukasiewicz(2)
        assert str(c.residuum(c.degree(1), c.bottom)) == "0.5"

    def test_goedel(self):
        c = Chain.goedel(2)
        assert str(c.residuum(c.top, c.degree(1))) == "0.5"

    def test_self_is_top(self):
        c = Chain.bl(6, (0, 3, 6))
        assert all(c.residuum(d, d) == c.top for d in c.degrees())

    @pytest.mark.parametrize("n", [1, 2, 4, 6])
    def test_is_greatest_adjoint(self, n):
        for idem in idempotent_subsets(n):
            c = Chain.bl(n, idem)
            for a, b in itertools.product(range(n + 1), repeat=2):
                assert c._r[a][b] == residuum_by_search(c, a, b)


class TestHedge:
    def test_globalization(self):
        c = Chain.lukasiewicz(2, "globalization")
        assert c.apply_hedge(c.degree(1)) == c.bottom
        assert c.apply_hedge(c.top) == c.top
        assert c.is_globalization

    def test_identity(self):
        c = Chain.lukasiewicz(2)
        assert c.apply_hedge(c.degree(1)) == c.degree(1)

    def test_illegal_table_rejected(self):
        with pytest.raises(InvalidHedgeError) as info:
            Chain.with_table_hedge(2, "lukasiewicz", (0, 2, 2))
        assert "a*≤a at a=0.5" in info.value.violations

    def test_illegal_table_reported(self):
        c = Chain.with_table_hedge(2, "lukasiewicz", (0, 2, 2), strict=False)
        assert "a*≤a at a=0.5" in validate(c).violations

    def test_legal_table(self):
        c = Chain.with_table_hedge(4, "goedel", (0, 0, 2, 2, 4))
        assert validate(c).ok


class TestValidate:
    @pytest.mark.parametrize("hedge", ["identity", "globalization"])
    def test_lukasiewicz_ten(self, hedge):
        assert validate(Chain.lukasiewicz(10, hedge)).ok

    def test_all_idempotent_is_goedel(self):
        c = Chain.bl(10, range(11))
        assert validate(c).ok
        assert c._t == Chain.goedel(10)._t

    def test_broken_tables_are_caught(self):
        c = Chain.lukasiewicz(3)
        t = [list(row) for row in c._t]
        t[1][2] = t[2][1] = 3
        object.__setattr__(c, "_t", tuple(tuple(row) for row in t))
        bad = validate(c).violations
        assert any(v.startswith("adjointness") for v in bad)


class TestText:
    @pytest.mark.parametrize(
        "index,n,text", [(1, 2, "0.5"), (0, 3, "0"), (3, 3, "1"), (1, 3, "1/3"), (1, 4, "0.25")]
    )
    def test_format(self, index, n, text):
        assert format_value(index, n) == text
        assert parse_value(text, n) == index

    def test_off_chain_degree(self):
        with pytest.raises(ParseError):
            parse_value("0.3", 2)

    def test_parse_algebra(self):
        c = parse_algebra(["logic bl 0,0.5,1", "scale 4", "hedge globalization"])
        assert c.idempotents == (0, 2, 4)
        assert c.is_globalization
        assert parse_algebra(c.header_lines()) == c

    def test_defaults(self):
        c = parse_algebra([])
        assert (c.n, c.logic, c.hedge) == (1, "lukasiewicz", "identity")

    @pytest.mark.parametrize("line", ["logic product", "scale zero", "hedge very", "logic bl"])
    def test_bad_header(self, line):
        with pytest.raises(ParseError):
            parse_algebra([line])


@st.composite
def chains(draw):
    n = draw(st.integers(1, 8))
    inner = draw(st.sets(st.integers(1, max(1, n - 1)), max_size=n - 1)) if n > 1 else set()
    hedge = draw(st.sampled_from(["identity", "globalization"]))
    return Chain.bl(n, {0, n, *inner}, hedge)


class TestProperties:
    @given(chains(), st.data())
    def test_adjointness(self, c, data):
        a, b, x = (data.draw(st.integers(0, c.n)) for _ in range(3))
        assert (c._t[a][b] <= x) == (a <= c._r[b][x])

    @given(chains(), st.data())
    def test_residuum_top_iff_leq(self, c, data):
        a, b = data.draw(st.integers(0, c.n)), data.draw(st.integers(0, c.n))
        assert (c._r[a][b] == c.n) == (a <= b)

    @given(chains(), st.data())
    def test_monoid(self, c, data):
        a, b, x = (data.draw(st.integers(0, c.n)) for _ in range(3))
        t = c._t
        assert t[a][b] == t[b][a]
        assert t[t[a][b]][x] == t[a][t[b][x]]
        if a <= b:
            assert t[a][x] <= t[b][x]
