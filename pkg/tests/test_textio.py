from __future__ import annotations

import pytest

from fuzzyimpl.errors import ParseError
from fuzzyimpl.textio import format_context, format_theory, parse_context, parse_theory

THEORY = """\
# a small theory
logic lukasiewicz
scale 2
hedge identity
attributes p q
{p} => {p, q}
{} => {0.5/q}   # trailing comment
"""

CONTEXT = """\
logic bl 0,0.5,1
scale 4
hedge globalization
attributes p q r
object a: 1 0.5 0
object b: 1/4 0 3/4
"""


class TestTheoryFile:
    def test_parse(self):
        t = parse_theory(THEORY)
        assert t.chain.n == 2 and t.universe.names == ("p", "q")
        assert [str(i) for i in t] == ["{p} => {p, q}", "{} => {0.5/q}"]

    def test_round_trip(self):
        t = parse_theory(THEORY)
        assert parse_theory(format_theory(t)) == t

    def test_empty_theory(self):
        t = parse_theory("scale 1\nattributes p\n")
        assert len(t) == 0

    @pytest.mark.parametrize(
        "text",
        [
            "scale 2\n{p} => {q}\n",
            "scale 2\nattributes p q\n{p} -> {q}\n",
            "scale 2\nattributes p q\n{p} => {s}\n",
            "attributes p q\n{p} => {q}\nscale 2\n",
        ],
    )
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_theory(text)


class TestContextFile:
    def test_parse(self):
        ctx = parse_context(CONTEXT)
        assert ctx.chain.idempotents == (0, 2, 4)
        assert ctx.table == ((4, 2, 0), (1, 0, 3))
        assert ctx.objects.names == ("a", "b")

    def test_round_trip(self):
        ctx = parse_context(CONTEXT)
        again = parse_context(format_context(ctx))
        assert again.table == ctx.table and again.chain == ctx.chain

    @pytest.mark.parametrize(
        "text",
        [
            "scale 2\nattributes p q\n",
            "scale 2\nattributes p q\nobject a: 1\n",
            "scale 2\nattributes p q\nobject a 1 1\n",
            "scale 2\nattributes p q\nobject a: 1 0.3\n",
            "scale 2\nattributes p q\nrow a: 1 1\n",
        ],
    )
    def test_errors(self, text):
        with pytest.raises(ParseError):
            parse_context(text)
