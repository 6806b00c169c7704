import pytest
from hypothesis import given

from kdnf import (
    Dnf,
    KFunction,
    PartialKFunction,
    ParseError,
    format_term,
    parse_dnf,
    parse_function,
    parse_term,
    print_dnf,
    print_function,
    reduced_dnf,
)

from .conftest import STAR_EXAMPLE_POINTS, ec, kfunctions

EXAMPLE_TEXT = (
    "k=3 n=3 mode=total\n"
    "0 1 1 -> 1\n"
    "1 1 1 -> 1\n"
    "1 2 1 -> 1\n"
    "2 1 1 -> 1\n"
    "1 2 2 -> 1\n"
)


class TestParseFunction:
    def test_star_example(self, star_example):
        assert parse_function(EXAMPLE_TEXT) == star_example

    def test_empty_body_is_constant_default(self):
        f = parse_function("k=2 n=1 mode=total\n")
        assert f == KFunction.constant(2, 1)

    def test_total_default_value(self):
        f = parse_function("k=3 n=1 mode=total default=2\n0 -> 1\n")
        assert f.table == bytes([1, 2, 2])

    def test_partial(self):
        func = parse_function("k=3 n=1 mode=partial\n0 -> 0\n2 -> 1\n")
        assert isinstance(func, PartialKFunction)
        assert func.value((0,)) == 0 and func.value((2,)) == 1
        assert func.value((1,)) is None

    def test_comments_and_blanks(self):
        f = parse_function("# a function\nk=2 n=1 mode=total\n\n1 -> 1  # top point\n")
        assert f.table == bytes([0, 1])

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("", "header"),
            ("k=3 n=2\n", "malformed header"),
            ("k=1 n=2 mode=total\n", "outside"),
            ("k=40 n=2 mode=total\n", "outside"),
            ("k=3 n=0 mode=total\n", ">= 1"),
            ("k=3 n=2 mode=partial default=1\n", "total mode"),
            ("k=3 n=2 mode=total default=3\n", ">= k"),
            ("k=3 n=2 mode=total\n1 -> 1\n", "expected 2 coordinates"),
            ("k=3 n=2 mode=total\n1 3 -> 1\n", "coordinate 3 >= k"),
            ("k=3 n=2 mode=total\n1 1 -> 3\n", "value 3 >= k"),
            ("k=3 n=2 mode=total\n1 1 -> 1\n1 1 -> 2\n", "duplicate point"),
            ("k=3 n=2 mode=total\na b -> 1\n", "integers"),
        ],
    )
    def test_rejects_malformed(self, text, fragment):
        with pytest.raises(ParseError) as err:
            parse_function(text)
        assert fragment in str(err.value)

    def test_error_carries_line_number(self):
        with pytest.raises(ParseError) as err:
            parse_function("k=3 n=2 mode=total\n0 0 -> 1\n0 9 -> 1\n")
        assert err.value.line_no == 3


class TestPrintFunction:
    def test_canonical_sorted_body(self, star_example):
        text = print_function(star_example)
        assert text.splitlines()[0] == "k=3 n=3 mode=total"
        body = text.splitlines()[1:]
        assert body == sorted(body)
        assert len(body) == len(STAR_EXAMPLE_POINTS)

    def test_canonical_fixed_point(self, star_example):
        text = print_function(star_example)
        assert print_function(parse_function(text)) == text

    @given(kfunctions())
    def test_round_trip_total(self, f):
        assert parse_function(print_function(f)) == f

    def test_round_trip_partial(self):
        func = PartialKFunction(3, 2, {(0, 1): 2, (2, 2): 0})
        assert parse_function(print_function(func)) == func


class TestPrintDnf:
    def test_star_example_contains_handwritten_lines(self, star_example):
        out = print_dnf(reduced_dnf(star_example).dnf)
        assert "J{1}(x2)*J{1}(x3)->1\n" in out
        assert "J{1}(x1)*J{2}(x2)*J{1,2}(x3)->1\n" in out

    def test_canonical_order(self, star_example):
        out = print_dnf(reduced_dnf(star_example).dnf)
        assert out == (
            "J{1}(x1)*J{2}(x2)*J{1,2}(x3)->1\n"
            "J{1}(x1)*J{1,2}(x2)*J{1}(x3)->1\n"
            "J{1}(x2)*J{1}(x3)->1\n"
        )

    def test_empty_dnf(self):
        assert print_dnf(Dnf(3, 2)) == "0\n"

    def test_full_interval_term(self):
        assert print_dnf(Dnf(3, 2, (ec(3, 2, None, None),))) == "TRUE->2\n"


class TestParseDnf:
    def test_round_trip(self, star_example):
        d = reduced_dnf(star_example).dnf
        text = "k=3 n=3\n" + print_dnf(d)
        assert parse_dnf(text) == d.canonical()

    def test_empty(self):
        assert parse_dnf("k=3 n=2\n0\n") == Dnf(3, 2)
        assert parse_dnf("k=3 n=2\n") == Dnf(3, 2)

    def test_term_round_trip(self):
        term = ec(4, 3, [1, 3], None, [0, 2])
        assert parse_term(format_term(term), 4, 3) == term

    @pytest.mark.parametrize(
        "text",
        [
            "k=3 n=2\nJ{1}(x3)->1\n",      # variable out of range
            "k=3 n=2\nJ{3}(x1)->1\n",      # value >= k
            "k=3 n=2\nJ{1}(x1)->0\n",      # gamma 0 is identically zero
            "k=3 n=2\nJ{1}(x1)->3\n",      # gamma >= k
            "k=3 n=2\nJ{1}(x1)*J{2}(x1)->1\n",  # repeated variable
            "k=3 n=2\nJ{}(x1)->1\n",       # empty factor
            "k=3 n=2\nnonsense\n",
            "k=3 n=2\n0\nJ{1}(x1)->1\n",   # 0 must stand alone
        ],
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(ParseError):
            parse_dnf(text)
