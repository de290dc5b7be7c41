from datetime import date, datetime

import pytest
from hypothesis import given
from hypothesis import strategies as st

from infoveil.errors import DataFormatError, InvalidInputError, ParseError
from infoveil.retrieval import (KeywordQuery, Post, QuerySet, RegionScheme, aggregate_daily,
                                dedupe, load_keywords, matches, parse_keywords, parse_query,
                                read_posts_csv, retrieve, write_posts_csv)


def post(pid, text, day=1, region=None, repost=False):
    return Post(pid, datetime(2020, 1, day, 12, 0), text, region, repost)


def test_parse_conjunction():
    assert parse_query("北京 AND 病例").terms == ("北京", "病例")


def test_parse_single():
    assert parse_query("口罩").terms == ("口罩",)


@pytest.mark.parametrize("line", ["A AND ", " AND B", "A AND  AND B", "   ", ""])
def test_parse_errors(line):
    with pytest.raises(ParseError):
        parse_query(line, 7)


def test_parse_error_carries_line():
    with pytest.raises(ParseError) as exc:
        parse_keywords("口罩\nA AND \n")
    assert exc.value.line == 2


def test_separator_is_case_sensitive():
    assert parse_query("rock and roll").terms == ("rock and roll",)


def test_keyword_file_comments(tmp_path):
    p = tmp_path / "k.txt"
    p.write_text("# comment\n\n口罩\n#nCoV\n北京 AND 病例\n#\n", encoding="utf-8")
    qs = load_keywords(p)
    assert [q.terms for q in qs] == [("口罩",), ("#nCoV",), ("北京", "病例")]


def test_bundled_keyword_list_size():
    from importlib import resources
    text = resources.files("infoveil.data").joinpath("keywords.txt").read_text(encoding="utf-8")
    assert len(parse_keywords(text)) == 167


terms = st.text(alphabet="ab北京病例 xY", min_size=1, max_size=5).map(str.strip).filter(
    lambda t: t and " AND " not in t)


@given(st.lists(terms, min_size=1, max_size=4))
def test_render_parse_roundtrip(ts):
    q = KeywordQuery(tuple(ts))
    assert parse_query(q.render()) == q


def test_query_invariants():
    with pytest.raises(InvalidInputError):
        KeywordQuery(())
    with pytest.raises(InvalidInputError):
        KeywordQuery((" a",))
    with pytest.raises(InvalidInputError):
        QuerySet(())


def test_matches():
    q = parse_query("北京 AND 病例")
    assert matches(q, post("1", "今天北京新增病例3例"))
    assert not matches(q, post("1", "北京天气"))


def test_ascii_case_insensitive_only():
    assert matches(parse_query("remdesivir"), post("1", "Remdesivir approved"))
    assert matches(parse_query("N95 AND 口罩"), post("1", "n95口罩"))
    # non-ASCII letters keep their case
    assert not matches(parse_query("É"), post("1", "é"))


def test_retrieve_order_and_once():
    qs = parse_keywords("a\nb\n")
    corpus = [post("1", "xx"), post("2", "ab"), post("3", "b")]
    assert [p.id for p in retrieve(corpus, qs)] == ["2", "3"]


def test_retrieve_is_lazy():
    def corpus():
        yield post("1", "a")
        raise RuntimeError("consumed too far")
    it = retrieve(corpus(), parse_keywords("a"))
    assert next(it).id == "1"


def test_dedupe():
    ps = [post("1", "x"), post("2", "x", repost=True), post("3", "x")]
    assert [p.id for p in dedupe(ps)] == ["1", "3"]
    assert list(dedupe([post("1", "x", repost=True)])) == []
    assert list(dedupe(ps[::2])) == ps[::2]


def test_aggregate_daily():
    ps = [post("1", "x", 1), post("2", "x", 1), post("3", "x", 9)]
    s = aggregate_daily(ps, date(2020, 1, 1), date(2020, 1, 2))
    assert list(s.values) == [2, 0]
    assert list(aggregate_daily([], date(2020, 1, 1), date(2020, 1, 3)).values) == [0, 0, 0]
    with pytest.raises(InvalidInputError):
        aggregate_daily([], date(2020, 1, 2), date(2020, 1, 1))


def test_region_split_sums_to_geotagged():
    ps = [post(str(i), "x", 1 + i % 3, region) for i, region in
          enumerate(["HB", "BJ", None, "42", "SH", "HB", None, "GD"])]
    scheme = RegionScheme()
    span = (date(2020, 1, 1), date(2020, 1, 3))
    hb = aggregate_daily(ps, *span, scheme.hubei).values
    other = aggregate_daily(ps, *span, scheme.elsewhere).values
    geo = aggregate_daily(ps, *span, scheme.geotagged).values
    assert list(hb + other) == list(geo)
    assert geo.sum() == 6


def test_region_predicate_names():
    scheme = RegionScheme(frozenset({"HB"}))
    assert scheme.predicate("all") is None
    assert scheme.predicate("hubei")("HB")
    with pytest.raises(InvalidInputError):
        scheme.predicate("mars")


def test_corpus_csv_roundtrip(tmp_path):
    ps = [post("1", 'quoted "text", with comma\nand newline', region="HB"),
          post("2", "plain", repost=True)]
    p = tmp_path / "c.csv"
    assert write_posts_csv(p, ps) == 2
    assert list(read_posts_csv(p)) == ps


@pytest.mark.parametrize("body, line, column", [
    ("id,timestamp,region,is_repost,text\n1,2020-01-01 10:00,,0,x\n", 2, "timestamp"),
    ("id,timestamp,region,is_repost,text\n1,2020-01-01T10:00,,yes,x\n", 2, "is_repost"),
    ("id,timestamp,region,is_repost,text\n1,2020-01-01T10:00,,0,x\n1,2020-01-01T10:00,,0,y\n", 3, "id"),
    ("id,timestamp,region,is_repost,text\n\"a\nb\",2020-01-01T10:00,,0,x\n,2020-01-01T10:00,,0,y\n", 4, "id"),
    ("id,text\n1,x\n", 1, None),
])
def test_corpus_format_errors(tmp_path, body, line, column):
    p = tmp_path / "bad.csv"
    p.write_text(body, encoding="utf-8")
    with pytest.raises(DataFormatError) as exc:
        list(read_posts_csv(p))
    assert exc.value.line == line
    assert exc.value.column == column


def test_post_id_required():
    with pytest.raises(InvalidInputError):
        Post(" ", datetime(2020, 1, 1), "x")
