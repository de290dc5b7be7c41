"""Keyword retrieval over a post corpus.

Queries are conjunctions of literal terms (``北京 AND 病例``); a query set is
their disjunction. Matching is substring-based because Chinese text is not
segmented. All corpus functions stream: one post in memory at a time.
"""
from __future__ import annotations

import csv
import os
import tempfile
from dataclasses import dataclass, field
from datetime import date, datetime
from pathlib import Path
from typing import Callable, Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import DataFormatError, InvalidInputError, ParseError
from .series import DailySeries

SEPARATOR = " AND "
POST_COLUMNS = ("id", "timestamp", "region", "is_repost", "text")
TIMESTAMP_FORMAT = "%Y-%m-%dT%H:%M"

_ASCII_FOLD = str.maketrans("ABCDEFGHIJKLMNOPQRSTUVWXYZ", "abcdefghijklmnopqrstuvwxyz")


def ascii_fold(text: str) -> str:
    """Lower-case ASCII letters only; every other codepoint is left untouched."""
    return text.translate(_ASCII_FOLD)


@dataclass(frozen=True)
class Post:
    id: str
    timestamp: datetime
    text: str
    region: Optional[str] = None
    is_repost: bool = False

    def __post_init__(self):
        if not self.id or not self.id.strip():
            raise InvalidInputError("post id must be non-empty")

    @property
    def day(self) -> date:
        return self.timestamp.date()


@dataclass(frozen=True)
class KeywordQuery:
    terms: tuple[str, ...]
    _folded: tuple[str, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        terms = tuple(self.terms)
        if not terms:
            raise InvalidInputError("a query needs at least one term")
        for t in terms:
            if not t.strip() or t != t.strip():
                raise InvalidInputError(f"query term {t!r} is empty or not trimmed")
            if SEPARATOR in t:
                raise InvalidInputError(f"query term {t!r} contains the separator")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_folded", tuple(ascii_fold(t) for t in terms))

    def render(self) -> str:
        return SEPARATOR.join(self.terms)


@dataclass(frozen=True)
class QuerySet:
    queries: tuple[KeywordQuery, ...]

    def __post_init__(self):
        object.__setattr__(self, "queries", tuple(self.queries))
        if not self.queries:
            raise InvalidInputError("query set is empty")

    def __len__(self) -> int:
        return len(self.queries)

    def __iter__(self):
        return iter(self.queries)


def parse_query(line: str, lineno: int | None = None) -> KeywordQuery:
    """Parse one keyword line; ``A AND B`` becomes the conjunction of A and B."""
    if not line.strip():
        raise ParseError("blank query line", lineno)
    fragments = [f.strip() for f in line.split(SEPARATOR)]
    if any(not f for f in fragments):
        raise ParseError(f"empty term in query {line!r}", lineno)
    return KeywordQuery(tuple(fragments))


def is_comment(line: str) -> bool:
    # hashtag keywords such as "#nCoV" are queries, so a comment needs "# " or a bare "#"
    s = line.strip()
    return s == "#" or s.startswith("# ")


def parse_keywords(text: str) -> QuerySet:
    """Keyword file body: one query per line; blank and comment lines skipped."""
    queries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or is_comment(line):
            continue
        queries.append(parse_query(line, lineno))
    if not queries:
        raise ParseError("keyword file contains no queries")
    return QuerySet(tuple(queries))


def load_keywords(path) -> QuerySet:
    return parse_keywords(Path(path).read_text(encoding="utf-8-sig"))


def matches(query: KeywordQuery, post: Post) -> bool:
    text = ascii_fold(post.text)
    return all(term in text for term in query._folded)


def retrieve(corpus: Iterable[Post], queries: QuerySet) -> Iterator[Post]:
    """Posts matching at least one query, in input order, each at most once."""
    qs = queries.queries
    for post in corpus:
        text = ascii_fold(post.text)
        for q in qs:
            if all(term in text for term in q._folded):
                yield post
                break


def dedupe(posts: Iterable[Post]) -> Iterator[Post]:
    """Drop reposts, keeping original posts in order."""
    return (p for p in posts if not p.is_repost)


def aggregate_daily(posts: Iterable[Post], start: date, end: date,
                    region_filter: Callable[[Optional[str]], bool] | None = None,
                    label: str = "count") -> DailySeries:
    """Zero-filled daily post counts over ``[start, end]``."""
    if end < start:
        raise InvalidInputError(f"empty date range {start}..{end}")
    n = (end - start).days + 1
    counts = np.zeros(n)
    for post in posts:
        if region_filter is not None and not region_filter(post.region):
            continue
        i = (post.day - start).days
        if 0 <= i < n:
            counts[i] += 1
    return DailySeries(start, counts, label)


@dataclass(frozen=True)
class RegionScheme:
    """Hubei / elsewhere / untagged split of flat region codes."""

    hubei_codes: frozenset[str] = frozenset({"HB", "42", "湖北"})

    def hubei(self, region: Optional[str]) -> bool:
        return region is not None and region in self.hubei_codes

    def elsewhere(self, region: Optional[str]) -> bool:
        return region is not None and region not in self.hubei_codes

    @staticmethod
    def geotagged(region: Optional[str]) -> bool:
        return region is not None

    def predicate(self, name: str) -> Callable[[Optional[str]], bool] | None:
        if name == "all":
            return None
        try:
            return {"hubei": self.hubei, "elsewhere": self.elsewhere,
                    "geotagged": self.geotagged}[name]
        except KeyError:
            raise InvalidInputError(f"unknown region filter {name!r}") from None


# ---------------------------------------------------------------------------
# Corpus CSV


def _parse_post(row: Sequence[str], header_len: int, path, lineno: int) -> Post:
    if len(row) != header_len:
        raise DataFormatError(f"expected {header_len} fields, got {len(row)}", path, lineno)
    pid, ts, region, rep, text = row[:5]
    if not pid.strip():
        raise DataFormatError("empty post id", path, lineno, "id")
    try:
        when = datetime.strptime(ts.strip(), TIMESTAMP_FORMAT)
    except ValueError:
        raise DataFormatError(f"expected YYYY-MM-DDTHH:MM, got {ts!r}", path, lineno,
                              "timestamp") from None
    if rep not in ("0", "1"):
        raise DataFormatError(f"is_repost must be 0 or 1, got {rep!r}", path, lineno, "is_repost")
    return Post(pid, when, text, region or None, rep == "1")


def iter_post_rows(path, extra: Sequence[str]):
    path = Path(path)
    expected = list(POST_COLUMNS) + list(extra)
    try:
        fh = open(path, encoding="utf-8", newline="")
    except OSError as exc:
        raise DataFormatError(f"cannot open: {exc.strerror}", path) from None
    with fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != expected:
            raise DataFormatError(f"header must be {','.join(expected)}", path, 1)
        seen: set[str] = set()
        # reader.line_num tracks physical lines, so quoted newlines report correctly
        start_line = 2
        for row in reader:
            lineno = start_line
            start_line = reader.line_num + 1
            if not row:
                continue
            post = _parse_post(row, len(expected), path, lineno)
            if post.id in seen:
                raise DataFormatError(f"duplicate post id {post.id!r}", path, lineno, "id")
            seen.add(post.id)
            yield post, row[len(POST_COLUMNS):], lineno


def read_posts_csv(path) -> Iterator[Post]:
    for post, _, _ in iter_post_rows(path, ()):
        yield post


def post_row(post: Post) -> list:
    return [post.id, post.timestamp.strftime(TIMESTAMP_FORMAT), post.region or "",
            "1" if post.is_repost else "0", post.text]


class CsvSink:
    """Streaming CSV writer that lands the file atomically on close."""

    def __init__(self, path, header: Sequence[str]):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        fd, self._tmp = tempfile.mkstemp(prefix=f".{self.path.name}.", dir=self.path.parent)
        self._fh = os.fdopen(fd, "w", encoding="utf-8", newline="")
        self._w = csv.writer(self._fh, lineterminator="\n")
        self._w.writerow(header)
        self.count = 0

    def write(self, row: Sequence) -> None:
        self._w.writerow(row)
        self.count += 1

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        self._fh.close()
        if exc_type is None:
            os.replace(self._tmp, self.path)
        else:
            os.unlink(self._tmp)
        return False


def write_posts_csv(path, posts: Iterable[Post]) -> int:
    with CsvSink(path, POST_COLUMNS) as sink:
        for p in posts:
            sink.write(post_row(p))
    return sink.count
