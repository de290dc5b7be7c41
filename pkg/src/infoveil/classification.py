"""Sick-post labelling, classifier evaluation and annotation agreement."""
from __future__ import annotations

import csv
import enum
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Hashable, Iterable, Protocol, Sequence

import numpy as np

from . import kernels
from .errors import (DataFormatError, DegenerateDataError, DomainError,
                     InsufficientDataError, InvalidInputError, ParseError)
from .retrieval import Post, ascii_fold, iter_post_rows

DEFAULT_NEGATION_WINDOW = 3


class PostLabel(enum.Enum):
    INGROUP_SICK = "ingroup"
    OUTGROUP_SICK = "outgroup"
    OTHER = "other"

    @property
    def is_sick(self) -> bool:
        return self is not PostLabel.OTHER

    @classmethod
    def parse(cls, text: str) -> "PostLabel":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise InvalidInputError(
                f"label must be one of ingroup/outgroup/other, got {text!r}") from None


LABEL_ORDER = (PostLabel.INGROUP_SICK, PostLabel.OUTGROUP_SICK, PostLabel.OTHER)


# ---------------------------------------------------------------------------
# Lexicon and rule classifier

_ASCII_WORD = re.compile(r"^[A-Za-z0-9' ]+$")


def _is_ascii_word(term: str) -> bool:
    return bool(_ASCII_WORD.match(term))


def _occurrences(folded_text: str, folded_term: str, word: bool) -> Iterable[int]:
    start = folded_text.find(folded_term)
    n = len(folded_term)
    while start != -1:
        if not word or (
            (start == 0 or not folded_text[start - 1].isascii() or not folded_text[start - 1].isalnum())
            and (start + n == len(folded_text) or not folded_text[start + n].isascii()
                 or not folded_text[start + n].isalnum())
        ):
            yield start
        start = folded_text.find(folded_term, start + 1)


@dataclass(frozen=True)
class Lexicon:
    symptom_terms: frozenset[str]
    ingroup_markers: frozenset[str]
    negation_markers: frozenset[str]

    def __post_init__(self):
        for name in ("symptom_terms", "ingroup_markers", "negation_markers"):
            terms = frozenset(t.strip() for t in getattr(self, name) if t.strip())
            if not terms:
                raise InvalidInputError(f"lexicon section {name} is empty")
            object.__setattr__(self, name, terms)


_SECTIONS = {"symptoms": "symptom_terms", "ingroup": "ingroup_markers",
             "negation": "negation_markers"}


def parse_lexicon(text: str) -> Lexicon:
    sections: dict[str, set[str]] = {v: set() for v in _SECTIONS.values()}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip().lower()
            if name not in _SECTIONS:
                raise ParseError(f"unknown lexicon section [{name}]", lineno)
            current = _SECTIONS[name]
            continue
        if current is None:
            raise ParseError("term outside any section", lineno)
        sections[current].add(line)
    return Lexicon(**{k: frozenset(v) for k, v in sections.items()})


def load_lexicon(path=None) -> Lexicon:
    """Read a lexicon file; without a path, the bundled default lexicon."""
    if path is None:
        text = resources.files("infoveil.data").joinpath("lexicon.txt").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8-sig")
    return parse_lexicon(text)


def classify_rule(post: Post | str, lexicon: Lexicon,
                  window: int = DEFAULT_NEGATION_WINDOW) -> PostLabel:
    """Label a post from symptom, ingroup and negation term occurrences.

    A symptom occurrence is cancelled when a negation marker ends at most
    ``window`` codepoints before it. With at least one live symptom the post
    is ingroup-sick if any ingroup marker occurs anywhere, else outgroup-sick.
    """
    text = ascii_fold(post.text if isinstance(post, Post) else post)
    neg_ends = []
    for term in lexicon.negation_markers:
        ft = ascii_fold(term)
        neg_ends.extend(i + len(ft) for i in _occurrences(text, ft, _is_ascii_word(term)))

    def live(i: int) -> bool:
        return not any(0 <= i - e <= window for e in neg_ends)

    sick = any(
        live(i)
        for term in lexicon.symptom_terms
        for i in _occurrences(text, ascii_fold(term), _is_ascii_word(term))
    )
    if not sick:
        return PostLabel.OTHER
    for term in lexicon.ingroup_markers:
        if next(iter(_occurrences(text, ascii_fold(term), _is_ascii_word(term))), None) is not None:
            return PostLabel.INGROUP_SICK
    return PostLabel.OUTGROUP_SICK


class Classifier(Protocol):
    def classify(self, post: Post) -> PostLabel: ...


@dataclass(frozen=True)
class RuleClassifier:
    lexicon: Lexicon
    window: int = DEFAULT_NEGATION_WINDOW

    def classify(self, post: Post) -> PostLabel:
        return classify_rule(post, self.lexicon, self.window)


# ---------------------------------------------------------------------------
# Evaluation


@dataclass(frozen=True)
class ConfusionMatrix:
    """Rows are true labels, columns predicted labels, both in LABEL_ORDER."""

    counts: np.ndarray

    def __post_init__(self):
        c = np.array(self.counts, dtype=np.int64)
        if c.shape != (3, 3):
            raise InvalidInputError(f"confusion matrix must be 3x3, got shape {c.shape}")
        if (c < 0).any():
            raise InvalidInputError("confusion matrix entries must be non-negative")
        c.flags.writeable = False
        object.__setattr__(self, "counts", c)

    @classmethod
    def from_labels(cls, truth: Sequence[PostLabel], predicted: Sequence[PostLabel]) -> "ConfusionMatrix":
        if len(truth) != len(predicted):
            raise InvalidInputError("truth and predictions differ in length")
        idx = {lab: i for i, lab in enumerate(LABEL_ORDER)}
        c = np.zeros((3, 3), dtype=np.int64)
        for t, p in zip(truth, predicted):
            c[idx[t], idx[p]] += 1
        return cls(c)

    @property
    def total(self) -> int:
        return int(self.counts.sum())


@dataclass(frozen=True)
class Metrics:
    precision: float
    recall: float
    f1: float
    accuracy: float


def _safe_ratio(num: np.ndarray, den: np.ndarray) -> np.ndarray:
    out = np.zeros(num.shape, dtype=np.float64)
    np.divide(num, den, out=out, where=den > 0)
    return out


def evaluate(matrix: ConfusionMatrix) -> Metrics:
    """Accuracy plus macro-averaged precision and recall; f1 is their harmonic mean."""
    c = matrix.counts.astype(np.float64)
    total = c.sum()
    if total <= 0:
        raise DomainError("cannot evaluate an empty confusion matrix")
    tp = np.diag(c)
    precision = float(_safe_ratio(tp, c.sum(axis=0)).mean())
    recall = float(_safe_ratio(tp, c.sum(axis=1)).mean())
    f1 = 0.0 if precision + recall == 0 else 2 * precision * recall / (precision + recall)
    return Metrics(precision, recall, f1, float(tp.sum() / total))


# ---------------------------------------------------------------------------
# Inter-rater agreement


@dataclass(frozen=True)
class AnnotationSet:
    units: tuple[tuple[Hashable, Hashable, Hashable], ...]

    def __post_init__(self):
        units = tuple(tuple(u) for u in self.units)
        seen = set()
        for unit, rater, _ in units:
            if (unit, rater) in seen:
                raise InvalidInputError(f"rater {rater!r} labelled unit {unit!r} twice")
            seen.add((unit, rater))
        object.__setattr__(self, "units", units)

    def value_counts(self) -> tuple[np.ndarray, list]:
        """(units x values) table of how often each unit received each label."""
        unit_ids: dict = {}
        value_ids: dict = {}
        for unit, _, value in self.units:
            unit_ids.setdefault(unit, len(unit_ids))
            value_ids.setdefault(value, len(value_ids))
        counts = np.zeros((len(unit_ids), len(value_ids)))
        for unit, _, value in self.units:
            counts[unit_ids[unit], value_ids[value]] += 1
        return counts, list(value_ids)


def krippendorff_alpha(annotations: AnnotationSet) -> float:
    """Nominal Krippendorff's alpha via the coincidence matrix; missing labels allowed."""
    counts, _ = annotations.value_counts()
    counts = counts[counts.sum(axis=1) >= 2]
    if counts.shape[0] < 2:
        raise InsufficientDataError("need at least two units labelled by two or more raters")
    o = kernels.coincidence_matrix(np.ascontiguousarray(counts))
    n_c = o.sum(axis=1)
    n = n_c.sum()
    observed = o.sum() - np.trace(o)
    expected = (n * n - (n_c * n_c).sum()) / (n - 1)
    if expected <= 0:
        raise DegenerateDataError("every pairable label is identical; alpha is undefined")
    return float(1.0 - observed / expected)


def read_annotations_csv(path) -> AnnotationSet:
    path = Path(path)
    rows = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != ["unit_id", "rater_id", "label"]:
            raise DataFormatError("header must be unit_id,rater_id,label", path, 1)
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 3:
                raise DataFormatError(f"expected 3 fields, got {len(row)}", path, lineno)
            try:
                label = PostLabel.parse(row[2])
            except InvalidInputError as exc:
                raise DataFormatError(str(exc), path, lineno, "label") from None
            rows.append((row[0], row[1], label))
    try:
        return AnnotationSet(tuple(rows))
    except InvalidInputError as exc:
        raise DataFormatError(str(exc), path) from None


def read_labeled_csv(path):
    """Yield ``(post, label)`` pairs from a labelled-post CSV."""
    for post, extra, lineno in iter_post_rows(path, ("label",)):
        try:
            yield post, PostLabel.parse(extra[0])
        except InvalidInputError as exc:
            raise DataFormatError(str(exc), path, lineno, "label") from None
