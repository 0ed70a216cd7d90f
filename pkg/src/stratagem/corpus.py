"""Bibliographic records: JSONL parsing, validation, synthetic corpora.

A corpus is a JSONL file (UTF-8, one object per line, blank lines ignored).
Required fields are ``id`` and ``title``; everything else is optional.
Author names are compared by exact normalized-string match throughout the
engine -- there is no disambiguation of homonyms or name variants.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field

ISSN_PATTERN = re.compile(r"^\d{4}-\d{3}[\dX]$")


class CorpusError(Exception):
    """Raised for malformed or invalid corpus input."""


def normalize_name(name: str) -> str:
    """Trim and collapse internal whitespace, preserving case."""
    return " ".join(name.split())


@dataclass(frozen=True)
class Record:
    id: str
    title: str
    abstract: str = ""
    authors: tuple[str, ...] = ()
    issn: str | None = None
    journal_title: str | None = None
    descriptors: tuple[str, ...] = ()
    language: str | None = None
    year: int | None = None


@dataclass
class Corpus:
    records: list[Record] = field(default_factory=list)
    by_id: dict[str, Record] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.records)

    @classmethod
    def from_records(cls, records: list[Record]) -> "Corpus":
        by_id: dict[str, Record] = {}
        for rec in records:
            if rec.id in by_id:
                raise CorpusError(f"duplicate record id {rec.id!r}")
            by_id[rec.id] = rec
        return cls(records=list(records), by_id=by_id)


def _where(lineno: int | None) -> str:
    return f" (line {lineno})" if lineno is not None else ""


def parse_record(line: str, lineno: int | None = None) -> Record:
    """Parse one JSONL line into a normalized Record.

    Raises CorpusError for malformed JSON, a missing id or title, or an
    issn that does not match the NNNN-NNNC pattern.  The ISSN check digit
    is deliberately not verified: real bibliographic data contains invalid
    check digits and the engine only needs the ISSN as a grouping key.
    """
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise CorpusError(f"malformed JSON{_where(lineno)}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise CorpusError(f"expected a JSON object{_where(lineno)}")

    rec_id = normalize_name(str(obj.get("id") or ""))
    title = normalize_name(str(obj.get("title") or ""))
    if not rec_id:
        raise CorpusError(f"missing or empty 'id'{_where(lineno)}")
    if not title:
        raise CorpusError(f"missing or empty 'title'{_where(lineno)}")

    issn = obj.get("issn")
    if issn is not None:
        issn = str(issn).strip()
        if not ISSN_PATTERN.match(issn):
            raise CorpusError(
                f"invalid 'issn' {issn!r}{_where(lineno)}: expected NNNN-NNNC"
            )

    authors: list[str] = []
    for name in obj.get("authors") or []:
        name = normalize_name(str(name))
        if name and name not in authors:
            authors.append(name)

    descriptors: list[str] = []
    for d in obj.get("descriptors") or []:
        d = normalize_name(str(d))
        if d and d not in descriptors:
            descriptors.append(d)

    journal_title = obj.get("journal_title")
    if journal_title is not None:
        journal_title = normalize_name(str(journal_title)) or None
    language = obj.get("language")
    if language is not None:
        language = str(language).strip() or None
    year = obj.get("year")
    if year is not None:
        try:
            year = int(year)
        except (TypeError, ValueError) as exc:
            raise CorpusError(f"invalid 'year' {year!r}{_where(lineno)}") from exc

    return Record(
        id=rec_id,
        title=title,
        abstract=str(obj.get("abstract") or "").strip(),
        authors=tuple(authors),
        issn=issn,
        journal_title=journal_title,
        descriptors=tuple(descriptors),
        language=language,
        year=year,
    )


def record_to_json(rec: Record) -> str:
    """Serialize a Record to one JSONL line; parse_record inverts this."""
    obj: dict = {"id": rec.id, "title": rec.title}
    if rec.abstract:
        obj["abstract"] = rec.abstract
    if rec.authors:
        obj["authors"] = list(rec.authors)
    if rec.issn is not None:
        obj["issn"] = rec.issn
    if rec.journal_title is not None:
        obj["journal_title"] = rec.journal_title
    if rec.descriptors:
        obj["descriptors"] = list(rec.descriptors)
    if rec.language is not None:
        obj["language"] = rec.language
    if rec.year is not None:
        obj["year"] = rec.year
    return json.dumps(obj, ensure_ascii=False)


def load_corpus(path: str) -> Corpus:
    """Load a JSONL corpus file, aborting on the first invalid line."""
    records: list[Record] = []
    seen: dict[str, int] = {}
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise CorpusError(f"cannot read {path}: {exc.strerror}") from exc
    with fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            rec = parse_record(line, lineno=lineno)
            if rec.id in seen:
                raise CorpusError(
                    f"duplicate id {rec.id!r} on lines {seen[rec.id]} and {lineno}"
                )
            seen[rec.id] = lineno
            records.append(rec)
    return Corpus.from_records(records)


def write_jsonl(corpus: Corpus, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in corpus.records:
            fh.write(record_to_json(rec) + "\n")


# Topic vocabulary for the synthetic generator.  Each topic couples a free
# title/abstract term with the controlled descriptor a human indexer would
# assign, so that co-word training has real signal to find.
_TOPICS: list[tuple[str, str]] = [
    ("war", "Armed Conflict"),
    ("media", "Mass Media"),
    ("school", "Education System"),
    ("election", "Voting Behavior"),
    ("poverty", "Social Inequality"),
    ("migration", "International Migration"),
    ("climate", "Environmental Policy"),
    ("labor", "Labor Market"),
    ("gender", "Gender Roles"),
    ("crime", "Criminality"),
    ("religion", "Religious Communities"),
    ("youth", "Adolescence"),
    ("health", "Public Health"),
    ("television", "Broadcasting"),
    ("propaganda", "Political Communication"),
    ("census", "Demography"),
    ("urban", "Urban Development"),
    ("sport", "Physical Education"),
    ("family", "Family Policy"),
    ("internet", "Digital Media"),
    ("protest", "Social Movements"),
    ("trade", "Economic Policy"),
    ("literacy", "Educational Attainment"),
    ("aging", "Gerontology"),
]

_FILLERS = [
    "study", "analysis", "survey", "effects", "perspectives", "evidence",
    "review", "comparative", "national", "empirical", "longitudinal",
    "findings", "discourse", "framework", "regional", "debate",
]

_SURNAMES = [
    "Smith", "Weber", "Müller", "Johnson", "Fischer", "Brown", "Wagner",
    "Davis", "Becker", "Wilson", "Hoffmann", "Moore", "Schulz", "Taylor",
    "Koch", "Anderson", "Richter", "Thomas", "Klein", "Jackson", "Wolf",
    "White", "Neumann", "Harris", "Schwarz", "Martin", "Braun", "Thompson",
    "Krüger", "Garcia", "Lange", "Martinez", "Schmid", "Robinson", "Werner",
    "Clark", "Meier", "Lewis", "Vogel", "Lee",
]


def _issn_for(journal_rank: int) -> str:
    check = "X" if journal_rank % 11 == 0 else str(journal_rank % 10)
    return f"{1000 + journal_rank:04d}-{(journal_rank * 37) % 1000:03d}{check}"


def generate_synthetic(
    n_docs: int, n_journals: int, skew: float, seed: int
) -> Corpus:
    """Generate a deterministic synthetic corpus.

    Journal assignment follows a Zipf-like distribution with exponent
    ``skew`` (weight 1/rank**skew), so a core-journal concentration exists.
    Titles and descriptors are drawn from a shared topic vocabulary, which
    gives the association model genuine term/descriptor co-occurrence.
    """
    if n_docs < 0:
        raise ValueError("n_docs must be >= 0")
    if n_journals < 1:
        raise ValueError("n_journals must be >= 1")
    if skew <= 0:
        raise ValueError("skew must be > 0")

    rng = random.Random(seed)
    journal_ranks = list(range(1, n_journals + 1))
    journal_weights = [1.0 / r**skew for r in journal_ranks]
    journal_titles = {
        r: f"Journal of {_TOPICS[(r - 1) % len(_TOPICS)][1]}" for r in journal_ranks
    }

    pool_size = max(8, n_docs // 8)
    author_pool = [
        f"{chr(ord('A') + i % 26)}. {_SURNAMES[i % len(_SURNAMES)]}"
        + ("" if i < 26 * len(_SURNAMES) else f" {i}")
        for i in range(pool_size)
    ]
    # Zipf-ish author productivity so co-authorship hubs emerge
    author_weights = [1.0 / (i + 1) ** 0.7 for i in range(pool_size)]

    records: list[Record] = []
    for i in range(n_docs):
        topics = rng.sample(_TOPICS, k=rng.randint(1, 3))
        terms = [t for t, _ in topics]
        fillers = rng.sample(_FILLERS, k=rng.randint(2, 4))
        title_words = terms + fillers
        rng.shuffle(title_words)
        title = " ".join(title_words).capitalize()

        if rng.random() < 0.9:
            abstract_words = terms * 2 + rng.sample(_FILLERS, k=3)
            rng.shuffle(abstract_words)
            abstract = " ".join(abstract_words).capitalize() + "."
        else:
            abstract = ""

        descriptors = [d for _, d in topics]
        extra = rng.randint(0, 2)
        for _ in range(extra):
            cand = rng.choice(_TOPICS)[1]
            if cand not in descriptors:
                descriptors.append(cand)
        descriptors = descriptors[:5]

        n_authors = rng.randint(1, 4)
        authors: list[str] = []
        while len(authors) < n_authors:
            a = rng.choices(author_pool, weights=author_weights, k=1)[0]
            if a not in authors:
                authors.append(a)

        if rng.random() < 0.95:
            journal = rng.choices(journal_ranks, weights=journal_weights, k=1)[0]
            issn: str | None = _issn_for(journal)
            journal_title: str | None = journal_titles[journal]
        else:  # grey literature without a journal
            issn = None
            journal_title = None

        records.append(
            Record(
                id=f"syn{i:06d}",
                title=title,
                abstract=abstract,
                authors=tuple(authors),
                issn=issn,
                journal_title=journal_title,
                descriptors=tuple(descriptors),
                language="en",
                year=rng.randint(1990, 2010),
            )
        )
    return Corpus.from_records(records)
