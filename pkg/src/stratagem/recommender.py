"""Search term recommender: free-term -> controlled-descriptor associations.

Associations are mined by co-word analysis over document co-occurrence and
scored with Dunning's log-likelihood ratio (G2), which stays well-behaved
on the sparse counts typical of controlled vocabularies.  Counting is by
document presence, not term frequency.  Cross-token suggestion scores are
combined by summation (max and noisy-or would also be monotone; sum is the
simplest).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .corpus import Corpus
from .index import DEFAULT_STOPWORDS, tokenize

MODEL_MAGIC = "stratagem-assoc"
MODEL_VERSION = 1


class PairNotFound(KeyError):
    """The (term, descriptor) pair is not in the model."""


@dataclass
class AssociationModel:
    n_docs: int = 0
    term_df: dict[str, int] = field(default_factory=dict)
    desc_df: dict[str, int] = field(default_factory=dict)
    joint_df: dict[tuple[str, str], int] = field(default_factory=dict)
    min_joint: int = 2


@dataclass(frozen=True)
class Suggestion:
    descriptor: str
    score: float
    support: int


def train(
    corpus: Corpus,
    min_joint: int = 2,
    stopwords: frozenset[str] = DEFAULT_STOPWORDS,
) -> AssociationModel:
    """Count document-level term/descriptor co-occurrence over the corpus.

    Pairs co-occurring in fewer than ``min_joint`` documents are pruned.
    """
    term_df: dict[str, int] = {}
    desc_df: dict[str, int] = {}
    joint: dict[tuple[str, str], int] = {}
    for rec in corpus.records:
        tokens = set(tokenize(rec.title + " " + rec.abstract, stopwords))
        descs = set(rec.descriptors)
        for t in tokens:
            term_df[t] = term_df.get(t, 0) + 1
        for d in descs:
            desc_df[d] = desc_df.get(d, 0) + 1
        for t in tokens:
            for d in descs:
                joint[(t, d)] = joint.get((t, d), 0) + 1
    joint = {pair: c for pair, c in joint.items() if c >= min_joint}
    return AssociationModel(
        n_docs=len(corpus.records),
        term_df=term_df,
        desc_df=desc_df,
        joint_df=joint,
        min_joint=min_joint,
    )


def _xlnx(x: float) -> float:
    return x * math.log(x) if x > 0 else 0.0


def g2(k11: float, k12: float, k21: float, k22: float) -> float:
    """Log-likelihood ratio of a 2x2 contingency table, with 0*ln(0) := 0."""
    n = k11 + k12 + k21 + k22
    return 2.0 * (
        _xlnx(k11) + _xlnx(k12) + _xlnx(k21) + _xlnx(k22)
        - _xlnx(k11 + k12) - _xlnx(k21 + k22)
        - _xlnx(k11 + k21) - _xlnx(k12 + k22)
        + _xlnx(n)
    )


def association_score(model: AssociationModel, term: str, descriptor: str) -> float:
    """Signed G2 for a retained pair: negative when the pair co-occurs less
    often than independence predicts."""
    pair = (term, descriptor)
    if pair not in model.joint_df:
        raise PairNotFound(pair)
    k11 = model.joint_df[pair]
    k12 = model.term_df[term] - k11
    k21 = model.desc_df[descriptor] - k11
    k22 = model.n_docs - model.term_df[term] - model.desc_df[descriptor] + k11
    score = g2(k11, k12, k21, k22)
    expected = model.term_df[term] * model.desc_df[descriptor] / model.n_docs
    if k11 < expected:
        score = -score
    return score


def suggest(
    model: AssociationModel,
    query: str,
    k: int,
    stopwords: frozenset[str] = DEFAULT_STOPWORDS,
) -> list[Suggestion]:
    """Top-k descriptor suggestions for a query, scored per token and
    summed across tokens.  Descriptors equal (case-insensitively) to a
    query token are excluded."""
    if k < 0:
        raise ValueError("k must be >= 0")
    tokens = sorted(set(tokenize(query, stopwords)))
    if not tokens or k == 0:
        return []
    scores: dict[str, float] = {}
    support: dict[str, int] = {}
    for (t, d), joint in model.joint_df.items():
        if t not in tokens:
            continue
        s = association_score(model, t, d)
        scores[d] = scores.get(d, 0.0) + s
        support[d] = support.get(d, 0) + joint
    excluded = {t for t in tokens}
    ranked = sorted(
        (d for d in scores if d.lower() not in excluded),
        key=lambda d: (-scores[d], d),
    )
    return [Suggestion(d, scores[d], support[d]) for d in ranked[:k]]


@dataclass(frozen=True)
class ExpandedQuery:
    text: str
    descriptors: tuple[str, ...]


def expand_query(
    query: str,
    suggestions: list[Suggestion],
    mode: str = "automatic",
    selected: list[str] | None = None,
    top_m: int = 3,
) -> ExpandedQuery:
    """Augment a query with controlled descriptors.

    ``automatic`` takes the top ``top_m`` suggestions; ``interactive``
    takes the caller's selection, which must be a subset of the
    suggestions.  Descriptors are OR-combined with the original tokens by
    search_expanded; the original query text is never altered.
    """
    if mode == "automatic":
        chosen = [s.descriptor for s in suggestions[:top_m]]
    elif mode == "interactive":
        offered = {s.descriptor for s in suggestions}
        chosen = list(selected or [])
        bad = [d for d in chosen if d not in offered]
        if bad:
            raise ValueError(f"selected descriptors not among suggestions: {bad}")
    else:
        raise ValueError(f"unknown expansion mode {mode!r}")
    return ExpandedQuery(text=query, descriptors=tuple(chosen))


def save_model(model: AssociationModel, path: str) -> None:
    """Persist counts as versioned JSON; scores are recomputed on demand."""
    obj = {
        "magic": MODEL_MAGIC,
        "version": MODEL_VERSION,
        "n_docs": model.n_docs,
        "min_joint": model.min_joint,
        "term_df": model.term_df,
        "desc_df": model.desc_df,
        "joint_df": [[t, d, c] for (t, d), c in sorted(model.joint_df.items())],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, ensure_ascii=False)


def load_model(path: str) -> AssociationModel:
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    if obj.get("magic") != MODEL_MAGIC:
        raise ValueError(f"{path}: not an association model file")
    if obj.get("version") != MODEL_VERSION:
        raise ValueError(f"{path}: unsupported model version {obj.get('version')}")
    return AssociationModel(
        n_docs=obj["n_docs"],
        term_df=obj["term_df"],
        desc_df=obj["desc_df"],
        joint_df={(t, d): c for t, d, c in obj["joint_df"]},
        min_joint=obj["min_joint"],
    )
