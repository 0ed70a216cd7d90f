"""Single-file JSON snapshot: corpus, prebuilt index and association model.

The file carries a magic header and a format version.  Loading restores
the index verbatim (no re-tokenization), so a served snapshot behaves
identically to a fresh build of the same corpus.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .corpus import Corpus, Record
from .index import Index, build_index
from .recommender import AssociationModel, train

SNAPSHOT_MAGIC = "stratagem-snapshot"
SNAPSHOT_VERSION = 1


@dataclass
class Snapshot:
    corpus: Corpus
    index: Index
    model: AssociationModel


def build_snapshot(corpus: Corpus) -> Snapshot:
    return Snapshot(corpus=corpus, index=build_index(corpus), model=train(corpus))


def _record_obj(rec: Record) -> dict:
    return {
        "id": rec.id,
        "title": rec.title,
        "abstract": rec.abstract,
        "authors": list(rec.authors),
        "issn": rec.issn,
        "journal_title": rec.journal_title,
        "descriptors": list(rec.descriptors),
        "language": rec.language,
        "year": rec.year,
    }


def save_snapshot(snap: Snapshot, path: str) -> None:
    idx = snap.index
    obj = {
        "magic": SNAPSHOT_MAGIC,
        "version": SNAPSHOT_VERSION,
        "records": [_record_obj(r) for r in snap.corpus.records],
        "index": {
            "doc_ids": idx.doc_ids,
            "postings": {
                t: [ords.tolist(), tfs.tolist()]
                for t, (ords, tfs) in idx.postings.items()
            },
            "doc_len": idx._doc_len.tolist(),
            "facet_issn": idx.facet_issn,
            "facet_descriptor": idx.facet_descriptor,
            "k1": idx.k1,
            "b": idx.b,
            "stopwords": sorted(idx.stopwords),
        },
        "model": {
            "n_docs": snap.model.n_docs,
            "min_joint": snap.model.min_joint,
            "term_df": snap.model.term_df,
            "desc_df": snap.model.desc_df,
            "joint_df": [[t, d, c] for (t, d), c in snap.model.joint_df.items()],
        },
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, ensure_ascii=False)


def load_snapshot(path: str) -> Snapshot:
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    if obj.get("magic") != SNAPSHOT_MAGIC:
        raise ValueError(f"{path}: not a stratagem snapshot")
    if obj.get("version") != SNAPSHOT_VERSION:
        raise ValueError(f"{path}: unsupported snapshot version {obj.get('version')}")

    records = [
        Record(
            id=r["id"],
            title=r["title"],
            abstract=r["abstract"],
            authors=tuple(r["authors"]),
            issn=r["issn"],
            journal_title=r["journal_title"],
            descriptors=tuple(r["descriptors"]),
            language=r["language"],
            year=r["year"],
        )
        for r in obj["records"]
    ]
    corpus = Corpus.from_records(records)

    ix = obj["index"]
    index = Index(
        doc_ids=ix["doc_ids"],
        postings={
            t: (np.array(p[0], dtype=np.int32), np.array(p[1], dtype=np.int32))
            for t, p in ix["postings"].items()
        },
        doc_len_arr=np.array(ix["doc_len"], dtype=np.int32),
        facet_issn=ix["facet_issn"],
        facet_descriptor=ix["facet_descriptor"],
        k1=ix["k1"],
        b=ix["b"],
        stopwords=frozenset(ix["stopwords"]),
    )

    mx = obj["model"]
    model = AssociationModel(
        n_docs=mx["n_docs"],
        term_df=mx["term_df"],
        desc_df=mx["desc_df"],
        joint_df={(t, d): c for t, d, c in mx["joint_df"]},
        min_joint=mx["min_joint"],
    )
    return Snapshot(corpus=corpus, index=index, model=model)
