"""Operator CLI: ingest corpora, run one-shot queries, generate synthetic
data, launch the HTTP service.

Exit codes: 0 ok, 1 usage error, 2 data error, 3 internal error.
Text query output is line-oriented (rank, score, id, title) so shell
tests can diff it; --format json emits the API search response schema.
"""

from __future__ import annotations

import json
import sys

import click

from .corpus import CorpusError, generate_synthetic, load_corpus, write_jsonl
from .service_api import (
    BadRequest,
    SearchRequest,
    count_matches,
    create_app,
    parse_search_request,
    run_search,
)
from .snapshot import build_snapshot, load_snapshot, save_snapshot

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3


@click.group()
def cli():
    """Bibliographic retrieval engine with co-word expansion, Bradfordizing
    and author-centrality re-ranking."""


@cli.command()
@click.argument("corpus_path", type=click.Path())
@click.argument("out_snapshot", type=click.Path())
def ingest(corpus_path: str, out_snapshot: str):
    """Build index + association model from a JSONL corpus and persist
    them as a snapshot."""
    corpus = load_corpus(corpus_path)
    snap = build_snapshot(corpus)
    save_snapshot(snap, out_snapshot)
    click.echo(f"ingested {len(corpus)} records -> {out_snapshot}")


@cli.command()
@click.argument("snapshot_path", type=click.Path())
@click.argument("q")
@click.option("--rerank", type=click.Choice(["none", "bradford", "centrality"]), default="none")
@click.option("--expand", default="off", help="off, auto, or terms=<comma list>")
@click.option("--k", default=50, show_default=True)
@click.option("--offset", default=0, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text")
def query(snapshot_path: str, q: str, rerank: str, expand: str, k: int, offset: int, fmt: str):
    """One-shot search against a snapshot."""
    snap = load_snapshot(snapshot_path)
    req = parse_search_request(
        {"q": q, "rerank": rerank, "expand": expand, "k": str(k), "offset": str(offset)}
    )
    full, applied, total = run_search(snap, req)
    page = full.hits[req.offset : req.offset + req.k]
    if fmt == "json":
        body = {
            "query": q,
            "rerank": rerank,
            "expansion": applied,
            "total": total,
            "offset": req.offset,
            "k": req.k,
            "hits": [
                {
                    "id": h.doc_id,
                    "title": snap.corpus.by_id[h.doc_id].title,
                    "authors": list(snap.corpus.by_id[h.doc_id].authors),
                    "journal": snap.corpus.by_id[h.doc_id].journal_title,
                    "issn": snap.corpus.by_id[h.doc_id].issn,
                    "year": snap.corpus.by_id[h.doc_id].year,
                    "base_score": h.base_score,
                    "score": h.score,
                    "explain": list(h.explain),
                }
                for h in page
            ],
        }
        click.echo(json.dumps(body, ensure_ascii=False))
    else:
        for rank, h in enumerate(page, start=req.offset + 1):
            title = snap.corpus.by_id[h.doc_id].title
            click.echo(f"{rank}\t{h.score:.4f}\t{h.doc_id}\t{title}")


@cli.command()
@click.option("--n-docs", default=1000, show_default=True)
@click.option("--n-journals", default=20, show_default=True)
@click.option("--skew", default=1.0, show_default=True)
@click.option("--seed", default=42, show_default=True)
@click.argument("out", type=click.Path())
def synth(n_docs: int, n_journals: int, skew: float, seed: int, out: str):
    """Write a synthetic corpus as JSONL."""
    corpus = generate_synthetic(n_docs, n_journals, skew, seed)
    write_jsonl(corpus, out)
    click.echo(f"wrote {len(corpus)} records -> {out}")


@cli.command()
@click.option("--snapshot", "snapshot_path", type=click.Path(), default=None)
@click.option("--corpus", "corpus_path", type=click.Path(), default=None,
              envvar="STRATAGEM_CORPUS")
@click.option("--addr", default="127.0.0.1:8000", envvar="STRATAGEM_ADDR",
              show_default=True, help="host:port to listen on")
@click.option("--ui-dir", type=click.Path(), default=None,
              help="directory of static web UI files to serve at /")
def serve(snapshot_path: str | None, corpus_path: str | None, addr: str, ui_dir: str | None):
    """Serve the HTTP API from a snapshot or a raw corpus file."""
    import uvicorn

    if (snapshot_path is None) == (corpus_path is None):
        raise click.UsageError("exactly one of --snapshot or --corpus is required")
    host, sep, port_s = addr.rpartition(":")
    if not sep or not host:
        raise click.UsageError(f"bad --addr {addr!r}: expected host:port")
    try:
        port = int(port_s)
    except ValueError:
        raise click.UsageError(f"bad --addr {addr!r}: port must be an integer")
    if snapshot_path is not None:
        snap = load_snapshot(snapshot_path)
    else:
        snap = build_snapshot(load_corpus(corpus_path))
    app = create_app(snap, ui_dir=ui_dir)
    uvicorn.run(app, host=host, port=port)


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return EXIT_OK
    except click.exceptions.Exit as exc:
        return EXIT_OK if exc.exit_code == 0 else EXIT_USAGE
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_USAGE
    except BadRequest as exc:
        click.echo(f"error: {exc.message}", err=True)
        return EXIT_USAGE
    except (CorpusError, FileNotFoundError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_DATA
    except Exception as exc:  # pragma: no cover
        click.echo(f"internal error: {exc}", err=True)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
