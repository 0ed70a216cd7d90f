"""Bibliographic retrieval engine with three model-driven services:
co-word query expansion, Bradfordizing and author-centrality re-ranking."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .corpus import Corpus, CorpusError, Record, generate_synthetic, load_corpus
from .index import Hit, Index, ResultSet, build_index, facet_count, search, search_expanded, tokenize
from .recommender import AssociationModel, Suggestion, association_score, expand_query, suggest, train
from .bradford import JournalGroup, bradfordize, journal_table
from .centrality import CoauthorGraph, author_table, betweenness, build_graph, centrality_rerank
from .snapshot import Snapshot, build_snapshot, load_snapshot, save_snapshot

__version__ = "0.1.0"
