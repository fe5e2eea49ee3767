"""End-to-end analysis of one text.

The stages follow the procedure used for the Latin coverage study: normalize
the text, count words, look up headwords, build the graph and its
components, then count group occurrences and build the coverage curves.
"""
from __future__ import annotations

from dataclasses import dataclass

from .corpus import FrequencyTable, TokenStream, word_frequencies
from .coverage_stats import (CoverageCurve, RankFrequency, coverage, group_labels,
                             group_occurrences, rank_frequency)
from .inflection_graph import InflectionGraph, WordGroup, build_graph, connected_components
from .lexicon import Lexicon, UnknownPolicy


@dataclass(frozen=True)
class TextAnalysis:
    tokens: TokenStream
    words: FrequencyTable
    graph: InflectionGraph
    groups: list[WordGroup]
    group_counts: FrequencyTable
    word_ranks: RankFrequency
    group_ranks: RankFrequency
    unknown_tokens: int

    @property
    def word_coverage(self) -> CoverageCurve | None:
        return coverage(self.word_ranks) if len(self.word_ranks) else None

    @property
    def group_coverage(self) -> CoverageCurve | None:
        return coverage(self.group_ranks) if len(self.group_ranks) else None

    @property
    def unknown_rate(self) -> float:
        return self.unknown_tokens / len(self.tokens) if len(self.tokens) else 0.0


def analyze_text(ts: TokenStream, lex: Lexicon,
                 policy: UnknownPolicy = UnknownPolicy.SELF_HEADWORD) -> TextAnalysis:
    policy = UnknownPolicy.parse(policy)
    words = word_frequencies(ts)
    graph = build_graph(words.entries.keys(), lex, policy)
    groups = connected_components(graph)
    group_counts = group_occurrences(ts, groups, policy)
    if policy is UnknownPolicy.DROP:
        # coverage is over running words that made it into the graph
        kept = {w: n for w, n in words.items() if w in lex}
        words = FrequencyTable(kept, sum(kept.values()), words.total - sum(kept.values()))
    unknown = sum(1 for t in ts if t not in lex)
    return TextAnalysis(
        tokens=ts,
        words=words,
        graph=graph,
        groups=groups,
        group_counts=group_counts,
        word_ranks=rank_frequency(words, "words"),
        group_ranks=rank_frequency(group_counts, "groups", group_labels(groups)),
        unknown_tokens=unknown,
    )
