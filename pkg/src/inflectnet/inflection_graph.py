"""Bipartite headword/form graph and its connected components (word groups).

Headwords and forms live in separate vertex sets, so a form spelled like its
headword ("aqua") is two vertices joined by an edge. Vertex order is
lexicographic everywhere, which makes every output reproducible.
"""
from __future__ import annotations

import io
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import IO, Iterable

from .lexicon import Lexicon, UnknownPolicy, analyze

__all__ = [
    "InflectionGraph",
    "WordGroup",
    "SizeHistogram",
    "UnionFind",
    "build_graph",
    "dictionary_graph",
    "connected_components",
    "headword_degree_distribution",
    "component_size_histogram",
    "component_subgraph",
    "export_graph",
]


class UnionFind:
    """Disjoint sets over ``0..n-1`` with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True


@dataclass(frozen=True)
class InflectionGraph:
    """Headwords (set A), forms (set B) and edges as ``(headword_idx, form_idx)``."""

    headwords: tuple[str, ...]
    forms: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def headword_index(self) -> dict[str, int]:
        return {h: i for i, h in enumerate(self.headwords)}

    @cached_property
    def form_index(self) -> dict[str, int]:
        return {f: i for i, f in enumerate(self.forms)}

    def stats(self) -> dict[str, int]:
        return {"A": len(self.headwords), "B": len(self.forms), "E": len(self.edges)}

    def __repr__(self):
        s = self.stats()
        return f"InflectionGraph(A={s['A']}, B={s['B']}, E={s['E']})"


@dataclass(frozen=True)
class WordGroup:
    group_id: int
    headword_members: frozenset[str]
    form_members: frozenset[str]

    @property
    def label(self) -> str:
        """Smallest headword; used to break ties when ranking."""
        return min(self.headword_members)

    @property
    def size(self) -> int:
        return len(self.headword_members) + len(self.form_members)


@dataclass(frozen=True)
class SizeHistogram:
    """``counts[m]`` is the number of components with exactly ``m`` headwords."""

    counts: dict[int, int]

    def sizes(self) -> list[int]:
        return sorted(self.counts)

    @property
    def n_components(self) -> int:
        return sum(self.counts.values())

    @property
    def n_headwords(self) -> int:
        return sum(m * h for m, h in self.counts.items())


def build_graph(words: Iterable[str], lex: Lexicon,
                policy: UnknownPolicy = UnknownPolicy.SELF_HEADWORD) -> InflectionGraph:
    """Connect every word to each headword it may realize.

    ``words`` are normalized tokens; duplicates are ignored. Under the DROP
    policy words unknown to ``lex`` are left out of the graph.
    """
    pairs = []
    forms = set()
    for w in set(words):
        heads = analyze(lex, w, policy)
        if heads:
            forms.add(w)
            pairs.extend((h, w) for h in heads)
    headwords = tuple(sorted({h for h, _ in pairs}))
    forms = tuple(sorted(forms))
    hidx = {h: i for i, h in enumerate(headwords)}
    fidx = {f: i for i, f in enumerate(forms)}
    edges = tuple(sorted((hidx[h], fidx[f]) for h, f in pairs))
    return InflectionGraph(headwords, forms, edges)


def dictionary_graph(lex: Lexicon) -> InflectionGraph:
    """Graph of every form in ``lex`` against its headwords."""
    return build_graph(lex.analyses.keys(), lex, UnknownPolicy.DROP)


def connected_components(g: InflectionGraph) -> list[WordGroup]:
    """Word groups of ``g``, largest first.

    Order is by total vertex count descending, then by smallest headword;
    ``group_id`` is the position in that order.
    """
    n_head = len(g.headwords)
    uf = UnionFind(n_head + len(g.forms))
    for h, f in g.edges:
        uf.union(h, n_head + f)

    heads: dict[int, list[str]] = {}
    forms: dict[int, list[str]] = {}
    for i, h in enumerate(g.headwords):
        heads.setdefault(uf.find(i), []).append(h)
    for j, f in enumerate(g.forms):
        forms.setdefault(uf.find(n_head + j), []).append(f)

    # every vertex has degree >= 1, so each root owns at least one headword
    members = [(frozenset(heads[r]), frozenset(forms.get(r, ()))) for r in heads]
    members.sort(key=lambda hf: (-(len(hf[0]) + len(hf[1])), min(hf[0])))
    return [WordGroup(i, h, f) for i, (h, f) in enumerate(members)]


def headword_degree_distribution(g: InflectionGraph) -> dict[int, int]:
    """Map degree -> number of headwords with that many forms in the graph."""
    degree = Counter(h for h, _ in g.edges)
    return dict(sorted(Counter(degree.values()).items()))


def component_size_histogram(groups: Iterable[WordGroup]) -> SizeHistogram:
    counts = Counter(len(grp.headword_members) for grp in groups)
    return SizeHistogram(dict(sorted(counts.items())))


def component_subgraph(g: InflectionGraph, group: WordGroup) -> InflectionGraph:
    """The part of ``g`` induced by one word group."""
    heads = tuple(sorted(group.headword_members))
    forms = tuple(sorted(group.form_members))
    hidx = {h: i for i, h in enumerate(heads)}
    fidx = {f: i for i, f in enumerate(forms)}
    edges = []
    for h, f in g.edges:
        hw, fw = g.headwords[h], g.forms[f]
        if hw in hidx and fw in fidx:
            edges.append((hidx[hw], fidx[fw]))
    return InflectionGraph(heads, forms, tuple(sorted(edges)))


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _edge_list(g: InflectionGraph) -> str:
    return "".join(f"{g.headwords[h].upper()}\t{g.forms[f]}\n" for h, f in g.edges)


def _dot(g: InflectionGraph) -> str:
    # node ids carry the partition so "aqua" the headword and "aqua" the form stay distinct
    out = ["graph inflection {\n"]
    for i, h in enumerate(g.headwords):
        out.append(f"  h{i} [label={_dot_quote(h.upper())}, shape=box];\n")
    for j, f in enumerate(g.forms):
        out.append(f"  f{j} [label={_dot_quote(f)}];\n")
    for h, f in g.edges:
        out.append(f"  h{h} -- f{f};\n")
    out.append("}\n")
    return "".join(out)


def export_graph(g: InflectionGraph, format: str = "edge_list",
                 sink: IO[bytes] | None = None) -> bytes:
    """Serialize ``g`` as a tab-separated edge list or a Graphviz DOT document.

    Headwords are written in uppercase, forms in lowercase. If ``sink`` is
    given the bytes are also written to it.
    """
    if format == "edge_list":
        text = _edge_list(g)
    elif format == "dot":
        text = _dot(g)
    else:
        raise ValueError(f"unknown export format {format!r}; use 'edge_list' or 'dot'")
    data = text.encode("utf-8")
    if sink is not None:
        if isinstance(sink, io.TextIOBase):
            sink.write(text)
        else:
            sink.write(data)
    return data
