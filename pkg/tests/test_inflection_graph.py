import io
import random

import pytest
from hypothesis import given, settings, strategies as st

from inflectnet.inflection_graph import (InflectionGraph, UnionFind, build_graph,
                                         component_size_histogram, component_subgraph,
                                         connected_components, dictionary_graph, export_graph,
                                         headword_degree_distribution)
from inflectnet.lexicon import Lexicon, UnknownPolicy

from conftest import MINI_TOKENS
from oracles import bfs_components


def as_vertex_sets(groups):
    return {frozenset({("h", h) for h in g.headword_members} | {("f", f) for f in g.form_members})
            for g in groups}


def random_lexicon(rng, n_heads, n_forms, p):
    analyses = {}
    for f in range(n_forms):
        heads = {f"h{h:03d}" for h in range(n_heads) if rng.random() < p}
        if heads:
            analyses[f"f{f:03d}"] = heads
    return Lexicon(analyses)


def test_mini_graph(mini_lexicon):
    g = build_graph(MINI_TOKENS, mini_lexicon)
    assert g.stats() == {"A": 4, "B": 6, "E": 7}
    assert g.headwords == ("aqua", "dico", "suffero", "tollo")
    assert g.forms == ("aqua", "aquam", "dicunt", "dixit", "sublatus", "tollit")
    sublatus = g.form_index["sublatus"]
    assert sum(1 for _, f in g.edges if f == sublatus) == 2


def test_mini_components(mini_lexicon):
    groups = connected_components(build_graph(MINI_TOKENS, mini_lexicon))
    assert [(sorted(g.headword_members), sorted(g.form_members)) for g in groups] == [
        (["suffero", "tollo"], ["sublatus", "tollit"]),
        (["aqua"], ["aqua", "aquam"]),
        (["dico"], ["dicunt", "dixit"]),
    ]
    assert [g.group_id for g in groups] == [0, 1, 2]
    assert groups[0].label == "suffero"


def test_headword_and_form_with_same_spelling_are_distinct(mini_lexicon):
    g = build_graph(["aqua"], mini_lexicon)
    assert g.headwords == ("aqua",) and g.forms == ("aqua",) and g.edges == ((0, 0),)


def test_empty_and_single_edge():
    g = build_graph([], Lexicon({}))
    assert g.stats() == {"A": 0, "B": 0, "E": 0}
    assert connected_components(g) == []
    assert headword_degree_distribution(g) == {}
    single = build_graph(["x"], Lexicon({"x": {"y"}}))
    assert len(connected_components(single)) == 1


def test_unknown_policy_in_build(mini_lexicon):
    g = build_graph(["dicunt", "xyzzy"], mini_lexicon)
    assert "xyzzy" in g.headwords and "xyzzy" in g.forms
    g = build_graph(["dicunt", "xyzzy"], mini_lexicon, UnknownPolicy.DROP)
    assert g.forms == ("dicunt",)


def test_degree_distribution(mini_lexicon):
    g = build_graph(MINI_TOKENS, mini_lexicon)
    assert headword_degree_distribution(g) == {1: 1, 2: 3}
    star = build_graph([f"f{i}" for i in range(5)], Lexicon({f"f{i}": {"h"} for i in range(5)}))
    assert headword_degree_distribution(star) == {5: 1}


def test_size_histogram(mini_lexicon):
    groups = connected_components(build_graph(MINI_TOKENS, mini_lexicon))
    h = component_size_histogram(groups)
    assert h.counts == {1: 2, 2: 1}
    assert h.n_headwords == 4 and h.n_components == 3
    three = build_graph(["a", "b"], Lexicon({"a": {"x", "y"}, "b": {"y", "z"}}))
    assert component_size_histogram(connected_components(three)).counts == {3: 1}


def test_union_find():
    uf = UnionFind(5)
    assert uf.union(0, 1) and uf.union(3, 4) and not uf.union(1, 0)
    assert uf.count == 3
    assert uf.find(0) == uf.find(1) != uf.find(2)


def test_edge_list_export(mini_lexicon):
    g = build_graph(MINI_TOKENS, mini_lexicon)
    text = export_graph(g, "edge_list").decode()
    assert text.splitlines() == [
        "AQUA\taqua", "AQUA\taquam", "DICO\tdicunt", "DICO\tdixit",
        "SUFFERO\tsublatus", "TOLLO\tsublatus", "TOLLO\ttollit",
    ]
    assert export_graph(g, "edge_list") == export_graph(build_graph(reversed(MINI_TOKENS), mini_lexicon))


def test_dot_export(mini_lexicon):
    empty = export_graph(build_graph([], Lexicon({})), "dot").decode()
    assert empty == "graph inflection {\n}\n"
    g = build_graph(MINI_TOKENS, mini_lexicon)
    dot = export_graph(g, "dot").decode()
    assert dot.startswith("graph inflection {\n") and dot.endswith("}\n")
    assert 'h0 [label="AQUA", shape=box];' in dot
    assert 'f0 [label="aqua"];' in dot
    assert dot.count(" -- ") == 7
    assert export_graph(g, "dot") == export_graph(g, "dot")
    with pytest.raises(ValueError):
        export_graph(g, "gexf")


def test_export_to_sinks(mini_lexicon, tmp_path):
    g = build_graph(MINI_TOKENS, mini_lexicon)
    b = io.BytesIO()
    export_graph(g, "edge_list", b)
    s = io.StringIO()
    export_graph(g, "edge_list", s)
    assert b.getvalue().decode() == s.getvalue()
    with pytest.raises(OSError):
        with open(tmp_path / "missing" / "x.tsv", "wb") as fh:
            export_graph(g, "edge_list", fh)


def test_component_subgraph(mini_lexicon):
    g = build_graph(MINI_TOKENS, mini_lexicon)
    sub = component_subgraph(g, connected_components(g)[0])
    assert sub.headwords == ("suffero", "tollo") and sub.stats()["E"] == 3


def test_dictionary_graph(mini_lexicon):
    g = dictionary_graph(mini_lexicon)
    assert g.stats() == {"A": 4, "B": 9, "E": 10}
    assert len(connected_components(g)) == 3


def test_components_match_bfs_on_random_graphs():
    rng = random.Random(1)
    for _ in range(50):
        lex = random_lexicon(rng, rng.randint(1, 60), rng.randint(1, 120), rng.uniform(0.005, 0.1))
        g = dictionary_graph(lex)
        edges = [(g.headwords[h], g.forms[f]) for h, f in g.edges]
        assert as_vertex_sets(connected_components(g)) == bfs_components(g.headwords, g.forms, edges)


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.integers(0, 80), st.sets(st.integers(0, 30), min_size=1, max_size=3),
                       max_size=80),
       st.lists(st.integers(0, 80), max_size=60))
def test_graph_invariants(mapping, text):
    lex = Lexicon({f"f{k}": {f"h{h}" for h in v} for k, v in mapping.items()})
    for policy in UnknownPolicy:
        g = build_graph([f"f{t}" for t in text], lex, policy)
        groups = connected_components(g)
        nA, nB, nE = len(g.headwords), len(g.forms), len(g.edges)
        assert len(set(g.edges)) == nE
        assert len(groups) <= min(nA, nB) or nA == nB == 0
        assert nE >= max(nA, nB)
        deg = headword_degree_distribution(g)
        assert sum(d * c for d, c in deg.items()) == nE
        assert sum(deg.values()) == nA
        hist = component_size_histogram(groups)
        assert hist.n_headwords == nA and hist.n_components == len(groups)
        heads = [h for grp in groups for h in grp.headword_members]
        forms = [f for grp in groups for f in grp.form_members]
        assert sorted(heads) == list(g.headwords) and sorted(forms) == list(g.forms)
        assert build_graph(reversed([f"f{t}" for t in text]), lex, policy) == g
