"""
The inflection graph of a tiny text
===================================

Eight running words, four dictionary headwords. ``sublatus`` may be a form
of either *tollo* or *suffero*, which puts both headwords into one word
group.
"""
from inflectnet import (build_graph, connected_components, export_graph,
                        headword_degree_distribution, load_text, read_lexicon)

tokens = load_text("data/mini_corpus.txt")
lexicon = read_lexicon("data/mini_lexicon.tsv")
print(tokens.tokens)

# %%
# Distinct words form one side of the graph, their possible headwords the
# other. A word spelled like its headword ("aqua") is still two vertices.
graph = build_graph(tokens.distinct(), lexicon)
print(graph)
print(export_graph(graph, "edge_list").decode())

# %%
# Word groups are the connected components.
for group in connected_components(graph):
    print(group.group_id, sorted(group.headword_members), sorted(group.form_members))

print("headword degrees:", headword_degree_distribution(graph))

# %%
# DOT output can be rendered with Graphviz (``dot -Tsvg mini.dot``).
with open("mini.dot", "wb") as fh:
    export_graph(graph, "dot", fh)
