"""
Component sizes of a whole-dictionary inflection graph
======================================================

Every theoretically possible form of every headword is generated and
linked to its headwords. As the dictionary grows, accidental coincidences
between forms of different headwords merge more of them into shared
components; the number ``H(m)`` of components with ``m`` headwords falls
off roughly as a power of ``m``.
"""
from inflectnet import (component_size_histogram, connected_components, dictionary_graph,
                        fit_power_law)
from inflectnet.inflection_graph import component_subgraph, export_graph
from toy_language import load_toy_paradigms, toy_lexicon

paradigms = load_toy_paradigms()

# %%
# Growing dictionaries over the same stem inventory.
for n in (2000, 5000, 10000, 20000):
    stems, lexicon = toy_lexicon(n, paradigms, seed=7)
    groups = connected_components(dictionary_graph(lexicon))
    hist = component_size_histogram(groups)
    largest = len(groups[0].headword_members)
    print(f"{n:5d} headwords, {lexicon.form_count:6d} forms, {len(groups):5d} components, "
          f"largest has {largest} headwords")

# %%
# Power-law fit of H(m) for the largest dictionary, leaving out the biggest
# few component sizes where finite-size effects dominate. The toy language
# has a bump near m = 4: "-is" ends three of the four paradigms, so one stem
# used in several paradigms gives a ready-made multi-headword group.
print(dict(sorted(hist.counts.items())))
fit = fit_power_law(hist, exclude_largest=2)
print(f"tau = {fit.tau:.2f} from {fit.points_used} sizes")

# %%
# The largest component is mostly stars joined through a few shared forms.
graph = dictionary_graph(lexicon)
sub = component_subgraph(graph, connected_components(graph)[0])
print(sub)
print("\n".join(export_graph(sub, "edge_list").decode().splitlines()[:10]))
