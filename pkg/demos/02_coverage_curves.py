"""
Word and group coverage of a synthetic inflected text
=====================================================

A random Latin-like language is generated from four suffix paradigms and a
text is sampled from it. Knowing the top ``k`` word groups covers far more
of the text than knowing the top ``k`` individual word forms.
"""
import numpy as np

from inflectnet import (analyze_text, coverage_threshold, normalized_coverage, TokenStream,
                        zipf_coverage)
from inflectnet.coverage_stats import rank_frequency_csv
from toy_language import load_toy_paradigms, sample_text, toy_lexicon

paradigms = load_toy_paradigms()
stems, lexicon = toy_lexicon(4000, paradigms, seed=3)
tokens = TokenStream(sample_text(stems, paradigms, 51_300, seed=4), "toy")
res = analyze_text(tokens, lexicon)
print(res.graph, len(res.groups), "groups")
print(rank_frequency_csv(res.group_ranks).splitlines()[:6])

# %%
# Number of words and groups needed for 95% and 98% coverage.
cw, cg = res.word_coverage, res.group_coverage
for p in (0.95, 0.98):
    print(f"{p:.0%}: {coverage_threshold(cw, p)} words, {coverage_threshold(cg, p)} groups")

# %%
# Normalized coverage against the curve a pure 1/r law would give.
x = np.linspace(0, 1, 11)
print("x      words   groups  zipf")
for xi, w, g, z in zip(x, normalized_coverage(cw, x), normalized_coverage(cg, x),
                       zipf_coverage(cw.L, x)):
    print(f"{xi:.1f}  {w:.4f}  {g:.4f}  {z:.4f}")

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    xs = np.linspace(0, 1, 500)
    fig, ax = plt.subplots()
    ax.plot(xs, normalized_coverage(cw, xs), label="words")
    ax.plot(xs, normalized_coverage(cg, xs), label="groups")
    ax.plot(xs, zipf_coverage(cw.L, xs), "--", label="1/r law")
    ax.set_xlabel("fraction of ranked list")
    ax.set_ylabel("coverage")
    ax.legend()
    fig.savefig("coverage_curves.png", dpi=120)
