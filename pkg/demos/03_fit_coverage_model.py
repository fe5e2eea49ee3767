"""
Fitting the four-parameter coverage model
=========================================

``f(x) = x**gamma + x**alpha * (1 - x**delta)**beta`` is fitted to the
normalized group coverage. ``eta = min(alpha, gamma)``: the smaller it is,
the faster coverage rises.
"""
import numpy as np

from inflectnet import FitConfig, FitParams, TokenStream, analyze_text, eval_coverage_model
from inflectnet.fitting import coverage_points, fit_coverage_model
from toy_language import load_toy_paradigms, sample_text, toy_lexicon

# %%
# First a sanity check: a curve drawn from known parameters is recovered.
truth = FitParams(0.3045, 1.3188, 0.2781, 0.4206)
x = np.linspace(0, 1, 500)
res = fit_coverage_model(np.column_stack([x, eval_coverage_model(truth, x)]))
print("recovered:", res.params, "eta", round(res.eta, 4), "converged", res.converged)

# %%
# Two synthetic texts that differ only in how concentrated headword usage is.
paradigms = load_toy_paradigms()
stems, lexicon = toy_lexicon(4000, paradigms, seed=3)
for exponent in (0.9, 1.2):
    tokens = TokenStream(sample_text(stems, paradigms, 51_300, exponent=exponent, seed=5))
    cov = analyze_text(tokens, lexicon).group_coverage
    pts = coverage_points(cov)
    four = fit_coverage_model(pts)
    two = fit_coverage_model(pts, FitConfig(model="two"))
    p = four.params
    print(f"exponent {exponent}: alpha={p.alpha:.4f} beta={p.beta:.4f} gamma={p.gamma_fit:.4f} "
          f"delta={p.delta:.4f} eta={four.eta:.4f} sse={four.sse:.2e} (two-parameter sse {two.sse:.2e})")
