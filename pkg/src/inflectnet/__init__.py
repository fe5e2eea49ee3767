"""Inflection graphs, word groups and vocabulary coverage of inflected texts."""

__version__ = "0.1.0"

from .corpus import (Folding, FrequencyTable, NormalizationConfig, TokenStream, load_text,
                     normalize_text, truncate, word_frequencies)
from .coverage_stats import (CoverageCurve, RankFrequency, coverage, coverage_threshold, digamma,
                             group_occurrences, normalized_coverage, rank_frequency,
                             zipf_coverage)
from .errors import ConfigurationError, DomainError, InputError, LexiconError
from .fitting import (FitConfig, FitParams, FitResult, PowerLawFit, compute_eta,
                      eval_coverage_model, fit_coverage_model, fit_power_law)
from .inflection_graph import (InflectionGraph, SizeHistogram, WordGroup, build_graph,
                               component_size_histogram, connected_components, dictionary_graph,
                               export_graph, headword_degree_distribution)
from .lexicon import (Lexicon, ParadigmTable, StemEntry, UnknownPolicy, analyze, generate_forms,
                      lexicon_stats, load_lexicon, read_lexicon)
from .pipeline import TextAnalysis, analyze_text
