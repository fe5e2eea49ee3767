"""A random Latin-like language used by the demo scripts.

Stems are short consonant-vowel strings drawn from a small inventory, so
some stem+ending combinations coincide across headwords, as real
inflected forms sometimes do.
"""
import random

from inflectnet.lexicon import StemEntry, generate_forms, load_paradigms

CONSONANTS = "bcdfglmnprstv"
VOWELS = "aeiou"


def load_toy_paradigms(path="data/toy_paradigms.txt"):
    with open(path, encoding="utf-8") as fh:
        return load_paradigms(fh)


def random_stems(n, paradigms, syllables=(1, 2, 3), seed=0):
    """``n`` stem entries with distinct headword names."""
    rng = random.Random(seed)
    names = sorted(paradigms)
    entries, seen = [], set()
    while len(entries) < n:
        stem = "".join(rng.choice(CONSONANTS) + rng.choice(VOWELS)
                       for _ in range(rng.choice(syllables))) + rng.choice(CONSONANTS)
        paradigm = rng.choice(names)
        headword = stem + paradigms[paradigm].endings[0]
        if headword in seen:
            continue
        seen.add(headword)
        entries.append(StemEntry(headword, stem, paradigm))
    return entries


def toy_lexicon(n_stems, paradigms, seed=0, **kw):
    stems = random_stems(n_stems, paradigms, seed=seed, **kw)
    return stems, generate_forms(stems, paradigms)


def sample_text(stems, paradigms, n_tokens, exponent=1.0, seed=1):
    """Tokens whose headwords follow a Zipf law; forms within a paradigm do too."""
    rng = random.Random(seed)
    order = stems[:]
    rng.shuffle(order)
    head_w = [1.0 / (r + 1) ** exponent for r in range(len(order))]
    tokens = []
    for entry in rng.choices(order, head_w, k=n_tokens):
        endings = paradigms[entry.paradigm].endings
        form_w = [1.0 / (r + 1) for r in range(len(endings))]
        tokens.append(entry.stem + rng.choices(endings, form_w)[0])
    return tokens
