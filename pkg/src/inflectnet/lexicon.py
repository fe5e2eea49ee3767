"""The form -> headword relation.

A :class:`Lexicon` is either read from a tab-separated file (typically the
output of an external morphological analyzer) or generated exhaustively
from stems and suffix paradigms. The paradigm engine is plain stem + ending
concatenation: no stem alternation, no irregulars.

File formats
------------
Lexicon::

    # comment
    sublatus<TAB>tollo,suffero

Paradigms, with ``-`` standing for the empty ending::

    [first]
    a
    am
    ae

Stems::

    aqua<TAB>aqu<TAB>first
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import IO, Iterable, Mapping

from .corpus import NormalizationConfig, normalize_word
from .errors import ConfigurationError, LexiconError

__all__ = [
    "Lexicon",
    "UnknownPolicy",
    "ParadigmTable",
    "StemEntry",
    "load_lexicon",
    "read_lexicon",
    "dump_lexicon",
    "load_paradigms",
    "load_stems",
    "analyze",
    "generate_forms",
    "lexicon_stats",
]


class UnknownPolicy(str, Enum):
    """What to do with a token the lexicon does not know.

    ``SELF_HEADWORD`` makes the token its own headword (and so its own word
    group), which keeps every running word countable. ``DROP`` removes it.
    """

    SELF_HEADWORD = "self_headword"
    DROP = "drop"

    @classmethod
    def parse(cls, value) -> "UnknownPolicy":
        if isinstance(value, cls):
            return value
        if value == "self":
            return cls.SELF_HEADWORD
        return cls(value)


@dataclass(frozen=True)
class Lexicon:
    analyses: Mapping[str, frozenset[str]]

    def __post_init__(self):
        frozen = {}
        for form, heads in self.analyses.items():
            heads = frozenset(heads)
            if not heads:
                raise LexiconError(f"form {form!r} has no headword")
            frozen[form] = heads
        object.__setattr__(self, "analyses", frozen)

    @property
    def form_count(self) -> int:
        return len(self.analyses)

    @property
    def headword_count(self) -> int:
        return len(self.headwords())

    def headwords(self) -> frozenset[str]:
        out: set[str] = set()
        for heads in self.analyses.values():
            out.update(heads)
        return frozenset(out)

    def __contains__(self, form) -> bool:
        return form in self.analyses

    def __len__(self) -> int:
        return len(self.analyses)


@dataclass(frozen=True)
class ParadigmTable:
    name: str
    endings: tuple[str, ...]

    def __post_init__(self):
        endings = tuple(self.endings)
        if not endings:
            raise LexiconError(f"paradigm {self.name!r} has no endings")
        seen = set()
        for e in endings:
            if e in seen:
                raise LexiconError(f"paradigm {self.name!r}: duplicate ending {e!r}")
            seen.add(e)
        object.__setattr__(self, "endings", endings)


@dataclass(frozen=True)
class StemEntry:
    headword: str
    stem: str
    paradigm: str


def _lines(source) -> Iterable[str]:
    # a plain string is file content, not a path
    if isinstance(source, str):
        return source.splitlines()
    return source


def _records(source) -> Iterable[tuple[int, str]]:
    for lineno, line in enumerate(_lines(source), start=1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield lineno, line


def _norm(word: str, cfg, lineno, what) -> str:
    out = normalize_word(word, cfg)
    if out is None:
        raise LexiconError(f"{what} {word!r} does not normalize to a single token", lineno)
    return out


def load_lexicon(source, cfg: NormalizationConfig | None = None) -> Lexicon:
    """Parse ``form<TAB>headword[,headword...]`` records.

    ``source`` is an open text file, any iterable of lines, or a string
    holding the whole file. Forms and headwords go through the same
    normalization as corpus tokens. Repeated pairs are merged.
    """
    analyses: dict[str, set[str]] = defaultdict(set)
    for lineno, line in _records(source):
        form, sep, rest = line.partition("\t")
        if not sep:
            raise LexiconError("expected form<TAB>headword[,headword...]", lineno)
        if not form.strip():
            raise LexiconError("empty form field", lineno)
        heads = [h.strip() for h in rest.split(",")]
        if not rest.strip() or not all(heads):
            raise LexiconError(f"empty headword field for {form.strip()!r}", lineno)
        form = _norm(form, cfg, lineno, "form")
        analyses[form].update(_norm(h, cfg, lineno, "headword") for h in heads)
    return Lexicon(analyses)


def read_lexicon(path: str | Path, cfg: NormalizationConfig | None = None) -> Lexicon:
    with open(path, encoding="utf-8") as fh:
        return load_lexicon(fh, cfg)


def dump_lexicon(lex: Lexicon, sink: IO[str]) -> None:
    """Write ``lex`` in the format :func:`load_lexicon` reads, sorted by form."""
    for form in sorted(lex.analyses):
        sink.write(f"{form}\t{','.join(sorted(lex.analyses[form]))}\n")


def load_paradigms(source) -> dict[str, ParadigmTable]:
    tables: dict[str, list[str]] = {}
    current = None
    for lineno, line in _records(source):
        line = line.strip()
        if line.startswith("["):
            if not line.endswith("]") or len(line) < 3:
                raise LexiconError(f"bad section header {line!r}", lineno)
            current = line[1:-1].strip()
            if current in tables:
                raise LexiconError(f"paradigm {current!r} defined twice", lineno)
            tables[current] = []
            continue
        if current is None:
            raise LexiconError("ending outside of a [paradigm] section", lineno)
        ending = "" if line == "-" else line.lower()
        if ending in tables[current]:
            raise LexiconError(f"paradigm {current!r}: duplicate ending {line!r}", lineno)
        tables[current].append(ending)
    return {name: ParadigmTable(name, tuple(endings)) for name, endings in tables.items()}


def load_stems(source) -> list[StemEntry]:
    entries = []
    for lineno, line in _records(source):
        fields = [f.strip() for f in line.split("\t")]
        if len(fields) != 3 or not fields[0] or not fields[2]:
            raise LexiconError("expected headword<TAB>stem<TAB>paradigm", lineno)
        entries.append(StemEntry(*fields))
    return entries


def analyze(lex: Lexicon, form: str,
            policy: UnknownPolicy = UnknownPolicy.SELF_HEADWORD) -> frozenset[str]:
    """Headwords ``form`` may realize.

    Unknown forms are their own headword under ``SELF_HEADWORD`` and have
    none under ``DROP``.
    """
    heads = lex.analyses.get(form)
    if heads is not None:
        return heads
    if UnknownPolicy.parse(policy) is UnknownPolicy.DROP:
        return frozenset()
    return frozenset((form,))


def generate_forms(stems: Iterable[StemEntry],
                   paradigms: Mapping[str, ParadigmTable] | Iterable[ParadigmTable],
                   cfg: NormalizationConfig | None = None) -> Lexicon:
    """Every stem+ending form of every stem entry, mapped to its headword.

    Forms produced by more than one headword end up ambiguous, which is what
    links headwords together in the dictionary graph. No attestation check
    is made.
    """
    if not isinstance(paradigms, Mapping):
        paradigms = {p.name: p for p in paradigms}
    analyses: dict[str, set[str]] = defaultdict(set)
    for entry in stems:
        table = paradigms.get(entry.paradigm)
        if table is None:
            raise ConfigurationError(
                f"stem {entry.stem!r} of {entry.headword!r} uses unknown paradigm {entry.paradigm!r}")
        head = normalize_word(entry.headword, cfg)
        if head is None:
            raise ConfigurationError(f"headword {entry.headword!r} is not a single token")
        for ending in table.endings:
            form = normalize_word(entry.stem + ending, cfg)
            if form is None:
                raise ConfigurationError(
                    f"{entry.stem!r}+{ending!r} does not give a single-token form")
            analyses[form].add(head)
    return Lexicon(analyses)


def lexicon_stats(lex: Lexicon) -> tuple[int, int]:
    """``(headword_count, form_count)``."""
    return lex.headword_count, lex.form_count
