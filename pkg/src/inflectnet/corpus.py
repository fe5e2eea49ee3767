"""Text normalization, tokenization and word counts.

Lowercases the text and treats every character that is not a letter (and,
depending on the config, digits and punctuation) as a token boundary, so
``"a.C."`` becomes two tokens rather than the nonword ``"ac"``.
"""
from __future__ import annotations

import unicodedata
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterator, Mapping

from .errors import InputError

__all__ = [
    "Folding",
    "NormalizationConfig",
    "TokenStream",
    "FrequencyTable",
    "normalize_text",
    "normalize_word",
    "read_text",
    "load_text",
    "truncate",
    "word_frequencies",
    "REFERENCE_LENGTH",
]

#: Running-word length every text was cut to in the original study.
REFERENCE_LENGTH = 51_300


class Folding(str, Enum):
    NONE = "none"
    U_V_AND_I_J = "u_v_and_i_j"


@dataclass(frozen=True)
class NormalizationConfig:
    """How raw text is turned into tokens.

    Lowercasing is always applied. Characters are classified by their
    Unicode general category: letters and combining marks are kept, digits
    (``N*``) and punctuation (``P*``) are kept only if the corresponding
    strip flag is off, and everything else separates tokens.
    """

    strip_digits: bool = True
    strip_punctuation: bool = True
    orthography_folding: Folding = Folding.NONE

    def __post_init__(self):
        object.__setattr__(self, "orthography_folding", Folding(self.orthography_folding))

    @property
    def lowercase(self) -> bool:
        return True


DEFAULT_CONFIG = NormalizationConfig()

_FOLD_TABLE = str.maketrans({"v": "u", "j": "i"})


class _CharMap(dict):
    """``str.translate`` table: separators map to a space, the rest to themselves."""

    def __init__(self, cfg: NormalizationConfig):
        super().__init__()
        self.cfg = cfg

    def __missing__(self, codepoint):
        ch = chr(codepoint)
        cat = unicodedata.category(ch)[0]
        if cat in ("L", "M"):
            keep = True
        elif cat == "N":
            keep = not self.cfg.strip_digits
        elif cat == "P":
            keep = not self.cfg.strip_punctuation
        else:
            keep = False
        out = ch if keep else " "
        self[codepoint] = out
        return out


_CHARMAPS: dict[NormalizationConfig, _CharMap] = {}


def _charmap(cfg: NormalizationConfig) -> _CharMap:
    table = _CHARMAPS.get(cfg)
    if table is None:
        table = _CHARMAPS[cfg] = _CharMap(cfg)
    return table


@dataclass(frozen=True)
class TokenStream:
    """Ordered tokens of one text.

    ``original_token_count`` is the length before any truncation.
    """

    tokens: tuple[str, ...]
    source_name: str = "<text>"
    original_token_count: int = -1

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if self.original_token_count < 0:
            object.__setattr__(self, "original_token_count", len(self.tokens))

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[str]:
        return iter(self.tokens)

    def __getitem__(self, i):
        return self.tokens[i]

    def distinct(self) -> frozenset[str]:
        return frozenset(self.tokens)


@dataclass(frozen=True)
class FrequencyTable:
    """Occurrence counts keyed by word (or by group id).

    ``skipped`` counts tokens that could not be assigned a key; they are not
    part of ``total``.
    """

    entries: Mapping
    total: int
    skipped: int = 0

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, key) -> int:
        return self.entries[key]

    def items(self):
        return self.entries.items()


def normalize_text(raw: str | bytes, cfg: NormalizationConfig | None = None,
                   source_name: str = "<text>") -> TokenStream:
    """Split raw text into lowercase tokens.

    >>> normalize_text("Anno 44 a.C.!").tokens
    ('anno', 'a', 'c')
    """
    if isinstance(raw, (bytes, bytearray)):
        raw = _decode(bytes(raw))
    cfg = cfg or DEFAULT_CONFIG
    text = unicodedata.normalize("NFC", raw.lower())
    if cfg.orthography_folding is Folding.U_V_AND_I_J:
        text = text.translate(_FOLD_TABLE)
    tokens = tuple(text.translate(_charmap(cfg)).split())
    return TokenStream(tokens, source_name, len(tokens))


def normalize_word(word: str, cfg: NormalizationConfig | None = None) -> str | None:
    """Normalize a single lexicon entry; None unless it yields exactly one token."""
    tokens = normalize_text(word, cfg).tokens
    return tokens[0] if len(tokens) == 1 else None


def _decode(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise InputError(f"invalid UTF-8 at byte offset {exc.start}", offset=exc.start) from None


def read_text(path: str | Path) -> str:
    """Read a UTF-8 file; decoding failures raise InputError with the byte offset."""
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return _decode(data)
    except InputError as exc:
        raise InputError(f"{path}: {exc}", offset=exc.offset) from None


def load_text(path: str | Path, cfg: NormalizationConfig | None = None) -> TokenStream:
    path = Path(path)
    return normalize_text(read_text(path), cfg, source_name=path.stem)


def truncate(ts: TokenStream, n: int) -> TokenStream:
    """First ``min(n, len(ts))`` tokens of the stream."""
    if n < 0:
        raise ValueError(f"truncation length must be nonnegative, got {n}")
    return TokenStream(ts.tokens[:n], ts.source_name, ts.original_token_count)


def word_frequencies(ts: TokenStream) -> FrequencyTable:
    counts = Counter(ts.tokens)
    return FrequencyTable(dict(counts), len(ts.tokens))
