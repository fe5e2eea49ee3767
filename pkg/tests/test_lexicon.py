import io

import pytest
from hypothesis import given, strategies as st

from inflectnet.corpus import Folding, NormalizationConfig
from inflectnet.errors import ConfigurationError, LexiconError
from inflectnet.lexicon import (Lexicon, ParadigmTable, StemEntry, UnknownPolicy, analyze,
                                dump_lexicon, generate_forms, lexicon_stats, load_lexicon,
                                load_paradigms, load_stems, read_lexicon)


def test_load_multi_headword():
    lex = load_lexicon("sublatus\ttollo,suffero\n")
    assert lex.analyses["sublatus"] == {"tollo", "suffero"}


def test_duplicates_merge():
    lex = load_lexicon("aqua\taqua\naqua\taqua\n")
    assert lex.analyses == {"aqua": frozenset({"aqua"})}
    lex = load_lexicon("sublatus\ttollo\nsublatus\tsuffero\n")
    assert lex.analyses["sublatus"] == {"tollo", "suffero"}


@pytest.mark.parametrize("text, line", [
    ("dicunt\t\n", 1),
    ("aqua\taqua\n# c\ndicunt\n", 3),
    ("aqua\taqua\ndicunt\tdico,\n", 2),
    ("\tdico\n", 1),
    ("a.b\tdico\n", 1),
])
def test_malformed_lines(text, line):
    with pytest.raises(LexiconError) as info:
        load_lexicon(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_normalized_like_corpus():
    lex = load_lexicon("Dicunt\tDICO\n")
    assert lex.analyses == {"dicunt": frozenset({"dico"})}
    folded = NormalizationConfig(orthography_folding=Folding.U_V_AND_I_J)
    assert load_lexicon("vivit\tvivo\n", folded).analyses == {"uiuit": frozenset({"uiuo"})}


def test_analyze(mini_lexicon):
    assert analyze(mini_lexicon, "dicunt") == {"dico"}
    assert analyze(mini_lexicon, "sublatus") == {"tollo", "suffero"}
    assert analyze(mini_lexicon, "xyzzy") == {"xyzzy"}
    assert analyze(mini_lexicon, "xyzzy", UnknownPolicy.DROP) == frozenset()
    assert analyze(mini_lexicon, "xyzzy", "drop") == frozenset()
    assert analyze(mini_lexicon, "xyzzy", "self") == {"xyzzy"}


def test_stats(mini_lexicon):
    assert lexicon_stats(mini_lexicon) == (4, 9)
    assert lexicon_stats(Lexicon({})) == (0, 0)


def test_empty_headword_set_rejected():
    with pytest.raises(LexiconError):
        Lexicon({"aqua": set()})


def test_round_trip(mini_lexicon, tmp_path):
    buf = io.StringIO()
    dump_lexicon(mini_lexicon, buf)
    assert load_lexicon(buf.getvalue()) == mini_lexicon
    path = tmp_path / "lex.tsv"
    path.write_text(buf.getvalue(), encoding="utf-8")
    assert read_lexicon(path) == mini_lexicon


PARADIGMS = """\
# toy paradigms
[first]
a
am
ae

[bare]
-
"""


def test_paradigm_file():
    tables = load_paradigms(PARADIGMS)
    assert tables["first"].endings == ("a", "am", "ae")
    assert tables["bare"].endings == ("",)


@pytest.mark.parametrize("text", [
    "[x]\na\na\n",
    "a\n[x]\nb\n",
    "[x]\na\n[x]\nb\n",
    "[x]\n",
])
def test_bad_paradigm_files(text):
    with pytest.raises(LexiconError):
        load_paradigms(text)


def test_paradigm_table_invariants():
    with pytest.raises(LexiconError):
        ParadigmTable("x", ())
    with pytest.raises(LexiconError):
        ParadigmTable("x", ("a", "a"))


def test_stems_file():
    stems = load_stems("aqua\taqu\tfirst\n# comment\nvia\tvi\tfirst\n")
    assert stems == [StemEntry("aqua", "aqu", "first"), StemEntry("via", "vi", "first")]
    with pytest.raises(LexiconError, match="line 1"):
        load_stems("aqua\taqu\n")


def test_generate_concatenation():
    tables = load_paradigms(PARADIGMS)
    lex = generate_forms([StemEntry("aqua", "aqu", "first")], tables)
    assert lex.analyses == {f: frozenset({"aqua"}) for f in ("aqua", "aquam", "aquae")}


def test_generate_collision():
    first = ParadigmTable("first", ("a", "am", "ae"))
    third = ParadigmTable("third", ("ae", "is"))
    lex = generate_forms([StemEntry("aqua", "aqu", "first"), StemEntry("aquis", "aqu", "third")],
                         [first, third])
    assert lex.analyses["aquae"] == {"aqua", "aquis"}
    assert lex.analyses["aquam"] == {"aqua"}


def test_generate_empty_ending():
    lex = generate_forms([StemEntry("et", "et", "bare")], load_paradigms(PARADIGMS))
    assert lex.analyses == {"et": frozenset({"et"})}


def test_generate_unknown_paradigm():
    with pytest.raises(ConfigurationError, match="nowhere"):
        generate_forms([StemEntry("aqua", "aqu", "nowhere")], load_paradigms(PARADIGMS))


stem_st = st.text(alphabet="abcdeilmnorstu", min_size=1, max_size=4)
endings_st = st.lists(st.text(alphabet="aeimosu", max_size=3), min_size=1, max_size=5, unique=True)


@given(st.lists(st.tuples(stem_st, stem_st, st.integers(0, 2)), min_size=1, max_size=20),
       st.lists(endings_st, min_size=3, max_size=3))
def test_generated_forms_analyze_back(entries, endings):
    tables = {f"p{i}": ParadigmTable(f"p{i}", tuple(e)) for i, e in enumerate(endings)}
    stems = [StemEntry(h, s, f"p{k}") for h, s, k in entries]
    lex = generate_forms(stems, tables)
    for entry in stems:
        for ending in tables[entry.paradigm].endings:
            assert entry.headword in analyze(lex, entry.stem + ending)


@given(st.dictionaries(st.text(alphabet="abcdefgh", min_size=1, max_size=5),
                       st.sets(st.text(alphabet="xyz", min_size=1, max_size=3), min_size=1, max_size=3),
                       max_size=30))
def test_round_trip_property(mapping):
    lex = Lexicon(mapping)
    buf = io.StringIO()
    dump_lexicon(lex, buf)
    assert load_lexicon(buf.getvalue()) == lex
    for form in mapping:
        assert analyze(lex, form)
    assert analyze(lex, "qqq")
