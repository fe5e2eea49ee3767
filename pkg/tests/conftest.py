import pytest

from inflectnet.corpus import TokenStream
from inflectnet.lexicon import load_lexicon

MINI_LEXICON_TSV = """\
# mini lexicon: dico, tollo, suffero, aqua
dico\tdico
dicunt\tdico
dixit\tdico
tollo\ttollo
tollit\ttollo
sublatus\ttollo,suffero
suffero\tsuffero
aqua\taqua
aquam\taqua
"""

MINI_TOKENS = ("dicunt", "dixit", "dicunt", "aqua", "sublatus", "aqua", "aquam", "tollit")
MINI_TEXT = "Dicunt, dixit; dicunt aqua. Sublatus aqua aquam tollit!"


@pytest.fixture
def mini_lexicon():
    return load_lexicon(MINI_LEXICON_TSV)


@pytest.fixture
def mini_tokens():
    return TokenStream(MINI_TOKENS, "mini")


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_report():
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""
    def record(name, ok, detail=""):
        _ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else ""))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    skipped = [r for r in terminalreporter.stats.get("skipped", [])
               if "test_acceptance" in r.nodeid]
    if _ACCEPTANCE_LINES or skipped:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
        for rep in skipped:
            reason = rep.longrepr[2] if isinstance(rep.longrepr, tuple) else ""
            terminalreporter.write_line(f"[SKIP] {rep.nodeid.split('::')[-1]}: {reason}")
