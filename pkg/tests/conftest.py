import sys

import pytest

from sepclass import ClassSpec, Overpartition, Partition


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None) if mod else None
    if lines:
        terminalreporter.ensure_newline()
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


def P(*parts):
    return Partition(tuple(parts))


def op(text, convention):
    """Parse '2~,1,1~' into an Overpartition (~ marks an overline)."""
    parts = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok.endswith("~"):
            parts.append((int(tok[:-1]), True))
        else:
            parts.append((int(tok), False))
    return Overpartition(tuple(parts), convention)


def op_set(texts, convention):
    return {op(t, convention) for t in texts}


@pytest.fixture
def sample_specs():
    """A small cross-section of the verification grid."""
    return [
        ClassSpec("P", a=1, b=2, k=2, r=1),
        ClassSpec("P", a=2, b=3, k=4, r=2),
        ClassSpec("Pprime", a=1, b=2, k=2, r=2),
        ClassSpec("Pprime", a=1, b=3, k=3, r=3),
        ClassSpec("R", a=1, b=2, c=3, k=3),
        ClassSpec("R", a=2, b=3, c=4, k=4),
        ClassSpec("Rr", a=2, b=3, c=4, k=4, r=2),
        ClassSpec("Rr", a=1, b=2, c=3, k=4, r=3),
        ClassSpec("Fbar"),
        ClassSpec("Lbar"),
        ClassSpec("Fr", r=2),
        ClassSpec("Lr", r=2),
        ClassSpec("Fr", r=3),
        ClassSpec("Lr", r=3),
    ]
