import pytest

from bmq.config import CORPUS_DIR, DATA_DIR, load_biquandle, load_module, load_vector
from bmq.diagram import read_diagram

# criterion number -> (passed, detail), filled by test_acceptance.py
CRITERIA = {}


def record(number, passed, detail=""):
    CRITERIA[number] = (bool(passed), detail)


def biquandle(name):
    return load_biquandle(DATA_DIR / "biquandles" / f"{name}.json")


def module(name, X):
    return load_module(DATA_DIR / "modules" / f"{name}.json", X)


def corpus(family, name):
    return read_diagram(CORPUS_DIR / family / f"{name}.pdk")


@pytest.fixture(scope="session")
def vectors():
    return {name: load_vector(name) for name in ("flagship", "classical-a", "classical-b", "virtual", "surface")}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA, key=lambda k: (int(str(k).rstrip("abcd")), str(k))):
        passed, detail = CRITERIA[number]
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}"
        terminalreporter.write_line(f"{line}  {detail}" if detail else line)
