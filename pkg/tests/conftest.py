from __future__ import annotations

import json
from pathlib import Path

import pytest

from dpacheck.catalog import default_catalog_path, load_catalog
from dpacheck.conllu import ingest_conllu
from dpacheck.engine import MatcherConfig
from dpacheck.lexres import load_resources
from dpacheck.model import PartyMap

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def res():
    return load_resources()


@pytest.fixture(scope="session")
def catalog():
    return load_catalog(default_catalog_path())


@pytest.fixture(scope="session")
def cfg():
    return MatcherConfig()


@pytest.fixture(scope="session")
def fig1_parties():
    raw = json.loads((FIXTURES / "fig1.parties.json").read_text())
    return PartyMap.make(controller=raw["controller"], processor=raw["processor"])


@pytest.fixture(scope="session")
def fig1_doc(fig1_parties):
    return ingest_conllu((FIXTURES / "fig1.conllu").read_text(), fig1_parties, doc_id="fig1")


@pytest.fixture(scope="session")
def table5_doc(fig1_parties):
    return ingest_conllu((FIXTURES / "table5.conllu").read_text(), fig1_parties, doc_id="table5")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            name = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in name:
                number = int(name.split("test_criterion_")[1].split("_")[0])
                outcomes[number] = status
    if not outcomes:
        return
    try:
        from test_acceptance import CRITERIA
    except ImportError:
        CRITERIA = {}
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(outcomes):
        verdict = "PASS" if outcomes[number] == "passed" else "FAIL"
        description = CRITERIA.get(number, "")
        terminalreporter.write_line(f"criterion {number}: {verdict} — {description}")
