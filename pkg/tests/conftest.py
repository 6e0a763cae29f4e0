import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
sys.path.insert(0, str(Path(__file__).parent / "golden"))

from gracelab.transform import Transformation  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = Path(__file__).parent / "golden"


def random_map(rng, n):
    return Transformation(tuple(rng.randrange(n) for _ in range(n)))


@pytest.fixture
def rng():
    return random.Random(20200815)


_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _criteria[value] = report.outcome


@pytest.fixture
def criterion(request):
    def record(number, text):
        request.node.user_properties.append(("criterion", f"{number:>2}. {text}"))
    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: int(s.split(".")[0])):
        outcome = "PASS" if _criteria[name] == "passed" else "FAIL"
        terminalreporter.write_line(f"[{outcome}] {name}")
