import json
from importlib.resources import files

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

SCHEMA_NAMES = ["analysis", "embedding", "graph", "info", "perfect", "report"]


def _load(name: str) -> dict:
    return json.loads(files("diffgraph").joinpath("schemas", f"{name}.schema.json").read_text(encoding="utf-8"))


SCHEMAS = {name: _load(name) for name in SCHEMA_NAMES}
REGISTRY = Registry().with_resources((f"{name}.schema.json", Resource.from_contents(s)) for name, s in SCHEMAS.items())


def validate(name: str, data) -> None:
    """Raise jsonschema.ValidationError when ``data`` does not match the named schema."""
    Draft202012Validator(SCHEMAS[name], registry=REGISTRY).validate(data)


@pytest.fixture
def schema():
    return validate


# -- acceptance summary ------------------------------------------------------------

_ACCEPTANCE: dict[str, tuple[int, str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): one of the numbered acceptance criteria")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or (rep.when != "call" and not rep.failed):
        return
    number, title = marker.args
    status = "PASS" if rep.passed else ("SKIP" if rep.skipped else "FAIL")
    if item.nodeid not in _ACCEPTANCE or status == "FAIL":
        _ACCEPTANCE[item.nodeid] = (number, title, status, rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, title, status, secs in sorted(_ACCEPTANCE.values()):
        terminalreporter.write_line(f"criterion {number:>2}  {status}  {secs:7.2f}s  {title}")
