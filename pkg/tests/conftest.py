from __future__ import annotations

import contextlib
import io
from pathlib import Path
from typing import NamedTuple

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "featureclouds",
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile("featureclouds")

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


class CliResult(NamedTuple):
    code: int
    out: str
    err: str


def invoke_cli(*args: str) -> CliResult:
    """Run the CLI in-process, capturing streams and the exit code."""
    from featureclouds.cli import run

    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = run(list(args))
    return CliResult(code, out.getvalue(), err.getvalue())


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def cli():
    return invoke_cli
