import os
import pathlib
import shutil

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def corpus():
    return ROOT / "tests" / "corpus"


@pytest.fixture(scope="session")
def schema():
    import json

    return json.loads((ROOT / "schema" / "result.schema.json").read_text())


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("PREFASP_CLI") or shutil.which("prefasp")
    if not path or not pathlib.Path(path).exists():
        pytest.skip("prefasp executable not available")
    return path
