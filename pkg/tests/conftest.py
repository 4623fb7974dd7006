import logging

import pytest

from click.testing import CliRunner

from steiner_ecc import build_tree, generate
from steiner_ecc.config import load_config


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run exhaustive and scaling tests"
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def star5():
    return generate("star", 5)


@pytest.fixture
def path5():
    return generate("path", 5)


@pytest.fixture
def spider321():
    """Center 0 with legs 1-2-3, 4-5 and 6"""
    return generate("spider", 7, {"legs": [3, 2, 1]})


@pytest.fixture
def caterpillar():
    #        5   6
    #        |   |
    #    0 - 1 - 2 - 3
    #                |
    #                4
    return build_tree([(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 6)])


@pytest.fixture
def settings(monkeypatch):
    for name in ("STEINER_ECC_SETTINGS", "STEINER_ECC_BUDGET", "STEINER_ECC_FORMAT"):
        monkeypatch.delenv(name, raising=False)
    return load_config()


@pytest.fixture
def runner(monkeypatch):
    monkeypatch.delenv("STEINER_ECC_SETTINGS", raising=False)
    monkeypatch.delenv("STEINER_ECC_BUDGET", raising=False)
    return CliRunner(mix_stderr=False)


@pytest.fixture
def edge_file(tmp_path):
    def write(text, name="tree.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


@pytest.fixture(autouse=True)
def package_logger():
    """Undo what the command line does to the package logger"""
    logger = logging.getLogger("steiner_ecc")
    yield logger
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)
    logger.propagate = True
