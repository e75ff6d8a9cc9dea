import json

import pytest
from click.testing import CliRunner

from jsjcube import __version__
from jsjcube.cli import main
from jsjcube.complex.fixtures import fix_d33
from jsjcube.config.config import Configs
from jsjcube.io.tgg import emit_tgg, parse_tgg

from .conftest import DCOMM_TGG

TUBE_WORD = "a/0 a/1 b/0 b/1 -a/1 -a/0 -b/1 -b/0"


@pytest.fixture
def runner():
    return CliRunner()


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def test_version(runner):
    result = runner.invoke(main, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_validate(runner, dcomm_file, d33_gog_file):
    assert runner.invoke(main, ["validate", str(dcomm_file)]).exit_code == 0
    assert runner.invoke(main, ["validate", str(d33_gog_file)]).exit_code == 0


def test_parse_error_exit_code(runner, tmp_path):
    path = _write(tmp_path, "bad.tgg", "vgraph A\n  v o\n")
    assert runner.invoke(main, ["validate", path]).exit_code == 2


def test_bm(runner, dcomm_file, tmp_path):
    assert runner.invoke(main, ["bm", str(dcomm_file)]).exit_code == 0
    thin = _write(tmp_path, "thin.tgg", DCOMM_TGG.replace("a b -a -b", "a b").replace("tube T 4", "tube T 2"))
    assert runner.invoke(main, ["bm", thin]).exit_code == 3


def test_gog_is_not_a_complex(runner, d33_gog_file):
    assert runner.invoke(main, ["bm", str(d33_gog_file)]).exit_code == 2


def test_jsj_of_closed_surface(runner, dcomm_file):
    assert runner.invoke(main, ["jsj", str(dcomm_file)]).exit_code == 4


def test_relative_jsj_preconditions(runner):
    assert runner.invoke(main, ["relative-jsj", "--rank", "1", "--word", "a"]).exit_code == 3
    assert runner.invoke(main, ["relative-jsj", "--rank", "2", "--word", "a"]).exit_code == 3
    assert runner.invoke(main, ["relative-jsj", "--rank", "2", "--word", "ac"]).exit_code == 3


def test_general_jsj_of_free_vertex(runner, tmp_path):
    path = _write(tmp_path, "free.gog", "v A rank 2\n")
    assert runner.invoke(main, ["general-jsj", path]).exit_code == 3


def test_classify(runner, dcomm_file, tmp_path):
    out = tmp_path / "record.json"
    result = runner.invoke(
        main, ["classify", str(dcomm_file), "--graph", "A", "--word", TUBE_WORD, "-o", str(out)]
    )
    assert result.exit_code == 0
    record = json.loads(out.read_text(encoding="utf-8"))
    assert record["K"] == 2
    assert record["splitting"] is True


@pytest.mark.slow
def test_open_writes_a_complex(runner, dcomm_file, tmp_path):
    out = tmp_path / "opened.tgg"
    result = runner.invoke(
        main, ["open", str(dcomm_file), "--graph", "A", "--word", TUBE_WORD, "-o", str(out)]
    )
    assert result.exit_code == 0
    X = parse_tgg(out.read_text(encoding="utf-8"))
    assert len(X.vertex_graphs) > 2


@pytest.mark.slow
def test_cycles(runner, dcomm_file, tmp_path):
    out = tmp_path / "cycles.yaml"
    result = runner.invoke(
        main, ["cycles", str(dcomm_file), "--max-len", "4", "--format", "yaml", "-o", str(out)]
    )
    assert result.exit_code == 0
    text = out.read_text(encoding="utf-8")
    assert "max_len: 4" in text
    assert "truncated: true" in text


@pytest.fixture
def d33_file(tmp_path):
    return _write(tmp_path, "d33.tgg", emit_tgg(fix_d33()))


@pytest.fixture
def restore_threads():
    threads = Configs.basic_config.threads
    yield
    Configs.basic_config.pin(threads=threads)


def _run_with_threads(runner, tmp_path, args, threads):
    out = tmp_path / f"out-{threads}.txt"
    result = runner.invoke(main, [*args, "--threads", str(threads), "-o", str(out)])
    assert result.exit_code == 0, result.output
    return out.read_bytes()


@pytest.mark.slow
@pytest.mark.parametrize(
    "command",
    [
        ["cycles", "{dcomm}", "--max-len", "8"],
        ["cycles", "{d33}", "--max-len", "8", "--format", "yaml"],
        ["jsj", "{d33}", "--max-cycle-len", "8"],
        ["relative-jsj", "--rank", "2", "--word", "abAB"],
        ["general-jsj", "{gog}"],
    ],
)
def test_output_does_not_depend_on_threads(
    runner, tmp_path, dcomm_file, d33_file, d33_gog_file, restore_threads, command
):
    paths = {"dcomm": str(dcomm_file), "d33": d33_file, "gog": str(d33_gog_file)}
    args = [arg.format(**paths) for arg in command]
    single = _run_with_threads(runner, tmp_path, args, 1)
    pooled = _run_with_threads(runner, tmp_path, args, 4)
    assert single
    assert single == pooled
