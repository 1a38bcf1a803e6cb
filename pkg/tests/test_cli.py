import json

import pandas as pd
import pytest
from typer.testing import CliRunner

from cli import cli
from core.run_config import read_config_file
from core.types import ExitCode

runner = CliRunner()


def invoke(*args: str):
    return runner.invoke(cli, [str(arg) for arg in args])


def test_rank_writes_every_feature(bccds_like_csv, tmp_path):
    out = tmp_path / "rank.csv"
    result = invoke("rank", "--data", bccds_like_csv, "--out", out)
    assert result.exit_code == ExitCode.SUCCESS
    frame = pd.read_csv(out)
    assert list(frame.columns) == ["rank", "feature_id", "feature_name", "weight"]
    assert frame["rank"].tolist() == list(range(1, 10))
    assert frame["weight"].is_monotonic_decreasing


def test_rank_json(bccds_like_csv, tmp_path):
    out = tmp_path / "rank.json"
    result = invoke("rank", "--data", bccds_like_csv, "--format", "json", "--out", out)
    assert result.exit_code == ExitCode.SUCCESS
    assert len(json.loads(out.read_text())["ordered"]) == 9


def test_select_top_k(bccds_like_csv, tmp_path):
    ranking, selected = tmp_path / "rank.csv", tmp_path / "selected.csv"
    invoke("rank", "--data", bccds_like_csv, "--out", ranking)
    result = invoke("select", "--data", bccds_like_csv, "--top-k", 3, "--out", selected)
    assert result.exit_code == ExitCode.SUCCESS
    frame = pd.read_csv(selected)
    assert list(frame.columns[:-1]) == pd.read_csv(ranking)["feature_name"].tolist()[:3]
    assert frame.columns[-1] == "Classification"
    assert len(frame) == 116


def test_select_needs_k_or_threshold(bccds_like_csv):
    assert invoke("select", "--data", bccds_like_csv).exit_code == ExitCode.CONFIGURATION


def test_k_and_threshold_together(bccds_like_csv):
    result = invoke("select", "--data", bccds_like_csv, "--top-k", 2, "--threshold", 0.1)
    assert result.exit_code == ExitCode.CONFIGURATION


def test_threshold_selecting_nothing(bccds_like_csv):
    result = invoke("select", "--data", bccds_like_csv, "--threshold", 1e9)
    assert result.exit_code == ExitCode.EMPTY_SELECTION


def test_empty_file_is_a_parse_error(write_file):
    assert invoke("rank", "--data", write_file("")).exit_code == ExitCode.PARSE


def test_two_rows_are_not_enough(write_file):
    path = write_file("a,b,label\n1,2,x\n3,4,y\n")
    assert invoke("rank", "--data", path).exit_code == ExitCode.DATA


def test_missing_data_flag():
    assert invoke("rank").exit_code == ExitCode.CONFIGURATION


def test_unknown_selector(bccds_like_csv):
    result = invoke("rank", "--data", bccds_like_csv, "--selector", "lasso")
    assert result.exit_code == ExitCode.CONFIGURATION


def test_unknown_classifier(bccds_like_csv):
    result = invoke(
        "bench", "--data", bccds_like_csv, "--top-k", 3, "--classifiers", "svm"
    )
    assert result.exit_code == ExitCode.CONFIGURATION


def test_bench_writes_csv_and_json(bccds_like_csv, tmp_path):
    out = tmp_path / "bench.csv"
    result = invoke(
        "bench", "--data", bccds_like_csv, "--top-k", 4,
        "--selectors", "cfs,pca", "--normalizers", "mm,l2pn", "--classifiers", "gnb,knn",
        "--folds", 5, "--out", out,
    )
    assert result.exit_code == ExitCode.SUCCESS
    frame = pd.read_csv(out)
    assert len(frame) == 8
    assert "wall_time" not in frame.columns
    assert [f"fold_{i}" for i in range(1, 6)] == [c for c in frame.columns if c.startswith("fold_")]

    report = json.loads(out.with_suffix(".json").read_text())
    assert set(report["topMeanAccuracy"]) == {"cfs", "pca"}
    assert report["metadata"]["config"]["folds"] == 5
    assert report["metadata"]["config"]["classifiers"] == ["gnb", "knn"]


def test_bench_is_byte_identical(bccds_like_csv, tmp_path):
    outputs = []
    for name, jobs in (("first.csv", 1), ("second.csv", 4)):
        out = tmp_path / name
        result = invoke(
            "bench", "--data", bccds_like_csv, "--top-k", 5, "--selectors", "cfs,ig",
            "--classifiers", "dt", "--folds", 4, "--seed", 11, "--n-jobs", jobs, "--out", out,
        )
        assert result.exit_code == ExitCode.SUCCESS
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]


def test_bench_matrix(bccds_like_csv, tmp_path):
    out = tmp_path / "bench.txt"
    result = invoke(
        "bench", "--data", bccds_like_csv, "--top-k", 3, "--selectors", "cfs",
        "--normalizers", "mm", "--classifiers", "gnb", "--folds", 3,
        "--format", "matrix", "--out", out,
    )
    assert result.exit_code == ExitCode.SUCCESS
    assert "TMA" in out.read_text()


def test_config_file_is_overridden_by_flags(bccds_like_csv, tmp_path, write_file):
    config = write_file(
        "# grid\nselectors = cfs\nnormalizers = mm\nclassifiers = gnb\nfolds = 3\ntop-k = 2\n",
        name="run.conf",
    )
    out = tmp_path / "bench.json"
    result = invoke(
        "bench", "--config", config, "--data", bccds_like_csv, "--folds", 4,
        "--format", "json", "--out", out,
    )
    assert result.exit_code == ExitCode.SUCCESS
    metadata = json.loads(out.read_text())["metadata"]
    assert metadata["n_folds"] == 4
    assert metadata["k_features"] == 2


@pytest.mark.parametrize(
    "text", ["colour = blue\n", "folds = 1\n"], ids=["unknown key", "invalid value"]
)
def test_bad_config_file(bccds_like_csv, write_file, text):
    config = write_file(text, name="run.conf")
    result = invoke("rank", "--config", config, "--data", bccds_like_csv)
    assert result.exit_code == ExitCode.CONFIGURATION


def test_summary(ccrfds_like_csv, tmp_path):
    out = tmp_path / "summary.json"
    result = invoke("summary", "--data", ccrfds_like_csv, "--out", out)
    assert result.exit_code == ExitCode.SUCCESS
    summary = json.loads(out.read_text())
    assert summary["nInstances"] == 858
    assert summary["nFeatures"] == 9
    assert summary["nDroppedColumns"] == 26
    assert summary["classCounts"] == [840, 18]


def test_stability(bccds_like_csv, tmp_path):
    out = tmp_path / "stability.json"
    result = invoke(
        "stability", "--data", bccds_like_csv, "--permutations", 3, "--out", out
    )
    assert result.exit_code == ExitCode.SUCCESS
    assert len(json.loads(out.read_text())["taus"]) == 3


def test_flag_names_work_as_config_keys(write_file):
    config = write_file(
        "dataset = btds\nbins = 5\nnorm-scope = global\npermutations = 7\nk = 3\n",
        name="flags.conf",
    )
    assert read_config_file(config) == {
        "dataset_id": "btds",
        "bin_count": "5",
        "normalization_scope": "global",
        "n_permutations": "7",
        "top_k": "3",
    }


def test_rank_reads_bins_from_a_config_file(bccds_like_csv, write_file, tmp_path):
    config = write_file("selector = ig\nbins = 5\n", name="rank.conf")
    out = tmp_path / "rank.csv"
    result = invoke("rank", "--config", config, "--data", bccds_like_csv, "--out", out)
    assert result.exit_code == ExitCode.SUCCESS
    assert len(pd.read_csv(out)) == 9
