import pytest

from src.config import Settings, UNSAFE_BRUTE_GUARD
from src.core import t_step
from src.contexts.residueContext import ResidueClass
from src.errors import DataFileError
from src.utils.fixtures import fixture_path, load_class_fixture, load_list_fixture, parse_header
from src.utils.sharding import shard_map, shard_ranges
from src.utils.text_utils import class_block, clean_text, length_header, normalize_list_line, sigma_header


def test_text_helpers():
    assert clean_text("  7,\xa0 15 \n") == "7, 15"
    assert normalize_list_line(" 7 ,15,  59, ") == "7, 15, 59"
    assert sigma_header(4, 7, 3) == "n=4, sigma=7, z(n)=3"
    assert sigma_header(8, 13, 40, tau=3) == "n=8, sigma=13, A_3(n)=40"
    assert length_header("h", 2) == "h=2"
    assert class_block("h=2", [9], 48) == "h=2\n9\n(mod 48)"


def test_parse_header():
    assert parse_header("h=5", "f", 1) == {"h": 5}
    assert parse_header("n=8, sigma=13, z(n)=85", "f", 1) == {"n": 8, "sigma": 13, "count": 85}
    assert parse_header("n=9, sigma=15, A_4(n)=18", "f", 1) == {"n": 9, "sigma": 15, "tau": 4, "count": 18}
    with pytest.raises(DataFileError):
        parse_header("x=1", "f", 7)


def test_list_fixtures_load():
    rows = load_list_fixture("h_starts")
    assert rows[0] == (9, 14, 7)
    assert rows[-1][0] == 2073
    assert load_list_fixture("t_starts")[-1][0] == 1047


@pytest.mark.parametrize("name,end", [("h_starts", lambda x: x % 4 == 3), ("t_starts", lambda x: x % 8 == 6)])
def test_list_fixture_lines_follow_t(name, end):
    for row in load_list_fixture(name):
        assert all(t_step(a) == b for a, b in zip(row, row[1:])), row[0]
        assert row[-1] == 1 or end(row[-1]), row[0]


def test_corrected_list_fixture_lines():
    h_rows = {row[0]: row for row in load_list_fixture("h_starts")}
    t_rows = {row[0]: row for row in load_list_fixture("t_starts")}
    assert h_rows[1713][-5:] == (5, 8, 4, 2, 1)
    assert h_rows[1809][-2:] == (382, 191)
    assert t_rows[931][-2:] == (524, 262)


def test_class_fixture_noise_is_reported_not_fatal():
    blocks = load_class_fixture("tau_classes")
    noisy = [b for b in blocks if b.noise]
    assert [(b.header, b.noise) for b in noisy] == [("n=9, sigma=15, A_4(n)=18", ("9 15 18",))]
    assert len(noisy[0].residues) == 18


def test_class_fixture_counts_match_headers():
    for block in load_class_fixture("sigma_classes") + load_class_fixture("tau_classes"):
        assert len(block.residues) == block.params["count"], block.header


def test_unknown_fixture_name():
    with pytest.raises(DataFileError):
        fixture_path("8.1")


def test_residue_class():
    c = ResidueClass(3, 12)
    assert 15 in c and 16 not in c
    assert str(c) == "[3]_12"
    assert c.representatives(3, minimum=10) == [15, 27, 39]
    low, high = c.lifts()
    assert (low, high) == (ResidueClass(3, 24), ResidueClass(15, 24))
    assert high.refines(c)
    with pytest.raises(ValueError):
        ResidueClass(12, 12)


def test_shard_ranges():
    assert shard_ranges(10, 3) == [(0, 4), (4, 8), (8, 10)]
    assert shard_ranges(2, 8) == [(0, 1), (1, 2)]
    assert shard_ranges(0, 3) == []


def test_shard_map_keeps_task_order():
    tasks = [(b, 2) for b in range(20)]
    assert shard_map(pow, tasks, threads=1) == [b * b for b in range(20)]
    assert shard_map(pow, tasks, threads=3) == [b * b for b in range(20)]


def test_settings_from_env(monkeypatch):
    monkeypatch.setenv("COLLATZ_THREADS", "4")
    monkeypatch.setenv("COLLATZ_PROGRESS", "yes")
    monkeypatch.setenv("COLLATZ_LOG_LEVEL", "debug")
    monkeypatch.delenv("COLLATZ_SIGMA_GUARD", raising=False)
    settings = Settings.from_env()
    assert settings.threads == 4
    assert settings.progress
    assert settings.log_level == "DEBUG"
    assert settings.sigma_guard == 24


def test_settings_rejects_bad_numbers(monkeypatch):
    monkeypatch.setenv("COLLATZ_BRUTE_GUARD", "lots")
    with pytest.raises(ValueError):
        Settings.from_env()


def test_settings_overrides():
    settings = Settings().with_overrides(threads=3, log_level=None)
    assert settings.threads == 3 and settings.log_level == "WARNING"
    assert Settings().unsafe().brute_guard == UNSAFE_BRUTE_GUARD
