import csv
import io
import json

import pytest

from src.config import Settings
from src.contexts.actionContext import ActionContext
from src.errors import DomainError
from src.managers.command_manager import CommandManager

REGISTRY = ActionContext().actions


@pytest.fixture(scope="module")
def manager():
    return CommandManager(Settings(brute_cross_check=2 ** 12))


@pytest.mark.parametrize("name", sorted(REGISTRY))
def test_registry_example_renders_in_every_format(manager, name):
    example = REGISTRY[name]["example"]
    assert example["action"] == name
    params = example["params"]
    result = manager.run(name, **params)

    assert manager.render(name, result, "text", **params).strip()
    rows = list(csv.reader(io.StringIO(manager.render(name, result, "csv", **params))))
    assert len(rows) >= 2
    assert all(len(row) == len(rows[0]) for row in rows)
    payload = manager.render(name, result, "json", **params)
    assert json.loads(payload) == manager.to_jsonable(name, result)


def test_json_round_trip_of_decomposition(manager):
    result = manager.run("decompose", s=27)
    assert manager.parse_json("decompose", manager.render("decompose", result, "json")) == result


def test_unknown_command_and_format(manager):
    with pytest.raises(DomainError):
        manager.run("nope")
    with pytest.raises(DomainError):
        manager.render("sigma", 59, "xml")


def test_execute_batch(manager):
    results = manager.execute([
        {"action": "sigma", "params": {"s": 27}},
        {"action": "sigma", "params": {"s": 1}},
        {"action": "traj", "params": {"s": 4}},
    ])
    assert results == [59, None, [4, 2, 1]]
