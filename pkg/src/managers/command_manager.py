import csv
import importlib
import io
import logging
from typing import Any, Dict, List, Optional

from pydantic import TypeAdapter

from src.config import Settings
from src.contexts.actionContext import ActionContext
from src.errors import CollatzError, DomainError

logger = logging.getLogger(__name__)

FORMATS = ("text", "json", "csv")


class CommandManager:
    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings.from_env()
        self._actions = {name: spec["module"] for name, spec in ActionContext().actions.items()}

    def list_actions(self) -> List[str]:
        return list(self._actions.keys())

    def describe(self) -> Dict[str, Dict[str, Any]]:
        return ActionContext().actions

    def _module(self, name: str):
        if name not in self._actions:
            raise DomainError(f"unknown command {name!r}; available: {', '.join(self._actions)}")
        return importlib.import_module(self._actions[name])

    def run(self, name: str, /, **params) -> Any:
        mod = self._module(name)
        logger.debug("run %s %s", name, params)
        return mod.run(self.settings, **params)

    def to_jsonable(self, name: str, result: Any) -> Any:
        return TypeAdapter(self._module(name).RESULT_TYPE).dump_python(result, mode="json")

    def parse_json(self, name: str, payload: str) -> Any:
        return TypeAdapter(self._module(name).RESULT_TYPE).validate_json(payload)

    def render(self, name: str, result: Any, /, fmt: str = "text", **params) -> str:
        mod = self._module(name)
        if fmt == "json":
            return TypeAdapter(mod.RESULT_TYPE).dump_json(result, indent=2).decode("utf-8")
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerows(mod.to_rows(result, **params))
            return buf.getvalue().rstrip("\n")
        if fmt == "text":
            return mod.to_text(result, **params)
        raise DomainError(f"unknown format {fmt!r}; choose one of {', '.join(FORMATS)}")

    def execute(self, commands: list) -> list:
        """Run a batch of {"action": ..., "params": {...}} objects; failures become None."""
        results = []
        for command in commands:
            name = command.get("action")
            params = command.get("params") or {}
            try:
                results.append(self.run(name, **params))
            except (CollatzError, TypeError) as e:
                logger.error("command %s failed: %s", name, e)
                results.append(None)
        return results
