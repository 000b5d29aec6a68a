from typing import Any, Dict

from src.config import Settings
from src.eval import eval_fixture

RESULT_TYPE = Dict[str, Any]


def run(settings: Settings, name: str) -> Dict[str, Any]:
    return eval_fixture(name, settings)


def to_text(result: Dict[str, Any], **_) -> str:
    scores = result["aggregate_scores"]
    lines = [
        f"fixture {result['fixture']} ({result['kind']}): {result['counts']['blocks']} blocks, "
        f"{result['counts']['mismatched']} mismatched",
        f"exact_accuracy={scores['exact_accuracy']} soft_similarity={scores['soft_similarity']}",
    ]
    for block in result["mismatched_blocks"]:
        lines.append(f"mismatch: {block}")
    for noise in result["noise"]:
        lines.append(f"noise after {noise['block']}: {noise['line']}")
    return "\n".join(lines)


def to_rows(result: Dict[str, Any], **_):
    yield ("block", "field", "exact", "soft")
    for block in result["detailed_per_block"]:
        for f in block["per_field"]:
            yield (block["block"], f["field"], f["exact"], f["soft"])
