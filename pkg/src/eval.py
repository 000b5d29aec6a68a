import logging
from difflib import SequenceMatcher
from typing import Any, Dict, List, Optional, Sequence

from src.config import Settings
from src.errors import DomainError
from src.contexts.subsequenceContext import SubsequenceKind
from src.managers.enumeration_manager import EnumerationManager
from src.managers.stopping_manager import StoppingManager
from src.subseq import first_subsequences
from src.utils.fixtures import FixtureBlock, load_class_fixture, load_list_fixture
from src.utils.text_utils import join_ints

logger = logging.getLogger(__name__)

# fixture -> what its blocks list
FIXTURE_KIND = {
    "h_starts": "h-subsequences",
    "t_starts": "t-subsequences",
    "h_classes": "h-length-classes",
    "t_classes": "t-length-classes",
    "sigma_classes": "sigma-classes",
    "tau_classes": "tau-classes",
}


def _soft_ratio(a: Optional[str], b: Optional[str]) -> float:
    if not a and not b:
        return 1.0
    if not a or not b:
        return 0.0
    return SequenceMatcher(None, a, b).ratio()


def _jaccard(a: Sequence[int], b: Sequence[int]) -> float:
    sa, sb = set(a), set(b)
    if not sa and not sb:
        return 1.0
    return len(sa & sb) / len(sa | sb)


def _mean(xs: List[float]) -> float:
    return round(sum(xs) / len(xs), 4) if xs else 0.0


def _eval_lists(name: str, settings: Settings) -> Dict[str, Any]:
    expected = load_list_fixture(name)
    kind = SubsequenceKind.H if name == "h_starts" else SubsequenceKind.T
    limit = max(row[0] for row in expected)
    generated = {sub.start: sub.terms for sub in first_subsequences(kind, limit, settings.trajectory_cap)}

    per_block = []
    for row in expected:
        got = generated.get(row[0])
        exact = 1.0 if got == row else 0.0
        soft = _soft_ratio(join_ints(row), join_ints(got) if got else None)
        per_block.append({
            "block": str(row[0]),
            "per_field": [{"field": "terms", "exact": exact, "soft": round(soft, 4)}],
        })
    missing = sorted(set(generated) - {row[0] for row in expected})
    return {"per_block": per_block, "noise": [], "unexpected": [str(s) for s in missing]}


def _generate_classes(name: str, blocks: List[FixtureBlock], settings: Settings) -> List[Dict[str, Any]]:
    if name in ("h_classes", "t_classes"):
        kind = SubsequenceKind.H if name == "h_classes" else SubsequenceKind.T
        key = kind.value
        longest = max(b.params[key] for b in blocks)
        reports = EnumerationManager(settings).symbolic_length_classes_upto(kind, longest)
        return [
            {"residues": reports[b.params[key]].classes,
             "modulus": reports[b.params[key]].modulus,
             "count": reports[b.params[key]].count}
            for b in blocks
        ]

    sm = StoppingManager(settings)
    out = []
    tau_cache = {}
    for b in blocks:
        n = b.params["n"]
        if name == "sigma_classes":
            report = sm.enum_sigma_classes(n)
            out.append({"residues": report.classes, "modulus": report.modulus, "count": report.z})
        else:
            if n not in tau_cache:
                tau_cache[n] = sm.enum_tau_classes(n)
            report = tau_cache[n]
            residues = report.classes.get(b.params["tau"], ())
            out.append({"residues": residues, "modulus": report.modulus, "count": len(residues)})
    return out


def _eval_classes(name: str, settings: Settings) -> Dict[str, Any]:
    blocks = load_class_fixture(name)
    generated = _generate_classes(name, blocks, settings)
    per_block, noise = [], []
    for block, got in zip(blocks, generated):
        expected_count = block.params.get("count", len(block.residues))
        fields = []
        residues_exact = 1.0 if tuple(got["residues"]) == block.residues else 0.0
        fields.append({"field": "residues", "exact": residues_exact,
                       "soft": round(_jaccard(block.residues, got["residues"]), 4)})
        modulus_exact = 1.0 if got["modulus"] == block.modulus else 0.0
        fields.append({"field": "modulus", "exact": modulus_exact, "soft": modulus_exact})
        count_exact = 1.0 if got["count"] == expected_count else 0.0
        fields.append({"field": "count", "exact": count_exact,
                       "soft": round(_soft_ratio(str(expected_count), str(got["count"])), 4)})
        per_block.append({"block": block.header, "per_field": fields})
        noise.extend({"block": block.header, "line": text} for text in block.noise)
    return {"per_block": per_block, "noise": noise, "unexpected": []}


def eval_fixture(name: str, settings: Optional[Settings] = None) -> Dict[str, Any]:
    """
    Regenerate every block of a reference fixture and score it against the file.
    Exact scores are 0/1 per field; soft scores are Jaccard similarity for residue
    sets and SequenceMatcher ratios for printed lists and counts.
    """
    if name not in FIXTURE_KIND:
        raise DomainError(f"unknown fixture {name!r}; choose one of {', '.join(FIXTURE_KIND)}")
    settings = settings or Settings.from_env()
    if name in ("h_starts", "t_starts"):
        partial = _eval_lists(name, settings)
    else:
        partial = _eval_classes(name, settings)

    all_exact, all_soft = [], []
    field_scores: Dict[str, Dict[str, List[float]]] = {}
    detailed_per_block, mismatched = [], []
    for entry in partial["per_block"]:
        exacts = [f["exact"] for f in entry["per_field"]]
        softs = [f["soft"] for f in entry["per_field"]]
        for f in entry["per_field"]:
            scores = field_scores.setdefault(f["field"], {"exact": [], "soft": []})
            scores["exact"].append(f["exact"])
            scores["soft"].append(f["soft"])
        all_exact.extend(exacts)
        all_soft.extend(softs)
        if min(exacts) < 1.0:
            mismatched.append(entry["block"])
        detailed_per_block.append({
            "block": entry["block"],
            "scores": {"exact_accuracy": _mean(exacts), "soft_similarity": _mean(softs)},
            "per_field": entry["per_field"],
        })

    result = {
        "fixture": name,
        "kind": FIXTURE_KIND[name],
        "counts": {"blocks": len(detailed_per_block), "mismatched": len(mismatched)},
        "detailed_per_block": detailed_per_block,
        "mismatched_blocks": mismatched,
        "unexpected_blocks": partial["unexpected"],
        "noise": partial["noise"],
        "aggregate_scores": {
            "exact_accuracy": _mean(all_exact),
            "soft_similarity": _mean(all_soft),
        },
        "field_aggregate_scores": {
            field: {
                "exact_accuracy": _mean(scores["exact"]),
                "soft_similarity": _mean(scores["soft"]),
                "sample_count": len(scores["exact"]),
            }
            for field, scores in field_scores.items()
        },
    }
    if mismatched:
        logger.warning("fixture %s: %d mismatched blocks", name, len(mismatched))
    return result
