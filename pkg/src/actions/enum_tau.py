from typing import Optional

from src.config import Settings
from src.contexts.stoppingContext import TauClassReport
from src.managers.stopping_manager import StoppingManager
from src.utils.text_utils import class_block, sigma_header

RESULT_TYPE = TauClassReport


def run(settings: Settings, n: int, tau: Optional[int] = None) -> TauClassReport:
    return StoppingManager(settings).enum_tau_classes(n, tau)


def to_text(result: TauClassReport, **_) -> str:
    blocks = [
        class_block(sigma_header(result.n, result.sigma, len(residues), tau), residues, result.modulus)
        for tau, residues in sorted(result.classes.items())
    ]
    for v in result.violations:
        blocks.append(f"warning: class {v.residue} not uniform: {v.expected} vs {v.observed} at {v.representative}")
    return "\n\n".join(blocks)


def to_rows(result: TauClassReport, **_):
    yield ("n", "sigma", "tau", "modulus", "residue")
    for tau, residues in sorted(result.classes.items()):
        for r in residues:
            yield (result.n, result.sigma, tau, result.modulus, r)
