from src.config import Settings
from src.contexts.stoppingContext import SigmaClassReport
from src.managers.stopping_manager import StoppingManager
from src.utils.text_utils import class_block, sigma_header

RESULT_TYPE = SigmaClassReport


def run(settings: Settings, n: int, method: str = "coefficient") -> SigmaClassReport:
    manager = StoppingManager(settings)
    if method == "direct":
        return manager.scan_sigma_classes(n)
    return manager.enum_sigma_classes(n)


def to_text(result: SigmaClassReport, **_) -> str:
    text = class_block(sigma_header(result.n, result.sigma, result.z), result.classes, result.modulus)
    for d in result.discrepancies:
        text += f"\nwarning: sigma({d.representative})={d.observed_sigma}, class expects {d.expected_sigma}"
    return text


def to_rows(result: SigmaClassReport, **_):
    yield ("n", "sigma", "modulus", "residue")
    for r in result.classes:
        yield (result.n, result.sigma, result.modulus, r)
