import re
from typing import Iterable, Optional

RESIDUE_LINE = re.compile(r"^\d+(, \d+)*$")
MOD_LINE = re.compile(r"^\(mod (\d+)\)$")


def clean_text(text: str) -> str:
    text = re.sub(r'\xa0+', ' ', text)
    text = re.sub(r'\s+', ' ', text)
    return text.strip()


def normalize_list_line(line: str) -> str:
    """Canonical ", " separators for a comma separated integer list."""
    parts = [p.strip() for p in clean_text(line).split(",")]
    return ", ".join(p for p in parts if p)


def join_ints(values: Iterable[int]) -> str:
    return ", ".join(str(v) for v in values)


def class_block(header: str, residues: Iterable[int], modulus: int) -> str:
    return f"{header}\n{join_ints(residues)}\n(mod {modulus})"


def sigma_header(n: int, sigma: int, count: int, tau: Optional[int] = None) -> str:
    if tau is None:
        return f"n={n}, sigma={sigma}, z(n)={count}"
    return f"n={n}, sigma={sigma}, A_{tau}(n)={count}"


def length_header(kind: str, length: int) -> str:
    return f"{kind}={length}"
