import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Tuple, Union

from src.errors import DataFileError
from src.utils.text_utils import MOD_LINE, RESIDUE_LINE, clean_text, normalize_list_line

logger = logging.getLogger(__name__)

REFERENCE_DIR = Path(__file__).resolve().parent.parent / "data" / "reference"
LIST_FIXTURES = ("h_starts", "t_starts")
CLASS_FIXTURES = ("h_classes", "t_classes", "sigma_classes", "tau_classes")
FIXTURES = LIST_FIXTURES + CLASS_FIXTURES

_HEADER_ITEM = re.compile(r"^(h|t|n|sigma|z\(n\)|A_(\d+)\(n\))=(\d+)$")


@dataclass(frozen=True)
class FixtureBlock:
    header: str
    params: Dict[str, int]
    residues: Tuple[int, ...]
    modulus: int
    noise: Tuple[str, ...] = field(default=())
    line_no: int = 0


def fixture_path(name: str) -> Path:
    if name not in FIXTURES:
        raise DataFileError(name, 0, f"unknown fixture; choose one of {', '.join(FIXTURES)}")
    return REFERENCE_DIR / f"{name}.txt"


def parse_header(header: str, path: str, line_no: int) -> Dict[str, int]:
    """`h=5`, `n=8, sigma=13, z(n)=85`, `n=9, sigma=15, A_4(n)=18` -> dict."""
    params = {}
    for item in header.split(","):
        m = _HEADER_ITEM.match(item.strip())
        if not m:
            raise DataFileError(path, line_no, f"bad header item {item.strip()!r}")
        key, tau, value = m.group(1), m.group(2), int(m.group(3))
        if tau is not None:
            params["tau"] = int(tau)
            key = "count"
        elif key == "z(n)":
            key = "count"
        params[key] = value
    return params


def load_list_fixture(name: str) -> List[Tuple[int, ...]]:
    path = fixture_path(name)
    rows = []
    for no, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = normalize_list_line(line)
        if not line:
            continue
        if not RESIDUE_LINE.match(line):
            raise DataFileError(str(path), no, f"not an integer list: {line!r}")
        rows.append(tuple(int(x) for x in line.split(", ")))
    return rows


def load_class_fixture(name: str) -> List[FixtureBlock]:
    path = fixture_path(name)
    blocks: List[FixtureBlock] = []
    current: List[Tuple[int, str]] = []

    def flush():
        if not current:
            return
        (hno, header), body = current[0], current[1:]
        params = parse_header(header, str(path), hno)
        if len(body) < 2:
            raise DataFileError(str(path), hno, "block needs a residue line and a (mod M) line")
        rno, residue_line = body[0]
        if not RESIDUE_LINE.match(residue_line):
            raise DataFileError(str(path), rno, f"not a residue list: {residue_line!r}")
        mno, mod_line = body[-1]
        m = MOD_LINE.match(mod_line)
        if not m:
            raise DataFileError(str(path), mno, f"expected '(mod M)', got {mod_line!r}")
        noise = tuple(text for _, text in body[1:-1])
        for text in noise:
            logger.warning("%s: noise after block %r: %r", path.name, header, text)
        blocks.append(FixtureBlock(
            header=header,
            params=params,
            residues=tuple(int(x) for x in residue_line.split(", ")),
            modulus=int(m.group(1)),
            noise=noise,
            line_no=hno,
        ))
        current.clear()

    for no, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = clean_text(raw)
        if not line:
            flush()
            continue
        current.append((no, line))
    flush()
    return blocks


def load_fixture(name: str) -> Union[List[Tuple[int, ...]], List[FixtureBlock]]:
    if name in LIST_FIXTURES:
        return load_list_fixture(name)
    return load_class_fixture(name)
