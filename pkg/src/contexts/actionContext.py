actions = {
    "traj": {
        "description": "Collatz trajectory s, T(s), ... up to the first 1. Fails with exit code 2 if the iteration cap is hit first.",
        "module": "src.actions.traj",
        "params": {
            "s": "Starting number (decimal string, any size)",
            "cap": "Optional: maximum number of terms (default COLLATZ_TRAJECTORY_CAP)",
        },
        "example": {"action": "traj", "params": {"s": 11}},
    },
    "decompose": {
        "description": "Split the trajectory of s into a preamble, at most one C^h and a chain of canonical C^t blocks. Stopping-sequences are marked.",
        "module": "src.actions.decompose",
        "params": {
            "s": "Starting number",
            "max": "Optional: maximum number of subsequences (default COLLATZ_MAX_SUBSEQUENCES)",
        },
        "example": {"action": "decompose", "params": {"s": 27}},
    },
    "subseq": {
        "description": "The single subsequence C^t(s) or C^h(s) for s ≡ 3, 7 or 9 (mod 12), with its variant and extrema.",
        "module": "src.actions.subseq",
        "params": {"s": "Start, ≡ 3, 7 or 9 (mod 12)"},
        "example": {"action": "subseq", "params": {"s": 19}},
    },
    "list": {
        "description": "First subsequences of one kind for every start up to max, one per line.",
        "module": "src.actions.list",
        "params": {"kind": "'t' or 'h'", "max": "Largest start"},
        "example": {"action": "list", "params": {"kind": "h", "max": 2073}},
    },
    "enum_length": {
        "description": "Residue classes whose subsequences share length L, modulo 12·2^L (h) or 12·2^(L+1) (t).",
        "module": "src.actions.enum_length",
        "params": {
            "kind": "'t' or 'h'",
            "length": "Length index L >= 2",
            "method": "Optional: 'symbolic' (default) or 'brute'",
        },
        "example": {"action": "enum_length", "params": {"kind": "t", "length": 4}},
    },
    "verify_fib": {
        "description": "Compare class counts per length against F(h-1) for h and 2·F(t+1)-2 for t.",
        "module": "src.actions.verify_fib",
        "params": {"kind": "'t' or 'h'", "max": "Largest length to check"},
        "example": {"action": "verify_fib", "params": {"kind": "h", "max": 8}},
    },
    "sigma": {
        "description": "Stopping time: least k with T^k(s) < s.",
        "module": "src.actions.sigma",
        "params": {"s": "Starting number >= 2"},
        "example": {"action": "sigma", "params": {"s": 27}},
    },
    "tau": {
        "description": "Stopping time together with the number of C^t blocks traversed until it is reached.",
        "module": "src.actions.tau",
        "params": {"s": "Start ≡ 3, 7 (mod 12)"},
        "example": {"action": "tau", "params": {"s": 187}},
    },
    "enum_sigma": {
        "description": "Residue classes mod 2^σ with stopping time σ = 1 + ⌊n·log₂3⌋, and their count z(n).",
        "module": "src.actions.enum_sigma",
        "params": {
            "n": "Number of odd steps n >= 0",
            "method": "Optional: 'coefficient' (default) or 'direct'",
        },
        "example": {"action": "enum_sigma", "params": {"n": 4}},
    },
    "enum_tau": {
        "description": "Residue classes mod 3·2^σ of starts ≡ 3, 7 (mod 12) grouped by τ, with counts A_τ(n).",
        "module": "src.actions.enum_tau",
        "params": {"n": "n >= 2", "tau": "Optional: only this τ"},
        "example": {"action": "enum_tau", "params": {"n": 6, "tau": 3}},
    },
    "table": {
        "description": "The A_τ(n) table for n = 2..nmax with the σ(n) and z(n) columns.",
        "module": "src.actions.table",
        "params": {"nmax": "Last column"},
        "example": {"action": "table", "params": {"nmax": 8}},
    },
    "verify_c3": {
        "description": "Check z(n) = (1/2)·Σ_τ A_τ(n) with both sides enumerated independently.",
        "module": "src.actions.verify_c3",
        "params": {"n": "First n", "to": "Optional: last n"},
        "example": {"action": "verify_c3", "params": {"n": 2, "to": 8}},
    },
    "verify_c4": {
        "description": "Check A_1(n) = 2^m with m = 1 + ⌊(n-1)·log₂3⌋ - (n-1).",
        "module": "src.actions.verify_c4",
        "params": {"n": "First n", "to": "Optional: last n"},
        "example": {"action": "verify_c4", "params": {"n": 2, "to": 10}},
    },
    "limits_t5": {
        "description": "Exact quotient 2^(G-1) / Σ 2^(G-n-β_n) for the τ = 1 density.",
        "module": "src.actions.limits_t5",
        "params": {"G": "G >= 2", "G_to": "Optional: evaluate G..G_to"},
        "example": {"action": "limits_t5", "params": {"G": 11}},
    },
    "limits_t6": {
        "description": "Exact quotient 2^(G-1) / Σ 2^(G-⌊n·log₂3⌋)·z(n) with z(n) from the bundled file, a user file or enumeration.",
        "module": "src.actions.limits_t6",
        "params": {
            "G": "G >= 2",
            "G_to": "Optional: evaluate G..G_to",
            "z_file": "Optional: path of an 'n<TAB>z(n)' file with a '# source:' header (default: bundled)",
            "computed": "Optional: true to enumerate z(n) with enum_sigma instead of reading a file",
        },
        "example": {"action": "limits_t6", "params": {"G": 13}},
    },
    "profile": {
        "description": "Glyph profile of a decomposition: one row of 'o' per C^t, stopping-sequences red or starred.",
        "module": "src.actions.profile",
        "params": {
            "s": "Starting number",
            "max": "Optional: maximum number of subsequences",
            "ansi": "Optional: colour stopping-sequences instead of starring them",
        },
        "example": {"action": "profile", "params": {"s": 27}},
    },
    "eval": {
        "description": "Regenerate a bundled reference fixture (h_starts, t_starts, h_classes, t_classes, sigma_classes, tau_classes) and score it block by block.",
        "module": "src.actions.eval",
        "params": {"name": "Fixture name, e.g. 'h_classes'"},
        "example": {"action": "eval", "params": {"name": "h_classes"}},
    },
}

from dataclasses import dataclass, field
from typing import Dict, Any

@dataclass
class ActionContext:
    """
    Registry of the commands shared by the CLI and the HTTP API.

    Each command module exposes:
    - run(settings, **params) -> result object
    - to_text(result, **params) -> reference-style text
    - to_rows(result, **params) -> iterable of CSV rows, header first
    - RESULT_TYPE, the type pydantic serializes the result with

    Command objects passed to the executor have the structure:
    {
        "action": "command_name",
        "params": {param_name: param_value} or {}
    }
    """
    actions: Dict[str, Dict[str, Any]] = field(default_factory=lambda: actions)
