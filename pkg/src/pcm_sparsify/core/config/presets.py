"""Reference schedules and published ones-counts for known codes."""

from typing import Dict, Optional

from ..errors import ConfigurationError

_CODE_POINTERS = {
    # LTE turbo codes
    "lte-396": "LTE-TC-N396-K128",
    "lte-396-128": "LTE-TC-N396-K128",
    "lte-tc-n396-k128": "LTE-TC-N396-K128",
    "lte-132-40": "LTE-TC-N132-K40",
    "lte-156-48": "LTE-TC-N156-K48",
    "lte-180-56": "LTE-TC-N180-K56",
    "lte-204-64": "LTE-TC-N204-K64",
    "lte-780-256": "LTE-TC-N780-K256",

    # BCH codes, "strip" variants as published in the channel-code database
    "bch-127-92-5": "BCH-127-92-5-strip",
    "bch-127-92-5-strip": "BCH-127-92-5-strip",
    "bch-255-207-6": "BCH-255-207-6-strip",
    "bch-255-207-6-strip": "BCH-255-207-6-strip",
    "bch-7200-7032-12": "BCH-7200-7032-12-strip",
    "bch-7200-7032-12-strip": "BCH-7200-7032-12-strip",
    "bch-63-30": "BCH-63-30",
    "bch-63-36": "BCH-63-36",
    "bch-63-39": "BCH-63-39",
    "bch-63-45": "BCH-63-45",
    "bch-63-51": "BCH-63-51",
    "bch-63-57": "BCH-63-57",
}

# Start/finish (f, p) pairs and total iteration count; steps = iterations / 100.
_SCHEDULE_PRESETS: Dict[str, Dict[str, float]] = {
    "LTE-TC-N396-K128": {
        "n": 396, "start_f": 0.05, "start_p": 0.01, "finish_f": 0.01, "finish_p": 0.01,
        "iterations": 5_120_000,
    },
    "BCH-127-92-5-strip": {
        "n": 127, "start_f": 0.05, "start_p": 0.01, "finish_f": 0.01, "finish_p": 0.01,
        "iterations": 5_120_000,
    },
    "BCH-255-207-6-strip": {
        "n": 255, "start_f": 0.05, "start_p": 0.01, "finish_f": 0.03, "finish_p": 0.01,
        "iterations": 512_000_000,
    },
    "BCH-7200-7032-12-strip": {
        "n": 7200, "start_f": 0.004, "start_p": 0.01, "finish_f": 0.003, "finish_p": 0.01,
        "iterations": 1_280_000,
    },
}

# Ones-counts: lower bound, integer programming, best greedy, best annealing.
_REFERENCE_ONES: Dict[str, Dict[str, Optional[int]]] = {
    "BCH-63-30": {"bound": 396, "ip": 396, "greedy": 406, "anneal": 396},
    "BCH-63-36": {"bound": 378, "ip": 384, "greedy": 402, "anneal": 384},
    "BCH-63-39": {"bound": 336, "ip": 336, "greedy": 344, "anneal": 336},
    "BCH-63-45": {"bound": 288, "ip": 288, "greedy": 288, "anneal": 288},
    "BCH-63-51": {"bound": 288, "ip": 288, "greedy": 288, "anneal": 288},
    "BCH-63-57": {"bound": 192, "ip": 192, "greedy": 192, "anneal": 192},
    "LTE-TC-N132-K40": {"bound": None, "ip": 472, "greedy": 743, "anneal": 562},
    "LTE-TC-N156-K48": {"bound": None, "ip": 568, "greedy": 940, "anneal": 662},
    "LTE-TC-N180-K56": {"bound": None, "ip": 663, "greedy": 1180, "anneal": 776},
    "LTE-TC-N204-K64": {"bound": None, "ip": 760, "greedy": 1401, "anneal": 865},
    "LTE-TC-N396-K128": {"bound": None, "ip": 1594, "greedy": 3543, "anneal": 2030},
    "LTE-TC-N780-K256": {"bound": None, "ip": 3377, "greedy": 10933, "anneal": 5564},
}

_DEFAULT_ITERS = 100


def _normalize(name: str) -> str:
    key = name.strip().lower().replace("_", "-")
    for suffix in (".txt", ".alist"):
        key = key.removesuffix(suffix)
    return key


def resolve_code(name: str) -> Optional[str]:
    """Canonical code name for a name, alias or alist file stem; None if unknown."""
    return _CODE_POINTERS.get(_normalize(name))


def get_schedule_preset(name: str) -> Dict[str, float]:
    """Get the reference schedule for a code.

    Returns:
        Dict with n, start_f, start_p, finish_f, finish_p, iterations and steps.
    """
    code = resolve_code(name)
    if code not in _SCHEDULE_PRESETS:
        raise ConfigurationError(f"No schedule preset for {name!r}")
    preset = dict(_SCHEDULE_PRESETS[code])
    preset["steps"] = int(preset["iterations"]) // _DEFAULT_ITERS
    return preset


def get_reference_ones(name: str) -> Optional[Dict[str, Optional[int]]]:
    """Published ones-counts for a code, or None when the code is not tabulated."""
    code = resolve_code(name)
    return dict(_REFERENCE_ONES[code]) if code in _REFERENCE_ONES else None


def list_codes() -> list[str]:
    return sorted(set(_CODE_POINTERS.values()))
