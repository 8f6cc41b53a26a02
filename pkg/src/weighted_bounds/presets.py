"""Built-in states and scenarios for the two worked examples."""

import cmath
import math

from .linalg import PureState

# The example-1 labels follow the generalized Schmidt form, where
# C_AB = 2 l0 l2 uses the |101> amplitude. Read strictly big-endian that
# amplitude couples subsystems 0 and 2, so the ket positions are named A, C, B.
EXAMPLE1_SUBSYSTEM_NAMES = ("A", "C", "B")


def example1_state(phi: float = 0.0) -> PureState:
    """``(|000> + |110>)/2 + (e^{i phi}|100> + |101> + |111>)/sqrt(6)``."""
    k = 1 / math.sqrt(6)
    return PureState.from_kets(
        {"000": 0.5, "110": 0.5, "100": k * cmath.exp(1j * phi), "101": k, "111": k}
    )


def w_class_state() -> PureState:
    """``(|100> + |010>)/2 + |001>/sqrt(2)``."""
    return PureState.from_kets({"100": 0.5, "010": 0.5, "001": math.sqrt(2) / 2})


def _ket_pairs(state: PureState) -> list:
    return [[float(z.real), float(z.imag)] for z in state.amplitudes]


PRESETS = {
    "example1": {
        "name": "example1",
        "state": {
            "dims": [2, 2, 2],
            "amplitudes": _ket_pairs(example1_state()),
            "names": list(EXAMPLE1_SUBSYSTEM_NAMES),
        },
        "measure": "concurrence",
        "mode": "monogamy",
        "g": 3,
        "a": "example1",
        "s": "example1",
        "exponent_range": [0, 3, 0.01],
        "comparisons": ["ZLJM", "JFQ", "ZJZ"],
        "p": 0.5,
        "output": "figure1",
    },
    "example2": {
        "name": "example2",
        # SCRENoA of the W-class state; the pairwise values are taken as given
        "measure_vector": {
            "joint": 0.75,
            "parts": [0.25, 0.5],
            "names": ["AB", "AC"],
            "label": "SCRENoA",
        },
        "mode": "polygamy",
        "g": 0.6,
        "a": 1.2,
        "s": "midpoint",
        "exponent_range": [0.6, 3, 0.01],
        "comparisons": ["ZLJM", "JFQ", "ZJZ", "ZLJM_t"],
        "p": 0.5,
        "output": "figure2",
    },
}
