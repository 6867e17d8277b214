"""Named scenarios and filtrations available to the management commands."""

GOOD_REDUCTION_PRESETS = {
    f"good-reduction-{p}-{n}": {"kind": "good-reduction", "p": p, "n": n, "c": "1"}
    for p, n in ((2, 1), (2, 2), (3, 1))
}

GENUS2_PRESETS = {
    "type-I-example": {
        "kind": "genus2",
        "name": "type-I-example",
        "expected_type": "I",
        "tower": {"p": 2, "steps": [{"radical": {"m": 15, "radicand": "2", "name": "pi"}}]},
        "coefficients": {"b2": "2^(3/5)", "b3": "1", "b4": "2^(2/5)"},
    },
    "type-II-example": {
        "kind": "genus2",
        "name": "type-II-example",
        "expected_type": "II",
        "tower": {"p": 2, "steps": [{"radical": {"m": 9, "radicand": "2", "name": "a"}}]},
        "coefficients": {"b2": "a^3", "b3": "a^6", "b4": "0"},
    },
    "type-III-example": {
        "kind": "genus2",
        "name": "type-III-example",
        "expected_type": "III",
        "tower": {
            "p": 2,
            "steps": [{"radical": {"m": 5, "radicand": "lambda", "name": "varpi"}}],
        },
        "coefficients": {"b2": "0", "b3": "0", "b4": "1"},
    },
}

# Lower filtrations of the two Q8-extensions K_1/K and K_2/K inside the
# monodromy extension of the type I example.
Q8_PROFILES = {
    "q8-1-3": {"group": "Q8", "mode": "lower", "breaks": [[1, "Q8", 8], [3, "Z(Q8)", 2]]},
    "q8-5-69": {"group": "Q8", "mode": "lower", "breaks": [[5, "Q8", 8], [69, "Z(Q8)", 2]]},
}

# Values the analysis of each genus 2 preset must reproduce; other scenarios
# only record what they compute.
GENUS2_EXPECTED = {
    "type-I-example": {
        "K1": "q8-1-3",
        "K2": "q8-5-69",
        "upper": ["1", "3/2", "5", "21"],
        "lower": [1, 3, 31, 543],
        "sw": 45,
    },
    "type-II-example": {
        "root_valuation": [["7/24", 8]],
        "delta": [["4/9", 3], ["1/3", 4]],
    },
}

PRESETS = {**GOOD_REDUCTION_PRESETS, **GENUS2_PRESETS}
