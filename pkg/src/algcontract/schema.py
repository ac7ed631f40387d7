"""JSON schema of the analysis report emitted by ``algcontract analyze``."""

_INT_LIST = {"type": "array", "items": {"type": "integer"}}

_KEY_SEQ = {
    "type": "object",
    "required": ["forms", "values"],
    "properties": {
        "forms": {"type": "array", "items": {"type": "string"}},
        "values": _INT_LIST,
        "shift": {"type": ["string", "null"]},
    },
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "AnalysisReport",
    "type": "object",
    "required": [
        "r", "puiseux_pairs", "polydromy", "alpha", "contractible",
        "virtual_poles", "semigroup_report", "classification", "notes",
    ],
    "additionalProperties": False,
    "properties": {
        "r": {"type": "integer", "minimum": 0},
        "puiseux_pairs": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        },
        "polydromy": {"type": "integer", "minimum": 1},
        "alpha": {"type": ["integer", "null"]},
        "contractible": {"type": "boolean"},
        "virtual_poles": {
            "type": ["object", "null"],
            "required": ["m", "mtilde", "generic", "ltilde", "ptilde"],
            "properties": {
                "m": _INT_LIST,
                "mtilde": _INT_LIST,
                "generic": {"type": "integer"},
                "ltilde": {"type": "integer"},
                "ptilde": {"type": "integer"},
            },
        },
        "semigroup_report": {
            "type": ["array", "null"],
            "items": {
                "type": "object",
                "required": ["k", "s1", "s1_witness", "s2", "s2_counterexample"],
                "properties": {
                    "k": {"type": "integer"},
                    "s1": {"type": "boolean"},
                    "s1_witness": {"type": ["array", "null"], "items": {"type": "integer"}},
                    "s2": {"type": "boolean"},
                    "s2_counterexample": {"type": ["integer", "null"]},
                },
            },
        },
        "classification": {"enum": ["AlwaysAlgebraic", "NeverAlgebraic", "Mixed", None]},
        "key_forms": {
            "type": ["object", "null"],
            "properties": {"local": _KEY_SEQ, "global": _KEY_SEQ},
        },
        "verdict": {
            "type": "object",
            "required": ["contractible", "algebraic", "witness"],
            "properties": {
                "contractible": {"type": "boolean"},
                "algebraic": {"type": ["boolean", "null"]},
                "witness": {"type": "object", "additionalProperties": {"type": "string"}},
            },
        },
        "wp_weights": _INT_LIST,
        "notes": {"type": "array", "items": {"type": "string"}},
    },
}
