"""JSON Schemas for the wire formats (draft 2020-12 vocabulary).

Pure data; consumers validate with any JSON Schema library.  The test
suite checks every CLI JSON output against these.
"""

SEQ = {"type": "string", "pattern": "^[lrn]*c?$"}
ATOM = {"type": "integer", "minimum": 1}
BIT = {"type": "integer", "minimum": 0, "maximum": 1}
PATH = {"type": "array", "items": {"enum": ["only", "left", "right"]}}

SUBSTITUTION = {
    "type": "object",
    "properties": {
        "keying": {"enum": ["raw", "faithful", "plain"]},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"seq": SEQ, "atom": ATOM, "image": {"type": "string"}},
                "required": ["atom", "image"],
            },
        },
    },
    "required": ["entries"],
}

ASSIGNMENT = {
    "type": "object",
    "properties": {
        "default": BIT,
        "faithful": {"type": "boolean"},
        "keying": {"enum": ["raw", "faithful", "plain"]},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"seq": SEQ, "atom": ATOM, "value": BIT},
                "required": ["atom", "value"],
            },
        },
    },
    "required": ["default", "faithful", "entries"],
}

VERDICT = {
    "type": "object",
    "properties": {
        "status": {"enum": ["valid", "invalid"]},
        "method": {"enum": ["tableau", "brute", "skeleton", "classical"]},
        "countermodel": ASSIGNMENT,
        "sequent": {"type": "string"},
        "mode": {"enum": ["plain", "faithful"]},
        "methods": {"type": "array", "items": {"type": "string"}},
        "notes": {"type": "array", "items": {"type": "string"}},
        "proof": {"type": "object"},
    },
    "required": ["status", "method"],
}

ANNOTATION = {
    "type": "object",
    "properties": {
        "formula": {"type": "string"},
        "annotation": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"path": PATH, "seq": SEQ,
                               "subformula": {"type": "string"}},
                "required": ["path", "seq"],
            },
        },
    },
    "required": ["formula", "annotation"],
}

RENAMING = {
    "type": "object",
    "properties": {
        "mode": {"enum": ["plain", "faithful"]},
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {"seq": SEQ, "atom": ATOM, "fresh": ATOM},
                "required": ["seq", "atom", "fresh"],
            },
        },
    },
    "required": ["mode", "entries"],
}

SKELETON = {
    "type": "object",
    "properties": {"skeleton": {"type": "string"}, "renaming": RENAMING},
    "required": ["skeleton", "renaming"],
}

WITNESS = {
    "type": "object",
    "properties": {
        "atom": ATOM, "seq": SEQ,
        "antecedent_path": PATH, "consequent_path": PATH,
        "mode": {"enum": ["plain", "faithful"]},
    },
    "required": ["atom", "seq", "antecedent_path", "consequent_path", "mode"],
}

SHARE = {
    "type": "object",
    "properties": {
        "witness": {"oneOf": [WITNESS, {"type": "null"}]},
        "certificate": ASSIGNMENT,
    },
    "required": ["witness"],
}

PROOF = {
    "type": "object",
    "properties": {
        "logic": {"enum": ["BM", "B"]},
        "lines": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "properties": {
                    "formula": {"type": "string"},
                    "just": {
                        "oneOf": [
                            {"type": "object",
                             "properties": {
                                 "axiom": {"pattern": "^A[1-9]$"},
                                 "bind": {"type": "object"}},
                             "required": ["axiom"]},
                            {"type": "object",
                             "properties": {
                                 "rule": {"pattern": "^R[1-5]$"},
                                 "from": {"type": "array",
                                          "items": {"type": "integer",
                                                    "minimum": 1}}},
                             "required": ["rule", "from"]},
                        ],
                    },
                },
                "required": ["formula", "just"],
            },
        },
    },
    "required": ["logic", "lines"],
}

TABLEAU_TRIPLE = {
    "type": "object",
    "properties": {"seq": SEQ, "sign": BIT, "formula": {"type": "string"}},
    "required": ["seq", "sign", "formula"],
}

TABLEAU_PROOF = {
    "type": "object",
    "properties": {
        "mode": {"enum": ["plain", "faithful"]},
        "tree": {"type": "array"},
    },
    "required": ["mode", "tree"],
}
