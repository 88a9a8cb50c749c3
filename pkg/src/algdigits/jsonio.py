"""Canonical JSON output: sorted keys, fixed separators, exact values.

Integers outside the IEEE-754 exact range become decimal strings so a
float-based JSON reader cannot silently corrupt them; Fractions become
"p/q" strings unless integral.  Two runs that compute the same result
therefore serialize to identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

_EXACT_INT = 2**53


def encode_value(value):
    """Recursively rewrite a result object into plain JSON types."""
    if value is None or isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value if abs(value) < _EXACT_INT else str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return encode_value(int(value))
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float) or isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): encode_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return [encode_value(v) for v in sorted(value, key=repr)]
    if hasattr(value, "to_json_dict"):
        return encode_value(value.to_json_dict())
    return str(value)


def canonical_dumps(payload) -> str:
    return json.dumps(encode_value(payload), sort_keys=True, indent=2,
                      separators=(",", ": "))
