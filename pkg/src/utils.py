"""
Utils Module
Shared exceptions and helpers for scalar parsing and JSON document ingestion.
"""

import json
import os
from fractions import Fraction
from typing import Any, Dict, List, Tuple, Union
from pathlib import Path


class CircleTraceError(Exception):
    """Base class for every error raised by the engine."""


class CompositionError(CircleTraceError):
    """Raised when two morphisms are not composable (f.dst != g.src)."""


class InvalidObjectError(CircleTraceError):
    """Raised when a value violates the invariants of its type."""


class RingMismatchError(CircleTraceError):
    """Raised when matrices or scalars over different rings are combined."""


class DualityValidationError(CircleTraceError):
    """Raised when duality data fails one of the zig-zag identities."""

    def __init__(self, message: str, identity: str):
        super().__init__(message)
        self.identity = identity


class AlgebraValidationError(CircleTraceError):
    """Raised when structure constants are not associative or not unital."""

    def __init__(self, message: str, witness: Tuple[int, ...]):
        super().__init__(message)
        self.witness = witness


class ContractionError(CircleTraceError):
    """Raised when an epsilon contraction is requested at a non-(L, R) position."""


class InputFormatError(CircleTraceError):
    """Raised for malformed command-line input; maps to exit code 2."""


Scalar = Union[int, Fraction]


def parse_scalar(text: Union[str, int, Fraction]) -> Fraction:
    """
    Parse a scalar written as "a" or "a/b".

    Args:
        text: String, integer or Fraction

    Returns:
        Fraction: The exact value
    """
    if isinstance(text, bool):
        raise InputFormatError(f"Not a scalar: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputFormatError(f"Not a scalar: {text!r}")

    cleaned = text.strip()
    if not cleaned:
        raise InputFormatError("Empty scalar")

    # Floats are rejected: every value must be exactly representable
    if "." in cleaned or "e" in cleaned.lower():
        raise InputFormatError(f"Floating-point scalar not allowed: {text!r}")

    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as e:
        raise InputFormatError(f"Cannot parse scalar {text!r}: {e}") from e


def format_scalar(value: Scalar) -> str:
    """
    Format an exact scalar as "a" or "a/b".

    Args:
        value: Integer or Fraction

    Returns:
        str: Canonical string form
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational_list(text: str) -> List[Fraction]:
    """
    Parse a comma-separated list of rationals such as "0,1/2,3/4".

    Args:
        text (str): Comma-separated scalars

    Returns:
        List[Fraction]: Parsed values
    """
    if text is None or not text.strip():
        return []
    return [parse_scalar(part) for part in text.split(",")]


def parse_int_list(text: str) -> List[int]:
    """
    Parse a comma-separated list of integers such as "0,0,1".
    """
    if text is None or not text.strip():
        return []
    values = []
    for part in text.split(","):
        try:
            values.append(int(part.strip()))
        except ValueError as e:
            raise InputFormatError(f"Not an integer: {part!r}") from e
    return values


def canonical_json(obj: Any) -> str:
    """
    Serialize an object to JSON with sorted keys and no whitespace.
    Used as the hashing input for the result cache.
    """
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=str)


def validate_file(path: str) -> Tuple[bool, str]:
    """
    Validate that a path exists and is a regular file.

    Args:
        path (str): Path to check

    Returns:
        Tuple[bool, str]: (is_valid, message)
    """
    if not os.path.exists(path):
        return False, f"File does not exist: {path}"

    if not os.path.isfile(path):
        return False, f"Path is not a file: {path}"

    return True, f"File valid: {path}"


def load_json_document(source: str) -> Dict:
    """
    Load a JSON document from a file path or from an inline JSON string.

    Args:
        source (str): Path to a .json file, or the JSON text itself

    Returns:
        Dict: Parsed document
    """
    text = None
    is_file, _ = validate_file(source)
    if is_file:
        text = Path(source).read_text(encoding="utf-8")
    elif source.lstrip().startswith("{"):
        text = source
    else:
        raise InputFormatError(f"Not a file or inline JSON document: {source!r}")

    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"Invalid JSON in {source!r}: {e}") from e

    if not isinstance(document, dict):
        raise InputFormatError("Top-level JSON value must be an object")

    return document


# Example usage and testing
if __name__ == "__main__":
    print(f"Parsed: {parse_scalar('3/6')}")
    print(f"Formatted: {format_scalar(Fraction(-4, 2))}")
    print(f"List: {parse_rational_list('0,1/2,3/4')}")
    print(f"Canonical: {canonical_json({'b': 1, 'a': [1, 2]})}")
