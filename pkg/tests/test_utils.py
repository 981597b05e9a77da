"""
Unit Tests for Utility Functions
Tests scalar parsing, list parsing and JSON document loading.
"""

import unittest
import sys
import os
import json
import tempfile
import shutil
from fractions import Fraction
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.utils import (
    AlgebraValidationError,
    CircleTraceError,
    DualityValidationError,
    InputFormatError,
    canonical_json,
    format_scalar,
    load_json_document,
    parse_int_list,
    parse_rational_list,
    parse_scalar,
    validate_file,
)


class TestScalars(unittest.TestCase):
    """Test cases for scalar parsing and formatting"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "="*60)
        print("TESTING: Utility Functions")
        print("="*60)

    def test_parse_scalar(self):
        self.assertEqual(parse_scalar("3/6"), Fraction(1, 2))
        self.assertEqual(parse_scalar(" -4 "), Fraction(-4))
        self.assertEqual(parse_scalar(7), Fraction(7))
        self.assertEqual(parse_scalar(Fraction(2, 3)), Fraction(2, 3))
        print("✓ Scalars parsed")

    def test_parse_scalar_rejects(self):
        """Floats, garbage and zero denominators are input errors"""
        for bad in ("0.5", "1e3", "", "abc", "1/0", True, 0.5):
            with self.assertRaises(InputFormatError, msg=repr(bad)):
                parse_scalar(bad)
        print("✓ Invalid scalars rejected")

    def test_format_scalar(self):
        self.assertEqual(format_scalar(Fraction(-4, 2)), "-2")
        self.assertEqual(format_scalar(Fraction(3, 9)), "1/3")
        self.assertEqual(format_scalar(5), "5")
        print("✓ Scalars formatted")

    def test_lists(self):
        self.assertEqual(parse_rational_list("0,1/2, 3/4"), [Fraction(0), Fraction(1, 2), Fraction(3, 4)])
        self.assertEqual(parse_rational_list(""), [])
        self.assertEqual(parse_int_list("0,0,1"), [0, 0, 1])
        with self.assertRaises(InputFormatError):
            parse_int_list("0,x")
        print("✓ Lists parsed")

    def test_canonical_json(self):
        self.assertEqual(canonical_json({"b": 1, "a": [1, 2]}), '{"a":[1,2],"b":1}')
        print("✓ Canonical JSON is key-sorted")

    def test_error_hierarchy(self):
        """Every engine error shares one base and carries its witness"""
        e = DualityValidationError("bad", "left zig-zag")
        self.assertIsInstance(e, CircleTraceError)
        self.assertEqual(e.identity, "left zig-zag")
        a = AlgebraValidationError("bad", (0, 1, 1))
        self.assertEqual(a.witness, (0, 1, 1))
        self.assertTrue(issubclass(InputFormatError, CircleTraceError))
        print("✓ Error hierarchy intact")

    def test_package_metadata(self):
        import src

        self.assertEqual(src.__version__, "1.0.0")
        self.assertIn("Hochschild", src.__description__)
        self.assertFalse(hasattr(src, "__author__"))
        print("✓ Package metadata")


class TestDocuments(unittest.TestCase):
    """Test cases for JSON document ingestion"""

    @classmethod
    def setUpClass(cls):
        print("\n" + "="*60)
        print("TESTING: JSON Documents")
        print("="*60)
        cls.test_dir = tempfile.mkdtemp()

    @classmethod
    def tearDownClass(cls):
        if os.path.exists(cls.test_dir):
            shutil.rmtree(cls.test_dir)

    def test_validate_file(self):
        path = os.path.join(self.test_dir, "doc.json")
        Path(path).write_text("{}", encoding="utf-8")
        self.assertTrue(validate_file(path)[0])
        self.assertFalse(validate_file(os.path.join(self.test_dir, "missing.json"))[0])
        self.assertFalse(validate_file(self.test_dir)[0])
        print("✓ File validation works")

    def test_load_from_file_and_inline(self):
        doc = {"ring": "Q", "dim": 1, "unit": ["1"], "mul": ["1"]}
        path = os.path.join(self.test_dir, "algebra.json")
        Path(path).write_text(json.dumps(doc), encoding="utf-8")
        self.assertEqual(load_json_document(path), doc)
        self.assertEqual(load_json_document(json.dumps(doc)), doc)
        print("✓ Documents loaded from file and inline")

    def test_load_rejects(self):
        path = os.path.join(self.test_dir, "list.json")
        Path(path).write_text("[1, 2]", encoding="utf-8")
        for bad in (path, "{not json", "matrix:2"):
            with self.assertRaises(InputFormatError, msg=bad):
                load_json_document(bad)
        print("✓ Malformed documents rejected")


if __name__ == "__main__":
    unittest.main(verbosity=2)
