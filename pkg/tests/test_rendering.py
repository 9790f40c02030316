import json
import unittest

import click

from app.services.identities import CheckResult, VerificationReport
from app.utils.polynomials import BiPoly, IntPoly
from app.utils.rendering import (
    SPAN,
    UnknownSelectorError,
    check_family,
    check_format,
    format_sequence,
    parse_json_table,
    parse_residues,
    parse_selector,
    render_report,
    render_table,
    select_coefficient,
)

A_TABLE = {"family": "A", "k": 3, "method": "recursive", "residues": [0],
           "rows": [{"n": 7, "coefficients": [960, 3120, 960]}, {"n": 6, "coefficients": [72, 456, 192]}]}
B_TABLE = {"family": "B", "k": 3, "method": "recursive", "residues": [0],
           "rows": [{"n": 4, "z0": [12, 6], "z1": [6]}]}


class TestSpan(unittest.TestCase):

    def test_forms(self):
        self.assertEqual(SPAN.convert("6..8", None, None), range(6, 9))
        self.assertEqual(SPAN.convert("5", None, None), range(5, 6))
        self.assertEqual(list(SPAN.convert("4..3", None, None)), [])

    def test_rejects_garbage(self):
        with self.assertRaises(click.BadParameter):
            SPAN.convert("6-8", None, None)


class TestRenderTable(unittest.TestCase):

    def test_text_rows_are_sorted(self):
        self.assertEqual(render_table(A_TABLE, "text"), "6: [72, 456, 192]\n7: [960, 3120, 960]")

    def test_text_split_rows(self):
        self.assertEqual(render_table(B_TABLE, "text"), "4: z0=[12, 6], z1=[6]")

    def test_json_uses_strings(self):
        table = {"family": "A", "k": 3, "method": "closed", "residues": [0],
                 "rows": [{"n": 15, "coefficients": [3429216000, 13934592000]}]}
        text = render_table(table, "json")
        self.assertEqual(json.loads(text)["rows"][0]["coefficients"], ["3429216000", "13934592000"])
        self.assertEqual(parse_json_table(text)["rows"][0]["coefficients"], [3429216000, 13934592000])

    def test_csv(self):
        self.assertEqual(render_table(B_TABLE, "csv").splitlines(),
                         ["n,z,degree,coefficient", "4,0,0,12", "4,0,1,6", "4,1,0,6"])
        self.assertEqual(render_table(A_TABLE, "csv").splitlines()[:2], ["n,degree,coefficient", "6,0,72"])

    def test_unknown_format(self):
        with self.assertRaises(UnknownSelectorError):
            render_table(A_TABLE, "yaml")
        with self.assertRaises(UnknownSelectorError):
            check_format("xml")


class TestRenderReport(unittest.TestCase):

    def test_pass_line(self):
        report = VerificationReport(id="omega", checked=3)
        self.assertEqual(render_report(report, "text"), "omega: PASS (3 checks, 0 failures)")

    def test_mismatch_line(self):
        report = VerificationReport(id="verify")
        report.record({"k": 3, "length": 6, "n": 2, "j": 0, "s": 1, "method": "A-dual"}, CheckResult(457, 456, False))
        lines = render_report(report, "text").splitlines()
        self.assertTrue(lines[0].startswith("verify: FAIL (1 checks, 1 failures"))
        self.assertEqual(lines[1], "mismatch (3, 2, 0, 1, A-dual, 457) expected 456")
        self.assertEqual(render_report(report, "csv").splitlines()[1], "3,2,0,1,A-dual,457")

    def test_json(self):
        report = VerificationReport(id="omega", checked=1)
        payload = json.loads(render_report(report, "json"))
        self.assertEqual(payload["status"], "pass")
        self.assertEqual(payload["checked"], 1)
        self.assertNotIn("elapsed", payload)


class TestSelectors(unittest.TestCase):

    def test_parse_selector(self):
        self.assertEqual(parse_selector("const"), 0)
        self.assertIsNone(parse_selector("top"))
        self.assertEqual(parse_selector("x3"), 3)
        with self.assertRaises(UnknownSelectorError):
            parse_selector("middle")

    def test_select_coefficient(self):
        a = IntPoly([72, 456, 192])
        b = BiPoly([192, 288], [168, 72])
        self.assertEqual(select_coefficient("A", a, "top", 3, 6), 192)
        self.assertEqual(select_coefficient("B", b, "const", 3, 6), 360)
        self.assertEqual(select_coefficient("B0", b, "x1", 3, 6), 288)
        self.assertEqual(select_coefficient("B1", b, "top", 3, 6), 0)

    def test_top_needs_positive_modulus(self):
        with self.assertRaises(UnknownSelectorError):
            select_coefficient("A", IntPoly([1, 4, 1]), "top", 0, 3)

    def test_family(self):
        self.assertEqual(check_family("B1"), "B1")
        with self.assertRaises(UnknownSelectorError):
            check_family("C")

    def test_format_sequence(self):
        self.assertEqual(format_sequence([1, 2, 2, 12]), "1, 2, 2, 12")
        self.assertEqual(format_sequence([]), "")

    def test_parse_residues(self):
        self.assertEqual(parse_residues(None), [0])
        self.assertEqual(parse_residues("2,0,2"), [0, 2])
        with self.assertRaises(UnknownSelectorError):
            parse_residues("a,b")


if __name__ == '__main__':
    unittest.main()
