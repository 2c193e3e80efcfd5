from fractions import Fraction

import pytest

from newton_monodromy.ehrhart.polynomials import LaurentBiPoly, PuiseuxPolynomial, UniPoly
from newton_monodromy.model import model_classes
from newton_monodromy.model.model_classes import JobSpec, run
from newton_monodromy.newton.polyhedra import facet_data
from newton_monodromy.parsing.parse_polynomial import parse_polynomial
from newton_monodromy.reporting.report_functions import (
    facet_table,
    format_fraction,
    hodge_table,
    render,
    render_text,
    to_machine,
)
from newton_monodromy.spectrum.hodge import e_lambda
from newton_monodromy.zeta.cyclotomic import CyclotomicProduct, RootOfUnity

ALL_ASSERTED = {"nondegenerate": True, "isolated": True, "transversal": True}


def worked_job(command, **kwargs):
    return JobSpec(command, 2, parse_polynomial("x^2 + y^3", 2), parse_polynomial("x + y", 2), **kwargs)


@pytest.mark.parametrize("value, text", [(Fraction(1, 4), "1/4"), (Fraction(6, 3), "2"), (-3, "-3")])
def test_format_fraction(value, text):
    assert format_fraction(value) == text


def test_machine_forms():
    assert to_machine(Fraction(7, 4)) == "7/4"
    assert to_machine(RootOfUnity(4, 3)) == "3/4"
    assert to_machine(CyclotomicProduct.from_exponents({2: 1, 4: -1})) == [{"d": 2, "exp": 1}, {"d": 4, "exp": -1}]
    spectrum = PuiseuxPolynomial({Fraction(1, 4): 1, Fraction(7, 4): 1})
    assert sorted(to_machine(spectrum), key=lambda item: item["exponent"]) == [
        {"exponent": "1/4", "coefficient": 1},
        {"exponent": "7/4", "coefficient": 1},
    ]
    assert to_machine(UniPoly.from_list([1, 3])) == [1, 3]
    assert to_machine(LaurentBiPoly({(0, 1): -1})) == [{"p": 0, "q": 1, "coefficient": -1}]
    assert to_machine({RootOfUnity(4, 1): (Fraction(1, 2), True)}) == {"1/4": ["1/2", True]}


def test_facet_table(worked_pair):
    table = facet_table(facet_data(worked_pair, (0, 1)))
    assert list(table.columns) == ["S", "alpha", "dP", "dQ", "d", "v"]
    assert sorted(table["d"]) == [1, 4]
    assert set(table["S"]) == {"{1,2}"}


def test_hodge_table(worked_pair, i):
    table = hodge_table(e_lambda(worked_pair, i))
    assert table.shape == (2, 2)
    assert table.loc[0, 1] == 1
    assert table.loc[1, 0] == 0


def test_text_report_shows_the_zeta_function():
    report, status = run(worked_job("zeta-local"))
    assert status == 0
    text = render_text(report)
    assert "== inputs ==" in text
    assert "zeta: (1-t^2)(1-t^4)^{-1}" in text
    assert "euler characteristic: -2" in text


def test_text_report_lists_errors():
    report, status = run(worked_job("spectrum"))
    assert status == 1
    text = render(report)
    assert "== errors ==" in text
    assert "--assume-nondegenerate" in text


def test_text_report_tables():
    report, _ = run(worked_job("e-lambda", all_lambdas=True, assumptions=ALL_ASSERTED))
    text = render(report, "text")
    assert "E_1/4(u, v)" in text
    assert "== checks ==" in text


def test_reports_say_nondegeneracy_is_never_verified():
    report, status = run(worked_job("spectrum", assumptions=ALL_ASSERTED))
    assert status == 0
    assert report["hypotheses"]["nondegeneracy"].endswith("asserted by the user, never verified")
    assert "nondegeneracy: the formulas assume non-degenerate P and Q" in render_text(report)
    report, _ = run(worked_job("zeta-local"))
    assert "not asserted, never verified" in render_text(report)
    report, _ = run(worked_job("ehrhart"))
    assert "nondegeneracy" not in report["hypotheses"]


def checks_by_name(report):
    return {check.name: check for check in report["checks"]}


def test_jordan_checks_compare_both_paths(monkeypatch):
    report, status = run(worked_job("jordan", roots=[RootOfUnity(4, 1)], assumptions=ALL_ASSERTED))
    assert status == 0
    assert checks_by_name(report)["jordan paths 1/4"].passed
    monkeypatch.setattr(model_classes, "jordan_paths", lambda pair, root: {"via_local_h": {1: 1}, "via_weights": {1: 0}})
    report, status = run(worked_job("jordan", roots=[RootOfUnity(4, 1)], assumptions=ALL_ASSERTED))
    assert status == 1
    assert not checks_by_name(report)["jordan paths 1/4"].passed


def test_jordan_extremes_check_compares_with_the_counts(monkeypatch):
    job = worked_job("jordan-extremes", roots=[RootOfUnity(4, 1)], assumptions=ALL_ASSERTED)
    report, status = run(job)
    assert status == 0
    assert checks_by_name(report)["jordan extremes 1/4"].passed
    monkeypatch.setattr(model_classes, "jordan_extremes", lambda pair, root, verify=True: (1, 0))
    report, status = run(job)
    assert status == 1
    assert not checks_by_name(report)["jordan extremes 1/4"].passed
