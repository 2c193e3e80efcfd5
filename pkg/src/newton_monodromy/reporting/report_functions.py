import dataclasses
import json
from fractions import Fraction

import pandas as pd

from newton_monodromy.ehrhart.polynomials import LaurentBiPoly, PuiseuxPolynomial, UniPoly
from newton_monodromy.lattice.polytope import Face
from newton_monodromy.newton.polyhedra import FacetDatum
from newton_monodromy.spectrum.hodge import EHDPolynomial, JordanCounts
from newton_monodromy.zeta.cyclotomic import CyclotomicProduct, RootOfUnity


def format_fraction(value):
    """Exact rational as "p/q", integers without a denominator."""

    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def facet_table(data):
    """One row per facet term of the zeta formula."""

    rows = [
        {
            "S": "{" + ",".join(str(i + 1) for i in datum.S) + "}",
            "alpha": datum.alpha,
            "dP": datum.dP,
            "dQ": datum.dQ,
            "d": datum.d,
            "v": datum.v,
        }
        for datum in data
    ]
    return pd.DataFrame(rows, columns=["S", "alpha", "dP", "dQ", "d", "v"])


def hodge_table(E: EHDPolynomial):
    """h^{p,q} laid out with p down the rows and q across, zeros filled in."""

    top = E.n - 1
    frame = pd.DataFrame(0, index=range(top + 1), columns=range(top + 1))
    for (p, q), h in E.hodge_numbers().items():
        frame.loc[p, q] = h
    frame.index.name, frame.columns.name = "p", "q"
    return frame


def jordan_table(tables):
    rows = [row for counts in tables.values() for row in counts.as_rows()]
    return pd.DataFrame(rows, columns=["lambda", "size", "blocks", "provenance"])


def check_table(checks):
    return pd.DataFrame([dataclasses.asdict(check) for check in checks], columns=["name", "passed", "detail"])


def spectrum_table(spectrum: PuiseuxPolynomial):
    rows = [{"exponent": format_fraction(alpha), "multiplicity": c} for alpha, c in spectrum.items()]
    return pd.DataFrame(rows, columns=["exponent", "multiplicity"])


def to_machine(value):
    """Recursively converts engine values into JSON-ready structures.

    Rationals become "p/q" strings, cyclotomic products lists of {d, exp},
    Puiseux polynomials lists of {exponent, coefficient}.
    """
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, RootOfUnity):
        return str(value)
    if isinstance(value, CyclotomicProduct):
        return [{"d": d, "exp": e} for d, e in value.factors]
    if isinstance(value, PuiseuxPolynomial):
        return [{"exponent": format_fraction(alpha), "coefficient": c} for alpha, c in value.items()]
    if isinstance(value, UniPoly):
        return value.to_list()
    if isinstance(value, LaurentBiPoly):
        return [{"p": p, "q": q, "coefficient": c} for (p, q), c in value.items()]
    if isinstance(value, EHDPolynomial):
        return {
            "lambda": str(value.root),
            "E": str(value),
            "hodge_numbers": [{"p": p, "q": q, "h": h} for (p, q), h in sorted(value.hodge_numbers().items())],
        }
    if isinstance(value, JordanCounts):
        return value.as_rows()
    if isinstance(value, FacetDatum):
        return {
            "S": [i + 1 for i in value.S],
            "alpha": list(value.alpha),
            "dP": value.dP,
            "dQ": value.dQ,
            "d": value.d,
            "v": value.v,
        }
    if isinstance(value, Face):
        return [list(v) for v in sorted(value.vertices)]
    if dataclasses.is_dataclass(value):
        return {f.name: to_machine(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {str(key) if not isinstance(key, Fraction) else format_fraction(key): to_machine(v) for key, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [to_machine(v) for v in value]
    return str(value)


def render_machine(report):
    return json.dumps(to_machine(report), indent=2)


def _text_value(value):
    """Compact human rendering of a single result value."""

    if isinstance(value, (CyclotomicProduct, PuiseuxPolynomial, UniPoly, LaurentBiPoly, EHDPolynomial, RootOfUnity)):
        return str(value)
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, tuple):
        return ", ".join(_text_value(v) for v in value)
    return str(value)


def render_text(report):
    """Plain text report: inputs, hypothesis checklist, results, cross-checks and errors."""

    lines = ["== inputs =="]
    lines += [f"{key}: {value}" for key, value in report["inputs"].items()]
    lines += ["", "== hypotheses =="]
    lines += [f"{key}: {value}" for key, value in report["hypotheses"].items()]
    lines += ["", "== results =="]
    for key, value in report["results"].items():
        if key == "facet data":
            lines += [key + ":", facet_table(value).to_string(index=False)]
        elif key == "jordan":
            lines += [key + ":", jordan_table(value).to_string(index=False)]
        elif key == "E":
            for root, E in value.items():
                lines += [f"E_{root}(u, v) = {E}", hodge_table(E).to_string()]
        elif key == "spectrum":
            lines += [f"spectrum: {value}", spectrum_table(value).to_string(index=False)]
        elif key == "oracles":
            lines += [key + ":", pd.DataFrame([dataclasses.asdict(r) for r in value]).to_string(index=False)]
        elif isinstance(value, dict):
            lines += [f"{key}:"] + [f"  {_text_value(k)}: {_text_value(v)}" for k, v in value.items()]
        else:
            lines.append(f"{key}: {_text_value(value)}")
    if report["checks"]:
        lines += ["", "== checks ==", check_table(report["checks"]).to_string(index=False)]
    if report["errors"]:
        lines += ["", "== errors =="] + report["errors"]
    return "\n".join(lines)


def render(report, output_format="text"):
    if output_format == "machine":
        return render_machine(report)
    return render_text(report)
