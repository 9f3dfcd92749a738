"""Lossless JSON/CSV/text renderings of series and histograms.

Coefficients travel as decimal strings in JSON so arbitrary precision
survives any consumer; CSV histograms are plain ``degree,dimension`` rows
with no scientific notation.
"""

import csv
import io

from .errors import DomainError
from .schur import QPoly, SchurSeries


def schur_series_to_dict(series: SchurSeries) -> dict:
    return {
        "n": series.n,
        "terms": [
            {"q": grade, "lambda": list(lam), "coeff": str(coeff)}
            for (grade, lam), coeff in series.terms()
        ],
    }


def schur_series_from_dict(data: dict) -> SchurSeries:
    try:
        terms = {
            (int(t["q"]), tuple(int(p) for p in t["lambda"])): int(t["coeff"])
            for t in data["terms"]
        }
        return SchurSeries(int(data["n"]), terms)
    except (KeyError, TypeError) as exc:
        raise DomainError(f"malformed series payload: {exc}") from exc


def qpoly_to_dict(poly: QPoly) -> dict:
    return {"coefficients": [str(c) for c in poly.coefficients]}


def qpoly_from_dict(data: dict) -> QPoly:
    try:
        return QPoly(int(c) for c in data["coefficients"])
    except (KeyError, TypeError) as exc:
        raise DomainError(f"malformed polynomial payload: {exc}") from exc


def format_partition(lam) -> str:
    return "s[" + ",".join(str(p) for p in lam) + "]"


def format_schur_series(series: SchurSeries) -> str:
    """One line per grade: ``q^d: s[...] + 2*s[...]``, grades ascending."""
    by_grade: dict[int, list[str]] = {}
    for (grade, lam), coeff in series.terms():
        prefix = "" if coeff == 1 else f"{coeff}*"
        by_grade.setdefault(grade, []).append(prefix + format_partition(lam))
    if not by_grade:
        return "0"
    return "\n".join(
        f"q^{grade}: " + " + ".join(parts)
        for grade, parts in sorted(by_grade.items())
    )


def format_qpoly(poly: QPoly) -> str:
    """Comma-separated coefficient list, constant term first."""
    if poly.degree < 0:
        return "0"
    return ",".join(str(c) for c in poly.coefficients)


def histogram_rows(poly: QPoly) -> list[tuple[int, int]]:
    return [(d, poly.coefficient(d)) for d in range(poly.degree + 1)]


def write_histogram_csv(poly: QPoly, stream) -> None:
    writer = csv.writer(stream)
    writer.writerow(["degree", "dimension"])
    for degree, dimension in histogram_rows(poly):
        writer.writerow([degree, dimension])


def histogram_csv_text(poly: QPoly) -> str:
    buffer = io.StringIO()
    write_histogram_csv(poly, buffer)
    return buffer.getvalue()


def schur_series_csv_text(series: SchurSeries) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(["grade", "partition", "coefficient"])
    for (grade, lam), coeff in series.terms():
        writer.writerow([grade, " ".join(str(p) for p in lam), coeff])
    return buffer.getvalue()
