"""Canonical JSON / CSV encodings for every object the CLI emits.

Coefficients are written as exact fraction strings (``"3"``, ``"-1/2"``);
polynomial terms appear in descending graded-lexicographic order, partitions
in the fixed decreasing-lex order. ``dumps`` followed by ``loads`` returns an
equal object.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .cycles import Cycle, CycleMatrix
from .exact import LaurentPoly, RationalFn
from .hilb import GradedSeries
from .macdonald import MacdonaldKostkaTable
from .partitions import Partition, partitions_of
from .symfun import PartitionMatrix


def coeff_str(c) -> str:
    return str(Fraction(c))


def parse_coeff(s: str):
    c = Fraction(s)
    return c.numerator if c.denominator == 1 else c


def partition_key(mu) -> str:
    return json.dumps(list(mu), separators=(",", ":"))


def poly_to_json(p: LaurentPoly) -> list:
    return [{"e": list(e), "c": coeff_str(c)} for e, c in p.items()]


def poly_from_json(terms: list, nvars: int = 2) -> LaurentPoly:
    if terms:
        nvars = len(terms[0]["e"])
    return LaurentPoly({tuple(t["e"]): parse_coeff(t["c"]) for t in terms}, nvars)


# -- result wrappers ----------------------------------------------------------


@dataclass(frozen=True)
class PolyResult:
    """A bivariate series together with its value at s = t = 1."""

    kind: str
    n: int
    k: int
    poly: LaurentPoly

    @property
    def value_at_11(self):
        return self.poly.evaluate((1, 1))


@dataclass(frozen=True)
class PartitionList:
    n: int
    partitions: tuple


@dataclass(frozen=True)
class FakeDegreeTable:
    n: int
    degrees: dict


@dataclass(frozen=True)
class SeriesResult:
    series: GradedSeries
    order: int

    def coefficients(self) -> dict:
        return self.series.expand(self.order)


@dataclass(frozen=True)
class CycleReport:
    n: int
    matrix: CycleMatrix
    cycles: dict = field(default_factory=dict)


# -- JSON ------------------------------------------------------------------------


def to_json_obj(obj) -> dict:
    if isinstance(obj, PolyResult):
        return {
            "n": obj.n,
            "k": obj.k,
            "terms": poly_to_json(obj.poly),
            "value_at_11": coeff_str(obj.value_at_11),
        }
    if isinstance(obj, PartitionList):
        return {"n": obj.n, "partitions": [list(p) for p in obj.partitions]}
    if isinstance(obj, PartitionMatrix):
        return {
            "n": obj.n,
            "partitions": [list(p) for p in obj.order],
            "matrix": [[coeff_str(x) for x in r] for r in obj.rows],
        }
    if isinstance(obj, MacdonaldKostkaTable):
        entries = {}
        for lam in obj.order:
            for mu in obj.order:
                entries[f"K[{partition_key(lam)[1:-1]}][{partition_key(mu)[1:-1]}]"] = poly_to_json(obj[lam, mu])
        return {"n": obj.n, "variables": ["q", "t"], "partitions": [list(p) for p in obj.order], "entries": entries}
    if isinstance(obj, FakeDegreeTable):
        return {
            "n": obj.n,
            "fake_degrees": {partition_key(mu): poly_to_json(obj.degrees[mu]) for mu in partitions_of(obj.n)},
        }
    if isinstance(obj, SeriesResult):
        g = obj.series
        return {
            "n": g.n,
            "k": g.k,
            "variant": g.variant,
            "extension": g.extension,
            "numerator": poly_to_json(g.numerator),
            "denominator": [[a[0], m] for a, m in sorted(g.denominator.items())],
            "order": obj.order,
            "coefficients": [[e, coeff_str(c)] for e, c in sorted(obj.coefficients().items())],
        }
    if isinstance(obj, Cycle):
        return {"n": obj.n, "components": [[list(lam), c] for lam, c in obj.items()]}
    if isinstance(obj, CycleReport):
        return {
            "n": obj.n,
            "partitions": [list(p) for p in obj.matrix.order],
            "matrix": [list(r) for r in obj.matrix.rows],
            "cycles": {partition_key(mu): to_json_obj(c)["components"] for mu, c in obj.cycles.items()},
        }
    from .verify import VerifyReport

    if isinstance(obj, VerifyReport):
        return obj.to_json_obj()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_json_obj(obj), separators=(",", ":")) + "\n"


def loads(text: str, kind: str):
    """Inverse of :func:`dumps`; ``kind`` names the emitted object type."""
    d = json.loads(text)
    if kind in ("catalan", "procesi"):
        return PolyResult(kind, d["n"], d["k"], poly_from_json(d["terms"]))
    if kind == "partitions":
        return PartitionList(d["n"], tuple(Partition(p) for p in d["partitions"]))
    if kind == "matrix":
        order = tuple(Partition(p) for p in d["partitions"])
        return PartitionMatrix(d["n"], order, tuple(tuple(parse_coeff(x) for x in r) for r in d["matrix"]))
    if kind == "macdonald-kostka":
        order = tuple(Partition(p) for p in d["partitions"])
        entries = {}
        for lam in order:
            for mu in order:
                key = f"K[{partition_key(lam)[1:-1]}][{partition_key(mu)[1:-1]}]"
                entries[(lam, mu)] = poly_from_json(d["entries"][key], 2)
        return MacdonaldKostkaTable(d["n"], order, entries)
    if kind == "fake-degrees":
        return FakeDegreeTable(
            d["n"], {Partition(json.loads(k)): poly_from_json(v, 1) for k, v in d["fake_degrees"].items()}
        )
    if kind == "series":
        value = RationalFn(poly_from_json(d["numerator"], 1), Counter({(a,): m for a, m in d["denominator"]}))
        series = GradedSeries(d["n"], d["k"], d["variant"], value, d["extension"])
        return SeriesResult(series, d["order"])
    if kind == "cycle":
        return Cycle(d["n"], {Partition(p): c for p, c in d["components"]})
    if kind == "char-cycles":
        order = tuple(Partition(p) for p in d["partitions"])
        matrix = CycleMatrix(d["n"], order, tuple(tuple(r) for r in d["matrix"]))
        cycles = {Partition(json.loads(k)): Cycle(d["n"], {Partition(p): c for p, c in v}) for k, v in d["cycles"].items()}
        return CycleReport(d["n"], matrix, cycles)
    if kind == "verify":
        from .verify import VerifyReport

        return VerifyReport.from_json_obj(d)
    raise ValueError(f"unknown kind {kind!r}")


# -- CSV -----------------------------------------------------------------------


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _poly_rows(p: LaurentPoly, prefix=()):
    return [list(prefix) + list(e) + [coeff_str(c)] for e, c in p.items()]


def to_csv(obj) -> str:
    if isinstance(obj, PolyResult):
        return _csv([["i", "j", "c"]] + _poly_rows(obj.poly))
    if isinstance(obj, PartitionList):
        return _csv([["partition"]] + [[partition_key(p)] for p in obj.partitions])
    if isinstance(obj, CycleReport):
        return to_csv(obj.matrix)
    if isinstance(obj, PartitionMatrix):
        header = ["row\\col"] + [partition_key(p) for p in obj.order]
        return _csv([header] + [[partition_key(mu)] + [coeff_str(x) for x in r] for mu, r in zip(obj.order, obj.rows)])
    if isinstance(obj, MacdonaldKostkaTable):
        rows = [["lambda", "mu", "i", "j", "c"]]
        for lam in obj.order:
            for mu in obj.order:
                rows += _poly_rows(obj[lam, mu], (partition_key(lam), partition_key(mu)))
        return _csv(rows)
    if isinstance(obj, FakeDegreeTable):
        rows = [["mu", "i", "c"]]
        for mu in partitions_of(obj.n):
            rows += _poly_rows(obj.degrees[mu], (partition_key(mu),))
        return _csv(rows)
    if isinstance(obj, SeriesResult):
        return _csv([["e", "c"]] + [[e, coeff_str(c)] for e, c in sorted(obj.coefficients().items())])
    if isinstance(obj, Cycle):
        return _csv([["component", "coefficient"]] + [[partition_key(lam), c] for lam, c in obj.items()])
    from .verify import VerifyReport

    if isinstance(obj, VerifyReport):
        return obj.to_csv()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def cycle_from_csv(text: str, n: int) -> Cycle:
    rows = list(csv.reader(io.StringIO(text)))
    return Cycle(n, {Partition(json.loads(p)): int(c) for p, c in rows[1:]})


def poly_from_csv(text: str, nvars: int = 2) -> LaurentPoly:
    rows = list(csv.reader(io.StringIO(text)))
    return LaurentPoly({tuple(int(x) for x in r[:nvars]): parse_coeff(r[nvars]) for r in rows[1:]}, nvars)


def emit(obj, fmt: str = "json", path=None) -> str:
    """Serialize ``obj`` and write it to ``path`` (or return it for stdout)."""
    if fmt == "json":
        text = dumps(obj)
    elif fmt == "csv":
        text = to_csv(obj)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path is not None:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc
    return text
