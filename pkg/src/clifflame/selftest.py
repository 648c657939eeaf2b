"""Golden fixtures and reduced property suites behind ``lame selftest``."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Callable

from . import algebra
from .algebra import E1, E2, E3, Multivector, mv_mul
from .checks import run_check
from .expr import parse_field, parse_scalar
from .fields import grade_project_field
from .operators import StructuralSet, lame_classical, lame_table, params_from, sandwich
from .theorems import decompose_t3


class FixtureError(Exception):
    pass


def load_fixtures(path: str | Path | None = None) -> dict:
    if path is None:
        text = resources.files("clifflame").joinpath("data/golden.json").read_text()
    else:
        path = Path(path)
        if not path.is_file():
            raise FixtureError(f"fixture file not found: {path}")
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FixtureError(f"fixture file is not valid JSON: {exc}") from None


def _set(rows) -> StructuralSet:
    return StructuralSet.from_rows([[parse_scalar(str(c)) for c in r] for r in rows])


def _params(fx: dict):
    return params_from(alpha=parse_scalar(fx["alpha"]), beta=parse_scalar(fx["beta"]), strict=False)


def fixture_appendix(fx: dict) -> list[str]:
    p = _params(fx)
    u = parse_field(fx["field"])
    table = lame_table(p, _set(fx["phi"]), _set(fx["psi"]), u)
    problems = []
    if p.message() != fx["message"]:
        problems.append(f"message {p.message()!r}")
    for name, want in fx["expected"].items():
        if table[name] != parse_field(want):
            problems.append(f"{name} = {table[name]}, expected {want}")
    return problems


def fixture_decomposition(fx: dict) -> list[str]:
    p = _params(fx)
    phi, psi = _set(fx["phi"]), _set(fx["psi"])
    dec = decompose_t3(p, phi, psi, parse_field(fx["field"]))
    problems = []
    if dec.scale_factor != parse_scalar(fx["scale_factor"]):
        problems.append(f"scale factor {dec.scale_factor}")
    if dec.h != parse_field(fx["h"]):
        problems.append(f"h = {dec.h}")
    if dec.i != parse_field(fx["i"]):
        problems.append(f"i* = {dec.i}")
    return problems


def fixture_counterexample(fx: dict) -> list[str]:
    g = parse_field(fx["field"])
    phi, psi = _set(fx["phi"]), _set(fx["psi"])
    problems = []
    got = {"full": sandwich(phi, g, psi)}
    for k in range(4):
        got[f"grade{k}"] = sandwich(phi, grade_project_field(g, k), psi)
    for key, want in fx["expected"].items():
        if got[key] != parse_field(want):
            problems.append(f"{key} = {got[key]}, expected {want}")
    return problems


def fixture_inhomogeneous(fx: dict) -> list[str]:
    r = lame_classical(_params(fx), parse_field(fx["field"]))
    return [] if r == parse_field(fx["rhs"]) else [f"classical residual {r}"]


def fixture_anticommutation() -> list[str]:
    problems = []
    gens = (E1, E2, E3)
    for i, a in enumerate(gens):
        for j, b in enumerate(gens):
            got = mv_mul(a, b) + mv_mul(b, a)
            want = Multivector.scalar(-2 if i == j else 0)
            if got != want:
                problems.append(f"e{i + 1}e{j + 1} + e{j + 1}e{i + 1} = {got}")
    return problems


FIXTURES: dict[str, Callable[[dict], list[str]]] = {
    "appendix": fixture_appendix,
    "decomposition": fixture_decomposition,
    "counterexample": fixture_counterexample,
    "inhomogeneous": fixture_inhomogeneous,
}

# reduced case counts for the property suites
SUITES = {
    **{f"lemma1.{k}": 10 for k in range(1, 9)},
    "lemma2": 5,
    "prop1": 3,
    "prop2": 5,
    "factorization": 10,
}


def run_selftest(fixtures_path: str | Path | None = None, inject_fault: bool = False, out=print) -> bool:
    """Run every fixture and suite, printing one verdict line each."""
    data = load_fixtures(fixtures_path)
    missing = [name for name in FIXTURES if name not in data]
    if missing:
        raise FixtureError(f"fixture file lacks sections: {', '.join(missing)}")
    if inject_fault:
        algebra.inject_sign_fault(True)
    ok = True
    try:
        results: list[tuple[str, list[str]]] = [("anticommutation", fixture_anticommutation())]
        for name, run in FIXTURES.items():
            try:
                results.append((name, run(data[name])))
            except Exception as exc:  # a broken engine may fail loudly
                results.append((name, [f"{type(exc).__name__}: {exc}"]))
        for name, cases in SUITES.items():
            try:
                report = run_check(name, seed=0, cases=cases)
                results.append((name, [] if report.passed else [r.name for r in report.conclusion_residuals[:3]]))
            except Exception as exc:
                results.append((name, [f"{type(exc).__name__}: {exc}"]))
        for name, problems in results:
            if problems:
                ok = False
                out(f"FAIL {name}: " + "; ".join(problems))
            else:
                out(f"PASS {name}")
    finally:
        if inject_fault:
            algebra.inject_sign_fault(False)
    out("selftest: " + ("all fixtures pass" if ok else "FAILURES"))
    return ok
