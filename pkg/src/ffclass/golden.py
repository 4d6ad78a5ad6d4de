"""Golden regression cases: worked class tables stored as JSON fixtures.

Fixtures follow the classify JSON schema plus an "elliptic" section. The
pairing of forms with ideals (and with points) may use either sign
convention v = b/2 or v = -b/2, so comparisons are made on sets, and a form
is accepted in place of its opposite wherever a pairing is compared.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .cli import classify_json, elliptic_json, parse_poly
from .classgroup import cg_enumerate
from .elliptic import EllipticCurve
from .ff import PrimeField

FIXTURES = ("example1.json", "example2.json")


@dataclass
class GoldenCase:
    name: str
    p: int
    alpha: str
    expected: dict      # classify JSON
    elliptic: dict | None

    @classmethod
    def from_dict(cls, name: str, data: dict) -> GoldenCase:
        return cls(name, int(data["p"]), data["alpha"], data["classify"], data.get("elliptic"))

    def to_dict(self) -> dict:
        out = {"p": self.p, "alpha": self.alpha, "classify": self.expected}
        if self.elliptic is not None:
            out["elliptic"] = self.elliptic
        return out


def load_case(path) -> GoldenCase:
    path = Path(path)
    return GoldenCase.from_dict(path.stem, json.loads(path.read_text()))


def builtin_cases() -> list[GoldenCase]:
    root = resources.files("ffclass") / "fixtures"
    return [GoldenCase.from_dict(Path(f).stem, json.loads((root / f).read_text()))
            for f in FIXTURES]


def _norm_poly(s: str, p: int) -> str:
    from .poly import format_poly
    return format_poly(parse_poly(s, p))


def _form(f, p):
    return tuple(_norm_poly(t, p) for t in f)


def _opposite(f, p):
    from .poly import format_poly
    return (f[0], format_poly(-parse_poly(f[1], p)), f[2])


def _canon_up_to_opposite(f, p):
    return min(f, _opposite(f, p))


def _diff_sets(label, want, got, diffs):
    if want != got:
        missing, extra = sorted(want - got), sorted(got - want)
        diffs.append(f"{label}: missing {missing}, unexpected {extra}")


def diff_classify(expected: dict, actual: dict, p: int) -> list[str]:
    diffs: list[str] = []
    ecl, acl = expected["classes"], actual["classes"]
    if len(ecl) != len(acl):
        diffs.append(f"class count: expected {len(ecl)}, got {len(acl)}")
    ef = {_form(c["form"], p) for c in ecl}
    af = {_form(c["form"], p) for c in acl}
    _diff_sets("forms", ef, af, diffs)
    ei = {(_norm_poly(c["u"], p), _norm_poly(c["v"], p)) for c in ecl}
    ai = {(_norm_poly(c["u"], p), _norm_poly(c["v"], p)) for c in acl}
    _diff_sets("ideals", ei, ai, diffs)
    # orders travel with forms; a form and its opposite have the same order
    eo = {(_form(c["form"], p), c["order"]) for c in ecl}
    ao = {(_form(c["form"], p), c["order"]) for c in acl}
    _diff_sets("(form, order)", eo, ao, diffs)
    if Counter(c["order"] for c in ecl) != Counter(c["order"] for c in acl):
        diffs.append("order multiset differs")
    for key in ("invariant_factors", "num_genera"):
        if expected[key] != actual[key]:
            diffs.append(f"{key}: expected {expected[key]}, got {actual[key]}")

    def by_form(data, idx_groups):
        return {frozenset(_canon_up_to_opposite(_form(data["classes"][i]["form"], p), p)
                          for i in g) for g in idx_groups}

    _diff_sets("cl_merged", by_form(expected, expected["cl_merged"]),
               by_form(actual, actual["cl_merged"]), diffs)

    def principal(data):
        return {_form(c["form"], p) for c in data["classes"] if c["principal"]}

    _diff_sets("principal genus", principal(expected), principal(actual), diffs)

    def genera(data):
        groups: dict = {}
        for c in data["classes"]:
            groups.setdefault(tuple(c["genus"]), set()).add(_form(c["form"], p))
        return {frozenset(g) for g in groups.values()}

    _diff_sets("genera", genera(expected), genera(actual), diffs)
    return diffs


def diff_elliptic(expected: dict, actual: dict, p: int) -> list[str]:
    diffs: list[str] = []

    def table(data):
        return {tuple(pt["point"]): pt for pt in data["points"]}

    et, at = table(expected), table(actual)
    _diff_sets("points", set(et), set(at), diffs)
    for P in sorted(set(et) & set(at)):
        e, a = et[P], at[P]
        if e["order"] != a["order"]:
            diffs.append(f"point {P}: order expected {e['order']}, got {a['order']}")
        ef, af = _form(e["form"], p), _form(a["form"], p)
        if af != ef and af != _opposite(ef, p):
            diffs.append(f"point {P}: form expected {ef} (or opposite), got {af}")
    for key in ("n_points", "class_number", "invariant_factors", "isomorphism_ok"):
        if key in expected and expected[key] != actual[key]:
            diffs.append(f"{key}: expected {expected[key]}, got {actual[key]}")
    return diffs


def run_golden(case: GoldenCase) -> list[str]:
    """Empty list means pass; otherwise one line per discrepancy."""
    alpha = parse_poly(case.alpha, case.p)
    diffs = diff_classify(case.expected, classify_json(cg_enumerate(alpha)), case.p)
    if case.elliptic is not None:
        actual = elliptic_json(EllipticCurve(PrimeField(case.p), alpha))
        diffs += diff_elliptic(case.elliptic, actual, case.p)
    return [f"{case.name}: {d}" for d in diffs]
