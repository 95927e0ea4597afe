"""Algebra and cochain JSON.

Algebra documents look like::

    {"name": "so(3)", "dim": 3, "basis": ["J1", "J2", "J3"],
     "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "1"}}, ...]}

Indices are 0-based and rationals are strings ``"p/q"`` or ``"p"``.  The keys
written by ``registry show`` and ``extend`` (``pi1``, ``simply_connected``,
``universal_cover``, ``central_indices``) are accepted so that outputs can be
piped back in; anything else is rejected.
"""
from __future__ import annotations

import json
from typing import Any

from .cohomology import CohomologyBasis, TwoCochain
from .lie import LieAlgebra, LieAlgebraError
from .rational import format_rational, parse_rational
from .registry import GroupDescriptor, Pi1Descriptor

ALGEBRA_KEYS = {"name", "dim", "basis", "brackets"}
METADATA_KEYS = {"pi1", "simply_connected", "universal_cover", "central_indices"}


class InputError(ValueError):
    """Malformed input; ``path`` locates the first offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


def loads(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}:{exc.lineno}:{exc.colno}", exc.msg) from None


def _expect(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise InputError(path, message)


def _int(value, path: str) -> int:
    _expect(isinstance(value, int) and not isinstance(value, bool), path, "expected an integer")
    return value


def _rat(value, path: str):
    try:
        return parse_rational(value)
    except ValueError as exc:
        raise InputError(path, str(exc)) from None


def algebra_from_json(doc: Any) -> tuple[LieAlgebra, dict]:
    """Parse an algebra document; returns the raw algebra and any metadata keys."""
    _expect(isinstance(doc, dict), "$", "expected an object")
    unknown = set(doc) - ALGEBRA_KEYS - METADATA_KEYS
    _expect(not unknown, f"$.{sorted(unknown)[0]}" if unknown else "$", "unknown key")
    for key in ("name", "dim", "basis", "brackets"):
        _expect(key in doc, f"$.{key}", "missing")
    _expect(isinstance(doc["name"], str), "$.name", "expected a string")
    dim = _int(doc["dim"], "$.dim")
    _expect(dim > 0, "$.dim", "must be positive")
    basis = doc["basis"]
    _expect(isinstance(basis, list), "$.basis", "expected a list")
    for a, b in enumerate(basis):
        _expect(isinstance(b, str), f"$.basis[{a}]", "expected a string")
    _expect(len(basis) == dim, "$.basis", f"has {len(basis)} names but dim is {dim}")
    _expect(isinstance(doc["brackets"], list), "$.brackets", "expected a list")
    entries = []
    for e, entry in enumerate(doc["brackets"]):
        p = f"$.brackets[{e}]"
        _expect(isinstance(entry, dict), p, "expected an object")
        extra = set(entry) - {"i", "j", "coeffs"}
        _expect(not extra, f"{p}.{sorted(extra)[0]}" if extra else p, "unknown key")
        for key in ("i", "j", "coeffs"):
            _expect(key in entry, f"{p}.{key}", "missing")
        i, j = _int(entry["i"], f"{p}.i"), _int(entry["j"], f"{p}.j")
        _expect(0 <= i < dim, f"{p}.i", "index out of range")
        _expect(0 <= j < dim, f"{p}.j", "index out of range")
        coeffs = entry["coeffs"]
        _expect(isinstance(coeffs, dict), f"{p}.coeffs", "expected an object")
        parsed = {}
        for k, v in coeffs.items():
            kp = f"{p}.coeffs[{k!r}]"
            _expect(k.isdigit() and int(k) < dim, kp, "coefficient index out of range")
            parsed[int(k)] = _rat(v, kp)
        entries.append((i, j, parsed))
    try:
        L = LieAlgebra.from_brackets(doc["name"], basis, entries)
    except LieAlgebraError as exc:
        raise InputError("$.brackets", str(exc)) from None
    return L, {k: doc[k] for k in METADATA_KEYS if k in doc}


def algebra_to_json(L: LieAlgebra) -> dict:
    brackets = []
    for (i, j) in sorted(L.brackets):
        vec = L.brackets[(i, j)]
        brackets.append({"i": i, "j": j, "coeffs": {str(k): format_rational(v) for k, v in sorted(vec.items())}})
    return {"name": L.name, "dim": L.dim, "basis": list(L.basis), "brackets": brackets}


def pi1_from_json(obj: Any, path: str = "$.pi1") -> Pi1Descriptor:
    _expect(isinstance(obj, dict), path, "expected an object")
    extra = set(obj) - {"free_rank", "torsion"}
    _expect(not extra, path, f"unknown key {sorted(extra)[0] if extra else ''}")
    free = _int(obj.get("free_rank", 0), f"{path}.free_rank")
    torsion = obj.get("torsion", [])
    _expect(isinstance(torsion, list), f"{path}.torsion", "expected a list")
    torsion = tuple(_int(t, f"{path}.torsion[{a}]") for a, t in enumerate(torsion))
    try:
        return Pi1Descriptor(free, torsion)
    except ValueError as exc:
        raise InputError(path, str(exc)) from None


def group_to_json(G: GroupDescriptor) -> dict:
    doc = algebra_to_json(G.algebra)
    doc["pi1"] = G.pi1.to_json()
    doc["simply_connected"] = G.simply_connected
    doc["universal_cover"] = G.universal_cover_name
    return doc


def cochain_to_json(om: TwoCochain) -> list[dict]:
    return [{"i": i, "j": j, "value": format_rational(v)} for (i, j), v in sorted(om.entries.items())]


def cochain_from_json(obj: Any, dim: int, path: str = "$") -> TwoCochain:
    _expect(isinstance(obj, list), path, "expected a list of {i, j, value} entries")
    entries = []
    for e, entry in enumerate(obj):
        p = f"{path}[{e}]"
        _expect(isinstance(entry, dict), p, "expected an object")
        extra = set(entry) - {"i", "j", "value"}
        _expect(not extra, p, f"unknown key {sorted(extra)[0] if extra else ''}")
        for key in ("i", "j", "value"):
            _expect(key in entry, f"{p}.{key}", "missing")
        i, j = _int(entry["i"], f"{p}.i"), _int(entry["j"], f"{p}.j")
        _expect(0 <= i < dim and 0 <= j < dim, p, f"index out of range for dim {dim}")
        entries.append(((i, j), _rat(entry["value"], f"{p}.value")))
    try:
        return TwoCochain.from_entries(dim, entries)
    except LieAlgebraError as exc:
        raise InputError(path, str(exc)) from None


def cochains_from_json(obj: Any, dim: int) -> list[TwoCochain]:
    """One cochain (list of entries), several (list of lists), or an ``h2`` document."""
    if isinstance(obj, dict):
        _expect("representatives" in obj, "$", "expected an h2 document with 'representatives'")
        return [cochain_from_json(r, dim, f"$.representatives[{a}]") for a, r in enumerate(obj["representatives"])]
    _expect(isinstance(obj, list), "$", "expected a list")
    if obj and all(isinstance(x, list) for x in obj):
        return [cochain_from_json(r, dim, f"$[{a}]") for a, r in enumerate(obj)]
    return [cochain_from_json(obj, dim)]


def h2_to_json(h: CohomologyBasis) -> dict:
    return {"dim_Z2": h.dim_Z2, "dim_B2": h.dim_B2, "dim_H2": h.dim_H2,
            "representatives": [cochain_to_json(r) for r in h.representatives]}
