"""JSON schemas and canonical rendering.

Rationals travel as strings "p/q" in lowest terms with q > 0 (or "p"
when integral); integer arrays are row-major. Catalog names ("K3",
"E8-", "U:m") are accepted anywhere a lattice object is.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction

from .bv import BVData
from .catalog import lattice_by_name
from .census import FiberCensus, FiberRecord, KodairaType
from .errors import K3BVError
from .involution import LatticeInvolution, RealFiberType
from .lattice import IntegerLattice, Sublattice

__all__ = [
    "rational_to_str", "rational_from_str", "parse_coords",
    "lattice_to_json", "lattice_from_json",
    "sublattice_to_json", "sublattice_from_json",
    "involution_from_json", "census_to_json", "census_from_json",
    "load_json_arg", "dumps",
]


def rational_to_str(x) -> str:
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def rational_from_str(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError):
        raise K3BVError(f"cannot parse rational {s!r}") from None


def parse_coords(s: str) -> tuple[Fraction, ...]:
    """Comma-separated rationals, e.g. "1,0,3/2,-1"."""
    parts = [p.strip() for p in s.split(",")] if s.strip() else []
    return tuple(rational_from_str(p) for p in parts)


def lattice_to_json(lat: IntegerLattice) -> dict:
    return {"rank": lat.rank, "gram": [list(row) for row in lat.gram]}


def lattice_from_json(obj) -> IntegerLattice:
    if isinstance(obj, str):
        return lattice_by_name(obj)
    if not isinstance(obj, dict) or "gram" not in obj:
        raise K3BVError("lattice JSON needs a 'gram' field or a catalog name")
    lat = IntegerLattice(tuple(tuple(int(x) for x in row) for row in obj["gram"]))
    if "rank" in obj and obj["rank"] != lat.rank:
        raise K3BVError(f"declared rank {obj['rank']} does not match Gram size {lat.rank}")
    return lat


def sublattice_to_json(s: Sublattice) -> dict:
    return {"ambient": lattice_to_json(s.ambient),
            "basis": [list(row) for row in s.basis]}


def sublattice_from_json(obj) -> Sublattice:
    if isinstance(obj, str) or "basis" not in obj:
        lat = lattice_from_json(obj)
        return Sublattice.full(lat)
    lat = lattice_from_json(obj["ambient"])
    return Sublattice(lat, tuple(tuple(int(x) for x in row) for row in obj["basis"]))


def involution_from_json(obj) -> LatticeInvolution:
    lat = lattice_from_json(obj["lattice"])
    return LatticeInvolution(lat, tuple(tuple(int(x) for x in row) for row in obj["matrix"]))


def census_to_json(c: FiberCensus) -> dict:
    fibers = []
    for r in c.records:
        rec = {"kodaira": r.kodaira.value, "fixed": r.fixed}
        if r.real_type is not None:
            rec["real"] = r.real_type.value
        fibers.append(rec)
    return {"n": c.bv.n, "nprime": c.bv.n_prime, "fibers": fibers}


def census_from_json(obj) -> FiberCensus:
    try:
        bv = BVData(int(obj["n"]), int(obj["nprime"]))
        records = []
        for rec in obj["fibers"]:
            real = rec.get("real")
            records.append(FiberRecord(
                KodairaType(rec["kodaira"]),
                bool(rec["fixed"]),
                RealFiberType(real) if real is not None else None,
            ))
    except (KeyError, ValueError) as exc:
        raise K3BVError(f"bad census JSON: {exc}") from None
    return FiberCensus(tuple(records), bv)


def load_json_arg(value: str):
    """Inline JSON if the argument looks like JSON, else a file path,
    else a bare catalog name."""
    v = value.strip()
    if v.startswith("{") or v.startswith("["):
        return json.loads(v)
    if os.path.exists(v):
        with open(v, "r", encoding="utf-8") as fh:
            return json.load(fh)
    return v


def dumps(obj) -> str:
    """Canonical, byte-stable rendering."""
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))
