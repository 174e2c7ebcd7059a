"""JSON / JSONL / CSV persistence for the core objects.

Rationals are written as "p/q" strings (str of Fraction) so round-trips
are bit exact; floats ride on JSON numbers, which Python also round-trips
exactly.  Point clouds use JSONL: one header record, then one coordinate
array per line, so large sets stream without loading a parser-side tree.
"""

from __future__ import annotations

import csv
import json
from fractions import Fraction
from typing import Union

import numpy as np

from .boxdim import DimensionEstimate
from .errors import ParseError, StructureError
from .fractals import SampledSet
from .group import JetPoint
from .jets import DerivativeOracle, Polynomial, SmoothFn, oracle
from .splitting import SplitConfig

SET_FORMAT = "jetlab-set"
SET_VERSION = 1


def _scalar_to_json(v):
    if isinstance(v, Fraction):
        return str(v)
    return float(v)


def _scalar_from_json(v):
    if isinstance(v, str):
        try:
            return Fraction(v)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {v!r}: {exc}") from None
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ParseError(f"expected number or 'p/q' string, got {v!r}")
    return Fraction(v) if isinstance(v, int) else float(v)


def point_to_json(p: JetPoint) -> dict:
    return {"k": p.k, "mode": p.mode, "coords": [_scalar_to_json(c) for c in p.coords]}


def point_from_json(obj: dict) -> JetPoint:
    try:
        k, mode, coords = obj["k"], obj["mode"], obj["coords"]
    except (TypeError, KeyError) as exc:
        raise ParseError(f"point record missing field: {exc}") from None
    vals = [_scalar_from_json(c) for c in coords]
    if mode == "float":
        vals = [float(v) for v in vals]
    elif mode != "rational":
        raise ParseError(f"unknown scalar mode {mode!r}")
    return JetPoint(int(k), tuple(vals))


def smoothfn_to_json(f: SmoothFn) -> dict:
    if isinstance(f, Polynomial):
        return {"type": "poly", "coeffs": [str(c) for c in f.coeffs]}
    if isinstance(f, DerivativeOracle):
        if f.params is None:
            raise StructureError(
                f"oracle {f.label!r} was built ad hoc (params=None) and cannot "
                "be serialized; use the catalog constructor")
        scale, shift = f.params
        return {"type": "oracle", "name": f.label, "scale": scale, "shift": shift}
    raise StructureError(f"not a serializable function: {type(f).__name__}")


def smoothfn_from_json(obj: dict) -> SmoothFn:
    kind = obj.get("type")
    if kind == "poly":
        return Polynomial(tuple(_scalar_from_json(c) for c in obj["coeffs"]))
    if kind == "oracle":
        return oracle(obj["name"], scale=obj.get("scale", 1.0),
                      shift=obj.get("shift", 0.0))
    raise ParseError(f"unknown function type {kind!r}")


def splitconfig_to_json(cfg: SplitConfig) -> dict:
    return {"f": smoothfn_to_json(cfg.f), "t": _scalar_to_json(cfg.t), "k": cfg.k}


def splitconfig_from_json(obj: dict) -> SplitConfig:
    try:
        return SplitConfig(f=smoothfn_from_json(obj["f"]),
                           t=_scalar_from_json(obj["t"]), k=int(obj["k"]))
    except KeyError as exc:
        raise ParseError(f"split config missing field: {exc}") from None


def _meta_sanitize(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, dict):
        return {k: _meta_sanitize(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_meta_sanitize(x) for x in v]
    if isinstance(v, np.generic):
        return v.item()
    return v


def write_set(sset: SampledSet, path) -> None:
    """Write a point cloud as JSONL: header record, then one row per point."""
    header = {"format": SET_FORMAT, "version": SET_VERSION, "k": sset.k,
              "mode": "float", "count": len(sset), "meta": _meta_sanitize(sset.meta)}
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(header) + "\n")
        for row in sset.coords:
            fh.write(json.dumps([float(c) for c in row]) + "\n")


def read_set(path) -> SampledSet:
    """Read a JSONL point cloud; ParseError messages carry the line number."""
    with open(path, "r", encoding="utf-8") as fh:
        first = fh.readline()
        if not first.strip():
            raise ParseError("line 1: missing header record")
        try:
            header = json.loads(first)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line 1: bad header: {exc}") from None
        if not isinstance(header, dict) or header.get("format") != SET_FORMAT:
            raise ParseError(f"line 1: not a {SET_FORMAT} file")
        if header.get("version") != SET_VERSION:
            raise ParseError(f"line 1: unsupported version {header.get('version')!r}")
        try:
            k, count = int(header["k"]), int(header["count"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"line 1: bad header field: {exc}") from None
        rows = np.empty((count, k + 2), dtype=float)
        for i in range(count):
            lineno = i + 2
            line = fh.readline()
            if not line:
                raise ParseError(
                    f"line {lineno}: truncated file, expected {count} points, got {i}")
            try:
                row = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"line {lineno}: bad point record: {exc}") from None
            if (not isinstance(row, list) or len(row) != k + 2
                    or any(isinstance(c, (str, bool, dict, list)) or c is None
                           for c in row)):
                raise ParseError(
                    f"line {lineno}: expected array of {k + 2} numbers, got {row!r}")
            rows[i] = row
        extra = fh.readline()
        if extra.strip():
            raise ParseError(
                f"line {count + 2}: trailing data after {count} declared points")
    return SampledSet(k, rows, dict(header.get("meta") or {}))


def estimate_to_json(est: DimensionEstimate) -> dict:
    return {"slope": est.slope, "intercept": est.intercept, "r2": est.r2,
            "counts": [[e, c] for e, c in est.counts],
            "scale_window": list(est.scale_window),
            "trimmed": [[e, reason] for e, reason in est.trimmed]}


def estimate_from_json(obj: dict) -> DimensionEstimate:
    try:
        return DimensionEstimate(
            slope=float(obj["slope"]), intercept=float(obj["intercept"]),
            r2=float(obj["r2"]),
            counts=tuple((float(e), int(c)) for e, c in obj["counts"]),
            scale_window=tuple(float(e) for e in obj["scale_window"]),
            trimmed=tuple((float(e), str(r)) for e, r in obj.get("trimmed", [])))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad estimate record: {exc}") from None


def write_counts_csv(counts, path) -> None:
    """Write (epsilon, count) pairs as a two-column CSV with header."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["epsilon", "count"])
        for eps, count in counts:
            writer.writerow([repr(float(eps)), int(count)])


def read_counts_csv(path) -> list:
    with open(path, "r", newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError("line 1: empty counts file") from None
        if [h.strip() for h in header] != ["epsilon", "count"]:
            raise ParseError(f"line 1: expected header epsilon,count, got {header}")
        out = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 2:
                raise ParseError(f"line {lineno}: expected 2 columns, got {len(row)}")
            try:
                out.append((float(row[0]), int(row[1])))
            except ValueError as exc:
                raise ParseError(f"line {lineno}: {exc}") from None
    return out
