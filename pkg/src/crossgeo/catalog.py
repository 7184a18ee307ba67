"""JSON-lines catalog of knot records and batch reports over it.

One record per line::

    {"name": "T(4,3)", "pd": "X(...) ...", "sigma": -6, "upsilon": -2,
     "tags": ["torus"], "note": "upsilon: ..."}

Only ``name`` and ``pd`` are required.  ``sigma`` and ``upsilon`` are values
supplied from outside the library; a stored ``sigma`` must agree with the
Goeritz signature of the diagram unless the record carries the tag
``external-sigma-override``.  ``upsilon`` is never computed here, so the
``note`` field should say where it came from.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from crossgeo.diagram import (
    KnotDiagram,
    crossing_counts,
    is_alternating,
    is_reduced,
    parse_pd,
    writhe,
)
from crossgeo.errors import CrossgeoError, FileUnreadable, MalformedRecord, TooManyCrossings
from crossgeo.geography import (
    EXACT,
    geography_report,
    oss_sg_bounds,
    state_geography,
    turaev_genus_diagram,
)
from crossgeo.signature import goeritz_signature
from crossgeo.states import enumerate_states, state_surface

log = logging.getLogger(__name__)

SIGMA_OVERRIDE = "external-sigma-override"
_FIELDS = {"name", "pd", "sigma", "upsilon", "tags", "note"}


@dataclass(frozen=True)
class KnotRecord:
    name: str
    pd: str
    sigma: int | None = None
    upsilon: int | None = None
    tags: frozenset[str] = frozenset()
    note: str = ""
    diagram: KnotDiagram = field(default=None, compare=False, repr=False)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.diagram is None:
            object.__setattr__(self, "diagram", parse_pd(self.pd, self.name))

    def to_dict(self) -> dict:
        out: dict = {"name": self.name, "pd": self.pd}
        if self.sigma is not None:
            out["sigma"] = self.sigma
        if self.upsilon is not None:
            out["upsilon"] = self.upsilon
        if self.tags:
            out["tags"] = sorted(self.tags)
        if self.note:
            out["note"] = self.note
        return out


def _int_or_none(obj: dict, key: str) -> int | None:
    v = obj.get(key)
    if v is None:
        return None
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"{key} must be an integer")
    return v


def record_from_dict(obj: object) -> KnotRecord:
    """Validate one decoded record.

    Raises:
        ValueError: on a missing or ill-typed field, an unparsable PD code, or
            a stored signature that disagrees with the diagram.
    """
    if not isinstance(obj, dict):
        raise ValueError("record is not a JSON object")
    unknown = set(obj) - _FIELDS
    if unknown:
        raise ValueError(f"unknown fields {sorted(unknown)}")
    name, pd = obj.get("name"), obj.get("pd")
    if not isinstance(name, str) or not name:
        raise ValueError("name must be a nonempty string")
    if not isinstance(pd, str):
        raise ValueError("pd must be a string")
    tags = obj.get("tags", [])
    if not isinstance(tags, list) or not all(isinstance(t, str) for t in tags):
        raise ValueError("tags must be a list of strings")
    note = obj.get("note", "")
    if not isinstance(note, str):
        raise ValueError("note must be a string")
    rec = KnotRecord(
        name,
        pd,
        _int_or_none(obj, "sigma"),
        _int_or_none(obj, "upsilon"),
        frozenset(tags),
        note,
    )
    if rec.sigma is not None and SIGMA_OVERRIDE not in rec.tags:
        computed = goeritz_signature(rec.diagram)
        if computed != rec.sigma:
            raise ValueError(f"stored sigma {rec.sigma} but the diagram gives {computed}")
    return rec


def parse_catalog(lines: Iterable[str]) -> tuple[list[KnotRecord], list[MalformedRecord]]:
    """Records and per-line errors; blank lines and ``#`` comments are skipped."""
    records: list[KnotRecord] = []
    errors: list[MalformedRecord] = []
    for n, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        try:
            records.append(record_from_dict(json.loads(text)))
        except (ValueError, CrossgeoError) as exc:
            errors.append(MalformedRecord(n, str(exc)))
    return records, errors


def load_catalog_with_errors(path: str | Path) -> tuple[list[KnotRecord], list[MalformedRecord]]:
    """Like :func:`load_catalog` but also return the rejected lines.

    Raises:
        FileUnreadable: if the file cannot be opened or decoded.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise FileUnreadable(f"{path}: {exc}") from exc
    return parse_catalog(text.splitlines())


def load_catalog(path: str | Path) -> list[KnotRecord]:
    """Valid records of a JSON-lines file; bad lines are logged and skipped."""
    records, errors = load_catalog_with_errors(path)
    for err in errors:
        log.warning("%s: %s", path, err)
    return records


def save_catalog(records: Iterable[KnotRecord], path: str | Path) -> None:
    lines = [json.dumps(r.to_dict(), ensure_ascii=False) for r in records]
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")


def bundled_catalog_path() -> Path:
    """Path of the catalog shipped with the package."""
    return Path(str(resources.files("crossgeo") / "data" / "reference.jsonl"))


def bundled_catalog() -> list[KnotRecord]:
    return load_catalog(bundled_catalog_path())


def find_record(name: str, records: Sequence[KnotRecord] | None = None) -> KnotRecord:
    """Look up a record by name (bundled catalog by default).

    Raises:
        KeyError: if no record has that name.
    """
    for rec in bundled_catalog() if records is None else records:
        if rec.name == name:
            return rec
    raise KeyError(name)


# batch reports -------------------------------------------------------------------------


def _geography(d: KnotDiagram, sigma: int) -> dict:
    geo = state_geography(d)
    report = geography_report(geo.region, geo.gamma_hat(sigma), geo.bound_kind)
    if geo.bound_kind == EXACT:
        return report
    # outside reduced alternating diagrams the region is not the geography
    return {k: report[k] for k in ("gamma_hat_plus", "gamma_hat_minus", "bound_kind")}


def record_report(rec: KnotRecord) -> dict:
    """Invariant bundle for one record."""
    d = rec.diagram
    sigma = goeritz_signature(d)
    pos, neg = crossing_counts(d)
    out: dict = {
        "name": rec.name,
        "crossings": d.c,
        "writhe": writhe(d),
        "positive": pos,
        "negative": neg,
        "alternating": is_alternating(d),
        "reduced": is_reduced(d),
        "sigma": sigma,
        "sigma_stored": rec.sigma,
        "turaev_genus_diagram": turaev_genus_diagram(d),
    }
    try:
        basic = enumerate_states(d, basic_only=True) if d.c else []
    except TooManyCrossings as exc:
        out["basic_states"] = None
        out["geography"] = None
        out["skipped"] = str(exc)
    else:
        out["basic_states"] = [
            {"choices": s.choices, **state_surface(s).point.to_dict()} for s in basic
        ]
        out["geography"] = _geography(d, sigma) if d.c else None
    if rec.upsilon is not None:
        lo_plus, lo_minus = oss_sg_bounds(sigma, rec.upsilon)
        out["upsilon"] = rec.upsilon
        out["oss_lower_plus"] = lo_plus
        out["oss_lower_minus"] = lo_minus
    return out


def batch_report(records: Sequence[KnotRecord]) -> list[dict]:
    """One report per record, in input order; a failing record yields an ``error`` entry."""
    out = []
    for rec in records:
        try:
            out.append(record_report(rec))
        except CrossgeoError as exc:
            out.append({"name": rec.name, "error": f"{type(exc).__name__}: {exc}"})
    return out
