"""Bounded search reproducing the classification, plus catalog persistence.

The septuple search enumerates sorted weight tuples within bounds and filters
by: not a linear cone, ambient and hypersurface well-formedness, general-member
quasismoothness, and terminality of the general member.  With the default
bounds it returns 95 families of index 1 and 130 in total.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .membership import MembershipReport, membership_report
from .singular import SingularityBasket, singular_points_general, terminal_general
from .wspace import WeightSystem

SCHEMA_VERSION = 1

#: septuple -> label, for the families the source classification literature
#: numbers explicitly; all other records carry no label.
FAMILY_LABELS: dict[tuple[int, ...], int] = {
    (1, 1, 1, 1, 1, 4, 1): 1,
    (1, 1, 1, 1, 3, 6, 1): 3,
    (1, 1, 2, 3, 3, 9, 1): 9,
    (1, 1, 3, 4, 4, 12, 1): 17,
    (1, 2, 3, 3, 4, 12, 1): 19,
    (1, 2, 3, 5, 5, 15, 1): 27,
    (1, 3, 3, 4, 5, 15, 1): 28,
    (1, 3, 4, 5, 6, 18, 1): 39,
    (1, 3, 5, 6, 7, 21, 1): 49,
    (1, 3, 6, 7, 8, 24, 1): 59,
    (1, 5, 6, 7, 9, 27, 1): 66,
    (1, 7, 8, 9, 12, 36, 1): 84,
    (1, 1, 1, 1, 1, 3, 2): 96,
    (1, 1, 1, 2, 3, 6, 2): 98,
    (1, 1, 1, 1, 1, 2, 3): 104,
}

#: the eight index-1 families whose general member has trivial automorphisms
EXCEPTIONAL_EIGHT: tuple[tuple[int, ...], ...] = (
    (1, 1, 1, 1, 1, 4, 1),
    (1, 2, 3, 3, 4, 12, 1),
    (1, 3, 3, 4, 5, 15, 1),
    (1, 3, 4, 5, 6, 18, 1),
    (1, 3, 5, 6, 7, 21, 1),
    (1, 3, 6, 7, 8, 24, 1),
    (1, 5, 6, 7, 9, 27, 1),
    (1, 7, 8, 9, 12, 36, 1),
)


@dataclass(frozen=True)
class SearchBounds:
    """Search box.  Defaults comfortably contain the known extremes of the
    classification (weights up to 33, degrees up to 66, Fano index up to 13)."""

    max_weight: int = 40
    max_degree: int = 120
    index_range: tuple[int, int] = (1, 15)

    def __post_init__(self) -> None:
        if self.max_weight < 1 or self.max_degree < 1:
            raise ValueError("SearchBounds: bounds must be positive")
        lo, hi = self.index_range
        if lo < 1 or hi < lo:
            raise ValueError("SearchBounds: bad index range")


@dataclass(frozen=True)
class FamilyRecord:
    ws: WeightSystem
    membership: MembershipReport
    basket: SingularityBasket
    paper_number: int | None = None

    @property
    def septuple(self) -> tuple[int, ...]:
        return self.ws.septuple

    def to_dict(self) -> dict:
        return {
            "septuple": [str(v) for v in self.septuple],
            "index": str(self.ws.index),
            "flags": self.membership.to_dict(),
            "basket": self.basket.to_strings(),
            "paperNumber": self.paper_number,
        }


def _candidate_passes(a: tuple[int, ...], d: int) -> bool:
    """Full predicate conjunction, ordered cheap-first.  Exact same verdict as
    evaluating the five public predicates independently."""
    if d in a:
        return False  # linear cone
    # vertex coverage is necessary for quasismoothness and kills most tuples
    for i in range(5):
        ai = a[i]
        if d % ai == 0:
            continue
        for j in range(5):
            if j != i:
                r = d - a[j]
                if r >= ai and r % ai == 0:
                    break
        else:
            return False
    for i in range(5):
        g = 0
        for j in range(5):
            if j != i:
                g = gcd(g, a[j])
        if g != 1:
            return False
    ws = WeightSystem(a, d)
    from .membership import hypersurface_well_formed, quasismooth_general

    if not hypersurface_well_formed(ws):
        return False
    if not terminal_general(ws, _checked=True):
        return False
    return quasismooth_general(ws)[0]


def _search_chunk(args: tuple[int, int, SearchBounds]) -> list[tuple[tuple[int, ...], int]]:
    """All passing (weights, d) with a1 in [lo, hi)."""
    lo, hi, bounds = args
    max_w, max_d = bounds.max_weight, bounds.max_degree
    imin, imax = bounds.index_range
    max_sum = max_d + imax
    found: list[tuple[tuple[int, ...], int]] = []
    for a1 in range(lo, hi):
        if 5 * a1 > max_sum:
            break
        for a2 in range(a1, max_w + 1):
            if a1 + 4 * a2 > max_sum:
                break
            for a3 in range(a2, max_w + 1):
                if a1 + a2 + 3 * a3 > max_sum:
                    break
                for a4 in range(a3, max_w + 1):
                    s4 = a1 + a2 + a3 + 2 * a4
                    if s4 > max_sum:
                        break
                    for a5 in range(a4, max_w + 1):
                        s = a1 + a2 + a3 + a4 + a5
                        if s > max_sum:
                            break
                        a = (a1, a2, a3, a4, a5)
                        for index in range(imin, imax + 1):
                            d = s - index
                            if d < 2 or d > max_d:
                                continue
                            if _candidate_passes(a, d):
                                found.append((a, d))
    return found


def classify(bounds: SearchBounds | None = None, jobs: int = 1) -> list[FamilyRecord]:
    """Septuples within bounds passing all predicates, as full records.

    Output is sorted by (index, degree, weights) and is identical for any
    ``jobs`` value; ``jobs > 1`` partitions the a1-range across processes.
    """
    bounds = bounds or SearchBounds()
    top = min(bounds.max_weight, (bounds.max_degree + bounds.index_range[1]) // 5) + 1
    if jobs <= 1 or top <= 2:
        raw = _search_chunk((1, top, bounds))
    else:
        step = max(1, top // (4 * jobs))
        chunks = [(lo, min(lo + step, top), bounds) for lo in range(1, top, step)]
        raw = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_search_chunk, chunks):
                raw.extend(part)
    records = []
    for a, d in raw:
        ws = WeightSystem(a, d)
        rec = FamilyRecord(
            ws=ws,
            membership=membership_report(ws),
            basket=singular_points_general(ws, _checked=True),
            paper_number=FAMILY_LABELS.get(ws.septuple),
        )
        records.append(rec)
    records.sort(key=lambda r: (r.ws.index, r.ws.degree, r.ws.weights))
    return records


def projection_exceptional(records: Sequence[FamilyRecord]) -> list[FamilyRecord]:
    """Index-1 records not handled by the symmetry route with d >= 3*a5.

    These are exactly the families requiring the binary-cubic normal form:
    every returned record has d = 3*a5 and a4 = a5.
    """
    out = []
    for r in records:
        if r.ws.index != 1:
            raise ValueError("projection_exceptional: expects index-1 records")
        if r.septuple in EXCEPTIONAL_EIGHT:
            continue
        if r.ws.degree >= 3 * r.ws.weights[4]:
            out.append(r)
    return out


# ---------------------------------------------------------------------------
# persistence


def _canonical_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


def save_catalog(records: Sequence[FamilyRecord], path: str) -> None:
    payload = {
        "schemaVersion": SCHEMA_VERSION,
        "records": [r.to_dict() for r in records],
    }
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_canonical_json(payload))


def load_catalog(path: str) -> list[FamilyRecord]:
    """Load and revalidate a catalog file.

    Records are rebuilt from their septuples (membership and basket are
    recomputed) so a loaded catalog is structurally identical to a fresh one.
    """
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    version = payload.get("schemaVersion")
    if version != SCHEMA_VERSION:
        raise ValueError(f"load_catalog: unsupported schemaVersion {version!r}")
    records = []
    for entry in payload["records"]:
        sept = tuple(int(v) for v in entry["septuple"])
        ws = WeightSystem(sept[:5], sept[5])
        if ws.index != sept[6]:
            raise ValueError(f"load_catalog: inconsistent septuple {sept}")
        records.append(
            FamilyRecord(
                ws=ws,
                membership=membership_report(ws),
                basket=singular_points_general(ws, _checked=True),
                paper_number=entry.get("paperNumber"),
            )
        )
    return records


def catalog_json(records: Sequence[FamilyRecord]) -> str:
    return _canonical_json(
        {"schemaVersion": SCHEMA_VERSION, "records": [r.to_dict() for r in records]}
    )


def render_markdown(records: Iterable[FamilyRecord]) -> str:
    """Classification table in the standard layout."""
    lines = [
        "| № | a1 | a2 | a3 | a4 | a5 | d | I | basket |",
        "|---|----|----|----|----|----|---|---|--------|",
    ]
    for r in records:
        label = str(r.paper_number) if r.paper_number is not None else ""
        basket = "; ".join(r.basket.to_strings()) or "smooth"
        cells = [label, *map(str, r.ws.weights), str(r.ws.degree), str(r.ws.index), basket]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"
