"""Single-orbit blocks that come from known character tables rather than formulas.

Each record is one line of a TSV file shipped with the package:
group_label, p, comma-separated Brauer degrees, defect, lift profile, multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

LIFT_PROFILES = (
    "unique-p-rational",
    "three-lifts-two-conjugate",
    "two-lifts",
    "unspecified",
)


@dataclass(frozen=True)
class TableRow:
    group_label: str
    p: int
    ibr_degrees: tuple[int, ...]
    defect: int
    lift_profile: str
    multiplicity: int = 1

    def __post_init__(self) -> None:
        if self.lift_profile not in LIFT_PROFILES:
            raise ValueError(f"unknown lift profile {self.lift_profile!r}")
        if not self.ibr_degrees or any(d <= 0 for d in self.ibr_degrees):
            raise ValueError("degrees must be positive")

    @property
    def l(self) -> int:
        return len(self.ibr_degrees)

    def to_line(self) -> str:
        return "\t".join(
            [
                self.group_label,
                str(self.p),
                ",".join(map(str, self.ibr_degrees)),
                str(self.defect),
                self.lift_profile,
                str(self.multiplicity),
            ]
        )

    @classmethod
    def from_line(cls, line: str) -> "TableRow":
        fields = line.rstrip("\n").split("\t")
        if len(fields) != 6:
            raise ValueError(f"expected 6 tab-separated fields, got {len(fields)}: {line!r}")
        label, p, degrees, defect, profile, mult = fields
        return cls(
            label,
            int(p),
            tuple(int(d) for d in degrees.split(",")),
            int(defect),
            profile,
            int(mult),
        )


def parse_rows(text: str) -> list[TableRow]:
    return [TableRow.from_line(line) for line in text.splitlines() if line.strip()]


def format_rows(rows: list[TableRow]) -> str:
    return "".join(row.to_line() + "\n" for row in rows)


@lru_cache(maxsize=None)
def _load(name: str) -> tuple[TableRow, ...]:
    text = resources.files("blockcore").joinpath("data").joinpath(f"{name}.tsv").read_text(encoding="utf-8")
    return tuple(parse_rows(text))


def sporadic_rows() -> list[TableRow]:
    """Single-orbit blocks of quasi-simple groups with sporadic (or Tits) quotient."""
    return list(_load("sporadic"))


def exceptional_rows() -> list[TableRow]:
    """Single-orbit faithful blocks of exceptional covers of Lie-type groups."""
    return list(_load("exceptional"))


def alternating_a6_rows() -> list[TableRow]:
    """The two p = 5 cases for covers of A_6 read off the Brauer tables."""
    return list(_load("alternating"))


TABLES = {
    "sporadic": sporadic_rows,
    "exceptional": exceptional_rows,
}


def lookup(group_label: str, p: int) -> list[TableRow]:
    rows = sporadic_rows() + exceptional_rows()
    return [r for r in rows if r.group_label == group_label and r.p == p]


def export(which: str, path: str | Path) -> None:
    Path(path).write_text(format_rows(TABLES[which]()), encoding="utf-8")
