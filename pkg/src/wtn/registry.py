"""Country registry: the index <-> ISO3 mapping shared by every pipeline stage."""
from __future__ import annotations

import csv
from dataclasses import dataclass

REGISTRY_HEADER = ["index", "iso3", "name"]


class RegistryError(ValueError):
    """Malformed registry file or unresolvable country code."""


@dataclass(frozen=True)
class CountryRegistry:
    """Ordered country list; list positions are the matrix indices used everywhere.

    ISO3 codes must be unique three-character strings and at least two
    countries are required (a trade network needs two ends).
    """

    codes: tuple[str, ...]
    names: tuple[str, ...]

    def __post_init__(self):
        if len(self.codes) < 2:
            raise RegistryError("registry needs at least 2 countries")
        if len(self.codes) != len(self.names):
            raise RegistryError("codes and names length mismatch")
        for code in self.codes:
            if len(code) != 3:
                raise RegistryError(f"ISO3 code must have 3 characters: {code!r}")
        if len(set(self.codes)) != len(self.codes):
            raise RegistryError("duplicate ISO3 codes in registry")
        object.__setattr__(self, "_lookup", {c: i for i, c in enumerate(self.codes)})

    @property
    def n(self) -> int:
        return len(self.codes)

    def __contains__(self, code: str) -> bool:
        return code in self._lookup

    def index(self, code: str) -> int:
        try:
            return self._lookup[code]
        except KeyError:
            raise RegistryError(f"unknown ISO3 code {code!r}") from None

    @classmethod
    def from_csv(cls, path) -> "CountryRegistry":
        """Load `index,iso3,name` rows; indices must cover 0..N-1 exactly."""
        try:
            fh = open(path, newline="", encoding="utf-8")
        except OSError as exc:
            raise RegistryError(f"cannot read registry file {path}: {exc}") from exc
        with fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header is None or [h.strip() for h in header] != REGISTRY_HEADER:
                raise RegistryError(f"registry header must be {','.join(REGISTRY_HEADER)}")
            entries = []
            for rownum, row in enumerate(reader, start=1):
                if not row:
                    continue
                if len(row) != 3:
                    raise RegistryError(f"registry row {rownum}: expected 3 columns, got {len(row)}")
                try:
                    idx = int(row[0])
                except ValueError:
                    raise RegistryError(f"registry row {rownum}: bad index {row[0]!r}") from None
                entries.append((idx, row[1].strip(), row[2].strip()))
        if not entries:
            raise RegistryError("registry file has no entries")
        indices = sorted(e[0] for e in entries)
        if indices != list(range(len(entries))):
            raise RegistryError("registry indices must be contiguous 0..N-1")
        entries.sort(key=lambda e: e[0])
        return cls(codes=tuple(e[1] for e in entries), names=tuple(e[2] for e in entries))
