"""Finite and eventually periodic subsets of the naturals.

A PeriodicSet is (period p, residue set, threshold t, prefix): membership for
n >= t is n mod p in residues; below t the explicit prefix decides.  Finite
sets are the residues-empty case, so both kinds share one representation.
"""

from __future__ import annotations

import re


class FiniteSet:
    __slots__ = ("elements", "_set")

    def __init__(self, elements=()):
        elems = sorted(set(int(x) for x in elements))
        if elems and elems[0] < 0:
            raise ValueError("elements must be naturals (>= 0)")
        self.elements = tuple(elems)
        self._set = frozenset(elems)

    def __contains__(self, x) -> bool:
        return x in self._set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __bool__(self):
        return bool(self.elements)

    def min(self) -> int:
        if not self.elements:
            raise ValueError("empty set")
        return self.elements[0]

    def max(self) -> int:
        if not self.elements:
            raise ValueError("empty set")
        return self.elements[-1]

    def total(self) -> int:
        return sum(self.elements)

    def shift(self, n: int) -> "FiniteSet":
        return FiniteSet(x + n for x in self.elements)

    def issubset(self, other) -> bool:
        return all(x in other for x in self.elements)

    def __eq__(self, other):
        if not isinstance(other, FiniteSet):
            return NotImplemented
        return self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __str__(self):
        return "{" + ",".join(str(x) for x in self.elements) + "}"

    def __repr__(self):
        return f"FiniteSet({list(self.elements)})"


def parse_finite(text: str) -> FiniteSet:
    """Comma-separated naturals; an empty string is the empty set."""
    text = text.strip().strip("{}")
    if not text:
        return FiniteSet()
    return FiniteSet(int(tok) for tok in text.split(","))


class PeriodicSet:
    __slots__ = ("period", "residues", "threshold", "prefix")

    def __init__(self, period: int, residues, threshold: int = 0, prefix=()):
        if period < 1:
            raise ValueError("period must be >= 1")
        if threshold < 0:
            raise ValueError("threshold must be >= 0")
        res = frozenset(int(r) for r in residues)
        if any(not 0 <= r < period for r in res):
            raise ValueError("residues must lie in [0, period)")
        pre = frozenset(int(x) for x in prefix)
        if any(not 0 <= x < threshold for x in pre):
            raise ValueError("prefix must lie in [0, threshold)")
        self.period = period
        self.residues = res
        self.threshold = threshold
        self.prefix = pre

    # -- canonical members --------------------------------------------------

    @classmethod
    def naturals(cls) -> "PeriodicSet":
        return cls(1, {0})

    @classmethod
    def odds(cls) -> "PeriodicSet":
        return cls(2, {1})

    @classmethod
    def evens(cls) -> "PeriodicSet":
        return cls(2, {0})

    @classmethod
    def multiples(cls, k: int) -> "PeriodicSet":
        return cls(k, {0})

    @classmethod
    def from_finite(cls, fs: FiniteSet) -> "PeriodicSet":
        t = (fs.max() + 1) if fs else 0
        return cls(1, set(), t, fs.elements)

    # -- membership ---------------------------------------------------------

    def membership(self, n: int) -> bool:
        if n < 0:
            return False
        if n < self.threshold:
            return n in self.prefix
        return (n % self.period) in self.residues

    __contains__ = membership

    def is_finite(self) -> bool:
        return not self.residues

    def elements_upto(self, n: int) -> list[int]:
        return [x for x in range(n + 1) if self.membership(x)]

    def __eq__(self, other):
        if not isinstance(other, PeriodicSet):
            return NotImplemented
        return (self.period, self.residues, self.threshold, self.prefix) == (
            other.period,
            other.residues,
            other.threshold,
            other.prefix,
        )

    def __hash__(self):
        return hash((self.period, self.residues, self.threshold, self.prefix))

    def to_text(self) -> str:
        res = ",".join(str(r) for r in sorted(self.residues))
        pre = ",".join(str(x) for x in sorted(self.prefix))
        return f"p={self.period}; residues={{{res}}}; t={self.threshold}; prefix={{{pre}}}"

    __str__ = to_text

    def __repr__(self):
        return f"PeriodicSet({self.to_text()!r})"


_FIELD_RE = re.compile(r"\s*([a-z]+)\s*=\s*(\{[^}]*\}|[0-9]+)\s*$")


def parse_periodic(text: str) -> PeriodicSet:
    """Parse "p=<int>; residues={r1,...}; t=<int>; prefix={...}" (t/prefix optional)."""
    fields: dict[str, str] = {}
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        m = _FIELD_RE.match(chunk)
        if m is None:
            raise ValueError(f"bad field {chunk.strip()!r} in periodic-set text")
        fields[m.group(1)] = m.group(2)
    if "p" not in fields or "residues" not in fields:
        raise ValueError("periodic-set text needs at least p=... and residues={...}")

    def intset(raw: str) -> set[int]:
        raw = raw.strip().strip("{}").strip()
        if not raw:
            return set()
        return {int(tok) for tok in raw.split(",")}

    period = int(fields["p"])
    residues = intset(fields["residues"])
    threshold = int(fields.get("t", "0"))
    prefix = intset(fields.get("prefix", "{}"))
    return PeriodicSet(period, residues, threshold, prefix)
