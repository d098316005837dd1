"""Total colorings of an integer interval with colors 1..r."""

from __future__ import annotations


class Coloring:
    __slots__ = ("lo", "hi", "_colors", "num_colors")

    def __init__(self, lo: int, values, num_colors: int | None = None):
        vals = tuple(int(v) for v in values)
        if not vals:
            raise ValueError("coloring needs a nonempty domain")
        if any(v < 1 for v in vals):
            raise ValueError("colors are 1-based positive integers")
        self.lo = lo
        self.hi = lo + len(vals) - 1
        self._colors = vals
        self.num_colors = max(vals) if num_colors is None else num_colors
        if self.num_colors < max(vals):
            raise ValueError("num_colors smaller than a used color")

    @classmethod
    def from_function(cls, lo: int, hi: int, fn, num_colors: int | None = None) -> "Coloring":
        return cls(lo, [fn(n) for n in range(lo, hi + 1)], num_colors)

    @classmethod
    def from_text(cls, text: str, lo: int = 1) -> "Coloring":
        """One line of whitespace-separated 1-based color indices."""
        toks = text.split()
        if not toks:
            raise ValueError("empty coloring text")
        return cls(lo, [int(t) for t in toks])

    def color(self, n: int) -> int:
        if not self.lo <= n <= self.hi:
            raise ValueError(f"{n} outside coloring domain [{self.lo}, {self.hi}]")
        return self._colors[n - self.lo]

    def values(self) -> tuple[int, ...]:
        return self._colors

    def domain(self) -> tuple[int, int]:
        return (self.lo, self.hi)

    def color_classes(self) -> dict[int, list[int]]:
        """Map color -> ascending list of points with that color."""
        classes: dict[int, list[int]] = {}
        for n in range(self.lo, self.hi + 1):
            classes.setdefault(self._colors[n - self.lo], []).append(n)
        return classes

    def __eq__(self, other):
        if not isinstance(other, Coloring):
            return NotImplemented
        return (self.lo, self._colors) == (other.lo, other._colors)

    def __hash__(self):
        return hash((self.lo, self._colors))

    def __str__(self):
        return " ".join(str(c) for c in self._colors)

    def __repr__(self):
        return f"Coloring(lo={self.lo}, hi={self.hi}, r={self.num_colors})"
