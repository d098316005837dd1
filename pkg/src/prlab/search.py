"""Finite coloring searches: exhaustive solution enumeration, backtracking
good-coloring search, forcing numbers, monochromatic witnesses, and the
case-analysis extractor that pulls a monochromatic 3-term progression out of
any 2-coloring of [0, 324].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Coloring, FiniteSet, IntMatrix, Poly, poly_props

MAX_POLY_VARS = 6
MAX_POLY_PARTIAL_DEGREE = 2
MAX_SOLUTIONS = 10**7
DEFAULT_NODE_BUDGET = 10**8


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, nodes: int):
        super().__init__(f"search exceeded the node budget after {nodes} nodes")
        self.nodes = nodes


@dataclass(frozen=True)
class SolutionSystem:
    """What the colorings must avoid: one equation P = 0, a homogeneous
    system A x = 0, or a k-term arithmetic progression; values range over
    positive integers, pairwise distinct when injective."""

    kind: str  # "poly" | "matrix" | "ap"
    poly: Poly | None = None
    matrix: IntMatrix | None = None
    ap_length: int | None = None
    injective: bool = False

    def variable_names(self) -> tuple[str, ...]:
        if self.kind == "poly":
            return self.poly.variables()
        if self.kind == "matrix":
            return tuple(f"x{j + 1}" for j in range(self.matrix.cols))
        return tuple(f"x{j + 1}" for j in range(self.ap_length))


def poly_system(P: Poly, injective: bool = False) -> SolutionSystem:
    if len(P.variables()) < 2:
        raise ValueError("system needs at least two variables")
    return SolutionSystem(kind="poly", poly=P, injective=injective)


def matrix_system(M: IntMatrix, injective: bool = False) -> SolutionSystem:
    if M.cols < 2:
        raise ValueError("system needs at least two variables")
    return SolutionSystem(kind="matrix", matrix=M, injective=injective)


def ap_system(k: int) -> SolutionSystem:
    """Increasing k-term arithmetic progressions (common difference >= 1);
    the values are automatically distinct."""
    if k < 2:
        raise ValueError("progression length must be >= 2")
    return SolutionSystem(kind="ap", ap_length=k, injective=True)


# -- solution enumeration ---------------------------------------------------

def _monomial_range(key, lo: int, hi: int):
    """Exact [min, max] of a power product over a product of integer boxes
    [lo, hi] (the same box for every variable)."""
    vlo, vhi = 1, 1
    for _, e in key:
        ends = [lo**e, hi**e]
        if lo <= 0 <= hi:
            ends.append(0)
        nlo, nhi = min(ends), max(ends)
        cands = [vlo * nlo, vlo * nhi, vhi * nlo, vhi * nhi]
        vlo, vhi = min(cands), max(cands)
    return vlo, vhi


def _poly_range(P: Poly, lo: int, hi: int):
    total_lo = P.constant
    total_hi = P.constant
    for key, coeff in P.monomials.items():
        mlo, mhi = _monomial_range(key, lo, hi)
        if coeff > 0:
            total_lo += coeff * mlo
            total_hi += coeff * mhi
        else:
            total_lo += coeff * mhi
            total_hi += coeff * mlo
    return total_lo, total_hi


def _univariate_roots(P: Poly, var: str, lo: int, hi: int):
    """Integer roots of a polynomial of degree <= 2 in a single variable,
    restricted to [lo, hi], ascending."""
    c = {0: P.constant, 1: 0, 2: 0}
    for key, coeff in P.monomials.items():
        assert len(key) == 1 and key[0][0] == var
        c[key[0][1]] = coeff
    if c[2] == 0 and c[1] == 0:
        return list(range(lo, hi + 1)) if c[0] == 0 else []
    if c[2] == 0:
        q, r = divmod(-c[0], c[1])
        return [q] if r == 0 and lo <= q <= hi else []
    disc = c[1] * c[1] - 4 * c[2] * c[0]
    if disc < 0:
        return []
    s = math.isqrt(disc)
    if s * s != disc:
        return []
    roots = []
    for sign in (-1, 1):
        q, r = divmod(-c[1] + sign * s, 2 * c[2])
        if r == 0 and lo <= q <= hi:
            roots.append(q)
    return sorted(set(roots))


def _enumerate_poly(P: Poly, n: int, injective: bool):
    props = poly_props(P)
    variables = P.variables()
    if len(variables) > MAX_POLY_VARS:
        raise ValueError(f"too many variables (max {MAX_POLY_VARS})")
    if props.max_partial_degree > MAX_POLY_PARTIAL_DEGREE:
        raise ValueError(
            f"partial degree exceeds enumeration bound {MAX_POLY_PARTIAL_DEGREE}"
        )
    order = sorted(variables, key=lambda v: (-props.partial_degrees[v], v))
    k = len(order)
    out: list[tuple[int, ...]] = []
    assigned: dict[str, int] = {}

    def emit(asg):
        out.append(tuple(asg[v] for v in variables))
        if len(out) > MAX_SOLUTIONS:
            raise ValueError(f"solution count exceeds {MAX_SOLUTIONS}")

    def walk(depth: int, residual: Poly):
        if depth == k - 1:
            last = order[depth]
            for x in _univariate_roots(residual, last, 1, n):
                if injective and x in assigned.values():
                    continue
                assigned[last] = x
                emit(assigned)
                del assigned[last]
            return
        lo, hi = _poly_range(residual, 1, n)
        if lo > 0 or hi < 0:
            return
        var = order[depth]
        for x in range(1, n + 1):
            if injective and x in assigned.values():
                continue
            assigned[var] = x
            walk(depth + 1, residual.substitute({var: Poly.const(x)}))
            del assigned[var]

    walk(0, P)
    return sorted(out)


def _enumerate_matrix(M: IntMatrix, n: int, injective: bool):
    rows = M.entries
    k = M.cols
    out: list[tuple[int, ...]] = []
    vec: list[int] = []

    def walk(depth: int, partial):
        if depth == k:
            if all(s == 0 for s in partial):
                if len(out) >= MAX_SOLUTIONS:
                    raise ValueError(f"solution count exceeds {MAX_SOLUTIONS}")
                out.append(tuple(vec))
            return
        # interval feasibility per row over the unassigned tail
        for r in range(M.rows):
            lo = hi = partial[r]
            for j in range(depth, k):
                a = rows[r][j]
                if a > 0:
                    lo += a
                    hi += a * n
                elif a < 0:
                    lo += a * n
                    hi += a
            if lo > 0 or hi < 0:
                return
        for x in range(1, n + 1):
            if injective and x in vec:
                continue
            vec.append(x)
            walk(depth + 1, [p + rows[r][depth] * x for r, p in enumerate(partial)])
            vec.pop()

    walk(0, [0] * M.rows)
    return out


def _enumerate_ap(k: int, n: int):
    out = []
    for a in range(1, n + 1):
        d = 1
        while a + (k - 1) * d <= n:
            out.append(tuple(a + t * d for t in range(k)))
            d += 1
    return sorted(out)


def enumerate_solutions(system: SolutionSystem, n: int):
    """All assignments in [1,n]^vars satisfying the system, sorted
    lexicographically; distinct-valued when the system is injective."""
    if n < 1:
        raise ValueError("bound must be >= 1")
    if system.kind == "poly":
        return _enumerate_poly(system.poly, n, system.injective)
    if system.kind == "matrix":
        return _enumerate_matrix(system.matrix, n, system.injective)
    return _enumerate_ap(system.ap_length, n)


def solutions_by_max(system: SolutionSystem, n: int):
    """Distinct value sets of solutions, indexed by their maximum element.
    This is the index the backtracking search consults when it colors the
    element that completes a solution."""
    index: dict[int, list[tuple[int, ...]]] = {}
    seen: set[tuple[int, ...]] = set()
    for sol in enumerate_solutions(system, n):
        values = tuple(sorted(set(sol)))
        if values in seen:
            continue
        seen.add(values)
        index.setdefault(values[-1], []).append(values)
    return index


# -- backtracking coloring search -------------------------------------------

@dataclass
class SearchOutcome:
    forced: bool
    coloring: Coloring | None
    nodes: int


def good_coloring(
    system: SolutionSystem, n: int, r: int, max_nodes: int | None = None
) -> SearchOutcome:
    """Complete backtracking search for an r-coloring of [1,n] with no
    monochromatic solution.  Elements are colored in increasing order and
    colors tried in increasing order, so a returned coloring is the
    lexicographically least one; color(1) is pinned to 1 (any good coloring
    has a color-swapped twin with color(1) = 1)."""
    if r < 1:
        raise ValueError("need at least one color")
    if n < 1:
        raise ValueError("bound must be >= 1")
    budget = DEFAULT_NODE_BUDGET if max_nodes is None else max_nodes
    index = solutions_by_max(system, n)
    colors = [0] * (n + 1)
    nodes = 0

    def conflict(v: int) -> bool:
        col = colors[v]
        for values in index.get(v, ()):
            if all(colors[u] == col for u in values):
                return True
        return False

    def walk(v: int) -> bool:
        nonlocal nodes
        if v > n:
            return True
        top = 1 if v == 1 else r
        for col in range(1, top + 1):
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(nodes)
            colors[v] = col
            if not conflict(v) and walk(v + 1):
                return True
        colors[v] = 0
        return False

    if walk(1):
        coloring = Coloring(1, tuple(colors[1:]), num_colors=r)
        classes = {c: set(vals) for c, vals in coloring.color_classes().items()}
        for by_max in index.values():
            for values in by_max:
                assert not any(set(values) <= cls for cls in classes.values())
        return SearchOutcome(False, coloring, nodes)
    return SearchOutcome(True, None, nodes)


def forcing_number(
    system: SolutionSystem, r: int, n_max: int, max_nodes: int | None = None
):
    """Least n <= n_max at which every r-coloring of [1,n] contains a
    monochromatic solution, or None if no such n is found."""
    for n in range(1, n_max + 1):
        if good_coloring(system, n, r, max_nodes=max_nodes).forced:
            return n
    return None


# -- monochromatic witnesses ------------------------------------------------

def _linear_class_witness(P: Poly, values, injective: bool):
    """Lexicographically least assignment over the given value list solving a
    linear equation, via a subset-sum bitmask built over suffixes."""
    variables = P.variables()
    coeffs = [P.monomials[((v, 1),)] for v in variables]
    target = -P.constant
    k = len(coeffs)
    vmin, vmax = values[0], values[-1]
    los = [0] * (k + 1)
    his = [0] * (k + 1)
    for j in range(k - 1, -1, -1):
        c = coeffs[j]
        los[j] = los[j + 1] + (c * vmin if c > 0 else c * vmax)
        his[j] = his[j + 1] + (c * vmax if c > 0 else c * vmin)
    masks = [0] * (k + 1)
    masks[k] = 1
    for j in range(k - 1, -1, -1):
        c = coeffs[j]
        acc = 0
        for x in values:
            acc |= masks[j + 1] << (c * x + los[j + 1] - los[j])
        masks[j] = acc

    def feasible(j: int, need: int) -> bool:
        return los[j] <= need <= his[j] and (masks[j] >> (need - los[j])) & 1

    if not feasible(0, target):
        return None
    if not injective:
        out = []
        need = target
        for j in range(k):
            for x in values:
                if feasible(j + 1, need - coeffs[j] * x):
                    out.append(x)
                    need -= coeffs[j] * x
                    break
            else:
                return None
        return tuple(out)

    used: set[int] = set()
    out = []

    def walk(j: int, need: int) -> bool:
        if j == k:
            return need == 0
        for x in values:
            if x in used or not feasible(j + 1, need - coeffs[j] * x):
                continue
            used.add(x)
            out.append(x)
            if walk(j + 1, need - coeffs[j] * x):
                return True
            out.pop()
            used.remove(x)
        return False

    return tuple(out) if walk(0, target) else None


def _generic_class_witness(P: Poly, values, injective: bool):
    variables = P.variables()
    k = len(variables)
    vmin, vmax = values[0], values[-1]
    out: list[int] = []
    asg: dict[str, int] = {}

    def walk(depth: int, residual: Poly):
        if depth == k:
            return residual.is_zero() and residual.constant == 0
        var = variables[depth]
        lo, hi = _poly_range(residual, vmin, vmax)
        if lo > 0 or hi < 0:
            return False
        for x in values:
            if injective and x in asg.values():
                continue
            asg[var] = x
            out.append(x)
            if walk(depth + 1, residual.substitute({var: Poly.const(x)})):
                return True
            out.pop()
            del asg[var]
        return False

    return tuple(out) if walk(0, P) else None


def _matrix_class_witness(M: IntMatrix, values, injective: bool):
    rows = M.entries
    k = M.cols
    vmin, vmax = values[0], values[-1]
    vec: list[int] = []

    def walk(depth: int, partial) -> bool:
        if depth == k:
            return all(s == 0 for s in partial)
        for r in range(M.rows):
            lo = hi = partial[r]
            for j in range(depth, k):
                a = rows[r][j]
                if a > 0:
                    lo += a * vmin
                    hi += a * vmax
                elif a < 0:
                    lo += a * vmax
                    hi += a * vmin
            if lo > 0 or hi < 0:
                return False
        for x in values:
            if injective and x in vec:
                continue
            vec.append(x)
            if walk(depth + 1, [p + rows[r][depth] * x for r, p in enumerate(partial)]):
                return True
            vec.pop()
        return False

    return tuple(vec) if walk(0, [0] * M.rows) else None


def _ap_class_witness(k: int, values):
    present = set(values)
    for a in values:
        for second in values:
            if second <= a:
                continue
            d = second - a
            if all(a + t * d in present for t in range(2, k)):
                return tuple(a + t * d for t in range(k))
    return None


def _class_witness(system: SolutionSystem, values):
    if not values:
        return None
    if system.kind == "ap":
        return _ap_class_witness(system.ap_length, values)
    if system.kind == "matrix":
        return _matrix_class_witness(system.matrix, values, system.injective)
    P = system.poly
    if poly_props(P).max_partial_degree == 1 and all(
        len(key) == 1 for key in P.monomials
    ):
        return _linear_class_witness(P, values, system.injective)
    return _generic_class_witness(P, values, system.injective)


def mono_witness(coloring: Coloring, system: SolutionSystem):
    """Lexicographically least monochromatic solution whose values all lie in
    one color class of the coloring, or None."""
    best = None
    for _, values in sorted(coloring.color_classes().items()):
        w = _class_witness(system, values)
        if w is not None and (best is None or w < best):
            best = w
    return best


# -- the 325 extractor ------------------------------------------------------

def is_mono_3ap(coloring: Coloring, triple) -> bool:
    x, y, z = triple
    if not (y - x == z - y and y - x >= 1):
        return False
    return coloring.color(x) == coloring.color(y) == coloring.color(z)


def vdw325_extract(coloring: Coloring):
    """Pull a monochromatic increasing 3-term progression out of any
    2-coloring of [0, 324] by pure case analysis on length-5 blocks.

    Among the first 33 blocks two share their full color pattern; inside the
    earlier one, two of the first three cells share a color, which yields a
    progression that either closes inside the block, or propagates along the
    repeat at block distance j - i, where the third block index 2j - i still
    fits inside the 65 available blocks.
    """
    if coloring.lo != 0 or coloring.hi != 324:
        raise ValueError("coloring domain must be [0, 324]")
    if any(c not in (1, 2) for c in coloring.values()):
        raise ValueError("coloring must use colors 1 and 2")
    c = coloring.color
    base = [5 * (i - 1) for i in range(66)]  # base[i] for 1-based block i
    patterns = [None] + [
        tuple(c(base[i] + t) for t in range(5)) for i in range(1, 66)
    ]
    pair = None
    for j in range(2, 34):
        for i in range(1, j):
            if patterns[i] == patterns[j]:
                pair = (i, j)
                break
        if pair:
            break
    assert pair is not None  # 33 blocks, 32 possible patterns
    i, j = pair
    for a, b in ((0, 1), (0, 2), (1, 2)):
        if c(base[i] + a) == c(base[i] + b):
            break
    X = c(base[i] + a)
    e = 2 * b - a
    if c(base[i] + e) == X:
        triple = (base[i] + a, base[i] + b, base[i] + e)
    else:
        Y = c(base[i] + e)
        k = 2 * j - i
        if c(base[k] + e) == Y:
            triple = (base[i] + e, base[j] + e, base[k] + e)
        else:
            triple = (base[i] + a, base[j] + b, base[k] + e)
    assert is_mono_3ap(coloring, triple)
    return triple


# -- arithmetic progressions in finite sets ---------------------------------

def contains_ap(A: FiniteSet, k: int):
    """First (a, d) in lexicographic order with a, a+d, ..., a+(k-1)d all in
    A and d >= 1; a single point counts as a length-1 progression."""
    if k < 1:
        raise ValueError("length must be >= 1")
    if not A:
        return None
    if k == 1:
        return (A.min(), 1)
    elems = A.elements
    present = set(elems)
    span = A.max() - A.min()
    for a in elems:
        for d in range(1, span + 1):
            if a + (k - 1) * d > A.max():
                break
            if all(a + t * d in present for t in range(1, k)):
                return (a, d)
    return None
