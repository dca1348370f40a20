"""Brute-force rational point counting over small prime fields.

Independent oracle for the symbolic engine: it enumerates, for each
vertex v, the p^deg(v) canonical projective points of the affine chart
at v (coordinate of v nonzero, support inside v's closed star) into one
deduplicating set, then adds the p-1 points of each free edge.  Nothing
here touches the class-polynomial machinery beyond the final comparison
in verify().
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .grothendieck import class_polynomial
from .loosegraph import LooseGraph, ambient_space

DEFAULT_PRIME_BOUND = 13
DEFAULT_BUDGET = 10_000_000


class BudgetError(ValueError):
    """Estimated enumeration work exceeds the configured budget."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def estimated_work(g: LooseGraph, p: int) -> int:
    """Chart enumeration cost: sum of p^deg(v) plus (p-1) per free edge."""
    return sum(p ** g.degree(v) for v in g.vertices) + g.free * (p - 1)


def count_points(
    g: LooseGraph,
    p: int,
    budget: int = DEFAULT_BUDGET,
    prime_bound: int = DEFAULT_PRIME_BOUND,
) -> int:
    """Exact number of F_p-rational points of the scheme attached to g."""
    if not is_prime(p):
        raise ValueError(f"count_points(): {p} is not prime")
    if p > prime_bound:
        raise ValueError(f"count_points(): prime {p} exceeds the bound {prime_bound}")
    work = estimated_work(g, p)
    if work > budget:
        raise BudgetError(f"count_points(): estimated work {work} exceeds budget {budget}")

    amb = ambient_space(g)
    index = {name: i for i, name in enumerate(amb.coordinates)}
    ppow = [p**i for i in range(len(amb.coordinates))]
    inv = [0] * p
    for a in range(1, p):
        inv[a] = pow(a, p - 2, p)

    # phantom coordinate indices of each vertex's loose edges
    phantoms: dict[str, list[int]] = {v: [] for v in g.vertices}
    for v, k in g.loose:
        phantoms[v] = [index[f"{v}#loose{i}"] for i in range(k)]

    points: set[int] = set()
    adjacency = g.adjacency()
    for v in g.vertices:
        iv = index[v]
        dirs = sorted([index[u] for u in adjacency[v]] + phantoms[v])
        dir_pows = [ppow[i] for i in dirs]
        before = [j for j, i in enumerate(dirs) if i < iv]
        base = ppow[iv]
        for vals in product(range(p), repeat=len(dirs)):
            lead = -1
            for j in before:
                if vals[j]:
                    lead = j
                    break
            if lead < 0:
                key = base
                for j, val in enumerate(vals):
                    if val:
                        key += val * dir_pows[j]
            else:
                s = inv[vals[lead]]
                key = (s % p) * base
                for j, val in enumerate(vals):
                    if val:
                        key += (val * s % p) * dir_pows[j]
            points.add(key)

    count = len(points)
    # free edges live on their own pair of coordinates, disjoint from all charts
    count += g.free * (p - 1)
    return count


@dataclass(frozen=True)
class PrimeCheck:
    prime: int
    expected: int
    counted: int
    ok: bool


@dataclass(frozen=True)
class VerifyReport:
    """Per-prime oracle comparison plus the P(1) = #vertices check."""

    checks: tuple[PrimeCheck, ...]
    euler_expected: int
    euler_got: int

    @property
    def euler_ok(self) -> bool:
        return self.euler_expected == self.euler_got

    @property
    def ok(self) -> bool:
        return self.euler_ok and all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "checks": [
                {"prime": c.prime, "expected": c.expected, "counted": c.counted, "ok": c.ok}
                for c in self.checks
            ],
            "euler": {
                "expected": self.euler_expected,
                "got": self.euler_got,
                "ok": self.euler_ok,
            },
            "ok": self.ok,
        }


def verify(
    g: LooseGraph,
    primes: tuple[int, ...] | list[int],
    budget: int = DEFAULT_BUDGET,
    prime_bound: int = DEFAULT_PRIME_BOUND,
) -> VerifyReport:
    """Compare eval(class, q) against the brute-force count for each prime."""
    poly = class_polynomial(g)
    checks = []
    for q in primes:
        expected = poly.evaluate(q)
        counted = count_points(g, q, budget=budget, prime_bound=prime_bound)
        checks.append(PrimeCheck(q, expected, counted, expected == counted))
    return VerifyReport(tuple(checks), g.n_vertices, poly.evaluate(1))
