"""Cross-checks between the closed formulas and the enumerations for one genus."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .census import MAX_RECURSIVE_GENUS, Census, generate_recursive, gluing_census
from .count import feasible_params, mass_m2, mass_m3, mass_m6, pointed_count, recursion_check, report
from .gluings import MAX_GLUING_GENUS, CapacityError

_MASS = {2: mass_m2, 3: mass_m3, 6: mass_m6}


@dataclass(frozen=True)
class Check:
    name: str
    expected: Any
    actual: Any

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


def _census_checks(label: str, census: Census, g: int) -> list[Check]:
    rep = report(g)
    checks = [
        Check(f"{label}: class count = M1", rep.M1, census.class_count),
        Check(f"{label}: mass = m1", rep.m1, census.mass),
        Check(f"{label}: order histogram = exact-order counts",
              {d: rep.exact_orders[d] for d in (1, 2, 3, 6)}, census.order_histogram),
        Check(f"{label}: sign counts (positive, negative)",
              {(2 * (g - 1), 2 * g)}, {(c.positive, c.negative) for c in census.classes}),
    ]
    for d in (2, 3, 6):
        params = feasible_params(g, d)
        for p in params:
            checks.append(Check(f"{label}: mass of W_{d}({','.join(map(str, p))})", _MASS[d](g, *p), census.submass(d, p)))
        # classes outside every feasible parameter set would be missed above
        covered = sum(len(census.subcensus(d, p)) for p in params)
        have_d = sum(1 for c in census.classes if c.aut_order % d == 0)
        checks.append(Check(f"{label}: classes with order divisible by {d} covered", have_d, covered))
    return checks


def verify(g: int, jobs: int | None = 1) -> list[Check]:
    if g < 1:
        raise ValueError("genus must be at least 1")
    if g > MAX_RECURSIVE_GENUS:
        raise CapacityError(f"verification needs an enumeration; genus <= {MAX_RECURSIVE_GENUS} supported")
    checks = [Check(f"recursion identity at g={g}", True, recursion_check(g))]
    censuses = {}
    if g <= MAX_GLUING_GENUS:
        glued = gluing_census(g, jobs)
        censuses["gluings"] = glued
        checks.append(Check("gluings: valid labeled gluings = (12g-6) m1", pointed_count(g, 1), glued.words_seen))
    censuses["recursive"] = generate_recursive(g, jobs)
    for label, census in censuses.items():
        checks += _census_checks(label, census, g)
        checks.append(Check(f"{label}: pointed count", pointed_count(g, 1), census.pointed_count))
    if len(censuses) == 2:
        checks.append(Check("gluings and recursive censuses agree",
                            censuses["gluings"].classes, censuses["recursive"].classes))
    return checks
