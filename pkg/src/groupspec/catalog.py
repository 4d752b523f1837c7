"""Named object catalogs used by the audit suites.

Group instances are built once and shared, so identity-based endpoint
checks (structure maps, morphisms) work across suites.
"""

from __future__ import annotations

from functools import lru_cache

from .fingroup import (
    GroupTable,
    Homomorphism,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    quaternion8,
    symmetric,
)
from .gobject import GGroup, identity_object

__all__ = ["groups", "small_catalog", "large_catalog", "catalog", "CATALOGS"]

CATALOGS = ("small", "large")


@lru_cache(maxsize=None)
def groups() -> dict[str, GroupTable]:
    """The shared group instances, keyed by display name."""
    out = {
        "Z2": cyclic(2),
        "Z3": cyclic(3),
        "Z4": cyclic(4),
        "V4": direct_product(cyclic(2), cyclic(2)),
        "S3": symmetric(3),
        "D4": dihedral(4),
        "Q8": quaternion8(),
        "A4": alternating(4),
        "S4": symmetric(4),
        "A5": alternating(5),
        "S5": symmetric(5),
    }
    out["A5xA5"] = direct_product(out["A5"], out["A5"])
    return out


@lru_cache(maxsize=None)
def small_catalog() -> tuple[tuple[str, GGroup], ...]:
    g = groups()
    names = ["Z2", "Z3", "Z4", "V4", "S3", "D4", "Q8", "A4", "S4"]
    return tuple((n, identity_object(g[n], name=n)) for n in names)


@lru_cache(maxsize=None)
def large_catalog() -> tuple[tuple[str, GGroup], ...]:
    g = groups()
    extra = [(n, identity_object(g[n], name=n)) for n in ("A5", "S5", "A5xA5")]
    # a non-identity structure: Z/2 -> S5 sending the generator to (12)
    S5 = g["S5"]
    Z2 = g["Z2"]
    t12 = next(
        i for i in range(S5.order) if S5.labels[i] == "(1 2)"
    )
    struct = Homomorphism(Z2, S5, [S5.id, t12])
    extra.append(("Z2->S5", GGroup(Z2, S5, struct, name="Z2->S5")))
    return small_catalog() + tuple(extra)


def catalog(name: str) -> tuple[tuple[str, GGroup], ...]:
    if name == "small":
        return small_catalog()
    if name == "large":
        return large_catalog()
    raise ValueError(f"unknown catalog {name!r}")
