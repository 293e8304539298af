"""Base rings: the integers and the integers modulo m.

Every ring here is a commutative principal ideal ring with decidable
arithmetic, which is what makes Smith normal form and exact linear
solving total operations downstream.  Elements are plain Python ints;
for Z/m the canonical representative lives in [0, m).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class RingSpec:
    """Either the integers ("Z") or the integers mod m ("Zmod", modulus=m)."""

    kind: str
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "Z":
            if self.modulus is not None:
                raise ValueError("the integers carry no modulus")
        elif self.kind == "Zmod":
            if self.modulus is None or self.modulus < 2:
                raise ValueError("modulus must be an integer >= 2")
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    @property
    def is_modular(self) -> bool:
        return self.kind == "Zmod"

    def canon(self, a: int) -> int:
        """Canonical representative of a in this ring."""
        if self.kind == "Z":
            return a
        return a % self.modulus

    def is_zero(self, a: int) -> bool:
        return self.canon(a) == 0

    def is_unit(self, a: int) -> bool:
        if self.kind == "Z":
            return a in (1, -1)
        return gcd(a, self.modulus) == 1

    def inverse(self, a: int) -> int:
        """Multiplicative inverse of a unit."""
        if self.kind == "Z":
            if a not in (1, -1):
                raise ValueError(f"{a} is not a unit in Z")
            return a
        if gcd(a, self.modulus) != 1:
            raise ValueError(f"{a} is not a unit mod {self.modulus}")
        return pow(a, -1, self.modulus)

    def unit_multiplier_to_divisor(self, a: int) -> tuple[int, int]:
        """Write a = u * g with u a unit and g the canonical divisor class.

        Over Z the canonical associate of a is |a| (u = sign).  Over Z/m it
        is gcd(a, m), with 0 standing for the class of m; the unit u is found
        in the coprime arithmetic progression a/g + k*(m/g).
        """
        if self.kind == "Z":
            if a == 0:
                return 1, 0
            return (1, a) if a > 0 else (-1, -a)
        m = self.modulus
        a = a % m
        if a == 0:
            return 1, 0
        g = gcd(a, m)
        aa, mm = a // g, m // g
        u = aa
        while gcd(u, m) != 1:
            u += mm
        return u % m, g

    def divides(self, a: int, b: int) -> bool:
        """True iff b is a multiple of a in this ring."""
        a, b = self.canon(a), self.canon(b)
        if self.kind == "Z":
            if a == 0:
                return b == 0
            return b % a == 0
        g = gcd(a, self.modulus)
        return b % g == 0

    def __str__(self) -> str:
        return "Z" if self.kind == "Z" else f"Z/{self.modulus}"

    def to_json(self) -> dict:
        if self.kind == "Z":
            return {"kind": "Z"}
        return {"kind": "Zmod", "modulus": self.modulus}

    @staticmethod
    def from_json(data: dict) -> "RingSpec":
        kind = data.get("kind")
        if kind == "Z":
            return ZZ
        if kind == "Zmod":
            return RingSpec("Zmod", int(data["modulus"]))
        raise ValueError(f"unknown ring kind {kind!r}")


ZZ = RingSpec("Z")


def Zmod(m: int) -> RingSpec:
    return RingSpec("Zmod", m)
