"""Characters (linear forms L -> K given on a basis) and clusters of them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .fields import FieldElem, FiniteField, orbit_of


@dataclass(frozen=True)
class Character:
    """c(e_i) = values[i] in the splitting field ``field``; base field has ``base_q`` elements."""

    values: tuple[int, ...]
    field: FiniteField
    base_q: int

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    @property
    def dim(self) -> int:
        return len(self.values)

    def sort_key(self):
        return tuple(d for v in self.values for d in self.field.digits(v))

    def elems(self) -> tuple[FieldElem, ...]:
        return tuple(FieldElem(self.field, v) for v in self.values)

    def __call__(self, x: Sequence[int]) -> int:
        """Value on a coordinate vector whose entries already live in ``field``."""
        return self.field.dot(self.values, x)

    def frob(self, e: int = 1) -> "Character":
        """Componentwise a -> a^(q^e)."""
        K = self.field
        q = self.base_q
        s = 0
        while K.p ** s != q:
            s += 1
        return Character(tuple(K.frob(a, s * e) for a in self.values), K, q)

    def orbit(self) -> list["Character"]:
        return [Character(v, self.field, self.base_q)
                for v in orbit_of(self.field, self.values, self.base_q)]

    def restrict(self, indices: Sequence[int]) -> "Character":
        return Character(tuple(self.values[i] for i in indices), self.field, self.base_q)

    def __sub__(self, other: "Character") -> "Character":
        K = self.field
        return Character(tuple(K.sub(a, b) for a, b in zip(self.values, other.values)), K, self.base_q)

    def to_digits(self) -> list[list[int]]:
        return [list(self.field.digits(v)) for v in self.values]

    def __repr__(self):
        if self.field.k == 1:
            return f"Character{list(self.values)}"
        return f"Character{self.to_digits()}"


class Cluster:
    """A finite set of characters over one splitting field, kept sorted."""

    def __init__(self, chars: Iterable[Character], field: FiniteField | None = None, base_q: int | None = None):
        uniq = {c.values: c for c in chars}
        self.chars: tuple[Character, ...] = tuple(sorted(uniq.values(), key=Character.sort_key))
        if self.chars:
            field = field or self.chars[0].field
            base_q = base_q or self.chars[0].base_q
            if any(c.field is not field for c in self.chars):
                raise ValueError("characters of a cluster must share one field")
        self.field = field
        self.base_q = base_q

    def __iter__(self):
        return iter(self.chars)

    def __len__(self):
        return len(self.chars)

    def __contains__(self, c):
        return any(c.values == d.values for d in self.chars)

    def __eq__(self, other):
        return isinstance(other, Cluster) and self.field is other.field and self.value_set() == other.value_set()

    def __hash__(self):
        return hash(frozenset(self.value_set()))

    def __repr__(self):
        return f"Cluster({list(self.chars)})"

    def value_set(self) -> set[tuple[int, ...]]:
        return {c.values for c in self.chars}

    def is_closed(self) -> bool:
        """Closed under the base-field Frobenius."""
        return all(c.frob(1) in self for c in self.chars)

    def orbits(self) -> list["Cluster"]:
        """Decomposition into conjugacy classes, ordered by smallest member."""
        seen: set = set()
        out = []
        for c in self.chars:
            if c.values in seen:
                continue
            orb = c.orbit()
            seen.update(o.values for o in orb)
            out.append(Cluster(orb, self.field, self.base_q))
        return out

    def restrict(self, indices: Sequence[int]) -> "Cluster":
        return Cluster([c.restrict(indices) for c in self.chars], self.field, self.base_q)

    def to_json(self) -> list:
        return [c.to_digits() for c in self.chars]
