"""Words in the free group on two generators X and X'."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

__all__ = ["Letter", "Word", "X", "XP", "X_INV", "XP_INV", "FIRST", "SECOND"]

FIRST, SECOND = 0, 1
_NAMES = ("X", "Xp")


class Letter(NamedTuple):
    generator: int
    exponent: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.exponent)

    def __str__(self):
        name = _NAMES[self.generator]
        return name if self.exponent == 1 else f"{name}^-1"


X = Letter(FIRST, 1)
XP = Letter(SECOND, 1)
X_INV = Letter(FIRST, -1)
XP_INV = Letter(SECOND, -1)

_BY_NAME = {str(letter): letter for letter in (X, XP, X_INV, XP_INV)}


@dataclass(frozen=True)
class Word:
    """Finite, not necessarily reduced, sequence of letters."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        letters = tuple(Letter(*l) for l in self.letters)
        for l in letters:
            if l.generator not in (FIRST, SECOND) or l.exponent not in (1, -1):
                raise ValueError(f"invalid letter {l!r}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Read a space-separated word such as ``"X Xp^-1 X"``; ``"1"`` or ``""`` is empty."""
        tokens = text.split()
        if tokens == ["1"]:
            return cls()
        try:
            return cls(tuple(_BY_NAME[t] for t in tokens))
        except KeyError as exc:
            raise ValueError(f"unknown letter {exc.args[0]!r}") from None

    def inverse(self) -> "Word":
        return Word(tuple(l.inverse() for l in reversed(self.letters)))

    def __add__(self, other: "Word") -> "Word":
        if isinstance(other, Letter):
            return Word(self.letters + (other,))
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __radd__(self, other):
        if isinstance(other, Letter):
            return Word((other,) + self.letters)
        return NotImplemented

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self):
        return " ".join(map(str, self.letters)) if self.letters else "1"


def word(*letters: Letter) -> Word:
    return Word(tuple(letters))


def concat(*words: Iterable[Letter]) -> Word:
    out: list[Letter] = []
    for w in words:
        out.extend(w)
    return Word(tuple(out))
