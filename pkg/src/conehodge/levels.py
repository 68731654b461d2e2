"""Extended integer levels NEG < 0 < 1 < ... < INF used for c(X) and HRH(X)."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class ExtendedLevel:
    """A value in {NEG} u N u {INF}.

    NEG stands for every negative level at once.  `saturated` marks a value
    that was capped at an assumed bound and may really be larger; it does not
    take part in comparisons.
    """

    kind: str  # "neg", "fin" or "inf"
    value: int = 0
    saturated: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.kind not in ("neg", "fin", "inf"):
            raise ValueError(f"unknown level kind {self.kind!r}")
        if self.kind == "fin" and self.value < 0:
            raise ValueError("finite levels are nonnegative; use NEG")
        if self.kind != "fin" and self.value != 0:
            raise ValueError("NEG and INF carry no value")

    @classmethod
    def finite(cls, k: int) -> "ExtendedLevel":
        return cls("fin", k) if k >= 0 else NEG

    @classmethod
    def neg(cls) -> "ExtendedLevel":
        return NEG

    @classmethod
    def parse(cls, text) -> "ExtendedLevel":
        if isinstance(text, ExtendedLevel):
            return text
        s = str(text).strip().lower()
        if s in ("inf", "infinity", "+inf"):
            return INF
        if s == "neg":
            return NEG
        return cls.finite(int(s))

    @property
    def is_inf(self) -> bool:
        return self.kind == "inf"

    @property
    def is_neg(self) -> bool:
        return self.kind == "neg"

    def _key(self) -> tuple[int, int]:
        return ({"neg": 0, "fin": 1, "inf": 2}[self.kind], self.value)

    def __lt__(self, other: "ExtendedLevel") -> bool:
        return self._key() < _coerce(other)._key()

    def __le__(self, other: "ExtendedLevel") -> bool:
        return self._key() <= _coerce(other)._key()

    def __gt__(self, other: "ExtendedLevel") -> bool:
        return self._key() > _coerce(other)._key()

    def __ge__(self, other: "ExtendedLevel") -> bool:
        return self._key() >= _coerce(other)._key()

    def with_saturation(self, flag: bool = True) -> "ExtendedLevel":
        return ExtendedLevel(self.kind, self.value, flag)

    def to_json(self):
        if self.kind == "fin":
            return self.value
        return self.kind

    def __str__(self) -> str:
        base = str(self.value) if self.kind == "fin" else self.kind
        return f">={base}" if self.saturated else base


def _coerce(x) -> ExtendedLevel:
    if isinstance(x, ExtendedLevel):
        return x
    if isinstance(x, int):
        return ExtendedLevel.finite(x)
    raise TypeError(f"cannot compare ExtendedLevel with {type(x).__name__}")


NEG = ExtendedLevel("neg")
INF = ExtendedLevel("inf")
ZERO = ExtendedLevel("fin", 0)


def level_min(*levels: ExtendedLevel) -> ExtendedLevel:
    return min(levels, key=lambda x: x._key())


def clamp_to_bound(level: ExtendedLevel, bound: ExtendedLevel) -> ExtendedLevel:
    """Cap a finite level at a finite assumed bound; reaching the bound is flagged as saturated."""
    if bound.is_inf or level.kind != "fin" or level.value < bound.value:
        return level
    return ExtendedLevel("fin", bound.value, True)
