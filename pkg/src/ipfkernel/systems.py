from __future__ import annotations

import enum


class System(enum.Enum):
    """The five deductive systems the kernel knows about."""

    IPF = "ipf"
    IPF_I = "ipf-i"
    IPF_iota = "ipf-iota"
    IPF_IR = "ipf-ir"
    IPF_iotaR = "ipf-iota-r"

    @property
    def has_I(self) -> bool:
        return self in (System.IPF_I, System.IPF_IR)

    @property
    def has_iota(self) -> bool:
        return self in (System.IPF_iota, System.IPF_iotaR)

    @property
    def restricted(self) -> bool:
        return self in (System.IPF_IR, System.IPF_iotaR)

    @classmethod
    def parse(cls, text: str) -> "System":
        key = text.strip().lower().replace("_", "-")
        aliases = {"ipf-iotar": "ipf-iota-r", "ipf-r": "ipf"}
        key = aliases.get(key, key)
        for s in cls:
            if s.value == key:
                return s
        raise ValueError(f"unknown system {text!r}")

    def __str__(self) -> str:
        return self.value
