# src/pimsim/intstate/ledger.py

from __future__ import annotations

from dataclasses import asdict, dataclass, fields


@dataclass
class KernelLedger:
    """
    Operation counters of the integer kernels.

    Native counters count Gaussian-numerator element operations (one complex
    add is one add). emulated_float_ops counts float multiply-adds charged by
    float-emulated steps. Native kernels have no multiply or divide, so
    neither has a counter.
    """

    adds: int = 0
    subs: int = 0
    negs: int = 0
    reim_swaps: int = 0
    shifts: int = 0
    element_swaps: int = 0
    emulated_float_ops: int = 0
    bytes_touched: int = 0

    @property
    def native_ops(self) -> int:
        return self.adds + self.subs + self.negs + self.reim_swaps + self.shifts + self.element_swaps

    def merge(self, other: KernelLedger) -> KernelLedger:
        """Add other's counters into self; returns self."""
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))
        return self

    def is_zero(self) -> bool:
        return all(getattr(self, f.name) == 0 for f in fields(self))

    def as_dict(self) -> dict[str, int]:
        return asdict(self)

    @classmethod
    def total(cls, ledgers: list[KernelLedger]) -> KernelLedger:
        out = cls()
        for ledger in ledgers:
            out.merge(ledger)
        return out
