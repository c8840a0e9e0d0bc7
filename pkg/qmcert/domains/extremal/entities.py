from dataclasses import dataclass
from fractions import Fraction

from qmcert.domains.qm1.entities import QmPoly1


@dataclass(frozen=True)
class ExtremalForm:
    """Normalised extremal quasimodular form X_{w,s}.

    ``recurrence_scale`` is the leading coefficient the recurrence produced
    before normalisation; it is 1 whenever the recurrence constant is right.
    """

    weight: int
    depth: int
    poly: QmPoly1
    recurrence_scale: Fraction = Fraction(1)

    @property
    def expected_order(self) -> int:
        """Vanishing order at the cusp, in powers of q."""
        return self.weight // 6 if self.depth == 1 else self.weight // 4

    @property
    def label(self) -> str:
        return f"X({self.weight},{self.depth})"
