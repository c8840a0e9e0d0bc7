from dataclasses import dataclass
from functools import lru_cache
from typing import ClassVar, Tuple

from qmcert.shared.models.polynomial import GradedPolynomial


@dataclass(frozen=True, eq=False)
class QmPoly2(GradedPolynomial):
    """Quasimodular form of level Γ(2): polynomial in H2, H4, E2 (H3 = H2 + H4)."""

    GENERATORS: ClassVar[Tuple[str, str, str]] = ("H2", "H4", "E2")
    WEIGHTS: ClassVar[Tuple[int, int, int]] = (2, 2, 2)
    DEPTH_SLOT: ClassVar[int] = 2

    def derivative(self) -> "QmPoly2":
        return self.apply_derivation(_theta_images())


@lru_cache(maxsize=1)
def _theta_images() -> Tuple[QmPoly2, QmPoly2, QmPoly2]:
    return (
        (H2 * H2 + 2 * H2 * H4) / 6 + E2 * H2 / 6,
        -(2 * H2 * H4 + H4 * H4) / 6 + E2 * H4 / 6,
        (E2 * E2 - E4) / 12,
    )


H2 = QmPoly2.generator("H2")
H4 = QmPoly2.generator("H4")
H3 = H2 + H4
E2 = QmPoly2.generator("E2")
E4 = H2 * H2 + H2 * H4 + H4 * H4
E6 = (H2 + 2 * H4) * (2 * H2 + H4) * (H4 - H2) / 2
DELTA = (H2 * (H2 + H4) * H4) ** 2 / 256
