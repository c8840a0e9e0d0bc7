from dataclasses import dataclass
from functools import lru_cache
from typing import ClassVar, Tuple

from qmcert.shared.models.polynomial import GradedPolynomial


@dataclass(frozen=True, eq=False)
class QmPoly1(GradedPolynomial):
    """Quasimodular form of level SL2(Z): polynomial in E2, E4, E6."""

    GENERATORS: ClassVar[Tuple[str, str, str]] = ("E2", "E4", "E6")
    WEIGHTS: ClassVar[Tuple[int, int, int]] = (2, 4, 6)
    DEPTH_SLOT: ClassVar[int] = 0

    def derivative(self) -> "QmPoly1":
        return self.apply_derivation(_ramanujan_images())


@lru_cache(maxsize=1)
def _ramanujan_images() -> Tuple[QmPoly1, QmPoly1, QmPoly1]:
    # D(E2) = (E2^2 - E4)/12, D(E4) = (E2E4 - E6)/3, D(E6) = (E2E6 - E4^2)/2
    return (
        (E2 * E2 - E4) / 12,
        (E2 * E4 - E6) / 3,
        (E2 * E6 - E4 * E4) / 2,
    )


E2 = QmPoly1.generator("E2")
E4 = QmPoly1.generator("E4")
E6 = QmPoly1.generator("E6")
DELTA = (E4 ** 3 - E6 ** 2) / 1728
