"""Maps between theta-shape tableaux and quadrant paths.

``psi`` reads entries 3, 4, ... and records E for arm, N for leg and the
backward step for the heart, whose letter is fixed by where 2 sits. ``xi``
instead lets the entry just below the heart value decide the backward
letter, shifting the indexing by one before the heart. Forward-map images
are built without re-validation; :mod:`thetapaths.harness` checks them.
"""

from __future__ import annotations

import enum

from .errors import ContractViolation, DomainMismatchError
from .lattice_paths import LatticePath, backward_step_index, validate_path
from .tableaux import StandardTableau, region_of, transpose

_FORWARD = {"A": "E", "L": "N"}


class BijectionId(str, enum.Enum):
    psi = "psi"
    phi = "phi"
    xi = "xi"
    xi_inv = "xi_inv"
    psi_t = "psi_t"
    xi_t = "xi_t"
    psi_swapped = "psi_swapped"

    @classmethod
    def parse(cls, name: str) -> BijectionId:
        """Accept both ``xi_inv`` and the CLI spelling ``xi-inv``."""
        try:
            return cls(name.replace("-", "_"))
        except ValueError:
            raise KeyError(f"unknown map {name!r}") from None

    @property
    def cli_name(self) -> str:
        return self.value.replace("_", "-")

    @property
    def domain(self) -> str:
        return "path" if self in (BijectionId.phi, BijectionId.xi_inv) else "tableau"

    @property
    def codomain(self) -> str:
        return "tableau" if self.domain == "path" else "path"


def _psi_word(t: StandardTableau, swapped: bool = False) -> str:
    where = region_of(t)
    two_in_arm = where[2] == "A"
    if swapped:
        two_in_arm = not two_in_arm
    letters = {"A": "E", "L": "N", "H": "S" if two_in_arm else "W"}
    return "".join([letters[where[v]] for v in range(3, 2 * t.n + 5)])


def psi(t: StandardTableau) -> LatticePath:
    return LatticePath._trusted(t.n, _psi_word(t))


def psi_swapped(t: StandardTableau) -> str:
    """``psi`` with the two backward letters exchanged.

    Returns a bare word on purpose: it is expected to fail validation.
    """
    return _psi_word(t, swapped=True)


def _checked(path: LatticePath | str) -> LatticePath:
    if isinstance(path, str):
        return LatticePath.from_word(path)
    verdict = validate_path(path.word, path.n)
    if not verdict:
        raise ContractViolation(f"{path.word!r} is {verdict}")
    return path


def _assemble(n: int, arm: list[int], leg: list[int], heart: int) -> StandardTableau:
    arm.sort()
    leg.sort()
    rows = (tuple(arm), (leg[1], heart)) + tuple((v,) for v in leg[2:])
    return StandardTableau._trusted(n, rows)


def phi(path: LatticePath | str) -> StandardTableau:
    """Inverse of :func:`psi`."""
    path = _checked(path)
    arm, leg = [1], [1]
    heart = 0
    for i, c in enumerate(path.word, 1):
        if c == "E":
            arm.append(i + 2)
        elif c == "N":
            leg.append(i + 2)
        else:
            heart = i + 2
            (arm if c == "S" else leg).append(2)
    return _assemble(path.n, arm, leg, heart)


def xi(t: StandardTableau) -> LatticePath:
    where = region_of(t)
    heart = t.rows[1][1]
    backward = {"A": "S", "L": "W"}
    letters = []
    for i in range(1, 2 * t.n + 3):
        if i + 2 < heart:
            letters.append(_FORWARD[where[i + 1]])
        elif i + 2 == heart:
            letters.append(backward[where[i + 1]])
        else:
            letters.append(_FORWARD[where[i + 2]])
    return LatticePath._trusted(t.n, "".join(letters))


def xi_inverse(path: LatticePath | str) -> StandardTableau:
    """Inverse of :func:`xi`.

    With j the backward position the heart holds j+2. Steps before j place
    entry i+1, the backward step places j+1 (arm for S, leg for W), and
    steps after j place entry i+2.
    """
    path = _checked(path)
    j = backward_step_index(path)
    arm, leg = [1], [1]
    for i, c in enumerate(path.word, 1):
        if i < j:
            (arm if c == "E" else leg).append(i + 1)
        elif i == j:
            (arm if c == "S" else leg).append(i + 1)
        else:
            (arm if c == "E" else leg).append(i + 2)
    return _assemble(path.n, arm, leg, j + 2)


def psi_t(t: StandardTableau) -> LatticePath:
    return psi(transpose(t))


def xi_t(t: StandardTableau) -> LatticePath:
    return xi(transpose(t))


MAPS = {
    BijectionId.psi: psi,
    BijectionId.phi: phi,
    BijectionId.xi: xi,
    BijectionId.xi_inv: xi_inverse,
    BijectionId.psi_t: psi_t,
    BijectionId.xi_t: xi_t,
    BijectionId.psi_swapped: psi_swapped,
}


def apply(map_id: BijectionId | str, obj):
    if not isinstance(map_id, BijectionId):
        map_id = BijectionId.parse(map_id)
    if map_id.domain == "tableau":
        if not isinstance(obj, StandardTableau):
            raise DomainMismatchError(f"{map_id.value} takes a tableau, got {type(obj).__name__}")
    elif not isinstance(obj, (LatticePath, str)):
        raise DomainMismatchError(f"{map_id.value} takes a path, got {type(obj).__name__}")
    return MAPS[map_id](obj)
