"""Fermionic occupation-number states for small clusters, stored as int bitmasks.

Bit m of a state holds the occupation of mode m, with modes ordered
site-major, spin-minor: mode = 2*(site-1) + spin, spin 0 = up, 1 = down.
Operators carry the usual fermionic sign, (-1)**(number of occupied
modes below the one acted on).
"""

from dataclasses import dataclass, field
from functools import lru_cache

UP = 0
DOWN = 1


def mode_index(site: int, spin: int) -> int:
    """Map a 1-based site and a spin (UP or DOWN) to a mode index."""
    if spin not in (UP, DOWN):
        raise ValueError(f"spin must be {UP} (up) or {DOWN} (down), got {spin}")
    if site < 1:
        raise ValueError(f"sites are 1-based, got {site}")
    return 2 * (site - 1) + spin


def _check_mode(mode: int, num_modes: int) -> None:
    if not 0 <= mode < num_modes:
        raise ValueError(f"mode {mode} out of range for {num_modes} modes")


def _sign_below(state: int, mode: int) -> int:
    # parity of the occupied modes with index < mode
    return -1 if (state & ((1 << mode) - 1)).bit_count() & 1 else 1


def annihilate(state: int, mode: int, num_modes: int):
    """Apply c_mode.  Returns (new_state, sign) or None if the mode is empty."""
    _check_mode(mode, num_modes)
    bit = 1 << mode
    if not state & bit:
        return None
    return state ^ bit, _sign_below(state, mode)


def create(state: int, mode: int, num_modes: int):
    """Apply c^dagger_mode.  Returns (new_state, sign) or None if occupied."""
    _check_mode(mode, num_modes)
    bit = 1 << mode
    if state & bit:
        return None
    return state | bit, _sign_below(state, mode)


_UP_MASK = 0x5555555555555555  # even bits: every up mode


def up_count(state: int) -> int:
    return (state & _UP_MASK).bit_count()


def down_count(state: int) -> int:
    return (state & ~_UP_MASK).bit_count()


def site_occupation(state: int, site: int) -> int:
    """Local occupation code of a site: up + 2*down, i.e. 0, 1=up, 2=down, 3=both."""
    return (state >> (2 * (site - 1))) & 3


@dataclass(frozen=True)
class SectorBasis:
    """Ordered basis of all states with fixed (n_up, n_down) on L sites.

    ``states`` is sorted ascending by bitmask; ``index`` inverts it.  A basis
    ket is the creation-operator product for its occupied modes applied in
    ascending mode order to the vacuum.
    """

    L: int
    n_up: int
    n_down: int
    states: tuple
    index: dict = field(repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.states)

    @property
    def num_electrons(self) -> int:
        return self.n_up + self.n_down

    @property
    def sz2(self) -> int:
        """Twice the z spin projection, n_up - n_down."""
        return self.n_up - self.n_down


@lru_cache(maxsize=None)
def enumerate_sector(L: int, n_up: int, n_down: int) -> SectorBasis:
    """All bitmask states of the (n_up, n_down) sector, ascending."""
    if L < 1:
        raise ValueError(f"need at least one site, got L={L}")
    if not 0 <= n_up <= L or not 0 <= n_down <= L:
        raise ValueError(f"particle counts ({n_up}, {n_down}) do not fit on {L} sites")
    states = tuple(
        s for s in range(1 << (2 * L))
        if up_count(s) == n_up and down_count(s) == n_down
    )
    return SectorBasis(L, n_up, n_down, states, {s: i for i, s in enumerate(states)})
