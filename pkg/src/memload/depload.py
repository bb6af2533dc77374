"""Count units whose head is still ahead during left-to-right reading.

A unit read at position i stays in short-term memory until the position of
its head is reached; the root stays until the end of the sentence.  The
per-step count of such pending units is the load the sentence imposes.
"""

from __future__ import annotations

from .profiles import DepthProfile
from .treebank import DependencySentence, TreebankError

__all__ = ["LeftwardHead", "load_profile", "load_profile_oracle", "ensure_rightward"]


class LeftwardHead(TreebankError):
    """A non-root unit points at an earlier unit (head index below its own)."""


def load_profile(sentence: DependencySentence) -> DepthProfile:
    """Pending-unit count after reading each of the n units.

    The value at position i is the number of units j <= i whose head lies
    strictly beyond i.  The root counts as resolving at the final position,
    so the last value is always 0.  Heads pointing leftward never pend.
    """
    heads = sentence.heads
    n = len(heads)
    resolved_at = [head if head != 0 else n for head in heads]
    values = tuple(
        sum(1 for j in range(i) if resolved_at[j] > i) for i in range(1, n + 1)
    )
    return DepthProfile(values)


def load_profile_oracle(sentence: DependencySentence) -> DepthProfile:
    """Reference implementation that simulates the pending store explicitly.

    Reading unit i first discharges every stored unit headed by i, then
    stores unit i when its own head is still ahead; reading the final unit
    empties the store.  Kept independent of load_profile so the two can
    check each other.
    """
    heads = sentence.heads
    n = len(heads)
    store: set[int] = set()
    values = []
    for i in range(1, n + 1):
        store = {j for j in store if heads[j - 1] != i}
        head = heads[i - 1]
        if head > i or (head == 0 and i < n):
            store.add(i)
        if i == n:
            store.clear()
        values.append(len(store))
    return DepthProfile(tuple(values))


def ensure_rightward(sentence: DependencySentence) -> None:
    """Raise LeftwardHead unless every non-root head points rightward."""
    offenders = [
        unit.index
        for unit in sentence.units
        if unit.head != 0 and unit.head < unit.index
    ]
    if offenders:
        raise LeftwardHead(f"units {offenders} have heads to their left")
