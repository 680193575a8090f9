from dataclasses import dataclass, field

from src.models.matrix import IntMatrix

# How a companion search was decided
FAST_PATH_NONE = 'none'
FAST_PATH_SMALL = 'small'
FAST_PATH_THREE_BY_THREE = 'three_by_three'
FAST_PATH_DENSE = 'dense'
FAST_PATH_CPLUS_FIRST = 'cplus_first'
FAST_PATH_COMPONENT_SPLIT = 'component_split'

FAST_PATHS = (
    FAST_PATH_NONE, FAST_PATH_SMALL, FAST_PATH_THREE_BY_THREE,
    FAST_PATH_DENSE, FAST_PATH_CPLUS_FIRST, FAST_PATH_COMPONENT_SPLIT
)


@dataclass(frozen=True)
class SignAssignment:
    """One sign per unordered nonzero pair (i, j), i < j, 0-based"""
    signs: dict = field(default_factory=dict)

    def __post_init__(self):
        for pair, sign in self.signs.items():
            i, j = pair
            if not i < j:
                raise ValueError(f'pair {pair!r} must be ordered i < j')
            if sign not in (-1, 1):
                raise ValueError(f'sign for {pair!r} must be -1 or +1, got {sign!r}')

    def to_dict(self):
        return {f'{i + 1},{j + 1}': sign for (i, j), sign in sorted(self.signs.items())}


@dataclass(frozen=True)
class CompanionResult:
    found: bool
    companion: IntMatrix = None
    assignments_tried: int = 0
    fast_path: str = FAST_PATH_NONE

    def __post_init__(self):
        if self.fast_path not in FAST_PATHS:
            raise ValueError(f'unknown fast path {self.fast_path!r}')
        if self.found != (self.companion is not None):
            raise ValueError('companion must be present exactly when found')

    @property
    def message(self):
        if self.found:
            return 'Positive quasi-Cartan companion found'
        return 'There is no positive quasi-Cartan companion of B'

    def to_dict(self):
        return {
            'found': self.found,
            'companion': self.companion.to_dict() if self.companion is not None else None,
            'assignments_tried': self.assignments_tried,
            'fast_path': self.fast_path
        }
