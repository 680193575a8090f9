from dataclasses import dataclass
from fractions import Fraction

SYMMETRIC = 'symmetric'
SKEW = 'skew'
KINDS = (SYMMETRIC, SKEW)

SIGN_VIOLATION = 'sign_violation'
RATIO_CONFLICT = 'ratio_conflict'


@dataclass(frozen=True)
class Symmetrizer:
    """Positive rational diagonal D with D x A symmetric (or skew-symmetric)"""
    diag: tuple
    kind: str = SYMMETRIC

    def __post_init__(self):
        diag = tuple(Fraction(value) for value in self.diag)
        if self.kind not in KINDS:
            raise ValueError(f'unknown symmetrizer kind {self.kind!r}')
        for i, value in enumerate(diag):
            if value <= 0:
                raise ValueError(f'symmetrizer entry d_{i + 1} = {value} is not positive')
        object.__setattr__(self, 'diag', diag)

    @property
    def n(self):
        return len(self.diag)

    def scaled(self, factor):
        return Symmetrizer(tuple(value * Fraction(factor) for value in self.diag), self.kind)

    def to_dict(self):
        return {
            'kind': self.kind,
            'diag': [str(value) for value in self.diag]
        }

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(Fraction(value) for value in data['diag']), data['kind'])


@dataclass(frozen=True)
class FailureReason:
    """The concrete pair (0-based) that rules a symmetrizer out"""
    reason: str
    i: int
    j: int

    def to_dict(self):
        return {
            'reason': self.reason,
            'i': self.i + 1,
            'j': self.j + 1
        }


@dataclass(frozen=True)
class SymmetrizeOutcome:
    verdict: bool
    kind: str = SYMMETRIC
    witness: Symmetrizer = None
    failure_reason: FailureReason = None
    pair_inspections: int = 0

    def __post_init__(self):
        if self.verdict and self.witness is None:
            raise ValueError('a positive verdict needs a witness')

    def to_dict(self):
        return {
            'kind': self.kind,
            'verdict': 'yes' if self.verdict else 'no',
            'symmetrizer': self.witness.to_dict() if self.witness else None,
            'failure_reason': self.failure_reason.to_dict() if self.failure_reason else None,
            'pair_inspections': self.pair_inspections
        }
