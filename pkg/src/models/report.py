from dataclasses import dataclass

from src.models.matrix import ComponentPartition


@dataclass(frozen=True)
class ClassificationReport:
    """Every verdict the library can reach about one matrix"""
    input_dims: int
    symmetric_by_signs: bool
    skew_symmetric_by_signs: bool
    symmetrizable: object       # SymmetrizeOutcome
    skew_symmetrizable: object  # SymmetrizeOutcome
    connected: bool
    components: ComponentPartition
    positive: object = None     # PositivityVerdict, present iff symmetrizable
    companion: object = None    # CompanionResult, present iff skew-symmetrizable and decided
    companion_undecided: bool = False

    def __post_init__(self):
        if (self.positive is not None) != self.symmetrizable.verdict:
            raise ValueError('positivity is reported exactly for symmetrizable input')
        if self.companion is not None and not self.skew_symmetrizable.verdict:
            raise ValueError('a companion is only reported for skew-symmetrizable input')
        if self.skew_symmetrizable.verdict and self.companion is None and not self.companion_undecided:
            raise ValueError('skew-symmetrizable input needs a companion result or an undecided flag')

    def to_dict(self):
        symmetrizer = self.symmetrizable.witness
        skew_symmetrizer = self.skew_symmetrizable.witness
        return {
            'input_dims': self.input_dims,
            'symmetric_by_signs': self.symmetric_by_signs,
            'skew_symmetric_by_signs': self.skew_symmetric_by_signs,
            'symmetrizable': self.symmetrizable.verdict,
            'symmetrizer': symmetrizer.to_dict() if symmetrizer else None,
            'skew_symmetrizable': self.skew_symmetrizable.verdict,
            'skew_symmetrizer': skew_symmetrizer.to_dict() if skew_symmetrizer else None,
            'positive': self.positive.to_dict() if self.positive is not None else None,
            'companion': self.companion.to_dict() if self.companion is not None else None,
            'companion_undecided': self.companion_undecided,
            'connected': self.connected,
            'components': self.components.to_dict()
        }
