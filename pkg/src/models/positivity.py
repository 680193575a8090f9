from dataclasses import dataclass


@dataclass(frozen=True)
class MinorSequence:
    """Leading principal minors; minors[k - 1] is the k x k leading minor"""
    minors: tuple

    def __post_init__(self):
        object.__setattr__(self, 'minors', tuple(self.minors))

    def __len__(self):
        return len(self.minors)

    def __getitem__(self, k):
        return self.minors[k]

    def __iter__(self):
        return iter(self.minors)

    def to_list(self):
        # big integers travel as decimal strings
        return [str(minor) for minor in self.minors]


@dataclass(frozen=True)
class PositivityVerdict:
    positive: bool
    minors_checked: MinorSequence
    first_failure: int = None  # 1-based leading size

    def __post_init__(self):
        if self.positive and self.first_failure is not None:
            raise ValueError('a positive verdict has no failing minor')
        if not self.positive:
            if self.first_failure is None:
                raise ValueError('a negative verdict needs first_failure')
            if self.minors_checked[self.first_failure - 1] > 0:
                raise ValueError(f'minor {self.first_failure} is positive, not a failure')

    @property
    def determinants_evaluated(self):
        return len(self.minors_checked)

    def to_dict(self):
        return {
            'positive': self.positive,
            'first_failure': self.first_failure,
            'minors': self.minors_checked.to_list()
        }
