from dataclasses import dataclass, field


@dataclass(frozen=True)
class SeparabilityReport:
    subgroup: str
    ambient: str
    dim_computed: int
    dim_declared: int
    separable: bool
    witnesses: tuple[tuple[int, ...], ...] = ()
    witness_labels: tuple[str, ...] = field(default=(), compare=False)

    def to_dict(self) -> dict:
        return {
            "subgroup": self.subgroup,
            "ambient": self.ambient,
            "dim_computed": self.dim_computed,
            "dim_declared": self.dim_declared,
            "separable": self.separable,
            "witnesses": [list(w) for w in self.witnesses],
        }
