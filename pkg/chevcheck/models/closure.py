from dataclasses import dataclass


@dataclass(frozen=True)
class ClosureStats:
    order: int
    generator_count: int
    rounds: int
    elapsed_s: float
    injective: bool = True
