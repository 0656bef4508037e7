from dataclasses import dataclass
from enum import Enum


class Verdict(str, Enum):
    """Veredicto de un vértice dentro de su lado."""

    VERY_COST_EFFECTIVE = 'VeryCostEffective'
    COST_EFFECTIVE_ONLY = 'CostEffectiveOnly'
    NOT_COST_EFFECTIVE = 'NotCostEffective'

    @classmethod
    def of(cls, inside, outside):
        if inside < outside:
            return cls.VERY_COST_EFFECTIVE
        if inside == outside:
            return cls.COST_EFFECTIVE_ONLY
        return cls.NOT_COST_EFFECTIVE


class PartitionVerdict(str, Enum):
    """Veredicto de una bipartición o de un conjunto de vértices."""

    VERY_COST_EFFECTIVE = 'VeryCostEffective'
    COST_EFFECTIVE_ONLY = 'CostEffectiveOnly'
    NEITHER = 'Neither'

    @classmethod
    def of(cls, verdicts):
        verdicts = list(verdicts)
        if all(v is Verdict.VERY_COST_EFFECTIVE for v in verdicts):
            return cls.VERY_COST_EFFECTIVE
        if all(v is not Verdict.NOT_COST_EFFECTIVE for v in verdicts):
            return cls.COST_EFFECTIVE_ONLY
        return cls.NEITHER


@dataclass(frozen=True)
class VertexTally:
    """
    Conteo de vecinos de un vértice.

    Atributos:
        vertex (int): Id del vértice.
        inside (int): Vecinos en su mismo lado.
        outside (int): Vecinos en el otro lado.
    """

    vertex: int
    inside: int
    outside: int

    @property
    def degree(self):
        return self.inside + self.outside

    @property
    def verdict(self):
        return Verdict.of(self.inside, self.outside)


@dataclass(frozen=True)
class VceReport:
    """
    Informe completo del verificador para una bipartición.

    Atributos:
        tallies (tuple[VertexTally, ...]): Un conteo por vértice, en orden de id.
        partition_verdict (PartitionVerdict): Veredicto de la bipartición.
        witnesses (tuple[int, ...]): Vértices que no son muy costo efectivos, en orden creciente.
    """

    tallies: tuple
    partition_verdict: PartitionVerdict
    witnesses: tuple

    @property
    def is_very_cost_effective(self):
        return self.partition_verdict is PartitionVerdict.VERY_COST_EFFECTIVE
