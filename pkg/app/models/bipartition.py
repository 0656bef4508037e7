from dataclasses import dataclass
from enum import Enum

import numpy as np

from app.utils.errors import InvalidPartitionError


class Side(str, Enum):
    R = 'R'
    B = 'B'

    @property
    def other(self):
        return Side.B if self is Side.R else Side.R


@dataclass(frozen=True)
class Bipartition:
    """
    Bipartición {R, B} del conjunto de vértices de un grafo.

    Atributos:
        graph_size (int): Número de vértices |V| del grafo al que se aplica.
        sides (tuple[Side, ...]): Lado asignado a cada vértice, indexado por id.
    """

    graph_size: int
    sides: tuple

    def __post_init__(self):
        if len(self.sides) != self.graph_size:
            raise InvalidPartitionError(
                f'La bipartición tiene {len(self.sides)} vértices y el grafo {self.graph_size}.'
            )
        # Ambos lados deben tener al menos un vértice.
        if Side.R not in self.sides or Side.B not in self.sides:
            raise InvalidPartitionError('Ninguno de los lados de la bipartición puede estar vacío.')

    @classmethod
    def from_members(cls, graph_size, r_members):
        """Construye la bipartición con `r_members` en R y el resto en B."""
        r_members = set(int(v) for v in r_members)
        if any(v < 0 or v >= graph_size for v in r_members):
            raise InvalidPartitionError('Hay vértices fuera de rango en la bipartición.')
        return cls(graph_size, tuple(Side.R if v in r_members else Side.B for v in range(graph_size)))

    @classmethod
    def from_mask(cls, in_b):
        """Construye la bipartición desde una máscara booleana (True = lado B)."""
        in_b = np.asarray(in_b, dtype=bool)
        return cls(len(in_b), tuple(Side.B if x else Side.R for x in in_b))

    @classmethod
    def balanced(cls, graph_size):
        """Primera mitad de los ids en R, segunda mitad en B."""
        return cls.from_members(graph_size, range(graph_size // 2))

    def side_of(self, v):
        return self.sides[v]

    def members(self, side):
        return tuple(v for v, s in enumerate(self.sides) if s is Side(side))

    @property
    def r(self):
        return self.members(Side.R)

    @property
    def b(self):
        return self.members(Side.B)

    def b_mask(self):
        return np.fromiter((s is Side.B for s in self.sides), dtype=bool, count=self.graph_size)

    def swap(self):
        return Bipartition(self.graph_size, tuple(s.other for s in self.sides))
