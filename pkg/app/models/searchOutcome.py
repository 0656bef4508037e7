from dataclasses import dataclass
from enum import Enum
from typing import Optional

from app.models.bipartition import Bipartition


class SearchStatus(str, Enum):
    FOUND = 'Found'
    NONE_EXISTS = 'NoneExists'
    INCONCLUSIVE = 'Inconclusive'


@dataclass(frozen=True)
class SearchOutcome:
    """
    Resultado de una búsqueda de bipartición muy costo efectiva.

    Atributos:
        status (SearchStatus): Found, NoneExists o Inconclusive.
        partition (Bipartition | None): La bipartición encontrada (solo Found).
        reason (str): Motivo de un resultado Inconclusive o de un NoneExists trivial.
        partitions_examined (int): Biparticiones evaluadas.
        elapsed (float): Segundos empleados.
    """

    status: SearchStatus
    partition: Optional[Bipartition] = None
    reason: str = ''
    partitions_examined: int = 0
    elapsed: float = 0.0

    @property
    def found(self):
        return self.status is SearchStatus.FOUND
