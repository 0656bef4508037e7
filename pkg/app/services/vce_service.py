from collections import deque

import numpy as np

from app.models.bipartition import Bipartition, Side
from app.models.vceReport import PartitionVerdict, VceReport, VertexTally
from app.utils.errors import DomainError, InvalidPartitionError


class VceService:
    """Verificador de costo efectividad: conteos por vértice, veredictos de conjunto y de bipartición."""

    @staticmethod
    def _validate(g, partition):
        if not isinstance(partition, Bipartition):
            raise InvalidPartitionError('Se esperaba una Bipartition.')
        if partition.graph_size != g.order:
            raise InvalidPartitionError(
                f'La bipartición es para {partition.graph_size} vértices y el grafo tiene {g.order}.'
            )

    @staticmethod
    def counts(g, b_mask):
        """Vecinos de cada vértice en su lado (inside) y en el otro (outside), dada la máscara de B."""
        in_b = g.adjacency[:, b_mask].sum(axis=1)  # Vecinos en B de cada vértice.
        in_r = g.degrees - in_b
        inside = np.where(b_mask, in_b, in_r)  # Los de su propio lado.
        return inside, g.degrees - inside

    @staticmethod
    def tally(g, partition, v):
        """
        Contar los vecinos de v en su lado y en el otro.

        Args:
            g (LabeledGraph): El grafo.
            partition (Bipartition): Bipartición válida para g.
            v (int): Id del vértice.

        Returns:
            VertexTally: inside, outside y su veredicto.
        """
        VceService._validate(g, partition)
        if not 0 <= v < g.order:
            raise DomainError(f'El vértice {v} está fuera de rango (|V| = {g.order}).')
        neighbors = g.neighbors(v)
        own = partition.side_of(v)
        inside = sum(1 for u in neighbors if partition.side_of(u) is own)
        return VertexTally(int(v), inside, len(neighbors) - inside)

    @staticmethod
    def check_bipartition(g, partition):
        """
        Verificar una bipartición completa.

        El informe recorre todos los vértices, sin cortar al primer fallo.

        Returns:
            VceReport: Conteos, veredicto y testigos en orden de id.
        """
        VceService._validate(g, partition)
        inside, outside = VceService.counts(g, partition.b_mask())
        tallies = tuple(VertexTally(v, int(i), int(o)) for v, (i, o) in enumerate(zip(inside, outside)))
        # Testigo: todo vértice donde falla la desigualdad estricta.
        witnesses = tuple(int(v) for v in np.flatnonzero(inside >= outside))
        return VceReport(tallies, PartitionVerdict.of(t.verdict for t in tallies), witnesses)

    @staticmethod
    def is_very_cost_effective(g, partition):
        """Versión booleana de check_bipartition; corta en cuanto encuentra un vértice que falla."""
        VceService._validate(g, partition)
        b_mask = partition.b_mask()
        for v in range(g.order):
            row = g.adjacency[v]
            same = row[b_mask].sum() if b_mask[v] else row[~b_mask].sum()
            if 2 * same >= g.degree(v):  # inside >= outside.
                return False
        return True

    @staticmethod
    def is_cost_effective(g, partition):
        """Criterio no estricto: cada vértice tiene al menos tantos vecinos fuera como dentro."""
        VceService._validate(g, partition)
        inside, outside = VceService.counts(g, partition.b_mask())
        return bool((inside <= outside).all())

    @staticmethod
    def set_verdict(g, members):
        """
        Veredicto de un conjunto S de vértices: compara |N(v) ∩ S| con |N(v) ∩ V∖S| para cada v en S.

        Args:
            g (LabeledGraph): El grafo.
            members (Iterable[int]): Ids de S, no vacío.

        Returns:
            PartitionVerdict: VeryCostEffective, CostEffectiveOnly o Neither.
        """
        members = sorted(set(int(v) for v in members))
        if not members:
            raise DomainError('El conjunto no puede estar vacío.')
        if members[0] < 0 or members[-1] >= g.order:
            raise DomainError('Hay vértices fuera de rango en el conjunto.')
        # Conteos de cada miembro respecto de S y de su complemento.
        in_s = np.zeros(g.order, dtype=bool)
        in_s[members] = True
        inside = g.adjacency[np.ix_(members, np.flatnonzero(in_s))].sum(axis=1)
        outside = g.degrees[members] - inside
        tallies = [VertexTally(v, int(i), int(o)) for v, i, o in zip(members, inside, outside)]
        return PartitionVerdict.of(t.verdict for t in tallies)

    @staticmethod
    def bipartite_partition(g):
        """
        2-coloración de g si es bipartito, como Bipartition; None si no lo es
        o si la coloración deja un lado vacío.

        Cada componente se colorea por BFS empezando en R desde su vértice de menor id.
        """
        colour = np.full(g.order, -1, dtype=np.int8)  # -1 sin colorear, 0 R, 1 B.
        for root in range(g.order):
            if colour[root] >= 0:
                continue
            colour[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in g.neighbors(u):
                    if colour[w] < 0:
                        colour[w] = 1 - colour[u]
                        queue.append(int(w))
                    elif colour[w] == colour[u]:
                        return None  # Ciclo impar.
        # Sin aristas todo queda en R.
        if colour.min(initial=0) == colour.max(initial=0):
            return None
        return Bipartition(g.order, tuple(Side.B if c else Side.R for c in colour))
