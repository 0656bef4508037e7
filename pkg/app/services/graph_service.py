import logging

import numpy as np

from app.models.labeledGraph import (
    EdgePair,
    GraphFamily,
    LabeledGraph,
    Residue,
    TotalEdge,
    TotalOriginal,
)
from app.services.ring_service import RingService
from app.utils.errors import DomainError

logger = logging.getLogger(__name__)


class GraphService:
    """Constructores de grafos derivados de Z_n y transformaciones de línea y total."""

    @staticmethod
    def _product_graph(n, residues, family):
        # Arista entre u y v cuando u*v = 0 (mod n).
        values = np.asarray(residues, dtype=np.int64)
        adjacency = np.remainder(np.outer(values, values), n) == 0
        np.fill_diagonal(adjacency, False)  # Sin lazos aunque u*u = 0.
        return LabeledGraph([Residue(int(k)) for k in values], adjacency, modulus=n, family=family)

    @staticmethod
    def gamma(n):
        """
        Grafo de divisores de cero Γ(Z_n).

        Args:
            n (int): Módulo >= 2.

        Returns:
            LabeledGraph: Vértices los divisores de cero, aristas cuando el producto es 0 mod n.
        """
        return GraphService._product_graph(n, RingService.zero_divisors(n), GraphFamily.GAMMA)

    @staticmethod
    def nilradical_graph(n):
        """Subgrafo inducido de Γ(Z_n) sobre los nilpotentes no nulos."""
        return GraphService._product_graph(n, RingService.nilpotents(n), GraphFamily.NILRADICAL)

    @staticmethod
    def non_nilradical_graph(n):
        """Subgrafo inducido de Γ(Z_n) sobre los divisores de cero no nilpotentes."""
        return GraphService._product_graph(n, RingService.non_nilpotent_zero_divisors(n), GraphFamily.OMEGA)

    @staticmethod
    def _residue_values(g, transform):
        values = []
        for label in g.labels:
            if not isinstance(label, Residue):
                raise DomainError(f'La transformación {transform} necesita un grafo etiquetado por residuos.')
            values.append(label.k)
        return values

    @staticmethod
    def _incidence(g):
        edges = g.edges()
        # Matriz de incidencia vértice x arista, en el orden de `edges()`.
        incidence = np.zeros((g.order, len(edges)), dtype=np.int32)
        for e, (i, j) in enumerate(edges):
            incidence[i, e] = 1
            incidence[j, e] = 1
        return edges, incidence

    @staticmethod
    def _edge_adjacency(incidence):
        # Dos aristas son adyacentes si comparten un extremo.
        shared = (incidence.T @ incidence) > 0
        np.fill_diagonal(shared, False)
        return shared

    @staticmethod
    def line_graph(g):
        """
        Grafo de líneas L(g).

        Args:
            g (LabeledGraph): Grafo simple etiquetado por residuos.

        Returns:
            LabeledGraph: Un vértice EdgePair por arista de g; adyacentes si las aristas comparten un extremo.
        """
        values = GraphService._residue_values(g, 'de líneas')
        edges, incidence = GraphService._incidence(g)
        labels = [EdgePair.of(values[i], values[j]) for i, j in edges]
        # Solo L(Γ(Z_n)) tiene familia; otros grafos de líneas quedan sin ella.
        family = GraphFamily.LINE_OF_GAMMA if g.family is GraphFamily.GAMMA else None
        logger.debug('Grafo de líneas: %d aristas -> %d vértices', g.edge_count, len(labels))
        return LabeledGraph(labels, GraphService._edge_adjacency(incidence), modulus=g.modulus, family=family)

    @staticmethod
    def total_graph(g):
        """
        Grafo total T(g): vértices y aristas de g, con las adyacencias vértice-vértice,
        arista-arista (extremo común) y vértice-arista (incidencia).
        """
        values = GraphService._residue_values(g, 'total')
        edges, incidence = GraphService._incidence(g)
        labels = [TotalOriginal(k) for k in values] + [TotalEdge.of(values[i], values[j]) for i, j in edges]

        # g y L(g) en la diagonal de bloques; la incidencia fuera de ella.
        adjacency = np.block([
            [g.adjacency, incidence.astype(bool)],
            [incidence.T.astype(bool), GraphService._edge_adjacency(incidence)],
        ])
        family = GraphFamily.TOTAL_OF_GAMMA if g.family is GraphFamily.GAMMA else None
        return LabeledGraph(labels, adjacency, modulus=g.modulus, family=family)

    @staticmethod
    def isolated_vertices(g):
        """Ids de los vértices de grado 0, en orden creciente."""
        return tuple(int(v) for v in np.flatnonzero(g.degrees == 0))

    @staticmethod
    def parse_family(family):
        try:
            return GraphFamily(family)
        except ValueError:
            raise DomainError(f'Familia de grafos desconocida: {family!r}.') from None

    @staticmethod
    def build(n, family):
        """
        Construir el grafo de la familia pedida para el módulo n.

        Args:
            n (int): Módulo >= 2.
            family (GraphFamily | str): gamma, nilradical, omega, line-of-gamma o total-of-gamma.

        Returns:
            LabeledGraph: El grafo.
        """
        family = GraphService.parse_family(family)  # Acepta el enum o su nombre.
        if family is GraphFamily.GAMMA:
            return GraphService.gamma(n)
        if family is GraphFamily.NILRADICAL:
            return GraphService.nilradical_graph(n)
        if family is GraphFamily.OMEGA:
            return GraphService.non_nilradical_graph(n)
        if family is GraphFamily.LINE_OF_GAMMA:
            return GraphService.line_graph(GraphService.gamma(n))
        return GraphService.total_graph(GraphService.gamma(n))  # TOTAL_OF_GAMMA.

    @staticmethod
    def complete_graph(m):
        """K_m con vértices etiquetados 1..m."""
        adjacency = ~np.eye(m, dtype=bool)  # Todos con todos salvo la diagonal.
        return LabeledGraph([Residue(k) for k in range(1, m + 1)], adjacency)

    @staticmethod
    def from_edges(labels, edges, modulus=None, family=None):
        """
        Construir un grafo a partir de sus etiquetas y de pares de ids.

        Args:
            labels (list[VertexLabel | int]): Etiquetas; los enteros se convierten en Residue.
            edges (Iterable[tuple[int, int]]): Aristas como pares de ids.
        """
        labels = [Residue(x) if isinstance(x, int) else x for x in labels]
        adjacency = np.zeros((len(labels), len(labels)), dtype=bool)
        for i, j in edges:
            if i == j:
                raise DomainError(f'Lazo en el vértice {i}.')
            if not (0 <= i < len(labels) and 0 <= j < len(labels)):
                raise DomainError(f'Arista ({i},{j}) fuera de rango.')
            adjacency[i, j] = adjacency[j, i] = True
        return LabeledGraph(labels, adjacency, modulus=modulus, family=family)
