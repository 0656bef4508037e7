from dataclasses import dataclass
from enum import Enum

import numpy as np


class GraphFamily(str, Enum):
    """Familias de grafos derivados de Z_n que sabe construir la aplicación."""

    GAMMA = 'gamma'
    NILRADICAL = 'nilradical'
    OMEGA = 'omega'
    LINE_OF_GAMMA = 'line-of-gamma'
    TOTAL_OF_GAMMA = 'total-of-gamma'


class VertexLabel:
    """Etiqueta de un vértice. Las subclases fijan cómo se imprime y cómo se serializa."""

    def render(self):
        raise NotImplementedError

    def sort_key(self):
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class Residue(VertexLabel):
    k: int

    def sort_key(self):
        return (0, self.k, 0)

    def render(self):
        return str(self.k)

    def to_json(self):
        return self.k


@dataclass(frozen=True)
class TotalOriginal(VertexLabel):
    k: int

    def sort_key(self):
        return (0, self.k, 0)

    def render(self):
        return str(self.k)

    def to_json(self):
        return self.k


@dataclass(frozen=True)
class _PairLabel(VertexLabel):
    a: int
    b: int

    def __post_init__(self):
        # Extremos distintos y en orden numérico creciente.
        if not self.a < self.b:
            raise ValueError(f'Par de extremos inválido: ({self.a},{self.b}).')

    @classmethod
    def of(cls, x, y):
        return cls(min(x, y), max(x, y))

    def sort_key(self):
        return (1, self.a, self.b)

    def render(self):
        return f'({self.a},{self.b})'

    def to_json(self):
        return [self.a, self.b]


class EdgePair(_PairLabel):
    pass


class TotalEdge(_PairLabel):
    pass


def label_from_json(value, family):
    """
    Reconstruye una etiqueta a partir de su forma JSON.

    La familia decide la variante: en el grafo total los enteros son vértices
    originales y los pares son aristas; en el grafo de líneas solo hay pares.

    Args:
        value (int | list[int]): Etiqueta serializada.
        family (GraphFamily): Familia del grafo al que pertenece.

    Returns:
        VertexLabel: La etiqueta.
    """
    family = GraphFamily(family)
    if isinstance(value, bool):
        raise ValueError(f'Etiqueta inválida: {value!r}.')
    if isinstance(value, int):
        if family is GraphFamily.TOTAL_OF_GAMMA:
            return TotalOriginal(value)
        if family is GraphFamily.LINE_OF_GAMMA:
            raise ValueError(f'El grafo de líneas no tiene vértices enteros: {value!r}.')
        return Residue(value)
    if isinstance(value, (list, tuple)) and len(value) == 2 and all(isinstance(x, int) for x in value):
        if family is GraphFamily.TOTAL_OF_GAMMA:
            return TotalEdge.of(*value)
        if family is GraphFamily.LINE_OF_GAMMA:
            return EdgePair.of(*value)
    raise ValueError(f'Etiqueta inválida para la familia {family.value}: {value!r}.')


class LabeledGraph:
    """
    Grafo simple no dirigido cuyos vértices llevan etiquetas derivadas del anillo.

    La adyacencia es una matriz booleana densa y simétrica; el id de cada
    vértice es su posición en `labels`. El grafo es inmutable una vez creado.

    Atributos:
        labels (tuple[VertexLabel, ...]): Etiquetas, una por vértice.
        adjacency (numpy.ndarray): Matriz booleana |V| x |V| de solo lectura.
        modulus (int | None): El n del que deriva, si aplica.
        family (GraphFamily | None): Familia a la que pertenece, si aplica.
    """

    def __init__(self, labels, adjacency, modulus=None, family=None):
        labels = tuple(labels)
        adjacency = np.array(adjacency, dtype=bool, copy=True).reshape(len(labels), len(labels))

        if len(set(labels)) != len(labels):
            raise ValueError('Las etiquetas de los vértices deben ser distintas.')
        if adjacency.diagonal().any():
            raise ValueError('El grafo no puede tener lazos.')
        if not np.array_equal(adjacency, adjacency.T):
            raise ValueError('La adyacencia debe ser simétrica.')

        adjacency.flags.writeable = False
        self.labels = labels
        self.adjacency = adjacency
        self.modulus = modulus
        self.family = GraphFamily(family) if family is not None else None
        self._degrees = adjacency.sum(axis=1)
        self._degrees.flags.writeable = False
        self._index = {label: i for i, label in enumerate(labels)}

    @property
    def order(self):
        return len(self.labels)

    def __len__(self):
        return self.order

    @property
    def degrees(self):
        return self._degrees

    def degree(self, v):
        return int(self._degrees[v])

    def neighbors(self, v):
        return np.flatnonzero(self.adjacency[v])

    def has_edge(self, u, v):
        return bool(self.adjacency[u, v])

    def edges(self):
        """Aristas como pares (i, j) con i < j, en orden lexicográfico."""
        return [(int(i), int(j)) for i, j in np.argwhere(np.triu(self.adjacency, 1))]

    @property
    def edge_count(self):
        return int(self._degrees.sum()) // 2

    def index_of(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f'La etiqueta {label} no es un vértice del grafo.') from None

    def label_of(self, v):
        return self.labels[v]

    def induced_subgraph(self, vertex_ids, family=None):
        """Subgrafo inducido sobre `vertex_ids`, conservando su orden."""
        ids = np.asarray(list(vertex_ids), dtype=np.intp)
        return LabeledGraph(
            [self.labels[i] for i in ids],
            self.adjacency[np.ix_(ids, ids)],
            modulus=self.modulus,
            family=family if family is not None else self.family,
        )

    def __eq__(self, other):
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self):
        return hash((self.labels, self.adjacency.tobytes()))

    def __repr__(self):
        family = self.family.value if self.family else 'graph'
        return f'<LabeledGraph {family} n={self.modulus} |V|={self.order} |E|={self.edge_count}>'
