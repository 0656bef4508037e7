from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt

from app.models.labeledGraph import GraphFamily

# Una etiqueta en JSON: un residuo, o un par [a, b] en los grafos de líneas y total.
LabelJson = Union[StrictInt, Tuple[StrictInt, StrictInt]]


class GraphDocument(BaseModel):
    """
    Documento JSON de un grafo.

    Atributos:
        n (int | None): Módulo del que deriva.
        family (GraphFamily): Familia del grafo.
        vertices (list): Etiquetas en orden de id.
        edges (list[tuple[int, int]]): Aristas como pares de ids con i < j, en orden lexicográfico.
    """

    model_config = ConfigDict(extra='forbid')

    n: Optional[int] = None
    family: GraphFamily
    vertices: List[LabelJson]
    edges: List[Tuple[StrictInt, StrictInt]]


class PartitionDocument(BaseModel):
    """
    Documento JSON de una bipartición: {"R": [etiquetas], "B": [etiquetas]}.
    """

    model_config = ConfigDict(extra='forbid', populate_by_name=True)

    r: List[LabelJson] = Field(alias='R')
    b: List[LabelJson] = Field(alias='B')
