from dataclasses import dataclass

CSV_HEADER = ('n', 'family', 'shape', 'vertices', 'verdict', 'source')


@dataclass(frozen=True)
class SurveyRow:
    """
    Una fila del resumen por rangos de n.

    Atributos:
        n (int): El módulo.
        family (str): Familia del grafo.
        shape (str): Forma del módulo.
        vertices (int): Número de vértices del grafo.
        verdict (str): VCE-by-construction(etiqueta corta, p. ej. Thm2_1), VCE-by-search, Not-VCE(testigo), Unknown o Empty-graph.
        source (str): Construcción, método de búsqueda o etiqueta del testigo.
    """

    n: int
    family: str
    shape: str
    vertices: int
    verdict: str
    source: str = ''

    def as_csv(self):
        return (self.n, self.family, self.shape, self.vertices, self.verdict, self.source)

    def as_dict(self):
        return dict(zip(CSV_HEADER, self.as_csv()))
