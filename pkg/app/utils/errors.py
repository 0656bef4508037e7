class DomainError(ValueError):
    """
    Error base de la aplicación.

    Se lanza cuando un argumento no es válido para una operación del anillo,
    de los grafos o del verificador. Los controladores la convierten en una
    respuesta 400 y la CLI en un mensaje por stderr.
    """


class UnsupportedShapeError(DomainError):
    """
    La forma del módulo n no corresponde a ninguna construcción conocida.

    Atributos:
        shape (ModulusShape | None): La forma que se rechazó, si se conoce.
    """

    def __init__(self, message, shape=None):
        super().__init__(message)
        self.shape = shape


class NoVceBipartitionError(UnsupportedShapeError):
    """
    La forma se rechaza porque el grafo no admite ninguna bipartición muy
    costo efectiva (por ejemplo un único vértice, o K_5 para n = 36).

    Atributos:
        note (str): Explicación corta del contraejemplo.
    """

    def __init__(self, message, shape=None, note=''):
        super().__init__(message, shape)
        self.note = note


class InvalidPartitionError(DomainError):
    """Bipartición mal formada: lado vacío, tamaño distinto, etiquetas repetidas o desconocidas."""


class EmptyGraphError(DomainError):
    """El grafo no tiene vértices, así que no existe ninguna bipartición."""


class ConstructionMismatchError(RuntimeError):
    """
    Una construcción produjo una partición que el verificador rechaza.

    Es un error interno: nunca se devuelve una partición que no haya pasado
    el verificador.
    """
