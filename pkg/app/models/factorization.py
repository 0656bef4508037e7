from dataclasses import dataclass
from enum import Enum
from math import isqrt, prod


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, isqrt(p) + 1))


@dataclass(frozen=True)
class Factorization:
    """
    Factorización en primos del módulo n.

    Atributos:
        n (int): El módulo.
        factors (tuple[tuple[int, int], ...]): Pares (primo, exponente) con los primos en orden creciente.
    """

    n: int
    factors: tuple

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if any(e < 1 for _, e in self.factors):
            raise ValueError('Todos los exponentes deben ser >= 1.')
        if not all(_is_prime(p) for p in primes):
            raise ValueError(f'Hay bases que no son primas: {primes}.')
        if primes != sorted(set(primes)):
            raise ValueError('Los primos deben estar en orden estrictamente creciente.')
        if prod(p ** e for p, e in self.factors) != self.n:
            raise ValueError(f'El producto de los factores no es {self.n}.')

    @property
    def primes(self):
        return tuple(p for p, _ in self.factors)

    @property
    def exponents(self):
        return tuple(e for _, e in self.factors)

    @property
    def radical(self):
        """Producto de los primos distintos que dividen a n."""
        return prod(self.primes)

    @property
    def is_squarefree(self):
        return all(e == 1 for e in self.exponents)


class ShapeTag(str, Enum):
    PRIME = 'prime'
    SQUAREFREE_COMPOSITE = 'squarefree'
    P_SQUARED = 'p^2'
    P_CUBED = 'p^3'
    P_SQUARED_Q = 'p^2q'
    P_SQUARED_Q_SQUARED = 'p^2q^2'
    OTHER = 'other'


@dataclass(frozen=True)
class ModulusShape:
    """
    Forma del módulo, usada como clave para elegir la construcción.

    Atributos:
        tag (ShapeTag): La forma.
        primes (tuple[int, ...]): Los primos relevantes. Para p^2q el primero es
            el primo al cuadrado, para p^2q^2 van en orden creciente y para el
            resto coinciden con los primos de la factorización.
    """

    tag: ShapeTag
    primes: tuple

    @property
    def p(self):
        return self.primes[0]

    @property
    def q(self):
        return self.primes[1] if len(self.primes) > 1 else None

    @property
    def m(self):
        return len(self.primes)

    def __str__(self):
        return self.tag.value
