from collections import Counter

import numpy as np

from app.models.factorization import Factorization, ModulusShape, ShapeTag
from app.utils.errors import DomainError


class RingService:
    """Aritmética exacta sobre Z_n: factorización, divisores de cero, nilpotentes y forma del módulo."""

    @staticmethod
    def factorize(n):
        """
        Factorizar n por división de prueba.

        Args:
            n (int): Entero >= 2.

        Returns:
            Factorization: Los pares (primo, exponente) con los primos en orden creciente.
        """
        if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 2:
            raise DomainError(f'El módulo debe ser un entero >= 2, se recibió {n!r}.')
        n = int(n)  # Acepta enteros de numpy.

        factors = []
        rest = n
        d = 2
        while d * d <= rest:
            if rest % d == 0:
                # Extrae todas las potencias de d.
                e = 0
                while rest % d == 0:
                    rest //= d
                    e += 1
                factors.append((d, e))
            d += 1 if d == 2 else 2  # Después del 2 solo impares.
        if rest > 1:  # Lo que queda es un primo mayor que la raíz.
            factors.append((rest, 1))
        return Factorization(n, tuple(factors))

    @staticmethod
    def is_prime(n):
        return isinstance(n, (int, np.integer)) and n >= 2 and RingService.factorize(n).factors == ((n, 1),)

    @staticmethod
    def zero_divisors(n):
        """
        Divisores de cero no nulos de Z_n: los k en [1, n-1] con gcd(k, n) > 1.

        Returns:
            tuple[int, ...]: En orden creciente.
        """
        RingService.factorize(n)  # Valida n.
        k = np.arange(1, n, dtype=np.int64)
        # k es divisor de cero si comparte un primo con n.
        return tuple(int(x) for x in k[np.gcd(k, n) > 1])

    @staticmethod
    def nilpotents(n):
        """
        Nilpotentes no nulos de Z_n: los múltiplos no nulos de rad(n).

        Returns:
            tuple[int, ...]: En orden creciente; vacío si n es libre de cuadrados.
        """
        radical = RingService.factorize(n).radical
        return tuple(range(radical, n, radical))  # k es nilpotente si rad(n) divide a k.

    @staticmethod
    def non_nilpotent_zero_divisors(n):
        radical = RingService.factorize(n).radical
        return tuple(k for k in RingService.zero_divisors(n) if k % radical)

    @staticmethod
    def classify(factorization):
        """
        Clasificar la forma del módulo según el multiconjunto de exponentes.

        Args:
            factorization (Factorization): Factorización válida.

        Returns:
            ModulusShape: La forma; para p^2q el primo p es el que va al cuadrado.
        """
        primes = factorization.primes
        exponents = factorization.exponents
        by_exponent = Counter(exponents)

        # Las formas con construcción propia; el resto es OTHER.

        if exponents == (1,):
            return ModulusShape(ShapeTag.PRIME, primes)
        if factorization.is_squarefree:
            return ModulusShape(ShapeTag.SQUAREFREE_COMPOSITE, primes)
        if exponents == (2,):
            return ModulusShape(ShapeTag.P_SQUARED, primes)
        if exponents == (3,):
            return ModulusShape(ShapeTag.P_CUBED, primes)
        if by_exponent == Counter({2: 1, 1: 1}):
            # p es el primo al cuadrado, no necesariamente el menor.
            squared = next(p for p, e in factorization.factors if e == 2)
            single = next(p for p, e in factorization.factors if e == 1)
            return ModulusShape(ShapeTag.P_SQUARED_Q, (squared, single))
        if exponents == (2, 2):
            return ModulusShape(ShapeTag.P_SQUARED_Q_SQUARED, primes)
        return ModulusShape(ShapeTag.OTHER, primes)

    @staticmethod
    def shape_of(n):
        return RingService.classify(RingService.factorize(n))
