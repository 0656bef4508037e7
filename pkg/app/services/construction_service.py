import logging

from app.config import Config
from app.models.bipartition import Bipartition
from app.models.certificate import Certificate, ConstructionId, SearchSource
from app.models.factorization import ShapeTag
from app.models.labeledGraph import GraphFamily
from app.models.searchOutcome import SearchStatus
from app.services.graph_service import GraphService
from app.services.ring_service import RingService
from app.services.search_service import SearchService
from app.services.vce_service import VceService
from app.utils.errors import (
    ConstructionMismatchError,
    DomainError,
    EmptyGraphError,
    NoVceBipartitionError,
    UnsupportedShapeError,
)

logger = logging.getLogger(__name__)


class ConstructionService:
    """
    Construcciones explícitas de biparticiones muy costo efectivas, una por
    forma del módulo y familia de grafo, y el despachador que elige cuál usar.

    Toda partición pasa por el verificador antes de devolverse.
    """

    @staticmethod
    def _validated(graph, partition, construction_id):
        # Ninguna partición sale de aquí sin pasar el verificador.
        report = VceService.check_bipartition(graph, partition)
        if not report.is_very_cost_effective:
            labels = [graph.label_of(v).render() for v in report.witnesses]
            raise ConstructionMismatchError(
                f'La construcción {construction_id.value} falló en n={graph.modulus}; testigos: {labels}.'
            )
        logger.debug('Construcción %s verificada sobre %r', construction_id.value, graph)
        return partition

    @staticmethod
    def _require_shape(n, *tags):
        shape = RingService.shape_of(n)
        if shape.tag not in tags:
            expected = ', '.join(t.value for t in tags)
            raise UnsupportedShapeError(f'n={n} tiene forma {shape}, se esperaba {expected}.', shape)
        return shape

    @staticmethod
    def _split_by(graph, in_r):
        return Bipartition.from_members(graph.order, [v for v, label in enumerate(graph.labels) if in_r(label)])

    @staticmethod
    def _balanced_by_label(graph):
        # Mitad menor de las etiquetas en R.
        ordered = sorted(range(graph.order), key=lambda v: graph.label_of(v).sort_key())
        return Bipartition.from_members(graph.order, ordered[: graph.order // 2])

    @staticmethod
    def _prime_pair(p, q):
        if not (RingService.is_prime(p) and RingService.is_prime(q)) or p == q:
            raise DomainError(f'p={p} y q={q} deben ser primos distintos.')
        return min(p, q), max(p, q)

    @staticmethod
    def _half_split_in_r(a, b, p, q):
        """
        Lado de la arista [u_i, v_j] con u_i = p·i y v_j = q·j: en R si i es impar
        y j está en la mitad baja 1..(p-1)/2, o si i es par y j está en la mitad alta.
        """
        u, v = (a, b) if a % p == 0 else (b, a)  # u es el extremo múltiplo de p.
        i, j = u // p, v // q
        low = j <= (p - 1) // 2
        return low if i % 2 == 1 else not low

    @staticmethod
    def vce_squarefree(n, graph=None):
        """
        Bipartición de Γ(Z_n) para n libre de cuadrados con al menos dos primos.

        R contiene los divisores de cero múltiplos del mayor primo p_m y B el resto.

        Args:
            n (int): Módulo libre de cuadrados, m >= 2.
            graph (LabeledGraph, opcional): Γ(Z_n) ya construido.

        Returns:
            Bipartition: La bipartición verificada.
        """
        shape = ConstructionService._require_shape(n, ShapeTag.SQUAREFREE_COMPOSITE)
        largest = shape.primes[-1]  # R = múltiplos del mayor primo.
        graph = GraphService.gamma(n) if graph is None else graph
        partition = ConstructionService._split_by(graph, lambda label: label.k % largest == 0)
        return ConstructionService._validated(graph, partition, ConstructionId.SQUAREFREE)

    @staticmethod
    def vce_pq(n, graph=None):
        """Para n = pq, Γ(Z_n) es K_{q-1,p-1}: R = múltiplos de q, B = múltiplos de p."""
        shape = ConstructionService._require_shape(n, ShapeTag.SQUAREFREE_COMPOSITE)
        if shape.m != 2:
            raise UnsupportedShapeError(f'n={n} no es producto de dos primos.', shape)
        graph = GraphService.gamma(n) if graph is None else graph
        partition = ConstructionService._split_by(graph, lambda label: label.k % shape.q == 0)
        return ConstructionService._validated(graph, partition, ConstructionId.PQ)

    @staticmethod
    def vce_p2q(n, graph=None):
        """
        Bipartición de Γ(Z_n) para n = p^2 q (p el primo al cuadrado).

        R contiene los múltiplos de q y B los múltiplos de p que no lo son de q.
        """
        shape = ConstructionService._require_shape(n, ShapeTag.P_SQUARED_Q)
        graph = GraphService.gamma(n) if graph is None else graph
        partition = ConstructionService._split_by(graph, lambda label: label.k % shape.q == 0)
        return ConstructionService._validated(graph, partition, ConstructionId.P2Q)

    @staticmethod
    def vce_p2q2(n, graph=None):
        """
        Bipartición de Γ(Z_n) para n = p^2 q^2 con p < q primos impares.

        R = {p^2 | v} ∪ {p | v, q ∤ v} ∪ R3 y B = {q^2 | v} ∪ {q | v, p ∤ v} ∪ B3.
        Los (p-1)(q-1) múltiplos de pq que no lo son de p^2 ni de q^2 se reparten
        en orden creciente: los (q(p-2)+1)/2 menores a R3 y el resto a B3.
        """
        shape = ConstructionService._require_shape(n, ShapeTag.P_SQUARED_Q_SQUARED)
        p, q = shape.p, shape.q
        if p == 2:
            raise UnsupportedShapeError(f'n={n}: la construcción p^2q^2 necesita primos impares.', shape)
        graph = GraphService.gamma(n) if graph is None else graph

        # Múltiplos "puros" de pq: su vecindad son todos los demás múltiplos de pq.
        pure = sorted(
            label.k for label in graph.labels
            if label.k % (p * q) == 0 and label.k % (p * p) and label.k % (q * q)
        )
        r3 = set(pure[: (q * (p - 2) + 1) // 2])  # Los menores van a R.

        def in_r(label):
            k = label.k
            if k % (p * p) == 0:
                return True
            if k % p == 0 and k % q:
                return True
            return k in r3

        partition = ConstructionService._split_by(graph, in_r)
        return ConstructionService._validated(graph, partition, ConstructionId.P2Q2)

    @staticmethod
    def vce_line_pq(p, q, graph=None):
        """
        Bipartición de L(Γ(Z_pq)) con p < q primos.

        Para p impar, cada arista [u_i, v_j] va a R o a B según la paridad de i y
        la mitad de j (ver `_half_split_in_r`); cada lado recibe (p-1)(q-1)/2
        vértices. Para p = 2 el grafo de líneas es K_{q-1} y se parte por la
        mitad en orden de etiqueta.
        """
        p, q = ConstructionService._prime_pair(p, q)
        graph = GraphService.line_graph(GraphService.gamma(p * q)) if graph is None else graph
        if p == 2:
            # L(Γ(Z_2q)) = K_{q-1}, de orden par.
            partition = ConstructionService._balanced_by_label(graph)
        else:
            partition = ConstructionService._split_by(
                graph, lambda label: ConstructionService._half_split_in_r(label.a, label.b, p, q)
            )
        return ConstructionService._validated(graph, partition, ConstructionId.LINE_PQ)

    @staticmethod
    def _nilradical_id(shape):
        p = shape.p
        if shape.tag is ShapeTag.P_SQUARED:
            if p == 2:
                raise NoVceBipartitionError(
                    'N(Z_4) tiene un único vértice: no hay bipartición.', shape, note='K_1'
                )
            return ConstructionId.NIL_P2
        if shape.tag is ShapeTag.P_SQUARED_Q_SQUARED:
            if p == 2:
                raise NoVceBipartitionError(
                    f'N(Z_{(p * shape.q) ** 2}) es K_{p * shape.q - 1}, completo de orden impar: '
                    'no tiene bipartición muy costo efectiva.',
                    shape,
                    note='Para n = 36 (K_5) la búsqueda exhaustiva no encuentra ninguna entre las 15 biparticiones.',
                )
            return ConstructionId.NIL_P2Q2
        if shape.tag is ShapeTag.P_CUBED:
            return ConstructionId.NIL_P3
        if shape.tag is ShapeTag.P_SQUARED_Q:
            if p == 2:
                raise NoVceBipartitionError(
                    f'N(Z_{4 * shape.q}) tiene un único vértice: no hay bipartición.', shape, note='K_1'
                )
            return ConstructionId.NIL_P2Q
        raise UnsupportedShapeError(f'No hay construcción del grafo nilradical para la forma {shape}.', shape)

    @staticmethod
    def vce_nilradical(n, graph=None):
        """
        Bipartición del grafo nilradical N(Z_n).

        - n = p^2 (p > 2), n = p^2q^2 (p, q impares) y n = p^2q (p impar): el grafo es
          completo de orden par y se parte por la mitad en orden de etiqueta.
        - n = p^3: R = múltiplos de p que no lo son de p^2, B = múltiplos de p^2.

        Raises:
            NoVceBipartitionError: Para las formas con p = 2, donde no existe bipartición.
            UnsupportedShapeError: Para cualquier otra forma.
        """
        shape = RingService.shape_of(n)
        construction_id = ConstructionService._nilradical_id(shape)
        graph = GraphService.nilradical_graph(n) if graph is None else graph

        # Solo p^3 no es un grafo completo.
        if construction_id is ConstructionId.NIL_P3:
            p = shape.p
            partition = ConstructionService._split_by(graph, lambda label: label.k % (p * p) != 0)
        else:
            partition = ConstructionService._balanced_by_label(graph)
        return ConstructionService._validated(graph, partition, construction_id)

    @staticmethod
    def vce_omega_squarefree(n, graph=None):
        """Para n libre de cuadrados Ω(Z_n) = Γ(Z_n): delega en `vce_squarefree`."""
        ConstructionService._require_shape(n, ShapeTag.SQUAREFREE_COMPOSITE)
        graph = GraphService.non_nilradical_graph(n) if graph is None else graph
        return ConstructionService.vce_squarefree(n, graph=graph)

    @staticmethod
    def vce_total_pq(p, q, graph=None):
        """
        Bipartición de T(Γ(Z_pq)) con 3 <= p < q primos.

        R = vértices originales múltiplos de p más las aristas que el reparto
        de `vce_line_pq` manda a R; B = múltiplos de q más las aristas restantes.
        """
        p, q = ConstructionService._prime_pair(p, q)
        if p == 2:
            raise UnsupportedShapeError(f'T(Γ(Z_{2 * q})) no tiene construcción: p debe ser impar.')
        graph = GraphService.total_graph(GraphService.gamma(p * q)) if graph is None else graph

        def in_r(label):
            if hasattr(label, 'k'):  # Vértice original.
                return label.k % p == 0
            return ConstructionService._half_split_in_r(label.a, label.b, p, q)  # Vértice arista.

        partition = ConstructionService._split_by(graph, in_r)
        return ConstructionService._validated(graph, partition, ConstructionId.TOTAL_PQ)

    @staticmethod
    def _construction_for(n, family, shape):
        """La construcción aplicable a (n, familia) como (id, función(graph)), o None."""
        tag, p = shape.tag, shape.p
        two_primes = tag is ShapeTag.SQUAREFREE_COMPOSITE and shape.m == 2

        if family is GraphFamily.GAMMA:
            # pq antes que el caso general libre de cuadrados.
            if two_primes:
                return ConstructionId.PQ, lambda g: ConstructionService.vce_pq(n, g)
            if tag is ShapeTag.SQUAREFREE_COMPOSITE:
                return ConstructionId.SQUAREFREE, lambda g: ConstructionService.vce_squarefree(n, g)
            if tag is ShapeTag.P_SQUARED_Q:
                return ConstructionId.P2Q, lambda g: ConstructionService.vce_p2q(n, g)
            if tag is ShapeTag.P_SQUARED_Q_SQUARED and p != 2:
                return ConstructionId.P2Q2, lambda g: ConstructionService.vce_p2q2(n, g)
        elif family is GraphFamily.NILRADICAL:
            nil_tags = (ShapeTag.P_SQUARED, ShapeTag.P_CUBED, ShapeTag.P_SQUARED_Q, ShapeTag.P_SQUARED_Q_SQUARED)
            # Con p = 2 solo 8 = 2^3 tiene construcción; el resto cae a la búsqueda.
            if tag in nil_tags and (p != 2 or tag is ShapeTag.P_CUBED):
                construction_id = ConstructionService._nilradical_id(shape)
                return construction_id, lambda g: ConstructionService.vce_nilradical(n, g)
        elif family is GraphFamily.OMEGA:
            if tag is ShapeTag.SQUAREFREE_COMPOSITE:
                return ConstructionId.OMEGA_SQUAREFREE, lambda g: ConstructionService.vce_omega_squarefree(n, g)
        elif family is GraphFamily.LINE_OF_GAMMA:
            if two_primes:
                return ConstructionId.LINE_PQ, lambda g: ConstructionService.vce_line_pq(p, shape.q, g)
        elif family is GraphFamily.TOTAL_OF_GAMMA:
            if two_primes and p != 2:
                return ConstructionId.TOTAL_PQ, lambda g: ConstructionService.vce_total_pq(p, shape.q, g)
        return None

    @staticmethod
    def dispatch(n, family, vertex_cap=Config.DEFAULT_VERTEX_CAP, graph=None):
        """
        Certificar si el grafo de la familia pedida admite una bipartición muy costo efectiva.

        Orden: construcción explícita para la forma de n; si no la hay, vértice
        aislado; 2-coloración si el grafo es bipartito; búsqueda exhaustiva
        hasta `vertex_cap` vértices; búsqueda local; y si nada concluye, Unknown.

        Args:
            n (int): Módulo >= 2.
            family (GraphFamily | str): Familia del grafo.
            vertex_cap (int): Límite de vértices para la búsqueda exhaustiva.
            graph (LabeledGraph, opcional): El grafo ya construido.

        Returns:
            Certificate: Exists, NotVce o Unknown.

        Raises:
            EmptyGraphError: Si el grafo no tiene vértices.
        """
        family = GraphService.parse_family(family)
        graph = GraphService.build(n, family) if graph is None else graph
        if graph.order == 0:
            raise EmptyGraphError(f'El grafo {family.value} de Z_{n} no tiene vértices.')

        shape = RingService.shape_of(n)
        construction = ConstructionService._construction_for(n, family, shape)
        if construction is not None:
            construction_id, build = construction
            logger.info('n=%d %s: construcción %s', n, family.value, construction_id.value)
            return Certificate.exists(graph, build(graph), construction_id)

        # Sin construcción: primero las obstrucciones baratas.
        isolated = SearchService.isolated_obstruction(graph)
        if isolated is not None:
            logger.info('n=%d %s: vértice aislado %s', n, family.value, graph.label_of(isolated))
            return Certificate.isolated_vertex(graph, isolated)

        colouring = VceService.bipartite_partition(graph)
        if colouring is not None:
            logger.info('n=%d %s: grafo bipartito sin vértices aislados', n, family.value)
            return Certificate.exists(graph, colouring, SearchSource.BIPARTITE)

        outcome = SearchService.brute_force(graph, vertex_cap)  # Inconclusive por encima del límite.
        if outcome.status is SearchStatus.FOUND:
            return Certificate.exists(graph, outcome.partition, SearchSource.BRUTE_FORCE)
        if outcome.status is SearchStatus.NONE_EXISTS:
            logger.info('n=%d %s: búsqueda exhaustiva sin resultado', n, family.value)
            return Certificate.exhausted_search(graph, outcome.partitions_examined)

        # La búsqueda local solo puede confirmar existencia.
        local = SearchService.local_search(graph)
        if local.found:
            return Certificate.exists(graph, local.partition, SearchSource.LOCAL_SEARCH)
        logger.info('n=%d %s: sin conclusión', n, family.value)
        return Certificate.unknown(graph, f'{outcome.reason} {local.reason}')
