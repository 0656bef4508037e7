import logging
import time

import numpy as np

from app.config import Config
from app.models.bipartition import Bipartition
from app.models.searchOutcome import SearchOutcome, SearchStatus
from app.services.graph_service import GraphService
from app.services.vce_service import VceService
from app.utils.errors import DomainError

logger = logging.getLogger(__name__)


class SearchService:
    """Oráculo de existencia: enumeración exhaustiva, obstrucción por vértice aislado y búsqueda local."""

    @staticmethod
    def brute_force(g, vertex_cap=Config.DEFAULT_VERTEX_CAP, reduce_symmetry=True, strict=True):
        """
        Buscar por enumeración exhaustiva una bipartición muy costo efectiva.

        Con `reduce_symmetry` el vértice 0 queda fijo en R y se enumeran las
        2^(|V|-1) - 1 biparticiones no triviales; sin ella se enumeran las
        2^|V| - 2 asignaciones, cada bipartición dos veces. El orden es el de
        contar en binario con el bit menos significativo en el vértice de menor
        id libre, y se devuelve la primera que pasa.

        Args:
            g (LabeledGraph): El grafo.
            vertex_cap (int): Por encima de este número de vértices no se enumera.
            reduce_symmetry (bool): Romper la simetría R/B fijando el vértice 0.
            strict (bool): True para muy costo efectiva, False para costo efectiva.

        Returns:
            SearchOutcome: Found, NoneExists o Inconclusive.
        """
        started = time.perf_counter()
        order = g.order
        if order < 2:
            return SearchOutcome(SearchStatus.NONE_EXISTS, reason='Menos de dos vértices: no hay biparticiones.')
        if order > vertex_cap:
            return SearchOutcome(
                SearchStatus.INCONCLUSIVE,
                reason=f'{order} vértices superan el límite exhaustivo de {vertex_cap}.',
            )

        free = order - 1 if reduce_symmetry else order  # Vértices con lado libre.
        total = 1 << free
        shifts = np.arange(free, dtype=np.int64)
        adjacency = g.adjacency.astype(np.int32)
        degrees = g.degrees
        examined = 0

        # Se evalúa por bloques: una fila por asignación.
        for first in range(0, total, Config.BRUTE_FORCE_CHUNK):
            masks = np.arange(first, min(first + Config.BRUTE_FORCE_CHUNK, total), dtype=np.int64)
            bits = ((masks[:, None] >> shifts) & 1).astype(bool)
            # Con la simetría reducida el vértice 0 va siempre a R.
            in_b = np.hstack([np.zeros((len(masks), 1), dtype=bool), bits]) if reduce_symmetry else bits

            valid = in_b.any(axis=1) & ~in_b.all(axis=1)  # Ambos lados no vacíos.
            b_neighbors = in_b.astype(np.int32) @ adjacency  # Vecinos en B de cada vértice.
            inside = np.where(in_b, b_neighbors, degrees - b_neighbors)
            outside = degrees - inside
            passing = (inside < outside) if strict else (inside <= outside)
            hits = np.flatnonzero(passing.all(axis=1) & valid)

            if hits.size:
                hit = hits[0]  # La primera en el orden canónico.
                examined += int(valid[: hit + 1].sum())
                partition = Bipartition.from_mask(in_b[hit])
                elapsed = time.perf_counter() - started
                logger.info('Búsqueda exhaustiva: encontrada tras %d biparticiones (%.3fs)', examined, elapsed)
                return SearchOutcome(SearchStatus.FOUND, partition, partitions_examined=examined, elapsed=elapsed)
            examined += int(valid.sum())

        elapsed = time.perf_counter() - started
        logger.info('Búsqueda exhaustiva: ninguna entre %d biparticiones (%.3fs)', examined, elapsed)
        return SearchOutcome(SearchStatus.NONE_EXISTS, partitions_examined=examined, elapsed=elapsed)

    @staticmethod
    def isolated_obstruction(g):
        """
        El vértice aislado de menor id, si lo hay.

        Un vértice aislado tiene 0 vecinos en cada lado, así que ninguna
        bipartición es muy costo efectiva.

        Returns:
            int | None: Id del vértice o None.
        """
        isolated = GraphService.isolated_vertices(g)
        return isolated[0] if isolated else None

    @staticmethod
    def local_search(
        g,
        max_restarts=Config.LOCAL_SEARCH_RESTARTS,
        max_steps=Config.LOCAL_SEARCH_STEPS,
        rng_seed=Config.LOCAL_SEARCH_SEED,
    ):
        """
        Búsqueda local voraz desde biparticiones equilibradas al azar.

        En cada paso cambia de lado el vértice con mayor margen inside - outside
        (empate: menor id), sin dejar nunca un lado vacío. Nunca devuelve
        NoneExists y es determinista para una semilla dada.

        Returns:
            SearchOutcome: Found o Inconclusive.
        """
        order = g.order
        if order < 2:
            raise DomainError('La búsqueda local necesita al menos dos vértices.')

        started = time.perf_counter()
        rng = np.random.default_rng(rng_seed)
        floor = np.iinfo(np.int64).min
        examined = 0

        for restart in range(max_restarts):
            in_b = np.zeros(order, dtype=bool)
            in_b[rng.permutation(order)[: order // 2]] = True

            # El paso 0 evalúa el arranque aleatorio.
            for step in range(max_steps + 1):
                inside, outside = VceService.counts(g, in_b)
                examined += 1
                margin = (inside - outside).astype(np.int64)
                if (margin < 0).all():
                    elapsed = time.perf_counter() - started
                    logger.info('Búsqueda local: encontrada en el reinicio %d, paso %d', restart, step)
                    return SearchOutcome(
                        SearchStatus.FOUND,
                        Bipartition.from_mask(in_b),
                        partitions_examined=examined,
                        elapsed=elapsed,
                    )
                if step == max_steps:
                    break

                size_b = int(in_b.sum())
                # No se mueve un vértice que dejaría su lado vacío.
                movable = np.where(in_b, size_b > 1, order - size_b > 1)
                v = int(np.argmax(np.where(movable, margin, floor)))  # Empate: menor id.
                if not movable[v]:
                    break
                in_b[v] = not in_b[v]

        elapsed = time.perf_counter() - started
        return SearchOutcome(
            SearchStatus.INCONCLUSIVE,
            reason=f'Sin éxito tras {max_restarts} reinicios de {max_steps} pasos.',
            partitions_examined=examined,
            elapsed=elapsed,
        )
