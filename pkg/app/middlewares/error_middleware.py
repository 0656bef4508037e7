from functools import wraps

from flask import current_app

from app.utils.errors import DomainError, EmptyGraphError


def domain_errors_as_http(func):
    """
    Middleware que convierte los errores de dominio en respuestas JSON.

    Un EmptyGraphError se devuelve con 422 y cualquier otro DomainError con
    400, siempre con el cuerpo {"message": ...}. Los errores internos no se
    capturan.

    Args:
        func: El método del recurso que se protege.

    Returns:
        La función decorada.
    """

    @wraps(func)  # Mantiene el nombre y la docstring original de la función decorada
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except EmptyGraphError as e:
            return {'message': str(e)}, 422
        except DomainError as e:
            current_app.logger.info('Petición rechazada: %s', e)
            return {'message': str(e)}, 400

    return wrapper
