from functools import wraps

from csecs.errors import UnsupportedOrder


def closed_form_orders(m, n):
    """
    Decorator to ensure a closed form is only evaluated for the operation
    orders (m, n) it was derived for. The wrapped function takes the
    parameter record as its first argument.
    """
    def wrapper(fn):
        @wraps(fn)
        def decorator(params, *args, **kwargs):
            if (params.m, params.n) != (m, n):
                raise UnsupportedOrder(
                    f'{fn.__name__} covers only m={m}, n={n}; use the oracle for '
                    f'm={params.m}, n={params.n}',
                    m=params.m, n=params.n
                )
            return fn(params, *args, **kwargs)
        return decorator
    return wrapper
