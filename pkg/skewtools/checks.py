from functools import wraps

from .exceptions import (
    CertificateFailed,
    MismatchedContext,
    NotDeskScale,
    PreconditionViolated,
)


# https://stackoverflow.com/questions/10610824/
# python-shortcut-for-writing-decorators-which-accept-arguments
def dec_args_kwargs(wrapper):
    return lambda *dec_args, **dec_kwargs: lambda func: wrapper(
        func, *dec_args, **dec_kwargs
    )


def _located(args, kwargs, locs):
    """Yields the arguments named by ``locs`` (positions or keyword names) that were
    actually passed."""
    if not isinstance(locs, list):
        locs = [locs]
    for loc in locs:
        if isinstance(loc, int) and loc < len(args):
            yield args[loc]
        elif isinstance(loc, str) and loc in kwargs:
            yield kwargs[loc]


def is_desk_scale(size, cap):
    """
    Checks that a brute-force search over ``size`` objects stays under ``cap``.

    Args:
        size (int): Number of objects the search would visit.
        cap (int): Largest admissible number.
    """
    if size > cap:
        raise NotDeskScale(
            f'The search would visit {size} objects; the limit is {cap}.'
        )
    return True


def certify(condition, message):
    """Raises ``CertificateFailed`` with ``message`` unless ``condition`` holds."""
    if not condition:
        raise CertificateFailed(message)
    return True


@dec_args_kwargs
def is_skew_poly(func, *dec_args):
    """
    Decorate a function to ensure the arguments at the given locations are skew
    polynomials.
    """

    @wraps(func)
    def wrapper(*args, **kwargs):
        from .skew_poly import SkewPoly

        for f in _located(args, kwargs, dec_args[0]):
            if not isinstance(f, SkewPoly):
                raise TypeError(
                    f'Expected a SkewPoly, got an object of type {type(f)}.'
                )
        return func(*args, **kwargs)

    return wrapper


@dec_args_kwargs
def same_context(func, *dec_args):
    """
    Decorate a function to ensure all skew polynomials at the given locations share
    one coefficient ring and automorphism.
    """

    @wraps(func)
    def wrapper(*args, **kwargs):
        polys = list(_located(args, kwargs, dec_args[0]))
        for f in polys[1:]:
            if f.ctx != polys[0].ctx:
                raise MismatchedContext(
                    f'Polynomials live in different skew rings: {polys[0].ctx!r} '
                    f'and {f.ctx!r}.'
                )
        return func(*args, **kwargs)

    return wrapper


@dec_args_kwargs
def is_field_context(func, *dec_args):
    """
    Decorate a function to ensure the skew polynomials at the given locations have
    field coefficients (k = 1).
    """

    @wraps(func)
    def wrapper(*args, **kwargs):
        for f in _located(args, kwargs, dec_args[0]):
            if f.ctx.ring.k != 1:
                raise PreconditionViolated(
                    f'{func.__name__} needs field coefficients; the ring has '
                    f'k = {f.ctx.ring.k}.'
                )
        return func(*args, **kwargs)

    return wrapper
