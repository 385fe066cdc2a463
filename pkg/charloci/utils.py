import sys
import logging
import threading
from fractions import Fraction
from logging import StreamHandler, Formatter
from functools import wraps
from concurrent.futures import Future, ThreadPoolExecutor

from charloci import conf, log


def log_to_stream(stream=None, level=logging.NOTSET,
                  fmt=logging.BASIC_FORMAT):
    """ Add :class:`logging.StreamHandler` to logger which logs to a stream.

    :param stream: Stream to log to, default STDERR at time of the call.
    :param level: Log level, default NOTSET.
    :param fmt: String with log format, default is BASIC_FORMAT.
    """
    if stream is None:
        stream = sys.stderr

    fmt = Formatter(fmt)
    handler = StreamHandler(stream)
    handler.setFormatter(fmt)
    handler.setLevel(level)

    log.addHandler(handler)
    if level:
        log.setLevel(level)


def memoize(f):
    """ Decorator which caches function's return value each it is called.
    If called later with same arguments, the cached value is returned.

    Arguments must be hashable and are compared by content. The cache is
    guarded by a lock, so decorated functions can be called from several
    threads. Concurrent callers with the same arguments wait for the first
    one instead of repeating the computation. Caching is skipped when
    :attr:`Config.MEMOIZE` is off.
    """
    cache = {}
    lock = threading.Lock()

    @wraps(f)
    def inner(*args):
        if not conf.MEMOIZE:
            return f(*args)

        with lock:
            future = cache.get(args)
            owner = future is None
            if owner:
                future = cache[args] = Future()

        if owner:
            try:
                future.set_result(f(*args))
            except BaseException as e:
                with lock:
                    cache.pop(args, None)
                future.set_exception(e)
                raise
        return future.result()

    inner.cache_clear = cache.clear
    return inner


def parallel_map(fn, items):
    """ Apply function to every item and return list with results, in order
    of the items.

    Work is spread over at most :attr:`Config.THREADS` threads; with 0
    threads everything runs in the calling thread.

    :param fn: Callable taking one argument.
    :param items: Iterable with arguments.
    :return: List with results.
    """
    items = list(items)
    if conf.THREADS < 1 or len(items) < 2:
        return [fn(item) for item in items]

    with ThreadPoolExecutor(max_workers=conf.THREADS) as pool:
        return list(pool.map(fn, items))


def to_fraction(value):
    """ Convert int, Fraction or string like '3/4' to :class:`Fraction`.

        >>> to_fraction('-3/4')
        Fraction(-3, 4)

    :param value: Value to convert.
    :return: Fraction.
    :raises ValueError: When value is not a rational number.
    """
    if isinstance(value, Fraction):
        return value

    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError('{0!r} is not an exact rational.'.format(value))

    if isinstance(value, str):
        value = value.strip()
        if not value or '.' in value or 'e' in value.lower():
            raise ValueError('{0!r} is not a rational p/q.'.format(value))

    return Fraction(value)


def format_fraction(value):
    """ Return string representation of a rational, 'p' or 'p/q'. """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)

    return '{0}/{1}'.format(value.numerator, value.denominator)
