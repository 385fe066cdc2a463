from logging import getLogger, NullHandler

log = getLogger('charloci')
log.addHandler(NullHandler())

from .config import Config  # NOQA
conf = Config()
