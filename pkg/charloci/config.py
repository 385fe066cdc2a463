import os


def _flag(value):
    if isinstance(value, str):
        return value.strip().lower() not in ('', '0', 'false', 'no', 'off')

    return bool(value)


class Config(object):
    """ Class to hold global configuration. """

    MONOMIAL_ORDERS = ('grevlex', 'lex')
    """ Monomial orders understood by :class:`charloci.algebra.ring.PolyRing`.

    .. note:: Its value should not be changed.
    """

    SUPPORT_CERTIFICATES = ('annihilator', 'fitting')
    """ Ideals that may certify the support of a cohomology module.

    .. note:: Its value should not be changed.
    """

    def __init__(self):
        self.THREADS = os.environ.get('CHARLOCI_THREADS', 0)
        self.MONOMIAL_ORDER = os.environ.get('CHARLOCI_ORDER', 'grevlex')
        self.MEMOIZE = os.environ.get('CHARLOCI_MEMOIZE', True)
        self.SUPPORT_CERTIFICATE = \
            os.environ.get('CHARLOCI_SUPPORT_CERTIFICATE', 'annihilator')
        self.ANNIHILATOR_DEGREE_BUDGET = \
            os.environ.get('CHARLOCI_ANNIHILATOR_DEGREE_BUDGET', 12)
        self.ISOMORPHISM_MINORS_BUDGET = \
            os.environ.get('CHARLOCI_ISOMORPHISM_MINORS_BUDGET', 20000)
        self.MAX_TORSION_ORDER = \
            os.environ.get('CHARLOCI_MAX_TORSION_ORDER', 12)

    @property
    def THREADS(self):
        """ Maximum number of worker threads used for independent
        computations. Default is 0, which means everything runs sequentially.

        This value can also be set using the environment variable
        `CHARLOCI_THREADS`.
        """
        return self._THREADS

    @THREADS.setter
    def THREADS(self, value):
        value = int(value)
        if value < 0:
            raise ValueError('THREADS must be 0 or larger, not '
                             '{0}.'.format(value))

        self._THREADS = value

    @property
    def MONOMIAL_ORDER(self):
        """ Monomial order for rings built without an explicit order. Default
        is 'grevlex'.

        This value can also be set using the environment variable
        `CHARLOCI_ORDER`.
        """
        return self._MONOMIAL_ORDER

    @MONOMIAL_ORDER.setter
    def MONOMIAL_ORDER(self, value):
        if value not in self.MONOMIAL_ORDERS:
            raise ValueError('Monomial order must be one of {0}, not '
                             '{1!r}.'.format(self.MONOMIAL_ORDERS, value))

        self._MONOMIAL_ORDER = value

    @property
    def MEMOIZE(self):
        """ Whether Gröbner bases are cached by content. Default is True.

        This value can also be set using the environment variable
        `CHARLOCI_MEMOIZE`.
        """
        return self._MEMOIZE

    @MEMOIZE.setter
    def MEMOIZE(self, value):
        self._MEMOIZE = _flag(value)

    @property
    def SUPPORT_CERTIFICATE(self):
        """ Ideal used to certify supports of cohomology modules, either
        'annihilator' (default) or 'fitting'.

        This value can also be set using the environment variable
        `CHARLOCI_SUPPORT_CERTIFICATE`.
        """
        return self._SUPPORT_CERTIFICATE

    @SUPPORT_CERTIFICATE.setter
    def SUPPORT_CERTIFICATE(self, value):
        if value not in self.SUPPORT_CERTIFICATES:
            raise ValueError('Support certificate must be one of {0}, not '
                             '{1!r}.'.format(self.SUPPORT_CERTIFICATES, value))

        self._SUPPORT_CERTIFICATE = value

    @property
    def ANNIHILATOR_DEGREE_BUDGET(self):
        """ Largest total degree of a presentation for which the annihilator
        is computed. Above it the 0-th Fitting ideal is used. Default is 12.
        """
        return self._ANNIHILATOR_DEGREE_BUDGET

    @ANNIHILATOR_DEGREE_BUDGET.setter
    def ANNIHILATOR_DEGREE_BUDGET(self, value):
        self._ANNIHILATOR_DEGREE_BUDGET = int(value)

    @property
    def ISOMORPHISM_MINORS_BUDGET(self):
        """ Maximum number of minors computed when two modules are compared
        by their Fitting ideals. Default is 20000.
        """
        return self._ISOMORPHISM_MINORS_BUDGET

    @ISOMORPHISM_MINORS_BUDGET.setter
    def ISOMORPHISM_MINORS_BUDGET(self, value):
        self._ISOMORPHISM_MINORS_BUDGET = int(value)

    @property
    def MAX_TORSION_ORDER(self):
        """ Largest order tried when deciding whether a character value is a
        root of unity. Default is 12.
        """
        return self._MAX_TORSION_ORDER

    @MAX_TORSION_ORDER.setter
    def MAX_TORSION_ORDER(self, value):
        value = int(value)
        if value < 1:
            raise ValueError('MAX_TORSION_ORDER must be at least 1.')

        self._MAX_TORSION_ORDER = value
