class Map:
    def __init__(self):
        self._rules = []

    def add_rule(self, endpoint, suites, kinds):
        self._rules.append(SuiteRule(endpoint, suites, kinds))

    def match(self, suite, kind):
        return [rule.endpoint for rule in self._rules
                if rule.match(suite, kind)]

    def suites(self):
        """ Return sorted names of all suites that have a rule. """
        names = set()
        for rule in self._rules:
            names.update(rule.suites or [])
        return sorted(names)


class SuiteRule:
    def __init__(self, endpoint, suites, kinds):
        self.endpoint = endpoint
        self.suites = suites
        self.kinds = kinds

    def match(self, suite, kind):
        # A constraint of None matches any value
        matches = lambda values, v: values is None or v in values
        return matches(self.suites, suite) and matches(self.kinds, kind)
