from charloci.examples import describe_examples


def examples_of_kind(*kinds):
    """ Return names of bundled examples of the given input kinds. """
    return [e['name'] for e in describe_examples() if e['kind'] in kinds]
