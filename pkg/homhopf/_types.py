'''
Predicate functions for testing arguments to determine their kind.
'''

__author__ = "The homhopf developers"


def is_integer(obj):
    '''Determine if an object is an integer, excluding booleans.

    Args:
        obj: The object to be tested.

    Returns:
        True if the object is an int but not a bool, otherwise False.
    '''
    return isinstance(obj, int) and not isinstance(obj, bool)


def is_string(obj):
    return isinstance(obj, str)


def is_linear_map(obj):
    '''Determine if an object is a LinearMap.'''
    # Avoid a circular module dependency
    from .linear import LinearMap
    return isinstance(obj, LinearMap)


def has_multiplication(obj):
    '''Determine if a structure carries a product and unit.'''
    return hasattr(obj, 'mult') and hasattr(obj, 'unit')


def has_comultiplication(obj):
    '''Determine if a structure carries a coproduct and counit.'''
    return hasattr(obj, 'comult') and hasattr(obj, 'counit')


def has_antipode(obj):
    return getattr(obj, 'antipode', None) is not None
