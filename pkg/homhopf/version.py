'''The homhopf version number.'''

__version__ = '1.0'
