'''Structured results of axiom checks.

A CheckReport is an ordered list of AxiomResults.  Each result records the
axiom evaluated, whether it held and, when it did not, a witness: the basis
tuple of the domain on which the two sides first differ, together with both
evaluated sides at that tuple.
'''

__author__ = 'The homhopf developers'

from .linear import first_difference, format_scalar, multi_index


class AxiomResult(object):
    '''The outcome of one axiom.

    Attributes:
        axiom: The axiom identifier, for example 'hom-associativity' or 'M3'.
        passed: True if the axiom holds.
        group: An optional group name; groups can be disabled in a report.
        witness: None, or a tuple with one basis index per tensor factor of
            the domain.
        lhs: None, or the left-hand side evaluated on the witness as a tuple
            of Fractions.
        rhs: As lhs for the right-hand side.
    '''

    def __init__(self, axiom, passed, group=None, witness=None, lhs=None, rhs=None):
        self.axiom = axiom
        self.passed = passed
        self.group = group
        self.witness = witness
        self.lhs = lhs
        self.rhs = rhs

    def __eq__(self, rhs):
        if not isinstance(rhs, AxiomResult):
            return NotImplemented
        return self.__dict__ == rhs.__dict__

    def __ne__(self, rhs):
        result = self.__eq__(rhs)
        if result is NotImplemented:
            return result
        return not result

    def verdict(self):
        return 'PASS' if self.passed else 'FAIL'

    def __str__(self):
        text = '[' + self.verdict() + '] ' + self.axiom
        if self.group is not None:
            text += ' (' + self.group + ')'
        if self.witness is not None:
            text += ' witness=' + format_tuple(self.witness)
        if self.lhs is not None:
            text += ' lhs=' + format_tuple(self.lhs) + ' rhs=' + format_tuple(self.rhs)
        return text

    def __repr__(self):
        return ('AxiomResult(axiom=' + repr(self.axiom) + ', passed=' +
                repr(self.passed) + ', group=' + repr(self.group) +
                ', witness=' + repr(self.witness) + ')')


def format_tuple(values):
    return '(' + ','.join(format_scalar(value) for value in values) + ')'


class CheckReport(object):
    '''The results of checking a structure against its axioms.'''

    def __init__(self, subject, parameters=None):
        '''Initialise an empty report.

        Args:
            subject: A short description of what was checked.
            parameters: An optional mapping of degree parameter names to
                integers which influenced the check.
        '''
        self.subject = subject
        self.parameters = dict(parameters or {})
        self._results = []
        self._disabled = set()

    def compare(self, axiom, lhs, rhs, dims, group=None):
        '''Record an axiom stated as an equality of two linear maps.

        Args:
            axiom: The axiom identifier.
            lhs: The LinearMap of the left-hand side.
            rhs: The LinearMap of the right-hand side, of the same shape.
            dims: The dimensions of the tensor factors of the common domain,
                used to decode the witness.
            group: An optional group name.

        Returns:
            The AxiomResult recorded.

        Raises:
            DimensionMismatchError: If the two sides have different shapes.
        '''
        column = first_difference(lhs, rhs)
        if column is None:
            result = AxiomResult(axiom, True, group)
        else:
            result = AxiomResult(axiom, False, group,
                                 witness=multi_index(column, tuple(dims)),
                                 lhs=lhs.column(column), rhs=rhs.column(column))
        self._results.append(result)
        return result

    def record(self, axiom, passed, group=None, witness=None, lhs=None, rhs=None):
        '''Record an axiom whose verdict was determined elsewhere.'''
        result = AxiomResult(axiom, bool(passed), group, witness, lhs, rhs)
        self._results.append(result)
        return result

    def extend(self, other, prefix=None):
        '''Append the results of another report, optionally prefixing their ids.

        Groups disabled in the other report stay disabled here.
        '''
        for result in other:
            axiom = result.axiom if prefix is None else prefix + ':' + result.axiom
            self._results.append(AxiomResult(axiom, result.passed, result.group,
                                             result.witness, result.lhs, result.rhs))
        self._disabled.update(other.disabled_groups())
        return self

    def disable(self, group):
        '''Exclude a group of axioms from the overall verdict.'''
        self._disabled.add(group)
        return self

    def enable(self, group):
        self._disabled.discard(group)
        return self

    def disabled_groups(self):
        return frozenset(self._disabled)

    def is_enabled(self, result):
        return result.group is None or result.group not in self._disabled

    @property
    def passed(self):
        '''True if every enabled axiom passed.'''
        return all(result.passed for result in self._results if self.is_enabled(result))

    def failures(self):
        '''The enabled results which failed, in order.'''
        return [result for result in self._results
                if self.is_enabled(result) and not result.passed]

    def first_failure(self):
        failures = self.failures()
        return failures[0] if failures else None

    def axioms(self):
        return [result.axiom for result in self._results]

    def __getitem__(self, axiom):
        '''The result for an axiom id.

        Raises:
            KeyError: If no such axiom was recorded.
        '''
        for result in self._results:
            if result.axiom == axiom:
                return result
        raise KeyError(axiom)

    def __contains__(self, axiom):
        return any(result.axiom == axiom for result in self._results)

    def __iter__(self):
        return iter(self._results)

    def __len__(self):
        return len(self._results)

    def verdict(self):
        return 'PASS' if self.passed else 'FAIL'

    def log(self, logger=None, label=None):
        '''Log the results of this report to a logger.

        Args:
            logger: Any object which supports a debug() method which accepts a
                str, such as a Python standard library logger object from the
                logging module.  If logger is not provided or is None, this
                method has no logging side effects.

            label: An optional label which will be inserted into each line of
                logging output. Defaults to the subject.

        Returns:
            This report.
        '''
        if logger is None:
            return self

        if label is None:
            label = self.subject

        logger.debug(label + " : BEGIN")
        for index, result in enumerate(self._results):
            logger.debug(label + ' : [' + str(index) + '] ' + str(result))
        logger.debug(label + " : END " + self.verdict())
        return self

    def __str__(self):
        return ('CheckReport(' + self.subject + ': ' + self.verdict() + ', ' +
                str(len(self._results)) + ' axioms)')

    def __repr__(self):
        return 'CheckReport(' + repr(self.subject) + ', ' + repr(self._results) + ')'
