# -*- coding: utf-8 -*-

"""
fbmlocal is a numerical toolkit for local independence of fractional
Brownian motion.
Copyright (C) 2014, the fbmlocal developers

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program. If not, <see http://www.gnu.org/licenses/>.
"""

class TypeConversionError( Exception ):

    """
    Raised when a Parameter's setValue() function fails because a raw
    value can not be converted into the expected type.
    """

    pass

class ValidationError( ValueError ):

    """
    Raised when some precondition fails. The exception will contain
    the message of the error.
    """

    # void
    def __init__( self, msg ):

        """
        Raised when some precondition fails. The exception will 
        contain the message of the error.

        @param msg: Error message.
        @type msg: str
        """

        super( ValidationError, self ).__init__( msg )
        self.msg = msg

class ValidationCollectionError( ValueError ):

    """
    Raised when some ParameterSet validation condition fails. The exception
    will contain all child's error message as well.
    """

    # void
    def __init__( self, errors ):

        """
        Raised when some ParameterSet validation condition fails. The
        exception will contain all child's error message as well.

        @param errors: Collected error messages.
        @type errors: list<tuple<str,str>>
        """

        super( ValidationCollectionError, self ).__init__( 
            '; '.join([ '%s: %s' % ( name, msg ) for name, msg in errors ])
        )
        self.errors = errors

class DimensionMismatchError( ValueError ):

    """
    Raised when points of different dimension meet in one computation.
    """

    pass

class NumericalError( ArithmeticError ):

    """
    Base class of the numerical failures.
    """

    pass

class DegenerateSubspaceError( NumericalError ):

    """
    Raised when a Gram matrix has effective rank 0 or a joint covariance
    is not positive definite.
    """

    pass

class TailNotConvergedError( NumericalError ):

    """
    Raised when the analytic bound of a frequency tail stays above the
    requested fraction of the head at the largest allowed cutoff.
    """

    pass

class SamplingError( NumericalError ):

    """
    Raised when neither the circulant embedding nor the dense factor can
    produce samples.
    """

    pass

class FitError( NumericalError ):

    """
    Raised when a table can not be fitted (too few rows, infinite or
    skipped rows inside the fit window).
    """

    pass

class NumericalQualityWarning( UserWarning ):

    """
    Base class of the quality warnings.
    """

    pass

class IllConditionedWarning( NumericalQualityWarning ):

    """
    Emitted when a whitening factor is ill-conditioned or canonical
    correlations leave [0, 1] by more than round-off.
    """

    pass

class TruncationWarning( NumericalQualityWarning ):

    """
    Emitted when doubling a truncation parameter moves a result beyond its
    tolerance.
    """

    pass
