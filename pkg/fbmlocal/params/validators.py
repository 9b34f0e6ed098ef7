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

import numpy as np
from ..validators import *

class Required( Validator ):

    """
    The parameter has to be set; an empty list counts as unset.
    """

    # Default error message if the validation fails
    msg = '%(label)s is required.'

    # bool
    @invalidateOnError
    def isValid( self, element ):
        value = element.getValue()
        if isinstance( value, ( tuple, list, set ) ):
            return bool( value )

        return value is not None

class Compare( Validator ):

    """
    Base of the checks against a boundary. List values (schedules,
    points) are checked item by item.
    """

    # void
    def __init__( self, boundary, msg = None ):

        """
        Base of the checks against a boundary.

        @param boundary: The boundary value
        @type boundary: type

        @param msg: Error message
        @type msg: str
        """

        super( Compare, self ).__init__( msg )
        self.boundary = boundary

    # list<type>
    def getComparableValues( self, element ):
        value = element.getValue()
        return list( value ) if isinstance( value, ( tuple, list ) ) else [ value ]

class Greater( Compare ):

    """
    Every value is greater than or equal to the boundary.
    """

    # Default error message if the validation fails
    msg = '%(label)s must be greater than or equal to %(boundary)s.'

    # bool
    @invalidateOnError
    def isValid( self, element ):
        return all([ v >= self.boundary for v in self.getComparableValues( element ) ])

class Positive( Compare ):

    """
    Every value is finite and strictly positive.
    """

    # Default error message if the validation fails
    msg = '%(label)s must be strictly positive.'

    # void
    def __init__( self, msg = None ):
        super( Positive, self ).__init__( 0, msg )

    # bool
    @invalidateOnError
    def isValid( self, element ):
        return all([ v > 0 and np.isfinite( v ) for v in self.getComparableValues( element ) ])

class OpenRange( Compare ):

    """
    Every value lies strictly inside (low, high), at least guard away from
    both ends.
    """

    # Default error message if the validation fails
    msg = '%(label)s must lie in the open interval (%(low)s, %(high)s).'

    # void
    def __init__( self, low, high, guard = 0.0, msg = None ):

        """
        Every value lies strictly inside (low, high).

        @param low: Lower end
        @type low: float

        @param high: Upper end
        @type high: float

        @param guard: Distance kept from both ends
        @type guard: float

        @param msg: Error message
        @type msg: str
        """

        super( OpenRange, self ).__init__( ( low, high ), msg )
        self.low = low
        self.high = high
        self.guard = guard

    # bool
    @invalidateOnError
    def isValid( self, element ):
        return all([ self.low + self.guard < v < self.high - self.guard \
            for v in self.getComparableValues( element ) ])

class Hurst( OpenRange ):

    """
    Hurst index: (0, 1) with a 1e-9 guard band, so the kernels never see
    the degenerate ends.
    """

    # Default error message if the validation fails
    msg = '%(label)s must lie in the open interval (0, 1).'

    # void
    def __init__( self, msg = None ):
        super( Hurst, self ).__init__( 0.0, 1.0, 1e-9, msg )

class Length( Validator ):

    """
    Number of values of a list parameter.
    """

    # Default error messages if the validation fails
    min_msg = '%(label)s needs at least %(min_length)s values.'
    max_msg = '%(label)s takes at most %(max_length)s values.'

    # void
    def __init__( self, min_length = None, max_length = None, min_msg = None, \
                  max_msg = None ):

        """
        Number of values of a list parameter.

        @param min_length: Minimal length
        @type min_length: int

        @param max_length: Maximal length
        @type max_length: int
        """

        super( Length, self ).__init__()
        self.min_length = min_length
        self.max_length = max_length
        self.min_msg = min_msg or self.min_msg
        self.max_msg = max_msg or self.max_msg

    # bool
    def isValid( self, element ):

        length = len( element.getValue() )
        if self.min_length is not None and length < self.min_length:
            self.msg = self.min_msg
            return False

        if self.max_length is not None and length > self.max_length:
            self.msg = self.max_msg
            return False

        return True

class Choice( Validator ):

    # Default error message if the validation fails
    msg = '%(label)s must be one of: %(choices)s.'

    # void
    def __init__( self, options, msg = None ):
        super( Choice, self ).__init__( msg )
        self.options = list( options )

    # dict
    def getData( self, element ):
        return { 'choices': ', '.join([ str( o ) for o in self.options ]) }

    # bool
    @invalidateOnError
    def isValid( self, element ):
        value = element.getValue()
        if isinstance( value, ( tuple, list ) ):
            return all([ v in self.options for v in value ])

        return value in self.options

class StrictlyDecreasing( Validator ):

    # Default error message if the validation fails
    msg = '%(label)s must be strictly decreasing.'

    # bool
    @invalidateOnError
    def isValid( self, element ):
        value = element.getValue()
        return all([ a > b for a, b in zip( value[:-1], value[1:] ) ])

class StrictlyIncreasing( Validator ):

    # Default error message if the validation fails
    msg = '%(label)s must be strictly increasing.'

    # bool
    @invalidateOnError
    def isValid( self, element ):
        value = element.getValue()
        return all([ a < b for a, b in zip( value[:-1], value[1:] ) ])
