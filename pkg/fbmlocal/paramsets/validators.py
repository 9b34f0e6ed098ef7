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

from ..validators import *

class Less( ParameterSetValidator ):

    """
    Checks the first parameter is strictly less than the second one.
    """

    # Default error message if the validation fails
    msg = '%(first)s must be strictly less than %(second)s (got %(values)s).'

    # void
    def __init__( self, position, parameter_name, other_parameter_name, msg = None ):

        """
        Checks the first parameter is strictly less than the second one.

        @param position: Parameter's name where the error message is shown
        @type position: str

        @param parameter_name: Smaller parameter
        @type parameter_name: str

        @param other_parameter_name: Larger parameter
        @type other_parameter_name: str

        @param msg: Error message if it fails
        @type msg: str
        """

        super( Less, self ).__init__( 
            position, 
            [ parameter_name, other_parameter_name ], 
            msg 
        )

        self.first = parameter_name
        self.second = other_parameter_name

    # bool
    @invalidateOnError
    def isValid( self, element ):
        first, second = self.getValues( element )
        return first < second

class Different( ParameterSetValidator ):

    """
    Check the difference between given parameters.
    """

    # Default error message if the validation fails
    msg = '%(labels)s values have to be different!'

    # bool
    @invalidateOnError
    def isValid( self, element ):
        return len( set( self.getValues( element ) ) ) == len( self.parameter_names )

class WindowsDisjoint( ParameterSetValidator ):

    """
    Checks the windows (t1 - eps, t1 + eps) and (t2 - eps, t2 + eps) are
    disjoint for the largest eps of the schedule.
    """

    # Default error message if the validation fails
    msg = 'windows must be disjoint: max eps must be below |t1 - t2| / 2 (got %(values)s).'

    # void
    def __init__( self, position = 'eps', t1 = 't1', t2 = 't2', eps = 'eps', msg = None ):
        super( WindowsDisjoint, self ).__init__( position, [ t1, t2, eps ], msg )

    # bool
    @invalidateOnError
    def isValid( self, element ):
        t1, t2, eps = self.getValues( element )
        eps = eps if isinstance( eps, ( list, tuple ) ) else [ eps ]
        return max( eps ) < abs( t1 - t2 ) / 2.0

class InsideInterval( ParameterSetValidator ):

    """
    Checks the windows (t - eps, t + eps) are nested strictly inside
    (t1, t2) for the largest eps of the schedule.
    """

    # Default error message if the validation fails
    msg = 'windows around t must lie strictly inside (t1, t2) (got %(values)s).'

    # void
    def __init__( self, position = 'eps', t1 = 't1', t = 't', t2 = 't2', eps = 'eps', \
                  msg = None ):
        super( InsideInterval, self ).__init__( position, [ t1, t, t2, eps ], msg )

    # bool
    @invalidateOnError
    def isValid( self, element ):
        t1, t, t2, eps = self.getValues( element )
        return t1 < t - max( eps ) and t + max( eps ) < t2

class PastCoversWindow( ParameterSetValidator ):

    """
    Checks the truncated past (-T, 0) is long compared with the window
    position and does not meet the windows (t - eps, t + eps).
    """

    # Default error message if the validation fails
    msg = 'T must be at least %(ratio)s * t and every window (t - eps, t + eps) must lie in (0, inf) (got %(values)s).'

    # void
    def __init__( self, position = 'T', t = 't', T = 'T', eps = 'eps', ratio = 16.0, \
                  msg = None ):
        super( PastCoversWindow, self ).__init__( position, [ t, T, eps ], msg )
        self.ratio = ratio

    # bool
    @invalidateOnError
    def isValid( self, element ):
        t, T, eps = self.getValues( element )
        return T >= self.ratio * t and t - max( eps ) > 0
