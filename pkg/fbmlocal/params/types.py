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

import re
from ..exceptions import TypeConversionError

class Type( object ):

    """
    Conversion of raw values (command line and config file strings) into
    the value of a parameter. Values already of one of the expected
    classes are only normalized by modify().
    """

    # Classes accepted without conversion
    _default_types = []

    # bool
    def isInherited( self, value ):
        return isinstance( value, tuple( self._default_types ) )

    # type
    def convert( self, value ):
        raise NotImplementedError( '%(cls)s.convert( value ) is not implemented!' % {
            'cls': self.__class__.__name__
        } )

    # type
    def modify( self, value ):
        return value

    # bool
    def isEmpty( self, value ):
        return value is None or str( value ).strip() == ''

    # type
    def getValue( self, value ):

        """
        Converts the value. Empty values become None.

        @param value: Raw value
        @type value: type

        @return: Converted value
        @rtype: type
        """

        if self.isEmpty( value ):
            return None

        if self.isInherited( value ):
            return self.modify( value )

        try:
            return self.modify( self.convert( value ) )

        except ( TypeError, ValueError, ArithmeticError ) as e:
            raise TypeConversionError( str( e ) )

class String( Type ):

    _default_types = [ str ]

    # str
    def convert( self, value ):
        return str( value )

    # str
    def modify( self, value ):
        return value.strip()

class Integer( Type ):

    """
    Integer; whole numbers written as floats ("1e5", "64.0") are accepted,
    booleans are not.
    """

    _default_types = [ int ]

    # bool
    def isInherited( self, value ):
        return isinstance( value, int ) and not isinstance( value, bool )

    # int
    def convert( self, value ):

        if isinstance( value, bool ):
            raise TypeError( 'boolean is not an integer' )

        try:
            return int( value )

        except ValueError:
            converted = float( value )
            if not converted.is_integer():
                raise ValueError( '{} is not an integer'.format( value ) )

            return int( converted )

class Float( Type ):

    """
    Real number; fractions like "1/4" are accepted.
    """

    _default_types = [ float ]

    # float
    def convert( self, value ):

        if isinstance( value, ( int, float ) ) and not isinstance( value, bool ):
            return float( value )

        text = str( value ).strip()
        if '/' in text:
            numerator, denominator = text.split( '/', 1 )
            return float( numerator ) / float( denominator )

        return float( text )

class Boolean( Type ):

    _default_types = [ bool ]

    # Accepted spellings
    true_values = ( 'yes', 'y', 'true', 't', '1', 'on' )
    false_values = ( 'no', 'n', 'false', 'f', '0', 'off', '' )

    # bool
    def isEmpty( self, value ):
        return value is None

    # bool
    def convert( self, value ):

        text = str( value ).strip().lower()
        if text in self.true_values:
            return True

        if text in self.false_values:
            return False

        raise TypeError( '{} is not a boolean'.format( value ) )

class FloatList( Type ):

    """
    Comma separated list of floats.
    """

    # List of expected types
    _default_types = [ list, tuple ]

    # list<float>
    def convert( self, value ):
        return [ Float().convert( item ) for item in re.split( r'[,\s]+', str( value ).strip() ) \
            if item ]

    # list<float>
    def modify( self, value ):
        return [ Float().convert( item ) for item in value ]

class Schedule( FloatList ):

    """
    Schedule of positive reals. It accepts a comma separated list or a
    geometric specification "a:b:factor" which runs from a towards b
    (inclusive) multiplying by factor (factor < 1) or dividing by factor
    (factor > 1).
    """

    # Upper bound of the generated schedule length
    max_length = 4096

    # list<float>
    def convert( self, value ):

        """
        Converts a comma list or a geometric specification into a list of
        floats.

        @param value: Raw value
        @type value: str

        @return: Schedule
        @rtype: list<float>
        """

        text = str( value ).strip()
        if ':' not in text:
            return super( Schedule, self ).convert( text )

        parts = text.split( ':' )
        if len( parts ) != 3:
            raise ValueError( 'geometric schedule must look like a:b:factor' )

        start, stop, factor = [ Float().convert( part ) for part in parts ]
        if start <= 0 or stop <= 0 or factor <= 0 or factor == 1:
            raise ValueError( 'geometric schedule needs positive a, b and a factor != 1' )

        if ( start > stop ) == ( factor > 1 ) and start != stop:
            factor = 1.0 / factor

        schedule = []
        current = start
        tolerance = 1e-9 * max( start, stop )
        while len( schedule ) < self.max_length:
            schedule.append( current )
            if abs( current - stop ) <= tolerance:
                break

            current = current * factor
            if ( factor < 1 and current < stop - tolerance ) or \
               ( factor > 1 and current > stop + tolerance ):
                break

        return schedule
