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

from .exceptions import ValidationError
from functools import wraps

# func
def invalidateOnError( func ):

    """
    Decorator of isValid methods: an unexpected exception while checking
    (a missing value, a wrong type) counts as a failed check. A
    ValidationError raised inside is passed through.
    """

    # bool
    @wraps( func )
    def wrapper( self, element ):

        try:
            return func( self, element )

        except ValidationError:
            raise

        except Exception:
            return False

    return wrapper

class Validator( object ):

    """
    Precondition of a parameter or of a parameter set. Subclasses give the
    default message in the msg attribute and implement isValid; validate
    turns a failed check into a ValidationError and records the message in
    the element's state.
    """

    # Default error message if the validation fails
    msg = ''

    # void
    def __init__( self, msg = None ):

        """
        Precondition of a parameter or of a parameter set.

        @param msg: Error message, overrides the default one
        @type msg: str
        """

        self.msg = msg or self.msg

    # dict
    def getData( self, element ):
        return {}

    # str
    def getMessage( self, element ):

        """
        Interpolates the message. The validator's own attributes, the name,
        label and value of the element and getData() are available as
        %(key)s placeholders.

        @param element: Checked parameter or parameter set
        @type element: elements.Element

        @rtype: str
        """

        placeholders = { key : ( '-' if value is None else str( value ) ) \
            for key, value in self.__dict__.items() }
        placeholders.update({
            'name': element.getName(),
            'label': element.getLabel(),
            'value': str( element.getValue() )
        })
        placeholders.update( self.getData( element ) )

        return self.msg % placeholders

    # bool
    def isValid( self, element ):
        raise NotImplementedError( '%(cls)s.isValid( element ) is not implemented.' % {
            'cls': self.__class__.__name__ 
        } )

    # void
    def validate( self, element ):

        """
        Raises ValidationError when the check fails; the message is kept
        as the error of the element's state.

        @param element: Checked parameter or parameter set
        @type element: elements.Element
        """

        if self.isValid( element ):
            return

        element.getState().setError( self.getMessage( element ) )
        raise ValidationError( element.getState().getError() )

class ParameterSetValidator( Validator ):

    """
    Precondition between parameters of a set. The message is attached to
    the parameter named by position (to the set itself when it is None).
    """

    # void
    def __init__( self, position = None, parameter_names = None, msg = None ):

        """
        Precondition between parameters of a set.

        @param position: Parameter which receives the error message
        @type position: str

        @param parameter_names: Compared parameters, in the order of getValues
        @type parameter_names: list<str>

        @param msg: Error message
        @type msg: str
        """

        super( ParameterSetValidator, self ).__init__( msg )
        self.parameter_names = parameter_names or []
        self.position = position

    # list<type>
    def getValues( self, element ):
        return [ element.getParameter( name ).getValue() for name in self.parameter_names ]

    # dict
    def getData( self, element ):

        parameters = [ element.getParameter( name ) for name in self.parameter_names ]
        return {
            'labels': ', '.join([ p.getLabel() for p in parameters ]),
            'names': ', '.join( self.parameter_names ),
            'values': ', '.join([ p.format( p.getValue() ) for p in parameters ])
        }

    # void
    def validate( self, element ):

        """
        Checks the set. Unset parameters are left to their own Required
        validators, so the check is skipped when any value is missing.

        @param element: Checked parameter set
        @type element: paramsets.ParameterSet
        """

        if any([ value is None for value in self.getValues( element ) ]):
            return

        if self.isValid( element ):
            return

        target = element if self.position is None else element.getParameter( self.position )
        target.getState().setError( self.getMessage( element ) )
        raise ValidationError( target.getState().getError() )
