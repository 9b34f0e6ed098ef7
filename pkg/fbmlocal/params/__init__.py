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

import inspect
from .. import exceptions, elements
from . import validators, types
from .validators import Choice

class Parameter( elements.Element ):

    """
    Parameter of an experiment. It converts raw values (command line
    strings, config file values) with its Type and checks them with its
    validators.
    """

    # Default type of the parameter
    _default_type = None

    # void
    def __init__( self, name = None, value = None, label = None, help = None, \
                  required = False, error = None, type = None, validators = None, \
                  flag = None, metavar = None ):

        """
        Parameter of an experiment.

        @param name: Parameter's name
        @type name: str

        @param value: Default value
        @type value: type

        @param label: Label used in error messages
        @type label: str

        @param help: One line description shown by the command line help
        @type help: str

        @param required: Require to set the parameter?
        @type required: bool

        @param error: Current error message
        @type error: str

        @param type: Type object of the parameter
        @type type: params.types.Type

        @param validators: List of validator objects
        @type validators: list<validators.Validator>

        @param flag: Command line flag, defaults to --<name>
        @type flag: str

        @param metavar: Command line metavar
        @type metavar: str
        """

        self._type = type or self._default_type()
        self._flag = flag
        self._metavar = metavar
        self._value = None
        self._conversion_error = None

        super( Parameter, self ).__init__( 
            name = name, 
            label = label,
            help = help,
            required = required,
            error = error,
            validators = validators,
        )

        self._init.update( dict(
            type = type,
            flag = flag,
            metavar = metavar
        ) )

        self.setValue( value )

    # Parameter
    def clone( self ):

        """
        Clone the parameter with its current value and state.

        @return: Cloned parameter
        @rtype: params.Parameter
        """

        clone_dict = dict( self._init )
        clone_dict['required'] = self.getState().isRequired()
        clone_dict['value'] = self.getValue()
        clone_dict['name'] = self.getName()

        init_args = set( inspect.signature( self.__class__.__init__ ).parameters )
        init_args.discard( 'self' )

        return self.__class__(
            **{ k:v for k,v in clone_dict.items() if k in init_args }
        )

    # void
    def validate( self ):

        """
        Validate the parameter. Required parameters have to be set, unset
        optional parameters are not checked.
        """

        if self._conversion_error is not None:
            self.getState().setError( self._conversion_error )
            raise exceptions.ValidationError( self._conversion_error )

        if self.getState().isRequired():
            validators.Required().validate( self )

        if self.getValue() is None:
            return

        for validator in self.getValidators():
            validator.validate( self )

    # tuple<bool,list>
    def isValid( self ):

        """
        Validate the parameter.

        @return: Validity and the list of (name, message) errors
        @rtype: tuple<bool,list<tuple<str,str>>>
        """

        try:
            self.validate()
            return True, []

        except exceptions.ValidationError as e:
            return False, [( self.getName(), e.msg )]

    # type
    def getValue( self ):
        return self._value

    # void
    def setValue( self, value ):

        """
        Convert and set the value. A failed conversion is stored as a
        validation error of the parameter and the value is left unset.

        @param value: Raw value
        @type value: type
        """

        try:
            self._value = self.getTypeValue( value )
            self._conversion_error = None

        except exceptions.TypeConversionError as e:
            self._value = None
            self._conversion_error = '{} got an invalid value {!r}: {}'.format( self.getLabel(), value, e )

    # void
    def delValue( self ):
        self.setValue( None )

    value = property( getValue, setValue, delValue )

    # type
    def getTypeValue( self, value ):
        return self._type.getValue( value )

    # str
    def getFlag( self ):

        """
        Returns the command line flag of the parameter.

        @return: Command line flag
        @rtype: str
        """

        return self._flag or '--{}'.format( self.getName().replace( '_', '-' ) )

    # void
    def addArgument( self, parser ):

        """
        Register the parameter on an argparse parser. The argparse default
        is None so an omitted flag never overrides the config file.

        @param parser: Argument parser
        @type parser: argparse.ArgumentParser
        """

        default = self.getValue()
        parser.add_argument( 
            self.getFlag(), 
            dest = self.getName(), 
            default = None,
            metavar = self._metavar or self.getName().upper(),
            help = '{} (default: {})'.format( self.getHelp() or self.getLabel(), 
                self.format( default ) ).replace( '%', '%%' )
        )

    # str
    def format( self, value ):

        """
        Format a value for help texts and file headers.

        @param value: Value
        @type value: type

        @return: Formatted value
        @rtype: str
        """

        if value is None:
            return '-'

        if isinstance( value, ( list, tuple ) ):
            return ','.join([ self.format( v ) for v in value ])

        if isinstance( value, float ):
            return repr( value )

        return str( value )

class Text( Parameter ):
    _default_type = types.String

class Count( Parameter ):
    _default_type = types.Integer

class Real( Parameter ):
    _default_type = types.Float

class HurstIndex( Parameter ):

    """
    Hurst index parameter, a real in the open interval (0, 1).
    """

    _default_type = types.Float
    _default_validators = [ validators.Hurst() ]

class Select( Parameter ):

    """
    Parameter with a fixed list of options.
    """

    _default_type = types.String

    # void
    def __init__( self, options, name = None, value = None, label = None, help = None, \
                  required = False, error = None, type = None, validators = None, \
                  flag = None, metavar = None ):

        """
        Parameter with a fixed list of options.

        @param options: Allowed values
        @type options: list<type>
        """

        self._options = list( options )
        super( Select, self ).__init__( 
            name = name, 
            value = value, 
            label = label, 
            help = help,
            required = required, 
            error = error,
            type = type,
            validators = validators,
            flag = flag,
            metavar = metavar
        )

        self._init.update( dict( options = options ) )
        self._validators.insert( 0, Choice( self._options ) )

    # list<type>
    def getOptions( self ):
        return self._options

class Switch( Parameter ):

    """
    Boolean command line switch without argument.
    """

    _default_type = types.Boolean

    # void
    def addArgument( self, parser ):
        parser.add_argument( 
            self.getFlag(), 
            dest = self.getName(), 
            default = None,
            action = 'store_const',
            const = True,
            help = self.getHelp() or self.getLabel()
        )

class RealList( Parameter ):
    _default_type = types.FloatList

class Schedule( Parameter ):

    """
    Schedule parameter, a comma list or a geometric "a:b:factor" spec.
    """

    _default_type = types.Schedule

class CountSchedule( Schedule ):

    """
    Schedule of integers (grid sizes).
    """

    # list<int>
    def getTypeValue( self, value ):
        schedule = super( CountSchedule, self ).getTypeValue( value )
        if schedule is None:
            return None

        if any([ abs( v - round( v ) ) > 1e-6 for v in schedule ]):
            raise exceptions.TypeConversionError( 'schedule entries must be integers' )

        return [ int( round( v ) ) for v in schedule ]
