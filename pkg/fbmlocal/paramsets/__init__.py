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
from . import validators

class ParameterSet( elements.Element, elements.ElementCollector ):

    """
    Group of parameters of one command. The parameters are declared in
    class level; cross-parameter preconditions are given as validators.
    """

    # void
    def __init__( self, name = None, label = None, help = None, error = None, \
                  validators = None ):

        """
        Group of parameters of one command.

        @param name: Name of the set (the command)
        @type name: str

        @param label: Label of the set
        @type label: str

        @param help: One line description of the command
        @type help: str

        @param error: Current error message
        @type error: str

        @param validators: List of ParameterSetValidator objects
        @type validators: list<validators.ParameterSetValidator>
        """

        super( ParameterSet, self ).__init__( 
            name = name, 
            label = label,
            help = help,
            required = False,
            error = error,
            validators = validators,
        )

    # ParameterSet
    def clone( self ):

        """
        Clone the set with every parameter. RunConfig works on a clone, so
        the class level schema is never modified.

        @return: Cloned parameter set
        @rtype: paramsets.ParameterSet
        """

        clone_dict = dict( self._init )
        clone_dict['name'] = self.getName()

        init_args = set( inspect.signature( self.__class__.__init__ ).parameters )
        init_args.discard( 'self' )

        ps = self.__class__(
            **{ k:v for k,v in clone_dict.items() if k in init_args }
        )

        ps._elements = []
        for element in self.getElements():
            clone = element.clone()
            ps._elements.append( clone )
            setattr( ps, clone.getName(), clone )

        return ps

    # params.Parameter
    def getParameter( self, name ):
        return getattr( self, name )

    # dict
    def getValue( self ):

        """
        Returns the values of the parameters.

        @return: name -> value
        @rtype: dict
        """

        return { element.getName() : element.getValue() for element in self.getElements() }

    # void
    def setValue( self, value_dict ):

        """
        Set the values of the parameters which are present in the given
        dictionary. Missing keys keep their defaults.

        @param value_dict: name -> raw value
        @type value_dict: dict
        """

        for element in self.getElements():
            if element.getName() in ( value_dict or {} ):
                element.setValue( value_dict[ element.getName() ] )

    value = property( getValue, setValue )

    # void
    def validate( self ):

        """
        Validate every parameter, then the set's validators. All the error
        messages are collected.
        """

        errors = []
        for element in self.getElements():
            success, error = element.isValid()
            errors += error

        if len( errors ) == 0:
            for validator in self.getValidators():
                try:
                    validator.validate( self )

                except exceptions.ValidationError as e:
                    errors += [( validator.position or self.getName(), e.msg )]

        if len( errors ) != 0:
            raise exceptions.ValidationCollectionError( errors )

    # tuple<bool,list>
    def isValid( self ):

        """
        Validate the set.

        @return: Validity and the list of (name, message) errors
        @rtype: tuple<bool,list<tuple<str,str>>>
        """

        try:
            self.validate()
            return True, []

        except exceptions.ValidationCollectionError as e:
            return False, e.errors

        except exceptions.ValidationError as e:
            return False, [ ( self.getName(), e.msg ) ]

    # void
    def addArguments( self, parser ):

        """
        Register every parameter on an argparse parser.

        @param parser: Argument parser
        @type parser: argparse.ArgumentParser
        """

        for element in self.getElements():
            element.addArgument( parser )
